use crate::error::{Error, Result};
use crate::scalar::{binomial_rows, Scalar};

use super::{Series, Tag};

/// Two-sort labeled counts `c[i][j] = |F[i,j]|` on the triangle `i + j <= N`.
///
/// `i` counts elements of sort `X` (internal nodes), `j` elements of sort
/// `Y` (leaves). Row `i` stores `j = 0..=N-i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table<T> {
    label: String,
    tag: Tag,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> Table<T> {
    /// Builds the table entry by entry.
    pub fn from_fn(label: impl Into<String>, tag: Tag, truncation: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = (0..=truncation).map(|i| (0..=truncation - i).map(|j| f(i, j)).collect()).collect();
        Table { label: label.into(), tag, rows }
    }

    /// `rows[i]` must have length `N - i + 1`.
    pub fn from_rows(label: impl Into<String>, tag: Tag, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len().checked_sub(1).ok_or_else(|| Error::Structure("empty table".into()))?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i + 1 {
                return Err(Error::Structure(format!("row {i} has length {}, expected {}", row.len(), n - i + 1)));
            }
        }
        Ok(Table { label: label.into(), tag, rows })
    }

    pub fn zero(truncation: usize) -> Self {
        Self::from_fn("0", Tag::Concrete, truncation, |_, _| T::zero())
    }

    pub fn x(truncation: usize) -> Self {
        Self::from_fn("X", Tag::Concrete, truncation, |i, j| if (i, j) == (1, 0) { T::one() } else { T::zero() })
    }

    pub fn y(truncation: usize) -> Self {
        Self::from_fn("Y", Tag::Concrete, truncation, |i, j| if (i, j) == (0, 1) { T::one() } else { T::zero() })
    }

    /// A unisort species read as a species of sort `X` only.
    pub fn from_series_x(series: &Series<T>) -> Self {
        Self::from_fn(series.label(), series.tag(), series.truncation(), |i, j| {
            if j == 0 { series.coeff(i) } else { T::zero() }
        })
    }

    /// A unisort species read as a species of sort `Y` only.
    pub fn from_series_y(series: &Series<T>) -> Self {
        Self::from_fn(series.label(), series.tag(), series.truncation(), |i, j| {
            if i == 0 { series.coeff(j) } else { T::zero() }
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    pub fn is_virtual(&self) -> bool {
        self.tag == Tag::Virtual
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    pub fn truncation(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Panics outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    /// Zero outside the triangle.
    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.rows.get(i).and_then(|row| row.get(j)).cloned().unwrap_or_else(T::zero)
    }

    /// `(i, j, c[i][j])` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|(_, _, c)| !c.is_negative())
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let n = truncation.min(self.truncation());
        Self::from_fn(self.label.clone(), self.tag, n, |i, j| self.rows[i][j].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Table<U> {
        Table { label: self.label.clone(), tag: self.tag, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::Shape { left: self.truncation(), right: other.truncation() });
        }
        Ok(())
    }

    fn joined_tag(&self, other: &Self) -> Tag {
        if self.is_virtual() || other.is_virtual() { Tag::Virtual } else { Tag::Concrete }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Self::from_fn(format!("{}+{}", self.label, other.label), self.joined_tag(other), self.truncation(), |i, j| {
            self.rows[i][j].clone() + other.rows[i][j].clone()
        }))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Self::from_fn(format!("{}-{}", self.label, other.label), Tag::Virtual, self.truncation(), |i, j| {
            self.rows[i][j].clone() - other.rows[i][j].clone()
        }))
    }

    /// `c[i][j] = sum C(i,p) C(j,q) a[p][q] b[i-p][j-q]`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let n = self.truncation();
        let binom = binomial_rows::<T>(n);
        Ok(Self::from_fn(format!("{}*{}", self.label, other.label), self.joined_tag(other), n, |i, j| {
            let mut acc = T::zero();
            for p in 0..=i {
                for q in 0..=j {
                    let a = &self.rows[p][q];
                    let b = &other.rows[i - p][j - q];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + binom[i][p].clone() * binom[j][q].clone() * a.clone() * b.clone();
                }
            }
            acc
        }))
    }

    /// `c[i][j] = a[i+1][j]`; truncation drops by one.
    pub fn partial_x(&self) -> Result<Self> {
        let n = self.truncation().checked_sub(1).ok_or(Error::EmptyResult)?;
        Ok(Self::from_fn(format!("dX({})", self.label), self.tag, n, |i, j| self.rows[i + 1][j].clone()))
    }

    /// `c[i][j] = a[i][j+1]`; truncation drops by one.
    pub fn partial_y(&self) -> Result<Self> {
        let n = self.truncation().checked_sub(1).ok_or(Error::EmptyResult)?;
        Ok(Self::from_fn(format!("dY({})", self.label), self.tag, n, |i, j| self.rows[i][j + 1].clone()))
    }

    /// `c[i][j] = i a[i][j]`.
    pub fn pointing_x(&self) -> Self {
        Self::from_fn(format!("ptX({})", self.label), self.tag, self.truncation(), |i, j| T::from_count(i) * self.rows[i][j].clone())
    }

    /// `c[i][j] = j a[i][j]`.
    pub fn pointing_y(&self) -> Self {
        Self::from_fn(format!("ptY({})", self.label), self.tag, self.truncation(), |i, j| T::from_count(j) * self.rows[i][j].clone())
    }

    /// `X * F`: `c[i][j] = i a[i-1][j]`.
    pub fn times_x(&self) -> Self {
        Self::from_fn(format!("X*{}", self.label), self.tag, self.truncation(), |i, j| {
            if i == 0 { T::zero() } else { T::from_count(i) * self.rows[i - 1][j].clone() }
        })
    }

    /// Keeps the entries with `i + j = n`.
    pub fn restrict_size(&self, n: usize) -> Self {
        Self::from_fn(format!("{}_{}", self.label, n), self.tag, self.truncation(), |i, j| {
            if i + j == n { self.rows[i][j].clone() } else { T::zero() }
        })
    }

    /// `F(X, X)`: `c[n] = sum_{i+j=n} C(n,i) a[i][j]`.
    pub fn diag(&self) -> Series<T> {
        let n = self.truncation();
        let binom = binomial_rows::<T>(n);
        let coeffs = (0..=n)
            .map(|m| (0..=m).fold(T::zero(), |acc, i| acc + binom[m][i].clone() * self.rows[i][m - i].clone()))
            .collect();
        Series::new(format!("diag({})", self.label), self.tag, coeffs)
    }

    /// The ordinal-sum aggregate: `c[n] = sum_{i+j=n} a[i][j]`.
    pub fn hat(&self) -> Series<T> {
        let n = self.truncation();
        let coeffs = (0..=n).map(|m| (0..=m).fold(T::zero(), |acc, i| acc + self.rows[i][m - i].clone())).collect();
        Series::new(format!("hat({})", self.label), self.tag, coeffs)
    }
}

/// Two-sort counts of `F(G)` for unisort `F` and two-sort `G` with `G[0][0] = 0`.
///
/// Writing `H_k = F^(k) o G`, the column `i = 0` of each `H_k` is the
/// unisort composition of `F^(k)` with `G(0, Y)`, and the rest follows from
/// `dH_k/dX = dG/dX * H_{k+1}` by increasing total degree.
pub fn compose_uni_two<T: Scalar>(outer: &Series<T>, inner: &Table<T>) -> Result<Table<T>> {
    if outer.truncation() != inner.truncation() {
        return Err(Error::Shape { left: outer.truncation(), right: inner.truncation() });
    }
    if !inner.get(0, 0).is_zero() {
        return Err(Error::CompositionDomain);
    }
    let n = inner.truncation();
    let binom = binomial_rows::<T>(n);
    let column: Vec<T> = (0..=n).map(|j| inner.get(0, j).clone()).collect();

    // h[k] is a triangle of truncation n - k, filled lazily
    let mut h: Vec<Vec<Vec<Option<T>>>> = (0..=n).map(|k| (0..=n - k).map(|i| vec![None; n - k - i + 1]).collect()).collect();
    for (k, hk) in h.iter_mut().enumerate() {
        let m = n - k;
        let shifted = Series::new("", Tag::Virtual, outer.coeffs()[k..].to_vec());
        let base = Series::new("", Tag::Virtual, column[..=m].to_vec());
        let col = shifted.compose(&base)?;
        for (j, value) in col.into_coeffs().into_iter().enumerate() {
            hk[0][j] = Some(value);
        }
    }
    for degree in 1..=n {
        for k in 0..=n - degree {
            for i in 0..degree {
                // target H_k[i+1][j] with i + 1 + j = degree
                let j = degree - 1 - i;
                let mut acc = T::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        let g = inner.get(p + 1, q);
                        if g.is_zero() {
                            continue;
                        }
                        let lower = h[k + 1][i - p][j - q].as_ref().expect("lower degree filled");
                        acc = acc + binom[i][p].clone() * binom[j][q].clone() * g.clone() * lower.clone();
                    }
                }
                h[k][i + 1][j] = Some(acc);
            }
        }
    }
    let rows = h.swap_remove(0).into_iter().map(|row| row.into_iter().map(|c| c.expect("filled")).collect()).collect();
    let tag = if outer.is_virtual() || inner.is_virtual() { Tag::Virtual } else { Tag::Concrete };
    Table::from_rows(format!("{}({})", outer.label(), inner.label()), tag, rows)
}
