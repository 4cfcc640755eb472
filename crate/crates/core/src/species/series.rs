use crate::error::{Error, Result};
use crate::scalar::{binomial_rows, Scalar};

/// Whether a coefficient sequence counts actual structures or is a formal
/// (signed) difference of species.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Concrete,
    Virtual,
}

impl Tag {
    fn join(self, other: Tag) -> Tag {
        if self == Tag::Virtual || other == Tag::Virtual {
            Tag::Virtual
        } else {
            Tag::Concrete
        }
    }
}

/// Labeled counts `c[n] = |F[n]|` of a unisort species for `n = 0..=N`.
///
/// The coefficients are the numerators of the exponential generating
/// series, so every operation here is expressed on counts directly
/// (binomial convolution for products, and so on). Nothing divides.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    label: String,
    tag: Tag,
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Panics if `coeffs` is empty: a truncation always has at least `c[0]`.
    pub fn new(label: impl Into<String>, tag: Tag, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a coefficient sequence needs at least c[0]");
        Series { label: label.into(), tag, coeffs }
    }

    pub fn concrete(label: impl Into<String>, coeffs: Vec<T>) -> Self {
        Self::new(label, Tag::Concrete, coeffs)
    }

    pub fn virtual_(label: impl Into<String>, coeffs: Vec<T>) -> Self {
        Self::new(label, Tag::Virtual, coeffs)
    }

    pub fn zero(truncation: usize) -> Self {
        Self::concrete("0", vec![T::zero(); truncation + 1])
    }

    /// The empty-set species `1`.
    pub fn one(truncation: usize) -> Self {
        Self::monomial("1", 0, T::one(), truncation)
    }

    /// The singleton species `X`.
    pub fn x(truncation: usize) -> Self {
        Self::monomial("X", 1, T::one(), truncation)
    }

    /// A single nonzero coefficient `value` at size `n` (dropped if `n > truncation`).
    pub fn monomial(label: impl Into<String>, n: usize, value: T, truncation: usize) -> Self {
        let mut coeffs = vec![T::zero(); truncation + 1];
        if n <= truncation {
            coeffs[n] = value;
        }
        let tag = if coeffs.iter().any(|c| c.is_negative()) { Tag::Virtual } else { Tag::Concrete };
        Self::new(label, tag, coeffs)
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

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `c[n]`, or zero past the truncation.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Keeps `c[0..=truncation]`; a no-op when already shorter.
    pub fn truncate(&self, truncation: usize) -> Self {
        let keep = (truncation + 1).min(self.coeffs.len());
        Series { label: self.label.clone(), tag: self.tag, coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Maps every coefficient into another ring.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series { label: self.label.clone(), tag: self.tag, coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::Shape { left: self.truncation(), right: other.truncation() });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Series::new(format!("{}+{}", self.label, other.label), self.tag.join(other.tag), coeffs))
    }

    /// Always tagged virtual.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Series::virtual_(format!("{}-{}", self.label, other.label), coeffs))
    }

    pub fn scale(&self, factor: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect();
        let tag = if factor.is_negative() { Tag::Virtual } else { self.tag };
        Series::new(self.label.clone(), tag, coeffs)
    }

    /// Binomial convolution `c[n] = sum_k C(n,k) a[k] b[n-k]`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let n = self.truncation();
        let binom = binomial_rows::<T>(n);
        let coeffs = (0..=n)
            .map(|m| {
                (0..=m).fold(T::zero(), |acc, k| {
                    acc + binom[m][k].clone() * self.coeffs[k].clone() * other.coeffs[m - k].clone()
                })
            })
            .collect();
        Ok(Series::new(format!("{}*{}", self.label, other.label), self.tag.join(other.tag), coeffs))
    }

    /// `F^k`, with `F^0 = 1`.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Series::one(self.truncation());
        for _ in 0..k {
            acc = acc.product(self).expect("same truncation");
        }
        acc.with_label(format!("{}^{}", self.label, k)).with_tag(self.tag)
    }

    /// `c[n] = n a[n]`.
    pub fn pointing(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(n, c)| T::from_count(n) * c.clone()).collect();
        Series::new(format!("pt({})", self.label), self.tag, coeffs)
    }

    /// `c[n] = a[n+1]`; the truncation drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.truncation() == 0 {
            return Err(Error::EmptyResult);
        }
        Ok(Series::new(format!("{}'", self.label), self.tag, self.coeffs[1..].to_vec()))
    }

    /// `c[0] = 0`, `c[n] = a[n-1]`; the truncation grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series::new(format!("int({})", self.label), self.tag, coeffs)
    }

    /// `F_n`: keeps only the coefficient of size `n`.
    pub fn restrict_size(&self, n: usize) -> Self {
        Series::monomial(format!("{}_{}", self.label, n), n, self.coeff(n), self.truncation()).with_tag(self.tag)
    }

    /// `F_+`: drops the coefficient of size zero.
    pub fn positive_part(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = T::zero();
        Series::new(format!("{}_+", self.label), self.tag, coeffs)
    }

    /// Labeled counts of `F(G)`.
    ///
    /// Uses `(F^(k) o G)' = G' (F^(k+1) o G)` for every `k`: writing
    /// `H_k = F^(k) o G`, we have `H_k[0] = F[k]` and
    /// `H_k[m+1] = sum_t C(m,t) G[t+1] H_{k+1}[m-t]`, which fills the
    /// triangle `k + m <= N` by increasing `m` with no division.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_shape(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.truncation();
        let binom = binomial_rows::<T>(n);
        // h[k][m] for k + m <= n
        let mut h: Vec<Vec<T>> = (0..=n).map(|k| vec![self.coeffs[k].clone()]).collect();
        for m in 0..n {
            for k in 0..n - m {
                let next = &h[k + 1];
                let value = (0..=m).fold(T::zero(), |acc, t| {
                    acc + binom[m][t].clone() * inner.coeffs[t + 1].clone() * next[m - t].clone()
                });
                h[k].push(value);
            }
        }
        let coeffs = h.swap_remove(0);
        Ok(Series::new(format!("{}({})", self.label, inner.label), self.tag.join(inner.tag), coeffs))
    }

    /// The combinatorial logarithm: the unique `G` with `G[0] = 0` and `E(G) = F`.
    ///
    /// From `F' = G' F`: `g[n+1] = a[n+1] - sum_{k<n} C(n,k) g[k+1] a[n-k]`
    /// (valid because `a[0] = 1`).
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogarithmDomain);
        }
        let n = self.truncation();
        let binom = binomial_rows::<T>(n);
        let a = &self.coeffs;
        let mut g = vec![T::zero(); n + 1];
        for m in 0..n {
            let mut value = a[m + 1].clone();
            for k in 0..m {
                value = value - binom[m][k].clone() * g[k + 1].clone() * a[m - k].clone();
            }
            g[m + 1] = value;
        }
        Ok(Series::virtual_(format!("log({})", self.label), g))
    }
}
