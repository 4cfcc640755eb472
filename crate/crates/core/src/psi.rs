//! Counting formulas for `R`-recurrent functional digraphs of two sorts.
//!
//! `Psi_R[i, j]` counts functional digraphs with `i` internal nodes and `j`
//! leaves whose recurrent points carry an `R`-structure. Three routes are
//! provided and must agree: the closed form through `sdiff`
//! ([`psi_total`]), the three-case recursion ([`psi_recursive`]) and the
//! composition `R(A(X, Y))` computed in [`crate::species`].
//!
//! Divisions by `r!` are deferred to the end of each summand and checked
//! for exactness.
//!
//! # Branch shapes
//!
//! [`psi_general`] replaces the linear-order branches by an arbitrary
//! species `T`. The defining equation `dPsi/dY = T(X) * X * dPsi/dX` with
//! `Psi(X, 0) = R(X)` reads, on coefficients,
//!
//! ```text
//! c[i][0]   = R[i]
//! c[i][j+1] = sum_{k=0..i} C(i, k) * T[k] * (i - k) * c[i-k][j]
//! ```
//!
//! since `(X * dPsi/dX)[p][j] = p * c[p][j]` and multiplying by the
//! sort-`X` species `T` is a binomial convolution in `i` alone.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{binomial_rows, factorial, falling_factorial};
use crate::species::{compose_uni_two, solve_bounded_tree, Atom, Series, Tag};
use crate::stirling::shared_table;
use crate::{CoeffSeq, CoeffTable};

/// Names for the recurrent structures the crate knows how to build.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RecurrentLabel {
    /// Permutations: all functional digraphs.
    S,
    /// Singletons: trees.
    X,
    /// Sets: forests.
    E,
    /// Cycles: connected digraphs.
    C,
    /// Derangements: no fixed points.
    Der,
    /// Exactly `r` rooted trees, unstructured.
    ESize(usize),
    /// Exactly `r` recurrent points.
    SSize(usize),
    /// Permutations whose cycle lengths divide `d`, `E(sum_{c | d} C_c)`.
    CycleDivisors(usize),
    Custom(String),
}

impl fmt::Display for RecurrentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrentLabel::S => write!(f, "S"),
            RecurrentLabel::X => write!(f, "X"),
            RecurrentLabel::E => write!(f, "E"),
            RecurrentLabel::C => write!(f, "C"),
            RecurrentLabel::Der => write!(f, "Der"),
            RecurrentLabel::ESize(r) => write!(f, "E_{r}"),
            RecurrentLabel::SSize(r) => write!(f, "S_{r}"),
            RecurrentLabel::CycleDivisors(d) => write!(f, "E(C_div_{d})"),
            RecurrentLabel::Custom(name) => write!(f, "{name}"),
        }
    }
}

impl FromStr for RecurrentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.parse::<Atom>()? {
            Atom::S => RecurrentLabel::S,
            Atom::X => RecurrentLabel::X,
            Atom::E => RecurrentLabel::E,
            Atom::C => RecurrentLabel::C,
            Atom::Der => RecurrentLabel::Der,
            Atom::ESize(r) => RecurrentLabel::ESize(r),
            Atom::SSize(r) => RecurrentLabel::SSize(r),
            _ => return Err(Error::UnsupportedAtom(format!("{s} is not a recurrent structure"))),
        })
    }
}

/// The species `R` organizing the recurrent points.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrentSpec {
    label: RecurrentLabel,
    coeffs: CoeffSeq,
}

impl RecurrentSpec {
    /// The standard structure called `label`, truncated at `truncation`.
    pub fn new(label: RecurrentLabel, truncation: usize) -> Result<Self> {
        let coeffs = match &label {
            RecurrentLabel::S => Atom::S.coeffs(truncation)?,
            RecurrentLabel::X => Atom::X.coeffs(truncation)?,
            RecurrentLabel::E => Atom::E.coeffs(truncation)?,
            RecurrentLabel::C => Atom::C.coeffs(truncation)?,
            RecurrentLabel::Der => Atom::Der.coeffs(truncation)?,
            RecurrentLabel::ESize(r) => Atom::ESize(*r).coeffs(truncation)?,
            RecurrentLabel::SSize(r) => Atom::SSize(*r).coeffs(truncation)?,
            RecurrentLabel::CycleDivisors(d) => return Self::cycle_divisors(*d, truncation),
            RecurrentLabel::Custom(name) => {
                return Err(Error::UnsupportedAtom(format!("custom structure {name} needs explicit counts")))
            }
        };
        Ok(RecurrentSpec { label, coeffs })
    }

    /// Any counts, concrete or virtual.
    pub fn custom(name: impl Into<String>, coeffs: CoeffSeq) -> Self {
        RecurrentSpec { label: RecurrentLabel::Custom(name.into()), coeffs }
    }

    /// `E(sum_{c | d} C_c)`: permutations all of whose cycle lengths divide `d`.
    pub fn cycle_divisors(d: usize, truncation: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnsupportedAtom("cycle divisor parameter must be positive".into()));
        }
        let cycles = (1..=d)
            .filter(|c| d % c == 0)
            .map(|c| Atom::CSize(c).coeffs::<BigInt>(truncation))
            .try_fold(Series::zero(truncation), |acc, s| acc.sum(&s?))?;
        let coeffs = Atom::E.coeffs::<BigInt>(truncation)?.compose(&cycles)?;
        Ok(RecurrentSpec { label: RecurrentLabel::CycleDivisors(d), coeffs: coeffs.with_tag(Tag::Concrete) })
    }

    pub fn label(&self) -> &RecurrentLabel {
        &self.label
    }

    pub fn coeffs(&self) -> &CoeffSeq {
        &self.coeffs
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.truncation()
    }

    /// `|R[r]|`, or an error past the truncation.
    pub fn weight(&self, r: usize) -> Result<&BigInt> {
        self.coeffs.coeffs().get(r).ok_or(Error::OutOfTruncation { index: r, truncation: self.truncation() })
    }

    /// Same structure with counts replaced by `f(counts)`.
    pub fn map_coeffs(&self, name: impl Into<String>, f: impl FnOnce(&CoeffSeq) -> Result<CoeffSeq>) -> Result<Self> {
        Ok(RecurrentSpec::custom(name, f(&self.coeffs)?))
    }
}

/// The branch shape `T` of [`psi_general`].
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSpec {
    coeffs: CoeffSeq,
}

impl BranchSpec {
    /// Panics if `coeffs` has a negative entry.
    pub fn new(coeffs: CoeffSeq) -> Self {
        assert!(coeffs.is_nonnegative(), "branch shapes are concrete species");
        BranchSpec { coeffs }
    }

    pub fn atom(atom: Atom, truncation: usize) -> Result<Self> {
        Ok(Self::new(atom.coeffs(truncation)?))
    }

    pub fn coeffs(&self) -> &CoeffSeq {
        &self.coeffs
    }
}

fn exact_div(numerator: BigInt, denominator: &BigInt, context: impl FnOnce() -> String) -> Result<BigInt> {
    let (q, rem) = numerator.div_rem(denominator);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(context()));
    }
    Ok(q)
}

/// `|Psi_{R_r}[i, j]| = i! |R[r]| sdiff(i + j, i, r) / r!`.
pub fn psi_fixed_r(i: usize, j: usize, r: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    let weight = spec.weight(r)?;
    let table = shared_table(i + j);
    let sd = table.get(i + j, i, r);
    if sd.is_zero() || weight.is_zero() {
        return Ok(BigInt::zero());
    }
    let numerator = factorial::<BigInt>(i) * weight * sd;
    exact_div(numerator, &factorial(r), || format!("psi_fixed_r({i}, {j}, {r}, {})", spec.label))
}

/// `|Psi_R[i, j]| = i! sum_{r=0..i} |R[r]| / r! sdiff(i + j, i, r)`.
pub fn psi_total(i: usize, j: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    (0..=i).try_fold(BigInt::zero(), |acc, r| Ok(acc + psi_fixed_r(i, j, r, spec)?))
}

/// The table of [`psi_total`] on `i + j <= truncation`.
pub fn psi_table(spec: &RecurrentSpec, truncation: usize) -> Result<CoeffTable> {
    let n = truncation;
    shared_table(n);
    let rows = (0..=n)
        .into_par_iter()
        .map(|i| (0..=n - i).map(|j| psi_total(i, j, spec)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    CoeffTable::from_rows(format!("Psi_{}", spec.label), spec.coeffs.tag(), rows)
}

/// `|Psi_R[i, j]|` from `R[i]` on the first column, zero on the first row,
/// and `c[i][j] = i (c[i][j-1] + c[i-1][j])` elsewhere.
pub fn psi_recursive(spec: &RecurrentSpec, truncation: usize) -> Result<CoeffTable> {
    let n = truncation;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row: Vec<BigInt> = Vec::with_capacity(n - i + 1);
        for j in 0..=n - i {
            let value = if j == 0 {
                spec.weight(i)?.clone()
            } else if i == 0 {
                BigInt::zero()
            } else {
                BigInt::from(i) * (row[j - 1].clone() + rows[i - 1][j].clone())
            };
            row.push(value);
        }
        rows.push(row);
    }
    CoeffTable::from_rows(format!("Psi_{}", spec.label), spec.coeffs.tag(), rows)
}

/// `sum_i n^(i falling) sdiff(n, i, r)`, i.e. `r! |End_{E_r}[n]|`.
pub fn end_inner(n: usize, r: usize) -> BigInt {
    let table = shared_table(n);
    (r..=n).map(|i| falling_factorial::<BigInt>(n, i) * table.get(n, i, r)).sum()
}

/// `sum_i i! sdiff(n, i, r)`, i.e. `r! |Cay_{E_r}[n]|`.
pub fn cay_inner(n: usize, r: usize) -> BigInt {
    let table = shared_table(n);
    (r..=n).map(|i| factorial::<BigInt>(i) * table.get(n, i, r)).sum()
}

fn weighted_sum(n: usize, spec: &RecurrentSpec, inner: fn(usize, usize) -> BigInt, what: &str) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for r in 0..=n {
        let weight = spec.weight(r)?;
        if weight.is_zero() {
            continue;
        }
        let term = exact_div(weight * inner(n, r), &factorial(r), || format!("{what}({n}, {}) at r = {r}", spec.label))?;
        total += term;
    }
    Ok(total)
}

/// `|End_R[n]| = sum_r |R[r]| / r! sum_i n^(i falling) sdiff(n, i, r)`.
pub fn end_count(n: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    weighted_sum(n, spec, end_inner, "end_count")
}

/// `|Cay_R[n]| = sum_r |R[r]| / r! sum_i i! sdiff(n, i, r)`.
pub fn cay_count(n: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    weighted_sum(n, spec, cay_inner, "cay_count")
}

/// Fixed-point-free Cayley permutations of `[n]`.
pub fn cay_derangements(n: usize) -> BigInt {
    let spec = RecurrentSpec::new(RecurrentLabel::Der, n).expect("Der is standard");
    cay_count(n, &spec).expect("exact by construction")
}

/// Cayley permutations of `[n]` with a connected functional digraph:
/// `sum_{r >= 1} (1/r) sum_i i! sdiff(n, i, r)`.
pub fn cay_connected(n: usize) -> BigInt {
    (1..=n)
        .map(|r| exact_div(cay_inner(n, r), &BigInt::from(r), || format!("cay_connected({n}) at r = {r}")).expect("exact"))
        .sum()
}

/// Cayley permutations of `[n]` whose functional digraph is a forest:
/// `sum_r (1/r!) sum_i i! sdiff(n, i, r)`.
pub fn cay_forest(n: usize) -> BigInt {
    (0..=n)
        .map(|r| exact_div(cay_inner(n, r), &factorial(r), || format!("cay_forest({n}) at r = {r}")).expect("exact"))
        .sum()
}

/// `Psi_{R,T}` on `i + j <= truncation`: recurrent part `R`, branches `T(X) * Y`.
pub fn psi_general(spec: &RecurrentSpec, branch: &BranchSpec, truncation: usize) -> Result<CoeffTable> {
    let n = truncation;
    let binom = binomial_rows::<BigInt>(n);
    let t = branch.coeffs();
    if t.truncation() < n {
        return Err(Error::OutOfTruncation { index: n, truncation: t.truncation() });
    }
    // columns[j][i], filled one leaf count at a time
    let mut columns: Vec<Vec<BigInt>> = vec![(0..=n).map(|i| spec.weight(i).cloned()).collect::<Result<_>>()?];
    for j in 0..n {
        let prev = &columns[j];
        let next = (0..n - j)
            .map(|i| {
                (0..i).fold(BigInt::zero(), |acc, k| {
                    acc + &binom[i][k] * t.coeff(k) * BigInt::from(i - k) * &prev[i - k]
                })
            })
            .collect();
        columns.push(next);
    }
    let rows = (0..=n).map(|i| (0..=n - i).map(|j| columns[j][i].clone()).collect()).collect();
    CoeffTable::from_rows(format!("Psi_{},T", spec.label), spec.coeffs.tag(), rows)
}

/// Two-sort rooted trees in which every node has at most `k` children.
pub fn bounded_children_tree(k: usize, truncation: usize) -> Result<CoeffTable> {
    if k == 0 {
        return Err(Error::UnsupportedAtom("bounded trees need k >= 1".into()));
    }
    Ok(solve_bounded_tree(k, truncation))
}

/// `R(K_k(X, Y))`: digraphs whose recurrent points have at most `k + 1`
/// preimages and whose other points have at most `k`.
pub fn bounded_digraphs(spec: &RecurrentSpec, k: usize, truncation: usize) -> Result<CoeffTable> {
    let trees = bounded_children_tree(k, truncation)?;
    compose_uni_two(&spec.coeffs.truncate(truncation), &trees)
}
