//! Statistics over `R`-recurrent digraphs, ordinal-product identities for
//! Cayley counts, and descriptive ratio reports.
//!
//! A statistic is summed over all structures by changing the weights of
//! `R`: pointing `R` counts recurrent points, `R * log R` counts
//! components. Every component of a functional digraph holds exactly one
//! cycle, so the cycle and component totals coincide.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::psi::{cay_count, end_count, psi_fixed_r, psi_total, RecurrentLabel, RecurrentSpec};
use crate::scalar::{factorial, falling_factorial};
use crate::species::{Atom, Series};
use crate::stirling::shared_table;
use crate::CoeffSeq;

/// Euler's constant, to the precision the report prints.
pub const EULER_GAMMA: f64 = 0.5772156649;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    StructuresTotal,
    RecurrentPointsTotal,
    ComponentsTotal,
    CyclesTotal,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::StructuresTotal => "structures_total",
            Statistic::RecurrentPointsTotal => "recurrent_points_total",
            Statistic::ComponentsTotal => "components_total",
            Statistic::CyclesTotal => "cycles_total",
        }
    }

    /// The weights that count this statistic, in place of `R`.
    pub fn weights(self, spec: &RecurrentSpec) -> Result<RecurrentSpec> {
        match self {
            Statistic::StructuresTotal => Ok(spec.clone()),
            Statistic::RecurrentPointsTotal => pointed(spec),
            Statistic::ComponentsTotal | Statistic::CyclesTotal => times_log(spec),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Statistic::StructuresTotal,
            Statistic::RecurrentPointsTotal,
            Statistic::ComponentsTotal,
            Statistic::CyclesTotal,
        ]
        .into_iter()
        .find(|st| st.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown statistic `{s}`")))
    }
}

/// One exact total over the structures on `i` internal nodes and `j` leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatReport {
    pub i: usize,
    pub j: usize,
    pub statistic: Statistic,
    pub value: BigInt,
}

fn pointed(spec: &RecurrentSpec) -> Result<RecurrentSpec> {
    spec.map_coeffs(format!("{}^.", spec.label()), |c| Ok(c.pointing()))
}

fn times_log(spec: &RecurrentSpec) -> Result<RecurrentSpec> {
    spec.map_coeffs(format!("{0} log {0}", spec.label()), |c| c.product(&c.log()?))
}

/// Recurrent points summed over `Psi_R[i, j]`: `sum_r r |Psi_{R_r}[i, j]|`.
pub fn total_recurrent(i: usize, j: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    (1..=i).try_fold(BigInt::zero(), |acc, r| Ok(acc + BigInt::from(r) * psi_fixed_r(i, j, r, spec)?))
}

/// Components summed over `Psi_R[i, j]`, through `R * log R`; needs `R[0] = 1`.
pub fn total_components(i: usize, j: usize, spec: &RecurrentSpec) -> Result<BigInt> {
    psi_total(i, j, &times_log(spec)?)
}

/// `H_r` as an exact fraction.
pub fn harmonic(r: usize) -> BigRational {
    (1..=r).map(|k| BigRational::new(BigInt::one(), BigInt::from(k))).sum()
}

/// Components summed over all digraphs on `[i, j]`, as
/// `i! sum_r H_r sdiff(i + j, i, r)` with exact harmonic numbers.
pub fn total_components_harmonic(i: usize, j: usize) -> Result<BigInt> {
    let table = shared_table(i + j);
    let total: BigRational = (1..=i)
        .map(|r| harmonic(r) * BigRational::from_integer(factorial::<BigInt>(i) * table.get(i + j, i, r)))
        .sum();
    if !total.is_integer() {
        return Err(Error::InexactDivision(format!("harmonic component total at ({i}, {j})")));
    }
    Ok(total.to_integer())
}

/// All totals of `stat` on `i + j <= truncation`.
pub fn stat_report(stat: Statistic, spec: &RecurrentSpec, truncation: usize) -> Result<Vec<StatReport>> {
    let weights = stat.weights(spec)?;
    let mut out = Vec::new();
    for i in 0..=truncation {
        for j in 0..=truncation - i {
            out.push(StatReport { i, j, statistic: stat, value: psi_total(i, j, &weights)? });
        }
    }
    Ok(out)
}

/// `stat` summed over Cayley permutations of `[n]`.
pub fn cayley_total(stat: Statistic, spec: &RecurrentSpec, n: usize) -> Result<BigInt> {
    cay_count(n, &stat.weights(spec)?)
}

/// `stat` summed over endofunctions of `[n]`.
pub fn end_total(stat: Statistic, spec: &RecurrentSpec, n: usize) -> Result<BigInt> {
    end_count(n, &stat.weights(spec)?)
}

/// Cycles summed over the Cayley permutations of `[n]`.
pub fn cycles_over_cayley(n: usize) -> BigInt {
    let spec = RecurrentSpec::new(RecurrentLabel::S, n).expect("S is standard");
    cayley_total(Statistic::CyclesTotal, &spec, n).expect("S[0] = 1")
}

/// Plain convolution `c[n] = sum_k a[k] b[n - k]`.
pub fn ordinal_product(a: &CoeffSeq, b: &CoeffSeq) -> Result<CoeffSeq> {
    if a.truncation() != b.truncation() {
        return Err(Error::Shape { left: a.truncation(), right: b.truncation() });
    }
    let n = a.truncation();
    let coeffs = (0..=n).map(|m| (0..=m).map(|k| a.coeff(k) * b.coeff(m - k)).sum()).collect();
    let tag = if a.is_virtual() || b.is_virtual() { crate::species::Tag::Virtual } else { crate::species::Tag::Concrete };
    Ok(Series::new(format!("{} . {}", a.label(), b.label()), tag, coeffs))
}

/// The identities relating Cayley counts to ballots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `sum_i i! sdiff(n + r + 1, i, r) = r! r |(E^r Bal^(r+1))[n]|`.
    BallotSplit,
    /// `2r |(int E^r Bal^(r+1))[n]| = |(E^r Bal^r)[n]| - [n = 0]`.
    IntegralBal,
    /// `Cay_R = R + sum_{r >= 1} (R_r)^. (.) int E^r Bal^(r+1)`.
    OrdinalExpansion,
    /// `2 Cay_R = sum_r R_r (.) (1 + E^r Bal^r)`.
    HalfOrdinalExpansion,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::BallotSplit => "ballot_split",
            Identity::IntegralBal => "integral_bal",
            Identity::OrdinalExpansion => "ordinal_expansion",
            Identity::HalfOrdinalExpansion => "half_ordinal_expansion",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of one identity at one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRow {
    pub identity: Identity,
    /// `None` for identities that do not fix `r`.
    pub r: Option<usize>,
    pub n: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl IdentityRow {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub structure: String,
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(IdentityRow::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|row| !row.holds())
    }
}

/// Largest `r` checked by the `r`-indexed identities.
pub const IDENTITY_MAX_R: usize = 6;

/// `E^r * Bal^s` truncated at `n`.
fn e_bal(r: usize, s: usize, n: usize) -> Result<CoeffSeq> {
    let e = Atom::E.coeffs::<BigInt>(n)?;
    let bal = Atom::Bal.coeffs::<BigInt>(n)?;
    e.power(r).product(&bal.power(s))
}

/// `R_r` as a series: `R[r]` at size `r`, zero elsewhere.
fn restricted(spec: &RecurrentSpec, r: usize, n: usize) -> Result<CoeffSeq> {
    Ok(Series::monomial(format!("{}_{r}", spec.label()), r, spec.weight(r)?.clone(), n))
}

/// Evaluates every identity exactly for `n <= nmax`, with `R = spec` where
/// it appears. Sides are multiplied through by their denominators.
pub fn check_unisort_identity(spec: &RecurrentSpec, nmax: usize) -> Result<IdentityReport> {
    let n = nmax;
    let mut rows = Vec::new();
    shared_table(n + IDENTITY_MAX_R + 1);

    for r in 1..=IDENTITY_MAX_R {
        let eb = e_bal(r, r + 1, n)?;
        let scale = factorial::<BigInt>(r) * BigInt::from(r);
        for m in 0..=n {
            let left = crate::psi::cay_inner(m + r + 1, r);
            rows.push(IdentityRow { identity: Identity::BallotSplit, r: Some(r), n: m, left, right: &scale * eb.coeff(m) });
        }
        let integral = eb.integral();
        let plain = e_bal(r, r, n)?;
        for m in 0..=n {
            let left = BigInt::from(2 * r) * integral.coeff(m);
            let right = plain.coeff(m) - BigInt::from(u8::from(m == 0));
            rows.push(IdentityRow { identity: Identity::IntegralBal, r: Some(r), n: m, left, right });
        }
    }

    let direct: Vec<BigInt> = (0..=n).map(|m| cay_count(m, spec)).collect::<Result<_>>()?;
    let mut expansion = spec.coeffs().truncate(n);
    let mut doubled = Series::zero(n);
    for r in 0..=n {
        let rr = restricted(spec, r, n)?;
        if r >= 1 {
            let term = ordinal_product(&rr.pointing(), &e_bal(r, r + 1, n)?.integral().truncate(n))?;
            expansion = expansion.sum(&term)?;
        }
        let one_plus = Series::one(n).sum(&e_bal(r, r, n)?)?;
        doubled = doubled.sum(&ordinal_product(&rr, &one_plus)?)?;
    }
    for (m, value) in direct.iter().enumerate() {
        rows.push(IdentityRow {
            identity: Identity::OrdinalExpansion,
            r: None,
            n: m,
            left: value.clone(),
            right: expansion.coeff(m),
        });
        rows.push(IdentityRow {
            identity: Identity::HalfOrdinalExpansion,
            r: None,
            n: m,
            left: BigInt::from(2) * value,
            right: doubled.coeff(m),
        });
    }
    Ok(IdentityReport { structure: spec.label().to_string(), rows })
}

/// One exact ratio with a reference value beside it.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticsRow {
    pub series: String,
    pub n: usize,
    pub numerator: BigInt,
    pub denominator: BigInt,
    /// `numerator / denominator` rounded to [`RATIO_DIGITS`] places.
    pub ratio: String,
    pub reference: Option<f64>,
}

pub const RATIO_DIGITS: usize = 10;

/// `num / den` in decimal, rounded half away from zero to `digits` places.
pub fn decimal_ratio(num: &BigInt, den: &BigInt, digits: usize) -> String {
    assert!(!den.is_zero(), "zero denominator");
    let negative = num.is_negative() != den.is_negative() && !num.is_zero();
    let (num, den) = (num.abs(), den.abs());
    let scaled: BigInt = num * BigInt::from(10).pow(digits as u32) * 2 + &den;
    let q = scaled.div_floor(&(den * 2));
    let mut s = q.to_string();
    if s.len() <= digits {
        s = format!("{}{s}", "0".repeat(digits + 1 - s.len()));
    }
    let point = s.len() - digits;
    let body = if digits == 0 { s } else { format!("{}.{}", &s[..point], &s[point..]) };
    if negative { format!("-{body}") } else { body }
}

/// Renders a reference constant the way ratios are printed.
pub fn format_reference(value: f64) -> String {
    format!("{value:.prec$}", prec = RATIO_DIGITS)
}

/// `sum_i i! sdiff(n, i, r)` and `sum_i n^(i falling) sdiff(n, i, r)` for all `r`.
fn inner_sums(n: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let table = shared_table(n);
    let fact: Vec<BigInt> = (0..=n).map(factorial::<BigInt>).collect();
    let fall: Vec<BigInt> = (0..=n).map(|i| falling_factorial::<BigInt>(n, i)).collect();
    (0..=n)
        .map(|r| {
            (r..=n).fold((BigInt::zero(), BigInt::zero()), |(c, e), i| {
                let sd = table.get(n, i, r);
                (c + &fact[i] * sd, e + &fall[i] * sd)
            })
        })
        .unzip()
}

fn weighted(weights: &CoeffSeq, inner: &[BigInt]) -> BigInt {
    inner
        .iter()
        .enumerate()
        .map(|(r, s)| {
            let (q, rem) = (weights.coeff(r) * s).div_rem(&factorial::<BigInt>(r));
            debug_assert!(rem.is_zero());
            q
        })
        .sum()
}

/// Exact ratios for `1 <= n <= nmax`, computed from the closed forms.
///
/// Series reported, each against its count of structures:
/// Cayley derangements over Cayley permutations (beside `1/e`); cycles
/// over endofunctions (beside `(log 2n + gamma) / 2`) and over Cayley
/// permutations; recurrent points for `R` in `S, E, C, Der`; components
/// for `R` in `S, E, Der` (`log C` is not defined).
pub fn asymptotics_report(nmax: usize) -> Result<Vec<AsymptoticsRow>> {
    let labels = [RecurrentLabel::S, RecurrentLabel::E, RecurrentLabel::C, RecurrentLabel::Der];
    let specs: Vec<RecurrentSpec> = labels.iter().map(|l| RecurrentSpec::new(l.clone(), nmax)).collect::<Result<_>>()?;
    let s = &specs[0];
    let der = &specs[3];
    let pointed: Vec<RecurrentSpec> = specs.iter().map(pointed).collect::<Result<_>>()?;
    let logged: Vec<Option<RecurrentSpec>> =
        specs.iter().map(|sp| if *sp.label() == RecurrentLabel::C { None } else { times_log(sp).ok() }).collect();
    shared_table(nmax);

    let per_n: Vec<Vec<AsymptoticsRow>> = (1..=nmax)
        .into_par_iter()
        .map(|n| {
            let (cay, end) = inner_sums(n);
            let row = |series: String, num: BigInt, den: BigInt, reference: Option<f64>| AsymptoticsRow {
                ratio: decimal_ratio(&num, &den, RATIO_DIGITS),
                series,
                n,
                numerator: num,
                denominator: den,
                reference,
            };
            let mut rows = Vec::new();
            let fubini = weighted(s.coeffs(), &cay);
            let n_to_n = weighted(s.coeffs(), &end);
            rows.push(row(
                "cayley_derangement_fraction".into(),
                weighted(der.coeffs(), &cay),
                fubini.clone(),
                Some((-1f64).exp()),
            ));
            let log_s = logged[0].as_ref().expect("S[0] = 1");
            let gamma_ref = 0.5 * ((2.0 * n as f64).ln() + EULER_GAMMA);
            rows.push(row("end_mean_cycles".into(), weighted(log_s.coeffs(), &end), n_to_n, Some(gamma_ref)));
            rows.push(row("cay_mean_cycles".into(), weighted(log_s.coeffs(), &cay), fubini, None));
            for (k, sp) in specs.iter().enumerate() {
                let count = weighted(sp.coeffs(), &cay);
                if count.is_zero() {
                    continue;
                }
                let name = sp.label().to_string();
                rows.push(row(format!("cay_{name}_mean_recurrent"), weighted(pointed[k].coeffs(), &cay), count.clone(), None));
                if let Some(lg) = &logged[k] {
                    rows.push(row(format!("cay_{name}_mean_components"), weighted(lg.coeffs(), &cay), count, None));
                }
            }
            rows
        })
        .collect();
    Ok(per_n.into_iter().flatten().collect())
}

/// `ratio` as a float, for coarse comparisons.
pub fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    BigRational::new(num.clone(), den.clone()).to_f64().unwrap_or(f64::NAN)
}
