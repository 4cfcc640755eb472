//! `r`-Stirling numbers of the second kind and their consecutive differences.
//!
//! `r_stirling(n, m, r)` counts set partitions of `[n]` into `m` blocks with
//! `1, ..., r` in distinct blocks. `sdiff(n, m, r)` is
//! `r_stirling(n, m, r) - r_stirling(n, m, r + 1)`: partitions where `r` is
//! the largest index such that `1, ..., r` are separated.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::scalar::Scalar;

/// `r`-Stirling number of the second kind by the Broder recurrence.
pub fn r_stirling<T: Scalar>(n: usize, m: usize, r: usize) -> T {
    if r > n || m > n {
        return T::zero();
    }
    // row[m'] = S_r(n', m') for the current n'
    let mut row: Vec<T> = (0..=n).map(|k| if k == r { T::one() } else { T::zero() }).collect();
    for _ in r + 1..=n {
        for k in (1..=n).rev() {
            row[k] = T::from_count(k) * row[k].clone() + row[k - 1].clone();
        }
        row[0] = T::zero();
    }
    row[m].clone()
}

/// Classic Stirling numbers of the second kind.
pub fn stirling2<T: Scalar>(n: usize, m: usize) -> T {
    r_stirling(n, m, 0)
}

/// `sdiff(n, m, r)` from its own recurrence, independent of [`r_stirling`].
pub fn sdiff<T: Scalar>(n: usize, m: usize, r: usize) -> T {
    if r > n || m > n || m < r {
        return T::zero();
    }
    sdiff_slice::<T>(r, n).pop().expect("row n exists")[m - r].clone()
}

/// Rows `n = r..=nmax` of `sdiff(n, m, r)` for fixed `r`, row `n` holding `m = r..=n`.
fn sdiff_slice<T: Scalar>(r: usize, nmax: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(nmax + 1 - r.min(nmax + 1));
    if r > nmax {
        return rows;
    }
    let mut top = vec![T::zero(); 1];
    top[0] = T::one();
    rows.push(top);
    for n in r + 1..=nmax {
        let prev = rows.last().expect("row n-1");
        let at = |m: usize| -> T {
            if m < r || m > n - 1 { T::zero() } else { prev[m - r].clone() }
        };
        let row = (r..=n)
            .map(|m| {
                if m == n && r + 1 == n {
                    // the one place the recurrence would give 1
                    T::zero()
                } else {
                    let stay = if m >= 1 { at(m - 1) } else { T::zero() };
                    T::from_count(m) * at(m) + stay
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// All `sdiff(n, m, r)` with `0 <= n, m, r <= nmax`, stored on the support
/// `r <= m <= n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SdiffTable<T> {
    nmax: usize,
    // slices[r][n - r][m - r]
    slices: Vec<Vec<Vec<T>>>,
    zero: T,
}

impl<T: Scalar> SdiffTable<T> {
    pub fn build(nmax: usize) -> Self {
        let slices = (0..=nmax).map(|r| sdiff_slice(r, nmax)).collect();
        SdiffTable { nmax, slices, zero: T::zero() }
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Zero off the support; panics if `n > nmax`.
    pub fn get(&self, n: usize, m: usize, r: usize) -> &T {
        assert!(n <= self.nmax, "sdiff({n}, {m}, {r}) beyond table nmax {}", self.nmax);
        if r > n || m > n || m < r {
            return &self.zero;
        }
        &self.slices[r][n - r][m - r]
    }

    /// The triangle for fixed `r`: row `n - 1` holds `m = 1..=n`, for `n = 1..=nmax`.
    pub fn triangle(&self, r: usize) -> Vec<Vec<T>> {
        (1..=self.nmax).map(|n| (1..=n).map(|m| self.get(n, m, r).clone()).collect()).collect()
    }
}

/// A process-wide `sdiff` table covering at least `nmax`.
///
/// The cache only ever grows; a table is never mutated once shared.
pub fn shared_table(nmax: usize) -> Arc<SdiffTable<BigInt>> {
    static CACHE: OnceLock<RwLock<Option<Arc<SdiffTable<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(None));
    if let Some(table) = cache.read().expect("cache lock").as_ref() {
        if table.nmax() >= nmax {
            return Arc::clone(table);
        }
    }
    let mut slot = cache.write().expect("cache lock");
    match slot.as_ref() {
        Some(table) if table.nmax() >= nmax => Arc::clone(table),
        _ => {
            let table = Arc::new(SdiffTable::build(nmax));
            *slot = Some(Arc::clone(&table));
            table
        }
    }
}
