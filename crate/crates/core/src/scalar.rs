//! Coefficient rings.
//!
//! Every coefficient-level routine in this crate is written against
//! [`Scalar`], so the same code runs over `BigInt` (the default, exact),
//! `i64`/`i128` (fast, overflow-prone), `BigRational` and floats.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Signed};

/// A commutative ring with signed elements and an embedding of the naturals.
pub trait Scalar: Clone + Debug + PartialEq + Signed + FromPrimitive + Send + Sync {
    /// The image of `n` in the ring.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the scalar type")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Signed + FromPrimitive + Send + Sync {}

/// `n!` in the ring `T`.
pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_count(k))
}

/// Falling factorial `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub fn falling_factorial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    (n - k + 1..=n).fold(T::one(), |acc, m| acc * T::from_count(m))
}

/// Rows `0..=n` of Pascal's triangle, built by addition only.
pub fn binomial_rows<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            if k == 0 || k == m {
                row.push(T::one());
            } else {
                let prev = &rows[m - 1];
                row.push(prev[k - 1].clone() + prev[k].clone());
            }
        }
        rows.push(row);
    }
    rows
}
