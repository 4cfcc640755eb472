//! Brute-force ground truth: every map of `[n]` enumerated, classified and tallied.

mod classify;
mod endofunction;
mod enumerate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use classify::{classify, cycles, idempotency_order, indegrees, is_periodic_at, recurrent_mask, DigraphProfile};
pub use endofunction::Endofunction;
pub use enumerate::{enumerate, visit, Budget, Enumeration, Model};

/// Families of functional digraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    All,
    Cayley,
    /// Connected with a single loop.
    Tree,
    /// Every cycle is a loop.
    Forest,
    Connected,
    /// No loops.
    Derangement,
    /// `f^(k) = f`.
    Idempotent(usize),
    /// At most `k` tree children per node: indegree `<= k` off the cycles,
    /// `<= k + 1` on them.
    IndegreeBounded(usize),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::All => f.write_str("all"),
            Class::Cayley => f.write_str("cayley"),
            Class::Tree => f.write_str("tree"),
            Class::Forest => f.write_str("forest"),
            Class::Connected => f.write_str("connected"),
            Class::Derangement => f.write_str("derangement"),
            Class::Idempotent(k) => write!(f, "idempotent({k})"),
            Class::IndegreeBounded(k) => write!(f, "indegree_bounded({k})"),
        }
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse().map_err(|_| Error::Parse(format!("bad parameter in `{s}`"))))
        };
        Ok(match s {
            "all" => Class::All,
            "cayley" => Class::Cayley,
            "tree" => Class::Tree,
            "forest" => Class::Forest,
            "connected" => Class::Connected,
            "derangement" => Class::Derangement,
            "idempotent" => Class::Idempotent(2),
            _ => {
                if let Some(k) = param("idempotent") {
                    Class::Idempotent(k?)
                } else if let Some(k) = param("indegree_bounded") {
                    Class::IndegreeBounded(k?)
                } else {
                    return Err(Error::Parse(format!("unknown class `{s}`")));
                }
            }
        })
    }
}

/// A class plus optional constraints on the internal, leaf and recurrent counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassPredicate {
    pub class: Class,
    pub internal: Option<usize>,
    pub leaves: Option<usize>,
    pub recurrent: Option<usize>,
}

impl From<Class> for ClassPredicate {
    fn from(class: Class) -> Self {
        ClassPredicate { class, internal: None, leaves: None, recurrent: None }
    }
}

impl ClassPredicate {
    pub fn with_ij(mut self, i: usize, j: usize) -> Self {
        self.internal = Some(i);
        self.leaves = Some(j);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.recurrent = Some(r);
        self
    }

    pub fn matches(&self, f: &[usize], p: &DigraphProfile) -> bool {
        let class = match self.class {
            Class::All => true,
            Class::Cayley => p.is_cayley,
            Class::Tree => p.is_tree(),
            Class::Forest => p.is_forest(),
            Class::Connected => p.is_connected(),
            Class::Derangement => p.is_derangement(),
            Class::Idempotent(k) => is_periodic_at(f, k),
            Class::IndegreeBounded(k) => p.max_indegree_nonrecurrent <= k && p.max_indegree_recurrent <= k + 1,
        };
        class
            && self.internal.is_none_or(|i| i == p.internal_count)
            && self.leaves.is_none_or(|j| j == p.leaf_count)
            && self.recurrent.is_none_or(|r| r == p.recurrent_count)
    }
}

/// Folds every map of the model into an accumulator.
///
/// The maps are split by the image of the first point and the blocks are
/// folded in parallel; `merge` must be associative and commutative so the
/// result does not depend on scheduling.
pub fn tally<A, I, F, M>(n: usize, model: Model, budget: &Budget, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[usize], &DigraphProfile) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    budget.check(n, model)?;
    if n == 0 {
        let mut acc = init();
        visit(0, model, None, |f| fold(&mut acc, f, &classify::classify_values(f)));
        return Ok(acc);
    }
    Ok((0..n)
        .into_par_iter()
        .map(|head| {
            let mut acc = init();
            visit(n, model, Some(head), |f| fold(&mut acc, f, &classify::classify_values(f)));
            acc
        })
        .reduce(&init, &merge))
}

/// Number of maps of the model satisfying the predicate.
pub fn count(n: usize, model: Model, pred: &ClassPredicate, budget: &Budget) -> Result<u64> {
    tally(n, model, budget, || 0u64, |acc, f, p| *acc += u64::from(pred.matches(f, p)), |a, b| a + b)
}

/// Grouping of a [`count_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKey {
    /// By internal and leaf counts.
    Ij,
    /// By internal, leaf and recurrent counts.
    Ijr,
}

impl FromStr for TableKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ij" => Ok(TableKey::Ij),
            "ijr" => Ok(TableKey::Ijr),
            _ => Err(Error::Parse(format!("unknown grouping `{s}`"))),
        }
    }
}

/// `(i, j)` or `(i, j, r)`; `r` is `None` for [`TableKey::Ij`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountKey {
    pub i: usize,
    pub j: usize,
    pub r: Option<usize>,
}

/// Counts of matching maps, grouped; empty groups are omitted.
pub fn count_table(
    n: usize,
    model: Model,
    pred: &ClassPredicate,
    key: TableKey,
    budget: &Budget,
) -> Result<BTreeMap<CountKey, u64>> {
    tally(
        n,
        model,
        budget,
        BTreeMap::new,
        |acc: &mut BTreeMap<CountKey, u64>, f, p| {
            if pred.matches(f, p) {
                let r = match key {
                    TableKey::Ij => None,
                    TableKey::Ijr => Some(p.recurrent_count),
                };
                *acc.entry(CountKey { i: p.internal_count, j: p.leaf_count, r }).or_insert(0) += 1;
            }
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}
