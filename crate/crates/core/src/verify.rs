//! Closed forms set against exhaustive enumeration, entry by entry.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::oracle::{count_table, Budget, Class, CountKey, Model, TableKey};
use crate::psi::{bounded_digraphs, psi_general, psi_table, BranchSpec, RecurrentLabel, RecurrentSpec};
use crate::scalar::binomial_rows;
use crate::species::Series;
use crate::CoeffTable;

/// The recurrent structure whose digraphs form `class`, if it is one of
/// the plain `R`-recurrent families.
pub fn recurrent_label(class: Class) -> Option<RecurrentLabel> {
    match class {
        Class::All | Class::Cayley => Some(RecurrentLabel::S),
        Class::Tree => Some(RecurrentLabel::X),
        Class::Forest => Some(RecurrentLabel::E),
        Class::Connected => Some(RecurrentLabel::C),
        Class::Derangement => Some(RecurrentLabel::Der),
        Class::Idempotent(_) | Class::IndegreeBounded(_) => None,
    }
}

/// Counts of `class` by internal and leaf counts, from formulas only.
///
/// Maps with `f^(k) = f` send every point to a recurrent one, and their
/// cycle lengths divide `k - 1`; indegree bounds use bounded-children trees.
pub fn formula_table(class: Class, truncation: usize) -> Result<CoeffTable> {
    match class {
        Class::Idempotent(k) => {
            if k < 2 {
                return Err(Error::Structure("idempotency order must be at least 2".into()));
            }
            let spec = RecurrentSpec::cycle_divisors(k - 1, truncation)?;
            psi_general(&spec, &BranchSpec::new(Series::one(truncation)), truncation)
        }
        Class::IndegreeBounded(k) => bounded_digraphs(&RecurrentSpec::new(RecurrentLabel::S, truncation)?, k, truncation),
        _ => {
            let label = recurrent_label(class).expect("plain family");
            psi_table(&RecurrentSpec::new(label, truncation)?, truncation)
        }
    }
}

/// One formula-versus-enumeration comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub model: Model,
    pub class: Class,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub formula: BigInt,
    pub oracle: u64,
}

impl VerifyRow {
    pub fn matches(&self) -> bool {
        self.formula.to_u64() == Some(self.oracle)
    }
}

/// Compares `class` on `[n]`, `n <= nmax`, split by internal count `i`.
///
/// Over Cayley permutations the internal nodes are `[i]` and the count is
/// the table entry itself; over endofunctions the internal set is any
/// `i`-subset, hence a binomial factor (except for the Cayley class).
pub fn verify(model: Model, class: Class, nmax: usize, budget: &Budget) -> Result<Vec<VerifyRow>> {
    budget.check(nmax, model)?;
    let table = formula_table(class, nmax)?;
    let binom = binomial_rows::<BigInt>(nmax);
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let oracle = count_table(n, model, &class.into(), TableKey::Ij, budget)?;
        for i in 0..=n {
            let j = n - i;
            let weight = if model == Model::Endofunctions && class != Class::Cayley { binom[n][i].clone() } else { BigInt::one() };
            rows.push(VerifyRow {
                model,
                class,
                n,
                i,
                j,
                formula: weight * table.get(i, j),
                oracle: oracle.get(&CountKey { i, j, r: None }).copied().unwrap_or(0),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_agreement() {
        for model in [Model::Cayley, Model::Endofunctions] {
            for class in [Class::All, Class::Tree, Class::Forest, Class::Connected, Class::Derangement, Class::Cayley] {
                let rows = verify(model, class, 5, &Budget::default()).unwrap();
                assert!(rows.iter().all(VerifyRow::matches), "{model} {class}: {:?}", rows.iter().find(|r| !r.matches()));
            }
        }
    }

    #[test]
    fn generalized_families() {
        for class in [Class::Idempotent(2), Class::Idempotent(3), Class::IndegreeBounded(1), Class::IndegreeBounded(2)] {
            let rows = verify(Model::Endofunctions, class, 5, &Budget::default()).unwrap();
            assert!(rows.iter().all(VerifyRow::matches), "{class}: {:?}", rows.iter().find(|r| !r.matches()));
        }
        assert!(formula_table(Class::Idempotent(1), 3).is_err());
    }

    #[test]
    fn budget_applies_to_nmax() {
        assert!(matches!(verify(Model::Endofunctions, Class::All, 9, &Budget::default()), Err(Error::BudgetExceeded { .. })));
    }
}
