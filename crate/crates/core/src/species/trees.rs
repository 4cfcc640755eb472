use crate::error::Result;
use crate::scalar::Scalar;

use super::{compose_uni_two, Atom, Series, Table, Tag};

/// Solves `K = X * B(K - X + Y)` on the triangle `i + j <= N`, where
/// `B` is the species of admissible child sets.
///
/// Each coefficient of total degree `d` only depends on degrees below `d`,
/// so `N + 1` rounds starting from zero reach the fixed point. One more
/// round is run and compared to catch a broken recurrence.
pub fn solve_tree_equation<T: Scalar>(children: &Series<T>, truncation: usize) -> Result<Table<T>> {
    let n = truncation;
    let children = children.truncate(n);
    let x = Table::<T>::x(n);
    let y = Table::<T>::y(n);
    let step = |k: &Table<T>| -> Result<Table<T>> {
        let inner = k.difference(&x)?.sum(&y)?;
        Ok(compose_uni_two(&children, &inner)?.times_x())
    };
    let mut current = Table::<T>::zero(n);
    for _ in 0..=n {
        current = step(&current)?;
    }
    let again = step(&current)?;
    assert_eq!(again.rows(), current.rows(), "tree fixed point did not stabilize after N+1 rounds");
    Ok(current.with_tag(Tag::Concrete))
}

/// Two-sort rooted trees `A(X,Y) = X E(A - X + Y)`, internal nodes of sort
/// `X` and leaves of sort `Y`.
pub fn solve_two_sort_tree<T: Scalar>(truncation: usize) -> Table<T> {
    let sets = Atom::E.coeffs::<T>(truncation).expect("E is a supported atom");
    solve_tree_equation(&sets, truncation).expect("shapes agree by construction").with_label("A")
}

/// Two-sort rooted trees in which every node has at most `k` children.
pub fn solve_bounded_tree<T: Scalar>(k: usize, truncation: usize) -> Table<T> {
    let children = (0..=k)
        .map(|m| Atom::ESize(m).coeffs::<T>(truncation).expect("E_m is a supported atom"))
        .reduce(|a, b| a.sum(&b).expect("same truncation"))
        .expect("k >= 0 gives at least E_0");
    solve_tree_equation(&children, truncation).expect("shapes agree by construction").with_label(format!("K{k}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_base_cases() {
        let a = solve_two_sort_tree::<i64>(6);
        assert_eq!(*a.get(1, 0), 1);
        for j in 0..=6 {
            assert_eq!(*a.get(0, j), 0);
        }
        // one root with two unordered leaves
        assert_eq!(*a.get(1, 2), 1);
        assert_eq!(*a.get(1, 1), 1);
        assert_eq!(a.diag().coeffs(), &[0, 1, 2, 9, 64, 625, 7776]);
    }

    #[test]
    fn unary_trees_are_paths() {
        // at most one child: a path of internal nodes ending in one leaf
        let k1 = solve_bounded_tree::<i64>(1, 5);
        assert_eq!(*k1.get(2, 1), 2);
        assert_eq!(*k1.get(1, 0), 1);
        assert_eq!(*k1.get(1, 2), 0);
        assert_eq!(*k1.get(3, 1), 6);
    }

    #[test]
    fn bounded_trees_match_unbounded_once_vacuous() {
        let n = 6;
        assert_eq!(solve_bounded_tree::<i64>(n, n).rows(), solve_two_sort_tree::<i64>(n).rows());
    }
}
