//! Joyal's bijection between doubly-rooted trees and endofunctions, and its
//! two-sort variant between trees with an extra leaf and permutations of
//! two-sort trees.
//!
//! Both directions read a spine `w_1, ..., w_k` as a permutation by rank:
//! with `u_1 < ... < u_k` the spine labels sorted, the permutation sends
//! `u_i` to `w_i`. Trees hanging off the spine are carried over unchanged.

mod dot;
mod trees;

use crate::error::{Error, Result};
use crate::oracle::{recurrent_mask, Endofunction};

pub use dot::{digraph_dot, doubly_rooted_dot, two_sort_tree_dot};
pub use trees::{for_each_tree, for_each_two_sort_tree, prufer_decode, DoublyRootedTree, PermOfTrees, TwoSortTree};

/// The permutation `u_i -> w_i` of the spine labels.
fn rank_rule(spine: &[usize]) -> Vec<(usize, usize)> {
    let mut sorted = spine.to_vec();
    sorted.sort_unstable();
    sorted.into_iter().zip(spine.iter().copied()).collect()
}

/// Recurrent points `u_1 < ... < u_k` mapped to their images `w_i`.
fn spine_word(f: &[usize]) -> Vec<usize> {
    let rec = recurrent_mask(f);
    (0..f.len()).filter(|&v| rec[v]).map(|v| f[v]).collect()
}

pub fn unisort_forward(t: &DoublyRootedTree) -> Endofunction {
    let spine = t.spine();
    let toward_head = t.parents_toward(t.head());
    let mut f: Vec<usize> = toward_head.iter().enumerate().map(|(v, p)| p.unwrap_or(v)).collect();
    for (u, w) in rank_rule(&spine) {
        f[u] = w;
    }
    Endofunction::new(f).expect("images are nodes")
}

pub fn unisort_backward(f: &Endofunction) -> Result<DoublyRootedTree> {
    let n = f.size();
    if n == 0 {
        return Err(Error::Structure("the empty map has no doubly-rooted tree".into()));
    }
    let values = f.values();
    let rec = recurrent_mask(values);
    let word = spine_word(values);
    let mut edges: Vec<(usize, usize)> = word.windows(2).map(|w| (w[0], w[1])).collect();
    edges.extend((0..n).filter(|&v| !rec[v]).map(|v| (v, values[v])));
    DoublyRootedTree::new(n, edges, word[0], word[word.len() - 1])
}

/// Forward two-sort bijection; `extra` must be the largest label, a leaf.
pub fn twosort_forward(t: &TwoSortTree, extra: usize) -> Result<PermOfTrees> {
    let n = t.size();
    if extra + 1 != n || extra < t.internal() {
        return Err(Error::Structure("the extra leaf must be the last leaf label".into()));
    }
    let mut spine = Vec::new();
    let mut v = extra;
    while let Some(p) = t.parent(v) {
        spine.push(p);
        v = p;
    }
    let mut f: Vec<usize> = (0..extra).map(|v| t.parent(v).unwrap_or(v)).collect();
    for (u, w) in rank_rule(&spine) {
        f[u] = w;
    }
    PermOfTrees::new(t.internal(), Endofunction::new(f)?)
}

/// Inverse of [`twosort_forward`]; the extra leaf gets the next free label.
pub fn twosort_backward(p: &PermOfTrees) -> Result<(TwoSortTree, usize)> {
    let values = p.map().values();
    let n = values.len();
    let rec = recurrent_mask(values);
    let word = spine_word(values);
    let mut parent: Vec<Option<usize>> = (0..n).map(|v| (!rec[v]).then(|| values[v])).collect();
    for w in word.windows(2) {
        parent[w[0]] = Some(w[1]);
    }
    parent.push(Some(word[0]));
    Ok((TwoSortTree::new(p.internal(), parent)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate, Budget, Model};

    #[test]
    fn fifteen_point_spine() {
        let f = Endofunction::from_one_based(&[9, 8, 5, 7, 7, 6, 3, 2, 6, 4, 5, 9, 5, 4, 8]).unwrap();
        let t = unisort_backward(&f).unwrap();
        let spine: Vec<usize> = t.spine().iter().map(|v| v + 1).collect();
        assert_eq!(spine, vec![8, 5, 7, 6, 3, 2]);
        assert_eq!((t.tail() + 1, t.head() + 1), (8, 2));
        assert_eq!(unisort_forward(&t), f);
    }

    #[test]
    fn unisort_round_trip_small() {
        for n in 1..=4 {
            for f in enumerate(n, Model::Endofunctions, &Budget::default()).unwrap() {
                let t = unisort_backward(&f).unwrap();
                assert_eq!(unisort_forward(&t), f);
            }
        }
        assert!(unisort_backward(&Endofunction::identity(0)).is_err());
    }

    #[test]
    fn four_node_spine_example() {
        // spine 5,2,4,3 from the extra leaf's parent to the root; labels
        // 1..5 internal, leaf 6 under 1, which hangs off 2, and 7 the extra leaf
        let parent = |v: usize| Some(v - 1);
        let tree = TwoSortTree::new(
            5,
            vec![parent(2), parent(4), None, parent(3), parent(2), parent(1), parent(5)],
        )
        .unwrap();
        let p = twosort_forward(&tree, 6).unwrap();
        let g: Vec<usize> = p.map().values().iter().map(|v| v + 1).collect();
        assert_eq!(g, vec![2, 5, 2, 4, 3, 1]);
        assert_eq!(p.roots(), vec![1, 2, 3, 4]);
        let (back, extra) = twosort_backward(&p).unwrap();
        assert_eq!((back, extra), (tree, 6));
    }

    #[test]
    fn single_root_with_extra_leaf() {
        let tree = TwoSortTree::new(1, vec![None, Some(0)]).unwrap();
        let p = twosort_forward(&tree, 1).unwrap();
        assert_eq!(p.map(), &Endofunction::identity(1));
        assert!(twosort_forward(&tree, 0).is_err());
    }
}
