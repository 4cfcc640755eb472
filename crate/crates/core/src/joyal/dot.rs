use std::fmt::Write;

use crate::oracle::{indegrees, Endofunction};

use super::{DoublyRootedTree, TwoSortTree};

fn node(out: &mut String, v: usize, filled: bool, extra: &str) {
    let style = if filled { "filled" } else { "solid" };
    writeln!(out, "  {} [style={style}{extra}];", v + 1).expect("writing to a String");
}

/// The functional digraph: one edge `v -> f(v)` per node, internal nodes
/// filled, leaves hollow.
pub fn digraph_dot(f: &Endofunction) -> String {
    let deg = indegrees(f.values());
    let mut out = String::from("digraph endofunction {\n  node [shape=circle, fillcolor=gray];\n");
    for v in 0..f.size() {
        node(&mut out, v, deg[v] > 0, "");
    }
    for (v, &w) in f.values().iter().enumerate() {
        writeln!(out, "  {} -> {};", v + 1, w + 1).expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

/// The tree with edges pointing toward the head; spine edges blue, tail and
/// head ringed. `filled[v]` picks the node style.
pub fn doubly_rooted_dot(t: &DoublyRootedTree, filled: &[bool]) -> String {
    let spine = t.spine();
    let toward_head = t.parents_toward(t.head());
    let mut out = String::from("digraph doubly_rooted {\n  node [shape=circle, fillcolor=gray];\n");
    for v in 0..t.size() {
        let mark = match (v == t.tail(), v == t.head()) {
            (true, true) => ", peripheries=2, xlabel=\"tail/head\"",
            (true, false) => ", peripheries=2, xlabel=\"tail\"",
            (false, true) => ", peripheries=2, xlabel=\"head\"",
            (false, false) => "",
        };
        node(&mut out, v, filled.get(v).copied().unwrap_or(false), mark);
    }
    for w in spine.windows(2) {
        writeln!(out, "  {} -> {} [color=blue];", w[0] + 1, w[1] + 1).expect("writing to a String");
    }
    for (v, p) in toward_head.iter().enumerate() {
        if let Some(p) = p {
            if !spine.contains(&v) {
                writeln!(out, "  {} -> {};", v + 1, p + 1).expect("writing to a String");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// A two-sort tree, edges toward the root; the path from `extra` is blue.
pub fn two_sort_tree_dot(t: &TwoSortTree, extra: Option<usize>) -> String {
    let mut on_path = vec![false; t.size()];
    if let Some(mut v) = extra {
        while let Some(p) = t.parent(v) {
            on_path[v] = true;
            v = p;
        }
    }
    let mut out = String::from("digraph two_sort {\n  node [shape=circle, fillcolor=gray];\n");
    for v in 0..t.size() {
        let mark = if Some(v) == extra { ", shape=square" } else { "" };
        node(&mut out, v, v < t.internal(), mark);
    }
    for v in 0..t.size() {
        if let Some(p) = t.parent(v) {
            let color = if on_path[v] && Some(v) != extra { " [color=blue]" } else { "" };
            writeln!(out, "  {} -> {}{color};", v + 1, p + 1).expect("writing to a String");
        }
    }
    out.push_str("}\n");
    out
}
