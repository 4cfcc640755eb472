use crate::error::{Error, Result};
use crate::oracle::{recurrent_mask, Endofunction};

/// An unrooted labeled tree on `0..size` with two distinguished nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoublyRootedTree {
    size: usize,
    /// Each edge as `(min, max)`, sorted.
    edges: Vec<(usize, usize)>,
    tail: usize,
    head: usize,
}

impl DoublyRootedTree {
    pub fn new(size: usize, edges: Vec<(usize, usize)>, tail: usize, head: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Structure("a tree has at least one node".into()));
        }
        if tail >= size || head >= size {
            return Err(Error::Structure("tail and head must be nodes of the tree".into()));
        }
        if edges.len() + 1 != size {
            return Err(Error::Structure(format!("{} edges cannot span {size} nodes", edges.len())));
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        if edges.iter().any(|&(a, b)| b >= size || a == b) {
            return Err(Error::Structure("edge endpoint out of range or a loop".into()));
        }
        let tree = DoublyRootedTree { size, edges, tail, head };
        if tree.parents_toward(head).iter().filter(|p| p.is_none()).count() != 1 {
            return Err(Error::Structure("edges do not form a connected tree".into()));
        }
        Ok(tree)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.size];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Parent of every node when the tree hangs from `root`; unreached
    /// nodes and the root get `None`.
    pub(crate) fn parents_toward(&self, root: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![None; self.size];
        let mut reached = vec![false; self.size];
        reached[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !reached[u] {
                    reached[u] = true;
                    parent[u] = Some(v);
                    stack.push(u);
                }
            }
        }
        parent
    }

    /// The path from tail to head.
    pub fn spine(&self) -> Vec<usize> {
        let parent = self.parents_toward(self.head);
        let mut path = vec![self.tail];
        let mut v = self.tail;
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    }
}

/// A rooted tree whose internal nodes are `0..internal` (sort X) and whose
/// leaves are `internal..size` (sort Y).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSortTree {
    internal: usize,
    parent: Vec<Option<usize>>,
}

impl TwoSortTree {
    pub fn new(internal: usize, parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if internal == 0 || internal > n {
            return Err(Error::Structure("the root is an internal node, so internal >= 1".into()));
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Structure(format!("expected one root, found {}", roots.len())));
        }
        if parent.iter().flatten().any(|&p| p >= n) {
            return Err(Error::Structure("parent out of range".into()));
        }
        let mut has_child = vec![false; n];
        for &p in parent.iter().flatten() {
            has_child[p] = true;
        }
        for v in 0..n {
            let is_x = v < internal;
            if !is_x && has_child[v] {
                return Err(Error::Structure(format!("leaf {} has children", v + 1)));
            }
            if is_x && !has_child[v] && n > 1 {
                return Err(Error::Structure(format!("internal node {} has no children", v + 1)));
            }
        }
        // every node reaches the root within n steps
        for v in 0..n {
            let mut u = v;
            let mut steps = 0;
            while let Some(p) = parent[u] {
                u = p;
                steps += 1;
                if steps > n {
                    return Err(Error::Structure("parent links contain a cycle".into()));
                }
            }
        }
        Ok(TwoSortTree { internal, parent })
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn internal(&self) -> usize {
        self.internal
    }

    pub fn leaves(&self) -> usize {
        self.size() - self.internal
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn root(&self) -> usize {
        self.parent.iter().position(Option::is_none).expect("validated")
    }
}

/// A nonempty family of two-sort trees whose roots are permuted.
///
/// Stored as its functional digraph on `0..size`: every non-root points to
/// its parent, every root to its image under the permutation. Internal
/// nodes are exactly `0..internal`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermOfTrees {
    internal: usize,
    map: Endofunction,
}

impl PermOfTrees {
    pub fn new(internal: usize, map: Endofunction) -> Result<Self> {
        if map.size() == 0 {
            return Err(Error::Structure("a permutation of trees is nonempty".into()));
        }
        let mut hit = vec![false; map.size()];
        map.values().iter().for_each(|&v| hit[v] = true);
        if hit.iter().filter(|&&h| h).count() != internal || !hit[..internal].iter().all(|&h| h) {
            return Err(Error::Structure(format!("internal nodes must be exactly 1..{internal}")));
        }
        Ok(PermOfTrees { internal, map })
    }

    pub fn internal(&self) -> usize {
        self.internal
    }

    pub fn leaves(&self) -> usize {
        self.map.size() - self.internal
    }

    pub fn map(&self) -> &Endofunction {
        &self.map
    }

    /// The permuted roots, ascending.
    pub fn roots(&self) -> Vec<usize> {
        let rec = recurrent_mask(self.map.values());
        (0..self.map.size()).filter(|&v| rec[v]).collect()
    }
}

/// Decodes a Prüfer sequence over `0..size` (`size - 2` entries) into the
/// sorted edge list of its tree.
pub fn prufer_decode(size: usize, code: &[usize]) -> Result<Vec<(usize, usize)>> {
    if size < 2 {
        return if code.is_empty() { Ok(Vec::new()) } else { Err(Error::Structure("code too long".into())) };
    }
    if code.len() + 2 != size || code.iter().any(|&c| c >= size) {
        return Err(Error::Structure(format!("not a Prüfer code for {size} nodes")));
    }
    let mut degree = vec![1usize; size];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(size - 1);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..size).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    for &c in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges.sort_unstable();
    Ok(edges)
}

/// Calls `visit` with the edge list of every labeled tree on `0..size`.
pub fn for_each_tree(size: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    if size == 0 {
        return;
    }
    if size == 1 {
        visit(&[]);
        return;
    }
    let len = size - 2;
    let mut code = vec![0; len];
    loop {
        visit(&prufer_decode(size, &code).expect("valid code"));
        let Some(p) = (0..len).rev().find(|&p| code[p] + 1 < size) else { return };
        code[p] += 1;
        code[p + 1..].fill(0);
    }
}

/// Calls `visit` on every two-sort tree with internal nodes `0..internal`
/// and leaves `internal..internal + leaves`.
pub fn for_each_two_sort_tree(internal: usize, leaves: usize, mut visit: impl FnMut(&TwoSortTree)) {
    let n = internal + leaves;
    if internal == 0 {
        return;
    }
    for_each_tree(n, |edges| {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for root in 0..internal {
            let mut parent = vec![None; n];
            let mut reached = vec![false; n];
            reached[root] = true;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !reached[u] {
                        reached[u] = true;
                        parent[u] = Some(v);
                        stack.push(u);
                    }
                }
            }
            if let Ok(t) = TwoSortTree::new(internal, parent) {
                visit(&t);
            }
        }
    });
}
