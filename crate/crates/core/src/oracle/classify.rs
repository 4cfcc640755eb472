use super::Endofunction;

/// The shape statistics of a functional digraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigraphProfile {
    pub size: usize,
    pub image_size: usize,
    pub is_cayley: bool,
    /// Nodes of positive indegree; equals `image_size`.
    pub internal_count: usize,
    pub leaf_count: usize,
    pub recurrent_count: usize,
    pub component_count: usize,
    /// Sorted ascending.
    pub cycle_lengths: Vec<usize>,
    pub fixed_point_count: usize,
    pub max_indegree_recurrent: usize,
    pub max_indegree_nonrecurrent: usize,
}

impl DigraphProfile {
    pub fn is_forest(&self) -> bool {
        self.cycle_lengths.iter().all(|&c| c == 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_point_count == 0
    }
}

/// Membership mask of the cycles: walk from each unvisited node until the
/// path meets itself (a new cycle) or something already settled.
pub fn recurrent_mask(f: &[usize]) -> Vec<bool> {
    const FRESH: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let n = f.len();
    let mut state = vec![FRESH; n];
    let mut recurrent = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut v = start;
        while state[v] == FRESH {
            state[v] = ON_PATH;
            path.push(v);
            v = f[v];
        }
        if state[v] == ON_PATH {
            let mut u = v;
            loop {
                recurrent[u] = true;
                u = f[u];
                if u == v {
                    break;
                }
            }
        }
        for &u in &path {
            state[u] = DONE;
        }
        path.clear();
    }
    recurrent
}

/// Cycles of the digraph, each listed from its smallest node along `f`,
/// ordered by smallest node.
pub fn cycles(f: &[usize]) -> Vec<Vec<usize>> {
    let recurrent = recurrent_mask(f);
    let mut seen = vec![false; f.len()];
    let mut out = Vec::new();
    for v in 0..f.len() {
        if recurrent[v] && !seen[v] {
            let mut cycle = Vec::new();
            let mut u = v;
            while !seen[u] {
                seen[u] = true;
                cycle.push(u);
                u = f[u];
            }
            out.push(cycle);
        }
    }
    out
}

pub fn indegrees(f: &[usize]) -> Vec<usize> {
    let mut deg = vec![0; f.len()];
    for &v in f {
        deg[v] += 1;
    }
    deg
}

pub fn classify(f: &Endofunction) -> DigraphProfile {
    classify_values(f.values())
}

pub(crate) fn classify_values(f: &[usize]) -> DigraphProfile {
    let n = f.len();
    let deg = indegrees(f);
    let image_size = deg.iter().filter(|&&d| d > 0).count();
    let is_cayley = deg[..image_size].iter().all(|&d| d > 0);
    let recurrent = recurrent_mask(f);

    let mut seen = vec![false; n];
    let mut cycle_lengths = Vec::new();
    for v in 0..n {
        if recurrent[v] && !seen[v] {
            let mut len = 0;
            let mut u = v;
            while !seen[u] {
                seen[u] = true;
                len += 1;
                u = f[u];
            }
            cycle_lengths.push(len);
        }
    }
    cycle_lengths.sort_unstable();

    let max_over = |want: bool| (0..n).filter(|&v| recurrent[v] == want).map(|v| deg[v]).max().unwrap_or(0);
    DigraphProfile {
        size: n,
        image_size,
        is_cayley,
        internal_count: image_size,
        leaf_count: n - image_size,
        recurrent_count: recurrent.iter().filter(|&&r| r).count(),
        component_count: cycle_lengths.len(),
        fixed_point_count: cycle_lengths.iter().take_while(|&&c| c == 1).count(),
        cycle_lengths,
        max_indegree_recurrent: max_over(true),
        max_indegree_nonrecurrent: max_over(false),
    }
}

/// The least `k` in `2..=kmax` with `f^(k) = f`.
pub fn idempotency_order(f: &Endofunction, kmax: usize) -> Option<usize> {
    let mut power = f.clone();
    for k in 2..=kmax {
        power = f.compose(&power);
        if &power == f {
            return Some(k);
        }
    }
    None
}

/// Does `f^(k) = f` hold?
pub fn is_periodic_at(f: &[usize], k: usize) -> bool {
    (0..f.len()).all(|v| {
        let mut u = v;
        for _ in 0..k {
            u = f[u];
        }
        u == f[v]
    })
}
