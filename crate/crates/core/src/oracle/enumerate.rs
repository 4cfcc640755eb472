use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Endofunction;

/// Which maps an enumeration ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// All `n^n` maps.
    Endofunctions,
    /// Maps with image `[k]` for some `k`.
    Cayley,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Endofunctions => "endofunctions",
            Model::Cayley => "cayley",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "endofunctions" | "end" => Ok(Model::Endofunctions),
            "cayley" | "cay" => Ok(Model::Cayley),
            _ => Err(Error::Parse(format!("unknown model `{s}`"))),
        }
    }
}

/// Largest sizes enumerated without an explicit override.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub endofunctions: usize,
    pub cayley: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { endofunctions: 8, cayley: 9 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { endofunctions: usize::MAX, cayley: usize::MAX }
    }

    pub fn check(&self, n: usize, model: Model) -> Result<()> {
        let budget = match model {
            Model::Endofunctions => self.endofunctions,
            Model::Cayley => self.cayley,
        };
        if n > budget {
            return Err(Error::BudgetExceeded { n, budget, model: model.name() });
        }
        Ok(())
    }
}

/// Lexicographic successor among all maps; `false` after the last one.
fn next_endofunction(f: &mut [usize]) -> bool {
    let n = f.len();
    for p in (0..n).rev() {
        if f[p] + 1 < n {
            f[p] += 1;
            f[p + 1..].fill(0);
            return true;
        }
    }
    false
}

/// Tracks which values a prefix uses, to decide whether it still extends
/// to a map with image `{0, ..., k-1}`.
struct Footprint {
    counts: Vec<usize>,
}

impl Footprint {
    fn of(prefix: &[usize], n: usize) -> Self {
        let mut counts = vec![0; n];
        for &v in prefix {
            counts[v] += 1;
        }
        Footprint { counts }
    }

    /// Can the prefix plus `v` be completed with `remaining` more values?
    fn admits(&self, v: usize, remaining: usize) -> bool {
        let top = self.counts.iter().rposition(|&c| c > 0).map_or(v, |m| m.max(v));
        let missing = (0..=top).filter(|&x| x != v && self.counts[x] == 0).count();
        missing <= remaining
    }

    fn add(&mut self, v: usize) {
        self.counts[v] += 1;
    }

    fn remove(&mut self, v: usize) {
        self.counts[v] -= 1;
    }
}

/// Overwrites `f[from..]` with the smallest admissible completion.
fn fill_cayley(f: &mut [usize], from: usize, footprint: &mut Footprint) {
    let n = f.len();
    for q in from..n {
        let v = (0..n).find(|&v| footprint.admits(v, n - q - 1)).expect("a completion always exists");
        f[q] = v;
        footprint.add(v);
    }
}

/// Lexicographic successor among maps with image `[k]`.
fn next_cayley(f: &mut [usize]) -> bool {
    let n = f.len();
    let mut footprint = Footprint::of(f, n);
    for p in (0..n).rev() {
        footprint.remove(f[p]);
        if let Some(v) = (f[p] + 1..n).find(|&v| footprint.admits(v, n - p - 1)) {
            f[p] = v;
            footprint.add(v);
            fill_cayley(f, p + 1, &mut footprint);
            return true;
        }
    }
    false
}

fn first(n: usize, model: Model, head: Option<usize>) -> Option<Vec<usize>> {
    let mut f = vec![0; n];
    if let Some(v) = head {
        if n == 0 || v >= n {
            return None;
        }
        if model == Model::Cayley {
            let mut footprint = Footprint::of(&[], n);
            if !footprint.admits(v, n - 1) {
                return None;
            }
            f[0] = v;
            footprint.add(v);
            fill_cayley(&mut f, 1, &mut footprint);
        } else {
            f[0] = v;
        }
    }
    Some(f)
}

/// Calls `visit` on every map of the model in lexicographic order of
/// one-based words. With `head = Some(v)` only maps sending the first
/// point to `v` are visited; these blocks partition the search space.
///
/// Cayley permutations are built value by value, each prefix kept
/// extendable to an image `[k]`, so no map is generated and then rejected.
pub fn visit(n: usize, model: Model, head: Option<usize>, mut visit: impl FnMut(&[usize])) {
    let Some(mut f) = first(n, model, head) else { return };
    loop {
        visit(&f);
        let more = match model {
            Model::Endofunctions => next_endofunction(&mut f),
            Model::Cayley => next_cayley(&mut f),
        };
        if !more || (head.is_some() && Some(f[0]) != head) {
            return;
        }
    }
}

/// Streams the maps of the model in lexicographic order.
pub struct Enumeration {
    current: Option<Vec<usize>>,
    model: Model,
}

impl Iterator for Enumeration {
    type Item = Endofunction;

    fn next(&mut self) -> Option<Endofunction> {
        let f = self.current.as_mut()?;
        let out = Endofunction::new(f.clone()).expect("values in range");
        let more = match self.model {
            Model::Endofunctions => next_endofunction(f),
            Model::Cayley => next_cayley(f),
        };
        if !more {
            self.current = None;
        }
        Some(out)
    }
}

/// All maps of the model on `[n]`, subject to `budget`.
pub fn enumerate(n: usize, model: Model, budget: &Budget) -> Result<Enumeration> {
    budget.check(n, model)?;
    Ok(Enumeration { current: first(n, model, None), model })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize, model: Model) -> Vec<String> {
        enumerate(n, model, &Budget::default()).unwrap().map(|f| f.to_word()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(words(2, Model::Cayley), vec!["11", "12", "21"]);
        assert_eq!(words(0, Model::Endofunctions), vec![""]);
        assert_eq!(words(0, Model::Cayley), vec![""]);
        assert_eq!(words(3, Model::Endofunctions).len(), 27);
        assert_eq!(words(1, Model::Cayley), vec!["1"]);
    }

    #[test]
    fn cayley_is_the_filtered_sublist() {
        for n in 0..=5 {
            let filtered: Vec<String> = enumerate(n, Model::Endofunctions, &Budget::default())
                .unwrap()
                .filter(|f| {
                    let mut seen = vec![false; n];
                    f.values().iter().for_each(|&v| seen[v] = true);
                    let k = seen.iter().filter(|&&s| s).count();
                    seen[..k].iter().all(|&s| s)
                })
                .map(|f| f.to_word())
                .collect();
            assert_eq!(words(n, Model::Cayley), filtered);
        }
    }

    #[test]
    fn heads_partition_the_space() {
        for model in [Model::Endofunctions, Model::Cayley] {
            let all = words(5, model);
            let mut joined = Vec::new();
            for v in 0..5 {
                visit(5, model, Some(v), |f| joined.push(Endofunction::new(f.to_vec()).unwrap().to_word()));
            }
            assert_eq!(joined, all);
        }
    }

    #[test]
    fn budgets() {
        assert!(matches!(enumerate(9, Model::Endofunctions, &Budget::default()), Err(Error::BudgetExceeded { .. })));
        assert!(enumerate(9, Model::Cayley, &Budget::default()).is_ok());
        assert!(enumerate(10, Model::Cayley, &Budget::unlimited()).is_ok());
    }
}
