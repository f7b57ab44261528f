//! Exact maximum clique by pivoting branch and bound over bitsets.

use super::InclusionGraph;

pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueSearch {
    /// A maximum clique, vertex indices ascending.
    Found(Vec<usize>),
    BudgetExceeded { nodes: u64 },
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: Bits, mut excl: Bits) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if cand.is_empty() {
            if clique.len() > self.best.len() {
                self.best = clique.clone();
            }
            return true;
        }
        if clique.len() + cand.count() <= self.best.len() {
            return true;
        }
        // pivot: vertex of cand ∪ excl with most neighbours in cand
        let pivot = cand
            .iter()
            .chain(excl.iter())
            .max_by_key(|&u| (self.adj[u].and_count(&cand), std::cmp::Reverse(u)))
            .expect("cand is non-empty");
        let branch = cand.and_not(&self.adj[pivot]);
        for v in branch.iter() {
            if clique.len() + cand.count() <= self.best.len() {
                break;
            }
            clique.push(v);
            let ok = self.expand(clique, cand.and(&self.adj[v]), excl.and(&self.adj[v]));
            clique.pop();
            if !ok {
                return false;
            }
            cand.clear(v);
            excl.set(v);
        }
        true
    }
}

/// Maximum clique of `g`, or a budget failure after `budget` search nodes.
pub fn max_clique(g: &InclusionGraph, budget: u64) -> CliqueSearch {
    let n = g.n();
    if n == 0 {
        return CliqueSearch::Found(Vec::new());
    }
    let adj: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::empty(n);
            for &w in g.neighbors(v) {
                b.set(w);
            }
            b
        })
        .collect();
    let mut cand = Bits::empty(n);
    for v in 0..n {
        cand.set(v);
    }
    let mut search = Search { adj: &adj, best: Vec::new(), nodes: 0, budget };
    if search.expand(&mut Vec::new(), cand, Bits::empty(n)) {
        let mut best = search.best;
        best.sort_unstable();
        CliqueSearch::Found(best)
    } else {
        CliqueSearch::BudgetExceeded { nodes: search.nodes - 1 }
    }
}
