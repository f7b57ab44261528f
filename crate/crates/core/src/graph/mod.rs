//! 1-inclusion and 1,2-inclusion graphs of set families.
//!
//! Vertices are the sets of a family in canonical order; two sets are joined
//! when their symmetric difference has one element (`G1`) or one or two
//! elements (`G12`). The second kind of edge splits into vertical edges
//! (sizes differ by two) and horizontal edges (equal sizes).

mod clique;
mod export;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{GroundSet, SetFamily, SubsetWord};

pub use clique::{max_clique, CliqueSearch, DEFAULT_CLIQUE_BUDGET};
pub use export::{EdgeListDoc, EdgeDoc};

/// Largest family the generators will materialize.
pub const MAX_GENERATED_SETS: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// `|A Δ B| = 1`
    Hypercube,
    /// `|A Δ B| = 2`, `|A| ≠ |B|`
    Vertical,
    /// `|A Δ B| = 2`, `|A| = |B|`
    Horizontal,
}

impl EdgeKind {
    /// Kind of the pair, or `None` when the sets are not adjacent in `Q²`.
    pub fn of(a: SubsetWord, b: SubsetWord) -> Option<EdgeKind> {
        match (a ^ b).len() {
            1 => Some(EdgeKind::Hypercube),
            2 if a.len() != b.len() => Some(EdgeKind::Vertical),
            2 => Some(EdgeKind::Horizontal),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Hypercube => "hypercube",
            EdgeKind::Vertical => "vertical",
            EdgeKind::Horizontal => "horizontal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    /// Induced subgraph of the hypercube.
    G1,
    /// Induced subgraph of the square of the hypercube.
    G12,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionGraph {
    vertices: Vec<SubsetWord>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    mode: Mode,
}

/// Induced 1- or 1,2-inclusion graph of `fam`. Edges are listed in
/// lexicographic order of `(u, v)`, `u < v`.
pub fn build_graph(fam: &SetFamily, mode: Mode) -> InclusionGraph {
    let vertices = fam.sets().to_vec();
    let n = vertices.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            let Some(kind) = EdgeKind::of(vertices[u], vertices[v]) else {
                continue;
            };
            if mode == Mode::G1 && kind != EdgeKind::Hypercube {
                continue;
            }
            edges.push(Edge { u, v, kind });
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
    }
    InclusionGraph { vertices, edges, adjacency, mode }
}

impl InclusionGraph {
    pub fn vertices(&self) -> &[SubsetWord] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Number of edges of the given kind at `v`.
    pub fn kind_degree(&self, v: usize, kind: EdgeKind) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&w| EdgeKind::of(self.vertices[v], self.vertices[w]) == Some(kind))
            .count()
    }

    /// `|E| / |V|` in lowest terms; zero for the empty graph.
    pub fn density(&self) -> Ratio<u64> {
        if self.vertices.is_empty() {
            Ratio::from_integer(0)
        } else {
            Ratio::new(self.edges.len() as u64, self.vertices.len() as u64)
        }
    }

    /// Minimum-degree elimination. Ties go to the smallest vertex index, which
    /// is the smallest word.
    pub fn degeneracy(&self) -> Degeneracy {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut value = 0;
        while let Some((d, v)) = queue.pop_first() {
            value = value.max(d);
            removed[v] = true;
            order.push(v);
            for &w in &self.adjacency[v] {
                if !removed[w] {
                    queue.remove(&(deg[w], w));
                    deg[w] -= 1;
                    queue.insert((deg[w], w));
                }
            }
        }
        Degeneracy { value, order }
    }

    pub fn edge_list(&self) -> EdgeListDoc {
        EdgeListDoc::from_graph(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degeneracy {
    pub value: usize,
    /// Elimination order as vertex indices.
    pub order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CliqueOutcome {
    NotRequested,
    Found { size: usize, witness: Vec<usize> },
    BudgetExceeded { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub e: usize,
    pub density: Ratio<u64>,
    pub degeneracy: Degeneracy,
    pub clique: CliqueOutcome,
}

impl GraphStats {
    pub fn clique_number(&self) -> Option<usize> {
        match self.clique {
            CliqueOutcome::Found { size, .. } => Some(size),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "e": self.e,
            "density": ratio_string(self.density),
            "density_decimal": ratio_decimal(self.density),
            "degeneracy": self.degeneracy.value,
            "degeneracy_order": self.degeneracy.order.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "clique": match &self.clique {
                CliqueOutcome::Found { size, witness } => serde_json::json!({
                    "omega": size,
                    "witness": witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
                }),
                CliqueOutcome::NotRequested => serde_json::Value::Null,
                CliqueOutcome::BudgetExceeded { nodes } => serde_json::json!({
                    "omega": null,
                    "budget_exceeded_after": nodes,
                }),
            },
        })
    }
}

/// `p/q`, or just `p` for integers.
pub fn ratio_string(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Six-place decimal rendering.
pub fn ratio_decimal(r: Ratio<u64>) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

/// Size, density and degeneracy; the clique number only when asked for, with
/// `budget` search nodes at most.
pub fn graph_stats(g: &InclusionGraph, want_clique: bool, budget: u64) -> GraphStats {
    let clique = if want_clique {
        match max_clique(g, budget) {
            CliqueSearch::Found(witness) => CliqueOutcome::Found { size: witness.len(), witness },
            CliqueSearch::BudgetExceeded { nodes } => CliqueOutcome::BudgetExceeded { nodes },
        }
    } else {
        CliqueOutcome::NotRequested
    };
    GraphStats {
        n: g.n(),
        e: g.edge_count(),
        density: g.density(),
        degeneracy: g.degeneracy(),
        clique,
    }
}

/// Shape of a pointed clique of the halved cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CliqueClass {
    /// `∅` together with pairs drawn from the triangle on `{i, j, k}`,
    /// including all three pairs.
    Sporadic4 { i: usize, j: usize, k: usize },
    /// Every non-empty set is a pair through `center` (smallest such element).
    Star { center: usize },
    NotPointed,
    NotClique,
}

/// Classifies an even family whose 1,2-inclusion graph may be a clique.
pub fn classify_pointed_clique(fam: &SetFamily) -> Result<CliqueClass> {
    if let Some(odd) = fam.iter().find(|s| !s.is_even()) {
        return Err(Error::NotEvenFamily(odd.to_string()));
    }
    let sets = fam.sets();
    for (idx, &a) in sets.iter().enumerate() {
        for &b in &sets[idx + 1..] {
            if (a ^ b).len() != 2 {
                return Ok(CliqueClass::NotClique);
            }
        }
    }
    if !fam.is_pointed() {
        return Ok(CliqueClass::NotPointed);
    }
    // complete and pointed: every other set is a pair
    let pairs: Vec<SubsetWord> = fam.iter().filter(|s| !s.is_empty()).collect();
    let common = pairs.iter().fold(fam.ground().full(), |acc, &p| acc & p);
    if let Some(center) = common.min_element() {
        return Ok(CliqueClass::Star { center });
    }
    let support = pairs.iter().fold(SubsetWord::EMPTY, |acc, &p| acc | p);
    let v = support.to_vec();
    debug_assert_eq!(v.len(), 3, "pairwise-meeting pairs without a common element span a triangle");
    Ok(CliqueClass::Sporadic4 { i: v[0], j: v[1], k: v[2] })
}

/// All even subsets of `{1..m}`: the vertex set of the halved cube.
pub fn make_halved_cube(m: usize) -> Result<SetFamily> {
    let ground = GroundSet::new(m).map_err(|e| Error::BadParam(e.to_string()))?;
    if m > 1 + MAX_GENERATED_SETS.trailing_zeros() as usize {
        return Err(Error::BadParam(format!("halved cube on {m} elements is too large")));
    }
    let sets = (0..1u64 << (m - 1)).map(|k| {
        // bits 2..m from k, element 1 fixes the parity
        let rest = k << 1;
        SubsetWord::from_bits(rest | (rest.count_ones() as u64 & 1))
    });
    Ok(SetFamily::collect(ground, sets))
}

/// All `r`-subsets of `{1..m}`: the vertex set of the Johnson graph `J(r, m)`.
pub fn make_johnson(r: usize, m: usize) -> Result<SetFamily> {
    if r > m {
        return Err(Error::BadParam(format!("r={r} exceeds m={m}")));
    }
    let ground = GroundSet::new(m).map_err(|e| Error::BadParam(e.to_string()))?;
    let count = binomial(m as u64, r as u64);
    if count > MAX_GENERATED_SETS as u64 {
        return Err(Error::BadParam(format!("J({r},{m}) has {count} vertices")));
    }
    Ok(SetFamily::collect(ground, k_subsets(m, r)))
}

/// `r`-subsets of `{1..m}` in increasing word order (Gosper's hack).
pub(crate) fn k_subsets(m: usize, r: usize) -> impl Iterator<Item = SubsetWord> {
    let limit: u128 = 1u128 << m;
    let mut cur: Option<u128> = if r <= m { Some((1u128 << r) - 1) } else { None };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(SubsetWord::from_bits(c as u64))
    })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
