//! Classical shifting `φ_e`, double shifting `φ_ij`, their fixpoint
//! iterations, and recognition of bouquets of cubes and halved cubes.
//!
//! Every application is simultaneous: whether a set moves is decided against
//! the family as it was before the step.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetWord};
use crate::graph::{build_graph, EdgeKind, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ShiftKind {
    Classical { element: usize },
    Double { i: usize, j: usize },
}

impl ShiftKind {
    fn removed(self) -> SubsetWord {
        match self {
            ShiftKind::Classical { element } => SubsetWord::singleton(element),
            ShiftKind::Double { i, j } => SubsetWord::pair(i, j),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub kind: ShiftKind,
    /// `(old, new)` for every set that moved, in canonical order of `old`.
    pub moved: Vec<(SubsetWord, SubsetWord)>,
}

impl ShiftStep {
    pub fn is_effective(&self) -> bool {
        !self.moved.is_empty()
    }

    /// Applies the recorded moves to `fam`.
    pub fn replay(&self, fam: &SetFamily) -> Result<SetFamily> {
        let mut sets = fam.sets().to_vec();
        for &(old, new) in &self.moved {
            let idx = fam.index_of(old).ok_or_else(|| {
                Error::PreconditionViolated(format!("replayed set {old} is not in the family"))
            })?;
            sets[idx] = new;
        }
        SetFamily::new(fam.ground().clone(), sets)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let moved: Vec<_> = self.moved.iter().map(|(o, n)| json!([o.to_vec(), n.to_vec()])).collect();
        match self.kind {
            ShiftKind::Classical { element } => {
                json!({"kind": "classical", "element": element, "moved": moved})
            }
            ShiftKind::Double { i, j } => json!({"kind": "double", "pair": [i, j], "moved": moved}),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    pub initial: SetFamily,
    pub steps: Vec<ShiftStep>,
    pub final_family: SetFamily,
    /// `Σ|S|` before the first step and after each step.
    pub potential: Vec<usize>,
}

impl ShiftTrace {
    pub fn replay(&self) -> Result<SetFamily> {
        self.steps.iter().try_fold(self.initial.clone(), |f, s| s.replay(&f))
    }

    pub fn potential_strictly_decreasing(&self) -> bool {
        self.potential.windows(2).all(|w| w[1] < w[0])
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "initial": self.initial.to_json(),
            "steps": self.steps.iter().map(ShiftStep::to_json).collect::<Vec<_>>(),
            "final": self.final_family.to_json(),
            "potential": self.potential,
        })
    }
}

/// One simultaneous pass: `S` becomes `S ∖ removed` when `removed ⊆ S` and
/// `S ∖ removed ∉ fam`.
fn apply(fam: &SetFamily, kind: ShiftKind) -> (SetFamily, ShiftStep) {
    let removed = kind.removed();
    let mut moved = Vec::new();
    let sets: Vec<SubsetWord> = fam
        .iter()
        .map(|s| {
            let image = s - removed;
            if removed.is_subset_of(s) && !fam.contains(image) {
                moved.push((s, image));
                image
            } else {
                s
            }
        })
        .collect();
    let out = SetFamily::new(fam.ground().clone(), sets).expect("shifting never merges two sets");
    (out, ShiftStep { kind, moved })
}

fn check_element(fam: &SetFamily, e: usize) -> Result<()> {
    if e == 0 || e > fam.m() {
        Err(Error::BadElement { element: e, m: fam.m() })
    } else {
        Ok(())
    }
}

fn check_pointed_even(fam: &SetFamily) -> Result<()> {
    if !fam.is_pointed() {
        return Err(Error::PreconditionViolated("d-shifting needs a pointed family".into()));
    }
    if !fam.is_even() {
        return Err(Error::PreconditionViolated("d-shifting needs an even family".into()));
    }
    Ok(())
}

/// `φ_e`.
pub fn shift_classical(fam: &SetFamily, e: usize) -> Result<(SetFamily, ShiftStep)> {
    check_element(fam, e)?;
    Ok(apply(fam, ShiftKind::Classical { element: e }))
}

/// `φ_ij` on a pointed even family.
pub fn d_shift(fam: &SetFamily, i: usize, j: usize) -> Result<(SetFamily, ShiftStep)> {
    check_pointed_even(fam)?;
    check_element(fam, i)?;
    check_element(fam, j)?;
    if i == j {
        return Err(Error::PreconditionViolated(format!("d-shifting needs two distinct elements, got {i},{i}")));
    }
    let (i, j) = (i.min(j), i.max(j));
    Ok(apply(fam, ShiftKind::Double { i, j }))
}

fn run_to_fixpoint(fam: &SetFamily, kinds: &[ShiftKind]) -> ShiftTrace {
    let mut current = fam.clone();
    let mut steps = Vec::new();
    let mut potential = vec![fam.sum_sizes()];
    loop {
        let mut changed = false;
        for &kind in kinds {
            let (next, step) = apply(&current, kind);
            if step.is_effective() {
                potential.push(next.sum_sizes());
                steps.push(step);
                current = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    ShiftTrace { initial: fam.clone(), steps, final_family: current, potential }
}

/// Repeats sweeps over all pairs `i < j` in lexicographic order until a
/// sweep moves nothing.
pub fn complete_d_shift(fam: &SetFamily) -> Result<ShiftTrace> {
    check_pointed_even(fam)?;
    let m = fam.m();
    let pairs: Vec<ShiftKind> = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| ShiftKind::Double { i, j }))
        .collect();
    Ok(run_to_fixpoint(fam, &pairs))
}

/// Repeats sweeps over elements `1..=m` until a sweep moves nothing.
pub fn complete_classical_shift(fam: &SetFamily) -> ShiftTrace {
    let kinds: Vec<ShiftKind> = (1..=fam.m()).map(|element| ShiftKind::Classical { element }).collect();
    run_to_fixpoint(fam, &kinds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BouquetKind {
    /// Downward closed.
    CubeBouquet,
    /// Even and closed under taking even subsets.
    HalvedCubeBouquet,
    Neither,
}

pub fn is_cube_bouquet(fam: &SetFamily) -> bool {
    fam.iter().all(|s| s.elements().all(|e| fam.contains(s.without(e))))
}

/// Closure under removing any pair implies closure under all even subsets.
pub fn is_halved_cube_bouquet(fam: &SetFamily) -> bool {
    fam.is_even()
        && fam.iter().all(|s| {
            let v = s.to_vec();
            v.iter().enumerate().all(|(a, &x)| {
                v[a + 1..].iter().all(|&y| fam.contains(s - SubsetWord::pair(x, y)))
            })
        })
}

/// Even families are tested against the halved-cube condition first, so `{∅}`
/// reports as a halved-cube bouquet; use [`is_cube_bouquet`] for the other
/// reading.
pub fn bouquet_kind(fam: &SetFamily) -> BouquetKind {
    if is_halved_cube_bouquet(fam) {
        BouquetKind::HalvedCubeBouquet
    } else if is_cube_bouquet(fam) {
        BouquetKind::CubeBouquet
    } else {
        BouquetKind::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BouquetReport {
    pub d: usize,
    pub checks: Vec<Check>,
}

impl BouquetReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks the structural bounds a bouquet of halved cubes of
/// clique-VC-dimension `d` must satisfy.
pub fn check_bouquet_properties(fam: &SetFamily, d: usize) -> Result<BouquetReport> {
    if !is_halved_cube_bouquet(fam) {
        return Err(Error::PreconditionViolated("family is not a bouquet of halved cubes".into()));
    }
    let d_i = d as i64;
    let mut checks = Vec::new();

    let (worst_e, worst_pairs) = (1..=fam.m())
        .map(|e| (e, fam.iter().filter(|s| s.len() == 2 && s.contains(e)).count()))
        .max_by_key(|&(e, c)| (c, std::cmp::Reverse(e)))
        .unwrap_or((0, 0));
    checks.push(Check {
        name: "pairs_per_element".into(),
        pass: (worst_pairs as i64) < d_i,
        detail: format!("max pairs through one element = {worst_pairs} (element {worst_e}), bound {}", d_i - 1),
    });

    let max_size = fam.iter().map(SubsetWord::len).max().unwrap_or(0);
    checks.push(Check {
        name: "max_set_size".into(),
        pass: max_size <= d,
        detail: format!("max |S| = {max_size}, bound {d}"),
    });

    let maximal: Vec<SubsetWord> = fam
        .iter()
        .filter(|&s| !fam.iter().any(|t| t != s && s.is_subset_of(t)))
        .collect();
    let broken = maximal.iter().find(|&&s| {
        let rest = SetFamily::collect(fam.ground().clone(), fam.iter().filter(|&t| t != s));
        !is_halved_cube_bouquet(&rest)
    });
    checks.push(Check {
        name: "remove_maximal".into(),
        pass: broken.is_none(),
        detail: match broken {
            None => format!("{} maximal sets, each removable", maximal.len()),
            Some(s) => format!("removing {s} breaks the bouquet"),
        },
    });

    let g = build_graph(fam, Mode::G12);
    let violation = (0..g.n()).find_map(|v| {
        let size = g.vertices()[v].len() as i64;
        let horizontal = g.kind_degree(v, EdgeKind::Horizontal) as i64;
        let bound = size * (d_i - size);
        (horizontal > bound).then(|| format!("{} has {horizontal} horizontal edges, bound {bound}", g.vertices()[v]))
    });
    checks.push(Check {
        name: "horizontal_degree".into(),
        pass: violation.is_none(),
        detail: violation.unwrap_or_else(|| "every |S| = d-k has at most (d-k)k horizontal edges".into()),
    });

    Ok(BouquetReport { d, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_halved_cube;

    fn fam(m: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(m, lists).unwrap()
    }

    /// Literal reading of the definition, one set at a time.
    fn shift_by_definition(f: &SetFamily, removed: SubsetWord) -> SetFamily {
        SetFamily::collect(
            f.ground().clone(),
            f.iter().map(|s| {
                if removed.is_subset_of(s) && !f.sets().contains(&(s & !removed)) {
                    s & !removed
                } else {
                    s
                }
            }),
        )
    }

    #[test]
    fn classical_examples() {
        let (out, step) = shift_classical(&fam(2, &[&[1], &[1, 2]]), 1).unwrap();
        assert_eq!(out, fam(2, &[&[], &[2]]));
        assert_eq!(out, shift_by_definition(&fam(2, &[&[1], &[1, 2]]), SubsetWord::singleton(1)));
        assert_eq!(step.moved.len(), 2);

        let f = fam(1, &[&[], &[1]]);
        let (out, step) = shift_classical(&f, 1).unwrap();
        assert_eq!(out, f);
        assert!(!step.is_effective());

        let (out, _) = shift_classical(&fam(2, &[&[1, 2]]), 2).unwrap();
        assert_eq!(out, fam(2, &[&[1]]));

        assert!(matches!(shift_classical(&f, 2), Err(Error::BadElement { .. })));
    }

    #[test]
    fn double_examples() {
        let f = fam(4, &[&[], &[1, 2], &[1, 2, 3, 4]]);
        let (out, step) = d_shift(&f, 1, 2).unwrap();
        assert_eq!(out, fam(4, &[&[], &[1, 2], &[3, 4]]));
        assert_eq!(step.moved, vec![(SubsetWord::from_elements([1, 2, 3, 4]), SubsetWord::pair(3, 4))]);
        assert_eq!(build_graph(&f, Mode::G12).edge_count(), 2);
        assert_eq!(build_graph(&out, Mode::G12).edge_count(), 2);

        let f = fam(2, &[&[], &[1, 2]]);
        assert_eq!(d_shift(&f, 1, 2).unwrap().0, f);
        let f = fam(4, &[&[], &[3, 4]]);
        assert_eq!(d_shift(&f, 1, 2).unwrap().0, f);
    }

    #[test]
    fn double_preconditions() {
        assert!(matches!(
            d_shift(&fam(2, &[&[1, 2]]), 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            d_shift(&fam(2, &[&[], &[1]]), 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            d_shift(&fam(2, &[&[]]), 1, 1),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(complete_d_shift(&fam(2, &[&[1, 2]])).is_err());
    }

    #[test]
    fn complete_double_examples() {
        let t = complete_d_shift(&fam(4, &[&[], &[1, 2, 3, 4]])).unwrap();
        assert_eq!(t.final_family, fam(4, &[&[], &[3, 4]]));
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].kind, ShiftKind::Double { i: 1, j: 2 });
        assert_eq!(t.potential, vec![4, 2]);

        let s2 = fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]);
        let t = complete_d_shift(&s2).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.final_family, s2);

        let s1 = fam(3, &[&[], &[1, 2], &[1, 3]]);
        assert_eq!(complete_d_shift(&s1).unwrap().final_family, s1);
        assert_eq!(bouquet_kind(&s1), BouquetKind::HalvedCubeBouquet);
    }

    #[test]
    fn complete_classical_examples() {
        let t = complete_classical_shift(&fam(2, &[&[1, 2]]));
        assert_eq!(t.final_family, fam(2, &[&[]]));
        assert_eq!(t.potential, vec![2, 1, 0]);
        assert!(is_cube_bouquet(&t.final_family));

        let t = complete_classical_shift(&fam(2, &[&[], &[1], &[1, 2]]));
        assert_eq!(t.final_family, fam(2, &[&[], &[1], &[2]]));
        assert_eq!(bouquet_kind(&t.final_family), BouquetKind::CubeBouquet);

        let t = complete_classical_shift(&fam(1, &[&[]]));
        assert!(t.steps.is_empty());
    }

    #[test]
    fn trace_replays() {
        let f = fam(6, &[&[], &[1, 2, 3, 4], &[3, 4, 5, 6], &[1, 2, 5, 6], &[2, 3]]);
        let t = complete_d_shift(&f).unwrap();
        assert_eq!(t.replay().unwrap(), t.final_family);
        assert!(t.potential_strictly_decreasing());
        assert_eq!(t.steps.len() + 1, t.potential.len());
        assert!(is_halved_cube_bouquet(&t.final_family));
        let j = t.to_json();
        assert_eq!(j["steps"][0]["kind"], "double");
        assert_eq!(j["potential"][0], 14);
    }

    #[test]
    fn bouquet_kinds() {
        assert_eq!(
            bouquet_kind(&fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]])),
            BouquetKind::HalvedCubeBouquet
        );
        assert_eq!(bouquet_kind(&fam(4, &[&[], &[1, 2, 3, 4]])), BouquetKind::Neither);
        assert_eq!(bouquet_kind(&fam(2, &[&[], &[1], &[2]])), BouquetKind::CubeBouquet);
    }

    #[test]
    fn bouquet_property_examples() {
        let s2 = fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]);
        let r = check_bouquet_properties(&s2, 3).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.checks[0].detail, "max pairs through one element = 2 (element 1), bound 2");

        let r = check_bouquet_properties(&make_halved_cube(4).unwrap(), 4).unwrap();
        assert!(r.all_pass(), "{r:?}");
        // d smaller than the true dimension breaks the size bound
        let r = check_bouquet_properties(&make_halved_cube(4).unwrap(), 3).unwrap();
        assert!(!r.all_pass());

        assert!(check_bouquet_properties(&fam(1, &[&[]]), 1).unwrap().all_pass());
        assert!(check_bouquet_properties(&fam(4, &[&[], &[1, 2, 3, 4]]), 4).is_err());
    }

    #[test]
    fn halved_cube_horizontal_degree() {
        // every S in the even subsets of [4] has |S|(4-|S|) horizontal neighbours
        let s4 = make_halved_cube(4).unwrap();
        let g = build_graph(&s4, Mode::G12);
        for v in 0..g.n() {
            let s = g.vertices()[v].len();
            assert_eq!(g.kind_degree(v, EdgeKind::Horizontal), s * (4 - s));
        }
    }
}
