//! Shattering notions and the dimensions built on them.
//!
//! For an element `e` and a set `Y` with `e ∉ Y`, the *traces* of a family on
//! the cube `Q(e, Y)` are the sets `S ∩ (Y ∪ {e})` for the members `S` that
//! contain `e`. The pair `(e, Y)` is
//!
//! * **c-shattered** when some map `f` from traces onto the pairs
//!   `{e, y}, y ∈ Y` satisfies `f(Z) ⊆ Z`;
//! * **s-shattered** when every pair `{e, y}` is itself a trace.
//!
//! A map `f` as above exists iff every trace meets `Y` and a matching between
//! `Y` and the traces (edge `y – Z` when `y ∈ Z`) saturates `Y`: a surjection
//! restricted to one preimage per pair is such a matching, and a saturating
//! matching extends to a surjection by sending every unmatched trace to any
//! pair it contains. [`is_c_shattered`] decides the matching form.
//!
//! c-shattering is not monotone in `Y`: `{∅, {1,2}, {1,3}}` c-shatters
//! `(1, {2,3})` but not `(1, {2})`, because the trace `{1}` of `{1,3}` then
//! contains no pair. The clique-VC search therefore enumerates every
//! candidate `Y` up to the count bound instead of pruning by subsets.

pub mod certify;
mod matching;
mod search;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetWord};

pub(crate) use matching::Matcher;
pub use search::{two_vc_dim, vccdim_pointed, vccdim_star, vcd, vcsdim_pointed, vcsdim_star};

/// Limits for the exhaustive dimension searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest ground set the searches accept.
    pub max_ground: usize,
    /// Candidate sets examined per call.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_ground: 20, max_nodes: 1_000_000_000 }
    }
}

/// Traces of a family on `Q(e, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionContext {
    pub e: usize,
    pub y: SubsetWord,
    /// Distinct `S ∩ (Y ∪ {e})` over `S ∋ e`, ascending.
    pub traces: Vec<SubsetWord>,
}

fn check_pair(fam: &SetFamily, e: usize, y: SubsetWord) -> Result<()> {
    if e == 0 || e > fam.m() {
        return Err(Error::BadElement { element: e, m: fam.m() });
    }
    if !fam.ground().contains_word(y) {
        let element = (y - fam.ground().full()).min_element().unwrap_or(0);
        return Err(Error::BadElement { element, m: fam.m() });
    }
    if y.contains(e) {
        return Err(Error::BadPair(e));
    }
    Ok(())
}

fn require_pointed_even(fam: &SetFamily) -> Result<()> {
    if !fam.is_pointed() || !fam.is_even() {
        return Err(Error::PreconditionViolated(
            "clique-VC notions need a pointed even family".into(),
        ));
    }
    Ok(())
}

pub fn project(fam: &SetFamily, e: usize, y: SubsetWord) -> Result<ProjectionContext> {
    check_pair(fam, e, y)?;
    let window = y.with(e);
    let mut traces: Vec<SubsetWord> = fam.iter().filter(|s| s.contains(e)).map(|s| s & window).collect();
    traces.sort_unstable();
    traces.dedup();
    Ok(ProjectionContext { e, y, traces })
}

/// Certificate that `(e, Y)` is c-shattered: each trace with the element `y`
/// naming its image `{e, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CShatterWitness {
    pub e: usize,
    pub y: SubsetWord,
    pub assignment: Vec<(SubsetWord, usize)>,
}

impl CShatterWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "e": self.e,
            "y": self.y.to_vec(),
            "assignment": self.assignment.iter()
                .map(|(t, y)| json!({"trace": t.to_vec(), "pair": [self.e, *y]}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Decides c-shattering on precomputed traces (trace words may or may not
/// include `e`; only their part in `y` is read).
pub(crate) fn c_shatter_assignment(
    traces: &[SubsetWord],
    y: SubsetWord,
    matcher: &mut Matcher,
) -> Option<Vec<(SubsetWord, usize)>> {
    if y.is_empty() {
        return traces.is_empty().then(Vec::new);
    }
    if traces.len() < y.len() || traces.iter().any(|t| !t.intersects(y)) {
        return None;
    }
    let owner = matcher.saturate(y, traces)?;
    Some(
        traces
            .iter()
            .zip(owner)
            .map(|(&t, o)| (t, o.unwrap_or_else(|| (t & y).min_element().expect("trace meets Y"))))
            .collect(),
    )
}

pub fn is_c_shattered(fam: &SetFamily, e: usize, y: SubsetWord) -> Result<Option<CShatterWitness>> {
    require_pointed_even(fam)?;
    let ctx = project(fam, e, y)?;
    let mut matcher = Matcher::default();
    Ok(c_shatter_assignment(&ctx.traces, y, &mut matcher)
        .map(|assignment| CShatterWitness { e, y, assignment }))
}

/// Certificate that `(e, Y)` is s-shattered: for each `y`, a member meeting
/// `Y ∪ {e}` in exactly `{e, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SShatterWitness {
    pub e: usize,
    pub y: SubsetWord,
    pub per_y: Vec<(usize, SubsetWord)>,
}

impl SShatterWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "e": self.e,
            "y": self.y.to_vec(),
            "sets": self.per_y.iter().map(|(y, s)| json!({"y": y, "set": s.to_vec()})).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn s_shatter_sets(sets: &[SubsetWord], e: usize, y: SubsetWord) -> Option<Vec<(usize, SubsetWord)>> {
    let window = y.with(e);
    y.elements()
        .map(|yy| {
            let target = SubsetWord::pair(e, yy);
            sets.iter().find(|&&s| s & window == target).map(|&s| (yy, s))
        })
        .collect()
}

pub fn is_s_shattered(fam: &SetFamily, e: usize, y: SubsetWord) -> Result<Option<SShatterWitness>> {
    check_pair(fam, e, y)?;
    Ok(s_shatter_sets(fam.sets(), e, y).map(|per_y| SShatterWitness { e, y, per_y }))
}

/// Classical shattering certificate: a member for every trace `Y' ⊆ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterWitness {
    pub y: SubsetWord,
    pub per_subset: Vec<(SubsetWord, SubsetWord)>,
}

impl ShatterWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "y": self.y.to_vec(),
            "sets": self.per_subset.iter()
                .map(|(t, s)| json!({"trace": t.to_vec(), "set": s.to_vec()}))
                .collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn shatter_sets(sets: &[SubsetWord], y: SubsetWord) -> Option<Vec<(SubsetWord, SubsetWord)>> {
    if sets.len() < 1usize << y.len().min(63) {
        return None;
    }
    let mut seen: Vec<(SubsetWord, SubsetWord)> = Vec::with_capacity(1 << y.len());
    for &s in sets {
        let t = s & y;
        if !seen.iter().any(|(u, _)| *u == t) {
            seen.push((t, s));
        }
    }
    if seen.len() == 1 << y.len() {
        seen.sort_unstable();
        Some(seen)
    } else {
        None
    }
}

pub fn is_shattered(fam: &SetFamily, y: SubsetWord) -> Option<ShatterWitness> {
    shatter_sets(fam.sets(), y).map(|per_subset| ShatterWitness { y, per_subset })
}

/// Certificate that every pair of `Y` is a trace `Y ∩ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoShatterWitness {
    pub y: SubsetWord,
    pub per_pair: Vec<(SubsetWord, SubsetWord)>,
}

impl TwoShatterWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "y": self.y.to_vec(),
            "sets": self.per_pair.iter()
                .map(|(p, s)| json!({"pair": p.to_vec(), "set": s.to_vec()}))
                .collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn two_shatter_sets(sets: &[SubsetWord], y: SubsetWord) -> Option<Vec<(SubsetWord, SubsetWord)>> {
    let v = y.to_vec();
    let mut out = Vec::new();
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            let p = SubsetWord::pair(a, b);
            let s = sets.iter().find(|&&s| s & y == p)?;
            out.push((p, *s));
        }
    }
    Some(out)
}

pub fn is_two_shattered(fam: &SetFamily, y: SubsetWord) -> Option<TwoShatterWitness> {
    two_shatter_sets(fam.sets(), y).map(|per_pair| TwoShatterWitness { y, per_pair })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vcd {
    pub value: usize,
    pub witness: ShatterWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vccdim {
    pub value: usize,
    /// `None` only when the value is the 0 floor.
    pub witness: Option<CShatterWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VccdimStar {
    pub value: usize,
    /// Member `A` minimizing the clique-VC-dimension of the twist.
    pub twist: SubsetWord,
    /// Whether the twist was taken in the lifted family.
    pub lifted: bool,
    pub witness: Option<CShatterWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vcsdim {
    pub value: usize,
    pub witness: SShatterWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcsdimStar {
    pub value: usize,
    /// Member `A` maximizing the star-VC-dimension of the twist.
    pub twist: SubsetWord,
    pub witness: SShatterWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVc {
    /// Largest 2-shattered `Y` with at least two elements, 0 if none.
    pub value: usize,
    pub witness: Option<TwoShatterWitness>,
}

/// Every dimension of one family, with witnesses. Values that are not
/// defined for the family's kind are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub vcd: Vcd,
    pub vccdim: Option<Vccdim>,
    pub vccdim_star: VccdimStar,
    pub vcsdim: Option<Vcsdim>,
    pub vcsdim_star: VcsdimStar,
    pub two_vc: TwoVc,
}

impl DimensionReport {
    pub fn compute(fam: &SetFamily, budget: &SearchBudget) -> Result<Self> {
        if fam.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let vccdim = if fam.is_pointed() && fam.is_even() {
            Some(vccdim_pointed(fam, budget)?)
        } else {
            None
        };
        let vcsdim = if fam.is_pointed() { Some(vcsdim_pointed(fam, budget)?) } else { None };
        Ok(DimensionReport {
            vcd: vcd(fam, budget)?,
            vccdim,
            vccdim_star: vccdim_star(fam, budget)?,
            vcsdim,
            vcsdim_star: vcsdim_star(fam, budget)?,
            two_vc: two_vc_dim(fam, budget)?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vcd": self.vcd.value,
            "vccdim": self.vccdim.as_ref().map(|d| d.value),
            "vccdim_star": self.vccdim_star.value,
            "vccdim_star_twist": self.vccdim_star.twist.to_vec(),
            "vccdim_star_lifted": self.vccdim_star.lifted,
            "vcsdim": self.vcsdim.as_ref().map(|d| d.value),
            "vcsdim_star": self.vcsdim_star.value,
            "vcsdim_star_twist": self.vcsdim_star.twist.to_vec(),
            "two_vc": self.two_vc.value,
            "witnesses": {
                "vcd": self.vcd.witness.to_json(),
                "vccdim": self.vccdim.as_ref().and_then(|d| d.witness.as_ref()).map(CShatterWitness::to_json),
                "vccdim_star": self.vccdim_star.witness.as_ref().map(CShatterWitness::to_json),
                "vcsdim": self.vcsdim.as_ref().map(|d| d.witness.to_json()),
                "vcsdim_star": self.vcsdim_star.witness.to_json(),
                "two_vc": self.two_vc.witness.as_ref().map(TwoShatterWitness::to_json),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(m: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(m, lists).unwrap()
    }

    fn w(v: &[usize]) -> SubsetWord {
        SubsetWord::from_elements(v.iter().copied())
    }

    #[test]
    fn projection_examples() {
        let f = fam(4, &[&[], &[1, 2], &[1, 2, 3, 4]]);
        let ctx = project(&f, 1, w(&[2, 3])).unwrap();
        assert_eq!(ctx.traces, vec![w(&[1, 2]), w(&[1, 2, 3])]);
        let ctx = project(&fam(3, &[&[], &[2, 3]]), 1, w(&[2])).unwrap();
        assert!(ctx.traces.is_empty());
        assert_eq!(project(&f, 1, w(&[1, 2])), Err(Error::BadPair(1)));
        assert!(matches!(project(&f, 5, w(&[2])), Err(Error::BadElement { .. })));
    }

    #[test]
    fn c_shatter_examples() {
        let s2 = fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]);
        let wit = is_c_shattered(&s2, 1, w(&[2, 3])).unwrap().unwrap();
        assert_eq!(wit.assignment, vec![(w(&[1, 2]), 2), (w(&[1, 3]), 3)]);

        assert_eq!(is_c_shattered(&fam(3, &[&[], &[1, 2]]), 1, w(&[2, 3])).unwrap(), None);
        assert!(matches!(
            is_c_shattered(&fam(3, &[&[1, 2]]), 1, w(&[2])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn c_shatter_is_not_monotone() {
        let f = fam(3, &[&[], &[1, 2], &[1, 3]]);
        assert!(is_c_shattered(&f, 1, w(&[2, 3])).unwrap().is_some());
        assert!(is_c_shattered(&f, 1, w(&[2])).unwrap().is_none());
    }

    #[test]
    fn empty_y_convention() {
        // (e, ∅) is c-shattered iff no member contains e
        let f = fam(3, &[&[], &[1, 2]]);
        assert!(is_c_shattered(&f, 3, SubsetWord::EMPTY).unwrap().is_some());
        assert!(is_c_shattered(&f, 1, SubsetWord::EMPTY).unwrap().is_none());
        // s-shattering with Y = ∅ is vacuous
        assert!(is_s_shattered(&f, 1, SubsetWord::EMPTY).unwrap().is_some());
    }

    #[test]
    fn s_shatter_examples() {
        let f = fam(3, &[&[], &[1, 2]]);
        assert_eq!(is_s_shattered(&f, 1, w(&[2, 3])).unwrap(), None);
        assert!(is_s_shattered(&f, 1, w(&[2])).unwrap().is_some());
    }

    #[test]
    fn classical_and_two_shattering() {
        let s2 = fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_shattered(&s2, w(&[1, 2])).is_some());
        assert!(is_shattered(&s2, w(&[1, 2, 3])).is_none());
        assert!(is_shattered(&s2, SubsetWord::EMPTY).is_some());
        assert!(is_two_shattered(&s2, w(&[1, 2, 3])).is_some());
        let s0 = fam(3, &[&[1], &[2], &[3]]);
        assert!(is_two_shattered(&s0, w(&[1, 2])).is_none());
    }
}
