//! Exhaustive searches behind each dimension.

use super::{
    c_shatter_assignment, require_pointed_even, s_shatter_sets, shatter_sets, two_shatter_sets,
    CShatterWitness, Matcher, SShatterWitness, SearchBudget, ShatterWitness, TwoShatterWitness, TwoVc, Vccdim,
    VccdimStar, Vcd, Vcsdim, VcsdimStar,
};
use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetWord};
use crate::graph::k_subsets;

struct Counter {
    nodes: u64,
    max_nodes: u64,
    what: &'static str,
}

impl Counter {
    fn new(budget: &SearchBudget, what: &'static str) -> Self {
        Counter { nodes: 0, max_nodes: budget.max_nodes, what }
    }

    fn tick(&mut self, lower_bound: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudgetExceeded {
                reason: format!("{} search examined {} candidates", self.what, self.max_nodes),
                lower_bound,
            });
        }
        Ok(())
    }
}

fn check_ground(fam: &SetFamily, budget: &SearchBudget, what: &str) -> Result<()> {
    if fam.m() > budget.max_ground {
        return Err(Error::SearchBudgetExceeded {
            reason: format!("{what} search limited to {} elements, family has {}", budget.max_ground, fam.m()),
            lower_bound: 0,
        });
    }
    Ok(())
}

/// Spreads the low bits of `mask` onto `elems`.
fn spread(mask: SubsetWord, elems: &[usize]) -> SubsetWord {
    mask.elements().fold(SubsetWord::EMPTY, |acc, i| acc.with(elems[i - 1]))
}

/// Largest `|Y| + 1` over c-shattered `(e, Y)`. Stops as soon as the value
/// reaches `stop_at`; a returned value below `stop_at` is exact.
fn vccdim_search(fam: &SetFamily, stop_at: usize, budget: &SearchBudget) -> Result<Vccdim> {
    check_ground(fam, budget, "clique-VC")?;
    let mut counter = Counter::new(budget, "clique-VC");
    let mut matcher = Matcher::default();
    let mut traces: Vec<SubsetWord> = Vec::new();
    let mut best = Vccdim { value: 0, witness: None };
    for e in 1..=fam.m() {
        if best.value >= stop_at {
            break;
        }
        let containing: Vec<SubsetWord> = fam.iter().filter(|s| s.contains(e)).map(|s| s.without(e)).collect();
        if containing.is_empty() {
            if best.value < 1 {
                best = Vccdim {
                    value: 1,
                    witness: Some(CShatterWitness { e, y: SubsetWord::EMPTY, assignment: Vec::new() }),
                };
            }
            continue;
        }
        // |Y| is bounded by the number of members through e (one trace each)
        // and Y can only use elements that occur next to e.
        let elems = containing.iter().fold(SubsetWord::EMPTY, |a, &s| a | s).to_vec();
        let top = containing.len().min(elems.len());
        'sizes: for size in (best.value.max(1)..=top).rev() {
            for mask in k_subsets(elems.len(), size) {
                counter.tick(best.value)?;
                let y = spread(mask, &elems);
                traces.clear();
                let mut total = true;
                for &s in &containing {
                    let t = s & y;
                    if t.is_empty() {
                        total = false;
                        break;
                    }
                    traces.push(t);
                }
                if !total {
                    continue;
                }
                traces.sort_unstable();
                traces.dedup();
                if traces.len() < size || !matcher.saturates(y, &traces) {
                    continue;
                }
                let assignment = c_shatter_assignment(&traces, y, &mut matcher)
                    .expect("saturating matching")
                    .into_iter()
                    .map(|(t, yy)| (t.with(e), yy))
                    .collect();
                best = Vccdim { value: size + 1, witness: Some(CShatterWitness { e, y, assignment }) };
                break 'sizes;
            }
        }
    }
    Ok(best)
}

/// Clique-VC-dimension of a pointed even family.
pub fn vccdim_pointed(fam: &SetFamily, budget: &SearchBudget) -> Result<Vccdim> {
    require_pointed_even(fam)?;
    vccdim_search(fam, usize::MAX, budget)
}

/// Minimum clique-VC-dimension over twists by members; odd families are
/// lifted first.
pub fn vccdim_star(fam: &SetFamily, budget: &SearchBudget) -> Result<VccdimStar> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let lifted = !fam.is_even();
    let base = if lifted { fam.lift()? } else { fam.clone() };
    let mut best: Option<VccdimStar> = None;
    for a in base.iter() {
        let stop_at = best.as_ref().map_or(usize::MAX, |b| b.value);
        let twisted = base.twist(a);
        let found = vccdim_search(&twisted, stop_at, budget)?;
        if found.value < stop_at {
            best = Some(VccdimStar { value: found.value, twist: a, lifted, witness: found.witness });
        }
        if best.as_ref().is_some_and(|b| b.value == 0) {
            break;
        }
    }
    Ok(best.expect("non-empty family"))
}

/// Depth-first search for a largest set satisfying a subset-closed predicate.
struct MonotoneMax<'a, P> {
    elems: &'a [usize],
    pred: P,
    cap: usize,
    best: SubsetWord,
    counter: Counter,
}

impl<P: FnMut(SubsetWord) -> bool> MonotoneMax<'_, P> {
    fn run(&mut self, y: SubsetWord, from: usize) -> Result<()> {
        if y.len() >= self.cap {
            return Ok(());
        }
        for idx in from..self.elems.len() {
            if y.len() + (self.elems.len() - idx) <= self.best.len() {
                break;
            }
            self.counter.tick(self.best.len())?;
            let z = y.with(self.elems[idx]);
            if (self.pred)(z) {
                if z.len() > self.best.len() {
                    self.best = z;
                }
                self.run(z, idx + 1)?;
            }
        }
        Ok(())
    }
}

fn monotone_max<P: FnMut(SubsetWord) -> bool>(
    elems: &[usize],
    cap: usize,
    floor: SubsetWord,
    pred: P,
    counter: Counter,
) -> Result<(SubsetWord, Counter)> {
    let mut s = MonotoneMax { elems, pred, cap, best: floor, counter };
    s.run(SubsetWord::EMPTY, 0)?;
    Ok((s.best, s.counter))
}

/// Classical VC-dimension.
pub fn vcd(fam: &SetFamily, budget: &SearchBudget) -> Result<Vcd> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    check_ground(fam, budget, "VC")?;
    let elems: Vec<usize> = (1..=fam.m()).collect();
    let cap = fam.len().ilog2() as usize;
    let sets = fam.sets();
    let (y, _) = monotone_max(
        &elems,
        cap,
        SubsetWord::EMPTY,
        |y| shatter_sets(sets, y).is_some(),
        Counter::new(budget, "VC"),
    )?;
    let per_subset = shatter_sets(sets, y).expect("search result is shattered");
    Ok(Vcd { value: y.len(), witness: ShatterWitness { y, per_subset } })
}

/// Best s-shattered `Y` for `e` with more than `floor` elements.
fn vcsdim_for(fam: &SetFamily, e: usize, floor: usize, counter: Counter) -> Result<(Option<SubsetWord>, Counter)> {
    let sets = fam.sets();
    let containing = fam.iter().filter(|s| s.contains(e)).count();
    let elems: Vec<usize> = fam
        .iter()
        .filter(|s| s.contains(e))
        .fold(SubsetWord::EMPTY, |a, s| a | s)
        .without(e)
        .to_vec();
    if elems.len() <= floor || containing <= floor {
        return Ok((None, counter));
    }
    let mut best: Option<SubsetWord> = None;
    let mut s = MonotoneMax {
        elems: &elems,
        pred: |y: SubsetWord| s_shatter_sets(sets, e, y).is_some(),
        cap: containing,
        // placeholder of length `floor`: only strictly larger sets are recorded
        best: SubsetWord::full(floor),
        counter,
    };
    s.run(SubsetWord::EMPTY, 0)?;
    if s.best.len() > floor {
        best = Some(s.best);
    }
    Ok((best, s.counter))
}

fn vcsdim_search(fam: &SetFamily, above: Option<usize>, budget: &SearchBudget) -> Result<Option<Vcsdim>> {
    check_ground(fam, budget, "star-VC")?;
    let mut counter = Counter::new(budget, "star-VC");
    // Y = ∅ is s-shattered for every e
    let mut best = Vcsdim { value: 1, witness: SShatterWitness { e: 1, y: SubsetWord::EMPTY, per_y: Vec::new() } };
    let mut floor_value = above.unwrap_or(0).max(1);
    for e in 1..=fam.m() {
        let (found, c) = vcsdim_for(fam, e, floor_value - 1, counter)?;
        counter = c;
        if let Some(y) = found {
            let per_y = s_shatter_sets(fam.sets(), e, y).expect("search result is s-shattered");
            best = Vcsdim { value: y.len() + 1, witness: SShatterWitness { e, y, per_y } };
            floor_value = best.value;
        }
    }
    Ok(match above {
        Some(a) if best.value <= a => None,
        _ => Some(best),
    })
}

/// Star-VC-dimension of a pointed family.
pub fn vcsdim_pointed(fam: &SetFamily, budget: &SearchBudget) -> Result<Vcsdim> {
    if !fam.is_pointed() {
        return Err(Error::PreconditionViolated("star-VC-dimension needs a pointed family".into()));
    }
    Ok(vcsdim_search(fam, None, budget)?.expect("unbounded search returns a value"))
}

/// Maximum star-VC-dimension over twists by members.
pub fn vcsdim_star(fam: &SetFamily, budget: &SearchBudget) -> Result<VcsdimStar> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut best: Option<VcsdimStar> = None;
    for a in fam.iter() {
        let above = best.as_ref().map(|b| b.value);
        if let Some(found) = vcsdim_search(&fam.twist(a), above, budget)? {
            best = Some(VcsdimStar { value: found.value, twist: a, witness: found.witness });
        }
    }
    Ok(best.expect("non-empty family"))
}

/// Largest 2-shattered set with at least two elements; 0 if no pair is
/// contained in a member.
pub fn two_vc_dim(fam: &SetFamily, budget: &SearchBudget) -> Result<TwoVc> {
    check_ground(fam, budget, "2VC")?;
    let sets = fam.sets();
    let elems: Vec<usize> = (1..=fam.m()).collect();
    // C(|Y|, 2) distinct members are needed
    let mut cap = 0;
    while cap * (cap + 1) / 2 <= fam.len() {
        cap += 1;
    }
    let (y, _) = monotone_max(
        &elems,
        cap,
        SubsetWord::EMPTY,
        |y| two_shatter_sets(sets, y).is_some(),
        Counter::new(budget, "2VC"),
    )?;
    if y.len() < 2 {
        return Ok(TwoVc { value: 0, witness: None });
    }
    let per_pair = two_shatter_sets(sets, y).expect("search result is 2-shattered");
    Ok(TwoVc { value: y.len(), witness: Some(TwoShatterWitness { y, per_pair }) })
}
