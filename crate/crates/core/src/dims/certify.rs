//! Witness checkers written straight from the definitions, sharing nothing
//! with the searches.

use std::collections::BTreeSet;

use super::{CShatterWitness, SShatterWitness, ShatterWitness, TwoShatterWitness};
use crate::family::SetFamily;

fn bit(e: usize) -> u64 {
    1u64 << (e - 1)
}

/// `f` is defined on exactly the traces, maps each inside itself, and hits
/// every pair `{e, y}`.
pub fn check_c_shatter(fam: &SetFamily, w: &CShatterWitness) -> bool {
    let e = bit(w.e);
    let y = w.y.bits();
    if y & e != 0 {
        return false;
    }
    let window = y | e;
    let traces: BTreeSet<u64> = fam
        .sets()
        .iter()
        .map(|s| s.bits())
        .filter(|s| s & e != 0)
        .map(|s| s & window)
        .collect();
    let domain: BTreeSet<u64> = w.assignment.iter().map(|(t, _)| t.bits()).collect();
    if domain != traces || domain.len() != w.assignment.len() {
        return false;
    }
    let mut hit = 0u64;
    for &(t, target) in &w.assignment {
        if target == 0 || target > 64 {
            return false;
        }
        let pair = e | bit(target);
        if y & bit(target) == 0 || t.bits() & pair != pair {
            return false;
        }
        hit |= bit(target);
    }
    hit == y
}

pub fn check_s_shatter(fam: &SetFamily, w: &SShatterWitness) -> bool {
    let e = bit(w.e);
    let y = w.y.bits();
    if y & e != 0 {
        return false;
    }
    let covered: u64 = w.per_y.iter().fold(0, |acc, (yy, _)| acc | bit(*yy));
    covered == y
        && w.per_y.len() == w.y.len()
        && w.per_y.iter().all(|&(yy, s)| {
            fam.sets().contains(&s) && s.bits() & (y | e) == e | bit(yy)
        })
}

pub fn check_shatter(fam: &SetFamily, w: &ShatterWitness) -> bool {
    let y = w.y.bits();
    let wanted = 1usize << w.y.len();
    let traces: BTreeSet<u64> = w.per_subset.iter().map(|(t, _)| t.bits()).collect();
    traces.len() == wanted
        && w.per_subset.iter().all(|&(t, s)| {
            t.bits() & !y == 0 && fam.sets().contains(&s) && s.bits() & y == t.bits()
        })
}

pub fn check_two_shatter(fam: &SetFamily, w: &TwoShatterWitness) -> bool {
    let y = w.y.bits();
    let k = w.y.len();
    let pairs: BTreeSet<u64> = w.per_pair.iter().map(|(p, _)| p.bits()).collect();
    pairs.len() == k * k.saturating_sub(1) / 2
        && w.per_pair.iter().all(|&(p, s)| {
            p.len() == 2 && p.bits() & !y == 0 && fam.sets().contains(&s) && s.bits() & y == p.bits()
        })
}
