//! Augmenting-path bipartite matching between elements of `Y` and traces.

use crate::family::SubsetWord;

/// Reusable buffers for repeated small matchings.
#[derive(Default)]
pub(crate) struct Matcher {
    owner: Vec<Option<usize>>,
    seen: Vec<bool>,
}

impl Matcher {
    /// Tries to match every element of `left` to a distinct trace containing
    /// it. On success returns, for each trace, the element matched to it.
    pub(crate) fn saturate(&mut self, left: SubsetWord, traces: &[SubsetWord]) -> Option<Vec<Option<usize>>> {
        self.owner.clear();
        self.owner.resize(traces.len(), None);
        for y in left.elements() {
            self.seen.clear();
            self.seen.resize(traces.len(), false);
            if !augment(y, traces, &mut self.owner, &mut self.seen) {
                return None;
            }
        }
        Some(self.owner.clone())
    }

    /// Saturation test without building the assignment.
    pub(crate) fn saturates(&mut self, left: SubsetWord, traces: &[SubsetWord]) -> bool {
        self.owner.clear();
        self.owner.resize(traces.len(), None);
        for y in left.elements() {
            self.seen.clear();
            self.seen.resize(traces.len(), false);
            if !augment(y, traces, &mut self.owner, &mut self.seen) {
                return false;
            }
        }
        true
    }
}

fn augment(y: usize, traces: &[SubsetWord], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for t in 0..traces.len() {
        if seen[t] || !traces[t].contains(y) {
            continue;
        }
        seen[t] = true;
        let free = match owner[t] {
            None => true,
            Some(other) => augment(other, traces, owner, seen),
        };
        if free {
            owner[t] = Some(y);
            return true;
        }
    }
    false
}
