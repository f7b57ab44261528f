//! Brute-force oracles written from the definitions on raw `u64` words.
//! They share no code with the library beyond reading `SetFamily::sets`.

#![allow(dead_code)]

use halfcube::SetFamily;

pub fn words(fam: &SetFamily) -> Vec<u64> {
    fam.sets().iter().map(|s| s.bits()).collect()
}

fn bit(e: usize) -> u64 {
    1 << (e - 1)
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    // every submask of `mask`, including 0 and `mask`
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

fn full(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1 << m) - 1
    }
}

fn elements(w: u64) -> Vec<usize> {
    (1..=64).filter(|&e| w & bit(e) != 0).collect()
}

/// Projection onto `Q(e, Y)`: the words `Z` with `e ∈ Z ⊆ Y ∪ {e}` whose
/// fiber meets the family.
pub fn projection(sets: &[u64], e: usize, y: u64) -> Vec<u64> {
    let window = y | bit(e);
    let mut out: Vec<u64> = sets.iter().filter(|&&s| s & bit(e) != 0).map(|&s| s & window).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Tries every map sending each projected set to a pair `{e, y}` inside it
/// and asks whether one of them is onto.
pub fn brute_c_shattered(sets: &[u64], e: usize, y: u64) -> bool {
    let proj = projection(sets, e, y);
    let choices: Vec<Vec<u64>> = proj.iter().map(|&z| elements(z & y).into_iter().map(bit).collect()).collect();
    fn go(choices: &[Vec<u64>], i: usize, hit: u64, y: u64) -> bool {
        if i == choices.len() {
            return hit == y;
        }
        choices[i].iter().any(|&c| go(choices, i + 1, hit | c, y))
    }
    go(&choices, 0, 0, y)
}

pub fn brute_vccdim(fam: &SetFamily) -> usize {
    let sets = words(fam);
    let m = fam.m();
    let mut best = 0;
    for e in 1..=m {
        for y in subsets(full(m) & !bit(e)) {
            let size = y.count_ones() as usize + 1;
            if size > best && brute_c_shattered(&sets, e, y) {
                best = size;
            }
        }
    }
    best
}

fn twist(sets: &[u64], a: u64, m: usize) -> SetFamily {
    let lists: Vec<Vec<usize>> = sets.iter().map(|&s| elements(s ^ a)).collect();
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    SetFamily::from_lists(m, &refs).unwrap()
}

fn lift(fam: &SetFamily) -> SetFamily {
    let m = fam.m();
    let lists: Vec<Vec<usize>> = words(fam)
        .into_iter()
        .map(|s| elements(if s.count_ones() % 2 == 1 { s | bit(m + 1) } else { s }))
        .collect();
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    SetFamily::from_lists(m + 1, &refs).unwrap()
}

pub fn brute_vccdim_star(fam: &SetFamily) -> usize {
    let base = if words(fam).iter().all(|s| s.count_ones() % 2 == 0) { fam.clone() } else { lift(fam) };
    let sets = words(&base);
    sets.iter().map(|&a| brute_vccdim(&twist(&sets, a, base.m()))).min().unwrap()
}

pub fn brute_vcd(fam: &SetFamily) -> usize {
    let sets = words(fam);
    subsets(full(fam.m()))
        .filter(|&y| {
            let mut traces: Vec<u64> = sets.iter().map(|s| s & y).collect();
            traces.sort_unstable();
            traces.dedup();
            traces.len() == 1usize << y.count_ones()
        })
        .map(|y| y.count_ones() as usize)
        .max()
        .unwrap()
}

/// Largest 2-shattered set of at least two elements, or 0.
pub fn brute_two_vc(fam: &SetFamily) -> usize {
    let sets = words(fam);
    subsets(full(fam.m()))
        .filter(|&y| y.count_ones() >= 2)
        .filter(|&y| {
            let es = elements(y);
            es.iter().enumerate().all(|(i, &a)| {
                es[i + 1..].iter().all(|&b| sets.iter().any(|s| s & y == bit(a) | bit(b)))
            })
        })
        .map(|y| y.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `|Y| + 1` for the largest s-shattered `(e, Y)`: every `{e, y}` equal to
/// `S ∩ (Y ∪ {e})` for some member `S`.
pub fn brute_vcsdim(fam: &SetFamily) -> usize {
    let sets = words(fam);
    let m = fam.m();
    let mut best = 0;
    for e in 1..=m {
        for y in subsets(full(m) & !bit(e)) {
            let size = y.count_ones() as usize + 1;
            let window = y | bit(e);
            if size > best && elements(y).iter().all(|&z| sets.iter().any(|s| s & window == bit(e) | bit(z))) {
                best = size;
            }
        }
    }
    best
}

pub fn brute_vcsdim_star(fam: &SetFamily) -> usize {
    let sets = words(fam);
    sets.iter().map(|&a| brute_vcsdim(&twist(&sets, a, fam.m()))).max().unwrap()
}

/// `|A Δ B| ∈ {1, 2}`.
pub fn adjacent12(a: u64, b: u64) -> bool {
    matches!((a ^ b).count_ones(), 1 | 2)
}

pub fn brute_edges(sets: &[u64]) -> usize {
    (0..sets.len()).map(|i| (i + 1..sets.len()).filter(|&j| adjacent12(sets[i], sets[j])).count()).sum()
}

/// Maximum over vertex subsets of the minimum induced degree.
pub fn brute_degeneracy(sets: &[u64]) -> usize {
    let n = sets.len();
    assert!(n <= 16);
    (1u32..1 << n)
        .map(|mask| {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            vs.iter()
                .map(|&v| vs.iter().filter(|&&w| w != v && adjacent12(sets[v], sets[w])).count())
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

pub fn brute_omega(sets: &[u64]) -> usize {
    let n = sets.len();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| adjacent12(sets[a], sets[b])))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}
