//! Ground sets, subset words and set families, plus the two
//! structure-preserving transforms: twisting `S ↦ S Δ A` and lifting odd sets
//! with a fresh element.
//!
//! Elements are 1-based everywhere in the public API; element `e` lives in
//! bit `e - 1` of a [`SubsetWord`].

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set: one machine word.
pub const MAX_ELEMENTS: usize = 64;

/// The universe `{1, .., m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    m: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadParam("ground set must have at least one element".into()));
        }
        if m > MAX_ELEMENTS {
            return Err(Error::CapExceeded(m));
        }
        Ok(GroundSet { m, labels: None })
    }

    /// Ground set with display names for elements `1..=labels.len()`.
    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut g = GroundSet::new(labels.len())?;
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) if e >= 1 && e <= l.len() => l[e - 1].clone(),
            _ => e.to_string(),
        }
    }

    /// Word with every element of the ground set.
    pub fn full(&self) -> SubsetWord {
        SubsetWord::full(self.m)
    }

    pub fn contains_word(&self, w: SubsetWord) -> bool {
        w.is_subset_of(self.full())
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.m {
            Err(Error::BadElement { element: e, m: self.m })
        } else {
            Ok(())
        }
    }
}

/// A subset of the ground set as a bit word.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetWord(u64);

impl SubsetWord {
    pub const EMPTY: SubsetWord = SubsetWord(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetWord(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `{1, .., m}`.
    pub const fn full(m: usize) -> Self {
        if m >= 64 {
            SubsetWord(u64::MAX)
        } else {
            SubsetWord((1u64 << m) - 1)
        }
    }

    /// # Panics
    /// If `e` is not in `1..=64`.
    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&e), "element {e} out of word range");
        SubsetWord(1u64 << (e - 1))
    }

    pub fn pair(i: usize, j: usize) -> Self {
        SubsetWord::singleton(i) | SubsetWord::singleton(j)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(SubsetWord::EMPTY, |w, e| w | SubsetWord::singleton(e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_even(self) -> bool {
        self.0.count_ones().is_multiple_of(2)
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn is_subset_of(self, other: SubsetWord) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SubsetWord) -> bool {
        self.0 & other.0 != 0
    }

    pub fn with(self, e: usize) -> Self {
        self | SubsetWord::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - SubsetWord::singleton(e)
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in ascending order, 1-based.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }
}

/// Iterator over the elements of a [`SubsetWord`].
#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl BitOr for SubsetWord {
    type Output = SubsetWord;
    fn bitor(self, rhs: Self) -> Self {
        SubsetWord(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetWord {
    type Output = SubsetWord;
    fn bitand(self, rhs: Self) -> Self {
        SubsetWord(self.0 & rhs.0)
    }
}

impl BitXor for SubsetWord {
    type Output = SubsetWord;
    fn bitxor(self, rhs: Self) -> Self {
        SubsetWord(self.0 ^ rhs.0)
    }
}

impl Sub for SubsetWord {
    type Output = SubsetWord;
    fn sub(self, rhs: Self) -> Self {
        SubsetWord(self.0 & !rhs.0)
    }
}

impl Not for SubsetWord {
    type Output = SubsetWord;
    fn not(self) -> Self {
        SubsetWord(!self.0)
    }
}

impl fmt::Display for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.elements().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Summary returned by [`SetFamily::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub even: bool,
    pub pointed: bool,
    /// `Σ |S|`, the potential that every effective shift decreases.
    pub sum_sizes: usize,
}

/// A duplicate-free family of subsets, stored in ascending word order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground: GroundSet,
    sets: Vec<SubsetWord>,
    even: bool,
    pointed: bool,
}

impl SetFamily {
    /// Builds a family, rejecting duplicates and out-of-range elements.
    pub fn new<I: IntoIterator<Item = SubsetWord>>(ground: GroundSet, sets: I) -> Result<Self> {
        let full = ground.full();
        let mut sets: Vec<SubsetWord> = sets.into_iter().collect();
        for &s in &sets {
            if !s.is_subset_of(full) {
                let element = (s - full).min_element().unwrap_or(0);
                return Err(Error::BadElement { element, m: ground.len() });
            }
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSet(w[0].to_string()));
        }
        Ok(SetFamily::from_sorted(ground, sets))
    }

    /// Builds a family from words that are known to be in range; duplicates
    /// are merged.
    pub fn collect<I: IntoIterator<Item = SubsetWord>>(ground: GroundSet, sets: I) -> Self {
        let mut sets: Vec<SubsetWord> = sets.into_iter().collect();
        debug_assert!(sets.iter().all(|s| ground.contains_word(*s)));
        sets.sort_unstable();
        sets.dedup();
        SetFamily::from_sorted(ground, sets)
    }

    /// Family over `{1..m}` from element lists, for literals in tests and examples.
    pub fn from_lists(m: usize, lists: &[&[usize]]) -> Result<Self> {
        let ground = GroundSet::new(m)?;
        let mut words = Vec::with_capacity(lists.len());
        for list in lists {
            for &e in list.iter() {
                ground.check_element(e)?;
            }
            words.push(SubsetWord::from_elements(list.iter().copied()));
        }
        SetFamily::new(ground, words)
    }

    fn from_sorted(ground: GroundSet, sets: Vec<SubsetWord>) -> Self {
        let even = sets.iter().all(|s| s.is_even());
        let pointed = sets.first() == Some(&SubsetWord::EMPTY);
        SetFamily { ground, sets, even, pointed }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn m(&self) -> usize {
        self.ground.len()
    }

    pub fn sets(&self) -> &[SubsetWord] {
        &self.sets
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, SubsetWord>> {
        self.sets.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, w: SubsetWord) -> bool {
        self.sets.binary_search(&w).is_ok()
    }

    pub fn index_of(&self, w: SubsetWord) -> Option<usize> {
        self.sets.binary_search(&w).ok()
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn sum_sizes(&self) -> usize {
        self.sets.iter().map(|s| s.len()).sum()
    }

    pub fn classify(&self) -> FamilyClass {
        FamilyClass {
            even: self.even,
            pointed: self.pointed,
            sum_sizes: self.sum_sizes(),
        }
    }

    /// Same sets over a ground set of `m` elements (`m` must cover every set).
    pub fn with_ground(&self, ground: GroundSet) -> Result<Self> {
        SetFamily::new(ground, self.sets.iter().copied())
    }

    /// `S⁺`: odd sets gain element `m + 1`; even sets are unchanged.
    pub fn lift(&self) -> Result<Self> {
        let m = self.m();
        if m >= MAX_ELEMENTS {
            return Err(Error::CapExceeded(m + 1));
        }
        let ground = GroundSet::new(m + 1)?;
        let fresh = SubsetWord::singleton(m + 1);
        let sets = self
            .sets
            .iter()
            .map(|&s| if s.is_even() { s } else { s | fresh })
            .collect::<Vec<_>>();
        Ok(SetFamily::collect(ground, sets))
    }

    /// `S Δ a = { S Δ a : S ∈ fam }`.
    ///
    /// # Panics
    /// If `a` has elements outside the ground set.
    pub fn twist(&self, a: SubsetWord) -> Self {
        assert!(self.ground.contains_word(a), "twist word {a} outside ground set");
        SetFamily::collect(self.ground.clone(), self.sets.iter().map(|&s| s ^ a))
    }

    /// Document in the line-oriented family format.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.m());
        for s in &self.sets {
            if s.is_empty() {
                out.push('-');
            } else {
                let parts: Vec<String> = s.elements().map(|e| e.to_string()).collect();
                out.push_str(&parts.join(" "));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_doc(&self) -> FamilyDoc {
        FamilyDoc {
            m: self.m(),
            sets: self.sets.iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("family doc serializes")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(m={}, ", self.m())?;
        f.debug_set().entries(self.sets.iter()).finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, s) in self.sets.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// JSON form of a family: `{"m": int, "sets": [[int, ..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub m: usize,
    pub sets: Vec<Vec<usize>>,
}

impl FamilyDoc {
    pub fn into_family(self) -> Result<SetFamily> {
        if self.m > MAX_ELEMENTS {
            return Err(Error::CapExceeded(self.m));
        }
        let ground = GroundSet::new(self.m).map_err(|_| Error::BadFormat("m must be positive".into()))?;
        let mut words = Vec::with_capacity(self.sets.len());
        for list in &self.sets {
            let mut w = SubsetWord::EMPTY;
            for &e in list {
                ground.check_element(e)?;
                if w.contains(e) {
                    return Err(Error::BadFormat(format!("element {e} repeated within a set")));
                }
                w = w.with(e);
            }
            words.push(w);
        }
        SetFamily::new(ground, words)
    }
}

/// Parses either the text format or, when the document starts with `{`, JSON.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    if text.trim_start().starts_with('{') {
        let doc: FamilyDoc =
            serde_json::from_str(text).map_err(|e| Error::BadFormat(e.to_string()))?;
        return doc.into_family();
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::BadFormat("missing m=<int> header".into()))?;
    let m: usize = header
        .strip_prefix("m=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::BadFormat(format!("expected m=<int> header, found {header:?}")))?;
    if m > MAX_ELEMENTS {
        return Err(Error::CapExceeded(m));
    }
    let ground = GroundSet::new(m).map_err(|_| Error::BadFormat("m must be positive".into()))?;
    let mut words = Vec::new();
    for line in lines {
        if line == "-" {
            words.push(SubsetWord::EMPTY);
            continue;
        }
        let mut w = SubsetWord::EMPTY;
        let mut last = 0;
        for tok in line.split_whitespace() {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::BadFormat(format!("bad element {tok:?}")))?;
            ground.check_element(e)?;
            if e <= last {
                return Err(Error::BadFormat(format!("elements not ascending in {line:?}")));
            }
            last = e;
            w = w.with(e);
        }
        words.push(w);
    }
    SetFamily::new(ground, words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(m: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(m, lists).unwrap()
    }

    #[test]
    fn parse_reads_grammar() {
        let f = parse_family("m=3\n-\n1 2\n1 3").unwrap();
        assert_eq!(f, fam(3, &[&[], &[1, 2], &[1, 3]]));
        assert!(f.is_even());
        assert!(f.is_pointed());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_family("m=2\n1\n1"), Err(Error::DuplicateSet(_))));
        assert!(matches!(
            parse_family("m=2\n3"),
            Err(Error::BadElement { element: 3, m: 2 })
        ));
        assert!(matches!(parse_family("1 2\n"), Err(Error::BadFormat(_))));
        assert!(matches!(parse_family("# only a comment\n"), Err(Error::BadFormat(_))));
        assert!(matches!(parse_family("m=3\n2 1"), Err(Error::BadFormat(_))));
        assert!(matches!(parse_family("m=65\n-"), Err(Error::CapExceeded(65))));
    }

    #[test]
    fn parse_comments_and_json() {
        let f = parse_family("# S2\nm=3\n# sets\n-\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(f.len(), 4);
        let j = parse_family(r#"{"m": 3, "sets": [[2,3],[],[1,2],[1,3]]}"#).unwrap();
        assert_eq!(f, j);
        assert!(matches!(
            parse_family(r#"{"m": 2, "sets": [[1],[1]]}"#),
            Err(Error::DuplicateSet(_))
        ));
    }

    #[test]
    fn serialize_is_canonical() {
        let f = fam(4, &[&[3, 4], &[], &[1]]);
        assert_eq!(f.to_text(), "m=4\n-\n1\n3 4\n");
        assert_eq!(parse_family(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn classify_examples() {
        let c = fam(2, &[&[], &[1, 2]]).classify();
        assert_eq!((c.even, c.pointed, c.sum_sizes), (true, true, 2));
        let c = fam(2, &[&[1], &[2]]).classify();
        assert_eq!((c.even, c.pointed, c.sum_sizes), (false, false, 2));
        let c = fam(1, &[&[]]).classify();
        assert_eq!((c.even, c.pointed, c.sum_sizes), (true, true, 0));
    }

    #[test]
    fn lift_examples() {
        let s0 = fam(3, &[&[1], &[2], &[3]]);
        let lifted = s0.lift().unwrap();
        assert_eq!(lifted, fam(4, &[&[1, 4], &[2, 4], &[3, 4]]));
        assert!(lifted.is_even());

        assert_eq!(fam(1, &[&[]]).lift().unwrap(), fam(2, &[&[]]));
        assert_eq!(
            fam(2, &[&[], &[1], &[1, 2]]).lift().unwrap(),
            fam(3, &[&[], &[1, 3], &[1, 2]])
        );

        let top = SetFamily::new(GroundSet::new(64).unwrap(), [SubsetWord::EMPTY]).unwrap();
        assert_eq!(top.lift(), Err(Error::CapExceeded(65)));
    }

    #[test]
    fn twist_examples() {
        // the lifted singletons twisted by {1,4} give the pointed star centred at 1
        let lifted = fam(3, &[&[1], &[2], &[3]]).lift().unwrap();
        let star = lifted.twist(SubsetWord::from_elements([1, 4]));
        assert_eq!(star, fam(4, &[&[], &[1, 2], &[1, 3]]));
        // same as twisting the singletons by {1}
        let direct = fam(3, &[&[1], &[2], &[3]]).twist(SubsetWord::singleton(1));
        assert_eq!(direct, fam(3, &[&[], &[1, 2], &[1, 3]]));

        let f = fam(4, &[&[1], &[2, 3]]);
        assert_eq!(f.twist(SubsetWord::EMPTY), f);
    }

    #[test]
    fn subset_word_basics() {
        let w = SubsetWord::from_elements([1, 3, 64]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_vec(), vec![1, 3, 64]);
        assert_eq!(w.max_element(), Some(64));
        assert_eq!(w.min_element(), Some(1));
        assert!(w.contains(3) && !w.contains(2) && !w.contains(0) && !w.contains(65));
        assert_eq!(SubsetWord::full(64).len(), 64);
        assert_eq!(w.to_string(), "{1,3,64}");
        assert_eq!(SubsetWord::EMPTY.to_string(), "{}");
    }
}
