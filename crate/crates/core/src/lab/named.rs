//! The named example families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::{GroundSet, SetFamily, SubsetWord};
use crate::graph::{make_halved_cube, make_johnson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    /// Singletons of `{1..m}`.
    S0,
    /// `∅` and the pairs through element 1.
    S1,
    /// The sporadic 4-clique on `{1,2,3}`.
    S2,
    /// `∅`, the ground set, and `m` stars of `k` pairs.
    S3,
    /// `S3` twisted by its ground set.
    S3TwistX,
    /// All even subsets of `{1..m}`.
    S4,
    /// `∅` and the even-length prefixes `{1..2i}`, `i ≤ m`.
    S5,
    /// `∅`, `{e1,x1}` and `{e1,ei,x1,xi}` with `ei = i`, `xi = m+i`.
    S6,
    HalvedCube,
    Johnson,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 10] = [
        NamedFamily::S0,
        NamedFamily::S1,
        NamedFamily::S2,
        NamedFamily::S3,
        NamedFamily::S3TwistX,
        NamedFamily::S4,
        NamedFamily::S5,
        NamedFamily::S6,
        NamedFamily::HalvedCube,
        NamedFamily::Johnson,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedFamily::S0 => "S0",
            NamedFamily::S1 => "S1",
            NamedFamily::S2 => "S2",
            NamedFamily::S3 => "S3",
            NamedFamily::S3TwistX => "S3twistX",
            NamedFamily::S4 => "S4",
            NamedFamily::S5 => "S5",
            NamedFamily::S6 => "S6",
            NamedFamily::HalvedCube => "HalvedCube",
            NamedFamily::Johnson => "Johnson",
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedFamily::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParam(format!("unknown family name {s:?}")))
    }
}

/// Size parameters; each family reads the ones it needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NamedParams {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<usize>,
}

impl NamedParams {
    pub fn m(m: usize) -> Self {
        NamedParams { m: Some(m), ..Self::default() }
    }

    pub fn mk(m: usize, k: usize) -> Self {
        NamedParams { m: Some(m), k: Some(k), r: None }
    }

    fn need(value: Option<usize>, name: NamedFamily, what: &str) -> Result<usize> {
        match value {
            Some(v) if v > 0 => Ok(v),
            Some(_) => Err(Error::BadParam(format!("{name} needs a positive {what}"))),
            None => Err(Error::BadParam(format!("{name} needs parameter {what}"))),
        }
    }
}

fn ground(m: usize) -> Result<GroundSet> {
    GroundSet::new(m).map_err(|e| Error::BadParam(e.to_string()))
}

/// Element `e_ij` of the `S3` ground set; `e_i` is `i` itself.
pub fn s3_element(m: usize, k: usize, i: usize, j: usize) -> usize {
    debug_assert!((1..=m).contains(&i) && (1..=k).contains(&j));
    m + (i - 1) * k + j
}

fn s3(m: usize, k: usize) -> Result<SetFamily> {
    if !m.is_multiple_of(2) || !k.is_multiple_of(2) {
        return Err(Error::BadParam(format!("S3 needs even m and k, got m={m}, k={k}")));
    }
    let g = ground(m + m * k)?;
    let mut sets = vec![SubsetWord::EMPTY, g.full()];
    for i in 1..=m {
        sets.extend((1..=k).map(|j| SubsetWord::pair(i, s3_element(m, k, i, j))));
    }
    SetFamily::new(g, sets)
}

pub fn gen_named(name: NamedFamily, params: &NamedParams) -> Result<SetFamily> {
    let m = || NamedParams::need(params.m, name, "m");
    match name {
        NamedFamily::S0 => {
            let m = m()?;
            SetFamily::new(ground(m)?, (1..=m).map(SubsetWord::singleton))
        }
        NamedFamily::S1 => {
            let m = m()?;
            let sets = std::iter::once(SubsetWord::EMPTY).chain((2..=m).map(|j| SubsetWord::pair(1, j)));
            SetFamily::new(ground(m)?, sets)
        }
        NamedFamily::S2 => SetFamily::from_lists(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]),
        NamedFamily::S3 => s3(m()?, NamedParams::need(params.k, name, "k")?),
        NamedFamily::S3TwistX => {
            let fam = s3(m()?, NamedParams::need(params.k, name, "k")?)?;
            let x = fam.ground().full();
            Ok(fam.twist(x))
        }
        NamedFamily::S4 | NamedFamily::HalvedCube => make_halved_cube(m()?),
        NamedFamily::S5 => {
            let m = m()?;
            if m % 2 != 0 {
                return Err(Error::BadParam(format!("S5 needs even m, got {m}")));
            }
            let sets = (0..=m).map(|i| SubsetWord::from_elements(1..=2 * i));
            SetFamily::new(ground(2 * m)?, sets)
        }
        NamedFamily::S6 => {
            let m = m()?;
            let x1 = SubsetWord::pair(1, m + 1);
            let sets = [SubsetWord::EMPTY, x1]
                .into_iter()
                .chain((2..=m).map(|i| x1 | SubsetWord::pair(i, m + i)));
            SetFamily::new(ground(2 * m)?, sets)
        }
        NamedFamily::Johnson => make_johnson(NamedParams::need(params.r, name, "r")?, m()?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constructions() {
        let s2 = gen_named(NamedFamily::S2, &NamedParams::default()).unwrap();
        assert_eq!(s2.to_text(), "m=3\n-\n1 2\n1 3\n2 3\n");

        let s3 = gen_named(NamedFamily::S3, &NamedParams::mk(2, 2)).unwrap();
        let want = SetFamily::from_lists(6, &[&[], &[1, 2, 3, 4, 5, 6], &[1, 3], &[1, 4], &[2, 5], &[2, 6]]).unwrap();
        assert_eq!(s3, want);

        let s5 = gen_named(NamedFamily::S5, &NamedParams::m(2)).unwrap();
        assert_eq!(s5, SetFamily::from_lists(4, &[&[], &[1, 2], &[1, 2, 3, 4]]).unwrap());

        let s6 = gen_named(NamedFamily::S6, &NamedParams::m(3)).unwrap();
        assert_eq!(s6, SetFamily::from_lists(6, &[&[], &[1, 4], &[1, 2, 4, 5], &[1, 3, 4, 6]]).unwrap());

        let s1 = gen_named(NamedFamily::S1, &NamedParams::m(4)).unwrap();
        let s0 = gen_named(NamedFamily::S0, &NamedParams::m(4)).unwrap();
        assert_eq!(s0.twist(SubsetWord::singleton(1)), s1);
    }

    #[test]
    fn twisted_s3_shape() {
        let (m, k) = (2, 2);
        let t = gen_named(NamedFamily::S3TwistX, &NamedParams::mk(m, k)).unwrap();
        let x = t.ground().full();
        assert!(t.contains(SubsetWord::EMPTY) && t.contains(x));
        for i in 1..=m {
            for j in 1..=k {
                assert!(t.contains(x - SubsetWord::pair(i, s3_element(m, k, i, j))));
            }
        }
        assert_eq!(t.len(), m * k + 2);
    }

    #[test]
    fn parameter_errors() {
        let bad = |n, p: NamedParams| matches!(gen_named(n, &p), Err(Error::BadParam(_)));
        assert!(bad(NamedFamily::S3, NamedParams::mk(3, 2)));
        assert!(bad(NamedFamily::S3, NamedParams::mk(2, 1)));
        assert!(bad(NamedFamily::S5, NamedParams::m(3)));
        assert!(bad(NamedFamily::S1, NamedParams::default()));
        assert!(bad(NamedFamily::Johnson, NamedParams::m(4)));
        assert!("s3twistx".parse::<NamedFamily>().is_ok());
        assert!("S7".parse::<NamedFamily>().is_err());
    }
}
