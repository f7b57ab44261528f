//! Seeded random families.
//!
//! Every trial draws from `ChaCha8Rng::seed_from_u64(seed)` on stream
//! `trial`, so a trial's output depends only on `(seed, trial)` and not on
//! which trials ran before it.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{GroundSet, SetFamily, SubsetWord};
use crate::graph::MAX_GENERATED_SETS;

/// Largest ground set random generation accepts.
pub const MAX_RANDOM_ELEMENTS: usize = 62;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomConfig {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub stream: u64,
    pub require_even: bool,
    pub require_pointed: bool,
}

impl RandomConfig {
    pub fn new(m: usize, n: usize, seed: u64) -> Self {
        RandomConfig { m, n, seed, stream: 0, require_even: false, require_pointed: false }
    }

    pub fn even(mut self) -> Self {
        self.require_even = true;
        self
    }

    pub fn pointed(mut self) -> Self {
        self.require_pointed = true;
        self
    }
}

/// Either a named construction or a random draw.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenConfig {
    Named { name: super::NamedFamily, params: super::NamedParams },
    Random(RandomConfig),
}

pub fn generate(cfg: &GenConfig) -> Result<SetFamily> {
    match cfg {
        GenConfig::Named { name, params } => super::gen_named(*name, params),
        GenConfig::Random(r) => gen_random(r),
    }
}

/// Number of subsets in the stratum.
fn stratum_size(m: usize, even: bool) -> u64 {
    if even {
        1u64 << m.saturating_sub(1)
    } else {
        1u64 << m
    }
}

/// `k`-th member of the stratum; index 0 is always `∅`.
fn stratum_word(k: u64, even: bool) -> SubsetWord {
    if even {
        let rest = k << 1;
        SubsetWord::from_bits(rest | (rest.count_ones() as u64 & 1))
    } else {
        SubsetWord::from_bits(k)
    }
}

/// `n` distinct members of the stratum, uniformly without replacement.
pub fn sample_family<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    n: usize,
    require_even: bool,
    require_pointed: bool,
) -> Result<SetFamily> {
    if m > MAX_RANDOM_ELEMENTS {
        return Err(Error::BadParam(format!("random families need m ≤ {MAX_RANDOM_ELEMENTS}, got {m}")));
    }
    let ground = GroundSet::new(m).map_err(|e| Error::BadParam(e.to_string()))?;
    let size = stratum_size(m, require_even);
    if n as u64 > size || n > MAX_GENERATED_SETS {
        return Err(Error::BadParam(format!("cannot draw {n} distinct sets from a stratum of {size}")));
    }
    if n == 0 {
        return Err(Error::BadParam("n must be positive".into()));
    }
    let sets: Vec<SubsetWord> = if require_pointed {
        // ∅ is index 0; draw the rest from indices 1..size
        std::iter::once(SubsetWord::EMPTY)
            .chain(index::sample(rng, (size - 1) as usize, n - 1).into_iter().map(|k| stratum_word(k as u64 + 1, require_even)))
            .collect()
    } else {
        index::sample(rng, size as usize, n).into_iter().map(|k| stratum_word(k as u64, require_even)).collect()
    };
    Ok(SetFamily::collect(ground, sets))
}

pub fn gen_random(cfg: &RandomConfig) -> Result<SetFamily> {
    let mut rng = trial_rng(cfg.seed, cfg.stream);
    sample_family(&mut rng, cfg.m, cfg.n, cfg.require_even, cfg.require_pointed)
}

/// Which strata a sweep draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Arbitrary,
    Even,
    /// A fair coin per trial picks arbitrary or even.
    Mixed,
}

/// Random sizes as well as random sets: trial `t` picks `m` in
/// `min_m..=max_m`, then `n` in `1..=max_n` capped by the stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub trials: u64,
    pub min_m: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub stratum: Stratum,
    pub require_pointed: bool,
}

impl SweepConfig {
    pub fn family(&self, trial: u64) -> Result<SetFamily> {
        if self.min_m == 0 || self.min_m > self.max_m || self.max_n == 0 {
            return Err(Error::BadParam(format!(
                "sweep needs 1 ≤ min_m ≤ max_m and max_n ≥ 1, got {}..{} and {}",
                self.min_m, self.max_m, self.max_n
            )));
        }
        let mut rng = trial_rng(self.seed, trial);
        let m = rng.random_range(self.min_m..=self.max_m);
        let even = match self.stratum {
            Stratum::Arbitrary => false,
            Stratum::Even => true,
            Stratum::Mixed => rng.random_bool(0.5),
        };
        let cap = stratum_size(m, even).min(self.max_n as u64) as usize;
        let n = rng.random_range(1..=cap);
        sample_family(&mut rng, m, n, even, self.require_pointed)
    }

    pub fn families(&self) -> impl Iterator<Item = (u64, Result<SetFamily>)> + '_ {
        (0..self.trials).map(move |t| (t, self.family(t)))
    }
}
