//! Random search for families whose density is large against
//! `(vcsdim*)²` or against `vcd·ω`. Flagged records are only candidates
//! for inspection: both quantities are compared at fixed constants.

use num_rational::Ratio;
use serde_json::{json, Value};

use super::random::{gen_random, RandomConfig};
use super::verify::family_digest;
use crate::dims::{vcd, vcsdim_star, SearchBudget};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::graph::{build_graph, graph_stats, ratio_decimal, ratio_string, CliqueOutcome, Mode, DEFAULT_CLIQUE_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreConfig {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub trials: u64,
    pub require_even: bool,
    pub require_pointed: bool,
    /// Flag when `ratio > c1·(vcsdim*)²`.
    pub c1: Ratio<u64>,
    /// Flag when `ratio > c2·vcd·ω`.
    pub c2: Ratio<u64>,
    pub budget: SearchBudget,
    pub clique_budget: u64,
}

impl ExploreConfig {
    pub fn new(m: usize, n: usize, seed: u64, trials: u64) -> Self {
        ExploreConfig {
            m,
            n,
            seed,
            trials,
            require_even: false,
            require_pointed: false,
            c1: Ratio::from_integer(1),
            c2: Ratio::from_integer(1),
            budget: SearchBudget::default(),
            clique_budget: DEFAULT_CLIQUE_BUDGET,
        }
    }

    fn trial(&self, t: u64) -> RandomConfig {
        RandomConfig {
            m: self.m,
            n: self.n,
            seed: self.seed,
            stream: t,
            require_even: self.require_even,
            require_pointed: self.require_pointed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplorationRecord {
    pub trial: Option<u64>,
    pub digest: String,
    pub n: usize,
    pub e: usize,
    pub vcd: usize,
    pub vcsdim_star: usize,
    pub omega: usize,
    pub ratio: Ratio<u64>,
    pub vcsdim_star_squared: usize,
    pub vcd_omega: usize,
    pub q1_candidate: bool,
    pub q2_candidate: bool,
}

impl ExplorationRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "trial": self.trial,
            "digest": self.digest,
            "n": self.n,
            "e": self.e,
            "vcd": self.vcd,
            "vcsdim_star": self.vcsdim_star,
            "omega": self.omega,
            "ratio": ratio_string(self.ratio),
            "ratio_decimal": ratio_decimal(self.ratio),
            "vcsdim_star_squared": self.vcsdim_star_squared,
            "vcd_omega": self.vcd_omega,
            "q1_candidate": self.q1_candidate,
            "q2_candidate": self.q2_candidate,
        })
    }
}

pub fn explore_family(fam: &SetFamily, cfg: &ExploreConfig) -> Result<ExplorationRecord> {
    let g = build_graph(fam, Mode::G12);
    let stats = graph_stats(&g, true, cfg.clique_budget);
    let omega = match stats.clique {
        CliqueOutcome::Found { size, .. } => size,
        CliqueOutcome::BudgetExceeded { .. } => return Err(Error::CliqueBudgetExceeded(cfg.clique_budget)),
        CliqueOutcome::NotRequested => unreachable!("clique requested"),
    };
    let vcd = vcd(fam, &cfg.budget)?.value;
    let star = vcsdim_star(fam, &cfg.budget)?.value;
    let ratio = stats.density;
    let sq = star * star;
    let vo = vcd * omega;
    Ok(ExplorationRecord {
        trial: None,
        digest: family_digest(fam),
        n: stats.n,
        e: stats.e,
        vcd,
        vcsdim_star: star,
        omega,
        ratio,
        vcsdim_star_squared: sq,
        vcd_omega: vo,
        q1_candidate: ratio > cfg.c1 * Ratio::from_integer(sq as u64),
        q2_candidate: ratio > cfg.c2 * Ratio::from_integer(vo as u64),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplorationRun {
    pub records: Vec<ExplorationRecord>,
    pub requested: u64,
    /// Why the run stopped early, if it did.
    pub stopped: Option<Error>,
}

impl ExplorationRun {
    pub fn is_partial(&self) -> bool {
        self.stopped.is_some()
    }

    pub fn summary(&self) -> Value {
        json!({
            "summary": {
                "requested": self.requested,
                "completed": self.records.len(),
                "partial": self.is_partial(),
                "reason": self.stopped.as_ref().map(ToString::to_string),
                "q1_candidates": self.records.iter().filter(|r| r.q1_candidate).count(),
                "q2_candidates": self.records.iter().filter(|r| r.q2_candidate).count(),
            }
        })
    }

    /// One record per line, then the summary line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_json().to_string());
            out.push('\n');
        }
        out.push_str(&self.summary().to_string());
        out.push('\n');
        out
    }
}

/// Runs the trials in index order and stops at the first budget failure.
/// Parameter errors abort before any trial.
pub fn explore_questions(cfg: &ExploreConfig) -> Result<ExplorationRun> {
    if cfg.trials > 0 {
        gen_random(&cfg.trial(0))?;
    }
    let mut run = ExplorationRun { records: Vec::new(), requested: cfg.trials, stopped: None };
    for t in 0..cfg.trials {
        let fam = gen_random(&cfg.trial(t))?;
        match explore_family(&fam, cfg) {
            Ok(mut r) => {
                r.trial = Some(t);
                run.records.push(r);
            }
            Err(e @ (Error::SearchBudgetExceeded { .. } | Error::CliqueBudgetExceeded(_))) => {
                run.stopped = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::{gen_named, NamedFamily, NamedParams};

    #[test]
    fn named_records() {
        let cfg = ExploreConfig::new(1, 1, 0, 0);
        let s6 = gen_named(NamedFamily::S6, &NamedParams::m(3)).unwrap();
        let r = explore_family(&s6, &cfg).unwrap();
        assert_eq!(r.vcsdim_star, 3);
        assert_eq!(r.omega, 2);
        let t = gen_named(NamedFamily::S3TwistX, &NamedParams::mk(2, 2)).unwrap();
        assert_eq!(explore_family(&t, &cfg).unwrap().omega, 3);
    }

    #[test]
    fn empty_and_partial() {
        let run = explore_questions(&ExploreConfig::new(5, 6, 1, 0)).unwrap();
        assert!(run.records.is_empty() && !run.is_partial());
        assert_eq!(run.to_jsonl().lines().count(), 1);

        let mut cfg = ExploreConfig::new(6, 10, 1, 4);
        cfg.budget.max_nodes = 0;
        let run = explore_questions(&cfg).unwrap();
        assert!(run.is_partial() && run.records.is_empty());
        assert!(run.to_jsonl().contains("\"partial\":true"));
    }

    #[test]
    fn reproducible() {
        let cfg = ExploreConfig::new(6, 12, 9, 5);
        let a = explore_questions(&cfg).unwrap();
        assert_eq!(a.records.len(), 5);
        assert_eq!(a.to_jsonl(), explore_questions(&cfg).unwrap().to_jsonl());
    }
}
