//! Checks of the density bound and of the d-shifting properties on concrete
//! families.

use num_rational::Ratio;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::dims::{vccdim_pointed, vccdim_star, SearchBudget};
use crate::error::Result;
use crate::family::{SetFamily, SubsetWord};
use crate::graph::{binomial, build_graph, ratio_decimal, ratio_string, Mode};
use crate::shifting::{bouquet_kind, check_bouquet_properties, complete_d_shift, d_shift, BouquetKind, BouquetReport};

/// Hex SHA-256 of the family's text form.
pub fn family_digest(fam: &SetFamily) -> String {
    hex::encode(Sha256::digest(fam.to_text().as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub n: usize,
    pub e: usize,
    pub ratio: Ratio<u64>,
    /// `vccdim*` of the family.
    pub d: usize,
    pub bound: u64,
    pub holds: bool,
    pub twist: SubsetWord,
    pub lifted: bool,
}

impl DensityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "e": self.e,
            "ratio": ratio_string(self.ratio),
            "ratio_decimal": ratio_decimal(self.ratio),
            "d": self.d,
            "bound": self.bound,
            "holds": self.holds,
            "twist": self.twist.to_vec(),
            "lifted": self.lifted,
        })
    }
}

/// `|E|/|V|` of `G₁,₂` against `C(vccdim*, 2)`. Budget exhaustion is an
/// error; there is no default verdict.
pub fn verify_density(fam: &SetFamily, budget: &SearchBudget) -> Result<DensityReport> {
    let star = vccdim_star(fam, budget)?;
    let g = build_graph(fam, Mode::G12);
    let ratio = g.density();
    let bound = binomial(star.value as u64, 2);
    Ok(DensityReport {
        n: g.n(),
        e: g.edge_count(),
        ratio,
        d: star.value,
        bound,
        holds: ratio <= Ratio::from_integer(bound),
        twist: star.twist,
        lifted: star.lifted,
    })
}

/// `|E(G₁)|/|V| ≤ vcd`, exactly.
pub fn haussler_holds(fam: &SetFamily, vcd: usize) -> bool {
    let g = build_graph(fam, Mode::G1);
    g.density() <= Ratio::from_integer(vcd as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: String,
    pub inputs: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl PropertyCheck {
    fn new(name: &str, inputs: &str, pass: bool, detail: impl FnOnce() -> String) -> Self {
        PropertyCheck {
            name: name.into(),
            inputs: inputs.into(),
            pass,
            counterexample: (!pass).then(detail),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "inputs": self.inputs,
            "pass": self.pass,
            "counterexample": self.counterexample,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "all_pass": self.all_pass(),
            "checks": self.checks.iter().map(PropertyCheck::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Vertex count, edge count and `vccdim` across one `φ_ij`.
pub fn verify_shift_step(fam: &SetFamily, i: usize, j: usize, budget: &SearchBudget) -> Result<PropertyReport> {
    let (out, _) = d_shift(fam, i, j)?;
    let inputs = format!("{} pair={i},{j}", family_digest(fam));
    let (g0, g1) = (build_graph(fam, Mode::G12), build_graph(&out, Mode::G12));
    let (d0, d1) = (vccdim_pointed(fam, budget)?.value, vccdim_pointed(&out, budget)?.value);
    let checks = vec![
        PropertyCheck::new("vertex_count", &inputs, g0.n() == g1.n(), || {
            format!("|V| {} -> {}", g0.n(), g1.n())
        }),
        PropertyCheck::new("edges_non_decreasing", &inputs, g0.edge_count() <= g1.edge_count(), || {
            format!("|E| {} -> {}\n{}", g0.edge_count(), g1.edge_count(), fam.to_text())
        }),
        PropertyCheck::new("vccdim_non_increasing", &inputs, d1 <= d0, || {
            format!("vccdim {d0} -> {d1}\n{}", fam.to_text())
        }),
    ];
    Ok(PropertyReport { checks })
}

/// Complete d-shifting of a pointed even family and every bound its
/// final bouquet must meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BouquetPipeline {
    pub steps: usize,
    pub potential_decreasing: bool,
    pub kind: BouquetKind,
    /// `vccdim` of the final family.
    pub d: usize,
    pub degeneracy: usize,
    pub bouquet: Option<BouquetReport>,
    pub report: PropertyReport,
}

pub fn verify_bouquet_pipeline(fam: &SetFamily, budget: &SearchBudget) -> Result<BouquetPipeline> {
    let trace = complete_d_shift(fam)?;
    let last = &trace.final_family;
    let inputs = family_digest(fam);
    let d = vccdim_pointed(last, budget)?.value;
    let kind = bouquet_kind(last);
    let degeneracy = build_graph(last, Mode::G12).degeneracy().value;
    let bound = binomial(d as u64, 2) as usize;
    let potential_decreasing = trace.potential_strictly_decreasing();
    let mut checks = vec![
        PropertyCheck::new("potential_decreasing", &inputs, potential_decreasing, || {
            format!("potential history {:?}", trace.potential)
        }),
        PropertyCheck::new("halved_cube_bouquet", &inputs, kind == BouquetKind::HalvedCubeBouquet, || {
            format!("final family is {kind:?}\n{}", last.to_text())
        }),
        PropertyCheck::new("degeneracy_bound", &inputs, degeneracy <= bound, || {
            format!("degeneracy {degeneracy} > C({d},2) = {bound}\n{}", last.to_text())
        }),
    ];
    let bouquet = if kind == BouquetKind::HalvedCubeBouquet {
        let rep = check_bouquet_properties(last, d)?;
        checks.extend(rep.checks.iter().map(|c| PropertyCheck {
            name: c.name.clone(),
            inputs: inputs.clone(),
            pass: c.pass,
            counterexample: (!c.pass).then(|| c.detail.clone()),
        }));
        Some(rep)
    } else {
        None
    };
    Ok(BouquetPipeline {
        steps: trace.steps.iter().filter(|s| s.is_effective()).count(),
        potential_decreasing,
        kind,
        d,
        degeneracy,
        bouquet,
        report: PropertyReport { checks },
    })
}

/// Everything `verify` checks on one family: the density bound always,
/// plus for pointed even families either the given shift or every step of
/// complete d-shifting, and the final bouquet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub density: DensityReport,
    pub shift: Option<PropertyReport>,
    pub bouquet: Option<BouquetPipeline>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.density.holds
            && self.shift.as_ref().is_none_or(PropertyReport::all_pass)
            && self.bouquet.as_ref().is_none_or(|b| b.report.all_pass())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "all_pass": self.all_pass(),
            "density": self.density.to_json(),
            "shift": self.shift.as_ref().map(PropertyReport::to_json),
            "bouquet": self.bouquet.as_ref().map(|b| json!({
                "steps": b.steps,
                "kind": format!("{:?}", b.kind),
                "d": b.d,
                "degeneracy": b.degeneracy,
                "report": b.report.to_json(),
            })),
        })
    }
}

pub fn verify_family(fam: &SetFamily, pair: Option<(usize, usize)>, budget: &SearchBudget) -> Result<VerifyReport> {
    let density = verify_density(fam, budget)?;
    if !(fam.is_pointed() && fam.is_even()) {
        return Ok(VerifyReport { density, shift: None, bouquet: None });
    }
    let shift = match pair {
        Some((i, j)) => verify_shift_step(fam, i, j, budget)?,
        None => {
            let trace = complete_d_shift(fam)?;
            let mut report = PropertyReport::default();
            let mut cur = fam.clone();
            for step in trace.steps.iter().filter(|s| s.is_effective()) {
                let crate::shifting::ShiftKind::Double { i, j } = step.kind else { continue };
                report.checks.extend(verify_shift_step(&cur, i, j, budget)?.checks);
                cur = step.replay(&cur)?;
            }
            report
        }
    };
    let bouquet = verify_bouquet_pipeline(fam, budget)?;
    Ok(VerifyReport { density, shift: Some(shift), bouquet: Some(bouquet) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_halved_cube;

    fn fam(m: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(m, lists).unwrap()
    }

    #[test]
    fn density_examples() {
        let b = SearchBudget::default();
        let s2 = verify_density(&fam(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]), &b).unwrap();
        assert_eq!((s2.ratio, s2.bound, s2.holds), (Ratio::new(3, 2), 3, true));
        let s4 = verify_density(&make_halved_cube(4).unwrap(), &b).unwrap();
        assert_eq!((s4.ratio, s4.bound, s4.holds), (Ratio::from_integer(3), 6, true));
        let point = verify_density(&fam(2, &[&[]]), &b).unwrap();
        assert_eq!((point.ratio, point.holds), (Ratio::from_integer(0), true));
    }

    #[test]
    fn shift_step_examples() {
        let b = SearchBudget::default();
        let f = fam(4, &[&[], &[1, 2], &[1, 2, 3, 4]]);
        let r = verify_shift_step(&f, 1, 2, &b).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.checks.len(), 3);
        let fixed = fam(3, &[&[], &[1, 2]]);
        assert!(verify_shift_step(&fixed, 2, 3, &b).unwrap().all_pass());
        assert!(verify_shift_step(&fam(2, &[&[1]]), 1, 2, &b).is_err());
    }

    #[test]
    fn whole_family() {
        let b = SearchBudget::default();
        let r = verify_family(&fam(2, &[&[]]), None, &b).unwrap();
        assert!(r.all_pass());
        let f = fam(5, &[&[], &[1, 2], &[3, 4], &[1, 2, 3, 4], &[2, 5], &[1, 3, 4, 5]]);
        let r = verify_family(&f, None, &b).unwrap();
        assert!(r.all_pass(), "{:#}", r.to_json());
        assert!(r.bouquet.unwrap().steps > 0);
    }

    #[test]
    fn digest_is_stable() {
        let d = family_digest(&fam(2, &[&[]]));
        assert_eq!(d.len(), 64);
        assert_eq!(d, family_digest(&fam(2, &[&[]])));
        assert_ne!(d, family_digest(&fam(3, &[&[]])));
    }
}
