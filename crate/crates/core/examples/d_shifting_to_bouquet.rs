//! Complete d-shifting of a random pointed even family down to a bouquet of
//! halved cubes, with the bounds the bouquet must satisfy.
//!
//! `cargo run --example d_shifting_to_bouquet -- [seed]`

use halfcube::dims::{vccdim_pointed, SearchBudget};
use halfcube::graph::{build_graph, Mode};
use halfcube::lab::{gen_random, RandomConfig};
use halfcube::shifting::{bouquet_kind, check_bouquet_properties, complete_d_shift, ShiftKind};

fn main() -> halfcube::Result<()> {
    let seed = std::env::args().nth(1).map_or(3, |s| s.parse().expect("integer seed"));
    let fam = gen_random(&RandomConfig::new(7, 16, seed).even().pointed())?;
    let b = SearchBudget::default();
    let trace = complete_d_shift(&fam)?;

    for (step, pot) in trace.steps.iter().zip(&trace.potential[1..]) {
        if let ShiftKind::Double { i, j } = step.kind {
            println!("φ_{i}{j}: moved {:>2} sets, Σ|S| = {pot}", step.moved.len());
        }
    }
    let last = &trace.final_family;
    for (name, f) in [("initial", &fam), ("final", last)] {
        let g = build_graph(f, Mode::G12);
        println!(
            "{name:<8} |V|={} |E|={} vccdim={} degeneracy={}",
            g.n(),
            g.edge_count(),
            vccdim_pointed(f, &b)?.value,
            g.degeneracy().value
        );
    }
    println!("final is {:?}", bouquet_kind(last));
    let d = vccdim_pointed(last, &b)?.value;
    for c in check_bouquet_properties(last, d)?.checks {
        println!("  {} {}: {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    Ok(())
}
