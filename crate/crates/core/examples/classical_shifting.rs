//! Classical shifting to a downward-closed family, and the bound
//! `|E(G₁)|/|V| ≤ vcd` before and after.
//!
//! `cargo run --example classical_shifting`

use halfcube::dims::{vcd, SearchBudget};
use halfcube::graph::{build_graph, ratio_string, Mode};
use halfcube::lab::{gen_random, RandomConfig};
use halfcube::shifting::{bouquet_kind, complete_classical_shift, ShiftKind};

fn main() -> halfcube::Result<()> {
    let fam = gen_random(&RandomConfig::new(6, 20, 17))?;
    let trace = complete_classical_shift(&fam);
    for step in &trace.steps {
        if let ShiftKind::Classical { element } = step.kind {
            println!("φ_{element}: {} sets moved", step.moved.len());
        }
    }
    let b = SearchBudget::default();
    for (name, f) in [("initial", &fam), ("final", &trace.final_family)] {
        let g = build_graph(f, Mode::G1);
        println!("{name:<8} |E(G1)|/|V| = {:<5} vcd = {}", ratio_string(g.density()), vcd(f, &b)?.value);
    }
    println!("final is {:?}", bouquet_kind(&trace.final_family));
    assert_eq!(trace.replay()?, trace.final_family);
    Ok(())
}
