//! Seeded sweep of the bound `|E|/|V| ≤ C(vccdim*, 2)` with a histogram of
//! the slack.
//!
//! `cargo run --release --example density_theorem_sweep -- [trials] [seed]`

use std::collections::BTreeMap;

use halfcube::dims::SearchBudget;
use halfcube::lab::{verify_density, Stratum, SweepConfig};
use num_rational::Ratio;

fn main() -> halfcube::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let trials = args.next().unwrap_or(1000);
    let seed = args.next().unwrap_or(1);
    let sweep = SweepConfig {
        seed,
        trials,
        min_m: 1,
        max_m: 10,
        max_n: 64,
        stratum: Stratum::Mixed,
        require_pointed: false,
    };
    let b = SearchBudget::default();
    let mut by_d: BTreeMap<usize, (usize, Ratio<u64>)> = BTreeMap::new();
    let mut violations = 0;
    for (t, fam) in sweep.families() {
        let r = verify_density(&fam?, &b)?;
        if !r.holds {
            violations += 1;
            println!("trial {t}: ratio {} exceeds C({},2)", r.ratio, r.d);
        }
        let entry = by_d.entry(r.d).or_insert((0, Ratio::from_integer(0)));
        entry.0 += 1;
        entry.1 = entry.1.max(r.ratio / Ratio::from_integer(r.bound.max(1)));
    }
    println!("{:>3} {:>6} {:>18}", "d", "count", "max ratio/C(d,2)");
    for (d, (count, worst)) in by_d {
        println!("{d:>3} {count:>6} {:>18}", format!("{worst}"));
    }
    println!("{trials} families, {violations} violations");
    Ok(())
}
