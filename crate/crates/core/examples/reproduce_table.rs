//! Recomputes the summary table for `S0 … S4` and marks cells that differ
//! from the closed forms.
//!
//! `cargo run --release --example reproduce_table -- 4 2`

use halfcube::dims::SearchBudget;
use halfcube::lab::reproduce_table;

fn main() -> halfcube::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (m, k) = match args[..] {
        [m, k] => (m, k),
        [] => (4, 2),
        _ => panic!("usage: reproduce_table [m k]"),
    };
    let report = reproduce_table(m, k, &SearchBudget::default())?;
    print!("{}", report.to_text());
    for line in report.mismatches() {
        println!("  {line}");
    }
    Ok(())
}
