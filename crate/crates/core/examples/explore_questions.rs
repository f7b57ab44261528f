//! Exploration records comparing the density with `(vcsdim*)²` and `vcd·ω`,
//! for a few named families and a seeded random sweep.
//!
//! `cargo run --release --example explore_questions`

use halfcube::lab::{explore_family, explore_questions, gen_named, ExploreConfig, NamedFamily, NamedParams};

fn main() -> halfcube::Result<()> {
    let cfg = ExploreConfig::new(7, 24, 2024, 20);
    for (name, p) in [
        (NamedFamily::S3TwistX, NamedParams::mk(2, 2)),
        (NamedFamily::S5, NamedParams::m(4)),
        (NamedFamily::S6, NamedParams::m(3)),
        (NamedFamily::S4, NamedParams::m(6)),
    ] {
        let r = explore_family(&gen_named(name, &p)?, &cfg)?;
        println!(
            "{:<9} ratio={:<6} vcsdim*²={:<3} vcd·ω={:<3} flags={}/{}",
            name.as_str(),
            r.ratio.to_string(),
            r.vcsdim_star_squared,
            r.vcd_omega,
            r.q1_candidate,
            r.q2_candidate
        );
    }
    let run = explore_questions(&cfg)?;
    print!("{}", run.to_jsonl());
    Ok(())
}
