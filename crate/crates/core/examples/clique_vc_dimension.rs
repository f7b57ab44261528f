//! Every dimension of the named example families, and a c-shattering
//! certificate checked independently.
//!
//! `cargo run --example clique_vc_dimension`

use halfcube::dims::certify::check_c_shatter;
use halfcube::dims::{DimensionReport, SearchBudget};
use halfcube::lab::{gen_named, NamedFamily, NamedParams};

fn main() -> halfcube::Result<()> {
    let b = SearchBudget::default();
    let cases = [
        (NamedFamily::S1, NamedParams::m(5)),
        (NamedFamily::S2, NamedParams::default()),
        (NamedFamily::S3, NamedParams::mk(2, 2)),
        (NamedFamily::S3TwistX, NamedParams::mk(2, 2)),
        (NamedFamily::S4, NamedParams::m(5)),
        (NamedFamily::S5, NamedParams::m(4)),
        (NamedFamily::S6, NamedParams::m(4)),
    ];
    println!("{:<10} {:>4} {:>7} {:>8} {:>7} {:>8} {:>4}", "family", "vcd", "vccdim", "vccdim*", "vcsdim", "vcsdim*", "2VC");
    for (name, p) in cases {
        let fam = gen_named(name, &p)?;
        let r = DimensionReport::compute(&fam, &b)?;
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:<10} {:>4} {:>7} {:>8} {:>7} {:>8} {:>4}",
            name.as_str(),
            r.vcd.value,
            opt(r.vccdim.as_ref().map(|d| d.value)),
            r.vccdim_star.value,
            opt(r.vcsdim.as_ref().map(|d| d.value)),
            r.vcsdim_star.value,
            r.two_vc.value
        );
        if let Some(w) = r.vccdim.as_ref().and_then(|d| d.witness.as_ref()) {
            assert!(check_c_shatter(&fam, w));
        }
    }

    let s2 = gen_named(NamedFamily::S2, &NamedParams::default())?;
    let w = DimensionReport::compute(&s2, &b)?.vccdim.unwrap().witness.unwrap();
    println!("\nS2 certificate: {}", w.to_json());
    Ok(())
}
