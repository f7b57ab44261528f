//! Parsing, twisting and lifting a family.
//!
//! `cargo run --example family_transforms`

use halfcube::graph::{build_graph, Mode};
use halfcube::{parse_family, SubsetWord};

fn main() -> halfcube::Result<()> {
    // the singletons of {1,2,3,4}
    let s0 = parse_family("m=4\n1\n2\n3\n4\n")?;
    println!("S0 = {:?}", s0.sets().iter().map(ToString::to_string).collect::<Vec<_>>());

    // twisting by {1} turns singletons into pairs through 1, plus ∅
    let s1 = s0.twist(SubsetWord::singleton(1));
    print!("S0 Δ {{1}}:\n{}", s1.to_text());

    // lifting adds element 5 to every odd set
    let lifted = s0.lift()?;
    print!("S0+:\n{}", lifted.to_text());
    assert!(lifted.is_even());

    // both maps are graph isomorphisms of G₁,₂
    for f in [&s0, &s1, &lifted] {
        let g = build_graph(f, Mode::G12);
        println!("m={} |V|={} |E|={}", f.m(), g.n(), g.edge_count());
    }
    println!("{}", s1.to_json());
    Ok(())
}
