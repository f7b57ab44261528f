//! Library results against the brute-force oracles, plus frozen values for
//! the named families.

mod common;

use common::*;
use halfcube::dims::certify::{check_c_shatter, check_shatter, check_two_shatter};
use halfcube::dims::{
    is_c_shattered, two_vc_dim, vccdim_pointed, vccdim_star, vcd, vcsdim_pointed, vcsdim_star, SearchBudget,
};
use halfcube::graph::{build_graph, graph_stats, Mode, DEFAULT_CLIQUE_BUDGET};
use halfcube::lab::{gen_named, s3_element, NamedFamily, NamedParams, Stratum, SweepConfig};
use halfcube::{SetFamily, SubsetWord};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn named(name: NamedFamily, m: usize, k: usize) -> SetFamily {
    gen_named(name, &NamedParams { m: Some(m), k: Some(k), r: None }).unwrap()
}

#[test]
fn random_families_match_brute_force() {
    let sweep = SweepConfig {
        seed: 0x5eed,
        trials: 150,
        min_m: 1,
        max_m: 5,
        max_n: 10,
        stratum: Stratum::Mixed,
        require_pointed: false,
    };
    for (t, fam) in sweep.families() {
        let fam = fam.unwrap();
        let sets = words(&fam);
        let b = budget();
        let ctx = format!("trial {t}\n{}", fam.to_text());
        assert_eq!(vcd(&fam, &b).unwrap().value, brute_vcd(&fam), "vcd {ctx}");
        assert_eq!(vccdim_star(&fam, &b).unwrap().value, brute_vccdim_star(&fam), "vccdim* {ctx}");
        assert_eq!(vcsdim_star(&fam, &b).unwrap().value, brute_vcsdim_star(&fam), "vcsdim* {ctx}");
        assert_eq!(two_vc_dim(&fam, &b).unwrap().value, brute_two_vc(&fam), "2VC {ctx}");
        if fam.is_pointed() {
            assert_eq!(vcsdim_pointed(&fam, &b).unwrap().value, brute_vcsdim(&fam), "vcsdim {ctx}");
            if fam.is_even() {
                assert_eq!(vccdim_pointed(&fam, &b).unwrap().value, brute_vccdim(&fam), "vccdim {ctx}");
            }
        }
        let g = build_graph(&fam, Mode::G12);
        let stats = graph_stats(&g, true, DEFAULT_CLIQUE_BUDGET);
        assert_eq!(stats.e, brute_edges(&sets), "edges {ctx}");
        assert_eq!(stats.degeneracy.value, brute_degeneracy(&sets), "degeneracy {ctx}");
        assert_eq!(stats.clique_number(), Some(brute_omega(&sets)), "omega {ctx}");
    }
}

#[test]
fn pointed_even_families_match_brute_force() {
    let sweep = SweepConfig {
        seed: 0xe7e7,
        trials: 150,
        min_m: 2,
        max_m: 7,
        max_n: 12,
        stratum: Stratum::Even,
        require_pointed: true,
    };
    for (t, fam) in sweep.families() {
        let fam = fam.unwrap();
        let got = vccdim_pointed(&fam, &budget()).unwrap();
        assert_eq!(got.value, brute_vccdim(&fam), "trial {t}\n{}", fam.to_text());
        if let Some(w) = &got.witness {
            assert!(check_c_shatter(&fam, w));
        }
    }
}

#[test]
fn small_named_values() {
    let b = budget();
    let s2 = gen_named(NamedFamily::S2, &NamedParams::default()).unwrap();
    assert_eq!((brute_vccdim(&s2), brute_vcd(&s2), brute_two_vc(&s2)), (3, 2, 3));
    assert_eq!(vccdim_pointed(&s2, &b).unwrap().value, 3);

    for m in [2, 4] {
        let s5 = gen_named(NamedFamily::S5, &NamedParams::m(m)).unwrap();
        assert_eq!(brute_vccdim_star(&s5), m / 2 + 1);
        assert!(brute_vcsdim_star(&s5) <= 3);
        assert_eq!(vccdim_star(&s5, &b).unwrap().value, m / 2 + 1);
    }
    for m in [2, 3] {
        let s6 = gen_named(NamedFamily::S6, &NamedParams::m(m)).unwrap();
        assert_eq!((brute_vccdim_star(&s6), brute_vcsdim_star(&s6)), (2, m));
    }
}

#[test]
fn s3_at_two_two() {
    let s3 = named(NamedFamily::S3, 2, 2);
    assert_eq!(brute_vccdim(&s3), 4);
    assert_eq!(brute_vccdim_star(&s3), 4);
    assert_eq!(brute_two_vc(&s3), 2);
    assert_eq!(brute_vcd(&s3), 2);
}

/// With `m = k = 2` the oracle gives `vccdim = mk + 1 = 5` and `2VC = 3`
/// for the family twisted by its ground set.
#[test]
fn twisted_s3_at_two_two() {
    let t = named(NamedFamily::S3TwistX, 2, 2);
    let b = budget();
    assert_eq!(brute_vccdim(&t), 5);
    assert_eq!(vccdim_pointed(&t, &b).unwrap().value, 5);
    assert_eq!(brute_vccdim_star(&t), 4);
    assert_eq!(brute_two_vc(&t), 3);
    assert_eq!(two_vc_dim(&t, &b).unwrap().value, 3);
    assert_eq!(brute_vcsdim(&t), 3);
    let y = SubsetWord::from_elements([s3_element(2, 2, 1, 1), s3_element(2, 2, 1, 2), s3_element(2, 2, 2, 1)]);
    let w = halfcube::dims::is_two_shattered(&t, y).expect("three-element 2-shattered set");
    assert!(check_two_shatter(&t, &w));
}

/// `e = e11` lies in `mk` members (all but `X ∖ {e1, e11}` and `∅`), which
/// caps `vccdim` at `mk + 1`; the pair below reaches it. Each remaining
/// member misses only `e_r` and `e_rl`, so a cyclic shift of `Y` matches
/// them.
#[test]
fn twisted_s3_reaches_count_bound() {
    for (m, k) in [(2, 2), (4, 2), (2, 4), (6, 2)] {
        let t = named(NamedFamily::S3TwistX, m, k);
        let e = s3_element(m, k, 1, 1);
        // e1 and every e_rl other than e itself
        let y = SubsetWord::from_elements((m + 1..=m + m * k).chain([1])).without(e);
        assert_eq!(y.len(), m * k, "m={m} k={k}");
        let w = is_c_shattered(&t, e, y).unwrap().unwrap_or_else(|| panic!("({e}, {y}) at m={m} k={k}"));
        assert!(check_c_shatter(&t, &w));
        assert_eq!(t.iter().filter(|s| s.contains(e)).count(), m * k);
        assert_eq!(vccdim_pointed(&t, &budget()).unwrap().value, m * k + 1);
        assert_eq!(vccdim_star(&t, &budget()).unwrap().value, k + 2);
    }
}

#[test]
fn witnesses_certify() {
    let b = budget();
    for fam in [named(NamedFamily::S4, 5, 0), named(NamedFamily::S3, 4, 2), named(NamedFamily::S1, 5, 0)] {
        let v = vcd(&fam, &b).unwrap();
        assert!(check_shatter(&fam, &v.witness));
        let c = vccdim_pointed(&fam, &b).unwrap();
        assert!(check_c_shatter(&fam, c.witness.as_ref().unwrap()));
        if let Some(w) = two_vc_dim(&fam, &b).unwrap().witness {
            assert!(check_two_shatter(&fam, &w));
        }
    }
}
