//! Statistics of 1,2-inclusion graphs of halved cubes and Johnson graphs,
//! and the edge list of a small one.
//!
//! `cargo run --example inclusion_graph_stats`

use halfcube::graph::{
    build_graph, classify_pointed_clique, graph_stats, make_halved_cube, make_johnson, ratio_string, EdgeKind, Mode,
    DEFAULT_CLIQUE_BUDGET,
};
use halfcube::SetFamily;

fn main() -> halfcube::Result<()> {
    println!("{:<12} {:>5} {:>6} {:>8} {:>5} {:>5}", "graph", "n", "e", "density", "degen", "omega");
    let mut rows: Vec<(String, SetFamily)> = (2..=7).map(|m| (format!("½Q{m}"), make_halved_cube(m).unwrap())).collect();
    rows.push(("J(2,5)".into(), make_johnson(2, 5)?));
    rows.push(("J(3,6)".into(), make_johnson(3, 6)?));
    for (name, fam) in &rows {
        let s = graph_stats(&build_graph(fam, Mode::G12), true, DEFAULT_CLIQUE_BUDGET);
        println!(
            "{name:<12} {:>5} {:>6} {:>8} {:>5} {:>5}",
            s.n,
            s.e,
            ratio_string(s.density),
            s.degeneracy.value,
            s.clique_number().map_or("?".into(), |w| w.to_string())
        );
    }

    let small = SetFamily::from_lists(4, &[&[], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3, 4]])?;
    let g = build_graph(&small, Mode::G12);
    print!("\n{}", g.edge_list().to_text());
    let vertical = (0..g.n()).map(|v| g.kind_degree(v, EdgeKind::Vertical)).sum::<usize>() / 2;
    println!("vertical edges: {vertical}");

    let clique = SetFamily::from_lists(3, &[&[], &[1, 2], &[1, 3], &[2, 3]])?;
    println!("{:?}", classify_pointed_clique(&clique)?);
    Ok(())
}
