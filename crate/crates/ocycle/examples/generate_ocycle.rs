//! Build an overlap cycle for the permutations of a small multiset.
//!
//! An s-overlap cycle lists every object exactly once, with consecutive
//! objects agreeing on s symbols (the last s of one are the first s of the
//! next, wrapping around). The construction is Eulerian: one edge per
//! object in a transition digraph on prefixes/suffixes, then a tour.
//!
//! Run with: cargo run -p ocycle --example generate_ocycle

use ocycle::{
    assemble_ocycle, build_digraph, multiset_permutations, verify_ocycle, MultisetSpec, Word,
};

fn main() {
    let spec = MultisetSpec::from_symbols(&[0, 0, 1, 2]).unwrap();
    let objects: Vec<Word> = multiset_permutations(&spec).collect();
    println!("{} permutations of {spec}", objects.len());

    let s = 1;
    let graph = build_digraph(&objects, s).unwrap();
    println!(
        "transition digraph at overlap {s}: {} vertices, {} edges",
        graph.vertex_count(),
        graph.edge_count()
    );

    let tour = graph.euler_tour().expect("n - s = 3 > 1 = gcd(n, s), so a tour exists");
    let cycle = assemble_ocycle(&tour, s);
    println!(
        "compressed cycle, {} symbols ({} per object):",
        cycle.compressed().len(),
        cycle.word_len() - s
    );
    println!("  {cycle}");

    // Every window of 4 symbols (at stride 3) is one permutation.
    println!("first windows:");
    for (i, object) in cycle.objects().iter().take(5).enumerate() {
        println!("  {i}: {object}");
    }

    let report = verify_ocycle(&cycle, &objects).unwrap();
    assert!(report.pass());
    println!("verified: each permutation appears exactly once, all overlaps hold");
}
