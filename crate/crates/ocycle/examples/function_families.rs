//! Overlap cycles for families of functions: k-permutations (injections)
//! and surjective strings (surjections).
//!
//! Words over {0, ..., h-1} of length n are functions [n] -> [h]. The
//! injective ones are k-permutations when read as selections; the
//! surjective ones cover the whole alphabet. Both families admit overlap
//! cycles across their stated parameter ranges, with no gcd obstruction.
//!
//! Run with: cargo run -p ocycle --example function_families

use ocycle::{
    assemble_ocycle, build_digraph, k_permutations, surjective_strings, verify_ocycle, Word,
};

fn cycle_for(objects: &[Word], s: usize) -> usize {
    let graph = build_digraph(objects, s).unwrap();
    let tour = graph.euler_tour().unwrap();
    let cycle = assemble_ocycle(&tour, s);
    let report = verify_ocycle(&cycle, objects).unwrap();
    assert!(report.pass());
    cycle.compressed().len()
}

fn main() {
    // 3-permutations of {0, ..., 4}: 5 * 4 * 3 = 60 objects.
    let selections: Vec<Word> = k_permutations(5, 3).unwrap().collect();
    println!("{} 3-permutations of a 5-element set", selections.len());
    for s in 1..3 {
        let symbols = cycle_for(&selections, s);
        println!("  overlap {s}: cycle found, {symbols} compressed symbols");
    }

    // Length-4 strings over {0, 1, 2} that use every symbol: 36 objects.
    let strings: Vec<Word> = surjective_strings(4, 3).unwrap().collect();
    println!("{} surjective strings of length 4 over 3 symbols", strings.len());
    for s in 1..=2 {
        let symbols = cycle_for(&strings, s);
        println!("  overlap {s}: cycle found, {symbols} compressed symbols");
    }

    // Every length-n word is one window of the cycle; print one stretch.
    let objects: Vec<Word> = surjective_strings(3, 2).unwrap().collect();
    let graph = build_digraph(&objects, 1).unwrap();
    let cycle = assemble_ocycle(&graph.euler_tour().unwrap(), 1);
    println!("cycle over all {} surjective strings of length 3 over {{0, 1}}:", objects.len());
    println!("  {cycle}");
    for word in cycle.objects() {
        println!("  {word}");
    }
}
