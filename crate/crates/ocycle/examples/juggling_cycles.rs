//! Chain every juggling sequence of a fixed period into one overlap cycle.
//!
//! The family here is all period-3 sequences with at most 2 balls. A
//! 1-overlap cycle threads through all of them, so a juggler could walk the
//! entire repertoire changing one throw at a time.
//!
//! Run with: cargo run -p ocycle --example juggling_cycles

use ocycle::{
    assemble_ocycle, build_digraph, enumerate_juggling_sequences, verify_ocycle, JugglingSequence,
    Word,
};

fn main() {
    let (n, max_balls, s) = (3, 2, 1);
    let sequences = enumerate_juggling_sequences(n, max_balls).unwrap();
    println!(
        "{} juggling sequences of period {n} with at most {max_balls} balls",
        sequences.len()
    );

    let objects: Vec<Word> = sequences.iter().map(|j| j.word().clone()).collect();
    let graph = build_digraph(&objects, s).unwrap();
    let tour = graph.euler_tour().expect("period 3, overlap 1 is feasible");
    let cycle = assemble_ocycle(&tour, s);

    let report = verify_ocycle(&cycle, &objects).unwrap();
    assert!(report.pass());

    println!("cycle (read cyclically, each window of 3 is a sequence):");
    println!("  {cycle}");
    println!("the walk, with ball counts:");
    for word in cycle.objects() {
        let balls = JugglingSequence::new(word.clone()).unwrap().ball_count();
        println!(
            "  {word}   ({balls} ball{})",
            if balls == 1 { "" } else { "s" }
        );
    }
}
