//! Why no cycle exists at the boundary n - s = gcd(n, s), concretely.
//!
//! At the boundary, rotating a word by s permutes its length-d blocks
//! (d = gcd(n, s)) without mixing their contents, so the total throw height
//! of a block is invariant along any overlap chain, modulo n. The witness
//! is a one-ball juggling sequence whose first block weighs d, which is not
//! divisible by n: its prefix can never reach the all-zero vertex, so the
//! transition digraph is disconnected.
//!
//! Run with: cargo run -p ocycle --example weight_witness

use ocycle::{gcd, weight_class_witness, Witness};

fn main() {
    for (n, s) in [(4, 2), (6, 4), (6, 3), (9, 6)] {
        let row = weight_class_witness(n, s, 1).unwrap();
        println!(
            "period {n}, overlap {s} (n - s = gcd = {g}): {count} sequences, cycle exists: {obs}",
            g = gcd(n, s),
            count = row.object_count,
            obs = row.observed
        );
        match row.witness.unwrap() {
            Witness::WeightClass {
                sequence,
                first_block_weight,
                prefix,
                minimum_vertex,
                separated,
                ..
            } => {
                println!("  witness sequence ({sequence})");
                println!(
                    "  first block weight {first_block_weight} is not divisible by {n},"
                );
                println!(
                    "  so its prefix ({prefix}) and ({minimum_vertex}) sit in different \
                     components: {separated}"
                );
                assert!(separated);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(!row.observed);
    }
    println!("\nevery boundary case is infeasible, with an explicit separation witness");
}
