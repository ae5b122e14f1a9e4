//! Draw juggling patterns as arc diagrams.
//!
//! Each beat is a column; every positive throw arcs from its beat to the
//! beat it lands on. Arcs that land past the drawn window are clipped at
//! the edge. The SVG renderer peaks each arc in proportion to its height.
//!
//! Run with: cargo run -p ocycle --example juggling_diagram

use ocycle::{ascii_diagram, svg_diagram, Word};

fn main() {
    let cascade: Word = "3".parse().unwrap();
    print!("{}", ascii_diagram(&cascade, 6).unwrap());
    println!();

    let pattern: Word = "015".parse().unwrap();
    print!("{}", ascii_diagram(&pattern, 3).unwrap());
    println!();

    // Invalid patterns still draw, with the collision called out.
    let colliding: Word = "105".parse().unwrap();
    print!("{}", ascii_diagram(&colliding, 3).unwrap());

    let svg = svg_diagram(&pattern, 3).unwrap();
    let path = std::env::temp_dir().join("ocycle-015.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("\nSVG version written to {}", path.display());
}
