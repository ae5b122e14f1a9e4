//! Juggling sequences as words: validity, ball counts, landing slots.
//!
//! A word t_0 t_1 ... t_{n-1} is a juggling sequence when all landing
//! slots (i + t_i) mod n are distinct; the number of balls is the average
//! throw height. Raising or lowering one digit by the period n preserves
//! validity and changes the ball count by one.
//!
//! Run with: cargo run -p ocycle --example siteswap_basics

use ocycle::{
    pattern_name, permutation_sequence, raise_digit, reduce_digit, validate_juggling,
    JugglingSequence, Word,
};

fn main() {
    println!("pattern  landing slots  valid  balls");
    for pattern in ["3", "441", "531", "015", "105", "50505"] {
        let word: Word = pattern.parse().unwrap();
        let slots = permutation_sequence(&word);
        match JugglingSequence::new(word.clone()) {
            Ok(sequence) => println!(
                "{:<7}  {:<13}  yes    {}",
                pattern,
                slots.word().to_string(),
                sequence.ball_count()
            ),
            Err(_) => println!("{:<7}  {:<13}  no     -", pattern, slots.word().to_string()),
        }
    }

    // 015 and 105 use the same throws in a different order; only the first
    // spreads its landings over distinct slots.
    let good: Word = "015".parse().unwrap();
    let bad: Word = "105".parse().unwrap();
    assert!(validate_juggling(&good));
    assert!(!validate_juggling(&bad));

    // Digit surgery: +n and -n on a single throw.
    let five_one = JugglingSequence::new("51".parse().unwrap()).unwrap();
    let raised = raise_digit(five_one.word(), 1).unwrap();
    println!(
        "\nraising digit 1 of {} by the period: {} ({} -> {} balls)",
        pattern_name(five_one.word()),
        pattern_name(&raised),
        five_one.ball_count(),
        JugglingSequence::new(raised.clone()).unwrap().ball_count()
    );
    let reduced = reduce_digit(&raised, 1).unwrap();
    assert_eq!(reduced, *five_one.word());
    println!("reducing it again restores {}", pattern_name(&reduced));
}
