//! Straightening words with the rewriting engine.
//!
//! ```text
//! cargo run --example normal_ordering
//! ```

use qweyl::freealg::normal_order_with;
use qweyl::qpoly::ratio;
use qweyl::{multiply, normal_order, specialize_q, Guards, QPoly, Strategy, Word};

fn main() -> qweyl::Result<()> {
    let guards = Guards::default();

    for w in ["yx", "yxx", "yyx", "xyxy", "yyxx"] {
        let word: Word = w.parse()?;
        let nf = normal_order(&word, &guards)?;
        println!("{w:>5} = {nf}");
    }

    // the result does not depend on which factor yx is rewritten first
    let word: Word = "yxyyxxyx".parse()?;
    let left = normal_order_with(&word, Strategy::Leftmost, &guards)?;
    let right = normal_order_with(&word, Strategy::Rightmost, &guards)?;
    assert_eq!(left, right);
    println!(
        "\n{word}: {} terms, both strategies agree",
        left.terms().len()
    );

    // products of normal forms
    let y = normal_order(&"y".parse()?, &guards)?;
    let xx = normal_order(&"xx".parse()?, &guards)?;
    let prod = multiply(&y, &xx, &guards)?;
    println!("\ny * x^2 = {prod}");
    println!("latex: {}", prod.to_latex());
    for ((b, c), v) in specialize_q(&prod, &ratio(1, 2)) {
        println!("at q = 1/2: coefficient of x^{b} y^{c} is {v}");
    }

    // at q = 1 the coefficient of x^3 in y x^2 is 2 = 1 + 1
    assert_eq!(prod.coeff(3, 0), QPoly::from_ints(&[1, 1]));
    Ok(())
}
