//! Products in `Sym^2`, compared term by term with their usual display.

use qweyl::sympow::{
    product, scaled_product_formula, scaled_product_oracle, specialize_q1_product,
};
use qweyl::worked::{
    compare_terms, q1_example_displayed, q1_example_grid, q_example_displayed, q_example_grid,
};
use qweyl::{FactorGrid, Guards};

fn main() -> qweyl::Result<()> {
    let guards = Guards::default();

    let grid = q_example_grid();
    let scaled = scaled_product_formula(&grid, &guards)?;
    assert_eq!(scaled, scaled_product_oracle(&grid, &guards)?);
    println!("2 * product of {grid}:");
    for row in compare_terms(q_example_displayed().terms(), scaled.terms()) {
        println!("  [{}] {row}", if row.matches() { "ok" } else { "!!" });
    }

    let grid = q1_example_grid();
    let at_one = specialize_q1_product(&grid, &guards)?;
    let rows = compare_terms(&q1_example_displayed(), &at_one);
    let matched = rows.iter().filter(|r| r.matches()).count();
    println!(
        "\n2 * product of {grid} at q = 1: {matched} of {} terms match the display",
        rows.len()
    );
    for row in rows.iter().filter(|r| r.computed.is_some()) {
        println!("  {row}");
    }

    let three: FactorGrid = "(1,0)(0,1)(1,1);(0,1)(1,0)(0,0)".parse()?;
    println!("\nproduct of {three}:\n  {}", product(&three, &guards)?);
    Ok(())
}
