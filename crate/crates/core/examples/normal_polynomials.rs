//! Normal polynomials `N(A, k, q)` of monomials `x^{a_1} y^{b_1} ... x^{a_n} y^{b_n}`,
//! and their `q = 1` values as counts of maps.

use qweyl::normal::{mk_count, mk_count_unordered, npoly_oracle, npoly_q, npoly_q1, npoly_q_alt};
use qweyl::worked::{map_count_example, MAP_COUNT_EXAMPLE_VALUE};
use qweyl::{Guards, MonomialSeq};

fn main() -> qweyl::Result<()> {
    let guards = Guards::default();
    let seq: MonomialSeq = "(1,2)(2,1)(1,1)".parse()?;
    let (_, sb) = seq.total();
    println!("A = {seq}");
    for k in 0..=sb {
        let n = npoly_q(&seq, k);
        assert_eq!(n, npoly_q_alt(&seq, k));
        assert_eq!(n, npoly_oracle(&seq, k, &guards)?);
        println!("  N(A,{k},q) = {n}   (q = 1: {})", npoly_q1(&seq, k));
    }

    // counting maps needs ordered images: y^2 x = x y^2 + 2 x^2 y + 2 x^3 at q = 1
    let yyx: MonomialSeq = "(0,2)(1,0)".parse()?;
    println!(
        "\ny^2 x, k = 2: ordered images {}, plain images {}",
        mk_count(&yyx, 2, &guards)?,
        mk_count_unordered(&yyx, 2, &guards)?
    );

    let (seq, k) = map_count_example();
    let raised = guards.raised_to(seq.degree());
    let count = mk_count(&seq, k, &raised)?;
    assert_eq!(count, MAP_COUNT_EXAMPLE_VALUE.into());
    println!("N({seq}, {k}) at q = 1: {count}");
    Ok(())
}
