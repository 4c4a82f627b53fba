//! The coefficients `c(a, b, k)` of `x^{b+k} y^{a-k}` in `y^a x^b`, by four routes.

use qweyl::normal::{c_oracle, c_recursive, c_subsets, c_tform};
use qweyl::{qrising, Guards, QPoly};

fn main() -> qweyl::Result<()> {
    let guards = Guards::default();
    let (a, b) = (3, 2);
    println!("y^{a} x^{b} = sum_k c({a},{b},k) x^(b+k) y^(a-k)\n");
    for k in 0..=a {
        let rec = c_recursive(a, b, k);
        let subsets = c_subsets(a, b, k, &guards)?;
        let chains = c_tform(a, b, k, &guards)?;
        let rewritten = c_oracle(a, b, k, &guards)?;
        assert!(rec == subsets && rec == chains && rec == rewritten);
        println!("c({a},{b},{k}) = {rec}");
    }

    assert_eq!(c_recursive(a, b, 0), QPoly::q_pow((a * b) as usize));
    assert_eq!(c_recursive(a, b, a), qrising(b, a));
    println!("\nc(a,b,0) = q^(ab) and c(a,b,a) = [b]^(a)");

    // the recursion is memoized and handles much larger arguments
    let big = c_recursive(24, 24, 12);
    println!("c(24,24,12) has degree {:?}", big.degree());
    Ok(())
}
