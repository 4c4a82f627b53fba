//! q-brackets, q-factorials and the inversion statistic on permutations.

use qweyl::qpoly::{inversion_gf, qbracket, qfactorial, qrising, ratio, Permutation};
use qweyl::Guards;

fn main() -> qweyl::Result<()> {
    for n in 0..=4 {
        println!("[{n}] = {}", qbracket(n));
    }
    println!("[4]! = {}", qfactorial(4));
    println!("[2]^(3) = {}", qrising(2, 3));
    println!("[4]! at q = 1/2: {}", qfactorial(4).eval_at(&ratio(1, 2)));

    let sigma = Permutation::from_images(vec![3, 1, 4, 2])?;
    println!(
        "\n{:?} has {} inversions",
        sigma.images(),
        sigma.inversions()
    );

    let guards = Guards::default();
    for n in 1..=6 {
        assert_eq!(inversion_gf(n, &guards)?, qfactorial(n as u32));
    }
    println!("sum over S_n of q^inv = [n]! for n <= 6");
    Ok(())
}
