//! The operator representations on Laurent polynomials and the q-calculus
//! identities behind them, at exact rational `q`.

use qweyl::qpoly::ratio;
use qweyl::qrep::{
    bracket_identity, check_q_int_by_parts, check_rota_baxter, jackson_integral, q_derivative,
    rho_element, rho_word, BracketVariant, FormulaPath, IdentityForm, LaurentFn, QPoint,
    Representation,
};
use qweyl::{normal_order, Guards, MonomialSeq, Word};

fn main() -> qweyl::Result<()> {
    let q = QPoint::new(ratio(1, 2))?;
    let f: LaurentFn = "x^3 - 2*x^-1".parse()?;
    println!("f = {f}");
    println!("d_q f = {}", q_derivative(&f, &q));
    println!(
        "int_0^x x^2 d_qt = {}",
        jackson_integral(&"x^2".parse()?, &q)?
    );

    let word: Word = "yyxyx".parse()?;
    let nf = normal_order(&word, &Guards::default())?;
    let g = LaurentFn::power(-2);
    assert_eq!(rho_word(&word, &g, &q), rho_element(&nf, &g, &q));
    println!("rho({word}) x^-2 = {}", rho_word(&word, &g, &q));

    let (a, b): (LaurentFn, LaurentFn) = ("1 + x".parse()?, "x^2".parse()?);
    assert!(check_rota_baxter(&a, &b, &q)?);
    assert!(check_q_int_by_parts(&a, &b, &q)?);
    println!("Rota-Baxter and integration by parts hold for {a} and {b}");

    let seq: MonomialSeq = "(1,1)(1,1)".parse()?;
    for form in [IdentityForm::Derived, IdentityForm::Printed] {
        for rep in [Representation::Rho, Representation::Iota] {
            let variant = BracketVariant {
                path: FormulaPath::Primary,
                rep,
                form,
            };
            let t = 2;
            let check = bracket_identity(&seq, t, variant, &q)?;
            println!(
                "{form:?} {rep:?} for {seq}, t = {t}: {} = {} ({})",
                check.lhs,
                check.rhs,
                if check.holds() { "holds" } else { "fails" }
            );
        }
    }
    Ok(())
}
