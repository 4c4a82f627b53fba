//! The two operator representations of the algebra and the q-calculus
//! identities behind them, checked exactly on Laurent polynomials at
//! rational values of `q`.
//!
//! - `rho(x) f = x^{-1} f`, `rho(y) f = -q^{-1} d_{q^{-1}} f`
//! - `iota(x) f = jackson integral of f from 0 to x`, `iota(y) f = x f`

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freealg::{Letter, MWElement, Word};
use crate::normal::{npoly_q, npoly_q_alt, MonomialSeq};
use crate::qpoly::{parse_rational, rat_pow, rising_bracket_at, BigRational};

/// A finite Laurent sum `sum c_t x^t` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentFn {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentFn {
    pub fn zero() -> Self {
        LaurentFn::default()
    }

    /// `c x^t`.
    pub fn monomial(c: BigRational, t: i64) -> Self {
        LaurentFn::from_terms([(t, c)])
    }

    /// `x^t`.
    pub fn power(t: i64) -> Self {
        Self::monomial(BigRational::one(), t)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut out = LaurentFn::zero();
        for (t, c) in terms {
            out.add_term(t, c);
        }
        out
    }

    fn add_term(&mut self, t: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LaurentFn::from_terms(self.terms.iter().map(|(&t, v)| (t, v * c)))
    }

    /// Multiplication by `x^s`.
    pub fn shift_exponent(&self, s: i64) -> Self {
        LaurentFn {
            terms: self
                .terms
                .iter()
                .map(|(&t, v)| (t + s, v.clone()))
                .collect(),
        }
    }

    fn map_terms(&self, f: impl Fn(i64, &BigRational) -> (i64, BigRational)) -> Self {
        LaurentFn::from_terms(self.terms.iter().map(|(&t, c)| f(t, c)))
    }

    /// `f(0)`: the constant coefficient. Rejects negative exponents, where the
    /// function has no value at the origin.
    pub fn value_at_zero(&self) -> Result<BigRational> {
        if self.min_exponent().is_some_and(|t| t < 0) {
            return Err(Error::Domain(format!("{self} has a pole at 0")));
        }
        Ok(self
            .terms
            .get(&0)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }
}

impl Add<&LaurentFn> for &LaurentFn {
    type Output = LaurentFn;
    fn add(self, rhs: &LaurentFn) -> LaurentFn {
        let mut out = self.clone();
        for (&t, c) in &rhs.terms {
            out.add_term(t, c.clone());
        }
        out
    }
}

impl Neg for &LaurentFn {
    type Output = LaurentFn;
    fn neg(self) -> LaurentFn {
        self.map_terms(|t, c| (t, -c))
    }
}

impl Sub<&LaurentFn> for &LaurentFn {
    type Output = LaurentFn;
    fn sub(self, rhs: &LaurentFn) -> LaurentFn {
        self + &(-rhs)
    }
}

impl Mul<&LaurentFn> for &LaurentFn {
    type Output = LaurentFn;
    fn mul(self, rhs: &LaurentFn) -> LaurentFn {
        let mut out = LaurentFn::zero();
        for (&s, a) in &self.terms {
            for (&t, b) in &rhs.terms {
                out.add_term(s + t, a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentFn {
    /// `c*x^t` terms in ascending exponent joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&t, c)) in self.terms.iter().enumerate() {
            match (i == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            match (t, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "x^{t}")?,
                (_, false) => write!(f, "{a}*x^{t}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentFn {
    type Err = Error;

    /// Parses sums such as `3*x^2 - x^-3 + 1/2*x + 5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(bad());
        }
        pieces.push((negative, current));

        let mut out = LaurentFn::zero();
        for (negative, piece) in pieces {
            let (coeff, power) = match piece.find('x') {
                Some(pos) => {
                    let head = piece[..pos].trim_end_matches('*');
                    let coeff = if head.is_empty() {
                        BigRational::one()
                    } else {
                        parse_rational(head)?
                    };
                    let tail = &piece[pos + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(bad)?
                    };
                    (coeff, power)
                }
                None => (parse_rational(&piece)?, 0),
            };
            out.add_term(power, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// A rational value of `q` different from 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoint(BigRational);

impl QPoint {
    pub fn new(q0: BigRational) -> Result<Self> {
        if q0.is_zero() || q0.is_one() {
            return Err(Error::Domain(format!("q = {q0} is not allowed here")));
        }
        Ok(QPoint(q0))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// The point `1/q`.
    pub fn inverse(&self) -> QPoint {
        QPoint(self.0.recip())
    }

    /// True when `0 < q < 1`, the range where Jackson sums converge.
    pub fn is_contracting(&self) -> bool {
        self.0.is_positive() && self.0 < BigRational::one()
    }

    /// `[n]` at this point.
    pub fn bracket(&self, n: i64) -> BigRational {
        crate::qpoly::bracket_at(n, &self.0)
    }

    fn pow(&self, e: i64) -> BigRational {
        rat_pow(&self.0, e)
    }
}

/// `d_q f = (f(qx) - f(x)) / ((q - 1) x)`: `x^t -> [t] x^{t-1}`.
pub fn q_derivative(f: &LaurentFn, at: &QPoint) -> LaurentFn {
    f.map_terms(|t, c| (t - 1, c * at.bracket(t)))
}

/// `I_q f(x) = f(qx)`: `x^t -> q^t x^t`.
pub fn q_shift(f: &LaurentFn, at: &QPoint) -> LaurentFn {
    f.map_terms(|t, c| (t, c * at.pow(t)))
}

/// The Jackson integral `(1-q) x sum_n q^n f(q^n x)`, in closed form
/// `x^t -> x^{t+1} / [t+1]`. Needs `0 < q < 1` and exponents above `-1`.
pub fn jackson_integral(f: &LaurentFn, at: &QPoint) -> Result<LaurentFn> {
    if !at.is_contracting() {
        return Err(Error::Domain(format!(
            "the Jackson sum diverges for q = {}",
            at.value()
        )));
    }
    if let Some(t) = f.min_exponent().filter(|&t| t <= -1) {
        return Err(Error::Domain(format!("the Jackson sum diverges on x^{t}")));
    }
    Ok(f.map_terms(|t, c| (t + 1, c / at.bracket(t + 1))))
}

pub fn rho_x(f: &LaurentFn) -> LaurentFn {
    f.shift_exponent(-1)
}

/// `-q^{-1} d_{q^{-1}} f`.
pub fn rho_y(f: &LaurentFn, at: &QPoint) -> LaurentFn {
    q_derivative(f, &at.inverse()).scale(&-at.value().recip())
}

pub fn iota_x(f: &LaurentFn, at: &QPoint) -> Result<LaurentFn> {
    jackson_integral(f, at)
}

pub fn iota_y(f: &LaurentFn) -> LaurentFn {
    f.shift_exponent(1)
}

/// Applies `rho` letter by letter, rightmost letter first.
pub fn rho_word(word: &Word, f: &LaurentFn, at: &QPoint) -> LaurentFn {
    word.letters().iter().rev().fold(f.clone(), |g, l| match l {
        Letter::X => rho_x(&g),
        Letter::Y => rho_y(&g, at),
    })
}

/// Applies `rho` to a normal-form element, evaluating its coefficients at `q`.
pub fn rho_element(u: &MWElement, f: &LaurentFn, at: &QPoint) -> LaurentFn {
    u.terms()
        .iter()
        .fold(LaurentFn::zero(), |acc, (&(b, c), p)| {
            let g = rho_word(&Word::xy_power(b, c), f, at);
            &acc + &g.scale(&p.eval_at(at.value()))
        })
}

/// Applies `iota` letter by letter, rightmost letter first.
pub fn iota_word(word: &Word, f: &LaurentFn, at: &QPoint) -> Result<LaurentFn> {
    word.letters()
        .iter()
        .rev()
        .try_fold(f.clone(), |g, l| match l {
            Letter::X => iota_x(&g, at),
            Letter::Y => Ok(iota_y(&g)),
        })
}

pub fn iota_element(u: &MWElement, f: &LaurentFn, at: &QPoint) -> Result<LaurentFn> {
    u.terms()
        .iter()
        .try_fold(LaurentFn::zero(), |acc, (&(b, c), p)| {
            let g = iota_word(&Word::xy_power(b, c), f, at)?;
            Ok(&acc + &g.scale(&p.eval_at(at.value())))
        })
}

/// `rho(y) rho(x) f = q rho(x) rho(y) f + rho(x)^2 f`.
pub fn check_rho_relation(f: &LaurentFn, at: &QPoint) -> bool {
    let lhs = rho_y(&rho_x(f), at);
    let rhs = &rho_x(&rho_y(f, at)).scale(at.value()) + &rho_x(&rho_x(f));
    lhs == rhs
}

/// `iota(y) iota(x) f = q iota(x) iota(y) f + iota(x)^2 f`, i.e.
/// `x int f = q int t f + int int f`.
pub fn check_iota_relation(f: &LaurentFn, at: &QPoint) -> Result<bool> {
    let lhs = iota_y(&iota_x(f, at)?);
    let rhs = &iota_x(&iota_y(f), at)?.scale(at.value()) + &iota_x(&iota_x(f, at)?, at)?;
    Ok(lhs == rhs)
}

/// `d_q (fg) = f d_q g + I_q g d_q f`.
pub fn check_q_leibnitz(f: &LaurentFn, g: &LaurentFn, at: &QPoint) -> bool {
    let lhs = q_derivative(&(f * g), at);
    let rhs = &(f * &q_derivative(g, at)) + &(&q_shift(g, at) * &q_derivative(f, at));
    lhs == rhs
}

/// `d_q int_0^x f = f`.
pub fn check_fundamental_theorem(f: &LaurentFn, at: &QPoint) -> Result<bool> {
    Ok(q_derivative(&jackson_integral(f, at)?, at) == *f)
}

/// `(int f)(int g) = int (int f) g + int f (int_0^{qt} g)`.
pub fn check_rota_baxter(f: &LaurentFn, g: &LaurentFn, at: &QPoint) -> Result<bool> {
    let int_f = jackson_integral(f, at)?;
    let int_g = jackson_integral(g, at)?;
    let lhs = &int_f * &int_g;
    let first = jackson_integral(&(&int_f * g), at)?;
    let second = jackson_integral(&(f * &q_shift(&int_g, at)), at)?;
    Ok(lhs == &first + &second)
}

/// `int I_q f d_q g = f g - f(0) g(0) - int g d_q f`.
pub fn check_q_int_by_parts(f: &LaurentFn, g: &LaurentFn, at: &QPoint) -> Result<bool> {
    let boundary = f.value_at_zero()? * g.value_at_zero()?;
    let lhs = jackson_integral(&(&q_shift(f, at) * &q_derivative(g, at)), at)?;
    let fg = f * g;
    let rest = jackson_integral(&(g * &q_derivative(f, at)), at)?;
    let rhs = &(&fg - &LaurentFn::monomial(boundary, 0)) - &rest;
    Ok(lhs == rhs)
}

/// Which expression for `N(A, k, q)` feeds a bracket identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaPath {
    /// Right-to-left compositions `c(b_i, |a_{>i}| + |p_{>i}|, p_i)`.
    Primary,
    /// Left-to-right compositions `c(|b_{<=i}| - |p_{<i}|, a_{i+1}, p_i)`.
    Alternative,
}

/// Which representation is applied to the test function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    /// `rho` applied to `x^{-t}`, `t >= 1`.
    Rho,
    /// `iota` applied to `x^t`, `t >= 0`.
    Iota,
}

/// The shape of the bracket identity being evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityForm {
    /// Obtained by applying the representation to both sides of the normal
    /// ordering identity: q-rising brackets on both sides.
    Derived,
    /// The single-bracket / shifted-rising-bracket shape as commonly printed.
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BracketVariant {
    pub path: FormulaPath,
    pub rep: Representation,
    pub form: IdentityForm,
}

impl BracketVariant {
    pub fn all() -> impl Iterator<Item = BracketVariant> {
        [FormulaPath::Primary, FormulaPath::Alternative]
            .into_iter()
            .flat_map(|path| {
                [Representation::Rho, Representation::Iota]
                    .into_iter()
                    .flat_map(move |rep| {
                        [IdentityForm::Derived, IdentityForm::Printed]
                            .into_iter()
                            .map(move |form| BracketVariant { path, rep, form })
                    })
            })
    }
}

/// Both sides of a bracket identity evaluated at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl BracketCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates one bracket identity for the monomial `seq` and parameter `t`.
///
/// Derived forms, with `N_k = N(A, k, q)`:
/// - rho: `prod_i [t + |a_{>i}| + |b_{>i}|]^(b_i) = sum_k N_k [t]^(|b|-k)`
/// - iota: `1 / prod_i [t + |a_{>i}| + |b_{>=i}| + 1]^(a_i) = sum_k N_k / [t + |b| - k + 1]^(|a|+k)`
///
/// Printed forms:
/// - rho: `prod_i [t + |b_{>=i}| + |a_{>i}| - 1] = sum_k N_k [t + |b| - k - 1]`
/// - iota: `1 / prod_i [t + |a_{>=i}| + |b_{>=i}| + 1]^(a_i) = sum_k N_k / [t + |a| + |b|]^(|a|+k)`
pub fn bracket_identity(
    seq: &MonomialSeq,
    t: i64,
    variant: BracketVariant,
    at: &QPoint,
) -> Result<BracketCheck> {
    match variant.rep {
        Representation::Rho if t < 1 => {
            return Err(Error::Domain("the rho identities need t >= 1".into()))
        }
        Representation::Iota if t < 0 => {
            return Err(Error::Domain("the iota identities need t >= 0".into()))
        }
        _ => {}
    }
    let n = seq.len();
    let (sa, sb) = seq.total();
    let (sa, sb) = (sa as i64, sb as i64);
    let q0 = at.value();
    let a_after = |i: usize| seq.a_after(i) as i64;
    let a_from = |i: usize| a_after(i) + seq.a(i) as i64;
    let b_from = |i: usize| seq.pairs()[i..].iter().map(|p| p.1 as i64).sum::<i64>();
    let b_after = |i: usize| b_from(i) - seq.b(i) as i64;

    let coeffs: Vec<BigRational> = (0..=sb as u32)
        .map(|k| match variant.path {
            FormulaPath::Primary => npoly_q(seq, k),
            FormulaPath::Alternative => npoly_q_alt(seq, k),
        })
        .map(|p| p.eval_at(q0))
        .collect();

    let (lhs, rhs) = match (variant.rep, variant.form) {
        (Representation::Rho, IdentityForm::Derived) => {
            let lhs = (0..n)
                .map(|i| rising_bracket_at(t + a_after(i) + b_after(i), seq.b(i), q0))
                .product();
            let rhs = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * rising_bracket_at(t, (sb - k as i64) as u32, q0))
                .sum();
            (lhs, rhs)
        }
        (Representation::Rho, IdentityForm::Printed) => {
            let lhs = (0..n)
                .map(|i| at.bracket(t + b_from(i) + a_after(i) - 1))
                .product();
            let rhs = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * at.bracket(t + sb - k as i64 - 1))
                .sum();
            (lhs, rhs)
        }
        (Representation::Iota, form) => {
            let lhs_base = |i: usize| match form {
                IdentityForm::Derived => t + a_after(i) + b_from(i) + 1,
                IdentityForm::Printed => t + a_from(i) + b_from(i) + 1,
            };
            let lhs = (0..n)
                .map(|i| rising_bracket_at(lhs_base(i), seq.a(i), q0))
                .product::<BigRational>()
                .recip();
            let rhs = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let k = k as i64;
                    let base = match form {
                        IdentityForm::Derived => t + sb - k + 1,
                        IdentityForm::Printed => t + sa + sb,
                    };
                    c / rising_bracket_at(base, (sa + k) as u32, q0)
                })
                .sum();
            (lhs, rhs)
        }
    };
    Ok(BracketCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::normal_order;
    use crate::guards::Guards;
    use crate::qpoly::{rat, ratio};

    fn lf(s: &str) -> LaurentFn {
        s.parse().unwrap()
    }

    fn at(n: i64, d: i64) -> QPoint {
        QPoint::new(ratio(n, d)).unwrap()
    }

    #[test]
    fn derivative_values() {
        assert_eq!(q_derivative(&lf("x^3"), &at(1, 2)), lf("7/4*x^2"));
        assert_eq!(q_derivative(&lf("1"), &at(2, 3)), LaurentFn::zero());
        // d_{1/q} x^{-1} = -q x^{-2}
        let q = at(2, 3);
        assert_eq!(
            q_derivative(&lf("x^-1"), &q.inverse()),
            LaurentFn::monomial(-ratio(2, 3), -2)
        );
        assert!(QPoint::new(rat(1)).is_err());
        assert!(QPoint::new(rat(0)).is_err());
    }

    #[test]
    fn shift_values() {
        assert_eq!(q_shift(&lf("x^2"), &at(1, 2)), lf("1/4*x^2"));
        assert_eq!(q_shift(&lf("5"), &at(1, 2)), lf("5"));
        assert_eq!(q_shift(&lf("x^-1"), &at(1, 2)), lf("2*x^-1"));
    }

    #[test]
    fn jackson_values() {
        assert_eq!(
            jackson_integral(&lf("x^2"), &at(1, 2)).unwrap(),
            lf("4/7*x^3")
        );
        assert_eq!(jackson_integral(&lf("1"), &at(1, 2)).unwrap(), lf("x"));
        assert_eq!(
            jackson_integral(&lf("x"), &at(2, 3)).unwrap(),
            lf("3/5*x^2")
        );
        assert!(jackson_integral(&lf("x^-1"), &at(1, 2)).is_err());
        assert!(jackson_integral(&lf("x"), &at(3, 2)).is_err());
    }

    #[test]
    fn relations_hold() {
        assert!(check_rho_relation(&lf("x^-1"), &at(1, 2)));
        assert!(check_rho_relation(&lf("x^5"), &at(2, 3)));
        assert!(check_rho_relation(&lf("3*x^2 - x^-3"), &at(1, 2)));
        assert!(check_iota_relation(&lf("1"), &at(1, 2)).unwrap());
        assert!(check_iota_relation(&lf("x^3"), &at(2, 3)).unwrap());
        assert!(check_iota_relation(&lf("x^-2"), &at(1, 2)).is_err());
    }

    #[test]
    fn calculus_identities() {
        assert!(check_q_leibnitz(&lf("x"), &lf("x"), &at(1, 2)));
        assert!(check_q_leibnitz(&lf("1"), &lf("3*x^4 - x^-2"), &at(1, 2)));
        assert!(check_q_leibnitz(&lf("x^-1"), &lf("x^3"), &at(1, 3)));
        assert!(check_rota_baxter(&lf("1"), &lf("1"), &at(1, 2)).unwrap());
        assert!(check_rota_baxter(&lf("x^2"), &lf("x^3"), &at(2, 3)).unwrap());
        assert!(check_rota_baxter(&LaurentFn::zero(), &lf("x"), &at(2, 3)).unwrap());
        assert!(check_q_int_by_parts(&lf("x"), &lf("x"), &at(1, 2)).unwrap());
        assert!(check_q_int_by_parts(&lf("1"), &lf("x^2"), &at(1, 2)).unwrap());
        assert!(check_q_int_by_parts(&lf("x^2"), &lf("x^3"), &at(1, 3)).unwrap());
        assert!(check_q_int_by_parts(&lf("2 + x"), &lf("3 + x^2"), &at(3, 5)).unwrap());
        assert!(check_q_int_by_parts(&lf("x^-1"), &lf("x"), &at(1, 2)).is_err());
    }

    #[test]
    fn representations_respect_normal_forms() {
        let g = Guards::default();
        let q = at(2, 3);
        for s in ["yx", "yyx", "xyyxx", "yxyx"] {
            let w: Word = s.parse().unwrap();
            let nf = normal_order(&w, &g).unwrap();
            for t in -2..=2 {
                let f = LaurentFn::power(t);
                assert_eq!(
                    rho_word(&w, &f, &q),
                    rho_element(&nf, &f, &q),
                    "{s} on x^{t}"
                );
                if t >= 0 {
                    assert_eq!(
                        iota_word(&w, &f, &q).unwrap(),
                        iota_element(&nf, &f, &q).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bracket_identities() {
        let q = at(1, 2);
        let derived = |path, rep| BracketVariant {
            path,
            rep,
            form: IdentityForm::Derived,
        };
        let printed = |rep| BracketVariant {
            path: FormulaPath::Primary,
            rep,
            form: IdentityForm::Printed,
        };
        let one: MonomialSeq = "(2,3)".parse().unwrap();
        let two: MonomialSeq = "(1,1)(1,1)".parse().unwrap();
        let other: MonomialSeq = "(0,2)(1,0)".parse().unwrap();
        for path in [FormulaPath::Primary, FormulaPath::Alternative] {
            assert!(
                bracket_identity(&two, 2, derived(path, Representation::Rho), &q)
                    .unwrap()
                    .holds()
            );
            assert!(
                bracket_identity(&other, 3, derived(path, Representation::Rho), &at(2, 3))
                    .unwrap()
                    .holds()
            );
            assert!(
                bracket_identity(&two, 0, derived(path, Representation::Iota), &q)
                    .unwrap()
                    .holds()
            );
        }
        assert!(bracket_identity(&one, 4, printed(Representation::Rho), &q)
            .unwrap()
            .holds());
        assert!(!bracket_identity(&two, 2, printed(Representation::Rho), &q)
            .unwrap()
            .holds());
        assert!(
            !bracket_identity(&one, 1, printed(Representation::Iota), &q)
                .unwrap()
                .holds()
        );
        assert!(bracket_identity(
            &two,
            0,
            derived(FormulaPath::Primary, Representation::Rho),
            &q
        )
        .is_err());
    }

    #[test]
    fn derived_rho_side_matches_operator() {
        let q = at(3, 5);
        let seq: MonomialSeq = "(1,2)(0,1)(2,1)".parse().unwrap();
        let t = 2;
        let applied = rho_word(&seq.to_word(), &LaurentFn::power(-t), &q);
        let check = bracket_identity(
            &seq,
            t,
            BracketVariant {
                path: FormulaPath::Primary,
                rep: Representation::Rho,
                form: IdentityForm::Derived,
            },
            &q,
        )
        .unwrap();
        let (sa, sb) = seq.total();
        let exponent = -(t + (sa + sb) as i64);
        assert_eq!(applied, LaurentFn::monomial(check.lhs.clone(), exponent));
        assert!(check.holds());
    }

    #[test]
    fn laurent_text() {
        let f = lf("3*x^2 - x^-3 + 1/2*x + 5");
        assert_eq!(f.to_string(), "-x^-3 + 5 + 1/2*x^1 + 3*x^2");
        assert_eq!(lf(&f.to_string()), f);
        assert_eq!(lf("-x"), LaurentFn::monomial(rat(-1), 1));
        assert!("3*y".parse::<LaurentFn>().is_err());
        assert!("".parse::<LaurentFn>().is_err());
        assert!("x^".parse::<LaurentFn>().is_err());
        assert!("1 + + x".parse::<LaurentFn>().is_err());
    }
}
