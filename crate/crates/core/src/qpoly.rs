//! Polynomials in the formal variable `q` with exact rational coefficients,
//! together with the q-combinatorial quantities used throughout the crate:
//! q-brackets `[n]`, q-factorials `[n]!`, q-rising factorials `[b]^(a)`
//! and the inversion generating function of the symmetric group.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{guard, Error, Result};
use crate::guards::Guards;

pub use num_rational::BigRational;

/// Builds the rational `n / 1`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the reduced rational `num / den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A polynomial in `q` with exact rational coefficients.
///
/// Stored as integer numerators in ascending degree over one positive common
/// denominator. The form is canonical: no trailing zero numerator, the
/// denominator is coprime to the numerators' content, and the zero polynomial
/// has no numerators and denominator 1. Structural equality is therefore
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Default for QPoly {
    fn default() -> Self {
        QPoly::zero()
    }
}

impl QPoly {
    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return QPoly::zero();
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c = &*c / &g);
                den /= &g;
            }
        }
        QPoly { num, den }
    }

    fn integral(num: Vec<BigInt>) -> Self {
        Self::normalized(num, BigInt::one())
    }

    pub fn zero() -> Self {
        QPoly {
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::integral(vec![BigInt::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut num = vec![BigInt::zero(); degree + 1];
        num[degree] = c.numer().clone();
        Self::normalized(num, c.denom().clone())
    }

    /// `q^degree`.
    pub fn q_pow(degree: usize) -> Self {
        Self::monomial(BigRational::one(), degree)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(num, den)
    }

    /// Integer coefficients in ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::integral(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in ascending degree; empty for the zero polynomial.
    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|d| self.coeff(d)).collect()
    }

    pub fn coeff(&self, degree: usize) -> BigRational {
        match self.num.get(degree) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// True when every coefficient is a nonnegative integer, i.e. the
    /// polynomial lies in `N[q]`.
    pub fn is_natural(&self) -> bool {
        self.den.is_one() && self.num.iter().all(|c| !c.is_negative())
    }

    fn is_single_term(&self) -> bool {
        self.num.iter().filter(|c| !c.is_zero()).count() <= 1
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut num = vec![BigInt::zero(); k];
        num.extend(self.num.iter().cloned());
        QPoly {
            num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(
            self.num.iter().map(|x| x * c.numer()).collect(),
            &self.den * c.denom(),
        )
    }

    /// Exact division by a nonzero rational scalar.
    pub fn div_scalar(&self, c: &BigRational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("division of a polynomial by zero".into()));
        }
        Ok(self.scale(&c.recip()))
    }

    /// Exact Horner evaluation at `q0`.
    pub fn eval_at(&self, q0: &BigRational) -> BigRational {
        let n = self.num.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * q0 + BigRational::from_integer(c.clone())
        });
        n / BigRational::from_integer(self.den.clone())
    }

    /// Multiplication by `[n] = 1 + q + ... + q^(n-1)` as a sliding-window sum.
    pub fn mul_bracket(&self, n: u32) -> Self {
        let n = n as usize;
        if n == 0 || self.is_zero() {
            return Self::zero();
        }
        let len = self.num.len() + n - 1;
        let mut num = Vec::with_capacity(len);
        let mut window = BigInt::zero();
        for j in 0..len {
            if let Some(c) = self.num.get(j) {
                window += c;
            }
            if j >= n {
                window -= &self.num[j - n];
            }
            num.push(window.clone());
        }
        Self::normalized(num, self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// JSON form: an array of `[degree, "num", "den"]` triples.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| json!([d, c.numer().to_string(), c.denom().to_string()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a polynomial triple array: {v}"));
        let mut coeffs: Vec<BigRational> = Vec::new();
        for t in v.as_array().ok_or_else(bad)? {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let d = t[0].as_u64().ok_or_else(bad)? as usize;
            let n: BigInt = t[1].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let m: BigInt = t[2].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if m.is_zero() {
                return Err(bad());
            }
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] += BigRational::new(n, m);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// LaTeX rendering, e.g. `1+2q+2q^{2}+q^{3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let var = match d {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{{{d}}}"),
            };
            if !(a.is_one() && d > 0) {
                if a.is_integer() {
                    out.push_str(&a.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()));
                }
            }
            out.push_str(&var);
        }
        out
    }

    /// LaTeX for use as a coefficient in front of a monomial: a lone `1` is
    /// dropped and sums are parenthesized.
    pub(crate) fn latex_coefficient(&self) -> String {
        if self.is_single_term() {
            match self.to_latex().as_str() {
                "1" => String::new(),
                "-1" => "-".into(),
                s => s.to_string(),
            }
        } else {
            format!("({})", self.to_latex())
        }
    }
}

impl fmt::Display for QPoly {
    /// Ascending-degree text form such as `1 + 2*q + 2*q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let a = c.abs();
            let var = match d {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{d}"),
            };
            if d == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{a}*{var}")?;
            }
        }
        Ok(())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if self.num.len() < rhs.num.len() {
            self.num.resize(rhs.num.len(), BigInt::zero());
        }
        if self.den == rhs.den {
            for (c, s) in self.num.iter_mut().zip(&rhs.num) {
                *c += s;
            }
            if self.den.is_one() {
                while self.num.last().is_some_and(Zero::is_zero) {
                    self.num.pop();
                }
                if self.num.is_empty() {
                    *self = QPoly::zero();
                }
                return;
            }
            let num = std::mem::take(&mut self.num);
            *self = QPoly::normalized(num, self.den.clone());
        } else {
            let num = self
                .num
                .iter()
                .enumerate()
                .map(|(i, c)| match rhs.num.get(i) {
                    Some(s) => c * &rhs.den + s * &self.den,
                    None => c * &rhs.den,
                })
                .collect();
            *self = QPoly::normalized(num, &self.den * &rhs.den);
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        QPoly::normalized(num, &self.den * &rhs.den)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

/// `[n] = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn qbracket(n: u32) -> QPoly {
    QPoly::integral(vec![BigInt::one(); n as usize])
}

/// `[n]! = [1][2]...[n]`.
pub fn qfactorial(n: u32) -> QPoly {
    (1..=n).map(qbracket).product()
}

/// The q-rising factorial `[b]^(a) = [b][b+1]...[b+a-1]`.
pub fn qrising(b: u32, a: u32) -> QPoly {
    (0..a).map(|i| qbracket(b + i)).product()
}

/// The increasing factorial `n (n+1) ... (n+k-1)`.
pub fn rising(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n + i))
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    rising(1, n)
}

/// `[n]` evaluated at `q0`, for any integer `n` and `q0` not in `{0, 1}`:
/// `(1 - q0^n) / (1 - q0)`.
pub fn bracket_at(n: i64, q0: &BigRational) -> BigRational {
    let one = BigRational::one();
    let pow = rat_pow(q0, n);
    (&one - pow) / (&one - q0)
}

/// `[b]^(a)` evaluated at `q0` for an integer base.
pub fn rising_bracket_at(b: i64, a: u32, q0: &BigRational) -> BigRational {
    (0..a as i64).map(|i| bracket_at(b + i, q0)).product()
}

/// Integer power of a rational (negative exponents invert).
pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// A permutation of `{1, ..., n}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its images; they must be a bijection of `1..=n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// All permutations of `{1, ..., n}` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Number of pairs `i < j` with `sigma(i) > sigma(j)`.
    pub fn inversions(&self) -> usize {
        let s = &self.images;
        (0..s.len())
            .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| s[i] > s[j])
            .count()
    }
}

/// `sum over sigma in S_n of q^inv(sigma)`, by enumeration of `S_n`.
pub fn inversion_gf(n: usize, guards: &Guards) -> Result<QPoly> {
    guard("n for inversion enumeration", n, guards.inversion_n)?;
    let mut counts = vec![BigInt::zero(); n * n.saturating_sub(1) / 2 + 1];
    for sigma in Permutation::all(n) {
        counts[sigma.inversions()] += 1;
    }
    Ok(QPoly::from_coeffs(
        counts.into_iter().map(BigRational::from_integer).collect(),
    ))
}

/// Exact value at `q0` of a polynomial; free-function form of [`QPoly::eval_at`].
pub fn eval_at(p: &QPoly, q0: &BigRational) -> BigRational {
    p.eval_at(q0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        assert_eq!(qbracket(0), QPoly::zero());
        assert_eq!(qbracket(1), QPoly::one());
        assert_eq!(qbracket(3), QPoly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn factorials() {
        assert_eq!(qfactorial(0), QPoly::one());
        assert_eq!(qfactorial(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(qfactorial(3), QPoly::from_ints(&[1, 2, 2, 1]));
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(qrising(5, 0), QPoly::one());
        assert_eq!(qrising(1, 2), QPoly::from_ints(&[1, 1]));
        assert_eq!(qrising(2, 2), QPoly::from_ints(&[1, 2, 2, 1]));
        assert_eq!(rising(3, 0), BigInt::from(1));
        assert_eq!(rising(2, 3), BigInt::from(24));
        assert_eq!(rising(0, 2), BigInt::from(0));
    }

    #[test]
    fn inversion_counts() {
        let g = Guards::default();
        assert_eq!(inversion_gf(0, &g).unwrap(), QPoly::one());
        assert_eq!(inversion_gf(2, &g).unwrap(), QPoly::from_ints(&[1, 1]));
        assert_eq!(
            inversion_gf(3, &g).unwrap(),
            QPoly::from_ints(&[1, 2, 2, 1])
        );
        assert!(matches!(inversion_gf(10, &g), Err(Error::Guard { .. })));
    }

    #[test]
    fn evaluation() {
        assert_eq!(qbracket(3).eval_at(&rat(1)), rat(3));
        assert_eq!(QPoly::from_ints(&[1, 1]).eval_at(&ratio(1, 2)), ratio(3, 2));
        assert_eq!(QPoly::zero().eval_at(&ratio(7, 3)), rat(0));
    }

    #[test]
    fn brackets_at_one_count_and_factorials_give_n_factorial() {
        for n in 0..=20u32 {
            assert_eq!(qbracket(n).eval_at(&rat(1)), rat(n as i64));
            assert_eq!(
                qfactorial(n).eval_at(&rat(1)),
                BigRational::from_integer(factorial(n as u64))
            );
        }
    }

    #[test]
    fn bracket_at_matches_polynomial() {
        let q0 = ratio(2, 3);
        for n in 0..8u32 {
            assert_eq!(bracket_at(n as i64, &q0), qbracket(n).eval_at(&q0));
        }
        // [-1] = -q^{-1}
        assert_eq!(bracket_at(-1, &q0), -ratio(3, 2));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(qfactorial(3).to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::q_pow(6).to_string(), "q^6");
        let p = QPoly::from_coeffs(vec![rat(0), ratio(-1, 2), rat(3)]);
        assert_eq!(p.to_string(), "-1/2*q + 3*q^2");
        assert_eq!(QPoly::from_ints(&[1, -1]).to_string(), "1 - q");
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(qfactorial(3).to_latex(), "1+2q+2q^{2}+q^{3}");
        assert_eq!(
            QPoly::from_coeffs(vec![ratio(1, 2)]).to_latex(),
            "\\frac{1}{2}"
        );
    }

    #[test]
    fn json_round_trip() {
        let p = QPoly::from_coeffs(vec![ratio(1, 3), rat(0), rat(-7)]);
        let v = p.to_json();
        assert_eq!(v, json!([[0, "1", "3"], [2, "-7", "1"]]));
        assert_eq!(QPoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn naturality() {
        assert!(qfactorial(4).is_natural());
        assert!(!QPoly::from_coeffs(vec![ratio(1, 2)]).is_natural());
        assert!(!QPoly::from_ints(&[1, -1]).is_natural());
    }

    #[test]
    fn permutations() {
        let p = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.inverse().images(), &[3, 1, 2]);
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
