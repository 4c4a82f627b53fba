//! Words over `{x, y}` and the rewriting engine that straightens them into
//! the normal basis `x^b y^c` of the q-deformed relation `yx = q xy + x^2`.
//!
//! The engine is the brute-force ground truth for every closed formula in the
//! crate, so it is deliberately formula-free: it only ever replaces a factor
//! `yx` by `q xy + xx` and merges equal words.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{guard, Error, Result};
use crate::guards::Guards;
use crate::qpoly::{BigRational, QPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

/// A word in the free algebra on `x` and `y`, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// The word `x^a y^b`.
    pub fn xy_power(a: u32, b: u32) -> Self {
        let mut w = Word::empty();
        w.push_power(Letter::X, a);
        w.push_power(Letter::Y, b);
        w
    }

    /// The word `x^{a_1} y^{b_1} ... x^{a_n} y^{b_n}`.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut w = Word::empty();
        for &(a, b) in pairs {
            w.push_power(Letter::X, a);
            w.push_power(Letter::Y, b);
        }
        w
    }

    pub fn push_power(&mut self, letter: Letter, e: u32) {
        self.letters.extend(std::iter::repeat_n(letter, e as usize));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// All words of length exactly `len`.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << len).map(move |bits| Word {
            letters: (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Y
                    } else {
                        Letter::X
                    }
                })
                .collect(),
        })
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'x' | 'X' => Ok(Letter::X),
                'y' | 'Y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!(
                    "unexpected letter {other:?} in word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

/// An element of the algebra in normal form: `sum coeff(b, c) x^b y^c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MWElement {
    terms: BTreeMap<(u32, u32), QPoly>,
}

impl MWElement {
    pub fn zero() -> Self {
        MWElement::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, QPoly::one())
    }

    /// `coeff * x^b y^c`.
    pub fn term(b: u32, c: u32, coeff: QPoly) -> Self {
        let mut e = MWElement::zero();
        e.add_term(b, c, &coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), QPoly)>) -> Self {
        let mut e = MWElement::zero();
        for ((b, c), p) in terms {
            e.add_term(b, c, &p);
        }
        e
    }

    pub fn add_term(&mut self, b: u32, c: u32, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((b, c)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(b, c));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), QPoly> {
        &self.terms
    }

    /// Coefficient of `x^b y^c`, zero when absent.
    pub fn coeff(&self, b: u32, c: u32) -> QPoly {
        self.terms.get(&(b, c)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, p: &QPoly) -> MWElement {
        MWElement::from_terms(self.terms.iter().map(|(&k, c)| (k, c * p)))
    }

    pub fn add(&self, other: &MWElement) -> MWElement {
        let mut out = self.clone();
        for (&(b, c), p) in &other.terms {
            out.add_term(b, c, p);
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(&(b, c), p)| {
                let mono = format!("{}{}", latex_power("x", b), latex_power("y", c));
                if mono.is_empty() {
                    p.to_latex()
                } else {
                    format!("{}{mono}", p.latex_coefficient())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON: array of `{"x": b, "y": c, "coeff": <QPoly JSON>}` in lexicographic order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(b, c), p)| json!({"x": b, "y": c, "coeff": p.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a normal-form element: {v}"));
        let mut e = MWElement::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let b = t.get("x").and_then(Value::as_u64).ok_or_else(bad)? as u32;
            let c = t.get("y").and_then(Value::as_u64).ok_or_else(bad)? as u32;
            let p = QPoly::from_json(t.get("coeff").ok_or_else(bad)?)?;
            e.add_term(b, c, &p);
        }
        Ok(e)
    }
}

pub(crate) fn latex_power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{e}}}"),
    }
}

impl fmt::Display for MWElement {
    /// `(<QPoly>)*x^b*y^c` terms joined by ` + `, zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(b, c), p)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})")?;
            if b > 0 {
                write!(f, "*x^{b}")?;
            }
            if c > 0 {
                write!(f, "*y^{c}")?;
            }
        }
        Ok(())
    }
}

/// Which `yx` factor of a word is rewritten first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Words are packed as bit strings (bit `i` set means letter `i` is `y`).
/// Both rewrites `yx -> xy` and `yx -> xx` preserve length, so the pack is
/// stable for the whole computation.
fn pack(word: &Word) -> u64 {
    word.letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::Y)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of (y before x) pairs in a packed word.
fn inversions(bits: u64, len: usize) -> u32 {
    let mut ys = 0;
    let mut inv = 0;
    for i in 0..len {
        if bits >> i & 1 == 1 {
            ys += 1;
        } else {
            inv += ys;
        }
    }
    inv
}

/// Reduces a word to normal form with the default leftmost strategy.
pub fn normal_order(word: &Word, guards: &Guards) -> Result<MWElement> {
    normal_order_with(word, Strategy::Leftmost, guards)
}

/// Reduces a word to normal form by repeatedly rewriting `yx -> q xy + xx`.
///
/// Pending words are kept in a map keyed by `(#y, inversions, word)` and the
/// largest key is expanded first. Every rewrite strictly lowers that key
/// (`xx` drops a `y`; `xy` keeps the `y` count and removes one inversion), so
/// each word is expanded exactly once with all its contributions merged.
pub fn normal_order_with(word: &Word, strategy: Strategy, guards: &Guards) -> Result<MWElement> {
    let len = word.len();
    guard("word length", len, guards.word_len.min(64))?;
    let pairs_mask = low_mask(len.saturating_sub(1));

    let mut pending: BTreeMap<(u32, u32, u64), QPoly> = BTreeMap::new();
    let start = pack(word);
    pending.insert(
        (start.count_ones(), inversions(start, len), start),
        QPoly::one(),
    );

    let mut out = MWElement::zero();
    while let Some(((ys, inv, bits), coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        // bit i is y and bit i+1 is x
        let yx = bits & !(bits >> 1) & pairs_mask;
        if yx == 0 {
            let c = bits.count_ones();
            out.add_term(len as u32 - c, c, &coeff);
            continue;
        }
        let i = match strategy {
            Strategy::Leftmost => yx.trailing_zeros(),
            Strategy::Rightmost => 63 - yx.leading_zeros(),
        };
        let swapped = (bits & !(1 << i)) | 1 << (i + 1);
        *pending.entry((ys, inv - 1, swapped)).or_default() += &coeff.shift(1);
        let dropped = bits & !(1 << i);
        let key = (ys - 1, inversions(dropped, len), dropped);
        *pending.entry(key).or_default() += &coeff;
    }
    Ok(out)
}

/// Product in the algebra: concatenate normal monomials and straighten.
pub fn multiply(u: &MWElement, v: &MWElement, guards: &Guards) -> Result<MWElement> {
    let mut out = MWElement::zero();
    for (&(b1, c1), p1) in &u.terms {
        for (&(b2, c2), p2) in &v.terms {
            let word = Word::from_pairs(&[(b1, c1), (b2, c2)]);
            let coeff = p1 * p2;
            for (&(b, c), p) in &normal_order(&word, guards)?.terms {
                out.add_term(b, c, &(p * &coeff));
            }
        }
    }
    Ok(out)
}

/// Normal form of `x^{a_1} y^{b_1} ... x^{a_n} y^{b_n}` as an iterated product.
pub fn monomial(pairs: &[(u32, u32)], guards: &Guards) -> Result<MWElement> {
    let total: usize = pairs.iter().map(|&(a, b)| (a + b) as usize).sum();
    guard("word length", total, guards.word_len.min(64))?;
    pairs.iter().try_fold(MWElement::one(), |acc, &(a, b)| {
        multiply(&acc, &MWElement::term(a, b, QPoly::one()), guards)
    })
}

/// Evaluates every coefficient at `q0`, dropping those that vanish.
pub fn specialize_q(u: &MWElement, q0: &BigRational) -> BTreeMap<(u32, u32), BigRational> {
    u.terms
        .iter()
        .map(|(&k, p)| (k, p.eval_at(q0)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{qbracket, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn nf(s: &str) -> MWElement {
        normal_order(&w(s), &Guards::default()).unwrap()
    }

    #[test]
    fn defining_relation() {
        let expected = MWElement::from_terms([((1, 1), QPoly::q_pow(1)), ((2, 0), QPoly::one())]);
        assert_eq!(nf("yx"), expected);
    }

    #[test]
    fn y_past_two_x() {
        let expected = MWElement::from_terms([
            ((2, 1), QPoly::q_pow(2)),
            ((3, 0), QPoly::from_ints(&[1, 1])),
        ]);
        assert_eq!(nf("yxx"), expected);
    }

    #[test]
    fn normal_words_are_fixed() {
        assert_eq!(nf("xxyy"), MWElement::term(2, 2, QPoly::one()));
        assert_eq!(nf(""), MWElement::one());
    }

    #[test]
    fn y_past_powers_of_x() {
        for n in 1..=10u32 {
            let mut word = Word::xy_power(0, 1);
            word.push_power(Letter::X, n);
            let expected = MWElement::from_terms([
                ((n, 1), QPoly::q_pow(n as usize)),
                ((n + 1, 0), qbracket(n)),
            ]);
            assert_eq!(normal_order(&word, &Guards::default()).unwrap(), expected);
        }
    }

    #[test]
    fn products() {
        let g = Guards::default();
        let xy = MWElement::term(1, 1, QPoly::one());
        let expected = MWElement::from_terms([((2, 2), QPoly::q_pow(1)), ((3, 1), QPoly::one())]);
        assert_eq!(multiply(&xy, &xy, &g).unwrap(), expected);
        assert_eq!(
            multiply(&MWElement::one(), &expected, &g).unwrap(),
            expected
        );

        let y = MWElement::term(0, 1, QPoly::one());
        let x3 = MWElement::term(3, 0, QPoly::one());
        let expected = MWElement::from_terms([
            ((3, 1), QPoly::q_pow(3)),
            ((4, 0), QPoly::from_ints(&[1, 1, 1])),
        ]);
        assert_eq!(multiply(&y, &x3, &g).unwrap(), expected);
    }

    #[test]
    fn monomials() {
        let g = Guards::default();
        assert_eq!(
            monomial(&[(2, 3)], &g).unwrap(),
            MWElement::term(2, 3, QPoly::one())
        );
        assert_eq!(monomial(&[(1, 1), (1, 1)], &g).unwrap(), nf("xyxy"));
        assert_eq!(monomial(&[(0, 1), (1, 0)], &g).unwrap(), nf("yx"));
    }

    #[test]
    fn specialization() {
        let at1 = specialize_q(&nf("yx"), &rat(1));
        assert_eq!(at1, BTreeMap::from([((1, 1), rat(1)), ((2, 0), rat(1))]));
        let at1 = specialize_q(&nf("yxx"), &rat(1));
        assert_eq!(at1, BTreeMap::from([((2, 1), rat(1)), ((3, 0), rat(2))]));
        assert!(specialize_q(&MWElement::zero(), &rat(5)).is_empty());
        // 1 + q vanishes at q = -1
        let at_minus = specialize_q(&nf("yxx"), &rat(-1));
        assert_eq!(at_minus, BTreeMap::from([((2, 1), rat(1))]));
    }

    #[test]
    fn rendering() {
        assert_eq!(nf("yx").to_string(), "(q)*x^1*y^1 + (1)*x^2");
        assert_eq!(nf("").to_string(), "(1)");
        assert_eq!(nf("yxx").to_latex(), "q^{2}x^{2}y + (1+q)x^{3}");
        let e = nf("yyxx");
        assert_eq!(MWElement::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn guards_and_parse_errors() {
        let long = Word::xy_power(40, 30);
        assert!(matches!(
            normal_order(&long, &Guards::default()),
            Err(Error::Guard { .. })
        ));
        assert!("xzy".parse::<Word>().is_err());
    }
}
