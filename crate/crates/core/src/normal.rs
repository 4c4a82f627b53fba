//! Normal coordinates `c(a, b, k)` and normal polynomials `N(A, k, q)`.
//!
//! `c(a, b, k)` is the coefficient of `x^{b+k} y^{a-k}` in the normal form of
//! `y^a x^b`; `N(A, k, q)` is the coefficient of `x^{|a|+k} y^{|b|-k}` in the
//! normal form of `x^{a_1} y^{b_1} ... x^{a_n} y^{b_n}`. Each quantity is
//! available through several independent routes so that they can be checked
//! against one another and against the rewriting engine.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{guard, Error, Result};
use crate::freealg::{monomial, normal_order, Word};
use crate::guards::Guards;
use crate::qpoly::{binomial, qbracket, qrising, rising, QPoly};

/// A sequence of exponent pairs `((a_1, b_1), ..., (a_n, b_n))` naming the
/// monomial `x^{a_1} y^{b_1} ... x^{a_n} y^{b_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialSeq {
    pairs: Vec<(u32, u32)>,
}

impl MonomialSeq {
    pub fn new(pairs: Vec<(u32, u32)>) -> Self {
        MonomialSeq { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn a(&self, i: usize) -> u32 {
        self.pairs[i].0
    }

    pub fn b(&self, i: usize) -> u32 {
        self.pairs[i].1
    }

    /// `(|a|, |b|)`.
    pub fn total(&self) -> (u32, u32) {
        self.pairs
            .iter()
            .fold((0, 0), |(sa, sb), &(a, b)| (sa + a, sb + b))
    }

    /// `|a_{>i}|` for a 0-based index `i`.
    pub fn a_after(&self, i: usize) -> u32 {
        self.pairs[i + 1..].iter().map(|p| p.0).sum()
    }

    /// `|b_{<=i}|` for a 0-based index `i`.
    pub fn b_through(&self, i: usize) -> u32 {
        self.pairs[..=i].iter().map(|p| p.1).sum()
    }

    pub fn degree(&self) -> usize {
        let (a, b) = self.total();
        (a + b) as usize
    }

    pub fn to_word(&self) -> Word {
        Word::from_pairs(&self.pairs)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.pairs
                .iter()
                .map(|&(a, b)| Value::Array(vec![a.into(), b.into()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not an array of exponent pairs: {v}"));
        v.as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|p| match p.as_array().map(|p| p.as_slice()) {
                Some([a, b]) => Ok((
                    a.as_u64().ok_or_else(bad)? as u32,
                    b.as_u64().ok_or_else(bad)? as u32,
                )),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()
            .map(MonomialSeq::new)
    }
}

impl From<&[(u32, u32)]> for MonomialSeq {
    fn from(pairs: &[(u32, u32)]) -> Self {
        MonomialSeq::new(pairs.to_vec())
    }
}

impl FromStr for MonomialSeq {
    type Err = Error;

    /// Parses `(a1,b1)(a2,b2)...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{why} in monomial sequence {s:?}"));
        let mut pairs = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let (inside, tail) = body.split_once(')').ok_or_else(|| bad("missing ')'"))?;
            let (a, b) = inside
                .split_once(',')
                .ok_or_else(|| bad("expected 'a,b'"))?;
            let a = a.trim().parse().map_err(|_| bad("bad exponent"))?;
            let b = b.trim().parse().map_err(|_| bad("bad exponent"))?;
            pairs.push((a, b));
            rest = tail.trim_start();
        }
        Ok(MonomialSeq::new(pairs))
    }
}

impl fmt::Display for MonomialSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// A vector `p = (p_1, ..., p_{n-1})` of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `|p_{>i}|` for a 0-based index.
    pub fn after(&self, i: usize) -> u32 {
        self.parts[i + 1..].iter().sum()
    }

    /// `|p_{<i}|` for a 0-based index.
    pub fn before(&self, i: usize) -> u32 {
        self.parts[..i].iter().sum()
    }

    /// All compositions of `k` into `len` parts, in lexicographic order, where
    /// part `i` may not exceed `bound(i, parts_so_far)`.
    pub fn enumerate(len: usize, k: u32, bound: impl Fn(usize, &[u32]) -> u32) -> Vec<Composition> {
        fn go(
            len: usize,
            remaining: u32,
            prefix: &mut Vec<u32>,
            bound: &dyn Fn(usize, &[u32]) -> u32,
            out: &mut Vec<Composition>,
        ) {
            let i = prefix.len();
            if i == len {
                if remaining == 0 {
                    out.push(Composition {
                        parts: prefix.clone(),
                    });
                }
                return;
            }
            let hi = bound(i, prefix).min(remaining);
            for v in 0..=hi {
                prefix.push(v);
                go(len, remaining - v, prefix, bound, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(len, k, &mut Vec::with_capacity(len), &bound, &mut out);
        out
    }
}

thread_local! {
    static C_MEMO: RefCell<HashMap<(u32, u32, u32), QPoly>> = RefCell::new(HashMap::new());
}

/// `c(a, b, k)` from the three-case recursion in `a` with `c(0, b, k) = delta_{0k}`.
pub fn c_recursive(a: u32, b: u32, k: u32) -> QPoly {
    if k > a {
        return QPoly::zero();
    }
    if a == 0 {
        return QPoly::one();
    }
    if let Some(hit) = C_MEMO.with(|m| m.borrow().get(&(a, b, k)).cloned()) {
        return hit;
    }
    let prev = a - 1;
    let value = if k == 0 {
        c_recursive(prev, b, 0).shift(b as usize)
    } else if k == a {
        &c_recursive(prev, b, prev) * &qbracket(b + prev)
    } else {
        &c_recursive(prev, b, k).shift((b + k) as usize)
            + &(&c_recursive(prev, b, k - 1) * &qbracket(b + k - 1))
    };
    C_MEMO.with(|m| m.borrow_mut().insert((a, b, k), value.clone()));
    value
}

fn check_subset_args(a: u32, b: u32, guards: &Guards) -> Result<()> {
    if b == 0 {
        return Err(Error::Domain(
            "the subset and chain forms of c(a,b,k) require b >= 1".into(),
        ));
    }
    guard("a for subset enumeration", a as usize, guards.subset_a)
}

/// `c(a, b, k)` as the weighted count of `k`-subsets `A` of `[1, a]` with weight
/// `[b]^(k) q^{(a-k)b} q^{sum over i not in A of |A ∩ [1, i-1]|}`.
pub fn c_subsets(a: u32, b: u32, k: u32, guards: &Guards) -> Result<QPoly> {
    check_subset_args(a, b, guards)?;
    if k > a {
        return Ok(QPoly::zero());
    }
    let mut counts: Vec<i64> = Vec::new();
    for subset in (1..=a).combinations(k as usize) {
        let mut inside = 0usize;
        let mut stat = 0usize;
        let mut next = subset.iter().peekable();
        for i in 1..=a {
            if next.peek() == Some(&&i) {
                next.next();
                inside += 1;
            } else {
                stat += inside;
            }
        }
        if counts.len() <= stat {
            counts.resize(stat + 1, 0);
        }
        counts[stat] += 1;
    }
    let sum = QPoly::from_ints(&counts);
    Ok((&qrising(b, k) * &sum).shift(((a - k) * b) as usize))
}

fn chain_sum(a: u32, k: u32) -> QPoly {
    let mut counts: Vec<i64> = Vec::new();
    for chain in (1..=a).combinations(k as usize) {
        let stat: u32 = (0..chain.len())
            .map(|s| {
                let next = chain.get(s + 1).copied().unwrap_or(a + 1);
                (s as u32 + 1) * (next - chain[s] - 1)
            })
            .sum();
        let stat = stat as usize;
        if counts.len() <= stat {
            counts.resize(stat + 1, 0);
        }
        counts[stat] += 1;
    }
    QPoly::from_ints(&counts)
}

/// `c(a, b, k)` as a sum over chains `1 <= t_1 < ... < t_k <= a` with weight
/// `q^{sum_s s (t_{s+1} - t_s - 1)}`, `t_{k+1} = a + 1`, and prefactor
/// `[b]^(k) q^{(a-k)b}`.
pub fn c_tform(a: u32, b: u32, k: u32, guards: &Guards) -> Result<QPoly> {
    check_subset_args(a, b, guards)?;
    if k > a {
        return Ok(QPoly::zero());
    }
    Ok((&qrising(b, k) * &chain_sum(a, k)).shift(((a - k) * b) as usize))
}

/// The chain form with the shifted prefactor `[b-1]^(k)` instead of `[b]^(k)`.
/// Kept only so the two prefactors can be compared; it does not equal `c(a,b,k)`
/// once `k >= 1`.
pub fn c_tform_shifted_prefactor(a: u32, b: u32, k: u32, guards: &Guards) -> Result<QPoly> {
    check_subset_args(a, b, guards)?;
    if k > a {
        return Ok(QPoly::zero());
    }
    Ok((&qrising(b - 1, k) * &chain_sum(a, k)).shift(((a - k) * b) as usize))
}

/// `c(a, b, k)` read off the rewritten normal form of `y^a x^b`.
pub fn c_oracle(a: u32, b: u32, k: u32, guards: &Guards) -> Result<QPoly> {
    let mut word = Word::xy_power(0, a);
    word.push_power(crate::freealg::Letter::X, b);
    let nf = normal_order(&word, guards)?;
    if k > a {
        return Ok(QPoly::zero());
    }
    Ok(nf.coeff(b + k, a - k))
}

/// `N(A, k, q) = sum over p |- k, p_i <= b_i, of prod_i c(b_i, |a_{>i}| + |p_{>i}|, p_i)`.
pub fn npoly_q(seq: &MonomialSeq, k: u32) -> QPoly {
    let n = seq.len();
    if n == 0 {
        return if k == 0 { QPoly::one() } else { QPoly::zero() };
    }
    Composition::enumerate(n - 1, k, |i, _| seq.b(i))
        .iter()
        .map(|p| {
            (0..n - 1)
                .map(|i| c_recursive(seq.b(i), seq.a_after(i) + p.after(i), p.parts[i]))
                .product::<QPoly>()
        })
        .sum()
}

/// `N(A, k, q)` by the left-to-right route:
/// `sum over p |- k of prod_i c(|b_{<=i}| - |p_{<i}|, a_{i+1}, p_i)` with
/// `p_i <= |b_{<=i}| - |p_{<i}|`.
pub fn npoly_q_alt(seq: &MonomialSeq, k: u32) -> QPoly {
    let n = seq.len();
    if n == 0 {
        return if k == 0 { QPoly::one() } else { QPoly::zero() };
    }
    Composition::enumerate(n - 1, k, |i, prefix| {
        seq.b_through(i) - prefix.iter().sum::<u32>()
    })
    .iter()
    .map(|p| {
        (0..n - 1)
            .map(|i| c_recursive(seq.b_through(i) - p.before(i), seq.a(i + 1), p.parts[i]))
            .product::<QPoly>()
    })
    .sum()
}

/// `N(A, k, q)` read off the rewritten normal form of the monomial.
pub fn npoly_oracle(seq: &MonomialSeq, k: u32, guards: &Guards) -> Result<QPoly> {
    let nf = monomial(seq.pairs(), guards)?;
    let (sa, sb) = seq.total();
    if k > sb {
        return Ok(QPoly::zero());
    }
    Ok(nf.coeff(sa + k, sb - k))
}

/// The `q = 1` normal coordinate from binomials and increasing factorials:
/// `sum over p |- k of prod_i C(b_i, p_i) (|a_{>i}| + |p_{>i}|)^(p_i)`.
pub fn npoly_q1(seq: &MonomialSeq, k: u32) -> BigInt {
    let n = seq.len();
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    Composition::enumerate(n - 1, k, |i, _| seq.b(i))
        .iter()
        .map(|p| {
            (0..n - 1)
                .map(|i| {
                    let pi = p.parts[i] as u64;
                    binomial(seq.b(i) as u64, pi) * rising((seq.a_after(i) + p.after(i)) as u64, pi)
                })
                .product::<BigInt>()
        })
        .sum()
}

/// Block index of each element of `E` (the `y` letters) and of each element
/// of `F` (the `x` letters).
fn blocks(seq: &MonomialSeq) -> (Vec<usize>, Vec<usize>) {
    let mut e = Vec::new();
    let mut f = Vec::new();
    for (i, &(a, b)) in seq.pairs().iter().enumerate() {
        f.extend(std::iter::repeat_n(i, a as usize));
        e.extend(std::iter::repeat_n(i, b as usize));
    }
    (e, f)
}

/// Visits every map sending each element of `E` either nowhere or to an element
/// of `F` in a strictly later block, reporting the image size of each `F` element.
fn for_each_assignment(seq: &MonomialSeq, mut visit: impl FnMut(&[u32])) {
    let (e, f) = blocks(seq);
    let mut load = vec![0u32; f.len()];
    fn go(idx: usize, e: &[usize], f: &[usize], load: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if idx == e.len() {
            visit(load);
            return;
        }
        go(idx + 1, e, f, load, visit);
        for target in 0..f.len() {
            if f[target] > e[idx] {
                load[target] += 1;
                go(idx + 1, e, f, load, visit);
                load[target] -= 1;
            }
        }
    }
    go(0, &e, &f, &mut load, &mut visit);
}

fn check_mk_guard(seq: &MonomialSeq, guards: &Guards) -> Result<()> {
    guard(
        "total degree for map enumeration",
        seq.degree(),
        guards.mk_total,
    )
}

/// Brute-force counts, indexed by `k`, of the maps `f` from `F` to linearly
/// ordered subsets of `E` with pairwise disjoint images, `y in f(x)` only when
/// the block of `y` precedes the block of `x`, and total image size `k`.
///
/// Each assignment of `E` elements to targets is enumerated and contributes
/// `prod |f(x)|!` orderings. Entry `k` equals `N(A, k)` at `q = 1`.
pub fn mk_counts(seq: &MonomialSeq, guards: &Guards) -> Result<Vec<BigInt>> {
    check_mk_guard(seq, guards)?;
    let fact: Vec<u128> = (0..=seq.degree() as u128)
        .scan(1u128, |acc, i| {
            *acc *= i.max(1);
            Some(*acc)
        })
        .collect();
    let mut totals = vec![0u128; seq.total().1 as usize + 1];
    for_each_assignment(seq, |load| {
        let k: u32 = load.iter().sum();
        totals[k as usize] += load.iter().map(|&l| fact[l as usize]).product::<u128>();
    });
    Ok(totals.into_iter().map(BigInt::from).collect())
}

/// The entry of [`mk_counts`] at `k`.
pub fn mk_count(seq: &MonomialSeq, k: u32, guards: &Guards) -> Result<BigInt> {
    Ok(mk_counts(seq, guards)?
        .get(k as usize)
        .cloned()
        .unwrap_or_else(BigInt::zero))
}

/// The same enumeration with plain (unordered) images. It agrees with
/// `N(A, k)` only while no element of `F` receives two elements of `E`.
pub fn mk_count_unordered(seq: &MonomialSeq, k: u32, guards: &Guards) -> Result<BigInt> {
    check_mk_guard(seq, guards)?;
    let mut total = BigInt::zero();
    for_each_assignment(seq, |load| {
        if load.iter().sum::<u32>() == k {
            total += 1;
        }
    });
    Ok(total)
}
