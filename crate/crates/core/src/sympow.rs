//! Symmetric powers `Sym^n` of the algebra and products of `m` elements there.
//!
//! A product of `m` classes `x_1^{a_{i1}} y_1^{b_{i1}} ... x_n^{a_{in}} y_n^{b_{in}}`
//! is computed in scaled form, multiplied by `(n!)^{m-1}`, which is the sum
//! over `sigma in {1} x S_n^{m-1}` of the tensor products of the permuted
//! column words. Two routes are provided: the coefficient formula built from
//! `c(a, b, k)`, and a symmetrization oracle that straightens every column
//! word with the rewriting engine.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{guard, Error, Result};
use crate::freealg::{latex_power, normal_order, Word};
use crate::guards::Guards;
use crate::normal::{npoly_q, npoly_q1, MonomialSeq};
use crate::qpoly::{factorial, BigRational, Permutation, QPoly};

/// The class of `x_1^{a_1} y_1^{b_1} ... x_n^{a_n} y_n^{b_n}`, with its
/// factors sorted so that permuted tensors compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMonomial {
    factors: Vec<(u32, u32)>,
}

impl SymMonomial {
    pub fn new(mut factors: Vec<(u32, u32)>) -> Self {
        factors.sort_unstable();
        SymMonomial { factors }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    fn latex(&self) -> String {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, &(a, b))| {
                format!(
                    "{}{}",
                    latex_power(&format!("x_{}", j + 1), a),
                    latex_power(&format!("y_{}", j + 1), b)
                )
            })
            .collect()
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .enumerate()
            .map(|(j, (a, b))| format!("x{0}^{a}*y{0}^{b}", j + 1))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A finite sum of symmetric monomials with `Q[q]` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElement {
    terms: BTreeMap<SymMonomial, QPoly>,
}

/// A symmetric-power element after evaluating `q`.
pub type SymValues = BTreeMap<SymMonomial, BigRational>;

impl SymElement {
    pub fn zero() -> Self {
        SymElement::default()
    }

    pub fn add_term(&mut self, mono: SymMonomial, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        if let Some(rank) = self.rank() {
            assert_eq!(rank, mono.rank(), "mixed tensor ranks in one element");
        }
        let slot = self.terms.entry(mono).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<SymMonomial, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, mono: &SymMonomial) -> QPoly {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn rank(&self) -> Option<usize> {
        self.terms.keys().next().map(SymMonomial::rank)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_natural(&self) -> bool {
        self.terms.values().all(QPoly::is_natural)
    }

    pub fn evaluate(&self, q0: &BigRational) -> SymValues {
        self.terms
            .iter()
            .map(|(m, p)| (m.clone(), p.eval_at(q0)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    pub fn div_scalar(&self, c: &BigRational) -> Result<SymElement> {
        let mut out = SymElement::zero();
        for (m, p) in &self.terms {
            out.add_term(m.clone(), &p.div_scalar(c)?);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, p)| {
                let mono = m.latex();
                if mono.is_empty() {
                    p.to_latex()
                } else {
                    format!("{}{mono}", p.latex_coefficient())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON: array of `{"factors": [[a, b], ...], "coeff": <QPoly JSON>}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, p)| {
                    json!({
                        "factors": m.factors.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                        "coeff": p.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a symmetric-power element: {v}"));
        let mut out = SymElement::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let factors = MonomialSeq::from_json(t.get("factors").ok_or_else(bad)?)?;
            let coeff = QPoly::from_json(t.get("coeff").ok_or_else(bad)?)?;
            out.add_term(SymMonomial::new(factors.pairs().to_vec()), &coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, p)| {
                if m.rank() == 0 {
                    format!("({p})")
                } else {
                    format!("({p})*{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Exponents `(a_ij, b_ij)` for `m` rows (factors of the product) and `n`
/// columns (tensor positions).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorGrid {
    rows: Vec<Vec<(u32, u32)>>,
}

impl FactorGrid {
    pub fn new(rows: Vec<Vec<(u32, u32)>>) -> Result<Self> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || n == 0 {
            return Err(Error::Domain(
                "a factor grid needs at least one row and one column".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain(
                "every row of a factor grid needs the same length".into(),
            ));
        }
        Ok(FactorGrid { rows })
    }

    pub fn rows(&self) -> &[Vec<(u32, u32)>] {
        &self.rows
    }

    /// Number of factors `m`.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Tensor rank `n`.
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    /// Applies the same permutation of columns to every row (1-based images:
    /// entry `j` of the new row is entry `perm(j)` of the old one).
    pub fn permute_columns(&self, perm: &Permutation) -> FactorGrid {
        FactorGrid {
            rows: self
                .rows
                .iter()
                .map(|r| (1..=r.len()).map(|j| r[perm.apply(j) - 1]).collect())
                .collect(),
        }
    }

    fn check(&self, guards: &Guards) -> Result<()> {
        guard("tensor rank n", self.n(), guards.sym_n)?;
        guard("number of factors m", self.m(), guards.sym_m)
    }

    /// The column sequences `A_j^sigma` for a tuple of row permutations.
    fn columns(&self, sigma: &[&Permutation]) -> Vec<MonomialSeq> {
        let inverses: Vec<Permutation> = sigma.iter().map(|s| s.inverse()).collect();
        (1..=self.n())
            .map(|j| {
                MonomialSeq::new(
                    self.rows
                        .iter()
                        .zip(&inverses)
                        .map(|(row, inv)| row[inv.apply(j) - 1])
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromStr for FactorGrid {
    type Err = Error;

    /// Rows separated by `;`, each row a sequence `(a,b)(a,b)...`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| r.parse::<MonomialSeq>().map(|m| m.pairs().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        FactorGrid::new(rows).map_err(|e| Error::Parse(format!("{e} ({s:?})")))
    }
}

impl fmt::Display for FactorGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| MonomialSeq::new(r.clone()).to_string())
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Calls `visit` with every tuple `(1, sigma_2, ..., sigma_m)`, one tuple at a time.
fn for_each_sigma(
    n: usize,
    m: usize,
    mut visit: impl FnMut(&[&Permutation]) -> Result<()>,
) -> Result<()> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let identity = Permutation::identity(n);
    let mut idx = vec![0usize; m.saturating_sub(1)];
    loop {
        let mut tuple: Vec<&Permutation> = Vec::with_capacity(m);
        tuple.push(&identity);
        tuple.extend(idx.iter().map(|&i| &perms[i]));
        visit(&tuple)?;
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(());
            }
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Adds the tensor product of per-column expansions into `acc`.
fn accumulate_tensor<C: Clone>(
    columns: &[Vec<((u32, u32), C)>],
    mul: impl Fn(&C, &C) -> C,
    one: C,
    mut add: impl FnMut(SymMonomial, C),
) {
    fn go<C: Clone>(
        j: usize,
        columns: &[Vec<((u32, u32), C)>],
        factors: &mut Vec<(u32, u32)>,
        coeff: C,
        mul: &dyn Fn(&C, &C) -> C,
        add: &mut dyn FnMut(SymMonomial, C),
    ) {
        if j == columns.len() {
            add(SymMonomial::new(factors.clone()), coeff);
            return;
        }
        for (mono, c) in &columns[j] {
            factors.push(*mono);
            go(j + 1, columns, factors, mul(&coeff, c), mul, add);
            factors.pop();
        }
    }
    go(0, columns, &mut Vec::new(), one, &mul, &mut add);
}

/// `(n!)^{m-1}` times the product, from the `c(a, b, k)` coefficient formula:
/// every column `A_j^sigma` expands as `sum_k N(A_j^sigma, k, q) x^{|a|+k} y^{|b|-k}`
/// with `N` assembled from compositions and `c_recursive`.
pub fn scaled_product_formula(grid: &FactorGrid, guards: &Guards) -> Result<SymElement> {
    grid.check(guards)?;
    let mut out = SymElement::zero();
    for_each_sigma(grid.n(), grid.m(), |sigma| {
        let columns: Vec<Vec<((u32, u32), QPoly)>> = grid
            .columns(sigma)
            .iter()
            .map(|col| {
                let (sa, sb) = col.total();
                (0..=sb)
                    .map(|k| ((sa + k, sb - k), npoly_q(col, k)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        accumulate_tensor(
            &columns,
            |x, y| x * y,
            QPoly::one(),
            |m, c| out.add_term(m, &c),
        );
        Ok(())
    })?;
    Ok(out)
}

/// `(n!)^{m-1}` times the product by symmetrization: straighten each permuted
/// column word with the rewriting engine and expand the tensor product.
pub fn scaled_product_oracle(grid: &FactorGrid, guards: &Guards) -> Result<SymElement> {
    grid.check(guards)?;
    let mut out = SymElement::zero();
    for_each_sigma(grid.n(), grid.m(), |sigma| {
        let columns = grid
            .columns(sigma)
            .iter()
            .map(|col| {
                let word: Word = col.to_word();
                let nf = normal_order(&word, guards)?;
                Ok(nf.terms().iter().map(|(&k, c)| (k, c.clone())).collect())
            })
            .collect::<Result<Vec<Vec<_>>>>()?;
        accumulate_tensor(
            &columns,
            |x, y| x * y,
            QPoly::one(),
            |m, c| out.add_term(m, &c),
        );
        Ok(())
    })?;
    Ok(out)
}

/// `(n!)^{m-1}` as a rational.
pub fn scale_factor(n: usize, m: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(factorial(n as u64), m.saturating_sub(1)))
}

/// The product itself, i.e. the scaled product divided by `(n!)^{m-1}`.
pub fn product(grid: &FactorGrid, guards: &Guards) -> Result<SymElement> {
    scaled_product_formula(grid, guards)?.div_scalar(&scale_factor(grid.n(), grid.m()))
}

/// The scaled product at `q = 1`, computed from binomial coefficients and
/// increasing factorials without passing through polynomials in `q`.
pub fn specialize_q1_product(grid: &FactorGrid, guards: &Guards) -> Result<SymValues> {
    grid.check(guards)?;
    let mut acc: BTreeMap<SymMonomial, BigInt> = BTreeMap::new();
    for_each_sigma(grid.n(), grid.m(), |sigma| {
        let columns: Vec<Vec<((u32, u32), BigInt)>> = grid
            .columns(sigma)
            .iter()
            .map(|col| {
                let (sa, sb) = col.total();
                (0..=sb)
                    .map(|k| ((sa + k, sb - k), npoly_q1(col, k)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        accumulate_tensor(
            &columns,
            |x, y| x * y,
            BigInt::from(1),
            |m, c| {
                *acc.entry(m).or_default() += c;
            },
        );
        Ok(())
    })?;
    Ok(acc
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m, BigRational::from_integer(v)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::monomial;
    use crate::qpoly::{rat, ratio};

    fn grid(s: &str) -> FactorGrid {
        s.parse().unwrap()
    }

    fn sm(f: &[(u32, u32)]) -> SymMonomial {
        SymMonomial::new(f.to_vec())
    }

    #[test]
    fn canonical_order() {
        assert_eq!(sm(&[(3, 3), (3, 2)]), sm(&[(3, 2), (3, 3)]));
        assert_eq!(sm(&[(3, 3), (3, 2)]).factors(), &[(3, 2), (3, 3)]);
    }

    #[test]
    fn single_row_is_the_monomial() {
        let g = Guards::default();
        let grid = grid("(1,1)(2,1)");
        let expected = {
            let mut e = SymElement::zero();
            e.add_term(sm(&[(1, 1), (2, 1)]), &QPoly::one());
            e
        };
        assert_eq!(scaled_product_formula(&grid, &g).unwrap(), expected);
        assert_eq!(scaled_product_oracle(&grid, &g).unwrap(), expected);
        assert_eq!(product(&grid, &g).unwrap(), expected);
        assert_eq!(
            specialize_q1_product(&grid, &g).unwrap(),
            SymValues::from([(sm(&[(1, 1), (2, 1)]), rat(1))])
        );
    }

    #[test]
    fn rank_one_is_the_algebra_product() {
        let g = Guards::default();
        let grid = grid("(1,1);(1,1)");
        let direct = monomial(&[(1, 1), (1, 1)], &g).unwrap();
        let sym = product(&grid, &g).unwrap();
        assert_eq!(sym.terms().len(), direct.terms().len());
        for (&(b, c), p) in direct.terms() {
            assert_eq!(&sym.coeff(&sm(&[(b, c)])), p);
        }
        assert_eq!(
            specialize_q1_product(&grid, &g).unwrap(),
            SymValues::from([(sm(&[(2, 2)]), rat(1)), (sm(&[(3, 1)]), rat(1))])
        );
    }

    #[test]
    fn two_by_two_q_example() {
        let g = Guards::default();
        let grid = grid("(1,1)(2,1);(2,2)(1,1)");
        let formula = scaled_product_formula(&grid, &g).unwrap();
        assert_eq!(formula.terms().len(), 8);
        assert_eq!(formula.coeff(&sm(&[(3, 3), (3, 2)])), QPoly::q_pow(3));
        assert_eq!(
            formula.coeff(&sm(&[(2, 2), (5, 2)])),
            QPoly::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            formula.coeff(&sm(&[(4, 2), (4, 1)])),
            QPoly::from_ints(&[1, 1])
        );
        assert_eq!(scaled_product_oracle(&grid, &g).unwrap(), formula);
        let halved = product(&grid, &g).unwrap();
        assert_eq!(
            halved.coeff(&sm(&[(3, 1), (5, 2)])),
            QPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)])
        );
    }

    #[test]
    fn grid_parsing() {
        let gr = grid("(1,1)(2,1);(2,2)(1,1)");
        assert_eq!((gr.m(), gr.n()), (2, 2));
        assert_eq!(gr.to_string(), "(1,1)(2,1);(2,2)(1,1)");
        assert!("(1,1);(1,1)(2,2)".parse::<FactorGrid>().is_err());
        assert!("".parse::<FactorGrid>().is_err());
    }

    #[test]
    fn guards_apply() {
        let g = Guards::default();
        let wide = grid("(0,0)(0,0)(0,0)(0,0)(0,0)");
        assert!(matches!(
            scaled_product_formula(&wide, &g),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn rendering_round_trips() {
        let g = Guards::default();
        let e = scaled_product_formula(&grid("(1,1)(2,1);(2,2)(1,1)"), &g).unwrap();
        assert_eq!(SymElement::from_json(&e.to_json()).unwrap(), e);
        let one = scaled_product_formula(&grid("(1,0)(0,2)"), &g).unwrap();
        assert_eq!(one.to_string(), "(1)*x1^0*y1^2*x2^1*y2^0");
        assert_eq!(one.to_latex(), "y_1^{2}x_2");
    }
}
