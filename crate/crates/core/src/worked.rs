//! Two worked products in `Sym^2` and one map-counting instance, together with
//! the term lists as usually displayed, so they can be compared term by term
//! against the computation.

use std::collections::BTreeMap;
use std::fmt;

use crate::normal::MonomialSeq;
use crate::qpoly::{BigRational, QPoly};
use crate::sympow::{FactorGrid, SymElement, SymMonomial, SymValues};

/// Exponents `(a, b)` of one tensor factor `x_j^a y_j^b`.
type Factor = (u32, u32);

/// `(x_1 y_1 x_2^2 y_2)(x_1^2 y_1^2 x_2 y_2)` in `Sym^2` of the q-deformed algebra.
pub fn q_example_grid() -> FactorGrid {
    "(1,1)(2,1);(2,2)(1,1)".parse().expect("valid grid")
}

/// The displayed eight-term value of twice the product of [`q_example_grid`].
pub fn q_example_displayed() -> SymElement {
    let terms: [([Factor; 2], &[i64]); 8] = [
        ([(3, 3), (3, 2)], &[0, 0, 0, 1]),
        ([(3, 3), (4, 1)], &[0, 0, 1]),
        ([(4, 2), (3, 2)], &[0, 1, 1]),
        ([(4, 2), (4, 1)], &[1, 1]),
        ([(2, 2), (4, 3)], &[0, 0, 0, 1]),
        ([(2, 2), (5, 2)], &[0, 1, 1]),
        ([(3, 1), (4, 3)], &[0, 0, 1]),
        ([(3, 1), (5, 2)], &[1, 1]),
    ];
    let mut out = SymElement::zero();
    for (factors, coeffs) in terms {
        out.add_term(
            SymMonomial::new(factors.to_vec()),
            &QPoly::from_ints(coeffs),
        );
    }
    out
}

/// `(x_1 y_1^2 x_2^2 y_2^2)(x_1^2 y_1 x_2 y_2^2)` in `Sym^2` at `q = 1`.
pub fn q1_example_grid() -> FactorGrid {
    "(1,2)(2,2);(2,1)(1,2)".parse().expect("valid grid")
}

/// The displayed sixteen terms of twice the product of [`q1_example_grid`],
/// in display order, each as `(x_1, y_1 exponents), (x_2, y_2 exponents), coefficient`.
pub const Q1_EXAMPLE_DISPLAYED: [(Factor, Factor, i64); 16] = [
    ((3, 4), (3, 4), 1),
    ((3, 4), (4, 3), 6),
    ((3, 4), (5, 2), 8),
    ((4, 3), (4, 3), 8),
    ((4, 3), (5, 2), 20),
    ((5, 2), (3, 4), 6),
    ((5, 2), (5, 2), 12),
    ((3, 4), (4, 4), 1),
    ((3, 4), (5, 3), 2),
    ((3, 4), (6, 2), 6),
    ((4, 3), (4, 4), 2),
    ((4, 3), (5, 3), 4),
    ((4, 3), (6, 3), 12),
    ((5, 2), (4, 4), 6),
    ((5, 2), (5, 3), 12),
    ((5, 2), (6, 2), 36),
];

/// [`Q1_EXAMPLE_DISPLAYED`] as an element of `Sym^2`; terms that coincide
/// after reordering the tensor factors are added together.
pub fn q1_example_displayed() -> SymValues {
    let mut out: SymValues = BTreeMap::new();
    for (f1, f2, c) in Q1_EXAMPLE_DISPLAYED {
        *out.entry(SymMonomial::new(vec![f1, f2]))
            .or_insert_with(|| BigRational::from_integer(0.into())) +=
            BigRational::from_integer(c.into());
    }
    out
}

/// The monomial `x^2 y^3 x^3 y^3 x^3 y^4` and `k = 6`, a mid-sized instance
/// of the map count.
pub fn map_count_example() -> (MonomialSeq, u32) {
    ("(2,3)(3,3)(3,4)".parse().expect("valid sequence"), 6)
}

/// `N(((2,3),(3,3),(3,4)), 6)` at `q = 1`, frozen from the rewriting engine.
pub const MAP_COUNT_EXAMPLE_VALUE: u64 = 59400;

/// One row of a term-by-term comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermComparison<V> {
    pub monomial: SymMonomial,
    pub displayed: Option<V>,
    pub computed: Option<V>,
}

impl<V: PartialEq> TermComparison<V> {
    pub fn matches(&self) -> bool {
        self.displayed == self.computed
    }
}

impl<V: fmt::Display> fmt::Display for TermComparison<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<V>| v.as_ref().map_or("absent".to_string(), |v| format!("{v}"));
        write!(
            f,
            "{}: displayed {}, computed {}",
            self.monomial,
            show(&self.displayed),
            show(&self.computed)
        )
    }
}

/// Aligns two term maps on the union of their monomials.
pub fn compare_terms<V: Clone + PartialEq>(
    displayed: &BTreeMap<SymMonomial, V>,
    computed: &BTreeMap<SymMonomial, V>,
) -> Vec<TermComparison<V>> {
    let mut keys: Vec<&SymMonomial> = displayed.keys().chain(computed.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .map(|m| TermComparison {
            monomial: m.clone(),
            displayed: displayed.get(m).cloned(),
            computed: computed.get(m).cloned(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guards::Guards;
    use crate::normal::{mk_count, npoly_oracle, npoly_q1};
    use crate::qpoly::rat;
    use crate::sympow::{scaled_product_formula, specialize_q1_product};

    #[test]
    fn q_example_matches_display() {
        let computed = scaled_product_formula(&q_example_grid(), &Guards::default()).unwrap();
        let rows = compare_terms(q_example_displayed().terms(), computed.terms());
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(TermComparison::matches));
    }

    #[test]
    fn q1_example_degrees_differ_from_display() {
        let computed = specialize_q1_product(&q1_example_grid(), &Guards::default()).unwrap();
        let degree = |m: &SymMonomial| m.factors().iter().map(|f| f.0 + f.1).sum::<u32>();
        // Rewriting preserves total degree, 13 for this grid; the displayed
        // terms have degrees 14 to 16.
        assert!(computed.keys().all(|m| degree(m) == 13));
        assert!(q1_example_displayed()
            .keys()
            .all(|m| (14..=16).contains(&degree(m))));
        let rows = compare_terms(&q1_example_displayed(), &computed);
        assert!(rows.iter().all(|r| !r.matches()));
    }

    #[test]
    fn map_count_value_is_frozen() {
        let (seq, k) = map_count_example();
        let guards = Guards::default().raised_to(seq.degree());
        let expected = num_bigint::BigInt::from(MAP_COUNT_EXAMPLE_VALUE);
        assert_eq!(npoly_q1(&seq, k), expected);
        assert_eq!(mk_count(&seq, k, &guards).unwrap(), expected);
        assert_eq!(
            npoly_oracle(&seq, k, &guards).unwrap().eval_at(&rat(1)),
            rat(59400)
        );
    }
}
