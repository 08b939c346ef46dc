use std::cmp::Ordering;

use super::Monomial;
use crate::{Error, Result};

/// A multiplicative well-order on monomials.
///
/// Orders are passed to each computation rather than attached to polynomials;
/// [`Poly`](super::Poly) always stores its terms in descending `GrevLex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Compare the weighted degree `w·α` first, break ties with `GrevLex`.
    WeightedGrevLex(Vec<u32>),
    /// Elimination order: `GrevLex` on the first `k` variables, ties broken by
    /// `GrevLex` on the remaining ones.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::WeightedGrevLex(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                wa.cmp(&wb).then_with(|| grevlex(a, b))
            }
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// [`compare`](Self::compare) with an arity check.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                expected: a.arity(),
                found: b.arity(),
            });
        }
        if let MonomialOrder::WeightedGrevLex(w) = self {
            if w.len() != a.arity() {
                return Err(Error::ArityMismatch {
                    expected: a.arity(),
                    found: w.len(),
                });
            }
        }
        Ok(self.compare(a, b))
    }

    /// The order filtration on `Q[x, ξ]` (weight 0 on the first `n` variables,
    /// 1 on the last `n`), refined by `GrevLex`.
    pub fn operator_order(n: usize) -> Self {
        MonomialOrder::WeightedGrevLex((0..2 * n).map(|i| u32::from(i >= n)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m<const N: usize>(e: [u32; N]) -> Monomial {
        Monomial::from(e)
    }

    #[test]
    fn conventions() {
        assert_eq!(
            MonomialOrder::GrevLex.compare(&m([2, 1]), &m([1, 2])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Lex.compare(&m([1, 0]), &m([0, 9])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GrevLex.compare(&m([1, 1, 0]), &m([1, 0, 1])),
            Ordering::Greater
        );
        for order in all_orders(3) {
            assert_eq!(order.compare(&m([3, 1, 4]), &m([3, 1, 4])), Ordering::Equal);
        }
        // weight dominates total degree
        let w = MonomialOrder::operator_order(2);
        assert_eq!(
            w.compare(&m([0, 0, 1, 0]), &m([5, 5, 0, 0])),
            Ordering::Greater
        );
        // block: anything with a front variable beats anything without
        assert_eq!(
            MonomialOrder::Block(1).compare(&m([1, 0, 0]), &m([0, 7, 7])),
            Ordering::Greater
        );
        assert!(MonomialOrder::GrevLex
            .try_compare(&m([1]), &m([1, 0]))
            .is_err());
    }

    fn all_orders(n: usize) -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::WeightedGrevLex((0..n as u32).map(|i| i % 2 + 1).collect()),
            MonomialOrder::WeightedGrevLex((0..n).map(|i| u32::from(i >= n / 2)).collect()),
            MonomialOrder::Block(1),
            MonomialOrder::Block(2),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 4).prop_map(Monomial::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn total_multiplicative_and_one_minimal(a in mono(), b in mono(), c in mono()) {
            let one = Monomial::one(4);
            for order in all_orders(4) {
                let ab = order.compare(&a, &b);
                // totality / antisymmetry
                prop_assert_eq!(ab, order.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // multiplicativity
                prop_assert_eq!(order.compare(&(&a * &c), &(&b * &c)), ab);
                // 1 is the minimum
                prop_assert_ne!(order.compare(&a, &one), Ordering::Less);
                // transitivity on the triple
                if ab != Ordering::Less && order.compare(&b, &c) != Ordering::Less {
                    prop_assert_ne!(order.compare(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
