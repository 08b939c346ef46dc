//! Multi-modular Gröbner bases.
//!
//! The reduced basis is computed over `Z/p` for a run of word-sized primes,
//! lifted to `Q` by Chinese remaindering and rational reconstruction, and then
//! certified over `Z`: every generator must reduce to zero and every S-pair
//! of the lifted basis must reduce to zero. This avoids the coefficient growth
//! that fraction-free Buchberger suffers on intermediate elements whose
//! final basis is small.

use rustc_hash::FxHashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::domain::{Domain, Integers, PrimeField};
use super::engine::{Buchberger, LeftMultiplication, Selection, Term, TermOrder, Vector};
use crate::poly::Monomial;
use crate::Rational;

/// Primes tried before falling back to the integer engine.
const PRIME_CAP: usize = 1000;

/// Descending primes below `2^31`.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes {
            next: (1 << 31) - 1,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let n = self.next;
            self.next -= 1;
            if is_prime(n) {
                return Some(n);
            }
        }
        None
    }
}

type Signature = Vec<(u32, Monomial)>;

/// Positions `(element, comp, monomial)` of a basis, element by element.
type Key = (usize, u32, Monomial);

/// Chinese-remainder accumulator for images sharing one leading-term signature.
struct Lift {
    modulus: BigInt,
    residues: FxHashMap<Key, BigInt>,
    primes: usize,
    candidate: Option<Vec<Vector<Rational>>>,
}

impl Lift {
    fn new() -> Self {
        Lift {
            modulus: BigInt::one(),
            residues: FxHashMap::default(),
            primes: 0,
            candidate: None,
        }
    }

    fn absorb(&mut self, p: u64, image: &[Vector<u64>]) {
        let pb = BigInt::from(p);
        let field = PrimeField::new(p);
        let m_mod_p = field.lift_integer(&self.modulus);
        let m_inv = field.inv(m_mod_p);
        let mut image_map: FxHashMap<Key, u64> = FxHashMap::default();
        for (i, v) in image.iter().enumerate() {
            for t in v {
                image_map.insert((i, t.comp, t.mon.clone()), t.coeff);
            }
        }
        let mut keys: Vec<Key> = self.residues.keys().cloned().collect();
        keys.extend(
            image_map
                .keys()
                .filter(|k| !self.residues.contains_key(*k))
                .cloned(),
        );
        for k in keys {
            let old = self.residues.get(&k).cloned().unwrap_or_default();
            let new = image_map.get(&k).copied().unwrap_or(0);
            let old_mod = field.lift_integer(&old);
            let delta = field.mul(&field.sub(&new, &old_mod), &m_inv);
            let x = old + &self.modulus * BigInt::from(delta);
            self.residues.insert(k, x);
        }
        self.modulus *= pb;
        self.primes += 1;
    }

    /// Rational reconstruction of every coefficient, in the shape of `shape`.
    fn reconstruct(&self, shape: &[Vector<u64>]) -> Option<Vec<Vector<Rational>>> {
        let bound = (&self.modulus / BigInt::from(2)).sqrt();
        let mut by_elem: Vec<Vec<Term<Rational>>> = vec![Vec::new(); shape.len()];
        for ((i, comp, mon), r) in &self.residues {
            if r.is_zero() {
                continue;
            }
            let q = rational_reconstruction(r, &self.modulus, &bound)?;
            by_elem[*i].push(Term {
                comp: *comp,
                mon: mon.clone(),
                coeff: q,
            });
        }
        Some(by_elem)
    }
}

/// Wang's rational reconstruction: `n/d ≡ a (mod m)` with `|n|, d ≤ bound`.
pub(crate) fn rational_reconstruction(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || &t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn reduce_mod(field: &PrimeField, v: &[Term<BigInt>]) -> Option<Vector<u64>> {
    let out: Vector<u64> = v
        .iter()
        .filter_map(|t| {
            let c = field.lift_integer(&t.coeff);
            (c != 0).then(|| Term {
                comp: t.comp,
                mon: t.mon.clone(),
                coeff: c,
            })
        })
        .collect();
    // the leading term must survive, or the prime is unlucky for this input
    (out.first().map(|t| (t.comp, &t.mon)) == v.first().map(|t| (t.comp, &t.mon))).then_some(out)
}

fn rational_mod(field: &PrimeField, q: &Rational) -> Option<u64> {
    let d = field.lift_integer(q.denom());
    (d != 0).then(|| field.mul(&field.lift_integer(q.numer()), &field.inv(d)))
}

/// Whether `candidate` reduces to `image` modulo `p`.
fn agrees(
    field: &PrimeField,
    candidate: &[Vector<Rational>],
    image: &[Vector<u64>],
    order: &TermOrder,
) -> bool {
    if candidate.len() != image.len() {
        return false;
    }
    for (c, im) in candidate.iter().zip(image) {
        let mut reduced: Vector<u64> = Vec::with_capacity(c.len());
        for t in c {
            let Some(v) = rational_mod(field, &t.coeff) else {
                return false;
            };
            if v != 0 {
                reduced.push(Term {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: v,
                });
            }
        }
        order.sort(&mut reduced);
        if &reduced != im {
            return false;
        }
    }
    true
}

/// Clears denominators and makes each element primitive with positive lead.
fn to_integers(candidate: &[Vector<Rational>], order: &TermOrder) -> Vec<Vector<BigInt>> {
    candidate
        .iter()
        .map(|v| {
            let den = v
                .iter()
                .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
            let mut out: Vector<BigInt> = v
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: t.coeff.numer() * (&den / t.coeff.denom()),
                })
                .collect();
            order.sort(&mut out);
            Integers.normalize(&mut out);
            out
        })
        .collect()
}

/// Reduced Gröbner basis of `gens` as primitive integer vectors with positive
/// leading coefficients, sorted by descending leading term.
pub(crate) fn modular_groebner<A: LeftMultiplication>(
    order: &TermOrder,
    alg: &A,
    gens: Vec<Vector<BigInt>>,
    selection: Selection,
) -> Vec<Vector<BigInt>> {
    let verifier = Buchberger {
        dom: &Integers,
        order,
        alg,
        selection,
    };
    let certify = |basis: &[Vector<BigInt>], gens: &[Vector<BigInt>]| {
        gens.iter()
            .all(|g| verifier.normal_form(g.clone(), basis).is_empty())
            && verifier.is_groebner(basis)
    };
    lift_groebner(order, alg, gens, selection, |_| true, certify)
        .unwrap_or_else(|gens| verifier.groebner_basis(gens))
}

/// The elements of the reduced Gröbner basis of `gens` selected by `keep`,
/// lifted from prime images and accepted once `certify` holds.
///
/// `keep` must select a subset determined by leading terms alone, so that the
/// selection is the same for every lucky prime. Returns the generators back
/// when no certified lift is found within the prime budget.
pub(crate) fn lift_groebner<A: LeftMultiplication>(
    order: &TermOrder,
    alg: &A,
    gens: Vec<Vector<BigInt>>,
    selection: Selection,
    keep: impl Fn(&Term<u64>) -> bool,
    certify: impl Fn(&[Vector<BigInt>], &[Vector<BigInt>]) -> bool,
) -> Result<Vec<Vector<BigInt>>, Vec<Vector<BigInt>>> {
    let gens: Vec<Vector<BigInt>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let mut lifts: FxHashMap<Signature, Lift> = FxHashMap::default();
    for p in Primes::new().take(PRIME_CAP) {
        let field = PrimeField::new(p);
        let Some(reduced) = gens
            .iter()
            .map(|g| reduce_mod(&field, g))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let engine = Buchberger {
            dom: &field,
            order,
            alg,
            selection,
        };
        let full = engine.groebner_basis(reduced);
        let signature: Signature = full.iter().map(|v| (v[0].comp, v[0].mon.clone())).collect();
        let image: Vec<Vector<u64>> = full.into_iter().filter(|v| keep(&v[0])).collect();
        let lift = lifts.entry(signature).or_insert_with(Lift::new);
        if let Some(candidate) = lift.candidate.take() {
            if agrees(&field, &candidate, &image, order) {
                let basis = to_integers(&candidate, order);
                if certify(&basis, &gens) {
                    return Ok(basis);
                }
            }
        }
        lift.absorb(p, &image);
        lift.candidate = lift.reconstruct(&image);
    }
    Err(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::engine::Commutative;
    use crate::poly::MonomialOrder;

    #[test]
    fn reconstruction_inverts_reduction() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let bound = (&m / BigInt::from(2)).sqrt();
        let q = Rational::new(BigInt::from(-12345), BigInt::from(6789));
        let a = (q.numer() * q.denom().modinv(&m).unwrap()).mod_floor(&m);
        assert_eq!(rational_reconstruction(&a, &m, &bound), Some(q));
    }

    #[test]
    fn primes_descend_from_the_mersenne_prime() {
        let ps: Vec<u64> = Primes::new().take(2).collect();
        assert_eq!(ps, vec![2_147_483_647, 2_147_483_629]);
    }

    #[test]
    fn matches_the_integer_engine() {
        let order = TermOrder::ideal(MonomialOrder::GrevLex);
        let t = |c: i64, e: [u32; 2]| Term {
            comp: 0,
            mon: Monomial::from(e),
            coeff: BigInt::from(c),
        };
        let mut f = vec![t(3, [3, 0]), t(-7, [1, 1]), t(11, [0, 0])];
        let mut g = vec![t(5, [0, 3]), t(2, [1, 0]), t(-13, [0, 0])];
        order.sort(&mut f);
        order.sort(&mut g);
        let gens = vec![f, g];
        let direct = Buchberger::new(&Integers, &order, &Commutative).groebner_basis(gens.clone());
        let lifted = modular_groebner(&order, &Commutative, gens, Selection::Normal);
        assert_eq!(direct, lifted);
    }
}
