//! Coefficient domains for the Buchberger kernel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::engine::Term;
use crate::Rational;

/// Arithmetic the kernel needs from its coefficients.
pub(crate) trait Domain {
    type C: Clone + PartialEq + fmt::Debug;

    fn is_zero(&self, a: &Self::C) -> bool;
    fn is_one(&self, a: &Self::C) -> bool;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn sub(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;
    fn lift_integer(&self, k: &BigInt) -> Self::C;

    /// `(a, b)` with `a·t = b·lc`, chosen so that `a·p − b·u·g` cancels the
    /// term `t` of `p` against the leading coefficient `lc` of `g`.
    fn cofactors(&self, t: &Self::C, lc: &Self::C) -> (Self::C, Self::C);

    /// Scales a nonzero vector to the canonical generator of its line.
    fn normalize(&self, v: &mut [Term<Self::C>]);
}

/// `Z`, used fraction-free: vectors are normalised to be primitive with a
/// positive leading coefficient.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Integers;

/// Gcd of the coefficients, stopping early at 1.
pub(crate) fn content<'t>(terms: impl Iterator<Item = &'t Term<BigInt>>) -> BigInt {
    let mut g = BigInt::zero();
    for t in terms {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            break;
        }
    }
    g
}

impl Domain for Integers {
    type C = BigInt;

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn lift_integer(&self, k: &BigInt) -> BigInt {
        k.clone()
    }

    fn cofactors(&self, t: &BigInt, lc: &BigInt) -> (BigInt, BigInt) {
        let g = t.gcd(lc);
        let (a, b) = (lc / &g, t / &g);
        if a.is_negative() {
            (-a, -b)
        } else {
            (a, b)
        }
    }

    fn normalize(&self, v: &mut [Term<BigInt>]) {
        if v.is_empty() {
            return;
        }
        let mut g = content(v.iter());
        if v[0].coeff.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in v.iter_mut() {
                t.coeff /= &g;
            }
        }
    }
}

/// `Q`, used for exact normal forms: vectors are normalised to be monic.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Rationals;

impl Domain for Rationals {
    type C = Rational;

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn lift_integer(&self, k: &BigInt) -> Rational {
        Rational::from_integer(k.clone())
    }

    fn cofactors(&self, t: &Rational, lc: &Rational) -> (Rational, Rational) {
        (Rational::one(), t / lc)
    }

    fn normalize(&self, v: &mut [Term<Rational>]) {
        if let Some(first) = v.first() {
            let inv = first.coeff.recip();
            for t in v.iter_mut() {
                t.coeff *= &inv;
            }
        }
    }
}

/// `Z/p` for a prime `p < 2^32`; vectors are normalised to be monic.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 32));
        PrimeField { p }
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Domain for PrimeField {
    type C = u64;

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn lift_integer(&self, k: &BigInt) -> u64 {
        if let Some(u) = k.to_u64() {
            return u % self.p;
        }
        let r = k.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }

    fn cofactors(&self, t: &u64, lc: &u64) -> (u64, u64) {
        if *lc == 1 {
            (1, *t)
        } else {
            (1, t * self.inv(*lc) % self.p)
        }
    }

    fn normalize(&self, v: &mut [Term<u64>]) {
        if let Some(first) = v.first() {
            if first.coeff != 1 {
                let inv = self.inv(first.coeff);
                for t in v.iter_mut() {
                    t.coeff = t.coeff * inv % self.p;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(101);
        assert_eq!(f.mul(&f.inv(7), &7), 1);
        assert_eq!(f.sub(&3, &5), 99);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.lift_integer(&BigInt::from(-1)), 100);
        let (a, b) = f.cofactors(&10, &4);
        assert_eq!(f.mul(&a, &10), f.mul(&b, &4));
    }

    #[test]
    fn integer_cofactors_cancel() {
        let (a, b) = Integers.cofactors(&BigInt::from(6), &BigInt::from(-4));
        assert!(a.is_positive());
        assert_eq!(&a * BigInt::from(6), &b * BigInt::from(-4));
    }
}
