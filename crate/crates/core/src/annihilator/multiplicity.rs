use std::fmt;

use num_traits::Zero;

use crate::groebner::{quotient_vector_space_dim, saturate_by_ideal, saturate_by_poly, Ideal};
use crate::poly::Poly;
use crate::weyl::CharIdeal;
use crate::{Rational, Result};

use super::truncated_annihilator;

/// Intersection multiplicity at the origin, as far as it can be read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalMultiplicity {
    Finite(u64),
    Infinite,
    /// A positive-dimensional component passes through the origin.
    Undefined,
}

impl fmt::Display for LocalMultiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalMultiplicity::Finite(m) => write!(f, "{m}"),
            LocalMultiplicity::Infinite => f.write_str("infinite"),
            LocalMultiplicity::Undefined => f.write_str("undefined"),
        }
    }
}

/// Length of the origin-primary component of `J ⊂ Q[x, y]`.
///
/// `S = J : ⟨x,y⟩^∞` drops that component; any `s ∈ S` with `s(0) ≠ 0`
/// vanishes on every other component, so `J : s^∞` is the component itself.
pub fn local_multiplicity_at_origin(j: &Ideal) -> Result<LocalMultiplicity> {
    if !j.vanishes_at_origin() {
        return Ok(LocalMultiplicity::Finite(0));
    }
    let ring = j.ring();
    let vars: Vec<Poly> = (0..ring.arity()).map(|i| Poly::var(ring, i)).collect();
    let s = saturate_by_ideal(j, &vars)?;
    let Some(witness) = s
        .grevlex_basis()
        .into_iter()
        .find(|g| !g.constant_term().is_zero())
    else {
        return Ok(LocalMultiplicity::Undefined);
    };
    let primary = if witness.is_constant() {
        j.clone()
    } else {
        saturate_by_poly(j, &witness)?.0
    };
    Ok(match quotient_vector_space_dim(&primary) {
        Some(m) => LocalMultiplicity::Finite(m),
        None => LocalMultiplicity::Infinite,
    })
}

/// Multiplicity of the fiber over the origin in a characteristic ideal,
/// measured by the plane `ξ = a, η = b`.
pub fn fiber_multiplicity(
    ch: &CharIdeal,
    point: &(Rational, Rational),
) -> Result<LocalMultiplicity> {
    let assignment = [(2, point.0.clone()), (3, point.1.clone())];
    let gens = ch
        .generators()
        .iter()
        .map(|g| g.substitute(&assignment))
        .collect::<Result<Vec<_>>>()?;
    let ring = ch.ring().without(&[2, 3]);
    local_multiplicity_at_origin(&Ideal::new(&ring, gens)?)
}

/// `m^(d)`: the fiber multiplicity for the truncation `Ann^(d)(f^a)`.
pub fn m_d(f: &Poly, a: i64, d: u32, point: &(Rational, Rational)) -> Result<LocalMultiplicity> {
    let ann = truncated_annihilator(f, a, d)?;
    fiber_multiplicity(&ann.char_ideal(), point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, RingSpec};

    fn ideal(gens: &[&str]) -> Ideal {
        let r = RingSpec::new(["x", "y"]).unwrap();
        Ideal::new(&r, gens.iter().map(|s| parse_poly(s, &r).unwrap())).unwrap()
    }

    #[test]
    fn points_and_fat_points() {
        use LocalMultiplicity::*;
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x", "y"])),
            Ok(Finite(1))
        );
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x*(x-1)", "y"])),
            Ok(Finite(1))
        );
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x^2", "y"])),
            Ok(Finite(2))
        );
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x-1", "y"])),
            Ok(Finite(0))
        );
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x*y"])),
            Ok(Undefined)
        );
        assert_eq!(
            local_multiplicity_at_origin(&ideal(&["x^2*(x-1)", "y*(y-2)"])),
            Ok(Finite(2))
        );
    }
}
