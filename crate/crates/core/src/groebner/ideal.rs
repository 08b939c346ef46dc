use crate::poly::{Monomial, MonomialOrder, Poly, RingSpec};
use crate::{Error, Result};

use super::{groebner_basis, Ideal};

/// `I ∩ Q[remaining variables]`, returned in the ring without `vars`.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.arity();
    if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            arity: n,
        });
    }
    let mut front: Vec<usize> = vars.to_vec();
    front.sort_unstable();
    front.dedup();
    let rest: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
    // new position of every old variable: eliminated ones first
    let mut map = vec![0; n];
    for (pos, &old) in front.iter().chain(rest.iter()).enumerate() {
        map[old] = pos;
    }
    let names: Vec<String> = front
        .iter()
        .chain(rest.iter())
        .map(|&i| ring.name(i).to_string())
        .collect();
    let block_ring = RingSpec::new(names)?;
    let gens: Vec<Poly> = ideal
        .generators()
        .iter()
        .map(|g| g.remap(&block_ring, &map))
        .collect();
    let k = front.len();
    let gb = groebner_basis(&gens, &MonomialOrder::Block(k));
    Ok(keep_free_of_front(&gb, k, &ring.without(&front)))
}

/// Elements of a block basis not involving the first `k` variables, moved to `target`.
fn keep_free_of_front(gb: &[Poly], k: usize, target: &RingSpec) -> Ideal {
    let basis: Vec<Poly> = gb
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
        })
        .map(|g| {
            Poly::from_terms(
                target,
                g.terms()
                    .iter()
                    .map(|(m, c)| (Monomial::from(&m.exponents()[k..]), c.clone())),
            )
        })
        .collect();
    // the block order restricted to the remaining variables is GrevLex
    Ideal::from_groebner(target, basis, MonomialOrder::GrevLex)
}

/// `I ∩ J` via elimination of `t` from `t·I + (1−t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ideal::new(ring, []);
    }
    let t_name = ring.fresh_name("t");
    let ext = ring.with_front([t_name])?;
    let map: Vec<usize> = (1..=ring.arity()).collect();
    let t = Poly::var(&ext, 0);
    let one_minus_t = &Poly::one(&ext) - &t;
    let gens: Vec<Poly> = a
        .generators()
        .iter()
        .map(|g| &t * &g.remap(&ext, &map))
        .chain(
            b.generators()
                .iter()
                .map(|g| &one_minus_t * &g.remap(&ext, &map)),
        )
        .collect();
    let gb = groebner_basis(&gens, &MonomialOrder::Block(1));
    Ok(keep_free_of_front(&gb, 1, ring))
}

/// `I : g = {h : h·g ∈ I}`.
pub fn ideal_quotient(ideal: &Ideal, g: &Poly) -> Result<Ideal> {
    if g.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let principal = Ideal::new(ideal.ring(), [g.clone()])?;
    let both = intersect(ideal, &principal)?;
    let gens = both
        .generators()
        .iter()
        .map(|h| h.div_exact(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `I : g^∞` together with the exponent `k` at which `I : g^k` stabilised.
pub fn saturate_by_poly(ideal: &Ideal, g: &Poly) -> Result<(Ideal, u32)> {
    let mut current = ideal.clone();
    let mut k = 0;
    loop {
        let next = ideal_quotient(&current, g)?;
        if next.equals(&current) {
            return Ok((current, k));
        }
        current = next;
        k += 1;
    }
}

/// `I : ⟨gens⟩^∞ = ⋂ (I : g^∞)`.
pub fn saturate_by_ideal(ideal: &Ideal, gens: &[Poly]) -> Result<Ideal> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument(
            "saturation needs at least one generator".into(),
        ));
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let (sat, _) = saturate_by_poly(ideal, g)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) if prev.is_unit() => sat,
            Some(prev) if sat.is_unit() => prev,
            Some(prev) => intersect(&prev, &sat)?,
        });
    }
    Ok(acc.unwrap())
}

/// Dimension of `V(I)`: the largest set of variables free of leading monomials
/// of a Gröbner basis. `-1` for the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> i64 {
    let gb = ideal.grevlex_basis();
    if gb.iter().any(|g| g.is_constant()) {
        return -1;
    }
    let n = ideal.ring().arity();
    let supports: Vec<u64> = gb.iter().map(|g| g.terms()[0].0.support_mask()).collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as i64;
        if size > best && supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// `dim_Q R/I`, or `None` when it is infinite.
pub fn quotient_vector_space_dim(ideal: &Ideal) -> Option<u64> {
    let gb = ideal.grevlex_basis();
    let lms: Vec<&Monomial> = gb.iter().map(|g| &g.terms()[0].0).collect();
    if lms.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let n = ideal.ring().arity();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let pure = lms
            .iter()
            .filter(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0)
                    && m[i] > 0
            })
            .map(|m| m[i])
            .min();
        bounds.push(pure?);
    }
    let mut count = 0u64;
    let mut current = vec![0u32; n];
    count_standard(&lms, &bounds, &mut current, 0, &mut count);
    Some(count)
}

fn count_standard(
    lms: &[&Monomial],
    bounds: &[u32],
    current: &mut Vec<u32>,
    var: usize,
    count: &mut u64,
) {
    if var == bounds.len() {
        let m = Monomial::new(current.iter().copied());
        if !lms.iter().any(|l| l.divides(&m)) {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        // once the partial monomial is already divisible, larger exponents are too
        let partial = Monomial::new(
            current
                .iter()
                .enumerate()
                .map(|(i, &x)| if i <= var { x } else { 0 }),
        );
        if lms.iter().any(|l| l.divides(&partial)) {
            break;
        }
        count_standard(lms, bounds, current, var + 1, count);
    }
    current[var] = 0;
}

/// Greatest common divisor, normalised to be monic in `GrevLex`.
pub fn polynomial_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one(a.ring()));
    }
    let ring = a.ring();
    let lcm_ideal = intersect(
        &Ideal::new(ring, [a.clone()])?,
        &Ideal::new(ring, [b.clone()])?,
    )?;
    let lcm = lcm_ideal
        .generators()
        .first()
        .ok_or(Error::ZeroPolynomial)?;
    Ok((a * b).div_exact(lcm)?.monic())
}

/// Whether `f` has no repeated factor, i.e. `gcd(f, ∂f/∂x_1, …)` is constant.
pub fn is_squarefree(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantCurve);
    }
    let mut g = f.clone();
    for i in 0..f.ring().arity() {
        g = polynomial_gcd(&g, &f.partial_derivative(i)?)?;
        if g.is_constant() {
            return Ok(true);
        }
    }
    Ok(g.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring() -> RingSpec {
        RingSpec::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(&ring(), gens.iter().map(|s| p(s))).unwrap()
    }

    #[test]
    fn quotients() {
        assert!(ideal_quotient(&ideal(&["x*y"]), &p("y"))
            .unwrap()
            .equals(&ideal(&["x"])));
        assert!(ideal_quotient(&ideal(&["x^2", "x*y"]), &p("x"))
            .unwrap()
            .equals(&ideal(&["x", "y"])));
        assert!(ideal_quotient(&ideal(&["x"]), &p("y"))
            .unwrap()
            .equals(&ideal(&["x"])));
        assert_eq!(
            ideal_quotient(&ideal(&["x"]), &p("0")).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn saturations() {
        let i = ideal(&["x^2", "x*y"]);
        let (sat, k) = saturate_by_poly(&i, &p("x")).unwrap();
        assert!(sat.is_unit());
        assert_eq!(k, 2);
        let (sat, _) = saturate_by_poly(&i, &p("y")).unwrap();
        assert!(sat.equals(&ideal(&["x"])));
        let (sat, k) = saturate_by_poly(&ideal(&["x"]), &p("y")).unwrap();
        assert!(sat.equals(&ideal(&["x"])));
        assert_eq!(k, 0);

        let m = [p("x"), p("y")];
        assert!(saturate_by_ideal(&i, &m).unwrap().equals(&ideal(&["x"])));
        assert!(saturate_by_ideal(&ideal(&["x", "y"]), &m)
            .unwrap()
            .is_unit());
        assert!(saturate_by_ideal(&ideal(&["x-1"]), &m)
            .unwrap()
            .equals(&ideal(&["x-1"])));
    }

    #[test]
    fn saturation_exponent_is_a_witness() {
        let i = ideal(&["x^3*y", "x*y^2", "y^3"]);
        let g = p("x+y");
        let (sat, k) = saturate_by_poly(&i, &g).unwrap();
        for h in sat.generators() {
            assert!(i.contains(&(&g.pow(k) * h)));
        }
    }

    #[test]
    fn intersections() {
        assert!(intersect(&ideal(&["x"]), &ideal(&["y"]))
            .unwrap()
            .equals(&ideal(&["x*y"])));
        assert!(intersect(&ideal(&["x"]), &ideal(&["x"]))
            .unwrap()
            .equals(&ideal(&["x"])));
        assert!(intersect(&ideal(&["x-y"]), &ideal(&["x+y"]))
            .unwrap()
            .equals(&ideal(&["x^2-y^2"])));
    }

    #[test]
    fn intersection_contains_product() {
        let a = ideal(&["x^2-y", "x*y"]);
        let b = ideal(&["y^2", "x+y^3"]);
        let both = intersect(&a, &b).unwrap();
        for g in both.generators() {
            assert!(a.contains(g) && b.contains(g));
        }
        for f in a.generators() {
            for g in b.generators() {
                assert!(both.contains(&(f * g)));
            }
        }
    }

    #[test]
    fn eliminations() {
        let r = RingSpec::new(["t", "x", "y"]).unwrap();
        let q = |s: &str| parse_poly(s, &r).unwrap();
        let e = eliminate(&Ideal::new(&r, [q("t*x-1"), q("t*y")]).unwrap(), &[0]).unwrap();
        assert!(e.equals(&ideal(&["y"])));
        let e = eliminate(&Ideal::new(&r, [q("x-t"), q("y-t^2")]).unwrap(), &[0]).unwrap();
        assert!(e.equals(&ideal(&["y-x^2"])));
        let e = eliminate(&ideal(&["x"]), &[1]).unwrap();
        assert_eq!(e.ring().names(), &["x".to_string()]);
        assert_eq!(e.generators().len(), 1);
        assert_eq!(e.generators()[0].to_string(), "x");
    }

    #[test]
    fn dimensions() {
        let r4 = RingSpec::new(["x", "y", "xi", "eta"]).unwrap();
        let q = |s: &str| parse_poly(s, &r4).unwrap();
        assert_eq!(
            krull_dimension(&Ideal::new(&r4, [q("x*xi"), q("eta")]).unwrap()),
            2
        );
        assert_eq!(krull_dimension(&Ideal::new(&r4, []).unwrap()), 4);
        assert_eq!(krull_dimension(&ideal(&["1"])), -1);

        assert_eq!(quotient_vector_space_dim(&ideal(&["x^2", "y^2"])), Some(4));
        assert_eq!(
            quotient_vector_space_dim(&ideal(&["x-y", "y^2-1"])),
            Some(2)
        );
        assert_eq!(quotient_vector_space_dim(&ideal(&["x"])), None);
        assert_eq!(quotient_vector_space_dim(&ideal(&["1"])), Some(0));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&p("x^2-y^3")).unwrap());
        assert!(!is_squarefree(&p("(x-y)^2")).unwrap());
        assert!(is_squarefree(&p("x*y")).unwrap());
        assert!(!is_squarefree(&p("x*(x+y^2)^2")).unwrap());
        assert!(is_squarefree(&p("7")).is_err());
        assert_eq!(
            polynomial_gcd(&p("x^2-y^2"), &p("x^2+2x*y+y^2")).unwrap(),
            p("x+y")
        );
    }
}
