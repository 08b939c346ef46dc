//! Dense linear algebra over Q, independent of the Gröbner machinery.

use std::collections::BTreeMap;

use curveloc::groebner::ModuleVector;
use curveloc::poly::{Monomial, Poly};
use curveloc::Rational;
use num_traits::{One, Zero};

/// All exponent vectors of total degree `≤ d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::new(prefix.clone()));
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            go(n, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Basis of the right kernel of a dense matrix, by reduced row echelon form.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][f].clone();
        }
        v
    })
    .collect()
}

/// Basis of `{c : Σ c_i v_i = 0, deg c_i ≤ bound}` as a `Q`-vector space.
pub fn syzygy_kernel(v: &[Poly], bound: u32) -> Vec<ModuleVector> {
    let ring = v[0].ring().clone();
    let basis = monomials_up_to(ring.arity(), bound);
    let unknowns: Vec<(usize, &Monomial)> = (0..v.len())
        .flat_map(|i| basis.iter().map(move |m| (i, m)))
        .collect();
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut columns = Vec::with_capacity(unknowns.len());
    for &(i, m) in &unknowns {
        let column: Vec<(usize, Rational)> = v[i]
            .shift(m)
            .terms()
            .iter()
            .map(|(mon, c)| {
                let next = index.len();
                (
                    *index.entry(mon.exponents().to_vec()).or_insert(next),
                    c.clone(),
                )
            })
            .collect();
        columns.push(column);
    }
    let mut rows = vec![vec![Rational::zero(); unknowns.len()]; index.len()];
    for (j, column) in columns.into_iter().enumerate() {
        for (i, c) in column {
            rows[i][j] = c;
        }
    }
    nullspace(rows, unknowns.len())
        .into_iter()
        .map(|k| {
            let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); v.len()];
            for (&(i, m), c) in unknowns.iter().zip(k) {
                if !c.is_zero() {
                    comps[i].push((m.clone(), c));
                }
            }
            let comps = comps
                .into_iter()
                .map(|t| Poly::from_terms(&ring, t))
                .collect();
            ModuleVector::new(&ring, comps).unwrap()
        })
        .collect()
}
