//! Buchberger kernel shared by ideals, free modules and the Weyl algebra.
//!
//! Elements are vectors of terms `c·x^α·e_comp`, sorted descending in a
//! [`TermOrder`], with coefficients in a [`Domain`]. Over `Z` the kernel is
//! fraction-free: a reduction step `p ← a·p − b·u·g` multiplies by cofactors
//! `lc(g)/gcd` and `t/gcd` only, and every new element is made primitive.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use super::domain::Domain;
use crate::poly::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term<C> {
    pub comp: u32,
    pub mon: Monomial,
    pub coeff: C,
}

pub(crate) type Vector<C> = Vec<Term<C>>;

/// How the component index interacts with the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionRule {
    /// Compare components first (lower index is larger), then monomials.
    PositionOverTerm,
    /// Compare monomials first, then components.
    TermOverPosition,
}

/// Monomial order on `R^N`, optionally with one slot dominating all others.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct TermOrder {
    pub base: MonomialOrder,
    pub lead_slot: Option<u32>,
    pub rule: PositionRule,
}

impl TermOrder {
    pub fn ideal(base: MonomialOrder) -> Self {
        TermOrder {
            base,
            lead_slot: None,
            rule: PositionRule::PositionOverTerm,
        }
    }

    #[inline]
    pub fn cmp(&self, c1: u32, m1: &Monomial, c2: u32, m2: &Monomial) -> Ordering {
        if c1 != c2 {
            if let Some(s) = self.lead_slot {
                if c1 == s {
                    return Ordering::Greater;
                }
                if c2 == s {
                    return Ordering::Less;
                }
            }
            if self.rule == PositionRule::PositionOverTerm {
                return c2.cmp(&c1);
            }
        }
        self.base.compare(m1, m2).then_with(|| c2.cmp(&c1))
    }

    #[inline]
    pub fn cmp_terms<C>(&self, a: &Term<C>, b: &Term<C>) -> Ordering {
        self.cmp(a.comp, &a.mon, b.comp, &b.mon)
    }

    pub fn sort<C>(&self, v: &mut Vector<C>) {
        v.sort_by(|a, b| self.cmp_terms(b, a));
    }
}

/// The multiplication used for S-polynomials and reductions.
pub(crate) trait LeftMultiplication {
    /// Whether Buchberger's coprime-leading-monomial criterion may be used.
    fn commutative(&self) -> bool;

    /// `x^m · p`, sorted in `order`. The leading term must be `m·lm(p)` with
    /// coefficient `lc(p)`.
    fn mul_monomial<D: Domain>(
        &self,
        dom: &D,
        order: &TermOrder,
        m: &Monomial,
        p: &[Term<D::C>],
    ) -> Vector<D::C>;

    /// Degree used for the sugar heuristic.
    fn degree(&self, m: &Monomial) -> u32 {
        m.degree()
    }
}

pub(crate) struct Commutative;

impl LeftMultiplication for Commutative {
    fn commutative(&self) -> bool {
        true
    }

    fn mul_monomial<D: Domain>(
        &self,
        _dom: &D,
        _order: &TermOrder,
        m: &Monomial,
        p: &[Term<D::C>],
    ) -> Vector<D::C> {
        shift(m, p)
    }
}

/// `x^m · p` for commuting `x^m`; the order is preserved.
pub(crate) fn shift<C: Clone>(m: &Monomial, p: &[Term<C>]) -> Vector<C> {
    if m.is_one() {
        return p.to_vec();
    }
    p.iter()
        .map(|t| Term {
            comp: t.comp,
            mon: &t.mon * m,
            coeff: t.coeff.clone(),
        })
        .collect()
}

/// Pair selection strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Selection {
    /// Smallest lcm first, ties broken by sugar.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties broken by lcm.
    Sugar,
}

struct Element<C> {
    poly: Vector<C>,
    comp: u32,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    sugar: u32,
}

/// `a·p − b·q` for sorted vectors.
pub(crate) fn combine<D: Domain>(
    dom: &D,
    order: &TermOrder,
    a: &D::C,
    p: &[Term<D::C>],
    b: &D::C,
    q: &[Term<D::C>],
) -> Vector<D::C> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let (mut i, mut j) = (0, 0);
    let a_one = dom.is_one(a);
    let scale_p = |c: &D::C| if a_one { c.clone() } else { dom.mul(c, a) };
    let scale_q = |c: &D::C| dom.neg(&dom.mul(c, b));
    while i < p.len() && j < q.len() {
        match order.cmp_terms(&p[i], &q[j]) {
            Ordering::Greater => {
                out.push(Term {
                    comp: p[i].comp,
                    mon: p[i].mon.clone(),
                    coeff: scale_p(&p[i].coeff),
                });
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    comp: q[j].comp,
                    mon: q[j].mon.clone(),
                    coeff: scale_q(&q[j].coeff),
                });
                j += 1;
            }
            Ordering::Equal => {
                let c = dom.sub(&scale_p(&p[i].coeff), &dom.mul(&q[j].coeff, b));
                if !dom.is_zero(&c) {
                    out.push(Term {
                        comp: p[i].comp,
                        mon: p[i].mon.clone(),
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().map(|t| Term {
        comp: t.comp,
        mon: t.mon.clone(),
        coeff: scale_p(&t.coeff),
    }));
    out.extend(q[j..].iter().map(|t| Term {
        comp: t.comp,
        mon: t.mon.clone(),
        coeff: scale_q(&t.coeff),
    }));
    out
}

/// Heap entry ordered by the term order.
struct HeapKey<'o> {
    order: &'o TermOrder,
    comp: u32,
    mon: Monomial,
}

impl PartialEq for HeapKey<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.comp == other.comp && self.mon == other.mon
    }
}

impl Eq for HeapKey<'_> {}

impl PartialOrd for HeapKey<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapKey<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(self.comp, &self.mon, other.comp, &other.mon)
    }
}

/// Leading data of a reducer.
struct Lead<'a, C> {
    poly: &'a [Term<C>],
    comp: u32,
    lm: &'a Monomial,
    mask: u64,
}

pub(crate) struct Buchberger<'a, D: Domain, A: LeftMultiplication> {
    pub dom: &'a D,
    pub order: &'a TermOrder,
    pub alg: &'a A,
    pub selection: Selection,
}

impl<'a, D: Domain, A: LeftMultiplication> Buchberger<'a, D, A> {
    pub fn new(dom: &'a D, order: &'a TermOrder, alg: &'a A) -> Self {
        Buchberger {
            dom,
            order,
            alg,
            selection: Selection::default(),
        }
    }

    fn find_reducer<'r>(
        &self,
        comp: u32,
        mon: &Monomial,
        reducers: &'r [Lead<'r, D::C>],
    ) -> Option<&'r Lead<'r, D::C>> {
        let mask = mon.support_mask();
        let mut best: Option<&Lead<D::C>> = None;
        for r in reducers {
            if r.comp == comp
                && r.mask & !mask == 0
                && r.lm.divides(mon)
                && best.is_none_or(|b| r.poly.len() < b.poly.len())
            {
                best = Some(r);
            }
        }
        best
    }

    /// Full reduction of `p`: the result is `c·p` minus a combination of the
    /// reducers for some nonzero scalar `c`, with no term divisible by a
    /// leading term. With `tail_only` the leading term is left alone.
    ///
    /// Pending terms live in a coefficient map with a max-heap of keys, so a
    /// reduction step costs the length of the reducer only.
    fn reduce_with(
        &self,
        p: Vector<D::C>,
        reducers: &[Lead<D::C>],
        tail_only: bool,
    ) -> Vector<D::C> {
        let dom = self.dom;
        let mut pending: FxHashMap<(u32, Monomial), D::C> =
            FxHashMap::with_capacity_and_hasher(p.len() * 2, Default::default());
        let mut heap: BinaryHeap<HeapKey> = BinaryHeap::with_capacity(p.len() * 2);
        for t in p {
            heap.push(HeapKey {
                order: self.order,
                comp: t.comp,
                mon: t.mon.clone(),
            });
            pending.insert((t.comp, t.mon), t.coeff);
        }
        let mut done: Vector<D::C> = Vec::new();
        let mut skip_first = tail_only;
        while let Some(HeapKey { comp, mon, .. }) = heap.pop() {
            let key = (comp, mon);
            let Some(c) = pending.remove(&key) else {
                continue;
            };
            let (comp, mon) = key;
            let reducer = if skip_first {
                skip_first = false;
                None
            } else {
                self.find_reducer(comp, &mon, reducers)
            };
            let Some(r) = reducer else {
                done.push(Term {
                    comp,
                    mon,
                    coeff: c,
                });
                continue;
            };
            let u = mon.checked_div(r.lm).expect("reducer divides");
            let (a, b) = dom.cofactors(&c, &r.poly[0].coeff);
            if !dom.is_one(&a) {
                for v in pending.values_mut() {
                    *v = dom.mul(v, &a);
                }
                for t in done.iter_mut() {
                    t.coeff = dom.mul(&t.coeff, &a);
                }
            }
            let shifted = self.alg.mul_monomial(dom, self.order, &u, r.poly);
            debug_assert_eq!(shifted[0].mon, mon);
            for t in shifted.into_iter().skip(1) {
                let v = dom.mul(&t.coeff, &b);
                match pending.entry((t.comp, t.mon)) {
                    Entry::Occupied(mut e) => {
                        let nv = dom.sub(e.get(), &v);
                        if dom.is_zero(&nv) {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    Entry::Vacant(e) => {
                        let (comp, mon) = e.key().clone();
                        e.insert(dom.neg(&v));
                        heap.push(HeapKey {
                            order: self.order,
                            comp,
                            mon,
                        });
                    }
                }
            }
        }
        done
    }

    fn leads<'e>(elements: &'e [Element<D::C>], skip: Option<usize>) -> Vec<Lead<'e, D::C>> {
        elements
            .iter()
            .enumerate()
            .filter(|(i, e)| e.active && Some(*i) != skip)
            .map(|(_, e)| Lead {
                poly: &e.poly,
                comp: e.comp,
                lm: &e.lm,
                mask: e.mask,
            })
            .collect()
    }

    fn make_element(&self, poly: Vector<D::C>, sugar: u32) -> Element<D::C> {
        let comp = poly[0].comp;
        let lm = poly[0].mon.clone();
        let mask = lm.support_mask();
        Element {
            poly,
            comp,
            lm,
            mask,
            sugar,
            active: true,
        }
    }

    fn spoly(&self, f: &Element<D::C>, g: &Element<D::C>, lcm: &Monomial) -> Vector<D::C> {
        let uf = lcm.checked_div(&f.lm).unwrap();
        let ug = lcm.checked_div(&g.lm).unwrap();
        let pf = self.alg.mul_monomial(self.dom, self.order, &uf, &f.poly);
        let pg = self.alg.mul_monomial(self.dom, self.order, &ug, &g.poly);
        let (a, b) = self.dom.cofactors(&pf[0].coeff, &pg[0].coeff);
        combine(self.dom, self.order, &a, &pf[1..], &b, &pg[1..])
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(
        &self,
        elements: &mut Vec<Element<D::C>>,
        pairs: &mut Vec<Pair>,
        h: Element<D::C>,
        product_criterion: bool,
    ) {
        let hi = elements.len();
        let candidates: Vec<(usize, Monomial, bool)> = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active && e.comp == h.comp)
            .map(|(i, e)| {
                (
                    i,
                    h.lm.lcm(&e.lm),
                    product_criterion && h.lm.is_coprime(&e.lm),
                )
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (idx, (_, lcm, coprime)) in candidates.iter().enumerate() {
            let dominated = candidates[idx + 1..].iter().any(|(_, l, _)| l.divides(lcm))
                || kept.iter().any(|&k| candidates[k].1.divides(lcm));
            if *coprime || !dominated {
                kept.push(idx);
            }
        }
        pairs.retain(|p| {
            !(p.comp == h.comp
                && h.lm.divides(&p.lcm)
                && elements[p.i].lm.lcm(&h.lm) != p.lcm
                && elements[p.j].lm.lcm(&h.lm) != p.lcm)
        });
        for idx in kept {
            let (g, ref lcm, coprime) = candidates[idx];
            if coprime {
                continue;
            }
            let e = &elements[g];
            let sugar = (e.sugar + self.alg.degree(&lcm.checked_div(&e.lm).unwrap()))
                .max(h.sugar + self.alg.degree(&lcm.checked_div(&h.lm).unwrap()));
            pairs.push(Pair {
                i: g,
                j: hi,
                comp: h.comp,
                lcm: lcm.clone(),
                sugar,
            });
        }
        for e in elements.iter_mut() {
            if e.active && e.comp == h.comp && h.lm.divides(&e.lm) {
                e.active = false;
            }
        }
        elements.push(h);
    }

    fn select(&self, pairs: &[Pair]) -> usize {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (p, q) = (&pairs[k], &pairs[best]);
            let by_lcm = || self.order.cmp(p.comp, &p.lcm, q.comp, &q.lcm);
            let ord = match self.selection {
                Selection::Normal => by_lcm().then(p.sugar.cmp(&q.sugar)),
                Selection::Sugar => p.sugar.cmp(&q.sugar).then_with(by_lcm),
            };
            if ord == Ordering::Less {
                best = k;
            }
        }
        best
    }

    fn product_criterion(&self, gens: &[Vector<D::C>]) -> bool {
        self.alg.commutative() && gens.iter().flatten().all(|t| t.comp == 0)
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, normalised
    /// by the domain and sorted by descending leading term.
    pub fn groebner_basis(&self, gens: Vec<Vector<D::C>>) -> Vec<Vector<D::C>> {
        let product_criterion = self.product_criterion(&gens);
        let mut gens: Vec<Vector<D::C>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by(|a, b| self.order.cmp_terms(&a[0], &b[0]));
        let mut elements: Vec<Element<D::C>> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for g in gens {
            let sugar = g.iter().map(|t| self.alg.degree(&t.mon)).max().unwrap_or(0);
            let mut h = self.reduce_with(g, &Self::leads(&elements, None), false);
            if h.is_empty() {
                continue;
            }
            self.dom.normalize(&mut h);
            let el = self.make_element(h, sugar);
            self.update(&mut elements, &mut pairs, el, product_criterion);
        }
        while !pairs.is_empty() {
            let k = self.select(&pairs);
            let pair = pairs.swap_remove(k);
            let s = self.spoly(&elements[pair.i], &elements[pair.j], &pair.lcm);
            if s.is_empty() {
                continue;
            }
            let mut h = self.reduce_with(s, &Self::leads(&elements, None), false);
            if h.is_empty() {
                continue;
            }
            self.dom.normalize(&mut h);
            let el = self.make_element(h, pair.sugar);
            self.update(&mut elements, &mut pairs, el, product_criterion);
        }
        self.interreduce(
            elements
                .into_iter()
                .filter(|e| e.active)
                .map(|e| e.poly)
                .collect(),
        )
    }

    /// Turns a minimal Gröbner basis into the reduced one.
    fn interreduce(&self, mut basis: Vec<Vector<D::C>>) -> Vec<Vector<D::C>> {
        basis.sort_by(|a, b| self.order.cmp_terms(&a[0], &b[0]));
        let elements: Vec<Element<D::C>> =
            basis.into_iter().map(|p| self.make_element(p, 0)).collect();
        let mut out = Vec::with_capacity(elements.len());
        for i in 0..elements.len() {
            let leads = Self::leads(&elements, Some(i));
            let mut r = self.reduce_with(elements[i].poly.clone(), &leads, true);
            self.dom.normalize(&mut r);
            out.push(r);
        }
        out.sort_by(|a, b| self.order.cmp_terms(&b[0], &a[0]));
        out
    }

    /// Normal form of `p` modulo a Gröbner basis, up to a nonzero scalar
    /// (exact over a field domain whose basis is monic).
    pub fn normal_form(&self, p: Vector<D::C>, basis: &[Vector<D::C>]) -> Vector<D::C> {
        let leads: Vec<Lead<D::C>> = basis
            .iter()
            .filter(|b| !b.is_empty())
            .map(|b| Lead {
                poly: b,
                comp: b[0].comp,
                lm: &b[0].mon,
                mask: b[0].mon.support_mask(),
            })
            .collect();
        self.reduce_with(p, &leads, false)
    }

    /// Checks that the S-pairs of `basis` left after the Gebauer–Möller
    /// criteria all reduce to zero, which certifies a Gröbner basis.
    pub fn is_groebner(&self, basis: &[Vector<D::C>]) -> bool {
        let basis: Vec<Vector<D::C>> = basis.iter().filter(|b| !b.is_empty()).cloned().collect();
        let product_criterion = self.product_criterion(&basis);
        let mut elements: Vec<Element<D::C>> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for b in &basis {
            let el = self.make_element(b.clone(), 0);
            self.update(&mut elements, &mut pairs, el, product_criterion);
        }
        // elements whose leading term is divisible by another's are fine to
        // drop: divisibility makes the remaining pairs a superset test
        pairs.iter().all(|pair| {
            let s = self.spoly(&elements[pair.i], &elements[pair.j], &pair.lcm);
            self.normal_form(s, &basis).is_empty()
        })
    }
}

/// Collects terms into a sorted vector, merging equal monomials.
pub(crate) fn collect_sorted<D: Domain>(
    dom: &D,
    order: &TermOrder,
    acc: FxHashMap<(u32, Monomial), D::C>,
) -> Vector<D::C> {
    let mut v: Vector<D::C> = acc
        .into_iter()
        .filter(|(_, c)| !dom.is_zero(c))
        .map(|((comp, mon), coeff)| Term { comp, mon, coeff })
        .collect();
    order.sort(&mut v);
    v
}
