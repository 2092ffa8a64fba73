//! Reduced Gröbner bases by Buchberger's algorithm with the normal selection
//! strategy and the Gebauer–Möller pair criteria, plus the ideal arithmetic
//! built on top of them. Ideals that contain a full power of the maximal
//! ideal under grevlex are handled by linear algebra below that degree.

mod ideal;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::coeff::Field;
use crate::error::Result;
use crate::poly::{
    coprime, monomial_degree, monomial_div, monomial_divides, monomial_lcm, Monomial,
    MonomialOrder, PolyRing, Polynomial,
};

pub use ideal::Ideal;

/// Reduced Gröbner basis: monic, inter-reduced, sorted by descending leading
/// monomial. Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Computes the reduced basis of the ideal generated by `gens` with
    /// respect to `order`.
    pub fn compute(gens: &[Polynomial<F>], order: MonomialOrder) -> Result<Self> {
        let ring = match gens.first() {
            Some(g) => g.ring().with_order(order),
            None => {
                return Err(crate::error::Error::Runtime(
                    "Gröbner basis of an empty generator list needs a ring".into(),
                ))
            }
        };
        let gens = gens
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::compute_in(&ring, gens))
    }

    /// As [`GroebnerBasis::compute`], with generators already sorted in `ring`.
    pub fn compute_in(ring: &Arc<PolyRing>, gens: Vec<Polynomial<F>>) -> Self {
        let elements = buchberger(ring, gens);
        Self {
            ring: ring.clone(),
            elements,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Unique remainder of `f` modulo the basis, expressed in the basis' ring.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let f = f.to_ring(&self.ring)?;
        Ok(reduce(&f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Full reduction of `f` by `basis`.
pub(crate) fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let refs: Vec<&Polynomial<F>> = basis.iter().collect();
    reduce_by(f, &refs)
}

fn reduce_by<F: Field>(f: &Polynomial<F>, basis: &[&Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    'outer: while let Some((m, c)) = p.terms().first().cloned() {
        for g in basis {
            let lm = g.leading_monomial().unwrap();
            if monomial_divides(lm, &m) {
                let shift = monomial_div(&m, lm);
                let coeff = c.div(g.leading_coeff().unwrap());
                p = p
                    .checked_sub(&g.mul_term(&shift, &coeff))
                    .expect("same ring");
                continue 'outer;
            }
        }
        let mut terms = p.into_terms();
        let head = terms.remove(0);
        rem.push(head);
        p = Polynomial::from_sorted(&ring, terms);
    }
    Polynomial::from_sorted(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &[u32]) -> Polynomial<F> {
    let a = f.mul_term(
        &monomial_div(lcm, f.leading_monomial().unwrap()),
        &g.leading_coeff().unwrap().clone(),
    );
    let b = g.mul_term(
        &monomial_div(lcm, g.leading_monomial().unwrap()),
        &f.leading_coeff().unwrap().clone(),
    );
    a.checked_sub(&b).expect("same ring")
}

/// Gebauer–Möller update for the new basis element with index `h`.
fn update<F: Field>(basis: &[Polynomial<F>], active: &mut [bool], pairs: &mut Vec<Pair>, h: usize) {
    let lh = basis[h].leading_monomial().unwrap().clone();
    let mut fresh: Vec<(usize, Monomial, bool)> = (0..h)
        .filter(|&g| active[g])
        .map(|g| {
            let lg = basis[g].leading_monomial().unwrap();
            (g, monomial_lcm(lg, &lh), coprime(lg, &lh))
        })
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while !fresh.is_empty() {
        let cand = fresh.remove(0);
        let dominated = fresh
            .iter()
            .chain(kept.iter())
            .any(|other| monomial_divides(&other.1, &cand.1));
        if cand.2 || !dominated {
            kept.push(cand);
        }
    }
    pairs.retain(|p| {
        let li = basis[p.i].leading_monomial().unwrap();
        let lj = basis[p.j].leading_monomial().unwrap();
        !(monomial_divides(&lh, &p.lcm)
            && monomial_lcm(li, &lh) != p.lcm
            && monomial_lcm(lj, &lh) != p.lcm)
    });
    for (g, lcm, is_coprime) in kept {
        if !is_coprime {
            pairs.push(Pair { i: g, j: h, lcm });
        }
    }
    for g in 0..h {
        if active[g] && monomial_divides(&lh, basis[g].leading_monomial().unwrap()) {
            active[g] = false;
        }
    }
}

/// Smallest `n` such that every monomial of degree `n` is a generator.
/// Only under grevlex, where truncating below `n` keeps leading terms.
fn full_power_degree<F: Field>(ring: &Arc<PolyRing>, gens: &[Polynomial<F>]) -> Option<u32> {
    let k = ring.nvars();
    if ring.order() != MonomialOrder::Grevlex || k == 0 {
        return None;
    }
    let mut seen: HashSet<&Monomial> = HashSet::new();
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for g in gens {
        if let [(m, _)] = g.terms() {
            if seen.insert(m) {
                *counts.entry(monomial_degree(m)).or_default() += 1;
            }
        }
    }
    // C(d + k - 1, k - 1) monomials of degree d
    let full = |d: u32| (1..k).fold(1usize, |acc, i| acc * (d as usize + i) / i);
    counts
        .into_iter()
        .filter(|&(d, c)| c == full(d))
        .map(|(d, _)| d)
        .min()
}

fn truncate<F: Field>(ring: &Arc<PolyRing>, p: Polynomial<F>, n: u32) -> Polynomial<F> {
    let terms = p
        .into_terms()
        .into_iter()
        .filter(|(m, _)| monomial_degree(m) < n)
        .collect();
    Polynomial::from_sorted(ring, terms)
}

/// Reduced basis of an ideal containing all monomials of degree `n`: the
/// part below degree `n` is the smallest space holding the truncated
/// generators and closed under multiplication by the variables, and its
/// reduced echelon form supplies the basis elements. Also returns the
/// colength of the ideal plus `m^n`.
fn truncated_basis<F: Field>(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial<F>],
    n: u32,
) -> (Vec<Polynomial<F>>, usize) {
    let k = ring.nvars();
    if n == 0 {
        return (vec![Polynomial::one(ring)], 0);
    }
    let unit = |i: usize| -> Monomial {
        let mut e = vec![0; k];
        e[i] = 1;
        e
    };
    // kept in reduced row echelon form: no pivot contains another's lead
    let mut pivots: HashMap<Monomial, Polynomial<F>> = HashMap::new();
    let mut queue: VecDeque<Polynomial<F>> = gens.iter().map(|g| truncate(ring, g.clone(), n)).collect();
    while let Some(row) = queue.pop_front() {
        let mut row = row;
        for (m, c) in row.terms().to_vec() {
            if let Some(p) = pivots.get(&m) {
                row = row.checked_sub(&p.scale(&c)).expect("same ring");
            }
        }
        let Some(lead) = row.leading_monomial().cloned() else {
            continue;
        };
        let row = row.monic();
        for p in pivots.values_mut() {
            if let Some((_, c)) = p.terms().iter().find(|(m, _)| *m == lead) {
                *p = p.checked_sub(&row.scale(c)).expect("same ring");
            }
        }
        for i in 0..k {
            queue.push_back(truncate(ring, row.mul_term(&unit(i), &F::one()), n));
        }
        pivots.insert(lead, row);
    }
    if pivots.contains_key(&vec![0; k]) {
        return (vec![Polynomial::one(ring)], 0);
    }
    let colength = (0..n).map(|d| monomials_of_degree(k, d).len()).sum::<usize>() - pivots.len();

    let leads: Vec<Monomial> = pivots.keys().cloned().collect();
    let minimal = |m: &Monomial| !leads.iter().any(|l| l != m && monomial_divides(l, m));
    let mut basis: Vec<Polynomial<F>> = leads
        .iter()
        .filter(|l| minimal(l))
        .map(|l| pivots.remove(l).unwrap())
        .collect();
    basis.extend(
        monomials_of_degree(k, n)
            .into_iter()
            .filter(|m| minimal(m))
            .map(|m| Polynomial::from_sorted(ring, vec![(m, F::one())])),
    );
    basis.sort_by(|a, b| {
        ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    (basis, colength)
}

fn monomials_of_degree(k: usize, d: u32) -> Vec<Monomial> {
    if k == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in monomials_of_degree(k - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn buchberger<F: Field>(ring: &Arc<PolyRing>, gens: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    let Some(n) = full_power_degree(ring, &gens) else {
        return pair_buchberger(ring, gens);
    };
    // I + m^e = I + m^(e+1) gives m^e ⊆ I, so the smallest such e is enough
    let mut prev = truncated_basis(ring, &gens, 0);
    for e in 1..=n {
        let next = truncated_basis(ring, &gens, e);
        if next.1 == prev.1 {
            return prev.0;
        }
        prev = next;
    }
    prev.0
}

fn pair_buchberger<F: Field>(ring: &Arc<PolyRing>, gens: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut gens = gens;
    gens.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    for g in gens {
        let current: Vec<&Polynomial<F>> = basis
            .iter()
            .zip(&active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        let h = reduce_by(&g, &current);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        basis.push(h.monic());
        active.push(true);
        let idx = basis.len() - 1;
        update(&basis, &mut active, &mut pairs, idx);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm by degree, then by the order, then by indices
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                monomial_degree(&pa.lcm)
                    .cmp(&monomial_degree(&pb.lcm))
                    .then_with(|| ring.cmp_monomials(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let current: Vec<&Polynomial<F>> = basis
            .iter()
            .zip(&active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        let h = reduce_by(&s, &current);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        basis.push(h.monic());
        active.push(true);
        let idx = basis.len() - 1;
        update(&basis, &mut active, &mut pairs, idx);
    }

    let minimal: Vec<Polynomial<F>> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    interreduce(ring, minimal)
}

/// Turns a Gröbner basis whose leading monomials are pairwise non-dividing
/// into the reduced one.
fn interreduce<F: Field>(ring: &Arc<PolyRing>, mut g: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    g.sort_by(|a, b| {
        ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    let mut out = Vec::with_capacity(g.len());
    for i in 0..g.len() {
        let others: Vec<&Polynomial<F>> = g
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let head = Polynomial::from_sorted(ring, vec![g[i].terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, g[i].terms()[1..].to_vec());
        let reduced = &head + &reduce_by(&tail, &others);
        out.push(reduced.monic());
    }
    out
}
