#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use mstruct::{Ideal, MonomialOrder, PolyRing, QPoly, Rational, RingMap};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars, MonomialOrder::Grevlex).unwrap()
}

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - a) {
            let mut m = vec![a];
            m.append(&mut rest);
            out.push(m);
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        r += 1;
    }
    r
}

fn coefficients(f: &QPoly, cols: &BTreeMap<Vec<u32>, usize>) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); cols.len()];
    for (m, c) in f.terms() {
        row[cols[m]] = c.clone();
    }
    row
}

/// Membership of a homogeneous `f` of degree `d` in the ideal of the
/// homogeneous `gens`, decided by the rank of the degree-`d` Macaulay matrix.
pub fn macaulay_member(gens: &[QPoly], f: &QPoly, d: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let ring = f.ring().clone();
    let n = ring.nvars();
    let cols: BTreeMap<Vec<u32>, usize> = monomials_of_degree(n, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - dg) {
            rows.push(coefficients(&g.mul_term(&m, &Rational::one()), &cols));
        }
    }
    let base = rank(rows.clone());
    rows.push(coefficients(f, &cols));
    rank(rows) == base
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    Rational::new(num.into(), den.into())
}

pub fn nonzero_small_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = small_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, d: u32, terms: usize) -> QPoly {
    let mons = monomials_of_degree(ring.nvars(), d);
    let mut f = QPoly::zero(ring);
    for _ in 0..terms {
        let m = mons[rng.gen_range(0..mons.len())].clone();
        f = &f + &QPoly::monomial(ring, m, nonzero_small_rational(rng));
    }
    f
}

/// A random polynomial with terms of degree `1..=d` and no constant term.
pub fn random_local(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, d: u32, terms: usize) -> QPoly {
    let mut f = QPoly::zero(ring);
    for _ in 0..terms {
        let k = rng.gen_range(1..=d);
        f = &f + &random_form(rng, ring, k, 1);
    }
    f
}

/// A random invertible linear change of coordinates with small integer
/// entries.
pub fn random_linear_change(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>) -> RingMap<Rational> {
    let n = ring.nvars();
    loop {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-2i64..=2))).collect())
            .collect();
        if rank(m.clone()) < n {
            continue;
        }
        let images = m
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(QPoly::zero(ring), |acc, (j, c)| {
                    &acc + &QPoly::var(ring, j).scale(c)
                })
            })
            .collect();
        return RingMap::new(ring, ring, images).unwrap();
    }
}

pub fn map_ideal(i: &Ideal<Rational>, phi: &RingMap<Rational>) -> Ideal<Rational> {
    i.map(phi).unwrap()
}
