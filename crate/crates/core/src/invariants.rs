//! Numerical invariants read off leading-term ideals: Hilbert series of
//! homogeneous ideals, lengths of Artinian quotients, and minimal generator
//! counts in local rings.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{
    coprime, monomial_degree, monomial_divides, Monomial, MonomialOrder, PolyRing, Polynomial,
    RingMap,
};

/// Hilbert series `numerator / (1-t)^nvars` and what follows from it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients of the numerator, lowest degree first.
    pub numerator: Vec<i64>,
    /// Krull dimension of the quotient ring; -1 for the unit ideal.
    pub dimension: i64,
    pub degree: i64,
    /// Hilbert polynomial coefficients, lowest degree first, as rationals.
    pub hilbert_polynomial: Vec<String>,
}

impl HilbertData {
    fn from_numerator(nvars: usize, num: Vec<i128>) -> Result<Self> {
        let numerator = to_i64(&num)?;
        if num.iter().all(|&c| c == 0) {
            return Ok(Self {
                nvars,
                numerator: vec![],
                dimension: -1,
                degree: 0,
                hilbert_polynomial: vec![],
            });
        }
        // divide by (1-t) while t=1 is a root
        let mut q = num;
        let mut k = 0usize;
        while k < nvars && q.iter().sum::<i128>() == 0 {
            q = divide_by_one_minus_t(&q);
            k += 1;
        }
        let d = nvars - k;
        let degree = i64::try_from(q.iter().sum::<i128>()).map_err(|_| overflow())?;
        let hp = hilbert_polynomial(&q, d);
        Ok(Self {
            nvars,
            numerator,
            dimension: d as i64,
            degree,
            hilbert_polynomial: hp.iter().map(|c| c.to_string()).collect(),
        })
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn hilbert_function(&self, d: u32) -> i128 {
        let n = self.nvars as i128;
        let mut acc = 0i128;
        for (j, &c) in self.numerator.iter().enumerate() {
            let j = j as i128;
            if j > d as i128 {
                break;
            }
            acc += c as i128 * binom_i(d as i128 - j + n - 1, n - 1);
        }
        acc
    }

    pub fn polynomial_coefficients(&self) -> Vec<Rational> {
        self.hilbert_polynomial
            .iter()
            .map(|s| s.parse::<Rational>().expect("stored rational"))
            .collect()
    }

    /// Evaluates the Hilbert polynomial at `t`.
    pub fn polynomial_at(&self, t: i64) -> Rational {
        let t = Rational::from_i64(t);
        self.polynomial_coefficients()
            .iter()
            .rev()
            .fold(<Rational as Zero>::zero(), |acc, c| acc * &t + c)
    }

    /// The Hilbert polynomial in the variable `t`, e.g. `6t - 3`.
    pub fn render_polynomial(&self) -> String {
        render_univariate(&self.polynomial_coefficients(), "t")
    }

    pub fn render_series(&self) -> String {
        let num = render_univariate(
            &self
                .numerator
                .iter()
                .map(|&c| Rational::from_i64(c))
                .collect::<Vec<_>>(),
            "t",
        );
        format!("({num})/(1-t)^{}", self.nvars)
    }
}

fn overflow() -> Error {
    Error::Runtime("Hilbert series coefficient overflow".into())
}

fn to_i64(v: &[i128]) -> Result<Vec<i64>> {
    let mut out: Vec<i64> = v
        .iter()
        .map(|&c| i64::try_from(c).map_err(|_| overflow()))
        .collect::<Result<_>>()?;
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

fn binom_i(n: i128, k: i128) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let mut r = 1i128;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn divide_by_one_minus_t(p: &[i128]) -> Vec<i128> {
    // p = (1-t) q  =>  q_i = p_0 + ... + p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        q.push(acc);
    }
    q
}

/// `Σ_j q_j · C(t - j + d - 1, d - 1)` expanded in powers of `t`.
fn hilbert_polynomial(q: &[i128], d: usize) -> Vec<Rational> {
    if d == 0 {
        return vec![];
    }
    let mut out = vec![<Rational as Zero>::zero(); d];
    for (j, &c) in q.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // C(t + a, d - 1) with a = d - 1 - j, as a product of linear factors
        let a = d as i64 - 1 - j as i64;
        let mut poly = vec![<Rational as One>::one()];
        for i in 0..(d as i64 - 1) {
            let shift = Rational::from_i64(a - i);
            let mut next = vec![<Rational as Zero>::zero(); poly.len() + 1];
            for (k, p) in poly.iter().enumerate() {
                next[k] += p * &shift;
                next[k + 1] += p;
            }
            poly = next;
        }
        let mut fact = <Rational as One>::one();
        for i in 1..d as i64 {
            fact *= Rational::from_i64(i);
        }
        for (k, p) in poly.iter().enumerate() {
            out[k] += p * Rational::from_i64(c as i64) / &fact;
        }
    }
    while out.last().is_some_and(|c| Zero::is_zero(c)) {
        out.pop();
    }
    out
}

/// Renders an ascending coefficient list as `6t - 3`.
pub fn render_univariate(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c < &<Rational as Zero>::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if One::is_one(&a) {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| monomial_degree(m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| monomial_divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// Numerator of the Hilbert series of `R / (gens)` over `(1-t)^n`.
fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i128> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| monomial_degree(g) == 0) {
        return vec![0];
    }
    let all_coprime =
        (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| coprime(&gens[i], &gens[j])));
    if all_coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = monomial_degree(g) as usize;
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] = -1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in most non-linear generators
    let n = gens[0].len();
    let var = (0..n)
        .max_by_key(|&v| {
            (
                gens.iter()
                    .filter(|g| g[v] > 0 && monomial_degree(g) > 1)
                    .count(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pivot = vec![0u32; n];
    pivot[var] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut q = g.clone();
            q[var] = q[var].saturating_sub(e);
            q
        })
        .collect();
    let a = monomial_numerator(with_pivot);
    let mut b = monomial_numerator(quotient);
    let mut shifted = vec![0i128; e as usize];
    shifted.append(&mut b);
    poly_add(&a, &shifted)
}

/// Hilbert series of `R/I` for a homogeneous ideal.
pub fn hilbert<F: Field>(ideal: &Ideal<F>) -> Result<HilbertData> {
    if !ideal.gens().iter().all(|g| g.is_homogeneous()) && !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let lms = ideal.gb_in(MonomialOrder::Grevlex).leading_monomials();
    HilbertData::from_numerator(ideal.ring().nvars(), monomial_numerator(lms))
}

/// Hilbert data of a monomial ideal given by exponent vectors.
pub fn hilbert_of_monomials(nvars: usize, gens: Vec<Monomial>) -> Result<HilbertData> {
    HilbertData::from_numerator(nvars, monomial_numerator(gens))
}

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Result<usize> {
        match self {
            Length::Finite(n) => Ok(n),
            Length::Infinite => Err(Error::NotArtinian),
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

/// Monomials outside the ideal generated by `lms`, or `None` if there are
/// infinitely many.
pub fn standard_monomials(nvars: usize, lms: &[Monomial]) -> Option<Vec<Monomial>> {
    let lms = minimize(lms.to_vec());
    if lms.iter().any(|m| monomial_degree(m) == 0) {
        return Some(vec![]);
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let pure = lms
            .iter()
            .filter(|m| m.iter().enumerate().all(|(i, &e)| i == v || e == 0))
            .map(|m| m[v])
            .min()?;
        bounds.push(pure);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    enumerate(&lms, &bounds, 0, &mut cur, &mut out);
    Some(out)
}

fn enumerate(
    lms: &[Monomial],
    bounds: &[u32],
    v: usize,
    cur: &mut Monomial,
    out: &mut Vec<Monomial>,
) {
    if v == bounds.len() {
        out.push(cur.clone());
        return;
    }
    for e in 0..bounds[v] {
        cur[v] = e;
        if lms.iter().any(|m| monomial_divides(m, cur)) {
            break;
        }
        enumerate(lms, bounds, v + 1, cur, out);
    }
    cur[v] = 0;
}

/// `dim R/I` as a vector space, counted by standard monomials.
pub fn artinian_length<F: Field>(ideal: &Ideal<F>) -> Length {
    let gb = ideal.gb_in(MonomialOrder::Grevlex);
    match standard_monomials(ideal.ring().nvars(), &gb.leading_monomials()) {
        Some(s) => Length::Finite(s.len()),
        None => Length::Infinite,
    }
}

fn unit_exponent(n: usize, v: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[v] = 1;
    e
}

/// Polynomial ring in the named variables over the same coefficients.
pub fn local_ring<S: AsRef<str>>(ring: &Arc<PolyRing>, vars: &[S]) -> Result<Arc<PolyRing>> {
    PolyRing::with_domain(vars, MonomialOrder::Grevlex, ring.domain().clone())
}

/// Local invariants of an ideal of a polynomial ring at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    /// An `n` with `m^n ⊆ mJ` in the local ring.
    pub truncation: u32,
    /// Length of the local quotient.
    pub length: usize,
    /// Number of minimal generators.
    pub min_gens: usize,
}

/// Invariants of `J` at the origin, with `m` the ideal of all variables.
///
/// Works modulo `m^n`. The truncation is accepted once
/// `m^n ⊆ mJ + m^(n+1)`, which by Nakayama gives `m^n ⊆ mJ` locally. With
/// `n = None` the search starts at `2·maxdeg + 2` and doubles. Fails with
/// [`Error::TruncationTooSmall`] when `J` is not zero-dimensional at the
/// origin within the search cap, with [`Error::NotZeroDimensional`] when
/// the origin lies on a positive-dimensional component, and with
/// [`Error::NotArtinian`] when `J` is locally the unit ideal.
pub fn local_data<F: Field>(local: &Ideal<F>, n: Option<u32>) -> Result<LocalData> {
    if local.gens().iter().any(|g| g.order() == Some(0)) {
        return Err(Error::NotArtinian);
    }
    if !isolated_at_origin(local)? {
        return Err(Error::NotZeroDimensional);
    }
    let maxdeg = local
        .gens()
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    let all: Vec<usize> = (0..local.ring().nvars()).collect();
    let mut prods = Vec::new();
    for g in local.gens() {
        for v in 0..local.ring().nvars() {
            prods.push(g.mul_term(&unit_exponent(local.ring().nvars(), v), &F::one()));
        }
    }
    let mj = Ideal::new(local.ring(), prods)?;
    const CAP: u32 = 256;
    let works = |n: u32| -> Result<bool> {
        let a = artinian_length(&mj.plus_power_of_variables(&all, n)).finite()?;
        let b = artinian_length(&mj.plus_power_of_variables(&all, n + 1)).finite()?;
        Ok(a == b)
    };
    let n = match n {
        Some(n) => {
            if !works(n)? {
                let mut k = n.max(1);
                while k <= CAP && !works(k)? {
                    k *= 2;
                }
                return Err(Error::TruncationTooSmall {
                    given: n,
                    required: k,
                });
            }
            n
        }
        None => {
            let mut k = 2 * maxdeg + 2;
            while !works(k)? {
                k *= 2;
                if k > CAP {
                    return Err(Error::TruncationTooSmall {
                        given: CAP,
                        required: k,
                    });
                }
            }
            k
        }
    };
    let length = artinian_length(&local.plus_power_of_variables(&all, n)).finite()?;
    let with_mj = artinian_length(&mj.plus_power_of_variables(&all, n)).finite()?;
    Ok(LocalData {
        truncation: n,
        length,
        min_gens: with_mj - length,
    })
}

/// Whether the origin is at most an isolated point of `V(J)`: the
/// components of `J` away from the origin, `J : m^∞`, do not pass through it.
pub fn isolated_at_origin<F: Field>(j: &Ideal<F>) -> Result<bool> {
    let all: Vec<usize> = (0..j.ring().nvars()).collect();
    let m = Ideal::of_variables(j.ring(), &all);
    let away = j.saturate(&m)?;
    Ok(!m.contains_ideal(&away)?)
}

/// Number of minimal generators of `J` in the local ring at the origin of
/// `vars`, after substituting constants for the variables in `point`.
/// See [`local_data`] for the truncation.
pub fn local_min_gens<F: Field, S: AsRef<str>>(
    j: &Ideal<F>,
    point: &[(S, F)],
    vars: &[S],
    n: Option<u32>,
) -> Result<usize> {
    let local = localize_at(j, point, vars)?;
    if local.is_zero() {
        return Ok(0);
    }
    match local_data(&local, n) {
        // a unit generator: J is the whole local ring, generated by 1
        Err(Error::NotArtinian) => Ok(1),
        Err(Error::NotZeroDimensional) => positive_dimensional_min_gens(&local),
        other => other.map(|d| d.min_gens),
    }
}

/// For `J` not zero-dimensional at the origin: `dim (J + m^n)/(mJ + m^n)`
/// bounds the count from below, an irredundant generating subset from
/// above. Succeeds when the two meet.
fn positive_dimensional_min_gens<F: Field>(local: &Ideal<F>) -> Result<usize> {
    let ring = local.ring();
    let mut gens: Vec<Polynomial<F>> = local.gens().to_vec();
    let mut i = 0;
    while i < gens.len() {
        let rest: Vec<Polynomial<F>> = gens
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        if Ideal::new(ring, rest.clone())?.contains(&gens[i])? {
            gens = rest;
        } else {
            i += 1;
        }
    }
    let upper = gens.len();
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let m = Ideal::of_variables(ring, &all);
    let mj = m.product(local)?;
    let maxdeg = local.gens().iter().filter_map(|g| g.total_degree()).max().unwrap_or(0);
    let mut lower = 0;
    let mut n = maxdeg + 1;
    for _ in 0..3 {
        let a = artinian_length(&mj.plus_power_of_variables(&all, n)).finite()?;
        let b = artinian_length(&local.plus_power_of_variables(&all, n)).finite()?;
        lower = a - b;
        if lower == upper {
            return Ok(upper);
        }
        n *= 2;
    }
    Err(Error::Unsupported(format!(
        "minimal generators not certified: between {lower} and {upper}"
    )))
}

/// Substitutes the point coordinates and moves `j` into the polynomial ring
/// in `vars`.
pub fn localize_at<F: Field, S: AsRef<str>>(
    j: &Ideal<F>,
    point: &[(S, F)],
    vars: &[S],
) -> Result<Ideal<F>> {
    let ring = j.ring();
    let subs: Vec<(&str, Polynomial<F>)> = point
        .iter()
        .map(|(v, c)| (v.as_ref(), Polynomial::constant(ring, c.clone())))
        .collect();
    let phi = RingMap::substitution(ring, &subs)?;
    let target = local_ring(ring, vars)?;
    let gens = j
        .gens()
        .iter()
        .map(|g| phi.apply(g)?.embed(&target))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal<Rational> {
        let r = PolyRing::new(vars, MonomialOrder::Grevlex).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let h = hilbert(&ideal(&["x", "y", "z", "w"], &["x^2", "y^2"])).unwrap();
        assert_eq!((h.dimension, h.degree), (2, 4));
        assert_eq!(h.render_polynomial(), "4t");
    }

    #[test]
    fn ci_two_three() {
        let h = hilbert(&ideal(&["x", "y", "z", "w"], &["x^2", "y^3"])).unwrap();
        assert_eq!(h.degree, 6);
        assert_eq!(h.render_polynomial(), "6t - 3");
    }

    #[test]
    fn unit_ideal_has_zero_series() {
        let h = hilbert(&ideal(&["x", "y"], &["1"])).unwrap();
        assert!(h.numerator.is_empty());
        assert_eq!(h.dimension, -1);
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        assert_eq!(
            hilbert(&ideal(&["x", "y"], &["x^2 + y"])),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(
            artinian_length(&ideal(&["x", "y"], &["x^2", "y^2"])),
            Length::Finite(4)
        );
        assert_eq!(
            artinian_length(&ideal(&["x", "y"], &["x*y", "x^3 + y^3"])),
            Length::Finite(6)
        );
        assert_eq!(
            artinian_length(&ideal(&["x", "y"], &["x^3", "x*y", "y^4"])),
            Length::Finite(6)
        );
        assert_eq!(
            artinian_length(&ideal(&["x", "y"], &["x^3"])),
            Length::Infinite
        );
    }

    #[test]
    fn local_generators() {
        let none: [(&str, Rational); 0] = [];
        let j = ideal(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(local_min_gens(&j, &none, &["x", "y"], None).unwrap(), 2);
        let j = ideal(&["x", "y"], &["x^3", "x*y", "y^4"]);
        assert_eq!(local_min_gens(&j, &none, &["x", "y"], None).unwrap(), 3);
    }

    #[test]
    fn local_generators_at_a_point_of_the_support() {
        let j = ideal(
            &["x", "y", "z", "u", "v"],
            &["u^2*x + v^2*y", "x^2", "x*y", "y^2", "z^2"],
        );
        let point = [("u", Rational::from_i64(0)), ("v", Rational::from_i64(1))];
        assert_eq!(
            local_min_gens(&j, &point, &["x", "y", "z"], None).unwrap(),
            3
        );
        let point = [("u", Rational::from_i64(1)), ("v", Rational::from_i64(1))];
        assert_eq!(
            local_min_gens(&j, &point, &["x", "y", "z"], None).unwrap(),
            3
        );
    }

    #[test]
    fn local_generators_along_the_support() {
        // at u = 0 on the chart v = 1, with u a local coordinate
        let j = ideal(
            &["x", "y", "z", "u", "v"],
            &["u*x + v*y", "x^2", "x*y", "y^2", "z^2"],
        );
        let point = [("v", Rational::from_i64(1))];
        assert_eq!(
            local_min_gens(&j, &point, &["x", "y", "z", "u"], None).unwrap(),
            3
        );
        let j = ideal(&["x", "y", "u"], &["x^2", "x*y", "y^2"]);
        assert_eq!(local_min_gens(&j, &[("u", Rational::from_i64(0))][..0], &["x", "y", "u"], None).unwrap(), 3);
    }

    #[test]
    fn local_generators_ignore_far_components() {
        // (x(x-1), y) has a second point at x = 1; locally at the origin it is (x, y)
        let none: [(&str, Rational); 0] = [];
        let j = ideal(&["x", "y"], &["x^2 - x", "y"]);
        assert_eq!(local_min_gens(&j, &none, &["x", "y"], None).unwrap(), 2);
    }

    #[test]
    fn too_small_truncation_reports_requirement() {
        let none: [(&str, Rational); 0] = [];
        let j = ideal(&["x", "y"], &["x^3", "y^3"]);
        match local_min_gens(&j, &none, &["x", "y"], Some(2)) {
            Err(Error::TruncationTooSmall { given: 2, required }) => assert!(required >= 5),
            other => panic!("{other:?}"),
        }
    }
}
