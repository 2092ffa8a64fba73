//! Matching zero-dimensional complete intersections against the two
//! normal-form families `(x^n, y² + α₂x² + … + α_(n-1)x^(n-1))` and
//! `(x^n + y^n, xy)`.
//!
//! The search runs in the truncated local ring: eliminate the variables
//! solved by linear parts, bring the tangent quadric to a standard shape by
//! a linear change, then apply shears until the ideal is literally of one of
//! the shapes. Every positive answer is certified by
//! [`verify_coordinate_change`] on the original ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::coords::verify_coordinate_change;
use crate::coeff::{binomial, rational_nth_root, rational_roots, Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::invariants::local_data;
use crate::linalg::{nullspace, row_reduce};
use crate::poly::{Monomial, MonomialOrder, PolyRing, QPoly, RingMap};

#[derive(Clone, Debug, PartialEq)]
pub enum NormalForm {
    /// `(x^n, y² + Σ α_i x^i)`, `alphas = [α₂, …, α_(n-1)]`.
    TypeA {
        n: u32,
        alphas: Vec<Rational>,
    },
    /// `(x^n + y^n, xy)`.
    TypeB {
        n: u32,
    },
    Other {
        reason: String,
    },
}

impl NormalForm {
    pub fn n(&self) -> Option<u32> {
        match self {
            NormalForm::TypeA { n, .. } | NormalForm::TypeB { n } => Some(*n),
            NormalForm::Other { .. } => None,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            NormalForm::TypeA { .. } => "A",
            NormalForm::TypeB { .. } => "B",
            NormalForm::Other { .. } => "other",
        }
    }

    /// The normal-form ideal in `Q[x, y, rest]` with the given variable
    /// names, the rest mapped to themselves.
    pub fn ideal(&self, ring: &Arc<PolyRing>) -> Option<Ideal<Rational>> {
        let x = QPoly::var(ring, 0);
        let y = QPoly::var(ring, 1);
        let mut gens = match self {
            NormalForm::TypeA { n, alphas } => {
                let mut q = &y * &y;
                for (i, a) in alphas.iter().enumerate() {
                    q = &q + &x.pow(i as u32 + 2).scale(a);
                }
                vec![x.pow(*n), q]
            }
            NormalForm::TypeB { n } => vec![&x.pow(*n) + &y.pow(*n), &x * &y],
            NormalForm::Other { .. } => return None,
        };
        gens.extend((2..ring.nvars()).map(|i| QPoly::var(ring, i)));
        Ideal::new(ring, gens).ok()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::TypeA { n, alphas } => {
                let a: Vec<String> = alphas.iter().map(|a| a.to_string()).collect();
                write!(f, "A(n={n}; alphas=[{}])", a.join(", "))
            }
            NormalForm::TypeB { n } => write!(f, "B(n={n})"),
            NormalForm::Other { reason } => write!(f, "other ({reason})"),
        }
    }
}

/// Outcome of [`recognize_normal_form`].
#[derive(Clone, Debug)]
pub struct Recognition {
    pub form: NormalForm,
    /// Certified change: the original ideal maps onto the normal form.
    pub change: Option<RingMap<Rational>>,
    /// Truncation used for the certificate.
    pub truncation: u32,
    pub length: Option<usize>,
    pub min_gens: Option<usize>,
    pub note: Option<String>,
}

impl Recognition {
    fn other(reason: impl Into<String>) -> Self {
        Self {
            form: NormalForm::Other {
                reason: reason.into(),
            },
            change: None,
            truncation: 0,
            length: None,
            min_gens: None,
            note: None,
        }
    }

    pub fn summary(&self) -> Value {
        let change = self.change.as_ref().map(|phi| {
            phi.source()
                .vars()
                .iter()
                .zip(phi.images())
                .map(|(v, img)| format!("{v} -> {}", img.render()))
                .collect::<Vec<_>>()
        });
        json!({
            "form": self.form.to_string(),
            "family": self.form.family(),
            "n": self.form.n(),
            "length": self.length,
            "min_gens": self.min_gens,
            "certified": self.change.is_some(),
            "change": change,
            "truncation": self.truncation,
            "note": self.note,
        })
    }
}

enum Attempt {
    Found(NormalForm, RingMap<Rational>),
    Extension(String),
    Fail,
}

/// Recognizes the local ring of `j` at the origin of all its variables.
pub fn recognize_normal_form(j: &Ideal<Rational>) -> Result<Recognition> {
    let ring = j.ring().clone();
    let d = ring.nvars();
    if j.gens().iter().any(|g| g.order() == Some(0)) {
        return Ok(Recognition::other("unit ideal at the origin"));
    }
    if j.is_zero() {
        return Ok(Recognition::other("zero ideal"));
    }
    let data = match local_data(j, None) {
        Ok(data) => data,
        Err(Error::NotZeroDimensional | Error::TruncationTooSmall { .. }) => {
            return Ok(Recognition::other("not zero-dimensional at the origin"))
        }
        Err(e) => return Err(e),
    };
    let n_trunc = data.truncation;
    let with_data = |mut r: Recognition| {
        r.length = Some(data.length);
        r.min_gens = Some(data.min_gens);
        r.truncation = n_trunc;
        r
    };
    if data.min_gens != d {
        return Ok(with_data(Recognition::other(format!(
            "not a complete intersection: {} minimal generators in codimension {d}",
            data.min_gens
        ))));
    }
    if data.length % 2 == 1 {
        return Ok(with_data(Recognition::other(format!(
            "odd length {}",
            data.length
        ))));
    }
    let all: Vec<usize> = (0..d).collect();
    let jt = j.plus_power_of_variables(&all, n_trunc);

    // cotangent directions cut out by linear parts
    let mut rows: Vec<Vec<Rational>> = j
        .gens()
        .iter()
        .map(|g| {
            let mut row = vec![Rational::zero(); d];
            for (m, c) in g.terms() {
                if m.iter().sum::<u32>() == 1 {
                    row[m.iter().position(|&e| e == 1).unwrap()] = c.clone();
                }
            }
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if d - pivots.len() != 2 {
        return Ok(with_data(Recognition::other(format!(
            "embedding dimension {}",
            d - pivots.len()
        ))));
    }
    let free: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
    let (j2, solved) = eliminate_pivots(&jt, &pivots, &free)?;
    let r2 = j2.ring().clone();

    let attempt = classify_plane(&j2, data.length, n_trunc)?;
    let (form, phi2) = match attempt {
        Attempt::Found(form, phi) => (form, phi),
        Attempt::Extension(why) => {
            let mut r = with_data(Recognition::other(
                "normal form needs an algebraic extension",
            ));
            r.note = Some(why);
            return Ok(r);
        }
        Attempt::Fail => {
            return Ok(with_data(Recognition::other(
                "no certified change found in the searched linear and shear changes",
            )))
        }
    };

    // assemble the change on all variables: free pair first, then the rest
    let mut names: Vec<String> = free.iter().map(|&i| ring.vars()[i].clone()).collect();
    names.extend(pivots.iter().map(|&i| ring.vars()[i].clone()));
    let target = PolyRing::new(&names, MonomialOrder::Grevlex)?;
    let to_target = RingMap::new(
        &r2,
        &target,
        vec![QPoly::var(&target, 0), QPoly::var(&target, 1)],
    )?;
    let fx = to_target.apply(&phi2.images()[0])?;
    let fy = to_target.apply(&phi2.images()[1])?;
    let plane = RingMap::new(&r2, &target, vec![fx.clone(), fy.clone()])?;
    let tall: Vec<usize> = (0..target.nvars()).collect();
    let mut images = vec![QPoly::zero(&target); d];
    images[free[0]] = fx;
    images[free[1]] = fy;
    for (k, &p) in pivots.iter().enumerate() {
        let g = plane.apply_truncated(&solved[k], &tall, n_trunc)?;
        images[p] = &QPoly::var(&target, 2 + k) + &g;
    }
    let psi = RingMap::new(&ring, &target, images)?;
    let dst = form.ideal(&target).expect("recognized forms have ideals");
    let mut n_verify = 1;
    let ok = loop {
        match verify_coordinate_change(&jt, &dst, &psi, n_verify) {
            Err(Error::TruncationTooSmall { required, .. }) => n_verify = required,
            other => break other?,
        }
    };
    if !ok {
        return Ok(with_data(Recognition::other(
            "candidate change failed verification",
        )));
    }
    let mut r = with_data(Recognition {
        form,
        change: Some(psi),
        truncation: n_verify,
        length: None,
        min_gens: None,
        note: None,
    });
    r.truncation = n_verify;
    Ok(r)
}

/// Splits `jt` into the plane ideal in the free variables and expressions
/// `p = g_p(free)` for the pivot variables.
fn eliminate_pivots(
    jt: &Ideal<Rational>,
    pivots: &[usize],
    free: &[usize],
) -> Result<(Ideal<Rational>, Vec<QPoly>)> {
    let ring = jt.ring();
    let plane_names = [ring.vars()[free[0]].clone(), ring.vars()[free[1]].clone()];
    let r2 = PolyRing::new(&plane_names, MonomialOrder::Grevlex)?;
    if pivots.is_empty() {
        return Ok((jt.embed(&r2)?, Vec::new()));
    }
    let mut names: Vec<String> = pivots.iter().map(|&i| ring.vars()[i].clone()).collect();
    names.extend(plane_names.iter().cloned());
    let k = pivots.len();
    let perm = PolyRing::new(&names, MonomialOrder::Block(k))?;
    let gens = jt
        .gens()
        .iter()
        .map(|g| g.embed(&perm))
        .collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::compute_in(&perm, gens);
    let mut solved = vec![None; k];
    let mut plane = Vec::new();
    for g in gb.elements() {
        let lm = g.leading_monomial().expect("nonzero");
        let block: u32 = lm[..k].iter().sum();
        if block == 0 {
            plane.push(g.embed(&r2)?);
        } else if block == 1 && lm[k..].iter().all(|&e| e == 0) {
            let i = lm[..k].iter().position(|&e| e == 1).unwrap();
            let rest = QPoly::from_terms(&perm, g.terms()[1..].iter().cloned())
                .scale(&g.leading_coeff().unwrap().inv());
            solved[i] = Some(rest.neg().embed(&r2)?);
        }
    }
    let solved = solved
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Runtime("linear parts did not solve for all pivots".into()))?;
    Ok((Ideal::new(&r2, plane)?, solved))
}

/// Coefficients expressing `target` through `candidates` modulo `j`,
/// preferring earlier candidates.
fn express(
    j: &Ideal<Rational>,
    target: &QPoly,
    candidates: &[QPoly],
) -> Result<Option<Vec<Rational>>> {
    let k = candidates.len();
    let mut columns = Vec::with_capacity(k + 1);
    for c in candidates {
        columns.push(j.normal_form(c)?);
    }
    columns.push(j.normal_form(target)?);
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in &columns {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    if index.is_empty() {
        return Ok(Some(vec![Rational::zero(); k]));
    }
    let mut rows = vec![vec![Rational::zero(); k + 1]; index.len()];
    for (col, p) in columns.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[index[m]][col] = c.clone();
        }
    }
    let pivots = row_reduce(&mut rows);
    if pivots.contains(&k) {
        return Ok(None);
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        sol[p] = row[k].clone();
    }
    Ok(Some(sol))
}

fn plane_vars(ring: &Arc<PolyRing>) -> (QPoly, QPoly) {
    (QPoly::var(ring, 0), QPoly::var(ring, 1))
}

fn truncated_image(
    j: &Ideal<Rational>,
    sigma: &RingMap<Rational>,
    n: u32,
) -> Result<Ideal<Rational>> {
    let gens = j
        .gens()
        .iter()
        .map(|g| sigma.apply_truncated(g, &[0, 1], n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(sigma.target(), gens)?
        .plus_power_of_variables(&[0, 1], n)
        .reduced())
}

/// `v ↦ sigma(phi(v))`, truncated.
fn compose(
    phi: &RingMap<Rational>,
    sigma: &RingMap<Rational>,
    n: u32,
) -> Result<RingMap<Rational>> {
    let images = phi
        .images()
        .iter()
        .map(|p| sigma.apply_truncated(p, &[0, 1], n))
        .collect::<Result<Vec<_>>>()?;
    RingMap::new(phi.source(), sigma.target(), images)
}

fn linear_map(ring: &Arc<PolyRing>, m: [[Rational; 2]; 2]) -> Result<RingMap<Rational>> {
    let (x, y) = plane_vars(ring);
    let img = |a: &Rational, b: &Rational| &x.scale(a) + &y.scale(b);
    RingMap::new(
        ring,
        ring,
        vec![img(&m[0][0], &m[0][1]), img(&m[1][0], &m[1][1])],
    )
}

/// The substitution of old coordinates for new ones when the new ones are
/// `X = a·(x, y)`, `Y = b·(x, y)`.
fn change_to(
    ring: &Arc<PolyRing>,
    a: [Rational; 2],
    b: [Rational; 2],
) -> Result<Option<RingMap<Rational>>> {
    let det = &a[0] * &b[1] - &a[1] * &b[0];
    if det.is_zero() {
        return Ok(None);
    }
    let inv = det.inv();
    // old = M^{-1} new
    let m = [[&b[1] * &inv, -&a[1] * &inv], [-&b[0] * &inv, &a[0] * &inv]];
    // rows of M^{-1} give x and y in terms of (X, Y)
    Ok(Some(linear_map(
        ring,
        [
            [m[0][0].clone(), m[0][1].clone()],
            [m[1][0].clone(), m[1][1].clone()],
        ],
    )?))
}

fn classify_plane(j2: &Ideal<Rational>, length: usize, n: u32) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let (x, y) = plane_vars(&ring);
    let one = Rational::one();
    let zero = Rational::zero();

    // quadrics in the initial ideal
    let j3 = j2.plus_power_of_variables(&[0, 1], 3);
    let quads = [&x * &x, &x * &y, &y * &y];
    let nfs = quads
        .iter()
        .map(|q| j3.normal_form(q))
        .collect::<Result<Vec<_>>>()?;
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in &nfs {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::zero(); 3]; index.len()];
    for (col, p) in nfs.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[index[m]][col] = c.clone();
        }
    }
    let space = nullspace(rows, 3);
    if space.len() == 1 || space.len() == 2 {
        let id = RingMap::identity(&ring);
        let swap = linear_map(
            &ring,
            [[zero.clone(), one.clone()], [one.clone(), zero.clone()]],
        )?;
        for start in [&id, &swap] {
            if let Attempt::Found(f, p) = shear_a(j2, length, n, start)? {
                if !split_type_a(&f) {
                    return Ok(Attempt::Found(f, p));
                }
            }
        }
        match normalize_b(j2, length, n, &id)? {
            Attempt::Fail => {}
            other => return Ok(other),
        }
    }
    match space.len() {
        1 => {
            let c = &space[0];
            quadric_route(j2, length, n, [c[0].clone(), c[1].clone(), c[2].clone()])
        }
        2 if length == 4 => pencil_route(j2, &space),
        _ => Ok(Attempt::Fail),
    }
}

/// `y² - c²x² + …` with `c ≠ 0` rational: reported in the second family.
fn split_type_a(form: &NormalForm) -> bool {
    match form {
        NormalForm::TypeA { alphas, .. } => alphas
            .first()
            .is_some_and(|a| !a.is_zero() && rational_nth_root(&-a, 2).is_some()),
        _ => false,
    }
}

/// `c0 x² + c1 xy + c2 y²` as a square of a linear form, if it is one.
fn square_root(c: &[Rational; 3]) -> Option<[Rational; 2]> {
    let b = &c[1] / Rational::from_i64(2);
    if &b * &b != &c[0] * &c[2] {
        return None;
    }
    if !c[0].is_zero() {
        Some([c[0].clone(), b])
    } else {
        Some([Rational::zero(), Rational::one()])
    }
}

/// Linear factors of a split quadric.
fn split(c: &[Rational; 3]) -> Option<([Rational; 2], [Rational; 2])> {
    let two = Rational::from_i64(2);
    let delta = &c[1] * &c[1] / Rational::from_i64(4) - &c[0] * &c[2];
    let root = rational_nth_root(&delta, 2)?;
    if delta.is_zero() {
        return None;
    }
    if c[0].is_zero() {
        // y (c1 x + c2 y)
        return Some((
            [Rational::zero(), Rational::one()],
            [c[1].clone(), c[2].clone()],
        ));
    }
    // roots t of c0 t² + c1 t + c2 with t = x/y
    let t1 = (-&c[1] + &two * &root) / (&two * &c[0]);
    let t2 = (-&c[1] - &two * &root) / (&two * &c[0]);
    Some(([Rational::one(), -t1], [c[0].clone(), -(&c[0] * &t2)]))
}

fn quadric_route(j2: &Ideal<Rational>, length: usize, n: u32, c: [Rational; 3]) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let one = Rational::one();
    let zero = Rational::zero();
    if let Some(l) = square_root(&c) {
        let other = if !l[1].is_zero() {
            [one.clone(), zero.clone()]
        } else {
            [zero.clone(), one.clone()]
        };
        if let Some(start) = change_to(&ring, other, l)? {
            return normalize_a(j2, length, n, &start);
        }
        return Ok(Attempt::Fail);
    }
    if let Some((l1, l2)) = split(&c) {
        if let Some(start) = change_to(&ring, l1, l2)? {
            return normalize_b(j2, length, n, &start);
        }
        return Ok(Attempt::Fail);
    }
    // irreducible over Q: complete the square in y
    let start = change_to(
        &ring,
        [one.clone(), zero.clone()],
        [&c[1] / (&c[2] * Rational::from_i64(2)), one],
    )?
    .expect("triangular change");
    match normalize_a(j2, length, n, &start)? {
        Attempt::Found(f, p) => Ok(Attempt::Found(f, p)),
        _ => Ok(Attempt::Extension(
            "tangent quadric is irreducible over Q and no rational coordinate with x^n in the ideal was found".into(),
        )),
    }
}

/// Length four with two tangent quadrics: `(X², Y²)` from two squares in
/// the pencil.
fn pencil_route(j2: &Ideal<Rational>, space: &[Vec<Rational>]) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let (p, q) = (&space[0], &space[1]);
    let half = Rational::from_i64(2).inv();
    // disc(λp + μq) = (λ b_p + μ b_q)² − (λ a_p + μ a_q)(λ c_p + μ c_q)
    let (ap, bp, cp) = (&p[0], &p[1] * &half, &p[2]);
    let (aq, bq, cq) = (&q[0], &q[1] * &half, &q[2]);
    let a = &bp * &bp - ap * cp;
    let b = Rational::from_i64(2) * &bp * &bq - ap * cq - aq * cp;
    let c = &bq * &bq - aq * cq;
    let roots: Vec<(Rational, Rational)> = if a.is_zero() {
        if b.is_zero() {
            return Ok(Attempt::Fail);
        }
        vec![(Rational::one(), Rational::zero()), (-c.clone(), b.clone())]
    } else {
        let disc = &b * &b - Rational::from_i64(4) * &a * &c;
        if disc.is_zero() {
            return Ok(Attempt::Fail);
        }
        let Some(r) = rational_nth_root(&disc, 2) else {
            return Ok(Attempt::Extension(
                "the squares in the pencil of tangent quadrics are irrational".into(),
            ));
        };
        let two_a = Rational::from_i64(2) * &a;
        vec![
            ((-&b + &r) / &two_a, Rational::one()),
            ((-&b - &r) / &two_a, Rational::one()),
        ]
    };
    let member = |(l, m): &(Rational, Rational)| -> [Rational; 3] {
        [
            l * &p[0] + m * &q[0],
            l * &p[1] + m * &q[1],
            l * &p[2] + m * &q[2],
        ]
    };
    let (Some(l1), Some(l2)) = (
        square_root(&member(&roots[0])),
        square_root(&member(&roots[1])),
    ) else {
        return Ok(Attempt::Fail);
    };
    let Some(phi) = change_to(&ring, l1, l2)? else {
        return Ok(Attempt::Fail);
    };
    let image = truncated_image(j2, &phi, 3)?;
    let form = NormalForm::TypeA {
        n: 2,
        alphas: vec![],
    };
    if image.equals(
        &form
            .ideal(&ring)
            .unwrap()
            .plus_power_of_variables(&[0, 1], 3),
    )? {
        Ok(Attempt::Found(form, phi))
    } else {
        Ok(Attempt::Fail)
    }
}

fn univariate(
    ring: &Arc<PolyRing>,
    var: usize,
    coeffs: impl IntoIterator<Item = (u32, Rational)>,
) -> QPoly {
    QPoly::from_terms(
        ring,
        coeffs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut m = vec![0; 2];
                m[var] = i;
                (m, c)
            }),
    )
}

/// Tries each rational direction `L` with `L^half` in the ideal modulo
/// `m^(half+1)` as the `x` coordinate, then shears.
fn normalize_a(
    j2: &Ideal<Rational>,
    length: usize,
    n: u32,
    start: &RingMap<Rational>,
) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let half = (length / 2) as u32;
    let cur = truncated_image(j2, start, n)?;
    let Some(dirs) = power_directions(&cur, half)? else {
        return Ok(Attempt::Fail);
    };
    let (zero, one) = (Rational::zero(), Rational::one());
    for t in dirs {
        let sigma = match t {
            Some(t) => change_to(&ring, [one.clone(), t], [zero.clone(), one.clone()])?,
            None => change_to(&ring, [zero.clone(), one.clone()], [one.clone(), zero.clone()])?,
        }
        .expect("invertible");
        let phi = compose(start, &sigma, n)?;
        if let Attempt::Found(f, p) = shear_a(j2, length, n, &phi)? {
            return Ok(Attempt::Found(f, p));
        }
    }
    Ok(Attempt::Fail)
}

/// Rational `t` (or `None` for the direction `y`) with `(x + ty)^half` in
/// the ideal modulo `m^(half+1)`; `None` when the roots cannot be searched.
fn power_directions(cur: &Ideal<Rational>, half: u32) -> Result<Option<Vec<Option<Rational>>>> {
    let ring = cur.ring().clone();
    let (x, y) = plane_vars(&ring);
    let jh = cur.plus_power_of_variables(&[0, 1], half + 1);
    let mut rows: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
    for i in 0..=half {
        let nf = jh.normal_form(&(&x.pow(half - i) * &y.pow(i)))?;
        for (m, c) in nf.terms() {
            rows.entry(m.clone())
                .or_insert_with(|| vec![Rational::zero(); half as usize + 1])[i as usize] =
                c * binomial(half, i);
        }
    }
    if rows.is_empty() {
        return Ok(Some(vec![Some(Rational::zero()), None]));
    }
    let tring = PolyRing::new(&["t"], MonomialOrder::Grevlex)?;
    let polys: Vec<QPoly> = rows
        .values()
        .map(|row| {
            QPoly::from_terms(
                &tring,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (vec![i as u32], c.clone())),
            )
        })
        .collect();
    let gcd = Ideal::new(&tring, polys)?.gb().elements()[0].clone();
    let mut coeffs = vec![Rational::zero(); gcd.total_degree().unwrap_or(0) as usize + 1];
    for (m, c) in gcd.terms() {
        coeffs[m[0] as usize] = c.clone();
    }
    let Some(mut roots) = rational_roots(&coeffs) else {
        return Ok(None);
    };
    roots.sort_by_key(|t| !t.is_zero());
    let mut out: Vec<Option<Rational>> = roots.into_iter().map(Some).collect();
    if rows.values().all(|row| row[half as usize].is_zero()) {
        out.push(None);
    }
    Ok(Some(out))
}

/// Shears toward `(x^k, y² - g(x))` with `2k` equal to the length, keeping
/// the direction of `x`.
fn shear_a(
    j2: &Ideal<Rational>,
    length: usize,
    n: u32,
    start: &RingMap<Rational>,
) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let (x, y) = plane_vars(&ring);
    let half = (length / 2) as u32;
    let mut phi = start.clone();
    let mut cur = truncated_image(j2, &phi, n)?;
    // the shears below keep this condition
    if !cur
        .plus_power_of_variables(&[0, 1], half + 1)
        .contains(&x.pow(half))?
    {
        return Ok(Attempt::Fail);
    }
    let mut cands = Vec::new();
    for i in 0..n {
        cands.push(x.pow(i));
        cands.push(&x.pow(i) * &y);
    }
    let powers: Vec<QPoly> = (0..n).map(|i| x.pow(i)).collect();
    let mut linear_moves = 0;
    for _ in 0..(4 * half + 8) {
        let Some(sol) = express(&cur, &(&y * &y), &cands)? else {
            return Ok(Attempt::Fail);
        };
        let c = univariate(&ring, 0, (0..n).map(|i| (i, sol[2 * i as usize].clone())));
        let d = univariate(
            &ring,
            0,
            (0..n).map(|i| (i, sol[2 * i as usize + 1].clone())),
        );
        if !d.is_zero() {
            match d.order() {
                Some(0) => return Ok(Attempt::Fail),
                Some(1) => {
                    linear_moves += 1;
                    if linear_moves > 2 {
                        return Ok(Attempt::Fail);
                    }
                }
                _ => {}
            }
            let sigma = RingMap::new(
                &ring,
                &ring,
                vec![x.clone(), &y + &d.scale(&Rational::from_i64(2).inv())],
            )?;
            phi = compose(&phi, &sigma, n)?;
            cur = truncated_image(&cur, &sigma, n)?;
            continue;
        }
        let mut k = None;
        for e in 1..=n {
            if cur.contains(&x.pow(e))? {
                k = Some(e);
                break;
            }
        }
        let Some(k) = k else {
            return Ok(Attempt::Fail);
        };
        if 2 * k as usize == length {
            if c.terms().iter().any(|(m, _)| m[0] < 2) {
                return Ok(Attempt::Fail);
            }
            let alphas: Vec<Rational> = (2..k)
                .map(|i| {
                    c.terms()
                        .iter()
                        .find(|(m, _)| m[0] == i)
                        .map(|(_, v)| -v.clone())
                        .unwrap_or_else(Rational::zero)
                })
                .collect();
            let form = NormalForm::TypeA { n: k, alphas };
            let target = form
                .ideal(&ring)
                .unwrap()
                .plus_power_of_variables(&[0, 1], n);
            return Ok(if cur.equals(&target)? {
                Attempt::Found(form, phi)
            } else {
                Attempt::Fail
            });
        }
        if (2 * k as usize) < length {
            return Ok(Attempt::Fail);
        }
        // relation x^kp y + w(x) with the smallest kp
        let mut relation = None;
        for kp in 0..n {
            if let Some(sol) = express(&cur, &(&x.pow(kp) * &y), &powers)? {
                relation = Some((
                    kp,
                    univariate(&ring, 0, (0..n).map(|i| (i, -sol[i as usize].clone()))),
                ));
                break;
            }
        }
        let Some((kp, w)) = relation else {
            return Ok(Attempt::Fail);
        };
        let Some(m) = w.order() else {
            return Ok(Attempt::Fail);
        };
        let jx = kp as i64 + 1 - m as i64;
        if jx < 0 || m > half {
            return Ok(Attempt::Fail);
        }
        if jx == 0 {
            return Ok(Attempt::Fail);
        }
        let wm = w.terms().iter().find(|(e, _)| e[0] == m).unwrap().1.clone();
        let cc = (Rational::from_i64(half as i64) * wm).inv();
        let sigma = RingMap::new(
            &ring,
            &ring,
            vec![&x - &(&x.pow(jx as u32) * &y).scale(&cc), y.clone()],
        )?;
        phi = compose(&phi, &sigma, n)?;
        cur = truncated_image(&cur, &sigma, n)?;
    }
    Ok(Attempt::Fail)
}

/// Shears toward `(xy, x^k + c y^k)`, then rescales `y` when `c` has a
/// rational `k`-th root.
fn normalize_b(
    j2: &Ideal<Rational>,
    length: usize,
    n: u32,
    start: &RingMap<Rational>,
) -> Result<Attempt> {
    let ring = j2.ring().clone();
    let (x, y) = plane_vars(&ring);
    let half = (length / 2) as u32;
    let mut phi = start.clone();
    let mut cur = truncated_image(j2, &phi, n)?;
    let mut cands = vec![QPoly::one(&ring)];
    for i in 1..n {
        cands.push(x.pow(i));
        cands.push(y.pow(i));
    }
    for _ in 0..(n + 4) {
        let Some(sol) = express(&cur, &(&x * &y), &cands)? else {
            return Ok(Attempt::Fail);
        };
        let mut a = univariate(
            &ring,
            0,
            (1..n).map(|i| (i, sol[2 * i as usize - 1].clone())),
        );
        let b = univariate(&ring, 1, (1..n).map(|i| (i, sol[2 * i as usize].clone())));
        if !sol[0].is_zero() {
            a = &a + &QPoly::constant(&ring, sol[0].clone());
        }
        if a.is_zero() && b.is_zero() {
            let Some(t) = express(&cur, &x.pow(half), &[y.pow(half)])? else {
                return Ok(Attempt::Fail);
            };
            let c = -t[0].clone();
            if c.is_zero() {
                return Ok(Attempt::Fail);
            }
            let shape = Ideal::new(&ring, vec![&x * &y, &x.pow(half) + &y.pow(half).scale(&c)])?
                .plus_power_of_variables(&[0, 1], n);
            if !cur.equals(&shape)? {
                return Ok(Attempt::Fail);
            }
            return Ok(match rational_nth_root(&c, half) {
                Some(rho) => {
                    let sigma = RingMap::new(&ring, &ring, vec![x.clone(), y.scale(&rho.inv())])?;
                    Attempt::Found(NormalForm::TypeB { n: half }, compose(&phi, &sigma, n)?)
                }
                None => Attempt::Extension(format!(
                    "equal to (xy, x^{half} + c*y^{half}) with c = {c}, which has no rational {half}-th root"
                )),
            });
        }
        if a.order().map_or(false, |o| o < 3) || b.order().map_or(false, |o| o < 3) {
            return Ok(Attempt::Fail);
        }
        let b_over_y = b.div_exact(&y).expect("order at least one");
        let a_over_x = a.div_exact(&x).expect("order at least one");
        let sigma = RingMap::new(&ring, &ring, vec![&x + &b_over_y, &y + &a_over_x])?;
        phi = compose(&phi, &sigma, n)?;
        cur = truncated_image(&cur, &sigma, n)?;
    }
    Ok(Attempt::Fail)
}

/// Cheap literal test used by callers that already hold the normal-form
/// parameters.
pub fn matches_literally(j: &Ideal<Rational>, form: &NormalForm) -> Result<bool> {
    match form.ideal(j.ring()) {
        Some(target) => j.equals(&target),
        None => Ok(false),
    }
}
