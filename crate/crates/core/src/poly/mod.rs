//! Sparse multivariate polynomials over an exact field.

mod order;
mod parse;
mod ring_map;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};

pub use order::MonomialOrder;
pub use ring_map::RingMap;

/// Exponent vector of a monomial; its length is the ring arity.
pub type Monomial = Vec<u32>;

pub fn monomial_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn monomial_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn monomial_gcd(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

/// `a / b`; caller guarantees divisibility.
pub fn monomial_div(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn monomial_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Rationals,
    /// Rational functions over the rationals in the named parameters.
    FractionField {
        params: Vec<String>,
    },
}

impl CoefficientDomain {
    pub fn params(&self) -> &[String] {
        match self {
            CoefficientDomain::Rationals => &[],
            CoefficientDomain::FractionField { params } => params,
        }
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::Rationals => write!(f, "QQ"),
            CoefficientDomain::FractionField { params } => write!(f, "QQ({})", params.join(",")),
        }
    }
}

/// A polynomial ring: ordered variable names, coefficient field, and the
/// monomial order its polynomials are sorted by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
    domain: CoefficientDomain,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        Self::with_domain(vars, order, CoefficientDomain::Rationals)
    }

    pub fn with_domain<S: AsRef<str>>(
        vars: &[S],
        order: MonomialOrder,
        domain: CoefficientDomain,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(Error::EmptyRing);
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) || domain.params().contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidOrder(format!(
                    "block size {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Self {
            vars,
            order,
            domain,
        }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The same ring sorted by a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Self {
            vars: self.vars.clone(),
            order,
            domain: self.domain.clone(),
        })
    }

    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.order.cmp(a, b)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] order {}",
            self.domain,
            self.vars.join(","),
            self.order
        )
    }
}

pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Polynomial with terms sorted strictly descending in its ring's order and
/// no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: F) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((vec![0; ring.nvars()], c));
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, unit_exponent(ring.nvars(), index), F::one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Arc<PolyRing>, exp: Monomial, c: F) -> Self {
        debug_assert_eq!(exp.len(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((exp, c));
        }
        p
    }

    /// Collects terms, combining repeated monomials and dropping zeros.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent arity");
            match acc.get_mut(&e) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already sorted descending and free of zeros and repeats.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && monomial_degree(&self.terms[0].0) == 0)
    }

    pub fn constant_value(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 if monomial_degree(&self.terms[0].0) == 0 => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| monomial_degree(&t.0)).max()
    }

    /// Lowest total degree among the terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| monomial_degree(&t.0)).min()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0[var]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|t| monomial_degree(&t.0));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .filter(|t| monomial_degree(&t.0) == d)
                .cloned()
                .collect(),
        )
    }

    /// Variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|t| t.0[i] > 0))
            .collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ring.cmp_monomials(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { b.1.neg() } else { b.1.clone() };
                    out.push((b.0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a.1.sub(&b.1)
                    } else {
                        a.1.add(&b.1)
                    };
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let c = if negate_other { b.1.neg() } else { b.1.clone() };
            out.push((b.0.clone(), c));
        }
        Self::from_sorted(ring, out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Ok(self.mul_term(e, c));
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Ok(other.mul_term(e, c));
        }
        let mut acc: HashMap<Monomial, F> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = monomial_mul(e1, e2);
                let c = c1.mul(c2);
                match acc.get_mut(&e) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp_monomials(&b.0, &a.0));
        Ok(Self::from_sorted(&self.ring, terms))
    }

    /// `self * c * x^e`; order-preserving, so no re-sort.
    pub fn mul_term(&self, e: &[u32], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, v)| (monomial_mul(m, e), v.mul(c)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        let zero = vec![0; self.ring.nvars()];
        self.mul_term(&zero, c)
    }

    pub fn neg(&self) -> Self {
        Self::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Re-expresses the polynomial in a ring with the same variables and
    /// coefficients but possibly a different monomial order.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Self> {
        if same_ring(&self.ring, ring) {
            return Ok(self.clone());
        }
        if self.ring.vars != ring.vars || self.ring.domain != ring.domain {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: ring.to_string(),
            });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Ok(Self::from_sorted(ring, terms))
    }

    /// Moves the polynomial into a ring over the same coefficients whose
    /// variables are matched by name. Fails if a used variable is missing.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> Result<Self> {
        if self.ring.vars == ring.vars {
            return self.to_ring(ring);
        }
        if self.ring.domain != ring.domain {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: ring.to_string(),
            });
        }
        let slots: Vec<Option<usize>> = self
            .ring
            .vars
            .iter()
            .map(|v| ring.var_index(v).ok())
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; ring.nvars()];
            for (i, &k) in m.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match slots[i] {
                    Some(j) => e[j] = k,
                    None => return Err(Error::UnknownVariable(self.ring.vars[i].clone())),
                }
            }
            terms.push((e, c.clone()));
        }
        Ok(Self::from_terms(ring, terms))
    }

    /// Rebuilds the polynomial term by term in `ring`, which must have the
    /// same number of variables, converting each coefficient with `f`.
    pub fn map_coeffs<G: Field>(&self, ring: &Arc<PolyRing>, f: impl Fn(&F) -> G) -> Polynomial<G> {
        assert_eq!(ring.nvars(), self.ring.nvars(), "variable count");
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|t| t.0[var] > 0).map(|(m, c)| {
                let k = m[var];
                let mut e = m.clone();
                e[var] -= 1;
                (e, c.mul(&F::from_i64(k as i64)))
            }),
        )
    }

    /// Drops every term whose total degree in `vars` is at least `n`.
    pub fn truncate(&self, vars: &[usize], n: u32) -> Self {
        Self::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .filter(|(m, _)| vars.iter().map(|&i| m[i]).sum::<u32>() < n)
                .cloned()
                .collect(),
        )
    }

    /// Named-variable form of [`Polynomial::truncate`].
    pub fn truncate_named<S: AsRef<str>>(&self, vars: &[S], n: u32) -> Result<Self> {
        let idx = vars
            .iter()
            .map(|v| self.ring.var_index(v.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.truncate(&idx, n))
    }

    /// Exact quotient by `divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let lm = divisor.leading_monomial()?.clone();
        let lc = divisor.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !monomial_divides(&lm, &m) {
                return None;
            }
            let e = monomial_div(&m, &lm);
            let q = c.div(&lc);
            rem = rem.merge(&divisor.mul_term(&e, &q), true);
            quot.push((e, q));
        }
        Some(Self::from_sorted(&self.ring, quot))
    }

    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self> {
        parse::parse_polynomial(ring, text)
    }

    /// Text form readable by [`Polynomial::parse`].
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let params = self.ring.domain.params();
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = render_monomial(&self.ring.vars, m);
            let mut cs = c.render(params);
            let compound = c.is_compound();
            let negative = !compound && cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff_is_one = cs == "1";
            match (mono.is_empty(), compound) {
                (true, true) => out.push_str(&format!("({cs})")),
                (true, false) => out.push_str(&cs),
                (false, true) => out.push_str(&format!("({cs})*{mono}")),
                (false, false) if coeff_is_one => out.push_str(&mono),
                (false, false) => out.push_str(&format!("{cs}*{mono}")),
            }
        }
        out
    }
}

fn unit_exponent(n: usize, i: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

pub fn render_monomial(vars: &[String], m: &[u32]) -> String {
    m.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                vars[i].clone()
            } else {
                format!("{}^{k}", vars[i])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<F: Field> std::ops::$tr<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics if the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $m(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<F: Field> std::ops::$tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                self.$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

/// Shorthand for the common case of rational coefficients.
pub type QPoly = Polynomial<Rational>;

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars, MonomialOrder::Grevlex).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> QPoly {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x+y");
        let g = p(&r, "x-y");
        assert_eq!(&f * &g, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn additive_identity() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "3x^2*y - 1/2*y + 7");
        assert_eq!(&f + &QPoly::zero(&r), f);
    }

    #[test]
    fn fraction_field_coefficients() {
        let r = PolyRing::with_domain(
            &["x", "y"],
            MonomialOrder::Grevlex,
            CoefficientDomain::FractionField {
                params: vec!["a2".into()],
            },
        )
        .unwrap();
        let f: Polynomial<crate::coeff::RatFunc> = Polynomial::parse(&r, "y^2 + a2*x^2").unwrap();
        let x = Polynomial::var(&r, 0);
        let expected = Polynomial::parse(&r, "x*y^2 + a2*x^3").unwrap();
        assert_eq!(&f * &x, expected);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring(&["x", "y"]);
        let r2 = ring(&["x", "z"]);
        let err = p(&r1, "x").checked_add(&p(&r2, "x")).unwrap_err();
        assert!(matches!(err, Error::RingMismatch { .. }));
    }

    #[test]
    fn truncation_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            p(&r, "x^3 + x").truncate_named(&["x"], 2).unwrap(),
            p(&r, "x")
        );
        assert!(p(&r, "x^3 + x + 1").truncate(&[0, 1], 0).is_zero());
        let r = ring(&["X", "Y", "lam", "mu"]);
        let f = &p(&r, "X + mu*Y^2") * &p(&r, "Y + lam*X^2");
        assert_eq!(
            f.truncate_named(&["X", "Y"], 4).unwrap(),
            p(&r, "X*Y + lam*X^3 + mu*Y^3")
        );
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^3*y - x*y^3");
        assert_eq!(f.div_exact(&p(&r, "x*y")), Some(p(&r, "x^2 - y^2")));
        assert_eq!(p(&r, "x + 1").div_exact(&p(&r, "x")), None);
    }

    #[test]
    fn render_parses_back() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "-2/3*x^2*y + x - 5 + y^4");
        assert_eq!(p(&r, &f.render()), f);
    }

    #[test]
    fn reordering_keeps_value() {
        let r = ring(&["x", "y", "z"]);
        let f = p(&r, "x*z^3 + y^2 + x^2*y");
        let lex = r.with_order(MonomialOrder::Lex);
        let g = f.to_ring(&lex).unwrap();
        assert_eq!(g.leading_monomial(), Some(&vec![2, 1, 0]));
        assert_eq!(g.to_ring(&r).unwrap(), f);
    }
}
