//! Binary forms with polynomial coefficients: discriminant of quadratic
//! forms, Hessian, and checks that coefficient data never vanishes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{binomial, Field, Rational};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::poly::{MonomialOrder, PolyRing, Polynomial, QPoly, RingMap};

/// Twist bookkeeping carried alongside a form. Purely descriptive: every
/// computation here is local, where the twisting bundles are trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Twist {
    /// Power of the line bundle factor.
    pub line: i32,
    /// Power of the determinant of the rank-two bundle.
    pub det: i32,
    /// Whether the form lives in the dual (`Hom`) variant.
    pub dual: bool,
}

/// `Σ C(n,i) a_i e1^(n-i) e2^i` with coefficients `a_i` in `base`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    base: Arc<PolyRing>,
    coeffs: Vec<QPoly>,
    pub twist: Twist,
}

impl BinaryForm {
    /// Binomially normalized coefficients `a_0..a_n`.
    pub fn new(base: &Arc<PolyRing>, coeffs: Vec<QPoly>) -> Result<Self> {
        if coeffs.len() < 3 {
            return Err(Error::Unsupported(
                "binary forms need degree at least 2".into(),
            ));
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.to_ring(base))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            base: base.clone(),
            coeffs,
            twist: Twist::default(),
        })
    }

    /// From the plain coefficients `v_i` of `e1^(n-i) e2^i`.
    pub fn from_monomial_values(base: &Arc<PolyRing>, values: Vec<QPoly>) -> Result<Self> {
        let n = values.len().saturating_sub(1) as u32;
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.scale(&binomial(n, i as u32).inv()))
            .collect();
        Self::new(base, coeffs)
    }

    pub fn parse<S: AsRef<str>>(base: &Arc<PolyRing>, coeffs: &[S]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|c| Polynomial::parse(base, c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, coeffs)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// The base ring with the two form variables appended.
    pub fn form_ring(&self) -> Arc<PolyRing> {
        let mut names: Vec<String> = self.base.vars().to_vec();
        for stem in ["e1", "e2"] {
            let mut name = stem.to_string();
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        PolyRing::with_domain(&names, MonomialOrder::Grevlex, self.base.domain().clone())
            .expect("fresh names")
    }

    /// The form as a polynomial in the ring of [`BinaryForm::form_ring`].
    pub fn expanded(&self) -> (Arc<PolyRing>, QPoly) {
        let ring = self.form_ring();
        let k = ring.nvars();
        let n = self.degree();
        let mut f = QPoly::zero(&ring);
        for (i, a) in self.coeffs.iter().enumerate() {
            let a = a.embed(&ring).expect("base variables are present");
            let mut e = vec![0; k];
            e[k - 2] = n - i as u32;
            e[k - 1] = i as u32;
            let mono = QPoly::monomial(&ring, e, binomial(n, i as u32));
            f = &f + &(&a * &mono);
        }
        (ring, f)
    }

    /// `b² - ac` for `a e1² + 2b e1e2 + c e2²`.
    pub fn discriminant(&self) -> Result<QPoly> {
        if self.degree() != 2 {
            return Err(Error::Unsupported(format!(
                "discriminant of a form of degree {}",
                self.degree()
            )));
        }
        let (a, b, c) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        Ok(&(b * b) - &(a * c))
    }

    /// `F11 F22 - F12²`, in the ring of [`BinaryForm::form_ring`].
    pub fn hessian(&self) -> QPoly {
        let (ring, f) = self.expanded();
        let (i1, i2) = (ring.nvars() - 2, ring.nvars() - 1);
        let f1 = f.derivative(i1);
        let f2 = f.derivative(i2);
        let f11 = f1.derivative(i1);
        let f22 = f2.derivative(i2);
        let f12 = f1.derivative(i2);
        &(&f11 * &f22) - &(&f12 * &f12)
    }
}

/// `g` is a nonzero constant, hence a unit everywhere.
pub fn is_unit_in_field(g: &QPoly) -> bool {
    g.is_constant() && !g.is_zero()
}

/// Resultant of two binary forms in the variables `u`, `v` of their ring,
/// whose other variables must not occur.
pub fn resultant(f: &QPoly, g: &QPoly, u: usize, v: usize) -> Result<Rational> {
    let coeffs = |p: &QPoly| -> Result<Vec<Rational>> {
        if !p.is_homogeneous() || p.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        let d = p.total_degree().unwrap() as usize;
        let mut out = vec![Rational::zero(); d + 1];
        for (m, c) in p.terms() {
            if m.iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && i != u && i != v)
            {
                return Err(Error::Unsupported(
                    "resultant of forms with extra variables".into(),
                ));
            }
            out[m[v] as usize] = c.clone();
        }
        Ok(out)
    };
    let (a, b) = (coeffs(f)?, coeffs(g)?);
    let (p, q) = (a.len() - 1, b.len() - 1);
    let size = p + q;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut rows = Vec::with_capacity(size);
    for shift in 0..q {
        let mut row = vec![Rational::zero(); size];
        row[shift..shift + p + 1].clone_from_slice(&a);
        rows.push(row);
    }
    for shift in 0..p {
        let mut row = vec![Rational::zero(); size];
        row[shift..shift + q + 1].clone_from_slice(&b);
        rows.push(row);
    }
    Ok(determinant(rows))
}

/// How a coefficient family is required to be nowhere zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingContext {
    /// A single element that must be a unit of the field.
    UnitInField,
    /// Forms in the named homogeneous parameters that must have no common
    /// projective zero.
    ParameterForms { params: Vec<String> },
}

/// Decides whether the data never vanishes. Families of three or more forms
/// are decided only when they are powers of distinct parameters.
pub fn nowhere_vanishing(values: &[QPoly], context: &VanishingContext) -> Result<bool> {
    match context {
        VanishingContext::UnitInField => Ok(values.iter().all(is_unit_in_field)),
        VanishingContext::ParameterForms { params } => {
            let ring = values
                .first()
                .map(|f| f.ring().clone())
                .ok_or_else(|| Error::Unsupported("empty family".into()))?;
            let idx = params
                .iter()
                .map(|p| ring.var_index(p))
                .collect::<Result<Vec<_>>>()?;
            if values.iter().any(is_unit_in_field) {
                return Ok(true);
            }
            match (values.len(), idx.len()) {
                (2, 2) => Ok(!resultant(&values[0], &values[1], idx[0], idx[1])?.is_zero()),
                (k, d) if k == d => {
                    let mut seen = Vec::new();
                    for f in values {
                        let support = f.support();
                        if !f.is_monomial() || support.len() != 1 || !idx.contains(&support[0]) {
                            return Err(Error::Unsupported(
                                "common zeros of this family are not checked".into(),
                            ));
                        }
                        seen.push(support[0]);
                    }
                    seen.sort_unstable();
                    seen.dedup();
                    Ok(seen.len() == d)
                }
                _ => Err(Error::Unsupported(
                    "common zeros of this family are not checked".into(),
                )),
            }
        }
    }
}

/// `h` with `α ↦ 0`: reduction modulo a parameter of the base ring.
pub fn reduce_mod_parameter(h: &QPoly, name: &str) -> Result<QPoly> {
    let phi = RingMap::substitution(h.ring(), &[(name, QPoly::zero(h.ring()))])?;
    phi.apply(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn discriminants() {
        let r = base(&["a2"]);
        let q = BinaryForm::parse(&r, &["1", "0", "1"]).unwrap();
        assert_eq!(q.discriminant().unwrap(), QPoly::parse(&r, "-1").unwrap());
        let q = BinaryForm::parse(&r, &["0", "1/2", "0"]).unwrap();
        assert_eq!(q.discriminant().unwrap(), QPoly::parse(&r, "1/4").unwrap());
        let q = BinaryForm::parse(&r, &["1", "0", "a2"]).unwrap();
        assert_eq!(q.discriminant().unwrap(), QPoly::parse(&r, "-a2").unwrap());
    }

    #[test]
    fn quadratic_hessian_is_minus_four_discriminant() {
        let r = base(&["a", "b", "c"]);
        let q = BinaryForm::parse(&r, &["a", "b", "c"]).unwrap();
        let h = q.hessian();
        let d = q.discriminant().unwrap().embed(h.ring()).unwrap();
        assert_eq!(h, d.scale(&Rational::from_i64(-4)));
    }

    #[test]
    fn resultants() {
        let r = base(&["u", "v"]);
        let p = |s: &str| QPoly::parse(&r, s).unwrap();
        assert!(!resultant(&p("u^2"), &p("v^2"), 0, 1).unwrap().is_zero());
        assert!(resultant(&p("u*v"), &p("u^2"), 0, 1).unwrap().is_zero());
        let ctx = VanishingContext::ParameterForms {
            params: vec!["u".into(), "v".into()],
        };
        assert!(nowhere_vanishing(&[p("u"), p("v")], &ctx).unwrap());
        assert!(!nowhere_vanishing(&[p("u*v"), p("u^2")], &ctx).unwrap());
    }

    #[test]
    fn three_parameter_forms() {
        let r = base(&["u", "v", "w"]);
        let p = |s: &str| QPoly::parse(&r, s).unwrap();
        let ctx = VanishingContext::ParameterForms {
            params: vec!["u".into(), "v".into(), "w".into()],
        };
        assert!(nowhere_vanishing(&[p("u^2"), p("v^2"), p("w^2")], &ctx).unwrap());
        assert!(nowhere_vanishing(&[p("u + v"), p("v"), p("w")], &ctx).is_err());
    }
}
