use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::GroebnerBasis;
use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::poly::{monomial_div, monomial_gcd, MonomialOrder, PolyRing, Polynomial, RingMap};

/// An ideal given by generators, with Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial<F>>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self)
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.render()).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl<F: Field> Ideal<F> {
    /// Generators are moved into `ring`; zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(ring, gens))
    }

    fn from_parts(ring: &Arc<PolyRing>, gens: Vec<Polynomial<F>>) -> Self {
        Self {
            ring: ring.clone(),
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| Polynomial::parse(ring, g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::from_parts(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by all monomials of degree `n` in `vars`.
    pub fn power_of_variables(ring: &Arc<PolyRing>, vars: &[usize], n: u32) -> Self {
        let mut monos: Vec<Vec<u32>> = vec![vec![0; ring.nvars()]];
        for _ in 0..n {
            let mut next = Vec::new();
            for m in &monos {
                // nondecreasing variable position avoids duplicates
                let last = vars.iter().rposition(|&v| m[v] > 0).unwrap_or(0);
                for &v in &vars[last..] {
                    let mut e = m.clone();
                    e[v] += 1;
                    next.push(e);
                }
            }
            monos = next;
        }
        let gens = monos
            .into_iter()
            .map(|e| Polynomial::monomial(ring, e, F::one()))
            .collect();
        Self::from_parts(ring, gens)
    }

    /// The ideal generated by the variables `vars`.
    pub fn of_variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Self {
        Self::from_parts(
            ring,
            vars.iter().map(|&v| Polynomial::var(ring, v)).collect(),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.vars() == other.ring.vars() && self.ring.domain() == other.ring.domain() {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn gb(&self) -> Arc<GroebnerBasis<F>> {
        self.gb_in(self.ring.order())
    }

    pub fn gb_in(&self, order: MonomialOrder) -> Arc<GroebnerBasis<F>> {
        if let Some(g) = self.cache.lock().unwrap().get(&order) {
            return g.clone();
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order)
        };
        let gens: Vec<Polynomial<F>> = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring).unwrap())
            .collect();
        let gb = Arc::new(GroebnerBasis::compute_in(&ring, gens));
        self.cache.lock().unwrap().insert(order, gb.clone());
        gb
    }

    /// The same ideal, generated by its reduced Gröbner basis.
    pub fn reduced(&self) -> Self {
        let gb = self.gb();
        let out = Self::from_parts(&self.ring, gb.elements().to_vec());
        out.cache.lock().unwrap().insert(self.ring.order(), gb);
        out
    }

    /// The same ideal in a ring with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let ring = self.ring.with_order(order);
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring).unwrap())
            .collect();
        let out = Self::from_parts(&ring, gens);
        if let Some(g) = self.cache.lock().unwrap().get(&order) {
            out.cache.lock().unwrap().insert(order, g.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.gb().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb().contains(f)
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        let gb = self.gb();
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        let order = self.ring.order();
        let (a, b) = (self.gb_in(order), other.gb_in(order));
        Ok(a.elements() == b.elements())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gb().elements().iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.to_ring(&self.ring)?);
        }
        Ok(Self::from_parts(&self.ring, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.checked_mul(&g.to_ring(&self.ring)?)?);
            }
        }
        Ok(Self::from_parts(&self.ring, gens).reduced())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `self + (vars)^n`.
    pub fn plus_power_of_variables(&self, vars: &[usize], n: u32) -> Self {
        self.sum(&Self::power_of_variables(&self.ring, vars, n))
            .expect("same ring")
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.with_order(self.ring.order()));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let mut name = String::from("t_");
        while self.ring.vars().contains(&name) || self.ring.domain().params().contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.ring.vars().iter().cloned());
        let big =
            PolyRing::with_domain(&vars, MonomialOrder::Block(1), self.ring.domain().clone())?;
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&f.embed(&big)? * &t);
        }
        for g in &other.gens {
            gens.push(&g.embed(&big)? * &one_minus_t);
        }
        let gb = GroebnerBasis::compute_in(&big, gens);
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m[0] == 0))
            .map(|g| g.embed(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, kept).reduced())
    }

    /// `self : (f)`.
    pub fn quotient_by(&self, f: &Polynomial<F>) -> Result<Self> {
        let f = f.to_ring(&self.ring)?;
        if f.is_zero() {
            return Ok(Self::unit(&self.ring));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let gb = self.gb();
        if gb.contains(&f)? {
            return Ok(Self::unit(&self.ring));
        }
        if f.is_monomial() && gb.elements().iter().all(|g| g.is_monomial()) {
            let fm = f.leading_monomial().unwrap();
            let gens = gb
                .elements()
                .iter()
                .map(|g| {
                    let m = g.leading_monomial().unwrap();
                    let e = monomial_div(m, &monomial_gcd(m, fm));
                    Polynomial::monomial(&self.ring, e, F::one())
                })
                .collect();
            return Ok(Self::from_parts(&self.ring, gens).reduced());
        }
        let principal = Self::from_parts(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&principal)?;
        let gens = inter
            .gens
            .iter()
            .map(|g| {
                g.div_exact(&f).ok_or_else(|| {
                    Error::Runtime("intersection element not divisible by the divisor".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, gens).reduced())
    }

    /// `self : other`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring)))
    }

    /// `self : other^∞`.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        let mut cur = self.reduced();
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Elimination ideal `self ∩ K[remaining variables]`, kept in the same ring.
    pub fn eliminate<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let elim = names
            .iter()
            .map(|n| self.ring.var_index(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        if elim.is_empty() {
            return Ok(self.clone());
        }
        let mut vars: Vec<String> = elim.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        for (i, v) in self.ring.vars().iter().enumerate() {
            if !elim.contains(&i) {
                vars.push(v.clone());
            }
        }
        let k = elim.len();
        let perm =
            PolyRing::with_domain(&vars, MonomialOrder::Block(k), self.ring.domain().clone())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(&perm))
            .collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis::compute_in(&perm, gens);
        let kept = gb
            .elements()
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m[..k].iter().all(|&e| e == 0))
            })
            .map(|g| g.embed(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, kept).reduced())
    }

    /// Moves the generators into another ring by variable names.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(ring, gens))
    }

    /// Image ideal under a ring map.
    pub fn map(&self, phi: &RingMap<F>) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| phi.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(phi.target(), gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;

    type QIdeal = Ideal<Rational>;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars, MonomialOrder::Grevlex).unwrap()
    }

    fn id(r: &Arc<PolyRing>, gens: &[&str]) -> QIdeal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = ring(&["x", "y"]);
        let a = id(&r, &["x^2", "y"]);
        let b = id(&r, &["x", "y^2"]);
        assert_eq!(a.intersect(&b).unwrap(), id(&r, &["x^2", "x*y", "y^2"]));
    }

    #[test]
    fn intersection_of_lines() {
        let r = ring(&["x", "y", "z"]);
        let a = id(&r, &["x", "y"]);
        let b = id(&r, &["y", "z"]);
        assert_eq!(a.intersect(&b).unwrap(), id(&r, &["y", "x*z"]));
    }

    #[test]
    fn colon_of_running_example() {
        let r = ring(&["x", "y"]);
        let j = id(&r, &["x^3", "x*y", "y^4"]);
        let m = id(&r, &["x", "y"]);
        assert_eq!(j.quotient(&m).unwrap(), id(&r, &["x^2", "x*y", "y^3"]));
        assert_eq!(j.quotient(&m.pow(2)).unwrap(), id(&r, &["x", "y^2"]));
        assert_eq!(j.quotient(&m.pow(3)).unwrap(), id(&r, &["x", "y"]));
    }

    #[test]
    fn colon_by_non_monomial() {
        let r = ring(&["x", "y"]);
        let j = id(&r, &["x*y", "x^3 + y^3"]);
        let q = j.quotient_by(&Polynomial::parse(&r, "x").unwrap()).unwrap();
        assert_eq!(q, id(&r, &["y", "x^3"]));
    }

    #[test]
    fn saturation_removes_embedded_point() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x^2", "x*y"]);
        let m = id(&r, &["x", "y"]);
        assert_eq!(i.saturate(&m).unwrap(), id(&r, &["x"]));
    }

    #[test]
    fn elimination_of_twisted_cubic() {
        let r = ring(&["t", "x", "y", "z"]);
        let i = id(&r, &["x - t", "y - t^2", "z - t^3"]);
        let e = i.eliminate(&["t"]).unwrap();
        assert_eq!(e, id(&r, &["y - x^2", "z - x^3"]));
    }

    #[test]
    fn powers_and_products() {
        let r = ring(&["x", "y"]);
        let m = id(&r, &["x", "y"]);
        assert_eq!(m.pow(0), QIdeal::unit(&r));
        assert_eq!(m.pow(2), QIdeal::power_of_variables(&r, &[0, 1], 2));
        assert_eq!(QIdeal::power_of_variables(&r, &[0, 1], 3).gens().len(), 4);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = id(&ring(&["x", "y"]), &["x"]);
        let b = id(&ring(&["x", "z"]), &["x"]);
        assert!(matches!(a.sum(&b), Err(Error::RingMismatch { .. })));
    }
}
