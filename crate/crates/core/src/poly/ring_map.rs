use std::collections::HashMap;
use std::sync::Arc;

use super::{same_ring, PolyRing, Polynomial};
use crate::coeff::Field;
use crate::error::{Error, Result};

/// Substitution homomorphism: the `i`-th variable of `source` maps to
/// `images[i]`, a polynomial of the target ring.
#[derive(Clone, Debug)]
pub struct RingMap<F: Field> {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
    images: Vec<Polynomial<F>>,
}

impl<F: Field> RingMap<F> {
    pub fn new(
        source: &Arc<PolyRing>,
        target: &Arc<PolyRing>,
        images: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::ArityMismatch {
                expected: source.nvars(),
                found: images.len(),
            });
        }
        let images = images
            .into_iter()
            .map(|p| {
                if same_ring(p.ring(), target) {
                    Ok(p)
                } else {
                    p.to_ring(target)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        let images = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Self {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    /// Endomorphism sending the named variables to the given images and
    /// fixing all others.
    pub fn substitution<S: AsRef<str>>(
        ring: &Arc<PolyRing>,
        assignments: &[(S, Polynomial<F>)],
    ) -> Result<Self> {
        let mut map = Self::identity(ring);
        for (name, image) in assignments {
            let i = ring.var_index(name.as_ref())?;
            map.images[i] = image.to_ring(ring)?;
        }
        Ok(map)
    }

    pub fn source(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn apply(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.apply_inner(f, None)
    }

    /// Applies the map, discarding terms of total degree `>= n` in `vars`
    /// (target-ring indices) as they arise.
    pub fn apply_truncated(
        &self,
        f: &Polynomial<F>,
        vars: &[usize],
        n: u32,
    ) -> Result<Polynomial<F>> {
        self.apply_inner(f, Some((vars, n)))
    }

    fn apply_inner(
        &self,
        f: &Polynomial<F>,
        trunc: Option<(&[usize], u32)>,
    ) -> Result<Polynomial<F>> {
        if !same_ring(f.ring(), &self.source) {
            if f.ring().vars() == self.source.vars() {
                return self.apply_inner(&f.to_ring(&self.source)?, trunc);
            }
            return Err(Error::ArityMismatch {
                expected: self.source.nvars(),
                found: f.ring().nvars(),
            });
        }
        let cut = |p: Polynomial<F>| match trunc {
            Some((vars, n)) => p.truncate(vars, n),
            None => p,
        };
        let mut powers: HashMap<(usize, u32), Polynomial<F>> = HashMap::new();
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in f.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &k) in m.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !powers.contains_key(&(i, k)) {
                    let mut p = Polynomial::one(&self.target);
                    for _ in 0..k {
                        p = cut(&p * &self.images[i]);
                    }
                    powers.insert((i, k), p);
                }
                t = cut(&t * &powers[&(i, k)]);
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// The map "first `self`, then `then`": variable `v` goes to
    /// `then(self(v))`.
    pub fn then(&self, then: &RingMap<F>) -> Result<RingMap<F>> {
        let images = self
            .images
            .iter()
            .map(|p| then.apply(p))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(&self.source, &then.target, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::poly::{MonomialOrder, QPoly};

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars, MonomialOrder::Grevlex).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> QPoly {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn step_three_change_of_coordinates() {
        let src = ring(&["x", "y", "lam", "mu"]);
        let dst = ring(&["X", "Y", "lam", "mu"]);
        let phi = RingMap::new(
            &src,
            &dst,
            vec![
                p(&dst, "X + mu*Y^2"),
                p(&dst, "Y + lam*X^2"),
                p(&dst, "lam"),
                p(&dst, "mu"),
            ],
        )
        .unwrap();
        let image = phi.apply(&p(&src, "x*y")).unwrap();
        assert_eq!(image, &p(&dst, "X + mu*Y^2") * &p(&dst, "Y + lam*X^2"));
    }

    #[test]
    fn identity_is_identity() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^3 - 2*x*y + 5");
        assert_eq!(RingMap::identity(&r).apply(&f).unwrap(), f);
    }

    #[test]
    fn shear_kills_the_correction_term() {
        // y -> Y + lam*x^(k-1) sends x*y - lam*x^k to x*Y
        let r = ring(&["x", "y", "lam"]);
        for k in 2..6 {
            let phi = RingMap::substitution(&r, &[("y", p(&r, &format!("y + lam*x^{}", k - 1)))])
                .unwrap();
            let f = p(&r, &format!("x*y - lam*x^{k}"));
            assert_eq!(phi.apply(&f).unwrap(), p(&r, "x*y"));
        }
    }

    #[test]
    fn arity_is_checked() {
        let r = ring(&["x", "y"]);
        let err = RingMap::<Rational>::new(&r, &r, vec![p(&r, "x")]).unwrap_err();
        assert!(matches!(
            err,
            Error::ArityMismatch {
                expected: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn composition_order() {
        let r = ring(&["x", "y"]);
        let a = RingMap::substitution(&r, &[("x", p(&r, "x + y"))]).unwrap();
        let b = RingMap::substitution(&r, &[("y", p(&r, "y^2"))]).unwrap();
        let ab = a.then(&b).unwrap();
        let f = p(&r, "x*y");
        assert_eq!(
            ab.apply(&f).unwrap(),
            b.apply(&a.apply(&f).unwrap()).unwrap()
        );
    }
}
