//! Certified coordinate changes in truncated local rings.

use std::sync::Arc;

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::artinian_length;
use crate::linalg::rank;
use crate::poly::{PolyRing, QPoly, RingMap};

/// Smallest `k ≤ cap` with `(vars)^k ⊆ ideal`, if any.
pub fn containment_degree<F: Field>(ideal: &Ideal<F>, vars: &[usize], cap: u32) -> Option<u32> {
    let base = artinian_length(ideal).finite().ok()?;
    let holds = |k: u32| {
        artinian_length(&ideal.plus_power_of_variables(vars, k))
            .finite()
            .ok()
            == Some(base)
    };
    let mut hi = 1u32;
    while !holds(hi) {
        if hi >= cap {
            return None;
        }
        hi = (2 * hi).min(cap);
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(if holds(lo) { lo } else { hi })
}

/// Whether the map fixes the origin and is invertible there.
pub fn is_local_automorphism<F: Field>(phi: &RingMap<F>) -> bool {
    let target = phi.target();
    let n = target.nvars();
    if phi.source().nvars() != n {
        return false;
    }
    let mut rows = Vec::with_capacity(n);
    for img in phi.images() {
        if img.terms().iter().any(|(m, _)| m.iter().all(|&e| e == 0)) {
            return false;
        }
        let mut row = vec![F::zero(); n];
        for (m, c) in img.terms() {
            if m.iter().sum::<u32>() == 1 {
                let i = m.iter().position(|&e| e == 1).unwrap();
                row[i] = c.clone();
            }
        }
        rows.push(row);
    }
    rank(rows) == n
}

/// Checks `φ(src) = dst` in the completion at the origin of the target, by
/// comparing both ideals modulo `m^n`. Both must contain some `m^k` with
/// `k ≤ n`, which makes the truncated comparison exact.
pub fn verify_coordinate_change<F: Field>(
    src: &Ideal<F>,
    dst: &Ideal<F>,
    phi: &RingMap<F>,
    n: u32,
) -> Result<bool> {
    if !is_local_automorphism(phi) {
        return Err(Error::Runtime(
            "coordinate change is not invertible at the origin".into(),
        ));
    }
    let target = phi.target();
    let all: Vec<usize> = (0..target.nvars()).collect();
    let src_all: Vec<usize> = (0..phi.source().nvars()).collect();
    const SEARCH: u32 = 128;
    let ks = containment_degree(src, &src_all, SEARCH);
    let kd = containment_degree(dst, &all, SEARCH);
    let required = match (ks, kd) {
        (Some(a), Some(b)) => a.max(b),
        _ => {
            return Err(Error::Runtime(
                "ideals must contain a power of the maximal ideal at the origin".into(),
            ))
        }
    };
    if required > n {
        return Err(Error::TruncationTooSmall { given: n, required });
    }
    let gens = src
        .gens()
        .iter()
        .map(|g| phi.apply_truncated(g, &all, n))
        .collect::<Result<Vec<_>>>()?;
    let image = Ideal::new(target, gens)?.plus_power_of_variables(&all, n);
    let dst = dst
        .with_order(target.order())
        .plus_power_of_variables(&all, n);
    image.equals(&dst)
}

/// Ring `Q[X, Y, rest…]` mirroring the source ring with the first two
/// variables renamed.
fn capital_ring(ring: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
    let mut names: Vec<String> = ring.vars().to_vec();
    names[0] = names[0].to_uppercase();
    names[1] = names[1].to_uppercase();
    PolyRing::with_domain(&names, ring.order(), ring.domain().clone())
}

/// `x ↦ X + μY², y ↦ Y + λX²`, other variables fixed.
pub fn step3_change(
    ring: &Arc<PolyRing>,
    lambda: &Rational,
    mu: &Rational,
) -> Result<RingMap<Rational>> {
    let target = capital_ring(ring)?;
    let x = QPoly::var(&target, 0);
    let y = QPoly::var(&target, 1);
    let mut images: Vec<QPoly> = (0..ring.nvars()).map(|i| QPoly::var(&target, i)).collect();
    images[0] = &x + &(&y * &y).scale(mu);
    images[1] = &y + &(&x * &x).scale(lambda);
    RingMap::new(ring, &target, images)
}

/// Composite of `y ↦ Y + λx^(k-1)` and `x ↦ X + μY^(k-1)`:
/// `x ↦ X + μY^(k-1)`, `y ↦ Y + λ(X + μY^(k-1))^(k-1)`.
pub fn stepk_change(
    ring: &Arc<PolyRing>,
    k: u32,
    lambda: &Rational,
    mu: &Rational,
) -> Result<RingMap<Rational>> {
    let target = capital_ring(ring)?;
    let x = QPoly::var(&target, 0);
    let y = QPoly::var(&target, 1);
    let new_x = &x + &y.pow(k - 1).scale(mu);
    let new_y = &y + &new_x.pow(k - 1).scale(lambda);
    let mut images: Vec<QPoly> = (0..ring.nvars()).map(|i| QPoly::var(&target, i)).collect();
    images[0] = new_x;
    images[1] = new_y;
    RingMap::new(ring, &target, images)
}

/// The shapes before and after the step-`k` change on the first two
/// variables: `(x^(k+1), xy - λx^k - μy^k, y^(k+1), x²y, xy²)` and
/// `(X^(k+1), XY, Y^(k+1))`, each plus the remaining variables.
pub fn stepk_ideals(
    ring: &Arc<PolyRing>,
    k: u32,
    lambda: &Rational,
    mu: &Rational,
) -> Result<(Ideal<Rational>, Ideal<Rational>)> {
    let target = capital_ring(ring)?;
    let x = QPoly::var(ring, 0);
    let y = QPoly::var(ring, 1);
    let mut src = vec![
        x.pow(k + 1),
        &(&x * &y) - &(&x.pow(k).scale(lambda) + &y.pow(k).scale(mu)),
        y.pow(k + 1),
        &x.pow(2) * &y,
        &x * &y.pow(2),
    ];
    let xx = QPoly::var(&target, 0);
    let yy = QPoly::var(&target, 1);
    let mut dst = vec![xx.pow(k + 1), &xx * &yy, yy.pow(k + 1)];
    for i in 2..ring.nvars() {
        src.push(QPoly::var(ring, i));
        dst.push(QPoly::var(&target, i));
    }
    Ok((Ideal::new(ring, src)?, Ideal::new(&target, dst)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn step_three_example() {
        let r = PolyRing::new(&["x", "y"], MonomialOrder::Grevlex).unwrap();
        let src = Ideal::parse(&r, &["x^4", "y^4", "x*y - x^3 - y^3"]).unwrap();
        let phi = step3_change(&r, &q(1), &q(1)).unwrap();
        let dst = Ideal::parse(phi.target(), &["X^4", "Y^4", "X*Y"]).unwrap();
        assert!(verify_coordinate_change(&src, &dst, &phi, 10).unwrap());
    }

    #[test]
    fn step_k_example() {
        let r = PolyRing::new(&["x", "y"], MonomialOrder::Grevlex).unwrap();
        let (src, dst) = stepk_ideals(&r, 4, &q(2), &q(3)).unwrap();
        let phi = stepk_change(&r, 4, &q(2), &q(3)).unwrap();
        assert!(verify_coordinate_change(&src, &dst, &phi, 14).unwrap());
    }

    #[test]
    fn identity_and_failure() {
        let r = PolyRing::new(&["x", "y"], MonomialOrder::Grevlex).unwrap();
        let a: Ideal<Rational> = Ideal::parse(&r, &["x^2", "y^3"]).unwrap();
        let id = RingMap::identity(&r);
        assert!(verify_coordinate_change(&a, &a, &id, 6).unwrap());
        let b = Ideal::parse(&r, &["x^3", "y^2"]).unwrap();
        assert!(!verify_coordinate_change(&a, &b, &id, 6).unwrap());
        assert!(matches!(
            verify_coordinate_change(&a, &a, &id, 2),
            Err(Error::TruncationTooSmall {
                given: 2,
                required: 4
            })
        ));
    }

    #[test]
    fn containment_degrees() {
        let r = PolyRing::new(&["x", "y"], MonomialOrder::Grevlex).unwrap();
        let a: Ideal<Rational> = Ideal::parse(&r, &["x^2", "y^3"]).unwrap();
        assert_eq!(containment_degree(&a, &[0, 1], 20), Some(4));
        let b: Ideal<Rational> = Ideal::parse(&r, &["x^2"]).unwrap();
        assert_eq!(containment_degree(&b, &[0, 1], 20), None);
    }
}
