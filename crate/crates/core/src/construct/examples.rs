//! Worked structures on linear supports: double and triple lines in P³ from
//! the construction, a double line in P⁴ and a double plane in P⁶ whose
//! defining data vanish along divisors of the support.

use std::sync::Arc;

use serde_json::{json, Value};

use super::chain::{run_construction, ConstructionPlan};
use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::forms::{is_unit_in_field, nowhere_vanishing, BinaryForm, VanishingContext};
use crate::groebner::Ideal;
use crate::invariants::{hilbert, local_min_gens};
use crate::multistruct::{MultipleStructure, SupportKind};
use crate::poly::{MonomialOrder, PolyRing, QPoly, RingMap};
use crate::report::{Check, Report};

/// A structure together with everything verified about it.
pub struct CertifiedExample {
    pub label: String,
    pub structure: MultipleStructure,
    pub value: Value,
    pub checks: Vec<Check>,
}

impl CertifiedExample {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn ring(vars: &[&str]) -> Result<Arc<PolyRing>> {
    PolyRing::new(vars, MonomialOrder::Grevlex)
}

fn expected_ranks(n: u32) -> Vec<usize> {
    let mut r = vec![1];
    r.extend(std::iter::repeat(2).take(n as usize - 1));
    r.push(1);
    r
}

fn structure_checks(s: &MultipleStructure, gorenstein: bool) -> Result<Vec<Check>> {
    let mut out: Vec<Check> = s.check_properties()?.into_iter().filter(|c| c.required).collect();
    if gorenstein {
        out.extend(s.check_gorenstein()?);
    }
    Ok(out)
}

/// The construction's final ideal on the line `x = y = 0` of P³, with the
/// line coordinates `z, w`.
fn line_in_p3(label: &str, plan: &ConstructionPlan, swap: bool, polynomial: &str) -> Result<CertifiedExample> {
    let res = run_construction(plan)?;
    let p3 = ring(&["x", "y", "z", "w"])?;
    let (x, y) = (QPoly::var(&p3, 0), QPoly::var(&p3, 1));
    let images = if swap { vec![y.clone(), x.clone()] } else { vec![x.clone(), y.clone()] };
    let embed = RingMap::new(&res.ring, &p3, images)?;
    let j = res.final_ideal().map(&embed)?;
    let i = Ideal::new(&p3, vec![x, y])?;
    let s = MultipleStructure::new(
        i,
        j.clone(),
        SupportKind::Linear {
            support: vec!["x".into(), "y".into()],
            params: vec!["z".into(), "w".into()],
            chart: Some("w".into()),
        },
    )?;
    let n = plan.n;
    let h = hilbert(&j)?;
    let ty = s.structure_type()?;
    let mut checks = vec![Check::required(
        "construction",
        res.passed(),
        format!("{} certified steps", res.steps.len()),
    )];
    checks.push(Check::required(
        "multiplicity",
        ty.multiplicity == 2 * n as usize,
        format!("{} at the generic point of the line", ty.multiplicity),
    ));
    checks.push(Check::required(
        "hilbert",
        h.degree == 2 * n as i64 && h.render_polynomial() == polynomial,
        format!("degree {}, polynomial {}", h.degree, h.render_polynomial()),
    ));
    checks.push(Check::required(
        "type",
        ty.m_ranks == expected_ranks(n),
        format!("M ranks {:?}", ty.m_ranks),
    ));
    checks.extend(structure_checks(&s, true)?);
    let value = json!({
        "plan": plan.summary(),
        "ideal": j.reduced().render(),
        "hilbert_polynomial": h.render_polynomial(),
        "degree": h.degree,
        "structure": s.summary()?,
    });
    Ok(CertifiedExample {
        label: label.into(),
        structure: s,
        value,
        checks,
    })
}

/// Double and triple lines in P³: `(x², y²)`, `(x², y³)` and `(xy, x³ + y³)`.
pub fn lines_in_p3() -> Result<Vec<CertifiedExample>> {
    Ok(vec![
        line_in_p3("line-p3/n2", &ConstructionPlan::type_a(2, vec![]), false, "4t")?,
        line_in_p3(
            "line-p3/n3-square",
            &ConstructionPlan::type_a(3, vec![q(0)]),
            true,
            "6t - 3",
        )?,
        line_in_p3(
            "line-p3/n3-split",
            &ConstructionPlan::type_b(3),
            false,
            "6t - 3",
        )?,
    ])
}

/// `c` with `nf(p) = c · nf(g)` modulo `j`, for `p` whose class is a
/// rational multiple of the class of `g`.
fn proportion(j: &Ideal<Rational>, p: &QPoly, g: &QPoly) -> Result<Rational> {
    let (np, ng) = (j.normal_form(p)?, j.normal_form(g)?);
    if np.is_zero() {
        return Ok(q(0));
    }
    let c = np.leading_coeff().unwrap().div(ng.leading_coeff().unwrap());
    if np != ng.scale(&c) {
        return Err(Error::Runtime(format!(
            "{} is not a multiple of {} modulo the ideal",
            p.render(),
            g.render()
        )));
    }
    Ok(c)
}

/// Double line `x = y = z = 0` in P⁴ with `a = u^(r+1)`, `b = v^(r+1)`:
/// `I₂ = (ax + by) + I²` and `J = (ax + by, x², xy, y², z²)`.
pub fn line_in_p4(r: u32) -> Result<CertifiedExample> {
    let p4 = ring(&["x", "y", "z", "u", "v"])?;
    let v = |i: usize| QPoly::var(&p4, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let a = v(3).pow(r + 1);
    let b = v(4).pow(r + 1);
    let lin = &(&a * &x) + &(&b * &y);
    let i = Ideal::new(&p4, vec![x.clone(), y.clone(), z.clone()])?;
    let i2 = i.pow(2).sum(&Ideal::new(&p4, vec![lin.clone()])?)?;
    let j = Ideal::new(
        &p4,
        vec![lin.clone(), &x * &x, &x * &y, &y * &y, &z * &z],
    )?;
    let s = MultipleStructure::infer(i.clone(), j.clone(), Some("v"))?;
    let mut checks = Vec::new();

    let chain = i2.contains_ideal(&i.pow(2))?
        && i.contains_ideal(&i2)?
        && i2.contains_ideal(&j)?
        && j.contains_ideal(&i.product(&i2)?)?;
    let lengths = [
        s.localize(&i)?.length().finite()?,
        s.localize(&i2)?.length().finite()?,
        s.localize(&j)?.length().finite()?,
    ];
    checks.push(Check::required(
        "chain",
        chain && lengths == [1, 3, 4],
        format!("I² ⊆ I₂ ⊆ I, I·I₂ ⊆ J ⊆ I₂; generic lengths {lengths:?}"),
    ));
    let mult = s.multiplicity()?;
    checks.push(Check::required("multiplicity", mult == 4, format!("{mult}")));
    let all: Vec<usize> = (0..5).collect();
    let saturated = j.saturate(&Ideal::of_variables(&p4, &all))?.equals(&j)?;
    checks.push(Check::required(
        "saturated",
        saturated,
        "J equals its saturation by the irrelevant ideal",
    ));
    let generic = s.localize(&j)?.min_gens()?;
    checks.push(Check::required(
        "lci.generic",
        generic == 3,
        format!("{generic} local generators"),
    ));
    // u = 0 on the chart v = 1 and v = 0 on the chart u = 1, with the
    // vanishing coordinate kept as a local parameter
    let at_a = local_min_gens(&j, &[("v", q(1))], &["x", "y", "z", "u"], None)?;
    checks.push(Check::required(
        "lci.zero_of_a",
        at_a == 3,
        format!("{at_a} local generators at u = 0"),
    ));
    let at_b = local_min_gens(&j, &[("u", q(1))], &["x", "y", "z", "v"], None)?;
    checks.push(Check::required(
        "lci.zero_of_b",
        at_b == 3,
        format!("{at_b} local generators at v = 0"),
    ));

    // at the generic point I/I₂ is spanned by the classes of x and z
    let base = ring(&["u", "v"])?;
    let xz = &x * &z;
    let values = [&x * &x, xz.clone(), &z * &z]
        .iter()
        .map(|p| Ok(QPoly::constant(&base, proportion(&j, p, &xz)?)))
        .collect::<Result<Vec<_>>>()?;
    let form = BinaryForm::from_monomial_values(&base, values)?;
    let h = form.hessian();
    checks.push(Check::required(
        "hessian",
        h == QPoly::constant(h.ring(), q(-1)) && is_unit_in_field(&h),
        format!("Hessian of the quadratic map {}", h.render()),
    ));
    let ab = [a.embed(&base)?, b.embed(&base)?];
    let ctx = VanishingContext::ParameterForms {
        params: vec!["u".into(), "v".into()],
    };
    checks.push(Check::required(
        "nowhere_vanishing",
        nowhere_vanishing(&ab, &ctx)?,
        format!("{} and {} have no common zero", ab[0].render(), ab[1].render()),
    ));
    let ty = s.structure_type()?;
    checks.push(Check::required(
        "type",
        ty.m == 2 && ty.m_ranks == vec![1, 2, 1],
        format!("m = {}, M ranks {:?}", ty.m, ty.m_ranks),
    ));
    checks.extend(structure_checks(&s, true)?);
    let value = json!({
        "r": r,
        "I2": i2.reduced().render(),
        "J": j.reduced().render(),
        "generic_lengths": lengths,
        "structure": s.summary()?,
    });
    Ok(CertifiedExample {
        label: format!("line-p4/r{r}"),
        structure: s,
        value,
        checks,
    })
}

/// Double plane `x = y = z = t = 0` in P⁶ cut by the minors of
/// `(x y z; a b c)`, `(x, y, z)²` and `t²`, with `a, b, c = u, v, w` to the
/// power `r + 1`.
pub fn plane_in_p6(r: u32) -> Result<CertifiedExample> {
    let p6 = ring(&["x", "y", "z", "t", "u", "v", "w"])?;
    let var = |i: usize| QPoly::var(&p6, i);
    let (x, y, z, t) = (var(0), var(1), var(2), var(3));
    let (a, b, c) = (var(4).pow(r + 1), var(5).pow(r + 1), var(6).pow(r + 1));
    let mut gens = vec![
        &(&b * &x) - &(&a * &y),
        &(&c * &y) - &(&b * &z),
        &(&a * &z) - &(&c * &x),
        &t * &t,
    ];
    let xyz = Ideal::new(&p6, vec![x.clone(), y.clone(), z.clone()])?;
    gens.extend(xyz.pow(2).gens().iter().cloned());
    let j = Ideal::new(&p6, gens)?;
    let i = Ideal::new(&p6, vec![x, y, z, t])?;
    let s = MultipleStructure::infer(i, j.clone(), Some("w"))?;
    let mut checks = Vec::new();
    let ty = s.structure_type()?;
    checks.push(Check::required(
        "multiplicity",
        ty.multiplicity == 4,
        format!("{}", ty.multiplicity),
    ));
    checks.push(Check::required(
        "type",
        ty.m == 2 && ty.m_ranks == vec![1, 2, 1],
        format!("m = {}, M ranks {:?}", ty.m, ty.m_ranks),
    ));
    let generic = s.localize(&j)?.min_gens()?;
    checks.push(Check::required(
        "lci.generic",
        generic == 4,
        format!("{generic} local generators"),
    ));
    let (u, v) = (var(4), var(5));
    let mut at_points = Vec::new();
    for (u0, v0) in [(0, 0), (0, 1), (1, 0)] {
        let shift = RingMap::substitution(
            &p6,
            &[
                ("u", &u + &QPoly::constant(&p6, q(u0))),
                ("v", &v + &QPoly::constant(&p6, q(v0))),
                ("w", QPoly::constant(&p6, q(1))),
            ],
        )?;
        let moved = j.map(&shift)?;
        let none: [(&str, Rational); 0] = [];
        let k = local_min_gens(&moved, &none, &["x", "y", "z", "t", "u", "v"], None)?;
        at_points.push(k);
        checks.push(Check::required(
            format!("lci.({u0},{v0})"),
            k == 4,
            format!("{k} local generators at (u, v, w) = ({u0}, {v0}, 1)"),
        ));
    }
    let base = ring(&["u", "v", "w"])?;
    let abc = [a.embed(&base)?, b.embed(&base)?, c.embed(&base)?];
    let ctx = VanishingContext::ParameterForms {
        params: vec!["u".into(), "v".into(), "w".into()],
    };
    checks.push(Check::required(
        "nowhere_vanishing",
        nowhere_vanishing(&abc, &ctx)?,
        "a, b, c have no common zero",
    ));
    checks.extend(structure_checks(&s, true)?);
    let value = json!({
        "r": r,
        "J": j.reduced().render(),
        "local_generators": at_points,
        "structure": s.summary()?,
    });
    Ok(CertifiedExample {
        label: format!("plane-p6/r{r}"),
        structure: s,
        value,
        checks,
    })
}

/// Every worked structure: the three lines in P³, the line in P⁴ for
/// `r = 0, 1` and the plane in P⁶ for `r = 0`.
pub fn all_examples() -> Result<Vec<CertifiedExample>> {
    let mut out = lines_in_p3()?;
    out.push(line_in_p4(0)?);
    out.push(line_in_p4(1)?);
    out.push(plane_in_p6(0)?);
    Ok(out)
}

pub fn examples_report(examples: &[CertifiedExample]) -> Report {
    let mut report = Report::new();
    for e in examples {
        report.push(e.label.clone(), None, e.value.clone(), e.checks.clone());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_passes(e: &CertifiedExample) {
        for c in &e.checks {
            assert!(c.ok(), "{}: {}: {}", e.label, c.name, c.detail);
        }
    }

    #[test]
    fn lines_in_p3_pass() {
        for e in lines_in_p3().unwrap() {
            assert_passes(&e);
        }
    }

    #[test]
    fn line_in_p4_passes() {
        assert_passes(&line_in_p4(0).unwrap());
        assert_passes(&line_in_p4(1).unwrap());
    }

    #[test]
    fn plane_in_p6_passes() {
        let e = plane_in_p6(0).unwrap();
        assert_passes(&e);
        assert_eq!(e.value["local_generators"], json!([4, 4, 4]));
    }
}
