//! The chain `I = I_1 ⊇ I_2 ⊇ … ⊇ I_(n+1) = J` built one kernel at a time
//! in the local model `Q[x, y, rest]` at the origin, where `I = (x, y, rest)`.
//!
//! Each step records the kernel of an explicit projection and checks it
//! against the closed form of the next ideal.

use std::sync::Arc;

use serde_json::{json, Value};

use super::coords::{step3_change, stepk_change, stepk_ideals, verify_coordinate_change};
use super::recognize::{recognize_normal_form, NormalForm};
use crate::coeff::{rational_nth_root, Field, Rational};
use crate::error::{Error, Result};
use crate::forms::{reduce_mod_parameter, BinaryForm};
use crate::groebner::Ideal;
use crate::invariants::{artinian_length, local_data};
use crate::linalg::nullspace;
use crate::multistruct::{MultipleStructure, StructureType, SupportKind};
use crate::poly::{MonomialOrder, PolyRing, QPoly, RingMap};
use crate::report::{Check, Report};

const REST: [&str; 5] = ["z", "u", "v", "w", "t"];

#[derive(Clone, Debug, PartialEq)]
pub enum Branch {
    /// Tangent quadric `y² + α₂x²`, with `alphas = [α₂, …, α_(n-1)]`.
    A { alphas: Vec<Rational> },
    /// Tangent quadric `xy`.
    B,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionPlan {
    pub n: u32,
    pub codim: u32,
    pub branch: Branch,
    /// Values of the last projection on `x^n` and on `x^(n-1)y` (branch A)
    /// or `y^n` (branch B).
    pub r: Rational,
    pub s: Rational,
    /// Branch B, steps `3 ≤ k < n`: the projection sends `xy` to
    /// `λx^k + μy^k`.
    pub lambda: Rational,
    pub mu: Rational,
}

impl ConstructionPlan {
    pub fn type_a(n: u32, alphas: Vec<Rational>) -> Self {
        Self {
            n,
            codim: 2,
            branch: Branch::A { alphas },
            r: Rational::zero(),
            s: Rational::one(),
            lambda: Rational::zero(),
            mu: Rational::zero(),
        }
    }

    pub fn type_b(n: u32) -> Self {
        Self {
            n,
            codim: 2,
            branch: Branch::B,
            r: Rational::one(),
            s: Rational::one(),
            lambda: Rational::zero(),
            mu: Rational::zero(),
        }
    }

    pub fn with_codim(mut self, codim: u32) -> Self {
        self.codim = codim;
        self
    }

    pub fn with_values(mut self, r: Rational, s: Rational) -> Self {
        self.r = r;
        self.s = s;
        self
    }

    pub fn with_shear(mut self, lambda: Rational, mu: Rational) -> Self {
        self.lambda = lambda;
        self.mu = mu;
        self
    }

    pub fn is_a(&self) -> bool {
        matches!(self.branch, Branch::A { .. })
    }

    /// `α_i`, zero where not given.
    pub fn alpha(&self, i: u32) -> Rational {
        match &self.branch {
            Branch::A { alphas } if i >= 2 => alphas.get(i as usize - 2).cloned().unwrap_or_else(Rational::zero),
            _ => Rational::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidPlan(format!("n must be at least 2, got {}", self.n)));
        }
        if self.codim < 2 {
            return Err(Error::InvalidPlan(format!("codimension must be at least 2, got {}", self.codim)));
        }
        match &self.branch {
            Branch::A { alphas } => {
                if alphas.len() > self.n as usize - 2 {
                    return Err(Error::InvalidPlan(format!(
                        "branch A with n = {} takes at most {} alphas, got {}",
                        self.n,
                        self.n - 2,
                        alphas.len()
                    )));
                }
                if self.s.is_zero() {
                    return Err(Error::InvalidPlan(
                        "branch A needs s != 0: otherwise the Hessian vanishes along alpha2 = 0".into(),
                    ));
                }
            }
            Branch::B => {
                if self.r.is_zero() || self.s.is_zero() {
                    return Err(Error::InvalidPlan("branch B needs r*s != 0 for a nowhere vanishing Hessian".into()));
                }
            }
        }
        Ok(())
    }

    pub fn variables(&self) -> Vec<String> {
        let mut names = vec!["x".to_string(), "y".to_string()];
        for i in 0..self.codim.saturating_sub(2) as usize {
            names.push(match REST.get(i) {
                Some(n) => n.to_string(),
                None => format!("z{i}"),
            });
        }
        names
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>> {
        PolyRing::new(&self.variables(), MonomialOrder::Grevlex)
    }

    /// `y² + α₂x² + … + α_(k-1)x^(k-1)`.
    fn quadric(&self, ring: &Arc<PolyRing>, k: u32) -> QPoly {
        let (x, y) = (QPoly::var(ring, 0), QPoly::var(ring, 1));
        let mut q = &y * &y;
        for i in 2..k {
            q = &q + &x.pow(i).scale(&self.alpha(i));
        }
        q
    }

    fn rest(&self, ring: &Arc<PolyRing>) -> Vec<QPoly> {
        (2..ring.nvars()).map(|i| QPoly::var(ring, i)).collect()
    }

    /// Closed form of `I_k` for `1 ≤ k ≤ n + 1`.
    pub fn closed_form(&self, ring: &Arc<PolyRing>, k: u32) -> Result<Ideal<Rational>> {
        let (x, y) = (QPoly::var(ring, 0), QPoly::var(ring, 1));
        let n = self.n;
        let mut gens = if k == 1 {
            vec![x.clone(), y.clone()]
        } else if k <= n {
            match self.branch {
                Branch::A { .. } => vec![x.pow(k), &x.pow(k - 1) * &y, self.quadric(ring, k)],
                Branch::B => vec![x.pow(k), &x * &y, y.pow(k)],
            }
        } else {
            match self.branch {
                Branch::A { .. } => vec![x.pow(n), self.quadric(ring, n)],
                Branch::B => vec![&x.pow(n) + &y.pow(n), &x * &y],
            }
        };
        gens.extend(self.rest(ring));
        Ideal::new(ring, gens)
    }

    /// The normal form the chain ends in.
    pub fn final_form(&self) -> NormalForm {
        match &self.branch {
            Branch::A { .. } => NormalForm::TypeA {
                n: self.n,
                alphas: (2..self.n).map(|i| self.alpha(i)).collect(),
            },
            Branch::B => NormalForm::TypeB { n: self.n },
        }
    }

    /// The form the recognizer reports for the last ideal. A split tangent
    /// quadric `y² - c²x²` lands in the second family.
    pub fn expected_form(&self) -> NormalForm {
        if self.is_a() && self.n >= 3 {
            let a2 = -self.alpha(2);
            if !a2.is_zero() && rational_nth_root(&a2, 2).is_some() {
                return NormalForm::TypeB { n: self.n };
            }
        }
        self.final_form()
    }

    pub fn summary(&self) -> Value {
        let alphas: Option<Vec<String>> = match &self.branch {
            Branch::A { .. } => Some((2..self.n).map(|i| self.alpha(i).to_string()).collect()),
            Branch::B => None,
        };
        json!({
            "n": self.n,
            "codim": self.codim,
            "branch": if self.is_a() { "A" } else { "B" },
            "alphas": alphas,
            "r": self.r.to_string(),
            "s": self.s.to_string(),
            "lambda": self.lambda.to_string(),
            "mu": self.mu.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct StepCertificate {
    /// Step `k` produces `I_(k+1)`.
    pub step: u32,
    pub ideal: Ideal<Rational>,
    /// Kernel of the chosen projection, before any change of coordinates.
    pub kernel: Ideal<Rational>,
    pub colength: usize,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct ChainResult {
    pub plan: ConstructionPlan,
    pub ring: Arc<PolyRing>,
    /// `I_1, …, I_(n+1)`.
    pub ideals: Vec<Ideal<Rational>>,
    pub steps: Vec<StepCertificate>,
    pub final_form: NormalForm,
    pub structure: StructureType,
    pub checks: Vec<Check>,
}

impl ChainResult {
    pub fn final_ideal(&self) -> &Ideal<Rational> {
        self.ideals.last().expect("chain is never empty")
    }

    pub fn support_ideal(&self) -> &Ideal<Rational> {
        &self.ideals[0]
    }

    pub fn all_checks(&self) -> impl Iterator<Item = &Check> {
        self.steps.iter().flat_map(|s| s.checks.iter()).chain(self.checks.iter())
    }

    pub fn passed(&self) -> bool {
        self.all_checks().all(Check::ok)
    }

    pub fn summary(&self) -> Value {
        let chain: Vec<String> = self.ideals.iter().map(|i| i.render()).collect();
        json!({
            "plan": self.plan.summary(),
            "ring": self.ring.to_string(),
            "chain": chain,
            "final": self.final_ideal().render(),
            "normal_form": self.final_form.to_string(),
            "multiplicity": self.structure.multiplicity,
            "type": {
                "m": self.structure.m,
                "m_ranks": self.structure.m_ranks,
                "a_ranks": self.structure.a_ranks,
                "bf_ranks": self.structure.b_ranks,
            },
        })
    }

    pub fn report(&self, label: &str) -> Report {
        let mut report = Report::new();
        report.push(label, None, self.summary(), self.checks.clone());
        for s in &self.steps {
            report.push(
                format!("{label}/step{}", s.step),
                None,
                json!({
                    "ideal": s.ideal.render(),
                    "kernel": s.kernel.reduced().render(),
                    "colength": s.colength,
                }),
                s.checks.clone(),
            );
        }
        report
    }
}

fn length(i: &Ideal<Rational>) -> Result<usize> {
    artinian_length(i).finite()
}

/// Runs the construction for a plan and certifies every step.
pub fn run_construction(plan: &ConstructionPlan) -> Result<ChainResult> {
    plan.validate()?;
    let ring = plan.ring()?;
    let n = plan.n;
    let (x, y) = (QPoly::var(&ring, 0), QPoly::var(&ring, 1));
    let ideals = (1..=n + 1).map(|k| plan.closed_form(&ring, k)).collect::<Result<Vec<_>>>()?;
    let i = ideals[0].clone();
    let rest = plan.rest(&ring);
    let mut steps = Vec::with_capacity(n as usize);

    for k in 1..=n {
        let ik = &ideals[k as usize - 1];
        let next = &ideals[k as usize];
        let ii_k = i.product(ik)?;
        let mut checks = Vec::new();

        let lower = next.contains_ideal(&ii_k)?;
        let upper = ik.contains_ideal(next)?;
        checks.push(Check::required(
            "chain",
            lower && upper,
            format!("I*I_{k} ⊆ I_{}: {lower}; I_{} ⊆ I_{k}: {upper}", k + 1, k + 1),
        ));
        let (lk, lnext) = (length(ik)?, length(next)?);
        let expected = if k < n { 2 } else { 1 };
        checks.push(Check::required(
            "quotient.length",
            lnext - lk == expected,
            format!("len I_{k}/I_{} = {}, expected {expected}", k + 1, lnext - lk),
        ));

        // kernel of the chosen projection I_k → I_k/I·I_k → target
        let mut extra: Vec<QPoly> = rest.clone();
        let shear_step = !plan.is_a() && (3..n).contains(&k) && !(plan.lambda.is_zero() && plan.mu.is_zero());
        if k == 1 {
            extra.extend(i.pow(2).gens().iter().cloned());
        } else if k < n {
            match plan.branch {
                Branch::A { .. } => extra.push(&plan.quadric(&ring, k) + &x.pow(k).scale(&plan.alpha(k))),
                Branch::B => {
                    let (l, m) = if k >= 3 { (plan.lambda.clone(), plan.mu.clone()) } else { (Rational::zero(), Rational::zero()) };
                    extra.push(&(&x * &y) - &(&x.pow(k).scale(&l) + &y.pow(k).scale(&m)));
                }
            }
        } else {
            match plan.branch {
                Branch::A { .. } => {
                    extra.push(plan.quadric(&ring, n));
                    extra.push(&x.pow(n).scale(&plan.s) - &(&x.pow(n - 1) * &y).scale(&plan.r));
                }
                Branch::B => {
                    extra.push(&x * &y);
                    extra.push(&x.pow(n).scale(&plan.s) - &y.pow(n).scale(&plan.r));
                }
            }
        }
        let kernel = ii_k.sum(&Ideal::new(&ring, extra)?)?;
        checks.extend(kernel_checks(plan, &ring, k, &kernel, next, shear_step)?);

        if k == 1 {
            let i2 = &ideals[1];
            for j in 2..=3u32 {
                let num = i.pow(j - 1).product(i2)?;
                let rank = length(&num)? - length(&i.pow(j))?;
                checks.push(Check::required(
                    format!("sym{j}.rank"),
                    rank == j as usize + 1,
                    format!("len I^{j}/I^{}I_2 = {rank}, expected {}", j - 1, j + 1),
                ));
            }
        }
        if (2..n).contains(&k) {
            let upper = i.product(next)?;
            let rank = length(&upper)? - length(&ii_k)?;
            checks.push(Check::required(
                "E.rank",
                rank == 2,
                format!("len I*I_{k}/I*I_{} = {rank}", k + 1),
            ));
        }
        if k == 2 && n >= 3 {
            checks.push(tangent_quadric_check(plan, &ring, next)?);
        }
        if k == n {
            checks.extend(hessian_checks(plan)?);
        }
        steps.push(StepCertificate {
            step: k,
            ideal: next.clone(),
            kernel,
            colength: lnext,
            checks,
        });
    }

    let final_ideal = ideals.last().unwrap().clone();
    let mut checks = Vec::new();
    let mult = length(&final_ideal)?;
    checks.push(Check::required(
        "multiplicity",
        mult == 2 * n as usize,
        format!("len R/J = {mult}, expected {}", 2 * n),
    ));
    let data = local_data(&final_ideal, None)?;
    checks.push(Check::required(
        "complete_intersection",
        data.min_gens == plan.codim as usize,
        format!("{} minimal generators, codimension {}", data.min_gens, plan.codim),
    ));
    let form = plan.expected_form();
    let rec = recognize_normal_form(&final_ideal)?;
    checks.push(Check::required(
        "normal_form",
        rec.form == form && rec.change.is_some(),
        format!("recognized {}, expected {form}", rec.form),
    ));

    let structure = MultipleStructure::new(i.clone(), final_ideal.clone(), SupportKind::Point)?;
    let ty = structure.structure_type()?;
    let mut expected_ranks = vec![1usize];
    expected_ranks.extend(std::iter::repeat(2).take(n as usize - 1));
    expected_ranks.push(1);
    checks.push(Check::required(
        "type",
        ty.m == n && ty.m_ranks == expected_ranks,
        format!("m = {}, M ranks {:?}, expected {:?}", ty.m, ty.m_ranks, expected_ranks),
    ));
    checks.extend(structure.check_properties()?.into_iter().filter(|c| c.required));
    checks.extend(structure.check_gorenstein()?);

    Ok(ChainResult {
        plan: plan.clone(),
        ring,
        ideals,
        steps,
        final_form: form,
        structure: ty,
        checks,
    })
}

/// Compares the projection kernel with the closed form of `I_(k+1)`.
fn kernel_checks(
    plan: &ConstructionPlan,
    ring: &Arc<PolyRing>,
    k: u32,
    kernel: &Ideal<Rational>,
    next: &Ideal<Rational>,
    shear_step: bool,
) -> Result<Vec<Check>> {
    let n = plan.n;
    if kernel.equals(next)? {
        return Ok(vec![Check::required("kernel", true, "kernel equals the closed form")]);
    }
    if shear_step {
        let (src, dst) = stepk_ideals(ring, k, &plan.lambda, &plan.mu)?;
        let same_src = kernel.equals(&src)?;
        let phi = if k == 3 {
            step3_change(ring, &plan.lambda, &plan.mu)?
        } else {
            stepk_change(ring, k, &plan.lambda, &plan.mu)?
        };
        let ok = verify_with_retry(&src, &dst, &phi, 2 * k + 2)?;
        return Ok(vec![Check::required(
            "kernel",
            same_src && ok,
            format!("kernel has the sheared shape: {same_src}; coordinate change to the closed form verified: {ok}"),
        )]);
    }
    if k < n {
        return Ok(vec![Check::required("kernel", false, "kernel differs from the closed form")]);
    }
    // last step
    let data = local_data(kernel, None)?;
    let mut out = vec![Check::required(
        "kernel.complete_intersection",
        data.length == 2 * n as usize && data.min_gens == plan.codim as usize,
        format!("length {}, {} minimal generators", data.length, data.min_gens),
    )];
    match plan.branch {
        Branch::B => {
            let c = -&plan.s / &plan.r;
            match rational_nth_root(&c, n) {
                Some(rho) => {
                    let y = QPoly::var(ring, 1);
                    let phi = RingMap::substitution(ring, &[("y", y.scale(&rho))])?;
                    let image = kernel.map(&phi)?;
                    let ok = image.equals(next)?;
                    out.push(Check::required(
                        "kernel",
                        ok,
                        format!("y -> ({rho})*y carries the kernel onto the closed form: {ok}"),
                    ));
                }
                None => out.push(Check::observation(
                    "kernel",
                    false,
                    format!(
                        "kernel is (xy, x^{n} - ({})*y^{n}); reaching the closed form needs an {n}-th root of {c}",
                        &plan.r / &plan.s
                    ),
                )),
            }
        }
        Branch::A { .. } => {
            let rec = recognize_normal_form(kernel)?;
            let expected = plan.expected_form();
            match rec.change {
                Some(_) => out.push(Check::required(
                    "kernel",
                    rec.form.family() == expected.family() && rec.form.n() == Some(n),
                    format!("kernel recognized as {} by a certified change", rec.form),
                )),
                None => out.push(Check::observation(
                    "kernel",
                    false,
                    format!(
                        "no rational change to a normal form: {}",
                        rec.note.as_deref().unwrap_or(rec.form.to_string().as_str())
                    ),
                )),
            }
        }
    }
    Ok(out)
}

fn verify_with_retry(src: &Ideal<Rational>, dst: &Ideal<Rational>, phi: &RingMap<Rational>, n: u32) -> Result<bool> {
    let mut n = n;
    loop {
        match verify_coordinate_change(src, dst, phi, n) {
            Err(Error::TruncationTooSmall { required, .. }) if required > n => n = required,
            other => return other,
        }
    }
}

/// The quadric killed by the second projection and its discriminant.
fn tangent_quadric_check(plan: &ConstructionPlan, ring: &Arc<PolyRing>, i3: &Ideal<Rational>) -> Result<Check> {
    let (x, y) = (QPoly::var(ring, 0), QPoly::var(ring, 1));
    let quads = [&x * &x, &x * &y, &y * &y];
    let nfs = quads.iter().map(|q| i3.normal_form(q)).collect::<Result<Vec<_>>>()?;
    let mut monos = Vec::new();
    for p in &nfs {
        for (m, _) in p.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    let rows: Vec<Vec<Rational>> = monos
        .iter()
        .map(|m| {
            nfs.iter()
                .map(|p| p.terms().iter().find(|(e, _)| e == m).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let kernel = nullspace(rows, 3);
    if kernel.len() != 1 {
        return Ok(Check::required("tangent_quadric", false, format!("kernel of dimension {}", kernel.len())));
    }
    let mut c = kernel[0].clone();
    let scale = if !c[2].is_zero() { c[2].clone() } else { c[1].clone() };
    for v in c.iter_mut() {
        *v = v.div(&scale);
    }
    let base = PolyRing::new(&["r", "s", "a2"], MonomialOrder::Grevlex)?;
    let values = c.iter().map(|v| QPoly::constant(&base, v.clone())).collect();
    let delta = BinaryForm::from_monomial_values(&base, values)?.discriminant()?;
    let delta = delta.constant_value().unwrap_or_else(Rational::zero);
    let (expected, case) = match plan.branch {
        Branch::A { .. } => {
            let a2 = plan.alpha(2);
            let case = if a2.is_zero() { "a" } else { "a'" };
            (-a2, case)
        }
        Branch::B => (Rational::new(1.into(), 4.into()), "b"),
    };
    let render = |v: &[Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    Ok(Check::required(
        "tangent_quadric",
        delta == expected,
        format!("quadric coefficients [{}], discriminant {delta}, expected {expected} (case {case})", render(&c)),
    ))
}

/// Values of the last projection on `x^(n-i) y^i`, as polynomials in
/// `r, s, a2`.
pub fn last_projection_values(branch_a: bool, n: u32, base: &Arc<PolyRing>) -> Result<Vec<QPoly>> {
    let r = QPoly::var_named(base, "r")?;
    let s = QPoly::var_named(base, "s")?;
    let a2 = QPoly::var_named(base, "a2")?;
    Ok((0..=n)
        .map(|i| {
            if branch_a {
                let p = i / 2;
                let sign = a2.neg().pow(p);
                if i % 2 == 0 {
                    &sign * &r
                } else {
                    &sign * &s
                }
            } else if i == 0 {
                r.clone()
            } else if i == n {
                s.clone()
            } else {
                QPoly::zero(base)
            }
        })
        .collect())
}

/// The Hessian of the last projection and its expected closed form:
/// `-(n-1)² s² e1^(2n-4)` modulo `a2` for branch A, and
/// `n²(n-1)² r s e1^(n-2) e2^(n-2)` for branch B.
pub fn hessian_identity(branch_a: bool, n: u32) -> Result<(QPoly, QPoly, QPoly)> {
    let base = PolyRing::new(&["r", "s", "a2"], MonomialOrder::Grevlex)?;
    let values = last_projection_values(branch_a, n, &base)?;
    let form = BinaryForm::from_monomial_values(&base, values)?;
    let h = form.hessian();
    let ring = h.ring().clone();
    let nn = Rational::from_i64(n as i64);
    let n1 = Rational::from_i64(n as i64 - 1);
    let (reduced, expected) = if branch_a {
        let reduced = reduce_mod_parameter(&h, "a2")?;
        let coeff = -(&n1 * &n1);
        let expected = QPoly::monomial(&ring, vec![0, 2, 0, 2 * n - 4, 0], coeff);
        (reduced, expected)
    } else {
        let coeff = &nn * &nn * &n1 * &n1;
        let expected = QPoly::monomial(&ring, vec![1, 1, 0, n - 2, n - 2], coeff);
        (h.clone(), expected)
    };
    Ok((h, reduced, expected))
}

fn hessian_checks(plan: &ConstructionPlan) -> Result<Vec<Check>> {
    let a = plan.is_a();
    let (h, reduced, expected) = hessian_identity(a, plan.n)?;
    let mut out = vec![Check::required(
        "hessian.identity",
        reduced == expected,
        if a {
            format!("h = {} ≡ {} mod a2", h.render(), reduced.render())
        } else {
            format!("h = {}", h.render())
        },
    )];
    // evaluate at the plan's values
    let ring = h.ring().clone();
    let phi = RingMap::substitution(
        &ring,
        &[
            ("r", QPoly::constant(&ring, plan.r.clone())),
            ("s", QPoly::constant(&ring, plan.s.clone())),
            ("a2", QPoly::constant(&ring, Rational::zero())),
        ],
    )?;
    let at_point = phi.apply(&reduced)?;
    out.push(Check::required(
        "hessian.nonvanishing",
        !at_point.is_zero(),
        format!("at r = {}, s = {}: {}", plan.r, plan.s, at_point.render()),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn assert_passes(plan: &ConstructionPlan) -> ChainResult {
        let res = run_construction(plan).unwrap();
        for c in res.all_checks() {
            assert!(c.ok(), "{}: {}", c.name, c.detail);
        }
        res
    }

    #[test]
    fn branch_b_n3() {
        let res = assert_passes(&ConstructionPlan::type_b(3));
        let expected = Ideal::parse(&res.ring, &["x^3 + y^3", "x*y"]).unwrap();
        assert!(res.final_ideal().equals(&expected).unwrap());
        assert_eq!(res.structure.m_ranks, vec![1, 2, 2, 1]);
    }

    #[test]
    fn branch_a_with_alphas() {
        let res = assert_passes(&ConstructionPlan::type_a(4, vec![q(1), q(-2)]).with_values(q(3), q(2)));
        let expected = Ideal::parse(&res.ring, &["x^4", "y^2 + x^2 - 2*x^3"]).unwrap();
        assert!(res.final_ideal().equals(&expected).unwrap());
        // y² + x² is irreducible over Q and r ≠ 0: no rational normal form
        let last = res.steps.last().unwrap();
        let kernel = last.checks.iter().find(|c| c.name == "kernel").unwrap();
        assert!(!kernel.required && !kernel.passed);
    }

    #[test]
    fn split_tangent_quadric_is_second_family() {
        let plan = ConstructionPlan::type_a(4, vec![q(-4), q(1)]);
        assert_eq!(plan.expected_form(), NormalForm::TypeB { n: 4 });
        assert_passes(&plan);
    }

    #[test]
    fn sheared_steps_and_extra_codimension() {
        let plan = ConstructionPlan::type_b(5).with_codim(3).with_shear(q(2), q(-3));
        let res = assert_passes(&plan);
        assert_eq!(res.ring.vars(), &["x", "y", "z"]);
        assert_eq!(res.structure.multiplicity, 10);
    }

    #[test]
    fn invalid_plans() {
        assert!(matches!(
            run_construction(&ConstructionPlan::type_a(3, vec![]).with_values(q(1), q(0))),
            Err(Error::InvalidPlan(_))
        ));
        assert!(matches!(
            run_construction(&ConstructionPlan::type_b(3).with_values(q(0), q(1))),
            Err(Error::InvalidPlan(_))
        ));
        assert!(matches!(run_construction(&ConstructionPlan::type_a(3, vec![q(1), q(2)])), Err(Error::InvalidPlan(_))));
    }

    #[test]
    fn hessian_identities() {
        for n in 2..=6 {
            for a in [true, false] {
                let (_, reduced, expected) = hessian_identity(a, n).unwrap();
                assert_eq!(reduced, expected, "n = {n}, branch A = {a}");
            }
        }
    }
}
