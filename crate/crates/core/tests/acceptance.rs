//! One line per acceptance criterion. Runs without the libtest harness so
//! the verdicts are always printed; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use mstruct::construct::chain::{hessian_identity, last_projection_values};
use mstruct::construct::{
    line_in_p4, lines_in_p3, plane_in_p6, run_construction, step3_change, stepk_change,
    stepk_ideals, verify_coordinate_change, ConstructionPlan,
};
use mstruct::error::Error;
use mstruct::forms::BinaryForm;
use mstruct::invariants::{artinian_length, hilbert, local_data};
use mstruct::multistruct::{FiltrationKind, MultipleStructure, SupportKind};
use mstruct::report::Check;
use mstruct::{Ideal, QPoly, Rational, RingMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named<'a>(checks: &'a [Check], name: &str) -> Result<&'a Check, String> {
    checks
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| format!("no check named {name}"))
}

fn passed(checks: &[Check], name: &str) -> Result<(), String> {
    let c = named(checks, name)?;
    ensure(c.passed, || format!("{name} failed: {}", c.detail))
}

fn all_ok<'a>(checks: impl IntoIterator<Item = &'a Check>, what: &str) -> Result<(), String> {
    for c in checks {
        ensure(c.ok(), || format!("{what}: {} failed: {}", c.name, c.detail))?;
    }
    Ok(())
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn ideal(r: &std::sync::Arc<mstruct::PolyRing>, gens: &[&str]) -> Ideal<Rational> {
    Ideal::parse(r, gens).unwrap()
}

fn running_example() -> Outcome {
    let r = ring(&["x", "y"]);
    let s = MultipleStructure::new(ideal(&r, &["x", "y"]), ideal(&r, &["x^3", "x*y", "y^4"]), SupportKind::Point)
        .map_err(e2s)?;
    let m = s.nilpotency_index().map_err(e2s)?;
    ensure(m == 3, || format!("m = {m}"))?;
    let j = ["x^3", "x*y", "y^4"];
    let expected: [(FiltrationKind, [&[&str]; 5], [usize; 4]); 3] = [
        (FiltrationKind::M, [&["1"], &["x", "y"], &["x", "y^2"], &["x^2", "x*y", "y^3"], &j], [1, 2, 4, 6]),
        (FiltrationKind::A, [&["1"], &["x", "y"], &["x^2", "x*y", "y^2"], &["x^2", "x*y", "y^3"], &j], [1, 3, 4, 6]),
        (FiltrationKind::BF, [&["1"], &["x", "y"], &["x^2", "x*y", "y^2"], &["x^3", "x*y", "y^3"], &j], [1, 3, 5, 6]),
    ];
    for (kind, chain, lengths) in &expected {
        let f = s.filtration(*kind).map_err(e2s)?;
        ensure(f.global.len() == chain.len(), || format!("{kind}: {} ideals", f.global.len()))?;
        for (l, (got, want)) in f.global.iter().zip(chain).enumerate() {
            let want = ideal(&r, want);
            ensure(got.equals(&want).unwrap(), || format!("{kind}_{l} = {}, expected {}", got.render(), want.render()))?;
        }
        ensure(f.lengths[1..] == lengths[..], || format!("{kind} lengths {:?}", f.lengths))?;
    }
    let checks = s.check_properties().map_err(e2s)?;
    passed(&checks, "filtrations.distinct")?;
    for l in 0..=4 {
        passed(&checks, &format!("chain[{l}]"))?;
    }
    all_ok(&checks, "properties")?;
    Ok("m = 3; M (1,2,4,6), A (1,3,4,6), BF (1,3,5,6); pairwise distinct; chain holds for l = 0..4".into())
}

fn theorem_chains() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut runs = 0;
    for n in 2..=6u32 {
        let alphas: Vec<Rational> = (2..n).map(|_| small_rational(&mut rng)).collect();
        for plan in [ConstructionPlan::type_a(n, alphas.clone()), ConstructionPlan::type_b(n)] {
            let tag = format!("n = {n}, {}", plan.final_form());
            let res = run_construction(&plan).map_err(|e| format!("{tag}: {e}"))?;
            all_ok(res.all_checks(), &tag)?;
            let ring = res.ring.clone();
            let closed = plan.closed_form(&ring, n + 1).map_err(e2s)?;
            ensure(res.final_ideal().equals(&closed).unwrap(), || format!("{tag}: final ideal differs from closed form"))?;
            for s in &res.steps {
                passed(&s.checks, "kernel").or_else(|e| {
                    let k = named(&s.checks, "kernel")?;
                    if k.required { Err(e) } else { Ok(()) }
                })?;
            }
            let lengths: Vec<usize> = res.ideals.iter().map(|i| artinian_length(i).finite().unwrap()).collect();
            let steps: Vec<usize> = lengths.windows(2).map(|w| w[1] - w[0]).collect();
            let mut want = vec![2; n as usize - 1];
            want.push(1);
            ensure(steps == want, || format!("{tag}: step lengths {steps:?}"))?;
            ensure(*lengths.last().unwrap() == 2 * n as usize, || format!("{tag}: multiplicity {lengths:?}"))?;
            let mg = local_data(res.final_ideal(), None).map_err(e2s)?.min_gens;
            ensure(mg == plan.codim as usize, || format!("{tag}: {mg} minimal generators"))?;
            let mut ranks = vec![1usize];
            ranks.extend(std::iter::repeat(2).take(n as usize - 1));
            ranks.push(1);
            ensure(res.structure.m_ranks == ranks && res.structure.a_ranks == ranks, || {
                format!("{tag}: ranks {:?} / {:?}", res.structure.m_ranks, res.structure.a_ranks)
            })?;
            passed(&res.checks, "ranks.reversed")?;
            passed(&res.checks, "filtrations.coincide")?;
            let products = res.checks.iter().filter(|c| c.name.contains('*')).count();
            ensure(products > 0, || format!("{tag}: no product checks"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} chains (n = 2..6, A with random alphas and B) certified"))
}

fn hessians() -> Outcome {
    for n in 2..=6 {
        for a in [true, false] {
            let (h, reduced, expected) = hessian_identity(a, n).map_err(e2s)?;
            ensure(reduced == expected, || {
                format!("n = {n}, branch {}: h = {}, expected {}", if a { "A" } else { "B" }, h.render(), expected.render())
            })?;
        }
    }
    let base = ring(&["r", "s", "a2"]);
    for a in [true, false] {
        let values = last_projection_values(a, 2, &base).map_err(e2s)?;
        let form = BinaryForm::from_monomial_values(&base, values).map_err(e2s)?;
        let h = form.hessian();
        let disc = form.discriminant().map_err(e2s)?.embed(h.ring()).map_err(e2s)?;
        ensure(h == disc.scale(&q(-4)), || format!("n = 2: h = {}, disc = {}", h.render(), disc.render()))?;
    }
    Ok("h(mu_n) identities for n = 2..6 in both branches; h = -4 disc for n = 2".into())
}

fn verify(src: &Ideal<Rational>, dst: &Ideal<Rational>, phi: &RingMap<Rational>, k: u32) -> Result<bool, String> {
    match verify_coordinate_change(src, dst, phi, 2 * k + 2) {
        Err(Error::TruncationTooSmall { required, .. }) => verify_coordinate_change(src, dst, phi, required).map_err(e2s),
        other => other.map_err(e2s),
    }
}

fn coordinate_changes() -> Outcome {
    let values = [q(1), q(2), q(-3)];
    let r = ring(&["x", "y"]);
    let mut count = 0;
    for l in &values {
        for m in &values {
            let phi = step3_change(&r, l, m).map_err(e2s)?;
            let x = QPoly::var(&r, 0);
            let y = QPoly::var(&r, 1);
            let src = Ideal::new(&r, vec![x.pow(4), y.pow(4), &(&x * &y) - &(&x.pow(3).scale(l) + &y.pow(3).scale(m))])
                .map_err(e2s)?;
            let dst = Ideal::parse(phi.target(), &["X^4", "Y^4", "X*Y"]).map_err(e2s)?;
            ensure(verify(&src, &dst, &phi, 3)?, || format!("step 3, lambda = {l}, mu = {m}"))?;
            count += 1;
            for k in 3..=6 {
                let (src, dst) = stepk_ideals(&r, k, l, m).map_err(e2s)?;
                let phi = stepk_change(&r, k, l, m).map_err(e2s)?;
                ensure(verify(&src, &dst, &phi, k)?, || format!("step {k}, lambda = {l}, mu = {m}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} substitutions certified (k = 3..6, lambda, mu in {{1, 2, -3}})"))
}

fn example_lines_p3() -> Outcome {
    let ex = lines_in_p3().map_err(e2s)?;
    let want = [
        ("line-p3/n2", &["x^2", "y^2"][..], "4t", 4),
        ("line-p3/n3-square", &["x^2", "y^3"][..], "6t - 3", 6),
        ("line-p3/n3-split", &["x*y", "x^3 + y^3"][..], "6t - 3", 6),
    ];
    ensure(ex.len() == want.len(), || format!("{} examples", ex.len()))?;
    for (e, (label, gens, poly, degree)) in ex.iter().zip(want) {
        ensure(e.label == label, || format!("label {}", e.label))?;
        all_ok(&e.checks, label)?;
        let j = e.structure.structure_ideal();
        let expected = Ideal::parse(j.ring(), gens).map_err(e2s)?;
        ensure(j.equals(&expected).unwrap(), || format!("{label}: J = {}", j.render()))?;
        let h = hilbert(j).map_err(e2s)?;
        ensure(h.render_polynomial() == poly && h.degree == degree, || {
            format!("{label}: {} of degree {}", h.render_polynomial(), h.degree)
        })?;
    }
    Ok("(x^2,y^2): 4t, degree 4; (x^2,y^3) and (xy,x^3+y^3): 6t - 3, degree 6".into())
}

fn example_line_p4() -> Outcome {
    let mut out = Vec::new();
    for r in [0, 1] {
        let e = line_in_p4(r).map_err(e2s)?;
        all_ok(&e.checks, &e.label)?;
        for name in ["multiplicity", "saturated", "lci.generic", "lci.zero_of_a", "lci.zero_of_b"] {
            passed(&e.checks, name)?;
        }
        let mult = e.structure.multiplicity().map_err(e2s)?;
        ensure(mult == 4, || format!("r = {r}: multiplicity {mult}"))?;
        out.push(format!("r = {r}"));
    }
    Ok(format!("{}: multiplicity 4, saturated, 3 local generators generically and at a = 0, b = 0", out.join(", ")))
}

fn example_plane_p6() -> Outcome {
    let e = plane_in_p6(0).map_err(e2s)?;
    all_ok(&e.checks, &e.label)?;
    let t = e.structure.structure_type().map_err(e2s)?;
    ensure(t.multiplicity == 4, || format!("multiplicity {}", t.multiplicity))?;
    ensure(t.m == 2 && t.m_ranks == [1, 2, 1], || format!("m = {}, M ranks {:?}", t.m, t.m_ranks))?;
    Ok("multiplicity 4; computed m = 2, M ranks (1,2,1) (the tentative m = 1, (1,3) is not what the length oracle gives)".into())
}

fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, r: &std::sync::Arc<mstruct::PolyRing>) -> Vec<QPoly> {
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let t = rng.gen_range(1..=3);
            let f = random_form(rng, r, d, t);
            if f.is_zero() { QPoly::var(r, 0).pow(d) } else { f }
        })
        .collect()
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let r = ring(&["x", "y", "z"]);

    // Groebner determinism and the Macaulay-matrix oracle
    let mut members = 0;
    for case in 0..500 {
        let gens = random_homogeneous_ideal(&mut rng, &r);
        let i = Ideal::new(&r, gens.clone()).map_err(e2s)?;
        let mut rev = gens.clone();
        rev.reverse();
        let gb1 = i.reduced();
        let gb2 = Ideal::new(&r, rev).map_err(e2s)?.reduced();
        ensure(gb1.gens() == gb2.gens(), || format!("case {case}: basis depends on generator order"))?;
        ensure(gb1.gens() == i.reduced().gens(), || format!("case {case}: basis not reproducible"))?;
        for _ in 0..3 {
            let d = rng.gen_range(1..=4);
            let f = if rng.gen_bool(0.5) {
                random_form(&mut rng, &r, d, 3)
            } else {
                gens.iter().fold(QPoly::zero(&r), |acc, g| {
                    let dg = g.total_degree().unwrap();
                    if dg > d { acc } else { &acc + &(g * &random_form(&mut rng, &r, d - dg, 2)) }
                })
            };
            let by_gb = i.contains(&f).map_err(e2s)?;
            let by_matrix = macaulay_member(&gens, &f, d);
            ensure(by_gb == by_matrix, || format!("case {case}: {} in {}: {by_gb} vs {by_matrix}", f.render(), i.render()))?;
            members += by_gb as usize;
        }
    }

    // colon and saturation identities
    for case in 0..40 {
        let i = Ideal::new(&r, random_homogeneous_ideal(&mut rng, &r)).map_err(e2s)?;
        let j = Ideal::new(&r, random_homogeneous_ideal(&mut rng, &r)).map_err(e2s)?;
        let k = Ideal::new(&r, random_homogeneous_ideal(&mut rng, &r)).map_err(e2s)?;
        let ij = i.quotient(&j).map_err(e2s)?;
        let fail = |what: &str| format!("case {case}: {what} for I = {}, J = {}, K = {}", i.render(), j.render(), k.render());
        ensure(ij.contains_ideal(&i).unwrap(), || fail("I ⊄ I:J"))?;
        ensure(i.contains_ideal(&j.product(&ij).unwrap()).unwrap(), || fail("J(I:J) ⊄ I"))?;
        let lhs = ij.quotient(&k).map_err(e2s)?;
        let rhs = i.quotient(&j.product(&k).unwrap()).map_err(e2s)?;
        ensure(lhs.equals(&rhs).unwrap(), || fail("(I:J):K ≠ I:JK"))?;
        let lhs = i.quotient(&j.sum(&k).unwrap()).map_err(e2s)?;
        let rhs = ij.intersect(&i.quotient(&k).unwrap()).map_err(e2s)?;
        ensure(lhs.equals(&rhs).unwrap(), || fail("I:(J+K) ≠ (I:J) ∩ (I:K)"))?;
        let sat = i.saturate(&j).map_err(e2s)?;
        ensure(sat.contains_ideal(&ij).unwrap(), || fail("I:J ⊄ I:J^∞"))?;
        ensure(sat.saturate(&j).unwrap().equals(&sat).unwrap(), || fail("saturation not idempotent"))?;
    }

    // Hilbert degree of complete intersections
    let r4 = ring(&["x", "y", "z", "w"]);
    for case in 0..40 {
        let c = rng.gen_range(1..=3usize);
        let mut gens = Vec::new();
        let mut product = 1i64;
        for v in 0..c {
            let d = rng.gen_range(1..=3u32);
            product *= d as i64;
            let mut f = QPoly::var(&r4, v).pow(d);
            for _ in 0..2 {
                let mut m = vec![0u32; 4];
                for _ in 0..d {
                    m[rng.gen_range(v + 1..4)] += 1;
                }
                f = &f + &QPoly::monomial(&r4, m, nonzero_small_rational(&mut rng));
            }
            gens.push(f);
        }
        let phi = random_linear_change(&mut rng, &r4);
        let ci = map_ideal(&Ideal::new(&r4, gens).map_err(e2s)?, &phi);
        let h = hilbert(&ci).map_err(e2s)?;
        ensure(h.degree == product && h.dimension == 4 - c as i64, || {
            format!("case {case}: {} has degree {}, dimension {}", ci.render(), h.degree, h.dimension)
        })?;
    }

    // length invariance under linear changes
    let r2 = ring(&["x", "y"]);
    for case in 0..40 {
        let (rr, nv) = if case % 2 == 0 { (&r, 3) } else { (&r2, 2) };
        let gens: Vec<QPoly> = (0..nv).map(|_| random_local(&mut rng, rr, 3, 3)).collect();
        let all: Vec<usize> = (0..nv).collect();
        let n = rng.gen_range(3..=5);
        let j = Ideal::new(rr, gens).map_err(e2s)?;
        let i = j.plus_power_of_variables(&all, n);
        let phi = random_linear_change(&mut rng, rr);
        // a linear change fixes the power of the maximal ideal
        let mapped = map_ideal(&j, &phi).plus_power_of_variables(&all, n);
        let (a, b) = (artinian_length(&i).finite().map_err(e2s)?, artinian_length(&mapped).finite().map_err(e2s)?);
        ensure(a == b, || format!("case {case}: lengths {a} vs {b}"))?;
        let (la, lb) = (local_data(&i, None).map_err(e2s)?, local_data(&mapped, None).map_err(e2s)?);
        ensure(la.length == lb.length && la.min_gens == lb.min_gens, || format!("case {case}: local data {la:?} vs {lb:?}"))?;
    }
    Ok(format!(
        "500 ideals agree with the Macaulay oracle ({members} members of 1500 tests); colon identities, CI degrees, length invariance on 40 cases each"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("running example filtrations", running_example),
        ("construction chains n = 2..6", theorem_chains),
        ("Hessian identities", hessians),
        ("coordinate changes", coordinate_changes),
        ("double and triple lines in P3", example_lines_p3),
        ("double line in P4", example_line_p4),
        ("double plane in P6", example_plane_p6),
        ("engine property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
