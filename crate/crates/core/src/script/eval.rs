use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value as Json};

use crate::coeff::Rational;
use crate::construct::{
    all_examples, examples_report, line_in_p4, lines_in_p3, plane_in_p6, recognize_normal_form,
    run_construction, ChainResult, ConstructionPlan,
};
use crate::construct::chain::hessian_identity;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::{hilbert, local_data};
use crate::multistruct::{FiltrationKind, MultipleStructure};
use crate::poly::{MonomialOrder, PolyRing, QPoly};
use crate::report::{Check, Report};

use super::ast::{Arg, BinOp, Expr, ExprKind, Script, Stmt, StmtKind};
use super::parser::SYMBOL_FUNCTIONS;

/// Evaluation settings shared by every statement of a run.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    /// Order for ring declarations that do not name one.
    pub order: MonomialOrder,
    /// Truncation degree for local computations; searched for when absent.
    pub trunc: Option<u32>,
    /// Variable set to 1 when a linear support has parameters.
    pub chart: Option<String>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            order: MonomialOrder::Grevlex,
            trunc: None,
            chart: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Num(Rational),
    Poly(QPoly),
    Ideal(Ideal<Rational>),
    List(Vec<Value>),
    Bool(bool),
    Structure(Arc<MultipleStructure>),
    Plan(ConstructionPlan),
    Chain(Arc<ChainResult>),
    Data(Json, Vec<Check>),
    Report(Report),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Num(_) => "a number",
            Value::Poly(_) => "a polynomial",
            Value::Ideal(_) => "an ideal",
            Value::List(_) => "a list",
            Value::Bool(_) => "a boolean",
            Value::Structure(_) => "a multiple structure",
            Value::Plan(_) => "a construction plan",
            Value::Chain(_) => "a construction result",
            Value::Data(..) => "a result record",
            Value::Report(_) => "a report",
        }
    }

    fn to_json(&self) -> Result<Json> {
        Ok(match self {
            Value::Num(q) => json!(q.to_string()),
            Value::Poly(p) => json!({ "polynomial": p.render() }),
            Value::Ideal(i) => json!({
                "generators": i.render(),
                "groebner_basis": i.reduced().render(),
            }),
            Value::List(items) => Json::Array(items.iter().map(Value::to_json).collect::<Result<_>>()?),
            Value::Bool(b) => json!(b),
            Value::Structure(s) => s.summary()?,
            Value::Plan(p) => json!({ "plan": p.summary() }),
            Value::Chain(c) => c.summary(),
            Value::Data(v, _) => v.clone(),
            Value::Report(r) => json!({
                "entries": r.entries.iter().map(|e| e.label.clone()).collect::<Vec<_>>(),
                "passed": r.all_passed(),
            }),
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(q) => write!(f, "{q}"),
            Value::Poly(p) => write!(f, "{}", p.render()),
            Value::Ideal(i) => write!(f, "{}", i.render()),
            Value::Bool(b) => write!(f, "{b}"),
            other => write!(f, "<{}>", other.kind()),
        }
    }
}

fn rt(msg: impl Into<String>) -> Error {
    Error::Runtime(msg.into())
}

struct Env<'a> {
    config: &'a Config,
    ring: Option<Arc<PolyRing>>,
    names: BTreeMap<String, Value>,
}

/// Runs a parsed script and collects one report entry per statement.
pub fn execute(script: &Script, config: &Config) -> Result<Report> {
    let mut env = Env {
        config,
        ring: None,
        names: BTreeMap::new(),
    };
    let mut report = Report::new();
    for stmt in &script.statements {
        env.statement(stmt, &mut report).map_err(|e| {
            let text = stmt.to_string();
            rt(format!("line {}: `{}`: {e}", stmt.pos.line, text.trim_end_matches(';')))
        })?;
    }
    Ok(report)
}

/// Parses and runs a script.
pub fn run(src: &str, config: &Config) -> Result<Report> {
    execute(&super::parser::parse(src)?, config)
}

fn push_value(report: &mut Report, label: &str, line: usize, value: &Value) -> Result<()> {
    match value {
        Value::Chain(c) => {
            let mut sub = c.report(label);
            if let Some(first) = sub.entries.first_mut() {
                first.line = Some(line);
            }
            report.extend(sub);
        }
        Value::Report(r) => {
            report.push(label, Some(line), value.to_json()?, vec![]);
            report.extend(r.clone());
        }
        Value::Data(v, checks) => report.push(label, Some(line), v.clone(), checks.clone()),
        other => report.push(label, Some(line), other.to_json()?, vec![]),
    }
    Ok(())
}

impl Env<'_> {
    fn statement(&mut self, stmt: &Stmt, report: &mut Report) -> Result<()> {
        let line = stmt.pos.line;
        match &stmt.kind {
            StmtKind::Ring { name, vars, order } => {
                let ring = PolyRing::new(vars, order.unwrap_or(self.config.order))?;
                report.push(name.as_str(), Some(line), json!({ "ring": ring.to_string() }), vec![]);
                self.ring = Some(ring);
            }
            StmtKind::Assign { name, expr } => {
                let v = self.eval(expr)?;
                push_value(report, name, line, &v)?;
                self.names.insert(name.clone(), v);
            }
            StmtKind::Expr(expr) => {
                let mut v = self.eval(expr)?;
                if let Value::Plan(plan) = &v {
                    v = Value::Chain(Arc::new(run_construction(plan)?));
                }
                push_value(report, &expr.to_string(), line, &v)?;
            }
        }
        Ok(())
    }

    fn ring(&self) -> Result<&Arc<PolyRing>> {
        self.ring.as_ref().ok_or_else(|| rt("no ring declared"))
    }

    fn eval(&mut self, e: &Expr) -> Result<Value> {
        match &e.kind {
            ExprKind::Int(s) => {
                let n: BigInt = s.parse().map_err(|_| rt(format!("bad number {s}")))?;
                Ok(Value::Num(Rational::from_integer(n)))
            }
            ExprKind::Ident(name) => {
                if let Some(v) = self.names.get(name) {
                    return Ok(v.clone());
                }
                let ring = self.ring()?;
                Ok(Value::Poly(QPoly::var_named(ring, name)?))
            }
            ExprKind::Neg(inner) => match self.eval(inner)? {
                Value::Num(q) => Ok(Value::Num(-q)),
                Value::Poly(p) => Ok(Value::Poly(p.neg())),
                other => Err(rt(format!("cannot negate {}", other.kind()))),
            },
            ExprKind::Binary(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                self.binary(*op, a, b)
            }
            ExprKind::List(items) => Ok(Value::List(
                items.iter().map(|i| self.eval(i)).collect::<Result<_>>()?,
            )),
            ExprKind::Call { name, args } => self.call(name, args),
        }
    }

    fn to_poly(&self, v: Value) -> Result<QPoly> {
        match v {
            Value::Poly(p) => Ok(p),
            Value::Num(q) => Ok(QPoly::constant(self.ring()?, q)),
            other => Err(rt(format!("expected a polynomial, found {}", other.kind()))),
        }
    }

    fn binary(&self, op: BinOp, a: Value, b: Value) -> Result<Value> {
        use Value::{Ideal as I, Num, Poly};
        Ok(match (op, a, b) {
            (BinOp::Add, Num(x), Num(y)) => Num(x + y),
            (BinOp::Sub, Num(x), Num(y)) => Num(x - y),
            (BinOp::Mul, Num(x), Num(y)) => Num(x * y),
            (BinOp::Div, Num(x), Num(y)) => {
                if y.is_zero() {
                    return Err(rt("division by zero"));
                }
                Num(x / y)
            }
            (BinOp::Pow, Num(x), Num(y)) => {
                let k = exponent(&y, true)?;
                if k < 0 && x.is_zero() {
                    return Err(rt("division by zero"));
                }
                let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                Num(if k < 0 { p.recip() } else { p })
            }
            (BinOp::Pow, Poly(p), Num(y)) => Poly(p.pow(exponent(&y, false)? as u32)),
            (BinOp::Pow, I(i), Num(y)) => I(i.pow(exponent(&y, false)? as u32)),
            (BinOp::Div, Poly(p), Num(y)) => {
                if y.is_zero() {
                    return Err(rt("division by zero"));
                }
                Poly(p.scale(&y.recip()))
            }
            (BinOp::Div, a @ (Poly(_) | Num(_)), b @ Poly(_)) => {
                let (p, q) = (self.to_poly(a)?, self.to_poly(b)?);
                match p.div_exact(&q) {
                    Some(r) => Poly(r),
                    None => return Err(rt(format!("{} is not divisible by {}", p.render(), q.render()))),
                }
            }
            (op @ (BinOp::Add | BinOp::Sub | BinOp::Mul), a @ (Poly(_) | Num(_)), b @ (Poly(_) | Num(_))) => {
                let (p, q) = (self.to_poly(a)?, self.to_poly(b)?);
                Poly(match op {
                    BinOp::Add => p.checked_add(&q)?,
                    BinOp::Sub => p.checked_sub(&q)?,
                    _ => p.checked_mul(&q)?,
                })
            }
            (BinOp::Add, I(i), I(j)) => I(i.sum(&j)?),
            (BinOp::Mul, I(i), I(j)) => I(i.product(&j)?),
            (BinOp::Mul, I(i), Poly(f)) | (BinOp::Mul, Poly(f), I(i)) => {
                let g = Ideal::new(i.ring(), vec![f])?;
                I(i.product(&g)?)
            }
            (BinOp::Colon, I(i), I(j)) => I(i.quotient(&j)?),
            (BinOp::Colon, I(i), Poly(f)) => I(i.quotient_by(&f)?),
            (op, a, b) => {
                return Err(rt(format!(
                    "'{}' is not defined for {} and {}",
                    op.symbol().trim(),
                    a.kind(),
                    b.kind()
                )))
            }
        })
    }

    fn call(&mut self, name: &str, args: &[Arg]) -> Result<Value> {
        if name == "construct" || name == "hessian" {
            return self.plan_call(name, args);
        }
        if SYMBOL_FUNCTIONS.contains(&name) {
            let syms: Vec<String> = args
                .iter()
                .map(|a| symbol(&a.value).ok_or_else(|| rt(format!("{name} takes symbols"))))
                .collect::<Result<_>>()?;
            return examples_call(&syms);
        }
        if let Some(a) = args.iter().find(|a| a.name.is_some()) {
            return Err(rt(format!(
                "{name} takes no named argument '{}'",
                a.name.as_deref().unwrap_or_default()
            )));
        }
        let vals: Vec<Value> = args.iter().map(|a| self.eval(&a.value)).collect::<Result<_>>()?;
        let arity = |n: usize| -> Result<()> {
            if vals.len() == n {
                Ok(())
            } else {
                Err(rt(format!("{name} takes {n} argument(s), got {}", vals.len())))
            }
        };
        let trunc = self.config.trunc;
        match name {
            "ideal" => {
                let ring = self.ring()?.clone();
                let mut gens = Vec::new();
                for v in vals {
                    self.collect_gens(v, &mut gens)?;
                }
                Ok(Value::Ideal(Ideal::new(&ring, gens)?))
            }
            "gb" => {
                arity(1)?;
                Ok(Value::Ideal(ideal_arg(&vals[0])?.reduced()))
            }
            "nf" => {
                arity(2)?;
                let f = self.to_poly(vals[0].clone())?;
                Ok(Value::Poly(ideal_arg(&vals[1])?.normal_form(&f)?))
            }
            "sat" => {
                arity(2)?;
                Ok(Value::Ideal(ideal_arg(&vals[0])?.saturate(ideal_arg(&vals[1])?)?))
            }
            "quotient" => {
                arity(2)?;
                self.binary(BinOp::Colon, vals[0].clone(), vals[1].clone())
            }
            "intersect" => {
                if vals.is_empty() {
                    return Err(rt("intersect needs at least one ideal"));
                }
                let mut acc = ideal_arg(&vals[0])?.clone();
                for v in &vals[1..] {
                    acc = acc.intersect(ideal_arg(v)?)?;
                }
                Ok(Value::Ideal(acc))
            }
            "eliminate" => {
                arity(2)?;
                let names = match &vals[1] {
                    Value::List(items) => items.iter().map(var_name).collect::<Result<Vec<_>>>()?,
                    other => vec![var_name(other)?],
                };
                Ok(Value::Ideal(ideal_arg(&vals[0])?.eliminate(&names)?))
            }
            "hilbert" => {
                arity(1)?;
                let h = hilbert(ideal_arg(&vals[0])?)?;
                Ok(Value::Data(
                    json!({
                        "dimension": h.dimension,
                        "degree": h.degree,
                        "polynomial": h.render_polynomial(),
                        "series": h.render_series(),
                    }),
                    vec![],
                ))
            }
            "length" => {
                arity(1)?;
                Ok(Value::Num(Rational::from_integer(local_data(ideal_arg(&vals[0])?, trunc)?.length.into())))
            }
            "mingens" => {
                arity(1)?;
                Ok(Value::Num(Rational::from_integer(local_data(ideal_arg(&vals[0])?, trunc)?.min_gens.into())))
            }
            "contains" => {
                arity(2)?;
                let i = ideal_arg(&vals[0])?;
                Ok(Value::Bool(match &vals[1] {
                    Value::Ideal(j) => i.contains_ideal(j)?,
                    other => i.contains(&self.to_poly(other.clone())?)?,
                }))
            }
            "equal" => {
                arity(2)?;
                Ok(Value::Bool(self.equal(&vals[0], &vals[1])?))
            }
            "assert" => {
                arity(1)?;
                let ok = match &vals[0] {
                    Value::Bool(b) => *b,
                    other => return Err(rt(format!("assert needs a boolean, found {}", other.kind()))),
                };
                let detail = args[0].value.to_string();
                Ok(Value::Data(json!(ok), vec![Check::required("assert", ok, detail)]))
            }
            "recognize" => {
                arity(1)?;
                let r = recognize_normal_form(ideal_arg(&vals[0])?)?;
                let certified = r.change.is_some();
                Ok(Value::Data(
                    r.summary(),
                    vec![Check::observation(
                        "recognize.certified",
                        certified,
                        r.note.clone().unwrap_or_else(|| r.form.to_string()),
                    )],
                ))
            }
            "multstruct" => {
                arity(2)?;
                let s = MultipleStructure::infer(
                    ideal_arg(&vals[0])?.clone(),
                    ideal_arg(&vals[1])?.clone(),
                    self.config.chart.as_deref(),
                )?;
                Ok(Value::Structure(Arc::new(s)))
            }
            "filtrations" => {
                arity(1)?;
                filtrations(structure_arg(&vals[0])?)
            }
            "type" => {
                arity(1)?;
                let t = structure_arg(&vals[0])?.structure_type()?;
                Ok(Value::Data(serde_json::to_value(&t).map_err(|e| rt(e.to_string()))?, vec![]))
            }
            "check" => {
                arity(1)?;
                let s = structure_arg(&vals[0])?;
                let checks = s.check_properties()?;
                Ok(Value::Data(checks_json(&checks), checks))
            }
            "gorenstein" => {
                arity(1)?;
                let checks = structure_arg(&vals[0])?.check_gorenstein()?;
                Ok(Value::Data(checks_json(&checks), checks))
            }
            "multiplicity" => {
                arity(1)?;
                let m = structure_arg(&vals[0])?.multiplicity()?;
                Ok(Value::Num(Rational::from_integer(m.into())))
            }
            "chain" => {
                arity(1)?;
                match &vals[0] {
                    Value::Plan(p) => Ok(Value::Chain(Arc::new(run_construction(p)?))),
                    other => Err(rt(format!("expected a construction plan, found {}", other.kind()))),
                }
            }
            other => Err(rt(format!("unknown function '{other}'"))),
        }
    }

    fn collect_gens(&self, v: Value, gens: &mut Vec<QPoly>) -> Result<()> {
        match v {
            Value::List(items) => items.into_iter().try_for_each(|i| self.collect_gens(i, gens)),
            Value::Ideal(i) => {
                gens.extend(i.gens().iter().cloned());
                Ok(())
            }
            other => {
                gens.push(self.to_poly(other)?);
                Ok(())
            }
        }
    }

    fn equal(&self, a: &Value, b: &Value) -> Result<bool> {
        Ok(match (a, b) {
            (Value::Num(x), Value::Num(y)) => x == y,
            (Value::Bool(x), Value::Bool(y)) => x == y,
            (Value::Ideal(i), Value::Ideal(j)) => i.equals(j)?,
            (Value::List(x), Value::List(y)) => {
                if x.len() != y.len() {
                    return Ok(false);
                }
                for (p, q) in x.iter().zip(y) {
                    if !self.equal(p, q)? {
                        return Ok(false);
                    }
                }
                true
            }
            (a @ (Value::Poly(_) | Value::Num(_)), b @ (Value::Poly(_) | Value::Num(_))) => {
                let d = self.to_poly(a.clone())?.checked_sub(&self.to_poly(b.clone())?)?;
                d.is_zero()
            }
            (a, b) => return Err(rt(format!("cannot compare {} with {}", a.kind(), b.kind()))),
        })
    }

    fn plan_call(&mut self, name: &str, args: &[Arg]) -> Result<Value> {
        let mut n = None;
        let mut case_a = true;
        let mut nums: BTreeMap<&str, Rational> = BTreeMap::new();
        let mut alphas = None;
        for a in args {
            let key = a
                .name
                .as_deref()
                .ok_or_else(|| rt(format!("{name} takes named arguments only")))?;
            match key {
                "case" => {
                    let s = symbol(&a.value).ok_or_else(|| rt("case must be A or B"))?;
                    case_a = match s.as_str() {
                        "A" | "a" => true,
                        "B" | "b" => false,
                        other => return Err(rt(format!("unknown case '{other}', expected A or B"))),
                    };
                }
                "n" => n = Some(small_int(&self.eval(&a.value)?, "n")?),
                "alphas" if name == "construct" => match self.eval(&a.value)? {
                    Value::List(items) => {
                        alphas = Some(
                            items
                                .into_iter()
                                .map(|v| match v {
                                    Value::Num(q) => Ok(q),
                                    other => Err(rt(format!("alphas must be numbers, found {}", other.kind()))),
                                })
                                .collect::<Result<Vec<_>>>()?,
                        )
                    }
                    other => return Err(rt(format!("alphas must be a list, found {}", other.kind()))),
                },
                "r" | "s" | "codim" | "lambda" | "mu" if name == "construct" => match self.eval(&a.value)? {
                    Value::Num(q) => {
                        nums.insert(key_static(key), q);
                    }
                    other => return Err(rt(format!("{key} must be a number, found {}", other.kind()))),
                },
                other => return Err(rt(format!("{name} takes no argument '{other}'"))),
            }
        }
        let n = n.ok_or_else(|| rt(format!("{name} needs n=")))?;
        if name == "hessian" {
            return hessian_value(case_a, n);
        }
        let mut plan = if case_a {
            ConstructionPlan::type_a(n, alphas.unwrap_or_default())
        } else {
            if alphas.is_some() {
                return Err(rt("alphas apply to case A only"));
            }
            ConstructionPlan::type_b(n)
        };
        if let Some(c) = nums.get("codim") {
            plan = plan.with_codim(small_int(&Value::Num(c.clone()), "codim")?);
        }
        let r = nums.get("r").cloned().unwrap_or_else(|| plan.r.clone());
        let s = nums.get("s").cloned().unwrap_or_else(|| plan.s.clone());
        plan = plan.with_values(r, s);
        let lambda = nums.get("lambda").cloned().unwrap_or_else(|| plan.lambda.clone());
        let mu = nums.get("mu").cloned().unwrap_or_else(|| plan.mu.clone());
        plan = plan.with_shear(lambda, mu);
        plan.validate()?;
        Ok(Value::Plan(plan))
    }
}

fn key_static(key: &str) -> &'static str {
    match key {
        "r" => "r",
        "s" => "s",
        "codim" => "codim",
        "lambda" => "lambda",
        _ => "mu",
    }
}

fn symbol(e: &Expr) -> Option<String> {
    match &e.kind {
        ExprKind::Ident(s) => Some(s.clone()),
        _ => None,
    }
}

fn exponent(q: &Rational, allow_negative: bool) -> Result<i64> {
    if !q.is_integer() {
        return Err(rt(format!("exponent {q} is not an integer")));
    }
    if q.is_negative() && !allow_negative {
        return Err(rt(format!("negative exponent {q}")));
    }
    q.to_integer()
        .to_i64()
        .filter(|k| k.unsigned_abs() <= u32::MAX as u64)
        .ok_or_else(|| rt(format!("exponent {q} too large")))
}

fn small_int(v: &Value, what: &str) -> Result<u32> {
    match v {
        Value::Num(q) if q.is_integer() && !q.is_negative() => q
            .to_integer()
            .to_u32()
            .ok_or_else(|| rt(format!("{what} = {q} too large"))),
        other => Err(rt(format!("{what} must be a non-negative integer, found {other}"))),
    }
}

fn ideal_arg(v: &Value) -> Result<&Ideal<Rational>> {
    match v {
        Value::Ideal(i) => Ok(i),
        other => Err(rt(format!("expected an ideal, found {}", other.kind()))),
    }
}

fn structure_arg(v: &Value) -> Result<&MultipleStructure> {
    match v {
        Value::Structure(s) => Ok(s),
        other => Err(rt(format!("expected a multiple structure, found {}", other.kind()))),
    }
}

fn var_name(v: &Value) -> Result<String> {
    if let Value::Poly(p) = v {
        if let [(m, c)] = p.terms() {
            if c.is_one() && m.iter().sum::<u32>() == 1 {
                let i = m.iter().position(|&e| e == 1).expect("degree one");
                return Ok(p.ring().vars()[i].clone());
            }
        }
    }
    Err(rt(format!("expected a variable, found {v}")))
}

fn checks_json(checks: &[Check]) -> Json {
    let mut map = serde_json::Map::new();
    for c in checks {
        map.insert(c.name.clone(), json!(c.passed));
    }
    Json::Object(map)
}

fn filtrations(s: &MultipleStructure) -> Result<Value> {
    let kinds = [FiltrationKind::BF, FiltrationKind::A, FiltrationKind::M];
    let mut map = serde_json::Map::new();
    let mut all = Vec::new();
    for kind in kinds {
        let f = s.filtration(kind)?;
        let ideals: Vec<String> = f.local.iter().map(|l| l.render()).collect();
        map.insert(
            kind.to_string(),
            json!({ "ideals": ideals, "lengths": f.lengths, "ranks": f.ranks() }),
        );
        all.push(f);
    }
    let mut equal_pairs = Vec::new();
    for a in 0..3 {
        for b in a + 1..3 {
            let (fa, fb) = (&all[a], &all[b]);
            let mut same = fa.lengths == fb.lengths && fa.local.len() == fb.local.len();
            if same {
                for (x, y) in fa.local.iter().zip(&fb.local) {
                    if !x.equals(y)? {
                        same = false;
                        break;
                    }
                }
            }
            if same {
                equal_pairs.push(format!("{}={}", kinds[a], kinds[b]));
            }
        }
    }
    let distinct = equal_pairs.is_empty();
    map.insert("distinct".into(), json!(distinct));
    let detail = if distinct {
        "BF, A and M pairwise distinct".to_string()
    } else {
        format!("coincide: {}", equal_pairs.join(", "))
    };
    Ok(Value::Data(
        Json::Object(map),
        vec![Check::observation("filtrations.distinct", distinct, detail)],
    ))
}

fn hessian_value(case_a: bool, n: u32) -> Result<Value> {
    let (h, reduced, expected) = hessian_identity(case_a, n)?;
    let ok = reduced == expected;
    Ok(Value::Data(
        json!({
            "hessian": h.render(),
            "reduced": reduced.render(),
            "expected": expected.render(),
        }),
        vec![Check::required("hessian.identity", ok, format!("n = {n}"))],
    ))
}

fn examples_call(syms: &[String]) -> Result<Value> {
    let which: Vec<&str> = if syms.is_empty() {
        vec!["all"]
    } else {
        syms.iter().map(String::as_str).collect()
    };
    let mut list = Vec::new();
    for w in which {
        match w {
            "all" => list.extend(all_examples()?),
            "p3" => list.extend(lines_in_p3()?),
            "p4" => {
                list.push(line_in_p4(0)?);
                list.push(line_in_p4(1)?);
            }
            "p6" => list.push(plane_in_p6(0)?),
            other => return Err(rt(format!("unknown example set '{other}', expected all, p3, p4 or p6"))),
        }
    }
    Ok(Value::Report(examples_report(&list)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(src: &str) -> Report {
        run(src, &Config::default()).unwrap()
    }

    #[test]
    fn empty_script() {
        assert!(go("").entries.is_empty());
        assert!(go("# nothing\n").entries.is_empty());
    }

    #[test]
    fn running_example_filtrations_are_distinct() {
        let r = go("ring R = QQ[x,y];\nI = ideal(x, y);\nJ = ideal(x^3, x*y, y^4);\n\
                    S = multstruct(I, J);\nF = filtrations(S);\nassert(equal(length(J), 6));\n\
                    M = J : I;");
        let f = r.entries.iter().find(|e| e.label == "F").unwrap();
        assert_eq!(f.value["BF"]["lengths"], json!([0, 1, 3, 5, 6]));
        assert_eq!(f.value["A"]["lengths"], json!([0, 1, 3, 4, 6]));
        assert_eq!(f.value["M"]["lengths"], json!([0, 1, 2, 4, 6]));
        assert_eq!(f.value["distinct"], json!(true));
        assert!(f.checks[0].passed);
        assert!(r.all_passed());
        let m = r.entries.last().unwrap();
        assert_eq!(m.line, Some(7));
    }

    #[test]
    fn arithmetic() {
        let r = go("ring R = QQ[x,y];\nf = (x + y)^2 - 2*x*y;\ng = f / 2;\nassert(equal(g, x^2/2 + y^2/2));\n\
                    assert(equal(2^-2, 1/4));\nassert(contains(ideal(x, y)^2, f));");
        assert!(r.all_passed(), "{}", r.render_text());
        assert_eq!(r.entries[1].value["polynomial"], json!("x^2 + y^2"));
    }

    #[test]
    fn failed_assert_is_reported() {
        let r = go("ring R = QQ[x];\nassert(contains(ideal(x^2), x));");
        assert!(!r.all_passed());
    }

    #[test]
    fn runtime_errors_name_the_statement() {
        let e = run("ring R = QQ[x];\nI = ideal(x);\nf = I + x;", &Config::default()).unwrap_err();
        let msg = e.to_string();
        assert!(msg.starts_with("line 3: `f = I + x`: "), "{msg}");
    }

    #[test]
    fn bare_plan_runs_the_construction() {
        let r = go("construct(n=3, case=B)");
        assert!(r.all_passed(), "{}", r.render_text());
        assert_eq!(r.entries[0].label, "construct(n=3, case=B)");
        assert_eq!(r.entries[0].value["multiplicity"], json!(6));
        let p = go("P = construct(n=2, case=A);");
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.entries[0].value["plan"]["branch"], json!("A"));
    }

    #[test]
    fn elimination_and_hilbert() {
        let r = go("ring R = QQ[t,x,y] order block(1);\nK = eliminate(ideal(x - t^2, y - t^3), [t]);\n\
                    ring S = QQ[x,y,z,w];\nH = hilbert(ideal(x^2, y^3));");
        assert_eq!(r.entries[1].value["groebner_basis"], json!("ideal(x^3 - y^2)"));
        assert_eq!(r.entries[3].value["polynomial"], json!("6t - 3"));
    }
}
