//! Multiple structures `Y ⊇ X` given by ideals `J ⊆ I`: nilpotency index,
//! the three canonical filtrations, the type, and the property checks.
//!
//! Lengths and ranks are always computed in a local model. For a point
//! support that is the ring itself; for a linear support the parameter
//! variables are inverted, giving a polynomial ring in the support variables
//! over a rational function field.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coeff::{Field, ParamPoly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::{artinian_length, Length};
use crate::poly::{CoefficientDomain, MonomialOrder, PolyRing, Polynomial};
use crate::report::Check;

/// Largest nilpotency index searched for.
pub const MAX_NILPOTENCY: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SupportKind {
    /// `I` is a maximal ideal; everything is Artinian already.
    Point,
    /// `I` is generated by the `support` variables; `params` are the
    /// remaining coordinates, with `chart` (if any) set to 1.
    Linear {
        support: Vec<String>,
        params: Vec<String>,
        chart: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiltrationKind {
    /// `I^ℓ + J` with embedded components removed.
    BF,
    /// `J : (J : I^ℓ)`.
    A,
    /// `J : I^(m+1-ℓ)`.
    M,
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationKind::BF => "BF",
            FiltrationKind::A => "A",
            FiltrationKind::M => "M",
        })
    }
}

/// An ideal of the local model.
#[derive(Clone, Debug)]
pub enum LocalIdeal {
    Rational(Ideal<Rational>),
    Generic(Ideal<RatFunc>),
}

macro_rules! on_local {
    ($e:expr, $i:ident => $body:expr) => {
        match $e {
            LocalIdeal::Rational($i) => $body,
            LocalIdeal::Generic($i) => $body,
        }
    };
}

fn local_mismatch() -> Error {
    Error::Runtime("local ideals from different models".into())
}

fn product_witness<F: Field>(
    a: &Ideal<F>,
    b: &Ideal<F>,
    target: &Ideal<F>,
) -> Result<Option<(String, String)>> {
    let gb = target.gb();
    for f in a.gens() {
        for g in b.gens() {
            if !gb.contains(&f.checked_mul(g)?)? {
                return Ok(Some((f.render(), g.render())));
            }
        }
    }
    Ok(None)
}

impl LocalIdeal {
    pub fn length(&self) -> Length {
        on_local!(self, i => artinian_length(i))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        on_local!(self, i => i.ring())
    }

    pub fn render(&self) -> String {
        on_local!(self, i => i.reduced().render())
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (LocalIdeal::Rational(a), LocalIdeal::Rational(b)) => a.equals(b),
            (LocalIdeal::Generic(a), LocalIdeal::Generic(b)) => a.equals(b),
            _ => Err(local_mismatch()),
        }
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (LocalIdeal::Rational(a), LocalIdeal::Rational(b)) => a.contains_ideal(b),
            (LocalIdeal::Generic(a), LocalIdeal::Generic(b)) => a.contains_ideal(b),
            _ => Err(local_mismatch()),
        }
    }

    /// Generators `f` of `a` and `g` of `b` with `f·g ∉ target`, if any.
    pub fn product_witness(a: &Self, b: &Self, target: &Self) -> Result<Option<(String, String)>> {
        match (a, b, target) {
            (LocalIdeal::Rational(a), LocalIdeal::Rational(b), LocalIdeal::Rational(t)) => {
                product_witness(a, b, t)
            }
            (LocalIdeal::Generic(a), LocalIdeal::Generic(b), LocalIdeal::Generic(t)) => {
                product_witness(a, b, t)
            }
            _ => Err(local_mismatch()),
        }
    }

    /// Minimal number of generators at the origin of the local model.
    pub fn min_gens(&self) -> Result<usize> {
        on_local!(self, i => {
            let vars: Vec<String> = i.ring().vars().to_vec();
            crate::invariants::local_min_gens(i, &[], &vars, None)
        })
    }
}

/// Passage from the global ring to the local model at the generic point of
/// the support.
#[derive(Clone, Debug)]
pub struct GenericPointModel {
    source: Arc<PolyRing>,
    target: Option<Arc<PolyRing>>,
    support: Vec<usize>,
    params: Vec<usize>,
    chart: Option<usize>,
}

impl GenericPointModel {
    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        Self {
            source: ring.clone(),
            target: None,
            support: (0..ring.nvars()).collect(),
            params: vec![],
            chart: None,
        }
    }

    pub fn new(
        ring: &Arc<PolyRing>,
        support: &[String],
        params: &[String],
        chart: Option<&str>,
    ) -> Result<Self> {
        if !matches!(ring.domain(), CoefficientDomain::Rationals) {
            return Err(Error::Unsupported(
                "localization of rings with parameter coefficients".into(),
            ));
        }
        let support_idx = support
            .iter()
            .map(|v| ring.var_index(v))
            .collect::<Result<Vec<_>>>()?;
        let chart_idx = chart.map(|c| ring.var_index(c)).transpose()?;
        if let Some(c) = chart_idx {
            if support_idx.contains(&c) {
                return Err(Error::InvalidPlan(format!(
                    "chart variable {} is a support variable",
                    ring.vars()[c]
                )));
            }
        }
        let param_idx: Vec<usize> = params
            .iter()
            .map(|v| ring.var_index(v))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|i| Some(*i) != chart_idx)
            .collect();
        let names: Vec<String> = param_idx.iter().map(|&i| ring.vars()[i].clone()).collect();
        let target = PolyRing::with_domain(
            support,
            MonomialOrder::Grevlex,
            CoefficientDomain::FractionField { params: names },
        )?;
        Ok(Self {
            source: ring.clone(),
            target: Some(target),
            support: support_idx,
            params: param_idx,
            chart: chart_idx,
        })
    }

    /// The localized ring; `None` when the model is the identity.
    pub fn ring(&self) -> Option<&Arc<PolyRing>> {
        self.target.as_ref()
    }

    pub fn localize_poly(&self, f: &Polynomial<Rational>) -> Result<Polynomial<RatFunc>> {
        let target = self
            .target
            .as_ref()
            .ok_or_else(|| Error::Unsupported("identity model has no fraction field".into()))?;
        let terms = f.terms().iter().map(|(m, c)| {
            let e: Vec<u32> = self.support.iter().map(|&i| m[i]).collect();
            let p: Vec<u32> = self.params.iter().map(|&i| m[i]).collect();
            (
                e,
                RatFunc::from_poly(ParamPoly::from_terms([(p, c.clone())])),
            )
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn localize(&self, ideal: &Ideal<Rational>) -> Result<LocalIdeal> {
        if ideal.ring().vars() != self.source.vars() {
            return Err(Error::RingMismatch {
                left: ideal.ring().to_string(),
                right: self.source.to_string(),
            });
        }
        match &self.target {
            None => Ok(LocalIdeal::Rational(ideal.clone())),
            Some(t) => {
                let gens = ideal
                    .gens()
                    .iter()
                    .map(|g| self.localize_poly(g))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LocalIdeal::Generic(Ideal::new(t, gens)?))
            }
        }
    }

    pub fn chart(&self) -> Option<&str> {
        self.chart.map(|c| self.source.vars()[c].as_str())
    }
}

/// A filtration `F_0 ⊇ F_1 ⊇ … ⊇ F_(m+1)`.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub kind: FiltrationKind,
    /// Global ideals. For BF on a linear support these are `I^ℓ + J`, which
    /// agree with the filtration only after localization.
    pub global: Vec<Ideal<Rational>>,
    pub local: Vec<LocalIdeal>,
    /// `len(R_loc / F_ℓ)` for each ℓ.
    pub lengths: Vec<usize>,
}

impl Filtration {
    /// `rank F_ℓ/F_(ℓ+1) = len_(ℓ+1) - len_ℓ` for ℓ = 0..=m.
    pub fn ranks(&self) -> Vec<usize> {
        self.lengths.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureType {
    pub m: u32,
    pub multiplicity: usize,
    pub m_ranks: Vec<usize>,
    pub a_ranks: Vec<usize>,
    pub b_ranks: Vec<usize>,
    pub m_lengths: Vec<usize>,
    pub a_lengths: Vec<usize>,
    pub b_lengths: Vec<usize>,
}

/// The pair `(I, J)` with `J ⊆ I` and `I^k ⊆ J` for some `k`.
pub struct MultipleStructure {
    ring: Arc<PolyRing>,
    i: Ideal<Rational>,
    j: Ideal<Rational>,
    support: SupportKind,
    model: GenericPointModel,
    m: OnceLock<u32>,
    filtrations: Mutex<HashMap<FiltrationKind, Arc<Filtration>>>,
}

impl fmt::Debug for MultipleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultipleStructure")
            .field("ring", &self.ring.to_string())
            .field("i", &self.i)
            .field("j", &self.j)
            .field("support", &self.support)
            .finish()
    }
}

impl Clone for MultipleStructure {
    fn clone(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            i: self.i.clone(),
            j: self.j.clone(),
            support: self.support.clone(),
            model: self.model.clone(),
            m: self.m.clone(),
            filtrations: Mutex::new(self.filtrations.lock().unwrap().clone()),
        }
    }
}

/// Indices of the variables generating `i`, if it is generated by variables.
fn variable_generators(i: &Ideal<Rational>) -> Option<Vec<usize>> {
    let gb = i.gb();
    let mut out = Vec::new();
    for g in gb.elements() {
        if g.len() != 1 || g.total_degree() != Some(1) {
            return None;
        }
        out.push(g.support()[0]);
    }
    out.sort_unstable();
    Some(out)
}

impl MultipleStructure {
    pub fn new(i: Ideal<Rational>, j: Ideal<Rational>, support: SupportKind) -> Result<Self> {
        let ring = i.ring().clone();
        if ring.vars() != j.ring().vars() {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: j.ring().to_string(),
            });
        }
        let j = j.with_order(ring.order());
        if !i.contains_ideal(&j)? {
            return Err(Error::NotMultipleStructure(
                "J is not contained in I".into(),
            ));
        }
        if i.is_unit() {
            return Err(Error::NotMultipleStructure("I is the unit ideal".into()));
        }
        for g in i.gens() {
            let mut p = g.clone();
            let mut k = 1;
            while !j.contains(&p)? {
                k += 1;
                if k > MAX_NILPOTENCY + 1 {
                    return Err(Error::NotMultipleStructure(format!(
                        "no power of {} up to {} lies in J",
                        g.render(),
                        MAX_NILPOTENCY + 1
                    )));
                }
                p = &p * g;
            }
        }
        let model = match &support {
            SupportKind::Point => {
                if artinian_length(&j) == Length::Infinite {
                    return Err(Error::NotMultipleStructure(
                        "point support but R/J is not Artinian".into(),
                    ));
                }
                GenericPointModel::identity(&ring)
            }
            SupportKind::Linear {
                support,
                params,
                chart,
            } => {
                let idx = support
                    .iter()
                    .map(|v| ring.var_index(v))
                    .collect::<Result<Vec<_>>>()?;
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                if variable_generators(&i) != Some(sorted) {
                    return Err(Error::NotMultipleStructure(
                        "linear support requires I to be generated by the support variables".into(),
                    ));
                }
                GenericPointModel::new(&ring, support, params, chart.as_deref())?
            }
        };
        Ok(Self {
            ring,
            i,
            j,
            support,
            model,
            m: OnceLock::new(),
            filtrations: Mutex::new(HashMap::new()),
        })
    }

    /// Guesses the support: if `I` is generated by all variables it is the
    /// origin; if by some of them, a linear space with the others as
    /// parameters; otherwise a point when `R/I` is Artinian.
    pub fn infer(i: Ideal<Rational>, j: Ideal<Rational>, chart: Option<&str>) -> Result<Self> {
        let ring = i.ring().clone();
        let support = match variable_generators(&i) {
            Some(vars) if vars.len() < ring.nvars() => {
                let support: Vec<String> = vars.iter().map(|&v| ring.vars()[v].clone()).collect();
                let params: Vec<String> = (0..ring.nvars())
                    .filter(|v| !vars.contains(v))
                    .map(|v| ring.vars()[v].clone())
                    .collect();
                if let Some(c) = chart {
                    if !params.iter().any(|p| p == c) {
                        return Err(Error::UnknownVariable(c.to_string()));
                    }
                }
                SupportKind::Linear {
                    support,
                    params,
                    chart: chart.map(str::to_string),
                }
            }
            Some(_) => SupportKind::Point,
            None => {
                if artinian_length(&i) == Length::Infinite {
                    return Err(Error::Unsupported(
                        "support must be a point or generated by a subset of the variables".into(),
                    ));
                }
                SupportKind::Point
            }
        };
        Self::new(i, j, support)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn support_ideal(&self) -> &Ideal<Rational> {
        &self.i
    }

    pub fn structure_ideal(&self) -> &Ideal<Rational> {
        &self.j
    }

    pub fn support_kind(&self) -> &SupportKind {
        &self.support
    }

    pub fn model(&self) -> &GenericPointModel {
        &self.model
    }

    pub fn localize(&self, ideal: &Ideal<Rational>) -> Result<LocalIdeal> {
        self.model.localize(ideal)
    }

    /// The `m` with `I^m ⊄ J` and `I^(m+1) ⊆ J`.
    pub fn nilpotency_index(&self) -> Result<u32> {
        if let Some(m) = self.m.get() {
            return Ok(*m);
        }
        let mut power = self.i.clone();
        let mut m = 0;
        while !self.j.contains_ideal(&power)? {
            m += 1;
            if m > MAX_NILPOTENCY {
                return Err(Error::NotMultipleStructure(format!(
                    "nilpotency index exceeds {MAX_NILPOTENCY}"
                )));
            }
            power = power.product(&self.i)?;
        }
        Ok(*self.m.get_or_init(|| m))
    }

    pub fn multiplicity(&self) -> Result<usize> {
        self.localize(&self.j)?.length().finite()
    }

    pub fn filtration(&self, kind: FiltrationKind) -> Result<Arc<Filtration>> {
        if let Some(f) = self.filtrations.lock().unwrap().get(&kind) {
            return Ok(f.clone());
        }
        let m = self.nilpotency_index()?;
        let mut powers = vec![Ideal::unit(&self.ring)];
        for k in 1..=m + 1 {
            let next = powers[k as usize - 1].product(&self.i)?;
            powers.push(next);
        }
        let mut global = Vec::with_capacity(m as usize + 2);
        for l in 0..=m + 1 {
            let ideal = match kind {
                FiltrationKind::BF => powers[l as usize].sum(&self.j)?.reduced(),
                FiltrationKind::M => self.j.quotient(&powers[(m + 1 - l) as usize])?,
                FiltrationKind::A => {
                    let inner = self.j.quotient(&powers[l as usize])?;
                    self.j.quotient(&inner)?
                }
            };
            global.push(ideal);
        }
        let local = global
            .iter()
            .map(|g| self.localize(g))
            .collect::<Result<Vec<_>>>()?;
        let lengths = local
            .iter()
            .map(|l| l.length().finite())
            .collect::<Result<Vec<_>>>()?;
        let f = Arc::new(Filtration {
            kind,
            global,
            local,
            lengths,
        });
        self.filtrations.lock().unwrap().insert(kind, f.clone());
        Ok(f)
    }

    pub fn structure_type(&self) -> Result<StructureType> {
        let m = self.nilpotency_index()?;
        let fm = self.filtration(FiltrationKind::M)?;
        let fa = self.filtration(FiltrationKind::A)?;
        let fb = self.filtration(FiltrationKind::BF)?;
        Ok(StructureType {
            m,
            multiplicity: self.multiplicity()?,
            m_ranks: fm.ranks(),
            a_ranks: fa.ranks(),
            b_ranks: fb.ranks(),
            m_lengths: fm.lengths.clone(),
            a_lengths: fa.lengths.clone(),
            b_lengths: fb.lengths.clone(),
        })
    }

    /// Required checks (chains, endpoints, non-zero multiplications, length
    /// additivity) and observations (the rank symmetries expected of
    /// Gorenstein structures).
    pub fn check_properties(&self) -> Result<Vec<Check>> {
        let m = self.nilpotency_index()?;
        let fm = self.filtration(FiltrationKind::M)?;
        let fa = self.filtration(FiltrationKind::A)?;
        let fb = self.filtration(FiltrationKind::BF)?;
        let ty = self.structure_type()?;
        let mut out = Vec::new();

        for l in 0..=(m + 1) as usize {
            let bf_in_a = fa.global[l].contains_ideal(&fb.global[l])?;
            let a_in_m = fm.global[l].contains_ideal(&fa.global[l])?;
            out.push(Check::required(
                format!("chain[{l}]"),
                bf_in_a && a_in_m,
                format!("I^{l}+J ⊆ J_{l}: {bf_in_a}; J_{l} ⊆ I_{l}: {a_in_m}"),
            ));
        }
        for f in [&fm, &fa, &fb] {
            let descending = (0..f.local.len() - 1)
                .map(|l| f.local[l].contains_ideal(&f.local[l + 1]))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
            out.push(Check::required(
                format!("{}.descending", f.kind),
                descending,
                format!("lengths {:?}", f.lengths),
            ));
        }
        let top = (m + 1) as usize;
        let m_end = fm.global[top].equals(&self.j)?;
        let a_end = fa.global[top].equals(&self.j)?;
        out.push(Check::required(
            "ends",
            m_end && a_end,
            format!("I_{top} = J: {m_end}; J_{top} = J: {a_end}"),
        ));

        for l1 in 0..=m as usize {
            for l2 in 0..=(m as usize - l1) {
                let target = l1 + l2 + 1;
                let aa =
                    LocalIdeal::product_witness(&fa.local[l1], &fa.local[l2], &fa.local[target])?;
                out.push(Check::required(
                    format!("A{l1}*A{l2}"),
                    aa.is_some(),
                    match aa {
                        Some((f, g)) => format!("({f})*({g}) ∉ J_{target}"),
                        None => format!("J_{l1}·J_{l2} ⊆ J_{target}"),
                    },
                ));
                let am =
                    LocalIdeal::product_witness(&fa.local[l1], &fm.local[l2], &fm.local[target])?;
                out.push(Check::required(
                    format!("A{l1}*M{l2}"),
                    am.is_some(),
                    match am {
                        Some((f, g)) => format!("({f})*({g}) ∉ I_{target}"),
                        None => format!("J_{l1}·I_{l2} ⊆ I_{target}"),
                    },
                ));
            }
        }

        for (name, ranks) in [("M", &ty.m_ranks), ("A", &ty.a_ranks)] {
            let total: usize = ranks.iter().sum();
            out.push(Check::required(
                format!("{name}.additivity"),
                total == ty.multiplicity,
                format!("sum of ranks {total}, multiplicity {}", ty.multiplicity),
            ));
        }

        let distinct = !(fm.local_equal(&fa)? || fa.local_equal(&fb)? || fm.local_equal(&fb)?);
        out.push(Check::observation(
            "filtrations.distinct",
            distinct,
            format!(
                "M {:?}, A {:?}, BF {:?}",
                ty.m_lengths, ty.a_lengths, ty.b_lengths
            ),
        ));
        out.extend(self.gorenstein_observations(&ty, &fm, &fa, false)?);
        Ok(out)
    }

    /// Rank symmetries and the coincidence of the three
    /// filtrations, as required checks. For structures known to be Gorenstein
    /// of free type.
    pub fn check_gorenstein(&self) -> Result<Vec<Check>> {
        let ty = self.structure_type()?;
        let fm = self.filtration(FiltrationKind::M)?;
        let fa = self.filtration(FiltrationKind::A)?;
        let fb = self.filtration(FiltrationKind::BF)?;
        let mut out = self.gorenstein_observations(&ty, &fm, &fa, true)?;
        let same = fm.local_equal(&fa)? && fa.local_equal(&fb)?;
        out.push(Check::required(
            "filtrations.coincide",
            same,
            format!(
                "M {:?}, A {:?}, BF {:?}",
                ty.m_lengths, ty.a_lengths, ty.b_lengths
            ),
        ));
        Ok(out)
    }

    fn gorenstein_observations(
        &self,
        ty: &StructureType,
        fm: &Filtration,
        fa: &Filtration,
        required: bool,
    ) -> Result<Vec<Check>> {
        let make = if required {
            Check::required
        } else {
            Check::observation
        };
        let m = ty.m as usize;
        let reversed: Vec<usize> = ty.m_ranks.iter().rev().cloned().collect();
        let mut out = vec![make(
            "ranks.reversed",
            ty.a_ranks == reversed,
            format!("A ranks {:?}, reversed M ranks {:?}", ty.a_ranks, reversed),
        )];
        let mut ok = true;
        let mut notes = Vec::new();
        for l in 0..=m {
            let equal =
                fa.local[l].equals(&fm.local[l])? && fa.local[l + 1].equals(&fm.local[l + 1])?;
            let sym = ty.a_ranks[l] == ty.a_ranks[m - l];
            if equal != sym {
                ok = false;
                notes.push(format!("ℓ={l}: A=M {equal}, symmetric rank {sym}"));
            }
        }
        out.push(make(
            "ranks.equal_where_symmetric",
            ok,
            if ok {
                "A_ℓ = M_ℓ exactly where rank A_ℓ = rank A_(m-ℓ)".to_string()
            } else {
                notes.join("; ")
            },
        ));
        Ok(out)
    }

    /// Machine-readable summary of the structure and its filtrations.
    pub fn summary(&self) -> Result<Value> {
        let ty = self.structure_type()?;
        let mut filts = serde_json::Map::new();
        for kind in [FiltrationKind::BF, FiltrationKind::A, FiltrationKind::M] {
            let f = self.filtration(kind)?;
            let ideals: Vec<String> = if kind == FiltrationKind::BF && self.model.ring().is_some() {
                f.local.iter().map(|l| l.render()).collect()
            } else {
                f.global.iter().map(|g| g.reduced().render()).collect()
            };
            filts.insert(
                kind.to_string(),
                json!({ "ideals": ideals, "lengths": f.lengths, "ranks": f.ranks() }),
            );
        }
        Ok(json!({
            "ring": self.ring.to_string(),
            "I": self.i.reduced().render(),
            "J": self.j.reduced().render(),
            "support": match &self.support {
                SupportKind::Point => json!("point"),
                SupportKind::Linear { support, params, chart } =>
                    json!({"support": support, "params": params, "chart": chart}),
            },
            "m": ty.m,
            "multiplicity": ty.multiplicity,
            "filtrations": Value::Object(filts),
        }))
    }
}

impl Filtration {
    fn local_equal(&self, other: &Filtration) -> Result<bool> {
        for (a, b) in self.local.iter().zip(&other.local) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure(vars: &[&str], i: &[&str], j: &[&str]) -> MultipleStructure {
        let r = PolyRing::new(vars, MonomialOrder::Grevlex).unwrap();
        MultipleStructure::infer(
            Ideal::parse(&r, i).unwrap(),
            Ideal::parse(&r, j).unwrap(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn nilpotency_indices() {
        assert_eq!(
            structure(&["x", "y"], &["x", "y"], &["x^3", "x*y", "y^4"])
                .nilpotency_index()
                .unwrap(),
            3
        );
        assert_eq!(
            structure(&["x", "y"], &["x", "y"], &["x^2", "x*y", "y^2"])
                .nilpotency_index()
                .unwrap(),
            1
        );
        assert_eq!(
            structure(&["x", "y"], &["x", "y"], &["x^2", "y^2"])
                .nilpotency_index()
                .unwrap(),
            2
        );
    }

    #[test]
    fn running_example_type() {
        let s = structure(&["x", "y"], &["x", "y"], &["x^3", "x*y", "y^4"]);
        let t = s.structure_type().unwrap();
        assert_eq!(t.m_ranks, vec![1, 1, 2, 2]);
        assert_eq!(t.a_ranks, vec![1, 2, 1, 2]);
        assert_eq!(t.b_ranks, vec![1, 2, 2, 1]);
        let checks = s.check_properties().unwrap();
        assert!(checks.iter().all(Check::ok), "{checks:#?}");
        let sym = checks.iter().find(|c| c.name == "ranks.reversed").unwrap();
        assert!(!sym.passed);
    }

    #[test]
    fn complete_intersection_is_symmetric() {
        let s = structure(&["x", "y"], &["x", "y"], &["x^2", "y^2"]);
        assert_eq!(s.structure_type().unwrap().m_ranks, vec![1, 2, 1]);
        assert!(s.check_gorenstein().unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn line_in_projective_space() {
        let s = structure(&["x", "y", "u", "v"], &["x", "y"], &["x^2", "y^2"]);
        assert!(matches!(s.support_kind(), SupportKind::Linear { .. }));
        assert_eq!(s.multiplicity().unwrap(), 4);
        assert_eq!(s.structure_type().unwrap().m_lengths, vec![0, 1, 3, 4]);
    }

    #[test]
    fn rejects_non_structures() {
        let r = PolyRing::new(&["x", "y"], MonomialOrder::Grevlex).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let j = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(matches!(
            MultipleStructure::infer(i.clone(), j, None),
            Err(Error::NotMultipleStructure(_))
        ));
        let j = Ideal::parse(&r, &["x^2", "y + 1"]).unwrap();
        assert!(MultipleStructure::infer(i, j, None).is_err());
    }
}
