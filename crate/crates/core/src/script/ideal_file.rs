//! The `key: value` file read by `mstruct check`:
//!
//! ```text
//! # the running example
//! ring: x, y
//! order: grevlex
//! support: x, y
//! ideal: x^3, x*y, y^4
//! ```
//!
//! `order` defaults to the configured one, `support` to all variables.

use serde_json::json;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::multistruct::MultipleStructure;
use crate::poly::{MonomialOrder, PolyRing};
use crate::report::{Check, Report};

use super::eval::Config;

#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub order: Option<MonomialOrder>,
    pub support: Option<Vec<String>>,
    pub ideal: Vec<String>,
}

fn list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

impl IdealFile {
    pub fn parse(src: &str) -> Result<Self> {
        let (mut vars, mut order, mut support, mut ideal) = (None, None, None, None);
        for (k, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse {
                line: k + 1,
                col: 1,
                msg,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| bad("expected 'key: value'".into()))?;
            let slot = match key.trim() {
                "ring" => &mut vars,
                "support" => &mut support,
                "ideal" => &mut ideal,
                "order" => {
                    let o: MonomialOrder = value.trim().parse().map_err(|e: Error| bad(e.to_string()))?;
                    if order.replace(o).is_some() {
                        return Err(bad("duplicate key 'order'".into()));
                    }
                    continue;
                }
                other => return Err(bad(format!("unknown key '{other}'"))),
            };
            if slot.replace(list(value)).is_some() {
                return Err(bad(format!("duplicate key '{}'", key.trim())));
            }
        }
        let missing = |k: &str| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("missing key '{k}'"),
        };
        Ok(Self {
            vars: vars.ok_or_else(|| missing("ring"))?,
            order,
            support,
            ideal: ideal.ok_or_else(|| missing("ideal"))?,
        })
    }
}

/// Certifies the structure described by an ideal file: its type, the
/// structural properties, and the Gorenstein checks, which are required
/// only when the structure is a local complete intersection.
pub fn check_ideal_file(src: &str, config: &Config) -> Result<Report> {
    let f = IdealFile::parse(src)?;
    let ring = PolyRing::new(&f.vars, f.order.unwrap_or(config.order))?;
    let support = f.support.clone().unwrap_or_else(|| f.vars.clone());
    let i = Ideal::parse(&ring, &support)?;
    let j = Ideal::parse(&ring, &f.ideal)?;
    let s = MultipleStructure::infer(i, j, config.chart.as_deref())?;
    let t = s.structure_type()?;
    let gens = s.localize(s.structure_ideal())?.min_gens()?;
    let lci = gens == support.len();
    let mut gorenstein = vec![Check::observation(
        "lci",
        lci,
        format!("{gens} local generators, codimension {}", support.len()),
    )];
    for c in s.check_gorenstein()? {
        gorenstein.push(if lci { c } else { Check::observation(c.name, c.passed, c.detail) });
    }
    let mut report = Report::new();
    report.push("structure", None, s.summary()?, s.check_properties()?);
    report.push(
        "type",
        None,
        json!({ "m": t.m, "multiplicity": t.multiplicity, "m_ranks": t.m_ranks, "a_ranks": t.a_ranks, "bf_ranks": t.b_ranks }),
        gorenstein,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example_file() {
        let src = "# example\nring: x, y\nsupport: x, y\nideal: x^3, x*y, y^4\n";
        let f = IdealFile::parse(src).unwrap();
        assert_eq!(f.ideal.len(), 3);
        let r = check_ideal_file(src, &Config::default()).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
        assert_eq!(r.entries[1].value["m"], 3);
        let lci = &r.entries[1].checks[0];
        assert!(!lci.passed && !lci.required);
        let ci = check_ideal_file("ring: x, y\nideal: x^2, y^3\n", &Config::default()).unwrap();
        assert!(ci.entries[1].checks.iter().all(|c| c.required == (c.name != "lci") || c.passed));
        assert!(ci.all_passed(), "{}", ci.render_text());
    }

    #[test]
    fn file_errors() {
        assert!(matches!(
            IdealFile::parse("ring: x\nfoo: 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(IdealFile::parse("ring: x").is_err());
    }
}
