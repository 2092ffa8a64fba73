//! Browser bindings: run a script, recognize a normal form, run the
//! construction. Every entry point returns a JSON string
//! `{"ok": bool, "text": …, "report": …}` so the page needs no glue types.

use mstruct::construct::{recognize_normal_form, run_construction, ConstructionPlan};
use mstruct::report::Report;
use mstruct::script::{self, Config};
use mstruct::{Ideal, MonomialOrder, PolyRing, Rational};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn respond(result: Result<Report, String>) -> String {
    match result {
        Ok(r) => json!({
            "ok": r.all_passed(),
            "text": r.render_text(),
            "report": serde_json::to_value(&r).unwrap_or_default(),
        }),
        Err(e) => json!({ "ok": false, "text": format!("error: {e}"), "report": null }),
    }
    .to_string()
}

fn split(list: &str) -> Vec<String> {
    list.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn script_report(src: &str) -> Result<Report, String> {
    script::run(src, &Config::default()).map_err(|e| e.to_string())
}

pub fn recognize_report(vars: &str, gens: &str) -> Result<Report, String> {
    let ring = PolyRing::new(&split(vars), MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
    let ideal = Ideal::parse(&ring, &split(gens)).map_err(|e| e.to_string())?;
    let rec = recognize_normal_form(&ideal).map_err(|e| e.to_string())?;
    let mut report = Report::new();
    report.push(ideal.render(), None, rec.summary(), vec![]);
    Ok(report)
}

pub fn construction_report(n: u32, case: &str, alphas: &str) -> Result<Report, String> {
    let plan = match case.trim() {
        "A" | "a" => {
            let alphas = split(alphas)
                .iter()
                .map(|a| a.parse::<Rational>().map_err(|_| format!("not a rational number: '{a}'")))
                .collect::<Result<Vec<_>, _>>()?;
            ConstructionPlan::type_a(n, alphas)
        }
        "B" | "b" => ConstructionPlan::type_b(n),
        other => return Err(format!("unknown case '{other}', expected A or B")),
    };
    let result = run_construction(&plan).map_err(|e| e.to_string())?;
    Ok(result.report(&format!("construct/{}/n{n}", case.trim().to_uppercase())))
}

#[wasm_bindgen]
pub fn run_script(src: &str) -> String {
    respond(script_report(src))
}

/// `vars` and `gens` are comma-separated, e.g. `"x,y"` and `"x^3+y^3, x*y"`.
#[wasm_bindgen]
pub fn recognize(vars: &str, gens: &str) -> String {
    respond(recognize_report(vars, gens))
}

#[wasm_bindgen]
pub fn construct(n: u32, case: &str, alphas: &str) -> String {
    respond(construction_report(n, case, alphas))
}
