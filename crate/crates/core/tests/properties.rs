mod common;

use common::*;
use mstruct::construct::{recognize_normal_form, run_construction, ConstructionPlan, NormalForm};
use mstruct::script::{self, parse_unchecked, Arg, BinOp, Config, Expr, ExprKind, Pos};
use mstruct::{Ideal, QPoly, Rational, RingMap};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_q() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn plan() -> impl Strategy<Value = ConstructionPlan> {
    prop_oneof![
        (2u32..=6)
            .prop_flat_map(|n| (Just(n), prop::collection::vec(small_q(), (n - 2) as usize)))
            .prop_map(|(n, alphas)| ConstructionPlan::type_a(n, alphas)),
        (2u32..=6).prop_map(ConstructionPlan::type_b),
    ]
}

fn invertible(entries: &[i64; 4]) -> bool {
    entries[0] * entries[3] - entries[1] * entries[2] != 0
}

fn linear_change(r: &std::sync::Arc<mstruct::PolyRing>, e: [i64; 4]) -> RingMap<Rational> {
    let x = QPoly::var(r, 0);
    let y = QPoly::var(r, 1);
    let img = |a: i64, b: i64| &x.scale(&q(a)) + &y.scale(&q(b));
    RingMap::new(r, r, vec![img(e[0], e[1]), img(e[2], e[3])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn construction_lands_on_expected_form(plan in plan()) {
        let chain = run_construction(&plan).unwrap();
        prop_assert!(chain.passed(), "{}", chain.report("chain").render_text());
        let rec = recognize_normal_form(chain.final_ideal()).unwrap();
        prop_assert_eq!(rec.form, plan.expected_form());
    }

    #[test]
    fn recognition_ignores_linear_changes(
        n in 2u32..=5,
        b in any::<bool>(),
        a in small_q(),
        e in prop::array::uniform4(-2i64..=2).prop_filter("invertible", invertible),
    ) {
        let r = ring(&["x", "y"]);
        // α₂ stays zero: a split tangent quadric is the second family
        let form = if b || n < 4 {
            NormalForm::TypeB { n }
        } else {
            let mut alphas = vec![Rational::from_integer(0.into()); (n - 2) as usize];
            alphas[n as usize - 3] = a;
            NormalForm::TypeA { n, alphas }
        };
        let j = form.ideal(&r).unwrap();
        let before = recognize_normal_form(&j).unwrap();
        let after = recognize_normal_form(&j.map(&linear_change(&r, e)).unwrap()).unwrap();
        // for n = 2 both families are the same pencil of quadrics
        if n > 2 {
            prop_assert_eq!(before.form.family(), after.form.family());
        }
        prop_assert_eq!(before.form.n(), after.form.n());
        prop_assert_eq!(before.length, after.length);
        prop_assert_eq!(before.min_gens, after.min_gens);
    }

    #[test]
    fn colon_identities(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(&["x", "y"]);
        let gens = |rng: &mut ChaCha8Rng| {
            (0..2).map(|k| random_form(rng, &r, 2 + k, 2)).collect::<Vec<_>>()
        };
        let i = Ideal::new(&r, gens(&mut rng)).unwrap();
        let j = Ideal::new(&r, gens(&mut rng)).unwrap();
        let k = Ideal::new(&r, gens(&mut rng)).unwrap();
        let ij = i.quotient(&j).unwrap();
        prop_assert!(ij.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&j.product(&ij).unwrap()).unwrap());
        let lhs = ij.quotient(&k).unwrap();
        let rhs = i.quotient(&j.product(&k).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        let lhs = i.quotient(&j.sum(&k).unwrap()).unwrap();
        let rhs = ij.intersect(&i.quotient(&k).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        let sat = i.saturate(&j).unwrap();
        prop_assert!(sat.contains_ideal(&ij).unwrap());
        prop_assert!(sat.saturate(&j).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn reports_are_deterministic(plan in plan()) {
        let a = run_construction(&plan).unwrap().report("c").to_json();
        let b = run_construction(&plan).unwrap().report("c").to_json();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn script_reports_are_deterministic() {
    let src = "ring R = QQ[x,y];\nI = ideal(x, y);\nJ = ideal(x^3, x*y, y^4);\nS = multstruct(I, J);\nfiltrations(S);\nchain(construct(n=3, case=B));\n";
    let a = script::run(src, &Config::default()).unwrap().to_json();
    let b = script::run(src, &Config::default()).unwrap().to_json();
    assert_eq!(a, b);
}

fn expr(kind: ExprKind) -> Expr {
    Expr { kind, pos: Pos::default() }
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..100).prop_map(|n| expr(ExprKind::Int(n.to_string()))),
        "[a-e][0-9]?".prop_map(|s| expr(ExprKind::Ident(s))),
    ];
    leaf.prop_recursive(4, 32, 4, |inner| {
        let op = prop_oneof![
            Just(BinOp::Colon),
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
            Just(BinOp::Pow),
        ];
        prop_oneof![
            inner.clone().prop_map(|e| expr(ExprKind::Neg(Box::new(e)))),
            (op, inner.clone(), inner.clone())
                .prop_map(|(op, l, r)| expr(ExprKind::Binary(op, Box::new(l), Box::new(r)))),
            (
                "[f-h]",
                prop::collection::vec((prop::option::of("[p-t]"), inner.clone()), 0..3)
            )
                .prop_map(|(name, args)| expr(ExprKind::Call {
                    name,
                    args: args.into_iter().map(|(name, value)| Arg { name, value }).collect(),
                })),
            prop::collection::vec(inner, 0..3).prop_map(|items| expr(ExprKind::List(items))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_scripts_parse_back(exprs in prop::collection::vec(arb_expr(), 1..4)) {
        let src: String = exprs
            .iter()
            .enumerate()
            .map(|(k, e)| if k % 2 == 0 { format!("v{k} = {e};\n") } else { format!("{e};\n") })
            .collect();
        let first = parse_unchecked(&src).unwrap();
        let printed = first.to_string();
        let second = parse_unchecked(&printed).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(printed, second.to_string());
        for (stmt, e) in first.statements.iter().zip(&exprs) {
            let parsed = match &stmt.kind {
                script::StmtKind::Assign { expr, .. } | script::StmtKind::Expr(expr) => expr,
                script::StmtKind::Ring { .. } => unreachable!(),
            };
            prop_assert_eq!(parsed, e);
        }
    }
}

#[test]
fn ring_statements_round_trip() {
    let src = "ring R = QQ[x,y,z] order lex;\nring S = QQ[a,b];\n";
    let s = parse_unchecked(src).unwrap();
    assert_eq!(s.to_string(), src);
}
