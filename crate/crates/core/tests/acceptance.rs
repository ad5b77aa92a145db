//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! with its timing against the allowed budget.

use std::io::Write as _;
use std::time::{Duration, Instant};

use chevpres_core::cover::{check_cover, standard_cover, CoverSpec};
use chevpres_core::ffield::FiniteField;
use chevpres_core::presentations::{
    mod_p_abelianization_rank, present_affine_uplus, present_sl3_sylow, present_sp4_sylow,
    present_sp4_sylow_even, table1_grid, Presentation, Word,
};
use chevpres_core::rootsys::{build_affine_diagram, BaseType};
use chevpres_core::verify::{
    build_model, closure, commutator_identity_suite, eval_word, frattini_generator_count,
    model_kind_for, sp4_reduction_claims, todd_coxeter, verify_pair_local, verify_presentation,
    MatrixGF, MatrixModel, ModelKind,
};
use num_rational::Ratio;

fn finish(n: u32, what: &str, failures: &[String], start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < budget;
    // written to the stream directly so the line shows up without --nocapture
    let _ = writeln!(
        std::io::stderr(),
        "{} criterion {n}: {what} [{:.3}s, budget {}s]{}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs(),
        if failures.is_empty() { String::new() } else { format!(" {failures:?}") },
    );
    assert!(failures.is_empty(), "criterion {n}: {failures:?}");
    assert!(elapsed < budget, "criterion {n}: {elapsed:?} exceeds {budget:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn model_for(pres: &Presentation) -> MatrixModel {
    let f = FiniteField::from_descriptor(&pres.field).unwrap();
    build_model(model_kind_for(pres).unwrap(), &f)
}

fn generator_images(model: &MatrixModel, pres: &Presentation) -> Vec<MatrixGF> {
    (0..pres.d_count())
        .map(|g| eval_word(model, pres, &Word::gen(g)).unwrap())
        .collect()
}

struct Certificate {
    relators: usize,
    failures: usize,
    order_closure: usize,
    order_tc: Option<usize>,
    d_frattini: u32,
    d_lower: usize,
}

fn certify(pres: &Presentation, with_closure: bool) -> Certificate {
    let model = model_for(pres);
    let report = verify_presentation(&model, pres).unwrap();
    let (order_closure, d_frattini) = if with_closure {
        let f = &model.field;
        let group = closure(&generator_images(&model, pres), f, 1 << 22).unwrap();
        let d = frattini_generator_count(&group, u64::from(f.p()), f).unwrap();
        (group.order(), d)
    } else {
        (0, 0)
    };
    let table = todd_coxeter(pres, 4_000_000).unwrap();
    Certificate {
        relators: report.checked,
        failures: report.failures.len(),
        order_closure,
        order_tc: table.order(),
        d_frattini,
        d_lower: mod_p_abelianization_rank(pres, u64::from(pres.field.p)).1,
    }
}

#[test]
fn criterion_1_relation_count_table() {
    let start = Instant::now();
    let rows = table1_grid(8, 4).unwrap();
    let mut failures = Vec::new();
    for r in &rows {
        let ok = r.formula_agrees && r.builder == Some(r.upper) && r.pair_formula == r.upper;
        check(&mut failures, ok, || {
            format!(
                "{}{} a={} {}: closed form {}, pair formula {}, builder {:?}",
                r.base, r.l, r.a, r.parity, r.upper, r.pair_formula, r.builder
            )
        });
    }
    finish(
        1,
        &format!("{} rows, builder = pair formula = closed form", rows.len()),
        &failures,
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_sl3_certification() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [2u64, 3, 4, 5, 8, 9] {
        let f = FiniteField::from_order(q).unwrap();
        let a = f.a();
        let c = certify(&present_sl3_sylow(&f), true);
        let order = (q * q * q) as usize;
        check(&mut failures, c.relators == 2 * a * (a + 1) && c.failures == 0, || {
            format!("q={q}: {} relators, {} fail", c.relators, c.failures)
        });
        check(&mut failures, c.order_closure == order, || format!("q={q}: closure {}", c.order_closure));
        check(&mut failures, c.order_tc == Some(order), || format!("q={q}: tc {:?}", c.order_tc));
        if q >= 4 {
            check(&mut failures, c.d_frattini as usize == 2 * a && c.d_lower == 2 * a, || {
                format!("q={q}: d_frattini {}, d_lower {}", c.d_frattini, c.d_lower)
            });
        } else {
            println!("  q={q}: d_frattini = {}, d_lower = {} (reported only)", c.d_frattini, c.d_lower);
        }
    }
    finish(2, "SL3 Sylow, q in {2,3,4,5,8,9}", &failures, start, Duration::from_secs(10));
}

#[test]
fn criterion_3_sp4_odd_certification() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [3u64, 5, 9] {
        let f = FiniteField::from_order(q).unwrap();
        let a = f.a();
        let c = certify(&present_sp4_sylow(&f).unwrap(), true);
        let order = q.pow(4) as usize;
        check(&mut failures, c.relators == (7 * a * a + 13 * a) / 2 && c.failures == 0, || {
            format!("q={q}: {} relators, {} fail", c.relators, c.failures)
        });
        check(&mut failures, c.order_closure == order, || format!("q={q}: closure {}", c.order_closure));
        check(&mut failures, c.order_tc == Some(order), || format!("q={q}: tc {:?}", c.order_tc));
        check(&mut failures, c.d_frattini as usize == 2 * a, || format!("q={q}: d {}", c.d_frattini));
    }
    finish(3, "Sp4 Sylow p odd, q in {3,5,9}", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_4_sp4_even_q16() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let f = FiniteField::from_order(16).unwrap();
    let a = f.a();
    let pres = present_sp4_sylow_even(&f).unwrap();
    let block = pres
        .relators
        .iter()
        .filter(|r| !matches!(r.family.as_str(), "C1" | "C2" | "C3"))
        .count();
    check(&mut failures, block == 8 * a * a && pres.r_count() == a * (a + 1) + 8 * a * a, || {
        format!("{block} block relators of {} total", pres.r_count())
    });
    let c = certify(&pres, false);
    check(&mut failures, c.failures == 0, || format!("{} relators fail", c.failures));
    check(&mut failures, c.order_tc == Some(65536), || format!("tc {:?}", c.order_tc));
    finish(4, "Sp4 Sylow q=16, 8a^2 block, 65536 cosets", &failures, start, Duration::from_secs(300));
}

#[test]
fn criterion_5_affine_generator_count() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (base, l, q) in [
        (BaseType::A, 3, 16),
        (BaseType::A, 5, 16),
        (BaseType::B, 3, 27),
        (BaseType::C, 3, 25),
        (BaseType::D, 4, 16),
        (BaseType::F, 4, 17),
    ] {
        let f = FiniteField::from_order(q).unwrap();
        let pres = present_affine_uplus(&build_affine_diagram(base, l).unwrap(), &f).unwrap();
        let (rank, d) = mod_p_abelianization_rank(&pres, u64::from(f.p()));
        check(&mut failures, rank == 0 && d == f.a() * (l + 1), || {
            format!("{base}{l} q={q}: rank {rank}, d_lower {d}")
        });
    }
    finish(5, "affine U+ d_lower = a(l+1)", &failures, start, Duration::from_secs(1));
}

#[test]
fn criterion_6_affine_pair_local_verification() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (base, l, q) in [(BaseType::A, 3, 16), (BaseType::F, 4, 25)] {
        let f = FiniteField::from_order(q).unwrap();
        let pres = present_affine_uplus(&build_affine_diagram(base, l).unwrap(), &f).unwrap();
        let report = verify_pair_local(&pres).unwrap();
        check(&mut failures, report.checked == pres.r_count() && report.passed(), || {
            format!("{base}{l} q={q}: failures {:?}", report.failures)
        });
    }
    finish(6, "pair-local relators of A3~/F16 and F4~/F25", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_7_golod_shafarevich() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let rows = table1_grid(8, 4).unwrap();
    for r in &rows {
        let base: BaseType = r.base.parse().unwrap();
        let p = if r.parity == "even" { 2 } else { 3 };
        let cb = chevpres_core::presentations::count_bounds(base, r.l, r.a, p).unwrap();
        let upper = Ratio::from_integer(cb.upper as i64);
        let gs = Ratio::new(*cb.gs_lower.numer() as i64, *cb.gs_lower.denom() as i64);
        check(&mut failures, upper >= gs, || format!("{}{} a={}: {} < {}", r.base, r.l, r.a, upper, gs));
        let bound = gs * Ratio::new(25, 4) + cb.linear_term;
        check(&mut failures, upper <= bound, || {
            format!("{}{} a={} {}: {} > {}", r.base, r.l, r.a, r.parity, upper, bound)
        });
    }
    finish(7, &format!("{} rows, gs <= upper <= 6.25 gs + linear", rows.len()), &failures, start, Duration::from_secs(1));
}

#[test]
fn criterion_8_covers() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for l in 6..=9 {
        cases.extend([(BaseType::B, l), (BaseType::C, l), (BaseType::D, l)]);
    }
    cases.extend([(BaseType::E, 6), (BaseType::E, 7), (BaseType::E, 8)]);
    for (base, l) in cases {
        let r = check_cover(&standard_cover(base, l).unwrap());
        check(&mut failures, r.passed(), || format!("{base}{l}: {r:?}"));
    }
    let d6 = standard_cover(BaseType::D, 6).unwrap();
    let without_third = CoverSpec {
        diagram: d6.diagram.clone(),
        parts: d6.parts[..2].to_vec(),
    };
    let r = check_cover(&without_third);
    check(&mut failures, !r.p2 && r.p2_witness == Some((5, 6)), || {
        format!("D6 without its third part: P2 {} witness {:?}", r.p2, r.p2_witness)
    });
    finish(8, "covers of B6-9, C6-9, D6-9, E6-8 and D6 negative control", &failures, start, Duration::from_secs(1));
}

#[test]
fn criterion_9_universal_laws() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [2u64, 3, 4, 5, 8, 9, 16, 17, 25, 27] {
        let f = FiniteField::from_order(q).unwrap();
        for kind in [ModelKind::A1xA1, ModelKind::A2, ModelKind::C2] {
            let r = commutator_identity_suite(&build_model(kind, &f), 1000, 0);
            check(&mut failures, r.checked == 2000 && r.passed(), || {
                format!("{kind} q={q}: {} of {} fail", r.failures, r.checked)
            });
        }
    }
    for q in [3u64, 9] {
        let f = FiniteField::from_order(q).unwrap();
        let r = sp4_reduction_claims(&build_model(ModelKind::C2, &f)).unwrap();
        let a = f.a();
        check(&mut failures, r.checked == 3 * a * a && r.passed(), || {
            format!("reduction claims q={q}: {} of {} fail", r.failures, r.checked)
        });
    }
    finish(9, "commutator laws on 1000 triples per model and field; Sp4 claims", &failures, start, Duration::from_secs(30));
}
