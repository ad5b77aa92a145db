use std::collections::HashSet;

use chevpres_core::ffield::{FiniteField, Fq};
use chevpres_core::presentations::{
    hall_glue, mod_p_abelianization_rank, present_affine_uplus, present_sl3_sylow,
    present_sp4_sylow, present_sp4_sylow_even, sp4_semidirect_extension, Presentation, Role,
    Word,
};
use chevpres_core::rootsys::{build_affine_diagram, BaseType};
use chevpres_core::verify::{
    build_model, closure, eval_word, frattini_generator_count, model_kind_for, todd_coxeter,
    verify_pair_local, verify_presentation, MatrixGF, MatrixModel, ModelKind, TcStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn model_for(pres: &Presentation) -> MatrixModel {
    let f = FiniteField::from_descriptor(&pres.field).unwrap();
    build_model(model_kind_for(pres).unwrap(), &f)
}

fn generator_images(model: &MatrixModel, pres: &Presentation) -> Vec<MatrixGF> {
    (0..pres.d_count())
        .map(|g| eval_word(model, pres, &Word::gen(g)).unwrap())
        .collect()
}

fn certify(pres: &Presentation, order: usize) {
    let model = model_for(pres);
    let report = verify_presentation(&model, pres).unwrap();
    assert!(report.passed(), "{} failures {:?}", pres.family, report.failures);
    let group = closure(&generator_images(&model, pres), &model.field, 10 * order).unwrap();
    assert_eq!(group.order(), order);
    // Sp4 over F_7 peaks near 7.3M cosets under HLT
    let table = todd_coxeter(pres, 16_000_000).unwrap();
    assert_eq!(table.status, TcStatus::Closed, "{} q={}^{}", pres.family, pres.field.p, pres.field.a);
    assert_eq!(table.live_cosets(), order);
}

#[test]
fn small_fields_certify() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = FiniteField::from_order(q).unwrap();
        certify(&present_sl3_sylow(&f), (q * q * q) as usize);
    }
    for q in [3u64, 5, 7] {
        let f = FiniteField::from_order(q).unwrap();
        certify(&present_sp4_sylow(&f).unwrap(), q.pow(4) as usize);
        certify(&hall_glue(&sp4_semidirect_extension(&f).unwrap()).unwrap(), q.pow(4) as usize);
    }
    for q in [4u64, 8] {
        let f = FiniteField::from_order(q).unwrap();
        certify(&present_sp4_sylow_even(&f).unwrap(), q.pow(4) as usize);
    }
}

#[test]
fn every_single_exponent_corruption_is_caught() {
    let pres_list = [
        present_sl3_sylow(&FiniteField::from_order(4).unwrap()),
        present_sp4_sylow(&FiniteField::from_order(9).unwrap()).unwrap(),
        present_sp4_sylow_even(&FiniteField::from_order(4).unwrap()).unwrap(),
    ];
    for pres in &pres_list {
        let model = model_for(pres);
        for (idx, rel) in pres.relators.iter().enumerate() {
            for pos in 0..rel.word.letters().len() {
                let mut letters = rel.word.letters().to_vec();
                letters[pos].1 += 1;
                let mut bad = pres.clone();
                bad.relators[idx].word = Word::from_letters(letters);
                let report = verify_presentation(&model, &bad).unwrap();
                assert_eq!(report.failures, vec![idx], "{} relator {idx} letter {pos}", pres.family);
            }
        }
    }
}

/// `|G : Φ(G)|` with `Φ(G)` generated by all p-th powers and all commutators.
fn brute_force_d(group: &[MatrixGF], p: u64, field: &FiniteField) -> u32 {
    let mut gens: HashSet<MatrixGF> = HashSet::new();
    for g in group {
        gens.insert(g.pow(p, field));
        for h in group {
            gens.insert(MatrixGF::comm(g, h, field));
        }
    }
    let gens: Vec<MatrixGF> = gens.into_iter().collect();
    let phi = closure(&gens, field, group.len()).unwrap().order();
    let mut index = group.len() / phi;
    let mut d = 0;
    while index > 1 {
        assert_eq!(index as u64 % p, 0);
        index /= p as usize;
        d += 1;
    }
    d
}

#[test]
fn frattini_matches_brute_force_and_abelianization() {
    let cases: Vec<Presentation> = vec![
        present_sl3_sylow(&FiniteField::from_order(2).unwrap()),
        present_sl3_sylow(&FiniteField::from_order(3).unwrap()),
        present_sl3_sylow(&FiniteField::from_order(4).unwrap()),
        present_sp4_sylow(&FiniteField::from_order(3).unwrap()).unwrap(),
        present_sp4_sylow_even(&FiniteField::from_order(4).unwrap()).unwrap(),
    ];
    for pres in &cases {
        let model = model_for(pres);
        let f = &model.field;
        let p = u64::from(f.p());
        let group = closure(&generator_images(&model, pres), f, 1 << 20).unwrap();
        let d = frattini_generator_count(&group, p, f).unwrap();
        assert_eq!(d, brute_force_d(&group.elements, p, f), "{}", pres.family);
        assert_eq!(mod_p_abelianization_rank(pres, p).1, d as usize, "{}", pres.family);
    }
}

fn additivity_and_commutators(model: &MatrixModel, pairs: &[(Fq, Fq)]) {
    let f = &model.field;
    let x = |r, u| model.root_element(r, u).unwrap();
    let comm = |a: &MatrixGF, b: &MatrixGF| MatrixGF::comm(a, b, f);
    for &(s, t) in pairs {
        for &r in model.roles() {
            assert_eq!(x(r, s).mul(&x(r, t), f), x(r, f.add(s, t)), "{:?} additivity", r);
        }
        let st = f.mul(s, t);
        match model.kind {
            ModelKind::A1xA1 => {
                assert!(comm(&x(Role::Alpha, s), &x(Role::Beta, t)).is_identity());
            }
            ModelKind::A2 => {
                assert_eq!(comm(&x(Role::Alpha, s), &x(Role::Beta, t)), x(Role::AlphaBeta, st));
                assert!(comm(&x(Role::Alpha, s), &x(Role::AlphaBeta, t)).is_identity());
                assert!(comm(&x(Role::Beta, s), &x(Role::AlphaBeta, t)).is_identity());
            }
            ModelKind::C2 => {
                let want = x(Role::AlphaBeta, st).mul(&x(Role::TwoAlphaBeta, f.mul(s, st)), f);
                assert_eq!(comm(&x(Role::Beta, t), &x(Role::Alpha, s)), want);
                let two_st = f.add(st, st);
                assert_eq!(comm(&x(Role::Alpha, s), &x(Role::AlphaBeta, t)), x(Role::TwoAlphaBeta, two_st));
                for (a, b) in [
                    (Role::Alpha, Role::TwoAlphaBeta),
                    (Role::Beta, Role::AlphaBeta),
                    (Role::Beta, Role::TwoAlphaBeta),
                    (Role::AlphaBeta, Role::TwoAlphaBeta),
                ] {
                    assert!(comm(&x(a, s), &x(b, t)).is_identity());
                }
                for r in Role::ALL {
                    assert!(model.preserves_form(&x(r, s)));
                }
            }
        }
    }
}

#[test]
fn model_laws_exhaustive_small_fields() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = FiniteField::from_order(q).unwrap();
        let pairs: Vec<(Fq, Fq)> = f.elements().flat_map(|s| f.elements().map(move |t| (s, t))).collect();
        for kind in [ModelKind::A1xA1, ModelKind::A2, ModelKind::C2] {
            additivity_and_commutators(&build_model(kind, &f), &pairs);
        }
    }
}

#[test]
fn model_laws_sampled_large_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for q in [16u64, 25, 27, 32] {
        let f = FiniteField::from_order(q).unwrap();
        let qq = f.q();
        let pairs: Vec<(Fq, Fq)> = (0..1000)
            .map(|_| (Fq(rng.gen_range(0..qq)), Fq(rng.gen_range(0..qq))))
            .collect();
        for kind in [ModelKind::A1xA1, ModelKind::A2, ModelKind::C2] {
            additivity_and_commutators(&build_model(kind, &f), &pairs);
        }
    }
}

#[test]
fn affine_pair_local_checks() {
    for (base, l, q) in [
        (BaseType::B, 3, 27),
        (BaseType::C, 3, 25),
        (BaseType::C, 3, 16),
        (BaseType::D, 4, 16),
        (BaseType::E, 6, 17),
        (BaseType::A, 5, 19),
    ] {
        let f = FiniteField::from_order(q).unwrap();
        let pres = present_affine_uplus(&build_affine_diagram(base, l).unwrap(), &f).unwrap();
        let report = verify_pair_local(&pres).unwrap();
        assert_eq!(report.checked, pres.r_count());
        assert!(report.passed(), "{base}{l} q={q}: {:?}", report.failures);
    }
}

#[test]
fn affine_pair_local_negative_control() {
    let f = FiniteField::from_order(16).unwrap();
    let mut pres = present_affine_uplus(&build_affine_diagram(BaseType::C, 3).unwrap(), &f).unwrap();
    let last = pres.r_count() - 1;
    let mut letters = pres.relators[last].word.letters().to_vec();
    letters[0].1 += 1;
    pres.relators[last].word = Word::from_letters(letters);
    assert_eq!(verify_pair_local(&pres).unwrap().failures, vec![last]);
}

#[test]
fn overflow_is_reported_not_hidden() {
    // a cap too small to close the SL3 table must come back as overflow
    let f = FiniteField::from_order(9).unwrap();
    let table = todd_coxeter(&present_sl3_sylow(&f), 100).unwrap();
    assert_eq!(table.status, TcStatus::Overflowed);
    assert_eq!(table.order(), None);
}
