use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{eval_word, MatrixGF, MatrixModel, ModelKind};
use crate::presentations::{present_sp4_sylow, Sp4Words, Word};
use crate::Result;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub checked: usize,
    pub failures: usize,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `[a, bc] = [a, b] [a, c]^b`
pub fn commutator_product_law(a: &MatrixGF, b: &MatrixGF, c: &MatrixGF, m: &MatrixModel) -> bool {
    let f = &m.field;
    let lhs = MatrixGF::comm(a, &b.mul(c, f), f);
    let rhs = MatrixGF::comm(a, b, f).mul(&MatrixGF::conj(&MatrixGF::comm(a, c, f), b, f), f);
    lhs == rhs
}

/// `[[y,x⁻¹],z⁻¹]^{y⁻¹} [[z,y⁻¹],x⁻¹]^{z⁻¹} [[x,z⁻¹],y⁻¹]^{x⁻¹} = 1`
pub fn hall_witt_law(x: &MatrixGF, y: &MatrixGF, z: &MatrixGF, m: &MatrixModel) -> bool {
    let f = &m.field;
    let inv = |g: &MatrixGF| g.inverse(f).expect("invertible");
    let (xi, yi, zi) = (inv(x), inv(y), inv(z));
    let term = |u: &MatrixGF, vi: &MatrixGF, wi: &MatrixGF, ui: &MatrixGF| {
        let inner = MatrixGF::comm(&MatrixGF::comm(u, vi, f), wi, f);
        MatrixGF::conj(&inner, ui, f)
    };
    let t1 = term(y, &xi, &zi, &yi);
    let t2 = term(z, &yi, &xi, &zi);
    let t3 = term(x, &zi, &yi, &xi);
    t1.mul(&t2, f).mul(&t3, f).is_identity()
}

/// Checks both laws on `samples` seeded random triples of group elements.
pub fn commutator_identity_suite(model: &MatrixModel, samples: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::default();
    for _ in 0..samples {
        let a = model.random_element(&mut rng);
        let b = model.random_element(&mut rng);
        let c = model.random_element(&mut rng);
        report.checked += 2;
        if !commutator_product_law(&a, &b, &c, model) {
            report.failures += 1;
        }
        if !hall_witt_law(&a, &b, &c, model) {
            report.failures += 1;
        }
    }
    report
}

/// Three intermediate relations used to reduce the Sp₄ presentation, for
/// all `i, j`, evaluated on the generator words in the `C2` model:
/// `[x_β(v_j), x_{2α+β}(v_i)] = 1`, `[[x_α(v_i), x_β(v_1)], x_β(v_j)] = 1`
/// and `[x_{α+β}(v_i), x_β(v_j)] = 1`. Needs p odd.
pub fn sp4_reduction_claims(model: &MatrixModel) -> Result<LawReport> {
    assert_eq!(model.kind, ModelKind::C2);
    let f = &model.field;
    let a = f.a();
    let pres = present_sp4_sylow(f)?;
    let xa: Vec<usize> = (0..a).collect();
    let xb: Vec<usize> = (a..2 * a).collect();
    let w = Sp4Words::new(f, &xa, &xb)?;
    let mut report = LawReport::default();
    for i in 0..a {
        for j in 0..a {
            let words = [
                Word::comm(w.xb(j), w.x_2ab(i)),
                Word::comm(&Word::comm(w.xa(i), w.xb(0)), w.xb(j)),
                Word::comm(w.x_ab(i), w.xb(j)),
            ];
            for word in &words {
                report.checked += 1;
                if !eval_word(model, &pres, word)?.is_identity() {
                    report.failures += 1;
                }
            }
        }
    }
    Ok(report)
}
