use super::builders::{present_abelian_rootgroup, present_sl3_sylow};
use super::{GeneratorSymbol, Label, Presentation, Relator, Role, Word};
use crate::ffield::{FiniteField, Fq};
use crate::{Error, Result};

/// Data for a presentation of an extension `1 → N → G → H → 1`.
///
/// `v[i][j]` and `u[i][j]` are words over the generators of `N` with
/// `g_i n_j g_i⁻¹ = V_ij` and `g_i⁻¹ n_j g_i = U_ij`; `lifts[i]` is the word
/// over `N` equal to the i-th relator of `H` evaluated on the `g`'s.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub pres_n: Presentation,
    pub pres_h: Presentation,
    pub v: Vec<Vec<Word>>,
    pub u: Vec<Vec<Word>>,
    pub lifts: Vec<Word>,
}

fn check_words(words: &[Word], r: usize, what: &str) -> Result<()> {
    for w in words {
        if let Some(&(g, _)) = w.letters().iter().find(|&&(g, _)| g >= r) {
            return Err(Error::Malformed(format!(
                "{what} word uses g{g}, but N has {r} generators"
            )));
        }
    }
    Ok(())
}

/// Presentation of `G` on the generators of `N` followed by lifts of the
/// generators of `H`, with `k + 2sr + l` relators.
pub fn hall_glue(ext: &ExtensionData) -> Result<Presentation> {
    let (r, s, l) = (
        ext.pres_n.d_count(),
        ext.pres_h.d_count(),
        ext.pres_h.r_count(),
    );
    if s == 0 && l == 0 {
        return Ok(ext.pres_n.clone());
    }
    for (name, table) in [("V", &ext.v), ("U", &ext.u)] {
        if table.len() != s || table.iter().any(|row| row.len() != r) {
            return Err(Error::Malformed(format!(
                "{name} table must be {s} x {r} (H generators x N generators)"
            )));
        }
        for row in table {
            check_words(row, r, name)?;
        }
    }
    if ext.lifts.len() != l {
        return Err(Error::Malformed(format!(
            "expected {l} lifted relators, got {}",
            ext.lifts.len()
        )));
    }
    check_words(&ext.lifts, r, "lift")?;
    if ext.pres_n.field != ext.pres_h.field {
        return Err(Error::Malformed("N and H are over different fields".into()));
    }

    let mut generators = ext.pres_n.generators.clone();
    generators.extend(ext.pres_h.generators.iter().copied());
    let g = |i: usize| Word::gen(r + i);
    let n = Word::gen;
    let mut relators = ext.pres_n.relators.clone();
    for i in 0..s {
        for j in 0..r {
            let lhs = g(i).mul(&n(j)).mul(&g(i).inverse());
            relators.push(Relator::new("V", lhs.mul(&ext.v[i][j].inverse())));
        }
    }
    for i in 0..s {
        for j in 0..r {
            let lhs = g(i).inverse().mul(&n(j)).mul(&g(i));
            relators.push(Relator::new("U", lhs.mul(&ext.u[i][j].inverse())));
        }
    }
    for (rel, lift) in ext.pres_h.relators.iter().zip(&ext.lifts) {
        let lifted = rel.word.remap(|x| x + r);
        relators.push(Relator::new("lift", lifted.mul(&lift.inverse())));
    }

    let mut notes = ext.pres_n.notes.clone();
    notes.insert(
        "extension".into(),
        format!("{} by {}", ext.pres_n.family, ext.pres_h.family),
    );
    let pres = Presentation {
        family: "hall-glue".into(),
        field: ext.pres_n.field.clone(),
        generators,
        relators,
        diagram: None,
        notes,
    };
    pres.validate()?;
    Ok(pres)
}

fn relabel(pres: &mut Presentation, map: impl Fn(Role) -> Role) {
    for g in &mut pres.generators {
        if let Label::Role(r) = g.label {
            *g = GeneratorSymbol::role(map(r), g.k);
        }
    }
}

/// The Sylow p-subgroup of `Sp₄(F_q)` (p odd) as `S₀ ⋊ X_β` with
/// `S₀ = X_α X_{α+β} X_{2α+β}`. `S₀` is presented by the SL₃ builder with
/// `α`, `α+β` in the roles of the two simple roots.
pub fn sp4_semidirect_extension(field: &FiniteField) -> Result<ExtensionData> {
    let half = field.half()?;
    let a = field.a();
    let mut pres_n = present_sl3_sylow(field);
    relabel(&mut pres_n, |r| match r {
        Role::Beta => Role::AlphaBeta,
        other => other,
    });
    pres_n.family = "sp4-s0".into();
    pres_n.notes.insert("model".into(), "C2".into());
    let mut pres_h = present_abelian_rootgroup(field);
    relabel(&mut pres_h, |_| Role::Beta);

    let combine = |offset: usize, u: Fq| {
        let parts: Vec<Word> = field
            .express_in_basis(u)
            .into_iter()
            .enumerate()
            .map(|(k, e)| Word::letter(offset + k, i64::from(e)))
            .collect();
        Word::product(&parts)
    };
    let xa = |u: Fq| combine(0, u);
    let p_of = |u: Fq| combine(a, u);
    let q_of = |u: Fq| Word::comm(&xa(field.mul(half, u)), &Word::gen(a));
    // x_β(t) x_α(s) x_β(t)⁻¹ = x_{α+β}(st) x_{2α+β}(s²t) x_α(s)
    let moved = |s: Fq, t: Fq| {
        let st = field.mul(s, t);
        p_of(st)
            .mul(&q_of(field.mul(s, st)))
            .mul(&xa(s))
    };
    let mut v = Vec::with_capacity(a);
    let mut u = Vec::with_capacity(a);
    for i in 0..a {
        let t = field.basis(i);
        let mut vrow = Vec::with_capacity(2 * a);
        let mut urow = Vec::with_capacity(2 * a);
        for j in 0..a {
            let s = field.basis(j);
            vrow.push(moved(s, t));
            urow.push(moved(s, field.neg(t)));
        }
        for j in 0..a {
            vrow.push(Word::gen(a + j));
            urow.push(Word::gen(a + j));
        }
        v.push(vrow);
        u.push(urow);
    }
    let lifts = vec![Word::identity(); pres_h.r_count()];
    Ok(ExtensionData {
        pres_n,
        pres_h,
        v,
        u,
        lifts,
    })
}
