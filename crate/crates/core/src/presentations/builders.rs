use super::{convention_notes, GeneratorSymbol, Presentation, Relator, Role, Word};
use crate::ffield::{CoefficientTables, FiniteField, Fq};
use crate::linalg::{rank_mod_p, solve_combination};
use crate::rootsys::{classify_pair, count_pairs_by_type, DynkinDiagram, Rank2Type};
use crate::{Error, Result};

fn role_generators(roles: &[Role], a: usize) -> Vec<GeneratorSymbol> {
    roles
        .iter()
        .flat_map(|&r| (1..=a).map(move |k| GeneratorSymbol::role(r, k)))
        .collect()
}

fn new_presentation(
    family: &str,
    field: &FiniteField,
    generators: Vec<GeneratorSymbol>,
    model: &str,
) -> Presentation {
    let mut notes = convention_notes();
    notes.insert("model".into(), model.into());
    Presentation {
        family: family.into(),
        field: field.descriptor(),
        generators,
        relators: Vec::new(),
        diagram: None,
        notes,
    }
}

/// `Π_k g_k^{e_k}` over a list of basis words.
fn combine(basis: &[Word], coords: &[u32]) -> Word {
    let parts: Vec<Word> = basis
        .iter()
        .zip(coords)
        .map(|(w, &e)| w.pow(i64::from(e)))
        .collect();
    Word::product(&parts)
}

fn letters(gens: &[usize]) -> Vec<Word> {
    gens.iter().map(|&g| Word::gen(g)).collect()
}

fn powers(gens: &[usize], p: u32, family: &str) -> Vec<Relator> {
    gens.iter()
        .map(|&g| Relator::new(family, Word::letter(g, i64::from(p))))
        .collect()
}

fn pairwise_commutators(words: &[Word], family: &str) -> Vec<Relator> {
    let mut out = Vec::new();
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            out.push(Relator::new(family, Word::comm(x, y)));
        }
    }
    out
}

/// The root group `X_α ≅ F_q`: `a` generators, `a` p-th powers and
/// `a(a-1)/2` commutators.
pub fn present_abelian_rootgroup(field: &FiniteField) -> Presentation {
    let a = field.a();
    let mut pres = new_presentation(
        "abelian-rootgroup",
        field,
        role_generators(&[Role::Alpha], a),
        "A1xA1",
    );
    let gens: Vec<usize> = (0..a).collect();
    pres.relators.extend(powers(&gens, field.p(), "power"));
    pres.relators
        .extend(pairwise_commutators(&letters(&gens), "commute"));
    pres
}

/// Families A3 and A4 for generators `s1`, `s2` (indices per basis element).
fn sl3_pair_relators(
    tables: &CoefficientTables,
    s1: &[usize],
    s2: &[usize],
    tag: &str,
) -> Vec<Relator> {
    let a = s1.len();
    let (w1, w2) = (letters(s1), letters(s2));
    let mut out = Vec::new();
    for k in 0..a {
        let inner = Word::comm(&w1[k], &w2[0]);
        out.push(Relator::new(format!("{tag}A3"), Word::comm(&w1[0], &inner)));
        out.push(Relator::new(format!("{tag}A3"), Word::comm(&w2[0], &inner)));
    }
    let gamma: Vec<Word> = (0..a).map(|r| Word::comm(&w1[r], &w2[0])).collect();
    for k in 0..a {
        for kp in 1..a {
            let lhs = Word::comm(&w1[k].inverse(), &w2[kp].inverse());
            let rhs = combine(&gamma, &tables.c[k][kp]);
            out.push(Relator::new(format!("{tag}A4"), lhs.mul(&rhs.inverse())));
        }
    }
    out
}

/// Sylow p-subgroup of `SL₃(F_q)`: families A1–A4, `2a(a+1)` relators.
pub fn present_sl3_sylow(field: &FiniteField) -> Presentation {
    let a = field.a();
    let tables = CoefficientTables::build(field);
    let mut pres = new_presentation(
        "sl3-sylow",
        field,
        role_generators(&[Role::Alpha, Role::Beta], a),
        "A2",
    );
    pres.notes
        .insert("c_sign".into(), format!("{:+}", tables.c_sign));
    let s1: Vec<usize> = (0..a).collect();
    let s2: Vec<usize> = (a..2 * a).collect();
    pres.relators.extend(powers(&s1, field.p(), "A1"));
    pres.relators.extend(powers(&s2, field.p(), "A1"));
    pres.relators
        .extend(pairwise_commutators(&letters(&s1), "A2"));
    pres.relators
        .extend(pairwise_commutators(&letters(&s2), "A2"));
    pres.relators
        .extend(sl3_pair_relators(&tables, &s1, &s2, ""));
    pres
}

/// Words over the generators `x_α(v_k)`, `x_β(v_k)` of the Sp₄ Sylow
/// subgroup (p odd) for the derived root elements, and the C1–C11 families.
pub struct Sp4Words<'a> {
    field: &'a FiniteField,
    tables: CoefficientTables,
    xa: Vec<Word>,
    xb: Vec<Word>,
    xab: Vec<Word>,
    x2ab: Vec<Word>,
}

impl<'a> Sp4Words<'a> {
    pub fn new(field: &'a FiniteField, xa: &[usize], xb: &[usize]) -> Result<Self> {
        if field.p() == 2 {
            return Err(Error::Precondition(
                "the odd Sp4 presentation needs p odd".into(),
            ));
        }
        let tables = CoefficientTables::build(field);
        let a = field.a();
        let mut w = Sp4Words {
            field,
            tables,
            xa: letters(xa),
            xb: letters(xb),
            xab: Vec::new(),
            x2ab: Vec::new(),
        };
        let base = Word::comm(&w.xb[0], &w.xa[0]);
        let m = w.tables.m()?.to_vec();
        let corr: Vec<Word> = (0..a)
            .map(|k| Word::comm(&combine(&w.xa, &m[k]), &base))
            .collect();
        let xab = (0..a)
            .map(|i| Word::comm(&w.xb[0], &w.xa[i]).mul(&combine(&corr, &w.tables.r_neg[i])))
            .collect();
        w.xab = xab;
        let x2ab = (0..a).map(|i| w.x_2ab_of(field.basis(i))).collect();
        w.x2ab = x2ab;
        Ok(w)
    }

    pub fn xa(&self, k: usize) -> &Word {
        &self.xa[k]
    }

    pub fn xb(&self, k: usize) -> &Word {
        &self.xb[k]
    }

    /// `x_α(u)` as a product over the basis.
    pub fn xa_of(&self, u: Fq) -> Word {
        combine(&self.xa, &self.field.express_in_basis(u))
    }

    pub fn xb_of(&self, u: Fq) -> Word {
        combine(&self.xb, &self.field.express_in_basis(u))
    }

    /// `x_{α+β}(v_k)`, 0-based `k`.
    pub fn x_ab(&self, k: usize) -> &Word {
        &self.xab[k]
    }

    /// `x_{2α+β}(v_k)`, 0-based `k`.
    pub fn x_2ab(&self, k: usize) -> &Word {
        &self.x2ab[k]
    }

    pub fn x_ab_of(&self, u: Fq) -> Word {
        combine(&self.xab, &self.field.express_in_basis(u))
    }

    /// `x_{2α+β}(u) = [x_α(½u), x_{α+β}(v₁)]`.
    pub fn x_2ab_of(&self, u: Fq) -> Word {
        let half = self.field.half().expect("p is odd");
        Word::comm(&self.xa_of(self.field.mul(half, u)), &self.xab[0])
    }

    /// `Π_k x_{2α+β}(v_k)^{e_k}` with `e` the coordinates of `u`.
    pub fn x_2ab_comb(&self, u: Fq) -> Word {
        combine(&self.x2ab, &self.field.express_in_basis(u))
    }

    /// Families C1–C11 in order; C1 is split as (α powers, β powers,
    /// `α+β` powers) so the affine builder can keep the residual part.
    fn families(&self) -> Vec<(&'static str, Vec<Word>)> {
        let f = self.field;
        let a = f.a();
        let p = i64::from(f.p());
        let t = &self.tables;
        let v = |i: usize| f.basis(i);
        let rel = |lhs: Word, rhs: Word| lhs.mul(&rhs.inverse());
        let pairs = |ws: &[Word]| {
            pairwise_commutators(ws, "")
                .into_iter()
                .map(|r| r.word)
                .collect::<Vec<_>>()
        };

        let c1a = self.xa.iter().map(|w| w.pow(p)).collect();
        let c1b = self.xb.iter().map(|w| w.pow(p)).collect();
        let c1ab = self.xab.iter().map(|w| w.pow(p)).collect();
        let mut c5 = Vec::new();
        for k in 0..a {
            let inner = Word::comm(&self.xa[k], &self.xab[0]);
            c5.push(Word::comm(&self.xa[0], &inner));
            c5.push(Word::comm(&self.xab[0], &inner));
        }
        let gamma: Vec<Word> = (0..a)
            .map(|r| Word::comm(&self.xa[r], &self.xab[0]))
            .collect();
        let mut c6 = Vec::new();
        for k in 0..a {
            for kp in 1..a {
                let lhs = Word::comm(&self.xa[k].inverse(), &self.xab[kp].inverse());
                c6.push(rel(lhs, combine(&gamma, &t.c[k][kp])));
            }
        }
        let c7 = (0..a)
            .map(|i| Word::comm(&self.xab[0], &self.xb[i]))
            .collect();
        let c8 = (0..a)
            .map(|i| Word::comm(&self.xab[i], &self.xb[0]))
            .collect();
        let c9 = (0..a)
            .map(|i| {
                let sq = f.mul(v(i), v(i));
                rel(self.x_2ab_of(sq).inverse(), combine(&self.x2ab, &t.r_neg[i]))
            })
            .collect();
        let c10 = (0..a)
            .map(|i| {
                let sq = f.mul(v(i), v(i));
                rel(
                    Word::comm(&self.xb[0], &self.xa[i]),
                    self.xab[i].mul(&self.x_2ab_of(sq)),
                )
            })
            .collect();
        let mut c11 = Vec::new();
        for i in 0..a {
            for j in 0..a {
                let lhs = Word::comm(&self.xa[j].inverse(), &self.xb[i].inverse());
                let rhs = combine(&self.xab, &t.d[i][j])
                    .inverse()
                    .mul(&combine(&self.x2ab, &t.f[i][j]));
                c11.push(rel(lhs, rhs));
            }
        }
        vec![
            ("C1", c1a),
            ("C1", c1b),
            ("C1", c1ab),
            ("C2", pairs(&self.xa)),
            ("C3", pairs(&self.xb)),
            ("C4", pairs(&self.xab)),
            ("C5", c5),
            ("C6", c6),
            ("C7", c7),
            ("C8", c8),
            ("C9", c9),
            ("C10", c10),
            ("C11", c11),
        ]
    }

    /// All of C1–C11: `(7a² + 13a)/2` relators.
    pub fn relators(&self) -> Vec<Relator> {
        self.families()
            .into_iter()
            .flat_map(|(tag, ws)| ws.into_iter().map(move |w| Relator::new(tag, w)))
            .collect()
    }

    /// The part needed on top of the two root groups inside an amalgam:
    /// the `x_{α+β}` powers from C1 and C4–C11, `(5a² + 11a)/2` relators.
    pub fn pair_block(&self, prefix: &str) -> Vec<Relator> {
        self.families()
            .into_iter()
            .enumerate()
            .filter(|&(idx, _)| idx == 2 || idx >= 5)
            .flat_map(|(_, (tag, ws))| {
                ws.into_iter()
                    .map(move |w| Relator::new(format!("{prefix}{tag}"), w))
            })
            .collect()
    }
}

/// Sylow p-subgroup of `Sp₄(F_q)` for p odd: families C1–C11 on `2a`
/// generators, `x_{α+β}` and `x_{2α+β}` expanded into words.
pub fn present_sp4_sylow(field: &FiniteField) -> Result<Presentation> {
    if field.p() == 2 {
        return Err(Error::Precondition(
            "sp4-sylow needs p odd; use sp4-sylow-even for p = 2".into(),
        ));
    }
    let a = field.a();
    let xa: Vec<usize> = (0..a).collect();
    let xb: Vec<usize> = (a..2 * a).collect();
    let words = Sp4Words::new(field, &xa, &xb)?;
    let mut pres = new_presentation(
        "sp4-sylow",
        field,
        role_generators(&[Role::Alpha, Role::Beta], a),
        "C2",
    );
    sp4_notes(&mut pres);
    pres.relators = words.relators();
    Ok(pres)
}

fn sp4_notes(pres: &mut Presentation) {
    pres.notes.insert(
        "symplectic_form".into(),
        "J = E14 + E23 - E32 - E41 (1-based entries)".into(),
    );
    pres.notes.insert(
        "root_elements".into(),
        "x_a(u) = I + u(E12 - E34), x_b(u) = I + uE23, x_{a+b}(u) = I - u(E13 + E24), x_{2a+b}(u) = I - uE14".into(),
    );
    pres.notes.insert(
        "structure_constants".into(),
        "[x_b(t), x_a(s)] = x_{a+b}(st) x_{2a+b}(s^2 t), [x_a(s), x_{a+b}(u)] = x_{2a+b}(2su)".into(),
    );
    pres.notes.insert(
        "C11".into(),
        "[x_a(v_j)^-1, x_b(v_i)^-1] = x_{a+b}(v_i v_j)^-1 x_{2a+b}(v_i v_j^2)".into(),
    );
    pres.notes.insert(
        "C9".into(),
        "x_{2a+b}(u) = [x_a(u/2), x_{a+b}(v_1)] for every u, with x_a(u/2) expanded over the basis".into(),
    );
}

/// The `8a²` relators that, on top of the two root groups, present the Sp₄
/// Sylow 2-subgroup. With `c_ij = [x_β(v_j), x_α(v_i)]`, a greedy basis
/// `b_1..b_{2a}` of the central subgroup `X_{α+β} X_{2α+β}` is chosen among
/// the `c_ij`; the block says the remaining `c_ij` are products of the
/// `b_m` (E1), the `b_m` are commuting involutions (E2, E3) and central
/// (E4). `a² + a` further relators that hold in the group (`(x_α x_β)^4`
/// and `[x_α(v_k), x_β(v_k)]^2`) bring the count to `8a²`.
pub fn sp4_even_block(
    field: &FiniteField,
    xa: &[usize],
    xb: &[usize],
    prefix: &str,
) -> Result<Vec<Relator>> {
    if field.p() != 2 {
        return Err(Error::Precondition("the even Sp4 block needs p = 2".into()));
    }
    let a = field.a();
    let v = |i: usize| field.basis(i);
    let (wa, wb) = (letters(xa), letters(xb));
    let mut pairs = Vec::new();
    let mut vecs: Vec<Vec<i64>> = Vec::new();
    for i in 0..a {
        for j in 0..a {
            let st = field.mul(v(i), v(j));
            let s2t = field.mul(v(i), st);
            let vec: Vec<i64> = field
                .express_in_basis(st)
                .into_iter()
                .chain(field.express_in_basis(s2t))
                .map(i64::from)
                .collect();
            pairs.push((i, j));
            vecs.push(vec);
        }
    }
    let mut basis: Vec<usize> = Vec::new();
    for idx in 0..pairs.len() {
        let mut trial: Vec<Vec<i64>> = basis.iter().map(|&b| vecs[b].clone()).collect();
        trial.push(vecs[idx].clone());
        if rank_mod_p(&trial, 2) == trial.len() {
            basis.push(idx);
        }
    }
    if basis.len() < 2 * a {
        return Err(Error::Precondition(format!(
            "commutators [x_b(v_j), x_a(v_i)] span only 2^{} elements over F_{}; q >= 4 is needed",
            basis.len(),
            field.q()
        )));
    }
    let c = |idx: usize| {
        let (i, j) = pairs[idx];
        Word::comm(&wb[j], &wa[i])
    };
    let b: Vec<Word> = basis.iter().map(|&idx| c(idx)).collect();
    let bvecs: Vec<Vec<i64>> = basis.iter().map(|&idx| vecs[idx].clone()).collect();
    let tag = |t: &str| format!("{prefix}{t}");
    let mut out = Vec::new();
    for idx in (0..pairs.len()).filter(|i| !basis.contains(i)) {
        let e = solve_combination(&bvecs, &vecs[idx], 2)
            .expect("basis spans every commutator vector");
        let e: Vec<u32> = e.into_iter().map(|x| x as u32).collect();
        out.push(Relator::new(tag("E1"), c(idx).mul(&combine(&b, &e).inverse())));
    }
    out.extend(b.iter().map(|w| Relator::new(tag("E2"), w.pow(2))));
    out.extend(
        pairwise_commutators(&b, "")
            .into_iter()
            .map(|r| Relator::new(tag("E3"), r.word)),
    );
    for gens in [&wa, &wb] {
        for g in gens.iter() {
            for bm in &b {
                out.push(Relator::new(tag("E4"), Word::comm(g, bm)));
            }
        }
    }
    for i in 0..a {
        for j in 0..a {
            out.push(Relator::new(tag("pad"), wa[i].mul(&wb[j]).pow(4)));
        }
    }
    for k in 0..a {
        out.push(Relator::new(tag("pad"), Word::comm(&wa[k], &wb[k]).pow(2)));
    }
    debug_assert_eq!(out.len(), 8 * a * a);
    Ok(out)
}

/// Sylow 2-subgroup of `Sp₄(F_q)`, q even: root-group relators for `X_α`,
/// `X_β` plus the `8a²` block of [`sp4_even_block`].
pub fn present_sp4_sylow_even(field: &FiniteField) -> Result<Presentation> {
    if field.p() != 2 {
        return Err(Error::Precondition(
            "sp4-sylow-even needs p = 2; use sp4-sylow for p odd".into(),
        ));
    }
    let a = field.a();
    let xa: Vec<usize> = (0..a).collect();
    let xb: Vec<usize> = (a..2 * a).collect();
    let mut pres = new_presentation(
        "sp4-sylow-even",
        field,
        role_generators(&[Role::Alpha, Role::Beta], a),
        "C2",
    );
    sp4_notes(&mut pres);
    pres.notes.remove("C9");
    pres.notes.remove("C11");
    pres.relators.extend(powers(&xa, 2, "C1"));
    pres.relators.extend(powers(&xb, 2, "C1"));
    pres.relators.extend(pairwise_commutators(&letters(&xa), "C2"));
    pres.relators.extend(pairwise_commutators(&letters(&xb), "C3"));
    pres.relators.extend(sp4_even_block(field, &xa, &xb, "")?);
    Ok(pres)
}

/// Amalgam presentation of `U₊` for an untwisted affine diagram: per-node
/// root-group relators, then per-pair blocks by rank-2 type
/// (`A1xA1`, then `A2`, then `C2`).
pub fn present_affine_uplus(diag: &DynkinDiagram, field: &FiniteField) -> Result<Presentation> {
    if !diag.affine {
        return Err(Error::Precondition("U+ needs an affine diagram".into()));
    }
    let pair_counts = count_pairs_by_type(diag)?;
    // below 16 only the doubly-laced types in characteristic 2 are excluded
    if field.q() < 16 && field.p() == 2 && pair_counts[&Rank2Type::C2] > 0 {
        return Err(Error::Precondition(format!(
            "U+ of a diagram with a double bond needs q >= 16 or p odd, got q = {}",
            field.q()
        )));
    }
    let a = field.a();
    let p = field.p();
    let generators: Vec<GeneratorSymbol> = diag
        .nodes
        .iter()
        .flat_map(|&n| (1..=a).map(move |k| GeneratorSymbol::node(n, k)))
        .collect();
    let mut pres = new_presentation("affine-uplus", field, generators, "pair-local");
    pres.diagram = Some(diag.clone());
    pres.notes.insert(
        "C2_block".into(),
        if p == 2 {
            "8a^2 relators: E1-E4 plus padding (see sp4-sylow-even)".into()
        } else {
            "C1 powers of x_{a+b}(v_k) plus C4-C11, (5a^2+11a)/2 relators".into()
        },
    );
    pres.notes.insert(
        "pair_orientation".into(),
        "A1xA1 and A2: lower node id is alpha; C2: short node is alpha".into(),
    );
    let gens_of = |n: usize| -> Vec<usize> {
        let pos = diag.nodes.iter().position(|&m| m == n).unwrap();
        (pos * a..(pos + 1) * a).collect()
    };
    for &n in &diag.nodes {
        pres.relators.extend(powers(&gens_of(n), p, "root-power"));
    }
    for &n in &diag.nodes {
        pres.relators
            .extend(pairwise_commutators(&letters(&gens_of(n)), "root-commute"));
    }
    let mut by_type: [Vec<(usize, usize)>; 3] = Default::default();
    for (x, &i) in diag.nodes.iter().enumerate() {
        for &j in &diag.nodes[x + 1..] {
            let slot = match classify_pair(diag, i, j)? {
                Rank2Type::A1xA1 => 0,
                Rank2Type::A2 => 1,
                Rank2Type::C2 => 2,
                Rank2Type::G2 => return Err(Error::G2Pair(i, j)),
            };
            by_type[slot].push((i, j));
        }
    }
    for &(i, j) in &by_type[0] {
        for gi in gens_of(i) {
            for gj in gens_of(j) {
                pres.relators.push(Relator::new(
                    "A1xA1",
                    Word::comm(&Word::gen(gi), &Word::gen(gj)),
                ));
            }
        }
    }
    let tables = CoefficientTables::build(field);
    for &(i, j) in &by_type[1] {
        pres.relators
            .extend(sl3_pair_relators(&tables, &gens_of(i), &gens_of(j), "A2:"));
    }
    for &(i, j) in &by_type[2] {
        let (short, long) = diag.orient_pair(i, j)?;
        let (xa, xb) = (gens_of(short), gens_of(long));
        if p == 2 {
            pres.relators.extend(sp4_even_block(field, &xa, &xb, "C2:")?);
        } else {
            pres.relators
                .extend(Sp4Words::new(field, &xa, &xb)?.pair_block("C2:"));
        }
    }
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_affine_diagram, BaseType};

    fn field(p: u32, a: usize) -> FiniteField {
        FiniteField::new(p, a).unwrap()
    }

    #[test]
    fn abelian_counts() {
        for (a, r) in [(1, 1), (2, 3), (3, 6)] {
            let pres = present_abelian_rootgroup(&field(2, a));
            assert_eq!((pres.d_count(), pres.r_count()), (a, r));
        }
    }

    #[test]
    fn sl3_counts() {
        for (p, a) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)] {
            let pres = present_sl3_sylow(&field(p, a));
            assert_eq!(pres.d_count(), 2 * a);
            assert_eq!(pres.r_count(), 2 * a * (a + 1));
            pres.validate().unwrap();
        }
    }

    #[test]
    fn sp4_counts() {
        for (p, a) in [(3, 1), (3, 2), (5, 2), (3, 3)] {
            let pres = present_sp4_sylow(&field(p, a)).unwrap();
            assert_eq!(pres.d_count(), 2 * a);
            assert_eq!(pres.r_count(), (7 * a * a + 13 * a) / 2);
            pres.validate().unwrap();
        }
        assert!(present_sp4_sylow(&field(2, 1)).is_err());
        assert!(present_sp4_sylow_even(&field(3, 1)).is_err());
    }

    #[test]
    fn sp4_even_counts() {
        for a in [2, 3, 4] {
            let pres = present_sp4_sylow_even(&field(2, a)).unwrap();
            assert_eq!(pres.r_count(), a * (a + 1) + 8 * a * a);
        }
        assert!(present_sp4_sylow_even(&field(2, 1)).is_err());
    }

    #[test]
    fn affine_examples() {
        let f16 = field(2, 4);
        let a3 = build_affine_diagram(BaseType::A, 3).unwrap();
        let pres = present_affine_uplus(&a3, &f16).unwrap();
        assert_eq!((pres.d_count(), pres.r_count()), (16, 152));
        let d4 = build_affine_diagram(BaseType::D, 4).unwrap();
        assert_eq!(present_affine_uplus(&d4, &f16).unwrap().r_count(), 226);
        let f4 = build_affine_diagram(BaseType::F, 4).unwrap();
        assert_eq!(present_affine_uplus(&f4, &field(17, 1)).unwrap().r_count(), 25);
        assert_eq!(present_affine_uplus(&a3, &field(3, 1)).unwrap().r_count(), 14);
        let b3 = build_affine_diagram(BaseType::B, 3).unwrap();
        assert!(present_affine_uplus(&b3, &field(2, 3)).is_err());
        assert!(present_affine_uplus(&b3, &field(3, 1)).is_ok());
    }
}
