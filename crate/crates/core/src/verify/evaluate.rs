use std::collections::HashMap;

use serde::Serialize;

use super::{build_model, MatrixGF, MatrixModel, ModelKind};
use crate::ffield::FiniteField;
use crate::presentations::{GeneratorSymbol, Label, Presentation, Role, Word};
use crate::rootsys::{classify_pair, Rank2Type};
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    /// Indices of relators that do not evaluate to the identity.
    pub failures: Vec<usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Product of the letters of `w`, left to right. `mats[g]` holds the
/// matrix of generator `g` and its inverse; every generator is a root
/// element, so exponents are reduced mod `p`.
fn eval_with(field: &FiniteField, dim: usize, mats: &[(MatrixGF, MatrixGF)], w: &Word) -> MatrixGF {
    let p = i64::from(field.p());
    let mut acc = MatrixGF::identity(dim);
    for &(g, e) in w.letters() {
        let (m, mi) = &mats[g];
        let e = e.rem_euclid(p);
        let (base, n) = if e * 2 <= p { (m, e) } else { (mi, p - e) };
        for _ in 0..n {
            acc = acc.mul(base, field);
        }
    }
    acc
}

fn role_matrices(model: &MatrixModel, gens: &[GeneratorSymbol]) -> Result<Vec<(MatrixGF, MatrixGF)>> {
    gens.iter()
        .map(|g| match g.label {
            Label::Role(r) => {
                let m = model.generator(r, g.k)?;
                let mi = m.inverse(&model.field).expect("unipotent");
                Ok((m, mi))
            }
            Label::Node(n) => Err(Error::Precondition(format!(
                "generator x_{n}(v_{}) has no role; use pair-local verification",
                g.k
            ))),
        })
        .collect()
}

/// Evaluates `w` in `model`; generators must carry root-role labels.
pub fn eval_word(model: &MatrixModel, pres: &Presentation, w: &Word) -> Result<MatrixGF> {
    let used = w.support();
    if let Some(&g) = used.iter().find(|&&g| g >= pres.d_count()) {
        return Err(Error::Malformed(format!("word uses undeclared generator g{g}")));
    }
    let mut mats = vec![(model.identity(), model.identity()); pres.d_count()];
    for g in used {
        mats[g] = role_matrices(model, &pres.generators[g..=g])?.remove(0);
    }
    Ok(eval_with(&model.field, model.dim(), &mats, w))
}

/// Checks every relator of a role-labelled presentation in `model`.
pub fn verify_presentation(model: &MatrixModel, pres: &Presentation) -> Result<VerifyReport> {
    let field = FiniteField::from_descriptor(&pres.field)?;
    if field != model.field {
        return Err(Error::Precondition("model and presentation fields differ".into()));
    }
    let mats = role_matrices(model, &pres.generators)?;
    let failures = pres
        .words()
        .enumerate()
        .filter(|(_, w)| !eval_with(&model.field, model.dim(), &mats, w).is_identity())
        .map(|(i, _)| i)
        .collect();
    Ok(VerifyReport {
        checked: pres.r_count(),
        failures,
    })
}

/// Checks each relator of a node-labelled (affine) presentation in the
/// rank-2 model of the node pair it lives on. A relator on a single node is
/// checked in the `A1xA1` model; `A1xA1` and `A2` pairs put the lower node
/// at `α`, `C2` pairs the short node.
pub fn verify_pair_local(pres: &Presentation) -> Result<VerifyReport> {
    let diag = pres
        .diagram
        .as_ref()
        .ok_or_else(|| Error::Precondition("pair-local verification needs a diagram".into()))?;
    let field = FiniteField::from_descriptor(&pres.field)?;
    let nodes: Vec<usize> = pres
        .generators
        .iter()
        .map(|g| match g.label {
            Label::Node(n) if diag.contains(n) => Ok(n),
            _ => Err(Error::Precondition(format!(
                "generator x_{}(v_{}) is not on a diagram node",
                g.label, g.k
            ))),
        })
        .collect::<Result<_>>()?;
    let mut models: HashMap<ModelKind, MatrixModel> = HashMap::new();
    let mut failures = Vec::new();
    for (idx, w) in pres.words().enumerate() {
        let mut support: Vec<usize> = w.support().into_iter().map(|g| nodes[g]).collect();
        support.sort_unstable();
        support.dedup();
        let (kind, alpha) = match support.as_slice() {
            [] => continue,
            [n] => (ModelKind::A1xA1, *n),
            [i, j] => {
                let kind = match classify_pair(diag, *i, *j)? {
                    Rank2Type::A1xA1 => ModelKind::A1xA1,
                    Rank2Type::A2 => ModelKind::A2,
                    Rank2Type::C2 => ModelKind::C2,
                    Rank2Type::G2 => return Err(Error::G2Pair(*i, *j)),
                };
                (kind, diag.orient_pair(*i, *j)?.0)
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "relator {idx} spans nodes {support:?}, more than a pair"
                )))
            }
        };
        let model = models
            .entry(kind)
            .or_insert_with(|| build_model(kind, &field));
        let local: Vec<GeneratorSymbol> = pres
            .generators
            .iter()
            .zip(&nodes)
            .map(|(g, &n)| {
                let role = if n == alpha { Role::Alpha } else { Role::Beta };
                GeneratorSymbol::role(role, g.k)
            })
            .collect();
        let mut mats = vec![(model.identity(), model.identity()); pres.d_count()];
        for g in w.support() {
            mats[g] = role_matrices(model, &local[g..=g])?.remove(0);
        }
        if !eval_with(&field, model.dim(), &mats, w).is_identity() {
            failures.push(idx);
        }
    }
    Ok(VerifyReport {
        checked: pres.r_count(),
        failures,
    })
}

/// The model a presentation should be checked in, from its metadata.
pub fn model_kind_for(pres: &Presentation) -> Option<ModelKind> {
    if let Some(m) = pres.notes.get("model") {
        if let Ok(kind) = m.parse() {
            return Some(kind);
        }
    }
    match pres.family.as_str() {
        "abelian-rootgroup" => Some(ModelKind::A1xA1),
        "sl3-sylow" => Some(ModelKind::A2),
        "sp4-sylow" | "sp4-sylow-even" | "hall-glue" => Some(ModelKind::C2),
        _ => None,
    }
}

/// Pair-local check for presentations with a diagram, otherwise a check in
/// the model named by the metadata.
pub fn verify_auto(pres: &Presentation) -> Result<VerifyReport> {
    if pres.diagram.is_some() {
        return verify_pair_local(pres);
    }
    let kind = model_kind_for(pres).ok_or_else(|| {
        Error::Precondition(format!("no matrix model known for family {:?}", pres.family))
    })?;
    let field = FiniteField::from_descriptor(&pres.field)?;
    verify_presentation(&build_model(kind, &field), pres)
}
