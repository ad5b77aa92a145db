use std::fmt;
use std::str::FromStr;

use super::MatrixGF;
use crate::ffield::{FiniteField, Fq};
use crate::presentations::Role;
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Two commuting root groups: `diag(I + uE₁₂, I + wE₁₂)` in `GL₄`.
    A1xA1,
    /// Upper unitriangular `3×3` matrices.
    A2,
    /// Sylow p-subgroup of `Sp₄` for the form `J = E₁₄ + E₂₃ − E₃₂ − E₄₁`.
    C2,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::A1xA1 => "A1xA1",
            ModelKind::A2 => "A2",
            ModelKind::C2 => "C2",
        })
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A1xA1" | "A1" => Ok(ModelKind::A1xA1),
            "A2" => Ok(ModelKind::A2),
            "C2" => Ok(ModelKind::C2),
            _ => Err(Error::UnsupportedType(format!("no matrix model for {s:?}"))),
        }
    }
}

/// Explicit root elements `x_γ(u)` of a rank ≤ 2 unipotent group over `F_q`.
///
/// In the `C2` model, with `P = x_{α+β}` and `Q = x_{2α+β}`:
/// `[x_β(t), x_α(s)] = P(st) Q(s²t)` and `[x_α(s), P(u)] = Q(2su)`.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub kind: ModelKind,
    pub field: FiniteField,
}

pub fn build_model(kind: ModelKind, field: &FiniteField) -> MatrixModel {
    MatrixModel {
        kind,
        field: field.clone(),
    }
}

impl MatrixModel {
    pub fn dim(&self) -> usize {
        match self.kind {
            ModelKind::A2 => 3,
            ModelKind::A1xA1 | ModelKind::C2 => 4,
        }
    }

    pub fn roles(&self) -> &'static [Role] {
        match self.kind {
            ModelKind::A1xA1 => &[Role::Alpha, Role::Beta],
            ModelKind::A2 => &[Role::Alpha, Role::Beta, Role::AlphaBeta],
            ModelKind::C2 => &Role::ALL,
        }
    }

    pub fn identity(&self) -> MatrixGF {
        MatrixGF::identity(self.dim())
    }

    pub fn root_element(&self, role: Role, u: Fq) -> Result<MatrixGF> {
        let f = &self.field;
        let n = f.neg(u);
        let terms: Vec<(usize, usize, Fq)> = match (self.kind, role) {
            (ModelKind::A1xA1, Role::Alpha) => vec![(0, 1, u)],
            (ModelKind::A1xA1, Role::Beta) => vec![(2, 3, u)],
            (ModelKind::A2, Role::Alpha) => vec![(0, 1, u)],
            (ModelKind::A2, Role::Beta) => vec![(1, 2, u)],
            (ModelKind::A2, Role::AlphaBeta) => vec![(0, 2, u)],
            (ModelKind::C2, Role::Alpha) => vec![(0, 1, u), (2, 3, n)],
            (ModelKind::C2, Role::Beta) => vec![(1, 2, u)],
            (ModelKind::C2, Role::AlphaBeta) => vec![(0, 2, n), (1, 3, n)],
            (ModelKind::C2, Role::TwoAlphaBeta) => vec![(0, 3, n)],
            (kind, role) => {
                return Err(Error::UnsupportedType(format!(
                    "root {} does not exist in the {kind} model",
                    role.name()
                )))
            }
        };
        Ok(MatrixGF::unipotent(self.dim(), f, &terms))
    }

    /// `x_role(v_k)` for a 1-based basis index `k`.
    pub fn generator(&self, role: Role, k: usize) -> Result<MatrixGF> {
        if k == 0 || k > self.field.a() {
            return Err(Error::Malformed(format!(
                "basis index {k} out of range 1..={}",
                self.field.a()
            )));
        }
        self.root_element(role, self.field.basis(k - 1))
    }

    /// The generators `x_α(v_k), x_β(v_k)` of the full group.
    pub fn simple_generators(&self) -> Vec<MatrixGF> {
        let a = self.field.a();
        [Role::Alpha, Role::Beta]
            .into_iter()
            .flat_map(|r| (1..=a).map(move |k| self.generator(r, k).unwrap()))
            .collect()
    }

    /// `J = E₁₄ + E₂₃ − E₃₂ − E₄₁` (1-based), the form preserved by `C2`.
    pub fn symplectic_form(&self) -> MatrixGF {
        let f = &self.field;
        let one = f.one();
        let m1 = f.neg(one);
        let mut j = MatrixGF::identity(4);
        for i in 0..4 {
            j.set(i, i, Fq::ZERO);
        }
        j.set(0, 3, one);
        j.set(1, 2, one);
        j.set(2, 1, m1);
        j.set(3, 0, m1);
        j
    }

    /// `gᵀ J g == J`
    pub fn preserves_form(&self, g: &MatrixGF) -> bool {
        let j = self.symplectic_form();
        g.transpose().mul(&j, &self.field).mul(g, &self.field) == j
    }

    /// A pseudo-random group element: a product of one element from each
    /// positive root group, parameters drawn from `rng`.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> MatrixGF {
        let q = self.field.q();
        self.roles().iter().fold(self.identity(), |acc, &r| {
            let u = Fq(rng.gen_range(0..q));
            acc.mul(&self.root_element(r, u).unwrap(), &self.field)
        })
    }
}
