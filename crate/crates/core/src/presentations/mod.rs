//! Finite presentations as explicit generator/relator data.
//!
//! Conventions used by every builder: `[a, b] = a b a⁻¹ b⁻¹` and
//! `a^b = b a b⁻¹`. A relation `A = B` is stored as the relator `A B⁻¹`.

mod builders;
mod counts;
mod glue;
pub mod io;
mod table;
mod word;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::ffield::FieldDescriptor;
use crate::rootsys::DynkinDiagram;
use crate::{Error, Result};

pub use builders::{
    present_abelian_rootgroup, present_affine_uplus, present_sl3_sylow, present_sp4_sylow,
    present_sp4_sylow_even, sp4_even_block, Sp4Words,
};
pub use counts::{
    count_bounds, mod_p_abelianization_rank, pair_count_formula, rc2_size, CountBounds,
};
pub use glue::{hall_glue, sp4_semidirect_extension, ExtensionData};
pub use table::{
    field_for, parity_tabulated, table1_grid, table1_row, table_ranks, Table1Row, TABLE_TYPES,
};
pub use word::Word;

/// Positive roots of a rank-2 system, used as generator tags by the rank-2
/// builders. In `C2`, `α` is short and `β` long.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Alpha,
    Beta,
    AlphaBeta,
    TwoAlphaBeta,
}

impl Role {
    pub const ALL: [Role; 4] = [Role::Alpha, Role::Beta, Role::AlphaBeta, Role::TwoAlphaBeta];

    pub fn name(self) -> &'static str {
        match self {
            Role::Alpha => "alpha",
            Role::Beta => "beta",
            Role::AlphaBeta => "alpha+beta",
            Role::TwoAlphaBeta => "2alpha+beta",
        }
    }

    /// Index used by the text format: `α=1, β=2, α+β=3, 2α+β=4`.
    pub fn number(self) -> usize {
        match self {
            Role::Alpha => 1,
            Role::Beta => 2,
            Role::AlphaBeta => 3,
            Role::TwoAlphaBeta => 4,
        }
    }

    pub fn from_number(n: usize) -> Option<Role> {
        Role::ALL.get(n.checked_sub(1)?).copied()
    }

    pub fn from_name(s: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.name() == s)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Node(usize),
    Role(Role),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Node(i) => write!(f, "{i}"),
            Label::Role(r) => f.write_str(r.name()),
        }
    }
}

/// The generator `x_label(v_k)`; `k` is 1-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    pub label: Label,
    pub k: usize,
}

impl GeneratorSymbol {
    pub fn role(role: Role, k: usize) -> Self {
        GeneratorSymbol {
            label: Label::Role(role),
            k,
        }
    }

    pub fn node(node: usize, k: usize) -> Self {
        GeneratorSymbol {
            label: Label::Node(node),
            k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    /// Family tag, e.g. `A4`, `C11`, `E1`, `A1xA1`.
    pub family: String,
    pub word: Word,
}

impl Relator {
    pub fn new(family: impl Into<String>, word: Word) -> Self {
        Relator {
            family: family.into(),
            word,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub family: String,
    pub field: FieldDescriptor,
    pub generators: Vec<GeneratorSymbol>,
    pub relators: Vec<Relator>,
    pub diagram: Option<DynkinDiagram>,
    /// Free-form metadata: conventions, the verification model, notes.
    pub notes: BTreeMap<String, String>,
}

impl Presentation {
    pub fn d_count(&self) -> usize {
        self.generators.len()
    }

    pub fn r_count(&self) -> usize {
        self.relators.len()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.relators.iter().map(|r| &r.word)
    }

    pub fn index_of(&self, sym: GeneratorSymbol) -> Option<usize> {
        self.generators.iter().position(|&g| g == sym)
    }

    /// Generator symbols are unique and every relator mentions only
    /// declared generators.
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(*g) {
                return Err(Error::Malformed(format!(
                    "duplicate generator x_{}(v_{})",
                    g.label, g.k
                )));
            }
        }
        let n = self.generators.len();
        for (idx, r) in self.relators.iter().enumerate() {
            if let Some(&(g, _)) = r.word.letters().iter().find(|&&(g, _)| g >= n) {
                return Err(Error::Malformed(format!(
                    "relator {idx} uses undeclared generator g{g}"
                )));
            }
        }
        Ok(())
    }
}

/// Notes recorded by every builder so exports are self-describing.
pub(crate) fn convention_notes() -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("commutator".into(), "[a,b] = a b a^-1 b^-1".into());
    m.insert("conjugation".into(), "a^b = b a b^-1".into());
    m.insert("relator_form".into(), "A = B is stored as A B^-1".into());
    m.insert(
        "basis".into(),
        "v_k = x^(k-1) in F_p[x]/(modulus), modulus is the lexicographically least monic irreducible".into(),
    );
    m
}
