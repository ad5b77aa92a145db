use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::{count_bounds, present_affine_uplus};
use crate::ffield::FiniteField;
use crate::rootsys::{build_affine_diagram, count_pairs_by_type, BaseType};
use crate::{Error, Result};

/// One row of the relation-count table for `(type, l, a, parity of p)`.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    #[serde(rename = "type")]
    pub base: String,
    pub l: usize,
    pub a: usize,
    pub parity: &'static str,
    pub pairs: BTreeMap<String, usize>,
    pub upper: u64,
    pub pair_formula: u64,
    /// Field order used for the builder run.
    pub q: u64,
    pub builder: Option<u64>,
    pub gs_lower: String,
    pub d: u64,
    pub formula_agrees: bool,
    pub builder_agrees: Option<bool>,
    pub gs_holds: bool,
}

impl Table1Row {
    pub fn all_agree(&self) -> bool {
        self.formula_agrees && self.builder_agrees.unwrap_or(true)
    }
}

/// `(p, q)` for the builder run: `p = 3` or `p = 2` and `q = p^a`.
pub fn field_for(a: usize, even: bool) -> (u32, u64) {
    let p: u32 = if even { 2 } else { 3 };
    (p, u64::from(p).pow(a as u32))
}

/// Whether the relation-count table has a row for this parity. The doubly
/// laced types are tabulated for odd `p` only.
pub fn parity_tabulated(base: BaseType, even: bool) -> bool {
    !even || matches!(base, BaseType::A | BaseType::D | BaseType::E)
}

/// Ranks in range for `base` with `l ≤ max_l`.
pub fn table_ranks(base: BaseType, max_l: usize) -> Vec<usize> {
    let lo = match base {
        BaseType::A | BaseType::B | BaseType::C => 3,
        BaseType::D => 4,
        BaseType::E => 6,
        BaseType::F => 4,
        BaseType::G => return vec![],
    };
    let hi = match base {
        BaseType::E => max_l.min(8),
        BaseType::F => max_l.min(4),
        _ => max_l,
    };
    (lo..=hi).collect()
}

pub fn table1_row(base: BaseType, l: usize, a: usize, even: bool) -> Result<Table1Row> {
    let p_for_count = if even { 2 } else { 3 };
    let cb = count_bounds(base, l, a, p_for_count)?;
    let diag = build_affine_diagram(base, l)?;
    let pairs = count_pairs_by_type(&diag)?
        .into_iter()
        .map(|(t, n)| (t.to_string(), n))
        .collect();
    let (p, q) = field_for(a, even);
    // None when the builder's field precondition fails (B, C, F4 with q = 2, 4, 8)
    let builder = present_affine_uplus(&diag, &FiniteField::new(p, a)?)
        .ok()
        .map(|pres| pres.r_count() as u64);
    Ok(Table1Row {
        base: base.to_string(),
        l,
        a,
        parity: if even { "even" } else { "odd" },
        pairs,
        upper: cb.upper,
        pair_formula: cb.pair_formula,
        q,
        builder,
        gs_lower: cb.gs_lower.to_string(),
        d: cb.d,
        formula_agrees: cb.agrees,
        builder_agrees: builder.map(|b| b == cb.upper && b == cb.pair_formula),
        gs_holds: Ratio::from_integer(cb.upper) >= cb.gs_lower,
    })
}

pub const TABLE_TYPES: [BaseType; 6] = [
    BaseType::A,
    BaseType::B,
    BaseType::C,
    BaseType::D,
    BaseType::E,
    BaseType::F,
];

/// Every tabulated row with `l ≤ max_l`, `a ≤ max_a`.
pub fn table1_grid(max_l: usize, max_a: usize) -> Result<Vec<Table1Row>> {
    if max_a == 0 {
        return Err(Error::Precondition("max_a must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for base in TABLE_TYPES {
        for l in table_ranks(base, max_l) {
            for a in 1..=max_a {
                for even in [false, true].into_iter().filter(|&e| parity_tabulated(base, e)) {
                    rows.push(table1_row(base, l, a, even)?);
                }
            }
        }
    }
    Ok(rows)
}
