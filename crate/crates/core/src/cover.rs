//! Covers of rank ≥ 6 Dynkin diagrams by three subdiagrams, as used to
//! assemble a presentation of a Steinberg group from pieces of rank ≤ 5.
//!
//! The conditions checked are:
//! * P1: each part has at most two components, each of type `A_m` (m ≥ 2)
//!   or of rank at most 5;
//! * P2: every pair of nodes lies in some part;
//! * P3: each pairwise intersection has at most two components, each of type
//!   `A_m` (m ≥ 2), `B3` or `C3`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::rootsys::{build_finite_diagram, BaseType, DynkinDiagram, FiniteType};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSpec {
    pub diagram: DynkinDiagram,
    pub parts: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    #[serde(rename = "P1")]
    pub p1: bool,
    #[serde(rename = "P2")]
    pub p2: bool,
    #[serde(rename = "P3")]
    pub p3: bool,
    /// An uncovered pair when P2 fails.
    pub p2_witness: Option<(usize, usize)>,
    /// Isolated nodes (`A1` components) inside parts; allowed, but listed.
    pub a1_components: Vec<(usize, usize)>,
    /// Component types of each part, e.g. `["B3", "A2"]`.
    pub part_types: Vec<Vec<String>>,
    /// Component types of the intersections `(0,1)`, `(0,2)`, `(1,2)`.
    pub intersection_types: Vec<Vec<String>>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.p1 && self.p2 && self.p3
    }
}

fn check_scope(base: BaseType, l: usize) -> Result<()> {
    let ok = match base {
        BaseType::B | BaseType::C | BaseType::D => l >= 6,
        BaseType::E => (6..=8).contains(&l),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedType(format!(
            "three-part covers are defined for B, C, D (l >= 6) and E6-E8, not {base}{l}"
        )))
    }
}

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// The cover as listed for each type. For `B_l` and `C_l` this leaves the
/// pair `(l-3, l)` uncovered; see [`standard_cover`].
pub fn literal_cover(base: BaseType, l: usize) -> Result<CoverSpec> {
    check_scope(base, l)?;
    let diagram = build_finite_diagram(base, l)?;
    let parts = match base {
        BaseType::B | BaseType::C => {
            let mut p2 = range(1, l - 4);
            p2.extend(range(l - 2, l));
            vec![range(1, l - 1), p2, vec![]]
        }
        BaseType::D => {
            let mut p2 = range(1, l - 2);
            p2.push(l);
            vec![range(1, l - 1), p2, vec![l - 2, l - 1, l]]
        }
        BaseType::E => {
            let mut p1 = vec![1];
            p1.extend(range(3, l));
            let mut p3 = vec![2];
            p3.extend(range(4, l));
            vec![p1, vec![1, 2, 3, 4], p3]
        }
        _ => unreachable!(),
    };
    Ok(CoverSpec { diagram, parts })
}

/// A cover satisfying P1-P3. For `B_l`/`C_l` the third part is the rank-4
/// tail `{l-3, …, l}` (type `B4`/`C4`) instead of the empty set; the other
/// types use the listed parts unchanged.
pub fn standard_cover(base: BaseType, l: usize) -> Result<CoverSpec> {
    let mut spec = literal_cover(base, l)?;
    if matches!(base, BaseType::B | BaseType::C) {
        spec.parts[2] = range(l - 3, l);
    }
    Ok(spec)
}

fn types_of(diag: &DynkinDiagram, nodes: &[usize]) -> Vec<(Vec<usize>, Option<FiniteType>)> {
    diag.component_types(nodes)
}

fn label(t: &Option<FiniteType>) -> String {
    t.map_or_else(|| "non-finite".to_string(), |t| t.to_string())
}

pub fn check_cover(spec: &CoverSpec) -> CoverReport {
    let diag = &spec.diagram;
    let mut a1_components = Vec::new();
    let mut p1 = true;
    let mut part_types = Vec::new();
    for (idx, part) in spec.parts.iter().enumerate() {
        let comps = types_of(diag, part);
        p1 &= comps.len() <= 2;
        for (nodes, t) in &comps {
            match t {
                Some(t) if t.family == BaseType::A && t.rank >= 2 => {}
                Some(t) if t.rank <= 5 => {
                    if t.rank == 1 {
                        a1_components.push((idx, nodes[0]));
                    }
                }
                _ => p1 = false,
            }
        }
        part_types.push(comps.iter().map(|(_, t)| label(t)).collect());
    }

    let mut p2_witness = None;
    'outer: for (x, &i) in diag.nodes.iter().enumerate() {
        for &j in &diag.nodes[x + 1..] {
            if !spec.parts.iter().any(|p| p.contains(&i) && p.contains(&j)) {
                p2_witness = Some((i, j));
                break 'outer;
            }
        }
    }

    let mut p3 = true;
    let mut intersection_types = Vec::new();
    for x in 0..spec.parts.len() {
        for y in x + 1..spec.parts.len() {
            let common: Vec<usize> = spec.parts[x]
                .iter()
                .copied()
                .filter(|n| spec.parts[y].contains(n))
                .collect();
            let comps = types_of(diag, &common);
            p3 &= comps.len() <= 2;
            for (_, t) in &comps {
                let ok = matches!(t, Some(t) if (t.family == BaseType::A && t.rank >= 2)
                    || (matches!(t.family, BaseType::B | BaseType::C) && t.rank == 3));
                p3 &= ok;
            }
            intersection_types.push(comps.iter().map(|(_, t)| label(t)).collect());
        }
    }

    CoverReport {
        p1,
        p2: p2_witness.is_none(),
        p3,
        p2_witness,
        a1_components,
        part_types,
        intersection_types,
    }
}

/// `{"type":"D","rank":6,"parts":[…],"check":{"P1":…,"P2":…,"P3":…}}`
pub fn cover_json(spec: &CoverSpec, report: &CoverReport) -> Value {
    json!({
        "type": spec.diagram.base.to_string(),
        "rank": spec.diagram.rank,
        "parts": spec.parts,
        "check": report,
    })
}
