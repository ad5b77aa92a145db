//! Finite and untwisted affine Dynkin diagrams, recognition of finite-type
//! subdiagrams, and classification of node pairs into rank-2 types.
//!
//! Nodes follow Bourbaki numbering `1..=l`; the affine node is `0`. A
//! multiple bond records which endpoint is the short root (the arrow points
//! toward it).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for BaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseType::A => "A",
            BaseType::B => "B",
            BaseType::C => "C",
            BaseType::D => "D",
            BaseType::E => "E",
            BaseType::F => "F",
            BaseType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for BaseType {
    type Err = Error;

    /// Accepts `A`..`G` as well as the rank-carrying spellings `E6`, `F4`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let head = s.trim().chars().next().map(|c| c.to_ascii_uppercase());
        match head {
            Some('A') => Ok(BaseType::A),
            Some('B') => Ok(BaseType::B),
            Some('C') => Ok(BaseType::C),
            Some('D') => Ok(BaseType::D),
            Some('E') => Ok(BaseType::E),
            Some('F') => Ok(BaseType::F),
            Some('G') => Ok(BaseType::G),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

/// Checks the type/rank combinations that have a (finite or affine) diagram.
pub fn validate_type_rank(base: BaseType, l: usize, affine: bool) -> Result<()> {
    let ok = match base {
        BaseType::A => l >= 1,
        BaseType::B => l >= if affine { 3 } else { 2 },
        BaseType::C => l >= 2,
        BaseType::D => l >= 4,
        BaseType::E => (6..=8).contains(&l),
        BaseType::F => l == 4,
        BaseType::G => l == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedType(format!(
            "{}{} ({})",
            base,
            l,
            if affine { "affine" } else { "finite" }
        )))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bond {
    Single,
    /// Double bond; the arrow points toward `short`.
    Double { short: usize },
    /// Triple bond; the arrow points toward `short`.
    Triple { short: usize },
    /// The `Ã₁` bond (Cartan entries `-2, -2`).
    Infinite,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub bond: Bond,
}

/// Rank-2 type of the subsystem spanned by two simple roots.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rank2Type {
    A1xA1,
    A2,
    C2,
    G2,
}

impl fmt::Display for Rank2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rank2Type::A1xA1 => "A1xA1",
            Rank2Type::A2 => "A2",
            Rank2Type::C2 => "C2",
            Rank2Type::G2 => "G2",
        })
    }
}

/// A connected diagram of finite type, e.g. `B3` or `A1`. A rank-2 double
/// bond is always reported as `C2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteType {
    pub family: BaseType,
    pub rank: usize,
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub base: BaseType,
    pub rank: usize,
    pub affine: bool,
    pub nodes: Vec<usize>,
    pub edges: Vec<Edge>,
}

fn single(i: usize, j: usize) -> Edge {
    Edge {
        i,
        j,
        bond: Bond::Single,
    }
}

fn double(i: usize, j: usize, short: usize) -> Edge {
    Edge {
        i,
        j,
        bond: Bond::Double { short },
    }
}

fn finite_edges(base: BaseType, l: usize) -> Vec<Edge> {
    let path = |n: usize| (1..n).map(|i| single(i, i + 1)).collect::<Vec<_>>();
    match base {
        BaseType::A => path(l),
        BaseType::B => {
            let mut e = path(l - 1);
            e.push(double(l - 1, l, l));
            e
        }
        BaseType::C => {
            let mut e = path(l - 1);
            e.push(double(l - 1, l, l - 1));
            e
        }
        BaseType::D => {
            let mut e = path(l - 1);
            e.push(single(l - 2, l));
            e
        }
        BaseType::E => {
            let mut e = vec![single(1, 3), single(2, 4)];
            e.extend((3..l).map(|i| single(i, i + 1)));
            e
        }
        BaseType::F => vec![single(1, 2), double(2, 3, 3), single(3, 4)],
        BaseType::G => vec![Edge {
            i: 1,
            j: 2,
            bond: Bond::Triple { short: 1 },
        }],
    }
}

/// The finite Dynkin diagram of type `base_l`, nodes `1..=l`.
pub fn build_finite_diagram(base: BaseType, l: usize) -> Result<DynkinDiagram> {
    validate_type_rank(base, l, false)?;
    Ok(DynkinDiagram {
        base,
        rank: l,
        affine: false,
        nodes: (1..=l).collect(),
        edges: finite_edges(base, l),
    })
}

/// The completed (untwisted affine) diagram: the finite diagram plus node 0
/// attached where the negative highest root meets the simple roots.
pub fn build_affine_diagram(base: BaseType, l: usize) -> Result<DynkinDiagram> {
    validate_type_rank(base, l, true)?;
    let mut edges = finite_edges(base, l);
    match (base, l) {
        (BaseType::A, 1) => edges.push(Edge {
            i: 0,
            j: 1,
            bond: Bond::Infinite,
        }),
        (BaseType::A, _) => {
            edges.push(single(0, 1));
            edges.push(single(0, l));
        }
        (BaseType::B, _) | (BaseType::D, _) => edges.push(single(0, 2)),
        (BaseType::C, _) => edges.push(double(0, 1, 1)),
        (BaseType::E, 6) => edges.push(single(0, 2)),
        (BaseType::E, 7) => edges.push(single(0, 1)),
        (BaseType::E, _) => edges.push(single(0, 8)),
        (BaseType::F, _) => edges.push(single(0, 1)),
        (BaseType::G, _) => edges.push(single(0, 2)),
    }
    Ok(DynkinDiagram {
        base,
        rank: l,
        affine: true,
        nodes: (0..=l).collect(),
        edges,
    })
}

impl DynkinDiagram {
    pub fn contains(&self, node: usize) -> bool {
        self.nodes.contains(&node)
    }

    pub fn bond(&self, i: usize, j: usize) -> Option<Bond> {
        self.edges
            .iter()
            .find(|e| (e.i == i && e.j == j) || (e.i == j && e.j == i))
            .map(|e| e.bond)
    }

    fn neighbors_within(&self, node: usize, subset: &BTreeSet<usize>) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.i == node {
                    Some(e.j)
                } else if e.j == node {
                    Some(e.i)
                } else {
                    None
                }
            })
            .filter(|n| subset.contains(n))
            .collect()
    }

    /// Connected components of the subdiagram induced on `subset`, each
    /// sorted, listed by smallest node.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &set {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(n) = stack.pop() {
                for m in self.neighbors_within(n, &set) {
                    if seen.insert(m) {
                        comp.push(m);
                        stack.push(m);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Recognizes the finite type of the connected subdiagram on `nodes`,
    /// or `None` if it is not of finite type (or not connected).
    pub fn classify_component(&self, nodes: &[usize]) -> Option<FiniteType> {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        let n = set.len();
        if n == 0 || self.components(nodes).len() != 1 {
            return None;
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| set.contains(&e.i) && set.contains(&e.j))
            .copied()
            .collect();
        if edges.len() != n - 1 || edges.iter().any(|e| e.bond == Bond::Infinite) {
            return None;
        }
        let ft = |family, rank| Some(FiniteType { family, rank });
        if n == 1 {
            return ft(BaseType::A, 1);
        }
        if edges.iter().any(|e| matches!(e.bond, Bond::Triple { .. })) {
            return if n == 2 { ft(BaseType::G, 2) } else { None };
        }
        let doubles: Vec<&Edge> = edges
            .iter()
            .filter(|e| matches!(e.bond, Bond::Double { .. }))
            .collect();
        let degree = |v: usize| self.neighbors_within(v, &set).len();
        let branch: Vec<usize> = set.iter().copied().filter(|&v| degree(v) >= 3).collect();
        if doubles.len() > 1 {
            return None;
        }
        if let Some(d) = doubles.first() {
            if !branch.is_empty() {
                return None;
            }
            if n == 2 {
                return ft(BaseType::C, 2);
            }
            let Bond::Double { short } = d.bond else {
                unreachable!()
            };
            let (u, v) = (d.i, d.j);
            if degree(u) == 1 || degree(v) == 1 {
                let end = if degree(u) == 1 { u } else { v };
                return if end == short {
                    ft(BaseType::B, n)
                } else {
                    ft(BaseType::C, n)
                };
            }
            // double bond in the interior of a path: only F4 survives
            let arm = |from: usize, skip: usize| {
                let (mut prev, mut cur, mut len) = (skip, from, 1);
                loop {
                    let next: Vec<usize> = self
                        .neighbors_within(cur, &set)
                        .into_iter()
                        .filter(|&x| x != prev)
                        .collect();
                    match next.first() {
                        Some(&nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => return len,
                    }
                }
            };
            return if n == 4 && arm(u, v) == 2 && arm(v, u) == 2 {
                ft(BaseType::F, 4)
            } else {
                None
            };
        }
        match branch.len() {
            0 => ft(BaseType::A, n),
            1 => {
                let c = branch[0];
                if degree(c) != 3 {
                    return None;
                }
                let mut arms: Vec<usize> = self
                    .neighbors_within(c, &set)
                    .into_iter()
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (c, start, 1);
                        while let Some(nx) = self
                            .neighbors_within(cur, &set)
                            .into_iter()
                            .find(|&x| x != prev)
                        {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                match (arms[0], arms[1], arms[2]) {
                    (1, 1, _) => ft(BaseType::D, n),
                    (1, 2, 2) => ft(BaseType::E, 6),
                    (1, 2, 3) => ft(BaseType::E, 7),
                    (1, 2, 4) => ft(BaseType::E, 8),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Finite types of the components of the subdiagram on `subset`; `None`
    /// entries mark components that are not of finite type.
    pub fn component_types(&self, subset: &[usize]) -> Vec<(Vec<usize>, Option<FiniteType>)> {
        self.components(subset)
            .into_iter()
            .map(|c| {
                let t = self.classify_component(&c);
                (c, t)
            })
            .collect()
    }

    pub fn is_finite_type(&self) -> bool {
        self.component_types(&self.nodes)
            .iter()
            .all(|(_, t)| t.is_some())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::Precondition(format!("pair ({i}, {j}) repeats a node")));
        }
        if !self.contains(i) || !self.contains(j) {
            return Err(Error::Precondition(format!("pair ({i}, {j}) is not in the diagram")));
        }
        Ok(())
    }

    /// For a pair `{i, j}`, returns `(α, β)`: the short then the long node for
    /// a `C2` or `G2` pair, and `(min, max)` otherwise.
    pub fn orient_pair(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        self.check_pair(i, j)?;
        Ok(match self.bond(i, j) {
            Some(Bond::Double { short }) | Some(Bond::Triple { short }) => {
                (short, if short == i { j } else { i })
            }
            _ => (i.min(j), i.max(j)),
        })
    }
}

/// Rank-2 type of `{i, j}`, from the bond alone.
pub fn classify_pair(diag: &DynkinDiagram, i: usize, j: usize) -> Result<Rank2Type> {
    diag.check_pair(i, j)?;
    match diag.bond(i, j) {
        None => Ok(Rank2Type::A1xA1),
        Some(Bond::Single) => Ok(Rank2Type::A2),
        Some(Bond::Double { .. }) => Ok(Rank2Type::C2),
        Some(Bond::Triple { .. }) => Ok(Rank2Type::G2),
        Some(Bond::Infinite) => Err(Error::UnsupportedType(format!(
            "pair ({i}, {j}) spans an affine A1 subsystem"
        ))),
    }
}

/// Counts unordered node pairs by rank-2 type. Every type key is present.
pub fn count_pairs_by_type(diag: &DynkinDiagram) -> Result<BTreeMap<Rank2Type, usize>> {
    if !diag.affine || diag.rank < 3 {
        return Err(Error::Precondition(format!(
            "pair counting needs an affine diagram of base rank >= 3, got {}{}{}",
            diag.base,
            diag.rank,
            if diag.affine { "~" } else { "" }
        )));
    }
    let mut counts: BTreeMap<Rank2Type, usize> = [
        (Rank2Type::A1xA1, 0),
        (Rank2Type::A2, 0),
        (Rank2Type::C2, 0),
    ]
    .into_iter()
    .collect();
    for (x, &i) in diag.nodes.iter().enumerate() {
        for &j in &diag.nodes[x + 1..] {
            match classify_pair(diag, i, j)? {
                Rank2Type::G2 => return Err(Error::G2Pair(i, j)),
                t => *counts.get_mut(&t).unwrap() += 1,
            }
        }
    }
    Ok(counts)
}

/// Rank ≤ 2 root systems needed by the matrix models.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystemKind {
    A1,
    A1xA1,
    A2,
    C2,
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('×', "X").as_str() {
            "A1" => Ok(RootSystemKind::A1),
            "A1XA1" => Ok(RootSystemKind::A1xA1),
            "A2" => Ok(RootSystemKind::A2),
            "C2" => Ok(RootSystemKind::C2),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub kind: RootSystemKind,
    pub rank: usize,
    /// `cartan[i][j] = 2(α_i, α_j) / (α_j, α_j)`.
    pub cartan: Vec<Vec<i32>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive_roots: Vec<Vec<i32>>,
}

/// Positive roots by root-string extension from the simple roots. For `C2`
/// the first simple root `α` is short and the second `β` long.
pub fn positive_roots(kind: RootSystemKind) -> RootSystem {
    let cartan = match kind {
        RootSystemKind::A1 => vec![vec![2]],
        RootSystemKind::A1xA1 => vec![vec![2, 0], vec![0, 2]],
        RootSystemKind::A2 => vec![vec![2, -1], vec![-1, 2]],
        RootSystemKind::C2 => vec![vec![2, -1], vec![-2, 2]],
    };
    let rank = cartan.len();
    let unit = |i: usize| (0..rank).map(|j| i32::from(i == j)).collect::<Vec<i32>>();
    let mut roots: Vec<Vec<i32>> = (0..rank).map(unit).collect();
    let mut idx = 0;
    while idx < roots.len() {
        let r = roots[idx].clone();
        for i in 0..rank {
            let pairing: i32 = (0..rank).map(|j| r[j] * cartan[j][i]).sum();
            // length of the i-string below r
            let mut down = 0;
            let mut probe = r.clone();
            loop {
                probe[i] -= 1;
                if roots.contains(&probe) {
                    down += 1;
                } else {
                    break;
                }
            }
            if down - pairing > 0 {
                let mut up = r.clone();
                up[i] += 1;
                if !roots.contains(&up) {
                    roots.push(up);
                }
            }
        }
        idx += 1;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i32>(), std::cmp::Reverse(r.clone())));
    RootSystem {
        kind,
        rank,
        cartan,
        positive_roots: roots,
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    base: String,
    rank: usize,
    affine: bool,
    nodes: Vec<usize>,
    edges: Vec<(usize, usize, String)>,
}

impl Serialize for DynkinDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let dir = |short: usize| if short == e.i { "i" } else { "j" };
                let tag = match e.bond {
                    Bond::Single => "single".to_string(),
                    Bond::Double { short } => format!("double>{}", dir(short)),
                    Bond::Triple { short } => format!("triple>{}", dir(short)),
                    Bond::Infinite => "infinite".to_string(),
                };
                (e.i, e.j, tag)
            })
            .collect();
        DiagramJson {
            base: self.base.to_string(),
            rank: self.rank,
            affine: self.affine,
            nodes: self.nodes.clone(),
            edges,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DynkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DiagramJson::deserialize(d)?;
        let base: BaseType = raw.base.parse().map_err(D::Error::custom)?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (i, j, tag) in raw.edges {
            let pick = |side: &str| match side {
                "i" => Ok(i),
                "j" => Ok(j),
                other => Err(D::Error::custom(format!("bad arrow target {other}"))),
            };
            let bond = match tag.split_once('>') {
                None if tag == "single" => Bond::Single,
                None if tag == "infinite" => Bond::Infinite,
                Some(("double", side)) => Bond::Double { short: pick(side)? },
                Some(("triple", side)) => Bond::Triple { short: pick(side)? },
                _ => return Err(D::Error::custom(format!("unknown bond {tag}"))),
            };
            edges.push(Edge { i, j, bond });
        }
        Ok(DynkinDiagram {
            base,
            rank: raw.rank,
            affine: raw.affine,
            nodes: raw.nodes,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a3_is_a_cycle() {
        let d = build_affine_diagram(BaseType::A, 3).unwrap();
        assert_eq!(d.nodes.len(), 4);
        assert_eq!(d.edges.len(), 4);
        assert!(d.edges.iter().all(|e| e.bond == Bond::Single));
        assert_eq!(classify_pair(&d, 0, 1).unwrap(), Rank2Type::A2);
        assert_eq!(classify_pair(&d, 0, 2).unwrap(), Rank2Type::A1xA1);
        assert!(classify_pair(&d, 2, 2).is_err());
    }

    #[test]
    fn affine_b6_shape() {
        let d = build_affine_diagram(BaseType::B, 6).unwrap();
        assert_eq!(d.nodes.len(), 7);
        let doubles = d
            .edges
            .iter()
            .filter(|e| matches!(e.bond, Bond::Double { .. }))
            .count();
        assert_eq!(doubles, 1);
        let deg2 = d.edges.iter().filter(|e| e.i == 2 || e.j == 2).count();
        assert_eq!(deg2, 3);
        assert_eq!(classify_pair(&d, 5, 6).unwrap(), Rank2Type::C2);
        assert_eq!(d.orient_pair(5, 6).unwrap(), (6, 5));
    }

    #[test]
    fn table_pair_counts() {
        let count = |b, l| count_pairs_by_type(&build_affine_diagram(b, l).unwrap()).unwrap();
        let a5 = count(BaseType::A, 5);
        assert_eq!(
            (a5[&Rank2Type::A1xA1], a5[&Rank2Type::A2], a5[&Rank2Type::C2]),
            (9, 6, 0)
        );
        let c6 = count(BaseType::C, 6);
        assert_eq!(
            (c6[&Rank2Type::A1xA1], c6[&Rank2Type::A2], c6[&Rank2Type::C2]),
            (15, 4, 2)
        );
        let f4 = count(BaseType::F, 4);
        assert_eq!(
            (f4[&Rank2Type::A1xA1], f4[&Rank2Type::A2], f4[&Rank2Type::C2]),
            (6, 3, 1)
        );
    }

    #[test]
    fn g2_and_small_rank_rejected_by_counting() {
        let g = build_affine_diagram(BaseType::G, 2).unwrap();
        assert!(count_pairs_by_type(&g).is_err());
        let a1 = build_affine_diagram(BaseType::A, 1).unwrap();
        assert!(count_pairs_by_type(&a1).is_err());
        assert!(classify_pair(&a1, 0, 1).is_err());
        assert!(build_affine_diagram(BaseType::B, 2).is_err());
        assert!(build_affine_diagram(BaseType::E, 5).is_err());
    }

    #[test]
    fn recognizes_finite_types() {
        for (b, l) in [
            (BaseType::A, 5),
            (BaseType::B, 4),
            (BaseType::C, 3),
            (BaseType::D, 5),
            (BaseType::E, 6),
            (BaseType::E, 7),
            (BaseType::E, 8),
            (BaseType::F, 4),
            (BaseType::G, 2),
        ] {
            let d = build_finite_diagram(b, l).unwrap();
            assert_eq!(
                d.classify_component(&d.nodes),
                Some(FiniteType { family: b, rank: l }),
                "{b}{l}"
            );
        }
        let c2 = build_finite_diagram(BaseType::B, 2).unwrap();
        assert_eq!(c2.classify_component(&c2.nodes).unwrap().to_string(), "C2");
    }

    #[test]
    fn affine_diagrams_are_not_finite() {
        for (b, l) in [(BaseType::A, 4), (BaseType::B, 5), (BaseType::D, 6), (BaseType::E, 8)] {
            let d = build_affine_diagram(b, l).unwrap();
            assert_eq!(d.classify_component(&d.nodes), None);
        }
    }

    #[test]
    fn root_counts() {
        let count = |k| positive_roots(k).positive_roots.len();
        assert_eq!(count(RootSystemKind::A1), 1);
        assert_eq!(count(RootSystemKind::A1xA1), 2);
        assert_eq!(count(RootSystemKind::A2), 3);
        assert_eq!(count(RootSystemKind::C2), 4);
        let c2 = positive_roots(RootSystemKind::C2);
        assert_eq!(
            c2.positive_roots,
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
        );
        assert!(c2.cartan.iter().enumerate().all(|(i, r)| r[i] == 2));
        assert!("G2".parse::<RootSystemKind>().is_err());
    }

    #[test]
    fn diagram_json_round_trip() {
        let d = build_affine_diagram(BaseType::C, 4).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("\"double>j\"") || json.contains("\"double>i\""));
        let back: DynkinDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
