use std::collections::{HashMap, VecDeque};

use super::MatrixGF;
use crate::ffield::FiniteField;
use crate::{Error, Result};

/// The subgroup generated by a list of matrices, enumerated in full.
#[derive(Clone, Debug)]
pub struct GroupEnumeration {
    pub generators: Vec<MatrixGF>,
    pub elements: Vec<MatrixGF>,
    index: HashMap<MatrixGF, usize>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &MatrixGF) -> bool {
        self.index.contains_key(m)
    }
}

fn bfs(
    start: Vec<MatrixGF>,
    generators: &[MatrixGF],
    field: &FiniteField,
    cap: usize,
) -> Result<(Vec<MatrixGF>, HashMap<MatrixGF, usize>)> {
    let mut elements = Vec::new();
    let mut index = HashMap::new();
    let mut queue = VecDeque::new();
    for m in start {
        if !index.contains_key(&m) {
            index.insert(m.clone(), elements.len());
            elements.push(m.clone());
            queue.push_back(m);
        }
    }
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.mul(&g, field);
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                index.insert(h.clone(), elements.len());
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok((elements, index))
}

/// Breadth-first closure of `{I}` under left multiplication by the
/// generators. In a finite group this is the generated subgroup.
pub fn closure(generators: &[MatrixGF], field: &FiniteField, cap: usize) -> Result<GroupEnumeration> {
    let dim = generators
        .first()
        .map(MatrixGF::dim)
        .ok_or_else(|| Error::Precondition("closure needs at least one generator".into()))?;
    if generators.iter().any(|g| g.dim() != dim) {
        return Err(Error::Precondition("generators differ in dimension".into()));
    }
    let (elements, index) = bfs(vec![MatrixGF::identity(dim)], generators, field, cap)?;
    Ok(GroupEnumeration {
        generators: generators.to_vec(),
        elements,
        index,
    })
}

fn log_p(n: usize, p: u64) -> Option<u32> {
    let (mut n, mut k) = (n as u64, 0);
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

/// Order of the Frattini subgroup `Φ(G) = [G,G]G^p` of a p-group, as the
/// normal closure of the generator commutators and p-th powers.
pub fn frattini_subgroup_order(group: &GroupEnumeration, p: u64, field: &FiniteField) -> Result<usize> {
    if log_p(group.order(), p).is_none() {
        return Err(Error::Precondition(format!(
            "group of order {} is not a {p}-group",
            group.order()
        )));
    }
    let gens = &group.generators;
    let dim = gens[0].dim();
    let inverses: Vec<MatrixGF> = gens
        .iter()
        .map(|g| g.inverse(field).expect("group element"))
        .collect();
    let mut candidates: VecDeque<MatrixGF> = VecDeque::new();
    for (i, g) in gens.iter().enumerate() {
        candidates.push_back(g.pow(p, field));
        for h in &gens[i + 1..] {
            candidates.push_back(MatrixGF::comm(g, h, field));
        }
    }
    let mut sub_gens: Vec<MatrixGF> = Vec::new();
    let mut sub = bfs(vec![MatrixGF::identity(dim)], &sub_gens, field, usize::MAX)?;
    // Grow the generating set until it is closed under conjugation by the
    // group generators; the resulting subgroup is then normal.
    while let Some(c) = candidates.pop_front() {
        if sub.1.contains_key(&c) {
            continue;
        }
        sub_gens.push(c.clone());
        sub = bfs(sub.0.clone(), &sub_gens, field, usize::MAX)?;
        for (g, gi) in gens.iter().zip(&inverses) {
            candidates.push_back(g.mul(&c, field).mul(gi, field));
        }
    }
    Ok(sub.0.len())
}

/// `d(G) = log_p |G/Φ(G)|`, the minimal number of generators of a p-group.
pub fn frattini_generator_count(group: &GroupEnumeration, p: u64, field: &FiniteField) -> Result<u32> {
    let phi = frattini_subgroup_order(group, p, field)?;
    Ok(log_p(group.order() / phi, p).expect("index of a subgroup of a p-group"))
}
