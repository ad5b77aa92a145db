use num_rational::Ratio;

use super::Presentation;
use crate::linalg::rank_mod_p;
use crate::rootsys::{build_affine_diagram, count_pairs_by_type, BaseType, DynkinDiagram, Rank2Type};
use crate::{Error, Result};

/// Relation counts for the Sylow pro-p subgroup of a Chevalley group over
/// `F_q((t))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountBounds {
    /// The per-type closed-form upper bound on `r`.
    pub upper: u64,
    /// The pair-count formula evaluated on the affine diagram.
    pub pair_formula: u64,
    /// Golod-Shafarevich lower bound `a²(l+1)²/4`.
    pub gs_lower: Ratio<u64>,
    /// Minimal generator count `a(l+1)`.
    pub d: u64,
    /// The part of the closed form that is linear in `a`.
    pub linear_term: Ratio<i64>,
    /// `upper == pair_formula`.
    pub agrees: bool,
}

/// Relators needed per C2 pair beyond the two root groups.
pub fn rc2_size(a: u64, p_even: bool) -> u64 {
    if p_even {
        8 * a * a
    } else {
        (5 * a * a + 11 * a) / 2
    }
}

/// `a(a+1)(l+1)/2 + n_{A1xA1} a² + n_{A2} a(a+1) + n_{C2} |R_{C2}|`.
pub fn pair_count_formula(diag: &DynkinDiagram, a: u64, p: u64) -> Result<u64> {
    let counts = count_pairs_by_type(diag)?;
    let n = diag.nodes.len() as u64;
    let c = |t| counts[&t] as u64;
    Ok(a * (a + 1) * n / 2
        + c(Rank2Type::A1xA1) * a * a
        + c(Rank2Type::A2) * a * (a + 1)
        + c(Rank2Type::C2) * rc2_size(a, p == 2))
}

/// Closed-form upper bound, GS lower bound and generator count for type
/// `base_l` over `F_{p^a}`. The pair-count formula is evaluated alongside
/// and compared.
pub fn count_bounds(base: BaseType, l: usize, a: usize, p: u64) -> Result<CountBounds> {
    let in_scope = match base {
        BaseType::A | BaseType::B | BaseType::C => l >= 3,
        BaseType::D => l >= 4,
        BaseType::E => (6..=8).contains(&l),
        BaseType::F => l == 4,
        BaseType::G => false,
    };
    if !in_scope || a == 0 {
        return Err(Error::UnsupportedType(format!(
            "{base}{l} with a = {a} is outside the counted range"
        )));
    }
    let even = p == 2;
    let (a, l) = (a as i64, l as i64);
    let n = l + 1;
    let quad = a * a * n * n;
    let lin = 3 * a * n;
    // (quadratic part, linear part), both to be halved
    let (extra_quad, extra_lin) = match (base, even) {
        (BaseType::A, _) => (0, 0),
        (BaseType::B, false) => (3 * a * a, 7 * a),
        (BaseType::B, true) => (14 * a * a, -4 * a),
        (BaseType::C, false) => (6 * a * a, 16 * a),
        (BaseType::C, true) => (28 * a * a, -6 * a),
        (BaseType::D, _) | (BaseType::E, _) => (0, -2 * a),
        (BaseType::F, _) | (BaseType::G, _) => (0, 0),
    };
    let (upper, linear_term) = if base == BaseType::F {
        if even {
            (15 * a * a + 4 * a, Ratio::from_integer(4 * a))
        } else {
            (14 * a * a + 11 * a, Ratio::from_integer(11 * a))
        }
    } else {
        let num = quad + lin + extra_quad + extra_lin;
        debug_assert_eq!(num % 2, 0);
        (num / 2, Ratio::new(lin + extra_lin, 2))
    };
    let diag = build_affine_diagram(base, l as usize)?;
    let pair_formula = pair_count_formula(&diag, a as u64, p)?;
    let upper = upper as u64;
    Ok(CountBounds {
        upper,
        pair_formula,
        gs_lower: Ratio::new((a * a * n * n) as u64, 4),
        d: (a * n) as u64,
        linear_term,
        agrees: upper == pair_formula,
    })
}

/// Rank of the exponent-sum matrix mod `p`, and `|generators| - rank`: the
/// dimension of `G/[G,G]G^p`.
pub fn mod_p_abelianization_rank(pres: &Presentation, p: u64) -> (usize, usize) {
    let n = pres.d_count();
    let rows: Vec<Vec<i64>> = pres
        .words()
        .map(|w| {
            let mut row = vec![0i64; n];
            for &(g, e) in w.letters() {
                if g < n {
                    row[g] += e;
                }
            }
            row
        })
        .collect();
    let rank = if rows.is_empty() { 0 } else { rank_mod_p(&rows, p) };
    (rank, n - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{GeneratorSymbol, Relator, Word};

    #[test]
    fn closed_form_examples() {
        let a3 = count_bounds(BaseType::A, 3, 1, 5).unwrap();
        assert_eq!(a3.upper, 14);
        assert_eq!(a3.gs_lower, Ratio::from_integer(4));
        assert_eq!(a3.d, 4);
        assert!(a3.agrees);
        assert_eq!(count_bounds(BaseType::B, 3, 1, 3).unwrap().upper, 19);
        assert_eq!(count_bounds(BaseType::C, 6, 2, 3).unwrap().upper, 147);
        let f4 = count_bounds(BaseType::F, 4, 2, 2).unwrap();
        assert_eq!(f4.upper, 68);
        assert!(count_bounds(BaseType::A, 2, 1, 3).is_err());
        assert!(count_bounds(BaseType::G, 2, 1, 3).is_err());
    }

    #[test]
    fn rank_of_single_generator_relator() {
        let pres = Presentation {
            family: "test".into(),
            field: crate::ffield::FiniteField::new(3, 1).unwrap().descriptor(),
            generators: vec![GeneratorSymbol::node(0, 1)],
            relators: vec![Relator::new("x", Word::gen(0))],
            diagram: None,
            notes: Default::default(),
        };
        assert_eq!(mod_p_abelianization_rank(&pres, 3), (1, 0));
    }
}
