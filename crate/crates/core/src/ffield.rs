//! Arithmetic in `F_q = F_{p^a}`.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `(c_0, …, c_{a-1})` are
//! the coordinates in the power basis `v_1 = 1, v_2 = x, …, v_a = x^{a-1}` of
//! the root `x` of the field's modulus. For `q ≤ 1024` addition and
//! multiplication go through precomputed tables.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const TABLE_LIMIT: u32 = 1024;
const FIELD_LIMIT: u64 = 1 << 24;

/// A field element, encoded by its base-`p` digits in the power basis.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^a`, rejecting anything that is not a prime power.
pub fn factor_prime_power(q: u64) -> Result<(u32, usize)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut a = 0;
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, a))
}

/// Serializable identification of a field: `{"p":3,"a":2,"modulus":[1,0,1]}`
/// with the modulus listed low-to-high, leading coefficient included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub a: usize,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    a: usize,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

// Polynomials over F_p are coefficient vectors, low degree first.

fn trim(poly: &mut Vec<u32>) {
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

fn poly_rem(num: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in monic.iter().enumerate() {
                let sub = (lead * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_from_index(index: u64, degree: usize, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut n = index;
    for _ in 0..degree {
        coeffs.push((n % p as u64) as u32);
        n /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let mut f = poly.to_vec();
    trim(&mut f);
    let deg = f.len() - 1;
    if deg == 0 || f[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        for idx in 0..(p as u64).pow(d as u32) {
            let g = monic_from_index(idx, d, p);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// `F_{p^a}` with the lexicographically least monic irreducible modulus,
    /// comparing coefficients from `x^{a-1}` down to the constant term.
    pub fn new(p: u32, a: usize) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if a == 0 {
            return Err(Error::Precondition("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(a as u32).unwrap_or(u64::MAX);
        if q > FIELD_LIMIT {
            return Err(Error::FieldTooLarge(q, FIELD_LIMIT));
        }
        let modulus = (0..q)
            .map(|idx| monic_from_index(idx, a, p))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self::build(p, a, modulus))
    }

    pub fn from_order(q: u64) -> Result<Self> {
        let (p, a) = factor_prime_power(q)?;
        Self::new(p, a)
    }

    /// Rebuilds a field from an exported descriptor, checking the modulus.
    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Self> {
        if !is_prime(desc.p as u64) {
            return Err(Error::NotPrime(desc.p as u64));
        }
        if desc.modulus.len() != desc.a + 1 || desc.modulus.iter().any(|&c| c >= desc.p) {
            return Err(Error::Malformed(format!("modulus {:?}", desc.modulus)));
        }
        if !is_irreducible(&desc.modulus, desc.p) {
            return Err(Error::Malformed(format!(
                "modulus {:?} is not monic irreducible over F_{}",
                desc.modulus, desc.p
            )));
        }
        let q = (desc.p as u64).pow(desc.a as u32);
        if q > FIELD_LIMIT {
            return Err(Error::FieldTooLarge(q, FIELD_LIMIT));
        }
        Ok(Self::build(desc.p, desc.a, desc.modulus.clone()))
    }

    fn build(p: u32, a: usize, modulus: Vec<u32>) -> Self {
        let q = p.pow(a as u32);
        let mut field = FiniteField {
            p,
            a,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            for x in 0..q {
                for y in 0..q {
                    add[x as usize * n + y as usize] = field.slow_add(x, y);
                    mul[x as usize * n + y as usize] = field.slow_mul(x, y);
                }
            }
            let neg = (0..q).map(|x| field.slow_neg(x)).collect();
            let mut inv = vec![0; n];
            for x in 1..q {
                for y in 1..q {
                    if mul[x as usize * n + y as usize] == 1 {
                        inv[x as usize] = y;
                        break;
                    }
                }
            }
            field.tables = Some(Tables { add, mul, neg, inv });
        }
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            a: self.a,
            modulus: self.modulus.clone(),
        }
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.a);
        for _ in 0..self.a {
            d.push(x % self.p);
            x /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_add(&self, x: u32, y: u32) -> u32 {
        let (dx, dy) = (self.digits(x), self.digits(y));
        let s: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % self.p).collect();
        self.undigits(&s)
    }

    fn slow_neg(&self, x: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(x)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.undigits(&d)
    }

    fn slow_mul(&self, x: u32, y: u32) -> u32 {
        let (dx, dy) = (self.digits(x), self.digits(y));
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.a - 1];
        for (i, &a) in dx.iter().enumerate() {
            for (j, &b) in dy.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + a as u64 * b as u64) % p) as u32;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.a, 0);
        self.undigits(&r)
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// The basis element `v_{i+1} = x^i` (0-based index).
    pub fn basis(&self, i: usize) -> Fq {
        assert!(i < self.a, "basis index {i} out of range for degree {}", self.a);
        Fq(self.p.pow(i as u32))
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.add[(x.0 * self.q + y.0) as usize]),
            None => Fq(self.slow_add(x.0, y.0)),
        }
    }

    pub fn neg(&self, x: Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.neg[x.0 as usize]),
            None => Fq(self.slow_neg(x.0)),
        }
    }

    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.mul[(x.0 * self.q + y.0) as usize]),
            None => Fq(self.slow_mul(x.0, y.0)),
        }
    }

    pub fn pow(&self, x: Fq, mut e: u64) -> Fq {
        let mut base = x;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: Fq) -> Result<Fq> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => Fq(t.inv[x.0 as usize]),
            None => self.pow(x, self.q as u64 - 2),
        })
    }

    /// `½ ∈ F_p`, defined only in odd characteristic.
    pub fn half(&self) -> Result<Fq> {
        if self.p == 2 {
            return Err(Error::Precondition("1/2 does not exist in characteristic 2".into()));
        }
        Ok(self.from_int((self.p as i64 + 1) / 2))
    }

    /// Coordinates of `u` in `(v_1, …, v_a)`, lifted to `{0, …, p-1}`.
    pub fn express_in_basis(&self, u: Fq) -> Vec<u32> {
        self.digits(u.0)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Fq {
        assert_eq!(coords.len(), self.a);
        let reduced: Vec<u32> = coords.iter().map(|c| c % self.p).collect();
        Fq(self.undigits(&reduced))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn contains(&self, x: Fq) -> bool {
        x.0 < self.q
    }
}

/// Integer coefficient tables expressing products of basis elements in the
/// basis. All entries lie in `{0, …, p-1}`; indices are 0-based.
///
/// * `c[k][k2]`: coordinates of `v_k · v_k2`
/// * `m[i]`: coordinates of `½ v_i` (odd `p` only)
/// * `r_neg[i]`: coordinates of `-v_i²`
/// * `d[i][j]`: coordinates of `v_i · v_j`
/// * `f[i][j]`: coordinates of `v_i · v_j²`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTables {
    pub c: Vec<Vec<Vec<u32>>>,
    m: Option<Vec<Vec<u32>>>,
    pub r_neg: Vec<Vec<u32>>,
    pub d: Vec<Vec<Vec<u32>>>,
    pub f: Vec<Vec<Vec<u32>>>,
    /// Sign of the `c` table relative to `v_k v_k2`; the commutator relators
    /// built from it hold in the SL₃ and Sp₄ matrix models with `+1`.
    pub c_sign: i8,
}

impl CoefficientTables {
    pub fn build(field: &FiniteField) -> Self {
        let a = field.a();
        let v: Vec<Fq> = (0..a).map(|i| field.basis(i)).collect();
        let coords = |x: Fq| field.express_in_basis(x);
        let prod_table = |g: &dyn Fn(Fq, Fq) -> Fq| -> Vec<Vec<Vec<u32>>> {
            v.iter()
                .map(|&x| v.iter().map(|&y| coords(g(x, y))).collect())
                .collect()
        };
        let c = prod_table(&|x, y| field.mul(x, y));
        let d = c.clone();
        let f = prod_table(&|x, y| field.mul(x, field.mul(y, y)));
        let r_neg = v
            .iter()
            .map(|&x| coords(field.neg(field.mul(x, x))))
            .collect();
        let m = field
            .half()
            .ok()
            .map(|h| v.iter().map(|&x| coords(field.mul(h, x))).collect());
        CoefficientTables {
            c,
            m,
            r_neg,
            d,
            f,
            c_sign: 1,
        }
    }

    /// Coordinates of `½ v_i`; fails in characteristic 2.
    pub fn m(&self) -> Result<&[Vec<u32>]> {
        self.m.as_deref().ok_or_else(|| {
            Error::Precondition("the ½-table m is undefined for p = 2".into())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_moduli() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FiniteField::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FiniteField::from_order(12), Err(Error::NotPrimePower(12))));
        assert_eq!(factor_prime_power(27).unwrap(), (3, 3));
    }

    #[test]
    fn f4_square_of_generator() {
        let f = FiniteField::new(2, 2).unwrap();
        let x = f.basis(1);
        assert_eq!(f.express_in_basis(f.mul(x, x)), vec![1, 1]);
    }

    #[test]
    fn half_in_f9() {
        let f = FiniteField::new(3, 2).unwrap();
        let h = f.half().unwrap();
        assert_eq!(h, Fq(2));
        assert_eq!(f.mul(h, f.basis(0)), Fq(2));
        assert!(FiniteField::new(2, 3).unwrap().half().is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = FiniteField::new(5, 2).unwrap();
        assert!(matches!(f.inv(Fq::ZERO), Err(Error::ZeroInverse)));
        for x in f.elements().skip(1) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Fq::ONE);
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = FiniteField::new(3, 3).unwrap();
        for x in f.elements() {
            for y in f.elements() {
                assert_eq!(f.mul(x, y).0, f.slow_mul(x.0, y.0));
                assert_eq!(f.add(x, y).0, f.slow_add(x.0, y.0));
            }
        }
    }

    #[test]
    fn coefficient_tables_small_cases() {
        let f = FiniteField::new(7, 1).unwrap();
        let t = CoefficientTables::build(&f);
        assert_eq!(t.c[0][0], vec![1]);
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(CoefficientTables::build(&f).m().unwrap()[0], vec![2]);
        let f = FiniteField::new(2, 2).unwrap();
        let t = CoefficientTables::build(&f);
        assert_eq!(t.d[1][1], vec![1, 1]);
        assert!(t.m().is_err());
    }

    #[test]
    fn descriptor_round_trip_checks_irreducibility() {
        let f = FiniteField::new(5, 2).unwrap();
        assert_eq!(FiniteField::from_descriptor(&f.descriptor()).unwrap(), f);
        let bad = FieldDescriptor {
            p: 5,
            a: 2,
            modulus: vec![1, 0, 1],
        };
        assert!(FiniteField::from_descriptor(&bad).is_err());
    }
}
