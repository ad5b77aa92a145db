use crate::ffield::{FiniteField, Fq};

/// A square matrix over `F_q`, row-major. Equality and hashing use the raw
/// entries, so two matrices are equal iff they are entrywise equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixGF {
    n: usize,
    entries: Vec<Fq>,
}

impl MatrixGF {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Fq::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = Fq::ONE;
        }
        MatrixGF { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Fq) {
        self.entries[i * self.n + j] = x;
    }

    pub fn is_identity(&self) -> bool {
        *self == MatrixGF::identity(self.n)
    }

    /// `I + Σ c · E_ij`
    pub fn unipotent(n: usize, field: &FiniteField, terms: &[(usize, usize, Fq)]) -> Self {
        let mut m = MatrixGF::identity(n);
        for &(i, j, c) in terms {
            let cur = m.get(i, j);
            m.set(i, j, field.add(cur, c));
        }
        m
    }

    pub fn mul(&self, other: &MatrixGF, field: &FiniteField) -> MatrixGF {
        let n = self.n;
        let mut entries = vec![Fq::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.entries[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = other.entries[k * n + j];
                    if !y.is_zero() {
                        let e = &mut entries[i * n + j];
                        *e = field.add(*e, field.mul(x, y));
                    }
                }
            }
        }
        MatrixGF { n, entries }
    }

    pub fn transpose(&self) -> MatrixGF {
        let n = self.n;
        let mut t = MatrixGF::identity(n);
        for i in 0..n {
            for j in 0..n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self, field: &FiniteField) -> Option<MatrixGF> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = MatrixGF::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(piv, j));
                    a.set(col, j, y);
                    a.set(piv, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(piv, j));
                    inv.set(col, j, y);
                    inv.set(piv, j, x);
                }
            }
            let s = field.inv(a.get(col, col)).ok()?;
            for j in 0..n {
                a.set(col, j, field.mul(s, a.get(col, j)));
                inv.set(col, j, field.mul(s, inv.get(col, j)));
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r == col || f.is_zero() {
                    continue;
                }
                let nf = field.neg(f);
                for j in 0..n {
                    a.set(r, j, field.add(a.get(r, j), field.mul(nf, a.get(col, j))));
                    inv.set(r, j, field.add(inv.get(r, j), field.mul(nf, inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }

    pub fn pow(&self, mut e: u64, field: &FiniteField) -> MatrixGF {
        let mut acc = MatrixGF::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            base = base.mul(&base, field);
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn comm(a: &MatrixGF, b: &MatrixGF, field: &FiniteField) -> MatrixGF {
        let ai = a.inverse(field).expect("invertible");
        let bi = b.inverse(field).expect("invertible");
        a.mul(b, field).mul(&ai, field).mul(&bi, field)
    }

    /// `a^b = b a b⁻¹`
    pub fn conj(a: &MatrixGF, b: &MatrixGF, field: &FiniteField) -> MatrixGF {
        let bi = b.inverse(field).expect("invertible");
        b.mul(a, field).mul(&bi, field)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            self.get(i, i) == Fq::ONE && (0..i).all(|j| self.get(i, j).is_zero())
        })
    }
}
