use std::ops::Mul;

/// A freely reduced word: a list of `(generator index, nonzero exponent)`
/// with no two adjacent letters on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn letter(g: usize, e: i64) -> Self {
        let mut w = Word::identity();
        w.push(g, e);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Total length `Σ |e|`.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.0 {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn comm(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `a^b = b a b⁻¹`
    pub fn conj(a: &Word, b: &Word) -> Word {
        b.mul(a).mul(&b.inverse())
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        words.into_iter().fold(Word::identity(), |acc, w| acc.mul(w))
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.0 == g).map(|l| l.1).sum()
    }

    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.0.iter().map(|&(g, e)| (f(g), e)))
    }

    /// Generator indices occurring in the word, sorted and deduplicated.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.0.iter().map(|l| l.0).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_letters([(0, 2), (1, 1), (1, -1), (0, -2), (2, 3)]);
        assert_eq!(w.letters(), &[(2, 3)]);
        let a = Word::gen(0);
        assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn commutator_shape() {
        let (a, b) = (Word::gen(0), Word::gen(1));
        let c = Word::comm(&a, &b);
        assert_eq!(c.letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert!(Word::comm(&a, &a).is_identity());
        assert_eq!(Word::conj(&a, &b).letters(), &[(1, 1), (0, 1), (1, -1)]);
        assert_eq!(c.exponent_sum(0), 0);
    }

    #[test]
    fn powers() {
        let a = Word::gen(3);
        assert_eq!(a.pow(5).letters(), &[(3, 5)]);
        assert_eq!(a.pow(-2).letters(), &[(3, -2)]);
        assert!(a.pow(0).is_identity());
    }
}
