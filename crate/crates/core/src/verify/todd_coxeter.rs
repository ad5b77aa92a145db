//! Coset enumeration over the trivial subgroup (HLT strategy: every
//! relator is scanned and filled at each coset in turn, then the coset's row
//! is completed). Cosets are numbered by first definition; dead cosets are
//! reclaimed by compaction when the table runs out of room.

use serde::Serialize;

use crate::presentations::Presentation;
use crate::{Error, Result};

pub const DEFAULT_MAX_COSETS: usize = 4_000_000;

/// `CHEV_MAX_COSETS` if set and valid, else [`DEFAULT_MAX_COSETS`].
pub fn max_cosets_from_env() -> usize {
    std::env::var("CHEV_MAX_COSETS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_COSETS)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TcStatus {
    Closed,
    Overflowed,
}

const UNDEF: u32 = 0;

/// Coset table: cosets are `1..=n`, coset 1 is the subgroup itself;
/// column `2g` is generator `g` and `2g+1` its inverse.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub ngens: usize,
    pub status: TcStatus,
    /// Largest number of cosets alive at once during the run.
    pub max_live: usize,
    /// Total coset definitions made.
    pub total_defined: usize,
    ncols: usize,
    n: usize,
    live: usize,
    table: Vec<u32>,
    rep: Vec<u32>,
}

impl CosetTable {
    /// Live cosets; the group order when the table is closed.
    pub fn live_cosets(&self) -> usize {
        self.live
    }

    pub fn order(&self) -> Option<usize> {
        (self.status == TcStatus::Closed).then_some(self.live)
    }

    /// The permutation of generator `g` (or its inverse) on cosets
    /// renumbered `0..live`; `None` unless the table is closed.
    pub fn permutation(&self, col: usize) -> Option<Vec<usize>> {
        if self.status != TcStatus::Closed {
            return None;
        }
        let mut new_id = vec![usize::MAX; self.n + 1];
        let mut next = 0;
        for c in 1..=self.n {
            if self.rep[c] as usize == c {
                new_id[c] = next;
                next += 1;
            }
        }
        Some(
            (1..=self.n)
                .filter(|&c| self.rep[c] as usize == c)
                .map(|c| new_id[self.table[c * self.ncols + col] as usize])
                .collect(),
        )
    }
}

struct Enumerator<'a> {
    t: CosetTable,
    cap: usize,
    relators: &'a [Vec<u32>],
    queue: Vec<u32>,
}

#[derive(Debug)]
struct Overflow;

impl Enumerator<'_> {
    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.t.table[c as usize * self.t.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.t.table[c as usize * self.t.ncols + x as usize] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.t.rep[c as usize] == c
    }

    fn define(&mut self, c: u32, x: u32) -> std::result::Result<(), Overflow> {
        if self.t.n >= self.cap {
            return Err(Overflow);
        }
        self.t.n += 1;
        self.t.live += 1;
        self.t.total_defined += 1;
        self.t.max_live = self.t.max_live.max(self.t.live);
        let d = self.t.n as u32;
        self.t.table.resize((self.t.n + 1) * self.t.ncols, UNDEF);
        self.t.rep.push(d);
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.t.rep[root as usize] != root {
            root = self.t.rep[root as usize];
        }
        while self.t.rep[c as usize] != root {
            let next = self.t.rep[c as usize];
            self.t.rep[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (x, y) = (self.find(a), self.find(b));
        if x == y {
            return;
        }
        let (lo, hi) = (x.min(y), x.max(y));
        self.t.rep[hi as usize] = lo;
        self.t.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.t.ncols as u32 {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.set(g, x, UNDEF);
                if self.get(d, x ^ 1) == g {
                    self.set(d, x ^ 1, UNDEF);
                }
                let mu = self.find(g);
                let nu = self.find(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let ninv = self.get(nu, x ^ 1);
                    if ninv != UNDEF {
                        self.merge(mu, ninv);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> std::result::Result<(), Overflow> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0i64, w.len() as i64 - 1);
        loop {
            while i <= j {
                let nf = self.get(f, w[i as usize]);
                if nf == UNDEF {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i {
                let nb = self.get(b, w[j as usize] ^ 1);
                if nb == UNDEF {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// Renumbers live cosets `1..=live` preserving order; returns the new
    /// number of coset `c`.
    fn compact(&mut self, c: u32) -> u32 {
        let ncols = self.t.ncols;
        let mut new_id = vec![UNDEF; self.t.n + 1];
        let mut next = 0u32;
        for k in 1..=self.t.n {
            if self.t.rep[k] as usize == k {
                next += 1;
                new_id[k] = next;
            }
        }
        let mut table = vec![UNDEF; (next as usize + 1) * ncols];
        for k in 1..=self.t.n {
            let nk = new_id[k] as usize;
            if nk == 0 {
                continue;
            }
            for x in 0..ncols {
                let v = self.t.table[k * ncols + x];
                table[nk * ncols + x] = if v == UNDEF { UNDEF } else { new_id[v as usize] };
            }
        }
        self.t.table = table;
        self.t.n = next as usize;
        self.t.rep = (0..=next).collect();
        new_id[c as usize]
    }
}

/// Enumerates the cosets of the trivial subgroup in the group presented by
/// `pres`. Overflow is reported through [`TcStatus::Overflowed`], not as an
/// error.
pub fn todd_coxeter(pres: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    pres.validate()?;
    if max_cosets == 0 {
        return Err(Error::Precondition("max_cosets must be positive".into()));
    }
    let ngens = pres.d_count();
    let ncols = 2 * ngens;
    let relators: Vec<Vec<u32>> = pres
        .words()
        .map(|w| {
            w.letters()
                .iter()
                .flat_map(|&(g, e)| {
                    let col = 2 * g as u32 + u32::from(e < 0);
                    std::iter::repeat(col).take(e.unsigned_abs() as usize)
                })
                .collect()
        })
        .collect();
    // short relators first keeps the peak table size down
    let mut relators = relators;
    relators.sort_by_key(Vec::len);
    let margin = relators.iter().map(Vec::len).sum::<usize>() + ncols;
    let mut en = Enumerator {
        t: CosetTable {
            ngens,
            status: TcStatus::Closed,
            max_live: 1,
            total_defined: 1,
            ncols,
            n: 1,
            live: 1,
            table: vec![UNDEF; 2 * ncols],
            rep: vec![0, 1],
        },
        cap: max_cosets,
        relators: &relators,
        queue: Vec::new(),
    };
    let mut c: u32 = 1;
    let result = (|| -> std::result::Result<(), Overflow> {
        while c as usize <= en.t.n {
            if en.is_live(c) {
                if en.t.n + margin > en.cap && en.t.live < en.t.n {
                    c = en.compact(c);
                }
                let rels = en.relators;
                for w in rels {
                    en.scan_and_fill(c, w)?;
                    if !en.is_live(c) {
                        break;
                    }
                }
                if en.is_live(c) {
                    for x in 0..ncols as u32 {
                        if en.get(c, x) == UNDEF {
                            en.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    })();
    let mut t = en.t;
    if result.is_err() {
        t.status = TcStatus::Overflowed;
    }
    Ok(t)
}
