//! Exhaustive codeword enumeration.
//!
//! The message space GF(q)^k is walked as GF(p)^{k·s} in p-ary Gray-code
//! order, so each step adds one scaled, shifted copy of the generator to the
//! current codeword and the weight is updated from the touched positions only.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{BchCode, Codeword};
use crate::analysis::WeightDistribution;
use crate::error::{Error, Result};
use crate::gf::{Elem, Subfield};

/// Default bound on `q^k · n`, the total number of symbols produced.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 28;

/// Number of prefix chunks handed to the thread pool.
const CHUNKS: u64 = 1 << 10;

struct Row {
    shift: usize,
    scaled: Vec<u8>,
}

struct Walker<'a> {
    sub: &'a Subfield,
    p: u8,
    rows: Vec<Row>,
    n: usize,
}

impl<'a> Walker<'a> {
    fn new(code: &'a BchCode) -> Walker<'a> {
        let ctx = code.context();
        let sub = ctx.subfield();
        // GF(p)-basis of GF(q): powers of a generator of GF(q)*.
        let basis: Vec<u8> = (0..ctx.s)
            .map(|j| {
                let e = ctx.field().pow(sub.generator(), j as u64);
                sub.to_symbol(e).expect("subfield element")
            })
            .collect();
        let mut rows = Vec::new();
        for i in 0..code.k as usize {
            for &b in &basis {
                rows.push(Row {
                    shift: i,
                    scaled: code.generator.iter().map(|&g| sub.mul(b, g)).collect(),
                });
            }
        }
        Walker {
            sub,
            p: ctx.p as u8,
            rows,
            n: code.n() as usize,
        }
    }

    fn apply(&self, d: usize, c: &mut [u8], w: &mut usize) {
        let row = &self.rows[d];
        for (idx, &g) in row.scaled.iter().enumerate() {
            if g == 0 {
                continue;
            }
            let pos = row.shift + idx;
            let old = c[pos];
            let new = self.sub.add(old, g);
            c[pos] = new;
            if old == 0 {
                *w += 1;
            } else if new == 0 {
                *w -= 1;
            }
        }
    }

    /// Codeword for the digits above `low`, given as a p-ary integer.
    fn start(&self, low: usize, prefix: u64) -> (Vec<u8>, usize) {
        let mut c = vec![0u8; self.n];
        let mut w = 0;
        let mut v = prefix;
        for d in low..self.rows.len() {
            for _ in 0..v % self.p as u64 {
                self.apply(d, &mut c, &mut w);
            }
            v /= self.p as u64;
        }
        (c, w)
    }

    /// Gray walk over digits `0..low`, visiting every codeword once.
    fn walk(&self, low: usize, c: &mut [u8], w: &mut usize, mut visit: impl FnMut(&[u8], usize)) {
        visit(c, *w);
        let mut counter = vec![0u8; low];
        loop {
            let mut t = 0;
            while t < low && counter[t] == self.p - 1 {
                counter[t] = 0;
                t += 1;
            }
            if t == low {
                break;
            }
            counter[t] += 1;
            self.apply(t, c, w);
            visit(c, *w);
        }
    }
}

fn check_cap(code: &BchCode, cap: u64) -> Result<()> {
    let too_large = Error::TooLarge {
        what: "code",
        q: code.q(),
        k: code.k as u32,
        cap,
    };
    let count = u32::try_from(code.k)
        .ok()
        .and_then(|k| code.q().checked_pow(k))
        .ok_or(too_large.clone())?;
    match count.checked_mul(code.n()) {
        Some(total) if total <= cap => Ok(()),
        _ => Err(too_large),
    }
}

/// Sequential iterator over all `q^k` codewords.
pub struct CodewordIter<'a> {
    walker: Walker<'a>,
    c: Vec<u8>,
    w: usize,
    counter: Vec<u8>,
    started: bool,
    done: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else {
            let p = self.walker.p;
            let mut t = 0;
            while t < self.counter.len() && self.counter[t] == p - 1 {
                self.counter[t] = 0;
                t += 1;
            }
            if t == self.counter.len() {
                self.done = true;
                return None;
            }
            self.counter[t] += 1;
            self.walker.apply(t, &mut self.c, &mut self.w);
        }
        Some(Codeword {
            symbols: self.c.clone(),
            weight: self.w,
        })
    }
}

impl BchCode {
    /// Every codeword exactly once, starting with zero.
    pub fn enumerate_codewords(&self, cap: u64) -> Result<CodewordIter<'_>> {
        check_cap(self, cap)?;
        let walker = Walker::new(self);
        let digits = walker.rows.len();
        Ok(CodewordIter {
            c: vec![0; walker.n],
            w: 0,
            counter: vec![0; digits],
            walker,
            started: false,
            done: false,
        })
    }

    /// Weight histogram indexed by weight, by parallel Gray walks.
    pub fn weight_histogram(&self, cap: u64) -> Result<Vec<u64>> {
        check_cap(self, cap)?;
        let walker = Walker::new(self);
        let digits = walker.rows.len();
        let p = walker.p as u64;
        let mut top = 0;
        while top < digits && p.pow(top as u32) < CHUNKS {
            top += 1;
        }
        let low = digits - top;
        let n = walker.n;
        let hist = (0..p.pow(top as u32))
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut h, prefix| {
                    let (mut c, mut w) = walker.start(low, prefix);
                    walker.walk(low, &mut c, &mut w, |_, w| h[w] += 1);
                    h
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(hist)
    }

    /// Exact weight distribution by exhaustive enumeration.
    pub fn weight_distribution_bruteforce(&self, cap: u64) -> Result<WeightDistribution> {
        let hist = self.weight_histogram(cap)?;
        Ok(self.distribution_from_histogram(&hist))
    }

    fn distribution_from_histogram(&self, hist: &[u64]) -> WeightDistribution {
        let counts: BTreeMap<u64, BigUint> = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w as u64, BigUint::from(c)))
            .collect();
        WeightDistribution::new(self.n(), self.k, self.q(), counts)
    }

    /// Weight distribution of the trace representation: all coefficient
    /// tuples `(a_j)` over the nonzero representatives.
    pub fn trace_weight_distribution(&self, cap: u64) -> Result<WeightDistribution> {
        check_cap(self, cap)?;
        let ctx = self.context();
        let f = ctx.field();
        let sub = ctx.subfield();
        let n = self.n() as usize;
        // table[j][e] = trace codeword of the e-th element of GF(q^{m_j})
        // (0 first, then powers of a generator) on representative j alone.
        let mut tables: Vec<Vec<Vec<u8>>> = Vec::new();
        for &r in &self.nonzero_reps {
            let mj = ctx.cosets().size(r)?;
            let order = ctx.q.pow(mj);
            let step = (f.order() - 1) / (order - 1);
            let mut rows = vec![vec![0u8; n]];
            for e in 0..order - 1 {
                let a = f.pow(f.generator(), e * step);
                let coeffs: Vec<Elem> = self
                    .nonzero_reps
                    .iter()
                    .map(|&x| if x == r { a } else { Elem::ZERO })
                    .collect();
                rows.push(ctx.trace_codeword(&self.nonzero_reps, &coeffs)?.symbols);
            }
            tables.push(rows);
        }
        if tables.is_empty() {
            return Ok(self.distribution_from_histogram(&[1]));
        }
        let (first, rest) = tables.split_first().expect("nonempty");
        let hist = first
            .par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut h, row| {
                    accumulate(sub, rest, row.clone(), &mut h);
                    h
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(self.distribution_from_histogram(&hist))
    }
}

fn accumulate(sub: &Subfield, tables: &[Vec<Vec<u8>>], acc: Vec<u8>, hist: &mut [u64]) {
    match tables.split_first() {
        None => hist[acc.iter().filter(|&&c| c != 0).count()] += 1,
        Some((rows, rest)) => {
            for row in rows {
                let next: Vec<u8> = acc.iter().zip(row).map(|(&a, &b)| sub.add(a, b)).collect();
                accumulate(sub, rest, next, hist);
            }
        }
    }
}
