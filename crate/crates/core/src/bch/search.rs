//! Minimum distance: exhaustive, or by low-weight syndrome collisions.
//!
//! The code is cyclic, so some minimum-weight codeword has a nonzero symbol
//! at position 0, and after scaling that symbol is 1. A weight-w candidate
//! is split into a left part (position 0 plus `w-1-r` positions) and a
//! right part of `r` positions; the right syndromes are hashed and each left
//! syndrome looks up its negation.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{BchCode, BchContext, Codeword};
use crate::error::{Error, Result};
use crate::gf::Elem;

/// Largest supported weight budget.
pub const MAX_BUDGET: u32 = 6;

/// Bound on stored plus probed syndromes for one search.
const SEARCH_CAP: f64 = 4e9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Enumerate { cap: u64 },
    LowWeightSearch { budget: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinDistance {
    Exact(u64),
    /// Certified lower bound: no nonzero codeword of smaller weight.
    AtLeast(u64),
}

impl MinDistance {
    pub fn exact(self) -> Option<u64> {
        match self {
            MinDistance::Exact(d) => Some(d),
            MinDistance::AtLeast(_) => None,
        }
    }

    pub fn lower_bound(self) -> u64 {
        match self {
            MinDistance::Exact(d) | MinDistance::AtLeast(d) => d,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowWeightResult {
    pub distance: MinDistance,
    pub witness: Option<Codeword>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Codeword(Codeword),
    NotApplicable,
}

type Key = Vec<u32>;

struct Syndromes<'a> {
    ctx: &'a BchContext,
    n: usize,
    len: usize,
    // scaled[(i * (q-1) + c-1) * len + t] = c · β^{i·r_t}
    scaled: Vec<Elem>,
}

impl<'a> Syndromes<'a> {
    fn new(code: &'a BchCode) -> Syndromes<'a> {
        let ctx = code.context().as_ref();
        let f = ctx.field();
        let sub = ctx.subfield();
        let n = code.n() as usize;
        let q1 = code.q() as usize - 1;
        let len = code.zero_cosets.len();
        let mut scaled = Vec::with_capacity(n * q1 * len);
        for i in 0..n {
            for c in 1..=q1 as u8 {
                let ce = sub.to_elem(c);
                for &r in &code.zero_cosets {
                    scaled.push(f.mul(ce, ctx.beta_pow((i as u64 * r % n as u64) as i64)));
                }
            }
        }
        Syndromes { ctx, n, len, scaled }
    }

    fn q1(&self) -> usize {
        self.ctx.q() as usize - 1
    }

    fn column(&self, i: usize, c: u8) -> &[Elem] {
        let at = (i * self.q1() + c as usize - 1) * self.len;
        &self.scaled[at..at + self.len]
    }

    fn add(&self, acc: &[Elem], col: &[Elem]) -> Vec<Elem> {
        let f = self.ctx.field();
        acc.iter().zip(col).map(|(&a, &b)| f.add(a, b)).collect()
    }

    fn key(&self, s: &[Elem]) -> Key {
        s.iter().map(|e| e.0).collect()
    }

    fn neg_key(&self, s: &[Elem]) -> Key {
        let f = self.ctx.field();
        s.iter().map(|&e| f.neg(e).0).collect()
    }

    /// Visits every choice of `count` increasing positions `>= from` with
    /// nonzero coefficients; stops early when `visit` returns `Some`.
    fn combos<T>(
        &self,
        count: usize,
        from: usize,
        acc: &[Elem],
        chosen: &mut Vec<(u32, u8)>,
        visit: &mut dyn FnMut(&[Elem], &[(u32, u8)]) -> Option<T>,
    ) -> Option<T> {
        if count == 0 {
            return visit(acc, chosen);
        }
        for i in from..=self.n - count {
            for c in 1..=self.q1() as u8 {
                let next = self.add(acc, self.column(i, c));
                chosen.push((i as u32, c));
                let found = self.combos(count - 1, i + 1, &next, chosen, visit);
                chosen.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

fn binom_weighted(n: f64, r: usize, q1: f64) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i as f64) / (i + 1) as f64 * q1)
}

impl BchCode {
    pub fn min_distance(&self, strategy: Strategy) -> Result<MinDistance> {
        match strategy {
            Strategy::Enumerate { cap } => {
                let hist = self.weight_histogram(cap)?;
                let d = hist
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, &c)| c > 0)
                    .map(|(w, _)| w as u64)
                    .ok_or_else(|| Error::BadParameters("the code is zero".into()))?;
                Ok(MinDistance::Exact(d))
            }
            Strategy::LowWeightSearch { budget } => Ok(self.low_weight_search(budget)?.distance),
        }
    }

    /// Number of syndromes stored plus probed by a search up to `budget`.
    pub fn search_cost(&self, budget: u32) -> f64 {
        let n = self.n() as f64;
        let q1 = (self.q() - 1) as f64;
        (1..=budget as usize)
            .map(|w| {
                let r = (w - 1) / 2;
                binom_weighted(n, r, q1) + binom_weighted(n, w - 1 - r, q1)
            })
            .sum()
    }

    /// Exact distance when some nonzero codeword has weight `<= budget`,
    /// otherwise the certified bound `d > budget`.
    pub fn low_weight_search(&self, budget: u32) -> Result<LowWeightResult> {
        if budget == 0 || budget > MAX_BUDGET {
            return Err(Error::BudgetTooSmall(budget));
        }
        if self.search_cost(budget) > SEARCH_CAP {
            return Err(Error::TooLarge {
                what: "low-weight search",
                q: self.q(),
                k: budget,
                cap: SEARCH_CAP as u64,
            });
        }
        let syn = Syndromes::new(self);
        for w in 1..=budget as usize {
            if let Some(word) = self.search_weight(&syn, w) {
                return Ok(LowWeightResult {
                    distance: MinDistance::Exact(word.weight as u64),
                    witness: Some(word),
                });
            }
        }
        Ok(LowWeightResult {
            distance: MinDistance::AtLeast((budget as u64 + 1).max(self.bch_bound())),
            witness: None,
        })
    }

    fn search_weight(&self, syn: &Syndromes<'_>, w: usize) -> Option<Codeword> {
        let right = (w - 1) / 2;
        let left = w - 1 - right;
        let zero = vec![Elem::ZERO; syn.len];
        let mut table: HashMap<Key, Vec<(u32, u8)>> = HashMap::new();
        syn.combos::<()>(right, 1, &zero, &mut Vec::new(), &mut |s, chosen| {
            table.entry(syn.key(s)).or_insert_with(|| chosen.to_vec());
            None
        });
        let one = self.context().subfield().to_symbol(Elem::ONE).expect("one");
        let start = syn.column(0, one).to_vec();
        let assemble = |l: &[(u32, u8)], r: &[(u32, u8)]| -> Option<Codeword> {
            let sub = self.context().subfield();
            let mut v = vec![0u8; syn.n];
            v[0] = one;
            for &(i, c) in l.iter().chain(r) {
                v[i as usize] = sub.add(v[i as usize], c);
            }
            let word = Codeword::new(v);
            (word.weight > 0 && self.contains(&word.symbols)).then_some(word)
        };
        let probe = |s: &[Elem], chosen: &[(u32, u8)]| -> Option<Codeword> {
            table
                .get(&syn.neg_key(s))
                .and_then(|r| assemble(chosen, r))
        };
        if left == 0 {
            return probe(&start, &[]);
        }
        // split the left enumeration on its first position
        (1..=syn.n - left)
            .into_par_iter()
            .find_map_first(|i| {
                (1..=syn.q1() as u8).find_map(|c| {
                    let acc = syn.add(&start, syn.column(i, c));
                    let mut chosen = vec![(i as u32, c)];
                    syn.combos(left - 1, i + 1, &acc, &mut chosen, &mut |s, ch| probe(s, ch))
                })
            })
    }
}

/// The equally spaced 0/1 word of weight 3 or 4 in `C(n, q, m, 3)`, when
/// that word is a codeword.
pub fn locator_witness(q: u64, m: u32, target_weight: u32) -> Result<Witness> {
    let ctx = BchContext::new(q, m)?;
    let n = ctx.n();
    if !(3..=4).contains(&target_weight) || n % target_weight as u64 != 0 {
        return Ok(Witness::NotApplicable);
    }
    let code = ctx.code(3, false)?;
    let one = ctx.subfield().to_symbol(Elem::ONE).expect("one");
    let mut v = vec![0u8; n as usize];
    let step = n / target_weight as u64;
    for j in 0..target_weight as u64 {
        v[(j * step) as usize] = one;
    }
    Ok(if code.contains(&v) {
        Witness::Codeword(Codeword::new(v))
    } else {
        Witness::NotApplicable
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bch::build_code;

    #[test]
    fn delta_two_examples() {
        let c = build_code(3, 3, 2, false).unwrap();
        assert_eq!(c.min_distance(Strategy::LowWeightSearch { budget: 4 }).unwrap(), MinDistance::Exact(3));
        let c = build_code(3, 4, 2, false).unwrap();
        assert_eq!(c.min_distance(Strategy::LowWeightSearch { budget: 4 }).unwrap(), MinDistance::Exact(2));
    }

    #[test]
    fn budget_limits() {
        let c = build_code(3, 3, 2, false).unwrap();
        assert_eq!(c.low_weight_search(0).unwrap_err(), Error::BudgetTooSmall(0));
        assert_eq!(c.low_weight_search(7).unwrap_err(), Error::BudgetTooSmall(7));
    }

    #[test]
    fn search_agrees_with_enumeration() {
        for (q, m) in [(3u64, 3u32), (4, 3), (5, 3)] {
            let ctx = BchContext::new(q, m).unwrap();
            for delta in 2..ctx.n() {
                let code = ctx.code(delta, false).unwrap();
                let Ok(exact) = code.min_distance(Strategy::Enumerate { cap: 1 << 24 }) else {
                    continue;
                };
                let d = exact.exact().unwrap();
                let found = code.low_weight_search(4).unwrap();
                if d <= 4 {
                    assert_eq!(found.distance, exact, "q={q} m={m} delta={delta}");
                    let w = found.witness.unwrap();
                    assert_eq!(w.weight as u64, d);
                    assert!(code.contains(&w.symbols));
                } else {
                    assert!(found.distance.lower_bound() <= d);
                    assert!(found.distance.exact().is_none());
                }
            }
        }
    }

    #[test]
    fn witnesses() {
        assert!(matches!(locator_witness(3, 4, 4).unwrap(), Witness::Codeword(c) if c.weight == 4));
        assert_eq!(locator_witness(3, 5, 3).unwrap(), Witness::NotApplicable);
    }
}
