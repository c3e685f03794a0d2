//! q-cyclotomic cosets modulo n = (q^m - 1)/(q - 1).

use crate::error::{Error, Result};
use crate::gf::prime_power;

/// Largest supported code length.
pub const MAX_LENGTH: u64 = 1 << 24;

/// `(q^m - 1)/(q - 1)`, checked.
pub fn code_length(q: u64, m: u32) -> Result<u64> {
    let qm = q.checked_pow(m).ok_or(Error::Overflow(q, m as u64))?;
    Ok((qm - 1) / (q - 1))
}

/// One coset `{s, sq, sq^2, ...} mod n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub leader: u64,
    /// Ascending.
    pub elements: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Flat leader and size tables for every residue mod n.
#[derive(Clone, Debug)]
pub struct CosetContext {
    q: u64,
    m: u32,
    n: u64,
    leader_of: Vec<u32>,
    size_of: Vec<u8>,
    leaders: Vec<u32>,
}

impl CosetContext {
    pub fn build(q: u64, m: u32) -> Result<CosetContext> {
        if prime_power(q).is_none() {
            return Err(Error::BadParameters(format!("q = {q} is not a prime power")));
        }
        if m < 2 {
            return Err(Error::BadParameters(format!("m = {m} must be at least 2")));
        }
        let n = code_length(q, m)?;
        if n > MAX_LENGTH {
            return Err(Error::Overflow(q, m as u64));
        }
        let mut leader_of = vec![u32::MAX; n as usize];
        let mut size_of = vec![0u8; n as usize];
        let mut leaders = Vec::new();
        let mut orbit = Vec::with_capacity(m as usize);
        for s in 0..n {
            if leader_of[s as usize] != u32::MAX {
                continue;
            }
            // scanning upward, the first unvisited residue is its orbit's minimum
            orbit.clear();
            let mut t = s;
            loop {
                orbit.push(t);
                leader_of[t as usize] = s as u32;
                t = t * q % n;
                if t == s {
                    break;
                }
            }
            for &t in &orbit {
                size_of[t as usize] = orbit.len() as u8;
            }
            leaders.push(s as u32);
        }
        Ok(CosetContext {
            q,
            m,
            n,
            leader_of,
            size_of,
            leaders,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    fn index(&self, s: u64) -> Result<usize> {
        if s >= self.n {
            return Err(Error::IndexOutOfRange {
                index: s,
                limit: self.n,
            });
        }
        Ok(s as usize)
    }

    pub fn leader(&self, s: u64) -> Result<u64> {
        Ok(self.leader_of[self.index(s)?] as u64)
    }

    pub fn size(&self, s: u64) -> Result<u32> {
        Ok(self.size_of[self.index(s)?] as u32)
    }

    pub fn is_leader(&self, s: u64) -> bool {
        s < self.n && self.leader_of[s as usize] as u64 == s
    }

    /// All coset leaders, ascending (0 first).
    pub fn leaders(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.leaders.iter().map(|&s| s as u64)
    }

    pub fn coset(&self, s: u64) -> Result<CyclotomicCoset> {
        let leader = self.leader(s)?;
        let mut elements = Vec::with_capacity(self.m as usize);
        let mut t = leader;
        loop {
            elements.push(t);
            t = t * self.q % self.n;
            if t == leader {
                break;
            }
        }
        elements.sort_unstable();
        Ok(CyclotomicCoset { leader, elements })
    }

    /// The `count` largest leaders, descending; clipped to the number of leaders.
    pub fn largest_leaders(&self, count: usize) -> Vec<u64> {
        self.leaders().rev().take(count).collect()
    }

    /// Smallest leader `>= s`, or `n` when none exists (0 is the leader of
    /// the residue n).
    pub fn smallest_leader_geq(&self, s: u64) -> u64 {
        let pos = self.leaders.partition_point(|&l| (l as u64) < s);
        self.leaders.get(pos).map_or(self.n, |&l| l as u64)
    }

    /// Leaders of the cosets meeting `{1, ..., delta - 1}`, ascending.
    pub fn leaders_below(&self, delta: u64) -> Vec<u64> {
        let upper = delta.min(self.n);
        let mut hit = vec![false; self.n as usize];
        let mut out = Vec::new();
        for s in 1..upper {
            let l = self.leader_of[s as usize] as usize;
            if !hit[l] {
                hit[l] = true;
                out.push(l as u64);
            }
        }
        out.sort_unstable();
        out
    }

    /// `|C_1 ∪ ... ∪ C_{delta-1}|`.
    pub fn union_size_below(&self, delta: u64) -> u64 {
        self.leaders_below(delta)
            .into_iter()
            .map(|l| self.size_of[l as usize] as u64)
            .sum()
    }
}

/// `q^{⌈m/2⌉}/(q-1)` rounded down: the range of `s` whose cosets provably
/// have full size m.
pub fn full_size_bound(q: u64, m: u32) -> Result<u64> {
    let top = q
        .checked_pow(m.div_ceil(2))
        .ok_or(Error::Overflow(q, m as u64))?;
    Ok(top / (q - 1))
}

/// Size of `C_s` for small `s`, where it is always `m`.
pub fn coset_size_small_s(q: u64, m: u32, s: u64) -> Result<u32> {
    let bound = full_size_bound(q, m)?;
    if s == 0 || s > bound {
        return Err(Error::SOutOfGuaranteedRange { s, bound });
    }
    Ok(m)
}

/// Closed-form i-th largest leader for q = 3, together with its coset size
/// when `i` is 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaClosedForm {
    pub value: u64,
    pub coset_size: Option<u32>,
}

/// `3^{m-1} - 1 - (3^{⌊(m-3)/2 + i⌋} - 1)/2` without range checks.
pub fn delta_formula(m: u32, i: u32) -> u64 {
    let e = (m as i64 - 3 + 2 * i as i64).div_euclid(2).max(0) as u32;
    3u64.pow(m - 1) - 1 - (3u64.pow(e) - 1) / 2
}

/// Upper index for which the general closed form is asserted.
pub fn delta_index_bound(m: u32) -> u32 {
    m.div_ceil(4)
}

pub fn delta_closed_form(q: u64, m: u32, i: u32) -> Result<DeltaClosedForm> {
    if q != 3 {
        return Err(Error::UnsupportedQ(q));
    }
    let max = delta_index_bound(m).max(2);
    if m < 2 {
        return Err(Error::MOutOfRange { m, min: 2 });
    }
    if i == 0 || (i > 2 && (m < 4 || i > delta_index_bound(m))) {
        return Err(Error::IOutOfRange { i, m, max });
    }
    if m > 40 {
        return Err(Error::Overflow(q, m as u64));
    }
    let coset_size = match i {
        1 => Some(if m % 2 == 1 { m } else { m / 2 }),
        2 => Some(m),
        _ => None,
    };
    Ok(DeltaClosedForm {
        value: delta_formula(m, i),
        coset_size,
    })
}
