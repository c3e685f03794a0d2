//! q-ary digit words, their nondecreasing-sequence (NDS) decompositions, and
//! coset-leader facts derived from them.
//!
//! Words are stored most significant digit first. A word is an NDS when its
//! digits never decrease left to right; every word splits uniquely into a
//! minimal concatenation of NDS blocks, cut wherever a digit drops.

use std::cmp::Ordering;
use std::fmt;

use crate::cosets::CosetContext;
use crate::error::{Error, Result};

/// Fixed-length q-ary word, most significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QaryWord {
    q: u32,
    digits: Vec<u8>,
}

impl fmt::Display for QaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl QaryWord {
    pub fn new(q: u32, digits: Vec<u8>) -> Result<QaryWord> {
        if !(2..=256).contains(&q) {
            return Err(Error::BadParameters(format!("radix {q} outside 2..=256")));
        }
        if let Some(&d) = digits.iter().find(|&&d| d as u32 >= q) {
            return Err(Error::OutOfRange {
                value: d as u64,
                limit: q as u64,
            });
        }
        Ok(QaryWord { q, digits })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The integer `Σ digits · q^position`.
    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .fold(0u64, |acc, &d| acc * self.q as u64 + d as u64)
    }

    pub fn is_nds(&self) -> bool {
        self.digits.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_binary(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    pub fn concat(&self, other: &QaryWord) -> QaryWord {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        QaryWord { q: self.q, digits }
    }

    fn repeat(&self, times: usize) -> QaryWord {
        QaryWord {
            q: self.q,
            digits: self.digits.repeat(times),
        }
    }
}

/// `s` as a length-`m` word in radix `q`.
pub fn expand(s: u64, q: u32, m: u32) -> Result<QaryWord> {
    let limit = (q as u64)
        .checked_pow(m)
        .ok_or(Error::Overflow(q as u64, m as u64))?;
    if s >= limit {
        return Err(Error::OutOfRange { value: s, limit });
    }
    let mut digits = vec![0u8; m as usize];
    let mut r = s;
    for slot in digits.iter_mut().rev() {
        *slot = (r % q as u64) as u8;
        r /= q as u64;
    }
    QaryWord::new(q, digits)
}

/// Minimal split of a word into nondecreasing blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdsDecomposition {
    blocks: Vec<QaryWord>,
}

impl NdsDecomposition {
    pub fn blocks(&self) -> &[QaryWord] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn concat(&self) -> QaryWord {
        let q = self.blocks.first().map_or(2, |b| b.q);
        let digits = self.blocks.iter().flat_map(|b| b.digits.iter().copied()).collect();
        QaryWord { q, digits }
    }

    pub fn value(&self) -> u64 {
        self.concat().value()
    }
}

pub fn decompose(w: &QaryWord) -> NdsDecomposition {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=w.digits.len() {
        if i == w.digits.len() || w.digits[i] < w.digits[i - 1] {
            blocks.push(QaryWord {
                q: w.q,
                digits: w.digits[start..i].to_vec(),
            });
            start = i;
        }
    }
    NdsDecomposition { blocks }
}

/// Order on NDS blocks of any length: a block is larger than each of its
/// proper prefixes; otherwise the first differing digit decides.
pub fn compare_blocks(v: &QaryWord, w: &QaryWord) -> Ordering {
    for (a, b) in v.digits.iter().zip(&w.digits) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    v.digits.len().cmp(&w.digits.len())
}

/// Compares two equal-length words through their decompositions, block by
/// block.
pub fn compare(a: &QaryWord, b: &QaryWord) -> Result<Ordering> {
    if a.q != b.q || a.len() != b.len() {
        return Err(Error::LengthMismatch);
    }
    compare_decompositions(&decompose(a), &decompose(b))
}

pub fn compare_decompositions(a: &NdsDecomposition, b: &NdsDecomposition) -> Result<Ordering> {
    let (la, lb): (usize, usize) = (
        a.blocks.iter().map(QaryWord::len).sum(),
        b.blocks.iter().map(QaryWord::len).sum(),
    );
    let qa = a.blocks.first().map(|x| x.q);
    let qb = b.blocks.first().map(|x| x.q);
    if la != lb || (qa.is_some() && qb.is_some() && qa != qb) {
        return Err(Error::LengthMismatch);
    }
    for (v, w) in a.blocks.iter().zip(&b.blocks) {
        match compare_blocks(v, w) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// First `k` digits.
pub fn truncate(v: &QaryWord, k: usize) -> Result<QaryWord> {
    if k == 0 || k > v.len() {
        return Err(Error::KOutOfRange { k, len: v.len() });
    }
    Ok(QaryWord {
        q: v.q,
        digits: v.digits[..k].to_vec(),
    })
}

/// Smallest NDS of the same length that is larger than the NDS `v`.
pub fn successor(v: &QaryWord) -> Result<QaryWord> {
    let top = (v.q - 1) as u8;
    let pos = v
        .digits
        .iter()
        .rposition(|&d| d < top)
        .ok_or(Error::NoSuccessor)?;
    let mut digits = v.digits.clone();
    let bumped = digits[pos] + 1;
    for d in &mut digits[pos..] {
        *d = bumped;
    }
    Ok(QaryWord { q: v.q, digits })
}

/// Outcome of the binary-word leader test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeaderClass {
    Leader,
    NotLeader { leader: u64 },
    /// Some digit exceeds 1, so the rotation argument does not apply.
    Inapplicable,
}

/// Coset leader of a word with 0/1 digits.
///
/// Multiplying by q rotates such a word without any reduction mod n, so the
/// leader is the smallest block rotation. Only rotations that start at a
/// block boundary can be minimal, and all of them are tried: starting at a
/// minimal block alone is not enough (for q = 3, m = 5 the word
/// (1)(0,0,1)(0) has leader (0,0,1)(0)(1)).
pub fn binary_word_leader(s: u64, ctx: &CosetContext) -> Result<Option<u64>> {
    if s >= ctx.n() {
        return Err(Error::OutOfRange {
            value: s,
            limit: ctx.n(),
        });
    }
    let word = expand(s, ctx.q() as u32, ctx.m())?;
    if !word.is_binary() {
        return Ok(None);
    }
    let dec = decompose(&word);
    let blocks = dec.blocks();
    let best = (0..blocks.len())
        .map(|j| {
            blocks[j..]
                .iter()
                .chain(&blocks[..j])
                .fold(0u64, |acc, b| {
                    b.digits
                        .iter()
                        .fold(acc, |a, &d| a * ctx.q() + d as u64)
                })
        })
        .min()
        .expect("a word of length m >= 1 has a block");
    Ok(Some(best))
}

/// Classifies `s` via the block structure of its 0/1 word.
pub fn is_leader_binary_word(s: u64, ctx: &CosetContext) -> Result<LeaderClass> {
    Ok(match binary_word_leader(s, ctx)? {
        None => LeaderClass::Inapplicable,
        Some(l) if l == s => LeaderClass::Leader,
        Some(leader) => LeaderClass::NotLeader { leader },
    })
}

/// The sufficient test for `s` being its own leader: a single block, or a
/// run of equal leading blocks each smaller than every later block.
pub fn leader_by_block_pattern(word: &QaryWord) -> bool {
    if !word.is_binary() {
        return false;
    }
    let dec = decompose(word);
    let blocks = dec.blocks();
    let first = &blocks[0];
    let j = blocks.iter().take_while(|b| *b == first).count();
    blocks[j..]
        .iter()
        .all(|b| compare_blocks(first, b) == Ordering::Less)
}

/// How [`smallest_leader_geq`] obtained its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BosePath {
    /// The block formula holds with equality.
    ClosedForm,
    /// The block formula gave a lower bound; the answer is from a scan.
    BoundThenScan,
    /// The formula's hypotheses fail; the answer is from a scan.
    Scan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallestLeader {
    pub value: u64,
    pub path: BosePath,
    /// Value of the block formula when its hypotheses hold.
    pub formula: Option<u64>,
}

/// Block formula for the smallest leader `>= s`: with leading block `V` of
/// length `l`, `m = a·l + b`, returns `V^a` when `b = 0` and
/// `V^a · S(T_b(V))` otherwise, plus whether it is exact.
///
/// Requires at least two blocks, a 0/1 leading block, and the leading block
/// larger than the second.
pub fn leader_formula(s: u64, q: u32, m: u32) -> Result<Option<(u64, bool)>> {
    let word = expand(s, q, m)?;
    let dec = decompose(&word);
    let blocks = dec.blocks();
    if blocks.len() < 2 {
        return Ok(None);
    }
    let lead = &blocks[0];
    if !lead.is_binary() || compare_blocks(lead, &blocks[1]) != Ordering::Greater {
        return Ok(None);
    }
    let l = lead.len();
    let (a, b) = (m as usize / l, m as usize % l);
    if b == 0 {
        return Ok(Some((lead.repeat(a).value(), true)));
    }
    let tail = match successor(&truncate(lead, b)?) {
        Ok(t) => t,
        Err(Error::NoSuccessor) => return Ok(None),
        Err(e) => return Err(e),
    };
    let exact = tail.digits.last() == Some(&1);
    Ok(Some((lead.repeat(a).concat(&tail).value(), exact)))
}

/// Smallest coset leader `>= s`, by the block formula when it applies and
/// by scanning the leader table otherwise.
pub fn smallest_leader_geq(s: u64, ctx: &CosetContext) -> Result<SmallestLeader> {
    if s >= ctx.n() {
        return Err(Error::OutOfRange {
            value: s,
            limit: ctx.n(),
        });
    }
    let formula = leader_formula(s, ctx.q() as u32, ctx.m())?;
    Ok(match formula {
        Some((v, true)) => SmallestLeader {
            value: v,
            path: BosePath::ClosedForm,
            formula: Some(v),
        },
        Some((v, false)) => SmallestLeader {
            value: ctx.smallest_leader_geq(s),
            path: BosePath::BoundThenScan,
            formula: Some(v),
        },
        None => SmallestLeader {
            value: ctx.smallest_leader_geq(s),
            path: BosePath::Scan,
            formula: None,
        },
    })
}
