//! Closed-form weight distributions of the four ternary families built on
//! the two largest coset leaders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::WeightDistribution;
use crate::cosets::delta_formula;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Delta1,
    Delta1Tilde,
    Delta2,
    Delta2Tilde,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Delta1,
        Family::Delta1Tilde,
        Family::Delta2,
        Family::Delta2Tilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Delta1 => "delta1",
            Family::Delta1Tilde => "delta1-tilde",
            Family::Delta2 => "delta2",
            Family::Delta2Tilde => "delta2-tilde",
        }
    }

    pub fn even_like(self) -> bool {
        matches!(self, Family::Delta1Tilde | Family::Delta2Tilde)
    }

    /// Index of the coset leader used as designed distance (1 or 2).
    pub fn leader_index(self) -> u32 {
        match self {
            Family::Delta1 | Family::Delta1Tilde => 1,
            Family::Delta2 | Family::Delta2Tilde => 2,
        }
    }

    /// Designed distance for q = 3.
    pub fn designed_distance(self, m: u32) -> u64 {
        delta_formula(m, self.leader_index())
    }

    pub fn dimension(self, m: u32) -> u64 {
        let m = m as u64;
        let odd = m % 2 == 1;
        match (self, odd) {
            (Family::Delta1, true) => m + 1,
            (Family::Delta1, false) => (m + 2) / 2,
            (Family::Delta1Tilde, true) => m,
            (Family::Delta1Tilde, false) => m / 2,
            (Family::Delta2, true) => 2 * m + 1,
            (Family::Delta2, false) => (3 * m + 2) / 2,
            (Family::Delta2Tilde, true) => 2 * m,
            (Family::Delta2Tilde, false) => 3 * m / 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('-', "_") == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown family {s:?}")))
    }
}

fn p3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

fn exact(num: BigInt, den: i64) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r == BigInt::from(0), "closed form is not integral");
    q
}

/// Rows `(weight, frequency)` without the zero word.
fn rows(family: Family, m: u32) -> Vec<(BigInt, BigInt)> {
    let one = BigInt::from(1);
    let full = p3(m) - &one; // 3^m - 1
    let top = p3(m - 1);
    let a = p3(m) - &top; // 3^m - 3^{m-1}
    let n = exact(full.clone(), 2);
    if m.is_multiple_of(2) {
        let h = m / 2;
        match family {
            Family::Delta1 => vec![
                (&top - exact(p3(h - 1) + &one, 2), 2 * (p3(h) - &one)),
                (&top + p3(h - 1), p3(h) - &one),
                (n, BigInt::from(2)),
            ],
            Family::Delta1Tilde => vec![(&top + p3(h - 1), p3(h) - &one)],
            Family::Delta2Tilde => vec![
                (&top - p3(h - 1), exact(3 * (p3(h) - &one) * (p3(h) + &one).pow(2), 8)),
                (top.clone(), p3(h - 1) * &full),
                (&top + p3(h - 1), exact(3 * (p3(h) - &one) * (&top + &one), 4)),
                (&top + p3(h), exact((p3(h - 1) - &one) * &full, 8)),
            ],
            Family::Delta2 => vec![
                (exact(&a - p3(h) - &one, 2), exact((5 * p3(h - 1) - &one) * &full, 4)),
                (exact(&a - 2 * p3(h - 1), 2), exact(3 * (p3(h) - &one) * (p3(h) + &one).pow(2), 8)),
                (exact(&a - p3(h - 1) - &one, 2), exact(3 * (p3(h) - &one) * (&top + &one), 2)),
                (exact(a.clone(), 2), p3(h - 1) * &full),
                (exact(&a + p3(h - 1) - &one, 2), exact(3 * (p3(h) - &one) * (p3(h) + &one).pow(2), 4)),
                (exact(&a + 2 * p3(h - 1), 2), exact(3 * (p3(h) - &one) * (&top + &one), 4)),
                (exact(&a + p3(h) - &one, 2), p3(h - 1) * &full),
                (exact(&a + 2 * p3(h), 2), exact((p3(h - 1) - &one) * &full, 8)),
                (n, BigInt::from(2)),
            ],
        }
    } else {
        let h = (m - 1) / 2;
        let sign = if h.is_multiple_of(2) { one.clone() } else { -one.clone() };
        match family {
            Family::Delta1 => vec![
                (top.clone(), full.clone()),
                (&top - exact(&one + &sign * p3(h), 2), full.clone()),
                (&top - exact(&one - &sign * p3(h), 2), full.clone()),
                (n, BigInt::from(2)),
            ],
            Family::Delta1Tilde => vec![(top.clone(), full.clone())],
            Family::Delta2Tilde => vec![
                (&top - p3(h), exact((&top + p3(h)) * &full, 2)),
                (top.clone(), (&a + &one) * &full),
                (&top + p3(h), exact((&top - p3(h)) * &full, 2)),
            ],
            Family::Delta2 => vec![
                (exact(&a - p3(h + 1) - &one, 2), exact((&top - &one) * &full, 8)),
                (exact(&a - 2 * p3(h), 2), exact((&top + p3(h)) * &full, 2)),
                (
                    exact(&a - p3(h) - &one, 2),
                    exact((8 * p3(m) - &top - 8 * p3(h) + 9) * &full, 8),
                ),
                (exact(a.clone(), 2), (&a + &one) * &full),
                (
                    exact(&a + p3(h) - &one, 2),
                    exact((8 * p3(m) - &top + 8 * p3(h) + 9) * &full, 8),
                ),
                (exact(&a + 2 * p3(h), 2), exact((&top - p3(h)) * &full, 2)),
                (exact(&a + p3(h + 1) - &one, 2), exact((&top - &one) * &full, 8)),
                (n, BigInt::from(2)),
            ],
        }
    }
}

/// Closed-form weight distribution of a ternary family at `m`.
pub fn table_closed_form(family: Family, q: u64, m: u32) -> Result<WeightDistribution> {
    if q != 3 {
        return Err(Error::UnsupportedQ(q));
    }
    let min = if m.is_multiple_of(2) { 4 } else { 3 };
    if m < min {
        return Err(Error::MOutOfRange { m, min });
    }
    if m > 39 {
        return Err(Error::Overflow(q, m as u64));
    }
    let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
    counts.insert(0, BigUint::from(1u8));
    for (w, c) in rows(family, m) {
        assert!(!c.is_negative() && !w.is_negative(), "negative table entry");
        let w = w.to_u64().expect("weight fits in u64");
        *counts.entry(w).or_default() += c.to_biguint().expect("nonnegative");
    }
    let n = (3u64.pow(m) - 1) / 2;
    Ok(WeightDistribution::new(n, family.dimension(m), 3, counts))
}
