//! Weight distributions in closed form, ternary exponential sums, ranks of
//! the associated quadratic forms, power moments and classical bounds.

mod bounds;
mod rank;
mod sums;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use bounds::{bounds_report, griesmer_sum, secret_sharing_suitable, sphere_packing_max_d, BoundsReport, SecretSharing};
pub use rank::{rank_of_q, rank_of_q_with, QuadFormSpec, RankMethod};
pub use sums::{
    moment_checks, n13_count, s_value_table, t_value_table, u_value_table, MomentEntry,
    MomentReport, SumKind, SymmetricRow, TernarySums, ValueDistribution, ValueEntry,
    MOMENT_ENVELOPE,
};
pub use tables::{table_closed_form, Family};

/// Exact weight distribution of an `[n, k]` code over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: u64,
    pub k: u64,
    pub q: u64,
    counts: BTreeMap<u64, BigUint>,
}

impl WeightDistribution {
    /// Zero counts are dropped.
    pub fn new(n: u64, k: u64, q: u64, mut counts: BTreeMap<u64, BigUint>) -> WeightDistribution {
        counts.retain(|_, c| !c.is_zero());
        WeightDistribution { n, k, q, counts }
    }

    pub fn from_pairs(n: u64, k: u64, q: u64, pairs: &[(u64, u64)]) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        for &(w, c) in pairs {
            *counts.entry(w).or_insert_with(BigUint::zero) += c;
        }
        WeightDistribution::new(n, k, q, counts)
    }

    pub fn counts(&self) -> &BTreeMap<u64, BigUint> {
        &self.counts
    }

    pub fn count(&self, w: u64) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `Σ counts = q^k`, one zero word, no weight beyond n.
    pub fn is_consistent(&self) -> bool {
        self.total() == BigUint::from(self.q).pow(self.k as u32)
            && self.count(0).is_one()
            && self.counts.keys().all(|&w| w <= self.n)
    }

    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.counts.keys().copied().rfind(|&w| w > 0)
    }

    /// Weights whose counts differ, with both counts.
    pub fn diff(&self, other: &WeightDistribution) -> Vec<(u64, BigUint, BigUint)> {
        let weights: std::collections::BTreeSet<u64> =
            self.counts.keys().chain(other.counts.keys()).copied().collect();
        weights
            .into_iter()
            .filter_map(|w| {
                let (a, b) = (self.count(w), other.count(w));
                (a != b).then_some((w, a, b))
            })
            .collect()
    }
}

impl fmt::Display for WeightDistribution {
    /// Enumerator form `1+16z^25+8z^30+2z^40`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.counts {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *w == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}z^{w}")?;
            }
        }
        Ok(())
    }
}
