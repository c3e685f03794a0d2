//! Griesmer, sphere-packing and Singleton checks, and the weight-ratio
//! condition for secret sharing.

use num_bigint::BigUint;
use num_traits::One;

use super::WeightDistribution;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    /// `d >= designed distance`, when one was supplied.
    pub bch_ok: Option<bool>,
    pub griesmer_sum: u64,
    /// The Griesmer sum equals n.
    pub griesmer_meets: bool,
    /// Largest d allowed by the sphere-packing bound.
    pub sphere_packing_max_d: u64,
    /// `n - k + 1 - d`.
    pub singleton_slack: i64,
}

/// `Σ_{i<k} ⌈d/q^i⌉`.
pub fn griesmer_sum(k: u64, d: u64, q: u64) -> u64 {
    let mut sum = 0;
    let mut power = 1u64;
    for i in 0..k {
        if power > d {
            // every remaining term is 1
            return sum + (k - i);
        }
        sum += d.div_ceil(power);
        power = power.saturating_mul(q);
    }
    sum
}

/// Largest d with `Σ_{i <= ⌊(d-1)/2⌋} (q-1)^i C(n, i) <= q^{n-k}`.
pub fn sphere_packing_max_d(n: u64, k: u64, q: u64) -> u64 {
    let budget = BigUint::from(q).pow((n - k) as u32);
    let mut volume = BigUint::one();
    let mut term = BigUint::one();
    let mut t = 0u64;
    // t is the largest radius whose ball fits
    while t < n {
        term = term * (q - 1) * (n - t) / (t + 1);
        if &volume + &term > budget {
            break;
        }
        volume += &term;
        t += 1;
    }
    (2 * t + 2).min(n)
}

pub fn bounds_report(n: u64, k: u64, d: u64, q: u64, designed: Option<u64>) -> BoundsReport {
    let griesmer_sum = griesmer_sum(k, d, q);
    BoundsReport {
        bch_ok: designed.map(|delta| d >= delta),
        griesmer_sum,
        griesmer_meets: griesmer_sum == n,
        sphere_packing_max_d: sphere_packing_max_d(n, k, q),
        singleton_slack: n as i64 - k as i64 + 1 - d as i64,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecretSharing {
    pub suitable: bool,
    pub w_min: u64,
    pub w_max: u64,
}

/// `w_min / w_max > (q-1)/q`, compared as `w_min·q > w_max·(q-1)`.
pub fn secret_sharing_suitable(wd: &WeightDistribution, q: u64) -> Result<SecretSharing> {
    let (Some(w_min), Some(w_max)) = (wd.min_nonzero_weight(), wd.max_weight()) else {
        return Err(Error::DegenerateDistribution);
    };
    Ok(SecretSharing {
        suitable: w_min as u128 * q as u128 > w_max as u128 * (q as u128 - 1),
        w_min,
        w_max,
    })
}
