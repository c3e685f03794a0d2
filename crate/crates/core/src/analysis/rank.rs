//! Rank of `Q(x) = Tr(a x^{e1} + b x^{e2})` over GF(3).
//!
//! For odd m the radical of the bilinear form is the kernel of
//! `L(x) = b^{3^{(m+3)/2}} x^{3^{(m+3)/2}} + a^{3^{(m+1)/2}} x^{3^{(m+1)/2}} +
//! a x^{3^{(m-1)/2}} + b x^{3^{(m-3)/2}}`, and the rank is m minus the
//! dimension of that kernel.

use super::sums::{SumKind, TernarySums};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Largest m for which root counting walks the whole field.
pub const ROOT_COUNT_ENVELOPE: u32 = 7;

/// A form `Tr(a x^{3^{(m-1)/2}+1} + b x^{3^{(m-3)/2}+1})` over GF(3^m).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadFormSpec {
    pub m: u32,
    pub a: Elem,
    pub b: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Rank of the Gram matrix `B(e_i, e_j)` on a polynomial basis.
    GramMatrix,
    /// m minus the kernel dimension of the GF(3)-linear map L.
    Kernel,
    /// Exhaustive root count of `L(x) = 0`.
    RadicalRoots,
    /// Exhaustive root count of the degree-27 form
    /// `b^{3^{(m+3)/2}} x^27 + a^{3^{(m+1)/2}} x^9 + a x^3 + b x`.
    ReducedRoots,
}

/// Rank by the kernel of L, building the field for `spec.m`.
pub fn rank_of_q(spec: QuadFormSpec) -> Result<u32> {
    let sums = TernarySums::odd(spec.m)?;
    rank_of_q_with(&sums, spec.a, spec.b, RankMethod::Kernel)
}

pub fn rank_of_q_with(sums: &TernarySums, a: Elem, b: Elem, method: RankMethod) -> Result<u32> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroForm);
    }
    let m = sums.m();
    let f = sums.field();
    match method {
        RankMethod::GramMatrix => Ok(gram_rank(sums, a, b)),
        RankMethod::Kernel => {
            if sums.kind() != SumKind::T {
                return Err(Error::EvenM(m));
            }
            let cols: Vec<Vec<u32>> = basis(f).map(|e| f.digits(radical(f, a, b, e))).collect();
            Ok(rank_mod3(cols))
        }
        RankMethod::RadicalRoots | RankMethod::ReducedRoots => {
            if sums.kind() != SumKind::T {
                return Err(Error::EvenM(m));
            }
            if m > ROOT_COUNT_ENVELOPE {
                return Err(Error::EnvelopeExceeded(m));
            }
            let count = f
                .elements()
                .filter(|&x| {
                    let v = if method == RankMethod::RadicalRoots {
                        radical(f, a, b, x)
                    } else {
                        reduced(f, a, b, x)
                    };
                    v.is_zero()
                })
                .count();
            let mut e = 0;
            let mut c = count;
            while c > 1 && c % 3 == 0 {
                c /= 3;
                e += 1;
            }
            if c != 1 {
                return Err(Error::BadParameters(format!(
                    "root count {count} is not a power of 3"
                )));
            }
            Ok(m - e)
        }
    }
}

fn basis(f: &Field) -> impl Iterator<Item = Elem> + '_ {
    (0..f.degree()).map(move |i| {
        let mut d = vec![0u32; f.degree() as usize];
        d[i as usize] = 1;
        f.from_digits(&d)
    })
}

fn frob(f: &Field, x: Elem, k: u32) -> Elem {
    f.pow(x, 3u64.pow(k))
}

fn radical(f: &Field, a: Elem, b: Elem, x: Elem) -> Elem {
    let m = f.degree();
    let terms = [
        f.mul(frob(f, b, (m + 3) / 2), frob(f, x, (m + 3) / 2)),
        f.mul(frob(f, a, m.div_ceil(2)), frob(f, x, m.div_ceil(2))),
        f.mul(a, frob(f, x, (m - 1) / 2)),
        f.mul(b, frob(f, x, (m - 3) / 2)),
    ];
    terms.into_iter().fold(Elem::ZERO, |acc, t| f.add(acc, t))
}

fn reduced(f: &Field, a: Elem, b: Elem, x: Elem) -> Elem {
    let m = f.degree();
    let terms = [
        f.mul(frob(f, b, (m + 3) / 2), frob(f, x, 3)),
        f.mul(frob(f, a, m.div_ceil(2)), frob(f, x, 2)),
        f.mul(a, frob(f, x, 1)),
        f.mul(b, x),
    ];
    terms.into_iter().fold(Elem::ZERO, |acc, t| f.add(acc, t))
}

fn gram_rank(sums: &TernarySums, a: Elem, b: Elem) -> u32 {
    let f = sums.field();
    let e: Vec<Elem> = basis(f).collect();
    let q = |x: Elem| sums.quadratic_form(a, b, x);
    let rows = e
        .iter()
        .map(|&x| {
            e.iter()
                .map(|&y| (q(f.add(x, y)) + 6 - q(x) - q(y)) % 3)
                .collect()
        })
        .collect();
    rank_mod3(rows)
}

/// Rank over GF(3) of the matrix with the given rows.
fn rank_mod3(mut rows: Vec<Vec<u32>>) -> u32 {
    let mut rank = 0u32;
    let width = rows.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(pivot) = (rank as usize..rows.len()).find(|&r| !rows[r][col].is_multiple_of(3)) else {
            continue;
        };
        let rk = rank as usize;
        rows.swap(rk, pivot);
        // 1 and 2 are their own inverses mod 3
        let inv = rows[rk][col] % 3;
        for v in rows[rk].iter_mut() {
            *v = *v * inv % 3;
        }
        for r in 0..rows.len() {
            if r != rk && !rows[r][col].is_multiple_of(3) {
                let c = rows[r][col] % 3;
                let pivot = rows[rk].clone();
                for (v, p) in rows[r].iter_mut().zip(&pivot).take(width) {
                    *v = (*v + 3 * 3 - c * p) % 3;
                }
            }
        }
        rank += 1;
    }
    rank
}
