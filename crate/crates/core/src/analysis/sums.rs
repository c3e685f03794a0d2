//! Ternary exponential sums of two-term quadratic forms.
//!
//! For odd m, `T(a, b) = Σ_x ζ^{Tr(a x^{3^{(m-1)/2}+1} + b x^{3^{(m-3)/2}+1})}`
//! and `S(a, b) = T(a, b) + T(2a, 2b)`. For even m,
//! `U(a, b) = Σ_x ζ^{Tr(a x^{3^{m/2}+1} + b x^{3^{m/2-1}+1})}` with `a` in
//! the half-degree subfield. Values are exact elements of Z[ζ].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Zeta3};

/// Largest m for which [`moment_checks`] sweeps all pairs.
pub const MOMENT_ENVELOPE: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    /// Odd m: the sums T and S.
    T,
    /// Even m: the sum U.
    U,
}

/// Field, exponents and trace table for one m.
pub struct TernarySums {
    m: u32,
    kind: SumKind,
    field: Field,
    exps: [u64; 2],
    trace: Vec<u8>,
}

impl TernarySums {
    /// Sums T and S over GF(3^m), m odd and at least 3.
    pub fn odd(m: u32) -> Result<TernarySums> {
        if m.is_multiple_of(2) {
            return Err(Error::EvenM(m));
        }
        if m < 3 {
            return Err(Error::MOutOfRange { m, min: 3 });
        }
        TernarySums::build(m, SumKind::T, [3u64.pow((m - 1) / 2) + 1, 3u64.pow((m - 3) / 2) + 1])
    }

    /// The sum U over GF(3^m), m even and at least 4.
    pub fn even(m: u32) -> Result<TernarySums> {
        if m % 2 == 1 {
            return Err(Error::OddM(m));
        }
        if m < 4 {
            return Err(Error::MOutOfRange { m, min: 4 });
        }
        TernarySums::build(m, SumKind::U, [3u64.pow(m / 2) + 1, 3u64.pow(m / 2 - 1) + 1])
    }

    fn build(m: u32, kind: SumKind, exps: [u64; 2]) -> Result<TernarySums> {
        if m > 13 {
            return Err(Error::EnvelopeExceeded(m));
        }
        let field = Field::new(3, m)?;
        let trace = field
            .trace_table_by_log()
            .expect("small fields are tabled")
            .to_vec();
        Ok(TernarySums {
            m,
            kind,
            field,
            exps,
            trace,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn kind(&self) -> SumKind {
        self.kind
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The two exponents of the quadratic form.
    pub fn exponents(&self) -> [u64; 2] {
        self.exps
    }

    /// Admissible values of the first coefficient: all of GF(3^m) for T,
    /// the subfield GF(3^{m/2}) for U.
    pub fn first_coefficients(&self) -> Vec<Elem> {
        match self.kind {
            SumKind::T => self.field.elements().collect(),
            SumKind::U => self
                .field
                .elements()
                .filter(|&x| self.field.in_subfield(x, self.m / 2))
                .collect(),
        }
    }

    /// `Tr(a x^{e1} + b x^{e2})` as an integer mod 3.
    pub fn quadratic_form(&self, a: Elem, b: Elem, x: Elem) -> u32 {
        let f = &self.field;
        let v = f.add(
            f.mul(a, f.pow(x, self.exps[0])),
            f.mul(b, f.pow(x, self.exps[1])),
        );
        f.absolute_trace(v)
    }

    /// `Σ_x ζ^{Tr(a x^{e1} + b x^{e2})}` by one pass over the logarithms.
    fn phase_sum(&self, a: Elem, b: Elem) -> Zeta3 {
        let f = &self.field;
        let order = f.order() - 1;
        let mut counts = [1i64, 0, 0]; // x = 0
        let la = f.log(a);
        let lb = f.log(b);
        let (e1, e2) = (self.exps[0] % order, self.exps[1] % order);
        let (mut i1, mut i2) = (la.unwrap_or(0), lb.unwrap_or(0));
        for _ in 0..order {
            let mut t = 0u8;
            if la.is_some() {
                t += self.trace[i1 as usize];
            }
            if lb.is_some() {
                t += self.trace[i2 as usize];
            }
            counts[(t % 3) as usize] += 1;
            i1 += e1;
            if i1 >= order {
                i1 -= order;
            }
            i2 += e2;
            if i2 >= order {
                i2 -= order;
            }
        }
        Zeta3::new(counts[0] - counts[2], counts[1] - counts[2])
    }

    pub fn t_sum(&self, a: Elem, b: Elem) -> Result<Zeta3> {
        if self.kind != SumKind::T {
            return Err(Error::EvenM(self.m));
        }
        Ok(self.phase_sum(a, b))
    }

    /// `S(a, b) = Σ_{y ∈ GF(3)*} T(ya, yb)`.
    pub fn s_sum(&self, a: Elem, b: Elem) -> Result<Zeta3> {
        let two = self.field.from_int(2);
        let f = &self.field;
        Ok(self.t_sum(a, b)? + self.t_sum(f.mul(two, a), f.mul(two, b))?)
    }

    pub fn u_sum(&self, a: Elem, b: Elem) -> Result<Zeta3> {
        if self.kind != SumKind::U {
            return Err(Error::OddM(self.m));
        }
        if !self.field.in_subfield(a, self.m / 2) {
            return Err(Error::BadParameters(format!(
                "first coefficient must lie in GF(3^{})",
                self.m / 2
            )));
        }
        Ok(self.phase_sum(a, b))
    }

    /// Rank of the form, read off the absolute value `|Σ|² = 3^{2m-r}`.
    pub fn rank_from_value(&self, v: Zeta3) -> u32 {
        let mut norm = v.norm();
        let mut e = 0;
        while norm > 1 {
            norm /= 3;
            e += 1;
        }
        2 * self.m - e
    }

    fn distribution(&self, ranked: bool, sum: impl Fn(Elem, Elem) -> Zeta3 + Sync) -> ValueDistribution {
        let firsts = self.first_coefficients();
        let seconds: Vec<Elem> = self.field.elements().collect();
        let counts = firsts
            .par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<Zeta3, u64>, &a| {
                for &b in &seconds {
                    *acc.entry(sum(a, b)).or_insert(0) += 1;
                }
                acc
            })
            .reduce(BTreeMap::new, |mut x, y| {
                for (k, v) in y {
                    *x.entry(k).or_insert(0) += v;
                }
                x
            });
        let mut entries: Vec<ValueEntry> = counts
            .into_iter()
            .map(|(value, c)| ValueEntry {
                value,
                rank: if ranked { self.rank_from_value(value) } else { 0 },
                multiplicity: BigUint::from(c),
            })
            .collect();
        entries.sort_by(|x, y| y.rank.cmp(&x.rank).then(x.value.cmp(&y.value)));
        ValueDistribution { entries }
    }

    /// Multiset of `T(a, b)` over all pairs.
    pub fn t_distribution(&self) -> Result<ValueDistribution> {
        if self.kind != SumKind::T {
            return Err(Error::EvenM(self.m));
        }
        Ok(self.distribution(true, |a, b| self.phase_sum(a, b)))
    }

    /// Multiset of `S(a, b)`, without rank tags: S is 0 on two rank
    /// classes, so its value does not determine a rank.
    pub fn s_distribution(&self) -> Result<ValueDistribution> {
        if self.kind != SumKind::T {
            return Err(Error::EvenM(self.m));
        }
        let two = self.field.from_int(2);
        let f = &self.field;
        Ok(self.distribution(false, |a, b| {
            self.phase_sum(a, b) + self.phase_sum(f.mul(two, a), f.mul(two, b))
        }))
    }

    pub fn u_distribution(&self) -> Result<ValueDistribution> {
        if self.kind != SumKind::U {
            return Err(Error::OddM(self.m));
        }
        Ok(self.distribution(true, |a, b| self.phase_sum(a, b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueEntry {
    pub value: Zeta3,
    pub rank: u32,
    pub multiplicity: BigUint,
}

/// Multiset of exact sum values over all coefficient pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueDistribution {
    pub entries: Vec<ValueEntry>,
}

impl ValueDistribution {
    pub fn total(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    pub fn count(&self, v: Zeta3) -> BigUint {
        self.entries
            .iter()
            .filter(|e| e.value == v)
            .map(|e| &e.multiplicity)
            .sum()
    }

    fn row_count(&self, row: &SymmetricRow) -> BigUint {
        let mut c = self.count(row.value);
        if row.plus_minus {
            c += self.count(-row.value);
        }
        c
    }

    /// Rows whose observed count differs from the closed form, with the
    /// observed count; an extra pseudo-row reports values outside the table.
    pub fn mismatches(&self, rows: &[SymmetricRow]) -> Vec<(SymmetricRow, BigUint)> {
        let mut out: Vec<(SymmetricRow, BigUint)> = rows
            .iter()
            .filter_map(|r| {
                let c = self.row_count(r);
                (c != r.multiplicity).then(|| (r.clone(), c))
            })
            .collect();
        let covered: BigUint = rows.iter().map(|r| self.row_count(r)).sum();
        let total = self.total();
        if covered != total {
            out.push((
                SymmetricRow {
                    value: Zeta3::ZERO,
                    plus_minus: false,
                    rank: u32::MAX,
                    multiplicity: BigUint::zero(),
                },
                total - covered,
            ));
        }
        out
    }

    pub fn matches(&self, rows: &[SymmetricRow]) -> bool {
        self.mismatches(rows).is_empty()
    }
}

/// One row of a closed-form value table. With `plus_minus` the row stands
/// for both `value` and `-value`, and `multiplicity` counts both together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricRow {
    pub value: Zeta3,
    pub plus_minus: bool,
    pub rank: u32,
    pub multiplicity: BigUint,
}

fn row(value: Zeta3, plus_minus: bool, rank: u32, mult: BigInt) -> SymmetricRow {
    SymmetricRow {
        value,
        plus_minus,
        rank,
        multiplicity: mult.to_biguint().expect("nonnegative multiplicity"),
    }
}

fn p3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

fn z3(e: u32) -> i64 {
    3i64.pow(e)
}

/// Value table of T for odd m. The imaginary rows are combined: the
/// printed multiplicity counts both signs.
pub fn t_value_table(m: u32) -> Result<Vec<SymmetricRow>> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenM(m));
    }
    if m < 3 {
        return Err(Error::MOutOfRange { m, min: 3 });
    }
    let h = (m - 1) / 2;
    let full = p3(m) - 1;
    let root = Zeta3::sqrt_minus3();
    Ok(vec![
        row(root.scale(z3(h)), true, m, (&full * (8 * p3(m) - 9 * p3(m - 1) + 9)) / 8),
        row(Zeta3::from_int(z3(h + 1)), false, m - 1, ((p3(m - 1) + p3(h)) * &full) / 2),
        row(Zeta3::from_int(-z3(h + 1)), false, m - 1, ((p3(m - 1) - p3(h)) * &full) / 2),
        row(root.scale(z3(h + 1)), true, m - 2, (&full * (p3(m - 1) - 1)) / 8),
        row(Zeta3::from_int(z3(m)), false, 0, BigInt::from(1)),
    ])
}

/// Value table of S for odd m; rank tags are not attached.
pub fn s_value_table(m: u32) -> Result<Vec<SymmetricRow>> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenM(m));
    }
    if m < 3 {
        return Err(Error::MOutOfRange { m, min: 3 });
    }
    let h = (m - 1) / 2;
    let full = p3(m) - 1;
    Ok(vec![
        row(Zeta3::ZERO, false, 0, (p3(m) - p3(m - 1) + 1) * &full),
        row(Zeta3::from_int(2 * z3(h + 1)), false, 0, ((p3(m - 1) + p3(h)) * &full) / 2),
        row(Zeta3::from_int(-2 * z3(h + 1)), false, 0, ((p3(m - 1) - p3(h)) * &full) / 2),
        row(Zeta3::from_int(2 * z3(m)), false, 0, BigInt::from(1)),
    ])
}

/// Value table of U for even m, one row per sign.
pub fn u_value_table(m: u32) -> Result<Vec<SymmetricRow>> {
    if m % 2 == 1 {
        return Err(Error::OddM(m));
    }
    if m < 4 {
        return Err(Error::MOutOfRange { m, min: 4 });
    }
    let h = m / 2;
    let full = p3(m) - 1;
    let root = Zeta3::sqrt_minus3();
    let imag: BigInt = (p3(h - 1) * &full) / 2;
    Ok(vec![
        row(Zeta3::from_int(z3(h)), false, m, (3 * (p3(h) - 1) * (p3(h) + 1u32).pow(2)) / 8),
        row(Zeta3::from_int(-z3(h)), false, m, (3 * (p3(h) - 1) * (p3(m - 1) + 1)) / 4),
        row(root.scale(z3(h)), false, m - 1, imag.clone()),
        row(root.scale(-z3(h)), false, m - 1, imag),
        row(Zeta3::from_int(-z3(h + 1)), false, m - 2, ((p3(h - 1) - 1) * &full) / 8),
        row(Zeta3::from_int(z3(m)), false, 0, BigInt::from(1)),
    ])
}

/// Number of nonzero pairs with `T(a, b) = +3^{(m+3)/2}`. At m = 3 that
/// value is also `T(0, 0)`, which is not counted.
pub fn n13_count(sums: &TernarySums) -> Result<BigUint> {
    let m = sums.m();
    let target = Zeta3::from_int(z3((m + 3) / 2));
    let mut c = sums.t_distribution()?.count(target);
    if (m + 3) / 2 == m {
        c -= 1u32;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentEntry {
    pub name: &'static str,
    pub computed: Zeta3,
    pub expected: BigInt,
}

impl MomentEntry {
    pub fn holds(&self) -> bool {
        self.computed.as_integer().map(BigInt::from) == Some(self.expected.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub m: u32,
    pub entries: Vec<MomentEntry>,
}

impl MomentReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(MomentEntry::holds)
    }
}

/// `Σ S`, `Σ S²`, `Σ S³` and `Σ T²` over all pairs, against their closed
/// forms `2·3^{2m}`, `4·3^{3m}`, `32·3^{3m} - 24·3^{2m}` and `3^{2m}`.
pub fn moment_checks(m: u32) -> Result<MomentReport> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenM(m));
    }
    if m > MOMENT_ENVELOPE {
        return Err(Error::EnvelopeExceeded(m));
    }
    let sums = TernarySums::odd(m)?;
    let f = sums.field();
    let two = f.from_int(2);
    let elems: Vec<Elem> = f.elements().collect();
    let zero4 = [Zeta3::ZERO; 4];
    let acc = elems
        .par_iter()
        .map(|&a| {
            let mut acc = zero4;
            for &b in &elems {
                let t = sums.phase_sum(a, b);
                let s = t + sums.phase_sum(f.mul(two, a), f.mul(two, b));
                acc[0] = acc[0] + s;
                acc[1] = acc[1] + s * s;
                acc[2] = acc[2] + s * s * s;
                acc[3] = acc[3] + t * t;
            }
            acc
        })
        .reduce(
            || zero4,
            |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]],
        );
    let e2 = p3(2 * m);
    let e3 = p3(3 * m);
    let expected = [
        ("sum S", 2 * &e2),
        ("sum S^2", 4 * &e3),
        ("sum S^3", 32 * &e3 - 24 * &e2),
        ("sum T^2", e2.clone()),
    ];
    let entries = expected
        .into_iter()
        .zip(acc)
        .map(|((name, expected), computed)| MomentEntry {
            name,
            computed,
            expected,
        })
        .collect();
    Ok(MomentReport { m, entries })
}
