//! Finite fields GF(p^k) in a polynomial basis over GF(p).
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of its coefficient digits. Fields with at most [`TABLE_LIMIT`] elements
//! carry exp/log/Zech tables; larger ones fall back to schoolbook
//! multiplication modulo the defining polynomial.

mod cyclotomic;
mod gauss;
mod primepoly;
mod subfield;

use std::fmt;
use std::sync::OnceLock;

pub use cyclotomic::{CyclotomicValue, Zeta3};
pub use gauss::{gauss_sum_closed, gauss_sum_direct, square_character_sum, GaussSum};
pub use primepoly::{is_prime, prime_factors, prime_power};
pub use subfield::Subfield;

use crate::error::{Error, Result};

/// Largest field order that gets precomputed log tables.
pub const TABLE_LIMIT: u64 = 1 << 22;

/// Raw field element: digit encoding in the polynomial basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    // zech[i] = log(1 + a^i), or u32::MAX when 1 + a^i = 0.
    zech: Vec<u32>,
}

/// GF(p^k) with a fixed irreducible modulus and primitive element.
pub struct Field {
    p: u32,
    k: u32,
    order: u64,
    modulus: Vec<u32>,
    generator: Elem,
    place: Vec<u32>,
    tables: Option<Tables>,
    trace_by_log: OnceLock<Vec<u8>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Builds GF(p^k).
pub fn make_field(p: u32, k: u32) -> Result<Field> {
    Field::new(p, k)
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::BadParameters("extension degree must be >= 1".into()));
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o <= u32::MAX as u64)
            .ok_or(Error::Overflow(p as u64, k as u64))?;

        let modulus = find_modulus(p, k)?;
        let mut place = Vec::with_capacity(k as usize);
        let mut acc = 1u32;
        for _ in 0..k {
            place.push(acc);
            acc = acc.wrapping_mul(p);
        }
        let mut field = Field {
            p,
            k,
            order,
            modulus,
            generator: Elem::ONE,
            place,
            tables: None,
            trace_by_log: OnceLock::new(),
        };
        field.generator = field.find_generator()?;
        if order <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn find_modulus_search_limit(&self) -> u64 {
        self.order
    }

    fn find_generator(&self) -> Result<Elem> {
        let group = self.order - 1;
        if group == 1 {
            return Ok(Elem::ONE);
        }
        let factors = prime_factors(group);
        let limit = self.find_modulus_search_limit();
        for cand in 2..limit {
            let g = Elem(cand as u32);
            if factors
                .iter()
                .all(|&r| self.pow_slow(g, group / r) != Elem::ONE)
            {
                return Ok(g);
            }
        }
        Err(Error::NoIrreducibleFound {
            p: self.p,
            k: self.k,
        })
    }

    fn build_tables(&self) -> Tables {
        let group = (self.order - 1) as usize;
        let mut exp = vec![0u32; group];
        let mut log = vec![0u32; self.order as usize];
        let mut x = Elem::ONE;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        debug_assert_eq!(x, Elem::ONE);
        let mut zech = vec![u32::MAX; group];
        for (i, slot) in zech.iter_mut().enumerate() {
            let s = self.add_digits(Elem(exp[i]), Elem::ONE);
            if !s.is_zero() {
                *slot = log[s.0 as usize];
            }
        }
        Tables { exp, log, zech }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Low-to-high coefficients of the monic defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Coefficient digits of `x`, low degree first.
    pub fn digits(&self, x: Elem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        Elem(
            digits
                .iter()
                .zip(&self.place)
                .map(|(&d, &w)| (d % self.p) * w)
                .sum(),
        )
    }

    /// The constant polynomial `c mod p`.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut w = 1u32;
        while x != 0 || y != 0 {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * w;
            x /= self.p;
            y /= self.p;
            w = w.wrapping_mul(self.p);
        }
        Elem(out)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &self.tables {
            Some(t) => {
                if a.is_zero() {
                    return b;
                }
                if b.is_zero() {
                    return a;
                }
                let group = self.order as u32 - 1;
                let la = t.log[a.0 as usize];
                let lb = t.log[b.0 as usize];
                let d = if lb >= la { lb - la } else { lb + group - la };
                let z = t.zech[d as usize];
                if z == u32::MAX {
                    Elem::ZERO
                } else {
                    let e = la as u64 + z as u64;
                    Elem(t.exp[(e % group as u64) as usize])
                }
            }
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut v = a.0;
        let mut out = 0u32;
        let mut w = 1u32;
        while v != 0 {
            let d = v % self.p;
            out += ((self.p - d) % self.p) * w;
            v /= self.p;
            w = w.wrapping_mul(self.p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let group = self.order - 1;
                let e = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
                Elem(t.exp[(e % group) as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let da = self.digits(a);
        let db = self.digits(b);
        let p = self.p as u64;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] as u64 % p;
                let idx = top - k + i;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    fn pow_slow(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }

    /// Square-and-multiply exponentiation; `0^0 = 1`.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64;
                let group = self.order - 1;
                Elem(t.exp[((group - l) % group) as usize])
            }
            None => self.pow_slow(a, self.order - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `g^i` for the fixed primitive element `g`.
    pub fn exp(&self, i: u64) -> Elem {
        let group = self.order - 1;
        match &self.tables {
            Some(t) => Elem(t.exp[(i % group) as usize]),
            None => self.pow(self.generator, i % group),
        }
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[a.0 as usize] as u64),
            None => {
                // baby-step giant-step
                let group = self.order - 1;
                let step = (group as f64).sqrt().ceil() as u64;
                let mut baby = std::collections::HashMap::with_capacity(step as usize);
                let mut x = Elem::ONE;
                for j in 0..step {
                    baby.entry(x).or_insert(j);
                    x = self.mul(x, self.generator);
                }
                let giant = self.inv(self.pow(self.generator, step)).ok()?;
                let mut y = a;
                for i in 0..=step {
                    if let Some(&j) = baby.get(&y) {
                        return Some((i * step + j) % group);
                    }
                    y = self.mul(y, giant);
                }
                None
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let group = self.order - 1;
        let mut ord = group;
        for r in prime_factors(group) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Checked wrapper for operator-style arithmetic.
    pub fn element(&self, value: Elem) -> FieldElement<'_> {
        FieldElement { field: self, value }
    }

    /// True when `x` lies in the subfield of order `p^a`.
    pub fn in_subfield(&self, x: Elem, sub_degree: u32) -> bool {
        self.k.is_multiple_of(sub_degree) && self.pow(x, (self.p as u64).pow(sub_degree)) == x
    }

    /// Relative trace `Tr_{to}^{from}(x) = sum_{i<e} x^{to^i}` where
    /// `from = to^e`. Both orders must name subfields and `x` must lie in
    /// the field of order `from_order`.
    pub fn trace(&self, x: Elem, from_order: u64, to_order: u64) -> Result<Elem> {
        let not_sub = Error::NotASubfield {
            small: to_order,
            big: from_order,
        };
        let a = self.subfield_degree(from_order).ok_or(not_sub.clone())?;
        let b = self.subfield_degree(to_order).ok_or(not_sub.clone())?;
        if a % b != 0 || !self.in_subfield(x, a) {
            return Err(not_sub);
        }
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..a / b {
            acc = self.add(acc, y);
            y = self.pow(y, to_order);
        }
        Ok(acc)
    }

    fn subfield_degree(&self, order: u64) -> Option<u32> {
        let (p, d) = prime_power(order)?;
        (p == self.p as u64 && d >= 1 && self.k.is_multiple_of(d)).then_some(d)
    }

    /// Absolute trace to GF(p), returned as an integer in `[0, p)`.
    pub fn absolute_trace(&self, x: Elem) -> u32 {
        if let (Some(table), Some(l)) = (self.trace_by_log.get(), self.log_if_tabled(x)) {
            return table[l as usize] as u32;
        }
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.k {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as u64);
        }
        acc.0
    }

    fn log_if_tabled(&self, x: Elem) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[x.0 as usize] as u64)
    }

    /// `Tr(g^i)` for every `i` in `[0, order - 1)`. Built on first use; only
    /// available for tabled fields.
    pub fn trace_table_by_log(&self) -> Option<&[u8]> {
        let t = self.tables.as_ref()?;
        Some(self.trace_by_log.get_or_init(|| {
            // trace is GF(p)-linear: tabulate it on the basis 1, x, ..., x^{k-1}
            let basis: Vec<u32> = (0..self.k)
                .map(|i| {
                    let e = Elem(self.place[i as usize]);
                    let mut acc = Elem::ZERO;
                    let mut y = e;
                    for _ in 0..self.k {
                        acc = self.add(acc, y);
                        y = self.pow(y, self.p as u64);
                    }
                    acc.0
                })
                .collect();
            t.exp
                .iter()
                .map(|&v| {
                    let mut v = v;
                    let mut s = 0u32;
                    for &b in &basis {
                        s += (v % self.p) * b;
                        v /= self.p;
                    }
                    (s % self.p) as u8
                })
                .collect()
        }))
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, x: Elem) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if x.is_zero() {
            return Ok(0);
        }
        let l = self.log(x).expect("nonzero element has a logarithm");
        Ok(if l.is_multiple_of(2) { 1 } else { -1 })
    }
}

fn find_modulus(p: u32, k: u32) -> Result<Vec<u32>> {
    if k == 1 {
        return Ok(vec![0, 1]);
    }
    let tail = (p as u64).pow(k);
    for code in 0..tail {
        // coefficients of x^0..x^{k-1}, with the higher ones most significant
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut c = code;
        for _ in 0..k {
            f.push((c % p as u64) as u32);
            c /= p as u64;
        }
        f.push(1);
        if primepoly::is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    Err(Error::NoIrreducibleFound { p, k })
}

/// Arithmetic operation selector for [`FieldElement::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u64),
}

/// An element bound to its field; mixing fields is reported as an error.
#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    field: &'a Field,
    value: Elem,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.field.order, self.value.0)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl<'a> FieldElement<'a> {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &'a Field {
        self.field
    }

    fn same_field(&self, other: &FieldElement<'_>) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Applies a binary (`Add`, `Sub`, `Mul`, `Div`) or unary (`Neg`, `Inv`,
    /// `Pow`) operation; `other` is ignored for unary operations.
    pub fn apply(&self, op: FieldOp, other: &FieldElement<'_>) -> Result<FieldElement<'a>> {
        let f = self.field;
        let v = match op {
            FieldOp::Add => {
                self.same_field(other)?;
                f.add(self.value, other.value)
            }
            FieldOp::Sub => {
                self.same_field(other)?;
                f.sub(self.value, other.value)
            }
            FieldOp::Mul => {
                self.same_field(other)?;
                f.mul(self.value, other.value)
            }
            FieldOp::Div => {
                self.same_field(other)?;
                f.div(self.value, other.value)?
            }
            FieldOp::Neg => f.neg(self.value),
            FieldOp::Inv => f.inv(self.value)?,
            FieldOp::Pow(e) => f.pow(self.value, e),
        };
        Ok(f.element(v))
    }

    pub fn add(&self, other: &FieldElement<'_>) -> Result<FieldElement<'a>> {
        self.apply(FieldOp::Add, other)
    }

    pub fn sub(&self, other: &FieldElement<'_>) -> Result<FieldElement<'a>> {
        self.apply(FieldOp::Sub, other)
    }

    pub fn mul(&self, other: &FieldElement<'_>) -> Result<FieldElement<'a>> {
        self.apply(FieldOp::Mul, other)
    }

    pub fn div(&self, other: &FieldElement<'_>) -> Result<FieldElement<'a>> {
        self.apply(FieldOp::Div, other)
    }

    pub fn neg(&self) -> FieldElement<'a> {
        self.field.element(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement<'a>> {
        self.apply(FieldOp::Inv, self)
    }

    pub fn pow(&self, e: u64) -> FieldElement<'a> {
        self.field.element(self.field.pow(self.value, e))
    }
}
