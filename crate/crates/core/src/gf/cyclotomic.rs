//! Exact arithmetic in Z[ζ] for a primitive cube root of unity ζ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// The element `re + zeta·ζ` of Z[ζ], with ζ² = −1 − ζ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Zeta3 {
    pub re: i64,
    pub zeta: i64,
}

impl Zeta3 {
    pub const ZERO: Zeta3 = Zeta3 { re: 0, zeta: 0 };
    pub const ONE: Zeta3 = Zeta3 { re: 1, zeta: 0 };
    pub const ZETA: Zeta3 = Zeta3 { re: 0, zeta: 1 };

    pub const fn new(re: i64, zeta: i64) -> Zeta3 {
        Zeta3 { re, zeta }
    }

    pub const fn from_int(n: i64) -> Zeta3 {
        Zeta3 { re: n, zeta: 0 }
    }

    /// √−3 = 1 + 2ζ.
    pub const fn sqrt_minus3() -> Zeta3 {
        Zeta3 { re: 1, zeta: 2 }
    }

    /// ζ^e for any integer exponent.
    pub fn zeta_pow(e: i64) -> Zeta3 {
        match e.rem_euclid(3) {
            0 => Zeta3::ONE,
            1 => Zeta3::ZETA,
            _ => Zeta3::new(-1, -1),
        }
    }

    /// Complex conjugate: ζ ↦ ζ² = −1 − ζ.
    pub fn conj(self) -> Zeta3 {
        Zeta3::new(self.re - self.zeta, -self.zeta)
    }

    /// |z|² = a² − ab + b².
    pub fn norm(self) -> i64 {
        self.re * self.re - self.re * self.zeta + self.zeta * self.zeta
    }

    pub fn scale(self, c: i64) -> Zeta3 {
        Zeta3::new(self.re * c, self.zeta * c)
    }

    pub fn is_real(self) -> bool {
        self.zeta == 0
    }

    /// Real part 2a − b is zero.
    pub fn is_imaginary(self) -> bool {
        self.zeta == 2 * self.re
    }

    /// `Some(n)` when the value is the rational integer n.
    pub fn as_integer(self) -> Option<i64> {
        self.is_real().then_some(self.re)
    }

    /// `Some(c)` when the value equals c·√−3 for an integer c.
    pub fn as_sqrt_minus3_multiple(self) -> Option<i64> {
        self.is_imaginary().then_some(self.re)
    }

    pub fn to_complex(self) -> Complex64 {
        let half_root3 = 3f64.sqrt() / 2.0;
        Complex64::new(
            self.re as f64 - self.zeta as f64 / 2.0,
            self.zeta as f64 * half_root3,
        )
    }

    pub fn pow(self, mut e: u32) -> Zeta3 {
        let mut acc = Zeta3::ONE;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl Add for Zeta3 {
    type Output = Zeta3;
    fn add(self, o: Zeta3) -> Zeta3 {
        Zeta3::new(self.re + o.re, self.zeta + o.zeta)
    }
}

impl Sub for Zeta3 {
    type Output = Zeta3;
    fn sub(self, o: Zeta3) -> Zeta3 {
        Zeta3::new(self.re - o.re, self.zeta - o.zeta)
    }
}

impl Neg for Zeta3 {
    type Output = Zeta3;
    fn neg(self) -> Zeta3 {
        Zeta3::new(-self.re, -self.zeta)
    }
}

impl Mul for Zeta3 {
    type Output = Zeta3;
    fn mul(self, o: Zeta3) -> Zeta3 {
        // (a + bζ)(c + dζ) = ac − bd + (ad + bc − bd)ζ
        let bd = self.zeta * o.zeta;
        Zeta3::new(
            self.re * o.re - bd,
            self.re * o.zeta + self.zeta * o.re - bd,
        )
    }
}

impl std::iter::Sum for Zeta3 {
    fn sum<I: Iterator<Item = Zeta3>>(iter: I) -> Zeta3 {
        iter.fold(Zeta3::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Zeta3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            write!(f, "{n}")
        } else if let Some(c) = self.as_sqrt_minus3_multiple() {
            write!(f, "{c}*sqrt(-3)")
        } else {
            write!(f, "{} + {}*zeta3", self.re, self.zeta)
        }
    }
}

/// A character-sum value: exact for characteristic 3, floating otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CyclotomicValue {
    Ternary(Zeta3),
    Complex(Complex64),
}

impl CyclotomicValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CyclotomicValue::Ternary(z) => z.to_complex(),
            CyclotomicValue::Complex(c) => c,
        }
    }

    /// Exact equality for ternary values, `tol` closeness otherwise.
    pub fn approx_eq(self, other: CyclotomicValue, tol: f64) -> bool {
        match (self, other) {
            (CyclotomicValue::Ternary(a), CyclotomicValue::Ternary(b)) => a == b,
            (a, b) => (a.to_complex() - b.to_complex()).norm() <= tol,
        }
    }
}
