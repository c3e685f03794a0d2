//! Quadratic Gauss sums and the related square-character sums.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::cyclotomic::{CyclotomicValue, Zeta3};
use super::{Elem, Field};
use crate::error::{Error, Result};

/// Exact form `sign · (i if imaginary) · p^{k/2}` of the quadratic Gauss
/// sum of GF(p^k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussSum {
    pub sign: i8,
    pub imaginary: bool,
    pub p: u32,
    pub k: u32,
}

impl GaussSum {
    pub fn to_complex(self) -> Complex64 {
        let mag = (self.p as f64).powf(self.k as f64 / 2.0) * self.sign as f64;
        if self.imaginary {
            Complex64::new(0.0, mag)
        } else {
            Complex64::new(mag, 0.0)
        }
    }

    /// Exact value in Z[ζ3]; only defined for characteristic 3.
    pub fn to_zeta3(self) -> Option<Zeta3> {
        if self.p != 3 {
            return None;
        }
        let half = 3i64.pow(self.k / 2);
        Some(if self.k.is_multiple_of(2) {
            Zeta3::from_int(self.sign as i64 * half)
        } else {
            // i·3^{k/2} = 3^{(k−1)/2}·√−3
            Zeta3::sqrt_minus3().scale(self.sign as i64 * half)
        })
    }

    pub fn value(self) -> CyclotomicValue {
        match self.to_zeta3() {
            Some(z) => CyclotomicValue::Ternary(z),
            None => CyclotomicValue::Complex(self.to_complex()),
        }
    }
}

/// Closed form of G(η) for the quadratic character η of `field`.
pub fn gauss_sum_closed(field: &Field) -> Result<GaussSum> {
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let k = field.degree();
    let mut sign: i8 = if k % 2 == 1 { 1 } else { -1 };
    let mut imaginary = false;
    if p % 4 == 3 {
        // multiply by i^k
        imaginary = k % 2 == 1;
        if matches!(k % 4, 2 | 3) {
            sign = -sign;
        }
    }
    Ok(GaussSum {
        sign,
        imaginary,
        p,
        k,
    })
}

fn character_sum<F>(field: &Field, weight: F) -> CyclotomicValue
where
    F: Fn(Elem) -> Option<(i64, Elem)>,
{
    let p = field.characteristic();
    if p == 3 {
        let mut acc = Zeta3::ZERO;
        for x in field.elements() {
            if let Some((c, arg)) = weight(x) {
                acc = acc + Zeta3::zeta_pow(field.absolute_trace(arg) as i64).scale(c);
            }
        }
        CyclotomicValue::Ternary(acc)
    } else {
        let roots: Vec<Complex64> = (0..p)
            .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / p as f64))
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for x in field.elements() {
            if let Some((c, arg)) = weight(x) {
                acc += roots[field.absolute_trace(arg) as usize] * c as f64;
            }
        }
        CyclotomicValue::Complex(acc)
    }
}

/// Σ_{x≠0} η(x) ζ_p^{Tr(x)} by direct summation.
pub fn gauss_sum_direct(field: &Field) -> Result<CyclotomicValue> {
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(character_sum(field, |x| {
        let eta = field.quadratic_character(x).ok()?;
        (eta != 0).then_some((eta as i64, x))
    }))
}

/// Σ_{x≠0} ζ_p^{Tr(a x²)} by direct summation.
pub fn square_character_sum(field: &Field, a: Elem) -> Result<CyclotomicValue> {
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(character_sum(field, |x| {
        (!x.is_zero()).then(|| (1, field.mul(a, field.mul(x, x))))
    }))
}
