//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Coefficients are stored low degree first with no trailing zeros.
#[derive(Clone)]
pub struct Polynomial {
    field: Arc<Field>,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<u32> = self.coeffs.iter().map(|e| e.0).collect();
        write!(f, "Polynomial{c:?}")
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn new(field: Arc<Field>, mut coeffs: Vec<Elem>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: Arc<Field>) -> Polynomial {
        Polynomial::new(field, Vec::new())
    }

    pub fn one(field: Arc<Field>) -> Polynomial {
        Polynomial::new(field, vec![Elem::ONE])
    }

    /// `x - root`.
    pub fn linear(field: Arc<Field>, root: Elem) -> Polynomial {
        let c = field.neg(root);
        Polynomial::new(field, vec![c, Elem::ONE])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: Arc<Field>, n: usize) -> Polynomial {
        let mut c = vec![Elem::ZERO; n + 1];
        c[0] = field.neg(Elem::ONE);
        c[n] = Elem::ONE;
        Polynomial::new(field, c)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_default();
                let b = other.coeffs.get(i).copied().unwrap_or_default();
                f.add(a, b)
            })
            .collect();
        Ok(Polynomial::new(f.clone(), c))
    }

    pub fn neg(&self) -> Polynomial {
        let c = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        Polynomial::new(self.field.clone(), c)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        let v = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Polynomial::new(self.field.clone(), v)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut c = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Ok(Polynomial::new(f.clone(), c))
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Polynomial::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, d));
            }
        }
        Ok((Polynomial::new(f.clone(), quot), Polynomial::new(f.clone(), r)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.divmod(&g)?;
        Ok(q.monic())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots(field: Arc<Field>, roots: impl IntoIterator<Item = Elem>) -> Polynomial {
        let mut c = vec![Elem::ONE];
        for r in roots {
            let neg = field.neg(r);
            c.push(Elem::ZERO);
            for i in (0..c.len()).rev() {
                let lower = if i > 0 { c[i - 1] } else { Elem::ZERO };
                c[i] = field.add(lower, field.mul(c[i], neg));
            }
        }
        Polynomial::new(field, c)
    }
}
