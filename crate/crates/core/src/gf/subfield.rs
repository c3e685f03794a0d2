//! The subfield GF(q) of a big field GF(q^m), with small symbol tables.
//!
//! Symbols are `0..q`. For prime `q` a symbol is the constant polynomial it
//! names, so GF(p) symbols read as ordinary residues. For prime-power `q` the
//! order is `{0, g^0, g^1, ..., g^{q-2}}` where `g = α^((q^m-1)/(q-1))`.

use std::collections::HashMap;

use super::{prime_power, Elem, Field};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subfield {
    q: u32,
    generator: Elem,
    elems: Vec<Elem>,
    index: HashMap<Elem, u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Subfield {
    pub fn new(big: &Field, q: u64) -> Result<Subfield> {
        let not_sub = Error::NotASubfield {
            small: q,
            big: big.order(),
        };
        let (p, s) = prime_power(q).ok_or(not_sub.clone())?;
        if p != big.characteristic() as u64 || !big.degree().is_multiple_of(s) || q > 255 {
            return Err(not_sub);
        }
        let cofactor = (big.order() - 1) / (q - 1);
        let generator = big.pow(big.generator(), cofactor);
        let elems: Vec<Elem> = if s == 1 {
            (0..q).map(|c| big.from_int(c as i64)).collect()
        } else {
            std::iter::once(Elem::ZERO)
                .chain((0..q - 1).map(|j| big.pow(generator, j)))
                .collect()
        };
        let index: HashMap<Elem, u8> = elems
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u8))
            .collect();
        let qu = q as usize;
        let mut add = vec![0u8; qu * qu];
        let mut mul = vec![0u8; qu * qu];
        let mut neg = vec![0u8; qu];
        let mut inv = vec![0u8; qu];
        for a in 0..qu {
            for b in 0..qu {
                add[a * qu + b] = index[&big.add(elems[a], elems[b])];
                mul[a * qu + b] = index[&big.mul(elems[a], elems[b])];
            }
            neg[a] = index[&big.neg(elems[a])];
            if a != 0 {
                inv[a] = index[&big.inv(elems[a])?];
            }
        }
        Ok(Subfield {
            q: q as u32,
            generator,
            elems,
            index,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// `α^((q^m-1)/(q-1))`, a generator of GF(q)*.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn to_elem(&self, symbol: u8) -> Elem {
        self.elems[symbol as usize]
    }

    /// Symbol of a big-field element, or `None` when it is outside GF(q).
    pub fn to_symbol(&self, x: Elem) -> Option<u8> {
        self.index.get(&x).copied()
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn prime_subfield_is_natural() {
        let f = make_field(3, 4).unwrap();
        let sub = Subfield::new(&f, 3).unwrap();
        assert_eq!(sub.add(2, 2), 1);
        assert_eq!(sub.mul(2, 2), 1);
        assert_eq!(sub.to_elem(2), Elem(2));
    }

    #[test]
    fn tables_closed_and_fixed_by_frobenius() {
        for (p, k, q) in [(2u32, 6u32, 4u64), (3, 4, 9), (5, 3, 5), (2, 8, 16), (3, 6, 27)] {
            let f = make_field(p, k).unwrap();
            let sub = Subfield::new(&f, q).unwrap();
            assert_eq!(sub.symbols().count() as u64, q);
            for a in sub.symbols() {
                let x = sub.to_elem(a);
                assert_eq!(f.pow(x, q), x);
                for b in sub.symbols() {
                    let y = sub.to_elem(b);
                    assert_eq!(sub.to_elem(sub.add(a, b)), f.add(x, y));
                    assert_eq!(sub.to_elem(sub.mul(a, b)), f.mul(x, y));
                }
                if a != 0 {
                    let one = sub.to_symbol(Elem::ONE).unwrap();
                    assert_eq!(sub.mul(a, sub.inv(a).unwrap()), one);
                }
            }
        }
    }

    #[test]
    fn prime_power_ordering() {
        let f = make_field(2, 6).unwrap();
        let sub = Subfield::new(&f, 4).unwrap();
        assert_eq!(sub.to_elem(1), Elem::ONE);
        assert_eq!(sub.to_elem(2), sub.generator());
    }

    #[test]
    fn rejects_non_subfields() {
        let f = make_field(3, 4).unwrap();
        assert!(Subfield::new(&f, 27).is_err());
        assert!(Subfield::new(&f, 5).is_err());
        assert!(Subfield::new(&f, 6).is_err());
    }
}
