//! Narrow-sense BCH codes `C(n, q, m, δ)` and their even-like subcodes.
//!
//! A [`BchContext`] fixes `q` and `m`: it owns GF(q^m), the subfield
//! GF(q) with its symbol tables, the q-cyclotomic cosets modulo
//! `n = (q^m - 1)/(q - 1)` and the primitive n-th root `β = α^(q-1)`.
//! Codes are cheap to derive from a shared context.

mod enumerate;
mod search;

use std::fmt;
use std::sync::Arc;

use crate::cosets::CosetContext;
use crate::error::{Error, Result};
use crate::gf::{prime_power, Elem, Field, Subfield};
use crate::nds;
use crate::poly::Polynomial;

pub use enumerate::{CodewordIter, DEFAULT_ENUM_CAP};
pub use search::{locator_witness, LowWeightResult, MinDistance, Strategy, Witness, MAX_BUDGET};

/// A word of length n over GF(q), as subfield symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    pub symbols: Vec<u8>,
    pub weight: usize,
}

impl Codeword {
    pub fn new(symbols: Vec<u8>) -> Codeword {
        let weight = symbols.iter().filter(|&&c| c != 0).count();
        Codeword { symbols, weight }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// GF(q^m), GF(q) and the cosets modulo n for one `(q, m)`.
pub struct BchContext {
    q: u64,
    p: u32,
    s: u32,
    m: u32,
    field: Arc<Field>,
    sub: Subfield,
    cosets: CosetContext,
    beta: Elem,
}

impl fmt::Debug for BchContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BchContext")
            .field("q", &self.q)
            .field("m", &self.m)
            .field("n", &self.cosets.n())
            .finish()
    }
}

impl BchContext {
    pub fn new(q: u64, m: u32) -> Result<Arc<BchContext>> {
        let (p, s) = prime_power(q)
            .ok_or_else(|| Error::BadParameters(format!("q = {q} is not a prime power")))?;
        if q > 255 {
            return Err(Error::BadParameters(format!("q = {q} exceeds 255")));
        }
        let cosets = CosetContext::build(q, m)?;
        let field = Arc::new(Field::new(p as u32, s * m)?);
        let sub = Subfield::new(&field, q)?;
        let beta = field.pow(field.generator(), q - 1);
        Ok(Arc::new(BchContext {
            q,
            p: p as u32,
            s,
            m,
            field,
            sub,
            cosets,
            beta,
        }))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.cosets.n()
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn subfield(&self) -> &Subfield {
        &self.sub
    }

    pub fn cosets(&self) -> &CosetContext {
        &self.cosets
    }

    /// The primitive n-th root of unity `β = α^(q-1)`.
    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// `β^e` for any integer exponent.
    pub fn beta_pow(&self, e: i64) -> Elem {
        let n = self.n() as i64;
        self.field.pow(self.beta, e.rem_euclid(n) as u64)
    }

    /// Minimal polynomial of `β^s` over GF(q).
    pub fn minimal_polynomial(&self, s: u64) -> Result<Polynomial> {
        let coset = self.cosets.coset(s)?;
        let roots = coset.elements.iter().map(|&j| self.beta_pow(j as i64));
        let poly = Polynomial::from_roots(self.field.clone(), roots);
        self.to_symbols(&poly)?;
        Ok(poly)
    }

    /// Coefficients of a polynomial with GF(q) coefficients, as symbols.
    pub fn to_symbols(&self, poly: &Polynomial) -> Result<Vec<u8>> {
        poly.coeffs()
            .iter()
            .map(|&c| {
                self.sub.to_symbol(c).ok_or(Error::NotASubfield {
                    small: self.q,
                    big: self.field.order(),
                })
            })
            .collect()
    }

    pub fn from_symbols(&self, symbols: &[u8]) -> Polynomial {
        let coeffs = symbols.iter().map(|&c| self.sub.to_elem(c)).collect();
        Polynomial::new(self.field.clone(), coeffs)
    }

    /// `C(n, q, m, δ)`, or its even-like subcode.
    pub fn code(self: &Arc<Self>, delta: u64, even_like: bool) -> Result<BchCode> {
        let n = self.n();
        if delta < 2 || delta > n {
            return Err(Error::DeltaOutOfRange { delta, n });
        }
        let mut zero_cosets = self.cosets.leaders_below(delta);
        if even_like {
            zero_cosets.insert(0, 0);
        }
        let mut g = Polynomial::one(self.field.clone());
        for &l in &zero_cosets {
            g = g.mul(&self.minimal_polynomial(l)?)?;
        }
        let generator = self.to_symbols(&g)?;
        let k = n - g.degree().expect("generator is nonzero") as u64;
        // Every non-leader i in [δ, M) has its leader below δ, so β^i is
        // already a root; M itself is the first leader whose coset is missing.
        let bose_distance = if delta >= n {
            n
        } else {
            nds::smallest_leader_geq(delta, &self.cosets)?.value
        };
        let nonzero_reps = self
            .cosets
            .leaders()
            .filter(|l| zero_cosets.binary_search(l).is_err())
            .collect();
        Ok(BchCode {
            ctx: self.clone(),
            delta,
            even_like,
            generator,
            k,
            bose_distance,
            zero_cosets,
            nonzero_reps,
        })
    }

    /// `(Σ_j Tr_{q^{m_j}/q}(a_j β^{-l·i_j}))_l` for nonzero representatives
    /// `i_j` with coefficients `a_j` in GF(q^{m_j}), `m_j = |C_{i_j}|`.
    pub fn trace_codeword(&self, reps: &[u64], coeffs: &[Elem]) -> Result<Codeword> {
        if reps.len() != coeffs.len() {
            return Err(Error::ArityMismatch {
                expected: reps.len(),
                got: coeffs.len(),
            });
        }
        let f = &self.field;
        let mut sizes = Vec::with_capacity(reps.len());
        for (&r, &a) in reps.iter().zip(coeffs) {
            let mj = self.cosets.size(r)?;
            if !f.in_subfield(a, self.s * mj) {
                return Err(Error::BadParameters(format!(
                    "coefficient {a} for representative {r} is not in GF({}^{mj})",
                    self.q
                )));
            }
            sizes.push(mj);
        }
        let n = self.n();
        let symbols = (0..n)
            .map(|l| {
                let mut acc = Elem::ZERO;
                for ((&r, &a), &mj) in reps.iter().zip(coeffs).zip(&sizes) {
                    let x = f.mul(a, self.beta_pow(-((l * r % n) as i64)));
                    let t = f
                        .trace(x, self.q.pow(mj), self.q)
                        .expect("argument lies in the coefficient field");
                    acc = f.add(acc, t);
                }
                self.sub.to_symbol(acc).expect("trace lands in GF(q)")
            })
            .collect();
        Ok(Codeword::new(symbols))
    }

    /// Checks that a word is a codeword of `code`.
    fn contains(&self, code: &BchCode, word: &[u8]) -> bool {
        let c = self.from_symbols(word);
        let g = self.from_symbols(&code.generator);
        c.rem(&g).map(|r| r.is_zero()).unwrap_or(false)
    }
}

/// One narrow-sense BCH code with its derived parameters.
#[derive(Clone, Debug)]
pub struct BchCode {
    ctx: Arc<BchContext>,
    pub delta: u64,
    pub even_like: bool,
    /// Generator coefficients low degree first, as GF(q) symbols.
    pub generator: Vec<u8>,
    pub k: u64,
    pub bose_distance: u64,
    /// Leaders of the cosets of zeros (0 first when even-like).
    pub zero_cosets: Vec<u64>,
    /// Leaders of the remaining cosets: the nonzeros of the code.
    pub nonzero_reps: Vec<u64>,
}

impl BchCode {
    pub fn context(&self) -> &Arc<BchContext> {
        &self.ctx
    }

    pub fn q(&self) -> u64 {
        self.ctx.q
    }

    pub fn m(&self) -> u32 {
        self.ctx.m
    }

    pub fn n(&self) -> u64 {
        self.ctx.n()
    }

    pub fn generator_polynomial(&self) -> Polynomial {
        self.ctx.from_symbols(&self.generator)
    }

    /// Designed-distance lower bound: δ, or δ + 1 for the even-like subcode.
    pub fn bch_bound(&self) -> u64 {
        self.delta + self.even_like as u64
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() as u64 == self.n() && self.ctx.contains(self, word)
    }

    /// Encodes message coefficients (low degree first) as `m(x)·g(x)`.
    pub fn encode(&self, message: &[u8]) -> Result<Codeword> {
        if message.len() as u64 != self.k {
            return Err(Error::ArityMismatch {
                expected: self.k as usize,
                got: message.len(),
            });
        }
        let sub = &self.ctx.sub;
        let mut c = vec![0u8; self.n() as usize];
        for (i, &a) in message.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (t, &g) in self.generator.iter().enumerate() {
                c[i + t] = sub.add(c[i + t], sub.mul(a, g));
            }
        }
        Ok(Codeword::new(c))
    }
}

/// Builds `C(n, q, m, δ)` (or the even-like subcode) from scratch.
pub fn build_code(q: u64, m: u32, delta: u64, even_like: bool) -> Result<BchCode> {
    BchContext::new(q, m)?.code(delta, even_like)
}

/// `n - m⌈(δ-1)(1 - 1/q)⌉`, valid for `2 <= δ <= min(⌊q^{⌈m/2⌉}/(q-1)⌋, n)`.
pub fn dimension_formula(q: u64, m: u32, delta: u64) -> Result<u64> {
    let n = crate::cosets::code_length(q, m)?;
    let bound = crate::cosets::full_size_bound(q, m)?.min(n);
    if delta < 2 || delta > bound {
        return Err(Error::DeltaOutsideFormulaRange { delta, bound });
    }
    Ok(dimension_formula_unchecked(q, m, delta))
}

/// The same expression without the range check; outside the range it need
/// not equal the true dimension.
pub fn dimension_formula_unchecked(q: u64, m: u32, delta: u64) -> u64 {
    let n = (q.pow(m) - 1) / (q - 1);
    let per = ((delta - 1) * (q - 1)).div_ceil(q);
    n.saturating_sub(m as u64 * per)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = build_code(3, 4, 3, false).unwrap();
        assert_eq!((c.n(), c.k, c.bose_distance), (40, 32, 4));
        let c = build_code(4, 6, 3, false).unwrap();
        assert_eq!((c.n(), c.k), (1365, 1353));
        let c = build_code(3, 4, 2, true).unwrap();
        assert_eq!(c.k, 35);
        assert_eq!(c.zero_cosets[0], 0);
    }

    #[test]
    fn dimension_formula_examples() {
        // δ = 5 lies just past the range at (3, 4) but the value still agrees
        assert!(dimension_formula(3, 4, 5).is_err());
        assert_eq!(dimension_formula_unchecked(3, 4, 5), 28);
        assert_eq!(build_code(3, 4, 5, false).unwrap().k, 28);
        assert_eq!(dimension_formula(3, 3, 4).unwrap(), 7);
        assert_eq!(dimension_formula(3, 5, 6).unwrap(), 101);
        assert_eq!(dimension_formula(3, 5, 5).unwrap(), 106);
        assert!(matches!(
            dimension_formula(3, 4, 40),
            Err(Error::DeltaOutsideFormulaRange { .. })
        ));
    }

    #[test]
    fn delta_range() {
        let ctx = BchContext::new(3, 3).unwrap();
        assert!(matches!(ctx.code(1, false), Err(Error::DeltaOutOfRange { .. })));
        assert!(matches!(ctx.code(14, false), Err(Error::DeltaOutOfRange { .. })));
        let full = ctx.code(13, false).unwrap();
        assert_eq!((full.k, full.bose_distance), (1, 13));
    }

    #[test]
    fn generator_divides_x_n_minus_one() {
        let ctx = BchContext::new(4, 3).unwrap();
        for delta in 2..ctx.n() {
            let c = ctx.code(delta, false).unwrap();
            let xn = Polynomial::x_pow_minus_one(ctx.field().clone(), ctx.n() as usize);
            assert!(xn.rem(&c.generator_polynomial()).unwrap().is_zero());
            assert!(ctx.cosets().is_leader(c.bose_distance % ctx.n()));
            assert!(c.bose_distance >= delta);
        }
    }

    #[test]
    fn minimal_polynomial_bad_index() {
        let ctx = BchContext::new(3, 3).unwrap();
        assert!(matches!(
            ctx.minimal_polynomial(13),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn trace_arity() {
        let ctx = BchContext::new(3, 3).unwrap();
        assert!(matches!(
            ctx.trace_codeword(&[0, 4], &[Elem::ONE]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
        let z = ctx.trace_codeword(&[0, 4], &[Elem::ZERO, Elem::ZERO]).unwrap();
        assert_eq!(z.weight, 0);
    }
}
