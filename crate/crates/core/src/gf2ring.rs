//! Arithmetic in `R = F2[x]/(x^m - 1)` and in the free polynomial ring `F2[x]`.
//!
//! Coefficients are packed little-endian into `u64` blocks: bit `i` of the
//! vector (bit `i % 64` of block `i / 64`) is the coefficient of `x^i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = u64::BITS as usize;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn top_mask(m: usize) -> u64 {
    match m % WORD {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// Single-word kernels for `m <= 64`. The exhaustive searches run on these
/// directly; `RingElement` dispatches to them whenever it fits in one block.
pub mod word {
    #[inline]
    pub fn mask(m: usize) -> u64 {
        if m >= 64 {
            u64::MAX
        } else {
            (1u64 << m) - 1
        }
    }

    /// Multiplication by `x^i`.
    #[inline]
    pub fn rotate(a: u64, i: usize, m: usize) -> u64 {
        let i = i % m;
        if i == 0 {
            a
        } else {
            ((a << i) | (a >> (m - i))) & mask(m)
        }
    }

    /// Cyclic convolution mod 2.
    #[inline]
    pub fn mul(a: u64, b: u64, m: usize) -> u64 {
        let mut acc = 0;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc ^= rotate(b, i, m);
            rest &= rest - 1;
        }
        acc
    }

    /// `x^m a(1/x)`: bit 0 fixed, bit `i` moved to `m - i`.
    #[inline]
    pub fn conjugate(a: u64, m: usize) -> u64 {
        let reversed = a.reverse_bits() >> (64 - m);
        rotate(reversed, 1, m)
    }

    /// `x^deg(a) a(1/x)`; `a` must be nonzero.
    #[inline]
    pub fn reciprocal(a: u64) -> u64 {
        debug_assert!(a != 0);
        let deg = 63 - a.leading_zeros();
        a.reverse_bits() >> (63 - deg)
    }

    #[inline]
    pub fn weight(a: u64) -> u32 {
        a.count_ones()
    }
}

/// An element of `F2[x]/(x^m - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    m: usize,
    words: Vec<u64>,
}

impl RingElement {
    pub fn zero(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(RingElement {
            m,
            words: vec![0; words_for(m)],
        })
    }

    pub fn one(m: usize) -> Result<Self> {
        Self::monomial(m, 0)
    }

    /// `x^i`, with `i` reduced modulo `m`.
    pub fn monomial(m: usize, i: usize) -> Result<Self> {
        let mut r = Self::zero(m)?;
        r.toggle(i % m);
        Ok(r)
    }

    /// Sum of `x^e` over the given exponents, reduced modulo `m`. Repeated
    /// exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(m: usize, exps: I) -> Result<Self> {
        let mut r = Self::zero(m)?;
        for e in exps {
            r.toggle(e % m);
        }
        Ok(r)
    }

    /// Builds an element from a packed pattern; `bits` must fit in `m` bits.
    pub fn from_u64(m: usize, bits: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if m < WORD && bits >> m != 0 {
            return Err(Error::Parse(format!(
                "pattern {bits:#x} has bits at or above x^{m}"
            )));
        }
        let mut words = vec![0; words_for(m)];
        words[0] = bits;
        Ok(RingElement { m, words })
    }

    pub fn from_words(m: usize, mut words: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let n = words_for(m);
        if words.len() > n && words[n..].iter().any(|&w| w != 0) {
            return Err(Error::Parse(format!("coefficients beyond x^{}", m - 1)));
        }
        words.resize(n, 0);
        if words[n - 1] & !top_mask(m) != 0 {
            return Err(Error::Parse(format!("coefficients beyond x^{}", m - 1)));
        }
        Ok(RingElement { m, words })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The packed pattern when `m <= 64`.
    pub fn as_u64(&self) -> Option<u64> {
        (self.m <= WORD).then(|| self.words[0])
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < self.m && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    fn toggle(&mut self, i: usize) {
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        self.words[0] == 1 && self.words[1..].iter().all(|&w| w == 0)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (0..self.m).filter(move |&i| self.coeff(i))
    }

    /// Degree of the canonical representative, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + (63 - w.leading_zeros() as usize))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(RingElement { m: self.m, words })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.m <= WORD {
            let w = word::mul(self.words[0], other.words[0], self.m);
            return Ok(RingElement {
                m: self.m,
                words: vec![w],
            });
        }
        let mut acc = vec![0u64; self.words.len()];
        for i in self.exponents() {
            let rotated = other.shift(i);
            for (a, r) in acc.iter_mut().zip(&rotated.words) {
                *a ^= r;
            }
        }
        Ok(RingElement {
            m: self.m,
            words: acc,
        })
    }

    /// Multiplication by `x^i`: a cyclic rotation of the coefficients.
    pub fn shift(&self, i: usize) -> Self {
        let m = self.m;
        let i = i % m;
        if m <= WORD {
            return RingElement {
                m,
                words: vec![word::rotate(self.words[0], i, m)],
            };
        }
        if i == 0 {
            return self.clone();
        }
        let up = shl_truncate(&self.words, i, m);
        let down = shr(&self.words, m - i);
        let words = up.iter().zip(&down).map(|(a, b)| a | b).collect();
        RingElement { m, words }
    }

    /// `x^m f(1/x)`, the image of `f` under `x -> x^{-1}`.
    pub fn conjugate(&self) -> Self {
        if self.m <= WORD {
            return RingElement {
                m: self.m,
                words: vec![word::conjugate(self.words[0], self.m)],
            };
        }
        let mut r = RingElement {
            m: self.m,
            words: vec![0; self.words.len()],
        };
        for i in self.exponents() {
            r.toggle((self.m - i) % self.m);
        }
        r
    }

    /// `x^deg(f) f(1/x)`: the coefficient list reversed up to the degree.
    pub fn reciprocal(&self) -> Result<Self> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        if self.m <= WORD {
            return Ok(RingElement {
                m: self.m,
                words: vec![word::reciprocal(self.words[0])],
            });
        }
        let mut r = RingElement {
            m: self.m,
            words: vec![0; self.words.len()],
        };
        for i in self.exponents() {
            r.toggle(deg - i);
        }
        Ok(r)
    }

    /// Every one of the `m` coefficients flipped.
    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let last = words.len() - 1;
        words[last] &= top_mask(self.m);
        RingElement { m: self.m, words }
    }

    /// The representative of degree `< m` in `F2[x]`.
    pub fn lift(&self) -> FreePoly {
        FreePoly::from_words(self.words.clone())
    }

    /// `x + x^2 + ... + x^{m-1}`.
    pub fn all_ones_minus_constant(m: usize) -> Result<Self> {
        Ok(Self::one(m)?.complement())
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by modulus, then by the coefficient vector read as an unsigned
/// integer with bit 0 least significant.
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement(m={}, {})", self.m, self)
    }
}

fn shl_truncate(words: &[u64], by: usize, m: usize) -> Vec<u64> {
    let n = words.len();
    let (ws, bs) = (by / WORD, by % WORD);
    let mut out = vec![0u64; n];
    for i in (ws..n).rev() {
        let src = i - ws;
        let mut v = words[src] << bs;
        if bs != 0 && src > 0 {
            v |= words[src - 1] >> (WORD - bs);
        }
        out[i] = v;
    }
    out[n - 1] &= top_mask(m);
    out
}

fn shr(words: &[u64], by: usize) -> Vec<u64> {
    let n = words.len();
    let (ws, bs) = (by / WORD, by % WORD);
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().take(n.saturating_sub(ws)).enumerate() {
        let src = i + ws;
        *slot = words[src] >> bs;
        if bs != 0 && src + 1 < n {
            *slot |= words[src + 1] << (WORD - bs);
        }
    }
    out
}

/// Degree of a free polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegativeInfinity,
    Finite(usize),
}

/// A polynomial over F2 of unbounded degree. Storage never carries zero
/// blocks above the leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreePoly {
    words: Vec<u64>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        FreePoly { words: vec![1] }
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        FreePoly { words }
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut words = Vec::new();
        for e in exps {
            let w = e / WORD;
            if words.len() <= w {
                words.resize(w + 1, 0);
            }
            words[w] ^= 1u64 << (e % WORD);
        }
        Self::from_words(words)
    }

    /// `x^m - 1` (equal to `x^m + 1` over F2).
    pub fn x_pow_minus_one(m: usize) -> Self {
        Self::from_exponents([0, m].into_iter().filter(|_| m != 0))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Degree {
        match self.words.last() {
            None => Degree::NegativeInfinity,
            Some(&w) => {
                Degree::Finite((self.words.len() - 1) * WORD + 63 - w.leading_zeros() as usize)
            }
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (0..self.words.len() * WORD).filter(move |&i| self.coeff(i))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= b;
        }
        Self::from_words(words)
    }

    /// Schoolbook carry-less product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc = vec![0u64; self.words.len() + other.words.len()];
        for e in self.exponents() {
            xor_shifted(&mut acc, &other.words, e);
        }
        Self::from_words(acc)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Degree::Finite(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let mut rem = self.words.clone();
        let mut quot = vec![0u64; self.words.len()];
        // `rem` stays normalised, so its degree is the top bit of the last word
        while let Some(&top) = rem.last() {
            let rd = (rem.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize);
            if rd < dd {
                break;
            }
            let s = rd - dd;
            xor_shifted(&mut rem, &divisor.words, s);
            quot[s / WORD] ^= 1u64 << (s % WORD);
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd by the Euclidean remainder sequence.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }
}

/// `acc ^= src * x^shift`, growing `acc` if needed.
fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
    let (ws, bs) = (shift / WORD, shift % WORD);
    let need = src.len() + ws + 1;
    if acc.len() < need {
        acc.resize(need, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        acc[i + ws] ^= w << bs;
        if bs != 0 {
            acc[i + ws + 1] ^= w >> (WORD - bs);
        }
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: usize, exps: &[usize]) -> RingElement {
        RingElement::from_exponents(m, exps.iter().copied()).unwrap()
    }

    fn p(exps: &[usize]) -> FreePoly {
        FreePoly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert!(r(4, &[0, 1]).add(&r(4, &[0, 1])).unwrap().is_zero());
        let f = r(6, &[4, 3, 2, 1, 0]);
        assert_eq!(f.add(&f.shift(1)).unwrap(), r(6, &[5, 0]));
        assert_eq!(r(3, &[0]).add(&r(3, &[1])).unwrap(), r(3, &[0, 1]));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let e = r(4, &[0]).add(&r(5, &[0])).unwrap_err();
        assert_eq!(e, Error::ModulusMismatch { left: 4, right: 5 });
        assert!(r(4, &[0]).mul(&r(5, &[0])).is_err());
        assert_eq!(RingElement::zero(0).unwrap_err(), Error::ZeroModulus);
    }

    #[test]
    fn mul_examples() {
        assert!(r(4, &[0, 1, 2]).mul(&r(4, &[0, 2, 3])).unwrap().is_one());
        assert!(r(2, &[0, 1]).mul(&r(2, &[0, 1])).unwrap().is_zero());
        assert_eq!(r(3, &[0, 1]).mul(&r(3, &[0, 2])).unwrap(), r(3, &[1, 2]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(r(4, &[0, 1, 2]).conjugate(), r(4, &[0, 2, 3]));
        assert_eq!(r(5, &[2]).conjugate(), r(5, &[3]));
        assert_eq!(r(3, &[0]).conjugate(), r(3, &[0]));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            r(9, &[6, 4, 3, 1, 0]).reciprocal().unwrap(),
            r(9, &[0, 2, 3, 5, 6])
        );
        assert_eq!(r(5, &[0, 1]).reciprocal().unwrap(), r(5, &[0, 1]));
        assert_eq!(r(7, &[3]).reciprocal().unwrap(), r(7, &[0]));
        assert_eq!(
            RingElement::zero(7).unwrap().reciprocal().unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(r(4, &[0]).shift(2), r(4, &[2]));
        assert_eq!(r(6, &[5]).shift(1), r(6, &[0]));
        assert_eq!(r(5, &[0, 1]).shift(4), r(5, &[4, 0]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(r(5, &[2]).complement(), r(5, &[0, 1, 3, 4]));
        assert_eq!(RingElement::zero(3).unwrap().complement(), r(3, &[0, 1, 2]));
        assert_eq!(r(4, &[0, 1]).complement(), r(4, &[2, 3]));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(r(6, &[4, 3, 2, 1, 0]).weight(), 5);
        assert_eq!(r(12, &[8, 6, 5, 4, 3, 1, 0]).weight(), 7);
        assert_eq!(RingElement::zero(3).unwrap().weight(), 0);
    }

    #[test]
    fn lift_examples() {
        assert_eq!(r(4, &[0, 3]).lift(), p(&[0, 3]));
        assert!(RingElement::zero(4).unwrap().lift().is_zero());
        assert_eq!(r(2, &[0, 1]).lift(), p(&[0, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[0, 1, 2]).gcd(&p(&[3, 0])).unwrap(), p(&[0, 1, 2]));
        assert!(p(&[0, 1, 4]).gcd(&p(&[5, 0])).unwrap().is_one());
        let q = p(&[0, 2, 7, 9]);
        assert_eq!(q.gcd(&q).unwrap(), q);
        assert_eq!(q.gcd(&FreePoly::zero()).unwrap(), q);
        assert_eq!(
            FreePoly::zero().gcd(&FreePoly::zero()).unwrap_err(),
            Error::GcdOfZeros
        );
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(FreePoly::zero().degree(), Degree::NegativeInfinity);
        assert!(Degree::NegativeInfinity < Degree::Finite(0));
        assert_eq!(p(&[70, 3]).degree(), Degree::Finite(70));
        assert_eq!(FreePoly::from_words(vec![5, 0, 0]).words(), &[5]);
    }

    #[test]
    fn multi_block_ring_ops() {
        // m = 100 exercises the blocked paths
        let f = r(100, &[0, 63, 64, 99]);
        assert_eq!(f.shift(1), r(100, &[1, 64, 65, 0]));
        assert_eq!(f.conjugate(), r(100, &[0, 37, 36, 1]));
        assert_eq!(f.reciprocal().unwrap(), r(100, &[99, 36, 35, 0]));
        assert_eq!(f.complement().weight(), 96);
        assert_eq!(f.degree(), Some(99));
        let g = r(100, &[1, 98]);
        assert_eq!(f.mul(&g).unwrap(), r(100, &[1, 64, 65, 0, 98, 61, 62, 97]));
    }

    #[test]
    fn ordering_is_unsigned_value() {
        assert!(r(4, &[3]) > r(4, &[0, 1, 2]));
        assert!(r(100, &[70]) > r(100, &[0, 1, 2, 63]));
    }

    #[test]
    fn from_u64_rejects_overflow() {
        assert!(RingElement::from_u64(3, 0b1000).is_err());
        assert_eq!(RingElement::from_u64(3, 0b101).unwrap(), r(3, &[0, 2]));
    }
}
