//! Pure double-circulant codes generated by `(1, f(x))`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::circulant::{count_orthogonal, CirculantMatrix};
use crate::error::{Error, Result};
use crate::gf2ring::RingElement;
use crate::linear_code::{extremal_bound, BinaryCode};
use crate::matrix::BitMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DcDescriptor {
    f: RingElement,
}

/// Which rule decided extremality for a self-dual DC code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredicateUsed {
    /// Weight-3 / weight-2-difference rule for lengths up to 20.
    ThmUpto20,
    /// Length 22, weight 5.
    Thm22,
    /// Lengths 24..=44, weight 7.
    Thm24_44,
    /// No closed-form rule applies; decided by enumeration.
    OracleOnly,
}

impl PredicateUsed {
    pub fn as_str(self) -> &'static str {
        match self {
            PredicateUsed::ThmUpto20 => "thm_upto20",
            PredicateUsed::Thm22 => "thm_22",
            PredicateUsed::Thm24_44 => "thm_24_44",
            PredicateUsed::OracleOnly => "oracle_only",
        }
    }
}

impl DcDescriptor {
    pub fn new(f: RingElement) -> Self {
        DcDescriptor { f }
    }

    pub fn modulus(&self) -> usize {
        self.f.modulus()
    }

    pub fn poly(&self) -> &RingElement {
        &self.f
    }

    /// The `[2m, m]` code with generator `[I_m | A]`.
    pub fn build(&self) -> BinaryCode {
        let m = self.modulus();
        let a = CirculantMatrix::from_poly(&self.f).to_dense();
        BinaryCode::new(BitMatrix::identity(m).hconcat(&a)).expect("[I | A] has full rank")
    }

    /// `f * conj(f) = 1` in `R`.
    pub fn is_self_dual(&self) -> bool {
        CirculantMatrix::from_poly(&self.f).is_orthogonal()
    }

    /// The orbit `{x^i f, x^i f*}` of codes equivalent to this one.
    pub fn equivalence_class(&self) -> Result<BTreeSet<RingElement>> {
        let star = self.f.reciprocal()?;
        let m = self.modulus();
        Ok((0..m)
            .flat_map(|i| [self.f.shift(i), star.shift(i)])
            .collect())
    }

    /// Least element of [`equivalence_class`](Self::equivalence_class) as an
    /// unsigned integer.
    pub fn canonical_form(&self) -> Result<RingElement> {
        if self.f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some(bits) = self.f.as_u64() {
            let m = self.modulus();
            let c = canonical_u64(bits, m);
            return RingElement::from_u64(m, c);
        }
        Ok(self
            .equivalence_class()?
            .into_iter()
            .next()
            .expect("orbit is nonempty"))
    }

    fn require_self_dual(&self, op: &'static str) -> Result<()> {
        if !self.is_self_dual() {
            return Err(Error::precondition(
                op,
                format!("{} is not self-dual", self.f),
            ));
        }
        Ok(())
    }

    /// Extremality for self-dual codes of length `2m <= 20`: weight 3, or
    /// weight above 3 with some `f + x^i f` of weight 2.
    pub fn extremal_upto20(&self) -> Result<bool> {
        self.require_self_dual("extremal_upto20")?;
        let m = self.modulus();
        if 2 * m > 20 {
            return Err(Error::precondition(
                "extremal_upto20",
                format!("length {} exceeds 20", 2 * m),
            ));
        }
        let bits = self.f.as_u64().expect("m <= 10");
        Ok(extremal_upto20_bits(bits, m))
    }

    /// Extremality at length 22 for weight-5 generators: no `f + x^i f` of
    /// weight 2.
    pub fn extremal_22(&self) -> Result<bool> {
        self.require_self_dual("extremal_22")?;
        if self.modulus() != 11 || self.f.weight() != 5 {
            return Err(Error::precondition(
                "extremal_22",
                format!(
                    "needs m = 11 and weight 5, got m = {} and weight {}",
                    self.modulus(),
                    self.f.weight()
                ),
            ));
        }
        Ok(extremal_22_bits(self.f.as_u64().unwrap(), 11))
    }

    /// Extremality at lengths 24..=44 for weight-7 generators: no
    /// `f + x^i f` of weight 2 and no `f + x^i f + x^j f` of weight 1.
    pub fn extremal_24_44(&self) -> Result<bool> {
        self.require_self_dual("extremal_24_44")?;
        let m = self.modulus();
        if !(12..=22).contains(&m) || self.f.weight() != 7 {
            return Err(Error::precondition(
                "extremal_24_44",
                format!(
                    "needs 12 <= m <= 22 and weight 7, got m = {m} and weight {}",
                    self.f.weight()
                ),
            ));
        }
        Ok(extremal_24_44_bits(self.f.as_u64().unwrap(), m))
    }

    /// Picks the rule that covers this self-dual generator, if any, and
    /// evaluates it. `None` means only enumeration can decide.
    pub fn extremal_by_theorem(&self) -> Result<(PredicateUsed, Option<bool>)> {
        self.require_self_dual("extremal_by_theorem")?;
        let bits = self.f.as_u64();
        let (m, w) = (self.modulus(), self.f.weight());
        Ok(match predicate_for(m, w) {
            PredicateUsed::ThmUpto20 => (
                PredicateUsed::ThmUpto20,
                Some(extremal_upto20_bits(bits.unwrap(), m)),
            ),
            PredicateUsed::Thm22 => (
                PredicateUsed::Thm22,
                Some(extremal_22_bits(bits.unwrap(), m)),
            ),
            PredicateUsed::Thm24_44 => (
                PredicateUsed::Thm24_44,
                Some(extremal_24_44_bits(bits.unwrap(), m)),
            ),
            PredicateUsed::OracleOnly => (PredicateUsed::OracleOnly, None),
        })
    }

    pub fn is_extremal_oracle(&self) -> Result<bool> {
        let code = self.build();
        Ok(code.min_distance()? == extremal_bound(code.length())?)
    }
}

/// The rule covering a self-dual generator of weight `w` at modulus `m`.
pub fn predicate_for(m: usize, w: usize) -> PredicateUsed {
    match (m, w) {
        (1..=10, _) => PredicateUsed::ThmUpto20,
        (11, 5) => PredicateUsed::Thm22,
        (12..=22, 7) => PredicateUsed::Thm24_44,
        _ => PredicateUsed::OracleOnly,
    }
}

/// Canonical form on a packed pattern, `m <= 64`, `bits != 0`.
pub fn canonical_u64(bits: u64, m: usize) -> u64 {
    use crate::gf2ring::word;
    let conj = word::conjugate(bits, m);
    (0..m)
        .map(|i| word::rotate(bits, i, m).min(word::rotate(conj, i, m)))
        .min()
        .expect("m >= 1")
}

fn has_weight2_difference(bits: u64, m: usize) -> bool {
    use crate::gf2ring::word;
    (1..m).any(|i| (bits ^ word::rotate(bits, i, m)).count_ones() == 2)
}

pub(crate) fn extremal_upto20_bits(bits: u64, m: usize) -> bool {
    match bits.count_ones() {
        3 => true,
        w if w > 3 => has_weight2_difference(bits, m),
        _ => false,
    }
}

pub(crate) fn extremal_22_bits(bits: u64, m: usize) -> bool {
    !has_weight2_difference(bits, m)
}

pub(crate) fn extremal_24_44_bits(bits: u64, m: usize) -> bool {
    use crate::gf2ring::word;
    if has_weight2_difference(bits, m) {
        return false;
    }
    let shifts: Vec<u64> = (0..m).map(|i| word::rotate(bits, i, m)).collect();
    for i in 1..m {
        for j in (i + 1)..m {
            if (bits ^ shifts[i] ^ shifts[j]).count_ones() == 1 {
                return false;
            }
        }
    }
    true
}

/// `f = 1 + x^{m/4} + x^{m/2}` for `m ≡ 0 (mod 4)`, `2m <= 20`.
pub fn trisection(m: usize) -> Result<DcDescriptor> {
    if m == 0 || !m.is_multiple_of(4) || 2 * m > 20 {
        return Err(Error::precondition(
            "trisection",
            format!("m must be a positive multiple of 4 with 2m <= 20, got {m}"),
        ));
    }
    Ok(DcDescriptor::new(RingElement::from_exponents(
        m,
        [0, m / 4, m / 2],
    )?))
}

/// True when `|O_m| = m`, so only monomials give self-dual DC codes and
/// none of length `2m` is extremal.
pub fn no_extremal_by_count(m: usize) -> Result<bool> {
    if m < 2 {
        return Err(Error::precondition("no_extremal_by_count", "needs m >= 2"));
    }
    Ok(count_orthogonal(m)? == BigUint::from(m))
}
