//! Bordered double-circulant codes and the LCD criteria for DC and bordered
//! DC codes.
//!
//! The generator is `[I_{m+1} | A']` with
//!
//! ```text
//!        | alpha 1 1 ... 1 |
//!   A' = |   1             |
//!        |   :      A      |
//!        |   1             |
//! ```
//!
//! where `A` is the circulant of `f`. Border entries are plain ones over F2.

use serde::{Deserialize, Serialize};

use crate::circulant::CirculantMatrix;
use crate::dc::DcDescriptor;
use crate::error::{Error, Result};
use crate::gf2ring::{FreePoly, RingElement};
use crate::linear_code::{BinaryCode, Enumerator};
use crate::matrix::BitMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BorderedDescriptor {
    #[serde(with = "ring_text")]
    f: RingElement,
    alpha: bool,
}

impl BorderedDescriptor {
    pub fn new(f: RingElement, alpha: bool) -> Self {
        BorderedDescriptor { f, alpha }
    }

    pub fn modulus(&self) -> usize {
        self.f.modulus()
    }

    pub fn poly(&self) -> &RingElement {
        &self.f
    }

    pub fn alpha(&self) -> bool {
        self.alpha
    }

    /// The bordered circulant block `A'`, `(m+1) x (m+1)`.
    pub fn border_block(&self) -> BitMatrix {
        let m = self.modulus();
        let a = CirculantMatrix::from_poly(&self.f).to_dense();
        BitMatrix::from_fn(m + 1, m + 1, |r, c| match (r, c) {
            (0, 0) => self.alpha,
            (0, _) | (_, 0) => true,
            _ => a.get(r - 1, c - 1),
        })
    }

    /// The `[2m+2, m+1]` code `[I_{m+1} | A']`.
    pub fn build(&self) -> BinaryCode {
        let k = self.modulus() + 1;
        BinaryCode::new(BitMatrix::identity(k).hconcat(&self.border_block()))
            .expect("[I | A'] has full rank")
    }

    /// `alpha = 0`, `m` odd, `wt(f)` even and `f conj(f) = x + ... + x^{m-1}`.
    pub fn is_self_dual(&self) -> bool {
        let m = self.modulus();
        !self.alpha
            && m % 2 == 1
            && self.f.weight().is_multiple_of(2)
            && self.f.mul(&self.f.conjugate()).ok() == RingElement::all_ones_minus_constant(m).ok()
    }

    pub fn is_lcd_oracle(&self) -> bool {
        self.build().is_lcd()
    }
}

fn odd_self_dual_dc(f: &RingElement, op: &'static str) -> Result<()> {
    let m = f.modulus();
    if m.is_multiple_of(2) {
        return Err(Error::precondition(op, format!("m = {m} is even")));
    }
    if !DcDescriptor::new(f.clone()).is_self_dual() {
        return Err(Error::precondition(op, format!("{f} is not self-dual")));
    }
    Ok(())
}

/// `(m, complement(f), alpha = 0)` for a self-dual DC generator `f` at odd
/// `m`; the resulting bordered code is self-dual.
pub fn complement_lift(f: &RingElement) -> Result<BorderedDescriptor> {
    odd_self_dual_dc(f, "complement_lift")?;
    Ok(BorderedDescriptor::new(f.complement(), false))
}

/// Whether the bordered code on `complement(f)` is extremal, for an extremal
/// self-dual DC generator `f` at odd `m` with `2m <= 18`.
pub fn extremality_transfer(f: &RingElement) -> Result<bool> {
    odd_self_dual_dc(f, "extremality_transfer")?;
    let m = f.modulus();
    if 2 * m > 18 {
        return Err(Error::precondition(
            "extremality_transfer",
            format!("length {} exceeds 18", 2 * m),
        ));
    }
    if !DcDescriptor::new(f.clone()).is_extremal_oracle()? {
        return Err(Error::precondition(
            "extremality_transfer",
            format!("the DC code of {f} is not extremal"),
        ));
    }
    complement_lift(f)?.build().is_extremal()
}

/// `(m, x + x^2 + ... + x^{m-1}, alpha = 0)` for odd `m`.
pub fn all_ones_minus_constant(m: usize) -> Result<BorderedDescriptor> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    Ok(BorderedDescriptor::new(
        RingElement::all_ones_minus_constant(m)?,
        false,
    ))
}

/// `gcd(1 + f conj(f), x^m - 1) = 1`, the LCD criterion for the DC code of `f`.
pub fn dc_is_lcd(f: &RingElement) -> bool {
    let m = f.modulus();
    let one = RingElement::one(m).expect("m >= 1");
    let s = f
        .mul(&f.conjugate())
        .and_then(|p| p.add(&one))
        .expect("same modulus");
    s.lift()
        .gcd(&FreePoly::x_pow_minus_one(m))
        .is_ok_and(|g| g.is_one())
}

/// Necessary parity condition for an `alpha = 0` bordered code to be LCD:
/// `m` and `wt(f)` have the same parity.
pub fn bordered_lcd_parity_ok(b: &BorderedDescriptor) -> Result<bool> {
    if b.alpha {
        return Err(Error::precondition(
            "bordered_lcd_parity_ok",
            "defined for alpha = 0 only",
        ));
    }
    Ok(b.modulus() % 2 == b.f.weight() % 2)
}

/// `(m, complement(f), alpha = 0)` for a DC-LCD generator `f`; the bordered
/// code is LCD.
pub fn bordered_lcd_alpha0(f: &RingElement) -> Result<BorderedDescriptor> {
    if !dc_is_lcd(f) {
        return Err(Error::precondition(
            "bordered_lcd_alpha0",
            format!("gcd(1 + f conj(f), x^m - 1) != 1 for f = {f}"),
        ));
    }
    Ok(BorderedDescriptor::new(f.complement(), false))
}

/// How [`bordered_lcd_alpha1`] reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LcdRoute {
    EvenModulus,
    GcdCriterion,
    HullOracle,
}

/// LCD decision for an `alpha = 1` bordered code. Even `m` is never LCD; at
/// odd `m` the code is LCD when `f` or its complement passes the DC gcd
/// criterion; anything else is settled by the hull rank.
pub fn bordered_lcd_alpha1(b: &BorderedDescriptor) -> Result<(bool, LcdRoute)> {
    if !b.alpha {
        return Err(Error::precondition(
            "bordered_lcd_alpha1",
            "defined for alpha = 1 only",
        ));
    }
    if b.modulus().is_multiple_of(2) {
        return Ok((false, LcdRoute::EvenModulus));
    }
    if dc_is_lcd(&b.f) || dc_is_lcd(&b.f.complement()) {
        return Ok((true, LcdRoute::GcdCriterion));
    }
    Ok((b.is_lcd_oracle(), LcdRoute::HullOracle))
}

/// Summary used by the `bordered classify` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderedClassification {
    pub self_dual: bool,
    pub lcd: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hull_dim: usize,
}

pub fn classify(b: &BorderedDescriptor, enumerator: &Enumerator) -> Result<BorderedClassification> {
    let code = b.build();
    let self_dual = b.is_self_dual();
    if self_dual != code.is_self_dual() {
        return Err(Error::Counterexample(format!(
            "bordered self-duality of {} (alpha={}) disagrees with G G^T",
            b.f, b.alpha as u8
        )));
    }
    let hull_dim = code.hull_dimension();
    Ok(BorderedClassification {
        self_dual,
        lcd: hull_dim == 0,
        n: code.length(),
        k: code.dimension(),
        d: enumerator.min_distance(&code)?,
        hull_dim,
    })
}

pub(crate) mod ring_text {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::gf2ring::RingElement;
    use crate::text::{parse_ring, to_hex};

    pub fn serialize<S: Serializer>(f: &RingElement, s: S) -> Result<S::Ok, S::Error> {
        to_hex(f).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RingElement, D::Error> {
        let text = String::deserialize(d)?;
        parse_ring(&text, None).map_err(serde::de::Error::custom)
    }
}
