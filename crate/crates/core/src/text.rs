//! Textual polynomial syntax.
//!
//! Two input forms are accepted:
//!
//! * sparse monomials, `x^6+x^4+x^3+x+1` (braces `x^{10}` allowed, whitespace
//!   ignored, `0` for the zero polynomial);
//! * packed hex with an explicit modulus, `m=9:0x05B`, where bit `i` of the
//!   integer is the coefficient of `x^i`.
//!
//! Printing always uses the sparse form with descending exponents.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2ring::{FreePoly, RingElement};

/// Largest exponent or modulus the parsers accept.
pub const MAX_DEGREE: usize = 1 << 20;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses the sparse form into its exponents, in input order. Duplicates are
/// kept; callers reduce them mod 2.
pub fn parse_exponents(s: &str) -> Result<Vec<usize>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut exps = Vec::new();
    for term in compact.split('+') {
        match term {
            "" => return Err(err(format!("empty term in {s:?}"))),
            "0" => {}
            "1" => exps.push(0),
            "x" | "X" => exps.push(1),
            _ => {
                let rest = term
                    .strip_prefix("x^")
                    .or_else(|| term.strip_prefix("X^"))
                    .ok_or_else(|| err(format!("unrecognised term {term:?}")))?;
                let digits = match rest.strip_prefix('{') {
                    Some(inner) => inner
                        .strip_suffix('}')
                        .ok_or_else(|| err(format!("unbalanced brace in {term:?}")))?,
                    None => rest,
                };
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err(format!("bad exponent in {term:?}")));
                }
                let e: usize = digits
                    .parse()
                    .map_err(|_| err(format!("exponent out of range in {term:?}")))?;
                if e > MAX_DEGREE {
                    return Err(err(format!("exponent {e} exceeds {MAX_DEGREE}")));
                }
                exps.push(e);
            }
        }
    }
    Ok(exps)
}

pub fn parse_free(s: &str) -> Result<FreePoly> {
    Ok(FreePoly::from_exponents(parse_exponents(s)?))
}

/// Parses either form into a ring element. `m` is required for the sparse
/// form; for the hex form it must agree with the embedded modulus if given.
pub fn parse_ring(s: &str, m: Option<usize>) -> Result<RingElement> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("m=") {
        let (embedded, value) = parse_hex_body(rest)?;
        if let Some(m) = m {
            if m != embedded {
                return Err(Error::ModulusMismatch {
                    left: m,
                    right: embedded,
                });
            }
        }
        return RingElement::from_words(embedded, value);
    }
    let m = m.ok_or_else(|| err("sparse polynomial needs an explicit modulus m"))?;
    check_modulus(m)?;
    let exps = parse_exponents(s)?;
    if let Some(&e) = exps.iter().find(|&&e| e >= m) {
        return Err(err(format!("exponent {e} is not below m = {m}")));
    }
    RingElement::from_exponents(m, exps)
}

fn check_modulus(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m > MAX_DEGREE {
        return Err(err(format!("modulus {m} exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

fn parse_hex_body(rest: &str) -> Result<(usize, Vec<u64>)> {
    let (m_txt, hex) = rest
        .split_once(':')
        .ok_or_else(|| err("expected m=<int>:0x<hex>"))?;
    if m_txt.is_empty() || !m_txt.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("bad modulus {m_txt:?}")));
    }
    let m: usize = m_txt
        .parse()
        .map_err(|_| err(format!("modulus out of range: {m_txt:?}")))?;
    check_modulus(m)?;
    let digits = hex
        .strip_prefix("0x")
        .or_else(|| hex.strip_prefix("0X"))
        .ok_or_else(|| err("hex coefficients must start with 0x"))?;
    if digits.is_empty() {
        return Err(err("no hex digits"));
    }
    let significant = digits.trim_start_matches('0');
    if significant.len() > m.div_ceil(4) {
        return Err(err(format!("pattern does not fit in {m} bits")));
    }
    let mut words = vec![0u64; m.div_ceil(64)];
    for (pos, c) in significant.chars().rev().enumerate() {
        let nibble = c
            .to_digit(16)
            .ok_or_else(|| err(format!("bad hex digit {c:?}")))? as u64;
        words[pos / 16] |= nibble << (4 * (pos % 16));
    }
    Ok((m, words))
}

/// The packed hex form, zero-padded to `ceil(m/4)` upper-case digits.
pub fn to_hex(f: &RingElement) -> String {
    let m = f.modulus();
    let digits = m.div_ceil(4);
    let mut out = String::with_capacity(digits + 8);
    out.push_str(&format!("m={m}:0x"));
    for pos in (0..digits).rev() {
        let nibble = (f.words()[pos / 16] >> (4 * (pos % 16))) & 0xF;
        out.push(
            char::from_digit(nibble as u32, 16)
                .unwrap()
                .to_ascii_uppercase(),
        );
    }
    out
}

fn write_sparse<I: Iterator<Item = usize>>(f: &mut fmt::Formatter<'_>, mut exps: I) -> fmt::Result {
    let Some(first) = exps.next() else {
        return f.write_str("0");
    };
    write_monomial(f, first)?;
    for e in exps {
        f.write_str("+")?;
        write_monomial(f, e)?;
    }
    Ok(())
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: usize) -> fmt::Result {
    match e {
        0 => f.write_str("1"),
        1 => f.write_str("x"),
        _ => write!(f, "x^{e}"),
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(f, self.exponents().rev())
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(f, self.exponents().rev())
    }
}
