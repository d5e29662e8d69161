//! Circulant matrices over F2, 2-cyclotomic cosets, and the count of
//! orthogonal circulants.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf2ring::RingElement;
use crate::matrix::BitMatrix;

/// An `m x m` circulant determined by its first row. Row `i` is the first
/// row rotated right by `i`, i.e. the coefficients of `x^i f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantMatrix {
    first_row: RingElement,
}

impl CirculantMatrix {
    pub fn from_poly(f: &RingElement) -> Self {
        CirculantMatrix {
            first_row: f.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.first_row.modulus()
    }

    pub fn first_row(&self) -> &RingElement {
        &self.first_row
    }

    pub fn row(&self, i: usize) -> RingElement {
        self.first_row.shift(i)
    }

    pub fn to_dense(&self) -> BitMatrix {
        let m = self.order();
        let mut out = BitMatrix::zeros(m, m);
        for i in 0..m {
            for j in self.row(i).exponents() {
                out.set(i, j, true);
            }
        }
        out
    }

    /// `A A^T = I`, decided in the ring as `f * conj(f) = 1`.
    pub fn is_orthogonal(&self) -> bool {
        self.first_row
            .mul(&self.first_row.conjugate())
            .is_ok_and(|p| p.is_one())
    }

    /// The same question answered with a dense matrix product.
    pub fn is_orthogonal_dense(&self) -> bool {
        let a = self.to_dense();
        a.gram() == BitMatrix::identity(self.order())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    /// Sorted residues; the first one is the representative.
    pub elements: Vec<usize>,
    /// Whether the coset is fixed setwise by `s -> -s`.
    pub self_reciprocal: bool,
}

impl Coset {
    pub fn representative(&self) -> usize {
        self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Orbits of `Z_m` under `s -> 2s mod m`, ordered by representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    pub m: usize,
    pub cosets: Vec<Coset>,
}

impl CosetPartition {
    /// Index of the coset containing `s`.
    pub fn coset_of(&self, s: usize) -> usize {
        self.cosets
            .iter()
            .position(|c| c.elements.binary_search(&(s % self.m)).is_ok())
            .expect("cosets cover Z_m")
    }
}

pub fn cyclotomic_cosets(m: usize) -> Result<CosetPartition> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    let mut seen = vec![false; m];
    let mut cosets = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut elements = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            elements.push(x);
            x = (2 * x) % m;
        }
        elements.sort_unstable();
        let self_reciprocal = elements
            .iter()
            .all(|&e| elements.binary_search(&((m - e) % m)).is_ok());
        cosets.push(Coset {
            elements,
            self_reciprocal,
        });
    }
    Ok(CosetPartition { m, cosets })
}

/// One multiplicative factor of the odd-modulus product formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// A self-reciprocal coset of size `2c`, contributing `2^c + 1`.
    SelfReciprocal { representative: usize, c: usize },
    /// A pair `C_s, C_{-s}` of size `d` each, contributing `2^d - 1`.
    ReciprocalPair {
        representative: usize,
        partner: usize,
        d: usize,
    },
}

impl Factor {
    pub fn value(&self) -> BigUint {
        let two = BigUint::from(2u32);
        match *self {
            Factor::SelfReciprocal { c, .. } => two.pow(c as u32) + 1u32,
            Factor::ReciprocalPair { d, .. } => two.pow(d as u32) - 1u32,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Odd {
        partition: CosetPartition,
        factors: Vec<Factor>,
    },
    /// `|O_{2s}| = 2^exponent |O_s|`.
    Even {
        exponent: usize,
        half: Box<OrthogonalCount>,
    },
}

/// `|O_m|` together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalCount {
    pub m: usize,
    pub count: BigUint,
    pub derivation: Derivation,
}

pub fn count_orthogonal(m: usize) -> Result<BigUint> {
    Ok(explain_orthogonal(m)?.count)
}

pub fn explain_orthogonal(m: usize) -> Result<OrthogonalCount> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m % 2 == 1 {
        let partition = cyclotomic_cosets(m)?;
        let mut factors = Vec::new();
        for (idx, coset) in partition.cosets.iter().enumerate() {
            let rep = coset.representative();
            if rep == 0 {
                continue;
            }
            if coset.self_reciprocal {
                debug_assert!(coset.len() % 2 == 0);
                factors.push(Factor::SelfReciprocal {
                    representative: rep,
                    c: coset.len() / 2,
                });
            } else {
                let partner = partition.coset_of(m - rep);
                // each pair is counted once, at its earlier coset
                if partner > idx {
                    factors.push(Factor::ReciprocalPair {
                        representative: rep,
                        partner: partition.cosets[partner].representative(),
                        d: coset.len(),
                    });
                }
            }
        }
        let count = factors
            .iter()
            .fold(BigUint::from(1u32), |acc, f| acc * f.value());
        return Ok(OrthogonalCount {
            m,
            count,
            derivation: Derivation::Odd { partition, factors },
        });
    }
    let s = m / 2;
    let exponent = if s % 2 == 1 {
        s.div_ceil(2)
    } else if (s / 2) % 2 == 1 {
        s / 2 + 1
    } else {
        s / 2
    };
    let half = explain_orthogonal(s)?;
    let count = BigUint::from(2u32).pow(exponent as u32) * &half.count;
    Ok(OrthogonalCount {
        m,
        count,
        derivation: Derivation::Even {
            exponent,
            half: Box::new(half),
        },
    })
}

impl fmt::Display for OrthogonalCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.derivation {
            Derivation::Odd { partition, factors } => {
                writeln!(f, "|O_{}| = {}", self.m, self.count)?;
                for c in &partition.cosets {
                    writeln!(
                        f,
                        "  C_{:<3} size {:<3} {} {:?}",
                        c.representative(),
                        c.len(),
                        if c.self_reciprocal {
                            "self-reciprocal"
                        } else {
                            "paired         "
                        },
                        c.elements
                    )?;
                }
                if factors.is_empty() {
                    writeln!(f, "  product: empty (= 1)")?;
                }
                for t in factors {
                    match t {
                        Factor::SelfReciprocal { representative, c } => {
                            writeln!(f, "  C_{representative}: 2^{c} + 1 = {}", t.value())?
                        }
                        Factor::ReciprocalPair {
                            representative,
                            partner,
                            d,
                        } => writeln!(
                            f,
                            "  C_{representative}, C_{partner}: 2^{d} - 1 = {}",
                            t.value()
                        )?,
                    }
                }
                Ok(())
            }
            Derivation::Even { exponent, half } => {
                writeln!(
                    f,
                    "|O_{}| = 2^{} * |O_{}| = {}",
                    self.m, exponent, half.m, self.count
                )?;
                write!(f, "{half}")
            }
        }
    }
}
