//! Exact arithmetic and exhaustive search for binary double-circulant (DC)
//! and bordered double-circulant codes.
//!
//! * [`gf2ring`]: the ring `F2[x]/(x^m - 1)` and free polynomials over F2.
//! * [`circulant`]: circulant matrices, cyclotomic cosets, `|O_m|`.
//! * [`linear_code`]: generic binary codes with exact metrics.
//! * [`dc`], [`bordered`]: constructions and closed-form predicates.
//! * [`search`], [`tables`]: exhaustive sweeps and table reproduction.

pub mod bordered;
pub mod circulant;
pub mod dc;
pub mod error;
pub mod gf2ring;
pub mod linear_code;
pub mod matrix;
pub mod search;
pub mod tables;
pub mod text;

pub use bordered::BorderedDescriptor;
pub use circulant::{count_orthogonal, cyclotomic_cosets, CirculantMatrix, CosetPartition};
pub use dc::{DcDescriptor, PredicateUsed};
pub use error::{Error, Result};
pub use gf2ring::{Degree, FreePoly, RingElement};
pub use linear_code::{extremal_bound, BinaryCode, CodeMetrics, Enumerator};
pub use matrix::BitMatrix;
pub use search::{search, SearchConfig, SearchKind, SearchReport};
pub use text::{parse_free, parse_ring};
