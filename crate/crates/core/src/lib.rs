//! Exact computer algebra for cyclic codes over the finite rings
//! `R_i = F_q[u]/(u^i)`, `S_i = F_q[u_1..u_i]/(u_k^2)` and
//! `T_(i,j) = F_q[u,v]/(u^i, v^j)`, together with Galois rings and the
//! structural checks (rank, cardinality, locality, principality, distance)
//! that can be settled by exhaustive computation at small sizes.

pub mod analysis;
pub mod caps;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod galois;
pub mod ideal;
pub mod matrix;
pub mod padic;
pub mod poly;
pub mod report;
pub mod ring;
pub mod text;
pub mod zmod;

pub use caps::Caps;
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use report::{Report, Verdict};
pub use ring::{Monomial, RingElem, RingFamily, RingSpec};
