//! Exact computations for Dwork-family hypersurfaces
//!
//! ```text
//! X_1^N + ... + X_N^N = N t X_1^{w_1} ... X_N^{w_N}
//! ```
//!
//! The crate has two independent halves:
//!
//! * [`charcomb`] and [`hodge`] work with the labels of the eigenspaces of the
//!   middle cohomology under the diagonal group action. They give each
//!   eigenspace's dimension and Hodge-Tate multiset, the symmetric-group
//!   orbits, duality, and classes whose weights repeat.
//! * [`pointcount`] counts points of single fibers over finite fields and
//!   checks the trace identity, the Weil bound and group-action stability.
//!
//! [`report`] assembles both into serializable documents; the `dwork`
//! binary is a thin command-line wrapper over it.

pub mod charcomb;
pub mod error;
pub mod hodge;
pub mod pointcount;
pub mod report;

pub use error::{Error, Result};
