//! Covering paths, trails and cycles for `n_1 x ... x n_k` point grids.
//!
//! [`mlai::generate_mlai`] builds an uncrossing covering path with
//! `3 * prod_{i<k} n_i - 2` equal-length links inside the minimum box of any
//! grid. [`constructions`] holds the fixed small-grid examples, and
//! [`verify`] checks any chain against the definitions independently of how
//! it was built.
//!
//! ```
//! use gridpath::{generate_mlai, maabb, verify, GridSpec};
//!
//! let g = GridSpec::new(vec![3, 3, 3]).unwrap();
//! let path = generate_mlai(&g).unwrap();
//! let report = verify(&path, &g, &maabb(&g)).unwrap();
//! assert!(report.passed());
//! assert_eq!(report.link_length_h, 25);
//! ```

pub mod bounds;
pub mod chain;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod grid;
pub mod iox;
pub mod mlai;
pub mod oracle;
pub mod verify;

pub use chain::{Chain, ChainKind};
pub use error::{Error, Result};
pub use geom::{Aabb, IntersectionResult, Point, Segment};
pub use grid::{corner_set, maabb, raabb, GridSpec};
pub use mlai::generate_mlai;
pub use verify::{verify, verify_with, VerificationReport, VerifyOptions};
