//! Best complete approximations of finite preorders.
//!
//! A preorder on at most 64 labelled elements is approximated by the complete
//! preorders nearest to it under the top-difference semimetric `D`, which
//! counts, over every menu, the elements maximal under one relation but not
//! the other. The nearest complete preorders are exactly the maximal
//! completions of largest index, and [`solver`] computes them both ways.
//!
//! ```
//! use bca::{gallery, solver, Limits};
//!
//! let p = gallery::isolated_beside_chain();
//! let report = solver::bca_duality(&p, &Limits::default()).unwrap();
//! assert_eq!(report.distance, 3);
//! assert_eq!(report.bca_set[0].to_string(), "{x,a} > {a1} > {a2}");
//! ```

pub mod cli;
pub mod completions;
pub mod doc;
pub mod dot;
pub mod error;
pub mod families;
pub mod gallery;
pub mod index;
pub mod limits;
pub mod metrics;
pub mod order;
pub mod solver;

pub use completions::{canonical_completion, enumerate_completions, CompletionFilter};
pub use doc::RelationDocument;
pub use error::{Error, Result};
pub use index::{BigCount, DyadicRational};
pub use limits::Limits;
pub use order::{GroundSet, Preorder, Relation, SubsetMask, TotalPreorder};
pub use solver::{ApproximationReport, Method, Verdict};
