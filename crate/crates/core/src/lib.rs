//! Canonical Gauss codes for virtual doodles.
//!
//! A virtual doodle with `n` real crossings is determined by a minimal Gauss
//! code up to relabeling, basepoint rotation and (for unoriented doodles)
//! reversal. This crate computes the left preferred and left canonical normal
//! forms of codes, decides minimality, enumerates and names every class for a
//! given `n`, and cross-checks the result through dihedral orbits of arrow
//! diagrams.
//!
//! ```
//! use doodle_core::{normal, GaussCode};
//!
//! let w = GaussCode::parse("1L 2R 2L 3R 1R 3L").unwrap();
//! assert_eq!(normal::proj_lc(&w).to_string(), "(1, 3, 6, 5, 2, 4)");
//! ```

pub mod arrow;
pub mod enumerate;
pub mod error;
pub mod gauss;
pub mod normal;
pub mod reduce;
pub mod report;
pub mod svg;

pub use arrow::{ArrowDiagram, Role, Symmetry};
pub use enumerate::{ClassificationTable, Counts, SizeLimit};
pub use error::{Error, Result};
pub use gauss::{GaussCode, JLabel, Side, Style};
