//! Dual Garside structure for Artin-Tits groups of type C~n.
//!
//! The affine Coxeter group of type C~n is realized inside the `2n`-periodic
//! permutations of `Z` as the fixed points of the involution `i -> 1 - i`. The divisors
//! of the Coxeter element `c` (`i -> i + 2` on odd integers, `i -> i - 2` on even ones)
//! form a germ `P`; its sigma-fixed part is a Garside germ whose group of fractions is
//! the Artin-Tits group of type C~n.
//!
//! Modules, bottom up:
//!
//! - [`perm`]: periodic permutations, cycle notation, total shift, `sigma`, `c`.
//! - [`noncrossing`]: periodic non-crossing partitions, refinement, meet and join.
//! - [`germ`]: the germ of divisors of `c`, lattice operations, reflection lengths.
//! - [`garside`]: normal forms and the word problem.
//! - [`hurwitz`]: reduced decompositions and Hurwitz orbits.
//! - [`centralizer`]: fixed subgerms under powers of `c`.
//! - [`diagram`]: SVG strip diagrams.
//! - [`cli`]: the `ctilde` command-line front end.

pub mod centralizer;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod garside;
pub mod germ;
pub mod hurwitz;
pub mod noncrossing;
pub mod perm;
pub mod strip;

pub use centralizer::{TypeCGerm, TypeCGermElement};
pub use diagram::StripDiagram;
pub use error::{Error, Result};
pub use garside::{Garside, GroupElement, Word};
pub use germ::{CtildeReflection, Germ, GermElement};
pub use hurwitz::Hurwitz;
pub use noncrossing::{Part, PeriodicPartition};
pub use perm::{coxeter_element, Cycle, CycleDecomposition, PeriodicPermutation};
pub use strip::{Side, Strip};
