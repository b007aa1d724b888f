//! Orbit counting for periodic patterns of the Nagumo lattice equation, and
//! continuation of the stationary states they label.
//!
//! - [`numtheory`]: Möbius function, totient, divisors.
//! - [`words`]: words over `{0, a, 1}`, the symmetry groups acting on them
//!   and brute-force orbit enumeration.
//! - [`counting`]: closed-form class counts and region totals.
//! - [`gde`]: the stationary problem on a cycle and type-tracked
//!   continuation in the coupling `d`.
//! - [`regions`]: existence-region boundaries in the `(a, d)` plane.
//! - [`verify`]: formula-versus-enumeration and identity checks.

pub mod counting;
pub mod gde;
pub mod numtheory;
pub mod regions;
pub mod verify;
pub mod words;

pub use counting::{count_table, AlphabetCounts, Count, CountError, CountTable};
pub use gde::{solve_type, ContinuationConfig, Equilibrium, Params, SolveError};
pub use regions::{d_max, scan_region, RegionBoundary, RegionSample, Terminal};
pub use words::{Alphabet, GroupKind, Letter, OrbitClass, Word, WordError};
