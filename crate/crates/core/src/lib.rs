//! Exact combinatorics of non-crossing partitions, meandric systems and free
//! cumulants.
//!
//! The crate is organised bottom-up:
//!
//! * [`nc_lattice`]: set partitions, the lattices `NC(n)` and `P(n)`, trace
//!   permutations and Catalan-family enumerators;
//! * [`meander`]: the doubling construction, meandric permutations and the
//!   irreducibility / meander criteria;
//! * [`freeprob`]: moment and cumulant sequences, truncated series, the
//!   moment-cumulant transform, R-transforms and the `ν_t` polynomials;
//! * [`enumeration`]: exhaustive (optionally parallel) counting over
//!   `NC(n)²` and related index sets;
//! * [`analysis`]: the moment table of `ν`, Hankel determinants and the
//!   radius-of-convergence enclosure;
//! * [`reference`]: the bundled table of meander numbers for `n ≤ 24`.
//!
//! Everything is exact: integers are arbitrary precision and rationals are
//! [`num_rational::BigRational`]. Parallel enumeration uses rayon behind the
//! default `parallel` feature; without it every pipeline runs sequentially.

pub mod analysis;
pub mod enumeration;
pub mod freeprob;
pub mod meander;
pub mod nc_lattice;
pub mod reference;
