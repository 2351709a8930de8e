//! Exact computations relating finite relatively prime sets of positive
//! integers to difference sets of compact sets that meet every residue class
//! modulo `Z^n` ("N-sets").
//!
//! Going forward, [`integer_differences`] reads `(K - K) ∩ N` off a finite
//! union of closed rational intervals and [`box_differences`] does the same
//! for boxes in `R^n`. Going back, [`theorem2_build`] constructs an N-set
//! realizing any relatively prime `A`, driven by a minimal-weight
//! representation of 1 from [`represent_one`].
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod construct;
pub mod diffset;
pub mod error;
pub mod exact;
pub mod explore;
pub mod fixtures;
pub mod hnf;
pub mod lattice;
pub mod torus;
pub mod weights;

pub use construct::{
    build_from_repr, chain_build, theorem2_build, theorem2_build_capped, validate_roundtrip,
    ChainSpec, ConstructionTrace,
};
pub use diffset::{
    integer_differences, matched_pair_count, matched_pairs, witnesses, PairCount,
    PositiveIntegerSet,
};
pub use error::{ChainViolation, Error, Result};
pub use exact::{canonicalize, fractional_part, integer_part, Interval, IntervalSet, Rational};
pub use explore::explore2d;
pub use lattice::{
    box_differences, generates, proper_bound_check, proper_bound_check_with_radius,
    theorem4_check, BoxSet, Cuboid, LatticeSet,
};
pub use torus::{circle_project, is_nset, is_nset_nd, CircleCover};
pub use weights::{
    add_weight, geo_is_interval, geo_search, geo_upper, represent_one, represent_one_capped,
    GeoHit, ReprOfOne, Sign, Term,
};

pub use num_bigint::BigInt;
