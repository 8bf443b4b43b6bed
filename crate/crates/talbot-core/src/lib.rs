//! Chambers and hermitian-form representations for the symmetric group.
//!
//! The crate decomposes the space `Herm(V)` of hermitian forms on the standard
//! representation `V = {z ∈ C^n : z_1 + ⋯ + z_n = 0}` into irreducibles, builds
//! the permutation basis of forms `h_i(z, z') = conj(z_i) z'_i`, classifies
//! points of `V` into the chambers `|z_{g1}|² ≥ ⋯ ≥ |z_{gn}|²` indexed by
//! `g ∈ S_n`, and for `n = 5` constructs the six hermitian forms attached to
//! the Sylow-5 subgroups together with the regions they cut out.
//!
//! Character arithmetic is exact (integers and rationals throughout); the
//! matrix side is floating point with explicit tolerances, checked against the
//! exact side wherever the two meet.

pub mod chambers;
pub mod chartab;
pub mod hermrep;
pub mod permgroup;
pub mod sylowforms;
