//! Brute-force group-level oracle: concrete GL_n(q) at desk scale.
//!
//! Everything here is exhaustive and verified on the fly: groups are
//! enumerated and checked against the order formula, coset representatives
//! are canonical echelon flags, induction and restriction are explicit
//! matrix constructions, and the endomorphism algebra of a permutation
//! module is computed from double-coset orbits. This is the independent
//! ground truth the combinatorial classification is tested against.
//!
//! Submodules:
//! - [`gl`]: the groups — [`gl::GlGroup`] (one GL factor, fully enumerated
//!   with generator words) and [`gl::LeviGroup`] (a block-diagonal product).
//! - [`parabolic`]: block-triangular subgroups, unipotent radicals, and
//!   canonical coset transversals of G/P.
//! - [`functor`]: induction from a parabolic and restriction by averaging
//!   over the unipotent radical.
//! - [`endo`]: endomorphism algebras; the orbit basis of End(k[G/B])
//!   indexed by Weyl-group elements.
//! - [`series`]: cuspidal module search, series content, the
//!   induction-compatibility diagram, and the primitivity oracle.

pub mod endo;
pub mod functor;
pub mod gl;
pub mod parabolic;
pub mod series;

pub use endo::{endo_algebra, orbital_basis, OrbitalBasis};
pub use functor::{hc_induce, hc_restrict, trivial_module};
pub use gl::{GlGroup, LeviGroup};
pub use parabolic::{Parabolic, Transversal};
pub use series::{
    check_induction_diagram, find_cuspidal_unipotent, is_cuspidal, levi_cuspidal_modules,
    oracle_primitivity, series_content, series_simples, DiagramCase, SimpleVerdict,
};
