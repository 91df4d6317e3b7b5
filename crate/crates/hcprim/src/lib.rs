//! Harish-Chandra primitivity of modular representations of finite classical
//! groups, decided three independent ways:
//!
//! * a combinatorial classification over cuspidal support shapes
//!   ([`classify`]),
//! * an Iwahori-Hecke algebra engine with parabolic induction ([`hecke`] over
//!   [`coxeter`] and [`modalg`]),
//! * a brute-force oracle over literal matrix groups GL_n(q) at desk scale
//!   ([`grouprep`]).
//!
//! The oracle exists to check the other two: everything the classification
//! asserts on instances small enough to enumerate is recomputed from group
//! elements and modules, and the agreement suite lives in [`verify`].
//!
//! Start from the runnable examples:
//!
//! * `cargo run --example classify_shapes` - shape enumeration and verdicts
//! * `cargo run --example jordan_series` - verdicts for non-unipotent series
//! * `cargo run --example field_arithmetic` - GF(p^d) and exact linear algebra
//! * `cargo run --example coxeter_words` - reduced words and coset transversals
//! * `cargo run --example hecke_induction` - T-basis arithmetic, induced modules
//! * `cargo run --example meataxe` - irreducibility testing and composition series
//! * `cargo run --example group_oracle` - GL_n(q) induction/restriction by hand
//! * `cargo run --example endo_match` - double-coset basis vs T-basis
//!
//! The same machinery is scriptable through the thin `hcprim` binary
//! (`classify`, `shapes`, `hecke`, `oracle`, `verify` subcommands).

pub mod classify;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod grouprep;
pub mod hecke;
pub mod matrix;
pub mod modalg;
pub mod prng;
pub mod verify;

pub use error::Error;
