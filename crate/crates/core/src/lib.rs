//! Exact combinatorial invariants of hyperplane arrangements and their power
//! ideals: Tutte polynomials (three independent routes), Hilbert series of the
//! inverse systems of power ideals, explicit monomial bases, fat-point
//! filtration series, and multigraded series of zonotopal Cox rings.
//!
//! Everything is computed over the rationals with arbitrary precision; there
//! is no floating point anywhere. The theory is usually stated over C, but
//! every dimension computed here is the rank of a matrix with rational
//! entries, and ranks do not change under field extension, so Q is enough.
//! This choice is deliberate and load-bearing: all cross-checks in this crate
//! compare exact integers, never approximations.
//!
//! The crate is organised in layers:
//!
//! * [`exactmath`] — rational scalars, exact row reduction, truncated
//!   multivariate power series.
//! * [`arrangement`] — vector configurations (lists of covectors with
//!   multiplicity), minors, flats, lines, built-in families, file format.
//! * [`tutte`] — Tutte polynomials by subset expansion, deletion–contraction
//!   and basis activities; the multivariate and spanning-subset generating
//!   polynomials.
//! * [`zonotopal`] — closed-form Hilbert series of the inverse systems
//!   `C(A, k)` of power ideals, and their explicit monomial bases.
//! * [`oracle`] — independent brute-force linear algebra that recomputes the
//!   same dimensions from generators, used to validate every closed form.
//! * [`fatpoints`] — Hilbert series of the fat-point ideal filtration.
//! * [`corpus`] — the named example configurations used throughout the tests
//!   and accepted by the CLI.
//! * [`coxring`] — multigraded Hilbert series of Cox rings of blown-up
//!   projective spaces attached to an arrangement, by direct summation and by
//!   closed-form generating series.
//! * [`verify`] — the cross-check battery shared by the CLI and the test
//!   suite.

pub mod arrangement;
pub mod corpus;
pub mod coxring;
pub mod exactmath;
pub mod fatpoints;
pub mod oracle;
pub mod tutte;
pub mod verify;
pub mod zonotopal;

pub use exactmath::scalar::Rat;
