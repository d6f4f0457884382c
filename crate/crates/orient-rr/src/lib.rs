//! Symbolic engine for oriented cohomology theories.
//!
//! The engine builds the cohomology rings of iterated projective bundles as
//! finitely presented graded quotient rings with exact coefficients,
//! constructs Chern, Thom, Euler, fundamental and Todd classes for a chosen
//! orientation, computes Gysin pushforwards (lift-and-multiply for closed
//! immersions, the duality transpose for bundle projections), and verifies
//! Riemann-Roch identities as exact equalities in those rings — no
//! tolerances anywhere.
//!
//! Entry points:
//! - [`algebra`]: rationals, coefficient rings, quotient rings, truncated
//!   series, symmetric reduction.
//! - [`fgl`]: formal group laws and orientations.
//! - [`space`]: points, projective bundles, vector bundles, embeddings.
//! - [`classes`]: characteristic classes in a chosen orientation.
//! - [`gysin`]: Künneth squares, duality data, pushforwards.
//! - [`rr`]: orientation pairs, Todd corrections, Riemann-Roch checks.
//! - [`cli`]: the script DSL, evaluator and JSON reports.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `orient-rr` binary exposes the DSL and the verification suites.
//!
//! A one-minute tour — the Euler characteristic of `O(1)` on `P^2`,
//! computed by pushing its K-class to the point:
//!
//! ```
//! use orient_rr::classes::OrientedCtx;
//! use orient_rr::fgl::Theory;
//! use orient_rr::gysin::ProjectionPushforward;
//! use orient_rr::space::Space;
//!
//! let theory = Theory::Multiplicative;
//! let ctx = OrientedCtx::new(theory.native_orientation(10))?;
//! let p2 = Space::projective_space(2, theory.coeff_ring(10))?;
//! let h = p2.hyperplane().unwrap();
//!
//! // the K-class of O(1): 1 - beta c1(O(1)^dual), with reference root h
//! let c = ctx.first_chern_of_root(&h)?;
//! let beta = p2.ring().from_coeff(theory.coeff_ring(10).beta(1)?);
//! let class = p2.ring().one().sub(&beta.mul(&c));
//!
//! let chi = ProjectionPushforward::new(&p2, &ctx)?.apply(&class)?;
//! assert_eq!(chi.render(), "3*beta^2"); // chi(P^2, O(1)) = 3
//! # Ok::<(), orient_rr::EngineError>(())
//! ```

pub mod algebra;
pub mod classes;
pub mod cli;
pub mod error;
pub mod fgl;
pub mod gysin;
pub mod report;
pub mod rr;
pub mod suites;
pub mod space;

pub use error::{EngineError, Result};
