//! Exact fixed-point-data calculus for `(Z_2)^k`-manifolds with isolated
//! fixed points.
//!
//! Bordism classes are handled through their images in the tangent
//! representation algebra: GF(2) polynomials whose variables are the nonzero
//! linear functionals on `(Z_2)^k`. The crate provides
//!
//! * [`gf2lin`]: bit-packed linear algebra over GF(2) (spans, annihilators,
//!   complements, subspace enumeration, Gaussian binomials);
//! * [`repalg`]: sparse polynomial arithmetic plus a text/JSON grammar;
//! * [`fpdata`]: the spanning property, kernel-indexed decomposition and the
//!   `Ψ_{K,H}` embedding of lower-rank classes;
//! * [`constructions`]: the standard action on `RP^k` and the
//!   `S^1 × (RP^{k-1})^m` family `f_{k,m}`;
//! * [`indecomp`]: witness-monomial indecomposability certificates and a
//!   brute-force subalgebra membership oracle;
//! * [`dims`]: closed-form dimension and counting formulas;
//! * [`cli`]: the `bordism` command-line front end.

pub mod cli;
pub mod constructions;
pub mod dims;
mod error;
pub mod fpdata;
pub mod gf2lin;
pub mod indecomp;
pub mod repalg;

pub use constructions::{
    enumerate_fixed_points, f_poly, lambda_family, rp_standard, sigma, witness_monomial,
    FixedPoint, FormFamily,
};
pub use dims::{compose_dim, dim_zn_zn, fk_generator_degrees, gk_bounds, DimReport};
pub use error::{Error, Result};
pub use fpdata::{decompose_by_kernel, monomial_kernel, psi_embed, spanning_check, FixedPointData};
pub use gf2lin::{
    annihilator, complement, enumerate_subspaces, gaussian_binomial, span, BitVector, Functional,
    Subspace, MAX_RANK,
};
pub use indecomp::{
    brute_force_decomposable, find_witness, verify_remark_identity, DecompositionCertificate,
    WitnessReport,
};
pub use repalg::{Monomial, Poly};
