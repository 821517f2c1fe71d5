//! Fixed-point data: homogeneous elements of the representation algebra
//! viewed as images of bordism classes, their kernel-indexed decomposition,
//! and the `Ψ_{K,H}` embedding of lower-rank classes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2lin::{annihilator, complement, span, Functional, Subspace};
use crate::repalg::{Monomial, Poly};

/// A homogeneous polynomial standing for `Σ_p [τ_p M]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FixedPointData {
    poly: Poly,
}

impl FixedPointData {
    pub fn new(poly: Poly) -> Result<Self> {
        if !poly.is_homogeneous() {
            return Err(Error::invalid("fixed-point data must be homogeneous"));
        }
        Ok(FixedPointData { poly })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn rank(&self) -> u32 {
        self.poly.rank()
    }

    pub fn degree(&self) -> u64 {
        self.poly.degree()
    }
}

fn factor_span(m: &Monomial) -> Subspace {
    let vectors: Vec<_> = m.factors().iter().map(Functional::vector).collect();
    span(&vectors, m.rank()).expect("factors share the monomial's rank")
}

/// Every term's factors span the full dual space.
pub fn spanning_check(d: &FixedPointData) -> bool {
    d.poly.terms().all(|t| factor_span(t).is_full())
}

/// `K = {g : λ(g) = 0 for every factor λ of m}`.
pub fn monomial_kernel(m: &Monomial) -> Subspace {
    annihilator(&factor_span(m))
}

/// Partitions the terms of `d` by their kernel. The `{0}` key holds the
/// fully effective part; every other key `K` holds a `Ψ_K`-embedded
/// lower-rank class.
pub fn decompose_by_kernel(d: &FixedPointData) -> BTreeMap<Subspace, Poly> {
    let mut parts: BTreeMap<Subspace, Poly> = BTreeMap::new();
    for t in d.poly.terms() {
        parts
            .entry(monomial_kernel(t))
            .or_insert_with(|| Poly::zero(d.rank()).expect("rank already validated"))
            .toggle(t.clone())
            .expect("same rank");
    }
    parts
}

/// Image of the rank-`h` functional `f` under `ρ ↦ ρ∘π_H`, where
/// `H = complement(K)` and `π_H` projects along `K`.
///
/// Coordinates of `H` are the non-pivot columns of `K` in increasing order.
/// For a pivot column `p` with echelon row `b`, `π_H(e_p)` is `b` restricted
/// to the non-pivot columns.
fn pull_back(f: Functional, kernel: &Subspace, free: &[u32]) -> Functional {
    let k = kernel.rank();
    let h = f.rank();
    let coord = |i: usize| f.bits() >> (h as usize - 1 - i) & 1 == 1;
    // ρ evaluated on a vector of H given in full rank-k coordinates.
    let eval_on = |v: u32| {
        free.iter()
            .enumerate()
            .filter(|&(i, &c)| coord(i) && v >> (k - 1 - c) & 1 == 1)
            .count()
            % 2
            == 1
    };
    let mut out = 0u32;
    for (i, &c) in free.iter().enumerate() {
        if coord(i) {
            out |= 1 << (k - 1 - c);
        }
    }
    for (&row, p) in kernel.basis_bits().iter().zip(kernel.pivots()) {
        if eval_on(row) {
            out |= 1 << (k - 1 - p);
        }
    }
    Functional::new(k, out).expect("pulled-back functional fits rank k")
}

/// `Ψ_{K,H}`: realises rank-`h` data as rank-`k` data on which `K` acts
/// trivially.
pub fn psi_embed(d: &FixedPointData, kernel: &Subspace) -> Result<FixedPointData> {
    let h = d.rank();
    if kernel.dim() + h != kernel.rank() {
        return Err(Error::invalid(format!(
            "kernel of dimension {} in rank {} cannot host rank-{h} data",
            kernel.dim(),
            kernel.rank()
        )));
    }
    let free: Vec<u32> = {
        let pivots = kernel.pivots();
        (0..kernel.rank()).filter(|c| !pivots.contains(c)).collect()
    };
    debug_assert_eq!(complement(kernel).dim() as usize, free.len());
    let poly = d
        .poly
        .substitute(kernel.rank(), |f| Ok(pull_back(f, kernel, &free)))?;
    FixedPointData::new(poly)
}

/// One row of the JSON decomposition report.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionEntry {
    pub kernel_basis: Vec<String>,
    pub dim: u32,
    pub poly: Poly,
}

pub fn decomposition_report(parts: &BTreeMap<Subspace, Poly>) -> Vec<DecompositionEntry> {
    parts
        .iter()
        .map(|(k, p)| DecompositionEntry {
            kernel_basis: k.basis_strings(),
            dim: k.dim(),
            poly: p.clone(),
        })
        .collect()
}
