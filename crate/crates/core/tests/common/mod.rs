#![allow(dead_code)]

use bordism_core::{span, BitVector, Functional, Monomial, Poly, Subspace};
use rand::Rng;

pub fn functional<R: Rng>(rng: &mut R, k: u32) -> Functional {
    Functional::new(k, rng.gen_range(1..1u32 << k)).unwrap()
}

pub fn monomial<R: Rng>(rng: &mut R, k: u32, max_factors: usize, max_exp: u32) -> Monomial {
    let n = rng.gen_range(0..=max_factors);
    let factors: Vec<_> = (0..n)
        .map(|_| (functional(rng, k), rng.gen_range(1..=max_exp)))
        .collect();
    Monomial::new(k, factors).unwrap()
}

pub fn poly<R: Rng>(rng: &mut R, k: u32, max_terms: usize) -> Poly {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n).map(|_| monomial(rng, k, 3, 3)).collect();
    let mut p = Poly::zero(k).unwrap();
    for t in terms {
        p.toggle(t).unwrap();
    }
    p
}

/// A monomial with exactly `degree` linear factors, counted with multiplicity.
pub fn monomial_of_degree<R: Rng>(rng: &mut R, k: u32, degree: u32) -> Monomial {
    let fs: Vec<_> = (0..degree).map(|_| (functional(rng, k), 1)).collect();
    Monomial::new(k, fs).unwrap()
}

pub fn subspace<R: Rng>(rng: &mut R, k: u32) -> Subspace {
    let n = rng.gen_range(0..=k + 1);
    let vs: Vec<_> = (0..n)
        .map(|_| BitVector::new(k, rng.gen_range(0..1u32 << k)).unwrap())
        .collect();
    span(&vs, k).unwrap()
}

/// Span of a monomial's factors, computed by naive closure rather than
/// echelon reduction.
pub fn factor_span_by_closure(m: &Monomial) -> Vec<u32> {
    let mut set = vec![0u32];
    for f in m.factors() {
        if !set.contains(&f.bits()) {
            let extra: Vec<u32> = set.iter().map(|v| v ^ f.bits()).collect();
            set.extend(extra);
        }
    }
    set.sort_unstable();
    set
}

/// All vectors of a subspace, by closure over its basis.
pub fn elements(v: &Subspace) -> Vec<u32> {
    let mut set = vec![0u32];
    for &b in v.basis_bits() {
        let extra: Vec<u32> = set.iter().map(|x| x ^ b).collect();
        set.extend(extra);
    }
    set.sort_unstable();
    set
}

/// Vectors orthogonal to every element of `v`, by exhaustive search.
pub fn orthogonal_by_search(v: &Subspace) -> Vec<u32> {
    let els = elements(v);
    (0..1u32 << v.rank())
        .filter(|w| els.iter().all(|x| (x & w).count_ones() % 2 == 0))
        .collect()
}
