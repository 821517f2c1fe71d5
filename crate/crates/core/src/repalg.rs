//! The representation algebra `R_*((Z_2)^k)`: GF(2) polynomials whose
//! variables are the nonzero linear functionals on `(Z_2)^k`.
//!
//! Monomials are sorted association lists `functional -> exponent`; a
//! polynomial is the sorted set of its monomials (coefficient 1 in GF(2)).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{check_rank, Error, Result};
use crate::gf2lin::{bit_string, validate_rank, Functional};

mod text;

pub use text::{format, parse};

/// A monomial `∏ ρ^{e(ρ)}` over nonzero functionals.
///
/// Ordered by rank, then degree, then lexicographically by the factor
/// sequence with repetition (each functional repeated by its exponent, in
/// ascending integer order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    rank: u32,
    factors: Vec<(u32, u32)>,
}

fn merge_factors(a: &[(u32, u32)], b: &[(u32, u32)]) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let e = a[i].1.checked_add(b[j].1).ok_or(Error::ExponentOverflow)?;
                out.push((a[i].0, e));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Ok(out)
}

fn cmp_expanded(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let mut ia = a.iter().copied();
    let mut ib = b.iter().copied();
    let mut ca = ia.next();
    let mut cb = ib.next();
    loop {
        match (ca, cb) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((fa, ea)), Some((fb, eb))) => {
                if fa != fb {
                    return fa.cmp(&fb);
                }
                let n = ea.min(eb);
                ca = if ea == n {
                    ia.next()
                } else {
                    Some((fa, ea - n))
                };
                cb = if eb == n {
                    ib.next()
                } else {
                    Some((fb, eb - n))
                };
            }
        }
    }
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn unit(rank: u32) -> Result<Self> {
        validate_rank(rank)?;
        Ok(Monomial {
            rank,
            factors: Vec::new(),
        })
    }

    /// Builds `∏ f^e`; repeated functionals are merged and zero exponents
    /// dropped. The zero functional is rejected.
    pub fn new(rank: u32, factors: impl IntoIterator<Item = (Functional, u32)>) -> Result<Self> {
        let mut m = Self::unit(rank)?;
        for (f, e) in factors {
            check_rank(rank, f.rank())?;
            if f.is_zero() {
                return Err(Error::invalid("the zero functional is not a variable"));
            }
            if e > 0 {
                m.factors = merge_factors(&m.factors, &[(f.bits(), e)])?;
            }
        }
        Ok(m)
    }

    /// Product of the given functionals, each with exponent one.
    pub fn product(rank: u32, functionals: &[Functional]) -> Result<Self> {
        Self::new(rank, functionals.iter().map(|&f| (f, 1)))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct factors.
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// The set of distinct factors, ascending.
    pub fn factors(&self) -> Vec<Functional> {
        self.factors
            .iter()
            .map(|&(f, _)| Functional::from_raw(self.rank, f))
            .collect()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Functional, u32)> + '_ {
        self.factors
            .iter()
            .map(|&(f, e)| (Functional::from_raw(self.rank, f), e))
    }

    pub fn exponent_of(&self, f: &Functional) -> u32 {
        if f.rank() != self.rank {
            return 0;
        }
        self.factors
            .binary_search_by_key(&f.bits(), |&(b, _)| b)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_rank(self.rank, other.rank)?;
        Ok(Monomial {
            rank: self.rank,
            factors: merge_factors(&self.factors, &other.factors)?,
        })
    }

    /// Multiplies every exponent by `n` (`n >= 1`), i.e. `self^n`.
    pub fn scaled(&self, n: u32) -> Result<Monomial> {
        if n == 0 {
            return Monomial::unit(self.rank);
        }
        let factors = self
            .factors
            .iter()
            .map(|&(f, e)| {
                e.checked_mul(n)
                    .map(|e| (f, e))
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<_>>()?;
        Ok(Monomial {
            rank: self.rank,
            factors,
        })
    }

    pub(crate) fn raw_factors(&self) -> &[(u32, u32)] {
        &self.factors
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| cmp_expanded(&self.factors, &other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_monomial(f, self)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for &(f, e) in &self.factors {
            seq.serialize_element(&(bit_string(self.rank, f), e))?;
        }
        seq.end()
    }
}

/// An element of `R_*((Z_2)^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct Poly {
    rank: u32,
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero(rank: u32) -> Result<Self> {
        validate_rank(rank)?;
        Ok(Poly {
            rank,
            terms: BTreeSet::new(),
        })
    }

    pub fn one(rank: u32) -> Result<Self> {
        Ok(Self::from_monomial(Monomial::unit(rank)?))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Poly {
            rank: m.rank,
            terms: BTreeSet::from([m]),
        }
    }

    /// GF(2) sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms(rank: u32, terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = Self::zero(rank)?;
        for m in terms {
            p.toggle(m)?;
        }
        Ok(p)
    }

    /// Adds a single monomial in place.
    pub fn toggle(&mut self, m: Monomial) -> Result<()> {
        check_rank(self.rank, m.rank)?;
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
        Ok(())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Largest term degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        check_rank(self.rank, other.rank)?;
        Ok(Poly {
            rank: self.rank,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Poly> {
        check_rank(self.rank, m.rank)?;
        let terms = self
            .terms
            .iter()
            .map(|t| t.mul(m))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Poly {
            rank: self.rank,
            terms,
        })
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        check_rank(self.rank, other.rank)?;
        let mut out = Poly::zero(self.rank)?;
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// `self^2`. Cross terms cancel in characteristic 2, so this just doubles
    /// every exponent.
    pub fn square(&self) -> Result<Poly> {
        self.frobenius(2)
    }

    fn frobenius(&self, n: u32) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.scaled(n))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Poly {
            rank: self.rank,
            terms,
        })
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, exp: u32) -> Result<Poly> {
        let mut result = Poly::one(self.rank)?;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?;
            }
        }
        Ok(result)
    }

    /// Substitutes every variable through `map`, landing in rank `rank`.
    /// `map` must send nonzero functionals to nonzero functionals.
    pub fn substitute(
        &self,
        rank: u32,
        mut map: impl FnMut(Functional) -> Result<Functional>,
    ) -> Result<Poly> {
        let mut out = Poly::zero(rank)?;
        for t in &self.terms {
            let image = t
                .exponents()
                .map(|(f, e)| map(f).map(|g| (g, e)))
                .collect::<Result<Vec<_>>>()?;
            out.toggle(Monomial::new(rank, image)?)?;
        }
        Ok(out)
    }
}

impl Add for &Poly {
    type Output = Poly;

    /// Panics on rank mismatch.
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs).expect("Poly addition failed")
    }
}

impl Mul for &Poly {
    type Output = Poly;

    /// Panics on rank mismatch or exponent overflow.
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs).expect("Poly multiplication failed")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_poly(f, self)
    }
}

/// Wire form: `{"k": int, "terms": [[["bits", exp], ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub k: u32,
    pub terms: Vec<Vec<(String, u32)>>,
}

impl From<Poly> for PolyJson {
    fn from(p: Poly) -> Self {
        PolyJson {
            k: p.rank,
            terms: p
                .terms
                .iter()
                .map(|m| {
                    m.factors
                        .iter()
                        .map(|&(f, e)| (bit_string(p.rank, f), e))
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Poly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let mut p = Poly::zero(j.k)?;
        for term in j.terms {
            let factors = term
                .iter()
                .map(|(bits, e)| {
                    let f: Functional = bits.parse()?;
                    check_rank(j.k, f.rank())?;
                    Ok((f, *e))
                })
                .collect::<Result<Vec<_>>>()?;
            p.toggle(Monomial::new(j.k, factors)?)?;
        }
        Ok(p)
    }
}
