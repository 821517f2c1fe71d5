//! Linear algebra over GF(2) on word-packed vectors of rank at most 32.
//!
//! Bit strings are read left to right: the leftmost character is column 0,
//! the coefficient of `ρ_1`. Internally column `c` of a rank-`k` vector lives
//! at bit `k - 1 - c`, so the integer value of a vector equals the binary
//! value of its bit string and integer order agrees with lexicographic order
//! of the strings.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{check_rank, Error, Result};

/// Largest supported ambient rank.
pub const MAX_RANK: u32 = 32;

pub(crate) fn validate_rank(rank: u32) -> Result<()> {
    if rank == 0 || rank > MAX_RANK {
        Err(Error::invalid(format!(
            "rank must be between 1 and {MAX_RANK}, got {rank}"
        )))
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn column_mask(rank: u32, column: u32) -> u32 {
    1u32 << (rank - 1 - column)
}

#[inline]
pub(crate) fn full_mask(rank: u32) -> u32 {
    if rank == 32 {
        u32::MAX
    } else {
        (1u32 << rank) - 1
    }
}

/// Column of the leftmost set bit. `bits` must be nonzero.
#[inline]
fn leading_column(rank: u32, bits: u32) -> u32 {
    rank - 1 - (31 - bits.leading_zeros())
}

pub(crate) fn bit_string(rank: u32, bits: u32) -> String {
    (0..rank)
        .map(|c| {
            if bits & column_mask(rank, c) != 0 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// A vector in `(Z_2)^k`; serves both as a group element and as a row vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    rank: u32,
    bits: u32,
}

impl BitVector {
    pub fn new(rank: u32, bits: u32) -> Result<Self> {
        validate_rank(rank)?;
        if bits & !full_mask(rank) != 0 {
            return Err(Error::invalid(format!(
                "value {bits:#b} does not fit in rank {rank}"
            )));
        }
        Ok(BitVector { rank, bits })
    }

    pub(crate) fn from_raw(rank: u32, bits: u32) -> Self {
        debug_assert!(bits & !full_mask(rank) == 0);
        BitVector { rank, bits }
    }

    pub fn zero(rank: u32) -> Result<Self> {
        Self::new(rank, 0)
    }

    /// The `i`-th standard basis vector, `1 <= i <= rank`.
    pub fn unit(rank: u32, i: u32) -> Result<Self> {
        validate_rank(rank)?;
        if i == 0 || i > rank {
            return Err(Error::invalid(format!(
                "coordinate index {i} out of range 1..={rank}"
            )));
        }
        Ok(BitVector::from_raw(rank, column_mask(rank, i - 1)))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficient at 0-based column `c` (column 0 is leftmost).
    pub fn get(&self, c: u32) -> bool {
        c < self.rank && self.bits & column_mask(self.rank, c) != 0
    }

    pub fn checked_add(&self, other: &BitVector) -> Result<BitVector> {
        check_rank(self.rank, other.rank)?;
        Ok(BitVector::from_raw(self.rank, self.bits ^ other.bits))
    }

    /// Evaluation pairing: parity of the bitwise AND.
    pub fn pairing(&self, other: &BitVector) -> Result<bool> {
        check_rank(self.rank, other.rank)?;
        Ok((self.bits & other.bits).count_ones() & 1 == 1)
    }

    pub fn to_bit_string(&self) -> String {
        bit_string(self.rank, self.bits)
    }
}

impl Add for BitVector {
    type Output = BitVector;

    /// Panics on rank mismatch; use [`BitVector::checked_add`] for fallible input.
    fn add(self, rhs: BitVector) -> BitVector {
        self.checked_add(&rhs).expect("BitVector rank mismatch")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rank = u32::try_from(s.len()).map_err(|_| Error::invalid("bit string too long"))?;
        validate_rank(rank)?;
        let mut bits = 0u32;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= column_mask(rank, i as u32),
                other => {
                    return Err(Error::parse(
                        i,
                        format!("expected '0' or '1', found {other:?}"),
                    ))
                }
            }
        }
        Ok(BitVector { rank, bits })
    }
}

/// A linear function `(Z_2)^k -> Z_2`, stored as its row vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional(BitVector);

impl Functional {
    pub fn new(rank: u32, bits: u32) -> Result<Self> {
        BitVector::new(rank, bits).map(Functional)
    }

    pub(crate) fn from_raw(rank: u32, bits: u32) -> Self {
        Functional(BitVector::from_raw(rank, bits))
    }

    pub fn from_vector(v: BitVector) -> Self {
        Functional(v)
    }

    pub fn zero(rank: u32) -> Result<Self> {
        Self::new(rank, 0)
    }

    /// `ρ_i`, the `i`-th coordinate function (`1 <= i <= rank`).
    pub fn rho(rank: u32, i: u32) -> Result<Self> {
        BitVector::unit(rank, i).map(Functional)
    }

    /// `ρ_{i_1,...,i_m} = ρ_{i_1} + ... + ρ_{i_m}`; repeated indices cancel.
    pub fn rho_sum(rank: u32, indices: &[u32]) -> Result<Self> {
        let mut acc = Self::zero(rank)?;
        for &i in indices {
            acc = acc + Self::rho(rank, i)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> u32 {
        self.0.rank
    }

    pub fn bits(&self) -> u32 {
        self.0.bits
    }

    pub fn vector(&self) -> BitVector {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Value of the functional at the group element `g`.
    pub fn eval(&self, g: &BitVector) -> Result<bool> {
        self.0.pairing(g)
    }
}

impl Add for Functional {
    type Output = Functional;

    fn add(self, rhs: Functional) -> Functional {
        Functional(self.0 + rhs.0)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl serde::Serialize for Functional {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_bit_string())
    }
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(Functional)
    }
}

/// A linear subspace held as its reduced row-echelon basis.
///
/// Rows are ordered by strictly increasing pivot column, and every pivot
/// column is zero in all other rows, so two subspaces are equal iff their
/// bases are identical. The derived order compares rank, then the basis rows
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rank: u32,
    basis: Vec<u32>,
}

/// Reduced row echelon form of `rows` (consumed), zero rows dropped.
fn reduce(rank: u32, mut rows: Vec<u32>) -> Vec<u32> {
    let mut filled = 0;
    for col in 0..rank {
        let mask = column_mask(rank, col);
        let Some(found) = (filled..rows.len()).find(|&i| rows[i] & mask != 0) else {
            continue;
        };
        rows.swap(filled, found);
        let pivot = rows[filled];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != filled && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        filled += 1;
        if filled == rows.len() {
            break;
        }
    }
    rows.truncate(filled);
    rows
}

impl Subspace {
    pub fn zero(rank: u32) -> Result<Self> {
        validate_rank(rank)?;
        Ok(Subspace {
            rank,
            basis: Vec::new(),
        })
    }

    pub fn full(rank: u32) -> Result<Self> {
        validate_rank(rank)?;
        Ok(Subspace {
            rank,
            basis: (0..rank).map(|c| column_mask(rank, c)).collect(),
        })
    }

    /// Builds a subspace from raw rows, canonicalising them.
    pub fn from_rows(rank: u32, rows: impl IntoIterator<Item = u32>) -> Result<Self> {
        validate_rank(rank)?;
        let rows: Vec<u32> = rows.into_iter().collect();
        if let Some(bad) = rows.iter().find(|&&r| r & !full_mask(rank) != 0) {
            return Err(Error::invalid(format!(
                "row {bad:#b} does not fit in rank {rank}"
            )));
        }
        Ok(Subspace {
            rank,
            basis: reduce(rank, rows),
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.rank
    }

    pub fn basis(&self) -> Vec<BitVector> {
        self.basis
            .iter()
            .map(|&b| BitVector::from_raw(self.rank, b))
            .collect()
    }

    pub fn basis_bits(&self) -> &[u32] {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|&b| bit_string(self.rank, b))
            .collect()
    }

    /// Pivot columns, strictly increasing.
    pub fn pivots(&self) -> Vec<u32> {
        self.basis
            .iter()
            .map(|&b| leading_column(self.rank, b))
            .collect()
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        check_rank(self.rank, v.rank)?;
        let mut x = v.bits;
        for &row in &self.basis {
            let lead = 1u32 << (31 - row.leading_zeros());
            if x & lead != 0 {
                x ^= row;
            }
        }
        Ok(x == 0)
    }

    /// Intersection is trivial and the dimensions add up to the rank.
    pub fn is_complement_of(&self, other: &Subspace) -> Result<bool> {
        check_rank(self.rank, other.rank)?;
        let joined = reduce(
            self.rank,
            self.basis.iter().chain(&other.basis).copied().collect(),
        );
        Ok(joined.len() as u32 == self.rank && self.dim() + other.dim() == self.rank)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}}}", self.basis_strings().join(","))
    }
}

/// Canonical span of `vectors` in rank `rank`.
pub fn span(vectors: &[BitVector], rank: u32) -> Result<Subspace> {
    validate_rank(rank)?;
    for v in vectors {
        check_rank(rank, v.rank)?;
    }
    Subspace::from_rows(rank, vectors.iter().map(|v| v.bits))
}

/// `{w : <w, v> = 0 for all v in V}`.
pub fn annihilator(v: &Subspace) -> Subspace {
    let rank = v.rank;
    let pivots = v.pivots();
    let rows = (0..rank)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut w = column_mask(rank, free);
            for (row, &p) in v.basis.iter().zip(&pivots) {
                if row & column_mask(rank, free) != 0 {
                    w |= column_mask(rank, p);
                }
            }
            w
        })
        .collect();
    Subspace {
        rank,
        basis: reduce(rank, rows),
    }
}

/// Canonical complement: spanned by the standard basis vectors at the
/// non-pivot columns of `k`.
pub fn complement(k: &Subspace) -> Subspace {
    let pivots = k.pivots();
    Subspace {
        rank: k.rank,
        basis: (0..k.rank)
            .filter(|c| !pivots.contains(c))
            .map(|c| column_mask(k.rank, c))
            .collect(),
    }
}

/// Every `dim`-dimensional subspace of `(Z_2)^rank`, sorted by echelon basis.
pub fn enumerate_subspaces(rank: u32, dim: u32) -> Result<Vec<Subspace>> {
    validate_rank(rank)?;
    if dim > rank {
        return Err(Error::invalid(format!(
            "dimension {dim} exceeds rank {rank}"
        )));
    }
    let mut out = Vec::new();
    for pivots in (0..rank).combinations(dim as usize) {
        // Free slots: (row, column) with column right of the row's pivot and
        // not itself a pivot column.
        let slots: Vec<(usize, u32)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..rank)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        if slots.len() >= 64 {
            return Err(Error::invalid(format!(
                "too many subspaces to enumerate for rank {rank}, dimension {dim}"
            )));
        }
        let base: Vec<u32> = pivots.iter().map(|&p| column_mask(rank, p)).collect();
        for fill in 0..(1u64 << slots.len()) {
            let mut rows = base.clone();
            for (bit, &(r, c)) in slots.iter().enumerate() {
                if fill >> bit & 1 == 1 {
                    rows[r] |= column_mask(rank, c);
                }
            }
            out.push(Subspace { rank, basis: rows });
        }
    }
    out.sort();
    Ok(out)
}

/// Number of `dim`-dimensional subspaces of `(Z_2)^rank`.
pub fn gaussian_binomial(rank: u32, dim: u32) -> Result<BigUint> {
    if dim > rank {
        return Err(Error::invalid(format!(
            "dimension {dim} exceeds rank {rank}"
        )));
    }
    let mersenne = |e: u32| (BigUint::one() << e) - BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..dim {
        num *= mersenne(rank - j);
        den *= mersenne(dim - j);
    }
    Ok(num / den)
}
