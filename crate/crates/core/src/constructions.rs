//! Explicit fixed-point data: the standard `(Z_2)^k` action on `RP^k`, and
//! the family of actions on `S^1 × (RP^{k-1})^m` whose images `f_{k,m}`
//! are indecomposable.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpdata::FixedPointData;
use crate::gf2lin::{validate_rank, Functional};
use crate::repalg::{Monomial, Poly};

/// `ρ_{i,j}` with `ρ_0 = 0`.
fn rho_pair(k: u32, i: u32, j: u32) -> Result<Functional> {
    let part = |t: u32| {
        if t == 0 {
            Functional::zero(k)
        } else {
            Functional::rho(k, t)
        }
    };
    Ok(part(i)? + part(j)?)
}

/// `Σ_{i=0}^{k} ∏_{j≠i} ρ_{i,j}`, the fixed-point data of the standard
/// action on `RP^k`.
pub fn rp_standard(k: u32) -> Result<FixedPointData> {
    validate_rank(k)?;
    if k < 2 {
        return Err(Error::UnsupportedRank {
            rank: k,
            reason: "the standard action on RP^k needs k >= 2",
        });
    }
    let terms = (0..=k)
        .map(|i| {
            let factors = (0..=k)
                .filter(|&j| j != i)
                .map(|j| rho_pair(k, i, j))
                .collect::<Result<Vec<_>>>()?;
            Monomial::product(k, &factors)
        })
        .collect::<Result<Vec<_>>>()?;
    FixedPointData::new(Poly::from_terms(k, terms)?)
}

/// The linear-form tables `λ_0..λ_{k-1}`, `λ'_0..λ'_{k-1}` and `ρ_{1,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormFamily {
    rank: u32,
    lambda: Vec<Functional>,
    lambda_prime: Vec<Functional>,
    rho1k: Functional,
}

impl FormFamily {
    /// Validates a user-supplied family:
    ///
    /// * `λ_0 = λ'_0 = 0`, `λ'_1 = λ_1`;
    /// * `λ'_j = λ_j + ρ_k` for `2 <= j <= k-1`;
    /// * the `λ_j` are pairwise distinct, as are the `λ'_j`;
    /// * `ρ_{1,k} = ρ_1 + ρ_k`.
    pub fn new(rank: u32, lambda: Vec<Functional>, lambda_prime: Vec<Functional>) -> Result<Self> {
        validate_rank(rank)?;
        if rank < 3 {
            return Err(Error::UnsupportedRank {
                rank,
                reason: "the S^1 x RP^{k-1} family degenerates below rank 3",
            });
        }
        let k = rank as usize;
        if lambda.len() != k || lambda_prime.len() != k {
            return Err(Error::invalid(format!(
                "form tables must have exactly {k} entries"
            )));
        }
        if let Some(f) = lambda
            .iter()
            .chain(&lambda_prime)
            .find(|f| f.rank() != rank)
        {
            return Err(Error::RankMismatch {
                expected: rank,
                found: f.rank(),
            });
        }
        let rho_k = Functional::rho(rank, rank)?;
        if !lambda[0].is_zero() || !lambda_prime[0].is_zero() {
            return Err(Error::invalid("λ_0 and λ'_0 must be zero"));
        }
        if lambda_prime[1] != lambda[1] {
            return Err(Error::invalid("λ'_1 must equal λ_1"));
        }
        if let Some(j) = (2..k).find(|&j| lambda_prime[j] != lambda[j] + rho_k) {
            return Err(Error::invalid(format!("λ'_{j} must equal λ_{j} + ρ_k")));
        }
        for table in [&lambda, &lambda_prime] {
            for i in 0..k {
                if table[i + 1..].contains(&table[i]) {
                    return Err(Error::invalid(format!("form {i} repeats in its table")));
                }
            }
        }
        Ok(FormFamily {
            rank,
            lambda,
            lambda_prime,
            rho1k: Functional::rho_sum(rank, &[1, rank])?,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn lambda(&self) -> &[Functional] {
        &self.lambda
    }

    pub fn lambda_prime(&self) -> &[Functional] {
        &self.lambda_prime
    }

    pub fn rho1k(&self) -> Functional {
        self.rho1k
    }

    fn table(&self, sign: Sign) -> &[Functional] {
        match sign {
            Sign::Plus => &self.lambda,
            Sign::Minus => &self.lambda_prime,
        }
    }

    /// `∏_{j≠i} (λ_i + λ_j)` over the chosen table; the tangent monomial of
    /// the `i`-th fixed point on `{±1} × RP^{k-1}`.
    fn vertex_monomial(&self, sign: Sign, i: usize) -> Result<Monomial> {
        let t = self.table(sign);
        let factors: Vec<Functional> = (0..t.len())
            .filter(|&j| j != i)
            .map(|j| t[i] + t[j])
            .collect();
        Monomial::product(self.rank, &factors)
    }

    fn sigma_from(&self, sign: Sign) -> Result<Poly> {
        let terms = (0..self.rank as usize)
            .map(|i| self.vertex_monomial(sign, i))
            .collect::<Result<Vec<_>>>()?;
        Poly::from_terms(self.rank, terms)
    }

    /// `(σ_{k,1}, σ_{k,2})`.
    pub fn sigma(&self) -> Result<(Poly, Poly)> {
        Ok((self.sigma_from(Sign::Plus)?, self.sigma_from(Sign::Minus)?))
    }

    /// `(σ_{k,1}^m + σ_{k,2}^m) ρ_{1,k}`.
    pub fn f_poly(&self, m: u32) -> Result<FixedPointData> {
        let (s1, s2) = self.sigma()?;
        let sum = s1.pow(m)?.add(&s2.pow(m)?)?;
        let rho = Monomial::product(self.rank, &[self.rho1k])?;
        FixedPointData::new(sum.mul_monomial(&rho)?)
    }

    /// `λ_1^m ⋯ λ_{k-1}^m ρ_{1,k}`.
    pub fn witness_monomial(&self, m: u32) -> Result<Monomial> {
        if m == 0 {
            return Err(Error::invalid("witness monomial needs m >= 1"));
        }
        let factors = self.lambda[1..]
            .iter()
            .map(|&f| (f, m))
            .chain([(self.rho1k, 1)]);
        Monomial::new(self.rank, factors)
    }
}

fn require_even(k: u32) -> Result<()> {
    if !k.is_multiple_of(2) {
        return Err(Error::UnsupportedRank {
            rank: k,
            reason: "built-in form tables exist only for even k >= 4",
        });
    }
    if k < 4 {
        return Err(Error::UnsupportedRank {
            rank: k,
            reason: "the construction degenerates for k = 2; even k >= 4 required",
        });
    }
    validate_rank(k)
}

/// Built-in form tables for even `k >= 4`.
pub fn lambda_family(k: u32) -> Result<FormFamily> {
    require_even(k)?;
    let lambda = (0..k)
        .map(|j| match j {
            0 => Functional::zero(k),
            j if j <= k - 3 && j % 2 == 0 => Functional::rho_sum(k, &[1, 2, j + 1, j + 2]),
            j if j <= k - 3 => Functional::rho_sum(k, &[1, 2, j + 1]),
            j if j == k - 2 => Functional::rho_sum(k, &[1, 2, k - 1]),
            _ => Functional::rho_sum(k, &[1, 2]),
        })
        .collect::<Result<Vec<_>>>()?;
    let rho_k = Functional::rho(k, k)?;
    let lambda_prime = lambda
        .iter()
        .enumerate()
        .map(|(j, &f)| if j >= 2 { f + rho_k } else { f })
        .collect();
    FormFamily::new(k, lambda, lambda_prime)
}

pub fn sigma(k: u32) -> Result<(Poly, Poly)> {
    lambda_family(k)?.sigma()
}

pub fn f_poly(k: u32, m: u32) -> Result<FixedPointData> {
    lambda_family(k)?.f_poly(m)
}

pub fn witness_monomial(k: u32, m: u32) -> Result<Monomial> {
    lambda_family(k)?.witness_monomial(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Sign {
    Plus,
    Minus,
}

/// One isolated fixed point `(a, u_1, ..., u_m)` of the action on
/// `S^1 × (RP^{k-1})^m`, with its tangent representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPoint {
    pub label: String,
    pub monomial: Monomial,
}

/// All `2 k^m` fixed points, in label order: sign `+` before `-`, then the
/// `u`-tuple lexicographically with `P_1 < ... < P_s < Q_1 < ... < Q_s`.
pub fn enumerate_fixed_points(k: u32, m: u32) -> Result<Vec<FixedPoint>> {
    let family = lambda_family(k)?;
    enumerate_family_fixed_points(&family, m)
}

pub fn enumerate_family_fixed_points(family: &FormFamily, m: u32) -> Result<Vec<FixedPoint>> {
    let k = family.rank() as usize;
    if !k.is_multiple_of(2) {
        return Err(Error::UnsupportedRank {
            rank: family.rank(),
            reason: "fixed-point labels P_i/Q_i need even k",
        });
    }
    if m == 0 {
        return Err(Error::invalid("fixed-point enumeration needs m >= 1"));
    }
    let s = k / 2;
    // Slot t < s is P_{t+1} (table index 2t); slot s + t is Q_{t+1} (index 2t+1).
    let slot_index = |slot: usize| {
        if slot < s {
            2 * slot
        } else {
            2 * (slot - s) + 1
        }
    };
    let slot_name = |slot: usize| {
        if slot < s {
            format!("P{}", slot + 1)
        } else {
            format!("Q{}", slot - s + 1)
        }
    };
    let rho = Monomial::product(family.rank(), &[family.rho1k()])?;
    let total = 2usize
        .checked_mul(
            k.checked_pow(m)
                .ok_or_else(|| Error::invalid("too many fixed points"))?,
        )
        .ok_or_else(|| Error::invalid("too many fixed points"))?;
    let mut out = Vec::with_capacity(total);
    for sign in [Sign::Plus, Sign::Minus] {
        let vertex: Vec<Monomial> = (0..k)
            .map(|slot| family.vertex_monomial(sign, slot_index(slot)))
            .collect::<Result<_>>()?;
        let tuples = (0..m).map(|_| 0..k).multi_cartesian_product();
        for tuple in tuples {
            let mut mono = rho.clone();
            for &slot in &tuple {
                mono = mono.mul(&vertex[slot])?;
            }
            let names: Vec<String> = tuple.iter().map(|&t| slot_name(t)).collect();
            let prefix = if sign == Sign::Plus { '+' } else { '-' };
            out.push(FixedPoint {
                label: format!("{prefix}{}", names.join(",")),
                monomial: mono,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repalg::parse;

    fn rho(k: u32, idx: &[u32]) -> Functional {
        Functional::rho_sum(k, idx).unwrap()
    }

    #[test]
    fn rp2_terms() {
        let d = rp_standard(2).unwrap();
        assert_eq!(
            d.poly(),
            &parse("[10]*[01] + [10]*[11] + [01]*[11]", 2).unwrap()
        );
    }

    #[test]
    fn rp3_first_term() {
        let d = rp_standard(3).unwrap();
        assert_eq!(d.poly().len(), 4);
        assert_eq!(d.degree(), 3);
        assert!(d
            .poly()
            .contains(&Monomial::product(3, &[rho(3, &[1]), rho(3, &[2]), rho(3, &[3])]).unwrap()));
    }

    #[test]
    fn rp_rejects_small_rank() {
        assert!(matches!(rp_standard(1), Err(Error::UnsupportedRank { .. })));
    }

    #[test]
    fn lambda_tables_k4() {
        let f = lambda_family(4).unwrap();
        assert_eq!(
            f.lambda(),
            &[
                Functional::zero(4).unwrap(),
                rho(4, &[1]),
                rho(4, &[1, 2, 3]),
                rho(4, &[1, 2])
            ]
        );
        assert_eq!(
            f.lambda_prime(),
            &[
                Functional::zero(4).unwrap(),
                rho(4, &[1]),
                rho(4, &[1, 2, 3, 4]),
                rho(4, &[1, 2, 4])
            ]
        );
        assert_eq!(f.rho1k(), rho(4, &[1, 4]));
    }

    #[test]
    fn lambda_tables_k6() {
        let f = lambda_family(6).unwrap();
        assert_eq!(f.lambda()[2], rho(6, &[1, 2, 3, 4]));
        assert_eq!(f.lambda()[1], rho(6, &[1]));
        assert_eq!(f.lambda()[3], rho(6, &[1, 2, 4]));
        assert_eq!(f.lambda()[4], rho(6, &[1, 2, 5]));
        assert_eq!(f.lambda()[5], rho(6, &[1, 2]));
    }

    #[test]
    fn unsupported_ranks() {
        for k in [2, 3, 5, 7] {
            assert!(matches!(
                lambda_family(k),
                Err(Error::UnsupportedRank { .. })
            ));
        }
    }

    #[test]
    fn custom_family_validation() {
        let f = lambda_family(4).unwrap();
        let ok = FormFamily::new(4, f.lambda().to_vec(), f.lambda_prime().to_vec());
        assert_eq!(ok.unwrap(), f);

        let mut bad_prime = f.lambda_prime().to_vec();
        bad_prime[3] = f.lambda()[3];
        assert!(FormFamily::new(4, f.lambda().to_vec(), bad_prime).is_err());

        let mut repeated = f.lambda().to_vec();
        repeated[2] = repeated[1];
        let prime: Vec<_> = repeated
            .iter()
            .enumerate()
            .map(|(j, &x)| if j >= 2 { x + rho(4, &[4]) } else { x })
            .collect();
        assert!(FormFamily::new(4, repeated, prime).is_err());
    }

    #[test]
    fn sigma_k4_expansion() {
        let (s1, s2) = sigma(4).unwrap();
        let expected = parse(
            "[1000]*[1110]*[1100] + [1000]*[0110]*[0100] \
             + [1110]*[0110]*[0010] + [1100]*[0100]*[0010]",
            4,
        )
        .unwrap();
        assert_eq!(s1, expected);
        assert_ne!(s1, s2);
        for s in [&s1, &s2] {
            assert_eq!(s.len(), 4);
            assert_eq!(s.degree(), 3);
            assert!(s.is_homogeneous());
        }
    }

    #[test]
    fn f_poly_zero_and_degree() {
        assert!(f_poly(4, 0).unwrap().poly().is_zero());
        assert_eq!(f_poly(4, 2).unwrap().degree(), 7);
    }

    #[test]
    fn witness_k4_m1() {
        let w = witness_monomial(4, 1).unwrap();
        let expected = Monomial::product(
            4,
            &[
                rho(4, &[1]),
                rho(4, &[1, 2, 3]),
                rho(4, &[1, 2]),
                rho(4, &[1, 4]),
            ],
        )
        .unwrap();
        assert_eq!(w, expected);
        assert_eq!(w.factors().len(), 4);
    }

    #[test]
    fn f42_contains_stated_monomial() {
        let m = Monomial::new(
            4,
            [
                (rho(4, &[1]), 2),
                (rho(4, &[1, 2, 3]), 2),
                (rho(4, &[1, 2]), 2),
                (rho(4, &[1, 4]), 1),
            ],
        )
        .unwrap();
        assert!(f_poly(4, 2).unwrap().poly().contains(&m));
        assert_eq!(m, witness_monomial(4, 2).unwrap());
    }

    #[test]
    fn fixed_point_counts_and_labels() {
        let pts = enumerate_fixed_points(4, 1).unwrap();
        let labels: Vec<&str> = pts.iter().map(|p| p.label.as_str()).collect();
        assert_eq!(
            labels,
            vec!["+P1", "+P2", "+Q1", "+Q2", "-P1", "-P2", "-Q1", "-Q2"]
        );
        let pts = enumerate_fixed_points(4, 2).unwrap();
        assert_eq!(pts.len(), 32);
        assert_eq!(pts[1].label, "+P1,P2");
        assert!(pts.iter().all(|p| p.monomial.degree() == 7));
    }

    #[test]
    fn every_fixed_point_has_simple_rho1k() {
        let f = lambda_family(6).unwrap();
        for p in enumerate_fixed_points(6, 2).unwrap() {
            assert_eq!(p.monomial.exponent_of(&f.rho1k()), 1, "{}", p.label);
        }
    }

    #[test]
    fn fixed_point_json_shape() {
        let pts = enumerate_fixed_points(4, 1).unwrap();
        let j = serde_json::to_value(&pts[0]).unwrap();
        assert_eq!(j["label"], "+P1");
        assert_eq!(
            j["monomial"],
            serde_json::json!([["1000", 1], ["1001", 1], ["1100", 1], ["1110", 1]])
        );
    }
}
