//! Closed-form counting: `dim Z_n((Z_2)^n)`, the subspace-count composition
//! of `dim Ž_n((Z_2)^k)`, and the Gelfand–Kirillov bounds.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2lin::gaussian_binomial;

/// `(-1)^n + Σ_{i=0}^{n-1} (-1)^{n-1-i} ∏_{j=0}^{i} (2^n - 2^j) / (i+1)!`
pub fn dim_zn_zn(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let two_n = BigInt::one() << n;
    let sign = |e: u32| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let mut total = sign(n);
    let mut falling = BigInt::one();
    let mut factorial = BigInt::one();
    for i in 0..n {
        falling *= &two_n - (BigInt::one() << i);
        factorial *= BigInt::from(i + 1);
        let (q, r) = falling.div_rem(&factorial);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "term {i} of the dimension formula is not integral"
            )));
        }
        total += sign(n - 1 - i) * q;
    }
    if total < BigInt::zero() {
        return Err(Error::Internal("dimension formula went negative".into()));
    }
    Ok(total)
}

/// Serialises as a JSON number when it fits in `u64`, else a decimal string.
fn big_number<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakdownRow {
    pub l: u32,
    #[serde(serialize_with = "big_number")]
    pub count: BigUint,
    #[serde(serialize_with = "big_number")]
    pub component_dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub n: u32,
    pub k: u32,
    #[serde(serialize_with = "big_number")]
    pub value: BigUint,
    pub breakdown: Vec<BreakdownRow>,
}

impl DimReport {
    pub fn resum(&self) -> BigUint {
        self.breakdown
            .iter()
            .map(|r| &r.count * &r.component_dim)
            .sum()
    }
}

/// Published values of `dim Z_4((Z_2)^l)` for `l = 2, 3, 4`.
pub fn published_z4_preset() -> BTreeMap<u32, BigUint> {
    BTreeMap::from([
        (2, BigUint::from(1u32)),
        (3, BigUint::from(32u32)),
        (4, BigUint::from(511u32)),
    ])
}

/// `Σ_{2 <= l <= min(n,k)} N_l · dim Z_n((Z_2)^l)` where `N_l` counts the
/// `(k-l)`-dimensional subspaces of `(Z_2)^k`.
pub fn compose_dim(n: u32, k: u32, component_dims: &BTreeMap<u32, BigUint>) -> Result<DimReport> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("n and k must be positive"));
    }
    let mut breakdown = Vec::new();
    for l in 2..=n.min(k) {
        let dim = component_dims
            .get(&l)
            .ok_or_else(|| Error::invalid(format!("missing component dimension for l = {l}")))?;
        breakdown.push(BreakdownRow {
            l,
            count: gaussian_binomial(k, k - l)?,
            component_dim: dim.clone(),
        });
    }
    let mut report = DimReport {
        n,
        k,
        value: BigUint::zero(),
        breakdown,
    };
    report.value = report.resum();
    Ok(report)
}

/// `(2^k - k - 1, 2^k - 1)`.
pub fn gk_bounds(k: u32) -> (BigUint, BigUint) {
    let upper = (BigUint::one() << k) - BigUint::one();
    let lower = &upper - BigUint::from(k);
    (lower, upper)
}

/// `{n : 0 <= n < 2^k, n ≠ 2^i - 1}`, ascending.
pub fn fk_generator_degrees(k: u32) -> Vec<u64> {
    assert!(k < 64, "2^k must fit in u64");
    (0..1u64 << k)
        .filter(|&n| !(n + 1).is_power_of_two())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(dim_zn_zn(2).unwrap(), BigInt::from(1));
        assert_eq!(dim_zn_zn(3).unwrap(), BigInt::from(13));
        assert_eq!(dim_zn_zn(4).unwrap(), BigInt::from(511));
        assert!(dim_zn_zn(0).is_err());
    }

    /// Independent integrality check: ∏(2^n - 2^j) over j <= i against (i+1)!
    /// computed with u128 where it fits.
    #[test]
    fn terms_are_integral_up_to_12() {
        for n in 1..=12u32 {
            for i in 0..n {
                let mut prod = 1u128;
                let mut fact = 1u128;
                let mut fits = true;
                for j in 0..=i {
                    match prod.checked_mul((1u128 << n) - (1u128 << j)) {
                        Some(p) => prod = p,
                        None => fits = false,
                    }
                    fact *= u128::from(j + 1);
                }
                if fits {
                    assert_eq!(prod % fact, 0, "n={n} i={i}");
                }
            }
            assert!(dim_zn_zn(n).is_ok());
        }
    }

    #[test]
    fn composition_examples() {
        let r = compose_dim(4, 5, &published_z4_preset()).unwrap();
        assert_eq!(r.value, big(20956));
        let rows: Vec<(u32, BigUint, BigUint)> = r
            .breakdown
            .iter()
            .map(|b| (b.l, b.count.clone(), b.component_dim.clone()))
            .collect();
        assert_eq!(
            rows,
            vec![
                (2, big(155), big(1)),
                (3, big(155), big(32)),
                (4, big(31), big(511))
            ]
        );
        assert_eq!(
            compose_dim(4, 4, &published_z4_preset()).unwrap().value,
            big(35 + 15 * 32 + 511)
        );
        let zeros = BTreeMap::from([(2, big(0)), (3, big(0)), (4, big(0))]);
        assert_eq!(compose_dim(4, 5, &zeros).unwrap().value, big(0));
        assert!(compose_dim(4, 5, &BTreeMap::from([(2, big(1))])).is_err());
    }

    #[test]
    fn report_json() {
        let r = compose_dim(4, 5, &published_z4_preset()).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["value"], 20956);
        assert_eq!(j["breakdown"][2]["count"], 31);
    }

    #[test]
    fn gk_examples() {
        assert_eq!(gk_bounds(3), (big(4), big(7)));
        assert_eq!(gk_bounds(1), (big(0), big(1)));
        for k in 1..=10 {
            let (lo, hi) = gk_bounds(k);
            assert_eq!(hi - lo, big(k.into()));
        }
    }

    #[test]
    fn generator_degrees() {
        assert_eq!(fk_generator_degrees(2), vec![2]);
        assert_eq!(fk_generator_degrees(3), vec![2, 4, 5, 6]);
        for k in 1..=8 {
            assert_eq!(big(fk_generator_degrees(k).len() as u64), gk_bounds(k).0);
        }
    }
}
