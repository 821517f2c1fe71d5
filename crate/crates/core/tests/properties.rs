mod common;

use bordism_core::repalg::{format, parse};
use bordism_core::{
    annihilator, brute_force_decomposable, complement, decompose_by_kernel, enumerate_subspaces,
    f_poly, find_witness, monomial_kernel, psi_embed, rp_standard, span, spanning_check, BitVector,
    FixedPointData, Functional, Monomial, Poly, Subspace,
};
use proptest::prelude::*;

fn functional(k: u32) -> impl Strategy<Value = Functional> {
    (1..1u32 << k).prop_map(move |b| Functional::new(k, b).unwrap())
}

fn monomial(k: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((functional(k), 1..=3u32), 0..=3)
        .prop_map(move |fs| Monomial::new(k, fs).unwrap())
}

fn poly(k: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(monomial(k), 0..=4).prop_map(move |ms| {
        let mut p = Poly::zero(k).unwrap();
        for m in ms {
            p.toggle(m).unwrap();
        }
        p
    })
}

fn poly_triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    (1..=5u32).prop_flat_map(|k| (poly(k), poly(k), poly(k)))
}

/// Homogeneous polynomial of the given degree; every term has `degree` linear factors.
fn homogeneous(k: u32, degree: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(prop::collection::vec(functional(k), degree), 1..=max_terms).prop_map(
        move |terms| {
            let mut p = Poly::zero(k).unwrap();
            for fs in terms {
                p.toggle(Monomial::product(k, &fs).unwrap()).unwrap();
            }
            p
        },
    )
}

/// Spanning data: the standard `RP^h` class times an arbitrary monomial.
fn spanning_data(h: u32, extra: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(functional(h), extra).prop_map(move |fs| {
        let base = rp_standard(h).unwrap().into_poly();
        base.mul_monomial(&Monomial::product(h, &fs).unwrap())
            .unwrap()
    })
}

fn subspace(k: u32) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(0..1u32 << k, 0..=k as usize + 1).prop_map(move |rows| {
        let vs: Vec<_> = rows
            .into_iter()
            .map(|b| BitVector::new(k, b).unwrap())
            .collect();
        span(&vs, k).unwrap()
    })
}

/// Subspaces of `(Z_2)^4` up to the given dimension.
fn kernel4(max_dim: u32) -> impl Strategy<Value = Subspace> {
    let all: Vec<Subspace> = (0..=max_dim)
        .flat_map(|d| enumerate_subspaces(4, d).unwrap())
        .collect();
    prop::sample::select(all)
}

fn data(p: Poly) -> FixedPointData {
    FixedPointData::new(p).unwrap()
}

fn witness_clauses_hold(p: &Poly, m: &Monomial) -> bool {
    let k = p.rank();
    let distinct: Vec<u32> = m.factors().iter().map(|f| f.bits()).collect();
    let mut dedup = distinct.clone();
    dedup.sort_unstable();
    dedup.dedup();
    p.contains(m)
        && dedup.len() == distinct.len()
        && distinct.len() == k as usize
        && m.degree() == p.degree()
        && m.exponents().any(|(_, e)| e == 1)
        && common::factor_span_by_closure(m).len() == 1usize << k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms((a, b, c) in poly_triple()) {
        let k = a.rank();
        let one = Poly::one(k).unwrap();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a + &a).is_zero());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a + &Poly::zero(k).unwrap(), a);
    }

    #[test]
    fn grading((a, b) in (1..=4u32, 1..=3usize, 1..=3usize)
        .prop_flat_map(|(k, d, e)| (homogeneous(k, d, 3), homogeneous(k, e, 3))))
    {
        let p = &a * &b;
        prop_assert!(p.is_homogeneous());
        if !p.is_zero() {
            prop_assert_eq!(p.degree(), a.degree() + b.degree());
        }
    }

    #[test]
    fn frobenius_doubles_exponents(p in (1..=5u32).prop_flat_map(poly)) {
        let mut termwise = Poly::zero(p.rank()).unwrap();
        for t in p.terms() {
            termwise.toggle(t.scaled(2).unwrap()).unwrap();
        }
        prop_assert_eq!(p.pow(2).unwrap(), termwise.clone());
        prop_assert_eq!(p.square().unwrap(), termwise);
    }

    #[test]
    fn annihilator_involution(v in (1..=6u32).prop_flat_map(subspace)) {
        let a = annihilator(&v);
        prop_assert_eq!(a.dim() + v.dim(), v.rank());
        prop_assert_eq!(annihilator(&a), v.clone());
        prop_assert_eq!(common::elements(&a), common::orthogonal_by_search(&v));
    }

    #[test]
    fn complement_is_direct_summand(v in (1..=6u32).prop_flat_map(subspace)) {
        let h = complement(&v);
        let mut all = v.basis();
        all.extend(h.basis());
        prop_assert!(span(&all, v.rank()).unwrap().is_full());
        prop_assert_eq!(h.dim() + v.dim(), v.rank());
        prop_assert_eq!(complement(&v), h);
    }

    #[test]
    fn parse_format_round_trip(p in (1..=6u32).prop_flat_map(poly)) {
        let text = format(&p);
        let back = parse(&text, p.rank()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(format(&back), text);
    }

    #[test]
    fn json_round_trip(p in (1..=6u32).prop_flat_map(poly)) {
        let json = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn recombination_and_key_soundness(p in (1..=4u32, 1..=5usize)
        .prop_flat_map(|(k, d)| homogeneous(k, d, 6)))
    {
        let parts = decompose_by_kernel(&data(p.clone()));
        let mut sum = Poly::zero(p.rank()).unwrap();
        for (kernel, part) in &parts {
            prop_assert!(!part.is_zero());
            for t in part.terms() {
                prop_assert_eq!(&monomial_kernel(t), kernel);
            }
            sum = &sum + part;
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn psi_is_an_injective_homomorphism(
        (kernel, a, b, c) in kernel4(3).prop_flat_map(|kernel| {
            let h = 4 - kernel.dim();
            (Just(kernel), homogeneous(h, 2, 3), homogeneous(h, 2, 3), homogeneous(h, 1, 3))
        })
    ) {
        let psi = |p: &Poly| psi_embed(&data(p.clone()), &kernel).unwrap().into_poly();
        prop_assert_eq!(psi(&(&a * &c)), &psi(&a) * &psi(&c));
        prop_assert_eq!(psi(&(&a + &b)), &psi(&a) + &psi(&b));
        prop_assert_eq!(psi(&a) == psi(&b), a == b);
    }

    #[test]
    fn psi_transports_spanning(
        (kernel, d) in kernel4(2).prop_flat_map(|kernel| {
            let h = 4 - kernel.dim();
            (Just(kernel), spanning_data(h, 2))
        })
    ) {
        prop_assert!(spanning_check(&data(d.clone())));
        let want = common::elements(&annihilator(&kernel));
        let out = psi_embed(&data(d), &kernel).unwrap();
        for t in out.poly().terms() {
            prop_assert_eq!(common::factor_span_by_closure(t), want.clone());
        }
    }

    #[test]
    fn witnesses_satisfy_every_clause(p in (1..=4u32, 1..=5usize)
        .prop_flat_map(|(k, d)| homogeneous(k, d, 5)))
    {
        prop_assume!(!p.is_zero());
        let report = find_witness(&data(p.clone())).unwrap();
        prop_assert_eq!(report.found, report.monomial.is_some());
        if let Some(m) = &report.monomial {
            prop_assert!(witness_clauses_hold(&p, m));
        } else {
            prop_assert!(p.terms().all(|t| !witness_clauses_hold(&p, t)));
        }
    }

    #[test]
    fn squares_have_no_witness(p in (1..=4u32, 1..=3usize)
        .prop_flat_map(|(k, d)| homogeneous(k, d, 4)))
    {
        let sq = &p * &p;
        prop_assume!(!sq.is_zero());
        let report = find_witness(&data(sq)).unwrap();
        prop_assert!(!report.found);
        prop_assert!(report.reason.contains("inconclusive"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn certificates_replay(
        (gens, picks) in prop::collection::vec(homogeneous(3, 2, 3), 1..=3)
            .prop_flat_map(|gens| {
                let n = gens.len();
                (Just(gens), prop::collection::vec((0..n, 0..n), 0..=4))
            })
    ) {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let mut target = Poly::zero(3).unwrap();
        for (i, j) in picks {
            if i < gens.len() && j < gens.len() {
                target = &target + &(&gens[i] * &gens[j]);
            }
        }
        let cert = brute_force_decomposable(&target, &gens).unwrap();
        let cert = cert.expect("a sum of generator products is decomposable");
        prop_assert_eq!(cert.replay(&gens).unwrap(), target);
        prop_assert!(cert.products.iter().all(|p| p.len() >= 2));
    }

    #[test]
    fn random_targets_replay_when_decomposable(
        (gens, target) in (prop::collection::vec(homogeneous(3, 2, 3), 1..=3), homogeneous(3, 4, 6))
    ) {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        if let Some(cert) = brute_force_decomposable(&target, &gens).unwrap() {
            prop_assert_eq!(cert.replay(&gens).unwrap(), target);
        }
    }

    /// A witness rules out decomposition over any spanning generator set.
    #[test]
    fn witness_and_oracle_agree(
        (m, extras) in (2..=3u32).prop_flat_map(|m| {
            let top = 3 * m as usize;
            (Just(m), prop::collection::vec((0..top - 3, any::<bool>()), 1..=5))
        }),
        fs in prop::collection::vec(functional(4), 8),
    ) {
        let target = f_poly(4, m).unwrap();
        prop_assert!(find_witness(&target).unwrap().found);
        let base = [rp_standard(4).unwrap().into_poly(), f_poly(4, 1).unwrap().into_poly()];
        let gens: Vec<Poly> = extras
            .into_iter()
            .map(|(e, which)| {
                let g = &base[which as usize];
                g.mul_monomial(&Monomial::product(4, &fs[..e]).unwrap()).unwrap()
            })
            .filter(|g| !g.is_zero() && g.degree() < target.degree())
            .collect();
        prop_assume!(!gens.is_empty());
        for g in &gens {
            prop_assert!(spanning_check(&data(g.clone())));
        }
        prop_assert!(brute_force_decomposable(target.poly(), &gens).unwrap().is_none());
    }
}

#[test]
fn curated_consistency_rank4() {
    let rp4 = rp_standard(4).unwrap().into_poly();
    let f41 = f_poly(4, 1).unwrap().into_poly();
    let rho = |i| Functional::rho(4, i).unwrap();
    let mono = |fs: &[Functional]| Monomial::product(4, fs).unwrap();
    let gens = vec![
        rp4.clone(),
        f41.clone(),
        rp4.mul_monomial(&mono(&[rho(1), rho(2)])).unwrap(),
        rp4.mul_monomial(&mono(&[rho(4), rho(4)])).unwrap(),
        f41.mul_monomial(&mono(&[rho(3)])).unwrap(),
        &rp4 * &f41,
    ];
    for g in &gens {
        assert!(spanning_check(&data(g.clone())));
    }
    for m in 2..=3 {
        let target = f_poly(4, m).unwrap();
        assert!(find_witness(&target).unwrap().found);
        let usable: Vec<Poly> = gens
            .iter()
            .filter(|g| g.degree() < target.degree())
            .cloned()
            .collect();
        assert!(brute_force_decomposable(target.poly(), &usable)
            .unwrap()
            .is_none());
    }
    // The products themselves are decomposable, and carry no witness.
    let prod = &(&rp4 * &rp4) + &(&f41 * &rp4);
    let report = find_witness(&data(prod.clone())).unwrap();
    assert!(!report.found);
    assert!(brute_force_decomposable(&prod, &gens[..3])
        .unwrap()
        .is_some());
}
