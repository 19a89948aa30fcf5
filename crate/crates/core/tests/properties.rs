// Property tests for the algebraic invariants of each module.
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use sympsnf::instances::{planted_symplectic, random_primitive};
use sympsnf::local::{exponents_of_chain, prime_factors};
use sympsnf::sympgen::plane_phase;
use sympsnf::*;

fn ints(xs: &[i64]) -> Vec<Integer> {
    xs.iter().map(|&x| Integer::from(x)).collect()
}

/// Block-form oracle: αᵀγ = γᵀα, βᵀδ = δᵀβ, αᵀδ − γᵀβ = 1.
fn block_conditions(g: &RatMatrix) -> bool {
    let Ok(p) = block_parts(g) else { return false };
    let n = p.alpha.rows();
    let at_g = &p.alpha.transpose() * &p.gamma;
    let gt_a = &p.gamma.transpose() * &p.alpha;
    let bt_d = &p.beta.transpose() * &p.delta;
    let dt_b = &p.delta.transpose() * &p.beta;
    let cross = (&p.alpha.transpose() * &p.delta).sub(&(&p.gamma.transpose() * &p.beta));
    at_g == gt_a && bt_d == dt_b && cross == RatMatrix::identity(n)
}

fn rational_matrix(dim: usize, seed: &[(i64, i64)]) -> RatMatrix {
    RatMatrix::from_fn(dim, dim, |i, j| {
        let (p, q) = seed[(i * dim + j) % seed.len()];
        Rational::new(p.into(), q.into())
    })
}

fn sorted(mut xs: Vec<Integer>) -> Vec<Integer> {
    xs.sort();
    xs
}

/// A unimodular matrix from a list of elementary operations.
fn elementary_product(dim: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(dim);
    for &(i, j, c) in ops {
        let (i, j) = (i % dim, j % dim);
        let mut e = IntMatrix::identity(dim);
        if i == j {
            e[(i, i)] = Integer::from(-1);
        } else {
            e[(i, j)] = Integer::from(c);
        }
        m = &e * &m;
    }
    m
}

#[test]
fn block_criterion_matches_defect() {
    // Mix of genuine symplectic matrices, perturbations of them, and noise.
    let mut symplectic_seen = 0;
    for k in 0..1000u64 {
        let n = 1 + (k as usize % 4);
        let g = match k % 3 {
            0 => planted_symplectic(n, 4, 30, k).g,
            1 => {
                let mut g = planted_symplectic(n, 3, 12, k).g;
                let (i, j) = ((k as usize) % (2 * n), (k as usize / 3) % (2 * n));
                g[(i, j)] += Rational::new(Integer::one(), Integer::from(1 + k % 5));
                g
            }
            _ => {
                let seed: Vec<(i64, i64)> = (0..7).map(|t| ((k as i64 * 31 + t * 17) % 11 - 5, 1 + t % 3)).collect();
                rational_matrix(2 * n, &seed)
            }
        };
        symplectic_seen += usize::from(is_symplectic(&g));
        assert_eq!(is_symplectic(&g), block_conditions(&g), "instance {k}");
    }
    assert!(symplectic_seen >= 333);
}

#[test]
fn symplectic_closure() {
    for seed in 0..40 {
        let n = 1 + seed as usize % 3;
        let g = planted_symplectic(n, 6, 50, seed).g;
        let h = planted_symplectic(n, 6, 50, seed + 1000).g;
        assert!(is_symplectic(&(&g * &h)));
        assert!(is_symplectic(&g.inverse().unwrap()));
    }
}

proptest! {
    #[test]
    fn mp_scale_means_proportional_form(c in 1i64..6, seed in 0u64..500, n in 1usize..4) {
        let g = planted_symplectic(n, 5, 40, seed).g;
        let m = g.denominator_lcm() * Integer::from(c);
        let scaled = g.scale(&Rational::from_integer(m.clone())).to_integer().unwrap();
        let lambda_sq = mp_scale(&scaled).unwrap();
        prop_assert_eq!(&lambda_sq, &(&m * &m));
        let j = standard_form_matrix(n).unwrap();
        prop_assert_eq!(
            &(&scaled.transpose() * &j) * &scaled,
            j.scale(&lambda_sq)
        );
    }

    #[test]
    fn content_is_homogeneous(c in -50i64..50, entries in prop::collection::vec(-1000i64..1000, 6)) {
        let g = IntMatrix::new(2, 3, ints(&entries)).unwrap();
        let scaled = g.scale(&Integer::from(c));
        prop_assert_eq!(content(&scaled), Integer::from(c).abs() * content(&g));
    }

    #[test]
    fn snf_invariant_under_unimodular_action(
        rows in 1usize..5, cols in 1usize..5,
        entries in prop::collection::vec(-50i64..50, 16),
        left in prop::collection::vec((0usize..4, 0usize..4, -3i64..4), 0..8),
        right in prop::collection::vec((0usize..4, 0usize..4, -3i64..4), 0..8),
    ) {
        let g = IntMatrix::from_fn(rows, cols, |i, j| Integer::from(entries[i * 4 + j]));
        let p = elementary_product(rows, &left);
        let q = elementary_product(cols, &right);
        let moved = &(&p * &g) * &q;
        prop_assert_eq!(smith_normal_form(&moved).divisors, smith_normal_form(&g).divisors);
    }

    #[test]
    fn transvections_are_one_parameter_groups(
        n in 1usize..5,
        a in prop::collection::vec(-20i64..20, 4),
        b in prop::collection::vec(-20i64..20, 4),
    ) {
        let row = |c: &[i64]| transvection_row(n, &ints(&c[..n - 1])).unwrap();
        let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(row(&a).mul(&row(&b)), row(&sum));
        let col = |c: &[i64]| transvection_col(n, &ints(&c[..n])).unwrap();
        prop_assert_eq!(col(&a).mul(&col(&b)), col(&sum));
    }

    #[test]
    fn diag_p_over_q(p in 1i64..200, q in 1i64..200) {
        prop_assume!(p.gcd(&q) == 1);
        let g = RatMatrix::diagonal(&[
            Rational::new(p.into(), q.into()),
            Rational::new(q.into(), p.into()),
        ]);
        prop_assert_eq!(double_coset_invariant(&g).unwrap(), ints(&[p * q]));
    }
}

#[test]
fn reduce_primitive_on_random_vectors() {
    for seed in 0..300u64 {
        let n = 1 + seed as usize % 4;
        let v = random_primitive(n, 1_000_000, seed);
        let (_, after) = plane_phase(&v).unwrap();
        assert!(after[n..].iter().all(Zero::is_zero));
        assert!(is_primitive(&after[..n]));
        let word = reduce_primitive(&v).unwrap();
        assert!(is_symplectic(word.matrix()));
        let image = word.product().apply(&v);
        assert!(image[0].is_one() && image[1..].iter().all(Zero::is_zero));
        assert_eq!(word.recompute().unwrap(), *word.product());
    }
}

#[test]
fn decomposition_round_trip_and_oracle() {
    for seed in 0..60u64 {
        let n = 1 + seed as usize % 4;
        let planted = planted_symplectic(n, 20, 2000, seed);
        let dec = symp_smith(&planted.g).unwrap();
        assert_eq!(dec.d, planted.d, "seed {seed}");
        assert_eq!(dec.reconstruct(), planted.g);
        assert!(dec.verify(&planted.g).all_passed());

        let m = &dec.scale.m;
        let expected: Vec<Integer> = dec.d.iter().map(|d| m * d).chain(dec.d.iter().map(|d| m / d)).collect();
        let snf = smith_normal_form(&dec.scale.apply(&planted.g));
        assert_eq!(sorted(snf.divisors), sorted(expected), "seed {seed}");
    }
}

#[test]
fn invariant_is_canonical_and_inversion_symmetric() {
    for seed in 0..40u64 {
        let n = 1 + seed as usize % 3;
        let planted = planted_symplectic(n, 10, 500, seed);
        let s1 = random_sp(n, 12, seed + 10_000).matrix().to_rational();
        let s2 = random_sp(n, 12, seed + 20_000).matrix().to_rational();
        let moved = &(&s1 * &planted.g) * &s2;
        assert_eq!(double_coset_invariant(&moved).unwrap(), planted.d);
        assert_eq!(
            double_coset_invariant(&planted.g.inverse().unwrap()).unwrap(),
            planted.d
        );
    }
}

#[test]
fn local_global_round_trip() {
    for seed in 0..80u64 {
        let n = 1 + seed as usize % 4;
        let planted = planted_symplectic(n, 8, 10_000, seed);
        let d = double_coset_invariant(&planted.g).unwrap();
        let primes = support_primes(&planted.g).unwrap();
        assert_eq!(primes, prime_factors(d.last().unwrap()));
        let locals: Vec<_> = primes.iter().map(|p| exponents_of_chain(&d, p).unwrap()).collect();
        for l in &locals {
            assert!(l.exps.windows(2).all(|w| w[0] >= w[1]));
        }
        assert_eq!(reconstruct_global(&locals, n).unwrap(), d);

        // product formula
        let total: Integer = d.iter().product();
        let from_locals: Integer = locals
            .iter()
            .map(|l| num_traits::pow(l.p.clone(), l.exps.iter().sum::<u64>() as usize))
            .product();
        assert_eq!(total, from_locals);
        assert!(total.is_positive());
    }
}
