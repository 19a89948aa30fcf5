//! Seeded test instances: planted double-coset representatives, primitive
//! vectors and integral multiples of symplectic matrices.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::torus_matrix;
use crate::exact::{is_primitive, IntMatrix, IntVector, Integer, RatMatrix, Rational};
use crate::sympgen::{random_sp_with, SpWord};

/// `g = σ · diag(d, d⁻¹) · σ'` with known `d`.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub g: RatMatrix,
    pub d: Vec<Integer>,
    pub sigma: SpWord,
    pub sigma_prime: SpWord,
}

/// A divisibility chain `d_1 | ... | d_n` with `d_n ≤ dmax`.
///
/// `d_1` is drawn so that room is left for the chain to grow; each later
/// entry multiplies the previous one by a factor in `1..=6` unless that would
/// exceed `dmax`.
pub fn random_divisor_chain(n: usize, dmax: u64, rng: &mut impl Rng) -> Vec<u64> {
    let dmax = dmax.max(1);
    let headroom = 6u64.saturating_pow(n.saturating_sub(1) as u32);
    let first_max = (dmax / headroom).max(1);
    let mut cur = rng.gen_range(1..=first_max);
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        if i > 0 {
            let f = rng.gen_range(1..=6u64);
            if cur.saturating_mul(f) <= dmax {
                cur *= f;
            }
        }
        d.push(cur);
    }
    d
}

/// A planted instance with witness words of length `length` each.
pub fn planted_symplectic(n: usize, length: usize, dmax: u64, seed: u64) -> PlantedInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d: Vec<Integer> = random_divisor_chain(n, dmax, &mut rng)
        .into_iter()
        .map(Integer::from)
        .collect();
    let sigma = random_sp_with(n, length, &mut rng);
    let sigma_prime = random_sp_with(n, length, &mut rng);
    let middle = torus_matrix(&d).expect("chain entries are positive");
    let g = &(&sigma.matrix().to_rational() * &middle) * &sigma_prime.matrix().to_rational();
    PlantedInstance {
        g,
        d,
        sigma,
        sigma_prime,
    }
}

/// A primitive vector in `Z^{2n}` with entries in `[-bound, bound]`, made
/// primitive by dividing out the gcd.
pub fn random_primitive(n: usize, bound: i64, seed: u64) -> IntVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let v: IntVector = (0..2 * n)
            .map(|_| Integer::from(rng.gen_range(-bound..=bound)))
            .collect();
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let g = crate::exact::gcd_all(&v);
        let v: IntVector = v.into_iter().map(|x| x / &g).collect();
        debug_assert!(is_primitive(&v));
        return v;
    }
}

/// An integral multiple `c·m·g` of a planted rational symplectic `g`, which
/// lies in `Mp(n, Z)` with content `c`.
pub fn random_mp(n: usize, length: usize, dmax: u64, max_content: u64, seed: u64) -> IntMatrix {
    let planted = planted_symplectic(n, length, dmax, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let c = Integer::from(rng.gen_range(1..=max_content.max(1)));
    let m = planted.g.denominator_lcm();
    planted
        .g
        .scale(&Rational::from_integer(m * c))
        .to_integer()
        .expect("scaled by the denominator lcm")
}
