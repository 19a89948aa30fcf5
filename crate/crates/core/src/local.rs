//! Per-prime Cartan exponents, read off the global invariant by `p`-adic
//! valuation.
//!
//! Over `Q_p` the chain `d` becomes `diag(p^{k_1}, ..., p^{k_n})` with
//! `k_1 ≥ ... ≥ k_n ≥ 0`; since `d_1 | ... | d_n`, the exponents are the
//! valuations `v_p(d_n), ..., v_p(d_1)` in that order. Units of `Z_p` are
//! absorbed into `Sp(n, Z_p) ⊃ Sp(n, Z)`.

use std::collections::BTreeSet;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::decomposition::double_coset_invariant;
use crate::error::{Error, Result};
use crate::exact::{Integer, RatMatrix};

/// Exponents at one prime, sorted nonincreasing (reverse of the chain order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCartanExponents {
    pub p: Integer,
    pub exps: Vec<u64>,
}

/// Deterministic trial division.
pub fn is_prime(p: &Integer) -> bool {
    if p < &Integer::from(2) {
        return false;
    }
    let mut k = Integer::from(2);
    while &(&k * &k) <= p {
        if p.is_multiple_of(&k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `v_p(x)` for nonzero `x`.
pub fn valuation(x: &Integer, p: &Integer) -> u64 {
    assert!(!x.is_zero(), "valuation of zero");
    let mut x = x.abs();
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Prime factors of `|x|`, ascending.
pub fn prime_factors(x: &Integer) -> Vec<Integer> {
    let mut x = x.abs();
    let mut out = Vec::new();
    let mut k = Integer::from(2);
    while &k * &k <= x {
        if x.is_multiple_of(&k) {
            out.push(k.clone());
            while x.is_multiple_of(&k) {
                x /= &k;
            }
        }
        k += 1;
    }
    if x > Integer::one() {
        out.push(x);
    }
    out
}

/// Exponents of a known chain `d` at `p`.
pub fn exponents_of_chain(d: &[Integer], p: &Integer) -> Result<LocalCartanExponents> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::InvalidArgument("chain entries must be positive".into()));
    }
    let exps = d.iter().rev().map(|x| valuation(x, p)).collect();
    Ok(LocalCartanExponents { p: p.clone(), exps })
}

pub fn local_cartan_exponents(g: &RatMatrix, p: &Integer) -> Result<LocalCartanExponents> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    exponents_of_chain(&double_coset_invariant(g)?, p)
}

/// Primes dividing `d_n`, i.e. those with a nonzero exponent.
pub fn support_primes(g: &RatMatrix) -> Result<Vec<Integer>> {
    let d = double_coset_invariant(g)?;
    Ok(d.last().map(prime_factors).unwrap_or_default())
}

/// Rebuilds `d` from per-prime exponents: `d_i = Π_p p^{exps[n-i]}`.
pub fn reconstruct_global(locals: &[LocalCartanExponents], n: usize) -> Result<Vec<Integer>> {
    let mut seen = BTreeSet::new();
    let mut d = vec![Integer::one(); n];
    for local in locals {
        if !seen.insert(local.p.clone()) {
            return Err(Error::InvalidArgument(format!("prime {} listed twice", local.p)));
        }
        if !is_prime(&local.p) {
            return Err(Error::InvalidArgument(format!("{} is not prime", local.p)));
        }
        if local.exps.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} exponents at {}, got {}",
                local.p,
                local.exps.len()
            )));
        }
        if local.exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "exponents at {} are not nonincreasing",
                local.p
            )));
        }
        for (i, e) in local.exps.iter().rev().enumerate() {
            let e = e.to_usize().expect("exponent fits in usize");
            d[i] *= num_traits::pow(local.p.clone(), e);
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::sympgen::random_sp;

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    fn big(x: i64) -> Integer {
        Integer::from(x)
    }

    fn ratdiag(pairs: &[(i64, i64)]) -> RatMatrix {
        RatMatrix::diagonal(
            &pairs
                .iter()
                .map(|&(p, q)| Rational::new(p.into(), q.into()))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn primes_and_valuations() {
        let primes: Vec<i64> = (0..30).filter(|&k| is_prime(&big(k))).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(valuation(&big(12), &big(2)), 2);
        assert_eq!(valuation(&big(-48), &big(2)), 4);
        assert_eq!(prime_factors(&big(360)), ints(&[2, 3, 5]));
        assert_eq!(prime_factors(&big(1)), ints(&[]));
        assert_eq!(prime_factors(&big(97)), ints(&[97]));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(exponents_of_chain(&ints(&[12]), &big(2)).unwrap().exps, vec![2]);
        let d = ints(&[2, 6]);
        assert_eq!(exponents_of_chain(&d, &big(2)).unwrap().exps, vec![1, 1]);
        assert_eq!(exponents_of_chain(&d, &big(3)).unwrap().exps, vec![1, 0]);
        assert_eq!(exponents_of_chain(&d, &big(5)).unwrap().exps, vec![0, 0]);
        assert!(matches!(
            exponents_of_chain(&d, &big(4)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn from_matrices() {
        let w = random_sp(2, 10, 5).matrix().to_rational();
        for p in [2, 3, 5, 7] {
            assert_eq!(local_cartan_exponents(&w, &big(p)).unwrap().exps, vec![0, 0]);
        }
        assert!(support_primes(&w).unwrap().is_empty());

        let g = ratdiag(&[(2, 1), (6, 1), (1, 2), (1, 6)]);
        assert_eq!(local_cartan_exponents(&g, &big(3)).unwrap().exps, vec![1, 0]);
        assert_eq!(support_primes(&g).unwrap(), ints(&[2, 3]));
        assert!(matches!(
            local_cartan_exponents(&g, &big(6)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            local_cartan_exponents(&ratdiag(&[(2, 1), (2, 1)]), &big(2)),
            Err(Error::NotSymplectic)
        ));

        let g = ratdiag(&[(1, 1), (1, 1), (30, 1), (1, 1), (1, 1), (1, 30)]);
        assert_eq!(support_primes(&g).unwrap(), ints(&[2, 3, 5]));
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(reconstruct_global(&[], 3).unwrap(), ints(&[1, 1, 1]));
        let locals = [
            LocalCartanExponents {
                p: big(2),
                exps: vec![1, 1],
            },
            LocalCartanExponents {
                p: big(3),
                exps: vec![1, 0],
            },
        ];
        assert_eq!(reconstruct_global(&locals, 2).unwrap(), ints(&[2, 6]));
        let dup = [locals[0].clone(), locals[0].clone()];
        assert!(matches!(reconstruct_global(&dup, 2), Err(Error::InvalidArgument(_))));
        let bad = [LocalCartanExponents {
            p: big(2),
            exps: vec![0, 1],
        }];
        assert!(reconstruct_global(&bad, 2).is_err());
    }
}
