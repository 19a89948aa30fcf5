//! Classical Smith normal form over `Z`, the determinantal-divisor oracle, and
//! completion of a primitive vector to an `SL(n, Z)` matrix.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ext_gcd, gcd_all, is_primitive, IntMatrix, Integer};

/// `g = u · diag(divisors) · v`, with the diagonal padded by zero rows or
/// columns when `g` is not square.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    /// `a_1 | a_2 | ... | a_r`, all nonnegative, `r = min(rows, cols)`.
    pub divisors: Vec<Integer>,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfDecomposition {
    /// The `rows×cols` diagonal middle factor.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let (rows, cols) = (self.u.rows(), self.v.rows());
        IntMatrix::from_fn(rows, cols, |i, j| {
            if i == j {
                self.divisors[i].clone()
            } else {
                Integer::zero()
            }
        })
    }

    pub fn reconstruct(&self) -> IntMatrix {
        &(&self.u * &self.diagonal_matrix()) * &self.v
    }

    pub fn rank(&self) -> usize {
        self.divisors.iter().take_while(|a| !a.is_zero()).count()
    }

    /// Moves a sign between the witnesses so that `det v = +1`.
    ///
    /// Negating row `i` of `v` together with column `i` of `u` leaves the
    /// product unchanged, so the divisors stay nonnegative and any leftover
    /// sign lands in `det u`.
    pub fn normalize_sl(mut self) -> Self {
        let det = self.v.determinant().expect("v is square");
        if det.is_negative() && !self.divisors.is_empty() {
            self.v.negate_row(0);
            self.v_inv.negate_col(0);
            self.u.negate_col(0);
            self.u_inv.negate_row(0);
        } else if det.is_negative() {
            // 0-row or 0-column input: v is free to change on its own.
            self.v.negate_row(0);
            self.v_inv.negate_col(0);
        }
        self
    }
}

struct Elimination {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

// Row operations act as `a ← E·a`; to keep `g = u·a·v` we update `u ← u·E⁻¹`
// and `u_inv ← E·u_inv`. Column operations mirror this on `v`.
impl Elimination {
    fn add_row(&mut self, target: usize, source: usize, c: &Integer) {
        self.a.add_row_multiple(target, source, c);
        self.u_inv.add_row_multiple(target, source, c);
        self.u.add_col_multiple(source, target, &-c);
    }

    fn add_col(&mut self, target: usize, source: usize, c: &Integer) {
        self.a.add_col_multiple(target, source, c);
        self.v_inv.add_col_multiple(target, source, c);
        self.v.add_row_multiple(source, target, &-c);
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u_inv.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v_inv.swap_cols(i, j);
        self.v.swap_rows(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u_inv.negate_row(i);
        self.u.negate_col(i);
    }

    /// Position of the smallest nonzero |entry| in the trailing block.
    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), Integer)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, b)| x < *b) {
                    best = Some(((i, j), x));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears row and column `k` below/right of the pivot by remainders.
    /// Returns `false` when a nonzero remainder survived.
    fn reduce_cross(&mut self, k: usize) -> bool {
        let mut clean = true;
        for i in k + 1..self.a.rows() {
            if self.a[(i, k)].is_zero() {
                continue;
            }
            let q = &self.a[(i, k)] / &self.a[(k, k)];
            self.add_row(i, k, &-q);
            clean &= self.a[(i, k)].is_zero();
        }
        for j in k + 1..self.a.cols() {
            if self.a[(k, j)].is_zero() {
                continue;
            }
            let q = &self.a[(k, j)] / &self.a[(k, k)];
            self.add_col(j, k, &-q);
            clean &= self.a[(k, j)].is_zero();
        }
        clean
    }

    fn first_non_multiple(&self, k: usize) -> Option<usize> {
        let p = &self.a[(k, k)];
        for i in k + 1..self.a.rows() {
            for j in k + 1..self.a.cols() {
                if !self.a[(i, j)].is_multiple_of(p) {
                    return Some(j);
                }
            }
        }
        None
    }
}

/// Smith normal form with unimodular witnesses and their inverses.
///
/// Pivots are chosen by minimal absolute value; after a pivot clears its row
/// and column, any trailing entry it fails to divide has its column added to
/// the pivot column and elimination resumes. Divisors are nonnegative.
pub fn smith_normal_form(g: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (g.rows(), g.cols());
    let mut e = Elimination {
        a: g.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let r = rows.min(cols);
    for k in 0..r {
        while let Some((pi, pj)) = e.min_pivot(k) {
            e.swap_rows(k, pi);
            e.swap_cols(k, pj);
            if !e.reduce_cross(k) {
                continue;
            }
            match e.first_non_multiple(k) {
                Some(j) => e.add_col(k, j, &Integer::one()),
                None => {
                    if e.a[(k, k)].is_negative() {
                        e.negate_row(k);
                    }
                    break;
                }
            }
        }
    }
    let divisors = (0..r).map(|i| e.a[(i, i)].clone()).collect();
    SnfDecomposition {
        u: e.u,
        u_inv: e.u_inv,
        divisors,
        v: e.v,
        v_inv: e.v_inv,
    }
}

/// Smith normal form with `det v = +1`.
pub fn smith_normal_form_sl(g: &IntMatrix) -> SnfDecomposition {
    smith_normal_form(g).normalize_sl()
}

/// Gcd of all `k×k` minors of `g` (the `k`-th determinantal divisor).
pub fn minor_gcd_divisors(g: &IntMatrix, k: usize) -> Result<Integer> {
    let r = g.rows().min(g.cols());
    if k == 0 || k > r {
        return Err(Error::InvalidArgument(format!("minor size {k} outside 1..={r}")));
    }
    let row_sets = combinations(g.rows(), k);
    let col_sets = combinations(g.cols(), k);
    let mut acc = Integer::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let minor = g.select(rs, cs).determinant()?;
            acc = acc.gcd(&minor);
            // gcd can only shrink; 1 is final.
            if acc.is_one() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The `SL(2, Z)` matrix `[[a, b], [-y/g, x/g]]` taking `(x, y)` to
/// `(gcd(x, y), 0)`, or `None` when `(x, y)` is already of that form.
pub(crate) fn gcd_rotation(x: &Integer, y: &Integer) -> Option<[[Integer; 2]; 2]> {
    if y.is_zero() && !x.is_negative() {
        return None;
    }
    let (g, a, b) = ext_gcd(x, y);
    Some([[a, b], [-(y / &g), x / &g]])
}

/// Returns `s ∈ SL(n, Z)` (determinant exactly `+1`) with `s·v = e_1`.
///
/// Adjacent coordinates are merged from the bottom up with `SL(2, Z)`
/// rotations. For `n = 1` only `v = (1)` is admissible, since `SL(1, Z)` is
/// trivial.
pub fn complete_primitive_to_unimodular(v: &[Integer]) -> Result<IntMatrix> {
    if !is_primitive(v) {
        return Err(Error::PreconditionViolation(format!(
            "vector with gcd {} is not primitive",
            gcd_all(v)
        )));
    }
    let n = v.len();
    let mut w = v.to_vec();
    let mut s = IntMatrix::identity(n);
    for i in (1..n).rev() {
        let Some([[a, b], [c, d]]) = gcd_rotation(&w[i - 1], &w[i]) else {
            continue;
        };
        let (x, y) = (w[i - 1].clone(), w[i].clone());
        w[i - 1] = &a * &x + &b * &y;
        w[i] = &c * &x + &d * &y;
        let mut rot = IntMatrix::identity(n);
        rot[(i - 1, i - 1)] = a;
        rot[(i - 1, i)] = b;
        rot[(i, i - 1)] = c;
        rot[(i, i)] = d;
        s = &rot * &s;
    }
    if !w[0].is_one() {
        return Err(Error::PreconditionViolation(
            "no element of SL(1, Z) maps (-1) to (1)".into(),
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    fn check(g: &IntMatrix) -> SnfDecomposition {
        let s = smith_normal_form(g);
        assert_eq!(&s.reconstruct(), g);
        assert_eq!(s.u.determinant().unwrap().abs(), Integer::one());
        assert_eq!(s.v.determinant().unwrap().abs(), Integer::one());
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(g.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(g.cols()));
        for w in s.divisors.windows(2) {
            assert!(!w[0].is_negative());
            // 0 divides only 0
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn identity_has_unit_divisors_and_trivial_witnesses() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.divisors, ints(&[1, 1, 1]));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(&int(&[&[2, 0], &[0, 3]])).divisors, ints(&[1, 6]));
        assert_eq!(check(&int(&[&[4, 6], &[2, 8]])).divisors, ints(&[2, 10]));
        assert_eq!(check(&IntMatrix::zeros(2, 3)).divisors, ints(&[0, 0]));
        assert_eq!(check(&int(&[&[0, 0], &[0, -5]])).divisors, ints(&[5, 0]));
        assert_eq!(check(&int(&[&[6, 4, 2]])).divisors, ints(&[2]));
        assert_eq!(check(&int(&[&[6], &[10], &[15]])).divisors, ints(&[1]));
    }

    #[test]
    fn minor_gcd_examples() {
        let g = int(&[&[4, 6], &[2, 8]]);
        assert_eq!(minor_gcd_divisors(&g, 1).unwrap(), Integer::from(2));
        assert_eq!(minor_gcd_divisors(&g, 2).unwrap(), Integer::from(20));
        assert_eq!(minor_gcd_divisors(&IntMatrix::zeros(2, 2), 1).unwrap(), Integer::zero());
        assert!(matches!(minor_gcd_divisors(&g, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(minor_gcd_divisors(&g, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn sl_normalization_sets_det_v_to_one() {
        for g in [
            int(&[&[0, 1], &[1, 0]]),
            int(&[&[4, 6], &[2, 8]]),
            int(&[&[1, 2, 3], &[4, 5, 6]]),
        ] {
            let s = smith_normal_form_sl(&g);
            assert_eq!(s.v.determinant().unwrap(), Integer::one());
            assert_eq!(s.reconstruct(), g);
            assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(g.cols()));
            assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(g.rows()));
        }
    }

    fn assert_completion(v: &[i64]) {
        let v = ints(v);
        let s = complete_primitive_to_unimodular(&v).unwrap();
        assert_eq!(s.determinant().unwrap(), Integer::one());
        let mut e1 = vec![Integer::zero(); v.len()];
        e1[0] = Integer::one();
        assert_eq!(s.mul_vec(&v), e1);
    }

    #[test]
    fn completion_examples() {
        assert_eq!(
            complete_primitive_to_unimodular(&ints(&[1, 0, 0])).unwrap(),
            IntMatrix::identity(3)
        );
        assert_completion(&[2, 3]);
        assert_completion(&[0, 1]);
        assert_completion(&[-1, 0]);
        assert_completion(&[6, 10, 15]);
        assert_completion(&[0, 0, -1]);
        assert!(matches!(
            complete_primitive_to_unimodular(&ints(&[2, 4])),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(complete_primitive_to_unimodular(&ints(&[-1])).is_err());
        assert_completion(&[1]);
    }

    proptest! {
        #[test]
        fn completion_maps_to_e1(v in prop::collection::vec(-1000i64..1000, 2..6)) {
            let v = ints(&v);
            prop_assume!(is_primitive(&v));
            let s = complete_primitive_to_unimodular(&v).unwrap();
            prop_assert_eq!(s.determinant().unwrap(), Integer::one());
            let image = s.mul_vec(&v);
            prop_assert!(image[0].is_one() && image[1..].iter().all(Zero::is_zero));
        }

        #[test]
        fn divisors_match_minor_gcds(
            rows in 1usize..5, cols in 1usize..5,
            seed in prop::collection::vec(-30i64..30, 16)
        ) {
            let g = IntMatrix::from_fn(rows, cols, |i, j| Integer::from(seed[i * 4 + j]));
            let s = check(&g);
            let mut prefix = Integer::one();
            for k in 1..=rows.min(cols) {
                prefix *= &s.divisors[k - 1];
                prop_assert_eq!(&prefix, &minor_gcd_divisors(&g, k).unwrap());
            }
        }
    }
}
