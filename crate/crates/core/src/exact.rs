//! Exact scalars, dense matrices and the standard symplectic form.
//!
//! Coordinates on `Z^{2n}` are ordered `e_1, ..., e_n, f_1, ..., f_n` and the
//! symplectic form is `ω(x, y) = xᵀ J y` with
//!
//! ```text
//! J = (  0   1_n )
//!     ( -1_n  0  )
//! ```
//!
//! so that `ω = Σ e_i* ∧ f_i*`. Mathematical text uses 1-based indices; the
//! code is 0-based throughout: `e_j` lives at index `j - 1` and `f_j` at
//! index `n + j - 1`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Exact rational, always reduced with a positive denominator.
pub type Rational = BigRational;
/// Integer column vector.
pub type IntVector = Vec<Integer>;
pub type IntMatrix = Matrix<Integer>;
pub type RatMatrix = Matrix<Rational>;

/// Ring operations needed by the generic matrix code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&self, other: &Self) -> Self {
                self + other
            }
            fn sub_ref(&self, other: &Self) -> Self {
                self - other
            }
            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
        }
    };
}

impl_scalar!(BigInt);
impl_scalar!(BigRational);

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidDimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidDimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    /// The submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Index of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c * row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &T) {
        for j in 0..self.cols {
            let delta = self[(source, j)].mul_ref(c);
            let cell = &mut self[(target, j)];
            *cell = cell.add_ref(&delta);
        }
    }

    /// `col[target] += c * col[source]`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, c: &T) {
        for i in 0..self.rows {
            let delta = self[(i, source)].mul_ref(c);
            let cell = &mut self[(i, target)];
            *cell = cell.add_ref(&delta);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let cell = &mut self[(i, j)];
            *cell = -cell.clone();
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let cell = &mut self[(i, j)];
            *cell = -cell.clone();
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cell = &mut out.data[i * rhs.cols + j];
                        *cell = cell.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}[{}]", if i == 0 { "" } else { ", " }, cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Integer> {
        if !self.is_square() {
            return Err(Error::InvalidDimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Integer::one());
        }
        let mut m = self.clone();
        let mut sign = Integer::one();
        let mut prev = Integer::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Integer::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        self.to_rational()
            .inverse()
            .and_then(|inv| inv.to_integer())
            .ok_or_else(|| Error::PreconditionViolation("matrix is not unimodular".into()))
    }
}

impl RatMatrix {
    pub fn from_i64_pairs(rows: &[&[(i64, i64)]]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let mut row = Vec::with_capacity(r.len());
            for &(p, q) in r.iter() {
                if q == 0 {
                    return Err(Error::InvalidArgument("zero denominator".into()));
                }
                row.push(Rational::new(p.into(), q.into()));
            }
            out.push(row);
        }
        Self::from_rows(out)
    }

    /// `Some` when every entry is an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.data
            .iter()
            .all(|x| x.is_integer())
            .then(|| self.map(|x| x.to_integer()))
    }

    /// Least positive integer `m` with `m·self` integral.
    pub fn denominator_lcm(&self) -> Integer {
        self.data.iter().fold(Integer::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Gauss-Jordan inverse; `None` for singular or non-square input.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a[(i, k)].is_zero())?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pivot_inv = a[(k, k)].recip();
            for j in 0..n {
                a[(k, j)] = &a[(k, j)] * &pivot_inv;
                inv[(k, j)] = &inv[(k, j)] * &pivot_inv;
            }
            for i in 0..n {
                if i != k && !a[(i, k)].is_zero() {
                    let factor = -a[(i, k)].clone();
                    a.add_row_multiple(i, k, &factor);
                    inv.add_row_multiple(i, k, &factor);
                }
            }
        }
        Some(inv)
    }
}

/// The four `n×n` blocks of a `2n×2n` matrix `(α β; γ δ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockParts<T: fmt::Display> {
    pub alpha: Matrix<T>,
    pub beta: Matrix<T>,
    pub gamma: Matrix<T>,
    pub delta: Matrix<T>,
}

impl<T: Scalar> BlockParts<T> {
    pub fn assemble(&self) -> Matrix<T> {
        let n = self.alpha.rows();
        Matrix::from_fn(2 * n, 2 * n, |i, j| {
            let block = match (i < n, j < n) {
                (true, true) => &self.alpha,
                (true, false) => &self.beta,
                (false, true) => &self.gamma,
                (false, false) => &self.delta,
            };
            block[(i % n, j % n)].clone()
        })
    }
}

fn half_dimension<T: Scalar>(g: &Matrix<T>) -> Result<usize> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
        return Err(Error::InvalidDimension(format!(
            "expected a nonempty 2n x 2n matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    Ok(g.rows() / 2)
}

/// The `2n×2n` standard symplectic form `J`.
pub fn standard_form_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::InvalidDimension("n must be at least 1".into()));
    }
    Ok(standard_form(n))
}

pub(crate) fn standard_form<T: Scalar>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            T::one()
        } else if i >= n && j + n == i {
            -T::one()
        } else {
            T::zero()
        }
    })
}

/// `gᵀ J g`.
pub fn form_pullback<T: Scalar>(g: &Matrix<T>) -> Result<Matrix<T>> {
    let n = half_dimension(g)?;
    let j = standard_form::<T>(n);
    Ok(&(&g.transpose() * &j) * g)
}

/// `gᵀ J g − J`; zero exactly when `g` is symplectic.
pub fn symplectic_defect<T: Scalar>(g: &Matrix<T>) -> Result<Matrix<T>> {
    let n = half_dimension(g)?;
    Ok(form_pullback(g)?.sub(&standard_form(n)))
}

/// Malformed shapes are simply not symplectic.
pub fn is_symplectic<T: Scalar>(g: &Matrix<T>) -> bool {
    symplectic_defect(g).is_ok_and(|d| d.is_zero())
}

/// Returns `λ²` when `gᵀ J g = λ² J` with `λ² > 0`, i.e. when `g` lies in
/// `Mp(n, Z)`.
///
/// The constant is not required to be a perfect square.
pub fn mp_scale(g: &IntMatrix) -> Result<Integer> {
    let n = half_dimension(g)?;
    let pullback = form_pullback(g)?;
    let c = pullback[(0, n)].clone();
    if pullback != standard_form::<Integer>(n).scale(&c) {
        return Err(Error::NotInMp("gᵀJg is not proportional to J".into()));
    }
    if !c.is_positive() {
        return Err(Error::NotInMp(format!("proportionality constant {c} is not positive")));
    }
    Ok(c)
}

/// Gcd of all entries; zero for the zero matrix.
pub fn content(g: &IntMatrix) -> Integer {
    gcd_all(g.entries())
}

pub(crate) fn gcd_all(xs: &[Integer]) -> Integer {
    xs.iter().fold(Integer::zero(), |acc, x| acc.gcd(x))
}

pub fn block_parts<T: Scalar>(g: &Matrix<T>) -> Result<BlockParts<T>> {
    let n = half_dimension(g)?;
    let lo: Vec<usize> = (0..n).collect();
    let hi: Vec<usize> = (n..2 * n).collect();
    Ok(BlockParts {
        alpha: g.select(&lo, &lo),
        beta: g.select(&lo, &hi),
        gamma: g.select(&hi, &lo),
        delta: g.select(&hi, &hi),
    })
}

/// `ω(x, y) = xᵀ J y = Σ (x_{e_i} y_{f_i} − x_{f_i} y_{e_i})` on `Z^{2n}`.
pub fn omega<T: Scalar>(x: &[T], y: &[T]) -> T {
    assert!(
        x.len() == y.len() && x.len().is_multiple_of(2),
        "vectors must share an even length"
    );
    let n = x.len() / 2;
    (0..n).fold(T::zero(), |acc, i| {
        acc.add_ref(&x[i].mul_ref(&y[n + i])).sub_ref(&x[n + i].mul_ref(&y[i]))
    })
}

/// Nonzero with coprime entries.
pub fn is_primitive(v: &[Integer]) -> bool {
    gcd_all(v).is_one()
}

/// Extended Euclid: `(g, a, b)` with `a·x + b·y = g = gcd(x, y) ≥ 0`.
pub fn ext_gcd(x: &Integer, y: &Integer) -> (Integer, Integer, Integer) {
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut s0, mut s1) = (Integer::one(), Integer::zero());
    let (mut t0, mut t1) = (Integer::zero(), Integer::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn rat(rows: &[&[(i64, i64)]]) -> RatMatrix {
        RatMatrix::from_i64_pairs(rows).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn standard_form_small_cases() {
        assert_eq!(standard_form_matrix(1).unwrap(), int(&[&[0, 1], &[-1, 0]]));
        assert_eq!(
            standard_form_matrix(2).unwrap(),
            int(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]])
        );
        let j = standard_form_matrix(3).unwrap();
        assert_eq!(&j * &j, -&IntMatrix::identity(6));
        assert!(matches!(standard_form_matrix(0), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn defect_examples() {
        assert!(symplectic_defect(&RatMatrix::identity(4)).unwrap().is_zero());
        let j = standard_form_matrix(1).unwrap().to_rational();
        assert!(symplectic_defect(&j).unwrap().is_zero());
        let g = rat(&[&[(2, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(symplectic_defect(&g).unwrap(), j);
        assert!(matches!(
            symplectic_defect(&RatMatrix::identity(3)),
            Err(Error::InvalidDimension(_))
        ));
        assert!(matches!(
            symplectic_defect(&RatMatrix::zeros(2, 4)),
            Err(Error::InvalidDimension(_))
        ));
    }

    #[test]
    fn is_symplectic_examples() {
        assert!(is_symplectic(&rat(&[&[(2, 1), (0, 1)], &[(0, 1), (1, 2)]])));
        assert!(!is_symplectic(&rat(&[&[(2, 1), (0, 1)], &[(0, 1), (2, 1)]])));
        assert!(is_symplectic(&rat(&[&[(3, 2), (5, 1)], &[(1, 2), (7, 3)]])));
        assert!(!is_symplectic(&RatMatrix::identity(3)));
    }

    #[test]
    fn mp_scale_examples() {
        let three = IntMatrix::identity(4).scale(&Integer::from(3));
        assert_eq!(mp_scale(&three).unwrap(), Integer::from(9));
        assert_eq!(mp_scale(&int(&[&[1, 0], &[0, 4]])).unwrap(), Integer::from(4));
        assert!(matches!(mp_scale(&int(&[&[1, 0], &[0, -4]])), Err(Error::NotInMp(_))));
        assert!(matches!(mp_scale(&IntMatrix::zeros(2, 2)), Err(Error::NotInMp(_))));
        let skew = int(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(matches!(mp_scale(&skew), Err(Error::NotInMp(_))));
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&int(&[&[2, 4], &[6, 8]])), Integer::from(2));
        assert_eq!(content(&IntMatrix::identity(4)), Integer::one());
        assert_eq!(content(&IntMatrix::zeros(3, 2)), Integer::zero());
        assert_eq!(content(&int(&[&[-6, 9]])), Integer::from(3));
    }

    #[test]
    fn block_parts_examples() {
        let j = standard_form_matrix(1).unwrap();
        let parts = block_parts(&j).unwrap();
        assert_eq!(parts.alpha, int(&[&[0]]));
        assert_eq!(parts.beta, int(&[&[1]]));
        assert_eq!(parts.gamma, int(&[&[-1]]));
        assert_eq!(parts.delta, int(&[&[0]]));

        let id = block_parts(&IntMatrix::identity(4)).unwrap();
        assert_eq!(id.alpha, IntMatrix::identity(2));
        assert_eq!(id.delta, IntMatrix::identity(2));
        assert!(id.beta.is_zero() && id.gamma.is_zero());

        let g = RatMatrix::diagonal(&[
            Rational::from_integer(2.into()),
            Rational::from_integer(3.into()),
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 3.into()),
        ]);
        let p = block_parts(&g).unwrap();
        assert_eq!(
            p.alpha,
            RatMatrix::diagonal(&[Rational::from_integer(2.into()), Rational::from_integer(3.into())])
        );
        assert_eq!(
            p.delta,
            RatMatrix::diagonal(&[Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())])
        );
        assert!(p.beta.is_zero() && p.gamma.is_zero());
        assert_eq!(p.assemble(), g);
        assert!(block_parts(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn omega_matches_form() {
        let x = ints(&[1, 2, 3, 4]);
        let y = ints(&[-1, 5, 2, 0]);
        let j = standard_form_matrix(2).unwrap();
        let jy = j.mul_vec(&y);
        let direct: Integer = x.iter().zip(&jy).map(|(a, b)| a * b).sum();
        assert_eq!(omega(&x, &y), direct);
        assert_eq!(omega(&y, &x), -direct);
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&ints(&[2, 3])));
        assert!(!is_primitive(&ints(&[2, 4])));
        assert!(is_primitive(&ints(&[0, 0, 0, 1])));
        assert!(!is_primitive(&ints(&[0, 0])));
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = Rational::new(Integer::from(4), Integer::from(-6));
        assert_eq!(x.numer(), &Integer::from(-2));
        assert_eq!(x.denom(), &Integer::from(3));
    }

    #[test]
    fn determinant_and_inverse() {
        assert_eq!(int(&[&[4, 6], &[2, 8]]).determinant().unwrap(), Integer::from(20));
        assert_eq!(int(&[&[0, 1], &[1, 0]]).determinant().unwrap(), Integer::from(-1));
        let m = int(&[&[1, 2, 0], &[0, 1, 3], &[2, 4, 1]]);
        assert_eq!(m.determinant().unwrap(), Integer::from(1));
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(&m * &inv, IntMatrix::identity(3));
        assert!(int(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_err());
    }

    #[test]
    fn ext_gcd_signs() {
        for (x, y) in [(2, 3), (-4, 6), (0, -5), (-7, 0), (12, 18), (0, 0)] {
            let (x, y) = (Integer::from(x), Integer::from(y));
            let (g, a, b) = ext_gcd(&x, &y);
            assert!(!g.is_negative());
            assert_eq!(&a * &x + &b * &y, g);
            assert_eq!(g, x.gcd(&y));
        }
    }
}
