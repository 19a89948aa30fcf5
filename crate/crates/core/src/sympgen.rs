//! Integral symplectic generators, words over them, and the transitive action
//! of `Sp(n, Z)` on primitive vectors.
//!
//! Plane indices are 0-based: plane `j` is spanned by `e_{j+1}` and
//! `f_{j+1}`, i.e. coordinates `j` and `n + j`.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{block_parts, gcd_all, is_primitive, is_symplectic, IntMatrix, IntVector, Integer};
use crate::snf::{complete_primitive_to_unimodular, gcd_rotation};

/// An element of `Sp(n, Z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpElement {
    n: usize,
    matrix: IntMatrix,
}

impl SpElement {
    /// Checks `gᵀ J g = J` exactly.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !is_symplectic(&matrix) {
            return Err(Error::InvalidGenerator(format!(
                "{}x{} matrix is not integral symplectic",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(SpElement {
            n: matrix.rows() / 2,
            matrix,
        })
    }

    pub fn identity(n: usize) -> Self {
        SpElement {
            n,
            matrix: IntMatrix::identity(2 * n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn mul(&self, other: &SpElement) -> SpElement {
        assert_eq!(self.n, other.n, "dimension mismatch");
        SpElement {
            n: self.n,
            matrix: &self.matrix * &other.matrix,
        }
    }

    /// `(A B; C D)⁻¹ = (Dᵀ −Bᵀ; −Cᵀ Aᵀ)` for symplectic matrices.
    pub fn inverse(&self) -> SpElement {
        if self.n == 0 {
            return self.clone();
        }
        let p = block_parts(&self.matrix).expect("2n x 2n");
        let n = self.n;
        let matrix = IntMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => p.delta[(j, i)].clone(),
            (true, false) => -p.beta[(j - n, i)].clone(),
            (false, true) => -p.gamma[(j, i - n)].clone(),
            (false, false) => p.alpha[(j - n, i - n)].clone(),
        });
        SpElement { n, matrix }
    }

    pub fn apply(&self, v: &[Integer]) -> IntVector {
        self.matrix.mul_vec(v)
    }

    /// Acts as `self` on planes `skip..` of an `outer_n`-plane space and as
    /// the identity on the first `skip` planes.
    pub fn shifted(&self, skip: usize, outer_n: usize) -> SpElement {
        assert_eq!(self.n + skip, outer_n, "dimension mismatch");
        let n = self.n;
        let outer = |k: usize| if k < n { k + skip } else { k + 2 * skip };
        let mut matrix = IntMatrix::identity(2 * outer_n);
        for i in 0..2 * n {
            for j in 0..2 * n {
                matrix[(outer(i), outer(j))] = self.matrix[(i, j)].clone();
            }
        }
        SpElement { n: outer_n, matrix }
    }
}

impl fmt::Debug for SpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpElement(n={}, {:?})", self.n, self.matrix)
    }
}

/// A labeled factor of an [`SpWord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `m ∈ SL(2, Z)` acting on one plane.
    Sl2Plane {
        plane: usize,
        m: [[Integer; 2]; 2],
    },
    /// `diag(s0, s0ᵀ⁻¹)` for unimodular `s0`.
    GlBlock {
        s0: IntMatrix,
    },
    /// `1 + Σ_{j>1} c_j (f_j ⊗ f_1* − e_1 ⊗ e_j*)`, coefficients `c_2..c_n`.
    TransvectionRow {
        coeffs: Vec<Integer>,
    },
    /// `1 − c_1 e_1 ⊗ f_1* − Σ_{j>1} c_j (e_j ⊗ f_1* + e_1 ⊗ f_j*)`.
    TransvectionCol {
        coeffs: Vec<Integer>,
    },
    /// `e ↦ −f, f ↦ e` on the listed planes (the block of `J`).
    WeylSwap {
        planes: Vec<usize>,
    },
    WeylSwapInverse {
        planes: Vec<usize>,
    },
    /// `inner` acting on planes `skip..`, identity on the first `skip`.
    Shifted {
        skip: usize,
        inner: Box<Generator>,
    },
}

impl Generator {
    /// The matrix of this generator on `2n` coordinates, checked symplectic.
    pub fn element(&self, n: usize) -> Result<SpElement> {
        match self {
            Generator::Shifted { skip, inner } => {
                if *skip > n {
                    return Err(Error::InvalidArgument(format!("shift {skip} exceeds n = {n}")));
                }
                Ok(inner.element(n - skip)?.shifted(*skip, n))
            }
            _ => SpElement::new(self.raw_matrix(n)?),
        }
    }

    fn raw_matrix(&self, n: usize) -> Result<IntMatrix> {
        let mut g = IntMatrix::identity(2 * n);
        match self {
            Generator::Sl2Plane { plane, m } => {
                let j = *plane;
                if j >= n {
                    return Err(Error::InvalidArgument(format!("plane {j} out of range for n = {n}")));
                }
                if &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] != Integer::one() {
                    return Err(Error::InvalidGenerator("plane matrix must have determinant 1".into()));
                }
                g[(j, j)] = m[0][0].clone();
                g[(j, n + j)] = m[0][1].clone();
                g[(n + j, j)] = m[1][0].clone();
                g[(n + j, n + j)] = m[1][1].clone();
            }
            Generator::GlBlock { s0 } => {
                if s0.rows() != n || s0.cols() != n {
                    return Err(Error::InvalidDimension(format!(
                        "block must be {n}x{n}, got {}x{}",
                        s0.rows(),
                        s0.cols()
                    )));
                }
                let inv_t = s0
                    .inverse_unimodular()
                    .map_err(|_| Error::InvalidGenerator("block is not unimodular".into()))?
                    .transpose();
                for i in 0..n {
                    for j in 0..n {
                        g[(i, j)] = s0[(i, j)].clone();
                        g[(n + i, n + j)] = inv_t[(i, j)].clone();
                    }
                }
            }
            Generator::TransvectionRow { coeffs } => {
                if n == 0 || coeffs.len() != n - 1 {
                    return Err(Error::InvalidArgument(format!(
                        "row transvection on n = {n} needs {} coefficients, got {}",
                        n.saturating_sub(1),
                        coeffs.len()
                    )));
                }
                for (k, c) in coeffs.iter().enumerate() {
                    let j = k + 1;
                    g[(n + j, n)] += c;
                    g[(0, j)] -= c;
                }
            }
            Generator::TransvectionCol { coeffs } => {
                if coeffs.len() != n {
                    return Err(Error::InvalidArgument(format!(
                        "column transvection on n = {n} needs {n} coefficients, got {}",
                        coeffs.len()
                    )));
                }
                if n > 0 {
                    g[(0, n)] -= &coeffs[0];
                }
                for (j, c) in coeffs.iter().enumerate().skip(1) {
                    g[(j, n)] -= c;
                    g[(0, n + j)] -= c;
                }
            }
            Generator::WeylSwap { planes } | Generator::WeylSwapInverse { planes } => {
                let sign = if matches!(self, Generator::WeylSwap { .. }) {
                    1
                } else {
                    -1
                };
                for &j in planes {
                    if j >= n {
                        return Err(Error::InvalidArgument(format!("plane {j} out of range for n = {n}")));
                    }
                    g[(j, j)] = Integer::zero();
                    g[(n + j, n + j)] = Integer::zero();
                    g[(j, n + j)] = Integer::from(sign);
                    g[(n + j, j)] = Integer::from(-sign);
                }
            }
            Generator::Shifted { .. } => unreachable!("handled by element()"),
        }
        Ok(g)
    }

    pub fn inverse(&self) -> Generator {
        match self {
            Generator::Sl2Plane { plane, m } => Generator::Sl2Plane {
                plane: *plane,
                m: [[m[1][1].clone(), -m[0][1].clone()], [-m[1][0].clone(), m[0][0].clone()]],
            },
            Generator::GlBlock { s0 } => Generator::GlBlock {
                s0: s0.inverse_unimodular().expect("validated at construction"),
            },
            Generator::TransvectionRow { coeffs } => Generator::TransvectionRow {
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
            Generator::TransvectionCol { coeffs } => Generator::TransvectionCol {
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
            Generator::WeylSwap { planes } => Generator::WeylSwapInverse { planes: planes.clone() },
            Generator::WeylSwapInverse { planes } => Generator::WeylSwap { planes: planes.clone() },
            Generator::Shifted { skip, inner } => Generator::Shifted {
                skip: *skip,
                inner: Box::new(inner.inverse()),
            },
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Labels use 1-based plane numbers.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sl2Plane { plane, m } => write!(
                f,
                "sl2[{}]([{},{}],[{},{}])",
                plane + 1,
                m[0][0],
                m[0][1],
                m[1][0],
                m[1][1]
            ),
            Generator::GlBlock { s0 } => {
                let rows: Vec<String> = s0.to_rows().iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "gl({})", rows.join(","))
            }
            Generator::TransvectionRow { coeffs } => write!(f, "trow({})", join(coeffs)),
            Generator::TransvectionCol { coeffs } => write!(f, "tcol({})", join(coeffs)),
            Generator::WeylSwap { planes } => {
                let p: Vec<usize> = planes.iter().map(|j| j + 1).collect();
                write!(f, "weyl({})", join(&p))
            }
            Generator::WeylSwapInverse { planes } => {
                let p: Vec<usize> = planes.iter().map(|j| j + 1).collect();
                write!(f, "weyl^-1({})", join(&p))
            }
            Generator::Shifted { skip, inner } => write!(f, "shift{skip}:{inner}"),
        }
    }
}

/// A product of labeled generators with its value cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpWord {
    factors: Vec<Generator>,
    product: SpElement,
}

impl SpWord {
    pub fn identity(n: usize) -> Self {
        SpWord {
            factors: Vec::new(),
            product: SpElement::identity(n),
        }
    }

    pub fn from_generator(n: usize, generator: Generator) -> Result<Self> {
        let product = generator.element(n)?;
        Ok(SpWord {
            factors: vec![generator],
            product,
        })
    }

    pub fn n(&self) -> usize {
        self.product.n()
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn product(&self) -> &SpElement {
        &self.product
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.product.matrix()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `generator · self`
    pub fn prepend(&mut self, generator: Generator) -> Result<()> {
        let g = generator.element(self.n())?;
        self.product = g.mul(&self.product);
        self.factors.insert(0, generator);
        Ok(())
    }

    /// `self · generator`
    pub fn append(&mut self, generator: Generator) -> Result<()> {
        let g = generator.element(self.n())?;
        self.product = self.product.mul(&g);
        self.factors.push(generator);
        Ok(())
    }

    /// `self · other`
    pub fn then(&self, other: &SpWord) -> SpWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        SpWord {
            factors,
            product: self.product.mul(&other.product),
        }
    }

    pub fn inverse(&self) -> SpWord {
        SpWord {
            factors: self.factors.iter().rev().map(Generator::inverse).collect(),
            product: self.product.inverse(),
        }
    }

    /// Embeds into `outer_n` planes, acting on the last `self.n()` of them.
    pub fn shifted(&self, skip: usize, outer_n: usize) -> SpWord {
        SpWord {
            factors: self
                .factors
                .iter()
                .map(|g| Generator::Shifted {
                    skip,
                    inner: Box::new(g.clone()),
                })
                .collect(),
            product: self.product.shifted(skip, outer_n),
        }
    }

    /// Multiplies the factors out again; equals [`SpWord::product`].
    pub fn recompute(&self) -> Result<SpElement> {
        self.factors.iter().try_fold(SpElement::identity(self.n()), |acc, g| {
            Ok(acc.mul(&g.element(self.n())?))
        })
    }
}

fn plane_matrix(m: &IntMatrix) -> Result<[[Integer; 2]; 2]> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::InvalidDimension("plane matrix must be 2x2".into()));
    }
    Ok([
        [m[(0, 0)].clone(), m[(0, 1)].clone()],
        [m[(1, 0)].clone(), m[(1, 1)].clone()],
    ])
}

/// `m ∈ SL(2, Z)` acting on plane `j`.
pub fn embed_sl2_plane(n: usize, j: usize, m: &IntMatrix) -> Result<SpElement> {
    Generator::Sl2Plane {
        plane: j,
        m: plane_matrix(m)?,
    }
    .element(n)
}

/// `diag(s0, s0ᵀ⁻¹)`.
pub fn embed_gl_block(s0: &IntMatrix) -> Result<SpElement> {
    Generator::GlBlock { s0: s0.clone() }.element(s0.rows())
}

/// The row-clearing transvection; `coeffs` are `c_2, ..., c_n`.
pub fn transvection_row(n: usize, coeffs: &[Integer]) -> Result<SpElement> {
    Generator::TransvectionRow {
        coeffs: coeffs.to_vec(),
    }
    .element(n)
}

/// The column-clearing transvection; `coeffs` are `c_1, ..., c_n`.
pub fn transvection_col(n: usize, coeffs: &[Integer]) -> Result<SpElement> {
    Generator::TransvectionCol {
        coeffs: coeffs.to_vec(),
    }
    .element(n)
}

/// Acts as `[[0, 1], [-1, 0]]` on each listed plane; all planes give `J`.
pub fn weyl_swap(n: usize, planes: &[usize]) -> Result<SpElement> {
    Generator::WeylSwap {
        planes: planes.to_vec(),
    }
    .element(n)
}

fn check_primitive_even(v: &[Integer]) -> Result<usize> {
    if v.is_empty() || !v.len().is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!("vector length {} is not 2n", v.len())));
    }
    if !is_primitive(v) {
        return Err(Error::PreconditionViolation(format!(
            "vector with gcd {} is not primitive",
            gcd_all(v)
        )));
    }
    Ok(v.len() / 2)
}

/// First phase of [`reduce_primitive`]: per-plane `SL(2, Z)` rotations that
/// zero the `f` coordinates. Returns the word and the reduced vector, whose
/// `e` part is primitive in `Z^n` with nonnegative entries.
pub fn plane_phase(v: &[Integer]) -> Result<(SpWord, IntVector)> {
    let n = check_primitive_even(v)?;
    let mut word = SpWord::identity(n);
    let mut w = v.to_vec();
    for j in 0..n {
        let Some(m) = gcd_rotation(&w[j], &w[n + j]) else {
            continue;
        };
        let (x, y) = (w[j].clone(), w[n + j].clone());
        w[j] = &m[0][0] * &x + &m[0][1] * &y;
        w[n + j] = &m[1][0] * &x + &m[1][1] * &y;
        word.prepend(Generator::Sl2Plane { plane: j, m })?;
    }
    Ok((word, w))
}

/// Returns `σ ∈ Sp(n, Z)` with `σ·v = e_1` for primitive `v ∈ Z^{2n}`.
///
/// Planes are visited in ascending order; the `e` part left over is then
/// moved to `e_1` by a block `diag(s0, s0ᵀ⁻¹)` with `s0 ∈ SL(n, Z)`.
pub fn reduce_primitive(v: &[Integer]) -> Result<SpWord> {
    let (mut word, w) = plane_phase(v)?;
    let n = word.n();
    let s0 = complete_primitive_to_unimodular(&w[..n])?;
    if s0 != IntMatrix::identity(n) {
        word.prepend(Generator::GlBlock { s0 })?;
    }
    Ok(word)
}

fn small(rng: &mut ChaCha8Rng) -> Integer {
    Integer::from(rng.gen_range(-5i64..=5))
}

fn random_generator(n: usize, rng: &mut ChaCha8Rng) -> Generator {
    match rng.gen_range(0..5) {
        0 => {
            let c = small(rng);
            let (one, zero) = (Integer::one(), Integer::zero());
            let m = match rng.gen_range(0..3) {
                0 => [[one.clone(), c], [zero, one]],
                1 => [[one.clone(), zero], [c, one]],
                _ => [[zero.clone(), one.clone()], [-one, zero]],
            };
            Generator::Sl2Plane {
                plane: rng.gen_range(0..n),
                m,
            }
        }
        1 => {
            let mut s0 = IntMatrix::identity(n);
            if n == 1 {
                s0[(0, 0)] = Integer::from(-1);
            } else {
                let i = rng.gen_range(0..n);
                let k = (i + rng.gen_range(1..n)) % n;
                s0[(i, k)] = small(rng);
            }
            Generator::GlBlock { s0 }
        }
        2 => Generator::TransvectionRow {
            coeffs: (1..n).map(|_| small(rng)).collect(),
        },
        3 => Generator::TransvectionCol {
            coeffs: (0..n).map(|_| small(rng)).collect(),
        },
        _ => Generator::WeylSwap {
            planes: (0..n).filter(|_| rng.gen_bool(0.5)).collect(),
        },
    }
}

/// A deterministic pseudo-random word of `length` generators in `Sp(n, Z)`.
///
/// Families are drawn uniformly; coefficients lie in `[-5, 5]`.
pub fn random_sp(n: usize, length: usize, seed: u64) -> SpWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_sp_with(n, length, &mut rng)
}

pub(crate) fn random_sp_with(n: usize, length: usize, rng: &mut ChaCha8Rng) -> SpWord {
    let mut word = SpWord::identity(n);
    if n == 0 {
        return word;
    }
    for _ in 0..length {
        word.append(random_generator(n, rng))
            .expect("generators are valid by construction");
    }
    word
}

/// Whether `v` has been reduced to `e_1`.
pub fn is_first_basis_vector(v: &[Integer]) -> bool {
    !v.is_empty() && v[0].is_one() && v[1..].iter().all(Zero::is_zero)
}

pub(crate) fn unit_vector(len: usize, k: usize) -> IntVector {
    let mut v = vec![Integer::zero(); len];
    v[k] = Integer::one();
    v
}
