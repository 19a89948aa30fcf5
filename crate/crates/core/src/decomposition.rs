//! Symplectic Smith normal form.
//!
//! [`symp_smith_integral`] handles integral matrices `g` with `gᵀJg = λ²J`
//! (the set `Mp(n, Z)`) by an induction on `n`. Each level
//!
//! 1. moves a primitive vector with primitive image to `e_1` on both sides,
//!    so that `g e_1 = e_1`;
//! 2. clears the first row of the `α` block with a row transvection;
//! 3. clears the first row of the `β` block with a column transvection,
//!    after which `g f_1 = λ² f_1` is forced by `g/λ` being symplectic;
//! 4. recurses on the restriction to `e_2..e_n, f_2..f_n`, which `g`
//!    preserves.
//!
//! [`symp_smith`] reduces a rational symplectic `g` to that case through its
//! denominator scale `m`: `m·g` has content 1 and `λ² = m²`, and the divisors
//! `a_j` of `m·g` turn into `d_i = m / a_{n+1-i}`.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    content, is_primitive, is_symplectic, mp_scale, omega, IntMatrix, IntVector, Integer, RatMatrix, Rational,
};
use crate::snf::smith_normal_form;
use crate::sympgen::{is_first_basis_vector, reduce_primitive, unit_vector, Generator, SpElement, SpWord};

/// `g = σ · diag(a_1, ..., a_{2n}) · σ'` for `g ∈ Mp(n, Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralSympSmith {
    pub sigma: SpWord,
    /// `a_1 | ... | a_n`, `a_n | a_{2n}` and `a_j · a_{n+j} = λ²`.
    pub a: Vec<Integer>,
    pub sigma_prime: SpWord,
    pub lambda_sq: Integer,
}

impl IntegralSympSmith {
    pub fn n(&self) -> usize {
        self.a.len() / 2
    }

    pub fn reconstruct(&self) -> IntMatrix {
        &(self.sigma.matrix() * &IntMatrix::diagonal(&self.a)) * self.sigma_prime.matrix()
    }

    /// Checks the divisor conditions (not the reconstruction).
    pub fn check_divisors(&self) -> Result<()> {
        let n = self.n();
        if self.a.iter().any(|x| !x.is_positive()) {
            return Err(Error::Internal(format!("nonpositive divisor in {:?}", self.a)));
        }
        for j in 0..n {
            if &self.a[j] * &self.a[n + j] != self.lambda_sq {
                return Err(Error::Internal(format!(
                    "a_{} * a_{} != λ² = {}",
                    j + 1,
                    n + j + 1,
                    self.lambda_sq
                )));
            }
        }
        for j in 1..n {
            if !self.a[j].is_multiple_of(&self.a[j - 1]) {
                return Err(Error::Internal(format!("a_{} does not divide a_{}", j, j + 1)));
            }
        }
        if n > 0 && !self.a[2 * n - 1].is_multiple_of(&self.a[n - 1]) {
            return Err(Error::Internal("a_n does not divide a_2n".into()));
        }
        Ok(())
    }
}

/// Least positive `m` with `m·g` integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorScale {
    pub m: Integer,
}

impl DenominatorScale {
    pub fn of(g: &RatMatrix) -> Self {
        DenominatorScale { m: g.denominator_lcm() }
    }

    /// `m·g`, which has content 1 for nonzero `g` by minimality of `m`.
    pub fn apply(&self, g: &RatMatrix) -> IntMatrix {
        g.scale(&Rational::from_integer(self.m.clone()))
            .to_integer()
            .expect("m clears every denominator")
    }
}

/// `g = σ · diag(d, d⁻¹) · σ'` with `σ, σ' ∈ Sp(n, Z)` and `d_1 | ... | d_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SympSmithDecomposition {
    pub sigma: SpWord,
    pub d: Vec<Integer>,
    pub sigma_prime: SpWord,
    pub scale: DenominatorScale,
}

impl SympSmithDecomposition {
    pub fn reconstruct(&self) -> RatMatrix {
        let middle = torus_matrix(&self.d).expect("d is positive");
        &(&self.sigma.matrix().to_rational() * &middle) * &self.sigma_prime.matrix().to_rational()
    }

    pub fn verify(&self, g: &RatMatrix) -> VerificationReport {
        verify_decomposition(g, &ClaimedDecomposition::from(self))
    }
}

/// `diag(d_1, ..., d_n, 1/d_1, ..., 1/d_n)`.
pub fn torus_matrix(d: &[Integer]) -> Result<RatMatrix> {
    if d.iter().any(Zero::is_zero) {
        return Err(Error::InvalidArgument("zero entry in d".into()));
    }
    let entries: Vec<Rational> = d
        .iter()
        .map(|x| Rational::from_integer(x.clone()))
        .chain(d.iter().map(|x| Rational::new(Integer::one(), x.clone())))
        .collect();
    Ok(RatMatrix::diagonal(&entries))
}

fn require_normalized_mp(g: &IntMatrix) -> Result<Integer> {
    let lambda_sq = mp_scale(g)?;
    let c = content(g);
    if !c.is_one() {
        return Err(Error::PreconditionViolation(format!("content is {c}, expected 1")));
    }
    Ok(lambda_sq)
}

/// A primitive `v` with `g·v` primitive, for `g ∈ Mp(n, Z)` of content 1.
///
/// Basis vectors are tried first, keeping the one whose image is smallest.
/// Otherwise, with `g = u·diag(a)·v_snf` and `a_1 = 1`, the vector
/// `v = v_snf⁻¹ e_1` gives `g·v = u e_1`; both are columns of unimodular
/// matrices.
pub fn find_good_primitive(g: &IntMatrix) -> Result<IntVector> {
    require_normalized_mp(g)?;
    let best_column = (0..g.cols())
        .map(|k| (k, g.column(k)))
        .filter(|(_, col)| is_primitive(col))
        .min_by_key(|(_, col)| col.iter().map(|x| x.bits()).max().unwrap_or(0));
    if let Some((k, _)) = best_column {
        return Ok(unit_vector(g.cols(), k));
    }
    snf_good_primitive(g)
}

/// The Smith-form construction of [`find_good_primitive`] on its own.
pub fn snf_good_primitive(g: &IntMatrix) -> Result<IntVector> {
    require_normalized_mp(g)?;
    let snf = smith_normal_form(g);
    if !snf.divisors[0].is_one() {
        return Err(Error::Internal("first divisor of a content-1 matrix is not 1".into()));
    }
    Ok(snf.v_inv.column(0))
}

/// Returns `(σ, σ', σ·g·σ')` with `σ g σ' e_1 = e_1`.
pub fn step1_fix_e1(g: &IntMatrix) -> Result<(SpWord, SpWord, IntMatrix)> {
    let v = find_good_primitive(g)?;
    let gv = g.mul_vec(&v);
    if !is_primitive(&gv) {
        return Err(Error::Internal("g·v is not primitive".into()));
    }
    let sigma = reduce_primitive(&gv)?;
    // τ v = e_1, so σ' = τ⁻¹ sends e_1 to v.
    let sigma_prime = reduce_primitive(&v)?.inverse();
    let reduced = &(sigma.matrix() * g) * sigma_prime.matrix();
    if !is_first_basis_vector(&reduced.column(0)) {
        return Err(Error::Internal("step 1 did not fix e_1".into()));
    }
    Ok((sigma, sigma_prime, reduced))
}

fn half(g: &IntMatrix) -> usize {
    g.rows() / 2
}

fn require_fixes_e1(g: &IntMatrix) -> Result<()> {
    if !is_first_basis_vector(&g.column(0)) {
        return Err(Error::PreconditionViolation("g e_1 != e_1".into()));
    }
    Ok(())
}

/// Returns `(σ', g·σ')` where the first row of `α` in `g·σ'` is
/// `(1, 0, ..., 0)`, i.e. `ω(g'e_j, f_1) = 0` for `j > 1`.
pub fn step2_clear_alpha_row(g: &IntMatrix) -> Result<(SpWord, IntMatrix)> {
    mp_scale(g)?;
    require_fixes_e1(g)?;
    let n = half(g);
    let coeffs: Vec<Integer> = g.row(0)[1..n].to_vec();
    if coeffs.iter().all(Zero::is_zero) {
        return Ok((SpWord::identity(n), g.clone()));
    }
    let sigma_prime = SpWord::from_generator(n, Generator::TransvectionRow { coeffs })?;
    let reduced = g * sigma_prime.matrix();
    let f1 = unit_vector(2 * n, n);
    for j in 1..n {
        if !omega(&reduced.column(j), &f1).is_zero() {
            return Err(Error::Internal(format!("ω(g'e_{}, f_1) != 0 after step 2", j + 1)));
        }
    }
    Ok((sigma_prime, reduced))
}

/// Returns `(σ', g·σ')` with `g' f_1 = λ² f_1`, clearing the first row of `β`.
pub fn step3_fix_f1(g: &IntMatrix) -> Result<(SpWord, IntMatrix)> {
    let lambda_sq = mp_scale(g)?;
    require_fixes_e1(g)?;
    let n = half(g);
    if g.row(0)[1..n].iter().any(|x| !x.is_zero()) {
        return Err(Error::PreconditionViolation(
            "first row of α is not (1, 0, ..., 0)".into(),
        ));
    }
    let coeffs: Vec<Integer> = g.row(0)[n..].to_vec();
    let (sigma_prime, reduced) = if coeffs.iter().all(Zero::is_zero) {
        (SpWord::identity(n), g.clone())
    } else {
        let s = SpWord::from_generator(n, Generator::TransvectionCol { coeffs })?;
        let r = g * s.matrix();
        (s, r)
    };
    let f1 = unit_vector(2 * n, n);
    let mut expected = vec![Integer::zero(); 2 * n];
    expected[n] = lambda_sq;
    if reduced.column(n) != expected {
        return Err(Error::Internal("g'f_1 != λ² f_1 after step 3".into()));
    }
    let e1 = unit_vector(2 * n, 0);
    for j in 0..n {
        let want = if j == 0 { Integer::one() } else { Integer::zero() };
        if omega(&reduced.column(j), &f1) != want || !omega(&reduced.column(n + j), &f1).is_zero() {
            return Err(Error::Internal("step 3 relations with f_1 fail".into()));
        }
    }
    debug_assert_eq!(reduced.column(0), e1);
    Ok((sigma_prime, reduced))
}

/// Symplectic Smith form of `g ∈ Mp(n, Z)`.
pub fn symp_smith_integral(g: &IntMatrix) -> Result<IntegralSympSmith> {
    integral_level(g, None)
}

/// Like [`symp_smith_integral`], also returning the result of every
/// recursion level (outermost first).
pub fn symp_smith_integral_levels(g: &IntMatrix) -> Result<Vec<IntegralSympSmith>> {
    let mut levels = Vec::new();
    let top = integral_level(g, Some(&mut levels))?;
    levels.insert(0, top);
    Ok(levels)
}

fn integral_level(g: &IntMatrix, mut trace: Option<&mut Vec<IntegralSympSmith>>) -> Result<IntegralSympSmith> {
    let lambda_sq = mp_scale(g)?;
    let n = half(g);
    let c = content(g);
    let h = g.map(|x| x / &c);
    let mu = mp_scale(&h)?;

    let (s1, s1p, h1) = step1_fix_e1(&h)?;
    let (s2p, h2) = step2_clear_alpha_row(&h1)?;
    let (s3p, h3) = step3_fix_f1(&h2)?;

    // h3 = s1 · h · (s1p s2p s3p), so h = s1⁻¹ · h3 · (s1p s2p s3p)⁻¹.
    let mut sigma = s1.inverse();
    let mut sigma_prime = s1p.then(&s2p).then(&s3p).inverse();

    for k in 0..2 * n {
        let on_plane = k == 0 || k == n;
        if on_plane {
            continue;
        }
        if !h3[(0, k)].is_zero() || !h3[(n, k)].is_zero() {
            return Err(Error::Internal("reduced matrix is not block diagonal".into()));
        }
    }

    let mut a_e = vec![Integer::one()];
    let mut a_f = vec![mu];
    if n > 1 {
        let rest: Vec<usize> = (1..n).chain(n + 1..2 * n).collect();
        let sub = h3.select(&rest, &rest);
        let inner = integral_level(&sub, trace.as_deref_mut())?;
        let m = n - 1;
        a_e.extend_from_slice(&inner.a[..m]);
        a_f.extend_from_slice(&inner.a[m..]);
        sigma = sigma.then(&inner.sigma.shifted(1, n));
        sigma_prime = inner.sigma_prime.shifted(1, n).then(&sigma_prime);
        if let Some(t) = trace {
            t.insert(0, inner);
        }
    }
    let a: Vec<Integer> = a_e.into_iter().chain(a_f).map(|x| x * &c).collect();
    let result = IntegralSympSmith {
        sigma,
        a,
        sigma_prime,
        lambda_sq,
    };
    result.check_divisors()?;
    if &result.reconstruct() != g {
        return Err(Error::Internal("integral decomposition does not reconstruct g".into()));
    }
    Ok(result)
}

/// Symplectic Smith normal form of a rational symplectic matrix.
pub fn symp_smith(g: &RatMatrix) -> Result<SympSmithDecomposition> {
    if !is_symplectic(g) {
        return Err(Error::NotSymplectic);
    }
    let n = g.rows() / 2;
    let scale = DenominatorScale::of(g);
    let m = scale.m.clone();
    let integral = symp_smith_integral(&scale.apply(g))?;
    if integral.lambda_sq != &m * &m {
        return Err(Error::Internal("λ² of m·g differs from m²".into()));
    }
    // diag(a)/m = diag(t⁻¹, t) with t_j = m / a_j.
    let mut t = Vec::with_capacity(n);
    for a in &integral.a[..n] {
        if !m.is_multiple_of(a) {
            return Err(Error::Internal(format!("divisor {a} does not divide m = {m}")));
        }
        t.push(&m / a);
    }
    let d: Vec<Integer> = t.iter().rev().cloned().collect();

    // W diag(t⁻¹, t) W⁻¹ = diag(t, t⁻¹) and Q diag(t, t⁻¹) Q⁻¹ = diag(d, d⁻¹),
    // hence g = (σ W⁻¹ Q⁻¹) diag(d, d⁻¹) (Q W σ').
    let mut left = SpWord::identity(n);
    let mut right = SpWord::identity(n);
    left.append(Generator::WeylSwapInverse {
        planes: (0..n).collect(),
    })?;
    right.append(Generator::WeylSwap {
        planes: (0..n).collect(),
    })?;
    if n > 1 {
        let reversal = IntMatrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                Integer::one()
            } else {
                Integer::zero()
            }
        });
        let q = Generator::GlBlock { s0: reversal };
        left.append(q.inverse())?;
        right.prepend(q)?;
    }
    let sigma = integral.sigma.then(&left);
    let sigma_prime = right.then(&integral.sigma_prime);

    let dec = SympSmithDecomposition {
        sigma,
        d,
        sigma_prime,
        scale,
    };
    if dec.d.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return Err(Error::Internal(format!("d = {:?} is not a divisibility chain", dec.d)));
    }
    if &dec.reconstruct() != g {
        return Err(Error::Internal("decomposition does not reconstruct g".into()));
    }
    Ok(dec)
}

/// A decomposition as read from outside, not yet trusted.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimedDecomposition {
    pub sigma: RatMatrix,
    pub d: Vec<Integer>,
    pub sigma_prime: RatMatrix,
}

impl From<&SympSmithDecomposition> for ClaimedDecomposition {
    fn from(dec: &SympSmithDecomposition) -> Self {
        ClaimedDecomposition {
            sigma: dec.sigma.matrix().to_rational(),
            d: dec.d.clone(),
            sigma_prime: dec.sigma_prime.matrix().to_rational(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

fn integral_symplectic(m: &RatMatrix) -> (bool, String) {
    if m.to_integer().is_none() {
        return (false, "non-integral entry".into());
    }
    if !is_symplectic(m) {
        return (false, "not symplectic".into());
    }
    (true, String::new())
}

/// Checks every invariant of a claimed decomposition of `g` and reports each.
pub fn verify_decomposition(g: &RatMatrix, dec: &ClaimedDecomposition) -> VerificationReport {
    let mut report = VerificationReport::default();
    let dim = g.rows();
    let shape_ok = g.is_square()
        && dim.is_multiple_of(2)
        && dim > 0
        && dec.d.len() * 2 == dim
        && [&dec.sigma, &dec.sigma_prime]
            .iter()
            .all(|s| s.rows() == dim && s.cols() == dim);
    report.push(
        "shape",
        shape_ok,
        if shape_ok {
            String::new()
        } else {
            "dimensions of g, σ, d, σ' disagree".into()
        },
    );
    if !shape_ok {
        return report;
    }
    let (ok, detail) = integral_symplectic(&dec.sigma);
    report.push("sigma in Sp(n,Z)", ok, detail);
    let (ok, detail) = integral_symplectic(&dec.sigma_prime);
    report.push("sigma_prime in Sp(n,Z)", ok, detail);

    let positive = dec.d.iter().all(Signed::is_positive);
    report.push("d positive", positive, if positive { "" } else { "nonpositive entry" });
    let chain = dec
        .d
        .windows(2)
        .position(|w| w[0].is_zero() || !w[1].is_multiple_of(&w[0]));
    report.push(
        "d divisibility chain",
        chain.is_none(),
        chain.map_or(String::new(), |i| format!("d_{} does not divide d_{}", i + 1, i + 2)),
    );
    let reconstruction = torus_matrix(&dec.d)
        .map(|t| &(&dec.sigma * &t) * &dec.sigma_prime)
        .ok()
        .map(|r| r.sub(g).first_nonzero());
    let (ok, detail) = match reconstruction {
        Some(None) => (true, String::new()),
        Some(Some((i, j))) => (false, format!("mismatch at row {}, column {}", i + 1, j + 1)),
        None => (false, "d has a zero entry".into()),
    };
    report.push("reconstruction", ok, detail);
    report
}

/// The divisor chain `d` of `g`: a complete invariant of the double coset
/// `Sp(n, Z)·g·Sp(n, Z)`.
pub fn double_coset_invariant(g: &RatMatrix) -> Result<Vec<Integer>> {
    Ok(symp_smith(g)?.d)
}

pub fn double_coset_equal(g: &RatMatrix, h: &RatMatrix) -> Result<bool> {
    Ok(double_coset_invariant(g)? == double_coset_invariant(h)?)
}

/// Convenience: `SpElement` views of the witnesses.
impl SympSmithDecomposition {
    pub fn sigma_element(&self) -> &SpElement {
        self.sigma.product()
    }

    pub fn sigma_prime_element(&self) -> &SpElement {
        self.sigma_prime.product()
    }
}
