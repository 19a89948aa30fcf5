use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use sympsnf::instances::planted_symplectic;
use sympsnf::local::{exponents_of_chain, is_prime};
use sympsnf::{
    double_coset_invariant, minor_gcd_divisors, random_sp, smith_normal_form, symp_smith, symplectic_defect,
    verify_decomposition, IntMatrix, Integer, RatMatrix,
};

use crate::format::{matrix_to_json, parse_integer_matrix, parse_matrix, write_matrix};
use crate::report::{
    local_json, local_line, locals_of_chain, parse_decomposition, verification_json, verification_lines,
    DecompositionReport,
};
use crate::{CliError, CliResult, Format, Outcome, EXIT_SEMANTIC};

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Parses a matrix and checks it is `2n×2n` and symplectic.
pub fn symplectic_input(text: &str) -> CliResult<RatMatrix> {
    let g = parse_matrix(text)?;
    if !g.is_square() || g.rows() == 0 || g.rows() % 2 != 0 {
        return Err(CliError::Input(format!(
            "expected a 2n×2n matrix, found {}×{}",
            g.rows(),
            g.cols()
        )));
    }
    if let Some((i, j)) = symplectic_defect(&g)?.first_nonzero() {
        return Err(CliError::NotSymplectic(format!(
            "matrix is not symplectic: gᵀJg - J is nonzero at row {}, column {}",
            i + 1,
            j + 1
        )));
    }
    Ok(g)
}

pub fn decompose(text: &str, format: Format, locals: bool, words: bool) -> CliResult<Outcome> {
    let g = symplectic_input(text)?;
    let dec = symp_smith(&g)?;
    let report = DecompositionReport::new(&g, &dec, locals, words)?;
    Ok(Outcome::success(match format {
        Format::Text => report.to_text(),
        Format::Json => json_out(report.to_json()),
    }))
}

pub fn snf(text: &str, format: Format) -> CliResult<Outcome> {
    let g = parse_integer_matrix(text)?;
    let s = smith_normal_form(&g);
    let reconstruction = s.reconstruct() == g;
    let unit = |m: &IntMatrix| m.determinant().is_ok_and(|d| d.abs().is_one());
    let unimodular = unit(&s.u) && unit(&s.v);
    let chain = s.divisors.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        }
    });
    let mut minors = true;
    let mut product = Integer::one();
    for (k, a) in s.divisors.iter().enumerate() {
        product *= a;
        minors &= minor_gcd_divisors(&g, k + 1)? == product;
    }
    let ok = reconstruction && unimodular && chain && minors;
    let stdout = match format {
        Format::Text => format!(
            "divisors {}\nu\n{}v\n{}reconstruction: {}\nunimodular: {}\ndivisibility chain: {}\nminor-gcd check: {}\n",
            join(&s.divisors),
            write_matrix(&s.u),
            write_matrix(&s.v),
            pass_fail(reconstruction),
            pass_fail(unimodular),
            pass_fail(chain),
            pass_fail(minors),
        ),
        Format::Json => json_out(json!({
            "divisors": s.divisors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "u": matrix_to_json(&s.u),
            "v": matrix_to_json(&s.v),
            "checks": {
                "reconstruction": reconstruction,
                "unimodular": unimodular,
                "divisibility chain": chain,
                "minor-gcd": minors,
            },
        })),
    };
    Ok(Outcome {
        stdout,
        code: if ok { 0 } else { EXIT_SEMANTIC },
    })
}

pub fn verify(g_text: &str, dec_text: &str, format: Format) -> CliResult<Outcome> {
    let g = parse_matrix(g_text)?;
    let claimed = parse_decomposition(dec_text)?;
    let dim = g.rows();
    let shapes_agree = g.is_square()
        && dim > 0
        && dim % 2 == 0
        && claimed.d.len() * 2 == dim
        && [&claimed.sigma, &claimed.sigma_prime]
            .iter()
            .all(|m| m.rows() == dim && m.cols() == dim);
    if !shapes_agree {
        return Err(CliError::Input(format!(
            "dimensions disagree: g is {}×{}, sigma {}×{}, sigma_prime {}×{}, d has {} entries",
            g.rows(),
            g.cols(),
            claimed.sigma.rows(),
            claimed.sigma.cols(),
            claimed.sigma_prime.rows(),
            claimed.sigma_prime.cols(),
            claimed.d.len()
        )));
    }
    let report = verify_decomposition(&g, &claimed);
    let ok = report.all_passed();
    let stdout = match format {
        Format::Text => format!("{}verification: {}\n", verification_lines(&report), pass_fail(ok)),
        Format::Json => json_out(json!({ "checks": verification_json(&report), "passed": ok })),
    };
    Ok(Outcome {
        stdout,
        code: if ok { 0 } else { EXIT_SEMANTIC },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    List(Vec<Integer>),
    /// Every prime with a nonzero exponent.
    Support,
}

pub fn local(text: &str, primes: &PrimeSelection, format: Format) -> CliResult<Outcome> {
    if let PrimeSelection::List(ps) = primes {
        if let Some(p) = ps.iter().find(|p| !is_prime(p)) {
            return Err(CliError::Input(format!("{p} is not prime")));
        }
    }
    let g = symplectic_input(text)?;
    let d = double_coset_invariant(&g)?;
    let locals = match primes {
        PrimeSelection::List(ps) => ps
            .iter()
            .map(|p| exponents_of_chain(&d, p))
            .collect::<sympsnf::Result<Vec<_>>>()?,
        PrimeSelection::Support => locals_of_chain(&d)?,
    };
    let stdout = match format {
        Format::Text => locals.iter().map(|l| local_line(l) + "\n").collect(),
        Format::Json => json_out(json!({
            "d": d.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "locals": locals.iter().map(local_json).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::success(stdout))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// A random word in the generators of `Sp(n, Z)`.
    Spz,
    /// `σ·diag(d, d⁻¹)·σ'` with a random divisor chain `d`.
    Spq,
}

#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    pub n: usize,
    pub seed: u64,
    pub kind: GenKind,
    pub length: usize,
    pub dmax: u64,
}

pub fn gen(params: &GenParams, format: Format) -> CliResult<Outcome> {
    if params.n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let g = match params.kind {
        GenKind::Spz => random_sp(params.n, params.length, params.seed).matrix().to_rational(),
        GenKind::Spq => planted_symplectic(params.n, params.length, params.dmax, params.seed).g,
    };
    Ok(Outcome::success(match format {
        Format::Text => write_matrix(&g),
        Format::Json => json_out(matrix_to_json(&g)),
    }))
}

pub fn coset_eq(text1: &str, text2: &str, format: Format) -> CliResult<Outcome> {
    let g = symplectic_input(text1)?;
    let h = symplectic_input(text2)?;
    if g.rows() != h.rows() {
        return Err(CliError::Input(format!(
            "matrices have different sizes: {}×{} and {}×{}",
            g.rows(),
            g.cols(),
            h.rows(),
            h.cols()
        )));
    }
    let (dg, dh) = (double_coset_invariant(&g)?, double_coset_invariant(&h)?);
    let same = dg == dh;
    let stdout = match format {
        Format::Text => format!(
            "d(first): {}\nd(second): {}\nsame double coset: {}\n",
            join(&dg),
            join(&dh),
            if same { "yes" } else { "no" }
        ),
        Format::Json => json_out(json!({
            "first": dg.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "second": dh.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "same": same,
        })),
    };
    Ok(Outcome {
        stdout,
        code: if same { 0 } else { EXIT_SEMANTIC },
    })
}
