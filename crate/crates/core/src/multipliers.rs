//! Declarative positive multiplier sequences and their coefficient-wise
//! action on polynomials.
//!
//! A multiplier sequence acts on a polynomial by scaling the coefficient of
//! x^j by lambda_j; the built-in sequences preserve real-rootedness. Custom
//! sequences are accepted after a positivity and log-concavity prefix check
//! only — that check is necessary but not sufficient, so results derived
//! from them should be treated as provisional.

use crate::error::{Error, Result};
use crate::families::{factorial, stirling2};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, rat_int, rat_pow, Rational};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum MultiplierSpec {
    /// lambda_n = 1.
    Unit,
    /// lambda_n = 1/(n!)^s: the 1/n! multiplier applied s times.
    InverseFactorialPower(u32),
    /// lambda_n = a^(-n^2)/n! with a > 1.
    GaussFactorial(Rational),
    /// Explicit positive sequence (finite prefix).
    Custom(Vec<Rational>),
}

impl MultiplierSpec {
    pub fn inverse_factorial_power(s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "inverse-factorial power must be at least 1".into(),
            ));
        }
        Ok(MultiplierSpec::InverseFactorialPower(s))
    }

    pub fn gauss_factorial(a: Rational) -> Result<Self> {
        if a <= Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "gauss-factorial multiplier requires a > 1, got {a}"
            )));
        }
        Ok(MultiplierSpec::GaussFactorial(a))
    }

    pub fn custom(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("empty multiplier sequence".into()));
        }
        if let Some(bad) = values.iter().find(|v| **v <= Rational::zero()) {
            return Err(Error::InvalidParameter(format!(
                "multiplier values must be positive, got {bad}"
            )));
        }
        Ok(MultiplierSpec::Custom(values))
    }

    /// Loads a custom sequence from a JSON array of exact rational strings
    /// such as `["1", "1/2", "1/6"]`.
    pub fn custom_from_json(text: &str) -> Result<Self> {
        let parsed: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let arr = parsed
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of rational strings".into()))?;
        let mut values = Vec::with_capacity(arr.len());
        for v in arr {
            let s = v
                .as_str()
                .ok_or_else(|| Error::Parse("multiplier entries must be strings".into()))?;
            values.push(parse_rational(s)?);
        }
        Self::custom(values)
    }

    /// True for sequences whose multiplier property is not established by
    /// construction; callers should flag derived results as provisional.
    pub fn is_provisional(&self) -> bool {
        matches!(self, MultiplierSpec::Custom(_))
    }

    /// Exact lambda_n.
    pub fn lambda(&self, n: usize) -> Result<Rational> {
        match self {
            MultiplierSpec::Unit => Ok(Rational::one()),
            MultiplierSpec::InverseFactorialPower(s) => {
                Ok(rat_pow(&rat_int(factorial(n)), -(*s as i64)))
            }
            MultiplierSpec::GaussFactorial(a) => {
                let n2 = (n as i64) * (n as i64);
                Ok(rat_pow(a, -n2) / rat_int(factorial(n)))
            }
            MultiplierSpec::Custom(values) => values.get(n).cloned().ok_or_else(|| {
                Error::IndexOutOfRange(format!(
                    "custom multiplier defined up to index {}, requested {n}",
                    values.len() - 1
                ))
            }),
        }
    }

    /// The ratio u_m = lambda_m / lambda_{m+1}; nondecreasing in m for
    /// log-concave sequences.
    pub fn ratio_u(&self, m: usize) -> Result<Rational> {
        Ok(self.lambda(m)? / self.lambda(m + 1)?)
    }

    /// Exact check of lambda_n^2 >= lambda_{n-1} lambda_{n+1} for
    /// 1 <= n <= upto.
    pub fn is_log_concave_prefix(&self, upto: usize) -> Result<bool> {
        for n in 1..=upto {
            let mid = self.lambda(n)?;
            if &mid * &mid < self.lambda(n - 1)? * self.lambda(n + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for MultiplierSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierSpec::Unit => write!(f, "unit"),
            MultiplierSpec::InverseFactorialPower(s) => write!(f, "invfact:{s}"),
            MultiplierSpec::GaussFactorial(a) => {
                write!(f, "gauss:{}", crate::rational::format_rational(a))
            }
            MultiplierSpec::Custom(v) => write!(f, "custom[{}]", v.len()),
        }
    }
}

/// The transformed polynomial with coefficient lambda_j j! S(n,j) at x^j:
/// the multiplier applied to the modified Eulerian polynomial. Unit gives
/// the modified Eulerian polynomial itself; 1/n! gives the Bell polynomial.
pub fn transformed_polynomial(spec: &MultiplierSpec, n: usize) -> Result<Polynomial> {
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let lambda = spec.lambda(j)?;
        let c = lambda * rat_int(factorial(j)) * rat_int(stirling2(n, j)?);
        coeffs.push(c);
    }
    Ok(Polynomial::new(coeffs))
}

/// Coefficient-wise action: the coefficient of x^j is scaled by lambda_j.
pub fn apply_to_poly(spec: &MultiplierSpec, p: &Polynomial) -> Result<Polynomial> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for (j, c) in p.coeffs().iter().enumerate() {
        coeffs.push(c * spec.lambda(j)?);
    }
    Ok(Polynomial::new(coeffs))
}
