//! Linear combinations of K consecutive Bell or modified Eulerian
//! polynomials, the signature polynomial that governs where their extreme
//! zeros sit, and exact zero-count signatures.
//!
//! For gammas (1, g_1, ..., g_K) the combination is
//! p_n = sum_j gamma_j F_{n-j} (terms with negative index are zero), and the
//! signature polynomial is P(x) = sum_j gamma_j x^(K-j). The positive
//! integers l with P(l)P(l+1) < 0 (the set H) index the positive zeros of
//! p_n for large n; the remaining positive integers (the set G) index the
//! rightmost negative zeros.

use crate::error::{Error, Result};
use crate::families::{bell_poly, bell_step, modified_eulerian_poly, modified_eulerian_step};
use crate::poly::{cauchy_bound, Polynomial};
use crate::rational::{parse_rational, rat_int, rat_pow, Rational};
use crate::sturm::SturmChain;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComboBase {
    Bell,
    ModifiedEulerian,
}

impl fmt::Display for ComboBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComboBase::Bell => write!(f, "bell"),
            ComboBase::ModifiedEulerian => write!(f, "modified-eulerian"),
        }
    }
}

/// A linear combination of K+1 consecutive family members with constant
/// rational coefficients gamma_0 = 1, gamma_1, ..., gamma_K.
#[derive(Debug, Clone, PartialEq)]
pub struct ComboSpec {
    base: ComboBase,
    gammas: Vec<Rational>,
}

impl ComboSpec {
    pub fn new(base: ComboBase, gammas: Vec<Rational>) -> Result<Self> {
        if gammas.len() < 2 {
            return Err(Error::InvalidParameter(
                "a combination needs at least two coefficients (K >= 1)".into(),
            ));
        }
        if gammas[0] != Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "gamma_0 must be 1, got {}",
                gammas[0]
            )));
        }
        Ok(ComboSpec { base, gammas })
    }

    /// Loads a spec from JSON of the form
    /// `{"base": "bell" | "modified-eulerian", "gammas": ["1", "-17/2", ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let base = match parsed.get("base").and_then(|v| v.as_str()) {
            Some("bell") => ComboBase::Bell,
            Some("modified-eulerian") => ComboBase::ModifiedEulerian,
            other => {
                return Err(Error::Parse(format!(
                    "base must be \"bell\" or \"modified-eulerian\", got {other:?}"
                )))
            }
        };
        let arr = parsed
            .get("gammas")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("gammas must be an array of rational strings".into()))?;
        let mut gammas = Vec::with_capacity(arr.len());
        for v in arr {
            let s = v
                .as_str()
                .ok_or_else(|| Error::Parse("gamma entries must be strings".into()))?;
            gammas.push(parse_rational(s)?);
        }
        Self::new(base, gammas)
    }

    pub fn base(&self) -> ComboBase {
        self.base
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    /// K, the number of combined consecutive indices minus one.
    pub fn k(&self) -> usize {
        self.gammas.len() - 1
    }
}

impl fmt::Display for ComboSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self
            .gammas
            .iter()
            .map(crate::rational::format_rational)
            .collect();
        write!(f, "{};{}", self.base, gs.join(","))
    }
}

/// The signature polynomial P(x) = sum_j gamma_j x^(K-j), monic of degree K.
pub fn signature_poly(spec: &ComboSpec) -> Polynomial {
    let k = spec.k();
    let mut coeffs = vec![Rational::zero(); k + 1];
    for (j, g) in spec.gammas.iter().enumerate() {
        coeffs[k - j] = g.clone();
    }
    Polynomial::new(coeffs)
}

/// Sign classification of the positive integers by the signature polynomial.
#[derive(Debug, Clone)]
pub struct SignClassification {
    /// Positive integers l with P(l)P(l+1) < 0, sorted; complete because P
    /// keeps a constant sign beyond its root bound.
    pub h: Vec<u32>,
    /// False iff P vanishes at some positive integer up to its root bound.
    pub assumption_ok: bool,
    /// Integers were scanned up to this bound (inclusive).
    pub scan_bound: u32,
}

impl SignClassification {
    /// The m-th element (1-based) of G, the positive integers not in H.
    pub fn g_element(&self, m: usize) -> u32 {
        let mut remaining = m;
        let mut candidate = 0u32;
        loop {
            candidate += 1;
            if !self.h.contains(&candidate) {
                remaining -= 1;
                if remaining == 0 {
                    return candidate;
                }
            }
        }
    }

    /// First `len` elements of G.
    pub fn g_prefix(&self, len: usize) -> Vec<u32> {
        (1..=len).map(|m| self.g_element(m)).collect()
    }
}

/// Scans P at the positive integers up to its root bound, recording sign
/// changes (H) and any integer zero (which violates the standing
/// assumption).
pub fn classify(spec: &ComboSpec) -> SignClassification {
    let p = signature_poly(spec);
    let bound = cauchy_bound(&p).expect("signature polynomial is monic, never zero");
    let scan_bound = bound.ceil().to_integer().max(1.into());
    let scan_bound: u32 = scan_bound.try_into().unwrap_or(u32::MAX);
    let mut h = Vec::new();
    let mut assumption_ok = true;
    let mut prev = p.eval(&rat_int(1));
    if prev.is_zero() {
        assumption_ok = false;
    }
    for l in 1..=scan_bound {
        let next = p.eval(&rat_int(l as i64 + 1));
        if next.is_zero() && l < scan_bound {
            assumption_ok = false;
        }
        if !prev.is_zero() && !next.is_zero() && (&prev * &next).is_negative() {
            h.push(l);
        }
        prev = next;
    }
    SignClassification {
        h,
        assumption_ok,
        scan_bound,
    }
}

/// The n-th combination polynomial sum_j gamma_j F_{n-j}, with F the base
/// family and F_i = 0 for i < 0.
pub fn combo_poly(spec: &ComboSpec, n: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (j, g) in spec.gammas.iter().enumerate() {
        if j > n {
            break;
        }
        let member = match spec.base {
            ComboBase::Bell => bell_poly(n - j),
            ComboBase::ModifiedEulerian => modified_eulerian_poly(n - j),
        };
        acc = &acc + &member.scale(g);
    }
    acc
}

/// One inductive step of the combination recurrence, usable as an
/// independent oracle: combo_poly(n+1) = step(combo_poly(n)) for n >= K.
pub fn combo_step(spec: &ComboSpec, p: &Polynomial) -> Polynomial {
    match spec.base {
        ComboBase::Bell => bell_step(p),
        ComboBase::ModifiedEulerian => modified_eulerian_step(p),
    }
}

/// Exact zero counts of the n-th combination polynomial, with multiplicity:
/// positive zeros, negative zeros, multiplicity at the origin, and the
/// non-real remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroSignature {
    pub pos: usize,
    pub neg: usize,
    pub at_origin: usize,
    pub non_real: usize,
}

pub fn zero_signature(spec: &ComboSpec, n: usize) -> Result<ZeroSignature> {
    let p = combo_poly(spec, n);
    let degree = match p.degree() {
        None => {
            return Err(Error::ZeroPolynomial);
        }
        Some(0) => {
            return Ok(ZeroSignature {
                pos: 0,
                neg: 0,
                at_origin: 0,
                non_real: 0,
            })
        }
        Some(d) => d,
    };
    let at_origin = p.order_at_origin();
    let q = p.div_x_pow(at_origin);
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (factor, mult) in q.square_free_decomposition()? {
        if factor.degree() == Some(0) {
            continue;
        }
        let bound = cauchy_bound(&factor)?;
        let chain = SturmChain::new(&factor)?;
        let zero = Rational::zero();
        pos += mult * chain.count(&zero, &bound)?;
        neg += mult * chain.count(&-bound, &zero)?;
    }
    Ok(ZeroSignature {
        pos,
        neg,
        at_origin,
        non_real: degree - pos - neg - at_origin,
    })
}

/// Which extreme zero of a combination a prediction refers to: the m-th
/// smallest positive zero or the m-th rightmost negative zero (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComboZero {
    Positive(usize),
    Negative(usize),
}

/// Closed-form predictor for the extreme zeros of a combination at index n.
///
/// With h = h_m (for positive zeros) or g = g_m (negative zeros) and
/// u = P(h)/P(h+1), the Bell-base value is -h u (h/(h+1))^(n-K-1); the
/// modified-Eulerian base drops the leading h factor.
pub fn predict_combo(spec: &ComboSpec, which: ComboZero, n: usize) -> Result<Rational> {
    let class = classify(spec);
    if !class.assumption_ok {
        let p = signature_poly(spec);
        let at = (1..=class.scan_bound + 1)
            .find(|l| p.eval(&rat_int(*l as i64)).is_zero())
            .unwrap_or(0);
        return Err(Error::AssumptionViolated(at));
    }
    let anchor = match which {
        ComboZero::Positive(m) => {
            if m == 0 || m > class.h.len() {
                return Err(Error::IndexOutOfRange(format!(
                    "requested positive zero {m} but H has {} elements",
                    class.h.len()
                )));
            }
            class.h[m - 1]
        }
        ComboZero::Negative(m) => {
            if m == 0 {
                return Err(Error::IndexOutOfRange("m must be positive".into()));
            }
            class.g_element(m)
        }
    };
    let p = signature_poly(spec);
    let a = rat_int(anchor as i64);
    let u = p.eval(&a) / p.eval(&(&a + Rational::one()));
    let base_ratio = &a / (&a + Rational::one());
    let exponent = n as i64 - spec.k() as i64 - 1;
    let mut value = -&u * rat_pow(&base_ratio, exponent);
    if spec.base == ComboBase::Bell {
        value *= &a;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// The worked example spec: K = 3 over the Bell base with
    /// P(x) = (x - 3/2)(x - 5/2)(x - 9/2).
    pub(crate) fn cubic_example() -> ComboSpec {
        ComboSpec::new(
            ComboBase::Bell,
            vec![rat_int(1), rat(-17, 2), rat(87, 4), rat(-135, 8)],
        )
        .unwrap()
    }

    #[test]
    fn signature_poly_examples() {
        let spec = cubic_example();
        let p = signature_poly(&spec);
        let expected = &(&Polynomial::new(vec![rat(-3, 2), rat_int(1)])
            * &Polynomial::new(vec![rat(-5, 2), rat_int(1)]))
            * &Polynomial::new(vec![rat(-9, 2), rat_int(1)]);
        assert_eq!(p, expected);

        let trivial = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(signature_poly(&trivial), Polynomial::x());
        let shifted = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(-1)]).unwrap();
        assert_eq!(
            signature_poly(&shifted),
            Polynomial::from_int_coeffs(&[-1, 1])
        );
    }

    #[test]
    fn classify_examples() {
        let spec = cubic_example();
        let class = classify(&spec);
        assert_eq!(class.h, vec![1, 2, 4]);
        assert!(class.assumption_ok);
        assert_eq!(class.g_prefix(5), vec![3, 5, 6, 7, 8]);

        let no_change = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(1)]).unwrap();
        let class = classify(&no_change);
        assert!(class.h.is_empty());
        assert!(class.assumption_ok);

        let integer_root = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(-2)]).unwrap();
        assert!(!classify(&integer_root).assumption_ok);
    }

    #[test]
    fn combo_poly_examples() {
        let trivial = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(0)]).unwrap();
        for n in 0..=6 {
            assert_eq!(combo_poly(&trivial, n), bell_poly(n));
        }
        // B_2 - B_1 = x^2
        let diff = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(-1)]).unwrap();
        assert_eq!(combo_poly(&diff, 2), Polynomial::from_int_coeffs(&[0, 0, 1]));

        let spec = cubic_example();
        let p20 = combo_poly(&spec, 20);
        assert_eq!(p20.degree(), Some(20));
        assert!(p20.coeff(0).is_zero());
    }

    #[test]
    fn combo_recurrence_oracle() {
        for base in [ComboBase::Bell, ComboBase::ModifiedEulerian] {
            let spec = ComboSpec::new(
                base,
                vec![rat_int(1), rat(-17, 2), rat(87, 4), rat(-135, 8)],
            )
            .unwrap();
            for n in spec.k()..=spec.k() + 8 {
                assert_eq!(
                    combo_poly(&spec, n + 1),
                    combo_step(&spec, &combo_poly(&spec, n)),
                    "{base} base, n = {n}"
                );
            }
        }
    }

    #[test]
    fn zero_signature_examples() {
        let spec = cubic_example();
        assert_eq!(
            zero_signature(&spec, 20).unwrap(),
            ZeroSignature {
                pos: 3,
                neg: 16,
                at_origin: 1,
                non_real: 0
            }
        );
        // plain B_5 through the trivial combination
        let trivial = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(
            zero_signature(&trivial, 5).unwrap(),
            ZeroSignature {
                pos: 0,
                neg: 4,
                at_origin: 1,
                non_real: 0
            }
        );
        // B_2 - B_1 = x^2: origin zero of multiplicity two
        let diff = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(-1)]).unwrap();
        assert_eq!(
            zero_signature(&diff, 2).unwrap(),
            ZeroSignature {
                pos: 0,
                neg: 0,
                at_origin: 2,
                non_real: 0
            }
        );
    }

    #[test]
    fn predict_combo_examples() {
        let spec = cubic_example();
        // positive m = 1: (21/5) (1/2)^96
        let v = predict_combo(&spec, ComboZero::Positive(1), 100).unwrap();
        assert_eq!(v, rat(21, 5) * rat_pow(&rat(1, 2), 96));
        // negative m = 1: g_1 = 3, -(9/5) (3/4)^96
        let v = predict_combo(&spec, ComboZero::Negative(1), 100).unwrap();
        assert_eq!(v, rat(-9, 5) * rat_pow(&rat(3, 4), 96));
        // out of range / violated assumptions
        assert!(predict_combo(&spec, ComboZero::Positive(4), 100).is_err());
        let bad = ComboSpec::new(ComboBase::Bell, vec![rat_int(1), rat_int(-2)]).unwrap();
        assert!(matches!(
            predict_combo(&bad, ComboZero::Negative(1), 50),
            Err(Error::AssumptionViolated(2))
        ));
    }

    #[test]
    fn spec_validation_and_json() {
        assert!(ComboSpec::new(ComboBase::Bell, vec![rat_int(1)]).is_err());
        assert!(ComboSpec::new(ComboBase::Bell, vec![rat_int(2), rat_int(1)]).is_err());
        let spec = ComboSpec::from_json(
            r#"{"base": "bell", "gammas": ["1", "-17/2", "87/4", "-135/8"]}"#,
        )
        .unwrap();
        assert_eq!(spec, cubic_example());
        assert_eq!(spec.k(), 3);
        assert!(ComboSpec::from_json(r#"{"base": "noether", "gammas": ["1"]}"#).is_err());
        assert!(ComboSpec::from_json(r#"{"gammas": ["1", "2"]}"#).is_err());
    }
}
