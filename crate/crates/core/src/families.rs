//! Exact construction of the polynomial families: Bell, Eulerian, modified
//! Eulerian, and r-Bell, together with the number triangles behind them and
//! the classical identities used as cross-checks.
//!
//! Triangle rows are memoized behind a lock; readers only ever see completed
//! rows, so the constructors stay pure from the caller's point of view.

use crate::error::{Error, Result};
use crate::multipliers::MultiplierSpec;
use crate::combos::ComboSpec;
use crate::poly::Polynomial;
use crate::rational::{rat_int, Integer, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

// ---- integer triangles ----

static STIRLING_ROWS: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());
static EULERIAN_ROWS: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());

fn stirling_row(n: usize) -> Vec<Integer> {
    let mut rows = STIRLING_ROWS.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![Integer::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let k = rows.len();
        let mut row = vec![Integer::zero(); k + 1];
        for j in 1..=k {
            // S(k, j) = j * S(k-1, j) + S(k-1, j-1)
            let mut v = prev[j - 1].clone();
            if j < prev.len() {
                v += &prev[j] * Integer::from(j as u64);
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n].clone()
}

fn eulerian_row(n: usize) -> Vec<Integer> {
    let mut rows = EULERIAN_ROWS.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![Integer::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let k = rows.len();
        let mut row = vec![Integer::zero(); k + 1];
        for j in 0..k {
            // <k, j> = (j+1) <k-1, j> + (k-j) <k-1, j-1>
            let mut v = Integer::zero();
            if j < prev.len() {
                v += &prev[j] * Integer::from((j + 1) as u64);
            }
            if j >= 1 && j - 1 < prev.len() {
                v += &prev[j - 1] * Integer::from((k - j) as u64);
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n].clone()
}

/// Stirling number of the second kind S(n, j).
pub fn stirling2(n: usize, j: usize) -> Result<Integer> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!("S({n}, {j}) requires j <= n")));
    }
    Ok(stirling_row(n)[j].clone())
}

/// Eulerian number <n, j>; zero outside 0 <= j <= n-1 for n >= 1.
pub fn eulerian_number(n: usize, j: i64) -> Integer {
    if j < 0 {
        return Integer::zero();
    }
    let j = j as usize;
    if n == 0 {
        return if j == 0 { Integer::one() } else { Integer::zero() };
    }
    if j >= n {
        return Integer::zero();
    }
    eulerian_row(n)[j].clone()
}

/// n-th Bell polynomial: sum of S(n, j) x^j.
pub fn bell_poly(n: usize) -> Polynomial {
    Polynomial::new(stirling_row(n).into_iter().map(rat_int).collect())
}

/// n-th Eulerian polynomial: 1 for n = 0, else sum of <n, j> x^j over
/// 0 <= j <= n-1 (degree n-1).
pub fn eulerian_poly(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    Polynomial::new(
        eulerian_row(n)
            .into_iter()
            .take(n)
            .map(rat_int)
            .collect(),
    )
}

/// Modified Eulerian polynomial: sum of j! S(n, j) x^j, the image of x^n
/// under x^n -> x^n E_n(1 + 1/x).
pub fn modified_eulerian_poly(n: usize) -> Polynomial {
    let row = stirling_row(n);
    let mut fact = Integer::one();
    let coeffs = row
        .into_iter()
        .enumerate()
        .map(|(j, s)| {
            if j > 0 {
                fact *= Integer::from(j as u64);
            }
            rat_int(s * &fact)
        })
        .collect();
    Polynomial::new(coeffs)
}

// ---- r-Stirling triangle ----

type RRows = HashMap<Rational, Vec<Vec<Rational>>>;
static R_STIRLING_ROWS: OnceLock<Mutex<RRows>> = OnceLock::new();

fn r_stirling_row(n: usize, r: &Rational) -> Vec<Rational> {
    let cache = R_STIRLING_ROWS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    let rows = map.entry(r.clone()).or_insert_with(|| vec![vec![Rational::one()]]);
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let k = rows.len();
        let mut row = vec![Rational::zero(); k + 1];
        for j in 0..=k {
            // T(k, j) = T(k-1, j-1) + (j + r) T(k-1, j)
            let mut v = Rational::zero();
            if j >= 1 {
                v += &prev[j - 1];
            }
            if j < prev.len() {
                v += &prev[j] * (rat_int(j as i64) + r);
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n].clone()
}

/// r-Stirling number S_r(n+r, j+r), defined by the expansion of (x+r)^n in
/// falling factorials. Exact for rational r.
pub fn r_stirling2(n: usize, j: usize, r: &Rational) -> Result<Rational> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!(
            "S_r({n}+r, {j}+r) requires j <= n"
        )));
    }
    Ok(r_stirling_row(n, r)[j].clone())
}

/// n-th r-Bell polynomial: sum of S_r(n+r, j+r) x^j. Constant term r^n.
/// Construction is exact for any rational r; the zero analysis elsewhere
/// requires r > 0.
pub fn r_bell_poly(n: usize, r: &Rational) -> Polynomial {
    Polynomial::new(r_stirling_row(n, r))
}

// ---- small exact combinatorics used by the identity checks ----

pub(crate) fn factorial(n: usize) -> Integer {
    let mut f = Integer::one();
    for k in 2..=n {
        f *= Integer::from(k as u64);
    }
    f
}

pub(crate) fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 0..k {
        num *= Integer::from(n - i);
        den *= Integer::from(i + 1);
    }
    num / den
}

/// Bernoulli number B_k from the classical recursive sum
/// sum_{j=0..k} C(k+1, j) B_j = 0 (so B_1 = -1/2).
pub(crate) fn bernoulli(k: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(k + 1);
    for m in 0..=k {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += rat_int(binomial(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / rat_int(m as i64 + 1));
    }
    b[k].clone()
}

/// zeta(-n) for n >= 0 via -B_{n+1}/(n+1).
pub(crate) fn zeta_negative(n: usize) -> Rational {
    -bernoulli(n + 1) / rat_int(n as i64 + 1)
}

/// Falling factorial x(x-1)...(x-j+1) as a polynomial (1 for j = 0).
pub fn falling_factorial(j: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 0..j {
        p = &p * &Polynomial::new(vec![rat_int(-(i as i64)), Rational::one()]);
    }
    p
}

/// Binomial polynomial C(x+j, n) = (x+j)(x+j-1)...(x+j-n+1)/n!.
fn binomial_poly(j: i64, n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 0..n {
        p = &p * &Polynomial::new(vec![rat_int(j - i as i64), Rational::one()]);
    }
    p.scale(&rat_int(factorial(n)).recip())
}

// ---- identity verification ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// x^n = sum_j S(n,j) x(x-1)...(x-j+1)
    FallingFactorial,
    /// x^n = sum_j <n,j> C(x+j, n)
    Worpitzky,
    /// E_n(-1) = (2^(n+1) - 4^(n+1)) zeta(-n)
    ZetaAtNegativeIntegers,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityKind::FallingFactorial => "falling-factorial",
            IdentityKind::Worpitzky => "worpitzky",
            IdentityKind::ZetaAtNegativeIntegers => "zeta-negative-integers",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub n: usize,
    pub kind: IdentityKind,
    pub pass: bool,
}

/// Checks, in exact arithmetic for every n <= n_max: the falling-factorial
/// expansion of x^n, the Worpitzky expansion, and the Eulerian value at -1
/// against the zeta values at negative integers.
pub fn verify_identities(n_max: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let xn = Polynomial::monomial(Rational::one(), n);

        let mut sum = Polynomial::zero();
        for j in 0..=n {
            let s = stirling2(n, j).unwrap();
            sum = &sum + &falling_factorial(j).scale(&rat_int(s));
        }
        out.push(IdentityCheck {
            n,
            kind: IdentityKind::FallingFactorial,
            pass: sum == xn,
        });

        let mut sum = Polynomial::zero();
        for j in 0..=n {
            let e = eulerian_number(n, j as i64);
            if !e.is_zero() {
                sum = &sum + &binomial_poly(j as i64, n).scale(&rat_int(e));
            }
        }
        out.push(IdentityCheck {
            n,
            kind: IdentityKind::Worpitzky,
            pass: sum == xn,
        });

        let lhs = eulerian_poly(n).eval(&rat_int(-1));
        let two = rat_int(2);
        let four = rat_int(4);
        let factor = crate::rational::rat_pow(&two, n as i64 + 1)
            - crate::rational::rat_pow(&four, n as i64 + 1);
        let rhs = factor * zeta_negative(n);
        out.push(IdentityCheck {
            n,
            kind: IdentityKind::ZetaAtNegativeIntegers,
            pass: lhs == rhs,
        });
    }
    out
}

// ---- recurrence steps shared with the combination module ----

/// x (1 + d/dx) p, the step taking the n-th Bell polynomial to the next.
pub(crate) fn bell_step(p: &Polynomial) -> Polynomial {
    (&(p + &p.derivative())).mul_x_pow(1)
}

/// x d/dx [(1+x) p], the step for the modified Eulerian family.
pub(crate) fn modified_eulerian_step(p: &Polynomial) -> Polynomial {
    let one_plus_x = Polynomial::new(vec![Rational::one(), Rational::one()]);
    (&one_plus_x * p).derivative().mul_x_pow(1)
}

// ---- family identifiers ----

/// Identifies one of the polynomial families under study.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyId {
    Bell,
    Eulerian,
    ModifiedEulerian,
    RBell(Rational),
    MultiplierTransformed(MultiplierSpec),
    BellCombo(ComboSpec),
    EulerCombo(ComboSpec),
}

impl FamilyId {
    /// r-Bell family; the zero asymptotics require r > 0.
    pub fn r_bell(r: Rational) -> Result<FamilyId> {
        if r <= Rational::zero() {
            return Err(Error::InvalidParameter(format!(
                "r-Bell family requires r > 0, got {r}"
            )));
        }
        Ok(FamilyId::RBell(r))
    }

    /// Constructs the n-th member of the family.
    pub fn polynomial(&self, n: usize) -> Result<Polynomial> {
        Ok(match self {
            FamilyId::Bell => bell_poly(n),
            FamilyId::Eulerian => eulerian_poly(n),
            FamilyId::ModifiedEulerian => modified_eulerian_poly(n),
            FamilyId::RBell(r) => r_bell_poly(n, r),
            FamilyId::MultiplierTransformed(spec) => {
                crate::multipliers::transformed_polynomial(spec, n)?
            }
            FamilyId::BellCombo(spec) | FamilyId::EulerCombo(spec) => {
                crate::combos::combo_poly(spec, n)
            }
        })
    }

    /// Number of negative zeros of the n-th member, where a closed form is
    /// known (None for combinations, whose counts are computed).
    pub fn negative_zero_count(&self, n: usize) -> Option<usize> {
        match self {
            FamilyId::Bell
            | FamilyId::Eulerian
            | FamilyId::ModifiedEulerian
            | FamilyId::MultiplierTransformed(_) => Some(n.saturating_sub(1)),
            FamilyId::RBell(_) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Bell => write!(f, "bell"),
            FamilyId::Eulerian => write!(f, "eulerian"),
            FamilyId::ModifiedEulerian => write!(f, "modified-eulerian"),
            FamilyId::RBell(r) => write!(f, "rbell({})", crate::rational::format_rational(r)),
            FamilyId::MultiplierTransformed(spec) => write!(f, "multiplier({spec})"),
            FamilyId::BellCombo(spec) => write!(f, "bell-combo({spec})"),
            FamilyId::EulerCombo(spec) => write!(f, "eulerian-combo({spec})"),
        }
    }
}
