//! Dense univariate polynomials with exact rational coefficients.
//!
//! `Polynomial` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and otherwise ends in a nonzero coefficient.
//! All arithmetic is exact. `IntPoly` is the crate-internal integer image
//! used by the root-finding kernel, where evaluations and shifts run on
//! integers only (no gcd reduction in inner loops).

use crate::error::{Error, Result};
use crate::rational::{rat_int, sign_of, Integer, Rational};
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^j (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * rat_int(j as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by x^k.
    pub fn mul_x_pow(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Number of trailing zero coefficients (multiplicity of the root 0).
    pub fn order_at_origin(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by x^k; the trailing k coefficients must be zero.
    pub fn div_x_pow(&self, k: usize) -> Polynomial {
        assert!(self.order_at_origin() >= k || self.is_zero());
        Polynomial {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        while r.len() > dd {
            let c = r.last().unwrap() / lead;
            let k = r.len() - 1 - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                r[k + i] -= t;
            }
            // the top coefficient cancels exactly
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().map_or(false, |x| x.is_zero()) {
                r.pop();
            }
            q[k] = c;
            if r.len() <= dd {
                break;
            }
        }
        Ok((Polynomial::new(q), Polynomial::new(r)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InvalidParameter("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Greatest common divisor, normalized primitive with positive leading
    /// coefficient. Computed on the integer images with a primitive
    /// pseudo-remainder sequence to control coefficient growth.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let (a, _) = IntPoly::from_polynomial(self);
        let (b, _) = IntPoly::from_polynomial(other);
        let g = IntPoly::gcd(a, b);
        g.to_polynomial()
    }

    /// Integer-primitive image with positive leading coefficient.
    fn primitive_positive(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let (mut ip, _) = IntPoly::from_polynomial(self);
        if ip.leading().is_negative() {
            ip.neg_mut();
        }
        ip.to_polynomial()
    }

    /// p / gcd(p, p'): same zeros with all multiplicities flattened to one.
    /// Normalized primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Polynomial::one());
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g)?;
        Ok(q.primitive_positive())
    }

    pub fn is_square_free(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Yun's square-free decomposition: returns pairs (factor, multiplicity)
    /// with each factor square-free, pairwise coprime, and
    /// p = c * prod factor_i^mult_i for some constant c.
    pub fn square_free_decomposition(&self) -> Result<Vec<(Polynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let p = self.primitive_positive();
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut w = p.div_exact(&g)?;
        let mut z = dp.div_exact(&g)? - w.derivative();
        let mut i = 1usize;
        while w.degree() != Some(0) {
            let h = w.gcd(&z);
            if h.degree().map_or(false, |d| d >= 1) {
                out.push((h.clone(), i));
            }
            w = w.div_exact(&h)?;
            z = z.div_exact(&h)? - w.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Composition p(a + b*x) by polynomial Horner evaluation.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Polynomial {
        let mut acc = Polynomial::zero();
        let lin = Polynomial::new(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Polynomial::constant(c.clone());
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match j {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, j)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero);
            if let Some(b) = rhs.coeffs.get(j) {
                c += b;
            }
            coeffs.push(c);
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// Integer-coefficient image of a polynomial, ascending order, trailing
/// zeros trimmed. Root-finding runs here: every inner-loop operation is
/// integer addition/multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub(crate) coeffs: Vec<Integer>,
}

impl IntPoly {
    pub(crate) fn new(coeffs: Vec<Integer>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Clears denominators and the content: returns (q, s) with
    /// self = s * q, s a positive rational, q primitive integer.
    /// The sign of the leading coefficient is preserved.
    pub(crate) fn from_polynomial(p: &Polynomial) -> (IntPoly, Rational) {
        if p.is_zero() {
            return (IntPoly { coeffs: vec![] }, Rational::one());
        }
        let mut l = Integer::one();
        for c in p.coeffs() {
            l = l.lcm(c.denom());
        }
        let ints: Vec<Integer> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut q = IntPoly::new(ints);
        let g = q.content();
        if !g.is_one() {
            for c in &mut q.coeffs {
                *c = &*c / &g;
            }
        }
        (q, Rational::new(g, l))
    }

    pub(crate) fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| rat_int(c.clone())).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub(crate) fn leading(&self) -> &Integer {
        self.coeffs.last().expect("zero polynomial")
    }

    pub(crate) fn constant_term(&self) -> Integer {
        self.coeffs.first().cloned().unwrap_or_else(Integer::zero)
    }

    pub(crate) fn neg_mut(&mut self) {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
    }

    pub(crate) fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly { coeffs: vec![] };
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * Integer::from(j as u64))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients.
    pub(crate) fn content(&self) -> Integer {
        let mut g = Integer::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub(crate) fn make_primitive(&mut self) {
        if self.is_zero() {
            return;
        }
        let g = self.content();
        if !g.is_one() {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
        }
    }

    /// Sign of the value at the rational point x, computed without any
    /// rational reduction: sign of sum c_j s^j t^(d-j) for x = s/t.
    pub(crate) fn sign_at(&self, x: &Rational) -> i8 {
        match self.eval_scaled(x).sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// t^d * p(s/t) for x = s/t; same sign as p(x).
    pub(crate) fn eval_scaled(&self, x: &Rational) -> Integer {
        if self.is_zero() {
            return Integer::zero();
        }
        let s = x.numer();
        let t = x.denom();
        let mut acc = self.coeffs.last().unwrap().clone();
        let mut tp = Integer::one();
        for c in self.coeffs.iter().rev().skip(1) {
            tp *= t;
            acc = acc * s + c * &tp;
        }
        acc
    }

    /// Exact value at a rational point.
    pub(crate) fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let d = self.degree();
        let scaled = self.eval_scaled(x);
        Rational::new(scaled, x.denom().pow(d as u32))
    }

    /// Signed pseudo-remainder: returns r with r = s * (self mod g) for some
    /// positive scalar s. Requires deg self >= deg g.
    pub(crate) fn pseudo_rem_signed(&self, g: &IntPoly) -> IntPoly {
        assert!(!g.is_zero());
        let dg = g.degree();
        let lead = g.leading().clone();
        let lead_neg = lead.is_negative();
        let mut r = self.clone();
        let mut negate = false;
        while !r.is_zero() && r.degree() >= dg {
            let dr = r.degree();
            let rl = r.coeffs.pop().unwrap(); // leading of r; cancels below
            let shift = dr - dg;
            for c in &mut r.coeffs {
                *c = &*c * &lead;
            }
            for (i, gc) in g.coeffs.iter().take(dg).enumerate() {
                let t = gc * &rl;
                r.coeffs[shift + i] -= t;
            }
            r.normalize();
            if lead_neg {
                negate = !negate;
            }
        }
        if negate {
            r.neg_mut();
        }
        r
    }

    /// Primitive gcd with positive leading coefficient, by primitive PRS.
    pub(crate) fn gcd(mut a: IntPoly, mut b: IntPoly) -> IntPoly {
        if a.is_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_zero() {
            a.make_primitive();
            if !a.is_zero() && a.leading().is_negative() {
                a.neg_mut();
            }
            return a;
        }
        a.make_primitive();
        b.make_primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let mut r = a.pseudo_rem_signed(&b);
            if r.is_zero() {
                if b.leading().is_negative() {
                    b.neg_mut();
                }
                return b;
            }
            r.make_primitive();
            a = std::mem::replace(&mut b, r);
        }
    }

    // ---- coordinate transforms for bisection ----

    /// 2^d * p(x/2): coefficient j gains a factor 2^(d-j).
    pub(crate) fn halve_variable(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let d = self.degree();
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c << (d - j))
                .collect(),
        )
    }

    /// In-place Taylor shift p(x) -> p(x+1).
    pub(crate) fn taylor_shift_1(&mut self) {
        if self.coeffs.len() <= 1 {
            return;
        }
        let d = self.coeffs.len() - 1;
        for i in (0..d).rev() {
            for j in i..d {
                let t = self.coeffs[j + 1].clone();
                self.coeffs[j] += t;
            }
        }
    }

    /// p(x) -> x^d p(1/x) (coefficient reversal about the degree).
    pub(crate) fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// p(x) -> p(-x).
    pub(crate) fn reflected(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// p(2^e * x), multiplied through by a power of two so coefficients stay
    /// integral. Positive scaling only; roots are divided by 2^e.
    pub(crate) fn scale_variable_pow2(&self, e: i64) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let d = self.degree();
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    if e >= 0 {
                        c << (j as u64 * e as u64)
                    } else {
                        c << ((d - j) as u64 * (-e) as u64)
                    }
                })
                .collect(),
        )
    }

    /// Removes the common power-of-two factor of the coefficients.
    pub(crate) fn strip_two_content(&mut self) {
        if self.is_zero() {
            return;
        }
        let tz = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.trailing_zeros().unwrap_or(0))
            .min()
            .unwrap_or(0);
        if tz > 0 {
            for c in &mut self.coeffs {
                *c = &*c >> tz;
            }
        }
    }

    /// Divides by x; the constant term must be zero.
    pub(crate) fn div_x(&self) -> IntPoly {
        assert!(self.constant_term().is_zero());
        IntPoly::new(self.coeffs.iter().skip(1).cloned().collect())
    }

    /// Exact division by a linear integer polynomial a*x - b (synthetic
    /// division); panics if the division is not exact.
    pub(crate) fn div_exact_linear(&self, a: &Integer, b: &Integer) -> IntPoly {
        assert!(!self.is_zero());
        let d = self.degree();
        assert!(d >= 1);
        // self = (a x - b) * q; solve for q from the top down
        let mut q = vec![Integer::zero(); d];
        let mut carry = Integer::zero(); // coefficient of x^(k+1) in remainder being pushed down
        for k in (0..d).rev() {
            let num = &self.coeffs[k + 1] + &carry;
            let (qk, rem) = num.div_rem(a);
            assert!(rem.is_zero(), "inexact linear division");
            carry = &qk * b;
            q[k] = qk;
        }
        assert!((&self.coeffs[0] + &carry).is_zero(), "inexact linear division");
        IntPoly::new(q)
    }

    /// Number of sign variations in the coefficient sequence.
    pub(crate) fn sign_variations(&self) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for c in &self.coeffs {
            let s = match c.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }
}

/// Cauchy root bound 1 + max_j |c_j| / |c_d|; every root z satisfies |z| < bound.
pub fn cauchy_bound(p: &Polynomial) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = p.leading().unwrap().abs();
    let mut m = Rational::zero();
    let d = p.degree().unwrap();
    for c in p.coeffs().iter().take(d) {
        let a = c.abs();
        if a > m {
            m = a;
        }
    }
    Ok(Rational::one() + m / lead)
}

pub fn sign(x: &Rational) -> i8 {
    sign_of(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn eval_examples() {
        // x + 3x^2 + x^3 at 1 is the coefficient sum
        assert_eq!(p(&[0, 1, 3, 1]).eval(&rat_int(1)), rat_int(5));
        assert_eq!(Polynomial::zero().eval(&rat(7, 3)), rat_int(0));
        assert_eq!(p(&[1, 4, 1]).eval(&rat_int(-2)), rat_int(-3));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 1, 3, 1]).derivative(), p(&[1, 6, 3]));
        assert_eq!(p(&[5]).derivative(), Polynomial::zero());
        let d = Polynomial::monomial(Rational::one(), 7).derivative();
        assert_eq!(d.degree(), Some(6));
        assert_eq!(*d.leading().unwrap(), rat_int(7));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let b = p(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn square_free_part_examples() {
        // (x+1)^2 x -> x(x+1) up to positive scaling
        let q = &(&p(&[1, 1]) * &p(&[1, 1])) * &Polynomial::x();
        let sf = q.square_free_part().unwrap();
        assert_eq!(sf, p(&[0, 1, 1]));
        // already square-free input is unchanged up to scaling
        let s = p(&[-6, 1, 1]);
        assert_eq!(s.square_free_part().unwrap(), s);
        assert!(s.is_square_free());
        assert!(!q.is_square_free());
    }

    #[test]
    fn yun_decomposition() {
        // (x+1)^2 x
        let q = &(&p(&[1, 1]) * &p(&[1, 1])) * &Polynomial::x();
        let parts = q.square_free_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (Polynomial::x(), 1));
        assert_eq!(parts[1], (p(&[1, 1]), 2));
    }

    #[test]
    fn gcd_primitive_positive() {
        let a = &p(&[1, 1]) * &p(&[-3, 1]); // (x+1)(x-3)
        let b = &p(&[1, 1]) * &p(&[5, 2]); // (x+1)(2x+5)
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        let c = a.scale(&rat(-7, 3));
        assert_eq!(c.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn int_poly_roundtrip_and_eval() {
        let q = Polynomial::new(vec![rat(1, 6), rat(-2, 3), rat_int(1)]);
        let (ip, s) = IntPoly::from_polynomial(&q);
        assert_eq!(ip.coeffs, vec![Integer::from(1), Integer::from(-4), Integer::from(6)]);
        assert_eq!(s, rat(1, 6));
        let x = rat(5, 7);
        assert_eq!(ip.eval(&x) * s, q.eval(&x));
        assert_eq!(ip.sign_at(&x), sign(&q.eval(&x)));
    }

    #[test]
    fn pseudo_rem_sign_matches_rational_rem() {
        let f = p(&[3, -2, 0, 5, 1]);
        let g = p(&[-1, 0, 2]);
        let (fi, _) = IntPoly::from_polynomial(&f);
        let (gi, _) = IntPoly::from_polynomial(&g);
        let r = fi.pseudo_rem_signed(&gi);
        let (_, rr) = f.div_rem(&g).unwrap();
        // r must be a positive multiple of the rational remainder
        let ratio = rat_int(r.coeffs.last().unwrap().clone()) / rr.leading().unwrap();
        assert!(ratio > Rational::zero());
        assert_eq!(r.to_polynomial().scale(&ratio.recip()), rr);
    }

    #[test]
    fn taylor_shift_and_reverse() {
        let mut a = IntPoly::new(vec![0.into(), 0.into(), 1.into()]); // x^2
        a.taylor_shift_1();
        assert_eq!(a.coeffs, vec![Integer::from(1), Integer::from(2), Integer::from(1)]);
        let b = IntPoly::new(vec![1.into(), 2.into(), 3.into()]);
        assert_eq!(b.reversed().coeffs, vec![Integer::from(3), Integer::from(2), Integer::from(1)]);
        assert_eq!(b.reflected().coeffs, vec![Integer::from(1), Integer::from(-2), Integer::from(3)]);
    }

    #[test]
    fn linear_exact_division() {
        // (2x - 1)(x^2 + 3x + 4) = 2x^3 + 5x^2 + 5x - 4
        let prod = IntPoly::new(vec![(-4).into(), 5.into(), 5.into(), 2.into()]);
        let q = prod.div_exact_linear(&Integer::from(2), &Integer::from(1));
        assert_eq!(q.coeffs, vec![Integer::from(4), Integer::from(3), Integer::from(1)]);
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let q = p(&[-6, 1, 1]); // roots 2, -3
        let b = cauchy_bound(&q).unwrap();
        assert_eq!(b, rat_int(7));
    }

    #[test]
    fn compose_affine_matches_eval() {
        let q = p(&[2, -1, 0, 3]);
        let a = rat(1, 3);
        let b = rat(-5, 2);
        let c = q.compose_affine(&a, &b);
        for t in [rat_int(0), rat(2, 7), rat_int(-1)] {
            assert_eq!(c.eval(&t), q.eval(&(&a + &b * &t)));
        }
    }
}
