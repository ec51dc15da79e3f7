//! Exact scalar arithmetic: arbitrary-precision rationals and dyadic numbers.
//!
//! `Rational` is the carrier for every scalar in the library (coefficients,
//! zeros, predictions, tolerances). `Dyadic` values (m * 2^e) are used for
//! bisection endpoints so denominators stay powers of two.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int<T: Into<Integer>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational n/d from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(Integer::from(n), Integer::from(d))
}

/// base^exp for possibly negative integer exponents.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow_nonneg(base, exp as u64)
    } else {
        let p = pow_nonneg(base, (-exp) as u64);
        if p.is_zero() {
            panic!("zero base with negative exponent");
        }
        p.recip()
    }
}

fn pow_nonneg(base: &Rational, mut exp: u64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Sign of a rational as -1, 0, +1.
pub fn sign_of(x: &Rational) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Parses an exact rational from `p/q`, integer, or scientific-decimal
/// syntax (`1e-12`, `2.5e3`, `0.125`). Every form is converted exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((numer, denom)) = s.split_once('/') {
        let n: Integer = numer
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: Integer = denom
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    // Scientific / decimal form: [sign] digits [. digits] [e [sign] digits]
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            (m, e)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(Error::Parse(format!("bad rational literal {s:?}")));
    }
    let n: Integer = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))?;
    let shift = exp10 - frac_part.len() as i64;
    let ten = Integer::from(10);
    Ok(if shift >= 0 {
        Rational::from_integer(n * ten.pow(shift as u32))
    } else {
        Rational::new(n, ten.pow((-shift) as u32))
    })
}

/// Renders a rational as `p/q` (or just `p` when the denominator is 1).
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// floor(log2 |x|) for nonzero x, exact.
pub fn floor_log2_abs(x: &Rational) -> i64 {
    assert!(!x.is_zero(), "log of zero");
    let n = x.numer().abs();
    let d = x.denom().clone();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // |x| is within a factor of 2 of 2^e; fix up by exact comparison.
    let two = Integer::from(2);
    loop {
        // check 2^e <= |x| < 2^(e+1), i.e. d*2^e <= n < d*2^(e+1)
        let lo_ok = if e >= 0 {
            &d * two.pow(e as u32) <= n
        } else {
            d.clone() <= &n * two.pow((-e) as u32)
        };
        if !lo_ok {
            e -= 1;
            continue;
        }
        let hi_ok = if e + 1 >= 0 {
            n < &d * two.pow((e + 1) as u32)
        } else {
            &n * two.pow((-(e + 1)) as u32) < d
        };
        if !hi_ok {
            e += 1;
            continue;
        }
        return e;
    }
}

/// A dyadic number `mantissa * 2^exponent`, kept with odd (or zero) mantissa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mantissa: Integer,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: Integer, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: Integer::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: Integer::one(),
            exponent: 0,
        }
    }

    /// 2^e.
    pub fn power_of_two(e: i64) -> Self {
        Dyadic {
            mantissa: Integer::one(),
            exponent: e,
        }
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent += tz as i64;
        }
    }

    pub fn mantissa(&self) -> &Integer {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << (self.exponent as usize))
        } else {
            Rational::new(
                self.mantissa.clone(),
                Integer::one() << ((-self.exponent) as usize),
            )
        }
    }

    /// A dyadic point strictly inside (lo, hi), close to the midpoint, using
    /// the coarsest power-of-two grid that still guarantees geometric
    /// shrinkage of the interval (new width <= 3/4 of the old one).
    pub fn between(lo: &Rational, hi: &Rational) -> Dyadic {
        assert!(lo < hi, "empty interval");
        let width = hi - lo;
        // smallest k with 2^-k <= width/4, so the grid has >= 2 interior points
        let k = -(floor_log2_abs(&width) - 2);
        let center = (lo + hi) / rat_int(2);
        // round center to the grid: m = round(center * 2^k)
        let scaled = if k >= 0 {
            center * rat_int(Integer::one() << (k as usize))
        } else {
            center / rat_int(Integer::one() << ((-k) as usize))
        };
        let m = round_nearest(&scaled);
        let d = Dyadic::new(m, -k);
        let v = d.to_rational();
        debug_assert!(*lo < v && v < *hi);
        d
    }
}

/// Rounds to the nearest integer (ties away from zero; used only for grid
/// selection where the tie direction is irrelevant).
fn round_nearest(x: &Rational) -> Integer {
    let two = Integer::from(2);
    let n2 = x.numer() * &two;
    let d = x.denom();
    let q = Rational::new(n2 + d * x.numer().sign_num(), d * two);
    q.trunc().to_integer()
}

trait SignNum {
    fn sign_num(&self) -> Integer;
}

impl SignNum for Integer {
    fn sign_num(&self) -> Integer {
        match self.sign() {
            Sign::Minus => Integer::from(-1),
            Sign::NoSign => Integer::zero(),
            Sign::Plus => Integer::one(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-17/2").unwrap(), rat(-17, 2));
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert_eq!(parse_rational("1e-12").unwrap(), rat(1, 1_000_000_000_000));
        assert_eq!(parse_rational("2.5e3").unwrap(), rat_int(2500));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn pow_signs() {
        assert_eq!(rat_pow(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1), rat(3, 2));
        assert_eq!(rat_pow(&rat(-2, 1), 3), rat_int(-8));
        assert_eq!(rat_pow(&rat(7, 5), 0), rat_int(1));
    }

    #[test]
    fn floor_log2() {
        assert_eq!(floor_log2_abs(&rat_int(1)), 0);
        assert_eq!(floor_log2_abs(&rat_int(2)), 1);
        assert_eq!(floor_log2_abs(&rat_int(3)), 1);
        assert_eq!(floor_log2_abs(&rat(1, 2)), -1);
        assert_eq!(floor_log2_abs(&rat(3, 8)), -2);
        assert_eq!(floor_log2_abs(&rat(-5, 1)), 2);
    }

    #[test]
    fn dyadic_normal_form() {
        let d = Dyadic::new(Integer::from(12), 0);
        assert_eq!(*d.mantissa(), Integer::from(3));
        assert_eq!(d.exponent(), 2);
        assert_eq!(d.to_rational(), rat_int(12));
    }

    #[test]
    fn dyadic_between_shrinks() {
        let mut lo = rat(1, 3);
        let mut hi = rat(22, 7);
        for _ in 0..40 {
            let w = &hi - &lo;
            let m = Dyadic::between(&lo, &hi).to_rational();
            assert!(lo < m && m < hi);
            // keep the left half; width must shrink geometrically
            hi = m;
            assert!(&hi - &lo <= w * rat(3, 4));
        }
    }
}
