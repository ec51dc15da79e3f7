//! Correctly-rounded decimal rendering of exact rationals.
//!
//! Values print in a canonical scientific form `d.ddd…e±k` with a configured
//! number of significant digits, rounded half-to-even. The rendering is a
//! pure function of the rational value, so equal rationals always produce
//! byte-identical strings.

use crate::rational::{rat_int, Integer, Rational};
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A rendered decimal: sign, `sig` mantissa digits, and a base-10 exponent
/// for the leading digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub negative: bool,
    pub digits: String,
    pub exp10: i64,
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits == "0" {
            return write!(f, "0");
        }
        if self.negative {
            write!(f, "-")?;
        }
        if self.digits.len() == 1 {
            write!(f, "{}e{}", self.digits, self.exp10)
        } else {
            write!(f, "{}.{}e{}", &self.digits[..1], &self.digits[1..], self.exp10)
        }
    }
}

/// floor(log10 |x|) for nonzero x, exact.
pub fn floor_log10_abs(x: &Rational) -> i64 {
    assert!(!x.is_zero());
    let n = x.numer().abs();
    let d = x.denom().clone();
    // first guess from bit lengths: log10(x) = log2(x) * log10(2)
    let mut e = ((n.bits() as i64 - d.bits() as i64) as f64 * std::f64::consts::LOG10_2).floor()
        as i64;
    let ten = Integer::from(10);
    loop {
        let lo_ok = if e >= 0 {
            &d * ten.pow(e as u32) <= n
        } else {
            d.clone() <= &n * ten.pow((-e) as u32)
        };
        if !lo_ok {
            e -= 1;
            continue;
        }
        let hi_ok = if e + 1 >= 0 {
            n < &d * ten.pow((e + 1) as u32)
        } else {
            &n * ten.pow((-(e + 1)) as u32) < d
        };
        if !hi_ok {
            e += 1;
            continue;
        }
        return e;
    }
}

/// Rounds p/q (q > 0) to the nearest integer, ties to even.
fn round_half_even(p: &Integer, q: &Integer) -> Integer {
    let (d, r) = p.div_mod_floor(q);
    let twice = &r * Integer::from(2);
    match twice.cmp(q) {
        std::cmp::Ordering::Less => d,
        std::cmp::Ordering::Greater => d + 1,
        std::cmp::Ordering::Equal => {
            if d.is_even() {
                d
            } else {
                d + 1
            }
        }
    }
}

/// Renders `x` with `sig` significant digits, round-half-even.
pub fn decimal_of(x: &Rational, sig: usize) -> Decimal {
    assert!(sig >= 1);
    if x.is_zero() {
        return Decimal {
            negative: false,
            digits: "0".into(),
            exp10: 0,
        };
    }
    let negative = x.is_negative();
    let ax = x.abs();
    let mut e = floor_log10_abs(&ax);
    let ten = Integer::from(10);
    // scale so that the integer part has exactly `sig` digits
    let shift = sig as i64 - 1 - e;
    let (p, q) = if shift >= 0 {
        (ax.numer() * ten.pow(shift as u32), ax.denom().clone())
    } else {
        (ax.numer().clone(), ax.denom() * ten.pow((-shift) as u32))
    };
    let mut d = round_half_even(&p, &q);
    let top = ten.pow(sig as u32);
    if d == top {
        // rounding carried into the next decade
        d = ten.pow(sig as u32 - 1);
        e += 1;
    }
    let digits = d.to_string();
    debug_assert_eq!(digits.len(), sig);
    Decimal {
        negative,
        digits,
        exp10: e,
    }
}

/// The edges of the rounding cell that `x` renders into: every value
/// strictly inside `(lo, hi)` renders to the same string as `x`, and `x`
/// itself lies in `[lo, hi]` (an endpoint exactly when `x` is a tie value).
pub fn rounding_boundaries(x: &Rational, sig: usize) -> (Rational, Rational) {
    let d = decimal_of(x, sig);
    assert!(d.digits != "0", "boundaries undefined at zero");
    let m: Integer = d.digits.parse().unwrap();
    let unit_exp = d.exp10 - sig as i64 + 1;
    let unit = rat_pow10(unit_exp);
    let half = Rational::new(Integer::one(), Integer::from(2));
    let lo = (rat_int(m.clone()) - &half) * &unit;
    let hi = (rat_int(m) + &half) * &unit;
    if d.negative {
        (-hi, -lo)
    } else {
        (lo, hi)
    }
}

/// 10^e as a rational, any sign of e.
pub fn rat_pow10(e: i64) -> Rational {
    let ten = Integer::from(10);
    if e >= 0 {
        Rational::from_integer(ten.pow(e as u32))
    } else {
        Rational::new(Integer::one(), ten.pow((-e) as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_pow};

    #[test]
    fn basic_rendering() {
        assert_eq!(decimal_of(&rat(1, 3), 10).to_string(), "3.333333333e-1");
        assert_eq!(decimal_of(&rat(-1, 8), 3).to_string(), "-1.25e-1");
        assert_eq!(decimal_of(&rat_int(1), 10).to_string(), "1.000000000e0");
        assert_eq!(decimal_of(&rat_int(0), 10).to_string(), "0");
        assert_eq!(decimal_of(&rat_int(2500), 2).to_string(), "2.5e3");
    }

    #[test]
    fn half_even_ties() {
        assert_eq!(decimal_of(&rat(25, 10), 1).to_string(), "2e0");
        assert_eq!(decimal_of(&rat(35, 10), 1).to_string(), "4e0");
        assert_eq!(decimal_of(&rat_int(125), 2).to_string(), "1.2e2");
        assert_eq!(decimal_of(&rat_int(135), 2).to_string(), "1.4e2");
    }

    #[test]
    fn rounding_carry() {
        assert_eq!(decimal_of(&rat(999_999, 1000), 3).to_string(), "1.00e3");
        assert_eq!(decimal_of(&rat(9_999_999_999i64, 1), 10).to_string(), "9.999999999e9");
    }

    #[test]
    fn known_power_of_two() {
        // 2^-99 = 1.57772181044...e-30
        let v = rat_pow(&rat(1, 2), 99);
        assert_eq!(decimal_of(&v, 10).to_string(), "1.577721810e-30");
        // 2^-100 = 7.88860905222...e-31
        let v = rat_pow(&rat(1, 2), 100);
        assert_eq!(decimal_of(&v, 10).to_string(), "7.888609052e-31");
    }

    #[test]
    fn boundaries_bracket_value() {
        for v in [rat(1, 3), rat(-22, 7), rat(123456, 1000)] {
            let (lo, hi) = rounding_boundaries(&v, 6);
            assert!(lo <= v && v <= hi);
            // strict interior points of the cell render identically
            let probe = (&lo + &hi) / rat_int(2);
            assert_eq!(decimal_of(&probe, 6), decimal_of(&v, 6));
        }
    }
}
