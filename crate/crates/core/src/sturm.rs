//! Real-root counting by Sturm's theorem.
//!
//! Chains are computed over the integers with a primitive pseudo-remainder
//! sequence: each pseudo-remainder is normalized by a positive factor only,
//! so the sign structure of the classical Sturm sequence is preserved while
//! coefficient growth stays polynomial in the degree.

use crate::error::{Error, Result};
use crate::poly::{cauchy_bound, IntPoly, Polynomial};
use crate::rational::Rational;

pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (p0, _) = IntPoly::from_polynomial(p);
        let mut chain = vec![p0];
        let mut d = chain[0].derivative();
        d.make_primitive();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let f = &chain[chain.len() - 2];
                let g = &chain[chain.len() - 1];
                if g.degree() == 0 {
                    break;
                }
                let mut r = f.pseudo_rem_signed(g);
                if r.is_zero() {
                    break;
                }
                r.neg_mut();
                r.make_primitive();
                chain.push(r);
            }
        }
        Ok(SturmChain { chain })
    }

    /// True when gcd(p, p') is constant, i.e. the chain ends in a nonzero
    /// constant.
    pub fn is_square_free(&self) -> bool {
        self.chain.last().unwrap().degree() == 0
    }

    fn variations_at(&self, x: &Rational) -> Result<usize> {
        let mut count = 0usize;
        let mut prev = 0i8;
        for (i, q) in self.chain.iter().enumerate() {
            let s = q.sign_at(x);
            if i == 0 && s == 0 {
                return Err(Error::EndpointIsZero(x.to_string()));
            }
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        Ok(count)
    }

    /// Number of real zeros in the open interval (lo, hi). Requires lo < hi
    /// and nonzero values at both endpoints.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::InvalidInterval(format!("{lo} >= {hi}")));
        }
        let vl = self.variations_at(lo)?;
        let vh = self.variations_at(hi)?;
        if vh > vl {
            return Err(Error::CertificationFailed(
                "sign variations increased along the chain".into(),
            ));
        }
        Ok(vl - vh)
    }
}

/// Number of real zeros of the square-free polynomial p in (lo, hi),
/// certified by Sturm-chain sign variations.
pub fn count_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    if !chain.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    chain.count(lo, hi)
}

/// Number of negative real zeros of p; p(0) must be nonzero. The left
/// endpoint is the negated Cauchy bound, a certified proxy for -infinity.
pub fn count_negative_roots(p: &Polynomial) -> Result<usize> {
    let bound = cauchy_bound(p)?;
    count_real_roots(p, &-bound, &Rational::from_integer(0.into()))
}

/// Number of positive real zeros of p; p(0) must be nonzero.
pub fn count_positive_roots(p: &Polynomial) -> Result<usize> {
    let bound = cauchy_bound(p)?;
    count_real_roots(p, &Rational::from_integer(0.into()), &bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn classic_quartic() {
        // x^4 + x^3 - x - 1 = (x-1)(x+1)(x^2+x+1): real roots 1 and -1
        let q = p(&[-1, -1, 0, 1, 1]);
        assert_eq!(count_real_roots(&q, &rat_int(-2), &rat_int(2)).unwrap(), 2);
        assert_eq!(count_real_roots(&q, &rat_int(0), &rat_int(2)).unwrap(), 1);
        assert_eq!(count_real_roots(&q, &rat_int(2), &rat_int(3)).unwrap(), 0);
    }

    #[test]
    fn eulerian_quadratic_on_subinterval() {
        // 1 + 4x + x^2 has one zero in (-1, 0), namely -2 + sqrt(3)
        let q = p(&[1, 4, 1]);
        assert_eq!(count_real_roots(&q, &rat_int(-1), &rat_int(0)).unwrap(), 1);
        assert_eq!(count_negative_roots(&q).unwrap(), 2);
        assert_eq!(count_positive_roots(&q).unwrap(), 0);
    }

    #[test]
    fn endpoint_zero_is_an_error() {
        let q = p(&[-1, 0, 1]);
        assert!(matches!(
            count_real_roots(&q, &rat_int(1), &rat_int(2)),
            Err(Error::EndpointIsZero(_))
        ));
        assert!(matches!(
            count_real_roots(&q, &rat_int(2), &rat_int(1)),
            Err(Error::InvalidInterval(_))
        ));
    }

    #[test]
    fn non_square_free_rejected() {
        let q = &p(&[1, 1]) * &p(&[1, 1]);
        assert!(matches!(
            count_real_roots(&q, &rat_int(-3), &rat_int(3)),
            Err(Error::NotSquareFree)
        ));
    }

    #[test]
    fn odd_count_across_sign_change() {
        let q = p(&[-5, -2, 0, 1]); // x^3 - 2x - 5, one real root near 2.09
        let lo = rat(-5, 2);
        let hi = rat_int(3);
        let fl = q.eval(&lo);
        let fh = q.eval(&hi);
        assert!(fl * fh < Rational::from_integer(0.into()));
        let n = count_real_roots(&q, &lo, &hi).unwrap();
        assert_eq!(n % 2, 1);
    }

    #[test]
    fn constant_polynomial_has_no_roots() {
        let q = p(&[7]);
        assert_eq!(count_real_roots(&q, &rat_int(-1), &rat_int(1)).unwrap(), 0);
    }
}
