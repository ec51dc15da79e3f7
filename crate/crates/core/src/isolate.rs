//! Certified real-root isolation and refinement.
//!
//! Isolation is bisection with Descartes' rule of signs on unit-interval
//! normalizations (the Vincent–Collins–Akritas scheme), run on p(x) for
//! positive zeros and on p(-x) for negative ones. A reported box has
//! variation count exactly one, so it provably contains a single zero; a
//! discarded box has count zero, so enumeration over a window is provably
//! complete. Bisection endpoints are dyadic throughout, keeping denominators
//! powers of two.

use crate::decimal::{decimal_of, rounding_boundaries, Decimal};
use crate::error::{Error, Result};
use crate::poly::{cauchy_bound, IntPoly, Polynomial};
use crate::rational::{floor_log2_abs, rat_int, Dyadic, Integer, Rational};
use crate::sturm::SturmChain;
use num_traits::{One, Signed, Zero};

/// A rational interval certified to contain exactly one zero of its owning
/// square-free polynomial, witnessed by opposite endpoint signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }
}

/// A refined zero: the true zero lies within value ± half_width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEstimate {
    pub value: Rational,
    pub half_width: Rational,
    pub multiplicity: usize,
}

impl RootEstimate {
    pub fn exact(value: Rational) -> Self {
        RootEstimate {
            value,
            half_width: Rational::zero(),
            multiplicity: 1,
        }
    }

    pub fn lower(&self) -> Rational {
        &self.value - &self.half_width
    }

    pub fn upper(&self) -> Rational {
        &self.value + &self.half_width
    }
}

/// A refined zero together with the bracketing interval it came from, so
/// further tightening can resume without re-isolating.
#[derive(Debug, Clone)]
pub struct RefinedZero {
    pub interval: IsolatingInterval,
    pub estimate: RootEstimate,
}

// ---- unit-interval bisection ----

/// Location of a zero of the working polynomial inside (0, 1), in dyadic
/// node coordinates.
enum UnitLoc {
    /// Open box (c/2^k, (c+1)/2^k) with exactly one zero inside.
    Box { c: Integer, k: u32 },
    /// Exact zero at num/2^k.
    Exact { num: Integer, k: u32 },
}

/// Sign variations of the (0,1) Descartes transform (1+x)^d a(1/(1+x)).
/// Zero means no zeros in (0,1); one means exactly one.
fn descartes_var_unit(a: &IntPoly) -> usize {
    let mut b = a.reversed();
    b.taylor_shift_1();
    b.sign_variations()
}

/// Complete enumeration of the zeros of `start` in the open unit interval.
/// Requires a square-free polynomial with nonzero values at 0 and 1.
fn vca_unit(start: IntPoly) -> Vec<UnitLoc> {
    let mut out = Vec::new();
    if start.is_zero() || start.degree() == 0 {
        return out;
    }
    let two = Integer::from(2);
    let one = Integer::one();
    let mut stack = vec![(Integer::zero(), 0u32, start)];
    while let Some((c, k, mut a)) = stack.pop() {
        a.strip_two_content();
        match descartes_var_unit(&a) {
            0 => {}
            1 => out.push(UnitLoc::Box { c, k }),
            _ => {
                let mut left = a.halve_variable();
                let mut right = left.clone();
                right.taylor_shift_1();
                if right.constant_term().is_zero() {
                    // exact zero at the midpoint; divide it out and resplit
                    out.push(UnitLoc::Exact {
                        num: &c * &two + &one,
                        k: k + 1,
                    });
                    a = a.div_exact_linear(&two, &one);
                    left = a.halve_variable();
                    right = left.clone();
                    right.taylor_shift_1();
                }
                stack.push((&c * &two, k + 1, left));
                stack.push((&c * &two + &one, k + 1, right));
            }
        }
    }
    out
}

/// A zero location of a polynomial on the real line.
#[derive(Debug, Clone)]
enum RootLoc {
    Interval(Rational, Rational),
    Exact(Rational),
}

impl RootLoc {
    fn low(&self) -> &Rational {
        match self {
            RootLoc::Interval(a, _) => a,
            RootLoc::Exact(x) => x,
        }
    }

    fn high(&self) -> &Rational {
        match self {
            RootLoc::Interval(_, b) => b,
            RootLoc::Exact(x) => x,
        }
    }
}

/// Maps unit locations of w(2^e x) to locations of w, optionally reflecting
/// onto the negative axis.
fn map_unit_locs(locs: Vec<UnitLoc>, e: i64, negate: bool) -> Vec<RootLoc> {
    let mut out: Vec<RootLoc> = locs
        .into_iter()
        .map(|loc| match loc {
            UnitLoc::Box { c, k } => {
                let lo = Dyadic::new(c.clone(), e - k as i64).to_rational();
                let hi = Dyadic::new(c + Integer::one(), e - k as i64).to_rational();
                if negate {
                    RootLoc::Interval(-hi, -lo)
                } else {
                    RootLoc::Interval(lo, hi)
                }
            }
            UnitLoc::Exact { num, k } => {
                let x = Dyadic::new(num, e - k as i64).to_rational();
                RootLoc::Exact(if negate { -x } else { x })
            }
        })
        .collect();
    out.sort_by(|a, b| a.low().cmp(b.low()));
    out
}

/// All real-zero locations of a square-free polynomial, sorted ascending.
fn isolate_all_locs(p: &Polynomial) -> Result<Vec<RootLoc>> {
    let k = p.order_at_origin();
    let q = p.div_x_pow(k);
    let mut locs = Vec::new();
    if k > 0 {
        locs.push(RootLoc::Exact(Rational::zero()));
    }
    if q.degree() == Some(0) {
        return Ok(locs);
    }
    let (iq, _) = IntPoly::from_polynomial(&q);
    let e = floor_log2_abs(&cauchy_bound(&q)?) + 1;
    let pos = vca_unit(iq.scale_variable_pow2(e));
    locs.extend(map_unit_locs(pos, e, false));
    let neg = vca_unit(iq.reflected().scale_variable_pow2(e));
    locs.extend(map_unit_locs(neg, e, true));
    locs.sort_by(|a, b| a.low().cmp(b.low()));
    Ok(locs)
}

/// Shrinks a box whose endpoints happen to be exact zeros of p (possible
/// when an exact rational zero abuts the box) until both endpoint signs of
/// the full polynomial are nonzero, preserving the single zero inside.
/// Bisection decisions use the reduced polynomial (exact zeros divided
/// out), whose endpoint signs are always valid. Returns the inner zero if
/// a probe lands on it exactly.
fn pull_box_off_roots(
    ip: &IntPoly,
    reduced: &IntPoly,
    lo: &mut Rational,
    hi: &mut Rational,
) -> Option<Rational> {
    while ip.sign_at(lo) == 0 || ip.sign_at(hi) == 0 {
        let mid = Dyadic::between(lo, hi).to_rational();
        let s_mid = reduced.sign_at(&mid);
        if s_mid == 0 {
            return Some(mid);
        }
        if s_mid != reduced.sign_at(lo) {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }
    None
}

/// Builds sign-certified isolating intervals from sorted locations. Exact
/// rational zeros get a small bracketing interval that excludes all other
/// zeros; `bounds`, when given, confines those brackets to a window known
/// to contain no zeros beyond the listed ones.
fn locs_to_intervals(
    p: &Polynomial,
    locs: &[RootLoc],
    bounds: Option<(&Rational, &Rational)>,
) -> Result<Vec<IsolatingInterval>> {
    let (ip, _) = IntPoly::from_polynomial(p);
    // boxes can abut an exact rational zero of p; shrink such boxes off the
    // edge, deciding halves with the exact zeros divided out
    let mut locs: Vec<RootLoc> = locs.to_vec();
    if locs.iter().any(|l| matches!(l, RootLoc::Exact(_))) {
        let mut reduced_poly = p.clone();
        for loc in &locs {
            if let RootLoc::Exact(x) = loc {
                let linear = Polynomial::new(vec![-x.clone(), Rational::one()]);
                reduced_poly = reduced_poly.div_exact(&linear)?;
            }
        }
        let (reduced, _) = IntPoly::from_polynomial(&reduced_poly);
        for loc in &mut locs {
            if let RootLoc::Interval(a, b) = loc {
                if let Some(exact) = pull_box_off_roots(&ip, &reduced, a, b) {
                    *loc = RootLoc::Exact(exact);
                }
            }
        }
    }
    let locs = &locs[..];
    let mut out = Vec::with_capacity(locs.len());
    for (i, loc) in locs.iter().enumerate() {
        let (lo, hi) = match loc {
            RootLoc::Interval(a, b) => (a.clone(), b.clone()),
            RootLoc::Exact(x) => {
                let mut delta = Rational::one();
                if i > 0 {
                    let gap = (x - locs[i - 1].high()) / rat_int(2);
                    delta = delta.min(gap);
                }
                if i + 1 < locs.len() {
                    let gap = (locs[i + 1].low() - x) / rat_int(2);
                    delta = delta.min(gap);
                }
                if let Some((wlo, whi)) = bounds {
                    delta = delta.min((x - wlo) / rat_int(2));
                    delta = delta.min((whi - x) / rat_int(2));
                }
                (x - &delta, x + &delta)
            }
        };
        let sign_lo = ip.sign_at(&lo);
        let sign_hi = ip.sign_at(&hi);
        if sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi {
            return Err(Error::CertificationFailed(
                "endpoint signs do not bracket a simple zero".into(),
            ));
        }
        out.push(IsolatingInterval {
            lo,
            hi,
            sign_lo,
            sign_hi,
        });
    }
    Ok(out)
}

/// Isolates every real zero of a square-free, nonconstant polynomial into
/// pairwise-disjoint sign-certified intervals, and certifies the total
/// count against a Sturm count over the Cauchy bound.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::InvalidParameter(
            "cannot isolate zeros of a constant".into(),
        ));
    }
    if !p.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let locs = isolate_all_locs(p)?;
    let out = locs_to_intervals(p, &locs, None)?;
    let bound = cauchy_bound(p)?;
    let chain = SturmChain::new(p)?;
    let total = chain.count(&-bound.clone(), &bound)?;
    if total != out.len() {
        return Err(Error::CertificationFailed(format!(
            "bisection found {} zeros, Sturm count is {}",
            out.len(),
            total
        )));
    }
    Ok(out)
}

/// Which side of the origin to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Negative,
    Positive,
}

/// The zeros of a polynomial nearest the origin on one side.
#[derive(Debug, Clone)]
pub struct NearOriginZeros {
    /// The square-free part actually isolated; intervals are certified for
    /// this polynomial.
    pub poly: Polynomial,
    /// Exactly the requested number of intervals, ordered from nearest the
    /// origin outward.
    pub intervals: Vec<IsolatingInterval>,
}

/// Finds the `count` zeros of p nearest the origin on the given side,
/// without isolating the rest of the spectrum. The optional hints are
/// expected zero magnitudes in increasing order; they only seed the window
/// size, never the certification. The window is grown (up to the Cauchy
/// bound, at which point the enumeration of that side is complete) until it
/// provably contains `count` zeros.
pub fn zeros_nearest_origin(
    p: &Polynomial,
    side: Side,
    count: usize,
    hints: &[Rational],
) -> Result<NearOriginZeros> {
    let sf = p.square_free_part()?;
    let k = sf.order_at_origin();
    let q = sf.div_x_pow(k);
    if count == 0 {
        return Ok(NearOriginZeros {
            poly: sf,
            intervals: Vec::new(),
        });
    }
    if q.degree() == Some(0) {
        return Err(Error::IndexOutOfRange(
            "polynomial has no zeros off the origin".into(),
        ));
    }
    let (iq, _) = IntPoly::from_polynomial(&q);
    let w = match side {
        Side::Positive => iq,
        Side::Negative => iq.reflected(),
    };
    let e_max = floor_log2_abs(&cauchy_bound(&q)?) + 1;
    let mut e = window_exponent(hints, count).unwrap_or(e_max).min(e_max);
    loop {
        let u = Dyadic::power_of_two(e).to_rational();
        if w.sign_at(&u) == 0 {
            e += 1;
            continue;
        }
        let locs = map_unit_locs(vca_unit(w.scale_variable_pow2(e)), e, false);
        if locs.len() >= count || e >= e_max {
            if locs.len() < count {
                return Err(Error::IndexOutOfRange(format!(
                    "requested {} zeros but only {} exist on that side",
                    count,
                    locs.len()
                )));
            }
            // map the whole window onto the requested side, ascending
            let mapped: Vec<RootLoc> = match side {
                Side::Positive => locs,
                Side::Negative => locs
                    .into_iter()
                    .rev()
                    .map(|loc| match loc {
                        RootLoc::Interval(a, b) => RootLoc::Interval(-b, -a),
                        RootLoc::Exact(x) => RootLoc::Exact(-x),
                    })
                    .collect(),
            };
            let (wlo, whi) = match side {
                Side::Positive => (Rational::zero(), u.clone()),
                Side::Negative => (-u.clone(), Rational::zero()),
            };
            let intervals = locs_to_intervals(&sf, &mapped, Some((&wlo, &whi)))?;
            // nearest-origin first, then truncate to the requested count
            let nearest: Vec<IsolatingInterval> = match side {
                Side::Positive => intervals.into_iter().take(count).collect(),
                Side::Negative => intervals.into_iter().rev().take(count).collect(),
            };
            return Ok(NearOriginZeros {
                poly: sf,
                intervals: nearest,
            });
        }
        e = (e + 4).min(e_max);
    }
}

fn window_exponent(hints: &[Rational], count: usize) -> Option<i64> {
    if hints.len() > count {
        let a = floor_log2_abs(&hints[count - 1]);
        let b = floor_log2_abs(&hints[count]);
        Some(((a + b) >> 1) + 1)
    } else if hints.len() == count {
        Some(floor_log2_abs(&hints[count - 1]) + 2)
    } else {
        None
    }
}

// ---- refinement ----

/// Bisects an isolating interval down to `half_width <= rel_tol * |value|`,
/// re-verifying signs exactly at every probe. Probe points are dyadic, so
/// endpoint denominators stay powers of two.
pub fn refine_root(
    p: &Polynomial,
    iv: &IsolatingInterval,
    rel_tol: &Rational,
) -> Result<RootEstimate> {
    refine_interval(p, iv, rel_tol).map(|rz| rz.estimate)
}

/// As `refine_root`, but keeps the final bracketing interval so rendering
/// can resume tightening later.
pub fn refine_interval(
    p: &Polynomial,
    iv: &IsolatingInterval,
    rel_tol: &Rational,
) -> Result<RefinedZero> {
    if rel_tol <= &Rational::zero() || rel_tol >= &Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "relative tolerance {rel_tol} outside (0, 1)"
        )));
    }
    let (ip, _) = IntPoly::from_polynomial(p);
    let sl = ip.sign_at(&iv.lo);
    let sh = ip.sign_at(&iv.hi);
    if sl == 0 || sh == 0 || sl == sh || sl != iv.sign_lo || sh != iv.sign_hi || iv.lo >= iv.hi {
        return Err(Error::InvalidInterval(
            "endpoint signs do not match a valid isolating interval".into(),
        ));
    }
    let mut rz = RefinedZero {
        interval: iv.clone(),
        estimate: RootEstimate {
            value: iv.midpoint(),
            half_width: iv.width() / rat_int(2),
            multiplicity: 1,
        },
    };
    let stop = |rz: &RefinedZero| {
        !rz.estimate.value.is_zero()
            && rz.estimate.half_width <= rel_tol * rz.estimate.value.abs()
    };
    while !stop(&rz) {
        if bisect_step(&ip, &mut rz)? {
            break; // landed exactly on the zero
        }
    }
    Ok(rz)
}

/// One dyadic bisection step; returns true if the probe hit the zero exactly.
fn bisect_step(ip: &IntPoly, rz: &mut RefinedZero) -> Result<bool> {
    let iv = &mut rz.interval;
    let mid = Dyadic::between(&iv.lo, &iv.hi).to_rational();
    let s = ip.sign_at(&mid);
    if s == 0 {
        rz.estimate = RootEstimate::exact(mid);
        return Ok(true);
    }
    if s == iv.sign_lo {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
    rz.estimate.value = iv.midpoint();
    rz.estimate.half_width = iv.width() / rat_int(2);
    Ok(false)
}

/// Renders `scale * zero` to `sig` significant digits with every printed
/// digit certified, tightening the bracket as far as needed. If the scaled
/// zero lands exactly on a rounding boundary, the tie resolves half-even.
pub fn decimal_of_scaled_root(
    p: &Polynomial,
    rz: &mut RefinedZero,
    scale: &Rational,
    sig: usize,
) -> Result<Decimal> {
    if scale.is_zero() {
        return Err(Error::InvalidParameter("zero scale".into()));
    }
    let (ip, _) = IntPoly::from_polynomial(p);
    loop {
        if rz.estimate.half_width.is_zero() {
            return Ok(decimal_of(&(&rz.estimate.value * scale), sig));
        }
        let (a, b) = {
            let x = &rz.interval.lo * scale;
            let y = &rz.interval.hi * scale;
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        };
        if a.is_negative() != b.is_negative() || a.is_zero() || b.is_zero() {
            // interval still straddles zero; tighten and retry
            bisect_step(&ip, rz)?;
            continue;
        }
        let da = decimal_of(&a, sig);
        let db = decimal_of(&b, sig);
        if da == db {
            return Ok(da);
        }
        let v = (&a + &b) / rat_int(2);
        let (e_lo, e_hi) = rounding_boundaries(&v, sig);
        let edge = [e_lo, e_hi].into_iter().find(|e| a < *e && *e < b);
        match edge {
            // endpoints render differently only because one sits exactly on
            // a cell edge; every interior point renders alike
            None => return Ok(decimal_of(&v, sig)),
            Some(edge) => {
                let x = &edge / scale;
                let s = ip.sign_at(&x);
                if s == 0 {
                    rz.estimate = RootEstimate::exact(x);
                    return Ok(decimal_of(&edge, sig));
                }
                if s == rz.interval.sign_lo {
                    rz.interval.lo = x;
                } else {
                    rz.interval.hi = x;
                }
                rz.estimate.value = rz.interval.midpoint();
                rz.estimate.half_width = rz.interval.width() / rat_int(2);
            }
        }
    }
}

/// Certified rendering of the zero itself.
pub fn decimal_of_root(p: &Polynomial, rz: &mut RefinedZero, sig: usize) -> Result<Decimal> {
    decimal_of_scaled_root(p, rz, &Rational::one(), sig)
}

// ---- interlacing ----

enum CertOrder {
    Less,
    Greater,
    Equal,
    Overlap,
}

fn cmp_certified(x: &RootEstimate, y: &RootEstimate) -> CertOrder {
    if x.value == y.value && x.half_width == y.half_width {
        return CertOrder::Equal;
    }
    if x.lower() > y.upper() {
        CertOrder::Greater
    } else if x.upper() < y.lower() {
        CertOrder::Less
    } else {
        CertOrder::Overlap
    }
}

/// True iff the two zero sets strictly interlace: merged in decreasing
/// order, the sources alternate, with every comparison certified by the
/// estimates' intervals (midpoints are never compared). Both inputs must be
/// sorted in decreasing order; overlapping (non-identical) certified
/// intervals are an error, since no strict comparison is possible.
pub fn interlaces(zeros_a: &[RootEstimate], zeros_b: &[RootEstimate]) -> Result<bool> {
    for list in [zeros_a, zeros_b] {
        for w in list.windows(2) {
            match cmp_certified(&w[0], &w[1]) {
                CertOrder::Greater => {}
                CertOrder::Overlap => return Err(Error::InsufficientRefinement),
                _ => {
                    return Err(Error::InvalidParameter(
                        "zero sequences must be sorted in decreasing order".into(),
                    ))
                }
            }
        }
    }
    let (mut i, mut j) = (0usize, 0usize);
    let mut last: Option<bool> = None; // true = from a, false = from b
    while i < zeros_a.len() && j < zeros_b.len() {
        let take_a = match cmp_certified(&zeros_a[i], &zeros_b[j]) {
            CertOrder::Greater => true,
            CertOrder::Less => false,
            CertOrder::Equal => return Ok(false),
            CertOrder::Overlap => return Err(Error::InsufficientRefinement),
        };
        if last == Some(take_a) {
            return Ok(false);
        }
        last = Some(take_a);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    let rest_a = zeros_a.len() - i;
    let rest_b = zeros_b.len() - j;
    match (rest_a, rest_b) {
        (0, 0) => Ok(true),
        (1, 0) => Ok(last != Some(true)),
        (0, 1) => Ok(last != Some(false)),
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    fn tol() -> Rational {
        rat(1, 1_000_000_000_000)
    }

    fn refine_all(q: &Polynomial, ivs: &[IsolatingInterval]) -> Vec<RootEstimate> {
        ivs.iter().map(|iv| refine_root(q, iv, &tol()).unwrap()).collect()
    }

    #[test]
    fn quadratic_isolation_and_vieta() {
        // 1 + 4x + x^2 with zeros -2 +- sqrt(3)
        let q = p(&[1, 4, 1]);
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 2);
        let roots = refine_all(&q, &ivs);
        let sum = &roots[0].value + &roots[1].value;
        let prod = &roots[0].value * &roots[1].value;
        let eps = rat(1, 100_000_000_000);
        assert!((sum + rat_int(4)).abs() < eps);
        assert!((prod - rat_int(1)).abs() < eps);
    }

    #[test]
    fn modified_eulerian_cubic_zeros_in_unit_interval() {
        // 1 + 6x + 6x^2: zeros (-3 +- sqrt(3))/6, both in (-1, 0)
        let q = p(&[1, 6, 6]);
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 2);
        let roots = refine_all(&q, &ivs);
        for r in &roots {
            assert!(r.lower() > rat_int(-1) && r.upper() < rat_int(0));
        }
        let eps = rat(1, 100_000_000_000);
        assert!((&roots[0].value + &roots[1].value + rat_int(1)).abs() < eps);
        assert!((&roots[0].value * &roots[1].value - rat(1, 6)).abs() < eps);
    }

    #[test]
    fn linear_polynomial_single_interval() {
        let q = Polynomial::new(vec![rat(-1, 3), rat_int(1)]); // x - 1/3
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 1);
        let est = refine_root(&q, &ivs[0], &tol()).unwrap();
        assert!((est.lower()..=est.upper()).contains(&rat(1, 3)));
        assert!(est.half_width <= tol() * est.value.abs());
    }

    #[test]
    fn exact_dyadic_root_found() {
        // (2x - 1)(x - 2)(x + 3)
        let q = &(&p(&[-1, 2]) * &p(&[-2, 1])) * &p(&[3, 1]);
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 3);
        // one interval must contain exactly 1/2
        assert!(ivs.iter().any(|iv| iv.contains(&rat(1, 2))));
    }

    #[test]
    fn non_square_free_is_rejected() {
        let q = &p(&[1, 1]) * &p(&[1, 1]);
        assert!(matches!(isolate_real_roots(&q), Err(Error::NotSquareFree)));
    }

    #[test]
    fn refine_stays_inside_and_keeps_sign_change() {
        let q = p(&[-2, 0, 1]); // x^2 - 2
        let ivs = isolate_real_roots(&q).unwrap();
        for iv in &ivs {
            let rz = refine_interval(&q, iv, &tol()).unwrap();
            assert!(rz.interval.lo >= iv.lo && rz.interval.hi <= iv.hi);
            assert_ne!(rz.interval.sign_lo, rz.interval.sign_hi);
            assert!(rz.estimate.half_width <= tol() * rz.estimate.value.abs());
        }
    }

    #[test]
    fn nearest_origin_matches_full_isolation() {
        // zeros at -1/2, -3, -10 and 4
        let q = &(&(&p(&[1, 2]) * &p(&[3, 1])) * &p(&[10, 1])) * &p(&[-4, 1]);
        let near = zeros_nearest_origin(&q, Side::Negative, 2, &[]).unwrap();
        assert_eq!(near.intervals.len(), 2);
        assert!(near.intervals[0].contains(&rat(-1, 2)));
        assert!(near.intervals[1].contains(&rat_int(-3)));
        let pos = zeros_nearest_origin(&q, Side::Positive, 1, &[]).unwrap();
        assert!(pos.intervals[0].contains(&rat_int(4)));
    }

    #[test]
    fn nearest_origin_window_from_hints() {
        let q = &(&p(&[1, 2]) * &p(&[3, 1])) * &p(&[10, 1]);
        let hints = vec![rat(1, 2), rat_int(3), rat_int(10)];
        let near = zeros_nearest_origin(&q, Side::Negative, 2, &hints).unwrap();
        assert!(near.intervals[0].contains(&rat(-1, 2)));
        assert!(near.intervals[1].contains(&rat_int(-3)));
    }

    #[test]
    fn too_many_zeros_requested() {
        let q = p(&[-1, 0, 1]);
        assert!(matches!(
            zeros_nearest_origin(&q, Side::Negative, 2, &[]),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    fn est(v: Rational) -> RootEstimate {
        RootEstimate {
            value: v,
            half_width: rat(1, 1000),
            multiplicity: 1,
        }
    }

    #[test]
    fn interlacing_basics() {
        let a = vec![est(rat_int(-1)), est(rat_int(-5)), est(rat_int(-9))];
        let b = vec![est(rat_int(-3)), est(rat_int(-7))];
        assert!(interlaces(&a, &b).unwrap());
        assert!(interlaces(&b, &a).unwrap());
        let c = vec![est(rat_int(-3)), est(rat_int(-4))];
        assert!(!interlaces(&a, &c).unwrap());
        // identical single-zero lists: no strict interleaving
        let d = vec![est(rat_int(-2))];
        assert!(!interlaces(&d, &d.clone()).unwrap());
    }

    #[test]
    fn interlacing_overlap_is_an_error() {
        let a = vec![est(rat_int(-1))];
        let b = vec![est(rat_int(-1) + rat(1, 10_000))];
        assert!(matches!(
            interlaces(&a, &b),
            Err(Error::InsufficientRefinement)
        ));
    }

    #[test]
    fn certified_decimal_rendering() {
        let q = p(&[-2, 0, 1]); // sqrt(2) = 1.414213562...
        let ivs = isolate_real_roots(&q).unwrap();
        let pos = ivs.iter().find(|iv| iv.hi > rat_int(0)).unwrap();
        let mut rz = refine_interval(&q, pos, &tol()).unwrap();
        let d = decimal_of_root(&q, &mut rz, 10).unwrap();
        assert_eq!(d.to_string(), "1.414213562e0");
        // scaled rendering: sqrt(2)/2 = 0.7071067811...
        let mut rz = refine_interval(&q, pos, &tol()).unwrap();
        let d = decimal_of_scaled_root(&q, &mut rz, &rat(1, 2), 10).unwrap();
        assert_eq!(d.to_string(), "7.071067812e-1");
    }

    #[test]
    fn certified_decimal_of_exact_rational_root() {
        // zero at exactly 1/4, which is also a rendering tie at 1 digit
        let q = Polynomial::new(vec![rat(-1, 4), rat_int(1)]);
        let ivs = isolate_real_roots(&q).unwrap();
        let mut rz = refine_interval(&q, &ivs[0], &rat(1, 1000)).unwrap();
        let d = decimal_of_root(&q, &mut rz, 1).unwrap();
        // 2.5e-1 ties to even: 2e-1
        assert_eq!(d.to_string(), "2e-1");
    }
}
