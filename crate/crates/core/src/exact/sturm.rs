//! Real root isolation by Sturm sequences with rational endpoints.
//!
//! All interval endpoints are dyadic rationals chosen so that they are never
//! roots of the polynomial being isolated; every returned interval is open,
//! has a strict sign change of the polynomial across it and contains exactly
//! one real root.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, IntPoly, Rational};

/// Sturm chain `p, p', -rem(p, p'), ...`, each member rescaled to a primitive
/// integer polynomial by a positive factor (which leaves signs unchanged).
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmChain { polys };
        }
        polys.push(p.derivative());
        loop {
            let n = polys.len();
            let r = polys[n - 2].to_rat().rem(&polys[n - 1].to_rat());
            if r.is_zero() {
                break;
            }
            // to_primitive forces a positive leading coefficient; undo that
            // so only a positive factor separates it from -r.
            let neg = r.leading().is_some_and(|c| c.is_positive());
            let mut q = r.to_primitive();
            if neg {
                q = -&q;
            }
            polys.push(q);
        }
        SturmChain { polys }
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.polys.iter().map(|p| {
            let lead = p.leading().map(|c| if c.is_positive() { 1 } else { -1 }).unwrap_or(0);
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn total_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn roots_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Number of distinct real roots `≤ x`.
    pub fn roots_at_most(&self, x: &Rational) -> usize {
        self.variations_at_infinity(false) - self.variations_at(x)
    }
}

/// Isolating intervals for every real root of a squarefree polynomial,
/// ascending. Endpoints are never roots.
pub fn isolate(p: &IntPoly) -> Vec<(Rational, Rational)> {
    let chain = SturmChain::new(p);
    let total = chain.total_roots();
    if total == 0 {
        return Vec::new();
    }
    let b = Rational::from_integer(p.cauchy_bound());
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-b.clone(), b, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                let left = chain.roots_in(&lo, &mid);
                stack.push((mid.clone(), hi, count - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// A point strictly inside `(lo, hi)` that is not a root of `p`.
fn split_point(p: &IntPoly, lo: &Rational, hi: &Rational) -> Rational {
    let half = (lo + hi) / rat(2, 1);
    if p.sign_at(&half) != 0 {
        return half;
    }
    // p has finitely many roots; walk toward lo until we leave them.
    let mut den = 3i64;
    loop {
        let cand = lo + (hi - lo) * rat(den / 2, den);
        if p.sign_at(&cand) != 0 && &cand > lo && &cand < hi {
            return cand;
        }
        den += 2;
    }
}

/// Shrinks an isolating interval of a simple root of `p` below `width`.
/// Returns `Err(x)` when an evaluation point hits the root `x` exactly.
pub fn refine(
    p: &IntPoly,
    mut lo: Rational,
    mut hi: Rational,
    width: &Rational,
) -> Result<(Rational, Rational), Rational> {
    let slo = p.sign_at(&lo);
    debug_assert!(slo != 0 && slo != p.sign_at(&hi));
    let two = rat(2, 1);
    while &(&hi - &lo) >= width {
        let mid = (&lo + &hi) / &two;
        match p.sign_at(&mid) {
            0 => return Err(mid),
            s if s == slo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo, hi))
}

/// `2^-bits` as a rational.
pub fn dyadic_width(bits: u64) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

pub(crate) fn bit_length(x: &BigInt) -> u64 {
    if x.is_zero() {
        0
    } else {
        x.abs().bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts() {
        let p = IntPoly::from_roots(&[-3, -1, 5, 15]);
        let c = SturmChain::new(&p);
        assert_eq!(c.total_roots(), 4);
        assert_eq!(c.roots_at_most(&rat(-3, 1)), 1);
        assert_eq!(c.roots_at_most(&rat(-4, 1)), 0);
        assert_eq!(c.roots_in(&rat(0, 1), &rat(20, 1)), 2);
    }

    #[test]
    fn isolates_sqrt5() {
        let p = IntPoly::from_i64(&[-5, 0, 1]);
        let iv = isolate(&p);
        assert_eq!(iv.len(), 2);
        for (lo, hi) in &iv {
            assert!(p.sign_at(lo) * p.sign_at(hi) < 0);
        }
        let (lo, hi) = refine(&p, iv[1].0.clone(), iv[1].1.clone(), &dyadic_width(30)).unwrap();
        let mid: f64 = num_traits::ToPrimitive::to_f64(&((lo + hi) / rat(2, 1))).unwrap();
        assert!((mid - 5f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate(&IntPoly::from_i64(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn midpoint_roots_are_avoided() {
        // Cauchy bound for x(x-1)(x+1) is symmetric, so 0 is the first midpoint.
        let p = IntPoly::from_roots(&[-1, 0, 1]);
        let iv = isolate(&p);
        assert_eq!(iv.len(), 3);
        for (lo, hi) in &iv {
            assert!(p.sign_at(lo) != 0 && p.sign_at(hi) != 0);
        }
    }
}
