use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat, ExactError, Rational};

/// Polynomial with integer coefficients, constant term first.
///
/// The coefficient vector is kept trimmed: the last entry is nonzero unless
/// the polynomial is zero, in which case the vector is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic polynomial with the given integer roots (repeats allowed).
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(IntPoly::one(), |acc, &r| &acc * &IntPoly::from_i64(&[-r, 1]))
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    ///
    /// Works on the integer `b^d p(a/b)` so no rational normalisation happens
    /// in the inner loop.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let Some(d) = self.degree() else { return 0 };
        let a = x.numer();
        let b = x.denom();
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for i in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[i] * &bpow;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact quotient over the integers, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let lead = d.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        self.to_rat().gcd(&other.to_rat()).to_primitive()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> Result<IntPoly, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self
            .primitive_part()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part())
    }

    /// An integer strictly larger than the absolute value of every complex root.
    pub fn cauchy_bound(&self) -> BigInt {
        let Some(lead) = self.leading() else {
            return BigInt::one();
        };
        let lead = lead.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        // 1 + ceil(max / lead), plus one so the bound is strict.
        BigInt::from(2) + max.div_ceil(&lead)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    match x.cmp(&BigInt::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn add_coeffs<T: Clone + Zero>(a: &[T], b: &[T], neg_b: bool) -> Vec<T>
where
    for<'x> &'x T: Add<&'x T, Output = T> + Sub<&'x T, Output = T> + Neg<Output = T>,
{
    let n = a.len().max(b.len());
    let zero = T::zero();
    (0..n)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            if neg_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

fn mul_coeffs<T: Clone + Zero>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Polynomial over the rationals, constant term first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The constant value when the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64, 1))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (RatPoly::zero(), RatPoly::zero());
        };
        if sd < dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, when `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &RatPoly) -> Option<RatPoly> {
        // Extended Euclid tracking only the coefficient of `self`.
        let mut r0 = m.clone();
        let mut r1 = self.rem(m);
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::constant(Rational::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        let c = r0.as_constant()?;
        if c.is_zero() {
            return None;
        }
        Some(t0.scale(&c.recip()).rem(m))
    }

    /// Clears denominators and content; leading coefficient positive.
    pub fn to_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }

    /// Newton power sums `p_0 .. p_{n}` of the roots (with multiplicity).
    pub fn power_sums(&self, n: usize) -> Vec<Rational> {
        let m = self.monic();
        let d = m.degree().unwrap_or(0);
        // e-coefficients: x^d + a_{d-1} x^{d-1} + ... ; e_i = (-1)^i a_{d-i}
        let a = |i: usize| -> Rational {
            if i > d {
                Rational::zero()
            } else {
                m.coeffs[d - i].clone()
            }
        };
        let mut p = Vec::with_capacity(n + 1);
        p.push(rat(d as i64, 1));
        for k in 1..=n {
            // p_k + a1 p_{k-1} + ... + a_{k-1} p_1 + k a_k = 0 (a_i coefficient of x^{d-i})
            let mut s = if k <= d {
                a(k) * rat(k as i64, 1)
            } else {
                Rational::zero()
            };
            for i in 1..k {
                if i > d {
                    break;
                }
                s += a(i) * &p[k - i];
            }
            p.push(-s);
        }
        p
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let p = IntPoly::from_i64(&[1, -2, 0, 1]);
        assert_eq!(p.to_string(), "x^3 - 2x + 1");
        assert_eq!(p.eval_int(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(p.sign_at(&rat(1, 2)), 1);
        assert_eq!(p.sign_at(&rat(3, 4)), -1);
        assert_eq!(p.sign_at(&rat(1, 1)), 0);
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_roots(&[1, 2, -3]);
        let q = p.div_exact(&IntPoly::from_i64(&[-2, 1])).unwrap();
        assert_eq!(q, IntPoly::from_roots(&[1, -3]));
        assert!(p.div_exact(&IntPoly::from_i64(&[-5, 1])).is_none());
        assert!(p.div_exact(&IntPoly::from_i64(&[1, 2])).is_none());
    }

    #[test]
    fn squarefree_and_gcd() {
        let p = &IntPoly::from_roots(&[1, 1, 2]) * &IntPoly::from_i64(&[1, 0, 1]);
        assert!(!p.is_squarefree());
        let sf = p.squarefree_part().unwrap();
        assert_eq!(sf, &IntPoly::from_roots(&[1, 2]) * &IntPoly::from_i64(&[1, 0, 1]));
        assert!(sf.is_squarefree());
        assert_eq!(IntPoly::zero().squarefree_part(), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn inverse_mod_quadratic() {
        // (x + 1) * inv = 1 mod x^2 - 5 ; inv = (x - 1)/4
        let m = IntPoly::from_i64(&[-5, 0, 1]).to_rat();
        let a = IntPoly::from_i64(&[1, 1]).to_rat();
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!(inv, RatPoly::new(vec![rat(-1, 4), rat(1, 4)]));
        assert!(m.inverse_mod(&m).is_none());
    }

    #[test]
    fn power_sums_match_roots() {
        let p = IntPoly::from_roots(&[15, 5, -1, -3]).to_rat();
        let s = p.power_sums(3);
        assert_eq!(s[0], rat(4, 1));
        assert_eq!(s[1], rat(16, 1));
        assert_eq!(s[2], rat(225 + 25 + 1 + 9, 1));
        assert_eq!(s[3], rat(3375 + 125 - 1 - 27, 1));
    }

    #[test]
    fn cauchy_bound_is_strict() {
        let p = IntPoly::from_roots(&[207, -3, -1, 69]);
        let b = p.cauchy_bound();
        assert!(b > BigInt::from(207));
    }
}
