use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::{self, bit_length, dyadic_width, SturmChain};
use super::{rat, ExactError, IntPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraicKind {
    ExactInteger,
    ExactRational,
    IsolatedRoot,
}

/// A real algebraic number: either an exact rational, or the unique root of
/// `factor` inside the open interval `(lo, hi)`.
///
/// `factor` is primitive with positive leading coefficient. For values built
/// from real-rooted polynomials (every characteristic polynomial in this
/// crate) it is the minimal polynomial.
#[derive(Clone, Debug)]
pub struct AlgebraicValue {
    kind: AlgebraicKind,
    factor: IntPoly,
    lo: Rational,
    hi: Rational,
    approx: f64,
}

const APPROX_BITS: u64 = 44; // interval width below 1e-13 before taking the midpoint

impl AlgebraicValue {
    pub fn from_rational(q: Rational) -> Self {
        let kind = if q.is_integer() {
            AlgebraicKind::ExactInteger
        } else {
            AlgebraicKind::ExactRational
        };
        let factor = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicValue {
            kind,
            factor,
            approx: q.to_f64().unwrap_or(f64::NAN),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    /// Root of `factor` isolated by `(lo, hi)`. The factor must be squarefree
    /// with opposite nonzero signs at the endpoints and a single root inside.
    pub fn isolated(factor: IntPoly, lo: Rational, hi: Rational) -> Self {
        let factor = factor.primitive_part();
        if factor.degree() == Some(1) {
            let c = factor.coeffs();
            return Self::from_rational(Rational::new(-c[0].clone(), c[1].clone()));
        }
        match sturm::refine(&factor, lo, hi, &dyadic_width(APPROX_BITS)) {
            Err(x) => Self::from_rational(x),
            Ok((lo, hi)) => {
                let approx = ((&lo + &hi) / rat(2, 1)).to_f64().unwrap_or(f64::NAN);
                AlgebraicValue {
                    kind: AlgebraicKind::IsolatedRoot,
                    factor,
                    lo,
                    hi,
                    approx,
                }
            }
        }
    }

    pub fn kind(&self) -> AlgebraicKind {
        self.kind
    }

    pub fn factor(&self) -> &IntPoly {
        &self.factor
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    pub fn degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }

    pub fn is_exact(&self) -> bool {
        self.kind != AlgebraicKind::IsolatedRoot
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        (self.kind == AlgebraicKind::ExactInteger).then(|| self.lo.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// Interval shrunk below `width`; exact values are returned unchanged.
    pub fn refined(&self, width: &Rational) -> AlgebraicValue {
        if self.is_exact() {
            return self.clone();
        }
        match sturm::refine(&self.factor, self.lo.clone(), self.hi.clone(), width) {
            Err(x) => Self::from_rational(x),
            Ok((lo, hi)) => AlgebraicValue {
                lo,
                hi,
                ..self.clone()
            },
        }
    }

    /// Exact comparison with a rational. `Equal` only when the value is `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(q);
        }
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let sq = self.factor.sign_at(q);
        if sq == 0 {
            return Ordering::Equal;
        }
        if sq == self.factor.sign_at(&self.lo) {
            // no sign change on (lo, q]: the root lies above q
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.cmp_rational(&rat(n, 1))
    }

    /// Exact comparison of two algebraic values.
    pub fn cmp_algebraic(&self, other: &AlgebraicValue) -> Ordering {
        if let Some(q) = other.as_rational() {
            return self.cmp_rational(q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rational(q).reverse();
        }
        let common = self.factor.gcd(&other.factor);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if common.degree().unwrap_or(0) > 0 {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                // Both values are the unique roots of their factors in their
                // intervals; a root of the common factor inside the overlap is
                // therefore both of them.
                if common.sign_at(&lo) != 0
                    && common.sign_at(&hi) != 0
                    && SturmChain::new(&common).roots_in(&lo, &hi) > 0
                {
                    return Ordering::Equal;
                }
            }
            let wa = &a.hi - &a.lo;
            let wb = &b.hi - &b.lo;
            let w = (&wa).min(&wb).clone() / rat(2, 1);
            a = a.refined(&w);
            b = b.refined(&w);
            if a.is_exact() || b.is_exact() {
                return a.cmp_algebraic(&b);
            }
        }
    }

    /// Short human-readable form: exact values verbatim, quadratic surds as
    /// `(p ± √d)/q`, anything else as `root(poly)≈value`.
    pub fn pretty(&self) -> String {
        if let Some(q) = self.as_rational() {
            return q.to_string();
        }
        if let Some(s) = quadratic_surd(&self.factor, self.approx) {
            return s;
        }
        format!("root({})≈{:.12}", self.factor, self.approx)
    }
}

fn quadratic_surd(f: &IntPoly, approx: f64) -> Option<String> {
    if f.degree() != Some(2) {
        return None;
    }
    let c = f.coeffs();
    let (a, b, c0) = (&c[2], &c[1], &c[0]);
    // roots (-b ± √(b² - 4ac)) / 2a ; pull squares out of the discriminant
    let disc: BigInt = b * b - BigInt::from(4) * a * c0;
    let (mut outside, mut inside) = (BigInt::one(), disc.clone());
    let mut p = BigInt::from(2);
    while &p * &p <= inside {
        let sq = &p * &p;
        while (&inside % &sq).is_zero() {
            inside /= &sq;
            outside *= &p;
        }
        p += 1;
        if p > BigInt::from(100_000) {
            break;
        }
    }
    let den: BigInt = BigInt::from(2) * a;
    let g = (-b).gcd(&outside).gcd(&den);
    let (num, outside, den) = (-b / &g, &outside / &g, &den / &g);
    let root_f = (num.to_f64()? ) / den.to_f64()?;
    let sign = if approx >= root_f { "+" } else { "-" };
    let surd = if outside.is_one() {
        format!("√{inside}")
    } else {
        format!("{outside}√{inside}")
    };
    let body = if num.is_zero() {
        if sign == "-" {
            format!("-{surd}")
        } else {
            surd
        }
    } else {
        format!("{num} {sign} {surd}")
    };
    Some(if den.is_one() {
        body
    } else if num.is_zero() {
        format!("{body}/{den}")
    } else {
        format!("({body})/{den}")
    })
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl PartialEq for AlgebraicValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_algebraic(other) == Ordering::Equal
    }
}

/// Splits a squarefree polynomial into factors over the integers, each with
/// its real roots (as isolating intervals for the original polynomial).
///
/// Factors are found by testing products over subsets of the real roots,
/// approximated closely enough that rounding the coefficients is exact, and
/// then confirmed by exact division. For real-rooted input the result is the
/// complete factorisation into irreducibles. Any part carrying non-real roots
/// is returned as one residual factor.
pub fn factor_squarefree(p: &IntPoly) -> Vec<(IntPoly, Vec<(Rational, Rational)>)> {
    let p = p.primitive_part();
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let intervals = sturm::isolate(&p);
    let lead = p.leading().expect("nonzero").clone();
    // precision so that lead * prod(x - r_i) is within 1/4 coefficientwise
    let b = p.cauchy_bound();
    let bits = (n as u64) * bit_length(&b) + n as u64 + bit_length(&lead) + bit_length(&BigInt::from(n)) + 4;
    let width = dyadic_width(bits);

    let mut exact_roots: Vec<Option<Rational>> = Vec::with_capacity(intervals.len());
    let mut mids: Vec<Rational> = Vec::with_capacity(intervals.len());
    for (lo, hi) in &intervals {
        match sturm::refine(&p, lo.clone(), hi.clone(), &width) {
            Ok((l, h)) => {
                mids.push((l + h) / rat(2, 1));
                exact_roots.push(None);
            }
            Err(x) => {
                mids.push(x.clone());
                exact_roots.push(Some(x));
            }
        }
    }

    let lead_divisors = small_divisors(&lead);
    let mut remaining = p.clone();
    let mut left: Vec<usize> = (0..intervals.len()).collect();
    let mut factors: Vec<IntPoly> = Vec::new();

    let mut size = 1;
    'outer: while size <= left.len() {
        if remaining.degree() == Some(left.len()) && size == left.len() {
            break;
        }
        for subset in combinations(&left, size) {
            for d in &lead_divisors {
                let mut prod = vec![Rational::from_integer(d.clone())];
                for &i in &subset {
                    let mut next = vec![Rational::zero(); prod.len() + 1];
                    for (j, c) in prod.iter().enumerate() {
                        next[j + 1] += c;
                        next[j] -= c * &mids[i];
                    }
                    prod = next;
                }
                let cand = IntPoly::new(prod.iter().map(round_rational).collect());
                if let Some(q) = remaining.div_exact(&cand) {
                    factors.push(cand.primitive_part());
                    remaining = q;
                    left.retain(|i| !subset.contains(i));
                    continue 'outer;
                }
            }
        }
        size += 1;
    }
    if remaining.degree().unwrap_or(0) > 0 {
        factors.push(remaining.primitive_part());
    }

    factors
        .into_iter()
        .map(|f| {
            let roots = intervals
                .iter()
                .filter(|(lo, hi)| {
                    let (a, b) = (f.sign_at(lo), f.sign_at(hi));
                    a != 0 && b != 0 && a != b
                })
                .cloned()
                .collect();
            (f, roots)
        })
        .collect()
}

fn round_rational(x: &Rational) -> BigInt {
    (x + rat(1, 2)).floor().to_integer()
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_one() {
        return vec![BigInt::one()];
    }
    let Some(m) = n.to_u64().filter(|&m| m <= 1 << 40) else {
        return vec![BigInt::one(), n];
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every real root of a squarefree polynomial, ascending, each carrying its
/// irreducible factor (see [`factor_squarefree`]).
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<AlgebraicValue>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(ExactError::NotSquarefree);
    }
    let mut roots: Vec<AlgebraicValue> = factor_squarefree(p)
        .into_iter()
        .flat_map(|(f, ivs)| {
            ivs.into_iter()
                .map(move |(lo, hi)| AlgebraicValue::isolated(f.clone(), lo, hi))
                .collect::<Vec<_>>()
        })
        .collect();
    roots.sort_by(|a, b| a.cmp_algebraic(b));
    Ok(roots)
}

/// Integer roots with multiplicity, ascending.
pub fn integer_roots(p: &IntPoly) -> Result<Vec<(BigInt, usize)>, ExactError> {
    let sf = p.squarefree_part()?;
    let mut out = Vec::new();
    for (lo, hi) in sturm::isolate(&sf) {
        // refine until the interval holds at most one integer candidate
        let (lo, hi) = match sturm::refine(&sf, lo, hi, &Rational::one()) {
            Ok(iv) => iv,
            Err(x) => (x.clone(), x),
        };
        let mut n = lo.ceil().to_integer();
        while Rational::from_integer(n.clone()) <= hi {
            if sf.eval_int(&n).is_zero() {
                out.push(n.clone());
                break;
            }
            n += 1;
        }
    }
    Ok(out
        .into_iter()
        .map(|r| {
            let lin = IntPoly::new(vec![-r.clone(), BigInt::one()]);
            let mut q = p.clone();
            let mut mult = 0;
            while let Some(next) = q.div_exact(&lin) {
                q = next;
                mult += 1;
            }
            (r, mult)
        })
        .collect())
}

/// `p` with every integer root removed (all multiplicities).
pub fn deflate(p: &IntPoly) -> Result<IntPoly, ExactError> {
    let mut q = p.clone();
    for (r, mult) in integer_roots(p)? {
        let lin = IntPoly::new(vec![-r, BigInt::one()]);
        for _ in 0..mult {
            q = q.div_exact(&lin).expect("root divides");
        }
    }
    Ok(q)
}

/// Exact ordering of an algebraic value against a rational.
pub fn compare_to_rational(v: &AlgebraicValue, q: &Rational) -> Ordering {
    v.cmp_rational(q)
}
