//! Intersection arrays `{b0,…,b_{D-1}; c1,…,c_D}` and the quantities derived
//! from them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{int, Rational};

/// Intersection array of diameter `D = b.len() = c.len()`.
///
/// Construction only enforces the shape (equal, nonempty halves of positive
/// integers). Monotonicity and the other structural conditions are checked
/// by [`IntersectionArray::formal_validity`] so that a failing array can still
/// be reported on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed array text: {0}")]
    Malformed(String),
    #[error("length mismatch: {b} b-entries vs {c} c-entries")]
    LengthMismatch { b: usize, c: usize },
    #[error("invalid entry `{0}`: entries must be positive integers")]
    BadEntry(String),
    #[error("empty array")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormalViolation {
    #[error("c1 = {0}, expected 1")]
    FirstCNotOne(i64),
    #[error("b not nonincreasing: b{i} = {lhs} < b{j} = {rhs}", j = .i + 1)]
    BNotNonincreasing { i: usize, lhs: i64, rhs: i64 },
    #[error("b0 = b1 = {0}: b0 must exceed b1")]
    BZeroNotStrict(i64),
    #[error("c not nondecreasing: c{i} = {lhs} > c{j} = {rhs}", j = .i + 1)]
    CNotNondecreasing { i: usize, lhs: i64, rhs: i64 },
    #[error("b{i} = {bi} < c{j} = {cj} with {i}+{j} ≤ {d}")]
    BBelowC { i: usize, j: usize, bi: i64, cj: i64, d: usize },
    #[error("a{i} = {ai} < 0 (b{i} + c{i} exceeds k)")]
    NegativeA { i: usize, ai: i64 },
}

impl IntersectionArray {
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self, ParseError> {
        if b.len() != c.len() {
            return Err(ParseError::LengthMismatch { b: b.len(), c: c.len() });
        }
        if b.is_empty() {
            return Err(ParseError::Empty);
        }
        if let Some(x) = b.iter().chain(c.iter()).find(|&&x| x <= 0) {
            return Err(ParseError::BadEntry(x.to_string()));
        }
        Ok(IntersectionArray { b, c })
    }

    /// Convenience for literals in code and tests; panics on bad shape.
    pub fn from_slices(b: &[i64], c: &[i64]) -> Self {
        Self::new(b.to_vec(), c.to_vec()).expect("well-formed intersection array")
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 ≤ i ≤ D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 ≤ i ≤ D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`.
    pub fn a(&self, i: usize) -> i64 {
        self.k() - self.b(i) - self.c(i)
    }

    pub fn b_slice(&self) -> &[i64] {
        &self.b
    }

    pub fn c_slice(&self) -> &[i64] {
        &self.c
    }

    pub fn derive(&self) -> DerivedParams {
        let d = self.diameter();
        let a: Vec<i64> = (0..=d).map(|i| self.a(i)).collect();
        let mut k_seq = Vec::with_capacity(d + 1);
        k_seq.push(Rational::one());
        for i in 1..=d {
            let prev = &k_seq[i - 1];
            k_seq.push(prev * int(self.b(i - 1)) / int(self.c(i)));
        }
        let v = k_seq.iter().fold(Rational::zero(), |acc, x| acc + x);
        let t = (a[1] != -1).then(|| int(self.k()) / int(a[1] + 1));
        DerivedParams { a, k_seq, v, t }
    }

    /// Sizes `k_i` when they are all integers.
    pub fn integral_k_seq(&self) -> Option<Vec<i64>> {
        let mut out = vec![1i64];
        for i in 1..=self.diameter() {
            let num = (out[i - 1] as i128) * (self.b(i - 1) as i128);
            let den = self.c(i) as i128;
            if num % den != 0 {
                return None;
            }
            out.push(i64::try_from(num / den).ok()?);
        }
        Some(out)
    }

    /// Structural conditions every intersection array of a distance-regular
    /// graph satisfies: `c1 = 1`, `k = b0 > b1 ≥ … ≥ b_{D-1}`,
    /// `1 = c1 ≤ … ≤ c_D`, `b_i ≥ c_j` whenever `i + j ≤ D`, and `a_i ≥ 0`.
    pub fn formal_validity(&self) -> Result<(), FormalViolation> {
        let d = self.diameter();
        if self.c(1) != 1 {
            return Err(FormalViolation::FirstCNotOne(self.c(1)));
        }
        for i in 0..d.saturating_sub(1) {
            if self.b[i] < self.b[i + 1] {
                return Err(FormalViolation::BNotNonincreasing {
                    i,
                    lhs: self.b[i],
                    rhs: self.b[i + 1],
                });
            }
        }
        if d >= 2 && self.b[0] == self.b[1] {
            return Err(FormalViolation::BZeroNotStrict(self.b[0]));
        }
        for i in 1..d {
            if self.c(i) > self.c(i + 1) {
                return Err(FormalViolation::CNotNondecreasing {
                    i,
                    lhs: self.c(i),
                    rhs: self.c(i + 1),
                });
            }
        }
        for i in 1..d {
            for j in 1..=d - i {
                if self.b(i) < self.c(j) {
                    return Err(FormalViolation::BBelowC {
                        i,
                        j,
                        bi: self.b(i),
                        cj: self.c(j),
                        d,
                    });
                }
            }
        }
        for i in 0..=d {
            if self.a(i) < 0 {
                return Err(FormalViolation::NegativeA { i, ai: self.a(i) });
            }
        }
        Ok(())
    }

    pub fn array_tests(&self) -> ArrayFlags {
        let d = self.diameter();
        let bipartite = (0..=d).all(|i| self.a(i) == 0);
        let antipodal = (0..=d)
            .filter(|&i| i != d / 2)
            .all(|i| self.b(i) == self.c(d - i));
        ArrayFlags {
            bipartite,
            antipodal,
        }
    }
}

/// Formal imprimitivity tests on the array alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArrayFlags {
    pub bipartite: bool,
    pub antipodal: bool,
}

/// `a_0..a_D`, `k_0..k_D`, `v = Σ k_i` and `t = k / (a_1 + 1)` (absent when
/// `a_1 = -1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedParams {
    pub a: Vec<i64>,
    pub k_seq: Vec<Rational>,
    pub v: Rational,
    pub t: Option<Rational>,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| ParseError::Malformed(t.to_string()))?;
        let mut halves = inner.split(';');
        let (Some(bs), Some(cs), None) = (halves.next(), halves.next(), halves.next()) else {
            return Err(ParseError::Malformed(t.to_string()));
        };
        let parse_half = |h: &str| -> Result<Vec<i64>, ParseError> {
            h.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    match tok.parse::<i64>() {
                        Ok(x) if x > 0 => Ok(x),
                        _ => Err(ParseError::BadEntry(tok.to_string())),
                    }
                })
                .collect()
        };
        let b = parse_half(bs)?;
        let c = parse_half(cs)?;
        IntersectionArray::new(b, c)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `{b0,…;c1,…}`.
pub fn parse_array(text: &str) -> Result<IntersectionArray, ParseError> {
    text.parse()
}

pub fn format_array(ia: &IntersectionArray) -> String {
    ia.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ia(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn derive_examples() {
        let d = ia("{4,3,3;1,1,2}").derive();
        assert_eq!(d.a, vec![0, 0, 0, 2]);
        assert_eq!(d.k_seq, vec![rat(1, 1), rat(4, 1), rat(12, 1), rat(18, 1)]);
        assert_eq!(d.v, rat(35, 1));

        let d = ia("{9,6,1;1,2,9}").derive();
        assert_eq!(d.k_seq, vec![rat(1, 1), rat(9, 1), rat(27, 1), rat(3, 1)]);
        assert_eq!(d.v, rat(40, 1));

        let d = ia("{5,4,2;1,1,4}").derive();
        assert_eq!(d.a, vec![0, 0, 2, 1]);
        assert_eq!(d.v, rat(36, 1));
    }

    #[test]
    fn non_integral_k_seq_is_kept() {
        let a = ia("{5,4,1;1,3,5}");
        let d = a.derive();
        assert_eq!(d.k_seq[2], rat(20, 3));
        assert!(a.integral_k_seq().is_none());
    }

    #[test]
    fn validity_examples() {
        assert!(ia("{7,4,1;1,2,7}").formal_validity().is_ok());
        let e = ia("{5,2,3;1,1,1}").formal_validity().unwrap_err();
        assert!(matches!(e, FormalViolation::BNotNonincreasing { i: 1, .. }));
        assert!(e.to_string().starts_with("b not nonincreasing"));
        let e = ia("{6,4,1;1,5,6}").formal_validity().unwrap_err();
        assert_eq!(
            e,
            FormalViolation::BBelowC { i: 1, j: 2, bi: 4, cj: 5, d: 3 }
        );
        assert!(matches!(
            ia("{5,4;2,3}").formal_validity(),
            Err(FormalViolation::FirstCNotOne(2))
        ));
    }

    #[test]
    fn imprimitivity_flags() {
        assert!(!ia("{45,26,3;1,6,39}").array_tests().antipodal);
        assert!(ia("{6,5,1;1,1,6}").array_tests().antipodal);
        let f = ia("{3,2,1;1,2,3}").array_tests();
        assert!(f.bipartite && f.antipodal);
        assert!(!ia("{7,4,1;1,2,7}").array_tests().bipartite);
    }

    #[test]
    fn parse_examples() {
        let w = ia("{5,4,1,1;1,1,4,5}");
        assert_eq!(w.diameter(), 4);
        assert_eq!(w.b_slice(), &[5, 4, 1, 1]);
        assert_eq!(w.c_slice(), &[1, 1, 4, 5]);
        let k4 = ia("{3;1}");
        assert_eq!(k4.diameter(), 1);
        assert!(k4.formal_validity().is_ok());
        assert_eq!(k4.derive().v, rat(4, 1));
        assert_eq!(
            "{4,3;1,1,2}".parse::<IntersectionArray>(),
            Err(ParseError::LengthMismatch { b: 2, c: 3 })
        );
        assert_eq!(
            "{4,0;1,1}".parse::<IntersectionArray>(),
            Err(ParseError::BadEntry("0".into()))
        );
        assert_eq!(
            "{4,x;1,1}".parse::<IntersectionArray>(),
            Err(ParseError::BadEntry("x".into()))
        );
        assert!(matches!("{bad}".parse::<IntersectionArray>(), Err(ParseError::Malformed(_))));
        assert_eq!(ia(" { 7, 4 ,1 ; 1,2, 7 } ").to_string(), "{7,4,1;1,2,7}");
    }

    #[test]
    fn json_round_trip() {
        let a = ia("{45,24,2;1,10,36}");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "\"{45,24,2;1,10,36}\"");
        assert_eq!(serde_json::from_str::<IntersectionArray>(&s).unwrap(), a);
    }
}
