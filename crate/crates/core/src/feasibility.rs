//! Feasibility criteria for intersection arrays of diameter 3 and 4 with
//! smallest eigenvalue at least -3, and the bound inequalities they come
//! from.
//!
//! Every check yields a [`Verdict`]; a failure carries the violated
//! inequality with both sides written out as exact values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::exact::{int, isolate_real_roots, rat, AlgebraicValue, IntPoly, Rational};
use crate::spectral::{spectrum, Multiplicity, Spectrum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("smallest eigenvalue must be negative")]
    NonNegativeTheta,
    #[error("gamma is zero (theta_1 = 0)")]
    ZeroGamma,
    #[error("diameter {0} unsupported (need at least 3)")]
    Diameter(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub inequality: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail(Violation),
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn check(ok: bool, inequality: &str, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(Violation {
                inequality: inequality.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }
    }

    pub fn not_applicable(reason: impl Into<String>) -> Verdict {
        Verdict::NotApplicable { reason: reason.into() }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    /// Chains checks, keeping the first failure.
    fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.failed() {
            self
        } else {
            next()
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(v) => write!(f, "FAIL  {}  ({} vs {})", v.inequality, v.lhs, v.rhs),
            Verdict::NotApplicable { reason } => write!(f, "n/a   {reason}"),
        }
    }
}

/// Which of the twelve criteria are switched on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CriteriaMask(u16);

impl CriteriaMask {
    pub const ALL: CriteriaMask = CriteriaMask(0x1fff);

    pub fn all() -> Self {
        Self::ALL
    }

    pub fn enabled(&self, id: u8) -> bool {
        self.0 & (1 << id) != 0
    }

    pub fn disable(mut self, id: u8) -> Self {
        self.0 &= !(1 << id);
        self
    }

    pub fn disabled_ids(&self) -> Vec<u8> {
        (1..=12).filter(|&i| !self.enabled(i)).collect()
    }
}

impl Default for CriteriaMask {
    fn default() -> Self {
        Self::ALL
    }
}

fn r(n: i64) -> Rational {
    int(n)
}

// ---- bound predicates --------------------------------------------------

/// `k < m(a_1 + m) - (m - 1)c_2`, necessary for smallest eigenvalue `≥ -m`.
pub fn lemma1_inequality(k: i64, a1: i64, c2: i64, m: i64) -> Verdict {
    let rhs = m * (a1 + m) - (m - 1) * c2;
    Verdict::check(k < rhs, "k < m(a1+m) - (m-1)c2", k, rhs)
}

pub fn lemma1_bound(ia: &IntersectionArray, m: i64) -> Result<Verdict, BoundError> {
    if ia.diameter() < 3 {
        return Err(BoundError::Diameter(ia.diameter()));
    }
    if m < 2 {
        return Err(BoundError::Range(format!("m = {m} < 2")));
    }
    Ok(lemma1_inequality(ia.k(), ia.a(1), ia.c(2), m))
}

fn binom2(t: i64) -> i64 {
    t * (t - 1) / 2
}

/// Lower bound on `c_2` forced by a `t`-claw: `(t(a_1+1) - k) / C(t,2) + 1`.
pub fn claw_c2_lower(t: i64, a1: i64, k: i64) -> Result<Rational, BoundError> {
    if t < 2 {
        return Err(BoundError::Range(format!("t = {t} < 2")));
    }
    Ok(rat(t * (a1 + 1) - k, binom2(t)) + Rational::one())
}

/// `((t-m)(a_1+1) - m(m-1) + C(t,2) + 1) / (C(t,2) - m + 1)`.
pub fn lemma6_c2_lower(t: i64, m: i64, a1: i64) -> Result<Rational, BoundError> {
    if t < 3 || m < 2 || m >= t {
        return Err(BoundError::Range(format!("need 2 <= m < t, got t = {t}, m = {m}")));
    }
    let num = (t - m) * (a1 + 1) - m * (m - 1) + binom2(t) + 1;
    Ok(rat(num, binom2(t) - m + 1))
}

/// Per-index inequality `c_i - b_i ≥ c_{i-1} - b_{i-1} + a_1 + 2`, valid
/// when the graph has an induced quadrangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerwilligerCheck {
    pub per_index: Vec<Verdict>,
    pub diameter_bound: Verdict,
}

impl TerwilligerCheck {
    pub fn passed(&self) -> bool {
        self.per_index.iter().all(Verdict::passed) && self.diameter_bound.passed()
    }

    pub fn first_failure(&self) -> Verdict {
        self.per_index
            .iter()
            .find(|v| v.failed())
            .cloned()
            .unwrap_or(Verdict::Pass)
    }
}

pub fn terwilliger_check(ia: &IntersectionArray) -> TerwilligerCheck {
    let d = ia.diameter();
    let a1 = ia.a(1);
    let per_index = (1..=d)
        .map(|i| {
            let lhs = ia.c(i) - ia.b(i);
            let rhs = ia.c(i - 1) - ia.b(i - 1) + a1 + 2;
            Verdict::check(lhs >= rhs, &format!("c{i}-b{i} >= c{}-b{}+a1+2", i - 1, i - 1), lhs, rhs)
        })
        .collect();
    let bound = rat(ia.k() + ia.c(d), a1 + 2);
    let diameter_bound = if a1 + 2 <= 0 {
        Verdict::not_applicable("a1 + 2 <= 0")
    } else {
        Verdict::check(r(d as i64) <= bound, "D <= (k+c_D)/(a1+2)", d, &bound)
    };
    TerwilligerCheck {
        per_index,
        diameter_bound,
    }
}

/// `b_2 ≤ (b_1 + 1)/2` and `c_3 ≥ b_3 + 2c_2 - 2`.
pub fn lemma7_check(ia: &IntersectionArray) -> Result<Verdict, BoundError> {
    if ia.diameter() < 3 {
        return Err(BoundError::Diameter(ia.diameter()));
    }
    let (b1, b2, b3, c2, c3) = (ia.b(1), ia.b(2), ia.b(3), ia.c(2), ia.c(3));
    Ok(Verdict::check(2 * b2 <= b1 + 1, "b2 <= b1/2 + 1/2", b2, rat(b1 + 1, 2))
        .and_then(|| Verdict::check(c3 >= b3 + 2 * c2 - 2, "c3 >= b3 + 2c2 - 2", c3, b3 + 2 * c2 - 2)))
}

/// The clique bound `1 + k/|θ_min|`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DelsarteBound {
    /// Exact value when `θ_min` is rational.
    pub exact: Option<String>,
    pub approx: f64,
    /// Largest clique size the bound allows.
    pub max_clique: i64,
}

impl DelsarteBound {
    pub fn exact_rational(&self) -> Option<Rational> {
        self.exact.as_ref().and_then(|s| parse_rational(s))
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

pub fn delsarte_max_clique(k: i64, theta_min: &AlgebraicValue) -> Result<DelsarteBound, BoundError> {
    if theta_min.cmp_int(0) != Ordering::Less {
        return Err(BoundError::NonNegativeTheta);
    }
    if let Some(q) = theta_min.as_rational() {
        let value = Rational::one() + r(k) / (-q);
        let max_clique = value.floor().to_integer().to_i64().expect("small bound");
        return Ok(DelsarteBound {
            exact: Some(value.to_string()),
            approx: value.to_f64().unwrap_or(f64::NAN),
            max_clique,
        });
    }
    let approx = 1.0 + k as f64 / -theta_min.approx();
    // 1 + k/|θ| ≥ n  ⇔  θ ≥ -k/(n-1) for n ≥ 2; irrational θ never ties.
    let at_least = |n: i64| n <= 1 || theta_min.cmp_rational(&rat(-k, n - 1)) == Ordering::Greater;
    let mut n = approx.floor() as i64;
    while !at_least(n) {
        n -= 1;
    }
    while at_least(n + 1) {
        n += 1;
    }
    Ok(DelsarteBound {
        exact: None,
        approx,
        max_clique: n,
    })
}

/// Necessary condition for geometricity: `θ_min` a negative integer
/// dividing `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GeometricNecessary {
    CertifiedNonGeometric { reason: String },
    Inconclusive,
}

pub fn geometric_necessary(k: i64, theta_min: &AlgebraicValue) -> GeometricNecessary {
    match theta_min.as_integer() {
        None => GeometricNecessary::CertifiedNonGeometric {
            reason: format!("smallest eigenvalue {theta_min} is not an integer"),
        },
        Some(t) if !t.is_negative() => GeometricNecessary::CertifiedNonGeometric {
            reason: format!("smallest eigenvalue {t} is not negative"),
        },
        Some(t) => {
            let t = t.to_i64().unwrap_or(i64::MIN);
            if t != i64::MIN && k % t == 0 {
                GeometricNecessary::Inconclusive
            } else {
                GeometricNecessary::CertifiedNonGeometric {
                    reason: format!("smallest eigenvalue {t} does not divide k = {k}"),
                }
            }
        }
    }
}

/// Divisibility elimination: if `θ_1` is an integer whose multiplicity is
/// below `k`, then `θ_1 + 1` must divide `b_1`.
pub fn bcn444_divisibility(ia: &IntersectionArray, spec: &Spectrum) -> Verdict {
    let theta1 = spec.theta(1);
    let Some(t1) = theta1.as_i64() else {
        return Verdict::not_applicable(format!("theta_1 = {theta1} is not an integer"));
    };
    let Some(m1) = spec.multiplicity(1).exact().cloned() else {
        return Verdict::not_applicable("multiplicity of theta_1 is irrational");
    };
    let k = ia.k();
    if m1 >= r(k) {
        return Verdict::Pass;
    }
    let b1 = ia.b(1);
    if t1 + 1 != 0 && b1 % (t1 + 1) == 0 {
        return Verdict::Pass;
    }
    Verdict::Fail(Violation {
        inequality: "m1 < k requires (theta1+1) | b1".into(),
        lhs: format!("m1 = {m1}, theta1+1 = {}", t1 + 1),
        rhs: format!("k = {k}, b1 = {b1}"),
    })
}

/// Terms of the multiplicity-ratio bound `a_1 + 1 ≤ N(ζ-1)δ/γ²` with
/// `ζ = (v-1)/k`, `γ = θ_1/(a_1+1)`, `δ = k/(a_1+1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioBound {
    pub zeta: String,
    pub delta: String,
    pub gamma_approx: f64,
    pub rhs_approx: f64,
    pub verdict: Verdict,
}

/// The inequality is equivalent to `θ_1² ≤ N(ζ-1)k`, which is decided
/// exactly by comparing `θ_1` against `±√(N(ζ-1)k)`.
pub fn bigguy_bound(
    v: &Rational,
    k: i64,
    theta1: &AlgebraicValue,
    a1: i64,
    n: i64,
) -> Result<RatioBound, BoundError> {
    if theta1.cmp_int(0) == Ordering::Equal {
        return Err(BoundError::ZeroGamma);
    }
    if a1 < 0 || k <= 0 {
        return Err(BoundError::Range(format!("a1 + 1 = {}, k = {k}", a1 + 1)));
    }
    if !(1..=4).contains(&n) {
        return Err(BoundError::Range(format!("N = {n} outside 1..=4")));
    }
    let zeta = (v - Rational::one()) / r(k);
    let delta = rat(k, a1 + 1);
    let q = r(n) * (&zeta - Rational::one()) * r(k);
    let within = if !q.is_positive() {
        false
    } else {
        let (num, den) = (q.numer().clone(), q.denom().clone());
        let p = IntPoly::new(vec![-num, 0.into(), den]);
        let sqrt = isolate_real_roots(&p).expect("squarefree quadratic");
        theta1.cmp_algebraic(&sqrt[0]) != Ordering::Less && theta1.cmp_algebraic(&sqrt[1]) != Ordering::Greater
    };
    let gamma = theta1.approx() / (a1 + 1) as f64;
    let rhs_approx = n as f64 * (zeta.to_f64().unwrap_or(f64::NAN) - 1.0) * delta.to_f64().unwrap_or(f64::NAN)
        / (gamma * gamma);
    let rhs = match theta1.as_rational() {
        Some(t) => {
            let g = t / r(a1 + 1);
            (r(n) * (&zeta - Rational::one()) * &delta / (&g * &g)).to_string()
        }
        None => format!("≈{rhs_approx:.6}"),
    };
    Ok(RatioBound {
        zeta: zeta.to_string(),
        delta: delta.to_string(),
        gamma_approx: gamma,
        rhs_approx,
        verdict: Verdict::check(within, "a1+1 <= N(zeta-1)delta/gamma^2", a1 + 1, rhs),
    })
}

// ---- the twelve criteria -----------------------------------------------

/// Criteria that need only the array.
pub fn criterion(id: u8, ia: &IntersectionArray) -> Option<Verdict> {
    let d = ia.diameter();
    let k = ia.k();
    let (a1, b1, c2) = (ia.a(1), ia.b(1), ia.c(2));
    let v = match id {
        1 => Verdict::check(1 <= a1, "1 <= a1", 1, a1).and_then(|| Verdict::check(a1 < 100, "a1 < 100", a1, 100)),
        2 => Verdict::check(2 * a1 + 3 <= k, "2a1+3 <= k", 2 * a1 + 3, k)
            .and_then(|| Verdict::check(k <= 3 * a1 - 2 * c2 + 8, "k <= 3a1-2c2+8", k, 3 * a1 - 2 * c2 + 8)),
        3 => criterion3(ia),
        4 => {
            let lower = rat(a1 + 6, 5).min(rat(a1 + 2, 4));
            Verdict::check(r(c2) >= lower, "min{(a1+6)/5,(a1+2)/4} <= c2", &lower, c2).and_then(|| {
                Verdict::check(2 * c2 <= 3 * a1 + 8 - k, "c2 <= (3a1+8-k)/2", c2, rat(3 * a1 + 8 - k, 2))
            })
        }
        5 => criterion5(ia),
        6 => terwilliger_check(ia).first_failure(),
        7 => Verdict::check(2 * c2 - 1 <= ia.c(3), "2c2-1 <= c3", 2 * c2 - 1, ia.c(3)),
        8 => {
            let lhs = (3 * a1 + 9 - k) * (ia.a(2) + 3) - 3 * b1 * c2;
            Verdict::check(lhs >= 0, "(3a1+9-k)(a2+3) - 3b1c2 >= 0", lhs, 0)
        }
        9 | 11 if d != 3 => Verdict::not_applicable("diameter 3 only"),
        _ => return None,
    };
    Some(v)
}

fn criterion3(ia: &IntersectionArray) -> Verdict {
    let derived = ia.derive();
    for i in 1..=ia.diameter() {
        let ki = &derived.k_seq[i];
        if !ki.is_integer() {
            return Verdict::check(false, &format!("k{i} integral"), ki, "integer");
        }
        let prod = ki.to_integer() * ia.a(i);
        if (&prod % 2u8) != 0.into() {
            return Verdict::check(false, &format!("k{i}*a{i} even"), prod, "even");
        }
    }
    Verdict::Pass
}

fn criterion5(ia: &IntersectionArray) -> Verdict {
    let d = ia.diameter();
    let k = ia.k();
    for i in 0..d {
        let (bi, ci) = (ia.b(i), ia.c(i + 1));
        if !(1..=k).contains(&bi) {
            return Verdict::check(false, &format!("1 <= b{i} <= k"), bi, k);
        }
        if !(1..=k).contains(&ci) {
            return Verdict::check(false, &format!("1 <= c{} <= k", i + 1), ci, k);
        }
    }
    for i in 1..d {
        if ia.b(i) > ia.b(i - 1) {
            return Verdict::check(false, &format!("b{i} <= b{}", i - 1), ia.b(i), ia.b(i - 1));
        }
        if ia.c(i + 1) < ia.c(i) {
            return Verdict::check(false, &format!("c{} >= c{i}", i + 1), ia.c(i + 1), ia.c(i));
        }
    }
    for i in 1..=d {
        let (bi, cj) = (ia.b(i), ia.c(d - i));
        if bi < cj {
            return Verdict::check(false, &format!("b{i} >= c{}", d - i), bi, cj);
        }
    }
    Verdict::Pass
}

/// Criteria 9 to 12, which need the spectrum.
pub fn spectral_criterion(id: u8, ia: &IntersectionArray, spec: &Spectrum) -> Verdict {
    let d = ia.diameter();
    match id {
        9 if d != 3 => Verdict::not_applicable("diameter 3 only"),
        9 => {
            let b1 = ia.b(1);
            let theta1 = spec.theta(1);
            let lower = rat(b1 - 2, 2);
            Verdict::check(
                theta1.cmp_rational(&lower) == Ordering::Greater,
                "b1/2 - 1 < theta1",
                &lower,
                theta1,
            )
            .and_then(|| Verdict::check(theta1.cmp_int(b1 - 1) == Ordering::Less, "theta1 < b1 - 1", theta1, b1 - 1))
        }
        10 => {
            for (i, e) in spec.entries().iter().enumerate() {
                if e.multiplicity.as_positive_integer().is_none() {
                    return Verdict::check(false, &format!("m{i} positive integer"), &e.multiplicity, "positive integer");
                }
            }
            Verdict::Pass
        }
        11 if d != 3 => Verdict::not_applicable("diameter 3 only"),
        11 => {
            let any = spec.entries()[1..].iter().any(|e| e.value.as_integer().is_some());
            Verdict::check(any, "some nontrivial eigenvalue integral", "none", "at least one")
        }
        12 => {
            for (fi, f) in spec.factors().iter().enumerate() {
                let ms: Vec<&Multiplicity> = spec
                    .entries()
                    .iter()
                    .filter(|e| e.factor == fi)
                    .map(|e| &e.multiplicity)
                    .collect();
                let first = ms[0].exact();
                let equal = first.is_some() && ms.iter().all(|m| m.exact() == first);
                if !equal {
                    let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                    return Verdict::check(false, &format!("conjugate roots of {f} share multiplicity"), shown.join(", "), "equal");
                }
            }
            Verdict::Pass
        }
        _ => Verdict::not_applicable(format!("criterion {id} is not spectral")),
    }
}

/// Smallest `N ≤ 4` with `k/N ≤ min(m_1, m_D)`.
fn ratio_n(ia: &IntersectionArray, spec: &Spectrum) -> Option<i64> {
    let m1 = spec.multiplicity(1).exact()?;
    let md = spec.multiplicity(spec.len() - 1).exact()?;
    let low = m1.min(md);
    (1..=4).find(|&n| rat(ia.k(), n) <= *low)
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedJson {
    pub a: Vec<i64>,
    pub k_seq: Vec<String>,
    pub v: String,
    pub t: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FeasibilityReport {
    pub array: IntersectionArray,
    pub diameter: usize,
    pub feasible: bool,
    /// Criterion id (1 to 12) to verdict.
    pub criteria: BTreeMap<u8, Verdict>,
    /// Bound inequalities reported for reference; they do not enter the
    /// composite verdict.
    pub bounds: BTreeMap<String, Verdict>,
    pub divisibility: Verdict,
    pub delsarte: Option<DelsarteBound>,
    pub geometric: Option<GeometricNecessary>,
    pub derived: DerivedJson,
    pub spectrum: Option<Spectrum>,
    pub notes: Vec<String>,
}

impl FeasibilityReport {
    /// Composite verdict optionally including the divisibility elimination.
    pub fn feasible_with(&self, divisibility: bool) -> bool {
        self.feasible && !(divisibility && self.divisibility.failed())
    }

    pub fn first_failure(&self) -> Option<(u8, &Violation)> {
        self.criteria.iter().find_map(|(id, v)| match v {
            Verdict::Fail(x) => Some((*id, x)),
            _ => None,
        })
    }
}

pub fn criteria_1_to_12(ia: &IntersectionArray) -> Result<FeasibilityReport, BoundError> {
    criteria_with_mask(ia, CriteriaMask::ALL)
}

pub fn criteria_with_mask(ia: &IntersectionArray, mask: CriteriaMask) -> Result<FeasibilityReport, BoundError> {
    let d = ia.diameter();
    if d < 3 {
        return Err(BoundError::Diameter(d));
    }
    let spec = spectrum(ia).ok();
    let mut criteria = BTreeMap::new();
    for id in 1..=12u8 {
        let verdict = if !mask.enabled(id) {
            Verdict::not_applicable("disabled")
        } else if let Some(v) = criterion(id, ia) {
            v
        } else {
            match &spec {
                Some(s) => spectral_criterion(id, ia, s),
                None => Verdict::Fail(Violation {
                    inequality: "spectrum computable".into(),
                    lhs: "error".into(),
                    rhs: "ok".into(),
                }),
            }
        };
        criteria.insert(id, verdict);
    }
    let feasible = criteria.values().all(|v| !v.failed());

    let mut bounds = BTreeMap::new();
    bounds.insert("eigenvalue-floor-m3".to_string(), lemma1_inequality(ia.k(), ia.a(1), ia.c(2), 3));
    let terw = terwilliger_check(ia);
    bounds.insert("quadrangle-diameter".to_string(), terw.diameter_bound.clone());
    bounds.insert("quadrangle-b2-c3".to_string(), lemma7_check(ia)?);
    let claw = claw_c2_lower(4, ia.a(1), ia.k())?;
    bounds.insert(
        "claw-c2-t4".to_string(),
        Verdict::check(r(ia.c(2)) >= claw, "c2 >= (4(a1+1)-k)/6 + 1", ia.c(2), &claw),
    );
    let claw3 = lemma6_c2_lower(4, 3, ia.a(1))?;
    bounds.insert(
        "claw-c2-t4-m3".to_string(),
        Verdict::check(r(ia.c(2)) >= claw3, "c2 >= (a1+2)/4", ia.c(2), &claw3),
    );

    let mut notes = Vec::new();
    let (mut delsarte, mut geometric) = (None, None);
    let mut divisibility = Verdict::not_applicable("spectrum unavailable");
    if let Some(s) = &spec {
        delsarte = delsarte_max_clique(ia.k(), s.theta_min()).ok();
        geometric = Some(geometric_necessary(ia.k(), s.theta_min()));
        divisibility = bcn444_divisibility(ia, s);
        let ratio = match ratio_n(ia, s) {
            Some(n) => match bigguy_bound(s.v(), ia.k(), s.theta(1), ia.a(1), n) {
                Ok(b) => b.verdict,
                Err(e) => Verdict::not_applicable(e.to_string()),
            },
            None => Verdict::not_applicable("no N <= 4 with k/N <= min(m1, mD)"),
        };
        bounds.insert("multiplicity-ratio".to_string(), ratio);
        if d == 3 && s.theta(1).cmp_int(ia.b(1) - 1) == Ordering::Equal {
            notes.push("theta1 = b1 - 1: boundary family, classified separately (e.g. the Doob graph)".into());
        }
    }
    if let Some(a) = crate::catalog::annotation(ia) {
        notes.push(a.to_string());
    }

    let derived = ia.derive();
    let derived = DerivedJson {
        a: derived.a,
        k_seq: derived.k_seq.iter().map(|x| x.to_string()).collect(),
        v: derived.v.to_string(),
        t: derived.t.map(|t| t.to_string()),
    };
    Ok(FeasibilityReport {
        array: ia.clone(),
        diameter: d,
        feasible,
        criteria,
        bounds,
        divisibility,
        delsarte,
        geometric,
        derived,
        spectrum: spec,
        notes,
    })
}
