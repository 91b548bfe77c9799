//! Parameter-space searches: the diameter 3 and 4 sweeps over `(a_1, k, c_2,
//! …)`, the enumeration of `(k, a_1)` pairs for `c_2 = 1`, the truncated
//! quotient-matrix scans for those pairs, and the Taylor graph analysis.
//!
//! The sweeps prune with the integer criteria while the array is still being
//! built; every complete candidate is then re-checked by the full report, so
//! pruning only has to be sound, never complete.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::exact::AlgebraicValue;
use crate::feasibility::{criteria_with_mask, CriteriaMask};
use crate::spectral::{min_eigenvalue, spectrum, SpectralError, Tridiag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("diameter {0} not supported (3 or 4)")]
    Diameter(usize),
    #[error("empty a1 range {0}..{1}")]
    EmptyRange(i64, i64),
    #[error("criterion {0} bounds the search domain and cannot be disabled")]
    DomainCriterion(u8),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// How the outer `(a_1, k, c_2)` tuples are distributed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// `None` uses the global pool.
    Parallel(Option<usize>),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub diameter: usize,
    pub a1_range: Range<i64>,
    pub mask: CriteriaMask,
    pub exec: Exec,
}

impl SearchConfig {
    pub fn new(diameter: usize) -> Self {
        SearchConfig {
            diameter,
            a1_range: 1..100,
            mask: CriteriaMask::ALL,
            exec: default_exec(),
        }
    }

    pub fn a1_range(mut self, r: Range<i64>) -> Self {
        self.a1_range = r;
        self
    }

    pub fn disable(mut self, id: u8) -> Self {
        self.mask = self.mask.disable(id);
        self
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if !(3..=4).contains(&self.diameter) {
            return Err(SearchError::Diameter(self.diameter));
        }
        if self.a1_range.is_empty() {
            return Err(SearchError::EmptyRange(self.a1_range.start, self.a1_range.end));
        }
        for id in [2, 4] {
            if !self.mask.enabled(id) {
                return Err(SearchError::DomainCriterion(id));
            }
        }
        Ok(())
    }
}

#[cfg(feature = "parallel")]
fn default_exec() -> Exec {
    Exec::Parallel(None)
}

#[cfg(not(feature = "parallel"))]
fn default_exec() -> Exec {
    Exec::Sequential
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Outer `(a_1, k, c_2)` tuples.
    pub tuples: u64,
    /// Complete arrays that passed the integer criteria.
    pub candidates: u64,
    pub found: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Sorted by `(k, b_1, c_2, …)`.
    pub arrays: Vec<IntersectionArray>,
    pub stats: SearchStats,
}

/// Output order: lexicographic in `(k, c_1, b_1, c_2, b_2, c_3, …)`.
fn sort_key(ia: &IntersectionArray) -> Vec<i64> {
    let mut key = Vec::new();
    for i in 0..ia.diameter() {
        key.push(ia.b(i));
        key.push(ia.c(i + 1));
    }
    key
}

/// Upper end of the valency range, `k ≤ 3a_1 + 4`: the bound
/// `k < 3a_1 - 2c_2 + 9` for smallest eigenvalue `≥ -3` taken at `c_2 = 2`,
/// the least `c_2` for graphs with an induced quadrangle. Arrays with
/// `c_2 = 1` still appear when their valency falls in this range.
pub const K_SLACK: i64 = 4;

/// Smallest eigenvalue floor imposed on every search result.
pub const THETA_FLOOR: i64 = -3;

fn tuples(cfg: &SearchConfig) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a1 in cfg.a1_range.clone() {
        if a1 < 0 {
            continue;
        }
        for k in (2 * a1 + 3)..=(3 * a1 + K_SLACK) {
            // min{(a1+6)/5, (a1+2)/4} ≤ c2, as a ceiling
            let lo = ((a1 + 6 + 4) / 5).min((a1 + 2 + 3) / 4).max(1);
            let hi = (3 * a1 + 8 - k).div_euclid(2);
            for c2 in lo..=hi {
                out.push((a1, k, c2));
            }
        }
    }
    out
}

struct Pruner {
    mask: CriteriaMask,
}

impl Pruner {
    fn on(&self, id: u8) -> bool {
        self.mask.enabled(id)
    }

    fn d3(&self, a1: i64, k: i64, c2: i64, emit: &mut dyn FnMut(IntersectionArray)) {
        let b1 = k - a1 - 1;
        if b1 < 1 {
            return;
        }
        if self.on(3) && (k * a1) % 2 != 0 {
            return;
        }
        if self.on(5) && b1 < c2 {
            return;
        }
        let k2n = k * b1;
        if self.on(3) && k2n % c2 != 0 {
            return;
        }
        let b2_max = if self.on(5) { b1 } else { k };
        for b2 in 1..=b2_max {
            if !self.level2(a1, k, b1, c2, b2) {
                continue;
            }
            let c3_lo = if self.on(5) { c2 } else { 1 };
            for c3 in c3_lo..=k {
                if self.on(7) && c3 < 2 * c2 - 1 {
                    continue;
                }
                if self.on(6) && c3 < c2 - b2 + a1 + 2 {
                    continue;
                }
                if self.on(3) {
                    let num = k2n / c2 * b2;
                    if num % c3 != 0 || (num / c3 * (k - c3)) % 2 != 0 {
                        continue;
                    }
                }
                emit(IntersectionArray::from_slices(&[k, b1, b2], &[1, c2, c3]));
            }
        }
    }

    /// Checks that involve only `(a_1, k, c_2, b_2)`.
    fn level2(&self, a1: i64, k: i64, b1: i64, c2: i64, b2: i64) -> bool {
        let a2 = k - b2 - c2;
        if self.on(6) && c2 - b2 < 1 - b1 + a1 + 2 {
            return false;
        }
        if self.on(8) && (3 * a1 + 9 - k) * (a2 + 3) - 3 * b1 * c2 < 0 {
            return false;
        }
        if self.on(3) && ((k * b1 / c2) * a2) % 2 != 0 {
            return false;
        }
        true
    }

    fn d4(&self, a1: i64, k: i64, c2: i64, emit: &mut dyn FnMut(IntersectionArray)) {
        let b1 = k - a1 - 1;
        if b1 < 1 {
            return;
        }
        if self.on(3) && ((k * a1) % 2 != 0 || (k * b1) % c2 != 0) {
            return;
        }
        let k2 = (k * b1) as i128 / c2 as i128;
        let b2_max = if self.on(5) { b1 } else { k };
        for b2 in 1..=b2_max {
            if self.on(5) && b2 < c2 {
                continue;
            }
            if !self.level2(a1, k, b1, c2, b2) {
                continue;
            }
            let (c3_lo, c3_hi) = if self.on(5) { (c2, b1) } else { (1, k) };
            for c3 in c3_lo..=c3_hi {
                if self.on(7) && c3 < 2 * c2 - 1 {
                    continue;
                }
                let k3n = k2 * b2 as i128;
                if self.on(3) && k3n % c3 as i128 != 0 {
                    continue;
                }
                let k3 = k3n / c3 as i128;
                let b3_max = if self.on(5) { b2 } else { k };
                for b3 in 1..=b3_max {
                    let a3 = k - b3 - c3;
                    if self.on(6) && c3 - b3 < c2 - b2 + a1 + 2 {
                        continue;
                    }
                    if self.on(3) && (k3 * a3 as i128) % 2 != 0 {
                        continue;
                    }
                    let c4_lo = if self.on(5) { c3 } else { 1 };
                    for c4 in c4_lo..=k {
                        if self.on(6) && c4 < c3 - b3 + a1 + 2 {
                            continue;
                        }
                        if self.on(3) {
                            let k4n = k3 * b3 as i128;
                            if k4n % c4 as i128 != 0 || (k4n / c4 as i128 * (k - c4) as i128) % 2 != 0 {
                                continue;
                            }
                        }
                        emit(IntersectionArray::from_slices(&[k, b1, b2, b3], &[1, c2, c3, c4]));
                    }
                }
            }
        }
    }
}

/// Eigenvalues of the symmetrized quotient matrix `L` in floating point,
/// descending, by bisection on Sturm counts.
fn approx_eigenvalues(ia: &IntersectionArray) -> Vec<f64> {
    let d = ia.diameter();
    let diag: Vec<f64> = (0..=d).map(|i| ia.a(i) as f64).collect();
    let off_sq: Vec<f64> = (0..d).map(|i| (ia.b(i) * ia.c(i + 1)) as f64).collect();
    // number of eigenvalues below x
    let below = |x: f64| {
        let mut count = 0;
        let mut q = diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..=d {
            let prev = if q == 0.0 { f64::EPSILON } else { q };
            q = diag[i] - x - off_sq[i - 1] / prev;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    let bound = ia.k() as f64 + 1.0;
    (0..=d)
        .rev()
        .map(|j| {
            // the (j+1)-th smallest eigenvalue: count below lo ≤ j < count below hi
            let (mut lo, mut hi) = (-bound, bound);
            for _ in 0..64 {
                let mid = 0.5 * (lo + hi);
                if below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Characteristic polynomial of `L` evaluated exactly at an integer.
fn char_poly_at(ia: &IntersectionArray, x: i64) -> i128 {
    let x = x as i128;
    let mut prev: i128 = 1;
    let mut cur = x - ia.a(0) as i128;
    for i in 1..=ia.diameter() {
        let coupling = (ia.b(i - 1) * ia.c(i)) as i128;
        let next = (x - ia.a(i) as i128) * cur - coupling * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Cheap rejection for criteria 9 to 11 and the eigenvalue floor. Only clear failures are rejected;
/// anything near a boundary is left to the exact check.
fn quick_reject(ia: &IntersectionArray, mask: CriteriaMask) -> bool {
    let d = ia.diameter();
    let theta = approx_eigenvalues(ia);
    if theta[d] < THETA_FLOOR as f64 - 1e-9 {
        return true;
    }
    if d == 3 && mask.enabled(11) && !theta[1..].iter().any(|&t| char_poly_at(ia, t.round() as i64) == 0) {
        return true;
    }
    if d == 3 && mask.enabled(9) {
        let b1 = ia.b(1) as f64;
        if theta[1] < b1 / 2.0 - 1.0 - 1e-9 || theta[1] > b1 - 1.0 + 1e-9 {
            return true;
        }
    }
    if mask.enabled(10) {
        let k = ia.k() as f64;
        let mut ks = vec![1.0f64];
        for i in 1..=d {
            ks.push(ks[i - 1] * ia.b(i - 1) as f64 / ia.c(i) as f64);
        }
        let v: f64 = ks.iter().sum();
        for &t in &theta {
            let (mut u_prev, mut u) = (1.0, t / k);
            let mut norm = 1.0 + ks[1] * u * u;
            for i in 1..d {
                let next = ((t - ia.a(i) as f64) * u - ia.c(i) as f64 * u_prev) / ia.b(i) as f64;
                u_prev = u;
                u = next;
                norm += ks[i + 1] * u * u;
            }
            let m = v / norm;
            if m < 0.5 || (m - m.round()).abs() > 1e-6 * m.max(1.0) {
                return true;
            }
        }
    }
    false
}

fn run_tuple(
    cfg: &SearchConfig,
    (a1, k, c2): (i64, i64, i64),
    on_found: &(dyn Fn(&IntersectionArray) + Sync),
) -> (Vec<IntersectionArray>, u64) {
    let pruner = Pruner { mask: cfg.mask };
    let mut found = Vec::new();
    let mut candidates = 0u64;
    let mut emit = |ia: IntersectionArray| {
        candidates += 1;
        if quick_reject(&ia, cfg.mask) {
            return;
        }
        let report = criteria_with_mask(&ia, cfg.mask).expect("diameter checked");
        let above_floor = report
            .spectrum
            .as_ref()
            .is_some_and(|s| s.theta_min().cmp_int(THETA_FLOOR) != Ordering::Less);
        if report.feasible && above_floor {
            on_found(&ia);
            found.push(ia);
        }
    };
    match cfg.diameter {
        3 => pruner.d3(a1, k, c2, &mut emit),
        _ => pruner.d4(a1, k, c2, &mut emit),
    }
    (found, candidates)
}

/// Runs the sweep, calling `on_found` for each array as it is found (in no
/// particular order) and returning the sorted result.
pub fn search_with(
    cfg: &SearchConfig,
    on_found: &(dyn Fn(&IntersectionArray) + Sync),
) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let work = tuples(cfg);
    let results: Vec<(Vec<IntersectionArray>, u64)> = match cfg.exec {
        Exec::Sequential => work.iter().map(|&t| run_tuple(cfg, t, on_found)).collect(),
        Exec::Parallel(workers) => parallel_map(cfg, &work, workers, on_found)?,
    };
    let mut stats = SearchStats {
        tuples: work.len() as u64,
        ..Default::default()
    };
    let mut arrays = Vec::new();
    for (found, cands) in results {
        stats.candidates += cands;
        arrays.extend(found);
    }
    arrays.sort_by_key(sort_key);
    arrays.dedup();
    stats.found = arrays.len() as u64;
    Ok(SearchOutcome { arrays, stats })
}

#[cfg(feature = "parallel")]
fn parallel_map(
    cfg: &SearchConfig,
    work: &[(i64, i64, i64)],
    workers: Option<usize>,
    on_found: &(dyn Fn(&IntersectionArray) + Sync),
) -> Result<Vec<(Vec<IntersectionArray>, u64)>, SearchError> {
    use rayon::prelude::*;
    let job = || {
        work.par_iter()
            .map(|&t| run_tuple(cfg, t, on_found))
            .collect::<Vec<_>>()
    };
    match workers {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| SearchError::Pool(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map(
    cfg: &SearchConfig,
    work: &[(i64, i64, i64)],
    _workers: Option<usize>,
    on_found: &(dyn Fn(&IntersectionArray) + Sync),
) -> Result<Vec<(Vec<IntersectionArray>, u64)>, SearchError> {
    Ok(work.iter().map(|&t| run_tuple(cfg, t, on_found)).collect())
}

pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    search_with(cfg, &|_| {})
}

pub fn search_d3(cfg: &SearchConfig) -> Result<Vec<IntersectionArray>, SearchError> {
    if cfg.diameter != 3 {
        return Err(SearchError::Diameter(cfg.diameter));
    }
    Ok(search(cfg)?.arrays)
}

pub fn search_d4(cfg: &SearchConfig) -> Result<Vec<IntersectionArray>, SearchError> {
    if cfg.diameter != 4 {
        return Err(SearchError::Diameter(cfg.diameter));
    }
    Ok(search(cfg)?.arrays)
}

// ---- c2 = 1 -------------------------------------------------------------

/// Pairs `(k, a_1)` with `t = k/(a_1+1) ≥ 3`, `a_1 ≤ t - 2` and
/// `k ≤ 3a_1 + 6` arising for a single claw size `t`.
pub fn c2one_pairs_for_t(t: i64) -> BTreeSet<(i64, i64)> {
    (0..=t - 2)
        .map(|a1| (t * (a1 + 1), a1))
        .filter(|&(k, a1)| k <= 3 * a1 + 6)
        .collect()
}

/// All such pairs. For `t ≥ 7`, `t(a_1+1) - (3a_1+6) = (t-3)a_1 + t - 6 > 0`,
/// so the enumeration stops at `t = 6`.
pub fn c2one_pairs() -> BTreeSet<(i64, i64)> {
    (3..=6).flat_map(c2one_pairs_for_t).collect()
}

/// Leading rows of an intersection array; unknown tails print as `...`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartialArray {
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

impl fmt::Display for PartialArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{},...;{},...}}", join(&self.b), join(&self.c))
    }
}

#[derive(Clone, Debug)]
pub struct ScanInstance {
    pub vars: Vec<(&'static str, i64)>,
    pub partial: PartialArray,
    pub matrix: Tridiag,
}

/// A family of truncated quotient matrices, each kept when its smallest
/// eigenvalue is above the threshold (strictly, unless `strict` is false).
#[derive(Clone, Debug)]
pub struct PartialArrayScan {
    pub label: String,
    pub threshold: i64,
    pub strict: bool,
    pub instances: Vec<ScanInstance>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScanError {
    #[error("unknown case {0}; expected one of 5-0, 6-0, 8-1, 12-2")]
    UnknownCase(String),
    #[error("instance {0}: {1}")]
    Matrix(String, SpectralError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseId {
    #[serde(rename = "5-0")]
    K5A0,
    #[serde(rename = "6-0")]
    K6A0,
    #[serde(rename = "8-1")]
    K8A1,
    #[serde(rename = "12-2")]
    K12A2,
}

impl CaseId {
    pub const ALL: [CaseId; 4] = [CaseId::K5A0, CaseId::K6A0, CaseId::K8A1, CaseId::K12A2];

    pub fn k_a1(self) -> (i64, i64) {
        match self {
            CaseId::K5A0 => (5, 0),
            CaseId::K6A0 => (6, 0),
            CaseId::K8A1 => (8, 1),
            CaseId::K12A2 => (12, 2),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, a1) = self.k_a1();
        write!(f, "{k}-{a1}")
    }
}

impl std::str::FromStr for CaseId {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.to_string() == s.trim())
            .ok_or_else(|| ScanError::UnknownCase(s.to_string()))
    }
}

/// The 5 × 5 sweep shared by the (5,0), (6,0) and (8,1) cases: `b_2 ≤ b2_max`,
/// `b_3 ≤ b_2`, `c_lo ≤ c_3 ≤ c_4 ≤ b_3 - 1`. The last diagonal entry is
/// `a_4 = k - c_4 - 1`, its largest value when `b_4 ≥ 1`; the smallest
/// eigenvalue increases with `a_4`, so an elimination here holds for every
/// admissible `b_4`.
fn five_by_five(k: i64, a1: i64, b2_max: i64, c_lo: i64) -> Vec<ScanInstance> {
    let b1 = k - a1 - 1;
    let mut out = Vec::new();
    for b2 in 1..=b2_max {
        for b3 in 1..=b2 {
            for c4 in c_lo..b3 {
                for c3 in c_lo..=c4 {
                    let diag = [0, a1, k - b2 - 1, k - c3 - b3, k - c4 - 1];
                    let matrix = Tridiag::from_i64(&[1, 1, c3, c4], &diag, &[k, b1, b2, b3]).expect("5 x 5 shape");
                    out.push(ScanInstance {
                        vars: vec![("b2", b2), ("b3", b3), ("c3", c3), ("c4", c4)],
                        partial: PartialArray {
                            b: vec![k, b1, b2, b3],
                            c: vec![1, 1, c3, c4],
                        },
                        matrix,
                    });
                }
            }
        }
    }
    out
}

/// The 6 × 6 sweep for `(12, 2)` with `b_2 = b_3 = b_4 = 4`.
fn twelve_two() -> Vec<ScanInstance> {
    let mut out = Vec::new();
    for c3 in 2..=4 {
        for c4 in c3..=4 {
            for c5 in 3..=4 {
                for a5 in [8 - c5, 9 - c5] {
                    let matrix = Tridiag::from_i64(&[1, 1, c3, c4, c5], &[0, 2, 7, 8 - c3, 8 - c4, a5], &[12, 9, 4, 4, 4])
                        .expect("6 x 6 shape");
                    out.push(ScanInstance {
                        vars: vec![("c3", c3), ("c4", c4), ("c5", c5), ("a5", a5)],
                        partial: PartialArray {
                            b: vec![12, 9, 4, 4, 4],
                            c: vec![1, 1, c3, c4, c5],
                        },
                        matrix,
                    });
                }
            }
        }
    }
    out
}

impl PartialArrayScan {
    pub fn case(id: CaseId) -> Self {
        let instances = match id {
            CaseId::K5A0 => five_by_five(5, 0, 4, 1),
            CaseId::K6A0 => five_by_five(6, 0, 5, 1),
            CaseId::K8A1 => five_by_five(8, 1, 5, 2),
            CaseId::K12A2 => twelve_two(),
        };
        PartialArrayScan {
            label: id.to_string(),
            threshold: -3,
            strict: true,
            instances,
        }
    }

    pub fn non_strict(mut self) -> Self {
        self.strict = false;
        self
    }
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub instance: ScanInstance,
    pub min_eig: AlgebraicValue,
    /// Sign of `min_eig - threshold`.
    pub vs_threshold: Ordering,
    pub survives: bool,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub label: String,
    pub threshold: i64,
    pub strict: bool,
    pub results: Vec<ScanResult>,
}

impl ScanReport {
    /// Surviving partial arrays, largest first, without repeats.
    pub fn survivors(&self) -> Vec<&PartialArray> {
        let mut out: Vec<&PartialArray> = self.results.iter().filter(|r| r.survives).map(|r| &r.instance.partial).collect();
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    pub fn all_strictly_below(&self) -> bool {
        self.results.iter().all(|r| r.vs_threshold == Ordering::Less)
    }
}

/// Computes each matrix's smallest eigenvalue exactly and compares it with
/// the threshold.
pub fn scan_c2one_case(scan: &PartialArrayScan) -> Result<ScanReport, ScanError> {
    let mut results = Vec::with_capacity(scan.instances.len());
    for inst in &scan.instances {
        let min_eig = min_eigenvalue(&inst.matrix).map_err(|e| ScanError::Matrix(inst.partial.to_string(), e))?;
        let vs_threshold = min_eig.cmp_int(scan.threshold);
        let survives = match vs_threshold {
            Ordering::Greater => true,
            Ordering::Equal => !scan.strict,
            Ordering::Less => false,
        };
        results.push(ScanResult {
            instance: inst.clone(),
            min_eig,
            vs_threshold,
            survives,
        });
    }
    Ok(ScanReport {
        label: scan.label.clone(),
        threshold: scan.threshold,
        strict: scan.strict,
        results,
    })
}

/// Smallest eigenvalue of `[[0,k,0],[1,a_1,b_1],[0,1,a_2]]` against -3 for
/// each `a_2` in `range`; returns `(a_2, min eig ≤ -3)`.
pub fn threshold_scan(k: i64, a1: i64, range: std::ops::RangeInclusive<i64>) -> Vec<(i64, bool)> {
    let b1 = k - a1 - 1;
    range
        .map(|a2| {
            let t = Tridiag::from_i64(&[1, 1], &[0, a1, a2], &[k, b1]).expect("3 x 3 shape");
            let m = min_eigenvalue(&t).expect("positive couplings");
            (a2, m.cmp_int(-3) != Ordering::Greater)
        })
        .collect()
}

// ---- Taylor graphs --------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaylorStatus {
    Geometric,
    NonGeometric,
    Excluded,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaylorCandidate {
    pub array: IntersectionArray,
    pub c2: i64,
    pub a1: i64,
    pub theta_min: String,
    pub status: TaylorStatus,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaylorReport {
    /// `c_2` values left in the `θ_3 = -3` branch.
    pub minus_three_c2: Vec<i64>,
    pub minus_three: Vec<TaylorCandidate>,
    pub irrational: Vec<TaylorCandidate>,
}

impl TaylorReport {
    pub fn non_geometric(&self) -> Vec<&IntersectionArray> {
        self.minus_three
            .iter()
            .chain(&self.irrational)
            .filter(|c| c.status == TaylorStatus::NonGeometric)
            .map(|c| &c.array)
            .collect()
    }
}

pub fn taylor_array(k: i64, c2: i64) -> IntersectionArray {
    IntersectionArray::from_slices(&[k, c2, 1], &[1, c2, k])
}

fn integral_multiplicities(ia: &IntersectionArray) -> bool {
    spectrum(ia)
        .map(|s| s.entries().iter().all(|e| e.multiplicity.as_positive_integer().is_some()))
        .unwrap_or(false)
}

/// Largest `c_2` examined in the `θ_3 = -3` branch and largest `k` in the
/// irrational branch.
pub const TAYLOR_C2_LIMIT: i64 = 200;
pub const TAYLOR_K_LIMIT: i64 = 200;

/// Taylor arrays `{k, c_2, 1; 1, c_2, k}` with smallest eigenvalue in
/// `[-3, -2)`.
///
/// `θ_1, θ_3` are the roots of `x² - (a_1 - c_2)x - k` and `k = a_1 + c_2 + 1`.
/// With `θ_3 = -3` this forces `a_1 = 2c_2 - 4`; integral multiplicities then
/// leave `c_2 + 2 | 24`. For `c_2 = 22` the graph would give 64 equiangular
/// lines at angle `arccos(1/3)` in dimension 8, above the known maximum of 28
/// (external citation). With `-3 < θ_3 < -2` no eigenvalue is an integer, so
/// conjugate multiplicities must agree, which forces `a_1 = c_2` and
/// `θ_3 = -√k`; then the local graph is a conference graph on `k` vertices,
/// which needs `k ≡ 1 (mod 4)`.
pub fn taylor_classify() -> TaylorReport {
    let mut minus_three = Vec::new();
    for c2 in 2..=TAYLOR_C2_LIMIT {
        let a1 = 2 * c2 - 4;
        let k = a1 + c2 + 1;
        let ia = taylor_array(k, c2);
        let spec = spectrum(&ia).expect("valid array");
        debug_assert_eq!(spec.theta_min().as_i64(), Some(-3));
        if !integral_multiplicities(&ia) {
            continue;
        }
        let (status, note) = match c2 {
            2 => (TaylorStatus::Geometric, "3-cube (unique graph)".to_string()),
            4 => (TaylorStatus::Geometric, "Johnson graph J(6,3) (unique graph)".to_string()),
            6 => (TaylorStatus::NonGeometric, "halved 6-cube (unique graph)".to_string()),
            10 => (TaylorStatus::NonGeometric, "Gosset graph (unique graph)".to_string()),
            _ if k + 1 > 28 && spec.multiplicity(1).as_positive_integer().is_some_and(|m| m < 15) => (
                TaylorStatus::Excluded,
                format!(
                    "{} equiangular lines at angle arccos(1/3) in dimension {} exceed 28 (external citation)",
                    k + 1,
                    spec.multiplicity(1)
                ),
            ),
            _ => (TaylorStatus::NonGeometric, "unresolved".to_string()),
        };
        minus_three.push(TaylorCandidate {
            array: ia,
            c2,
            a1,
            theta_min: "-3".into(),
            status,
            note,
        });
    }
    let minus_three_c2 = minus_three
        .iter()
        .filter(|c| c.status != TaylorStatus::Excluded)
        .map(|c| c.c2)
        .collect();

    let mut irrational = Vec::new();
    for k in 3..=TAYLOR_K_LIMIT {
        for c2 in 1..k - 1 {
            let ia = taylor_array(k, c2);
            let Ok(spec) = spectrum(&ia) else { continue };
            let tmin = spec.theta_min();
            if tmin.cmp_int(-3) != Ordering::Greater || tmin.cmp_int(-2) != Ordering::Less {
                continue;
            }
            if !integral_multiplicities(&ia) {
                continue;
            }
            let a1 = k - c2 - 1;
            let (status, note) = if (k - 1) % 4 == 0 {
                (TaylorStatus::NonGeometric, "icosahedron; local graph is the pentagon".to_string())
            } else {
                (
                    TaylorStatus::Excluded,
                    format!("local conference graph on {k} vertices needs k = 1 mod 4"),
                )
            };
            irrational.push(TaylorCandidate {
                array: ia,
                c2,
                a1,
                theta_min: tmin.to_string(),
                status,
                note,
            });
        }
    }
    TaylorReport {
        minus_three_c2,
        minus_three,
        irrational,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_respect_domain() {
        let cfg = SearchConfig::new(3).a1_range(1..3);
        for (a1, k, c2) in tuples(&cfg) {
            assert!(2 * a1 + 3 <= k && k <= 3 * a1 - 2 * c2 + 8 && k <= 3 * a1 + 4);
            assert!(20 * c2 >= (4 * (a1 + 6)).min(5 * (a1 + 2)));
        }
    }

    #[test]
    fn domain_criteria_cannot_be_disabled() {
        let cfg = SearchConfig::new(3).disable(4);
        assert_eq!(search(&cfg).unwrap_err(), SearchError::DomainCriterion(4));
        assert_eq!(search(&SearchConfig::new(5)).unwrap_err(), SearchError::Diameter(5));
        assert!(search(&SearchConfig::new(3).a1_range(5..5)).is_err());
    }

    #[test]
    fn small_range_d3() {
        let cfg = SearchConfig::new(3).a1_range(1..10).exec(Exec::Sequential);
        let got: Vec<String> = search_d3(&cfg).unwrap().iter().map(|a| a.to_string()).collect();
        assert_eq!(
            got,
            vec![
                "{6,4,1;1,1,6}",
                "{7,4,1;1,2,7}",
                "{9,6,1;1,2,9}",
                "{15,8,1;1,4,15}",
                "{15,10,1;1,2,15}",
                "{18,12,1;1,2,18}"
            ]
        );
    }

    #[test]
    fn approx_eigenvalues_match_exact() {
        for text in ["{15,8,1;1,4,15}", "{5,2,1;1,2,5}", "{3,2,2,1;1,1,1,2}", "{45,24,2;1,10,36}"] {
            let ia: IntersectionArray = text.parse().unwrap();
            let exact = spectrum(&ia).unwrap();
            let approx = approx_eigenvalues(&ia);
            for (e, a) in exact.entries().iter().zip(&approx) {
                assert!((e.value.approx() - a).abs() < 1e-9, "{text}");
            }
        }
        let ia: IntersectionArray = "{15,8,1;1,4,15}".parse().unwrap();
        assert_eq!(char_poly_at(&ia, 5), 0);
        assert_ne!(char_poly_at(&ia, 4), 0);
    }

    #[test]
    fn pairs_by_t() {
        assert_eq!(c2one_pairs_for_t(3), BTreeSet::from([(3, 0), (6, 1)]));
        assert_eq!(c2one_pairs_for_t(4), BTreeSet::from([(4, 0), (8, 1), (12, 2)]));
        assert!(c2one_pairs_for_t(7).is_empty());
    }

    #[test]
    fn case_ids_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.to_string().parse::<CaseId>().unwrap(), c);
        }
        assert!("7-0".parse::<CaseId>().is_err());
    }

    #[test]
    fn partial_display() {
        let p = PartialArray {
            b: vec![5, 4, 3, 3],
            c: vec![1, 1, 1, 1],
        };
        assert_eq!(p.to_string(), "{5,4,3,3,...;1,1,1,1,...}");
    }
}
