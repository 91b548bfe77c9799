//! Random arrays and independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::cmp::Ordering;

use drg_core::array::IntersectionArray;
use drg_core::exact::rat;
use drg_core::spectral::{matrix_l, spectrum, symmetrize, theta1_diag_bound, truncation_min_eig, Spectrum};
use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::Rng;

pub const RANDOM_ARRAYS: usize = 10_000;
pub const SYMMETRIZE_TOL: f64 = 1e-10;
/// Relative tolerance for the floating-point moment oracle.
pub const MOMENT_REL_TOL: f64 = 1e-9;
pub const MAX_K: i64 = 60;

/// A formally valid array: `c` nondecreasing from 1, `b` nonincreasing and
/// below `k`, `b_i ≥ c_j` for `i + j ≤ D`, every `a_i ≥ 0`.
pub fn random_array<R: Rng>(rng: &mut R, d: usize) -> IntersectionArray {
    let k = rng.gen_range(3..=MAX_K);
    let mut c = vec![1i64];
    for i in 2..=d {
        let hi = if i < d { k / 2 } else { k };
        let lo = c[i - 2];
        c.push(rng.gen_range(lo..=hi.max(lo)));
    }
    let mut b = vec![k];
    for i in 1..d {
        let lo = c[d - i - 1];
        let hi = (k - c[i - 1]).min(b[i - 1]).min(k - 1);
        b.push(rng.gen_range(lo..=hi));
    }
    let ia = IntersectionArray::new(b, c).expect("positive entries");
    ia.formal_validity().expect("generator keeps arrays formally valid");
    ia
}

/// Eigenvalues of a dense real matrix, ascending, when all are real.
pub fn dense_real_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m
        .complex_eigenvalues()
        .iter()
        .map(|z| {
            assert!(z.im.abs() < 1e-8, "complex eigenvalue {z}");
            z.re
        })
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Each leading block of the symmetrized `L` has smallest eigenvalue strictly
/// above `θ_D`.
pub fn check_truncation(ia: &IntersectionArray, spec: &Spectrum) -> Result<(), String> {
    let sym = symmetrize(&matrix_l(ia)).map_err(|e| e.to_string())?;
    let theta_d = spec.theta_min();
    for j in 1..=ia.diameter() {
        let m = truncation_min_eig(&sym, j).map_err(|e| e.to_string())?;
        if m.cmp_algebraic(theta_d) != Ordering::Greater {
            return Err(format!("{ia}: block {j} has {m} <= theta_D = {theta_d}"));
        }
    }
    let full = truncation_min_eig(&sym, ia.diameter() + 1).map_err(|e| e.to_string())?;
    if full.cmp_algebraic(theta_d) != Ordering::Equal {
        return Err(format!("{ia}: full block {full} != theta_D {theta_d}"));
    }
    Ok(())
}

/// The symmetrized matrix and the original `L` have the same eigenvalues, the
/// latter from a general dense eigensolver.
pub fn check_symmetrize(ia: &IntersectionArray) -> Result<(), String> {
    let l = matrix_l(ia);
    let sym = symmetrize(&l).map_err(|e| e.to_string())?;
    let mut sym_ev = sym.numeric_eigenvalues();
    sym_ev.sort_by(f64::total_cmp);
    let dense = dense_real_eigenvalues(l.to_dense_f64());
    for (a, b) in sym_ev.iter().zip(&dense) {
        if (a - b).abs() >= SYMMETRIZE_TOL {
            return Err(format!("{ia}: symmetrized {a} vs dense {b}"));
        }
    }
    Ok(())
}

/// `Σ m θ^p = v (L^p)_{00}` for `p ≤ 4`: closed walks of length `p` from a
/// vertex, summed over vertices. The identities for `p ≤ 2` are also checked
/// exactly by the library.
pub fn check_moments(ia: &IntersectionArray, spec: &Spectrum) -> Result<(), String> {
    spec.moment_check().map_err(|e| format!("{ia}: {e}"))?;
    let l = matrix_l(ia).to_dense_f64();
    let v = ia.derive().v.to_f64().expect("finite");
    let mut power = DMatrix::<f64>::identity(l.nrows(), l.ncols());
    for p in 0..=4 {
        let want = v * power[(0, 0)];
        let got: f64 = spec
            .entries()
            .iter()
            .map(|e| e.multiplicity.approx() * e.value.approx().powi(p))
            .sum();
        let scale = (v * (ia.k() as f64).powi(p)).max(1.0);
        if (got - want).abs() > MOMENT_REL_TOL * scale {
            return Err(format!("{ia}: moment {p} is {got}, walks give {want}"));
        }
        power = &power * &l;
    }
    Ok(())
}

pub fn check_theta1_diag(ia: &IntersectionArray, spec: &Spectrum) -> Result<(), String> {
    let bound = theta1_diag_bound(ia);
    match spec.theta(1).cmp_rational(&bound) {
        Ordering::Less => Err(format!("{ia}: theta1 = {} < {bound}", spec.theta(1))),
        _ => Ok(()),
    }
}

pub fn check_theta1_a1(ia: &IntersectionArray, spec: &Spectrum) -> Result<(), String> {
    let a1 = ia.a(1);
    match spec.theta(1).cmp_rational(&rat(a1 + 1, 1)) {
        Ordering::Less => Err(format!("{ia}: theta1 = {} < a1 + 1 = {}", spec.theta(1), a1 + 1)),
        _ => Ok(()),
    }
}

/// Runs every array property, adding `θ_1 ≥ a_1 + 1` for diameter 4.
pub fn check_all(ia: &IntersectionArray) -> Result<(), String> {
    let spec = spectrum(ia).map_err(|e| format!("{ia}: {e}"))?;
    check_truncation(ia, &spec)?;
    check_symmetrize(ia)?;
    check_moments(ia, &spec)?;
    check_theta1_diag(ia, &spec)?;
    if ia.diameter() == 4 {
        check_theta1_a1(ia, &spec)?;
    }
    Ok(())
}
