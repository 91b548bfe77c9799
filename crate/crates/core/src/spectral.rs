//! Tridiagonal quotient matrices of an intersection array and their exact
//! spectra.
//!
//! Eigenvalues come from the characteristic polynomial of `L`, factored over
//! the integers. Multiplicities use the standard sequence
//! `u_0 = 1, u_1 = θ/k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = θ u_i` and
//! `m(θ) = v / Σ k_i u_i(θ)²`, evaluated in `Q[x]/(f)` for the irreducible
//! factor `f` of `θ`. A multiplicity is rational exactly when that residue is
//! a constant, so no floating-point value is consulted to decide integrality.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::exact::{int, isolate_real_roots, AlgebraicValue, ExactError, IntPoly, RatPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("nonpositive off-diagonal product at position {0}")]
    NonPositiveCoupling(usize),
    #[error("truncation size {j} out of range for order {n}")]
    TruncationOutOfRange { j: usize, n: usize },
    #[error("tridiagonal shape mismatch")]
    Shape,
    #[error("moment identity {power} failed: got {got}, expected {expected}")]
    MomentMismatch {
        power: usize,
        got: String,
        expected: String,
    },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Tridiagonal matrix with rational entries. `upper[i]` sits at `(i, i+1)`
/// and `lower[i]` at `(i+1, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiag {
    lower: Vec<Rational>,
    diag: Vec<Rational>,
    upper: Vec<Rational>,
}

impl Tridiag {
    pub fn new(lower: Vec<Rational>, diag: Vec<Rational>, upper: Vec<Rational>) -> Result<Self, SpectralError> {
        if diag.is_empty() || lower.len() + 1 != diag.len() || upper.len() + 1 != diag.len() {
            return Err(SpectralError::Shape);
        }
        Ok(Tridiag { lower, diag, upper })
    }

    pub fn from_i64(lower: &[i64], diag: &[i64], upper: &[i64]) -> Result<Self, SpectralError> {
        let conv = |xs: &[i64]| xs.iter().map(|&x| int(x)).collect();
        Self::new(conv(lower), conv(diag), conv(upper))
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    /// `T + sI`.
    pub fn shifted(&self, s: &Rational) -> Tridiag {
        Tridiag {
            diag: self.diag.iter().map(|d| d + s).collect(),
            ..self.clone()
        }
    }

    /// Leading `j × j` principal submatrix.
    pub fn leading(&self, j: usize) -> Result<Tridiag, SpectralError> {
        let n = self.order();
        if j == 0 || j > n {
            return Err(SpectralError::TruncationOutOfRange { j, n });
        }
        Ok(Tridiag {
            lower: self.lower[..j - 1].to_vec(),
            diag: self.diag[..j].to_vec(),
            upper: self.upper[..j - 1].to_vec(),
        })
    }

    /// Products `lower[i] · upper[i]`; the characteristic polynomial depends
    /// only on these and the diagonal.
    pub fn couplings(&self) -> Vec<Rational> {
        self.lower.iter().zip(&self.upper).map(|(l, u)| l * u).collect()
    }

    pub fn char_poly(&self) -> IntPoly {
        tridiag_char_poly(&self.diag, &self.couplings())
    }

    pub fn to_dense_f64(&self) -> DMatrix<f64> {
        let n = self.order();
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = f(&self.diag[i]);
            if i + 1 < n {
                m[(i, i + 1)] = f(&self.upper[i]);
                m[(i + 1, i)] = f(&self.lower[i]);
            }
        }
        m
    }
}

/// `det(xI - T)` from the three-term recurrence, scaled to a primitive
/// integer polynomial (monic whenever the entries are integers).
fn tridiag_char_poly(diag: &[Rational], couplings: &[Rational]) -> IntPoly {
    let x = RatPoly::x();
    let mut prev = RatPoly::constant(Rational::one());
    let mut cur = &x - &RatPoly::constant(diag[0].clone());
    for i in 1..diag.len() {
        let next = &(&cur * &(&x - &RatPoly::constant(diag[i].clone())))
            - &prev.scale(&couplings[i - 1]);
        prev = cur;
        cur = next;
    }
    cur.to_primitive()
}

/// Symmetric tridiagonal matrix stored by its diagonal and the squares of
/// its off-diagonal entries. Off-diagonal square roots are produced only as
/// floating-point surrogates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTridiag {
    diag: Vec<Rational>,
    off_sq: Vec<Rational>,
}

impl SymTridiag {
    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn off_squared(&self) -> &[Rational] {
        &self.off_sq
    }

    pub fn off_f64(&self, i: usize) -> f64 {
        self.off_sq[i].to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn shifted(&self, s: &Rational) -> SymTridiag {
        SymTridiag {
            diag: self.diag.iter().map(|d| d + s).collect(),
            off_sq: self.off_sq.clone(),
        }
    }

    pub fn leading(&self, j: usize) -> Result<SymTridiag, SpectralError> {
        let n = self.order();
        if j == 0 || j > n {
            return Err(SpectralError::TruncationOutOfRange { j, n });
        }
        Ok(SymTridiag {
            diag: self.diag[..j].to_vec(),
            off_sq: self.off_sq[..j - 1].to_vec(),
        })
    }

    pub fn char_poly(&self) -> IntPoly {
        tridiag_char_poly(&self.diag, &self.off_sq)
    }

    pub fn to_dense_f64(&self) -> DMatrix<f64> {
        let n = self.order();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i].to_f64().unwrap_or(f64::NAN);
            if i + 1 < n {
                let o = self.off_f64(i);
                m[(i, i + 1)] = o;
                m[(i + 1, i)] = o;
            }
        }
        m
    }

    /// Floating-point eigenvalues, descending.
    pub fn numeric_eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.to_dense_f64()).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }
}

/// Quotient matrix of the distance partition:
/// rows `(0, k)`, `(c_i, a_i, b_i)`, `(c_D, a_D)`.
pub fn matrix_l(ia: &IntersectionArray) -> Tridiag {
    let d = ia.diameter();
    let lower = (1..=d).map(|i| int(ia.c(i))).collect();
    let diag = (0..=d).map(|i| int(ia.a(i))).collect();
    let upper = (0..d).map(|i| int(ia.b(i))).collect();
    Tridiag { lower, diag, upper }
}

/// The `D × D` matrix whose eigenvalues are the nontrivial eigenvalues:
/// diagonal `(-1, k-b_1-c_2, …, k-b_{D-1}-c_D)`, super `(b_1, …, b_{D-1})`,
/// sub `(1, c_2, …, c_{D-1})`.
pub fn matrix_r(ia: &IntersectionArray) -> Tridiag {
    let d = ia.diameter();
    let k = ia.k();
    let mut diag = vec![int(-1)];
    diag.extend((1..d).map(|i| int(k - ia.b(i) - ia.c(i + 1))));
    let upper = (1..d).map(|i| int(ia.b(i))).collect();
    let lower = (1..d).map(|i| int(ia.c(i))).collect();
    Tridiag { lower, diag, upper }
}

/// Diagonal similarity to a symmetric matrix with off-diagonals
/// `√(lower_i · upper_i)`.
pub fn symmetrize(t: &Tridiag) -> Result<SymTridiag, SpectralError> {
    let off_sq = t.couplings();
    if let Some(i) = off_sq.iter().position(|p| !p.is_positive()) {
        return Err(SpectralError::NonPositiveCoupling(i));
    }
    Ok(SymTridiag {
        diag: t.diag.clone(),
        off_sq,
    })
}

pub fn char_poly(t: &Tridiag) -> IntPoly {
    t.char_poly()
}

/// Smallest eigenvalue of the leading `j × j` block.
pub fn truncation_min_eig(t: &SymTridiag, j: usize) -> Result<AlgebraicValue, SpectralError> {
    let p = t.leading(j)?.char_poly();
    let sf = p.squarefree_part()?;
    let roots = isolate_real_roots(&sf)?;
    Ok(roots.into_iter().next().expect("symmetric matrices have real eigenvalues"))
}

/// Smallest eigenvalue of a (not necessarily symmetrized) tridiagonal matrix
/// whose couplings are positive.
pub fn min_eigenvalue(t: &Tridiag) -> Result<AlgebraicValue, SpectralError> {
    let s = symmetrize(t)?;
    truncation_min_eig(&s, s.order())
}

/// `max{-1, k - b_i - c_{i+1}}`, a lower bound for `θ_1`.
pub fn theta1_diag_bound(ia: &IntersectionArray) -> Rational {
    let k = ia.k();
    let best = (1..ia.diameter())
        .map(|i| k - ia.b(i) - ia.c(i + 1))
        .fold(-1, i64::max);
    int(best)
}

#[derive(Clone, Debug)]
pub enum Multiplicity {
    Exact(Rational),
    /// Not rational: `residue` is `m(x) mod f` in `Q[x]/(f)`.
    Irrational { residue: RatPoly, approx: f64 },
}

impl Multiplicity {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Multiplicity::Exact(q) => Some(q),
            Multiplicity::Irrational { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Multiplicity::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Multiplicity::Irrational { approx, .. } => *approx,
        }
    }

    /// Positive integer value, if any.
    pub fn as_positive_integer(&self) -> Option<i64> {
        self.exact()
            .filter(|q| q.is_integer() && q.is_positive())
            .and_then(|q| q.to_integer().to_i64())
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exact(q) => write!(f, "{q}"),
            Multiplicity::Irrational { approx, .. } => write!(f, "≈{approx:.9}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub value: AlgebraicValue,
    pub multiplicity: Multiplicity,
    /// Index into [`Spectrum::factors`]; entries sharing it are conjugates.
    pub factor: usize,
}

/// Distinct eigenvalues `θ_0 > θ_1 > … > θ_D` with multiplicities.
#[derive(Clone, Debug)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    factors: Vec<IntPoly>,
    char_poly: IntPoly,
    v: Rational,
    k: i64,
}

impl Spectrum {
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn factors(&self) -> &[IntPoly] {
        &self.factors
    }

    pub fn char_poly(&self) -> &IntPoly {
        &self.char_poly
    }

    pub fn theta(&self, i: usize) -> &AlgebraicValue {
        &self.entries[i].value
    }

    pub fn theta_min(&self) -> &AlgebraicValue {
        &self.entries.last().expect("nonempty spectrum").value
    }

    pub fn multiplicity(&self, i: usize) -> &Multiplicity {
        &self.entries[i].multiplicity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    /// `(eigenvalue, multiplicity)` pairs when every eigenvalue is an integer
    /// and every multiplicity is exact.
    pub fn as_integer_pairs(&self) -> Option<Vec<(i64, Rational)>> {
        self.entries
            .iter()
            .map(|e| Some((e.value.as_i64()?, e.multiplicity.exact()?.clone())))
            .collect()
    }

    /// Exact check of `Σ m = v`, `Σ mθ = 0`, `Σ mθ² = vk`, summed per
    /// irreducible factor as field traces.
    pub fn moment_check(&self) -> Result<(), SpectralError> {
        let expected = [self.v.clone(), Rational::zero(), &self.v * int(self.k)];
        let mut sums = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (fi, f) in self.factors.iter().enumerate() {
            let entry = self.entries.iter().find(|e| e.factor == fi).expect("factor has roots");
            let fr = f.to_rat();
            let m = match &entry.multiplicity {
                Multiplicity::Exact(q) => RatPoly::constant(q.clone()),
                Multiplicity::Irrational { residue, .. } => residue.clone(),
            };
            let d = fr.degree().unwrap_or(0);
            let ps = fr.power_sums(d);
            let mut xpow = RatPoly::constant(Rational::one());
            for s in sums.iter_mut() {
                let g = (&m * &xpow).rem(&fr);
                let tr = g
                    .coeffs()
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (i, c)| acc + c * &ps[i]);
                *s += tr;
                xpow = (&xpow * &RatPoly::x()).rem(&fr);
            }
        }
        for (power, (got, want)) in sums.iter().zip(&expected).enumerate() {
            if got != want {
                return Err(SpectralError::MomentMismatch {
                    power,
                    got: got.to_string(),
                    expected: want.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("[{}]^{}", e.value, e.multiplicity))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize)]
struct EntryJson {
    value: String,
    approx: f64,
    multiplicity: String,
    multiplicity_exact: bool,
    minimal_polynomial: String,
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|e| EntryJson {
                value: e.value.to_string(),
                approx: e.value.approx(),
                multiplicity: e.multiplicity.to_string(),
                multiplicity_exact: e.multiplicity.exact().is_some(),
                minimal_polynomial: e.value.factor().to_string(),
            })
            .collect();
        rows.serialize(s)
    }
}

/// Standard-sequence polynomials `u_0 … u_D` in `θ`.
fn standard_sequence(ia: &IntersectionArray) -> Vec<RatPoly> {
    let d = ia.diameter();
    let x = RatPoly::x();
    let mut u = vec![RatPoly::constant(Rational::one()), x.scale(&int(ia.k()).recip())];
    for i in 1..d {
        let shifted = &x - &RatPoly::constant(int(ia.a(i)));
        let next = &(&shifted * &u[i]) - &u[i - 1].scale(&int(ia.c(i)));
        u.push(next.scale(&int(ia.b(i)).recip()));
    }
    u
}

/// Exact spectrum of an intersection array.
pub fn spectrum(ia: &IntersectionArray) -> Result<Spectrum, SpectralError> {
    let l = matrix_l(ia);
    let cp = l.char_poly();
    let roots = isolate_real_roots(&cp)?;
    let derived = ia.derive();
    let u = standard_sequence(ia);
    let norm = u
        .iter()
        .zip(&derived.k_seq)
        .fold(RatPoly::zero(), |acc, (ui, ki)| &acc + &(ui * ui).scale(ki));

    let mut factors: Vec<IntPoly> = Vec::new();
    let mut entries = Vec::with_capacity(roots.len());
    for value in roots.into_iter().rev() {
        let fi = match factors.iter().position(|f| f == value.factor()) {
            Some(i) => i,
            None => {
                factors.push(value.factor().clone());
                factors.len() - 1
            }
        };
        let multiplicity = if let Some(q) = value.as_rational() {
            Multiplicity::Exact(&derived.v / norm.eval(q))
        } else {
            let f = value.factor().to_rat();
            let r = norm.rem(&f);
            match r.as_constant() {
                Some(c) => Multiplicity::Exact(&derived.v / c),
                None => {
                    let residue = r
                        .inverse_mod(&f)
                        .expect("norm is positive at every root")
                        .scale(&derived.v);
                    let approx = derived.v.to_f64().unwrap_or(f64::NAN) / norm.eval_f64(value.approx());
                    Multiplicity::Irrational { residue, approx }
                }
            }
        };
        entries.push(SpectrumEntry {
            value,
            multiplicity,
            factor: fi,
        });
    }
    let spec = Spectrum {
        entries,
        factors,
        char_poly: cp,
        v: derived.v,
        k: ia.k(),
    };
    spec.moment_check()?;
    Ok(spec)
}
