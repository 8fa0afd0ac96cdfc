//! Group actions and invariants: the Gaussian ground state and its Sp(2)
//! maps, symplectic and O(3,2) conditions, space-time translations and the
//! mass shell.
//!
//! Flows use `exp(t X)` with `X = -i G`, which is real for every catalog
//! matrix generator.

use std::sync::OnceLock;

use nalgebra::{DMatrix, Matrix2, Vector2};
use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use crate::catalog::{self, GeneratorFamily};
use crate::contract;
use crate::matrix::ExactMatrix;
use crate::numeric::{expm, max_abs};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhaseSpaceError {
    #[error("covariance must be symmetric with positive determinant")]
    InvalidCovariance,
    #[error("map is singular")]
    Singular,
    #[error("-i G is not real (largest imaginary part {0})")]
    NotReal(f64),
    #[error("axis must be 1, 2 or 3, got {0}")]
    Axis(usize),
}

/// Gaussian Wigner function with given mean and covariance in `(x, p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    mean: Vector2<f64>,
    cov: Matrix2<f64>,
}

impl GaussianState {
    pub fn new(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<Self, PhaseSpaceError> {
        if (cov[(0, 1)] - cov[(1, 0)]).abs() > 1e-12 * cov.norm() || cov.determinant() <= 0.0 || cov[(0, 0)] <= 0.0 {
            return Err(PhaseSpaceError::InvalidCovariance);
        }
        Ok(GaussianState { mean, cov })
    }

    /// Mean zero, covariance `I/2`: `W = exp(-(x^2 + p^2)) / pi`.
    pub fn ground() -> Self {
        GaussianState { mean: Vector2::zeros(), cov: Matrix2::identity() * 0.5 }
    }

    pub fn mean(&self) -> Vector2<f64> {
        self.mean
    }

    pub fn covariance(&self) -> Matrix2<f64> {
        self.cov
    }

    pub fn det(&self) -> f64 {
        self.cov.determinant()
    }
}

pub fn wigner_eval(state: &GaussianState, x: f64, p: f64) -> f64 {
    let d = Vector2::new(x, p) - state.mean;
    let inv = state.cov.try_inverse().expect("valid covariance is invertible");
    let q = (d.transpose() * inv * d)[(0, 0)];
    (-0.5 * q).exp() / (2.0 * std::f64::consts::PI * state.det().sqrt())
}

/// Mean `M mu`, covariance `M Sigma M^T`.
pub fn apply_sp2(state: &GaussianState, m: &Matrix2<f64>) -> Result<GaussianState, PhaseSpaceError> {
    if m.determinant() == 0.0 {
        return Err(PhaseSpaceError::Singular);
    }
    let cov = m * state.cov * m.transpose();
    // keep exact symmetry against round-off
    let cov = (cov + cov.transpose()) * 0.5;
    Ok(GaussianState { mean: m * state.mean, cov })
}

pub fn rotation(theta: f64) -> Matrix2<f64> {
    Matrix2::new(theta.cos(), -theta.sin(), theta.sin(), theta.cos())
}

pub fn squeeze(eta: f64) -> Matrix2<f64> {
    Matrix2::new(eta.exp(), 0.0, 0.0, (-eta).exp())
}

/// `R(theta1) S(eta) R(theta2)` with angles in `[0, 2pi)` and `eta` in `[-2, 2]`.
pub fn random_unit_det_map<R: Rng>(rng: &mut R) -> Matrix2<f64> {
    let tau = std::f64::consts::TAU;
    rotation(rng.gen_range(0.0..tau)) * squeeze(rng.gen_range(-2.0..=2.0)) * rotation(rng.gen_range(0.0..tau))
}

/// `X = -i G` as a real matrix.
pub fn real_generator(g: &ExactMatrix) -> Result<DMatrix<f64>, PhaseSpaceError> {
    let x = g.scale(&-ExactScalar::i()).to_complex();
    let worst = x.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if worst != 0.0 {
        return Err(PhaseSpaceError::NotReal(worst));
    }
    Ok(x.map(|z| z.re))
}

/// `exp(t (-i G))`.
pub fn flow(g: &ExactMatrix, t: f64) -> Result<DMatrix<f64>, PhaseSpaceError> {
    Ok(expm(&(real_generator(g)? * t)))
}

fn real(m: &ExactMatrix) -> DMatrix<f64> {
    m.to_complex().map(|z| z.re)
}

/// Max entry of `M J M^T - J` with `J` the 4x4 symplectic form.
pub fn symplectic_residual(m: &DMatrix<f64>) -> f64 {
    let j = real(&catalog::symplectic_form());
    max_abs(&(m * &j * m.transpose() - j))
}

/// Max entry of `g^T eta g - eta`, `eta = diag(1, 1, 1, -1, -1)`.
pub fn o32_residual(g: &DMatrix<Complex64>) -> f64 {
    let eta = catalog::o32_metric().to_complex();
    max_abs(&(g.transpose() * &eta * g - eta))
}

/// `(x, y, z, t, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine5Vector {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
    pub t: ExactScalar,
}

impl Affine5Vector {
    pub fn new(x: ExactScalar, y: ExactScalar, z: ExactScalar, t: ExactScalar) -> Self {
        Affine5Vector { x, y, z, t }
    }

    pub fn components(&self) -> [ExactScalar; 5] {
        [self.x.clone(), self.y.clone(), self.z.clone(), self.t.clone(), ExactScalar::one()]
    }

    /// `g v`, or `None` if `g` does not keep the last component at 1.
    pub fn transformed(&self, g: &ExactMatrix) -> Option<Self> {
        let v = g.mul_vec(&self.components());
        if !v[4].is_one() {
            return None;
        }
        let [x, y, z, t, _]: [ExactScalar; 5] = v.try_into().ok()?;
        Some(Affine5Vector { x, y, z, t })
    }
}

/// Closed-form translation: identity plus `(a, b, c, -d)` in the last column.
pub fn translate(a: &ExactScalar, b: &ExactScalar, c: &ExactScalar, d: &ExactScalar) -> ExactMatrix {
    let mut m = ExactMatrix::identity(5);
    m.set(0, 4, a.clone());
    m.set(1, 4, b.clone());
    m.set(2, 4, c.clone());
    m.set(3, 4, -d);
    m
}

/// `exp(-i(a P1 + b P2 + c P3 + d P0))` by the terminating series, with the
/// `P` taken from `family`.
pub fn translation_exp(
    family: &GeneratorFamily,
    a: &ExactScalar,
    b: &ExactScalar,
    c: &ExactScalar,
    d: &ExactScalar,
) -> Option<ExactMatrix> {
    let mut gen = ExactMatrix::zeros(5);
    for (label, coeff) in [("P1", a), ("P2", b), ("P3", c), ("P0", d)] {
        gen = &gen + &family.get(label)?.as_matrix()?.scale(coeff);
    }
    gen.scale(&-ExactScalar::i()).nilpotent_exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p0: f64,
}

impl FourMomentum {
    pub fn new(p1: f64, p2: f64, p3: f64, p0: f64) -> Self {
        FourMomentum { p1, p2, p3, p0 }
    }

    /// Particle at rest with mass `m`.
    pub fn at_rest(m: f64) -> Self {
        Self::new(0.0, 0.0, 0.0, m)
    }

    fn apply(&self, g: &DMatrix<f64>) -> Self {
        let v = g * nalgebra::DVector::from_vec(vec![self.p1, self.p2, self.p3, self.p0]);
        Self::new(v[0], v[1], v[2], v[3])
    }
}

/// `p1^2 + p2^2 + p3^2 - p0^2`.
pub fn mass_shell(p: &FourMomentum) -> f64 {
    p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3 - p.p0 * p.p0
}

/// Real 4x4 Lorentz blocks of `-i J_k` and `-i K_k` of the contracted family.
struct LorentzBlocks {
    j: [DMatrix<f64>; 3],
    k: [DMatrix<f64>; 3],
}

fn lorentz_blocks() -> &'static LorentzBlocks {
    static BLOCKS: OnceLock<LorentzBlocks> = OnceLock::new();
    BLOCKS.get_or_init(|| {
        let fam = contract::contract_o32().expect("canonical family contracts");
        let block = |l: &str| {
            let g = fam.get(l).and_then(|e| e.as_matrix()).expect("contracted label");
            real_generator(&g.restrict(&[0, 1, 2, 3])).expect("Lorentz generators are real after -i")
        };
        LorentzBlocks {
            j: [block("J1"), block("J2"), block("J3")],
            k: [block("K1"), block("K2"), block("K3")],
        }
    })
}

fn axis_index(axis: usize) -> Result<usize, PhaseSpaceError> {
    match axis {
        1..=3 => Ok(axis - 1),
        _ => Err(PhaseSpaceError::Axis(axis)),
    }
}

/// `exp(rapidity (-i K_axis))` applied to `p`.
pub fn boost_momentum(p: &FourMomentum, axis: usize, rapidity: f64) -> Result<FourMomentum, PhaseSpaceError> {
    let k = &lorentz_blocks().k[axis_index(axis)?];
    Ok(p.apply(&expm(&(k * rapidity))))
}

/// `exp(theta (-i J_axis))` applied to `p`.
pub fn rotate_momentum(p: &FourMomentum, axis: usize, theta: f64) -> Result<FourMomentum, PhaseSpaceError> {
    let j = &lorentz_blocks().j[axis_index(axis)?];
    Ok(p.apply(&expm(&(j * theta))))
}
