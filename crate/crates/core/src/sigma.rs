//! The hyperbolic subplane σ = span{1, δ} with `δ = (0, 1, −1)`.
//!
//! σ is closed under `⊗`, and in the basis `{1, 𝐣}` with
//! `𝐣 = 1/3 ⊕ 2δ/3 = (1/3, 2/3, −2/3)` the product is split-complex
//! multiplication: `𝐣 ⊗ 𝐣 = 1`. Conversely `δ = 3𝐣/2 ⊖ 1/2`.

use core::ops::Mul;

use crate::{AlgebraError, Ternion};

/// The hyperbolic unit `(1/3, 2/3, −2/3)`.
pub const J: Ternion = Ternion::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0);

/// `s·1 ⊕ t·𝐣`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HyperbolicNumber {
    pub s: f64,
    pub t: f64,
}

impl HyperbolicNumber {
    pub const ONE: HyperbolicNumber = HyperbolicNumber { s: 1.0, t: 0.0 };
    pub const J: HyperbolicNumber = HyperbolicNumber { s: 0.0, t: 1.0 };

    pub const fn new(s: f64, t: f64) -> Self {
        HyperbolicNumber { s, t }
    }
}

impl Mul for HyperbolicNumber {
    type Output = HyperbolicNumber;
    fn mul(self, rhs: HyperbolicNumber) -> HyperbolicNumber {
        hyper_mul(self, rhs)
    }
}

/// Whether `x` lies in σ, i.e. `|x_u + x_v| ≤ tol`.
pub fn in_sigma(x: Ternion, tol: f64) -> bool {
    (x.u + x.v).abs() <= tol
}

/// Solve `x = s·1 ⊕ t·𝐣`. Rejects `x` outside σ (tolerance `tol`) instead of
/// projecting it.
pub fn to_sigma_coords(x: Ternion, tol: f64) -> Result<HyperbolicNumber, AlgebraError> {
    if !in_sigma(x, tol) {
        return Err(AlgebraError::NotInSigma);
    }
    Ok(HyperbolicNumber {
        s: x.real - 0.5 * x.u,
        t: 1.5 * x.u,
    })
}

pub fn from_sigma_coords(h: HyperbolicNumber) -> Ternion {
    Ternion::ONE.scale(h.s) + J.scale(h.t)
}

/// Split-complex product `(s₁s₂ + t₁t₂, s₁t₂ + t₁s₂)`.
pub fn hyper_mul(a: HyperbolicNumber, b: HyperbolicNumber) -> HyperbolicNumber {
    HyperbolicNumber {
        s: a.s * b.s + a.t * b.t,
        t: a.s * b.t + a.t * b.s,
    }
}

/// `⟨δ, 1⟩ = 0` in the Euclidean inner product of ℝ³.
pub fn delta_orthogonality_check() -> bool {
    Ternion::DELTA.dot(&Ternion::ONE) == 0.0
}
