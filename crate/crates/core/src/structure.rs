//! Ideal structure of 𝕋.
//!
//! 𝕋 is the direct sum of two ideals:
//!
//! * 𝔻 = {γ(1, −1, 1)}, a line isomorphic to ℝ with unit [`ONE_D`];
//! * 𝔾 = {(α − β, α, β)}, a plane isomorphic to ℂ with unit [`ONE_G`] and
//!   imaginary unit [`I_G`].
//!
//! `ONE_D` and `ONE_G` are orthogonal idempotents summing to `1`, so
//! multiplication by them projects onto the two ideals. Every nonzero element of
//! 𝔻 ∪ 𝔾 is a zero divisor; every other element is invertible.
//!
//! [`split`] realises the isomorphism 𝕋 ≅ ℂ × ℝ in the basis `{1_𝔾, i_𝔾, 1_𝔻}`.

use core::ops::Mul;

use crate::{AlgebraError, Ternion};

/// Unit of 𝔻, `(1/3, −1/3, 1/3)`.
pub const ONE_D: Ternion = Ternion::new(1.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0);
/// Unit of 𝔾, `(2/3, 1/3, −1/3)`.
pub const ONE_G: Ternion = Ternion::new(2.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0);
/// `(0, √(1/3), √(1/3))`, with `I_G ⊗ I_G = ⊖ONE_G`.
pub const I_G: Ternion = Ternion::new(0.0, FRAC_1_SQRT_3, FRAC_1_SQRT_3);
/// Spanning vector of 𝔻.
pub const D_GENERATOR: Ternion = Ternion::new(1.0, -1.0, 1.0);
/// Basis `(1, 1, 0), (−1, 0, 1)` of 𝔾.
pub const G_BASIS: [Ternion; 2] = [Ternion::new(1.0, 1.0, 0.0), Ternion::new(-1.0, 0.0, 1.0)];

const FRAC_1_SQRT_3: f64 = 0.577_350_269_189_625_7;
const SQRT_3_OVER_2: f64 = 0.866_025_403_784_438_6;

/// Image of a ternion in ℂ × ℝ: `z = z_re + z_im·i` is the 𝔾 part in the
/// basis `{1_𝔾, i_𝔾}` and `r` is the 𝔻 part in the basis `{1_𝔻}`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SplitForm {
    pub z_re: f64,
    pub z_im: f64,
    pub r: f64,
}

/// Componentwise product in ℂ × ℝ.
impl Mul for SplitForm {
    type Output = SplitForm;
    fn mul(self, o: SplitForm) -> SplitForm {
        SplitForm {
            z_re: self.z_re * o.z_re - self.z_im * o.z_im,
            z_im: self.z_re * o.z_im + self.z_im * o.z_re,
            r: self.r * o.r,
        }
    }
}

impl SplitForm {
    pub const fn new(z_re: f64, z_im: f64, r: f64) -> Self {
        SplitForm { z_re, z_im, r }
    }

    /// `|z|²`.
    pub fn z_norm_sqr(&self) -> f64 {
        self.z_re * self.z_re + self.z_im * self.z_im
    }

    /// `|z|`.
    pub fn z_abs(&self) -> f64 {
        libm::hypot(self.z_re, self.z_im)
    }

    /// `(1/z, 1/r)`. Non-finite when either factor is zero.
    pub fn recip(self) -> SplitForm {
        let n = self.z_norm_sqr();
        SplitForm {
            z_re: self.z_re / n,
            z_im: -self.z_im / n,
            r: 1.0 / self.r,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.z_re.is_finite() && self.z_im.is_finite() && self.r.is_finite()
    }
}

/// Where a ternion sits relative to the zero divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Λ itself, which belongs to both ideals.
    Zero,
    /// Nonzero element of 𝔻.
    ZeroDivisorD,
    /// Nonzero element of 𝔾.
    ZeroDivisorG,
    Invertible,
}

/// Coefficients of `x = a(1,1,0) ⊕ b(−1,0,1) ⊕ c(1,−1,1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdealCoords {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl IdealCoords {
    pub fn reconstruct(&self) -> Ternion {
        G_BASIS[0].scale(self.a) + G_BASIS[1].scale(self.b) + D_GENERATOR.scale(self.c)
    }
}

/// `(x₁ − x_u + x_v)/3`, the 𝔻 coordinate of `x` along `(1, −1, 1)`.
#[inline]
fn d_coord(x: &Ternion) -> f64 {
    (x.real - x.u + x.v) / 3.0
}

/// `x ⊗ 1_𝔻`, the component of `x` in 𝔻.
pub fn proj_d(x: Ternion) -> Ternion {
    D_GENERATOR.scale(d_coord(&x))
}

/// `x ⊗ 1_𝔾`, the component of `x` in 𝔾. Always `proj_d(x) ⊕ proj_g(x) = x`.
pub fn proj_g(x: Ternion) -> Ternion {
    x - proj_d(x)
}

/// `‖x ⊖ proj_d(x)‖∞ ≤ tol`.
pub fn in_d(x: Ternion, tol: f64) -> bool {
    proj_g(x).max_abs() <= tol
}

/// `‖x ⊖ proj_g(x)‖∞ ≤ tol`.
pub fn in_g(x: Ternion, tol: f64) -> bool {
    proj_d(x).max_abs() <= tol
}

/// The isomorphism 𝕋 → ℂ × ℝ.
///
/// With `(g₁, g_u, g_v) = proj_g(x)`: `z_re = 3g₁/2`, `z_im = √3(g_u + g_v)/2`
/// and `r = x₁ − x_u + x_v`, which simplify to the expressions below.
pub fn split(x: Ternion) -> SplitForm {
    SplitForm {
        z_re: x.real + 0.5 * (x.u - x.v),
        z_im: SQRT_3_OVER_2 * (x.u + x.v),
        r: x.real - x.u + x.v,
    }
}

/// Inverse of [`split`]: `z_re·1_𝔾 ⊕ z_im·i_𝔾 ⊕ r·1_𝔻`.
pub fn from_split(s: SplitForm) -> Ternion {
    ONE_G.scale(s.z_re) + I_G.scale(s.z_im) + D_GENERATOR.scale(s.r / 3.0)
}

/// Classify `x` with absolute tolerance `tol`.
pub fn classify(x: Ternion, tol: f64) -> Classification {
    if x.max_abs() <= tol {
        Classification::Zero
    } else if in_d(x, tol) {
        Classification::ZeroDivisorD
    } else if in_g(x, tol) {
        Classification::ZeroDivisorG
    } else {
        Classification::Invertible
    }
}

/// [`classify`] with tolerance `1e-9 · max(1, ‖x‖∞)`.
pub fn classify_default(x: Ternion) -> Classification {
    classify(x, x.scaled_tol(crate::DEFAULT_REL_TOL))
}

/// The unique `y` with `x ⊗ y = 1`, computed as `from_split(1/z, 1/r)`.
///
/// Fails with [`AlgebraError::NotInvertible`] unless `classify(x, tol)` is
/// `Invertible`.
pub fn invert(x: Ternion, tol: f64) -> Result<Ternion, AlgebraError> {
    if !x.is_finite() {
        return Err(AlgebraError::NonFinite);
    }
    if classify(x, tol) != Classification::Invertible {
        return Err(AlgebraError::NotInvertible);
    }
    let y = from_split(split(x).recip());
    if y.is_finite() {
        Ok(y)
    } else {
        Err(AlgebraError::NotInvertible)
    }
}

/// Solve `x = a(1,1,0) ⊕ b(−1,0,1) ⊕ c(1,−1,1)`. `x` is invertible exactly
/// when `a² + b² > 0` and `c² > 0`.
pub fn invertible_decomposition(x: Ternion) -> IdealCoords {
    let c = d_coord(&x);
    IdealCoords {
        a: x.u + c,
        b: x.v - c,
        c,
    }
}

/// `‖x ⊗ y‖∞ ≤ tol`.
pub fn annihilates(x: Ternion, y: Ternion, tol: f64) -> bool {
    (x * y).max_abs() <= tol
}

/// Representative of the coset `x + 𝔻` with zero first coordinate:
/// `x ⊖ x₁(1, −1, 1)`.
pub fn reduce_mod_d(x: Ternion) -> Ternion {
    Ternion::new(0.0, x.u + x.real, x.v - x.real)
}
