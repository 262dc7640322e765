//! Elements of 𝕋 and basis-level arithmetic.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::AlgebraError;

/// An element `real·1 ⊕ u·𝐮 ⊕ v·𝐯` of 𝕋.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Ternion {
    /// Coefficient of the unit `1`.
    pub real: f64,
    /// Coefficient of `𝐮`.
    pub u: f64,
    /// Coefficient of `𝐯`.
    pub v: f64,
}

impl Ternion {
    /// Λ, the additive identity.
    pub const ZERO: Ternion = Ternion::new(0.0, 0.0, 0.0);
    /// The multiplicative unit `(1, 0, 0)`.
    pub const ONE: Ternion = Ternion::new(1.0, 0.0, 0.0);
    pub const U: Ternion = Ternion::new(0.0, 1.0, 0.0);
    pub const V: Ternion = Ternion::new(0.0, 0.0, 1.0);
    /// `δ = 𝐮 ⊖ 𝐯`, orthogonal to `1` in the Euclidean sense.
    pub const DELTA: Ternion = Ternion::new(0.0, 1.0, -1.0);

    #[inline]
    pub const fn new(real: f64, u: f64, v: f64) -> Self {
        Ternion { real, u, v }
    }

    /// Like [`Ternion::new`] but rejects NaN and infinite components.
    pub fn try_new(real: f64, u: f64, v: f64) -> Result<Self, AlgebraError> {
        let t = Ternion::new(real, u, v);
        if t.is_finite() {
            Ok(t)
        } else {
            Err(AlgebraError::NonFinite)
        }
    }

    #[inline]
    pub const fn from_array(c: [f64; 3]) -> Self {
        Ternion::new(c[0], c[1], c[2])
    }

    #[inline]
    pub const fn to_array(self) -> [f64; 3] {
        [self.real, self.u, self.v]
    }

    pub fn is_finite(&self) -> bool {
        self.real.is_finite() && self.u.is_finite() && self.v.is_finite()
    }

    /// Largest absolute component, `‖x‖∞`.
    pub fn max_abs(&self) -> f64 {
        self.real.abs().max(self.u.abs()).max(self.v.abs())
    }

    /// An absolute tolerance `rel · max(1, ‖x‖∞)`.
    pub fn scaled_tol(&self, rel: f64) -> f64 {
        rel * self.max_abs().max(1.0)
    }

    #[inline]
    pub fn scale(self, k: f64) -> Self {
        Ternion::new(k * self.real, k * self.u, k * self.v)
    }

    /// The σ-conjugate `(x₁, x_u, x_v) ↦ (x₁, −x_v, −x_u)`.
    ///
    /// This is an involutive algebra automorphism: `(x ⊗ y)* = x* ⊗ y*`.
    #[inline]
    pub fn conj(self) -> Self {
        Ternion::new(self.real, -self.v, -self.u)
    }

    /// The two quadratic forms with `x ⊗ x* = A·1 ⊕ B·δ`.
    pub fn quad_forms(&self) -> QuadraticPair {
        let Ternion { real, u, v } = *self;
        let sq = |t: f64| t * t;
        QuadraticPair {
            a: real * real + u * u + v * v,
            b: real * u + u * v - v * real,
            plus: (sq(real + u) + sq(u + v) + sq(real - v)) * 0.5,
            minus_2: sq(real - u + v),
        }
    }

    /// `x ⊗ x*`, which always equals `(A, B, −B)`.
    pub fn conj_product(self) -> Self {
        self * self.conj()
    }

    /// Coordinates `(𝒜, ℬ)` of `x ⊗ x*` in the basis `(1, 𝐣)` of σ, where
    /// `𝐣 = (1/3, 2/3, −2/3)`: `𝒜 = A − B/2`, `ℬ = 3B/2`.
    ///
    /// Note `𝒜 + ℬ = A + B` but `𝒜 − ℬ = A − 2B`, not `A − B`.
    pub fn shifted_coeffs(&self) -> (f64, f64) {
        let q = self.quad_forms();
        (q.a - 0.5 * q.b, 1.5 * q.b)
    }

    /// Matrix of left multiplication by `self`.
    pub fn regular_rep(&self) -> RegularRep {
        RegularRep::of(*self)
    }

    /// Euclidean dot product of coordinate vectors. This is not an algebra
    /// operation; it only expresses orthogonality in ℝ³.
    pub fn dot(&self, other: &Ternion) -> f64 {
        self.real * other.real + self.u * other.u + self.v * other.v
    }

    /// `self^n` by repeated squaring, with `x^0 = 1`.
    pub fn powi(self, mut n: u64) -> Self {
        let mut base = self;
        let mut acc = Ternion::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            n >>= 1;
            if n > 0 {
                base = base * base;
            }
        }
        acc
    }
}

impl fmt::Display for Ternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.real, self.u, self.v)
    }
}

impl From<[f64; 3]> for Ternion {
    fn from(c: [f64; 3]) -> Self {
        Ternion::from_array(c)
    }
}

impl From<Ternion> for [f64; 3] {
    fn from(t: Ternion) -> Self {
        t.to_array()
    }
}

impl Add for Ternion {
    type Output = Ternion;
    #[inline]
    fn add(self, rhs: Ternion) -> Ternion {
        Ternion::new(self.real + rhs.real, self.u + rhs.u, self.v + rhs.v)
    }
}

impl Sub for Ternion {
    type Output = Ternion;
    #[inline]
    fn sub(self, rhs: Ternion) -> Ternion {
        Ternion::new(self.real - rhs.real, self.u - rhs.u, self.v - rhs.v)
    }
}

impl Neg for Ternion {
    type Output = Ternion;
    #[inline]
    fn neg(self) -> Ternion {
        Ternion::new(-self.real, -self.u, -self.v)
    }
}

/// The product `⊗`.
impl Mul for Ternion {
    type Output = Ternion;
    #[inline]
    fn mul(self, y: Ternion) -> Ternion {
        let x = self;
        Ternion::new(
            x.real * y.real - x.u * y.v - x.v * y.u,
            x.real * y.u + x.u * y.real - x.v * y.v,
            x.real * y.v + x.u * y.u + x.v * y.real,
        )
    }
}

impl Mul<f64> for Ternion {
    type Output = Ternion;
    #[inline]
    fn mul(self, k: f64) -> Ternion {
        self.scale(k)
    }
}

impl Mul<Ternion> for f64 {
    type Output = Ternion;
    #[inline]
    fn mul(self, x: Ternion) -> Ternion {
        x.scale(self)
    }
}

impl AddAssign for Ternion {
    fn add_assign(&mut self, rhs: Ternion) {
        *self = *self + rhs;
    }
}

impl SubAssign for Ternion {
    fn sub_assign(&mut self, rhs: Ternion) {
        *self = *self - rhs;
    }
}

impl MulAssign for Ternion {
    fn mul_assign(&mut self, rhs: Ternion) {
        *self = *self * rhs;
    }
}

impl core::iter::Sum for Ternion {
    fn sum<I: Iterator<Item = Ternion>>(iter: I) -> Ternion {
        iter.fold(Ternion::ZERO, Add::add)
    }
}

impl core::iter::Product for Ternion {
    fn product<I: Iterator<Item = Ternion>>(iter: I) -> Ternion {
        iter.fold(Ternion::ONE, Mul::mul)
    }
}

/// Values of `A(x) = x₁² + x_u² + x_v²` and `B(x) = x₁x_u + x_u x_v − x_v x₁`.
///
/// `A + B` and `A − 2B` vanish on the ideals, where `a + b` and `a − 2b` lose
/// all relative precision, so both are kept in their sum-of-squares forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticPair {
    pub a: f64,
    pub b: f64,
    plus: f64,
    minus_2: f64,
}

impl QuadraticPair {
    /// `A + B = ((x₁ + x_u)² + (x_u + x_v)² + (x₁ − x_v)²)/2`, the squared
    /// seminorm.
    pub fn a_plus_b(&self) -> f64 {
        self.plus
    }

    pub fn a_minus_b(&self) -> f64 {
        self.a - self.b
    }

    /// `A − 2B = (x₁ − x_u + x_v)²`.
    pub fn a_minus_2b(&self) -> f64 {
        self.minus_2
    }
}

/// The 3×3 regular representation, `m[row][col]`, whose column `k` holds the
/// coordinates of `x ⊗ eₖ` for `eₖ ∈ {1, 𝐮, 𝐯}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegularRep {
    pub m: [[f64; 3]; 3],
}

impl RegularRep {
    pub const IDENTITY: RegularRep = RegularRep {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub fn of(x: Ternion) -> Self {
        let cols = [x * Ternion::ONE, x * Ternion::U, x * Ternion::V];
        let mut m = [[0.0; 3]; 3];
        for (k, c) in cols.iter().enumerate() {
            let c = c.to_array();
            for row in 0..3 {
                m[row][k] = c[row];
            }
        }
        RegularRep { m }
    }

    /// Matrix-vector product with the coordinates of `y`.
    pub fn apply(&self, y: Ternion) -> Ternion {
        let y = y.to_array();
        let row = |r: usize| self.m[r][0] * y[0] + self.m[r][1] * y[1] + self.m[r][2] * y[2];
        Ternion::new(row(0), row(1), row(2))
    }

    pub fn matmul(&self, rhs: &RegularRep) -> RegularRep {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        RegularRep { m }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// The represented element, read off the first column (`x ⊗ 1 = x`).
    pub fn element(&self) -> Ternion {
        Ternion::new(self.m[0][0], self.m[1][0], self.m[2][0])
    }
}
