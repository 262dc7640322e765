//! The absolute value `‖x‖ = √(A + B)` and the distances it induces.
//!
//! `‖·‖` is multiplicative (`‖x ⊗ y‖ = ‖x‖·‖y‖`), absolutely homogeneous and
//! subadditive, but it vanishes on the whole line 𝔻. It is therefore a
//! seminorm, and [`distance`] is only a pseudometric on 𝕋. It becomes a genuine
//! metric on the quotient 𝕋/𝔻, which [`quotient_distance`] evaluates on
//! canonical coset representatives.

use crate::structure::reduce_mod_d;
use crate::Ternion;

/// `‖x‖ = √(A + B)`; equals `|z|` for `(z, r) = split(x)`.
pub fn abs_value(x: Ternion) -> f64 {
    let s = x.quad_forms().a_plus_b();
    let scale = x.max_abs().max(1.0);
    debug_assert!(
        s >= -1e-9 * scale * scale,
        "A + B = {s} is negative beyond round-off for {x:?}"
    );
    libm::sqrt(s.max(0.0))
}

/// `A − B = ((x₁ − x_u)² + (x_u − x_v)² + (x₁ + x_v)²)/2`, nonnegative.
pub fn a_minus_b(x: Ternion) -> f64 {
    x.quad_forms().a_minus_b()
}

/// `‖x ⊖ y‖`. Zero whenever `x ⊖ y ∈ 𝔻`.
pub fn distance(x: Ternion, y: Ternion) -> f64 {
    abs_value(x - y)
}

/// Distance between the cosets `x + 𝔻` and `y + 𝔻`.
pub fn quotient_distance(x: Ternion, y: Ternion) -> f64 {
    distance(reduce_mod_d(x), reduce_mod_d(y))
}

impl Ternion {
    /// See [`abs_value`].
    pub fn norm(&self) -> f64 {
        abs_value(*self)
    }
}
