use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// The element lies (within tolerance) in 𝔻 ∪ 𝔾, so it has no inverse.
    NotInvertible,
    /// The element is not in the hyperbolic subplane σ.
    NotInSigma,
    /// A component is NaN or infinite.
    NonFinite,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NotInvertible => f.write_str("NotInvertible: element is a zero divisor"),
            AlgebraError::NotInSigma => {
                f.write_str("NotInSigma: element is outside span{1, delta}")
            }
            AlgebraError::NonFinite => f.write_str("NonFinite: component is NaN or infinite"),
        }
    }
}

impl core::error::Error for AlgebraError {}
