//! Algebra contexts: the number of Witt pairs and the scalar field.

use crate::{Error, Result};

/// Largest supported number of Witt pairs. Indices are packed two bits per
/// slot into a `u32`, and exact elimination beyond this size is not a design
/// goal anyway.
pub const MAX_PAIRS: u32 = 12;

/// Scalar field over which an algebra is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    /// Arbitrary-precision rationals.
    Rational,
    /// Gaussian rationals: exact rational real and imaginary parts.
    GaussianRational,
}

impl FieldTag {
    pub fn is_complex(self) -> bool {
        matches!(self, FieldTag::GaussianRational)
    }
}

/// The ambient algebra Cl(m,m): `m` Witt pairs over a chosen exact field.
///
/// Every element carries its context; binary operations reject mixed
/// contexts. The context is a small copyable value, so elements stay cheap
/// to pass around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    m: u32,
    field: FieldTag,
}

impl AlgebraContext {
    /// A context with `m ≥ 1` Witt pairs.
    pub fn new(m: u32, field: FieldTag) -> Result<Self> {
        if m == 0 || m > MAX_PAIRS {
            return Err(Error::InvalidPairCount { got: m });
        }
        Ok(AlgebraContext { m, field })
    }

    /// Context for a reduced spinor space obtained by stripping leading Witt
    /// pairs. `m = 0` is allowed here: the algebra degenerates to bare
    /// scalars, which is exactly what a fully stripped block is.
    pub(crate) fn reduced(m: u32, field: FieldTag) -> Self {
        debug_assert!(m <= MAX_PAIRS);
        AlgebraContext { m, field }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    /// Number of extended-Fock-basis monomials, `4^m`.
    pub fn efb_dimension(&self) -> usize {
        1usize << (2 * self.m)
    }

    /// Dimension of the spinor ideal, `2^m`.
    pub fn spinor_dimension(&self) -> usize {
        1usize << self.m
    }

    pub(crate) fn check_same(&self, other: &AlgebraContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Checks that a scalar is representable over this context's field.
    pub(crate) fn check_scalar(&self, s: &crate::Scalar) -> Result<()> {
        if self.field == FieldTag::Rational && !s.is_real() {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_pair_counts() {
        assert_eq!(
            AlgebraContext::new(0, FieldTag::Rational),
            Err(Error::InvalidPairCount { got: 0 })
        );
        assert!(AlgebraContext::new(MAX_PAIRS + 1, FieldTag::Rational).is_err());
        assert!(AlgebraContext::new(1, FieldTag::Rational).is_ok());
    }

    #[test]
    fn dimensions() {
        let ctx = AlgebraContext::new(3, FieldTag::Rational).unwrap();
        assert_eq!(ctx.efb_dimension(), 64);
        assert_eq!(ctx.spinor_dimension(), 8);
    }
}
