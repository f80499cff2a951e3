use crate::error::{Error, Result};

use super::MPoly;

/// A numerator over an x-free denominator, never reduced.
///
/// Equality is cross-multiplication: `a/b == c/d` iff `a·d == c·b`.
#[derive(Debug, Clone)]
pub struct RationalForm {
    numerator: MPoly,
    denominator: MPoly,
}

impl RationalForm {
    pub fn new(numerator: MPoly, denominator: MPoly) -> Result<Self> {
        if numerator.nvars() != denominator.nvars() {
            return Err(Error::NvarsMismatch {
                left: numerator.nvars(),
                right: denominator.nvars(),
            });
        }
        if denominator.is_zero() || !denominator.is_x_free() {
            return Err(Error::BadDivisor);
        }
        Ok(RationalForm { numerator, denominator })
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        RationalForm {
            numerator: p,
            denominator: MPoly::one(n),
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &MPoly {
        &self.denominator
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    /// The polynomial value when the denominator divides exactly.
    pub fn to_polynomial(&self) -> Result<MPoly> {
        self.numerator.exact_div_xfree(&self.denominator)
    }

    /// Specializes numerator and denominator separately.
    ///
    /// Fails if the denominator vanishes or picks up x-variables.
    pub fn specialize(&self, bindings: &[(super::Var, super::Binding)]) -> Result<Self> {
        Self::new(
            self.numerator.specialize(bindings),
            self.denominator.specialize(bindings),
        )
    }

    /// Cross-multiplied comparison with a polynomial.
    pub fn equals_poly(&self, p: &MPoly) -> bool {
        self.nvars() == p.nvars() && self.numerator == p * &self.denominator
    }
}

impl PartialEq for RationalForm {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalForm {}
