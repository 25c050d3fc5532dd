//! Monic univariate polynomials stored by their roots, with the weight data
//! needed to decide tameness.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, Rational};

/// How the defining relation `(b(η) + Q)·u = 0` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BKind {
    /// `Q = 0`.
    Monodromic,
    /// `ord Q ≤ deg b`.
    Regular,
    General,
}

impl BKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BKind::Monodromic => "monodromic",
            BKind::Regular => "regular",
            BKind::General => "general",
        }
    }
}

impl fmt::Display for BKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BFunction {
    /// Sorted in decreasing order, with multiplicity.
    roots: Vec<Rational>,
    total_weight: Rational,
    kind: BKind,
    filtration: String,
}

impl BFunction {
    pub fn new(
        mut roots: Vec<Rational>,
        total_weight: Rational,
        kind: BKind,
        filtration: impl Into<String>,
    ) -> Result<Self> {
        if total_weight.is_negative() {
            return Err(Error::input("total weight must be nonnegative"));
        }
        roots.sort_by(|a, b| b.cmp(a));
        Ok(BFunction { roots, total_weight, kind, filtration: filtration.into() })
    }

    /// The constant polynomial 1.
    pub fn one(filtration: impl Into<String>) -> Self {
        BFunction {
            roots: Vec::new(),
            total_weight: Rational::zero(),
            kind: BKind::Monodromic,
            filtration: filtration.into(),
        }
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn total_weight(&self) -> &Rational {
        &self.total_weight
    }

    pub fn kind(&self) -> BKind {
        self.kind
    }

    pub fn filtration(&self) -> &str {
        &self.filtration
    }

    pub fn min_root(&self) -> Option<&Rational> {
        self.roots.last()
    }

    /// Every root is strictly greater than `−total_weight`. The constant
    /// polynomial is tame.
    pub fn is_tame(&self) -> bool {
        self.min_root().is_none_or(|r| *r > -self.total_weight.clone())
    }

    /// `min root + total_weight`, absent for the constant polynomial.
    pub fn margin(&self) -> Option<Rational> {
        self.min_root().map(|r| r + &self.total_weight)
    }

    /// Coefficients of `Π (T − r)` in increasing powers of `T`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut c = vec![Rational::one()];
        for r in &self.roots {
            let mut next = vec![Rational::zero(); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            c = next;
        }
        c
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.roots.iter().map(|r| t - r).product()
    }

    /// Divides every root and the total weight by `w`.
    pub fn rescaled(&self, w: &Rational) -> Result<BFunction> {
        if !w.is_positive() {
            return Err(Error::input("rescaling weight must be positive"));
        }
        Ok(BFunction {
            roots: self.roots.iter().map(|r| r / w).collect(),
            total_weight: &self.total_weight / w,
            kind: self.kind,
            filtration: self.filtration.clone(),
        })
    }
}

impl fmt::Display for BFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if r.is_zero() {
                f.write_str("T")?;
            } else if r.is_negative() {
                write!(f, "(T+{})", fmt_rational(&-r.clone()))?;
            } else {
                write!(f, "(T-{})", fmt_rational(r))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn tame_and_margin() {
        let b = BFunction::new(vec![int(-1), int(0)], int(2), BKind::Regular, "").unwrap();
        assert_eq!(b.roots(), &[int(0), int(-1)]);
        assert!(b.is_tame());
        assert_eq!(b.margin(), Some(int(1)));
        assert_eq!(b.to_string(), "T*(T+1)");
        let wild = BFunction::new(vec![int(-2)], int(2), BKind::General, "").unwrap();
        assert!(!wild.is_tame());
        assert!(BFunction::one("").is_tame());
        assert_eq!(BFunction::one("").margin(), None);
    }

    #[test]
    fn coefficients_and_rescale() {
        let b = BFunction::new(vec![int(0), int(-1)], int(2), BKind::Regular, "").unwrap();
        assert_eq!(b.coefficients(), vec![int(0), int(1), int(1)]);
        assert_eq!(b.evaluate(&int(2)), int(6));
        let u = b.rescaled(&int(2)).unwrap();
        assert_eq!(u.roots(), &[int(0), rat(-1, 2)]);
        assert_eq!(u.total_weight(), &int(1));
    }
}
