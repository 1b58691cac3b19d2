use std::fmt;

use crate::error::{Error, Result};

/// One labeled tensor factor of a Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub label: String,
    pub dim: usize,
}

/// A finite-dimensional Hilbert space with an ordered list of labeled
/// tensor factors. The total dimension is the product of the factor
/// dimensions; an empty factor list is the one-dimensional scalar space.
///
/// Joint indices are big-endian over the factor list: the first factor
/// varies slowest. Factor order is part of a space's identity — two spaces
/// with the same factors in different order are different spaces, and
/// reordering is always an explicit operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSpace {
    factors: Vec<Factor>,
}

impl HilbertSpace {
    /// Space with the given `(label, dim)` factors, in order.
    pub fn new<L: Into<String>>(factors: impl IntoIterator<Item = (L, usize)>) -> Result<Self> {
        let factors: Vec<Factor> = factors
            .into_iter()
            .map(|(label, dim)| Factor {
                label: label.into(),
                dim,
            })
            .collect();
        for f in &factors {
            if f.dim == 0 {
                return Err(Error::DimensionMismatch(format!(
                    "factor `{}` has dimension 0",
                    f.label
                )));
            }
        }
        for (i, f) in factors.iter().enumerate() {
            if factors[..i].iter().any(|g| g.label == f.label) {
                return Err(Error::DuplicateLabel(f.label.clone()));
            }
        }
        Ok(Self { factors })
    }

    /// Single-factor space.
    pub fn single(label: impl Into<String>, dim: usize) -> Self {
        Self::new([(label.into(), dim)]).expect("single factor cannot collide")
    }

    /// The zero-factor scalar space (total dimension 1).
    pub fn scalar() -> Self {
        Self { factors: vec![] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.factors.iter().map(|f| f.label.as_str())
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.factors.iter().any(|f| f.label == label)
    }

    pub fn position_of(&self, label: &str) -> Result<usize> {
        self.factors
            .iter()
            .position(|f| f.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn dim_of(&self, label: &str) -> Result<usize> {
        Ok(self.factors[self.position_of(label)?].dim)
    }

    /// Concatenation of the two factor lists. Fails on a label collision,
    /// naming the conflicting label.
    pub fn tensor(&self, other: &HilbertSpace) -> Result<HilbertSpace> {
        for f in &other.factors {
            if self.has_label(&f.label) {
                return Err(Error::LabelCollision(f.label.clone()));
            }
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(HilbertSpace { factors })
    }

    /// The sub-space made of the named factors, in the order of `self`.
    pub fn subspace(&self, keep: &[&str]) -> Result<HilbertSpace> {
        for label in keep {
            self.position_of(label)?;
        }
        Ok(HilbertSpace {
            factors: self
                .factors
                .iter()
                .filter(|f| keep.contains(&f.label.as_str()))
                .cloned()
                .collect(),
        })
    }

    /// Big-endian strides: `strides()[k]` is the index step of factor `k`.
    pub(crate) fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.factors.len()];
        for k in (0..self.factors.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.factors[k + 1].dim;
        }
        strides
    }

    /// Decompose a joint index into per-factor digits.
    pub(crate) fn digits(&self, mut index: usize) -> Vec<usize> {
        let strides = self.strides();
        let mut digits = Vec::with_capacity(self.factors.len());
        for s in strides {
            digits.push(index / s);
            index %= s;
        }
        digits
    }
}

impl fmt::Display for HilbertSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "scalar");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("{}({})", x.label, x.dim))
            .collect();
        write!(f, "{}", parts.join(" \u{2297} "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_concatenates_and_rejects_collisions() {
        let a = HilbertSpace::single("a", 2);
        let b = HilbertSpace::single("b", 3);
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.total_dim(), 6);
        assert_eq!(ab.factors()[0].label, "a");
        match a.tensor(&a) {
            Err(Error::LabelCollision(l)) => assert_eq!(l, "a"),
            other => panic!("expected label collision, got {other:?}"),
        }
    }

    #[test]
    fn scalar_space_has_dim_one() {
        assert_eq!(HilbertSpace::scalar().total_dim(), 1);
    }

    #[test]
    fn strides_are_big_endian() {
        let s = HilbertSpace::new([("a", 2), ("b", 3), ("c", 4)]).unwrap();
        assert_eq!(s.strides(), vec![12, 4, 1]);
        assert_eq!(s.digits(17), vec![1, 1, 1]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            HilbertSpace::new([("x", 2), ("x", 2)]),
            Err(Error::DuplicateLabel(_))
        ));
    }
}
