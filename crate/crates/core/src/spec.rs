//! Algebra contexts: rank, variety and (for the nilpotent quotient) class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on homogeneous degrees handled by the free Lie algebra, whose graded
/// components grow like `n^d`.
pub const DEFAULT_DEGREE_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Variety {
    /// The free Lie algebra `L_n`.
    Free,
    /// `F_n = L_n / L_n''`.
    Metabelian,
    /// `L_{n,c} = L_n / (L_n'' + γ^{c+1}(L_n))`.
    NilpotentMetabelian { class: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSpec {
    rank: usize,
    variety: Variety,
    degree_cap: usize,
}

impl AlgebraSpec {
    pub fn new(rank: usize, variety: Variety) -> Result<Self> {
        if rank < 1 {
            return Err(Error::InvalidSpec("rank must be at least 1".into()));
        }
        if let Variety::NilpotentMetabelian { class } = variety {
            if class < 2 {
                return Err(Error::InvalidSpec(format!("class must be at least 2, got {class}")));
            }
        }
        Ok(Self { rank, variety, degree_cap: DEFAULT_DEGREE_CAP })
    }

    pub fn free(rank: usize) -> Result<Self> {
        Self::new(rank, Variety::Free)
    }

    pub fn metabelian(rank: usize) -> Result<Self> {
        Self::new(rank, Variety::Metabelian)
    }

    pub fn nilpotent(rank: usize, class: usize) -> Result<Self> {
        Self::new(rank, Variety::NilpotentMetabelian { class })
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn class(&self) -> Option<usize> {
        match self.variety {
            Variety::NilpotentMetabelian { class } => Some(class),
            _ => None,
        }
    }

    pub fn is_free(&self) -> bool {
        self.variety == Variety::Free
    }

    /// True for `F_n` and `L_{n,c}`.
    pub fn is_metabelian(&self) -> bool {
        !self.is_free()
    }

    /// Whether a homogeneous component of this degree survives in the algebra.
    pub fn keeps_degree(&self, degree: usize) -> bool {
        self.class().is_none_or(|c| degree <= c)
    }

    /// The same variety with the nilpotency class replaced by `class`.
    pub fn truncated(&self, class: usize) -> Result<Self> {
        Ok(Self::nilpotent(self.rank, class)?.with_degree_cap(self.degree_cap))
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank && self.variety == other.variety {
            Ok(())
        } else {
            Err(Error::SpecMismatch { left: *self, right: *other })
        }
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.rank {
            Err(Error::IndexOutOfRange { index, rank: self.rank })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variety {
            Variety::Free => write!(f, "L_{}", self.rank),
            Variety::Metabelian => write!(f, "F_{}", self.rank),
            Variety::NilpotentMetabelian { class } => write!(f, "L_{{{},{}}}", self.rank, class),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_must_be_at_least_two() {
        assert!(AlgebraSpec::nilpotent(2, 1).is_err());
        assert!(AlgebraSpec::nilpotent(2, 2).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(AlgebraSpec::free(2).unwrap().to_string(), "L_2");
        assert_eq!(AlgebraSpec::metabelian(3).unwrap().to_string(), "F_3");
        assert_eq!(AlgebraSpec::nilpotent(2, 4).unwrap().to_string(), "L_{2,4}");
    }
}
