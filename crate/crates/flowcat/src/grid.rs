//! The ε-grid over which every flow and interleaving search is indexed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extreal::ExtReal;

/// A finite sample {0, δ, 2δ, …, Nδ} of the half-line of translation
/// magnitudes. All flow data is stored at grid indices; index sums
/// beyond `n` are undefined and callers must respect the cap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EpsilonGrid {
    pub delta: f64,
    pub n: usize,
}

impl EpsilonGrid {
    pub fn new(delta: f64, n: usize) -> Result<EpsilonGrid> {
        if !delta.is_finite() || delta <= 0.0 {
            return Err(Error::precondition(format!(
                "grid step must be positive and finite, got {delta}"
            )));
        }
        if n < 1 {
            return Err(Error::precondition("grid count must be at least 1"));
        }
        Ok(EpsilonGrid { delta, n })
    }

    /// The real value kδ of grid index k.
    pub fn value(&self, k: usize) -> ExtReal {
        ExtReal::finite(self.delta * k as f64)
    }

    /// Largest index k with 2k ≤ n, the search range for interleavings.
    pub fn half_cap(&self) -> usize {
        self.n / 2
    }

    pub fn contains_index(&self, k: usize) -> bool {
        k <= self.n
    }

    /// Index sum, defined only when it stays on the grid.
    pub fn index_add(&self, j: usize, k: usize) -> Result<usize> {
        let sum = j + k;
        if sum <= self.n {
            Ok(sum)
        } else {
            Err(Error::precondition(format!(
                "grid index {j}+{k} exceeds cap {}",
                self.n
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_guards() {
        assert!(EpsilonGrid::new(0.0, 3).is_err());
        assert!(EpsilonGrid::new(-1.0, 3).is_err());
        assert!(EpsilonGrid::new(1.0, 0).is_err());
        assert!(EpsilonGrid::new(0.5, 6).is_ok());
    }

    #[test]
    fn index_arithmetic_respects_cap() {
        let g = EpsilonGrid::new(1.0, 6).unwrap();
        assert_eq!(g.index_add(2, 3).unwrap(), 5);
        assert!(g.index_add(4, 3).is_err());
        assert_eq!(g.half_cap(), 3);
        assert_eq!(g.value(4), crate::extreal::ExtReal::finite(4.0));
    }
}
