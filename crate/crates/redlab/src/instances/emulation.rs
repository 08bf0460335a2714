//! Uniform emulation of a weighted path on a shorter path.

use serde::{Deserialize, Serialize};

/// Map the weighted path `0..weights.len()` onto positions `0..target_length`
/// so that consecutive path vertices land on equal or adjacent positions and
/// every position carries total weight exactly `parameter`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct UniformEmulationInstance {
    /// The capacity c each target position must hit exactly.
    pub parameter: usize,
    pub target_length: usize,
    /// Weight per source-path vertex, each in `0..=parameter`.
    pub weights: Vec<usize>,
}

impl UniformEmulationInstance {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.parameter == 0 {
            errs.push("capacity must be positive".into());
        }
        if self.target_length == 0 {
            errs.push("target path must have at least one position".into());
        }
        if self.weights.is_empty() {
            errs.push("source path must have at least one vertex".into());
        }
        for (i, &w) in self.weights.iter().enumerate() {
            if w > self.parameter {
                errs.push(format!(
                    "weight {w} of vertex {i} exceeds capacity {}",
                    self.parameter
                ));
            }
        }
    }

    /// Total weight; any valid emulation forces this to equal
    /// `parameter * target_length`.
    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn conserves_weight(&self) -> bool {
        self.total_weight() == self.parameter * self.target_length
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conservation() {
        let inst = UniformEmulationInstance {
            parameter: 2,
            target_length: 3,
            weights: vec![1, 1, 2, 1, 1],
        };
        let mut errs = Vec::new();
        inst.validate_into(&mut errs);
        assert!(errs.is_empty());
        assert!(inst.conserves_weight());
        let off = UniformEmulationInstance { target_length: 4, ..inst };
        assert!(!off.conserves_weight());
    }

    #[test]
    fn zero_weights_are_legal_but_overweight_is_not() {
        let inst = UniformEmulationInstance {
            parameter: 1,
            target_length: 1,
            weights: vec![0, 1, 0],
        };
        let mut errs = Vec::new();
        inst.validate_into(&mut errs);
        assert!(errs.is_empty(), "{errs:?}");
        let heavy = UniformEmulationInstance {
            parameter: 1,
            target_length: 1,
            weights: vec![2],
        };
        let mut errs = Vec::new();
        heavy.validate_into(&mut errs);
        assert!(errs.iter().any(|e| e.contains("exceeds capacity")));
    }
}
