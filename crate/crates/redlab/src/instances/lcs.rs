//! Longest common subsequence, decision form.

use serde::{Deserialize, Serialize};

/// Do the `parameter` strings share a common subsequence of length at least
/// `required`?
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LcsInstance {
    pub parameter: usize,
    pub required: usize,
    /// Symbols are `0..alphabet`.
    pub alphabet: usize,
    pub strings: Vec<Vec<usize>>,
}

impl LcsInstance {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.parameter != self.strings.len() {
            errs.push(format!(
                "parameter {} must equal the number of strings {}",
                self.parameter,
                self.strings.len()
            ));
        }
        if self.strings.is_empty() {
            errs.push("need at least one string".into());
        }
        if self.alphabet == 0 {
            errs.push("alphabet must be nonempty".into());
        }
        for (i, s) in self.strings.iter().enumerate() {
            for &sym in s {
                if sym >= self.alphabet {
                    errs.push(format!("string {i} uses symbol {sym} out of range"));
                    break;
                }
            }
        }
    }
}

/// Is `needle` a subsequence of `hay`?
pub fn is_subsequence(needle: &[usize], hay: &[usize]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|c| it.any(|h| h == c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsequence_check() {
        assert!(is_subsequence(&[0, 2], &[0, 1, 2]));
        assert!(is_subsequence(&[], &[]));
        assert!(!is_subsequence(&[2, 0], &[0, 1, 2]));
    }
}
