use thiserror::Error;

use crate::combinatorics::{enumerate_ap, enumerate_basis_paths, parallel_pairs, BasisPathSet, ParallelPair};
use crate::quiver::{
    check_finite_dimensional, validate_gentle, validate_string, BoundQuiver, Path, ValidationReport, WitnessCycle,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypothesisError {
    #[error("not a string bound quiver ({} violations)", .0.violations.len())]
    NotString(ValidationReport),
    #[error("quiver is not connected ({0} components)")]
    Disconnected(usize),
    #[error("algebra is infinite dimensional: the cycle {0} avoids every relation")]
    InfiniteDimensional(String),
    #[error("algebra is not gentle")]
    NotGentle,
}

/// A quadratic string algebra `kQ/I`: a bound quiver that passed every
/// hypothesis check, with its path basis.
#[derive(Clone, Debug)]
pub struct StringAlgebra {
    quiver: BoundQuiver,
    basis: BasisPathSet,
    gentle: bool,
}

impl StringAlgebra {
    pub fn new(quiver: BoundQuiver) -> Result<StringAlgebra, HypothesisError> {
        let report = validate_string(&quiver);
        if !report.is_ok() {
            return Err(HypothesisError::NotString(report));
        }
        let components = quiver.component_count();
        if components != 1 {
            return Err(HypothesisError::Disconnected(components));
        }
        if let Err(WitnessCycle(c)) = check_finite_dimensional(&quiver) {
            return Err(HypothesisError::InfiniteDimensional(c.display(&quiver).to_string()));
        }
        let basis = enumerate_basis_paths(&quiver).expect("finite dimension was checked");
        let gentle = validate_gentle(&quiver).is_ok();
        Ok(StringAlgebra { quiver, basis, gentle })
    }

    pub fn quiver(&self) -> &BoundQuiver {
        &self.quiver
    }

    pub fn basis(&self) -> &BasisPathSet {
        &self.basis
    }

    pub fn is_gentle(&self) -> bool {
        self.gentle
    }

    pub fn require_gentle(&self) -> Result<(), HypothesisError> {
        if self.gentle {
            Ok(())
        } else {
            Err(HypothesisError::NotGentle)
        }
    }

    /// Product of two basis paths in `A`; `None` for zero.
    pub fn product(&self, p: &Path, q: &Path) -> Option<Path> {
        if let (Some(x), Some(y)) = (p.last(), q.first()) {
            if self.quiver.is_relation(x, y) {
                return None;
            }
        }
        p.compose(q)
    }

    pub fn ap(&self, n: usize) -> Vec<Path> {
        enumerate_ap(&self.quiver, n)
    }

    /// `(AP_n // 𝒫)`, the degree-`n` cochain basis, in canonical order.
    pub fn cochain_pairs(&self, n: usize) -> Vec<ParallelPair> {
        parallel_pairs(&self.ap(n), &self.basis, 0)
    }
}
