//! Adjoint weight decomposition of a Lie algebra under a Hodge cocharacter,
//! and the numerical invariants read off from it.
//!
//! For `μ` acting on a Hodge basis by `t^{λ_i}`, the bracket with `diag(λ)`
//! acts on `g ⊗ C` with integer eigenvalues `k`, and `g^{k,−k}` is the
//! `k`-eigenspace. Then
//!
//! * `dim 𝓕 = Σ_{k<0} dim g^{k,−k}`,
//! * `hcodim = Σ_{k≤−2} dim g^{k,−k}`,
//! * the structure is of Shimura type iff every weight lies in `{−1, 0, 1}`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::hodge::HodgeNumbers;
use crate::lie::{adjoint_of_diagonal, LieError, MatLieAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("cocharacter weights {lambda:?} do not match the Hodge numbers, which need p-values {expected:?}")]
    MultisetMismatch { lambda: Vec<i64>, expected: Vec<i64> },
    #[error("eigenspace dimensions sum to {found}, algebra has dimension {expected}; ad(μ) is not semisimple")]
    IncompleteGrading { found: usize, expected: usize },
}

/// Integer weights of `μ` on a basis of `H` that diagonalizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeCocharacter {
    lambda: Vec<i64>,
    declared: Option<HodgeNumbers>,
}

impl HodgeCocharacter {
    pub fn new(lambda: Vec<i64>) -> Self {
        HodgeCocharacter { lambda, declared: None }
    }

    /// Checks that `λ` lists each `p` exactly `h^{p,q}` times, in any order.
    pub fn with_numbers(lambda: Vec<i64>, numbers: HodgeNumbers) -> Result<Self, GradingError> {
        let mut sorted = lambda.clone();
        sorted.sort_unstable();
        let expected = numbers.p_values();
        if sorted != expected {
            return Err(GradingError::MultisetMismatch { lambda, expected });
        }
        Ok(HodgeCocharacter {
            lambda,
            declared: Some(numbers),
        })
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn declared_numbers(&self) -> Option<&HodgeNumbers> {
        self.declared.as_ref()
    }
}

/// Dimensions of the eigenspaces `g^{k,−k}`; only non-zero levels are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocharGrading {
    algebra_dim: usize,
    levels: BTreeMap<i64, usize>,
}

impl CocharGrading {
    /// Panics if the levels do not add up to `algebra_dim`.
    pub fn from_levels(algebra_dim: usize, levels: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let levels: BTreeMap<i64, usize> = levels.into_iter().filter(|&(_, d)| d > 0).collect();
        assert_eq!(levels.values().sum::<usize>(), algebra_dim, "levels must add up to the algebra dimension");
        CocharGrading { algebra_dim, levels }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn levels(&self) -> &BTreeMap<i64, usize> {
        &self.levels
    }

    pub fn level(&self, k: i64) -> usize {
        self.levels.get(&k).copied().unwrap_or(0)
    }

    pub fn flag_dimension(&self) -> usize {
        self.levels.range(..0).map(|(_, &d)| d).sum()
    }

    pub fn hcodim(&self) -> usize {
        self.levels.range(..-1).map(|(_, &d)| d).sum()
    }

    pub fn is_shimura_type(&self) -> bool {
        self.levels.keys().all(|k| (-1..=1).contains(k))
    }

    pub fn is_symmetric(&self) -> bool {
        self.levels.iter().all(|(&k, &d)| self.level(-k) == d)
    }
}

pub fn grade(g: &MatLieAlgebra, mu: &HodgeCocharacter) -> Result<CocharGrading, GradingError> {
    let ad = adjoint_of_diagonal(g, &mu.lambda)?;
    let (lo, hi) = match (mu.lambda.iter().min(), mu.lambda.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (0, 0),
    };
    let spread = hi - lo;
    let m = ad.matrix();
    let mut levels = BTreeMap::new();
    let mut found = 0;
    for k in -spread..=spread {
        if found == g.dim() {
            break;
        }
        let d = m.eigenspace(k).len();
        if d > 0 {
            levels.insert(k, d);
            found += d;
        }
    }
    if found != g.dim() {
        return Err(GradingError::IncompleteGrading {
            found,
            expected: g.dim(),
        });
    }
    Ok(CocharGrading {
        algebra_dim: g.dim(),
        levels,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim_g: usize,
    pub flag_dim: usize,
    pub hcodim: usize,
    pub g_minus_one_dim: usize,
    pub shimura_type: bool,
    pub symmetric_grading: bool,
    pub levels: BTreeMap<i64, usize>,
}

impl InvariantReport {
    pub fn from_grading(gr: &CocharGrading) -> Self {
        InvariantReport {
            dim_g: gr.algebra_dim,
            flag_dim: gr.flag_dimension(),
            hcodim: gr.hcodim(),
            g_minus_one_dim: gr.level(-1),
            shimura_type: gr.is_shimura_type(),
            symmetric_grading: gr.is_symmetric(),
            levels: gr.levels.clone(),
        }
    }
}

pub fn report(g: &MatLieAlgebra, mu: &HodgeCocharacter) -> Result<InvariantReport, GradingError> {
    grade(g, mu).map(|gr| InvariantReport::from_grading(&gr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{make_classical, ClassicalKind};

    fn levels(gr: &CocharGrading) -> Vec<(i64, usize)> {
        gr.levels().iter().map(|(&k, &d)| (k, d)).collect()
    }

    #[test]
    fn calabi_yau_type() {
        let g = make_classical(ClassicalKind::Gsp, None, 4).unwrap();
        let gr = grade(&g, &HodgeCocharacter::new(vec![3, 2, 1, 0])).unwrap();
        assert_eq!(levels(&gr), vec![(-3, 1), (-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1), (3, 1)]);
        assert_eq!((gr.flag_dimension(), gr.hcodim()), (4, 2));
        assert!(!gr.is_shimura_type());
        let r = InvariantReport::from_grading(&gr);
        assert_eq!(r.g_minus_one_dim, 2);
        assert!(r.symmetric_grading);
    }

    #[test]
    fn siegel_type() {
        let g = make_classical(ClassicalKind::Gsp, None, 4).unwrap();
        let gr = grade(&g, &HodgeCocharacter::new(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(levels(&gr), vec![(-1, 3), (0, 5), (1, 3)]);
        assert_eq!((gr.flag_dimension(), gr.hcodim()), (3, 0));
        assert!(gr.is_shimura_type());
    }

    #[test]
    fn torus_is_trivially_graded() {
        let g = make_classical(ClassicalKind::DiagTorus, None, 3).unwrap();
        let gr = grade(&g, &HodgeCocharacter::new(vec![5, -1, 2])).unwrap();
        assert_eq!(levels(&gr), vec![(0, 3)]);
        assert_eq!((gr.flag_dimension(), gr.hcodim()), (0, 0));
        assert!(gr.is_shimura_type());
    }

    #[test]
    fn orthogonal_two_zero_two() {
        let g = make_classical(ClassicalKind::Go, None, 4).unwrap();
        let gr = grade(&g, &HodgeCocharacter::new(vec![2, 2, 0, 0])).unwrap();
        assert_eq!(levels(&gr), vec![(-2, 1), (0, 5), (2, 1)]);
        assert_eq!(gr.flag_dimension(), gr.hcodim());
    }

    #[test]
    fn weights_must_match_hodge_numbers() {
        let h = HodgeNumbers::new(1, [((1, 0), 2), ((0, 1), 2)]).unwrap();
        assert!(HodgeCocharacter::with_numbers(vec![0, 1, 0, 1], h.clone()).is_ok());
        assert!(matches!(
            HodgeCocharacter::with_numbers(vec![1, 1, 1, 0], h),
            Err(GradingError::MultisetMismatch { .. })
        ));
    }

    #[test]
    fn normalization_failure_propagates() {
        let g = make_classical(ClassicalKind::Sp, None, 2).unwrap();
        let err = grade(&g, &HodgeCocharacter::new(vec![1, 1, 0])).unwrap_err();
        assert!(matches!(err, GradingError::Lie(LieError::WeightLength { .. })));
        let so3 = make_classical(ClassicalKind::So, None, 3).unwrap();
        let err = grade(&so3, &HodgeCocharacter::new(vec![1, 0, 0])).unwrap_err();
        assert!(matches!(err, GradingError::Lie(LieError::Normalization { .. })));
        assert!(grade(&so3, &HodgeCocharacter::new(vec![1, 0, -1])).is_ok());
    }
}
