use std::collections::BTreeMap;

use serde::Serialize;

use super::{HodgeError, HodgeNumbers};
use crate::field::{NumberField, NumberFieldElement, Rational, Scalar};
use crate::linalg::{intersect, ExactMatrix, Span};

pub type Vector = Vec<NumberFieldElement>;

/// A Hodge filtration with algebraic coordinates, together with the Hodge
/// numbers it is claimed to realize.
///
/// Steps `F^p` need only be given for `p` strictly between the smallest and
/// largest Hodge index; above the range `F^p = 0` and at or below the
/// smallest index `F^p` is the whole space.
#[derive(Clone, Debug)]
pub struct RealizedHodgeStructure {
    field: NumberField,
    dim: usize,
    declared: HodgeNumbers,
    steps: BTreeMap<i64, Vec<Vector>>,
    pieces: BTreeMap<(i64, i64), Vec<Vector>>,
}

impl RealizedHodgeStructure {
    /// Computes `H^{p,q} = F^p ∩ σ(F^q)` and checks it against the declared
    /// numbers.
    pub fn realize_and_validate(
        field: &NumberField,
        dim: usize,
        declared: HodgeNumbers,
        steps: Vec<(i64, Vec<Vector>)>,
    ) -> Result<Self, HodgeError> {
        if !field.has_conjugation() {
            return Err(HodgeError::NoConjugation);
        }
        if declared.dim() != dim {
            return Err(HodgeError::DimensionMismatch {
                declared: declared.dim(),
                ambient: dim,
            });
        }
        let mut table = BTreeMap::new();
        for (p, basis) in steps {
            if basis.iter().any(|v| v.len() != dim) {
                return Err(HodgeError::VectorLength { p, expected: dim });
            }
            if table.insert(p, basis).is_some() {
                return Err(HodgeError::DuplicateStep(p));
            }
        }
        let mut h = RealizedHodgeStructure {
            field: field.clone(),
            dim,
            declared,
            steps: table,
            pieces: BTreeMap::new(),
        };
        h.check_filtration()?;
        h.decompose()?;
        Ok(h)
    }

    fn index_range(&self) -> (i64, i64) {
        let ps = self.declared.p_values();
        match (ps.first(), ps.last()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => (0, 0),
        }
    }

    /// Basis of `F^p` for any integer `p`.
    pub fn filtration(&self, p: i64) -> Vec<Vector> {
        let (lo, hi) = self.index_range();
        if let Some(b) = self.steps.get(&p) {
            return b.clone();
        }
        if p > hi {
            Vec::new()
        } else if p <= lo {
            self.standard_basis()
        } else {
            unreachable!("validated structures have every intermediate step")
        }
    }

    fn standard_basis(&self) -> Vec<Vector> {
        let zero = NumberFieldElement::zero_in(&self.field);
        let one = NumberFieldElement::one_in(&self.field);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| if i == j { one.clone() } else { zero.clone() }).collect())
            .collect()
    }

    fn check_filtration(&self) -> Result<(), HodgeError> {
        let (lo, hi) = self.index_range();
        for p in lo + 1..=hi {
            if !self.steps.contains_key(&p) {
                return Err(HodgeError::MissingStep(p));
            }
        }
        for (&p, basis) in &self.steps {
            let expected = self.declared.filtration_dim_at(p);
            let span = Span::new(&self.field, self.dim, basis);
            if !span.is_independent() {
                return Err(HodgeError::DependentStep(p));
            }
            if basis.len() != expected {
                return Err(HodgeError::StepDimension {
                    p,
                    expected,
                    found: basis.len(),
                });
            }
        }
        for p in lo..=hi {
            let outer = Span::new(&self.field, self.dim, &self.filtration(p));
            if !self.filtration(p + 1).iter().all(|v| outer.contains(v)) {
                return Err(HodgeError::NotNested { outer: p, inner: p + 1 });
            }
        }
        Ok(())
    }

    fn conjugate_all(vs: &[Vector]) -> Vec<Vector> {
        vs.iter().map(|v| v.iter().map(|x| x.conjugate()).collect()).collect()
    }

    fn decompose(&mut self) -> Result<(), HodgeError> {
        let n = self.declared.weight();
        let (lo, hi) = self.index_range();
        let mut all = Vec::new();
        for p in lo..=hi {
            let q = n - p;
            let piece = intersect(&self.field, self.dim, &self.filtration(p), &Self::conjugate_all(&self.filtration(q)));
            let expected = self.declared.get(p, q);
            if piece.len() != expected {
                return Err(HodgeError::NotAHodgeFiltration(format!(
                    "dim F^{p} ∩ conj(F^{q}) is {} but h^{{{p},{q}}} = {expected}",
                    piece.len()
                )));
            }
            all.extend(piece.iter().cloned());
            if !piece.is_empty() {
                self.pieces.insert((p, q), piece);
            }
        }
        let rank = Span::new(&self.field, self.dim, &all).rank();
        if rank != self.dim {
            return Err(HodgeError::NotAHodgeFiltration(format!(
                "the pieces H^{{p,q}} span only {rank} of {} dimensions",
                self.dim
            )));
        }
        Ok(())
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self) -> i64 {
        self.declared.weight()
    }

    pub fn declared_numbers(&self) -> &HodgeNumbers {
        &self.declared
    }

    /// Basis of `H^{p,q}`; empty when `h^{p,q} = 0`.
    pub fn piece(&self, p: i64, q: i64) -> &[Vector] {
        self.pieces.get(&(p, q)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn pieces(&self) -> &BTreeMap<(i64, i64), Vec<Vector>> {
        &self.pieces
    }
}

/// A `(−1)^n`-symmetric rational bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarizationForm {
    matrix: ExactMatrix<Rational>,
    weight: i64,
}

impl PolarizationForm {
    pub fn new(matrix: ExactMatrix<Rational>, weight: i64) -> Result<Self, HodgeError> {
        if !matrix.is_square() {
            return Err(HodgeError::FormShape);
        }
        let sign = if weight.rem_euclid(2) == 0 { 1 } else { -1 };
        if matrix.transpose() != matrix.scale(&Rational::from_integer(sign.into())) {
            return Err(HodgeError::FormSymmetry { weight });
        }
        Ok(PolarizationForm { matrix, weight })
    }

    pub fn matrix(&self) -> &ExactMatrix<Rational> {
        &self.matrix
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// `uᵀ S w` with `S` lifted into the number field.
    pub fn pair(&self, u: &[NumberFieldElement], w: &[NumberFieldElement]) -> NumberFieldElement {
        let field = u[0].field().clone();
        let mut acc = NumberFieldElement::zero_in(&field);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                let s = self.matrix.get(i, j);
                if num_traits::Zero::is_zero(s) || wj.is_zero() {
                    continue;
                }
                acc = acc.add(&ui.mul(wj).mul(&field.from_rational(s.clone())));
            }
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PolarizationVerdict {
    Valid,
    /// `S(H^{p,q}, H^{p',q'}) ≠ 0` although `(p', q') ≠ (q, p)`.
    MorphismFails { left: (i64, i64), right: (i64, i64) },
    /// The leading minor of order `order` of `i^{p−q} S(·, conj ·)` on
    /// `H^{p,q}` is not positive.
    PositivityFails { piece: (i64, i64), order: usize },
}

/// Checks the morphism property and positivity of the Weil-twisted
/// hermitian form on every `H^{p,q}`.
///
/// Positivity uses Sylvester's criterion on `M_ab = S(v_a, conj v_b)`; the
/// leading minors of `i^{p−q} M` are real and their signs are certified by
/// interval refinement.
pub fn polarization_check(h: &RealizedHodgeStructure, s: &PolarizationForm) -> Result<PolarizationVerdict, HodgeError> {
    if s.weight != h.weight() {
        return Err(HodgeError::WeightMismatch {
            form: s.weight,
            structure: h.weight(),
        });
    }
    if s.matrix.rows() != h.dim() {
        return Err(HodgeError::FormShape);
    }
    for (&(p, q), left) in &h.pieces {
        for (&(p2, q2), right) in &h.pieces {
            if (p2, q2) == (q, p) {
                continue;
            }
            let nonzero = left.iter().any(|u| right.iter().any(|w| !s.pair(u, w).is_zero()));
            if nonzero {
                return Ok(PolarizationVerdict::MorphismFails {
                    left: (p, q),
                    right: (p2, q2),
                });
            }
        }
    }
    let field = h.field();
    for (&(p, q), basis) in h.pieces.iter().rev() {
        let conj: Vec<Vector> = basis.iter().map(|v| v.iter().map(|x| x.conjugate()).collect()).collect();
        let m = basis.len();
        let rows: Vec<Vector> = (0..m).map(|a| (0..m).map(|b| s.pair(&basis[a], &conj[b])).collect()).collect();
        let gram = ExactMatrix::from_rows(field, m, &rows);
        for r in 1..=m {
            let idx: Vec<usize> = (0..r).collect();
            let det = gram.select(&idx, &idx).determinant();
            let k = ((p - q) * r as i64).rem_euclid(4) as u32;
            let sign = field.sign_of_rotated(&det, k).map_err(HodgeError::Field)?;
            if sign <= 0 {
                return Ok(PolarizationVerdict::PositivityFails { piece: (p, q), order: r });
            }
        }
    }
    Ok(PolarizationVerdict::Valid)
}
