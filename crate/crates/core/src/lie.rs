//! Rational matrix Lie algebras `g ⊂ gl_N(Q)`.
//!
//! Algebras are stored concretely as a basis of `N × N` matrices. The
//! classical families are produced by solving the defining linear equations
//! as a kernel problem, and every algebra (classical or user supplied) is
//! checked for linear independence and closure under the bracket.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Rational, Scalar};
use crate::linalg::{ExactMatrix, Span};

pub type QMatrix = ExactMatrix<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("basis matrix {index} is {rows}x{cols}, expected {n}x{n}")]
    Shape { index: usize, rows: usize, cols: usize, n: usize },
    #[error("basis is linearly dependent (rank {rank} < {len})")]
    DependentBasis { rank: usize, len: usize },
    #[error("bracket of basis elements {i} and {j} leaves the span of the basis")]
    NotClosed { i: usize, j: usize },
    #[error("form must be {expected}")]
    FormSymmetry { expected: &'static str },
    #[error("form is singular")]
    SingularForm,
    #[error("form has shape {rows}x{cols}, expected {n}x{n}")]
    FormShape { rows: usize, cols: usize, n: usize },
    #[error("symplectic algebras need an even dimension, got {0}")]
    OddDimension(usize),
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("weight vector has length {got}, ambient dimension is {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("diag(λ) does not normalize the algebra: [diag(λ), b{basis_index}] leaves the algebra")]
    Normalization { basis_index: usize },
}

/// Classical constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalKind {
    Gl,
    Sl,
    So,
    Sp,
    Gsp,
    Go,
    DiagTorus,
}

impl ClassicalKind {
    pub const ALL: [ClassicalKind; 7] = [
        ClassicalKind::Gl,
        ClassicalKind::Sl,
        ClassicalKind::So,
        ClassicalKind::Sp,
        ClassicalKind::Gsp,
        ClassicalKind::Go,
        ClassicalKind::DiagTorus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalKind::Gl => "gl",
            ClassicalKind::Sl => "sl",
            ClassicalKind::So => "so",
            ClassicalKind::Sp => "sp",
            ClassicalKind::Gsp => "gsp",
            ClassicalKind::Go => "go",
            ClassicalKind::DiagTorus => "diag_torus",
        }
    }

    pub fn uses_form(self) -> bool {
        matches!(self, ClassicalKind::So | ClassicalKind::Sp | ClassicalKind::Gsp | ClassicalKind::Go)
    }

    pub fn symplectic(self) -> bool {
        matches!(self, ClassicalKind::Sp | ClassicalKind::Gsp)
    }
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassicalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown algebra kind `{s}`"))
    }
}

/// Antidiagonal form: all `+1` for orthogonal kinds, `+1` above and `−1`
/// below the anti-diagonal midpoint for symplectic ones.
pub fn default_form(kind: ClassicalKind, n: usize) -> QMatrix {
    let mut j = QMatrix::zeros(&(), n, n);
    for i in 0..n {
        let v = if kind.symplectic() && i >= n / 2 { -Rational::one() } else { Rational::one() };
        j.set(i, n - 1 - i, v);
    }
    j
}

pub fn matrix_unit(n: usize, r: usize, s: usize) -> QMatrix {
    let mut m = QMatrix::zeros(&(), n, n);
    m.set(r, s, Rational::one());
    m
}

pub fn bracket(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.mul(b).sub(&b.mul(a))
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// A Lie subalgebra of `gl_N(Q)` given by a basis.
#[derive(Clone, Debug)]
pub struct MatLieAlgebra {
    ambient_dim: usize,
    basis: Vec<QMatrix>,
    name: Option<String>,
    span: Span<Rational>,
}

impl MatLieAlgebra {
    /// Validates independence and bracket closure.
    pub fn from_basis(ambient_dim: usize, basis: Vec<QMatrix>, name: Option<String>) -> Result<Self, LieError> {
        if ambient_dim == 0 {
            return Err(LieError::EmptyDimension);
        }
        for (index, b) in basis.iter().enumerate() {
            if b.rows() != ambient_dim || b.cols() != ambient_dim {
                return Err(LieError::Shape {
                    index,
                    rows: b.rows(),
                    cols: b.cols(),
                    n: ambient_dim,
                });
            }
        }
        let flat: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
        let span = Span::new(&(), ambient_dim * ambient_dim, &flat);
        if !span.is_independent() {
            return Err(LieError::DependentBasis {
                rank: span.rank(),
                len: basis.len(),
            });
        }
        let g = MatLieAlgebra {
            ambient_dim,
            basis,
            name,
            span,
        };
        g.check_closure()?;
        Ok(g)
    }

    fn check_closure(&self) -> Result<(), LieError> {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let c = bracket(&self.basis[i], &self.basis[j]);
                if !self.span.contains(&flatten(&c)) {
                    return Err(LieError::NotClosed { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        m.rows() == self.ambient_dim && m.cols() == self.ambient_dim && self.span.contains(&flatten(m))
    }

    /// Coordinates of `m` in the basis, if `m ∈ g`.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        self.span.coordinates(&flatten(m))
    }

    pub fn element(&self, coords: &[Rational]) -> QMatrix {
        assert_eq!(coords.len(), self.dim());
        let n = self.ambient_dim;
        coords
            .iter()
            .zip(&self.basis)
            .fold(QMatrix::zeros(&(), n, n), |acc, (c, b)| acc.add(&b.scale(c)))
    }

    /// `ad(x)` in the basis, for `x` normalizing `g`.
    pub fn adjoint(&self, x: &QMatrix) -> Result<QMatrix, LieError> {
        let d = self.dim();
        let mut ad = QMatrix::zeros(&(), d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let coords = self
                .coordinates(&bracket(x, b))
                .ok_or(LieError::Normalization { basis_index: j })?;
            for (i, c) in coords.into_iter().enumerate() {
                ad.set(i, j, c);
            }
        }
        Ok(ad)
    }
}

/// Builds one of the classical algebras.
///
/// For `so`, `sp`, `go` and `gsp` the algebra is `{X : Xᵀ·J + J·X = 0}`
/// (plus scalars for the similitude kinds), with `J` either supplied or the
/// antidiagonal default.
pub fn make_classical(kind: ClassicalKind, form: Option<&QMatrix>, n: usize) -> Result<MatLieAlgebra, LieError> {
    if n == 0 {
        return Err(LieError::EmptyDimension);
    }
    let units = || (0..n).flat_map(move |r| (0..n).map(move |s| matrix_unit(n, r, s)));
    let basis: Vec<QMatrix> = match kind {
        ClassicalKind::Gl => units().collect(),
        ClassicalKind::DiagTorus => (0..n).map(|i| matrix_unit(n, i, i)).collect(),
        ClassicalKind::Sl => {
            let mut trace = QMatrix::zeros(&(), 1, n * n);
            for i in 0..n {
                trace.set(0, i * n + i, Rational::one());
            }
            unflatten_all(n, trace.kernel_basis())
        }
        ClassicalKind::So | ClassicalKind::Sp | ClassicalKind::Go | ClassicalKind::Gsp => {
            if kind.symplectic() && n % 2 == 1 {
                return Err(LieError::OddDimension(n));
            }
            let j = match form {
                Some(f) => f.clone(),
                None => default_form(kind, n),
            };
            check_form(kind, &j, n)?;
            let mut b = unflatten_all(n, form_equations(&j, n).kernel_basis());
            if matches!(kind, ClassicalKind::Go | ClassicalKind::Gsp) {
                b.push(QMatrix::identity(&(), n));
            }
            b
        }
    };
    MatLieAlgebra::from_basis(n, basis, Some(format!("{kind}{n}")))
}

fn check_form(kind: ClassicalKind, j: &QMatrix, n: usize) -> Result<(), LieError> {
    if j.rows() != n || j.cols() != n {
        return Err(LieError::FormShape {
            rows: j.rows(),
            cols: j.cols(),
            n,
        });
    }
    let jt = j.transpose();
    if kind.symplectic() {
        if jt != j.scale(&-Rational::one()) {
            return Err(LieError::FormSymmetry { expected: "antisymmetric" });
        }
    } else if jt != *j {
        return Err(LieError::FormSymmetry { expected: "symmetric" });
    }
    if j.determinant().is_zero() {
        return Err(LieError::SingularForm);
    }
    Ok(())
}

/// Linear system in the `n²` entries of `X` expressing `Xᵀ·J + J·X = 0`.
fn form_equations(j: &QMatrix, n: usize) -> QMatrix {
    let mut eq = QMatrix::zeros(&(), n * n, n * n);
    for r in 0..n {
        for c in 0..n {
            let row = r * n + c;
            for a in 0..n {
                // (XᵀJ)_{rc} = Σ_a X_{ar} J_{ac}
                let v = eq.get(row, a * n + r).add(j.get(a, c));
                eq.set(row, a * n + r, v);
                // (JX)_{rc} = Σ_a J_{ra} X_{ac}
                let v = eq.get(row, a * n + c).add(j.get(r, a));
                eq.set(row, a * n + c, v);
            }
        }
    }
    eq
}

fn unflatten_all(n: usize, vecs: Vec<Vec<Rational>>) -> Vec<QMatrix> {
    vecs.into_iter().map(|v| QMatrix::new(&(), n, n, v)).collect()
}

/// Block-diagonal embedding `a ⊕ b ⊂ gl_{N_a + N_b}`.
pub fn direct_sum(a: &MatLieAlgebra, b: &MatLieAlgebra) -> MatLieAlgebra {
    let (na, nb) = (a.ambient_dim, b.ambient_dim);
    let n = na + nb;
    let embed = |m: &QMatrix, offset: usize| {
        let mut out = QMatrix::zeros(&(), n, n);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(offset + i, offset + j, m.get(i, j).clone());
            }
        }
        out
    };
    let mut basis: Vec<QMatrix> = a.basis.iter().map(|m| embed(m, 0)).collect();
    basis.extend(b.basis.iter().map(|m| embed(m, na)));
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}+{y}")),
        _ => None,
    };
    MatLieAlgebra::from_basis(n, basis, name).expect("direct sum of valid algebras is valid")
}

/// `ad(diag(λ))` expressed in the basis of an algebra it normalizes.
#[derive(Clone, Debug)]
pub struct AdjointOperator<'a> {
    algebra: &'a MatLieAlgebra,
    lambda: Vec<i64>,
    matrix: QMatrix,
}

impl<'a> AdjointOperator<'a> {
    pub fn algebra(&self) -> &'a MatLieAlgebra {
        self.algebra
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }
}

pub fn diagonal(lambda: &[i64]) -> QMatrix {
    let n = lambda.len();
    let mut d = QMatrix::zeros(&(), n, n);
    for (i, &l) in lambda.iter().enumerate() {
        d.set(i, i, Rational::from_integer(l.into()));
    }
    d
}

/// `ad(diag(λ))` on `g`, failing with [`LieError::Normalization`] when the
/// bracket with some basis element leaves `g`.
pub fn adjoint_of_diagonal<'a>(g: &'a MatLieAlgebra, lambda: &[i64]) -> Result<AdjointOperator<'a>, LieError> {
    let n = g.ambient_dim;
    if lambda.len() != n {
        return Err(LieError::WeightLength {
            got: lambda.len(),
            expected: n,
        });
    }
    let d = g.dim();
    let mut ad = QMatrix::zeros(&(), d, d);
    for (j, b) in g.basis.iter().enumerate() {
        // [diag(λ), b]_{rs} = (λ_r − λ_s)·b_{rs}
        let mut c = QMatrix::zeros(&(), n, n);
        for r in 0..n {
            for s in 0..n {
                let e = b.get(r, s);
                if !e.is_zero_el() && lambda[r] != lambda[s] {
                    c.set(r, s, e * Rational::from_integer((lambda[r] - lambda[s]).into()));
                }
            }
        }
        let coords = g.coordinates(&c).ok_or(LieError::Normalization { basis_index: j })?;
        for (i, v) in coords.into_iter().enumerate() {
            ad.set(i, j, v);
        }
    }
    Ok(AdjointOperator {
        algebra: g,
        lambda: lambda.to_vec(),
        matrix: ad,
    })
}
