//! Parametric points of flag varieties and the transcendence degree of
//! their field of definition.
//!
//! A flag is defined over exactly the field generated by its normalized chart
//! coordinates, so the transcendence degree over `Q` is the rank of the
//! Jacobian of those coordinates with respect to the parameters (the
//! parameters themselves are taken to be algebraically independent).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FunctionField, MPoly, NumberFieldElement, RatFunc, Rational};
use crate::grading::CocharGrading;
use crate::linalg::{ExactMatrix, Span};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlagError {
    #[error("a vector of F^{p} has length {got}, ambient dimension is {expected}")]
    VectorLength { p: i64, got: usize, expected: usize },
    #[error("F^{0} is empty")]
    EmptyStep(i64),
    #[error("F^{0} is given twice")]
    DuplicateStep(i64),
    #[error("the basis of F^{0} is linearly dependent")]
    DependentStep(i64),
    #[error("F^{inner} is not contained in F^{outer}")]
    NotNested { outer: i64, inner: i64 },
    #[error("F^{inner} and F^{outer} have the same dimension {dim}")]
    NotStrict { outer: i64, inner: i64, dim: usize },
    #[error("every evaluation point in {0} attempts hit a pole of the Jacobian")]
    DenominatorVanishes(u32),
}

/// A descending filtration with entries in `Q(θ)(t₁, …, t_k)`.
#[derive(Clone, Debug)]
pub struct FlagPoint {
    field: FunctionField,
    dim: usize,
    /// Sorted by decreasing `p`.
    steps: Vec<(i64, Vec<Vec<RatFunc>>)>,
}

impl FlagPoint {
    pub fn new(field: &FunctionField, dim: usize, mut steps: Vec<(i64, Vec<Vec<RatFunc>>)>) -> Result<Self, FlagError> {
        steps.sort_by(|a, b| b.0.cmp(&a.0));
        for w in steps.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(FlagError::DuplicateStep(w[0].0));
            }
        }
        let mut spans = Vec::with_capacity(steps.len());
        for (p, basis) in &steps {
            if basis.is_empty() {
                return Err(FlagError::EmptyStep(*p));
            }
            if let Some(v) = basis.iter().find(|v| v.len() != dim) {
                return Err(FlagError::VectorLength {
                    p: *p,
                    got: v.len(),
                    expected: dim,
                });
            }
            let span = Span::new(field, dim, basis);
            if !span.is_independent() {
                return Err(FlagError::DependentStep(*p));
            }
            spans.push(span);
        }
        for i in 1..steps.len() {
            let (inner, small) = (&steps[i - 1], &steps[i - 1].1);
            let outer = &steps[i];
            if small.len() >= outer.1.len() {
                return Err(FlagError::NotStrict {
                    outer: outer.0,
                    inner: inner.0,
                    dim: outer.1.len(),
                });
            }
            if !small.iter().all(|v| spans[i].contains(v)) {
                return Err(FlagError::NotNested {
                    outer: outer.0,
                    inner: inner.0,
                });
            }
        }
        Ok(FlagPoint {
            field: field.clone(),
            dim,
            steps,
        })
    }

    pub fn field(&self) -> &FunctionField {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[String] {
        self.field.params()
    }

    pub fn steps(&self) -> &[(i64, Vec<Vec<RatFunc>>)] {
        &self.steps
    }

    /// Affine chart coordinates of every step.
    ///
    /// Each basis is brought to reduced row echelon form; the pivot columns
    /// are the lexicographically first non-singular maximal minor, and the
    /// remaining entries are the chart coordinates. They do not depend on the
    /// chosen basis.
    pub fn normalize_chart(&self) -> Vec<RatFunc> {
        let mut out = Vec::new();
        for (_, basis) in &self.steps {
            let m = ExactMatrix::from_rows(&self.field, self.dim, basis);
            let (red, pivots) = m.rref();
            for i in 0..pivots.len() {
                for j in (0..self.dim).filter(|j| !pivots.contains(j)) {
                    out.push(red.get(i, j).clone());
                }
            }
        }
        out
    }

    pub fn trdeg(&self, opts: &TrdegOptions) -> Result<TrdegResult, FlagError> {
        trdeg_of_coordinates(&self.field, self.normalize_chart(), opts)
    }
}

/// Controls the randomized evaluation shortcut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrdegOptions {
    /// Enables evaluation at a random point drawn from this seed.
    pub seed: Option<u64>,
    pub max_attempts: u32,
    /// Parameter values are drawn from `[-height, height]`.
    pub height: i64,
}

impl Default for TrdegOptions {
    fn default() -> Self {
        TrdegOptions {
            seed: None,
            max_attempts: 8,
            height: 1 << 20,
        }
    }
}

impl TrdegOptions {
    pub fn seeded(seed: u64) -> Self {
        TrdegOptions {
            seed: Some(seed),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvaluationCertificate {
    pub seed: u64,
    pub attempt: u32,
    #[serde(serialize_with = "display_all")]
    pub point: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrdegResult {
    pub value: usize,
    #[serde(serialize_with = "display_all")]
    pub chart_coordinates: Vec<RatFunc>,
    pub jacobian_rank_certificate: Option<EvaluationCertificate>,
}

fn display_all<T: std::fmt::Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Transcendence degree over `Q` of the field generated by `coords` over
/// `Q(θ)`, as the rank of their Jacobian.
pub fn trdeg_of_coordinates(field: &FunctionField, coords: Vec<RatFunc>, opts: &TrdegOptions) -> Result<TrdegResult, FlagError> {
    let k = field.nvars();
    let moving: Vec<&RatFunc> = coords.iter().filter(|c| !c.is_constant()).collect();
    let ceiling = moving.len().min(k);
    if ceiling == 0 {
        return Ok(TrdegResult {
            value: 0,
            chart_coordinates: coords,
            jacobian_rank_certificate: None,
        });
    }
    let rows: Vec<Vec<RatFunc>> = moving.iter().map(|c| (0..k).map(|v| c.derivative(v)).collect()).collect();
    if let Some(seed) = opts.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = field.base();
        let mut evaluated = None;
        for attempt in 0..opts.max_attempts {
            let point: Vec<Rational> = (0..k)
                .map(|_| Rational::from_integer(rng.gen_range(-opts.height..=opts.height).into()))
                .collect();
            let at: Vec<NumberFieldElement> = point.iter().map(|x| base.from_rational(x.clone())).collect();
            let values: Option<Vec<Vec<NumberFieldElement>>> =
                rows.iter().map(|r| r.iter().map(|f| f.eval(&at)).collect()).collect();
            if let Some(values) = values {
                evaluated = Some((attempt, point, values));
                break;
            }
        }
        let Some((attempt, point, values)) = evaluated else {
            return Err(FlagError::DenominatorVanishes(opts.max_attempts));
        };
        // Specialization can only lower the rank, so reaching the ceiling is conclusive.
        if ExactMatrix::from_rows(base, k, &values).rank() == ceiling {
            return Ok(TrdegResult {
                value: ceiling,
                chart_coordinates: coords,
                jacobian_rank_certificate: Some(EvaluationCertificate { seed, attempt, point }),
            });
        }
    }
    let value = symbolic_rank(&rows);
    Ok(TrdegResult {
        value,
        chart_coordinates: coords,
        jacobian_rank_certificate: None,
    })
}

type Poly = MPoly<NumberFieldElement>;

/// Multiplies a row by the product of its distinct denominators.
fn clear_denominators(row: &[RatFunc]) -> Vec<Poly> {
    let mut dens: Vec<&Poly> = Vec::new();
    for f in row {
        if !f.denom().is_constant() && !dens.contains(&f.denom()) {
            dens.push(f.denom());
        }
    }
    row.iter()
        .map(|f| {
            dens.iter()
                .filter(|d| **d != f.denom())
                .fold(f.numer().clone(), |acc, d| acc.mul(d))
        })
        .collect()
}

/// Rank over the function field by fraction-free (Bareiss) elimination, so
/// that no gcds are taken.
fn symbolic_rank(rows: &[Vec<RatFunc>]) -> usize {
    let mut m: Vec<Vec<Poly>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev: Option<Poly> = None;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].num_terms())
        else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let t = m[r][c].mul(&m[rank][col]).sub(&m[r][col].mul(&m[rank][c]));
                m[r][c] = match &prev {
                    Some(p) => t.div_exact(p).expect("Bareiss step divides exactly"),
                    None => t,
                };
            }
            m[r][col] = Poly::zero(m[rank][col].ctx(), m[rank][col].nvars());
        }
        prev = Some(m[rank][col].clone());
        rank += 1;
    }
    rank
}

pub fn is_maximal_transcendence(t: &TrdegResult, gr: &CocharGrading) -> bool {
    t.value == gr.flag_dimension()
}
