//! The JSON input document and its conversion into library objects.

use serde::Deserialize;

use super::expr::parse_expr;
use super::CliError;
use crate::field::{parse_rational, FunctionField, IsolatingBox, NumberField, RatFunc, Rational, UPoly};
use crate::flag::FlagPoint;
use crate::grading::HodgeCocharacter;
use crate::hodge::{HodgeNumbers, PolarizationForm, RealizedHodgeStructure, Vector};
use crate::lie::{direct_sum, make_classical, ClassicalKind, LieError, MatLieAlgebra, QMatrix};
use crate::verdict::ConjectureSet;

/// An integer or a string holding a rational or an expression.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn rational(&self, at: &str) -> Result<Rational, CliError> {
        match self {
            Entry::Int(n) => Ok(Rational::from_integer((*n).into())),
            Entry::Text(s) => parse_rational(s).ok_or_else(|| CliError::Schema(format!("{at}: {s:?} is not a rational number"))),
        }
    }

    fn expression(&self, field: &FunctionField, at: &str) -> Result<RatFunc, CliError> {
        match self {
            Entry::Int(n) => Ok(field.rational(Rational::from_integer((*n).into()))),
            Entry::Text(s) => parse_expr(s, field).map_err(|e| CliError::Schema(format!("{at}: {e}"))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default)]
    pub description: Option<String>,
    pub group: GroupSpec,
    pub cocharacter: CocharacterSpec,
    pub hodge_numbers: HodgeNumbers,
    #[serde(default)]
    pub flag_point: Option<FlagSpec>,
    #[serde(default)]
    pub polarization: Option<PolarizationSpec>,
    pub conjectures: ConjectureSet,
    #[serde(default)]
    pub gand_group: Option<GroupSpec>,
    /// Replaces the computed transcendence degree in `screen`.
    #[serde(default)]
    pub trdeg: Option<usize>,
    /// Transcendence degree of a field of definition of the motive.
    #[serde(default)]
    pub motive_field_trdeg: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub kind: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub form: Option<Vec<Vec<Entry>>>,
    #[serde(default)]
    pub basis: Option<Vec<Vec<Vec<Entry>>>>,
    #[serde(default)]
    pub summands: Option<Vec<GroupSpec>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocharacterSpec {
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagSpec {
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub field: Option<FieldSpec>,
    pub steps: Vec<StepSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Explicit(ExplicitField),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitField {
    pub generator: String,
    /// Coefficients from the constant term up.
    pub minpoly: Vec<Entry>,
    pub embedding: EmbeddingSpec,
    #[serde(default)]
    pub conjugation: Option<Vec<Entry>>,
    #[serde(default)]
    pub sign_budget: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingSpec {
    pub re: [Entry; 2],
    pub im: [Entry; 2],
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepSpec {
    pub p: i64,
    pub basis: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizationSpec {
    pub matrix: Vec<Vec<Entry>>,
}

pub fn parse_document(name: &str, text: &str) -> Result<SpecDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(format!("{name}: {e}")))
}

fn lie_error(e: LieError) -> CliError {
    match e {
        LieError::Shape { .. } | LieError::FormShape { .. } | LieError::EmptyDimension | LieError::WeightLength { .. } => {
            CliError::Schema(e.to_string())
        }
        _ => CliError::Math(e.to_string()),
    }
}

fn rational_matrix(rows: &[Vec<Entry>], at: &str) -> Result<QMatrix, CliError> {
    let n = rows.len();
    let mut data = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Schema(format!("{at}: row {i} has {} entries, expected {n}", row.len())));
        }
        data.push(row.iter().map(|e| e.rational(at)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(QMatrix::from_rows(&(), n, &data))
}

impl GroupSpec {
    pub fn build(&self) -> Result<MatLieAlgebra, CliError> {
        self.build_at("group")
    }

    fn build_at(&self, at: &str) -> Result<MatLieAlgebra, CliError> {
        let unexpected = |field: &str| CliError::Schema(format!("{at}: field `{field}` is not allowed for kind {:?}", self.kind));
        match self.kind.as_str() {
            "custom" => {
                if self.n.is_some() {
                    return Err(unexpected("n"));
                }
                if self.form.is_some() {
                    return Err(unexpected("form"));
                }
                if self.summands.is_some() {
                    return Err(unexpected("summands"));
                }
                let basis = self.basis.as_ref().ok_or_else(|| CliError::Schema(format!("{at}: kind \"custom\" needs `basis`")))?;
                let first = basis.first().ok_or_else(|| CliError::Schema(format!("{at}: empty basis")))?;
                let n = first.len();
                let mats = basis
                    .iter()
                    .enumerate()
                    .map(|(i, m)| rational_matrix(m, &format!("{at}.basis[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                MatLieAlgebra::from_basis(n, mats, Some("custom".into())).map_err(lie_error)
            }
            "sum" => {
                if self.n.is_some() {
                    return Err(unexpected("n"));
                }
                if self.form.is_some() {
                    return Err(unexpected("form"));
                }
                if self.basis.is_some() {
                    return Err(unexpected("basis"));
                }
                let parts = self
                    .summands
                    .as_ref()
                    .filter(|s| !s.is_empty())
                    .ok_or_else(|| CliError::Schema(format!("{at}: kind \"sum\" needs non-empty `summands`")))?;
                let mut acc = parts[0].build_at(&format!("{at}.summands[0]"))?;
                for (i, s) in parts.iter().enumerate().skip(1) {
                    acc = direct_sum(&acc, &s.build_at(&format!("{at}.summands[{i}]"))?);
                }
                Ok(acc)
            }
            other => {
                let kind: ClassicalKind = other.parse().map_err(|_| {
                    CliError::Schema(format!(
                        "{at}: unknown group kind {other:?}; expected one of gl, sl, so, sp, gsp, go, diag_torus, custom, sum"
                    ))
                })?;
                if self.basis.is_some() {
                    return Err(unexpected("basis"));
                }
                if self.summands.is_some() {
                    return Err(unexpected("summands"));
                }
                let n = self.n.ok_or_else(|| CliError::Schema(format!("{at}: kind {other:?} needs `n`")))?;
                let form = match &self.form {
                    Some(rows) if kind.uses_form() => Some(rational_matrix(rows, &format!("{at}.form"))?),
                    Some(_) => return Err(unexpected("form")),
                    None => None,
                };
                make_classical(kind, form.as_ref(), n).map_err(lie_error)
            }
        }
    }
}

impl SpecDocument {
    pub fn cocharacter(&self, g: &MatLieAlgebra) -> Result<HodgeCocharacter, CliError> {
        let lambda = self.cocharacter.lambda.clone();
        if lambda.len() != g.ambient_dim() {
            return Err(CliError::Schema(format!(
                "cocharacter.lambda has length {}, the group acts on dimension {}",
                lambda.len(),
                g.ambient_dim()
            )));
        }
        if self.hodge_numbers.dim() != g.ambient_dim() {
            return Err(CliError::Schema(format!(
                "hodge_numbers have total dimension {}, the group acts on dimension {}",
                self.hodge_numbers.dim(),
                g.ambient_dim()
            )));
        }
        HodgeCocharacter::with_numbers(lambda, self.hodge_numbers.clone()).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn flag_point(&self, ambient: usize) -> Result<Option<FlagPoint>, CliError> {
        let Some(spec) = &self.flag_point else {
            return Ok(None);
        };
        let base = match &spec.field {
            Some(f) => f.build()?,
            None => NumberField::rationals(),
        };
        let field = FunctionField::new(base, spec.params.clone());
        let mut steps = Vec::with_capacity(spec.steps.len());
        for (si, step) in spec.steps.iter().enumerate() {
            let mut basis = Vec::with_capacity(step.basis.len());
            for (vi, v) in step.basis.iter().enumerate() {
                let at = format!("flag_point.steps[{si}].basis[{vi}]");
                basis.push(v.iter().map(|e| e.expression(&field, &at)).collect::<Result<Vec<_>, _>>()?);
            }
            steps.push((step.p, basis));
        }
        FlagPoint::new(&field, ambient, steps).map(Some).map_err(|e| CliError::Math(e.to_string()))
    }

    /// The flag as a concrete Hodge filtration; needs a parameter-free flag
    /// over a field with conjugation.
    pub fn realized(&self) -> Result<RealizedHodgeStructure, CliError> {
        let dim = self.hodge_numbers.dim();
        let flag = self
            .flag_point(dim)?
            .ok_or_else(|| CliError::Schema("this command needs a `flag_point`".into()))?;
        if !flag.params().is_empty() {
            return Err(CliError::Schema("a realized Hodge structure needs a flag_point without params".into()));
        }
        let field = flag.field().base().clone();
        let steps = flag
            .steps()
            .iter()
            .map(|(p, basis)| {
                let b: Vec<Vector> = basis
                    .iter()
                    .map(|v| v.iter().map(|x| x.constant_value().expect("parameter-free entries are constant")).collect())
                    .collect();
                (*p, b)
            })
            .collect();
        RealizedHodgeStructure::realize_and_validate(&field, dim, self.hodge_numbers.clone(), steps)
            .map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn polarization(&self) -> Result<Option<PolarizationForm>, CliError> {
        let Some(spec) = &self.polarization else {
            return Ok(None);
        };
        let m = rational_matrix(&spec.matrix, "polarization.matrix")?;
        PolarizationForm::new(m, self.hodge_numbers.weight())
            .map(Some)
            .map_err(|e| CliError::Schema(format!("polarization.matrix: {e}")))
    }
}

impl FieldSpec {
    fn build(&self) -> Result<NumberField, CliError> {
        match self {
            FieldSpec::Named(name) => match name.as_str() {
                "Q" | "rationals" => Ok(NumberField::rationals()),
                "Q(i)" | "gaussian" => Ok(NumberField::gaussian()),
                other => Err(CliError::Schema(format!("flag_point.field: unknown field name {other:?}"))),
            },
            FieldSpec::Explicit(f) => {
                let at = "flag_point.field";
                let poly = |v: &[Entry]| -> Result<UPoly, CliError> {
                    Ok(UPoly::new(v.iter().map(|e| e.rational(at)).collect::<Result<Vec<_>, _>>()?))
                };
                let minpoly = poly(&f.minpoly)?;
                let conj = f.conjugation.as_deref().map(poly).transpose()?;
                let corners = |c: &[Entry; 2]| -> Result<(Rational, Rational), CliError> { Ok((c[0].rational(at)?, c[1].rational(at)?)) };
                let embedding = IsolatingBox::new(corners(&f.embedding.re)?, corners(&f.embedding.im)?);
                let budget = f.sign_budget.unwrap_or(crate::field::DEFAULT_SIGN_BUDGET);
                NumberField::with_sign_budget(&f.generator, minpoly, embedding, conj, budget).map_err(|e| CliError::Math(e.to_string()))
            }
        }
    }
}
