//! Command-line front end.
//!
//! Exit codes: 0 consistent, 10 screened out (or a polarization rejected),
//! 2 malformed input, 3 mathematical error in otherwise well-formed input.

mod document;
mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::flag::{is_maximal_transcendence, TrdegOptions};
use crate::grading::{grade, CocharGrading, GradingError, HodgeCocharacter, InvariantReport};
use crate::hodge::{polarization_check, HodgeNumbers, PolarizationVerdict};
use crate::lie::{LieError, MatLieAlgebra};
use crate::verdict::{
    descent_bound, horizontal_chain, lower_bound_from_field_trdeg, maximal_transcendence, screen, shimura_necessity,
    two_sided_bounds, Verdict, VerdictKind, MOTIVATED,
};

pub use document::{parse_document, SpecDocument};
pub use expr::{parse_expr, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCREENED_OUT: i32 = 10;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Math(_) => EXIT_MATH,
        }
    }
}

impl From<GradingError> for CliError {
    fn from(e: GradingError) -> Self {
        match e {
            GradingError::Lie(LieError::WeightLength { .. }) | GradingError::MultisetMismatch { .. } => CliError::Schema(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hodgekit", version, about = "Exact invariants and conditional screening of pure Hodge structures")]
struct Cli {
    /// Emit machine-readable JSON with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random-evaluation shortcut of the Jacobian rank.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Adjoint grading, dim F, hcodim and Shimura type.
    Invariants { file: PathBuf },
    /// Invariants plus transcendence degree and the conditional verdicts.
    Screen { file: PathBuf },
    /// Transcendence degree of the flag point.
    Trdeg { file: PathBuf },
    /// Operations on Hodge numbers, and validation of realized structures.
    Hodge {
        op: HodgeOp,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Power for wedge/sym, twist amount for twist.
        #[arg(short = 'k', long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Validate the declared Lie algebras.
    LieCheck { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HodgeOp {
    Show,
    Dual,
    Tensor,
    Twist,
    Wedge,
    Sym,
    Filtration,
    Realize,
}

struct Outcome {
    json: Value,
    text: Vec<String>,
    exit: i32,
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("report serializes"))
            } else {
                o.text.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            o.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Invariants { file } => cmd_invariants(&load(file)?),
        Command::Screen { file } => cmd_screen(&load(file)?, cli.seed),
        Command::Trdeg { file } => cmd_trdeg(&load(file)?, cli.seed),
        Command::Hodge { op, files, k } => cmd_hodge(*op, files, *k),
        Command::LieCheck { file } => cmd_lie_check(&load(file)?),
    }
}

fn load(path: &Path) -> Result<SpecDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_document(&path.display().to_string(), &text)
}

struct Graded {
    g: MatLieAlgebra,
    mu: HodgeCocharacter,
    grading: CocharGrading,
    report: InvariantReport,
}

fn graded(doc: &SpecDocument) -> Result<Graded, CliError> {
    let g = doc.group.build()?;
    let mu = doc.cocharacter(&g)?;
    let grading = grade(&g, &mu)?;
    let report = InvariantReport::from_grading(&grading);
    Ok(Graded { g, mu, grading, report })
}

fn grading_warnings(r: &InvariantReport) -> Vec<String> {
    let mut w = Vec::new();
    if !r.symmetric_grading {
        w.push("adjoint grading is not symmetric under k -> -k; the algebra or the weights do not come from a Hodge structure".to_string());
    }
    w
}

fn levels_line(r: &InvariantReport) -> String {
    r.levels.iter().map(|(k, d)| format!("{k}:{d}")).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn invariant_lines(g: &MatLieAlgebra, mu: &HodgeCocharacter, r: &InvariantReport) -> Vec<String> {
    vec![
        format!("group          {} (dim {}, acting on dim {})", g.name().unwrap_or("custom"), g.dim(), g.ambient_dim()),
        format!("lambda         {:?}", mu.lambda()),
        format!("levels         {}", levels_line(r)),
        format!("dim g          {}", r.dim_g),
        format!("dim F          {}", r.flag_dim),
        format!("hcodim         {}", r.hcodim),
        format!("dim g^(-1,1)   {}", r.g_minus_one_dim),
        format!("shimura type   {}", yes_no(r.shimura_type)),
        format!("symmetric      {}", yes_no(r.symmetric_grading)),
    ]
}

fn push_warnings(text: &mut Vec<String>, warnings: &[String]) {
    text.extend(warnings.iter().map(|w| format!("warning: {w}")));
}

fn cmd_invariants(doc: &SpecDocument) -> Result<Outcome, CliError> {
    let gd = graded(doc)?;
    let warnings = grading_warnings(&gd.report);
    let mut text = invariant_lines(&gd.g, &gd.mu, &gd.report);
    push_warnings(&mut text, &warnings);
    Ok(Outcome {
        json: json!({
            "command": "invariants",
            "group": gd.g.name(),
            "ambient_dim": gd.g.ambient_dim(),
            "lambda": gd.mu.lambda(),
            "invariants": gd.report,
            "warnings": warnings,
        }),
        text,
        exit: EXIT_OK,
    })
}

fn contract_warning(params: &[String]) -> Option<String> {
    (!params.is_empty()).then(|| {
        format!(
            "parameters {} are assumed algebraically independent over the algebraic numbers",
            params.join(", ")
        )
    })
}

fn cmd_trdeg(doc: &SpecDocument, seed: Option<u64>) -> Result<Outcome, CliError> {
    let gd = graded(doc)?;
    let flag = doc
        .flag_point(gd.g.ambient_dim())?
        .ok_or_else(|| CliError::Schema("trdeg needs a `flag_point`".into()))?;
    let opts = seed.map(TrdegOptions::seeded).unwrap_or_default();
    let res = flag.trdeg(&opts).map_err(|e| CliError::Math(e.to_string()))?;
    let maximal = is_maximal_transcendence(&res, &gd.grading);
    let mut warnings: Vec<String> = contract_warning(flag.params()).into_iter().collect();
    if res.value > gd.report.flag_dim {
        warnings.push(format!(
            "trdeg {} exceeds dim F = {}; the flag point is not on the flag variety of the declared group",
            res.value, gd.report.flag_dim
        ));
    }
    let mut text = vec![
        format!("params         [{}]", flag.params().join(", ")),
        format!(
            "chart          [{}]",
            res.chart_coordinates.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        ),
        format!("trdeg          {}", res.value),
        format!("dim F          {}", gd.report.flag_dim),
        format!("maximal        {}", yes_no(maximal)),
    ];
    if let Some(c) = &res.jacobian_rank_certificate {
        text.push(format!(
            "certificate    seed {} attempt {} point [{}]",
            c.seed,
            c.attempt,
            c.point.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        ));
    }
    push_warnings(&mut text, &warnings);
    Ok(Outcome {
        json: json!({
            "command": "trdeg",
            "params": flag.params(),
            "seed": seed,
            "trdeg": res,
            "flag_dim": gd.report.flag_dim,
            "maximal_transcendence": maximal,
            "warnings": warnings,
        }),
        text,
        exit: EXIT_OK,
    })
}

fn kind_words(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::NotFromGeometry => "not from geometry",
        VerdictKind::Consistent => "consistent",
        VerdictKind::ShimuraViolation => "shimura violation",
        VerdictKind::MaximalTranscendence => "maximal transcendence",
        VerdictKind::Bound => "bound",
        VerdictKind::InequalityViolated => "inequality violated",
    }
}

fn cmd_screen(doc: &SpecDocument, seed: Option<u64>) -> Result<Outcome, CliError> {
    let gd = graded(doc)?;
    let r = &gd.report;
    let mut warnings = grading_warnings(r);
    let flag = doc.flag_point(gd.g.ambient_dim())?;
    let (trdeg, source, result) = match (doc.trdeg, &flag) {
        (Some(t), f) => {
            if f.is_some() {
                warnings.push("the declared trdeg overrides the flag point".into());
            }
            (t, "declared", None)
        }
        (None, Some(f)) => {
            let opts = seed.map(TrdegOptions::seeded).unwrap_or_default();
            let res = f.trdeg(&opts).map_err(|e| CliError::Math(e.to_string()))?;
            warnings.extend(contract_warning(f.params()));
            (res.value, "computed", Some(res))
        }
        (None, None) => return Err(CliError::Schema("screen needs a `flag_point` or a declared `trdeg`".into())),
    };
    let chain = horizontal_chain(&gd.grading).map_err(|e| CliError::Math(e.to_string()))?;
    let mut verdicts: Vec<Verdict> = vec![
        screen(trdeg, r, &doc.conjectures),
        shimura_necessity(trdeg, r, &doc.conjectures),
    ];
    verdicts.extend(maximal_transcendence(trdeg, r.flag_dim));
    verdicts.push(descent_bound(&gd.grading));
    let mut motivic = None;
    if let Some(spec) = &doc.gand_group {
        let big = spec.build()?;
        if big.ambient_dim() != gd.g.ambient_dim() {
            return Err(CliError::Schema("gand_group must act on the same space as group".into()));
        }
        if !gd.g.basis().iter().all(|b| big.contains(b)) {
            warnings.push("gand_group does not contain group".into());
        }
        let big_grading = grade(&big, &gd.mu)?;
        if let Some(k) = doc.motive_field_trdeg {
            verdicts.extend(two_sided_bounds(&gd.grading, &big_grading, k));
        }
        motivic = Some(InvariantReport::from_grading(&big_grading));
    } else if let Some(k) = doc.motive_field_trdeg {
        // Without a motivic group, dim F stands in for dim F^And.
        let mut v = lower_bound_from_field_trdeg(r.flag_dim, k);
        v.conditional_on.insert(0, MOTIVATED);
        v.narrative = format!(
            "trdeg H >= dim F - trdeg K = {} - {k}, so trdeg H >= {} (conditional on {})",
            r.flag_dim,
            v.value("value").unwrap_or(0),
            v.conditional_on.join(", ")
        );
        verdicts.push(v);
    }
    let exit = if verdicts.iter().any(|v| v.kind.is_rejection()) {
        EXIT_SCREENED_OUT
    } else {
        EXIT_OK
    };
    let mut text = vec![format!(
        "dim F = {}, hcodim H = {}, trdeg H = {} ({source})",
        r.flag_dim, r.hcodim, trdeg
    )];
    text.push(format!(
        "identity       dim F - dim g^(-1,1) = {} - {} = {} = hcodim H",
        chain.flag_dim, chain.descent, chain.hcodim
    ));
    for v in &verdicts {
        text.push(format!("{}: {}", kind_words(v.kind), v));
    }
    push_warnings(&mut text, &warnings);
    Ok(Outcome {
        json: json!({
            "command": "screen",
            "conjectures": doc.conjectures,
            "invariants": r,
            "motivic_invariants": motivic,
            "trdeg": { "value": trdeg, "source": source, "result": result, "seed": seed },
            "chain": chain,
            "verdicts": verdicts,
            "warnings": warnings,
            "exit_code": exit,
        }),
        text,
        exit,
    })
}

fn cmd_hodge(op: HodgeOp, files: &[PathBuf], k: Option<i64>) -> Result<Outcome, CliError> {
    let docs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
    let numbers: Vec<HodgeNumbers> = docs.iter().map(|d| d.hodge_numbers.clone()).collect();
    let need_k = |name: &str| k.ok_or_else(|| CliError::Schema(format!("hodge {name} needs -k")));
    let need_power = |name: &str| -> Result<usize, CliError> {
        let v = need_k(name)?;
        usize::try_from(v).map_err(|_| CliError::Schema(format!("hodge {name}: -k must be non-negative")))
    };
    let op_name = format!("{op:?}").to_lowercase();
    let results: Vec<HodgeNumbers> = match op {
        HodgeOp::Show => numbers,
        HodgeOp::Dual => numbers.iter().map(HodgeNumbers::dual).collect(),
        HodgeOp::Tensor => vec![numbers.iter().skip(1).fold(numbers[0].clone(), |acc, h| acc.tensor(h))],
        HodgeOp::Twist => {
            let m = need_k("twist")?;
            numbers.iter().map(|h| h.tate_twist(m)).collect()
        }
        HodgeOp::Wedge => {
            let p = need_power("wedge")?;
            numbers.iter().map(|h| h.wedge(p)).collect()
        }
        HodgeOp::Sym => {
            let p = need_power("sym")?;
            numbers.iter().map(|h| h.sym(p)).collect()
        }
        HodgeOp::Filtration => {
            let steps: Vec<Vec<(i64, usize)>> = numbers.iter().map(HodgeNumbers::filtration_steps).collect();
            let text = steps
                .iter()
                .map(|s| s.iter().map(|(p, d)| format!("F^{p}:{d}")).collect::<Vec<_>>().join(" "))
                .collect();
            return Ok(Outcome {
                json: json!({ "command": "hodge", "op": op_name, "results": steps }),
                text,
                exit: EXIT_OK,
            });
        }
        HodgeOp::Realize => {
            if docs.len() != 1 {
                return Err(CliError::Schema("hodge realize takes exactly one file".into()));
            }
            return cmd_realize(&docs[0]);
        }
    };
    Ok(Outcome {
        text: results.iter().map(|h| h.to_string()).collect(),
        json: json!({ "command": "hodge", "op": op_name, "results": results }),
        exit: EXIT_OK,
    })
}

fn cmd_realize(doc: &SpecDocument) -> Result<Outcome, CliError> {
    let h = doc.realized()?;
    let mut text = vec![format!("realized       {} over Q({})", h.declared_numbers(), h.field().generator_name())];
    let mut pieces = serde_json::Map::new();
    for (&(p, q), basis) in h.pieces().iter().rev() {
        let rendered: Vec<Vec<String>> = basis.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
        text.push(format!(
            "H^({p},{q})        {}",
            rendered.iter().map(|v| format!("({})", v.join(", "))).collect::<Vec<_>>().join(" ")
        ));
        pieces.insert(format!("{p},{q}"), json!(rendered));
    }
    let mut exit = EXIT_OK;
    let mut status = Value::Null;
    if let Some(s) = doc.polarization()? {
        let verdict = polarization_check(&h, &s).map_err(|e| CliError::Math(e.to_string()))?;
        let line = match &verdict {
            PolarizationVerdict::Valid => "valid".to_string(),
            PolarizationVerdict::MorphismFails { left, right } => {
                format!("morphism fails: S(H^({},{}), H^({},{})) != 0", left.0, left.1, right.0, right.1)
            }
            PolarizationVerdict::PositivityFails { piece, order } => {
                format!("positivity fails on H^({},{}) at leading minor {order}", piece.0, piece.1)
            }
        };
        if verdict != PolarizationVerdict::Valid {
            exit = EXIT_SCREENED_OUT;
        }
        text.push(format!("polarization   {line}"));
        status = serde_json::to_value(&verdict).expect("verdict serializes");
    }
    Ok(Outcome {
        json: json!({
            "command": "hodge",
            "op": "realize",
            "numbers": h.declared_numbers(),
            "pieces": pieces,
            "polarization": status,
        }),
        text,
        exit,
    })
}

fn cmd_lie_check(doc: &SpecDocument) -> Result<Outcome, CliError> {
    let mut algebras = vec![("group", doc.group.build()?)];
    if let Some(spec) = &doc.gand_group {
        algebras.push(("gand_group", spec.build()?));
    }
    let mut warnings = Vec::new();
    if let [(_, g), (_, big)] = algebras.as_slice() {
        if g.ambient_dim() != big.ambient_dim() || !g.basis().iter().all(|b| big.contains(b)) {
            warnings.push("gand_group does not contain group".to_string());
        }
    }
    let mut text = Vec::new();
    let mut entries = Vec::new();
    for (role, g) in &algebras {
        text.push(format!(
            "{role:<14} {} (dim {}, acting on dim {}): independent, closed under bracket",
            g.name().unwrap_or("custom"),
            g.dim(),
            g.ambient_dim()
        ));
        entries.push(json!({
            "role": role,
            "name": g.name(),
            "dim": g.dim(),
            "ambient_dim": g.ambient_dim(),
            "closed": true,
        }));
    }
    push_warnings(&mut text, &warnings);
    Ok(Outcome {
        json: json!({ "command": "lie-check", "algebras": entries, "warnings": warnings }),
        text,
        exit: EXIT_OK,
    })
}
