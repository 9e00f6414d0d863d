//! Conditional screening verdicts.
//!
//! Every conclusion drawn here depends on open conjectures. Each is passed in
//! as an explicit toggle and every verdict lists the labels it rests on.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::{CocharGrading, InvariantReport};

pub const MOTIVATED: &str = "hodge-cycles-motivated";
pub const PERIOD: &str = "grothendieck-period-conjecture";
pub const GENERALIZED_PERIOD: &str = "generalized-period-conjecture";

/// Which conjectures the caller is willing to assume. Nothing is assumed by
/// default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConjectureSet {
    /// Hodge cycles on motives are motivated.
    pub motivated: bool,
    /// Grothendieck's period conjecture.
    pub gpc: bool,
    /// The generalized period conjecture for motives over arbitrary fields.
    pub ggpc: bool,
}

impl ConjectureSet {
    pub fn all() -> Self {
        ConjectureSet {
            motivated: true,
            gpc: true,
            ggpc: true,
        }
    }

    /// Labels among `needed` that are not switched on.
    fn missing(&self, needed: &[&'static str]) -> Vec<&'static str> {
        needed
            .iter()
            .copied()
            .filter(|&l| match l {
                MOTIVATED => !self.motivated,
                PERIOD => !self.gpc,
                GENERALIZED_PERIOD => !self.ggpc,
                _ => true,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    NotFromGeometry,
    Consistent,
    ShimuraViolation,
    MaximalTranscendence,
    Bound,
    /// The inequality fails but the conjectures needed to conclude are off.
    InequalityViolated,
}

impl VerdictKind {
    /// The input has been screened out.
    pub fn is_rejection(self) -> bool {
        matches!(self, VerdictKind::NotFromGeometry | VerdictKind::ShimuraViolation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub rule: &'static str,
    pub payload: BTreeMap<&'static str, i64>,
    pub conditional_on: Vec<&'static str>,
    pub narrative: String,
}

impl Verdict {
    fn new(kind: VerdictKind, rule: &'static str, payload: &[(&'static str, usize)], conditional_on: &[&'static str], narrative: String) -> Self {
        let conditional_on = conditional_on.to_vec();
        let narrative = if conditional_on.is_empty() {
            narrative
        } else {
            format!("{narrative} (conditional on {})", conditional_on.join(", "))
        };
        Verdict {
            kind,
            rule,
            payload: payload.iter().map(|&(k, v)| (k, v as i64)).collect(),
            conditional_on,
            narrative,
        }
    }

    pub fn value(&self, key: &str) -> Option<i64> {
        self.payload.get(key).copied()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.narrative)
    }
}

/// `trdeg H ≥ hcodim H` for geometric `H`.
pub fn screen(trdeg: usize, report: &InvariantReport, conj: &ConjectureSet) -> Verdict {
    let needed = [MOTIVATED, GENERALIZED_PERIOD];
    let payload = [("trdeg", trdeg), ("hcodim", report.hcodim)];
    let hcodim = report.hcodim;
    if trdeg >= hcodim {
        return Verdict::new(
            VerdictKind::Consistent,
            "transcendence-vs-hcodim",
            &payload,
            &needed,
            format!("trdeg H = {trdeg} >= hcodim H = {hcodim}: consistent with a geometric origin"),
        );
    }
    let missing = conj.missing(&needed);
    if missing.is_empty() {
        Verdict::new(
            VerdictKind::NotFromGeometry,
            "transcendence-vs-hcodim",
            &payload,
            &needed,
            format!("trdeg H = {trdeg} < hcodim H = {hcodim}: H does not come from geometry"),
        )
    } else {
        Verdict::new(
            VerdictKind::InequalityViolated,
            "transcendence-vs-hcodim",
            &payload,
            &needed,
            format!(
                "trdeg H = {trdeg} < hcodim H = {hcodim}: inequality violated; no conclusion drawn while {} is not assumed",
                missing.join(", ")
            ),
        )
    }
}

/// A Hodge filtration defined over the algebraic numbers forces Shimura type.
pub fn shimura_necessity(trdeg: usize, report: &InvariantReport, conj: &ConjectureSet) -> Verdict {
    let needed = [MOTIVATED, GENERALIZED_PERIOD];
    let payload = [("trdeg", trdeg), ("shimura_type", report.shimura_type as usize)];
    if trdeg > 0 {
        return Verdict::new(
            VerdictKind::Consistent,
            "algebraic-filtration-shimura",
            &payload,
            &needed,
            format!("trdeg H = {trdeg} > 0: the filtration is not algebraic, no Shimura constraint"),
        );
    }
    if report.shimura_type {
        return Verdict::new(
            VerdictKind::Consistent,
            "algebraic-filtration-shimura",
            &payload,
            &needed,
            "trdeg H = 0 and H is of Shimura type: consistent with a geometric origin".to_string(),
        );
    }
    let missing = conj.missing(&needed);
    if missing.is_empty() {
        Verdict::new(
            VerdictKind::ShimuraViolation,
            "algebraic-filtration-shimura",
            &payload,
            &needed,
            format!(
                "trdeg H = 0 but H is not of Shimura type (hcodim H = {}): H does not come from geometry",
                report.hcodim
            ),
        )
    } else {
        Verdict::new(
            VerdictKind::InequalityViolated,
            "algebraic-filtration-shimura",
            &payload,
            &needed,
            format!(
                "trdeg H = 0 but H is not of Shimura type; no conclusion drawn while {} is not assumed",
                missing.join(", ")
            ),
        )
    }
}

/// `trdeg H ≥ dim 𝓕 − trdeg_Q K`, where `K` is a field of definition of the
/// motive and `flag_dim` is taken for the motivic group.
pub fn lower_bound_from_field_trdeg(flag_dim: usize, trdeg_k: usize) -> Verdict {
    let value = flag_dim.saturating_sub(trdeg_k);
    Verdict::new(
        VerdictKind::Bound,
        "field-of-definition-lower-bound",
        &[("value", value), ("flag_dim", flag_dim), ("trdeg_k", trdeg_k)],
        &[GENERALIZED_PERIOD],
        format!("trdeg H >= dim F - trdeg K = {flag_dim} - {trdeg_k}, so trdeg H >= {value}"),
    )
}

/// `trdeg_Q K ≤ dim F^{−1}g − dim F^0 g = dim g^{−1,1}` for a field of
/// definition `K` of a geometric `H`.
pub fn descent_bound(gr: &CocharGrading) -> Verdict {
    let value = gr.level(-1);
    Verdict::new(
        VerdictKind::Bound,
        "descent-upper-bound",
        &[("value", value)],
        &[MOTIVATED],
        format!("trdeg K <= dim F^-1 g - dim F^0 g = {value}"),
    )
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("flag_dim {flag_dim} - descent bound {descent} != hcodim {hcodim}")]
pub struct IdentityViolation {
    pub flag_dim: usize,
    pub descent: usize,
    pub hcodim: usize,
}

/// The unconditional identity `dim 𝓕 − dim g^{−1,1} = hcodim` that turns the
/// two bounds above into `trdeg H ≥ hcodim H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainIdentity {
    pub flag_dim: usize,
    pub descent: usize,
    pub hcodim: usize,
}

pub fn horizontal_chain(gr: &CocharGrading) -> Result<ChainIdentity, IdentityViolation> {
    let flag_dim = gr.flag_dimension();
    let descent = gr.level(-1);
    let hcodim = gr.hcodim();
    if flag_dim.checked_sub(descent) != Some(hcodim) {
        return Err(IdentityViolation { flag_dim, descent, hcodim });
    }
    Ok(ChainIdentity { flag_dim, descent, hcodim })
}

/// Unconditional: `trdeg H = dim 𝓕`.
pub fn maximal_transcendence(trdeg: usize, flag_dim: usize) -> Option<Verdict> {
    (trdeg == flag_dim).then(|| {
        Verdict::new(
            VerdictKind::MaximalTranscendence,
            "maximal-transcendence",
            &[("trdeg", trdeg), ("flag_dim", flag_dim)],
            &[],
            format!("trdeg H = dim F = {flag_dim}: H is of maximal transcendence degree"),
        )
    })
}

/// Bounds computed once for the Mumford-Tate group and once for a declared
/// larger motivic group. The two coincide when the motivated-cycles
/// conjecture holds, so the first side depends on it and the second does not.
pub fn two_sided_bounds(g: &CocharGrading, g_motivic: &CocharGrading, trdeg_k: usize) -> [Verdict; 2] {
    let mut g_side = lower_bound_from_field_trdeg(g.flag_dimension(), trdeg_k);
    g_side.conditional_on.insert(0, MOTIVATED);
    g_side.rule = "field-of-definition-lower-bound/mumford-tate";
    g_side.narrative = format!(
        "trdeg H >= dim F - trdeg K = {} - {trdeg_k}, so trdeg H >= {} (conditional on {})",
        g.flag_dimension(),
        g_side.value("value").unwrap_or(0),
        g_side.conditional_on.join(", ")
    );
    let mut and_side = lower_bound_from_field_trdeg(g_motivic.flag_dimension(), trdeg_k);
    and_side.rule = "field-of-definition-lower-bound/motivic";
    [g_side, and_side]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(flag_dim: usize, hcodim: usize, shimura: bool) -> InvariantReport {
        InvariantReport {
            dim_g: 11,
            flag_dim,
            hcodim,
            g_minus_one_dim: flag_dim - hcodim,
            shimura_type: shimura,
            symmetric_grading: true,
            levels: BTreeMap::new(),
        }
    }

    #[test]
    fn screening() {
        let cy = report(4, 2, false);
        let v = screen(0, &cy, &ConjectureSet::all());
        assert_eq!(v.kind, VerdictKind::NotFromGeometry);
        assert_eq!(v.conditional_on, vec![MOTIVATED, GENERALIZED_PERIOD]);
        assert!(v.narrative.contains("conditional on"));
        assert_eq!(screen(2, &cy, &ConjectureSet::all()).kind, VerdictKind::Consistent);
        assert_eq!(screen(0, &report(0, 0, true), &ConjectureSet::all()).kind, VerdictKind::Consistent);
        let off = ConjectureSet {
            ggpc: false,
            ..ConjectureSet::all()
        };
        let v = screen(0, &cy, &off);
        assert_eq!(v.kind, VerdictKind::InequalityViolated);
        assert!(!v.narrative.contains("not come from geometry"));
    }

    #[test]
    fn shimura() {
        let all = ConjectureSet::all();
        assert_eq!(shimura_necessity(0, &report(4, 2, false), &all).kind, VerdictKind::ShimuraViolation);
        assert_eq!(shimura_necessity(0, &report(3, 0, true), &all).kind, VerdictKind::Consistent);
        assert_eq!(shimura_necessity(3, &report(4, 2, false), &all).kind, VerdictKind::Consistent);
    }

    #[test]
    fn bounds() {
        assert_eq!(lower_bound_from_field_trdeg(4, 1).value("value"), Some(3));
        assert_eq!(lower_bound_from_field_trdeg(4, 0).value("value"), Some(4));
        assert_eq!(lower_bound_from_field_trdeg(0, 5).value("value"), Some(0));
        let cy = CocharGrading::from_levels(11, [(-3, 1), (-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1), (3, 1)]);
        assert_eq!(descent_bound(&cy).value("value"), Some(2));
        assert_eq!(
            horizontal_chain(&cy),
            Ok(ChainIdentity {
                flag_dim: 4,
                descent: 2,
                hcodim: 2
            })
        );
        let siegel = CocharGrading::from_levels(11, [(-1, 3), (0, 5), (1, 3)]);
        assert_eq!(descent_bound(&siegel).value("value"), Some(3));
        assert_eq!(horizontal_chain(&siegel).unwrap().hcodim, 0);
        let torus = CocharGrading::from_levels(2, [(0, 2)]);
        assert_eq!(descent_bound(&torus).value("value"), Some(0));
        assert_eq!(horizontal_chain(&torus).unwrap().flag_dim, 0);
    }

    #[test]
    fn two_sides_differ_in_assumptions() {
        let g = CocharGrading::from_levels(3, [(-1, 1), (0, 1), (1, 1)]);
        let big = CocharGrading::from_levels(11, [(-3, 1), (-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1), (3, 1)]);
        let [a, b] = two_sided_bounds(&g, &big, 1);
        assert_eq!(a.value("value"), Some(0));
        assert_eq!(b.value("value"), Some(3));
        assert!(a.conditional_on.contains(&MOTIVATED));
        assert!(!b.conditional_on.contains(&MOTIVATED));
    }
}
