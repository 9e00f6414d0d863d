use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use super::interval::{ComplexInterval, RealInterval};
use super::upoly::UPoly;
use super::{Rational, Scalar};

/// Default number of bisection levels spent on deciding a sign.
pub const DEFAULT_SIGN_BUDGET: u32 = 256;

/// Upper bound on divisor combinations tried by the irreducibility test.
const KRONECKER_BUDGET: u64 = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberFieldError {
    #[error("minimal polynomial must be monic of degree at least one, got {0}")]
    NotMonic(String),
    #[error("minimal polynomial {poly} is reducible (factor {factor}); composite input is rejected")]
    Reducible { poly: String, factor: String },
    #[error("could not decide irreducibility of {0} within the search budget")]
    IrreducibilityUndecided(String),
    #[error("isolating rectangle contains no root of {0}")]
    NoRootInBox(String),
    #[error("rectangle does not isolate a single root of {0}")]
    NotIsolating(String),
    #[error("conjugation map is not a field automorphism: {0}")]
    ConjugationNotAutomorphism(String),
    #[error("conjugation map does not agree with complex conjugation under the embedding")]
    ConjugationMismatch,
    #[error("field has no conjugation map; realness and signs are undefined")]
    NoConjugation,
    #[error("element {0} is not real under the designated embedding")]
    NotReal(String),
    #[error("sign could not be decided within {0} refinement steps")]
    PrecisionExhausted(u32),
}

/// Rectangle with rational corners containing exactly one root of the
/// minimal polynomial; selects the complex embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingBox {
    pub re: (Rational, Rational),
    pub im: (Rational, Rational),
}

impl IsolatingBox {
    pub fn new(re: (Rational, Rational), im: (Rational, Rational)) -> Self {
        IsolatingBox { re, im }
    }

    fn to_interval(&self) -> ComplexInterval {
        ComplexInterval::new(
            RealInterval::new(self.re.0.clone(), self.re.1.clone()),
            RealInterval::new(self.im.0.clone(), self.im.1.clone()),
        )
    }
}

struct Inner {
    generator: String,
    minpoly: UPoly,
    embedding: IsolatingBox,
    /// Certified box around θ, tighter than (or equal to) `embedding`.
    certified: ComplexInterval,
    /// `σ(θ)^i` reduced, for `i < degree`.
    conj_powers: Option<Vec<Vec<Rational>>>,
    sign_budget: u32,
}

/// A simple extension `Q(θ) = Q[x]/(m(x))` with a designated complex
/// embedding and, optionally, an automorphism realizing complex conjugation.
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

static RATIONALS: Lazy<NumberField> = Lazy::new(|| {
    let one = Rational::one();
    NumberField::new(
        "q",
        UPoly::x(),
        IsolatingBox::new((-one.clone(), one.clone()), (-one.clone(), one)),
        Some(UPoly::x()),
    )
    .expect("Q is a valid number field")
});

impl NumberField {
    /// Builds and validates a number field.
    ///
    /// `conjugation` is the image of θ under σ, written as a polynomial in θ.
    pub fn new(
        generator: &str,
        minpoly: UPoly,
        embedding: IsolatingBox,
        conjugation: Option<UPoly>,
    ) -> Result<Self, NumberFieldError> {
        Self::with_sign_budget(generator, minpoly, embedding, conjugation, DEFAULT_SIGN_BUDGET)
    }

    pub fn with_sign_budget(
        generator: &str,
        minpoly: UPoly,
        embedding: IsolatingBox,
        conjugation: Option<UPoly>,
        sign_budget: u32,
    ) -> Result<Self, NumberFieldError> {
        if !minpoly.is_monic() || minpoly.degree().unwrap_or(0) == 0 {
            return Err(NumberFieldError::NotMonic(minpoly.to_string()));
        }
        check_irreducible(&minpoly)?;
        let certified = certify_isolation(&minpoly, &embedding.to_interval(), sign_budget)?;
        let mut inner = Inner {
            generator: generator.to_string(),
            minpoly,
            embedding,
            certified,
            conj_powers: None,
            sign_budget,
        };
        if let Some(sigma) = conjugation {
            let d = inner.minpoly.degree().unwrap_or(0);
            let image = sigma.rem(&inner.minpoly);
            let mut powers = Vec::with_capacity(d);
            let mut acc = UPoly::constant(Rational::one());
            for _ in 0..d {
                powers.push(pad(acc.coeffs(), d));
                acc = acc.mul(&image).rem(&inner.minpoly);
            }
            inner.conj_powers = Some(powers);
            let field = NumberField(Arc::new(inner));
            field.check_conjugation(&image)?;
            return Ok(field);
        }
        Ok(NumberField(Arc::new(inner)))
    }

    /// The field Q, presented as the trivial extension by a root of `x`.
    pub fn rationals() -> Self {
        RATIONALS.clone()
    }

    /// `Q(i)` embedded with `i` in the upper half plane.
    pub fn gaussian() -> Self {
        let half = Rational::new(1.into(), 2.into());
        NumberField::new(
            "i",
            UPoly::from_i64(&[1, 0, 1]),
            IsolatingBox::new((-half.clone(), half.clone()), (half.clone(), half * Rational::from_integer(3.into()))),
            Some(UPoly::from_i64(&[0, -1])),
        )
        .expect("Q(i) is a valid number field")
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.degree().unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn generator_name(&self) -> &str {
        &self.0.generator
    }

    pub fn minimal_polynomial(&self) -> &UPoly {
        &self.0.minpoly
    }

    pub fn embedding(&self) -> &IsolatingBox {
        &self.0.embedding
    }

    pub fn has_conjugation(&self) -> bool {
        self.0.conj_powers.is_some()
    }

    pub fn sign_budget(&self) -> u32 {
        self.0.sign_budget
    }

    pub fn element(&self, coords: Vec<Rational>) -> NumberFieldElement {
        let poly = UPoly::new(coords);
        self.reduce(&poly)
    }

    pub fn from_rational(&self, q: Rational) -> NumberFieldElement {
        self.element(vec![q])
    }

    pub fn generator(&self) -> NumberFieldElement {
        self.reduce(&UPoly::x())
    }

    fn reduce(&self, p: &UPoly) -> NumberFieldElement {
        let r = p.rem(&self.0.minpoly);
        NumberFieldElement {
            field: self.clone(),
            coords: pad(r.coeffs(), self.degree()),
        }
    }

    fn check_conjugation(&self, image: &UPoly) -> Result<(), NumberFieldError> {
        let sigma_theta = self.reduce(image);
        let m = &self.0.minpoly;
        let value = m
            .coeffs()
            .iter()
            .rev()
            .fold(self.from_rational(Rational::zero()), |acc, c| {
                acc.mul(&sigma_theta).add(&self.from_rational(c.clone()))
            });
        if !value.is_zero() {
            return Err(NumberFieldError::ConjugationNotAutomorphism(
                "image of the generator is not a root of the minimal polynomial".into(),
            ));
        }
        if sigma_theta.conjugate() != self.generator() {
            return Err(NumberFieldError::ConjugationNotAutomorphism(
                "map is not an involution".into(),
            ));
        }
        let target = self.0.certified.conj();
        for levels in (0..=self.0.sign_budget).step_by(4) {
            let enclosure = self.enclose_at(&sigma_theta, levels);
            if enclosure.inside(&target) {
                return Ok(());
            }
            let disjoint = enclosure.re.hi < target.re.lo
                || target.re.hi < enclosure.re.lo
                || enclosure.im.hi < target.im.lo
                || target.im.hi < enclosure.im.lo;
            if disjoint {
                return Err(NumberFieldError::ConjugationMismatch);
            }
        }
        Err(NumberFieldError::ConjugationMismatch)
    }

    /// Box containing θ after `levels` rounds of bisection with exclusion.
    pub fn theta_enclosure(&self, levels: u32) -> ComplexInterval {
        let m = &self.0.minpoly;
        let mut candidates = vec![self.0.certified.clone()];
        for _ in 0..levels {
            let mut next = Vec::new();
            for c in &candidates {
                for q in c.quarters() {
                    if m.eval_interval(&q).contains_zero() {
                        next.push(q);
                    }
                }
            }
            if next.is_empty() {
                // Unreachable for a certified box; keep the last valid enclosure.
                break;
            }
            if next.len() > 16 {
                let hull = next.iter().skip(1).fold(next[0].clone(), |h, b| h.hull(b));
                next = vec![hull];
            }
            candidates = next;
        }
        candidates.iter().skip(1).fold(candidates[0].clone(), |h, b| h.hull(b))
    }

    fn enclose_at(&self, a: &NumberFieldElement, levels: u32) -> ComplexInterval {
        if self.is_rational() {
            return ComplexInterval::point_real(a.coords[0].clone());
        }
        let theta = self.theta_enclosure(levels);
        UPoly::new(a.coords.clone()).eval_interval(&theta)
    }

    /// Decides the sign of `i^k · a`, which must be real (that is,
    /// `σ(a) = (−1)^k a`).
    pub fn sign_of_rotated(&self, a: &NumberFieldElement, k: u32) -> Result<i8, NumberFieldError> {
        if a.is_zero() {
            return Ok(0);
        }
        if !self.has_conjugation() {
            return Err(NumberFieldError::NoConjugation);
        }
        let expected = if k % 2 == 0 { a.clone() } else { a.neg() };
        if a.conjugate() != expected {
            return Err(NumberFieldError::NotReal(a.to_string()));
        }
        let budget = self.0.sign_budget;
        let mut levels = 0;
        loop {
            let value = self.enclose_at(a, levels).rotate(k % 4);
            if value.re.lo.is_positive() {
                return Ok(1);
            }
            if value.re.hi.is_negative() {
                return Ok(-1);
            }
            if levels >= budget {
                return Err(NumberFieldError::PrecisionExhausted(budget));
            }
            levels = (levels + 4).min(budget);
        }
    }

    /// Sign of a real element.
    pub fn sign(&self, a: &NumberFieldElement) -> Result<i8, NumberFieldError> {
        self.sign_of_rotated(a, 0)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.minpoly == other.0.minpoly
                && self.0.embedding == other.0.embedding
                && self.0.generator == other.0.generator)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}) with {} = 0", self.0.generator, self.0.minpoly)
    }
}

fn pad(coeffs: &[Rational], d: usize) -> Vec<Rational> {
    let mut v = coeffs.to_vec();
    v.resize(d, Rational::zero());
    v
}

/// Element of a [`NumberField`] in the power basis `1, θ, …, θ^{d−1}`.
#[derive(Clone, PartialEq)]
pub struct NumberFieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NumberFieldElement {
    pub fn is_zero(&self) -> bool {
        self.is_zero_el()
    }

    pub fn is_one(&self) -> bool {
        self.is_one_el()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Image under the field's conjugation automorphism σ.
    ///
    /// Panics if the field carries no conjugation.
    pub fn conjugate(&self) -> Self {
        let powers = self
            .field
            .0
            .conj_powers
            .as_ref()
            .expect("number field has no conjugation");
        let d = self.coords.len();
        let mut out = vec![Rational::zero(); d];
        for (c, p) in self.coords.iter().zip(powers) {
            if c.is_zero() {
                continue;
            }
            for (o, pj) in out.iter_mut().zip(p) {
                *o += c * pj;
            }
        }
        NumberFieldElement {
            field: self.field.clone(),
            coords: out,
        }
    }

    /// Enclosure of the complex value under the designated embedding.
    pub fn enclose(&self, levels: u32) -> ComplexInterval {
        self.field.enclose_at(self, levels)
    }

    fn poly(&self) -> UPoly {
        UPoly::new(self.coords.clone())
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.field.generator_name();
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_integer() { c.to_string() } else { format!("({c})") };
            terms.push(match i {
                0 => coeff,
                _ => {
                    let pow = if i == 1 { name.to_string() } else { format!("{name}^{i}") };
                    if c.is_one() {
                        pow
                    } else if (-c).is_one() {
                        format!("-{pow}")
                    } else {
                        format!("{coeff}*{pow}")
                    }
                }
            });
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                if let Some(rest) = t.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                    continue;
                }
                out.push_str(" + ");
            }
            out.push_str(t);
        }
        write!(f, "{out}")
    }
}

impl Scalar for NumberFieldElement {
    type Ctx = NumberField;

    fn context(&self) -> NumberField {
        self.field.clone()
    }

    fn zero_in(ctx: &NumberField) -> Self {
        NumberFieldElement {
            field: ctx.clone(),
            coords: vec![Rational::zero(); ctx.degree()],
        }
    }

    fn one_in(ctx: &NumberField) -> Self {
        ctx.from_rational(Rational::one())
    }

    fn from_rational(ctx: &NumberField, q: &Rational) -> Self {
        ctx.from_rational(q.clone())
    }

    fn is_zero_el(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn is_one_el(&self) -> bool {
        self.coords[0].is_one() && self.coords.iter().skip(1).all(Zero::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.coords.len() == 1 {
            return NumberFieldElement {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        self.field.reduce(&self.poly().mul(&rhs.poly()))
    }

    fn neg(&self) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.coords.len() == 1 {
            return NumberFieldElement {
                field: self.field.clone(),
                coords: vec![self.coords[0].recip()],
            };
        }
        let (g, s, _) = self.poly().ext_gcd(&self.field.0.minpoly);
        debug_assert!(g.degree() == Some(0));
        self.field.reduce(&s)
    }

    fn size(&self) -> usize {
        self.coords.iter().map(Scalar::size).sum()
    }
}

// ---------------------------------------------------------------------------
// Irreducibility (Kronecker's method)
// ---------------------------------------------------------------------------

fn integer_primitive(p: &UPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn eval_int(p: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as i64);
            if d * d != n {
                out.push((n / d) as i64);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn lagrange(points: &[(i64, i64)]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, &(xi, yi)) in points.iter().enumerate() {
        let mut basis = UPoly::constant(Rational::from_integer(yi.into()));
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = UPoly::from_i64(&[-xj, 1]);
            basis = basis
                .mul(&factor)
                .scale(&Rational::new(1.into(), (xi - xj).into()));
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Rejects reducible polynomials. Undecided cases are reported as errors.
fn check_irreducible(p: &UPoly) -> Result<(), NumberFieldError> {
    let d = p.degree().unwrap_or(0);
    if d <= 1 {
        return Ok(());
    }
    let ints = integer_primitive(p);
    // Candidate evaluation points ordered by |f(a)|, smallest first.
    let mut samples: Vec<(i64, BigInt)> = (-24..=24).map(|a| (a, eval_int(&ints, a))).collect();
    if let Some((a, _)) = samples.iter().find(|(_, v)| v.is_zero()) {
        return Err(NumberFieldError::Reducible {
            poly: p.to_string(),
            factor: UPoly::from_i64(&[-a, 1]).to_string(),
        });
    }
    samples.sort_by(|a, b| a.1.abs().cmp(&b.1.abs()).then(a.0.cmp(&b.0)));
    for m in 1..=d / 2 {
        let chosen = &samples[..=m];
        let mut options = Vec::with_capacity(m + 1);
        let mut combos: u64 = 1;
        for (i, (_, v)) in chosen.iter().enumerate() {
            let divs = divisors(v).ok_or_else(|| NumberFieldError::IrreducibilityUndecided(p.to_string()))?;
            let signed: Vec<i64> = if i == 0 {
                divs.clone()
            } else {
                divs.iter().flat_map(|&x| [x, -x]).collect()
            };
            combos = combos.saturating_mul(signed.len() as u64);
            options.push(signed);
        }
        if combos > KRONECKER_BUDGET {
            return Err(NumberFieldError::IrreducibilityUndecided(p.to_string()));
        }
        let mut idx = vec![0usize; m + 1];
        loop {
            let pts: Vec<(i64, i64)> = chosen
                .iter()
                .zip(&idx)
                .zip(&options)
                .map(|(((a, _), &k), opts)| (*a, opts[k]))
                .collect();
            let g = lagrange(&pts);
            let deg = g.degree().unwrap_or(0);
            if deg >= 1 && g.coeffs().iter().all(|c| c.is_integer()) && p.rem(&g).is_zero() {
                return Err(NumberFieldError::Reducible {
                    poly: p.to_string(),
                    factor: g.to_string(),
                });
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < options[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Root isolation certificate
// ---------------------------------------------------------------------------

fn complex_inverse(re: &Rational, im: &Rational) -> Option<(Rational, Rational)> {
    let norm = re * re + im * im;
    if norm.is_zero() {
        return None;
    }
    Some((re / &norm, -im / &norm))
}

/// Krawczyk test in rectangular complex arithmetic: success proves that `x`
/// contains exactly one root of `f`.
fn krawczyk(f: &UPoly, df: &UPoly, x: &ComplexInterval) -> bool {
    let (mr, mi) = x.center();
    let m = ComplexInterval::point(mr, mi);
    let fm = f.eval_interval(&m);
    let dfm = df.eval_interval(&m);
    let Some((yr, yi)) = complex_inverse(&dfm.re.lo, &dfm.im.lo) else {
        return false;
    };
    let y = ComplexInterval::point(yr, yi);
    let one = ComplexInterval::point_real(Rational::one());
    let k = m
        .sub(&y.mul(&fm))
        .add(&one.sub(&y.mul(&df.eval_interval(x))).mul(&x.sub(&m)));
    k.strictly_inside(x)
}

fn certify_isolation(
    f: &UPoly,
    region: &ComplexInterval,
    budget: u32,
) -> Result<ComplexInterval, NumberFieldError> {
    let df = f.derivative();
    let mut candidates = vec![region.clone()];
    for _ in 0..=budget.min(64) {
        let hull = candidates.iter().skip(1).fold(candidates[0].clone(), |h, b| h.hull(b));
        if krawczyk(f, &df, &hull) {
            return Ok(hull);
        }
        let mut next = Vec::new();
        for c in &candidates {
            for q in c.quarters() {
                if f.eval_interval(&q).contains_zero() {
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            return Err(NumberFieldError::NoRootInBox(f.to_string()));
        }
        if next.len() > 4096 {
            break;
        }
        candidates = next;
    }
    Err(NumberFieldError::NotIsolating(f.to_string()))
}
