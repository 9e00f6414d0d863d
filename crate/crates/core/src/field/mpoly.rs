use std::collections::BTreeMap;
use std::fmt;

use super::Scalar;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over an exact field.
///
/// Terms are kept in a `BTreeMap`, so iteration order is lexicographic with
/// the first variable most significant and the leading term is the last
/// entry.
#[derive(Clone, Debug)]
pub struct MPoly<C: Scalar> {
    nvars: usize,
    ctx: C::Ctx,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> PartialEq for MPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<C: Scalar> MPoly<C> {
    pub fn zero(ctx: &C::Ctx, nvars: usize) -> Self {
        MPoly {
            nvars,
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        let mut p = Self::zero(&c.context(), nvars);
        if !c.is_zero_el() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(ctx: &C::Ctx, nvars: usize) -> Self {
        Self::constant(C::one_in(ctx), nvars)
    }

    pub fn var(ctx: &C::Ctx, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(C::one_in(ctx), m)
    }

    pub fn monomial(c: C, exps: Monomial) -> Self {
        let mut p = Self::zero(&c.context(), exps.len());
        if !c.is_zero_el() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(ctx: &C::Ctx, nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(ctx, nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars);
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero_el() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero_el() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> C {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(|| C::zero_in(&self.ctx))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> C {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| C::zero_in(&self.ctx))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m[v]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero_el() {
            return Self::zero(&self.ctx, self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    fn mul_term(&self, exps: &[u32], c: &C) -> Self {
        MPoly {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.iter().zip(exps).map(|(x, y)| x + y).collect(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(&self.ctx, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                out.add_term(m, c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(&self.ctx, self.nvars);
        for (m, c) in &self.terms {
            if m[v] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[v] -= 1;
            let k = super::Rational::from_integer(m[v].into());
            out.add_term(m2, c.mul(&C::from_rational(&self.ctx, &k)));
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero_in(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes `x_v := value`, keeping the number of variables.
    pub fn substitute(&self, v: usize, value: &C) -> Self {
        let mut out = Self::zero(&self.ctx, self.nvars);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..m[v] {
                t = t.mul(value);
            }
            let mut m2 = m.clone();
            m2[v] = 0;
            out.add_term(m2, t);
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, ctx: &D::Ctx, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(ctx, self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Coefficients of `x_v^0, x_v^1, …` as polynomials free of `x_v`.
    pub fn coefficients_in(&self, v: usize) -> Vec<Self> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Self::zero(&self.ctx, self.nvars); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2[v] as usize;
            m2[v] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, v: usize) -> Self {
        self.coefficients_in(v).pop().unwrap_or_else(|| Self::zero(&self.ctx, self.nvars))
    }

    /// Exact division; `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let (lm, lc) = rhs.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx, self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if m.iter().zip(&lm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = m.iter().zip(&lm).map(|(a, b)| a - b).collect();
            let qc = c.mul(&lc_inv);
            rem = rem.sub(&rhs.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        if self.is_constant() || rhs.is_constant() || self.coprime_by_specialization(rhs) {
            return Self::one(&self.ctx, self.nvars);
        }
        gcd_from(self, rhs, 0).monic()
    }

    /// Proves coprimality cheaply when possible. If `g = gcd(a, b)` has
    /// positive degree in `x_v`, then so does the gcd of any specialization
    /// of the other variables at which the leading coefficient of `a` in
    /// `x_v` survives. A constant specialized gcd in every shared variable
    /// therefore forces `g` to be constant.
    fn coprime_by_specialization(&self, rhs: &Self) -> bool {
        'vars: for v in 0..self.nvars {
            if self.degree_in(v) == 0 || rhs.degree_in(v) == 0 {
                continue;
            }
            let lc = self.leading_coeff_in(v);
            for attempt in 0..4u32 {
                let point: Vec<C> = (0..self.nvars)
                    .map(|w| {
                        let x = super::Rational::from_integer((3 + 2 * w as i64 + 7 * attempt as i64).into());
                        C::from_rational(&self.ctx, &x)
                    })
                    .collect();
                if lc.eval(&point).is_zero_el() {
                    continue;
                }
                let specialize = |p: &Self| {
                    (0..self.nvars)
                        .filter(|&w| w != v)
                        .fold(p.clone(), |acc, w| acc.substitute(w, &point[w]))
                };
                let (a, b) = (specialize(self), specialize(rhs));
                if b.is_zero() || !gcd_from(&a, &b, v).is_constant() {
                    return false;
                }
                continue 'vars;
            }
            return false;
        }
        true
    }

    fn content_in(&self, v: usize) -> Self {
        let mut acc: Option<Self> = None;
        for c in self.coefficients_in(v).into_iter().filter(|c| !c.is_zero()) {
            acc = Some(match acc {
                None => c.monic(),
                Some(a) => gcd_from(&a, &c, v + 1).monic(),
            });
            if acc.as_ref().is_some_and(|a| a.is_constant()) {
                break;
            }
        }
        acc.unwrap_or_else(|| Self::zero(&self.ctx, self.nvars))
    }

    fn primitive_part_in(&self, v: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides polynomial")
    }

    /// Pseudo-remainder with respect to `x_v`.
    fn prem_in(&self, rhs: &Self, v: usize) -> Self {
        let db = rhs.degree_in(v);
        let lcb = rhs.leading_coeff_in(v);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lcr = r.leading_coeff_in(v);
            let mut shift = vec![0; self.nvars];
            shift[v] = dr - db;
            let one = C::one_in(&self.ctx);
            r = r.mul(&lcb).sub(&rhs.mul(&lcr).mul_term(&shift, &one));
        }
        r
    }
}

/// Recursive primitive-PRS gcd; `a`, `b` nonzero and free of variables `< v`.
fn gcd_from<C: Scalar>(a: &MPoly<C>, b: &MPoly<C>, v: usize) -> MPoly<C> {
    let n = a.nvars;
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if v >= n || a.is_constant() || b.is_constant() {
        return MPoly::one(&a.ctx, n);
    }
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if da == 0 && db == 0 {
        return gcd_from(a, b, v + 1);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd_from(&ca, &cb, v + 1);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.is_zero() {
            break;
        }
        if q.degree_in(v) == 0 {
            p = MPoly::one(&a.ctx, n);
            break;
        }
        let r = p.prem_in(&q, v);
        p = q;
        q = r.primitive_part_in(v);
    }
    c.mul(&p.primitive_part_in(v)).monic()
}

impl<C: Scalar> MPoly<C> {
    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).cloned().unwrap_or_else(|| format!("t{}", i + 1));
                    if e == 1 { name } else { format!("{name}^{e}") }
                })
                .collect();
            let coeff = c.to_string();
            let simple = !coeff.contains(' ') && !coeff.contains('/');
            let term = if mono.is_empty() {
                if simple { coeff } else { format!("({coeff})") }
            } else if c.is_one_el() {
                mono.join("*")
            } else if c.neg().is_one_el() {
                format!("-{}", mono.join("*"))
            } else if simple {
                format!("{coeff}*{}", mono.join("*"))
            } else {
                format!("({coeff})*{}", mono.join("*"))
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                match p.strip_prefix('-') {
                    Some(rest) => {
                        out.push_str(" - ");
                        out.push_str(rest);
                    }
                    None => {
                        out.push_str(" + ");
                        out.push_str(p);
                    }
                }
            } else {
                out.push_str(p);
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
