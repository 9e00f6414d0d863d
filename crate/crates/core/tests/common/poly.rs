//! Multivariate polynomials over Q and an elimination-based transcendence
//! degree, written without any of the library's algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use hodgekit::field::{FunctionField, RatFunc, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    fn push(&mut self, e: Vec<u32>, c: BigRational) {
        let slot = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.push(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut r = Poly::zero(self.nvars);
        if c.is_zero() {
            return r;
        }
        for (e, x) in &self.terms {
            r.terms.insert(e.clone(), x * c);
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&q(-1)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                r.push(e, x * y);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, BigRational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, at: &[BigRational]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let m = e.iter().zip(at).fold(c.clone(), |m, (&k, x)| m * num_traits::pow(x.clone(), k as usize));
            acc + m
        })
    }

    /// Substitutes `subs[i]` for variable `i`.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        let m = subs[0].nvars;
        let mut r = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&subs[i].pow(k));
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Fixes the given variables and returns a polynomial in the rest
    /// (which keep their relative order).
    pub fn specialize(&self, fixed: &[(usize, BigRational)]) -> Poly {
        let keep: Vec<usize> = (0..self.nvars).filter(|v| fixed.iter().all(|(f, _)| f != v)).collect();
        let mut r = Poly::zero(keep.len());
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            for (v, x) in fixed {
                coef *= num_traits::pow(x.clone(), e[*v] as usize);
            }
            r.push(keep.iter().map(|&v| e[v]).collect(), coef);
        }
        r
    }

    /// Univariate coefficients, lowest first. Requires `nvars == 1`.
    pub fn univariate(&self) -> Vec<BigRational> {
        assert_eq!(self.nvars, 1);
        let d = self.degree_in(0) as usize;
        let mut out = vec![BigRational::zero(); d + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        out
    }

    pub fn to_ratfunc(&self, field: &FunctionField) -> RatFunc {
        let mut acc = RatFunc::zero_in(field);
        for (e, c) in &self.terms {
            let mut t = field.rational(c.clone());
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&field.param(v));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// Random polynomial of total degree at most `deg` with small coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, deg: u32, density: f64) -> Poly {
    let mut p = Poly::zero(nvars);
    let mut exps = vec![vec![]];
    for _ in 0..nvars {
        exps = exps
            .into_iter()
            .flat_map(|e: Vec<u32>| (0..=deg).map(move |k| [e.clone(), vec![k]].concat()))
            .collect();
    }
    for e in exps {
        if e.iter().sum::<u32>() <= deg && rng.gen_bool(density) {
            let c = rng.gen_range(-4..=4);
            p.push(e, q(c));
        }
    }
    p
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        for r in c + 1..n {
            if !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[r][j] -= t;
                }
            }
        }
    }
    d
}

/// Resultant of two univariate polynomials (coefficients lowest first) via
/// the Sylvester matrix.
pub fn resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return BigRational::zero();
    }
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m + n == 0 {
        return BigRational::one();
    }
    let size = m + n;
    let mut s = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            s[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            s[n + i][i + j] = c.clone();
        }
    }
    det(s)
}

/// Newton interpolation through `(xs[i], ys[i])`, coefficients lowest first.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if out[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += out[k].clone();
            }
            next[k] -= &out[k] * &xs[i];
        }
        next[0] += dd[i].clone();
        out = next;
    }
    out
}

/// True when the leading homogeneous part of `p` contains a pure power of
/// variable `v`, so that the leading coefficient in `v` is a nonzero
/// constant.
fn monic_in(p: &Poly, v: usize) -> bool {
    let d = p.total_degree();
    d > 0 && p.degree_in(v) == d
}

/// Restricts each polynomial to the affine `s`-plane through `a` spanned by
/// `dirs`, recentred so that the origin maps to `a`.
fn restrict(fs: &[&Poly], a: &[BigRational], dirs: &[Vec<BigRational>]) -> Vec<Poly> {
    let k = a.len();
    let s = dirs.len();
    let subs: Vec<Poly> = (0..k)
        .map(|i| {
            let mut p = Poly::constant(s, a[i].clone());
            for (j, d) in dirs.iter().enumerate() {
                p = p.add(&Poly::var(s, j).scale(&d[i]));
            }
            p
        })
        .collect();
    fs.iter()
        .map(|f| {
            let g = f.compose(&subs);
            g.sub(&Poly::constant(s, f.eval(a)))
        })
        .collect()
}

/// One elimination trial: `Some(true)` proves independence, `Some(false)`
/// is evidence of dependence, `None` means the random slice was degenerate.
fn independence_trial<R: Rng>(rng: &mut R, fs: &[&Poly], k: usize) -> Option<bool> {
    let s = fs.len();
    let a: Vec<BigRational> = (0..k).map(|_| q(rng.gen_range(-5..=5))).collect();
    let dirs: Vec<Vec<BigRational>> = (0..s).map(|_| (0..k).map(|_| q(rng.gen_range(-6..=6))).collect()).collect();
    let ps = restrict(fs, &a, &dirs);
    match s {
        1 => Some(!ps[0].is_zero()),
        2 => {
            if !ps.iter().all(|p| monic_in(p, 1)) {
                return None;
            }
            let bound = (ps[0].total_degree() * ps[1].total_degree()) as i64;
            // A resultant of degree <= bound vanishing at bound+1 points is zero.
            for c in 0..=bound {
                let at = [(0usize, q(c))];
                let r = resultant(&ps[0].specialize(&at).univariate(), &ps[1].specialize(&at).univariate());
                if !r.is_zero() {
                    return Some(true);
                }
            }
            Some(false)
        }
        3 => {
            let alpha = q(rng.gen_range(1..=7));
            let beta = q(rng.gen_range(1..=7));
            let q1 = ps[0].clone();
            let q2 = ps[1].add(&ps[2].scale(&alpha));
            let q3 = ps[2].add(&ps[1].scale(&beta));
            if ![&q1, &q2, &q3].iter().all(|p| monic_in(p, 2)) {
                return None;
            }
            let b12 = (q1.total_degree() * q2.total_degree()) as i64;
            let b13 = (q1.total_degree() * q3.total_degree()) as i64;
            // R1(c, .) and R2(c, .) by interpolation in u2 at fixed u1 = c.
            let section = |g: &Poly, h: &Poly, c: &BigRational, bound: i64| -> Vec<BigRational> {
                let xs: Vec<BigRational> = (0..=bound).map(q).collect();
                let ys: Vec<BigRational> = xs
                    .iter()
                    .map(|e| {
                        let at = [(0usize, c.clone()), (1usize, e.clone())];
                        resultant(&g.specialize(&at).univariate(), &h.specialize(&at).univariate())
                    })
                    .collect();
                interpolate(&xs, &ys)
            };
            for _ in 0..3 {
                let c = q(rng.gen_range(-1000..=1000));
                let r1 = section(&q1, &q2, &c, b12);
                let r2 = section(&q1, &q3, &c, b13);
                if !resultant(&r1, &r2).is_zero() {
                    return Some(true);
                }
            }
            Some(false)
        }
        _ => unreachable!("at most three parameters"),
    }
}

/// Whether `fs` (at most `k` of them, `k <= 3`) are algebraically
/// independent over Q.
pub fn independent<R: Rng>(rng: &mut R, fs: &[&Poly], k: usize) -> bool {
    if fs.len() > k {
        return false;
    }
    if fs.iter().any(|f| f.is_constant()) {
        return false;
    }
    let mut trials = 0;
    let mut attempts = 0;
    while trials < 4 && attempts < 200 {
        attempts += 1;
        match independence_trial(rng, fs, k) {
            Some(true) => return true,
            Some(false) => trials += 1,
            None => {}
        }
    }
    false
}

/// Transcendence degree of `Q(fs)` by greedy extension of an independent
/// set.
pub fn trdeg_by_elimination<R: Rng>(rng: &mut R, fs: &[Poly], k: usize) -> usize {
    let mut chosen: Vec<&Poly> = Vec::new();
    for f in fs {
        if chosen.len() == k {
            break;
        }
        let mut cand = chosen.clone();
        cand.push(f);
        if independent(rng, &cand, k) {
            chosen = cand;
        }
    }
    chosen.len()
}
