#![allow(dead_code)]

pub mod poly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use hodgekit::field::{FunctionField, RatFunc};
use hodgekit::lie::{make_classical, ClassicalKind, MatLieAlgebra};

use poly::{random_poly, Poly};

/// A classical algebra together with a weight vector that normalizes it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub kind: ClassicalKind,
    pub n: usize,
    pub lambda: Vec<i64>,
}

impl Instance {
    pub fn algebra(&self) -> MatLieAlgebra {
        make_classical(self.kind, None, self.n).unwrap()
    }
}

/// Draws a random `(kind, n, λ)` with `n ≤ max_n`. For the form-preserving
/// kinds `λ` is paired around the antidiagonal so that `λᵢ + λ_{n-1-i}` is
/// constant.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize) -> Instance {
    let kind = ClassicalKind::ALL[rng.gen_range(0..ClassicalKind::ALL.len())];
    let n = match kind {
        ClassicalKind::Sp | ClassicalKind::Gsp => 2 * rng.gen_range(1..=max_n / 2),
        ClassicalKind::Sl | ClassicalKind::So | ClassicalKind::Go => rng.gen_range(2..=max_n),
        _ => rng.gen_range(1..=max_n),
    };
    let lambda = random_lambda(rng, kind, n);
    Instance { kind, n, lambda }
}

pub fn random_lambda<R: Rng>(rng: &mut R, kind: ClassicalKind, n: usize) -> Vec<i64> {
    if !kind.uses_form() {
        return (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    }
    let c = 2 * rng.gen_range(-2..=2);
    let mut lambda = vec![0; n];
    for i in 0..n / 2 {
        lambda[i] = rng.gen_range(-3..=3);
        lambda[n - 1 - i] = c - lambda[i];
    }
    if n % 2 == 1 {
        lambda[n / 2] = c / 2;
    }
    lambda
}

/// Rank over Q by plain Gaussian elimination.
pub fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for j in c..cols {
                    let t = &f * &rows[rank][j];
                    rows[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn int_matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// The eigenvalue of `ad diag(λ)` on each matrix unit `E_rs`, read off from
/// the commutator computed entry by entry.
pub fn commutator_eigenvalues(lambda: &[i64]) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let d: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { lambda[i] } else { 0 }).collect()).collect();
    let mut out = vec![vec![0; n]; n];
    for r in 0..n {
        for s in 0..n {
            let mut e = vec![vec![0; n]; n];
            e[r][s] = 1;
            let de = int_matmul(&d, &e);
            let ed = int_matmul(&e, &d);
            out[r][s] = de[r][s] - ed[r][s];
        }
    }
    out
}

/// Brute-force grading: `dim g_k` is the rank of the basis projected onto
/// the matrix units of ad-eigenvalue `k`.
pub fn oracle_levels(g: &MatLieAlgebra, lambda: &[i64]) -> BTreeMap<i64, usize> {
    let n = lambda.len();
    let eig = commutator_eigenvalues(lambda);
    let mut keys: Vec<i64> = eig.iter().flatten().copied().collect();
    keys.sort();
    keys.dedup();
    let mut out = BTreeMap::new();
    for k in keys {
        let positions: Vec<(usize, usize)> = (0..n)
            .flat_map(|r| (0..n).map(move |s| (r, s)))
            .filter(|&(r, s)| eig[r][s] == k)
            .collect();
        let rows: Vec<Vec<BigRational>> = g
            .basis()
            .iter()
            .map(|b| positions.iter().map(|&(r, s)| b.get(r, s).clone()).collect())
            .collect();
        let dim = rank_q(rows);
        if dim > 0 {
            out.insert(k, dim);
        }
    }
    out
}

pub fn oracle_flag_dim(levels: &BTreeMap<i64, usize>) -> usize {
    levels.iter().filter(|(k, _)| **k < 0).map(|(_, v)| v).sum()
}

pub fn oracle_hcodim(levels: &BTreeMap<i64, usize>) -> usize {
    levels.iter().filter(|(k, _)| **k <= -2).map(|(_, v)| v).sum()
}

/// Closed-form dimensions of the classical algebras.
pub fn classical_dim(kind: ClassicalKind, n: usize) -> usize {
    match kind {
        ClassicalKind::Gl => n * n,
        ClassicalKind::Sl => n * n - 1,
        ClassicalKind::So => n * (n - 1) / 2,
        ClassicalKind::Sp => n * (n + 1) / 2,
        ClassicalKind::Gsp => n * (n + 1) / 2 + 1,
        ClassicalKind::Go => n * (n - 1) / 2 + 1,
        ClassicalKind::DiagTorus => n,
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `(p, q)` labels of a basis adapted to the table, one per dimension.
pub fn labels(dims: &BTreeMap<(i64, i64), usize>) -> Vec<(i64, i64)> {
    dims.iter().flat_map(|(&pq, &h)| std::iter::repeat(pq).take(h)).collect()
}

/// Λ^k by enumerating strictly increasing index tuples.
pub fn brute_wedge(dims: &BTreeMap<(i64, i64), usize>, k: usize) -> BTreeMap<(i64, i64), usize> {
    let l = labels(dims);
    let mut out = BTreeMap::new();
    enumerate(&l, k, 0, true, &mut Vec::new(), &mut out);
    out
}

/// Sym^k by enumerating weakly increasing index tuples.
pub fn brute_sym(dims: &BTreeMap<(i64, i64), usize>, k: usize) -> BTreeMap<(i64, i64), usize> {
    let l = labels(dims);
    let mut out = BTreeMap::new();
    enumerate(&l, k, 0, false, &mut Vec::new(), &mut out);
    out
}

fn enumerate(
    l: &[(i64, i64)],
    k: usize,
    start: usize,
    strict: bool,
    chosen: &mut Vec<usize>,
    out: &mut BTreeMap<(i64, i64), usize>,
) {
    if chosen.len() == k {
        let pq = chosen.iter().fold((0, 0), |acc, &i| (acc.0 + l[i].0, acc.1 + l[i].1));
        *out.entry(pq).or_insert(0) += 1;
        return;
    }
    for i in start..l.len() {
        chosen.push(i);
        enumerate(l, k, if strict { i + 1 } else { i }, strict, chosen, out);
        chosen.pop();
    }
}

/// A random symmetric Hodge table of the given weight.
pub fn random_table<R: Rng>(rng: &mut R, weight: i64, max_h: usize) -> BTreeMap<(i64, i64), usize> {
    let mut dims = BTreeMap::new();
    let lo = rng.gen_range(-2..=2);
    let width = rng.gen_range(0..=3);
    for p in lo..=lo + width {
        let qq = weight - p;
        if p > qq {
            continue;
        }
        let h = rng.gen_range(0..=max_h);
        if h > 0 {
            dims.insert((p, qq), h);
            dims.insert((qq, p), h);
        }
    }
    if dims.is_empty() {
        let p = weight.div_euclid(2);
        dims.insert((p, weight - p), 1);
        dims.insert((weight - p, p), 1);
    }
    dims
}

/// A flag in the open cell: `F` of dimension `dims[j]` is spanned by the
/// first `dims[j]` rows of a block upper unitriangular matrix `v`. The
/// entries above the diagonal blocks are the affine coordinates of the flag.
#[derive(Clone, Debug)]
pub struct RandomFlag {
    pub nparams: usize,
    pub dims: Vec<usize>,
    pub v: Vec<Vec<Poly>>,
    pub free: Vec<(usize, usize)>,
}

impl RandomFlag {
    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn coordinates(&self) -> Vec<Poly> {
        self.free.iter().map(|&(r, c)| self.v[r][c].clone()).collect()
    }

    /// Applies a substitution of the parameters to every entry.
    pub fn map(&self, subs: &[Poly]) -> RandomFlag {
        let mut out = self.clone();
        for &(r, c) in &self.free {
            out.v[r][c] = self.v[r][c].compose(subs);
        }
        out.nparams = subs[0].nvars;
        out
    }

    /// Steps as `(p, basis)`, the smallest subspace getting the largest `p`.
    pub fn steps(&self, field: &FunctionField) -> Vec<(i64, Vec<Vec<RatFunc>>)> {
        let s = self.dims.len() as i64;
        self.dims
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let rows = self.v[..d].iter().map(|row| row.iter().map(|e| e.to_ratfunc(field)).collect()).collect();
                (s - j as i64, rows)
            })
            .collect()
    }
}

/// Random flag in ambient dimension `2..=max_n` whose coordinates are
/// polynomials of degree at most 3 in `nparams` parameters. The coordinates
/// are routed through a random number of hidden linear forms so that
/// degenerate transcendence degrees occur.
pub fn random_flag<R: Rng>(rng: &mut R, nparams: usize, max_n: usize) -> RandomFlag {
    let n = rng.gen_range(2..=max_n);
    let mut dims: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.6)).collect();
    if dims.is_empty() {
        dims.push(rng.gen_range(1..n));
    }
    let hidden = rng.gen_range(0..=nparams);
    let forms: Vec<Poly> = (0..hidden.max(1))
        .map(|_| {
            let mut f = random_poly(rng, nparams, 1, 0.8);
            if f.total_degree() == 0 {
                f = f.add(&Poly::var(nparams, rng.gen_range(0..nparams)));
            }
            f
        })
        .collect();
    let block = |i: usize| dims.iter().filter(|&&d| d <= i).count();
    let mut v: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| Poly::constant(nparams, if r == c { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();
    let mut free = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if block(c) > block(r) {
                free.push((r, c));
                if rng.gen_bool(0.2) {
                    continue;
                }
                let e = if hidden == 0 {
                    Poly::constant(nparams, BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                } else {
                    let deg = rng.gen_range(1..=3);
                    let mut e = random_poly(rng, hidden, deg, 0.35);
                    if e.total_degree() == 0 {
                        e = e.add(&Poly::var(hidden, rng.gen_range(0..hidden)));
                    }
                    e.compose(&forms[..hidden])
                };
                v[r][c] = e;
            }
        }
    }
    RandomFlag { nparams, dims, v, free }
}
