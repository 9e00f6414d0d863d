//! Dense exact linear algebra over any [`Scalar`] field.

use std::fmt;

use crate::field::{Rational, Scalar};

/// Row-major dense matrix with exact entries.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    entries: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn new(ctx: &T::Ctx, rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entries length must be rows × cols");
        ExactMatrix {
            rows,
            cols,
            ctx: ctx.clone(),
            entries,
        }
    }

    pub fn zeros(ctx: &T::Ctx, rows: usize, cols: usize) -> Self {
        Self::new(ctx, rows, cols, vec![T::zero_in(ctx); rows * cols])
    }

    pub fn identity(ctx: &T::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, T::one_in(ctx));
        }
        m
    }

    /// Builds from row vectors; `cols` is needed when `rows` is empty.
    pub fn from_rows(ctx: &T::Ctx, cols: usize, rows: &[Vec<T>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Self::new(ctx, rows.len(), cols, entries)
    }

    pub fn from_cols(ctx: &T::Ctx, rows: usize, cols: &[Vec<T>]) -> Self {
        Self::from_rows(ctx, rows, cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero_el)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self::new(&self.ctx, self.cols, self.rows, entries)
    }

    pub fn map<U: Scalar>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix::new(ctx, self.rows, self.cols, self.entries.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect();
        Self::new(&self.ctx, self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.sub(b)).collect();
        Self::new(&self.ctx, self.rows, self.cols, entries)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(&self.ctx, self.rows, self.cols, self.entries.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_el() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero_el() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero_in(&self.ctx), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero_el() || v[j].is_zero_el() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Columns are processed left to right, so the pivot set is the
    /// lexicographically first set of independent columns. Within a column
    /// the pivot is the candidate entry of smallest representation size.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero_el())
                .min_by_key(|&i| m.get(i, c).size())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_el() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero_el() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&f.mul(pj));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank over the field of the entries.
    pub fn rank(&self) -> usize {
        // Forward elimination only; no back substitution needed.
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero_el())
                .min_by_key(|&i| m.get(i, c).size())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for i in r + 1..m.rows {
                if m.get(i, c).is_zero_el() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero_el() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&f.mul(pj));
                    m.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel `{v : m·v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero_in(&self.ctx); self.cols];
            v[f] = T::one_in(&self.ctx);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = red.get(row, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `ker(m − λ·I)`.
    pub fn eigenspace(&self, lambda: i64) -> Vec<Vec<T>> {
        assert!(self.is_square(), "eigenspace of a non-square matrix");
        let shift = T::from_rational(&self.ctx, &Rational::from_integer(lambda.into()));
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i).sub(&shift);
            m.set(i, i, v);
        }
        m.kernel_basis()
    }

    /// Determinant by elimination. Panics on non-square input.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one_in(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n)
                .filter(|&i| !m.get(i, c).is_zero_el())
                .min_by_key(|&i| m.get(i, c).size())
            else {
                return T::zero_in(&self.ctx);
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv();
            for i in c + 1..n {
                if m.get(i, c).is_zero_el() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Sub-matrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self::new(&self.ctx, rows.len(), cols.len(), entries)
    }
}

impl<T: Scalar> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row space of a fixed list of vectors, supporting membership tests and
/// coordinates with respect to the original vectors.
#[derive(Clone, Debug)]
pub struct Span<T: Scalar> {
    dim: usize,
    ctx: T::Ctx,
    generators: usize,
    /// Echelon rows `[reduced | transform]`; reduced part has pivots `pivots`.
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Span<T> {
    pub fn new(ctx: &T::Ctx, dim: usize, vectors: &[Vec<T>]) -> Self {
        let k = vectors.len();
        let aug: Vec<Vec<T>> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert_eq!(v.len(), dim);
                let mut row = v.clone();
                row.extend((0..k).map(|j| if i == j { T::one_in(ctx) } else { T::zero_in(ctx) }));
                row
            })
            .collect();
        let m = ExactMatrix::from_rows(ctx, dim + k, &aug);
        let (red, all_pivots) = m.rref();
        let pivots: Vec<usize> = all_pivots.into_iter().take_while(|&p| p < dim).collect();
        let rows = (0..pivots.len()).map(|i| red.row(i)).collect();
        Span {
            dim,
            ctx: ctx.clone(),
            generators: k,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.generators
    }

    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut w: Vec<T> = v.to_vec();
        w.extend((0..self.generators).map(|_| T::zero_in(&self.ctx)));
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero_el() {
                continue;
            }
            let f = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                if !rj.is_zero_el() {
                    *wj = wj.sub(&f.mul(rj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v)[..self.dim].iter().all(T::is_zero_el)
    }

    /// Coefficients `c` with `Σ cᵢ·generatorᵢ = v`, if `v` is in the span.
    /// Unique when the generators are independent.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        let w = self.reduce(v);
        if !w[..self.dim].iter().all(T::is_zero_el) {
            return None;
        }
        Some(w[self.dim..].iter().map(T::neg).collect())
    }
}

/// Basis of the intersection of two row spaces inside `T^dim`.
pub fn intersect<T: Scalar>(ctx: &T::Ctx, dim: usize, a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve x·A = y·B: kernel of the (|a|+|b|) × dim stacked system, transposed.
    let mut cols: Vec<Vec<T>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(T::neg).collect()));
    let system = ExactMatrix::from_cols(ctx, dim, &cols);
    let mut out: Vec<Vec<T>> = system
        .kernel_basis()
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![T::zero_in(ctx); dim];
            for (c, row) in coeffs.iter().zip(a) {
                if c.is_zero_el() {
                    continue;
                }
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj = vj.add(&c.mul(rj));
                }
            }
            v
        })
        .collect();
    // Dependent generators in `a` or `b` produce redundant kernel vectors.
    let m = ExactMatrix::from_rows(ctx, dim, &out);
    let (red, pivots) = m.rref();
    out = (0..pivots.len()).map(|i| red.row(i)).collect();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, FunctionField, NumberField, RatFunc};

    fn q(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect();
        ExactMatrix::from_rows(&(), cols, &data)
    }

    #[test]
    fn identity_rank_and_kernel() {
        let id = ExactMatrix::<Rational>::identity(&(), 2);
        assert_eq!(id.rank(), 2);
        assert!(id.kernel_basis().is_empty());
        let z = ExactMatrix::<Rational>::zeros(&(), 3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);
    }

    fn func1() -> FunctionField {
        FunctionField::new(NumberField::rationals(), vec!["t1".into()])
    }

    #[test]
    fn rank_over_function_field() {
        let k = func1();
        let t = k.param(0);
        let one: RatFunc = RatFunc::one_in(&k);
        let m = ExactMatrix::from_rows(&k, 2, &[vec![t.clone(), t.mul(&t)], vec![one, t.clone()]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_over_function_field() {
        let k = func1();
        let t = k.param(0);
        let m = ExactMatrix::from_rows(&k, 2, &[vec![RatFunc::one_in(&k), t.clone()]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        // proportional to (−t, 1)
        assert_eq!(ker[0][0], t.neg().mul(&ker[0][1]));
        assert!(m.mul_vec(&ker[0]).iter().all(Scalar::is_zero_el));
    }

    #[test]
    fn eigenspaces_of_diagonal() {
        let d = q(&[&[3, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(d.eigenspace(1).len(), 2);
        assert!(d.eigenspace(0).is_empty());
        for v in d.eigenspace(1) {
            let dv = d.mul_vec(&v);
            assert!(dv.iter().zip(&v).all(|(a, b)| a == b));
        }
    }

    /// ad(diag(1,0)) on the matrix units E11, E12, E21, E22 of gl2, computed
    /// entrywise: [D, E_rs] = (d_r − d_s) E_rs.
    #[test]
    fn root_space_of_gl2() {
        let d = [1i64, 0];
        let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let mut ad = ExactMatrix::<Rational>::zeros(&(), 4, 4);
        for (j, &(r, s)) in units.iter().enumerate() {
            ad.set(j, j, rat(d[r] - d[s], 1));
        }
        let root = ad.eigenspace(1);
        assert_eq!(root.len(), 1);
        assert_eq!(root[0], vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn rows_r_2r_r_plus_s() {
        let r = [1i64, -2, 5];
        let s = [0i64, 3, 1];
        let rows: Vec<Vec<i64>> = vec![
            r.to_vec(),
            r.iter().map(|x| 2 * x).collect(),
            r.iter().zip(&s).map(|(a, b)| a + b).collect(),
            s.to_vec(),
            r.iter().zip(&s).map(|(a, b)| 3 * a - b).collect(),
        ];
        let refs: Vec<&[i64]> = rows.iter().map(|v| v.as_slice()).collect();
        let m = q(&refs);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis().len(), 1);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m = q(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(−6−20) + 1(−2−0) = −54
        assert_eq!(m.determinant(), rat(-54, 1));
    }

    #[test]
    fn span_coordinates() {
        let gens = vec![vec![rat(1, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(1, 1)]];
        let s = Span::new(&(), 3, &gens);
        let v = vec![rat(2, 1), rat(5, 1), rat(3, 1)];
        assert_eq!(s.coordinates(&v), Some(vec![rat(2, 1), rat(3, 1)]));
        assert!(!s.contains(&[rat(1, 1), rat(0, 1), rat(0, 1)]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = vec![vec![rat(1, 1), rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(0, 1)]];
        let b = vec![vec![rat(0, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 1)]];
        let i = intersect(&(), 3, &a, &b);
        assert_eq!(i, vec![vec![rat(0, 1), rat(1, 1), rat(0, 1)]]);
    }
}
