//! Exact dense linear algebra and canonical subspaces.

use std::fmt;

use crate::arith::{Field, GaussianRational};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.rows {
            return Err(Error::AmbientMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::AmbientMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Entries flattened row-major.
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Unique reduced row echelon form; pivots chosen by column order.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].checked_inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let Rref { matrix, pivots, .. } = self.rref();
        let n = self.cols;
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix[(r, free)].clone();
            }
            basis.push(v);
        }
        Subspace::span(n, basis).expect("kernel vectors have ambient length")
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Coordinates `y` with `M y = b`, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut y = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            y[p] = matrix[(r, self.cols)].clone();
        }
        Some(y)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_gaussian(&self) -> Matrix<GaussianRational> {
        self.map(|x| x.to_gaussian())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.token()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn axpy<F: Field>(alpha: &F, x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| alpha.clone() * a.clone() + b.clone()).collect()
}

pub fn scale_vec<F: Field>(alpha: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|a| alpha.clone() * a.clone()).collect()
}

pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Subspace of `F^n` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::zeros(0, n), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    pub fn span(n: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: bad.len() });
        }
        Ok(Self::from_matrix(&Matrix::from_rows(vectors, n)))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let Rref { matrix, pivots, rank } = m.rref();
        let rows = (0..rank).map(|i| matrix.row(i).to_vec()).collect();
        Subspace { ambient: m.cols(), basis: Matrix::from_rows(rows, m.cols()), pivots }
    }

    /// Span of standard basis vectors (0-based indices).
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        Self::span(n, indices.iter().map(|&i| unit_vector(n, i)).collect()).expect("indices in range")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_vec(&self, v: &[F]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    fn check_space(&self, other: &Subspace<F>) -> Result<()> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Coefficients of `v` against the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>> {
        self.check_vec(v)?;
        let coeffs: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (r, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                rest = axpy(&-c.clone(), self.basis.row(r), &rest);
            }
        }
        Ok(is_zero_vec(&rest).then_some(coeffs))
    }

    pub fn contains_vector(&self, v: &[F]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_space(other)?;
        for i in 0..other.dim() {
            if !self.contains_vector(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_space(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, rows)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_space(other)?;
        let (p, q) = (self.dim(), other.dim());
        // columns a_1..a_p, -b_1..-b_q; a kernel vector (λ, μ) gives Σ λ_i a_i ∈ A ∩ B
        let mut m = Matrix::zeros(self.ambient, p + q);
        for i in 0..p {
            for r in 0..self.ambient {
                m[(r, i)] = self.basis[(i, r)].clone();
            }
        }
        for j in 0..q {
            for r in 0..self.ambient {
                m[(r, p + j)] = -other.basis[(j, r)].clone();
            }
        }
        let ker = m.kernel();
        let vectors = ker.basis_vectors().into_iter().map(|k| self.combine(&k[..p])).collect();
        Subspace::span(self.ambient, vectors)
    }

    /// `Σ c_i b_i` over the echelon basis.
    pub fn combine(&self, coeffs: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                v = axpy(c, self.basis.row(i), &v);
            }
        }
        v
    }

    /// `{x : <x, v> = 0 for all v}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// First standard basis vector outside the subspace.
    pub fn first_unit_outside(&self) -> Option<usize> {
        (0..self.ambient).find(|i| !self.pivots.contains(i))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        Subspace::from_matrix(&self.basis.map(f))
    }

    pub fn to_gaussian(&self) -> Subspace<GaussianRational> {
        self.map(|x| x.to_gaussian())
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim())
            .map(|i| {
                let r: Vec<String> = self.basis.row(i).iter().map(|x| x.token()).collect();
                format!("({})", r.join(" "))
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Q, QI};
    use num_rational::BigRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = Matrix::<Q>::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn proportional_rows_collapse() {
        let m = Matrix::<Q>::from_i64(&[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn gaussian_rows_have_pivots_two_and_four() {
        let i = QI::new(BigRational::from_integer(0.into()), BigRational::from_integer(1.into()));
        let o = QI::from_i64(0);
        let l = QI::from_i64(1);
        let m = Matrix::from_rows(vec![vec![o.clone(), l.clone(), i, o.clone()], vec![o.clone(), o.clone(), o, l]], 4);
        let r = m.rref();
        assert_eq!(r.pivots, vec![1, 3]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(Matrix::<Q>::zeros(2, 2).kernel(), Subspace::full(2));
        assert_eq!(Matrix::<Q>::identity(3).kernel(), Subspace::zero(3));
    }

    #[test]
    fn kernel_of_ad_e1_in_heisenberg() {
        // ad(e1): e2 -> e3, columns are images of e1, e2, e3
        let ad = Matrix::<Q>::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
        assert_eq!(ad.kernel(), Subspace::coordinate(3, &[0, 2]));
    }

    #[test]
    fn subspace_queries() {
        let a = Subspace::<Q>::coordinate(4, &[1, 3]);
        assert!(a.contains_vector(&[q(0), q(1), q(0), q(1)]).unwrap());
        let b = Subspace::<Q>::coordinate(3, &[0, 1]);
        let c = Subspace::<Q>::coordinate(3, &[1, 2]);
        assert_eq!(b.intersection(&c).unwrap(), Subspace::coordinate(3, &[1]));
        let n = 6;
        let s = Subspace::<Q>::coordinate(n, &[1]).sum(&Subspace::coordinate(n, &[2, 3, 4, 5])).unwrap();
        assert_eq!(s, Subspace::coordinate(n, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::<Q>::full(2);
        let b = Subspace::<Q>::full(3);
        assert_eq!(a.sum(&b), Err(Error::AmbientMismatch { expected: 2, found: 3 }));
        assert!(a.contains_vector(&[q(1)]).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::<Q>::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m.solve(&[q(3), q(2)]), Some(vec![q(1), q(1)]));
        assert!(Matrix::<Q>::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
