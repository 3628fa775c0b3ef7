//! Lie algebras given by structure constants.

mod structure;

pub use structure::{
    classify, classify_with, derivation_algebra, detect_sl2_plus_abelian, killing_radical, matrices_act_nilpotently,
    series, SeriesKind, SeriesReport, StructureReport,
};

use std::fmt;

use crate::arith::{Field, FieldTag, GaussianRational};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, Matrix, Subspace};

/// `(i, j, [e_i, e_j])` with 1-based indices and the bracket as `(k, coefficient)` terms.
pub type Bracket<F> = (usize, usize, Vec<(usize, F)>);
/// [`Bracket`] with integer coefficients.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

/// A finite-dimensional Lie algebra `[e_i, e_j] = Σ_k c_ij^k e_k`.
///
/// Constants are stored densely for every ordered pair with antisymmetry
/// enforced on write, so `[e_j, e_i] = -[e_i, e_j]` always holds.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    name: String,
    n: usize,
    consts: Vec<F>,
    labels: Vec<String>,
}

impl<F: Field> LieAlgebra<F> {
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            name: format!("abelian({n})"),
            n,
            consts: vec![F::zero(); n * n * n],
            labels: (1..=n).map(|i| format!("e{i}")).collect(),
        }
    }

    /// Builds from brackets `[e_i, e_j] = Σ c e_k` with 1-based indices and `i < j`,
    /// then checks the Jacobi identity.
    pub fn from_brackets(name: &str, n: usize, brackets: &[Bracket<F>]) -> Result<Self> {
        let mut g = Self::abelian(n).with_name(name);
        for (i, j, terms) in brackets {
            if !(1 <= *i && i < j && *j <= n) {
                return Err(Error::BadParameter(format!("bracket index pair ({i},{j}) for dimension {n}")));
            }
            let mut v = vec![F::zero(); n];
            for (k, c) in terms {
                if !(1..=n).contains(k) {
                    return Err(Error::BadParameter(format!("component e{k} out of range")));
                }
                v[k - 1] = v[k - 1].clone() + c.clone();
            }
            g.set_bracket(i - 1, j - 1, &v);
        }
        g.validate()?;
        Ok(g)
    }

    /// Integer-coefficient shorthand for [`LieAlgebra::from_brackets`].
    pub fn from_int_brackets(name: &str, n: usize, brackets: &[IntBracket<'_>]) -> Result<Self> {
        let b: Vec<_> =
            brackets.iter().map(|(i, j, t)| (*i, *j, t.iter().map(|&(k, c)| (k, F::from_i64(c))).collect())).collect();
        Self::from_brackets(name, n, &b)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field_tag(&self) -> FieldTag {
        F::TAG
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// `c_ij^k`, 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.consts[self.idx(i, j, k)]
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v` (0-based). Bypasses validation.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[F]) {
        assert_eq!(v.len(), self.n);
        if i == j {
            assert!(is_zero_vec(v), "[x, x] must vanish");
            return;
        }
        for (k, c) in v.iter().enumerate() {
            let a = self.idx(i, j, k);
            let b = self.idx(j, i, k);
            self.consts[a] = c.clone();
            self.consts[b] = -c.clone();
        }
    }

    /// `[e_i, e_j]` as a coordinate vector (0-based).
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        let start = self.idx(i, j, 0);
        self.consts[start..start + self.n].to_vec()
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j` (0-based).
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<F>)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = self.basis_bracket(i, j);
                if !is_zero_vec(&v) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![F::zero(); self.n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if i == j {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                let start = self.idx(i, j, 0);
                out = axpy(&c, &self.consts[start..start + self.n], &out);
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)`: column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_len(x)?;
        let mut m = Matrix::<F>::zeros(self.n, self.n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..self.n {
                for k in 0..self.n {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] = m[(k, j)].clone() + xi.clone() * c.clone();
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad(&crate::linalg::unit_vector(self.n, i)).expect("unit vector has ambient length")
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    /// Violations are reported with 1-based indices.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let e = |i: usize| crate::linalg::unit_vector::<F>(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&e(i), &self.basis_bracket(j, k))?;
                    let b = self.bracket(&e(j), &self.basis_bracket(k, i))?;
                    let c = self.bracket(&e(k), &self.basis_bracket(i, j))?;
                    let sum: Vec<F> =
                        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x.clone() + y.clone() + z.clone()).collect();
                    if !is_zero_vec(&sum) {
                        let shown: Vec<String> = sum.iter().map(|s| s.token()).collect();
                        return Err(Error::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            sum: format!("({})", shown.join(", ")),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|c| c.is_zero())
    }

    fn check_space(&self, s: &Subspace<F>) -> Result<()> {
        if s.ambient() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: s.ambient() });
        }
        Ok(())
    }

    /// `[A, B]`.
    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_space(a)?;
        self.check_space(b)?;
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                let v = self.bracket(&x, &y)?;
                if !is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.n, vs)
    }

    pub fn derived_algebra(&self) -> Subspace<F> {
        Subspace::span(self.n, self.nonzero_brackets().into_iter().map(|(_, _, v)| v).collect())
            .expect("bracket vectors have ambient length")
    }

    pub fn center(&self) -> Subspace<F> {
        self.centralizer(&Subspace::full(self.n)).expect("full space matches")
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_space(s)?;
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            rows.extend(self.ad(&v)?.row_vecs());
        }
        if rows.is_empty() {
            return Ok(Subspace::full(self.n));
        }
        Ok(Matrix::from_rows(rows, self.n).kernel())
    }

    /// `{x : [x, S] ⊆ S}` for a subalgebra `S`.
    pub fn normalizer(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        let ann = s.annihilator().basis_vectors();
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            let ad = self.ad(&v)?;
            // φ([x, v]) = -φ(ad(v) x)
            for phi in &ann {
                let row: Vec<F> = (0..self.n).map(|c| crate::linalg::dot(phi, &ad.column(c))).collect();
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(self.n));
        }
        Ok(Matrix::from_rows(rows, self.n).kernel())
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        let b = self.bracket_spaces(s, s)?;
        s.contains(&b)
    }

    /// Pairwise brackets of a basis vanish.
    pub fn is_abelian_subspace(&self, s: &Subspace<F>) -> Result<bool> {
        self.check_space(s)?;
        let vs = s.basis_vectors();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if !is_zero_vec(&self.bracket(&vs[a], &vs[b])?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> Result<bool> {
        let b = self.bracket_spaces(&Subspace::full(self.n), s)?;
        s.contains(&b)
    }

    pub fn is_abelian_ideal(&self, s: &Subspace<F>) -> Result<bool> {
        Ok(self.is_abelian_subspace(s)? && self.is_ideal(s)?)
    }

    /// `a ⊕ b` with zero cross brackets; `b`'s basis follows `a`'s.
    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> LieAlgebra<F> {
        let (n, m) = (self.n, other.n);
        let mut g = LieAlgebra::abelian(n + m).with_name(&format!("{}+{}", self.name, other.name));
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = v;
            w.resize(n + m, F::zero());
            g.set_bracket(i, j, &w);
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = vec![F::zero(); n];
            w.extend(v);
            g.set_bracket(n + i, n + j, &w);
        }
        g
    }

    /// Structure constants in the basis `f_j = Σ_i T_ij e_i` (columns of `T`).
    pub fn change_of_basis(&self, t: &Matrix<F>) -> Result<LieAlgebra<F>> {
        if t.rows() != self.n || t.cols() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: t.rows().max(t.cols()) });
        }
        let inv = t.inverse().ok_or(Error::SingularTransform)?;
        let cols: Vec<Vec<F>> = (0..self.n).map(|j| t.column(j)).collect();
        let mut g = LieAlgebra::abelian(self.n).with_name(&self.name).with_labels(self.labels.clone());
        for a in 0..self.n {
            for b in a + 1..self.n {
                let w = self.bracket(&cols[a], &cols[b])?;
                g.set_bracket(a, b, &inv.mul_vec(&w)?);
            }
        }
        Ok(g)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> LieAlgebra<G> {
        LieAlgebra {
            name: self.name.clone(),
            n: self.n,
            consts: self.consts.iter().map(f).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_gaussian(&self) -> LieAlgebra<GaussianRational> {
        self.map_field(|c| c.to_gaussian())
    }
}

impl<F: Field> fmt::Debug for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, field {}):", self.name, self.n, F::TAG)?;
        for (i, j, v) in self.nonzero_brackets() {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}*{}", c.token(), self.labels[k]))
                .collect();
            write!(f, " [{},{}]={}", self.labels[i], self.labels[j], terms.join("+"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::families;
    use crate::linalg::unit_vector;
    use crate::Q;

    fn e(n: usize, i: usize) -> Vec<Q> {
        unit_vector(n, i - 1)
    }

    #[test]
    fn heisenberg_bracket() {
        let g = families::heisenberg::<Q>();
        assert_eq!(g.bracket(&e(3, 1), &e(3, 2)).unwrap(), e(3, 3));
        let x = vec![Q::from_i64(2), Q::from_i64(-1), Q::from_i64(5)];
        assert!(is_zero_vec(&g.bracket(&x, &x).unwrap()));
        assert!(g.bracket(&e(2, 1), &e(3, 1)).is_err());
    }

    #[test]
    fn g56_bracket_e2_e3() {
        let g = families::nilpotent5::<Q>(6).unwrap();
        assert_eq!(g.bracket(&e(5, 2), &e(5, 3)).unwrap(), e(5, 5));
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(LieAlgebra::<Q>::abelian(4).validate().is_ok());
        assert!(families::prop42_g4::<Q>(Q::from_i64(2)).validate().is_ok());
        let mut g = families::nilpotent4::<Q>();
        g.set_bracket(1, 2, &e(4, 2));
        match g.validate() {
            Err(Error::Jacobi { i, j, k, .. }) => assert_eq!((i, j, k), (1, 2, 3)),
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn centralizer_examples() {
        let n3 = families::heisenberg::<Q>();
        assert_eq!(n3.center(), Subspace::coordinate(3, &[2]));
        let ab = LieAlgebra::<Q>::abelian(4);
        assert_eq!(ab.centralizer(&Subspace::coordinate(4, &[1])).unwrap(), Subspace::full(4));
        let f5 = families::filiform::<Q>(5).unwrap();
        let a = Subspace::coordinate(5, &[1, 2, 3, 4]);
        assert_eq!(f5.centralizer(&a).unwrap(), a);
    }

    #[test]
    fn normalizer_examples() {
        for n in 4..=7 {
            let f = families::filiform::<Q>(n).unwrap();
            let s = Subspace::coordinate(n, &[0, n - 1]);
            assert_eq!(f.normalizer(&s).unwrap(), Subspace::coordinate(n, &[0, n - 2, n - 1]), "n = {n}");
        }
        let g = families::nilpotent5::<Q>(6).unwrap();
        let ideal = g.derived_algebra();
        assert_eq!(g.normalizer(&ideal).unwrap(), Subspace::full(5));
        let s = Subspace::coordinate(5, &[1, 3, 4]);
        assert_eq!(g.normalizer(&s).unwrap(), Subspace::coordinate(5, &[1, 2, 3, 4]));
        assert_eq!(g.normalizer(&Subspace::coordinate(5, &[0, 1])), Err(Error::NotSubalgebra));
    }

    #[test]
    fn direct_sum_examples() {
        let s = LieAlgebra::<Q>::abelian(2).direct_sum(&LieAlgebra::abelian(3));
        assert!(s.is_abelian());
        assert_eq!(s.dim(), 5);
        let n3c3 = families::heisenberg::<Q>().direct_sum(&LieAlgebra::abelian(3));
        assert_eq!(n3c3.dim(), 6);
        assert!(n3c3.validate().is_ok());
        let r2 = families::r2::<Q>();
        let g1 = families::prop42_g1::<Q>();
        let sum = r2.direct_sum(&r2);
        assert_eq!(sum.nonzero_brackets(), g1.nonzero_brackets());
    }

    #[test]
    fn change_of_basis_examples() {
        let n3 = families::heisenberg::<Q>();
        assert_eq!(n3.change_of_basis(&Matrix::identity(3)).unwrap().nonzero_brackets(), n3.nonzero_brackets());
        let swap = Matrix::<Q>::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let h = n3.change_of_basis(&swap).unwrap();
        assert_eq!(h.basis_bracket(0, 1), vec![Q::from_i64(0), Q::from_i64(0), Q::from_i64(-1)]);
        let sing = Matrix::<Q>::from_i64(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(n3.change_of_basis(&sing).unwrap_err(), Error::SingularTransform);
    }
}
