//! Turns an abelian subalgebra of codimension 1 (any algebra) or codimension 2
//! (nilpotent algebra) into an abelian ideal of the same dimension.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::lie::{series, LieAlgebra, SeriesKind};
use crate::linalg::{axpy, is_zero_vec, scale_vec, Matrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codim {
    One,
    Two,
}

/// Audit record of one construction. Vectors are in the original basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace<F: Field> {
    pub codim: Codim,
    /// Reason the input was returned unchanged, if it was.
    pub short_circuit: Option<String>,
    /// Adapted basis `e_1, ..., e_n` after relabelling and rescaling.
    pub basis: Vec<Vec<F>>,
    pub swaps: Vec<String>,
    /// `(vector, factor)` for each rescaling.
    pub rescales: Vec<(String, F)>,
    /// `α_{j1}` for `j = 2..n` (codim 1) or `α_{j2}` for `j = 3..n` (codim 2).
    pub coefficients: Vec<F>,
    /// `v_j` for `j = 2..n` (codim 1) or `j = 4..n` (codim 2).
    pub v: Vec<Vec<F>>,
    pub ell: Option<usize>,
    /// `λ` with `[e_1, [e_2, e_3]] = λ [e_2, e_3]`.
    pub lambda: Option<F>,
    pub checks: Vec<(String, bool)>,
    pub output: Subspace<F>,
}

impl<F: Field> ConstructionTrace<F> {
    fn short(codim: Codim, reason: &str, a: &Subspace<F>) -> Self {
        ConstructionTrace {
            codim,
            short_circuit: Some(reason.to_string()),
            basis: Vec::new(),
            swaps: Vec::new(),
            rescales: Vec::new(),
            coefficients: Vec::new(),
            v: Vec::new(),
            ell: None,
            lambda: None,
            checks: Vec::new(),
            output: a.clone(),
        }
    }

    /// Recomputes `v_j` from the recorded basis and coefficients.
    pub fn v_consistent(&self) -> bool {
        if self.short_circuit.is_some() {
            return true;
        }
        // codim 1: v_j = α_{j1} e_2 - e_j, j >= 2; codim 2: v_j = α_{j2} e_3 - e_j, j >= 4
        let (pivot, first, offset) = match self.codim {
            Codim::One => (1, 1, 0),
            Codim::Two => (2, 3, 1),
        };
        self.v.iter().enumerate().all(|(idx, v)| {
            let c = &self.coefficients[idx + offset];
            axpy(&-F::one(), &self.basis[first + idx], &scale_vec(c, &self.basis[pivot])) == *v
        })
    }
}

/// Coordinates of `w` in the basis given by the columns of `b`.
fn coords<F: Field>(b: &Matrix<F>, w: &[F]) -> Vec<F> {
    b.solve(w).expect("basis matrix is invertible")
}

fn columns<F: Field>(n: usize, vs: &[Vec<F>]) -> Matrix<F> {
    Matrix::from_rows(vs.to_vec(), n).transpose()
}

fn check_abelian_of_dim<F: Field>(g: &LieAlgebra<F>, a: &Subspace<F>, dim: usize) -> Result<()> {
    if a.ambient() != g.dim() {
        return Err(Error::AmbientMismatch { expected: g.dim(), found: a.ambient() });
    }
    if a.dim() != dim {
        return Err(Error::PreconditionFailed(format!("subalgebra has dimension {}, expected {dim}", a.dim())));
    }
    if !g.is_abelian_subspace(a)? {
        return Err(Error::PreconditionFailed("subspace is not an abelian subalgebra".into()));
    }
    Ok(())
}

fn verified<F: Field>(g: &LieAlgebra<F>, ideal: &Subspace<F>, dim: usize) -> Result<()> {
    if ideal.dim() != dim || !g.is_abelian_ideal(ideal)? {
        return Err(Error::MaximalityViolated(format!(
            "constructed subspace of dimension {} is not an abelian ideal of dimension {dim}",
            ideal.dim()
        )));
    }
    Ok(())
}

/// Abelian ideal of dimension `n-1` from an abelian subalgebra `a` of dimension `n-1`.
pub fn codim1_ideal<F: Field>(g: &LieAlgebra<F>, a: &Subspace<F>) -> Result<(Subspace<F>, ConstructionTrace<F>)> {
    let n = g.dim();
    if n == 0 {
        return Err(Error::PreconditionFailed("zero-dimensional algebra".into()));
    }
    check_abelian_of_dim(g, a, n - 1)?;
    if a.contains(&g.derived_algebra())? {
        return Ok((a.clone(), ConstructionTrace::short(Codim::One, "[g,g] lies in a", a)));
    }
    let mut trace = ConstructionTrace::short(Codim::One, "", a);
    trace.short_circuit = None;

    let p = a.first_unit_outside().expect("a is a proper subspace");
    let e1 = crate::linalg::unit_vector::<F>(n, p);
    let mut rest = a.basis_vectors();
    let k = rest
        .iter()
        .position(|b| !a.contains_vector(&g.bracket(&e1, b).expect("ambient vectors")).unwrap_or(true))
        .expect("[g,g] not in a means some [e1, b] leaves a");
    if k != 0 {
        rest.swap(0, k);
        trace.swaps.push(format!("a-basis vector {} moved to e2", k + 1));
    }
    let mut basis = vec![e1.clone()];
    basis.extend(rest);
    let alpha_of = |basis: &[Vec<F>], j: usize| -> F {
        let w = g.bracket(&basis[0], &basis[j]).expect("ambient vectors");
        coords(&columns(n, basis), &w)[0].clone()
    };
    let a21 = alpha_of(&basis, 1);
    if a21.is_zero() {
        return Err(Error::MaximalityViolated("[e1, e2] has no e1-component".into()));
    }
    if !a21.is_one() {
        let f = a21.checked_inv()?;
        basis[1] = scale_vec(&f, &basis[1]);
        trace.rescales.push(("e2".into(), f));
    }
    let coefficients: Vec<F> = (1..n).map(|j| alpha_of(&basis, j)).collect();
    let v: Vec<Vec<F>> =
        (1..n).map(|j| axpy(&-F::one(), &basis[j], &scale_vec(&coefficients[j - 1], &basis[1]))).collect();
    let mut gens = vec![g.bracket(&basis[0], &basis[1])?];
    gens.extend(v.iter().cloned());
    let ideal = Subspace::span(n, gens)?;
    trace.basis = basis;
    trace.coefficients = coefficients;
    trace.v = v;
    trace.checks.push(("v_j central".into(), trace.v.iter().all(|v| g.center().contains_vector(v).unwrap_or(false))));
    trace.checks.push(("dim [g,g] = 1".into(), g.derived_algebra().dim() == 1));
    trace.output = ideal.clone();
    if let Some((name, _)) = trace.checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::MaximalityViolated(format!("check failed: {name}")));
    }
    verified(g, &ideal, n - 1)?;
    Ok((ideal, trace))
}

/// Abelian ideal of dimension `n-2` from an abelian subalgebra `a` of
/// dimension `n-2` of a nilpotent algebra with no larger abelian subalgebra.
pub fn codim2_ideal_nilpotent<F: Field>(
    g: &LieAlgebra<F>,
    a: &Subspace<F>,
) -> Result<(Subspace<F>, ConstructionTrace<F>)> {
    let n = g.dim();
    if n < 2 {
        return Err(Error::PreconditionFailed("dimension below 2".into()));
    }
    if !series(g, SeriesKind::LowerCentral).reached_zero {
        return Err(Error::PreconditionFailed("algebra is not nilpotent".into()));
    }
    check_abelian_of_dim(g, a, n - 2)?;
    let normalizer = g.normalizer(a)?;
    if normalizer.is_full() {
        return Ok((a.clone(), ConstructionTrace::short(Codim::Two, "normalizer of a is g", a)));
    }
    if normalizer.dim() != n - 1 {
        return Err(Error::MaximalityViolated(format!("normalizer has dimension {}", normalizer.dim())));
    }
    let mut trace = ConstructionTrace::short(Codim::Two, "", a);
    trace.short_circuit = None;

    let bracket = |x: &[F], y: &[F]| g.bracket(x, y).expect("ambient vectors");
    let in_space = |s: &Subspace<F>, v: &[F]| s.contains_vector(v).expect("ambient vectors");

    let e1 = crate::linalg::unit_vector::<F>(n, normalizer.first_unit_outside().expect("proper normalizer"));
    let e2 = normalizer.basis_vectors().into_iter().find(|r| !in_space(a, r)).expect("normalizer strictly contains a");
    let mut rest = a.basis_vectors();
    let k = rest
        .iter()
        .position(|c| !in_space(a, &bracket(&e1, c)))
        .ok_or_else(|| Error::MaximalityViolated("e1 normalizes a".into()))?;
    if k != 0 {
        rest.swap(0, k);
        trace.swaps.push(format!("a-basis vector {} moved to e3", k + 1));
    }
    let mut basis = vec![e1, e2];
    basis.extend(rest);
    let alpha_of = |basis: &[Vec<F>], j: usize| -> F {
        let w = bracket(&basis[0], &basis[j]);
        coords(&columns(n, basis), &w)[1].clone()
    };
    let a32 = alpha_of(&basis, 2);
    if a32.is_zero() {
        return Err(Error::MaximalityViolated("[e1, e3] has no e2-component".into()));
    }
    if !a32.is_one() {
        basis[1] = scale_vec(&a32, &basis[1]);
        trace.rescales.push(("e2".into(), a32));
    }
    let coefficients: Vec<F> = (2..n).map(|j| alpha_of(&basis, j)).collect();
    let v: Vec<Vec<F>> =
        (3..n).map(|j| axpy(&-F::one(), &basis[j], &scale_vec(&coefficients[j - 2], &basis[2]))).collect();
    let a1 = Subspace::span(n, v.clone())?;

    let center = g.center();
    let z = bracket(&basis[1], &basis[2]);
    let nn = g.bracket_spaces(&normalizer, &normalizer)?;
    trace.checks.push(("[e2,e3] != 0".into(), !is_zero_vec(&z)));
    trace.checks.push(("[e2,e3] central".into(), in_space(&center, &z)));
    trace.checks.push(("[N,N] in Z(g)".into(), center.contains(&nn)?));
    let nv = v.iter().all(|vj| normalizer.basis_vectors().iter().all(|x| is_zero_vec(&bracket(x, vj))));
    trace.checks.push(("[N,v_j] = 0".into(), nv));
    let w = bracket(&basis[0], &z);
    trace.lambda =
        if is_zero_vec(&z) { None } else { Subspace::span(n, vec![z.clone()])?.coordinates(&w)?.map(|c| c[0].clone()) };
    trace.checks.push(("[e1,[e2,e3]] = lambda [e2,e3]".into(), trace.lambda.is_some()));

    // least l >= 1 with ad(e1)^l(e2) in a1
    let mut powers = vec![basis[1].clone()];
    let ell = loop {
        let next = bracket(&basis[0], powers.last().expect("nonempty"));
        powers.push(next);
        if in_space(&a1, powers.last().expect("nonempty")) {
            break powers.len() - 1;
        }
        if powers.len() > n + 1 {
            return Err(Error::MaximalityViolated("ad(e1) does not push e2 into a1".into()));
        }
    };
    trace.checks.push(("ad(e1)^(l-1)(e2) not in a1".into(), !in_space(&a1, &powers[ell - 1])));
    let mut gens = vec![powers[ell - 1].clone()];
    gens.extend(v.iter().cloned());
    let ideal = Subspace::span(n, gens)?;
    trace.basis = basis;
    trace.coefficients = coefficients;
    trace.v = v;
    trace.ell = Some(ell);
    trace.output = ideal.clone();
    if let Some((name, _)) = trace.checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::MaximalityViolated(format!("check failed: {name}")));
    }
    verified(g, &ideal, n - 2)?;
    Ok((ideal, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::families;
    use crate::Q;

    #[test]
    fn codim1_on_r2_like_algebra() {
        // [e1, e2] = e1 with a = span{e2}
        let g = LieAlgebra::<Q>::from_int_brackets("t", 2, &[(1, 2, &[(1, 1)])]).unwrap();
        let a = Subspace::coordinate(2, &[1]);
        let (i, t) = codim1_ideal(&g, &a).unwrap();
        assert_eq!(i, Subspace::coordinate(2, &[0]));
        assert!(is_zero_vec(&t.v[0]));
        assert!(t.v_consistent());
    }

    #[test]
    fn codim1_short_circuits() {
        let g = families::filiform::<Q>(5).unwrap();
        let a = Subspace::coordinate(5, &[1, 2, 3, 4]);
        let (i, t) = codim1_ideal(&g, &a).unwrap();
        assert_eq!(i, a);
        assert!(t.short_circuit.is_some());
        let ab = LieAlgebra::<Q>::abelian(3);
        let h = Subspace::coordinate(3, &[0, 2]);
        assert_eq!(codim1_ideal(&ab, &h).unwrap().0, h);
    }

    #[test]
    fn codim1_rejects_bad_input() {
        let g = families::heisenberg::<Q>();
        let a = Subspace::coordinate(3, &[0, 1]);
        assert!(matches!(codim1_ideal(&g, &a), Err(Error::PreconditionFailed(_))));
        let a = Subspace::coordinate(3, &[2]);
        assert!(matches!(codim1_ideal(&g, &a), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn codim2_hand_trace_g56() {
        let g = families::nilpotent5::<Q>(6).unwrap();
        let a = Subspace::coordinate(5, &[1, 3, 4]);
        let (i, t) = codim2_ideal_nilpotent(&g, &a).unwrap();
        assert_eq!(i, Subspace::coordinate(5, &[2, 3, 4]));
        assert_eq!(t.ell, Some(1));
        assert_eq!(t.basis[0], crate::linalg::unit_vector::<Q>(5, 0));
        assert_eq!(t.basis[1], crate::linalg::unit_vector::<Q>(5, 2));
        assert!(t.v_consistent());
        let c2 = Subspace::coordinate(5, &[2, 3, 4]);
        let (j, t) = codim2_ideal_nilpotent(&g, &c2).unwrap();
        assert_eq!(j, c2);
        assert!(t.short_circuit.is_some());
    }

    #[test]
    fn codim2_requires_nilpotent() {
        let g = families::prop42_g1::<Q>();
        let a = Subspace::coordinate(4, &[1, 3]);
        assert!(matches!(codim2_ideal_nilpotent(&g, &a), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn codim2_detects_non_maximal_input() {
        // span{e2, e4, e5} sits inside the 4-dimensional abelian span{e2, ..., e5}
        let g = families::filiform::<Q>(5).unwrap();
        let a = Subspace::coordinate(5, &[1, 3, 4]);
        assert!(matches!(codim2_ideal_nilpotent(&g, &a), Err(Error::MaximalityViolated(_))));
    }
}
