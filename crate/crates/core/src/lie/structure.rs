use crate::arith::Field;
use crate::engine::{decide_abelian_ideal, Decision, EngineConfig, Mode};
use crate::linalg::{Matrix, Subspace};

use super::LieAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Terms of a lower central series `C^1 ⊇ C^2 ⊇ ...` or derived series `D^0 ⊇ D^1 ⊇ ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport<F: Field> {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace<F>>,
    /// Whether the last term is zero (otherwise the series stabilized).
    pub reached_zero: bool,
}

impl<F: Field> SeriesReport<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }
}

pub fn series<F: Field>(g: &LieAlgebra<F>, kind: SeriesKind) -> SeriesReport<F> {
    let full = Subspace::full(g.dim());
    let mut terms = vec![full.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = match kind {
            SeriesKind::LowerCentral => g.bracket_spaces(&full, last),
            SeriesKind::Derived => g.bracket_spaces(last, last),
        }
        .expect("series terms live in the ambient space");
        if &next == last {
            break;
        }
        terms.push(next);
    }
    let reached_zero = terms.last().unwrap().is_zero();
    SeriesReport { kind, terms, reached_zero }
}

/// Structural flags of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub dim: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_filiform: bool,
    pub is_semisimple: bool,
    pub is_characteristically_nilpotent: bool,
    /// `None` when the abelian-ideal decision ran out of budget.
    pub is_almost_abelian: Option<bool>,
    /// Smallest `c` with `C^{c+1} = 0`.
    pub nilpotency_class: Option<usize>,
    /// Smallest `d` with `D^d = 0`.
    pub derived_length: Option<usize>,
    /// Smallest `k >= 1` with `C^k` abelian.
    pub k_abelian_index: Option<usize>,
    pub derivation_dim: usize,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
}

pub fn classify<F: Field>(g: &LieAlgebra<F>) -> StructureReport {
    classify_with(g, &EngineConfig::default())
}

pub fn classify_with<F: Field>(g: &LieAlgebra<F>, config: &EngineConfig) -> StructureReport {
    let n = g.dim();
    let lcs = series(g, SeriesKind::LowerCentral);
    let der = series(g, SeriesKind::Derived);
    let is_nilpotent = lcs.reached_zero;
    let is_solvable = der.reached_zero;
    let lower_central_dims = lcs.dims();
    let is_filiform =
        is_nilpotent && n >= 3 && (2..=n).all(|i| lower_central_dims.get(i - 1).copied().unwrap_or(0) == n - i);
    let k_abelian_index = if is_nilpotent {
        lcs.terms.iter().position(|c| g.is_abelian_subspace(c).expect("term in ambient space")).map(|p| p + 1)
    } else {
        None
    };
    let (killing, _) = killing_radical(g);
    let is_semisimple = n > 0 && killing.rank() == n;
    let derivations = derivation_algebra(g);
    let is_characteristically_nilpotent = n > 0 && matrices_act_nilpotently(&derivations, n);
    let is_almost_abelian = if n == 0 {
        Some(false)
    } else {
        match decide_abelian_ideal(g, n - 1, Mode::Closure, config).decision {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    };
    StructureReport {
        dim: n,
        is_abelian: g.is_abelian(),
        is_nilpotent,
        is_solvable,
        is_filiform,
        is_semisimple,
        is_characteristically_nilpotent,
        is_almost_abelian,
        nilpotency_class: is_nilpotent.then(|| lcs.terms.len() - 1),
        derived_length: is_solvable.then(|| der.terms.len() - 1),
        k_abelian_index,
        derivation_dim: derivations.len(),
        lower_central_dims,
        derived_dims: der.dims(),
    }
}

/// Killing form `κ(e_i, e_j) = tr(ad e_i ad e_j)` and the solvable radical,
/// computed as the κ-orthogonal complement of `[g, g]`.
pub fn killing_radical<F: Field>(g: &LieAlgebra<F>) -> (Matrix<F>, Subspace<F>) {
    let n = g.dim();
    let ads: Vec<Matrix<F>> = (0..n).map(|i| g.ad_basis(i)).collect();
    let mut kappa = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j]).expect("square").trace();
            kappa[(i, j)] = t.clone();
            kappa[(j, i)] = t;
        }
    }
    let derived = g.derived_algebra();
    let radical = if derived.is_zero() {
        Subspace::full(n)
    } else {
        let rows: Vec<Vec<F>> =
            derived.basis_vectors().iter().map(|d| kappa.mul_vec(d).expect("ambient length")).collect();
        Matrix::from_rows(rows, n).kernel()
    };
    (kappa, radical)
}

/// Basis of `Der(g)`; `D e_c = Σ_r D[(r, c)] e_r`.
pub fn derivation_algebra<F: Field>(g: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    let n = g.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![F::zero(); n * n];
                // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], component k
                for m in 0..n {
                    let c = g.constant(i, j, m);
                    if !c.is_zero() {
                        row[var(k, m)] = row[var(k, m)].clone() + c.clone();
                    }
                }
                for r in 0..n {
                    let c = g.constant(r, j, k);
                    if !c.is_zero() {
                        row[var(r, i)] = row[var(r, i)].clone() - c.clone();
                    }
                    let c = g.constant(i, r, k);
                    if !c.is_zero() {
                        row[var(r, j)] = row[var(r, j)].clone() - c.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let space = if rows.is_empty() { Subspace::full(n * n) } else { Matrix::from_rows(rows, n * n).kernel() };
    space.basis_vectors().into_iter().map(|v| Matrix::from_entries(n, n, v)).collect()
}

/// Whether the linear span of `mats` acts nilpotently on `F^n`, i.e. the chain
/// `V ⊇ L V ⊇ L L V ⊇ ...` reaches zero. For a Lie algebra of matrices this holds
/// iff every element is a nilpotent matrix.
pub fn matrices_act_nilpotently<F: Field>(mats: &[Matrix<F>], n: usize) -> bool {
    let mut v = Subspace::full(n);
    for _ in 0..=n {
        if v.is_zero() {
            return true;
        }
        let mut images = Vec::new();
        for m in mats {
            for b in v.basis_vectors() {
                images.push(m.mul_vec(&b).expect("square matrices"));
            }
        }
        let next = Subspace::span(n, images).expect("ambient length");
        if next == v {
            return false;
        }
        v = next;
    }
    v.is_zero()
}

/// Recognizes `sl2 ⊕ abelian(ℓ)`: `g = [g,g] ⊕ Z(g)`, `dim [g,g] = 3`, the Killing
/// form nondegenerate on `[g,g]` and `Z(g)` equal to the radical. Returns `ℓ`.
pub fn detect_sl2_plus_abelian<F: Field>(g: &LieAlgebra<F>) -> Option<usize> {
    let n = g.dim();
    let derived = g.derived_algebra();
    let center = g.center();
    if derived.dim() != 3 || derived.dim() + center.dim() != n {
        return None;
    }
    if !derived.intersection(&center).expect("same ambient").is_zero() {
        return None;
    }
    let (kappa, radical) = killing_radical(g);
    let b = derived.basis().transpose();
    let restricted = b.transpose().mul(&kappa).and_then(|m| m.mul(&b)).expect("conformable");
    if restricted.rank() != 3 || radical != center {
        return None;
    }
    Some(center.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::families;
    use crate::Q;

    #[test]
    fn filiform_lower_central_dims() {
        let f5 = families::filiform::<Q>(5).unwrap();
        assert_eq!(series(&f5, SeriesKind::LowerCentral).dims(), vec![5, 3, 2, 1, 0]);
    }

    #[test]
    fn abelian_series_are_immediate() {
        let a = LieAlgebra::<Q>::abelian(4);
        for kind in [SeriesKind::LowerCentral, SeriesKind::Derived] {
            let s = series(&a, kind);
            assert_eq!(s.dims(), vec![4, 0]);
            assert!(s.reached_zero);
        }
    }

    #[test]
    fn sl2_derived_series_stabilizes() {
        let s = series(&families::sl2::<Q>(), SeriesKind::Derived);
        assert_eq!(s.dims(), vec![3]);
        assert!(!s.reached_zero);
    }

    #[test]
    fn classify_filiform() {
        for n in 4..=7 {
            let r = classify(&families::filiform::<Q>(n).unwrap());
            assert!(r.is_nilpotent && r.is_filiform && r.is_solvable);
            assert_eq!(r.k_abelian_index, Some(2));
            assert_eq!(r.is_almost_abelian, Some(true));
        }
    }

    #[test]
    fn classify_sl2() {
        let r = classify(&families::sl2::<Q>());
        assert!(r.is_semisimple);
        assert!(!r.is_solvable);
        assert!(!r.is_characteristically_nilpotent);
        assert_eq!(r.k_abelian_index, None);
    }

    #[test]
    fn classify_cnla7() {
        let r = classify(&families::cnla7::<Q>());
        assert!(r.is_characteristically_nilpotent);
        assert!(r.is_filiform);
    }

    #[test]
    fn radicals() {
        let (k, r) = killing_radical(&families::sl2::<Q>());
        assert_eq!(k.rank(), 3);
        assert!(r.is_zero());
        let g = families::sl2_plus_abelian::<Q>(2);
        let (_, r) = killing_radical(&g);
        assert_eq!(r, Subspace::coordinate(5, &[3, 4]));
        for g in [families::prop42_g3::<Q>(), families::heisenberg::<Q>(), families::r2::<Q>()] {
            assert!(killing_radical(&g).1.is_full());
        }
    }

    #[test]
    fn derivations() {
        assert_eq!(derivation_algebra(&LieAlgebra::<Q>::abelian(3)).len(), 9);
        let ders = derivation_algebra(&families::cnla7::<Q>());
        assert!(ders.iter().all(is_nilpotent_matrix));
        let ders = derivation_algebra(&families::heisenberg::<Q>());
        assert!(ders.iter().any(|d| !is_nilpotent_matrix(d)));
        // diag(1, 1, 2) is a derivation of the Heisenberg algebra
        let mut diag = Matrix::<Q>::zeros(3, 3);
        diag[(0, 0)] = Q::from_i64(1);
        diag[(1, 1)] = Q::from_i64(1);
        diag[(2, 2)] = Q::from_i64(2);
        let span = Subspace::span(9, ders.iter().map(|d| d.entries().to_vec()).collect()).unwrap();
        assert!(span.contains_vector(diag.entries()).unwrap());
        assert!(!matrices_act_nilpotently(&derivation_algebra(&families::heisenberg::<Q>()), 3));
    }

    fn is_nilpotent_matrix(m: &Matrix<Q>) -> bool {
        let mut p = m.clone();
        for _ in 0..m.rows() {
            p = p.mul(m).unwrap();
        }
        p.is_zero()
    }

    #[test]
    fn sl2_detector() {
        assert_eq!(detect_sl2_plus_abelian(&families::sl2_plus_abelian::<Q>(2)), Some(2));
        assert_eq!(detect_sl2_plus_abelian(&families::sl2::<Q>()), Some(0));
        assert_eq!(detect_sl2_plus_abelian(&families::prop42_g2::<Q>()), Some(1));
        assert_eq!(detect_sl2_plus_abelian(&families::prop42_g3::<Q>()), None);
        assert_eq!(detect_sl2_plus_abelian(&families::heisenberg::<Q>().direct_sum(&LieAlgebra::abelian(1))), None);
    }
}
