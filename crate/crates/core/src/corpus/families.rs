//! Generators for the named algebra families.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;

use crate::lie::{Bracket, IntBracket};

fn int<F: Field>(b: &[IntBracket<'_>]) -> Vec<Bracket<F>> {
    b.iter().map(|(i, j, t)| (*i, *j, t.iter().map(|&(k, c)| (k, F::from_i64(c))).collect())).collect()
}

fn known<F: Field>(name: &str, n: usize, b: &[IntBracket<'_>]) -> LieAlgebra<F> {
    LieAlgebra::from_brackets(name, n, &int(b)).expect("family brackets satisfy Jacobi")
}

fn relabel<F: Field>(g: LieAlgebra<F>, prefix: &str) -> LieAlgebra<F> {
    let n = g.dim();
    g.with_labels((1..=n).map(|i| format!("{prefix}{i}")).collect())
}

pub fn abelian<F: Field>(n: usize) -> LieAlgebra<F> {
    LieAlgebra::abelian(n).with_name(&format!("abelian{n}"))
}

/// Standard graded filiform `f_n`: `[e_1, e_i] = e_{i+1}` for `2 <= i <= n-1`.
pub fn filiform<F: Field>(n: usize) -> Result<LieAlgebra<F>> {
    if n < 3 {
        return Err(Error::BadParameter(format!("filiform needs n >= 3, got {n}")));
    }
    let b: Vec<Bracket<F>> = (2..n).map(|i| (1, i, vec![(i + 1, F::one())])).collect();
    LieAlgebra::from_brackets(&format!("f{n}"), n, &b)
}

/// Six-dimensional filiform algebra whose third lower central term is the
/// first abelian one.
pub fn filiform_k3<F: Field>() -> LieAlgebra<F> {
    known(
        "filiform-k3",
        6,
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (1, 5, &[(6, 1)]),
            (2, 5, &[(6, -1)]),
            (3, 4, &[(6, 1)]),
        ],
    )
}

/// Three-dimensional Heisenberg algebra `n3`.
pub fn heisenberg<F: Field>() -> LieAlgebra<F> {
    known("n3", 3, &[(1, 2, &[(3, 1)])])
}

pub fn nilpotent4<F: Field>() -> LieAlgebra<F> {
    known("n4", 4, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])])
}

/// The six indecomposable-or-not non-abelian nilpotent algebras `g5,1 .. g5,6`
/// of dimension five.
pub fn nilpotent5<F: Field>(index: usize) -> Result<LieAlgebra<F>> {
    let b: &[IntBracket<'_>] = match index {
        1 => &[(1, 3, &[(5, 1)]), (2, 4, &[(5, 1)])],
        2 => &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])],
        3 => &[(1, 2, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 3, &[(5, 1)])],
        4 => &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])],
        5 => &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)])],
        6 => &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 3, &[(5, 1)])],
        _ => return Err(Error::BadParameter(format!("g5,{index} does not exist (1..=6)"))),
    };
    Ok(known(&format!("g5,{index}"), 5, b))
}

/// Two-dimensional non-abelian algebra `[e1, e2] = e2`.
pub fn r2<F: Field>() -> LieAlgebra<F> {
    known("r2", 2, &[(1, 2, &[(2, 1)])])
}

/// `r2 ⊕ r2`.
pub fn prop42_g1<F: Field>() -> LieAlgebra<F> {
    known("g1", 4, &[(1, 2, &[(2, 1)]), (3, 4, &[(4, 1)])])
}

/// `sl2 ⊕ C` in the basis `[e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = e1`.
pub fn prop42_g2<F: Field>() -> LieAlgebra<F> {
    known("g2", 4, &[(1, 2, &[(2, 1)]), (1, 3, &[(3, -1)]), (2, 3, &[(1, 1)])])
}

pub fn prop42_g3<F: Field>() -> LieAlgebra<F> {
    known("g3", 4, &[(1, 2, &[(2, 1)]), (1, 3, &[(3, 1)]), (1, 4, &[(4, 2)]), (2, 3, &[(4, 1)])])
}

/// One-parameter family `[e1,e2] = e2, [e1,e3] = e2 + a e3, [e1,e4] = (a+1) e4, [e2,e3] = e4`.
pub fn prop42_g4<F: Field>(a: F) -> LieAlgebra<F> {
    let b = vec![
        (1, 2, vec![(2, F::one())]),
        (1, 3, vec![(2, F::one()), (3, a.clone())]),
        (1, 4, vec![(4, a.clone() + F::one())]),
        (2, 3, vec![(4, F::one())]),
    ];
    LieAlgebra::from_brackets(&format!("g4({})", a.token()), 4, &b).expect("family brackets satisfy Jacobi")
}

/// Four-dimensional solvable algebra whose two-dimensional abelian ideal
/// needs `i`: `[x1,x2] = x2 - x3, [x1,x3] = x2 + x3, [x1,x4] = 2 x4, [x2,x3] = x4`.
pub fn example26<F: Field>() -> LieAlgebra<F> {
    let g = known(
        "example26",
        4,
        &[(1, 2, &[(2, 1), (3, -1)]), (1, 3, &[(2, 1), (3, 1)]), (1, 4, &[(4, 2)]), (2, 3, &[(4, 1)])],
    );
    relabel(g, "x")
}

/// Seven-dimensional characteristically nilpotent algebra.
pub fn cnla7<F: Field>() -> LieAlgebra<F> {
    let g = known(
        "cnla7",
        7,
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (1, 5, &[(6, 1)]),
            (1, 6, &[(7, 1)]),
            (2, 3, &[(6, 1), (7, 1)]),
            (2, 4, &[(7, 1)]),
        ],
    );
    relabel(g, "x")
}

/// `sl2` with basis `h, e, f`.
pub fn sl2<F: Field>() -> LieAlgebra<F> {
    let g = known("sl2", 3, &[(1, 2, &[(2, 2)]), (1, 3, &[(3, -2)]), (2, 3, &[(1, 1)])]);
    g.with_labels(vec!["h".into(), "e".into(), "f".into()])
}

pub fn sl2_plus_abelian<F: Field>(l: usize) -> LieAlgebra<F> {
    let g = sl2::<F>().direct_sum(&LieAlgebra::abelian(l));
    g.with_name(&format!("sl2+abelian{l}"))
}

/// Algebra spanned by the given matrices, which must be linearly independent
/// and closed under commutators.
pub fn from_matrix_basis<F: Field>(name: &str, basis: &[Matrix<F>]) -> Result<LieAlgebra<F>> {
    let d = basis.len();
    let Some(first) = basis.first() else {
        return Ok(LieAlgebra::abelian(0).with_name(name));
    };
    let m2 = first.rows() * first.cols();
    let mut cols = Matrix::zeros(m2, d);
    for (j, b) in basis.iter().enumerate() {
        for (i, x) in b.entries().iter().enumerate() {
            cols[(i, j)] = x.clone();
        }
    }
    if cols.rank() < d {
        return Err(Error::BadParameter("matrix basis is linearly dependent".into()));
    }
    let mut g = LieAlgebra::abelian(d).with_name(name);
    for a in 0..d {
        for b in a + 1..d {
            let c = basis[a].mul(&basis[b])?.sub(&basis[b].mul(&basis[a])?);
            let y = cols
                .solve(c.entries())
                .ok_or_else(|| Error::BadParameter("matrix span is not closed under commutators".into()))?;
            g.set_bracket(a, b, &y);
        }
    }
    g.validate()?;
    Ok(g)
}

fn unit_matrix<F: Field>(m: usize, i: usize, j: usize) -> Matrix<F> {
    let mut e = Matrix::zeros(m, m);
    e[(i, j)] = F::one();
    e
}

/// Positive roots `(i, j)`, `i < j`, 1-based, ordered by height then row.
fn positive_roots(m: usize) -> Vec<(usize, usize)> {
    let mut r: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    r.sort_by_key(|&(i, j)| (j - i, i));
    r
}

/// Chevalley basis of `sl_m`: `H_1..H_{m-1}`, positive `E_ij`, then negative `E_ji`.
fn chevalley<F: Field>(m: usize, borel_only: bool) -> (Vec<Matrix<F>>, Vec<String>) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m - 1 {
        basis.push(unit_matrix::<F>(m, i, i).sub(&unit_matrix(m, i + 1, i + 1)));
        labels.push(format!("h{}", i + 1));
    }
    for (i, j) in positive_roots(m) {
        basis.push(unit_matrix(m, i - 1, j - 1));
        labels.push(format!("e{i}{j}"));
    }
    if !borel_only {
        for (i, j) in positive_roots(m) {
            basis.push(unit_matrix(m, j - 1, i - 1));
            labels.push(format!("f{i}{j}"));
        }
    }
    (basis, labels)
}

pub fn sl<F: Field>(m: usize) -> Result<LieAlgebra<F>> {
    if !(2..=4).contains(&m) {
        return Err(Error::BadParameter(format!("sl_m supported for 2 <= m <= 4, got {m}")));
    }
    let (basis, labels) = chevalley::<F>(m, false);
    Ok(from_matrix_basis(&format!("sl{m}"), &basis)?.with_labels(labels))
}

/// Upper-triangular Borel subalgebra of `sl_m`.
pub fn borel_sl<F: Field>(m: usize) -> Result<LieAlgebra<F>> {
    if !(2..=4).contains(&m) {
        return Err(Error::BadParameter(format!("borel of sl_m supported for 2 <= m <= 4, got {m}")));
    }
    let (basis, labels) = chevalley::<F>(m, true);
    Ok(from_matrix_basis(&format!("borel(sl{m})"), &basis)?.with_labels(labels))
}

/// Positive roots of `sl_m` with their 0-based position in [`borel_sl`]'s basis.
pub fn borel_sl_roots(m: usize) -> Vec<((usize, usize), usize)> {
    positive_roots(m).into_iter().enumerate().map(|(k, r)| (r, m - 1 + k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{classify, series, SeriesKind};
    use crate::{Q, QI};

    #[test]
    fn all_nilpotent_table_entries_validate() {
        for i in 1..=6 {
            let g = nilpotent5::<Q>(i).unwrap();
            assert!(classify(&g).is_nilpotent, "g5,{i}");
        }
        assert!(nilpotent5::<Q>(7).is_err());
    }

    #[test]
    fn filiform_brackets() {
        let g = filiform::<Q>(5).unwrap();
        assert_eq!(g.nonzero_brackets().len(), 3);
        assert!(filiform::<Q>(2).is_err());
        let k3 = filiform_k3::<Q>();
        let r = classify(&k3);
        assert!(r.is_filiform);
        assert_eq!(r.k_abelian_index, Some(3));
    }

    #[test]
    fn matrix_algebras() {
        let s = sl::<Q>(3).unwrap();
        assert_eq!(s.dim(), 8);
        assert!(classify(&s).is_semisimple);
        let b = borel_sl::<Q>(3).unwrap();
        assert_eq!(b.dim(), 5);
        assert!(series(&b, SeriesKind::Derived).reached_zero);
        assert_eq!(borel_sl_roots(3), vec![((1, 2), 2), ((2, 3), 3), ((1, 3), 4)]);
        assert!(sl::<Q>(5).is_err());
        // sl2 from matrices matches the hand basis
        assert_eq!(sl::<Q>(2).unwrap().nonzero_brackets(), sl2::<Q>().nonzero_brackets());
    }

    #[test]
    fn prop_families_validate_over_both_fields() {
        for a in [-2i64, -1, 0, 1, 3] {
            prop42_g4::<Q>(Q::from_i64(a)).validate().unwrap();
        }
        example26::<QI>().validate().unwrap();
        assert_eq!(example26::<Q>().labels()[3], "x4");
        assert_eq!(sl2_plus_abelian::<Q>(2).dim(), 5);
    }
}
