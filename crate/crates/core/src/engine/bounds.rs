use crate::arith::Field;
use crate::engine::Target;
use crate::lie::{series, LieAlgebra, SeriesKind};

/// `lower <= invariant <= upper`, with a short description of its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRecord {
    pub target: Target,
    pub lower: usize,
    pub upper: usize,
    pub source: String,
}

/// Least `l` with `l(l+1)/2 >= n`, i.e. `ceil((sqrt(8n+1)-1)/2)`.
pub fn nilpotent_lower_bound(n: usize) -> usize {
    (0..).find(|l| l * (l + 1) / 2 >= n).unwrap_or(0)
}

/// Least `l` with `l(l+3)/2 >= n`.
pub fn solvable_lower_bound(n: usize) -> usize {
    (0..).find(|l| l * (l + 3) / 2 >= n).unwrap_or(0)
}

pub fn bounds<F: Field>(g: &LieAlgebra<F>) -> Vec<BoundRecord> {
    let n = g.dim();
    let rec = |target, lower, upper, source: &str| BoundRecord { target, lower, upper, source: source.to_string() };
    if g.is_abelian() {
        return vec![
            rec(Target::AbelianSubalgebra, n, n, "abelian algebra"),
            rec(Target::AbelianIdeal, n, n, "abelian algebra"),
        ];
    }
    let upper = n - 1;
    let mut out = vec![rec(Target::AbelianSubalgebra, 1, upper, "non-abelian: alpha <= n-1")];
    if series(g, SeriesKind::LowerCentral).reached_zero {
        out.push(rec(
            Target::AbelianSubalgebra,
            nilpotent_lower_bound(n),
            upper,
            "nilpotent: least l with l(l+1)/2 >= n",
        ));
    }
    if series(g, SeriesKind::Derived).reached_zero {
        out.push(rec(
            Target::AbelianSubalgebra,
            solvable_lower_bound(n),
            upper,
            "solvable: least l with l(l+3)/2 >= n",
        ));
    }
    out.push(rec(Target::AbelianIdeal, 0, upper, "beta <= alpha <= n-1"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bounds_against_float_formula() {
        for n in 1..200usize {
            let f = ((((8 * n + 1) as f64).sqrt() - 1.0) / 2.0).ceil() as usize;
            assert_eq!(nilpotent_lower_bound(n), f, "n = {n}");
        }
        assert_eq!(nilpotent_lower_bound(6), 3);
        assert_eq!(nilpotent_lower_bound(7), 4);
        assert_eq!(solvable_lower_bound(5), 2);
        assert_eq!(solvable_lower_bound(6), 3);
    }
}
