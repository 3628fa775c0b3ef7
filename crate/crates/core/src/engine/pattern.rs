//! Pivot patterns and the polynomial systems they induce.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{Field, GaussianRational, MultiPoly, PolySystem};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Pivot columns (0-based, strictly increasing) of a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PivotPattern {
    pub ambient: usize,
    pub pivots: Vec<usize>,
}

impl PivotPattern {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Free entries `(row, column)` of the echelon basis: right of the row's
    /// pivot and outside every pivot column.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.ambient {
                if !self.pivots.contains(&c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// All `k`-subsets of `0..n` in colexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<PivotPattern> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            out.push(PivotPattern { ambient: n, pivots: comb.clone() });
            // colex successor: bump the lowest position that can move
            let mut i = 0;
            while i < k && (if i + 1 < k { comb[i] + 1 == comb[i + 1] } else { comb[i] + 1 == n }) {
                i += 1;
            }
            if i == k {
                break;
            }
            comb[i] += 1;
            for (j, c) in comb.iter_mut().enumerate().take(i) {
                *c = j;
            }
        }
        out
    }

    /// 1-based display, e.g. `{2,4}`.
    pub fn label(&self) -> String {
        let p: Vec<String> = self.pivots.iter().map(|p| (p + 1).to_string()).collect();
        format!("{{{}}}", p.join(","))
    }
}

/// What the subspace must be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    AbelianSubalgebra,
    AbelianIdeal,
}

/// Polynomial conditions on the free entries of one pivot pattern.
#[derive(Debug, Clone)]
pub struct PatternSystem {
    pub pattern: PivotPattern,
    pub free: Vec<(usize, usize)>,
    /// Index of the variable standing for `i` (with `t^2 + 1` in the system).
    pub unit_var: Option<usize>,
    pub system: PolySystem,
}

impl PatternSystem {
    pub fn build<F: Field>(g: &LieAlgebra<F>, pattern: &PivotPattern, target: Target, adjoin_i: bool) -> Self {
        let n = g.dim();
        let free = pattern.free_positions();
        let adjoin_i = adjoin_i || F::TAG == crate::arith::FieldTag::QI;
        let nvars = free.len() + usize::from(adjoin_i);
        let unit_var = adjoin_i.then_some(free.len());
        let mut system = PolySystem::new(nvars);
        if let Some(t) = unit_var {
            let t = MultiPoly::var(nvars, t);
            system.push(t.mul(&t).add(&MultiPoly::constant(nvars, BigRational::one())));
        }

        let rows: Vec<Vec<MultiPoly>> = (0..pattern.dim())
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if c == pattern.pivots[r] {
                            MultiPoly::constant(nvars, BigRational::one())
                        } else if let Some(v) = free.iter().position(|&pos| pos == (r, c)) {
                            MultiPoly::var(nvars, v)
                        } else {
                            MultiPoly::zero(nvars)
                        }
                    })
                    .collect()
            })
            .collect();

        let lift = |c: &F| -> MultiPoly {
            let (re, im) = c.parts();
            let mut p = MultiPoly::constant(nvars, re);
            if !im.is_zero() {
                let t = unit_var.expect("imaginary constants need the unit variable");
                p = p.add(&MultiPoly::var(nvars, t).scale(&im));
            }
            p
        };
        let brackets: Vec<(usize, usize, Vec<MultiPoly>)> =
            g.nonzero_brackets().into_iter().map(|(i, j, v)| (i, j, v.iter().map(lift).collect())).collect();
        let bracket = |x: &[MultiPoly], y: &[MultiPoly]| -> Vec<MultiPoly> {
            let mut out = vec![MultiPoly::zero(nvars); n];
            for (i, j, v) in &brackets {
                let coeff = x[*i].mul(&y[*j]).sub(&x[*j].mul(&y[*i]));
                if coeff.is_zero() {
                    continue;
                }
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&coeff.mul(c));
                    }
                }
            }
            out
        };

        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                for p in bracket(&rows[a], &rows[b]) {
                    system.push(p);
                }
            }
        }
        if target == Target::AbelianIdeal {
            for i in 0..n {
                let unit: Vec<MultiPoly> =
                    (0..n)
                        .map(|c| {
                            if c == i {
                                MultiPoly::constant(nvars, BigRational::one())
                            } else {
                                MultiPoly::zero(nvars)
                            }
                        })
                        .collect();
                for row in &rows {
                    let w = bracket(&unit, row);
                    // w lies in the row space iff w - Σ_r w[p_r] row_r vanishes
                    for c in (0..n).filter(|c| !pattern.pivots.contains(c)) {
                        let mut p = w[c].clone();
                        for (r, &pr) in pattern.pivots.iter().enumerate() {
                            if !w[pr].is_zero() && !rows[r][c].is_zero() {
                                p = p.sub(&w[pr].mul(&rows[r][c]));
                            }
                        }
                        system.push(p);
                    }
                }
            }
        }
        let mut names: Vec<String> = free.iter().map(|(r, c)| format!("a{}_{}", r + 1, c + 1)).collect();
        if unit_var.is_some() {
            names.push("t".to_string());
        }
        let system = system.with_names(names);
        PatternSystem { pattern: pattern.clone(), free, unit_var, system }
    }

    /// `x_v - value` as a polynomial of this system.
    pub fn pin(&self, var: usize, value: &GaussianRational) -> MultiPoly {
        let nvars = self.system.nvars();
        let mut p = MultiPoly::var(nvars, var).sub(&MultiPoly::constant(nvars, value.re.clone()));
        if !value.im.is_zero() {
            let t = self.unit_var.expect("Gaussian value needs the unit variable");
            p = p.sub(&MultiPoly::var(nvars, t).scale(&value.im));
        }
        p
    }

    /// Echelon basis with the free entries set to `values`.
    pub fn subspace(&self, values: &[GaussianRational]) -> Subspace<GaussianRational> {
        let n = self.pattern.ambient;
        let rows = (0..self.pattern.dim())
            .map(|r| {
                let mut row = vec![GaussianRational::zero(); n];
                row[self.pattern.pivots[r]] = GaussianRational::one();
                row
            })
            .collect::<Vec<_>>();
        let mut rows = rows;
        for ((r, c), v) in self.free.iter().zip(values) {
            rows[*r][*c] = v.clone();
        }
        Subspace::span(n, rows).expect("pattern rows have ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order() {
        let pats: Vec<Vec<usize>> = PivotPattern::all(4, 2).into_iter().map(|p| p.pivots).collect();
        assert_eq!(pats, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        assert_eq!(PivotPattern::all(5, 0).len(), 1);
        assert_eq!(PivotPattern::all(5, 5).len(), 1);
        assert_eq!(PivotPattern::all(7, 3).len(), 35);
        assert!(PivotPattern::all(2, 3).is_empty());
    }

    #[test]
    fn free_positions_of_pattern() {
        let p = PivotPattern { ambient: 4, pivots: vec![1, 3] };
        assert_eq!(p.free_positions(), vec![(0, 2)]);
        let p = PivotPattern { ambient: 3, pivots: vec![0] };
        assert_eq!(p.free_positions(), vec![(0, 1), (0, 2)]);
    }
}
