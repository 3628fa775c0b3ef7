//! Univariate helpers for witness extraction: minimal polynomials of a
//! variable modulo an ideal, and their rational roots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{GaussianRational, GroebnerBasis, Monomial, MultiPoly};
use crate::linalg::Matrix;

/// Dense coefficients, constant term first.
pub type UniPoly = Vec<BigRational>;

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub fn eval_gaussian(p: &[BigRational], x: &GaussianRational) -> GaussianRational {
    p.iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, c| acc * x + GaussianRational::new(c.clone(), BigRational::zero()))
}

fn derivative(p: &[BigRational]) -> UniPoly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
}

/// Quotient and remainder.
fn divmod(a: &[BigRational], b: &[BigRational]) -> (UniPoly, UniPoly) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty").clone() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> UniPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Product of the distinct irreducible factors.
pub fn squarefree(p: &[BigRational]) -> UniPoly {
    let p = trim(p.to_vec());
    if p.len() <= 2 {
        return p;
    }
    let g = gcd(&p, &derivative(&p));
    divmod(&p, &g).0
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots, each once. Large coefficients limit the search to
/// roots of linear square-free factors.
pub fn rational_roots(p: &[BigRational]) -> Vec<BigRational> {
    let mut q = squarefree(p);
    let mut roots = Vec::new();
    if q.len() < 2 {
        return roots;
    }
    if q[0].is_zero() {
        roots.push(BigRational::zero());
        q.remove(0);
    }
    if q.len() == 2 {
        roots.push(-&q[0] / &q[1]);
        return roots;
    }
    if q.len() < 2 {
        return roots;
    }
    let denom_lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q.iter().map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer()).collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().expect("degree >= 2"))) else {
        return roots;
    };
    for a in &ps {
        for b in &qs {
            for s in [1, -1] {
                let x = BigRational::new(a * s, b.clone());
                if !roots.contains(&x) && eval(&q, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

/// Least-degree `p` (degree at most `max_degree`) with `p(x_v)` in the ideal of `gb`.
pub fn minimal_polynomial(gb: &GroebnerBasis, v: usize, max_degree: usize) -> Option<UniPoly> {
    let nvars = gb.nvars();
    let x = MultiPoly::var(nvars, v);
    let mut powers = vec![gb.reduce(&MultiPoly::constant(nvars, BigRational::one()))];
    for _ in 0..max_degree {
        let next = gb.reduce(&powers.last().expect("nonempty").mul(&x));
        powers.push(next);
        let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
        for p in &powers {
            for (m, _) in p.terms() {
                let len = index.len();
                index.entry(m).or_insert(len);
            }
        }
        let mut m = Matrix::<BigRational>::zeros(index.len(), powers.len());
        for (j, p) in powers.iter().enumerate() {
            for (mono, c) in p.terms() {
                m[(index[mono], j)] = c.clone();
            }
        }
        let kernel = m.kernel();
        if kernel.dim() > 0 {
            return Some(trim(kernel.basis_vectors().swap_remove(0)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> UniPoly {
        v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    #[test]
    fn double_root() {
        // (2x - 3)^2 = 4x^2 - 12x + 9
        assert_eq!(rational_roots(&q(&[9, -12, 4])), vec![BigRational::new(3.into(), 2.into())]);
    }

    #[test]
    fn irrational_and_mixed() {
        assert!(rational_roots(&q(&[-2, 0, 1])).is_empty());
        let mut r = rational_roots(&q(&[0, -2, 0, 1, 0]));
        r.sort();
        assert_eq!(r, vec![BigRational::zero()]);
        // (x - 1)(x + 2)(x^2 + 1)
        let mut r = rational_roots(&q(&[-2, 1, -1, 1, 1]));
        r.sort();
        assert_eq!(r, q(&[-2, 1]));
    }
}
