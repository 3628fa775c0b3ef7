//! Sparse multivariate polynomials over ℚ in graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::rational_token;

/// Exponent vector with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; nvars].into_boxed_slice() }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { degree, exps: exps.into_boxed_slice() }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { degree: other.degree - self.degree, exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic: higher degree wins, ties broken by the
    /// last differing variable where the smaller exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Polynomial with terms kept sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::var(nvars, index), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            MultiPoly::zero(nvars)
        } else {
            MultiPoly { nvars, terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Monomial, BigRational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Divide by the leading coefficient.
    pub fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
        self
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// `self - c * m * other`, merged in one pass.
    pub fn sub_mul_term(&self, other: &MultiPoly, m: &Monomial, c: &BigRational) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = self.terms.iter().peekable();
        let mut j = other.terms.iter().map(|(om, oc)| (om.mul(m), -(oc * c))).peekable();
        loop {
            let next = match (i.peek(), j.peek()) {
                (None, None) => break,
                (Some(_), None) => i.next().cloned().unwrap(),
                (None, Some(_)) => j.next().unwrap(),
                (Some((a, _)), Some((b, _))) => match a.cmp(b) {
                    Ordering::Greater => i.next().cloned().unwrap(),
                    Ordering::Less => j.next().unwrap(),
                    Ordering::Equal => {
                        let (ma, ca) = i.next().cloned().unwrap();
                        let (_, cb) = j.next().unwrap();
                        let s = ca + cb;
                        if s.is_zero() {
                            continue;
                        }
                        (ma, s)
                    }
                },
            };
            out.push(next);
        }
        MultiPoly { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &MultiPoly) -> Self {
        self.sub_mul_term(other, &Monomial::one(self.nvars), &-BigRational::one())
    }

    pub fn sub(&self, other: &MultiPoly) -> Self {
        self.sub_mul_term(other, &Monomial::one(self.nvars), &BigRational::one())
    }

    pub fn mul(&self, other: &MultiPoly) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        MultiPoly::from_terms(self.nvars, terms)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Debug dump in `5/6*x1^2*x3` syntax (1-based variable names).
    pub fn to_token_string(&self) -> String {
        self.display_with(&|k| format!("x{}", k + 1))
    }

    pub fn display_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                s.push('-');
            }
            s.push_str(&rational_token(&c.abs()));
            for (k, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(&format!("*{}", name(k))),
                    _ => s.push_str(&format!("*{}^{}", name(k), e)),
                }
            }
        }
        s
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token_string())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token_string())
    }
}

/// A finite list of polynomial equations `p = 0` over a shared variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    nvars: usize,
    polys: Vec<MultiPoly>,
    names: Option<Vec<String>>,
}

impl PolySystem {
    pub fn new(nvars: usize) -> Self {
        PolySystem { nvars, polys: Vec::new(), names: None }
    }

    pub fn from_polys(nvars: usize, polys: Vec<MultiPoly>) -> Self {
        let mut s = PolySystem::new(nvars);
        for p in polys {
            s.push(p);
        }
        s
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        self.names = Some(names);
        self
    }

    /// Zero polynomials are dropped.
    pub fn push(&mut self, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars, "polynomial variable count mismatch");
        if !p.is_zero() {
            self.polys.push(p);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn var_name(&self, k: usize) -> String {
        match &self.names {
            Some(n) => n[k].clone(),
            None => format!("x{}", k + 1),
        }
    }

    pub fn dump(&self) -> String {
        let name = |k: usize| self.var_name(k);
        self.polys.iter().map(|p| p.display_with(&name)).collect::<Vec<_>>().join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64) -> BigRational {
        BigRational::from_integer(p.into())
    }

    #[test]
    fn grevlex_orders_degree_first_then_reverse_lex() {
        let m = |e: &[u16]| Monomial::from_exponents(e.to_vec());
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x^2 > xy > y^2 > xz > yz > z^2
        let mut v = vec![m(&[0, 0, 2]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[2, 0, 0]), m(&[0, 1, 1])];
        v.sort_by(|a, b| b.cmp(a));
        let want = vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        assert_eq!(v, want);
    }

    #[test]
    fn arithmetic_merges_and_cancels() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        let p = s.mul(&d);
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn token_syntax() {
        let x1 = MultiPoly::var(3, 0);
        let x3 = MultiPoly::var(3, 2);
        let p = x1.mul(&x1).mul(&x3).scale(&BigRational::new(5.into(), 6.into()));
        assert_eq!(p.to_token_string(), "5/6*x1^2*x3");
        let q = p.sub(&MultiPoly::constant(3, r(2)));
        assert_eq!(q.to_token_string(), "5/6*x1^2*x3 - 2/1");
    }

    #[test]
    fn eval_matches_expansion() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = x.mul(&y).sub(&MultiPoly::constant(2, r(1)));
        assert_eq!(p.eval(&[r(2), r(3)]), r(5));
    }
}
