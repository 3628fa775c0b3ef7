//! Buchberger's algorithm over ℚ and the weak-Nullstellensatz consistency test.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{Monomial, MultiPoly, PolySystem};
use super::ArithError;

/// Default cap on single-term reduction steps for one Gröbner computation.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Reduced Gröbner basis for grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    basis: Vec<MultiPoly>,
    contains_one: bool,
    reductions: u64,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn contains_one(&self) -> bool {
        self.contains_one
    }

    /// Reduction steps spent computing this basis.
    pub fn reductions(&self) -> u64 {
        self.reductions
    }

    /// Normal form of `p` modulo the basis.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        let mut steps = Budget::unlimited();
        normal_form(p.clone(), &self.basis, &mut steps).expect("unlimited budget")
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Answer of the closure-consistency test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Consistency {
    Yes,
    No,
    Undecided,
}

/// Counts reduction steps against a limit.
#[derive(Debug, Clone)]
pub struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    /// Records `steps` spent elsewhere.
    pub fn charge(&mut self, steps: u64) {
        self.used = self.used.saturating_add(steps);
    }

    fn tick(&mut self) -> Result<(), ArithError> {
        self.used += 1;
        if self.used > self.limit {
            Err(ArithError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

fn normal_form(mut p: MultiPoly, reducers: &[MultiPoly], budget: &mut Budget) -> Result<MultiPoly, ArithError> {
    let nvars = p.nvars();
    let mut rest: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some((m, c)) = p.leading().cloned() {
        let reducer = reducers.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match reducer {
            Some(g) => {
                budget.tick()?;
                let q = g.leading_monomial().unwrap().quotient_of(&m);
                // reducers are monic
                p = p.sub_mul_term(g, &q, &c);
            }
            None => {
                rest.push((m, c));
                p = MultiPoly::from_terms(nvars, p.terms()[1..].to_vec());
            }
        }
    }
    Ok(MultiPoly::from_terms(nvars, rest))
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let l = lf.lcm(lg);
    let one = BigRational::one();
    f.mul_term(&lf.quotient_of(&l), &one).sub_mul_term(g, &lg.quotient_of(&l), &one)
}

struct Run {
    basis: Vec<MultiPoly>,
    unit: bool,
}

fn run(system: &PolySystem, budget: &mut Budget) -> Result<Run, ArithError> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    for p in system.polys() {
        let p = p.clone().monic();
        if p.is_unit() {
            return Ok(Run { basis: vec![p], unit: true });
        }
        if !basis.contains(&p) {
            basis.push(p);
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let mut unit = false;
    while !pairs.is_empty() {
        // normal selection: smallest lcm, ties by index
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0].leading_monomial().unwrap().lcm(basis[a.1].leading_monomial().unwrap());
                let lb = basis[b.0].leading_monomial().unwrap().lcm(basis[b.1].leading_monomial().unwrap());
                la.cmp(&lb).then_with(|| (a.1, a.0).cmp(&(b.1, b.0)))
            })
            .unwrap();
        pairs.remove(&(i, j));
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(s, &basis, budget)?;
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let t = basis.len();
        let is_unit = r.is_unit();
        basis.push(r);
        if is_unit {
            unit = true;
            break;
        }
        for k in 0..t {
            pairs.insert((k, t));
        }
    }
    Ok(Run { basis, unit })
}

/// Minimal, interreduced, sorted by decreasing leading monomial.
fn reduce_basis(mut basis: Vec<MultiPoly>, budget: &mut Budget) -> Result<Vec<MultiPoly>, ArithError> {
    let mut keep: Vec<MultiPoly> = Vec::new();
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !keep.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let g = &keep[k];
        let lead = MultiPoly::from_terms(g.nvars(), vec![g.leading().unwrap().clone()]);
        let tail = g.sub(&lead);
        let others: Vec<MultiPoly> = keep.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| h.clone()).collect();
        let tail = normal_form(tail, &others, budget)?;
        out.push(lead.add(&tail));
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    Ok(out)
}

/// Reduced Gröbner basis of the ideal generated by `system`.
pub fn buchberger(system: &PolySystem, budget: u64) -> Result<GroebnerBasis, ArithError> {
    let mut b = Budget::new(budget);
    buchberger_with(system, &mut b)
}

pub fn buchberger_with(system: &PolySystem, budget: &mut Budget) -> Result<GroebnerBasis, ArithError> {
    let start = budget.used();
    let nvars = system.nvars();
    let result = run(system, budget)?;
    let (basis, contains_one) = if result.unit {
        (vec![MultiPoly::constant(nvars, BigRational::one())], true)
    } else {
        (reduce_basis(result.basis, budget)?, false)
    };
    Ok(GroebnerBasis { nvars, basis, contains_one, reductions: budget.used() - start })
}

/// Whether the system has a common zero over the algebraic closure of ℚ.
pub fn consistent_over_closure(system: &PolySystem, budget: u64) -> Consistency {
    consistent_with(system, &mut Budget::new(budget))
}

pub fn consistent_with(system: &PolySystem, budget: &mut Budget) -> Consistency {
    match run(system, budget) {
        Ok(r) if r.unit => Consistency::No,
        Ok(_) => Consistency::Yes,
        Err(_) => Consistency::Undecided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn single_variable_is_its_own_basis() {
        let x = MultiPoly::var(1, 0);
        let g = buchberger(&PolySystem::from_polys(1, vec![x.clone()]), DEFAULT_BUDGET).unwrap();
        assert_eq!(g.basis(), &[x]);
        assert!(!g.contains_one());
    }

    #[test]
    fn xy_minus_one_and_x_squared_generate_one() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let sys = PolySystem::from_polys(2, vec![x.mul(&y).sub(&MultiPoly::constant(2, c(1))), x.mul(&x)]);
        let g = buchberger(&sys, DEFAULT_BUDGET).unwrap();
        assert!(g.contains_one());
        assert_eq!(consistent_over_closure(&sys, DEFAULT_BUDGET), Consistency::No);
    }

    #[test]
    fn sum_of_squares_is_consistent() {
        let a = MultiPoly::var(2, 0);
        let b = MultiPoly::var(2, 1);
        let p = a.mul(&a).add(&b.mul(&b));
        let sys = PolySystem::from_polys(2, vec![p.clone()]);
        let g = buchberger(&sys, DEFAULT_BUDGET).unwrap();
        assert_eq!(g.basis(), &[p]);
        assert!(!g.contains_one());
        assert_eq!(consistent_over_closure(&sys, DEFAULT_BUDGET), Consistency::Yes);
    }

    #[test]
    fn contradictory_linear_system() {
        let x = MultiPoly::var(1, 0);
        let sys = PolySystem::from_polys(1, vec![x.clone(), x.sub(&MultiPoly::constant(1, c(1)))]);
        assert_eq!(consistent_over_closure(&sys, DEFAULT_BUDGET), Consistency::No);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // twisted cubic style system needs a few reductions
        let x = MultiPoly::var(3, 0);
        let y = MultiPoly::var(3, 1);
        let z = MultiPoly::var(3, 2);
        let sys = PolySystem::from_polys(
            3,
            vec![y.sub(&x.mul(&x)), z.sub(&x.mul(&x).mul(&x)), x.mul(&y).mul(&z).sub(&MultiPoly::constant(3, c(2)))],
        );
        assert!(matches!(buchberger(&sys, 1), Err(ArithError::BudgetExceeded { limit: 1 })));
        assert_eq!(consistent_over_closure(&sys, 1), Consistency::Undecided);
        assert_eq!(consistent_over_closure(&sys, DEFAULT_BUDGET), Consistency::Yes);
    }

    #[test]
    fn constant_only_systems() {
        let sys = PolySystem::from_polys(0, vec![MultiPoly::constant(0, c(3))]);
        assert_eq!(consistent_over_closure(&sys, 10), Consistency::No);
        assert_eq!(consistent_over_closure(&PolySystem::new(0), 10), Consistency::Yes);
    }
}
