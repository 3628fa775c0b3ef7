//! Decides whether an algebra has an abelian subalgebra or abelian ideal of a
//! given dimension, and computes α (largest abelian subalgebra) and β
//! (largest abelian ideal) from those decisions.
//!
//! Every `k`-dimensional subspace has a unique reduced echelon basis, so the
//! search splits by pivot pattern. The free entries of a pattern become
//! unknowns, and the bracket conditions become a quadratic system that is
//! tested for solvability over the algebraic closure with a Gröbner basis.

mod borel;
mod bounds;
mod pattern;
mod roots;
mod simple;

pub use borel::{enumerate_borel_root_ideals, BorelIdeals};
pub use bounds::{bounds, nilpotent_lower_bound, solvable_lower_bound, BoundRecord};
pub use pattern::{PatternSystem, PivotPattern, Target};
pub use simple::{alpha_simple, SimpleType};

use std::fmt;

use num_traits::Zero;

use crate::arith::groebner::buchberger_with;
use crate::arith::{Budget, Field, FieldTag, GaussianRational, GridHeight, MultiPoly};
use crate::error::{Error, Result};
use crate::lie::{self, LieAlgebra};
use crate::linalg::Subspace;

/// Default per-pattern reduction budget.
pub const PATTERN_BUDGET: u64 = 100_000;
/// Default reduction budget for a whole decision.
pub const DECISION_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Complete over the algebraic closure.
    Closure,
    /// Witness search with ground-field entries only; never answers `No`.
    Ground,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Closure => "closure",
            Mode::Ground => "ground",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub pattern_budget: u64,
    pub decision_budget: u64,
    pub height: GridHeight,
    /// Gröbner runs allowed while extracting one witness.
    pub witness_nodes: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            pattern_budget: PATTERN_BUDGET,
            decision_budget: DECISION_BUDGET,
            height: GridHeight::default(),
            witness_nodes: 400,
        }
    }
}

impl EngineConfig {
    pub fn with_pattern_budget(mut self, budget: u64) -> Self {
        self.pattern_budget = budget;
        self
    }
}

/// A verified witness subspace. Over ℚ a closure witness may need `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<F: Field> {
    Ground(Subspace<F>),
    Extended(Subspace<GaussianRational>),
}

impl<F: Field> Witness<F> {
    pub fn dim(&self) -> usize {
        match self {
            Witness::Ground(s) => s.dim(),
            Witness::Extended(s) => s.dim(),
        }
    }

    pub fn to_gaussian(&self) -> Subspace<GaussianRational> {
        match self {
            Witness::Ground(s) => s.to_gaussian(),
            Witness::Extended(s) => s.clone(),
        }
    }

    pub fn ground(&self) -> Option<&Subspace<F>> {
        match self {
            Witness::Ground(s) => Some(s),
            Witness::Extended(_) => None,
        }
    }

    /// Basis rows as scalar tokens.
    pub fn rows(&self) -> Vec<Vec<String>> {
        let rows = |m: Vec<Vec<GaussianRational>>| -> Vec<Vec<String>> {
            m.iter().map(|r| r.iter().map(|x| x.token()).collect()).collect()
        };
        rows(self.to_gaussian().basis_vectors())
    }
}

/// Result of one decision, with enough bookkeeping for a log line.
#[derive(Debug, Clone)]
pub struct DecisionOutcome<F: Field> {
    pub target: Target,
    pub mode: Mode,
    pub k: usize,
    pub decision: Decision,
    pub witness: Option<Witness<F>>,
    pub witness_pattern: Option<PivotPattern>,
    pub patterns: usize,
    pub refuted: usize,
    pub undecided: usize,
    pub reductions: u64,
    /// Set when a produced witness failed verification.
    pub violation: Option<String>,
}

pub fn decide_abelian_subalgebra<F: Field>(
    g: &LieAlgebra<F>,
    k: usize,
    mode: Mode,
    config: &EngineConfig,
) -> DecisionOutcome<F> {
    decide(g, k, Target::AbelianSubalgebra, mode, config)
}

pub fn decide_abelian_ideal<F: Field>(
    g: &LieAlgebra<F>,
    k: usize,
    mode: Mode,
    config: &EngineConfig,
) -> DecisionOutcome<F> {
    decide(g, k, Target::AbelianIdeal, mode, config)
}

/// Checks a candidate witness with exact linear algebra over ℚ(i).
pub fn verify_witness<F: Field>(g: &LieAlgebra<F>, w: &Witness<F>, target: Target) -> bool {
    let check = |ok: Result<bool>| ok.unwrap_or(false);
    match w {
        Witness::Ground(s) => match target {
            Target::AbelianSubalgebra => check(g.is_abelian_subspace(s)),
            Target::AbelianIdeal => check(g.is_abelian_ideal(s)),
        },
        Witness::Extended(s) => {
            let gi = g.to_gaussian();
            match target {
                Target::AbelianSubalgebra => check(gi.is_abelian_subspace(s)),
                Target::AbelianIdeal => check(gi.is_abelian_ideal(s)),
            }
        }
    }
}

pub fn decide<F: Field>(
    g: &LieAlgebra<F>,
    k: usize,
    target: Target,
    mode: Mode,
    config: &EngineConfig,
) -> DecisionOutcome<F> {
    let n = g.dim();
    let mut out = DecisionOutcome {
        target,
        mode,
        k,
        decision: Decision::No,
        witness: None,
        witness_pattern: None,
        patterns: 0,
        refuted: 0,
        undecided: 0,
        reductions: 0,
        violation: None,
    };
    if k > n {
        return out;
    }
    let mut total = Budget::new(config.decision_budget);
    for pat in PivotPattern::all(n, k) {
        out.patterns += 1;
        let ps = PatternSystem::build(g, &pat, target, false);
        let limit = config.pattern_budget.min(total.remaining());
        let mut budget = Budget::new(limit);
        let consistent = match buchberger_with(&ps.system, &mut budget) {
            Ok(gb) => Some(!gb.contains_one()),
            Err(_) => None,
        };
        out.reductions += budget.used();
        total.charge(budget.used());
        match consistent {
            Some(false) => {
                out.refuted += 1;
                continue;
            }
            None => {
                out.undecided += 1;
                continue;
            }
            Some(true) => {}
        }
        // closure-consistent pattern
        let search = extract_witness(g, &pat, target, mode, config, &mut total);
        out.reductions += search.reductions;
        match search.witness {
            Some(w) => {
                if verify_witness(g, &w, target) {
                    out.witness = Some(w);
                } else {
                    out.violation = Some(format!("witness for pattern {} fails verification", pat.label()));
                }
                out.witness_pattern = Some(pat);
                out.decision = Decision::Yes;
                return out;
            }
            None => match mode {
                Mode::Closure => {
                    out.witness_pattern = Some(pat);
                    out.decision = Decision::Yes;
                    return out;
                }
                Mode::Ground => {}
            },
        }
    }
    out.decision = if mode == Mode::Ground || out.undecided > 0 { Decision::Undecided } else { Decision::No };
    out
}

struct Search<F: Field> {
    witness: Option<Witness<F>>,
    reductions: u64,
}

/// Backtracking over the free entries. At each node the current system is
/// closed under Gröbner reduction; a variable whose normal form is a constant
/// is forced, otherwise values are drawn from the height grid.
fn extract_witness<F: Field>(
    g: &LieAlgebra<F>,
    pat: &PivotPattern,
    target: Target,
    mode: Mode,
    config: &EngineConfig,
    total: &mut Budget,
) -> Search<F> {
    let mut reductions = 0;
    let ground_tag = F::TAG;
    let mut passes: Vec<(bool, Vec<GaussianRational>)> = Vec::new();
    let rationals: Vec<GaussianRational> =
        config.height.rationals().into_iter().map(|r| GaussianRational::new(r, Zero::zero())).collect();
    match (ground_tag, mode) {
        (FieldTag::Q, Mode::Ground) => passes.push((false, rationals)),
        (FieldTag::Q, Mode::Closure) => {
            passes.push((false, rationals));
            passes.push((true, config.height.gaussians()));
        }
        (FieldTag::QI, _) => passes.push((true, config.height.gaussians())),
    }
    for (adjoin_i, grid) in passes {
        let ps = PatternSystem::build(g, pat, target, adjoin_i);
        let mut state = Backtrack {
            ps: &ps,
            grid: &grid,
            nodes_left: config.witness_nodes,
            pattern_budget: config.pattern_budget,
            reductions: 0,
            allow_i: adjoin_i,
        };
        let mut values = Vec::new();
        let found = state.run(ps.system.polys().to_vec(), &mut values);
        reductions += state.reductions;
        total.charge(state.reductions);
        if found {
            let space = ps.subspace(&values);
            let ground: Option<Vec<Vec<F>>> =
                space.basis_vectors().iter().map(|row| row.iter().map(F::from_gaussian).collect()).collect();
            let witness = match ground {
                Some(rows) => Witness::Ground(Subspace::span(g.dim(), rows).expect("rows have ambient length")),
                None => Witness::Extended(space),
            };
            return Search { witness: Some(witness), reductions };
        }
    }
    Search { witness: None, reductions }
}

/// Largest degree tried when looking for a univariate relation.
const MIN_POLY_DEGREE: usize = 4;

struct Backtrack<'a> {
    ps: &'a PatternSystem,
    grid: &'a [GaussianRational],
    nodes_left: usize,
    pattern_budget: u64,
    reductions: u64,
    allow_i: bool,
}

impl Backtrack<'_> {
    fn run(&mut self, polys: Vec<MultiPoly>, values: &mut Vec<GaussianRational>) -> bool {
        if self.nodes_left == 0 {
            return false;
        }
        self.nodes_left -= 1;
        let nvars = self.ps.system.nvars();
        let system = crate::arith::PolySystem::from_polys(nvars, polys.clone());
        let mut budget = Budget::new(self.pattern_budget);
        let gb = match buchberger_with(&system, &mut budget) {
            Ok(gb) => gb,
            Err(_) => {
                self.reductions += budget.used();
                return false;
            }
        };
        self.reductions += budget.used();
        if gb.contains_one() {
            return false;
        }
        let v = values.len();
        if v == self.ps.free.len() {
            return true;
        }
        let forced = constant_value(&gb.reduce(&MultiPoly::var(nvars, v)), self.ps.unit_var);
        let candidates: Vec<GaussianRational> = match forced {
            Some(c) if self.allow_i || c.im.is_zero() => vec![c],
            Some(_) => return false,
            None => match roots::minimal_polynomial(&gb, v, MIN_POLY_DEGREE) {
                Some(p) => {
                    let mut c: Vec<GaussianRational> = roots::rational_roots(&p)
                        .into_iter()
                        .map(|r| GaussianRational::new(r, num_rational::BigRational::zero()))
                        .collect();
                    if self.allow_i {
                        for g in self.grid {
                            if !g.im.is_zero() && !c.contains(g) && roots::eval_gaussian(&p, g).is_zero() {
                                c.push(g.clone());
                            }
                        }
                    }
                    c
                }
                None => self.grid.to_vec(),
            },
        };
        for c in candidates {
            let mut next = polys.clone();
            next.push(self.ps.pin(v, &c));
            values.push(c);
            if self.run(next, values) {
                return true;
            }
            values.pop();
            if self.nodes_left == 0 {
                return false;
            }
        }
        false
    }
}

/// `a + b t` read as the Gaussian value `a + b i`.
fn constant_value(p: &MultiPoly, unit_var: Option<usize>) -> Option<GaussianRational> {
    let mut re = num_rational::BigRational::zero();
    let mut im = num_rational::BigRational::zero();
    for (m, c) in p.terms() {
        if m.is_one() {
            re = c.clone();
        } else if unit_var.is_some_and(|t| m.degree() == 1 && m.exponents()[t] == 1) {
            im = c.clone();
        } else {
            return None;
        }
    }
    Some(GaussianRational::new(re, im))
}

/// One line of the per-dimension decision log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEntry {
    pub target: Target,
    pub mode: Mode,
    pub k: usize,
    pub decision: Decision,
    pub patterns: usize,
    pub refuted: usize,
    pub undecided: usize,
    pub reductions: u64,
    pub note: Option<String>,
}

impl LogEntry {
    fn from_outcome<F: Field>(o: &DecisionOutcome<F>) -> Self {
        LogEntry {
            target: o.target,
            mode: o.mode,
            k: o.k,
            decision: o.decision,
            patterns: o.patterns,
            refuted: o.refuted,
            undecided: o.undecided,
            reductions: o.reductions,
            note: None,
        }
    }

    fn shortcut(target: Target, mode: Mode, k: usize, decision: Decision, note: &str) -> Self {
        LogEntry {
            target,
            mode,
            k,
            decision,
            patterns: 0,
            refuted: 0,
            undecided: 0,
            reductions: 0,
            note: Some(note.to_string()),
        }
    }
}

/// α or β with its witness. `value` is `None` when the decisions leave a
/// range `lower..=upper`.
#[derive(Debug, Clone)]
pub struct InvariantResult<F: Field> {
    pub target: Target,
    pub mode: Mode,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<Witness<F>>,
    pub log: Vec<LogEntry>,
}

impl<F: Field> InvariantResult<F> {
    pub fn require(&self) -> Result<usize> {
        self.value.ok_or_else(|| {
            let name = match self.target {
                Target::AbelianSubalgebra => "alpha",
                Target::AbelianIdeal => "beta",
            };
            Error::Undecided(format!("{name} in [{}, {}]", self.lower, self.upper))
        })
    }
}

/// Descends from `start` until a decision says yes.
fn descend<F: Field>(
    g: &LieAlgebra<F>,
    target: Target,
    start: usize,
    config: &EngineConfig,
    log: &mut Vec<LogEntry>,
) -> Result<InvariantResult<F>> {
    let mut upper = start;
    let mut settled = true;
    for k in (0..=start).rev() {
        let o = decide(g, k, target, Mode::Closure, config);
        log.push(LogEntry::from_outcome(&o));
        if let Some(msg) = o.violation {
            return Err(Error::Soundness(msg));
        }
        match o.decision {
            Decision::Yes => {
                return Ok(InvariantResult {
                    target,
                    mode: Mode::Closure,
                    value: settled.then_some(k),
                    lower: k,
                    upper,
                    witness: o.witness,
                    log: log.clone(),
                });
            }
            Decision::No => {
                if settled {
                    upper = k.saturating_sub(1);
                }
            }
            Decision::Undecided => settled = false,
        }
    }
    Err(Error::Soundness("no subspace of dimension 0 found".into()))
}

/// α(g): largest dimension of an abelian subalgebra.
pub fn alpha<F: Field>(g: &LieAlgebra<F>, mode: Mode, config: &EngineConfig) -> Result<InvariantResult<F>> {
    let n = g.dim();
    let mut log = Vec::new();
    let closure = if g.is_abelian() {
        log.push(LogEntry::shortcut(Target::AbelianSubalgebra, Mode::Closure, n, Decision::Yes, "abelian algebra"));
        InvariantResult {
            target: Target::AbelianSubalgebra,
            mode: Mode::Closure,
            value: Some(n),
            lower: n,
            upper: n,
            witness: Some(Witness::Ground(Subspace::full(n))),
            log: log.clone(),
        }
    } else {
        log.push(LogEntry::shortcut(
            Target::AbelianSubalgebra,
            Mode::Closure,
            n,
            Decision::No,
            "algebra is not abelian",
        ));
        descend(g, Target::AbelianSubalgebra, n.saturating_sub(1), config, &mut log)?
    };
    match mode {
        Mode::Closure => Ok(closure),
        Mode::Ground => ground_refine(g, closure, config),
    }
}

/// β(g): largest dimension of an abelian ideal. Checks β ≤ α, and β = α for
/// solvable algebras in closure mode.
pub fn beta<F: Field>(
    g: &LieAlgebra<F>,
    mode: Mode,
    config: &EngineConfig,
    alpha_hint: Option<&InvariantResult<F>>,
) -> Result<InvariantResult<F>> {
    let n = g.dim();
    let computed;
    let a = match alpha_hint {
        Some(a) if a.mode == Mode::Closure => a,
        _ => {
            computed = alpha(g, Mode::Closure, config)?;
            &computed
        }
    };
    let mut log = Vec::new();
    let start = a.upper;
    if start < n {
        log.push(LogEntry::shortcut(Target::AbelianIdeal, Mode::Closure, start + 1, Decision::No, "bounded by alpha"));
    }
    let closure = if g.is_abelian() {
        log.push(LogEntry::shortcut(Target::AbelianIdeal, Mode::Closure, n, Decision::Yes, "abelian algebra"));
        InvariantResult {
            target: Target::AbelianIdeal,
            mode: Mode::Closure,
            value: Some(n),
            lower: n,
            upper: n,
            witness: Some(Witness::Ground(Subspace::full(n))),
            log: log.clone(),
        }
    } else {
        descend(g, Target::AbelianIdeal, start, config, &mut log)?
    };
    if let (Some(b), Some(av)) = (closure.value, a.value) {
        if b > av {
            return Err(Error::Soundness(format!("beta = {b} exceeds alpha = {av}")));
        }
        if b != av && lie::series(g, lie::SeriesKind::Derived).reached_zero {
            return Err(Error::Soundness(format!("solvable algebra with beta = {b} but alpha = {av}")));
        }
    }
    match mode {
        Mode::Closure => Ok(closure),
        Mode::Ground => ground_refine(g, closure, config),
    }
}

/// Ground mode: the closure value bounds from above; a ground witness
/// bounds from below.
fn ground_refine<F: Field>(
    g: &LieAlgebra<F>,
    closure: InvariantResult<F>,
    config: &EngineConfig,
) -> Result<InvariantResult<F>> {
    let target = closure.target;
    let mut log = closure.log.clone();
    let upper = closure.upper;
    if let Some(Witness::Ground(w)) = &closure.witness {
        if closure.value.is_some() {
            log.push(LogEntry::shortcut(target, Mode::Ground, w.dim(), Decision::Yes, "closure witness is ground"));
            return Ok(InvariantResult { mode: Mode::Ground, log, ..closure });
        }
    }
    for k in (0..=upper).rev() {
        let o = decide(g, k, target, Mode::Ground, config);
        log.push(LogEntry::from_outcome(&o));
        if let Some(msg) = o.violation {
            return Err(Error::Soundness(msg));
        }
        if o.decision == Decision::Yes {
            let value = (k == upper && closure.value.is_some()).then_some(k);
            return Ok(InvariantResult { target, mode: Mode::Ground, value, lower: k, upper, witness: o.witness, log });
        }
    }
    Err(Error::Soundness("no ground subspace of dimension 0 found".into()))
}

/// α, β, their witnesses, bounds and the decision log.
#[derive(Debug, Clone)]
pub struct InvariantReport<F: Field> {
    pub alpha: InvariantResult<F>,
    pub beta: InvariantResult<F>,
    pub bounds: Vec<BoundRecord>,
}

impl<F: Field> InvariantReport<F> {
    pub fn log(&self) -> impl Iterator<Item = &LogEntry> {
        self.alpha.log.iter().chain(self.beta.log.iter())
    }
}

pub fn invariants<F: Field>(g: &LieAlgebra<F>, mode: Mode, config: &EngineConfig) -> Result<InvariantReport<F>> {
    let a_closure = alpha(g, Mode::Closure, config)?;
    let b = beta(g, mode, config, Some(&a_closure))?;
    let a = match mode {
        Mode::Closure => a_closure,
        Mode::Ground => ground_refine(g, a_closure, config)?,
    };
    let bounds = bounds(g);
    for rec in &bounds {
        if rec.target == Target::AbelianSubalgebra {
            if let Some(v) = a.value {
                if mode == Mode::Closure && (v < rec.lower || v > rec.upper) {
                    return Err(Error::Soundness(format!(
                        "alpha = {v} outside bound [{}, {}] ({})",
                        rec.lower, rec.upper, rec.source
                    )));
                }
            }
        }
    }
    Ok(InvariantReport { alpha: a, beta: b, bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::families;
    use crate::{Q, QI};

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn heisenberg_decisions() {
        let g = families::heisenberg::<Q>();
        let o = decide_abelian_subalgebra(&g, 2, Mode::Closure, &cfg());
        assert_eq!(o.decision, Decision::Yes);
        let w = o.witness.unwrap();
        assert_eq!(w.dim(), 2);
        assert!(verify_witness(&g, &w, Target::AbelianSubalgebra));
        assert_eq!(decide_abelian_subalgebra(&g, 3, Mode::Closure, &cfg()).decision, Decision::No);
    }

    #[test]
    fn example26_ideal_needs_i() {
        let g = families::example26::<Q>();
        let o = decide_abelian_ideal(&g, 2, Mode::Closure, &cfg());
        assert_eq!(o.decision, Decision::Yes);
        assert!(matches!(o.witness, Some(Witness::Extended(_))));
        let o = decide_abelian_ideal(&g, 2, Mode::Ground, &cfg());
        assert_eq!(o.decision, Decision::Undecided);
        let o = decide_abelian_ideal(&g, 1, Mode::Ground, &cfg());
        assert_eq!(o.decision, Decision::Yes);
        let x4: Subspace<Q> = Subspace::coordinate(4, &[3]);
        assert_eq!(o.witness, Some(Witness::Ground(x4)));
        assert_eq!(decide_abelian_subalgebra(&g, 3, Mode::Closure, &cfg()).decision, Decision::No);

        let gi = families::example26::<QI>();
        let o = decide_abelian_ideal(&gi, 2, Mode::Closure, &cfg());
        assert!(matches!(o.witness, Some(Witness::Ground(_))));
    }

    #[test]
    fn alpha_beta_small() {
        let g = families::nilpotent5::<Q>(2).unwrap();
        let a = alpha(&g, Mode::Closure, &cfg()).unwrap();
        assert_eq!(a.value, Some(4));
        let b = beta(&g, Mode::Closure, &cfg(), Some(&a)).unwrap();
        assert_eq!(b.value, Some(4));
        let s = families::sl2::<Q>();
        let b = beta(&s, Mode::Closure, &cfg(), None).unwrap();
        assert_eq!(b.value, Some(0));
        let ab = LieAlgebra::<Q>::abelian(3);
        assert_eq!(alpha(&ab, Mode::Closure, &cfg()).unwrap().value, Some(3));
    }

    #[test]
    fn ground_alpha_reports_range_for_example26() {
        let g = families::example26::<Q>();
        let b = beta(&g, Mode::Ground, &cfg(), None).unwrap();
        assert_eq!(b.value, None);
        assert_eq!((b.lower, b.upper), (1, 2));
        assert!(b.require().is_err());
    }

    #[test]
    fn tight_budget_is_undecided() {
        let g = families::sl::<Q>(3).unwrap();
        let c = EngineConfig { pattern_budget: 1, ..cfg() };
        let o = decide_abelian_subalgebra(&g, 3, Mode::Closure, &c);
        assert_eq!(o.decision, Decision::Undecided);
        assert!(o.undecided > 0);
    }
}
