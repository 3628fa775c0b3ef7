//! Executable acceptance checks, one per criterion, shared by the test suite
//! and the command-line `selftest`.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;
use crate::construct::{codim1_ideal, codim2_ideal_nilpotent};
use crate::corpus::{self, families, AnyAlgebra};
use crate::engine::{
    alpha, alpha_simple, beta, decide_abelian_ideal, decide_abelian_subalgebra, enumerate_borel_root_ideals,
    nilpotent_lower_bound, verify_witness, Decision, EngineConfig, Mode, SimpleType, Target, Witness,
};
use crate::error::{Error, Result};
use crate::lie::{classify, series, LieAlgebra, SeriesKind};
use crate::linalg::Subspace;
use crate::{Q, QI};

/// Time allowed for one α computation in the small-dimension table check.
pub const PER_ALGEBRA_LIMIT: Duration = Duration::from_secs(60);
/// Time allowed for the property suite.
pub const PROPERTY_SUITE_LIMIT: Duration = Duration::from_secs(15 * 60);

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    pub engine: EngineConfig,
    pub seed: u64,
    pub changes_of_basis: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { engine: EngineConfig::default(), seed: 2024, changes_of_basis: 20 }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {} ({:.2}s): {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const TITLES: [&str; 10] = [
    "alpha of nilpotent algebras of dimension <= 5",
    "beta = alpha on the same algebras",
    "real versus complex abelian ideals of the 4-dimensional example",
    "constructive ideals of codimension 1 and 2",
    "alpha of simple algebras",
    "abelian root ideals of Borel subalgebras",
    "alpha bounds for nilpotent algebras",
    "property suite",
    "characteristically nilpotent 7-dimensional algebra",
    "filiform algebras",
];

pub fn run_all(config: &SelftestConfig) -> Vec<CriterionResult> {
    (1..=10).map(|id| run_criterion(id, config)).collect()
}

pub fn run_criterion(id: usize, config: &SelftestConfig) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => table_alpha(config),
        2 => table_beta(config),
        3 => example26_fields(config),
        4 => constructive(config),
        5 => simple_alpha(),
        6 => borel(config),
        7 => nilpotent_bounds(config),
        8 => properties(config),
        9 => cnla7(config),
        10 => filiform(config),
        _ => Err(Error::BadParameter(format!("no criterion {id}"))),
    };
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(e) => (false, e.to_string()),
    };
    CriterionResult {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn fail(msg: String) -> Error {
    Error::Soundness(msg)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// `(family spec, α)` for the nilpotent table.
pub const TABLE: [(&str, usize); 8] =
    [("n3", 2), ("n4", 3), ("g5,6", 3), ("g5,5", 4), ("g5,3", 3), ("g5,4", 3), ("g5,2", 4), ("g5,1", 3)];

fn rational(spec: &str) -> Result<LieAlgebra<Q>> {
    match corpus::family(spec)? {
        AnyAlgebra::Q(g) => Ok(g),
        AnyAlgebra::QI(_) => Err(Error::BadParameter(format!("{spec} is not rational"))),
    }
}

fn table_alpha(config: &SelftestConfig) -> Result<String> {
    let mut slowest = Duration::ZERO;
    for (spec, expected) in TABLE {
        let g = rational(spec)?;
        let t = Instant::now();
        let a = alpha(&g, Mode::Closure, &config.engine)?.require()?;
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        ensure(a == expected, || format!("alpha({spec}) = {a}, expected {expected}"))?;
        ensure(dt <= PER_ALGEBRA_LIMIT, || format!("alpha({spec}) took {dt:?}"))?;
    }
    Ok(format!("8/8 match, slowest {:.3}s", slowest.as_secs_f64()))
}

fn table_beta(config: &SelftestConfig) -> Result<String> {
    for (spec, expected) in TABLE {
        let g = rational(spec)?;
        let b = beta(&g, Mode::Closure, &config.engine, None)?.require()?;
        ensure(b == expected, || format!("beta({spec}) = {b}, expected {expected}"))?;
    }
    Ok("8/8 have beta = alpha".into())
}

fn example26_fields(config: &SelftestConfig) -> Result<String> {
    let cfg = &config.engine;
    let g = families::example26::<Q>();
    let b = beta(&g, Mode::Closure, cfg, None)?;
    ensure(b.value == Some(2), || format!("closure beta = {:?}", b.value))?;
    let w = b.witness.as_ref().ok_or_else(|| fail("closure beta has no witness".into()))?;
    ensure(w.dim() == 2 && verify_witness(&g, w, Target::AbelianIdeal), || "beta witness fails".into())?;

    let one = decide_abelian_ideal(&g, 1, Mode::Ground, cfg);
    let x4 = Witness::Ground(Subspace::coordinate(4, &[3]));
    ensure(one.decision == Decision::Yes && one.witness.as_ref() == Some(&x4), || {
        format!("ground k=1: {} {:?}", one.decision, one.witness)
    })?;
    let two = decide_abelian_ideal(&g, 2, Mode::Ground, cfg);
    ensure(two.decision != Decision::Yes && two.witness.is_none(), || "ground witness of dimension 2 found".into())?;

    let a = alpha(&g, Mode::Closure, cfg)?.require()?;
    ensure(a == 2, || format!("closure alpha = {a}"))?;
    let three = decide_abelian_subalgebra(&g, 3, Mode::Closure, cfg);
    ensure(three.decision == Decision::No, || format!("abelian subalgebra k=3: {}", three.decision))?;
    Ok(format!("closure beta = 2 via {:?}; ground: span{{x4}} at k=1, {} at k=2; alpha = 2", w.rows(), two.decision))
}

/// Ground witness of an abelian subalgebra of dimension `k`.
fn subalgebra_witness<F: Field>(g: &LieAlgebra<F>, k: usize, cfg: &EngineConfig) -> Result<Subspace<F>> {
    let o = decide_abelian_subalgebra(g, k, Mode::Ground, cfg);
    match o.witness {
        Some(Witness::Ground(s)) => Ok(s),
        _ => Err(Error::Undecided(format!("no ground witness of dimension {k} ({})", o.decision))),
    }
}

fn construct_once(g: &LieAlgebra<Q>, codim: usize, cfg: &EngineConfig) -> Result<()> {
    let n = g.dim();
    let a = subalgebra_witness(g, n - codim, cfg)?;
    let (ideal, trace) = if codim == 1 { codim1_ideal(g, &a)? } else { codim2_ideal_nilpotent(g, &a)? };
    ensure(ideal.dim() == n - codim && g.is_abelian_ideal(&ideal)?, || "output is not an abelian ideal".into())?;
    ensure(trace.v_consistent(), || "trace v_j inconsistent".into())?;
    Ok(())
}

fn constructive(config: &SelftestConfig) -> Result<String> {
    let cfg = &config.engine;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let cases: [(&str, usize); 6] = [("f5", 1), ("g5,1", 2), ("g5,3", 2), ("g5,4", 2), ("g5,6", 2), ("cnla7", 2)];
    let mut runs = 0;
    for (spec, codim) in cases {
        let g = rational(spec)?;
        let a = alpha(&g, Mode::Closure, cfg)?.require()?;
        ensure(a == g.dim() - codim, || format!("alpha({spec}) = {a}, expected n-{codim}"))?;
        construct_once(&g, codim, cfg).map_err(|e| fail(format!("{spec}: {e}")))?;
        runs += 1;
        for round in 0..config.changes_of_basis {
            let (h, _) = corpus::random_change_of_basis(&g, &mut rng)?;
            construct_once(&h, codim, cfg).map_err(|e| fail(format!("{spec}, basis change {round}: {e}")))?;
            runs += 1;
        }
    }
    Ok(format!("{runs}/{runs} constructions verified"))
}

/// `(type, rank, α)` for simple algebras.
pub const SIMPLE: [(SimpleType, u64, u64); 11] = [
    (SimpleType::A, 1, 1),
    (SimpleType::A, 3, 4),
    (SimpleType::B, 3, 5),
    (SimpleType::B, 4, 7),
    (SimpleType::C, 3, 6),
    (SimpleType::D, 4, 6),
    (SimpleType::G, 2, 3),
    (SimpleType::F, 4, 9),
    (SimpleType::E, 6, 16),
    (SimpleType::E, 7, 27),
    (SimpleType::E, 8, 36),
];

fn simple_alpha() -> Result<String> {
    for (t, r, expected) in SIMPLE {
        let v = alpha_simple(t, r)?;
        ensure(v == expected, || format!("{t}{r}: {v}, expected {expected}"))?;
    }
    Ok("11/11 match".into())
}

fn borel(config: &SelftestConfig) -> Result<String> {
    let c1 = enumerate_borel_root_ideals(1)?.count();
    let c2 = enumerate_borel_root_ideals(2)?.count();
    ensure(c1 == 2 && c2 == 4, || format!("counts {c1}, {c2}"))?;
    let b = families::borel_sl::<Q>(3)?;
    let a = alpha(&b, Mode::Closure, &config.engine)?;
    let bb = beta(&b, Mode::Closure, &config.engine, Some(&a))?;
    ensure(a.value == Some(2) && bb.value == Some(2), || format!("alpha {:?}, beta {:?}", a.value, bb.value))?;
    Ok("rank 1: 2, rank 2: 4; alpha = beta = 2 for borel(sl3)".into())
}

fn nilpotent_bounds(config: &SelftestConfig) -> Result<String> {
    let mut checked = 0;
    for (file, f) in corpus::shipped()? {
        let AnyAlgebra::Q(g) = &f.algebra else { continue };
        if g.is_abelian() || !series(g, SeriesKind::LowerCentral).reached_zero {
            continue;
        }
        let n = g.dim();
        let a = alpha(g, Mode::Closure, &config.engine)?.require()?;
        let lo = nilpotent_lower_bound(n);
        ensure(lo <= a && a < n, || format!("{file}: alpha {a} outside [{lo}, {}]", n - 1))?;
        if file == "cnla7.lie" {
            ensure((lo, n - 1) == (4, 6), || format!("cnla7 window [{lo}, {}]", n - 1))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} nilpotent algebras within bounds; cnla7 window [4, 6]"))
}

fn alpha_q(g: &LieAlgebra<Q>, cfg: &EngineConfig) -> Result<usize> {
    alpha(g, Mode::Closure, cfg)?.require()
}

fn properties(config: &SelftestConfig) -> Result<String> {
    let started = Instant::now();
    let cfg = &config.engine;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed);

    let pairs: [(&str, &str); 10] = [
        ("n3", "n3"),
        ("n3", "r2"),
        ("r2", "r2"),
        ("n4", "r2"),
        ("sl2", "n3"),
        ("sl2", "r2"),
        ("g5,2", "r2"),
        ("g1", "abelian:2"),
        ("g3", "r2"),
        ("n3", "abelian:3"),
    ];
    for (x, y) in pairs {
        let (g, h) = (rational(x)?, rational(y)?);
        let s = alpha_q(&g.direct_sum(&h), cfg)?;
        let (a, b) = (alpha_q(&g, cfg)?, alpha_q(&h, cfg)?);
        ensure(s == a + b, || format!("alpha({x}+{y}) = {s}, expected {a}+{b}"))?;
    }

    let mut algebras = 0;
    for (file, f) in corpus::shipped()? {
        match &f.algebra {
            AnyAlgebra::Q(g) => per_algebra(file, g, cfg, &mut rng)?,
            AnyAlgebra::QI(g) => per_algebra(file, g, cfg, &mut rng)?,
        }
        algebras += 1;
    }
    let dt = started.elapsed();
    ensure(dt <= PROPERTY_SUITE_LIMIT, || format!("suite took {dt:?}"))?;
    Ok(format!("10 direct sums additive; {algebras} algebras: centralizer, basis-change invariance, beta <= alpha"))
}

fn per_algebra<F: Field>(file: &str, g: &LieAlgebra<F>, cfg: &EngineConfig, rng: &mut ChaCha8Rng) -> Result<()> {
    let a = alpha(g, Mode::Closure, cfg)?;
    let b = beta(g, Mode::Closure, cfg, Some(&a))?;
    let (av, bv) = (a.require()?, b.require()?);
    ensure(bv <= av, || format!("{file}: beta {bv} > alpha {av}"))?;

    // maximal abelian subalgebras contain the center and are self-centralizing
    let w = a.witness.as_ref().ok_or_else(|| fail(format!("{file}: alpha witness missing")))?;
    let gi: LieAlgebra<QI> = g.to_gaussian();
    let wi = w.to_gaussian();
    ensure(wi.contains(&gi.center())?, || format!("{file}: center not inside maximal witness"))?;
    ensure(gi.centralizer(&wi)? == wi, || format!("{file}: maximal witness not self-centralizing"))?;

    let (h, _) = corpus::random_change_of_basis(g, rng)?;
    let ah = alpha(&h, Mode::Closure, cfg)?.require()?;
    let bh = beta(&h, Mode::Closure, cfg, None)?.require()?;
    ensure((ah, bh) == (av, bv), || format!("{file}: ({ah}, {bh}) after basis change, was ({av}, {bv})"))?;
    for kind in [SeriesKind::LowerCentral, SeriesKind::Derived] {
        let (d0, d1) = (series(g, kind).dims(), series(&h, kind).dims());
        ensure(d0 == d1, || format!("{file}: {kind:?} series {d0:?} became {d1:?}"))?;
    }
    Ok(())
}

fn cnla7(config: &SelftestConfig) -> Result<String> {
    let g = families::cnla7::<Q>();
    let r = classify(&g);
    ensure(r.is_characteristically_nilpotent, || "not characteristically nilpotent".into())?;
    let a = alpha(&g, Mode::Closure, &config.engine)?;
    let b = beta(&g, Mode::Closure, &config.engine, Some(&a))?;
    ensure(a.value == Some(5) && b.value == Some(5), || format!("alpha {:?}, beta {:?}", a.value, b.value))?;
    Ok(format!("characteristically nilpotent, derivations of dimension {}, alpha = beta = 5", r.derivation_dim))
}

fn filiform(config: &SelftestConfig) -> Result<String> {
    let cfg = &config.engine;
    for n in 4..=7 {
        let g = families::filiform::<Q>(n)?;
        let r = classify(&g);
        ensure(r.k_abelian_index == Some(2), || format!("f{n}: k = {:?}", r.k_abelian_index))?;
        let b = beta(&g, Mode::Closure, cfg, None)?.require()?;
        ensure(b == n - 1, || format!("f{n}: beta = {b}"))?;
    }
    let g = families::filiform_k3::<Q>();
    let r = classify(&g);
    ensure(r.is_filiform && r.k_abelian_index == Some(3), || "filiform-k3 misclassified".into())?;
    let n = g.dim();
    let a = alpha(&g, Mode::Closure, cfg)?;
    let b = beta(&g, Mode::Closure, cfg, Some(&a))?;
    ensure(a.value == Some(n - 3) && b.value == Some(n - 3), || format!("alpha {:?}, beta {:?}", a.value, b.value))?;
    let c3 = series(&g, SeriesKind::LowerCentral).terms[2].clone();
    ensure(b.witness == Some(Witness::Ground(c3)), || format!("beta witness {:?} is not C^3", b.witness))?;
    Ok("f4..f7: k = 2, beta = n-1; filiform-k3: alpha = beta = 3 with witness C^3".into())
}
