//! Algebra files, named families and the shipped corpus.

pub mod families;
mod format;

pub use format::{parse, parse_vectors, serialize, AlgebraFile, Annotation};

use crate::arith::{Field, FieldTag};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::{Q, QI};

/// A Lie algebra over either supported field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyAlgebra {
    Q(LieAlgebra<Q>),
    QI(LieAlgebra<QI>),
}

impl AnyAlgebra {
    pub fn tag(&self) -> FieldTag {
        match self {
            AnyAlgebra::Q(_) => FieldTag::Q,
            AnyAlgebra::QI(_) => FieldTag::QI,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            AnyAlgebra::Q(g) => g.name(),
            AnyAlgebra::QI(g) => g.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Q(g) => g.dim(),
            AnyAlgebra::QI(g) => g.dim(),
        }
    }

    pub fn to_gaussian(&self) -> LieAlgebra<QI> {
        match self {
            AnyAlgebra::Q(g) => g.to_gaussian(),
            AnyAlgebra::QI(g) => g.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyAlgebra::Q(g) => serialize(g, &[]),
            AnyAlgebra::QI(g) => serialize(g, &[]),
        }
    }
}

impl From<LieAlgebra<Q>> for AnyAlgebra {
    fn from(g: LieAlgebra<Q>) -> Self {
        AnyAlgebra::Q(g)
    }
}

impl From<LieAlgebra<QI>> for AnyAlgebra {
    fn from(g: LieAlgebra<QI>) -> Self {
        AnyAlgebra::QI(g)
    }
}

/// Family specs accepted by [`family`], with a description each.
pub const FAMILY_SPECS: &[(&str, &str)] = &[
    ("abelian:<n>", "abelian algebra of dimension n"),
    ("filiform:<n>", "standard graded filiform f_n, n >= 3"),
    ("filiform-k3", "6-dimensional filiform algebra with C^3 the first abelian term"),
    ("n3", "Heisenberg algebra"),
    ("n4", "4-dimensional filiform algebra"),
    ("g5,<1..6>", "5-dimensional nilpotent algebras"),
    ("r2", "2-dimensional non-abelian algebra"),
    ("g1 | g2 | g3", "4-dimensional algebras with alpha = 2"),
    ("g4:<a>", "one-parameter family, a rational"),
    ("example26[:Q|:QI]", "4-dimensional solvable algebra whose 2-dimensional abelian ideal needs i"),
    ("cnla7", "7-dimensional characteristically nilpotent algebra"),
    ("sl2", "sl2 in the basis h, e, f"),
    ("sl2+abelian:<l>", "sl2 plus an abelian summand of dimension l"),
    ("sl:<m>", "sl_m in a Chevalley basis, 2 <= m <= 4"),
    ("borel:<m>", "upper-triangular Borel subalgebra of sl_m, 2 <= m <= 4"),
];

fn param<T: std::str::FromStr>(spec: &str, p: Option<&str>) -> Result<T> {
    let p = p.ok_or_else(|| Error::BadParameter(format!("`{spec}` needs a parameter")))?;
    p.trim().parse().map_err(|_| Error::BadParameter(format!("bad parameter `{p}` in `{spec}`")))
}

/// Builds a named family member, e.g. `g5,2`, `filiform:6`, `g4:1/2`, `example26:QI`.
pub fn family(spec: &str) -> Result<AnyAlgebra> {
    let spec = spec.trim();
    let (head, p) = match spec.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (spec, None),
    };
    let none = |g: AnyAlgebra| -> Result<AnyAlgebra> {
        match p {
            Some(_) => Err(Error::BadParameter(format!("`{head}` takes no parameter"))),
            None => Ok(g),
        }
    };
    if let Some(idx) = head.strip_prefix("g5,") {
        let i: usize = idx.parse().map_err(|_| Error::UnknownFamily(spec.to_string()))?;
        return none(families::nilpotent5::<Q>(i)?.into());
    }
    if let Some(n) = head.strip_prefix('f').filter(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit())) {
        return none(families::filiform::<Q>(n.parse().expect("digits"))?.into());
    }
    match head {
        "abelian" => Ok(families::abelian::<Q>(param(spec, p)?).into()),
        "filiform" => Ok(families::filiform::<Q>(param(spec, p)?)?.into()),
        "filiform-k3" => none(families::filiform_k3::<Q>().into()),
        "n3" | "heisenberg" => none(families::heisenberg::<Q>().into()),
        "n4" => none(families::nilpotent4::<Q>().into()),
        "r2" => none(families::r2::<Q>().into()),
        "g1" => none(families::prop42_g1::<Q>().into()),
        "g2" => none(families::prop42_g2::<Q>().into()),
        "g3" => none(families::prop42_g3::<Q>().into()),
        "g4" => {
            let a: crate::arith::Scalar = param(spec, p)?;
            Ok(match a {
                crate::arith::Scalar::Q(q) => families::prop42_g4::<Q>(q).into(),
                crate::arith::Scalar::QI(z) => families::prop42_g4::<QI>(z).into(),
            })
        }
        "example26" => match p.map(str::trim) {
            None | Some("Q") => Ok(families::example26::<Q>().into()),
            Some("QI") => Ok(families::example26::<QI>().into()),
            Some(other) => Err(Error::BadParameter(format!("unknown field `{other}`"))),
        },
        "cnla7" => none(families::cnla7::<Q>().into()),
        "sl2" => none(families::sl2::<Q>().into()),
        "sl2+abelian" => Ok(families::sl2_plus_abelian::<Q>(param(spec, p)?).into()),
        "sl" => Ok(families::sl::<Q>(param(spec, p)?)?.into()),
        "borel" => Ok(families::borel_sl::<Q>(param(spec, p)?)?.into()),
        _ => Err(Error::UnknownFamily(spec.to_string())),
    }
}

const TABLE5: &str = "nilpotent dim<=5 classification table";
const NILPOTENT_BETA: &str = "nilpotent algebras have beta = alpha";
const ALPHA_N_MINUS_2: &str = "4-dimensional algebras with alpha = n-2";

fn ann(key: &str, value: impl ToString, provenance: &str) -> Annotation {
    Annotation::new(key, value, provenance)
}

fn ab(alpha: usize, beta: usize, pa: &str, pb: &str) -> Vec<Annotation> {
    vec![ann("alpha", alpha, pa), ann("beta", beta, pb)]
}

/// Canonical content of every shipped corpus file, keyed by file name.
pub fn shipped_catalog() -> Vec<(String, AlgebraFile)> {
    let mut out: Vec<(String, AlgebraFile)> = Vec::new();
    let mut add = |file: &str, algebra: AnyAlgebra, annotations: Vec<Annotation>| {
        out.push((file.to_string(), AlgebraFile { algebra, annotations }));
    };
    add("n3.lie", families::heisenberg::<Q>().into(), ab(2, 2, TABLE5, NILPOTENT_BETA));
    add("n4.lie", families::nilpotent4::<Q>().into(), ab(3, 3, TABLE5, NILPOTENT_BETA));
    for (i, a) in [(1, 3), (2, 4), (3, 3), (4, 3), (5, 4), (6, 3)] {
        let g = families::nilpotent5::<Q>(i).expect("index in range");
        add(&format!("g5-{i}.lie"), g.into(), ab(a, a, TABLE5, NILPOTENT_BETA));
    }
    for n in 4..=7 {
        let g = families::filiform::<Q>(n).expect("n >= 3");
        let mut a = ab(n - 1, n - 1, "standard graded filiform: alpha = n-1", "standard graded filiform: beta = n-1");
        a.push(ann("k_abelian", 2, "standard graded filiform: C^2 abelian"));
        add(&format!("f{n}.lie"), g.into(), a);
    }
    let mut a = ab(3, 3, "filiform k-abelian: alpha = n-k", "filiform k-abelian: beta = n-k, witness C^k");
    a.push(ann("k_abelian", 3, "C^3 abelian, C^2 not"));
    add("filiform-k3.lie", families::filiform_k3::<Q>().into(), a);
    let mut a = ab(5, 5, "7-dimensional characteristically nilpotent example", NILPOTENT_BETA);
    a.push(ann("characteristically_nilpotent", true, "7-dimensional characteristically nilpotent example"));
    add("cnla7.lie", families::cnla7::<Q>().into(), a);
    add("r2.lie", families::r2::<Q>().into(), ab(1, 1, "2-dimensional non-abelian", "span{e2} is an ideal"));
    add("g1.lie", families::prop42_g1::<Q>().into(), ab(2, 2, ALPHA_N_MINUS_2, "solvable: beta = alpha"));
    add("g2.lie", families::prop42_g2::<Q>().into(), ab(2, 1, ALPHA_N_MINUS_2, "sl2 plus center: beta = 1"));
    add("g3.lie", families::prop42_g3::<Q>().into(), ab(2, 2, ALPHA_N_MINUS_2, "solvable: beta = alpha"));
    for (file, a) in [("g4-0.lie", Q::from_i64(0)), ("g4-1-2.lie", Q::new(1.into(), 2.into()))] {
        add(file, families::prop42_g4::<Q>(a).into(), ab(2, 2, ALPHA_N_MINUS_2, "solvable: beta = alpha"));
    }
    let mut a = ab(2, 2, "solvable example: alpha = 2", "closure ideal <x2+ix3, x4>");
    a.push(ann("ground_beta_witness", 1, "over Q only span{x4}"));
    add("example26.lie", families::example26::<Q>().into(), a);
    add(
        "example26-qi.lie",
        families::example26::<QI>().into(),
        ab(2, 2, "solvable example: alpha = 2", "ideal <x2+ix3, x4>"),
    );
    add("sl2.lie", families::sl2::<Q>().into(), ab(1, 0, "A1: alpha = 1", "semisimple: no abelian ideals"));
    add(
        "sl2-abelian2.lie",
        families::sl2_plus_abelian::<Q>(2).into(),
        ab(3, 2, "additivity: 1 + 2", "abelian ideals lie in the center"),
    );
    add(
        "borel-sl3.lie",
        families::borel_sl::<Q>(3).expect("m in range").into(),
        ab(2, 2, "A2: alpha(sl3) = 2 = beta(borel)", "solvable: beta = alpha"),
    );
    add("abelian4.lie", families::abelian::<Q>(4).into(), ab(4, 4, "abelian: alpha = n", "abelian: beta = n"));
    out
}

macro_rules! shipped {
    ($($file:literal),* $(,)?) => {
        /// Shipped corpus files as `(file name, text)`.
        pub const SHIPPED: &[(&str, &str)] = &[$(($file, include_str!(concat!("../../corpus/", $file)))),*];
    };
}

shipped!(
    "n3.lie",
    "n4.lie",
    "g5-1.lie",
    "g5-2.lie",
    "g5-3.lie",
    "g5-4.lie",
    "g5-5.lie",
    "g5-6.lie",
    "f4.lie",
    "f5.lie",
    "f6.lie",
    "f7.lie",
    "filiform-k3.lie",
    "cnla7.lie",
    "r2.lie",
    "g1.lie",
    "g2.lie",
    "g3.lie",
    "g4-0.lie",
    "g4-1-2.lie",
    "example26.lie",
    "example26-qi.lie",
    "sl2.lie",
    "sl2-abelian2.lie",
    "borel-sl3.lie",
    "abelian4.lie",
);

/// Parses every shipped file.
pub fn shipped() -> Result<Vec<(&'static str, AlgebraFile)>> {
    SHIPPED.iter().map(|(name, text)| Ok((*name, parse(text)?))).collect()
}

/// Looks up a shipped file by name, with or without the `.lie` suffix.
pub fn shipped_file(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(f, _)| *f == name || f.strip_suffix(".lie") == Some(name)).map(|(_, text)| *text)
}

/// Random invertible rational matrices for change-of-basis checks.
pub fn random_invertible<F: Field>(n: usize, rng: &mut impl rand::Rng) -> crate::linalg::Matrix<F> {
    loop {
        let rows: Vec<Vec<F>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let p: i64 = rng.gen_range(-3..=3);
                        let q: i64 = rng.gen_range(1..=3);
                        F::from_rational(Q::new(p.into(), q.into()))
                    })
                    .collect()
            })
            .collect();
        let m = crate::linalg::Matrix::from_rows(rows, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// The algebra in a random rational basis, with the basis matrix (columns = new basis).
pub fn random_change_of_basis<F: Field>(
    g: &LieAlgebra<F>,
    rng: &mut impl rand::Rng,
) -> Result<(LieAlgebra<F>, crate::linalg::Matrix<F>)> {
    let t = random_invertible::<F>(g.dim(), rng);
    Ok((g.change_of_basis(&t)?, t))
}
