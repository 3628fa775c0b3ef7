use abelian_core::corpus::{self, AnyAlgebra};
use abelian_core::engine::{alpha, beta, EngineConfig, Mode};
use abelian_core::lie::classify;
use abelian_core::{Field, LieAlgebra};

fn check_annotations<F: Field>(file: &str, g: &LieAlgebra<F>, f: &corpus::AlgebraFile) {
    let cfg = EngineConfig::default();
    let a = alpha(g, Mode::Closure, &cfg).unwrap();
    let b = beta(g, Mode::Closure, &cfg, Some(&a)).unwrap();
    if let Some(e) = f.expected("alpha") {
        assert_eq!(a.value, e.as_usize(), "{file}: alpha ({})", e.provenance);
    }
    if let Some(e) = f.expected("beta") {
        assert_eq!(b.value, e.as_usize(), "{file}: beta ({})", e.provenance);
    }
    let report = classify(g);
    if let Some(e) = f.expected("k_abelian") {
        assert_eq!(report.k_abelian_index, e.as_usize(), "{file}: k-abelian index");
    }
    if let Some(e) = f.expected("characteristically_nilpotent") {
        assert_eq!(Some(report.is_characteristically_nilpotent), e.as_bool(), "{file}");
    }
    if let Some(e) = f.expected("ground_beta_witness") {
        let gb = beta(g, Mode::Ground, &cfg, Some(&a)).unwrap();
        assert_eq!(Some(gb.lower), e.as_usize(), "{file}: ground beta witness");
    }
}

#[test]
fn shipped_files_round_trip() {
    for (file, text) in corpus::SHIPPED {
        let f = corpus::parse(text).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(&f.to_text(), text, "{file}");
        assert!(!text.to_lowercase().contains("paper"), "{file}");
    }
}

#[test]
fn shipped_annotations_match_engine() {
    for (file, f) in corpus::shipped().unwrap() {
        match &f.algebra {
            AnyAlgebra::Q(g) => check_annotations(file, g, &f),
            AnyAlgebra::QI(g) => check_annotations(file, g, &f),
        }
    }
}
