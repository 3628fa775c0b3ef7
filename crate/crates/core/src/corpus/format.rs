//! Line-oriented text format for structure constants.
//!
//! ```text
//! format: 1
//! name: n3
//! dim: 3
//! field: Q
//! [1,2] = 1/1*e3
//! expect alpha = 2 # nilpotent dim<=5 classification table
//! ```

use std::collections::BTreeMap;

use crate::arith::{Field, FieldTag, Scalar};
use crate::corpus::AnyAlgebra;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::{Q, QI};

/// An `expect <key> = <value> # <provenance>` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub key: String,
    pub value: String,
    pub provenance: String,
}

impl Annotation {
    pub fn new(key: &str, value: impl ToString, provenance: &str) -> Self {
        Annotation { key: key.to_string(), value: value.to_string(), provenance: provenance.to_string() }
    }

    pub fn as_usize(&self) -> Option<usize> {
        self.value.parse().ok()
    }

    pub fn as_bool(&self) -> Option<bool> {
        self.value.parse().ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: AnyAlgebra,
    pub annotations: Vec<Annotation>,
}

impl AlgebraFile {
    pub fn expected(&self, key: &str) -> Option<&Annotation> {
        self.annotations.iter().find(|a| a.key == key)
    }

    pub fn to_text(&self) -> String {
        match &self.algebra {
            AnyAlgebra::Q(g) => serialize(g, &self.annotations),
            AnyAlgebra::QI(g) => serialize(g, &self.annotations),
        }
    }
}

/// Canonical text: brackets sorted by `(i, j)`, components by `k`, reduced fractions.
pub fn serialize<F: Field>(g: &LieAlgebra<F>, annotations: &[Annotation]) -> String {
    let mut out = String::new();
    out.push_str("format: 1\n");
    out.push_str(&format!("name: {}\n", g.name()));
    out.push_str(&format!("dim: {}\n", g.dim()));
    out.push_str(&format!("field: {}\n", g.field_tag().as_str()));
    for (i, j, v) in g.nonzero_brackets() {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}*e{}", c.token(), k + 1))
            .collect();
        out.push_str(&format!("[{},{}] = {}\n", i + 1, j + 1, terms.join(" + ")));
    }
    for a in annotations {
        out.push_str(&format!("expect {} = {} # {}\n", a.key, a.value, a.provenance));
    }
    out
}

struct Header {
    name: Option<String>,
    dim: Option<usize>,
    field: Option<FieldTag>,
}

type RawBrackets = BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>;

/// Parses and validates one algebra file.
pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut header = Header { name: None, dim: None, field: None };
    let mut brackets: RawBrackets = BTreeMap::new();
    let mut lines_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut annotations = Vec::new();
    let mut seen_body = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let syntax = |message: String| Error::Syntax { line: line_no, message };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('[') {
            let n = header.dim.ok_or_else(|| syntax("bracket before `dim:` header".into()))?;
            header.field.ok_or_else(|| syntax("bracket before `field:` header".into()))?;
            seen_body = true;
            let (i, j, terms) = parse_bracket(line, n).map_err(syntax)?;
            if brackets.insert((i, j), terms).is_some() {
                return Err(syntax(format!("bracket [{i},{j}] given twice (first on line {})", lines_of[&(i, j)])));
            }
            lines_of.insert((i, j), line_no);
            continue;
        }
        if let Some(rest) = line.strip_prefix("expect ") {
            seen_body = true;
            annotations.push(parse_annotation(rest).map_err(syntax)?);
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(syntax(format!("unrecognised line `{line}`")));
        };
        if seen_body {
            return Err(syntax(format!("header `{}` after brackets", key.trim())));
        }
        let value = value.trim();
        match key.trim() {
            "format" => {
                if value != "1" {
                    return Err(syntax(format!("unsupported format version `{value}`")));
                }
            }
            "name" => header.name = Some(value.to_string()),
            "dim" => {
                header.dim = Some(value.parse().map_err(|_| syntax(format!("bad dimension `{value}`")))?);
            }
            "field" => {
                header.field = Some(value.parse().map_err(|_| syntax(format!("unknown field `{value}`")))?);
            }
            other => return Err(syntax(format!("unknown header `{other}`"))),
        }
    }

    let end = text.lines().count().max(1);
    let missing = |what: &str| Error::Syntax { line: end, message: format!("missing `{what}:` header") };
    let name = header.name.ok_or_else(|| missing("name"))?;
    let n = header.dim.ok_or_else(|| missing("dim"))?;
    let field = header.field.ok_or_else(|| missing("field"))?;
    let algebra = match field {
        FieldTag::Q => AnyAlgebra::Q(build::<Q>(&name, n, &brackets, &lines_of)?),
        FieldTag::QI => AnyAlgebra::QI(build::<QI>(&name, n, &brackets, &lines_of)?),
    };
    Ok(AlgebraFile { algebra, annotations })
}

fn build<F: Field>(
    name: &str,
    n: usize,
    brackets: &RawBrackets,
    lines_of: &BTreeMap<(usize, usize), usize>,
) -> Result<LieAlgebra<F>> {
    let mut b = Vec::new();
    for (&(i, j), terms) in brackets {
        let mut v = Vec::new();
        for (&k, c) in terms {
            let c: F = c.into_field().map_err(|e| Error::Syntax { line: lines_of[&(i, j)], message: e.to_string() })?;
            v.push((k, c));
        }
        b.push((i, j, v));
    }
    LieAlgebra::from_brackets(name, n, &b)
}

/// `[i,j] = c*ek + c*el ...`; coefficients may be omitted (`e3`, `- e3`).
fn parse_bracket(line: &str, n: usize) -> std::result::Result<(usize, usize, BTreeMap<usize, Scalar>), String> {
    let (lhs, rhs) = line.split_once('=').ok_or("bracket line needs `=`")?;
    let inner =
        lhs.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or("bracket must look like `[i,j]`")?;
    let (i, j) = inner.split_once(',').ok_or("bracket must look like `[i,j]`")?;
    let i: usize = i.trim().parse().map_err(|_| format!("bad index `{}`", i.trim()))?;
    let j: usize = j.trim().parse().map_err(|_| format!("bad index `{}`", j.trim()))?;
    if i >= j {
        return Err(format!("bracket [{i},{j}] must have i < j"));
    }
    if i == 0 || j > n {
        return Err(format!("bracket [{i},{j}] out of range for dimension {n}"));
    }

    let mut terms = BTreeMap::new();
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok((i, j, terms));
    }
    let bytes = rhs.as_bytes();
    let mut start = 0;
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] == b'e' && pos + 1 < bytes.len() && bytes[pos + 1].is_ascii_digit() {
            let mut end = pos + 1;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            let k: usize = rhs[pos + 1..end].parse().map_err(|_| "bad basis index".to_string())?;
            if k == 0 || k > n {
                return Err(format!("component e{k} out of range for dimension {n}"));
            }
            let coeff = parse_coefficient(&rhs[start..pos])?;
            if terms.insert(k, coeff).is_some() {
                return Err(format!("component e{k} repeated"));
            }
            start = end;
            pos = end;
        } else {
            pos += 1;
        }
    }
    if !rhs[start..].trim().is_empty() {
        return Err(format!("trailing text `{}`", rhs[start..].trim()));
    }
    if terms.is_empty() {
        return Err("bracket has no components".into());
    }
    Ok((i, j, terms))
}

fn parse_coefficient(text: &str) -> std::result::Result<Scalar, String> {
    let mut t = text.trim();
    t = t.strip_suffix('*').map(str::trim).unwrap_or(t);
    // connector between terms
    if let Some(rest) = t.strip_prefix('+') {
        t = rest.trim();
    }
    let mut negate = false;
    if let Some(rest) = t.strip_prefix('-') {
        if rest.is_empty() || rest.starts_with(char::is_whitespace) {
            negate = true;
            t = rest.trim();
        }
    }
    let c = if t.is_empty() {
        Scalar::rational(1, 1).expect("1/1 is valid")
    } else {
        t.parse::<Scalar>().map_err(|e| e.to_string())?
    };
    Ok(if negate { Scalar::apply(crate::arith::FieldOp::Neg, &c, &c).map_err(|e| e.to_string())? } else { c })
}

fn parse_annotation(rest: &str) -> std::result::Result<Annotation, String> {
    let (body, provenance) = match rest.split_once('#') {
        Some((b, p)) => (b, p.trim()),
        None => (rest, ""),
    };
    let (key, value) = body.split_once('=').ok_or("annotation needs `key = value`")?;
    let (key, value) = (key.trim(), value.trim());
    if key.is_empty() || value.is_empty() || key.contains(char::is_whitespace) {
        return Err(format!("bad annotation `{}`", body.trim()));
    }
    Ok(Annotation::new(key, value, provenance))
}

/// Vectors, one per line, as whitespace-separated scalar tokens.
pub fn parse_vectors<F: Field>(text: &str, n: usize) -> Result<Vec<Vec<F>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line: idx + 1, message };
        let v: Vec<F> = line
            .split_whitespace()
            .map(|t| t.parse::<Scalar>().and_then(|s| s.into_field::<F>()).map_err(|e| syntax(e.to_string())))
            .collect::<Result<_>>()?;
        if v.len() != n {
            return Err(syntax(format!("expected {n} entries, found {}", v.len())));
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::families;

    #[test]
    fn heisenberg_file() {
        let text = "format: 1\nname: n3\ndim: 3\nfield: Q\n[1,2] = 1/1*e3\nexpect alpha = 2 # table\n";
        let f = parse(text).unwrap();
        assert_eq!(f.algebra.dim(), 3);
        assert_eq!(f.expected("alpha").unwrap().as_usize(), Some(2));
        assert_eq!(f.to_text(), text);
    }

    #[test]
    fn rejects_descending_bracket() {
        let text = "name: x\ndim: 3\nfield: Q\n[2,1] = e3\n";
        assert!(matches!(parse(text), Err(Error::Syntax { line: 4, .. })));
    }

    #[test]
    fn lenient_coefficients() {
        let text = "name: ex\ndim: 4\nfield: Q\n[1,2] = e2 - e3\n[1,3] = e2 + e3\n[1,4] = 2*e4\n[2,3] = e4\n";
        let f = parse(text).unwrap();
        let AnyAlgebra::Q(g) = &f.algebra else { panic!() };
        assert_eq!(g.nonzero_brackets(), families::example26::<Q>().nonzero_brackets());
        let qi = text.replace("field: Q", "field: QI");
        assert_eq!(parse(&qi).unwrap().algebra.tag(), FieldTag::QI);
    }

    #[test]
    fn imaginary_needs_qi() {
        let text = "name: x\ndim: 3\nfield: Q\n[1,2] = 1/1+1/1i*e3\n";
        assert!(matches!(parse(text), Err(Error::Syntax { line: 4, .. })));
        let ok = parse(&text.replace("field: Q", "field: QI")).unwrap();
        assert!(ok.to_text().contains("[1,2] = 1/1+1/1i*e3"));
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        let text = "name: bad\ndim: 3\nfield: Q\n[1,2] = e3\n[1,3] = e1\n";
        assert!(matches!(parse(text), Err(Error::Jacobi { .. })));
    }

    #[test]
    fn missing_headers_and_duplicates() {
        assert!(parse("dim: 2\nfield: Q\n").is_err());
        assert!(parse("name: a\ndim: 3\nfield: Q\n[1,2] = e3\n[1,2] = e3\n").is_err());
        assert!(parse("name: a\ndim: 3\nfield: Q\n[1,2] = e4\n").is_err());
        assert!(parse("format: 2\nname: a\ndim: 1\nfield: Q\n").is_err());
    }

    #[test]
    fn vectors() {
        let v = parse_vectors::<Q>("0 1 0\n# note\n0 0 1/2\n", 3).unwrap();
        assert_eq!(v.len(), 2);
        assert!(parse_vectors::<Q>("1 2\n", 3).is_err());
        assert!(parse_vectors::<Q>("1 i 0\n", 3).is_err());
    }
}
