use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cartan type of a complex simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "A" | "a" => SimpleType::A,
            "B" | "b" => SimpleType::B,
            "C" | "c" => SimpleType::C,
            "D" | "d" => SimpleType::D,
            "E" | "e" => SimpleType::E,
            "F" | "f" => SimpleType::F,
            "G" | "g" => SimpleType::G,
            other => return Err(Error::UnknownType(other.to_string())),
        })
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Maximal dimension of an abelian subalgebra of the simple algebra of the given type and rank.
pub fn alpha_simple(ty: SimpleType, rank: u64) -> Result<u64> {
    let n = rank;
    let bad = || Error::UnknownType(format!("{ty}{n}"));
    Ok(match ty {
        SimpleType::A if n >= 1 => (n + 1) * (n + 1) / 4,
        SimpleType::B if n == 3 => 5,
        SimpleType::B if n >= 4 => n * (n - 1) / 2 + 1,
        SimpleType::C if n >= 2 => n * (n + 1) / 2,
        SimpleType::D if n >= 4 => n * (n - 1) / 2,
        SimpleType::G if n == 2 => 3,
        SimpleType::F if n == 4 => 9,
        SimpleType::E => match n {
            6 => 16,
            7 => 27,
            8 => 36,
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_pairs() {
        for (t, r) in [("A", 0), ("B", 2), ("C", 1), ("D", 3), ("G", 3), ("F", 5), ("E", 5), ("E", 9)] {
            assert!(alpha_simple(t.parse().unwrap(), r).is_err(), "{t}{r}");
        }
        assert!("X".parse::<SimpleType>().is_err());
    }

    #[test]
    fn type_a_is_floor_of_square() {
        // ⌊((n+1)/2)²⌋ evaluated with rationals
        for n in 1..30u64 {
            let v = num_rational::Ratio::new((n + 1) * (n + 1), 4).to_integer();
            assert_eq!(alpha_simple(SimpleType::A, n).unwrap(), v);
        }
    }
}
