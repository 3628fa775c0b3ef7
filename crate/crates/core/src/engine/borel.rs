use crate::corpus::families::{borel_sl, borel_sl_roots};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::Q;

/// Root-spanned abelian ideals of the Borel subalgebra of `sl_{rank+1}`.
#[derive(Debug, Clone)]
pub struct BorelIdeals {
    pub rank: usize,
    /// Each ideal as its positive roots `(i, j)`, meaning `E_ij`, 1-based.
    pub ideals: Vec<Vec<(usize, usize)>>,
    pub subspaces: Vec<Subspace<Q>>,
}

impl BorelIdeals {
    pub fn count(&self) -> usize {
        self.ideals.len()
    }
}

/// Tries every subset of positive root vectors; supported for rank 1..=3.
pub fn enumerate_borel_root_ideals(rank: usize) -> Result<BorelIdeals> {
    if !(1..=3).contains(&rank) {
        return Err(Error::BadParameter(format!("borel rank {rank} outside 1..=3")));
    }
    let b = borel_sl::<Q>(rank + 1)?;
    let roots = borel_sl_roots(rank + 1);
    let n = b.dim();
    let mut out = BorelIdeals { rank, ideals: Vec::new(), subspaces: Vec::new() };
    for mask in 0u32..(1 << roots.len()) {
        let chosen: Vec<&((usize, usize), usize)> =
            roots.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, r)| r).collect();
        let idx: Vec<usize> = chosen.iter().map(|(_, i)| *i).collect();
        let s = Subspace::<Q>::coordinate(n, &idx);
        if b.is_abelian_ideal(&s)? {
            out.ideals.push(chosen.iter().map(|(r, _)| *r).collect());
            out.subspaces.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_powers_of_two() {
        assert_eq!(enumerate_borel_root_ideals(1).unwrap().count(), 2);
        assert_eq!(enumerate_borel_root_ideals(2).unwrap().count(), 4);
        assert_eq!(enumerate_borel_root_ideals(3).unwrap().count(), 8);
        assert!(enumerate_borel_root_ideals(4).is_err());
    }

    #[test]
    fn rank_one_ideals() {
        let b = enumerate_borel_root_ideals(1).unwrap();
        assert_eq!(b.ideals, vec![vec![], vec![(1, 2)]]);
    }
}
