//! Key tableaux, the two circling algorithms on Gelfand-Tsetlin patterns,
//! and right/left keys.

use std::collections::BTreeSet;

use crate::crystal::{self, gtp_from_tableau, GTPattern, Tableau};
use crate::error::{Error, Result};
use crate::weyl::{self, Permutation};

/// Which neighbor a circled entry equals: mode 1 the upper right, mode 2 the upper left.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CircleMode {
    UpperRight,
    UpperLeft,
}

/// A reduced pattern together with its circled positions `(i, j)`, `i >= 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircledGTP {
    pub pattern: GTPattern,
    pub mode: CircleMode,
    pub circles: BTreeSet<(usize, usize)>,
}

pub fn circled_gtp(p: &GTPattern, mode: CircleMode) -> CircledGTP {
    let p = p.to_reduced();
    let r = p.rank();
    let mut circles = BTreeSet::new();
    for i in 2..=r {
        for j in i..=r {
            let z = p.entry(i, j);
            let hit = match mode {
                CircleMode::UpperRight => z == p.entry(i - 1, j),
                CircleMode::UpperLeft => z == p.entry(i - 1, j - 1),
            };
            if hit {
                circles.insert((i, j));
            }
        }
    }
    CircledGTP { pattern: p, mode, circles }
}

impl CircledGTP {
    /// Circled reflections in traversal order.
    ///
    /// Pattern row `i` lands in array row `k = i-1`. Mode 1 labels that row
    /// `s_1 .. s_{r-k}` and reads it right to left; mode 2 labels it
    /// `s_k .. s_{r-1}` and reads it left to right. Rows go bottom to top.
    pub fn reflections(&self) -> Vec<usize> {
        let r = self.pattern.rank();
        let mut seq = Vec::new();
        for i in (2..=r).rev() {
            let k = i - 1;
            let positions: Vec<usize> = match self.mode {
                CircleMode::UpperRight => (1..=r - k).rev().collect(),
                CircleMode::UpperLeft => (1..=r - k).collect(),
            };
            for p in positions {
                let j = i - 1 + p;
                if self.circles.contains(&(i, j)) {
                    seq.push(match self.mode {
                        CircleMode::UpperRight => p,
                        CircleMode::UpperLeft => k + p - 1,
                    });
                }
            }
        }
        seq
    }

    pub fn product(&self) -> Permutation {
        weyl::pi_nd(self.pattern.rank(), &self.reflections()).expect("indices in range")
    }
}

/// Columns weakly nest: each column contains the next one.
pub fn is_key_tableau(t: &Tableau) -> bool {
    let cols = t.columns();
    cols.windows(2).all(|c| c[1].iter().all(|x| c[0].contains(x)))
}

/// The key tableau of shape `lambda` and weight `mu`; column `j` is `{i | mu_i >= j}`.
pub fn key_from_weight(lambda: &[usize], mu: &[usize]) -> Result<Tableau> {
    let r = mu.len();
    let lam = crystal::pad_partition(lambda, r)?;
    let mut sorted = mu.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != lam {
        return Err(Error::NotInOrbit(format!("{mu:?}")));
    }
    let mut rows = vec![Vec::new(); r];
    for j in 1..=lam.first().copied().unwrap_or(0) {
        let col: Vec<usize> = (1..=r).filter(|&i| mu[i - 1] >= j).collect();
        for (row, x) in col.into_iter().enumerate() {
            rows[row].push(x);
        }
    }
    Tableau::new(r, rows)
}

/// `ω(T')` from upper-right circling.
pub fn algorithm1(t: &Tableau) -> Permutation {
    circled_gtp(&gtp_from_tableau(t), CircleMode::UpperRight).product()
}

/// `ω(T)` from upper-left circling.
pub fn algorithm2(t: &Tableau) -> Permutation {
    circled_gtp(&gtp_from_tableau(t), CircleMode::UpperLeft).product()
}

fn key_for(t: &Tableau, om: &Permutation) -> Result<Tableau> {
    let r = t.rank();
    let w = Permutation::longest(r).compose(om)?;
    key_from_weight(t.shape(), &w.act(t.shape()))
}

pub fn right_key(t: &Tableau) -> Result<Tableau> {
    key_for(t, &algorithm2(t))
}

/// `key(T')'`.
pub fn left_key(t: &Tableau) -> Result<Tableau> {
    crystal::lusztig_involution(&key_for(t, &algorithm1(t))?)
}

/// Atoms of `B_λ` by set differences of Demazure crystals, keyed by `w`.
pub fn atom_decomposition(lambda: &[usize], r: usize) -> Result<Vec<(Permutation, Vec<Tableau>)>> {
    let mut out = Vec::new();
    for w in Permutation::all(r) {
        let a = crystal::demazure_atom_by_difference(&crystal::pad_partition(lambda, r)?, &w)?;
        if !a.is_empty() {
            out.push((w, a));
        }
    }
    Ok(out)
}

/// The unique key tableau in the atom containing `t`, found by brute force.
pub fn oracle_right_key(t: &Tableau) -> Result<Tableau> {
    oracle_right_key_in(&atom_decomposition(t.shape(), t.rank())?, t)
}

pub fn oracle_right_key_in(atoms: &[(Permutation, Vec<Tableau>)], t: &Tableau) -> Result<Tableau> {
    let (_, atom) = atoms
        .iter()
        .find(|(_, a)| a.contains(t))
        .ok_or_else(|| Error::Internal(format!("{t} lies in no atom")))?;
    let keys: Vec<&Tableau> = atom.iter().filter(|x| is_key_tableau(x)).collect();
    match keys.as_slice() {
        [k] => Ok((*k).clone()),
        _ => Err(Error::Internal(format!("atom of {t} has {} key tableaux", keys.len()))),
    }
}
