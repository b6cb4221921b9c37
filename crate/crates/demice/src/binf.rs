//! `B∞` as integer points of a cone inside a tensor product of elementary
//! crystals, with the map `ω†` and the embedding `ψ_λ`.
//!
//! A point is `D_1 ⊗ D_2 ⊗ .. ⊗ D_{r-1}` where block `D_i` is
//! `u_{r-i}(-d_{i,r-i}) ⊗ .. ⊗ u_{r-1}(-d_{i,r-1})`; the factor letters
//! spell [`crate::crystal::word_b`].

use serde::{Deserialize, Serialize};

use crate::crystal::{self, Tableau};
use crate::error::{Error, Result};
use crate::weyl::{self, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ConePoint {
    pub r: usize,
    /// `d_{1,r-1}, d_{2,r-2}, d_{2,r-1}, d_{3,r-3}, ..` in tensor order.
    pub coords: Vec<i64>,
}

/// Cartan entry `<α_j, α_k^∨>`.
fn cartan(j: usize, k: usize) -> i64 {
    if j == k {
        2
    } else if j.abs_diff(k) == 1 {
        -1
    } else {
        0
    }
}

/// Offset of block `i` (1-based) in the flat coordinates.
fn block_start(i: usize) -> usize {
    i * (i - 1) / 2
}

pub fn u0(r: usize) -> ConePoint {
    ConePoint { r, coords: vec![0; r * r.saturating_sub(1) / 2] }
}

impl ConePoint {
    pub fn new(r: usize, coords: Vec<i64>) -> Result<Self> {
        let p = ConePoint { r, coords };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.r * self.r.saturating_sub(1) / 2;
        if self.coords.len() != n {
            return Err(Error::ConeViolation(format!("{} coordinates, want {n}", self.coords.len())));
        }
        for i in 1..self.r {
            for j in self.r - i..self.r {
                if self.c(i, j) < 0 {
                    return Err(Error::ConeViolation(format!("d_{{{i},{j}}} < d_{{{i},{}}}", j + 1)));
                }
            }
        }
        Ok(())
    }

    /// `d_{i,j}` for `r-i <= j <= r`, with `d_{i,r} = 0`.
    pub fn d(&self, i: usize, j: usize) -> i64 {
        if j == self.r {
            return 0;
        }
        assert!(j + i >= self.r && j < self.r, "d_{{{i},{j}}} outside block");
        self.coords[block_start(i) + j + i - self.r]
    }

    /// `c_{i,j} = d_{i,j} - d_{i,j+1}`.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.d(i, j) - self.d(i, j + 1)
    }

    /// Letters of the tensor factors, parallel to `coords`.
    pub fn letters(&self) -> Vec<usize> {
        crystal::word_b(self.r)
    }

    /// Weight in root coordinates: `-Σ_j d_j α_j` as a vector in `Z^r`.
    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.r];
        for (&j, &d) in self.letters().iter().zip(&self.coords) {
            w[j - 1] -= d;
            w[j] += d;
        }
        w
    }

    /// `<wt, α_k^∨>`.
    pub fn pairing(&self, k: usize) -> i64 {
        self.letters().iter().zip(&self.coords).map(|(&j, &d)| -d * cartan(j, k)).sum()
    }

    fn check(&self, k: usize) -> Result<()> {
        if k == 0 || k >= self.r {
            return Err(Error::IndexOutOfRange { index: k, max: self.r.saturating_sub(1) });
        }
        Ok(())
    }

    /// Tensor-rule terms for each factor with letter `k`: `(position, value)`.
    fn terms(&self, k: usize) -> Vec<(usize, i64)> {
        let mut acc = 0;
        let mut out = Vec::new();
        for (m, (&j, &d)) in self.letters().iter().zip(&self.coords).enumerate() {
            if j == k {
                out.push((m, -d + acc));
            }
            acc += -d * cartan(j, k);
        }
        out
    }

    pub fn phi(&self, k: usize) -> Result<i64> {
        self.check(k)?;
        Ok(self.terms(k).iter().map(|t| t.1).max().expect("every letter occurs"))
    }

    pub fn eps(&self, k: usize) -> Result<i64> {
        Ok(self.phi(k)? - self.pairing(k))
    }

    /// `f_k` acts on the first factor attaining the maximum.
    pub fn f(&self, k: usize) -> Result<Self> {
        let phi = self.phi(k)?;
        let (m, _) = *self.terms(k).iter().find(|t| t.1 == phi).unwrap();
        let mut p = self.clone();
        p.coords[m] += 1;
        Ok(p)
    }

    /// `e_k` acts on the last factor attaining the maximum; `None` when `ε_k = 0`.
    pub fn e(&self, k: usize) -> Result<Option<Self>> {
        if self.eps(k)? == 0 {
            return Ok(None);
        }
        let phi = self.phi(k)?;
        let (m, _) = *self.terms(k).iter().rev().find(|t| t.1 == phi).unwrap();
        let mut p = self.clone();
        p.coords[m] -= 1;
        Ok(Some(p))
    }

    /// `Φ_{i,k}` per block, from the closed form of `φ_k(D_i)`.
    pub fn phi_table(&self, k: usize) -> Result<PhiTable> {
        self.check(k)?;
        let r = self.r;
        let mut values = Vec::new();
        let mut acc = 0;
        for i in 1..r {
            let local = if k > r - i {
                Some(self.c(i, k - 1))
            } else if k == r - i {
                Some(-self.d(i, k))
            } else {
                None
            };
            values.push(local.map(|v| v + acc));
            acc += (r - i..r).map(|j| -self.d(i, j) * cartan(j, k)).sum::<i64>();
        }
        Ok(PhiTable { k, values })
    }

    /// `ω†`: the 0-Hecke product `Ω_{r-1}(D_{r-1}) ⋯ Ω_1(D_1)`, where `Ω_i(D_i)`
    /// is the product of `S_j` over `1 <= j <= i` with `c_{i,r-1+j-i} = 0`.
    pub fn omega_dagger(&self) -> Result<Permutation> {
        self.validate()?;
        let r = self.r;
        let mut seq = Vec::new();
        for i in (1..r).rev() {
            for j in 1..=i {
                if self.c(i, r - 1 + j - i) == 0 {
                    seq.push(j);
                }
            }
        }
        weyl::demazure_product(r, &seq)
    }

    /// Greedy raising exponents along `word`; ends at `u0`.
    pub fn string_e(&self, word: &[usize]) -> Result<Vec<i64>> {
        let mut cur = self.clone();
        let mut out = Vec::new();
        for &k in word {
            let mut b = 0;
            while let Some(n) = cur.e(k)? {
                cur = n;
                b += 1;
            }
            out.push(b);
        }
        if cur != u0(self.r) {
            return Err(Error::NotLongWord);
        }
        Ok(out)
    }
}

/// `Φ_{i,k}` for `i = 1..r-1`; `None` stands for `-∞`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PhiTable {
    pub k: usize,
    pub values: Vec<Option<i64>>,
}

impl PhiTable {
    pub fn max(&self) -> Option<i64> {
        self.values.iter().flatten().copied().max()
    }

    /// First block attaining the maximum.
    pub fn first_argmax(&self) -> Option<usize> {
        let m = self.max()?;
        self.values.iter().position(|v| *v == Some(m)).map(|p| p + 1)
    }
}

pub fn f(k: usize, p: &ConePoint) -> Result<ConePoint> {
    p.f(k)
}

pub fn e(k: usize, p: &ConePoint) -> Result<Option<ConePoint>> {
    p.e(k)
}

pub fn phi(k: usize, p: &ConePoint) -> Result<i64> {
    p.phi(k)
}

pub fn eps(k: usize, p: &ConePoint) -> Result<i64> {
    p.eps(k)
}

pub fn omega_dagger(p: &ConePoint) -> Result<Permutation> {
    p.omega_dagger()
}

/// Applies to `u0` the lowering word that produces `t` from the highest weight.
pub fn psi_lambda(t: &Tableau) -> Result<ConePoint> {
    let mut p = u0(t.rank());
    for &j in crystal::raising_path(t).iter().rev() {
        p = p.f(j)?;
    }
    Ok(p)
}

/// Cone points with coordinate sum at most `max_sum`.
pub fn cone_points(r: usize, max_sum: i64) -> Vec<ConePoint> {
    let n = r * r.saturating_sub(1) / 2;
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(r: usize, pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<ConePoint>) {
        if pos == cur.len() {
            out.push(ConePoint { r, coords: cur.clone() });
            return;
        }
        // block i holds positions block_start(i)..block_start(i)+i, decreasing
        let mut i = 1;
        while block_start(i + 1) <= pos {
            i += 1;
        }
        let cap = if pos == block_start(i) { left } else { cur[pos - 1].min(left) };
        for v in 0..=cap {
            cur[pos] = v;
            rec(r, pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    rec(r, 0, max_sum, &mut cur, &mut out);
    out
}
