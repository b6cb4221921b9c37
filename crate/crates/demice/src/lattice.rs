//! Uncolored and colored five-vertex lattice systems.
//!
//! Grids are stored in drawing order: display column `x` is column label
//! `N - x`. `vertical[k][x]` is the edge below row `k` (row 0 is the top
//! boundary); `horizontal[i][x]` is the edge left of vertex `x` in row
//! `i+1`, so `horizontal[i][0]` is the left boundary and
//! `horizontal[i][N+1]` the right one.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::{self, GTPattern, Tableau};
use crate::error::{Error, Result};
use crate::laurent::{self, LaurentPolynomial};
use crate::weyl::Permutation;

/// `+`, or a minus spin carrying a color. Color 0 marks an uncolored minus;
/// real colors are `1..=r` with `c_1 > c_2 > ..`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Spin {
    Plus,
    Minus(u8),
}

pub use Spin::{Minus, Plus};

pub const MINUS: Spin = Minus(0);

impl Spin {
    pub fn is_minus(self) -> bool {
        matches!(self, Minus(_))
    }

    pub fn uncolored(self) -> Spin {
        match self {
            Plus => Plus,
            Minus(_) => MINUS,
        }
    }
}

impl Serialize for Spin {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            Plus => s.serialize_str("+"),
            Minus(0) => s.serialize_str("-"),
            Minus(c) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("c", c)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::String(s) if s == "+" => Ok(Plus),
            serde_json::Value::String(s) if s == "-" => Ok(MINUS),
            serde_json::Value::Object(m) => match m.get("c").and_then(|c| c.as_u64()) {
                Some(c) if c > 0 && c < 256 => Ok(Minus(c as u8)),
                _ => Err(serde::de::Error::custom("bad color")),
            },
            _ => Err(serde::de::Error::custom("spin must be \"+\", \"-\" or {\"c\":k}")),
        }
    }
}

/// Weight of a row vertex: `None` if inadmissible, `Some(true)` for `z_i`,
/// `Some(false)` for 1. Colors must be conserved; where two distinct colors
/// meet, the larger (smaller index) exits right.
pub fn vertex_weight(left: Spin, top: Spin, right: Spin, bottom: Spin) -> Option<bool> {
    match (left, top) {
        (Plus, Plus) => (right == Plus && bottom == Plus).then_some(false),
        (Plus, Minus(c)) => (right == Minus(c) && bottom == Plus).then_some(false),
        (Minus(c), Plus) => {
            let ok = (right == Minus(c) && bottom == Plus) || (right == Plus && bottom == Minus(c));
            ok.then_some(true)
        }
        (Minus(a), Minus(b)) => {
            let (hi, lo) = (a.min(b), a.max(b));
            (right == Minus(hi) && bottom == Minus(lo)).then_some(true)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct System {
    pub lambda: Vec<usize>,
    pub r: usize,
    pub n: usize,
}

/// Boundary data for `λ` with `r` rows and columns `N..0`.
pub fn system(lambda: &[usize], r: usize, n: Option<usize>) -> Result<System> {
    let lambda = crystal::pad_partition(lambda, r)?;
    let min = lambda.first().copied().unwrap_or(0) + r.saturating_sub(1);
    let n = n.unwrap_or(min);
    if n < min {
        return Err(Error::NTooSmall { n, min });
    }
    Ok(System { lambda, r, n })
}

impl System {
    /// Column labels `λ_i + r - i` carrying the top minus spins.
    pub fn top_columns(&self) -> Vec<usize> {
        self.lambda.iter().enumerate().map(|(i, &l)| l + self.r - 1 - i).collect()
    }

    fn x_of(&self, column: usize) -> usize {
        self.n - column
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LatticeState {
    pub lambda: Vec<usize>,
    pub r: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub vertical: Vec<Vec<Spin>>,
    pub horizontal: Vec<Vec<Spin>>,
}

impl LatticeState {
    pub fn system(&self) -> System {
        System { lambda: self.lambda.clone(), r: self.r, n: self.n }
    }

    /// `(left, top, right, bottom)` at row `i` (1-based), display column `x`.
    pub fn vertex(&self, i: usize, x: usize) -> (Spin, Spin, Spin, Spin) {
        (self.horizontal[i - 1][x], self.vertical[i - 1][x], self.horizontal[i - 1][x + 1], self.vertical[i][x])
    }

    pub fn is_colored(&self) -> bool {
        self.vertical.iter().chain(&self.horizontal).flatten().any(|s| matches!(s, Minus(c) if *c > 0))
    }

    pub fn uncolored(&self) -> LatticeState {
        let strip = |g: &Vec<Vec<Spin>>| g.iter().map(|r| r.iter().map(|s| s.uncolored()).collect()).collect();
        LatticeState { vertical: strip(&self.vertical), horizontal: strip(&self.horizontal), ..self.clone() }
    }

    /// Checks shape, boundary and every vertex.
    pub fn validate(&self) -> Result<()> {
        let (r, n) = (self.r, self.n);
        let bad = |m: String| Err(Error::Inadmissible(m));
        if self.vertical.len() != r + 1 || self.vertical.iter().any(|v| v.len() != n + 1) {
            return bad("vertical grid has wrong dimensions".into());
        }
        if self.horizontal.len() != r || self.horizontal.iter().any(|h| h.len() != n + 2) {
            return bad("horizontal grid has wrong dimensions".into());
        }
        let sys = system(&self.lambda, r, Some(n))?;
        let colored = self.is_colored();
        let mut top = vec![Plus; n + 1];
        for (k, c) in sys.top_columns().into_iter().enumerate() {
            top[sys.x_of(c)] = if colored { Minus(k as u8 + 1) } else { MINUS };
        }
        if self.vertical[0] != top {
            return bad("top boundary".into());
        }
        if self.vertical[r].iter().any(|s| *s != Plus) {
            return bad("bottom boundary".into());
        }
        for i in 1..=r {
            if self.horizontal[i - 1][0] != Plus {
                return bad(format!("left boundary of row {i}"));
            }
            if !self.horizontal[i - 1][n + 1].is_minus() {
                return bad(format!("right boundary of row {i}"));
            }
            for x in 0..=n {
                let (l, t, rt, b) = self.vertex(i, x);
                if vertex_weight(l, t, rt, b).is_none() {
                    return bad(format!("vertex at row {i}, column {}", n - x));
                }
            }
        }
        Ok(())
    }

    /// Exponent vector of the Boltzmann weight.
    pub fn weight_exponents(&self) -> Result<Vec<i64>> {
        let mut e = vec![0i64; self.r];
        for i in 1..=self.r {
            for x in 0..=self.n {
                let (l, t, rt, b) = self.vertex(i, x);
                match vertex_weight(l, t, rt, b) {
                    None => return Err(Error::Inadmissible(format!("vertex at row {i}, column {}", self.n - x))),
                    Some(true) => e[i - 1] += 1,
                    Some(false) => {}
                }
            }
        }
        Ok(e)
    }
}

pub fn boltzmann_weight(state: &LatticeState) -> Result<LaurentPolynomial> {
    Ok(LaurentPolynomial::monomial(state.weight_exponents()?))
}

/// Strict pattern: row `i` lists the column labels of the minus spins above row `i`.
pub fn state_to_gtp(state: &LatticeState) -> GTPattern {
    let rows = (0..state.r)
        .map(|k| {
            (0..=state.n)
                .filter(|&x| state.vertical[k][x].is_minus())
                .map(|x| (state.n - x) as i64)
                .collect()
        })
        .collect();
    GTPattern { rows, strict: true }
}

/// Builds the uncolored state with the given pattern (strict or reduced).
pub fn gtp_to_state(sys: &System, p: &GTPattern) -> Result<LatticeState> {
    let a = p.to_strict();
    a.validate()?;
    let (r, n) = (sys.r, sys.n);
    if a.rank() != r {
        return Err(Error::RankMismatch { expected: r, got: a.rank() });
    }
    let top: Vec<i64> = sys.top_columns().iter().map(|&c| c as i64).collect();
    if a.top() != top.as_slice() {
        return Err(Error::InvalidPattern(format!("top row {:?} does not match the boundary {:?}", a.top(), top)));
    }
    let mut vertical = vec![vec![Plus; n + 1]; r + 1];
    for (k, row) in a.rows.iter().enumerate() {
        for &c in row {
            if c < 0 || c as usize > n {
                return Err(Error::InvalidPattern(format!("column {c} outside 0..={n}")));
            }
            vertical[k][sys.x_of(c as usize)] = MINUS;
        }
    }
    let mut horizontal = vec![vec![Plus; n + 2]; r];
    for i in 1..=r {
        for x in 0..=n {
            let t = vertical[i - 1][x].is_minus() as i32;
            let l = horizontal[i - 1][x].is_minus() as i32;
            let b = vertical[i][x].is_minus() as i32;
            horizontal[i - 1][x + 1] = match t + l - b {
                0 => Plus,
                1 => MINUS,
                _ => return Err(Error::Inadmissible(format!("conservation fails at row {i}"))),
            };
        }
    }
    let s = LatticeState { lambda: sys.lambda.clone(), r, n, vertical, horizontal };
    s.validate()?;
    Ok(s)
}

/// All uncolored states, via the pattern bijection, in pattern order.
pub fn enumerate_states(sys: &System) -> Result<Vec<LatticeState>> {
    let top: Vec<i64> = sys.lambda.iter().map(|&x| x as i64).collect();
    crystal::enumerate_gt_patterns(&top).iter().map(|p| gtp_to_state(sys, p)).collect()
}

/// All uncolored states by depth-first search over vertex configurations.
pub fn enumerate_states_dfs(sys: &System) -> Vec<LatticeState> {
    let (r, n) = (sys.r, sys.n);
    let mut vertical = vec![vec![Plus; n + 1]; r + 1];
    for c in sys.top_columns() {
        vertical[0][sys.x_of(c)] = MINUS;
    }
    let horizontal = vec![vec![Plus; n + 2]; r];
    let mut out = Vec::new();
    let mut st = LatticeState { lambda: sys.lambda.clone(), r, n, vertical, horizontal };
    fn go(st: &mut LatticeState, i: usize, x: usize, out: &mut Vec<LatticeState>) {
        let (r, n) = (st.r, st.n);
        if i > r {
            if st.vertical[r].iter().all(|s| *s == Plus) {
                out.push(st.clone());
            }
            return;
        }
        if x > n {
            if st.horizontal[i - 1][n + 1].is_minus() {
                go(st, i + 1, 0, out);
            }
            return;
        }
        let (l, t) = (st.horizontal[i - 1][x], st.vertical[i - 1][x]);
        for (rt, b) in [(Plus, Plus), (Plus, MINUS), (MINUS, Plus), (MINUS, MINUS)] {
            if vertex_weight(l, t, rt, b).is_some() {
                st.horizontal[i - 1][x + 1] = rt;
                st.vertical[i][x] = b;
                go(st, i, x + 1, out);
            }
        }
        st.horizontal[i - 1][x + 1] = Plus;
        st.vertical[i][x] = Plus;
    }
    go(&mut st, 1, 0, &mut out);
    out
}

/// The tableau of a state: its reduced pattern read as a tableau.
pub fn state_tableau(state: &LatticeState) -> Result<Tableau> {
    crystal::tableau_from_gtp(&state_to_gtp(state).to_reduced())
}

/// Colors the state by propagating through each row left to right, and
/// returns `w` with right-boundary colors `(w c)_i = c_{w^{-1}(i)}`.
pub fn color_state(state: &LatticeState) -> Result<(LatticeState, Permutation)> {
    let base = state.uncolored();
    base.validate()?;
    let (r, n) = (base.r, base.n);
    let sys = base.system();
    let mut s = base.clone();
    s.vertical[0] = vec![Plus; n + 1];
    for (k, c) in sys.top_columns().into_iter().enumerate() {
        s.vertical[0][sys.x_of(c)] = Minus(k as u8 + 1);
    }
    for i in 1..=r {
        for x in 0..=n {
            let (l, t) = (s.horizontal[i - 1][x], s.vertical[i - 1][x]);
            let right_minus = base.horizontal[i - 1][x + 1].is_minus();
            let (rt, b) = match (l, t) {
                (Plus, Plus) => (Plus, Plus),
                (Plus, c) => (c, Plus),
                (c, Plus) if right_minus => (c, Plus),
                (c, Plus) => (Plus, c),
                (Minus(a), Minus(b)) => (Minus(a.min(b)), Minus(a.max(b))),
            };
            s.horizontal[i - 1][x + 1] = rt;
            s.vertical[i][x] = b;
        }
    }
    s.validate()?;
    let exits: Vec<usize> = (0..r)
        .map(|i| match s.horizontal[i][n + 1] {
            Minus(c) => c as usize,
            Plus => unreachable!(),
        })
        .collect();
    let w = Permutation::new(exits)?.inverse();
    Ok((s, w))
}

/// Partition functions of the colored systems, for every `w` that occurs.
pub fn colored_partition_functions(sys: &System) -> Result<BTreeMap<Permutation, LaurentPolynomial>> {
    let states = enumerate_states(sys)?;
    let parts: Vec<(Permutation, Vec<i64>)> = states
        .par_iter()
        .map(|s| {
            let (c, w) = color_state(s)?;
            Ok((w, c.weight_exponents()?))
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<Permutation, LaurentPolynomial> = BTreeMap::new();
    for (w, e) in parts {
        let z = out.entry(w).or_insert_with(|| LaurentPolynomial::zero(sys.r));
        *z = &*z + &LaurentPolynomial::monomial(e);
    }
    Ok(out)
}

/// `Z(𝔖_{z,λ,w})`.
pub fn colored_partition_function(lambda: &[usize], w: &Permutation, n: Option<usize>) -> Result<LaurentPolynomial> {
    let sys = system(lambda, w.degree(), n)?;
    Ok(colored_partition_functions(&sys)?.remove(w).unwrap_or_else(|| LaurentPolynomial::zero(sys.r)))
}

/// `Z(𝔖_{z,λ})`.
pub fn uncolored_partition_function(lambda: &[usize], r: usize, n: Option<usize>) -> Result<LaurentPolynomial> {
    let sys = system(lambda, r, n)?;
    let mut z = LaurentPolynomial::zero(r);
    for s in enumerate_states(&sys)? {
        z = &z + &boltzmann_weight(&s)?;
    }
    Ok(z)
}

/// Ports of the rotated vertex; strands run SW to NE and NW to SE.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RConfig {
    pub sw: Spin,
    pub nw: Spin,
    pub ne: Spin,
    pub se: Spin,
}

/// R-vertex weight with spectral parameters `(z_i, z_j)` taken as the
/// variables of a rank-2 polynomial.
pub fn rmatrix_weight(cfg: RConfig, colored: bool) -> LaurentPolynomial {
    let zi = LaurentPolynomial::variable(2, 1);
    let zj = LaurentPolynomial::variable(2, 2);
    let zero = LaurentPolynomial::zero(2);
    if !colored && [cfg.sw, cfg.nw, cfg.ne, cfg.se].iter().any(|s| matches!(s, Minus(c) if *c > 0)) {
        return zero;
    }
    let RConfig { sw, nw, ne, se } = cfg;
    match (sw, nw, ne, se) {
        (Plus, Plus, Plus, Plus) => zj,
        (Plus, Minus(a), Minus(b), Plus) if a == b => zj,
        (Minus(a), Plus, Plus, Minus(b)) if a == b => zi,
        (Minus(a), Plus, Minus(b), Plus) if a == b => &zi - &zj,
        (Minus(a), Minus(b), Minus(c), Minus(d)) => {
            if a == b && b == c && c == d {
                zi
            } else if a != b && nw == ne && sw == se {
                // strands swap sides; the larger color entering NW gives z_i
                if b < a { zi } else { zj }
            } else if a != b && sw == ne && nw == se && a < b {
                &zi - &zj
            } else {
                zero
            }
        }
        _ => zero,
    }
}

/// Spins adjacent to the two miniature systems, in the order
/// bottom-left, top-left, top, right-top, right-bottom, bottom.
pub type Boundary = [Spin; 6];

fn vw(l: Spin, t: Spin, r: Spin, b: Spin, var: usize) -> Option<LaurentPolynomial> {
    vertex_weight(l, t, r, b).map(|z| {
        if z { LaurentPolynomial::variable(2, var) } else { LaurentPolynomial::one(2) }
    })
}

/// Left system: the R-vertex feeds the rows `z_i` (top) and `z_j` (bottom).
pub fn ybe_left(bd: &Boundary, alphabet: &[Spin], colored: bool) -> LaurentPolynomial {
    let [a, b, c, d, e, f] = *bd;
    let mut z = LaurentPolynomial::zero(2);
    for &g in alphabet {
        for &i in alphabet {
            let rw = rmatrix_weight(RConfig { sw: a, nw: b, ne: g, se: i }, colored);
            if rw.is_zero() {
                continue;
            }
            for &h in alphabet {
                let (Some(top), Some(bot)) = (vw(g, c, d, h, 1), vw(i, h, e, f, 2)) else { continue };
                z = &z + &(&(&rw * &top) * &bot);
            }
        }
    }
    z
}

/// Right system: rows `z_j` (top) and `z_i` (bottom) feed the R-vertex.
pub fn ybe_right(bd: &Boundary, alphabet: &[Spin], colored: bool) -> LaurentPolynomial {
    let [a, b, c, d, e, f] = *bd;
    let mut z = LaurentPolynomial::zero(2);
    for &j in alphabet {
        for &k in alphabet {
            let Some(top) = vw(b, c, j, k, 2) else { continue };
            for &l in alphabet {
                let Some(bot) = vw(a, k, l, f, 1) else { continue };
                let rw = rmatrix_weight(RConfig { sw: l, nw: j, ne: d, se: e }, colored);
                z = &z + &(&(&top * &bot) * &rw);
            }
        }
    }
    z
}

#[derive(Clone, Debug, Serialize)]
pub struct YbeReport {
    pub colored: bool,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Boundary>,
}

impl YbeReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for YbeReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{} {}", self.passed, self.cases, if self.ok() { "ok" } else { "FAILED" })
    }
}

pub fn ybe_alphabet(colored: bool) -> Vec<Spin> {
    if colored { vec![Plus, Minus(1), Minus(2), Minus(3)] } else { vec![Plus, MINUS] }
}

/// Compares both systems for every boundary over the alphabet.
pub fn ybe_check(colored: bool) -> YbeReport {
    let alphabet = ybe_alphabet(colored);
    let m = alphabet.len();
    let cases = m.pow(6);
    let failures: Vec<Boundary> = (0..cases)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut bd = [Plus; 6];
            for slot in bd.iter_mut() {
                *slot = alphabet[code % m];
                code /= m;
            }
            (ybe_left(&bd, &alphabet, colored) != ybe_right(&bd, &alphabet, colored)).then_some(bd)
        })
        .collect();
    YbeReport { colored, cases, passed: cases - failures.len(), failures }
}

/// `z_i Z_w(s_i z) = z_{i+1} Z_w(z) + (z_{i+1} - z_i) Z_{s_i w}(z)` for `s_i w > w`.
pub fn verify_functional_equation(lambda: &[usize], w: &Permutation, i: usize) -> Result<bool> {
    let r = w.degree();
    if i == 0 || i >= r {
        return Err(Error::IndexOutOfRange { index: i, max: r.saturating_sub(1) });
    }
    let siw = w.mul_left(i);
    if siw.length() < w.length() {
        return Err(Error::Precondition(format!("s_{i} w < w for w = {w}")));
    }
    let sys = system(lambda, r, None)?;
    let zs = colored_partition_functions(&sys)?;
    let get = |x: &Permutation| zs.get(x).cloned().unwrap_or_else(|| LaurentPolynomial::zero(r));
    let si = Permutation::simple(r, i)?;
    let zi = LaurentPolynomial::variable(r, i);
    let zi1 = LaurentPolynomial::variable(r, i + 1);
    let lhs = &zi * &laurent::permute_variables(&si, &get(w))?;
    let rhs = &(&zi1 * &get(w)) + &(&(&zi1 - &zi) * &get(&siw));
    Ok(lhs == rhs)
}

/// `z^ρ ∂°_w z^λ`.
pub fn expected_atom_partition_function(lambda: &[usize], w: &Permutation) -> Result<LaurentPolynomial> {
    let r = w.degree();
    let lam = crystal::pad_partition(lambda, r)?;
    let a = laurent::demazure_w(w, &LaurentPolynomial::monomial(lam.iter().map(|&x| x as i64).collect()), true)?;
    a.shift(&laurent::rho(r))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

fn spin_char(s: Spin) -> String {
    match s {
        Plus => "+".into(),
        Minus(0) => "-".into(),
        Minus(c) => c.to_string(),
    }
}

const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

fn spin_color(s: Spin) -> &'static str {
    match s {
        Plus => "#bbbbbb",
        Minus(0) => "#000000",
        Minus(c) => PALETTE[(c as usize - 1) % PALETTE.len()],
    }
}

pub fn render_state(state: &LatticeState, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(state),
        RenderFormat::Svg => render_svg(state),
    }
}

fn render_ascii(s: &LatticeState) -> String {
    let mut out = String::new();
    let header: Vec<String> = (0..=s.n).rev().map(|c| format!("{c:>3}")).collect();
    let _ = writeln!(out, "    {}", header.join(" "));
    for k in 0..=s.r {
        let v: Vec<String> = s.vertical[k].iter().map(|&x| format!("{:>3}", spin_char(x))).collect();
        let _ = writeln!(out, "    {}", v.join(" "));
        if k == s.r {
            break;
        }
        let mut line = format!("{:>2}", k + 1);
        for x in 0..=s.n {
            let _ = write!(line, " {:>1} o", spin_char(s.horizontal[k][x]));
        }
        let _ = write!(line, " {}", spin_char(s.horizontal[k][s.n + 1]));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn render_svg(s: &LatticeState) -> String {
    let step = 40;
    let (w, h) = ((s.n + 2) * step, (s.r + 1) * step);
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let px = |x: usize| (x + 1) * step;
    let py = |i: usize| i * step + step / 2;
    let mut edge = |x1: usize, y1: usize, x2: usize, y2: usize, sp: Spin| {
        let width = if sp.is_minus() { 4 } else { 1 };
        let _ = writeln!(
            out,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}" stroke-width="{width}"/>"#,
            spin_color(sp)
        );
    };
    for k in 0..=s.r {
        for x in 0..=s.n {
            let (y1, y2) = if k == 0 { (py(1) - step / 2, py(1)) } else { (py(k), py(k) + if k == s.r { step / 2 } else { step }) };
            edge(px(x), y1.min(y2), px(x), y1.max(y2), s.vertical[k][x]);
        }
    }
    for i in 0..s.r {
        for x in 0..=s.n + 1 {
            let x1 = if x == 0 { px(0) - step / 2 } else { px(x - 1) };
            let x2 = if x == s.n + 1 { px(s.n) + step / 2 } else { px(x) };
            edge(x1, py(i + 1), x2, py(i + 1), s.horizontal[i][x]);
        }
    }
    for i in 0..s.r {
        for x in 0..=s.n {
            let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="3" fill="black"/>"#, px(x), py(i + 1));
        }
    }
    for x in 0..=s.n {
        let _ = writeln!(out, r#"  <text x="{}" y="12" font-size="10" text-anchor="middle">{}</text>"#, px(x), s.n - x);
    }
    out.push_str("</svg>\n");
    out
}

/// Total coefficient count, handy for checks.
pub fn state_count(z: &LaurentPolynomial) -> BigInt {
    z.mass()
}
