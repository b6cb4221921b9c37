//! Self-check batteries shared by the `suite` subcommand and the acceptance tests.
//!
//! Every check is exhaustive over a small range of ranks and shapes and uses
//! exact arithmetic; a check passes only when every case agrees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::binf;
use crate::crystal::{self, enumerate_tableaux, gtp_from_tableau, lusztig_involution, omega, partitions, Tableau};
use crate::error::{Error, Result};
use crate::keys;
use crate::lattice;
use crate::laurent::{self, LaurentPolynomial};
use crate::weyl::{self, Permutation};

/// Suite names accepted by [`run`].
pub const SUITES: &[&str] = &["all", "ybe", "atoms", "keys", "binf", "involutions"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "suite {}: {ok}/{} checks passed", self.suite, self.checks.len())
    }
}

/// Runs a check body; an error counts as a failure with the error as detail.
fn check<F>(name: &str, body: F) -> Check
where
    F: FnOnce() -> Result<(bool, String)>,
{
    let (passed, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check { name: name.to_string(), passed, detail }
}

/// Collects failures; keeps the first few for the report.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn finish(self, unit: &str) -> (bool, String) {
        let bad = self.failures.len();
        if bad == 0 {
            (true, format!("{} {unit} ok", self.cases))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (false, format!("{bad}/{} {unit} failed; first: {}", self.cases, shown.join("; ")))
        }
    }
}

/// All `(λ, r)` with `1 <= r <= max_r` and `λ1 <= max_part`.
fn shapes(max_r: usize, max_part: usize) -> Vec<(Vec<usize>, usize)> {
    (1..=max_r).flat_map(|r| partitions(r, max_part).into_iter().map(move |l| (l, r))).collect()
}

fn par_tally<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    items
        .par_iter()
        .map(f)
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn monomial(lambda: &[usize]) -> LaurentPolynomial {
    LaurentPolynomial::monomial(lambda.iter().map(|&x| x as i64).collect())
}

pub fn schur_identity() -> Check {
    check("schur_identity", || {
        let t = par_tally(&shapes(4, 4), |(lam, r)| {
            let z = lattice::uncolored_partition_function(lam, *r, None)?;
            let s = laurent::schur(lam, *r)?.shift(&laurent::rho(*r))?;
            let mut t = Tally::default();
            t.record(z == s, || format!("{lam:?}"));
            Ok(t)
        })?;
        Ok(t.finish("shapes"))
    })
}

fn ybe(name: &str, colored: bool) -> Check {
    check(name, || {
        let rep = lattice::ybe_check(colored);
        let mut ok = rep.ok();
        if !colored {
            // the mixed boundary that picks up z_i z_j on both sides
            let a = lattice::ybe_alphabet(false);
            let (p, m) = (lattice::Spin::Plus, lattice::MINUS);
            let bd = [p, m, p, m, p, p];
            let want = LaurentPolynomial::parse("z1*z2", 2)?;
            ok &= lattice::ybe_left(&bd, &a, false) == want && lattice::ybe_right(&bd, &a, false) == want;
        }
        Ok((ok, rep.to_string()))
    })
}

pub fn ybe_uncolored() -> Check {
    ybe("ybe_uncolored", false)
}

pub fn ybe_colored() -> Check {
    ybe("ybe_colored", true)
}

pub fn atom_partition_functions() -> Check {
    check("atom_partition_functions", || {
        let t = par_tally(&shapes(4, 3), |(lam, r)| {
            let sys = lattice::system(lam, *r, None)?;
            let zs = lattice::colored_partition_functions(&sys)?;
            let mut t = Tally::default();
            let mut total = LaurentPolynomial::zero(*r);
            for w in Permutation::all(*r) {
                let z = zs.get(&w).cloned().unwrap_or_else(|| LaurentPolynomial::zero(*r));
                let want = lattice::expected_atom_partition_function(lam, &w)?;
                t.record(z == want, || format!("{lam:?} w={w}"));
                total = &total + &z;
            }
            let full = lattice::uncolored_partition_function(lam, *r, None)?;
            t.record(total == full, || format!("{lam:?} sum over w"));
            Ok(t)
        })?;
        Ok(t.finish("cases"))
    })
}

pub fn ground_state() -> Check {
    check("ground_state", || {
        let t = par_tally(&shapes(4, 3), |(lam, r)| {
            let sys = lattice::system(lam, *r, None)?;
            let id = Permutation::identity(*r);
            let mut hits = Vec::new();
            for s in lattice::enumerate_states(&sys)? {
                if lattice::color_state(&s)?.1 == id {
                    hits.push(s.weight_exponents()?);
                }
            }
            let want: Vec<i64> = lam.iter().zip(laurent::rho(*r)).map(|(&a, b)| a as i64 + b).collect();
            let mut t = Tally::default();
            t.record(hits == vec![want], || format!("{lam:?}: {} states", hits.len()));
            Ok(t)
        })?;
        Ok(t.finish("shapes"))
    })
}

pub fn atom_sum() -> Check {
    check("atom_sum", || {
        let lams = partitions(4, 3);
        let t = par_tally(&lams, |lam| {
            let z = monomial(lam);
            let mut atoms = BTreeMap::new();
            for y in Permutation::all(4) {
                atoms.insert(y.clone(), laurent::demazure_w(&y, &z, true)?);
            }
            let mut t = Tally::default();
            for w in Permutation::all(4) {
                let mut sum = LaurentPolynomial::zero(4);
                for y in weyl::bruhat_interval(&w) {
                    sum = &sum + &atoms[&y];
                }
                t.record(sum == laurent::demazure_w(&w, &z, false)?, || format!("{lam:?} w={w}"));
            }
            Ok(t)
        })?;
        Ok(t.finish("cases"))
    })
}

pub fn crystal_atoms() -> Check {
    check("crystal_atoms", || {
        let t = par_tally(&shapes(4, 3), |(lam, r)| {
            let r = *r;
            let w0 = Permutation::longest(r);
            let all = enumerate_tableaux(lam, r)?;
            let mut fibers: BTreeMap<Permutation, BTreeSet<Tableau>> = BTreeMap::new();
            for x in &all {
                fibers.entry(w0.compose(&omega(x)?)?).or_default().insert(x.clone());
            }
            let mut t = Tally::default();
            let covered: usize = fibers.values().map(BTreeSet::len).sum();
            t.record(covered == all.len(), || format!("{lam:?} fibers cover {covered}/{}", all.len()));
            let signed: Vec<i64> = lam.iter().map(|&x| x as i64).collect();
            for w in Permutation::all(r) {
                let fiber = fibers.get(&w).cloned().unwrap_or_default();
                let (lo, _) = weyl::coset_extremes(&w, &signed)?;
                t.record(fiber.is_empty() != (lo == w), || format!("{lam:?} w={w} fiber support"));
                let mut union = BTreeSet::new();
                for y in weyl::bruhat_interval(&w) {
                    union.extend(fibers.get(&y).into_iter().flatten().cloned());
                }
                let dc: BTreeSet<Tableau> = crystal::demazure_crystal(lam, &w)?.into_iter().collect();
                t.record(union == dc, || format!("{lam:?} w={w} union"));
                let diff: BTreeSet<Tableau> = crystal::demazure_atom_by_difference(lam, &w)?.into_iter().collect();
                t.record(fiber == diff, || format!("{lam:?} w={w} difference"));
            }
            Ok(t)
        })?;
        Ok(t.finish("cases"))
    })
}

pub fn state_atom_bijection() -> Check {
    check("state_atom_bijection", || {
        let t = par_tally(&shapes(4, 3), |(lam, r)| {
            let sys = lattice::system(lam, *r, None)?;
            let w0 = Permutation::longest(*r);
            let mut t = Tally::default();
            for s in lattice::enumerate_states(&sys)? {
                let tab = lattice::state_tableau(&s)?;
                let (_, w) = lattice::color_state(&s)?;
                let want = w0.compose(&omega(&lusztig_involution(&tab)?)?)?;
                t.record(w == want, || format!("{lam:?} state of {tab}"));
            }
            Ok(t)
        })?;
        Ok(t.finish("states"))
    })
}

fn tab(r: usize, rows: &[&[usize]]) -> Result<Tableau> {
    Tableau::new(r, rows.iter().map(|x| x.to_vec()).collect())
}

pub fn worked_example() -> Check {
    check("worked_example", || {
        let t = tab(4, &[&[1, 1, 2, 4, 4], &[2, 3, 4], &[3]])?;
        let mut fails = Vec::new();
        let mut expect = |ok: bool, what: &str| {
            if !ok {
                fails.push(what.to_string());
            }
        };
        let g = gtp_from_tableau(&t);
        expect(g.rows == vec![vec![5, 3, 1, 0], vec![3, 2, 1], vec![3, 1], vec![2]], "pattern");
        expect(keys::algorithm1(&t) == Permutation::from_word(4, &[2, 1])?, "algorithm1");
        expect(keys::algorithm2(&t) == Permutation::from_word(4, &[2, 3])?, "algorithm2");
        let kt = keys::right_key(&t)?;
        expect(kt == tab(4, &[&[1, 2, 2, 4, 4], &[2, 4, 4], &[4]])?, "right key");
        let tp = lusztig_involution(&t)?;
        let kp = keys::right_key(&tp)?;
        expect(kp == tab(4, &[&[2, 2, 2, 2, 2], &[3, 4, 4], &[4]])?, "key of involute");
        expect(keys::left_key(&t)? == lusztig_involution(&kp)?, "left key");
        let wa = crystal::word_a(3);
        for (rows, string, circles) in [
            ([&[1usize, 2][..], &[2][..]], [0i64, 2, 1], [true, false, false]),
            ([&[1, 3], &[2]], [0, 1, 1], [true, true, false]),
        ] {
            let x = tab(3, &rows)?;
            let sp = crystal::string_f(&x, &wa)?;
            expect(sp.entries == string, &format!("string of {x}"));
            expect(crystal::circle(&sp)? == circles, &format!("circles of {x}"));
            let w = weyl::pi_nd(3, &crystal::circled_reflections(&sp)?)?;
            expect(w == Permutation::from_word(3, &[1])?, &format!("circled product of {x}"));
        }
        if fails.is_empty() {
            Ok((true, "pattern, algorithms, keys and strings match".into()))
        } else {
            Ok((false, format!("mismatch: {}", fails.join(", "))))
        }
    })
}

pub fn key_oracle() -> Check {
    check("key_oracle", || {
        let t = par_tally(&shapes(4, 3), |(lam, r)| {
            let atoms = keys::atom_decomposition(lam, *r)?;
            let mut t = Tally::default();
            for (w, atom) in &atoms {
                let n = atom.iter().filter(|x| keys::is_key_tableau(x)).count();
                t.record(n == 1, || format!("{lam:?} atom {w} has {n} keys"));
            }
            for x in enumerate_tableaux(lam, *r)? {
                let ok = keys::right_key(&x)? == keys::oracle_right_key_in(&atoms, &x)?;
                t.record(ok, || format!("{x}"));
            }
            Ok(t)
        })?;
        Ok(t.finish("cases"))
    })
}

pub fn binf_properties() -> Check {
    check("binf_properties", || {
        let mut t = Tally::default();
        for r in 2..=4 {
            let w0 = Permutation::longest(r);
            t.record(binf::u0(r).omega_dagger()? == w0, || format!("u0 in rank {r}"));
            let points = binf::cone_points(r, 6);
            let sub = par_tally(&points, |p| {
                let mut t = Tally::default();
                let a = p.omega_dagger()?;
                for k in 1..r {
                    let q = p.f(k)?;
                    let b = q.omega_dagger()?;
                    t.record(a == b || a == b.mul_left(k), || format!("{:?} k={k}", p.coords));
                    t.record(q.validate().is_ok() && q.e(k)? == Some(p.clone()), || format!("{:?} e f k={k}", p.coords));
                }
                Ok(t)
            })?;
            t = t.merge(sub);
        }
        for lam in [vec![2, 1, 0], vec![3, 1, 0, 0]] {
            let r = lam.len();
            let w0 = Permutation::longest(r);
            for v in enumerate_tableaux(&lam, r)? {
                let lhs = w0.compose(&omega(&v)?)?.compose(&w0)?;
                let rhs = binf::psi_lambda(&v)?.omega_dagger()?;
                t.record(lhs == rhs, || format!("image of {v}"));
            }
        }
        Ok(t.finish("cases"))
    })
}

pub fn functional_equation() -> Check {
    check("functional_equation", || {
        let mut cases = Vec::new();
        for (lam, r) in shapes(3, 3) {
            for w in Permutation::all(r) {
                for i in 1..r {
                    if w.mul_left(i).length() > w.length() {
                        cases.push((lam.clone(), w.clone(), i));
                    }
                }
            }
        }
        let t = par_tally(&cases, |(lam, w, i)| {
            let mut t = Tally::default();
            t.record(lattice::verify_functional_equation(lam, w, *i)?, || format!("{lam:?} w={w} i={i}"));
            Ok(t)
        })?;
        Ok(t.finish("cases"))
    })
}

pub fn involutions() -> Check {
    check("involutions", || {
        let mut t = par_tally(&shapes(4, 3), |(lam, r)| {
            let r = *r;
            let mut t = Tally::default();
            for x in enumerate_tableaux(lam, r)? {
                let xp = lusztig_involution(&x)?;
                t.record(lusztig_involution(&xp)? == x, || format!("square of {x}"));
                for i in 1..r {
                    let lhs = xp.f(i)?;
                    let rhs = x.e(r - i)?.map(|y| lusztig_involution(&y)).transpose()?;
                    t.record(lhs == rhs, || format!("f_{i} on involute of {x}"));
                }
                let a = crystal::string_f(&x, &crystal::word_a(r))?;
                let b = crystal::string_e(&xp, &crystal::word_b(r))?;
                t.record(a.entries == b.entries, || format!("string duality at {x}"));
            }
            Ok(t)
        })?;
        for x in enumerate_tableaux(&[2, 1, 0], 3)? {
            let (c, y) = crystal::phi_map(&x)?;
            let yp = lusztig_involution(&y)?;
            t.record(c.gtp(&yp) == crystal::neg_rev(&gtp_from_tableau(&x)), || format!("dual map at {x}"));
        }
        Ok(t.finish("cases"))
    })
}

fn battery(name: &str) -> Option<Vec<fn() -> Check>> {
    let list: Vec<fn() -> Check> = match name {
        "ybe" => vec![ybe_uncolored, ybe_colored],
        "atoms" => vec![
            schur_identity,
            atom_partition_functions,
            ground_state,
            atom_sum,
            crystal_atoms,
            state_atom_bijection,
            functional_equation,
        ],
        "keys" => vec![worked_example, key_oracle],
        "binf" => vec![binf_properties],
        "involutions" => vec![involutions],
        "all" => vec![
            schur_identity,
            ybe_uncolored,
            ybe_colored,
            atom_partition_functions,
            ground_state,
            atom_sum,
            crystal_atoms,
            state_atom_bijection,
            worked_example,
            key_oracle,
            binf_properties,
            functional_equation,
            involutions,
        ],
        _ => return None,
    };
    Some(list)
}

/// Runs the named battery. Checks run in order so the report is deterministic.
pub fn run(name: &str) -> Result<Report> {
    let list = battery(name).ok_or_else(|| Error::Parse(format!("unknown suite {name:?}; expected one of {SUITES:?}")))?;
    let checks: Vec<Check> = list.into_iter().map(|f| f()).collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report { suite: name.to_string(), passed, checks })
}
