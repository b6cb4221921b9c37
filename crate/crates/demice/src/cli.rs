//! Command-line frontend. Output is JSON unless `--pretty` is given.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad usage or bad input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::binf::{self, ConePoint};
use crate::crystal::{self, GTPattern, Tableau};
use crate::error::{Error, Result};
use crate::keys;
use crate::lattice::{self, RenderFormat};
use crate::laurent::{self, LaurentPolynomial};
use crate::suite;
use crate::weyl::{self, Permutation};

#[derive(Parser, Debug)]
#[command(name = "demice", version, about = "Demazure atoms, colored lattice models and crystals")]
pub struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Shape {
    /// Partition as a comma list, e.g. 2,1,0.
    #[arg(long)]
    pub lambda: String,
    /// Rank; defaults to the number of listed parts.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur polynomial s_λ(z_1..z_r).
    Schur {
        #[command(flatten)]
        shape: Shape,
    },
    /// Demazure character or atom ∂_w z^λ.
    Demazure {
        #[command(flatten)]
        shape: Shape,
        /// Permutation as s1*s2, [3,1,2] or e.
        #[arg(long)]
        w: String,
        #[arg(long, conflicts_with = "char")]
        atom: bool,
        #[arg(long = "char")]
        char: bool,
    },
    /// Partition function of the lattice model.
    Partition {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        w: Option<String>,
        /// Largest column label; defaults to λ1 + r - 1.
        #[arg(long = "N")]
        n: Option<usize>,
        /// Split by the coloring permutation.
        #[arg(long)]
        colored: bool,
    },
    /// Admissible states of the model.
    States {
        #[command(flatten)]
        shape: Shape,
        #[arg(long = "N")]
        n: Option<usize>,
        /// Keep only states whose coloring permutation is w.
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
    /// Yang-Baxter equation over every boundary.
    YbeCheck {
        #[arg(long)]
        colored: bool,
    },
    /// Right or left key of a tableau.
    Key {
        #[command(flatten)]
        tableau: TableauArg,
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        /// Use the brute-force atom search (right keys only).
        #[arg(long)]
        oracle: bool,
    },
    /// The permutation ω(T).
    Omega {
        #[command(flatten)]
        tableau: TableauArg,
        /// Report ω of the Lusztig involute instead.
        #[arg(long)]
        involute: bool,
    },
    /// Tableaux of the crystal atom indexed by w.
    Atom {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        w: String,
    },
    /// Convert between tableaux and Gelfand-Tsetlin patterns.
    Gtp {
        /// Tableau JSON to convert.
        #[arg(long, conflicts_with = "to_tableau", required_unless_present = "to_tableau")]
        from_tableau: Option<String>,
        /// Pattern rows as JSON, e.g. [[2,1,0],[1,1],[1]].
        #[arg(long)]
        to_tableau: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Operations on B∞ cone points.
    Binf {
        /// {"r":3,"coords":[..]}
        #[arg(long)]
        point: String,
        #[arg(long, conflicts_with_all = ["f", "e"])]
        omega_dagger: bool,
        #[arg(long, conflicts_with = "e")]
        f: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
    },
    /// Run a self-check battery.
    Suite {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(suite::SUITES))]
        name: String,
    },
}

#[derive(Args, Debug)]
pub struct TableauArg {
    /// {"shape":[..],"rows":[..]} or a bare list of rows.
    #[arg(long)]
    pub tableau: String,
    /// Rank for a bare list of rows; defaults to the largest entry.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Render {
    Ascii,
    Svg,
}

/// A failure of an input flag; reported with the flag name and exit code 2.
struct Usage(String);

enum Outcome {
    Ok(String),
    CheckFailed(String),
}

fn usage(flag: &str) -> impl Fn(Error) -> Usage + '_ {
    move |e| Usage(format!("--{flag}: {e}"))
}

fn parse_lambda(shape: &Shape) -> std::result::Result<(Vec<usize>, usize), Usage> {
    let parts: Vec<usize> = shape
        .lambda
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| Usage(format!("--lambda: {s:?}: {e}"))))
        .collect::<std::result::Result<_, _>>()?;
    let r = shape.r.unwrap_or(parts.len());
    let lam = crystal::pad_partition(&parts, r).map_err(usage("lambda"))?;
    Ok((lam, r))
}

fn parse_perm(s: &str, r: usize) -> std::result::Result<Permutation, Usage> {
    Permutation::parse(s, r).map_err(usage("w"))
}

fn parse_tableau(arg: &TableauArg) -> std::result::Result<Tableau, Usage> {
    let bad = |m: String| Usage(format!("--tableau: {m}"));
    let v: Value = serde_json::from_str(&arg.tableau).map_err(|e| bad(e.to_string()))?;
    if v.is_object() {
        return serde_json::from_value(v).map_err(|e| bad(e.to_string()));
    }
    let rows: Vec<Vec<usize>> = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
    let r = arg.rank.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(1));
    Tableau::new(r, rows).map_err(|e| bad(e.to_string()))
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

fn internal(e: Error) -> Usage {
    Usage(e.to_string())
}

fn poly_out(p: &LaurentPolynomial, pretty: bool) -> String {
    if pretty {
        p.to_string()
    } else {
        to_json(p)
    }
}

fn perm_out(w: &Permutation, pretty: bool) -> String {
    if pretty {
        format!("{w} = {}", weyl::word_string(w))
    } else {
        to_json(w)
    }
}

fn tableau_out(t: &Tableau, pretty: bool) -> String {
    if pretty {
        t.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
    } else {
        to_json(t)
    }
}

fn run_command(cmd: &Command, pretty: bool) -> std::result::Result<Outcome, Usage> {
    let out = match cmd {
        Command::Schur { shape } => {
            let (lam, r) = parse_lambda(shape)?;
            poly_out(&laurent::schur(&lam, r).map_err(internal)?, pretty)
        }
        Command::Demazure { shape, w, atom, .. } => {
            let (lam, r) = parse_lambda(shape)?;
            let w = parse_perm(w, r)?;
            let z = LaurentPolynomial::monomial(lam.iter().map(|&x| x as i64).collect());
            poly_out(&laurent::demazure_w(&w, &z, *atom).map_err(internal)?, pretty)
        }
        Command::Partition { shape, w, n, colored } => {
            let (lam, r) = parse_lambda(shape)?;
            let sys = lattice::system(&lam, r, *n).map_err(usage("N"))?;
            match (w, colored) {
                (Some(w), _) => {
                    let w = parse_perm(w, r)?;
                    let z = lattice::colored_partition_functions(&sys).map_err(internal)?;
                    poly_out(&z.get(&w).cloned().unwrap_or_else(|| LaurentPolynomial::zero(r)), pretty)
                }
                (None, true) => {
                    let z = lattice::colored_partition_functions(&sys).map_err(internal)?;
                    if pretty {
                        z.iter().map(|(w, p)| format!("{}: {p}", weyl::word_string(w))).collect::<Vec<_>>().join("\n")
                    } else {
                        let v: Vec<Value> = z.iter().map(|(w, p)| json!({"w": w, "z": p})).collect();
                        to_json(&v)
                    }
                }
                (None, false) => {
                    poly_out(&lattice::uncolored_partition_function(&lam, r, *n).map_err(internal)?, pretty)
                }
            }
        }
        Command::States { shape, n, w, render } => {
            let (lam, r) = parse_lambda(shape)?;
            let sys = lattice::system(&lam, r, *n).map_err(usage("N"))?;
            let filter = w.as_deref().map(|w| parse_perm(w, r)).transpose()?;
            let mut items = Vec::new();
            for s in lattice::enumerate_states(&sys).map_err(internal)? {
                let (c, perm) = lattice::color_state(&s).map_err(internal)?;
                if filter.as_ref().is_some_and(|f| *f != perm) {
                    continue;
                }
                items.push((s, c, perm));
            }
            match render {
                Some(fmt) => {
                    let fmt = match fmt {
                        Render::Ascii => RenderFormat::Ascii,
                        Render::Svg => RenderFormat::Svg,
                    };
                    items.iter().map(|(_, c, _)| lattice::render_state(c, fmt)).collect::<Vec<_>>().join("\n")
                }
                None if pretty => items
                    .iter()
                    .map(|(s, _, perm)| {
                        let t = lattice::state_tableau(s).map(|t| t.to_string()).unwrap_or_default();
                        let z = lattice::boltzmann_weight(s).map(|z| z.to_string()).unwrap_or_default();
                        format!("{t}  {z}  w={}", weyl::word_string(perm))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                None => {
                    let mut v = Vec::new();
                    for (s, c, perm) in &items {
                        v.push(json!({
                            "tableau": lattice::state_tableau(s).map_err(internal)?,
                            "gtp": lattice::state_to_gtp(s),
                            "weight": lattice::boltzmann_weight(s).map_err(internal)?,
                            "w": perm,
                            "state": c,
                        }));
                    }
                    to_json(&v)
                }
            }
        }
        Command::YbeCheck { colored } => {
            let rep = lattice::ybe_check(*colored);
            return Ok(if rep.ok() { Outcome::Ok(rep.to_string()) } else { Outcome::CheckFailed(rep.to_string()) });
        }
        Command::Key { tableau, side, oracle } => {
            let t = parse_tableau(tableau)?;
            let k = match (side, oracle) {
                (Side::Right, false) => keys::right_key(&t),
                (Side::Right, true) => keys::oracle_right_key(&t),
                (Side::Left, false) => keys::left_key(&t),
                (Side::Left, true) => return Err(Usage("--oracle: only available with --side right".into())),
            }
            .map_err(internal)?;
            tableau_out(&k, pretty)
        }
        Command::Omega { tableau, involute } => {
            let mut t = parse_tableau(tableau)?;
            if *involute {
                t = crystal::lusztig_involution(&t).map_err(internal)?;
            }
            perm_out(&crystal::omega(&t).map_err(internal)?, pretty)
        }
        Command::Atom { shape, w } => {
            let (lam, r) = parse_lambda(shape)?;
            let w = parse_perm(w, r)?;
            let atom = crystal::demazure_atom_crystal(&lam, &w).map_err(internal)?;
            if pretty {
                atom.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n")
            } else {
                to_json(&atom)
            }
        }
        Command::Gtp { from_tableau, to_tableau, rank } => {
            if let Some(src) = from_tableau {
                let t = parse_tableau(&TableauArg { tableau: src.clone(), rank: *rank })?;
                let p = crystal::gtp_from_tableau(&t);
                if pretty {
                    p.to_string()
                } else {
                    to_json(&p)
                }
            } else {
                let src = to_tableau.as_deref().unwrap_or_default();
                let bad = |m: String| Usage(format!("--to-tableau: {m}"));
                let rows: Vec<Vec<i64>> = serde_json::from_str(src).map_err(|e| bad(e.to_string()))?;
                let p = GTPattern::new(rows, false).map_err(|e| bad(e.to_string()))?;
                tableau_out(&crystal::tableau_from_gtp(&p).map_err(|e| bad(e.to_string()))?, pretty)
            }
        }
        Command::Binf { point, omega_dagger, f, e } => {
            let p: ConePoint = serde_json::from_str(point).map_err(|x| Usage(format!("--point: {x}")))?;
            p.validate().map_err(usage("point"))?;
            if *omega_dagger {
                perm_out(&binf::omega_dagger(&p).map_err(internal)?, pretty)
            } else if let Some(k) = f {
                to_json(&binf::f(*k, &p).map_err(usage("f"))?)
            } else if let Some(k) = e {
                to_json(&binf::e(*k, &p).map_err(usage("e"))?)
            } else {
                let ks: Vec<usize> = (1..p.r).collect();
                let phi: Vec<i64> = ks.iter().map(|&k| p.phi(k)).collect::<Result<_>>().map_err(internal)?;
                let eps: Vec<i64> = ks.iter().map(|&k| p.eps(k)).collect::<Result<_>>().map_err(internal)?;
                let v = json!({"point": p, "weight": p.weight(), "phi": phi, "eps": eps});
                to_json(&v)
            }
        }
        Command::Suite { name } => {
            let rep = suite::run(name).map_err(usage("name"))?;
            let text = if pretty { rep.to_string() } else { to_json(&rep) };
            return Ok(if rep.passed { Outcome::Ok(text) } else { Outcome::CheckFailed(text) });
        }
    };
    Ok(Outcome::Ok(out))
}

fn configure_threads() {
    if let Some(n) = std::env::var("DEMICE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    configure_threads();
    match run_command(&cli.command, cli.pretty) {
        Ok(Outcome::Ok(s)) => {
            let _ = writeln!(out, "{s}");
            0
        }
        Ok(Outcome::CheckFailed(s)) => {
            let _ = writeln!(out, "{s}");
            1
        }
        Err(Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("demice").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn schur_pretty() {
        let (code, out, _) = call(&["--pretty", "schur", "--lambda", "1,0"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "z1 + z2");
    }

    #[test]
    fn partition_two_terms() {
        let (code, out, _) = call(&["partition", "--lambda", "2,1,0", "--w", "s1*s2", "--pretty"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "z1^3*z2^2*z3 + z1^2*z2^3*z3");
    }

    #[test]
    fn bad_flags() {
        assert_eq!(call(&["schur", "--lambda", "1,x"]).0, 2);
        assert_eq!(call(&["schur", "--lambda", "1,2"]).0, 2);
        assert_eq!(call(&["demazure", "--lambda", "1,0", "--w", "s4"]).0, 2);
        let (code, _, err) = call(&["key", "--tableau", "[[2,1]]"]);
        assert_eq!(code, 2);
        assert!(err.contains("--tableau"));
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn key_json() {
        let t = r#"{"shape":[5,3,1,0],"rows":[[1,1,2,4,4],[2,3,4],[3]]}"#;
        let (code, out, _) = call(&["key", "--tableau", t, "--side", "right"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"shape":[5,3,1,0],"rows":[[1,2,2,4,4],[2,4,4],[4]]}"#);
        let (_, oracle, _) = call(&["key", "--tableau", t, "--oracle"]);
        assert_eq!(oracle, out);
    }

    #[test]
    fn omega_and_binf() {
        let (_, out, _) = call(&["omega", "--tableau", "[[1,3],[2]]", "--rank", "3", "--involute"]);
        assert_eq!(out.trim(), r#"{"one_line":[2,1,3],"word":[1]}"#);
        let (_, out, _) = call(&["binf", "--point", r#"{"r":3,"coords":[0,0,0]}"#, "--omega-dagger", "--pretty"]);
        assert_eq!(out.trim(), "[3,2,1] = s1*s2*s1");
        let (_, out, _) = call(&["binf", "--point", r#"{"r":2,"coords":[0]}"#, "--f", "1"]);
        assert_eq!(out.trim(), r#"{"r":2,"coords":[1]}"#);
        assert_eq!(call(&["binf", "--point", r#"{"r":3,"coords":[0,1,2]}"#]).0, 2);
    }

    #[test]
    fn gtp_round_trip() {
        let (_, out, _) = call(&["gtp", "--from-tableau", "[[1,3],[2]]", "--rank", "3"]);
        let rows: Value = serde_json::from_str(out.trim()).unwrap();
        let rows = rows["rows"].to_string();
        let (_, back, _) = call(&["gtp", "--to-tableau", &rows]);
        assert_eq!(back.trim(), r#"{"shape":[2,1,0],"rows":[[1,3],[2]]}"#);
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["states", "--lambda", "2,1,0"]);
        let b = call(&["states", "--lambda", "2,1,0"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}
