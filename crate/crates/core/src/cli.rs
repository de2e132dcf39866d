//! Command-line front end. `run` is pure: it takes the argument list and returns the
//! exit status together with the text destined for stdout and stderr.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::centralizer::verify_centralizer_type;
use crate::diagram::StripDiagram;
use crate::error::Error;
use crate::garside::{Garside, Word};
use crate::germ::{CtildeReflection, Germ, GermElement};
use crate::hurwitz::Hurwitz;
use crate::strip::Strip;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "ctilde", version, about = "Dual Garside structure of the affine C Artin group")]
pub struct Invocation {
    /// Rank n (the period is 2n).
    #[arg(short = 'n', global = true, default_value_t = 2)]
    pub rank: usize,
    /// Offset window K for enumerations.
    #[arg(short = 'K', global = true, default_value_t = 1)]
    pub window: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Greedy normal form of a word in s0..sn.
    Normalize { word: String },
    /// Exit 0 when two words represent the same element, 1 otherwise.
    Eq { left: String, right: String },
    /// Least common multiple of two divisors of c.
    Lcm { x: String, y: String },
    /// Greatest common divisor of two divisors of c.
    Gcd { x: String, y: String },
    /// Whether x left-divides y.
    Divides { x: String, y: String },
    /// Reflections dividing an element (default c).
    Atoms { x: Option<String> },
    /// Divisors of c in the window.
    Divisors,
    /// Dual relations coming from the window atoms.
    Present,
    /// Hurwitz orbit of a reflection tuple, or of a decomposition of an element.
    Hurwitz {
        /// Reflections of the starting tuple, left to right.
        reflections: Vec<String>,
        /// Element whose decompositions are compared with the orbit (default c).
        #[arg(long)]
        element: Option<String>,
        /// Window the orbit may use (default K).
        #[arg(long)]
        orbit_window: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Compare the elements fixed by c^h with the dual germ of type C_gcd(h,n).
    Centralize { h: i64 },
    /// SVG strip diagram of a divisor of c.
    Draw {
        x: String,
        /// Period of a custom strip.
        #[arg(long, requires = "x_residues")]
        period: Option<usize>,
        /// Comma separated residues forming X on a custom strip.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x_residues: Vec<i64>,
    },
}

/// Exit status and output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidCycle(_) | Error::NotBijective(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

type Step<T> = std::result::Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let json_mode =
        args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json");
    let inv = match Invocation::try_parse_from(&args) {
        Ok(inv) => inv,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(e.to_string());
            }
            return failure(Failure::Usage(e.render().to_string()), json_mode);
        }
    };
    let json_mode = inv.format == Format::Json;
    match execute(&inv) {
        Ok(out) => out,
        Err(f) => failure(f, json_mode),
    }
}

fn failure(f: Failure, json_mode: bool) -> Outcome {
    let (code, kind, message) = match f {
        Failure::Usage(m) => (2, "parse", m),
        Failure::Domain(e) => (1, "domain", e.to_string()),
    };
    let message = message.trim_end().to_string();
    if json_mode {
        let body = json!({ "error": { "kind": kind, "message": message } });
        Outcome { code, stdout: format!("{body}\n"), stderr: String::new() }
    } else {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"))
}

fn no_svg(inv: &Invocation) -> Step<()> {
    if inv.format == Format::Svg {
        return Err(Failure::Usage("--format svg is only available for draw".into()));
    }
    Ok(())
}

fn element(germ: &Germ, s: &str) -> Step<GermElement> {
    Ok(germ.parse(s)?)
}

fn listing<T: std::fmt::Display>(header: String, items: &[T]) -> String {
    let mut out = header;
    out.push('\n');
    for item in items {
        out.push_str(&item.to_string());
        out.push('\n');
    }
    out
}

fn window_header(window: usize, truncated: bool) -> String {
    format!("# window {window}{}", if truncated { ", truncated" } else { ", complete" })
}

fn execute(inv: &Invocation) -> Step<Outcome> {
    if inv.window == 0 {
        return Err(Failure::Usage("window K must be at least 1".into()));
    }
    let json_mode = inv.format == Format::Json;
    let n = inv.rank;
    let k = inv.window;
    if let Command::Draw { x, period, x_residues } = &inv.command {
        return draw(inv, x, *period, x_residues);
    }
    no_svg(inv)?;
    let out = match &inv.command {
        Command::Normalize { word } => {
            let g = Garside::new(n)?;
            let nf = g.normalize(&Word::parse(word)?)?;
            if json_mode {
                to_json(
                    &json!({ "rank": n, "normal_form": nf.to_string(), "delta_power": nf.delta_power, "body": nf.body }),
                )
            } else {
                format!("{nf}\n")
            }
        }
        Command::Eq { left, right } => {
            let g = Garside::new(n)?;
            let equal = g.equals(&Word::parse(left)?, &Word::parse(right)?)?;
            let stdout = if json_mode { to_json(&json!({ "equal": equal })) } else { format!("{equal}\n") };
            return Ok(Outcome { code: if equal { 0 } else { 1 }, stdout, stderr: String::new() });
        }
        Command::Lcm { x, y } | Command::Gcd { x, y } => {
            let germ = Germ::ctilde(n)?;
            let (x, y) = (element(&germ, x)?, element(&germ, y)?);
            let z = if matches!(inv.command, Command::Lcm { .. }) { germ.lcm(&x, &y)? } else { germ.gcd(&x, &y)? };
            if json_mode {
                to_json(&z)
            } else {
                format!("{z}\n")
            }
        }
        Command::Divides { x, y } => {
            let germ = Germ::ctilde(n)?;
            let d = germ.divides(&element(&germ, x)?, &element(&germ, y)?);
            if json_mode {
                to_json(&json!({ "divides": d }))
            } else {
                format!("{d}\n")
            }
        }
        Command::Atoms { x } => {
            let germ = Germ::ctilde(n)?;
            let x = match x {
                Some(s) => element(&germ, s)?,
                None => germ.coxeter(),
            };
            let atoms = germ.atoms_dividing(&x, k)?;
            if json_mode {
                to_json(&atoms)
            } else {
                listing(window_header(atoms.window, atoms.truncated), &atoms.atoms)
            }
        }
        Command::Divisors => {
            let germ = Germ::ctilde(n)?;
            let all = germ.enumerate_sigma(k);
            if json_mode {
                to_json(&json!({ "rank": n, "window": k, "truncated": true, "divisors": all }))
            } else {
                listing(window_header(k, true), &all)
            }
        }
        Command::Present => {
            let p = Garside::new(n)?.emit_presentation(k)?;
            if json_mode {
                to_json(&p)
            } else {
                let mut out = window_header(p.window, p.truncated);
                let gens: Vec<String> = p.generators.iter().map(|r| r.to_string()).collect();
                out.push_str(&format!("\ngenerators {}\n", gens.join(" ")));
                listing(out.trim_end().to_string(), &p.relations)
            }
        }
        Command::Hurwitz { reflections, element: target, orbit_window, cap } => {
            hurwitz(inv, reflections, target.as_deref(), orbit_window.unwrap_or(k), *cap)?
        }
        Command::Centralize { h } => {
            if *h < 1 {
                return Err(Failure::Usage("h must be positive".into()));
            }
            let r = verify_centralizer_type(*h, n, k)?;
            if json_mode {
                to_json(&r)
            } else {
                format!(
                    "h {} n {} type C{}\nfixed atoms {} divisors {}\ntype C atoms {} divisors {}\ncounts match {}\nlattice isomorphic {}\nreindexing is isomorphism {}\nmatches {}\n",
                    r.h,
                    r.n,
                    r.expected_rank,
                    r.fixed.atoms,
                    r.fixed.divisors,
                    r.type_c.atoms,
                    r.type_c.divisors,
                    r.counts_match,
                    r.lattice_isomorphic,
                    r.reindexing_is_isomorphism,
                    r.matches
                )
            }
        }
        Command::Draw { .. } => unreachable!(),
    };
    Ok(Outcome::ok(out))
}

fn hurwitz(
    inv: &Invocation,
    reflections: &[String],
    target: Option<&str>,
    orbit_window: usize,
    cap: usize,
) -> Step<String> {
    let hz = Hurwitz::new(inv.rank)?;
    let period = hz.germ().period();
    let k = inv.window;
    let tuple_text = |t: &[CtildeReflection]| t.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ");
    let (start, decompositions) = if reflections.is_empty() {
        let w = match target {
            Some(s) => element(hz.germ(), s)?,
            None => hz.germ().coxeter(),
        };
        let decs = hz.reduced_decompositions(&w, k)?;
        let first = decs
            .tuples
            .iter()
            .next()
            .cloned()
            .ok_or(Failure::Domain(Error::NotMember("no reduced decomposition in the window".into())))?;
        (hz.tuple(first), Some(decs))
    } else {
        if target.is_some() {
            return Err(Failure::Usage("give either reflections or --element".into()));
        }
        let entries =
            reflections.iter().map(|s| CtildeReflection::parse(s, period)).collect::<crate::Result<Vec<_>>>()?;
        (hz.tuple(entries), None)
    };
    let orbit = hz.orbit_in_window(&start, orbit_window, cap);
    let covers = decompositions.as_ref().map(|d| d.tuples.is_subset(&orbit.tuples));
    if inv.format == Format::Json {
        return Ok(to_json(&json!({
            "window": k,
            "orbit_window": orbit_window,
            "start": start.entries,
            "orbit": orbit,
            "decompositions": decompositions,
            "orbit_covers_decompositions": covers,
        })));
    }
    let mut out = format!(
        "{}\n# orbit window {orbit_window}\nstart {}\n",
        window_header(k, orbit.truncated),
        tuple_text(&start.entries)
    );
    if let (Some(d), Some(c)) = (&decompositions, covers) {
        out.push_str(&format!("decompositions {}\norbit covers decompositions {c}\n", d.tuples.len()));
    }
    out.push_str(&format!("orbit {}\n", orbit.tuples.len()));
    for t in &orbit.tuples {
        out.push_str(&tuple_text(t));
        out.push('\n');
    }
    Ok(out)
}

fn draw(inv: &Invocation, x: &str, period: Option<usize>, x_residues: &[i64]) -> Step<Outcome> {
    let germ = match period {
        Some(p) => Germ::new(Strip::new(p, x_residues)?),
        None => Germ::ctilde(inv.rank)?,
    };
    let x = element(&germ, x)?;
    let d = StripDiagram::of_element(&germ, &x);
    let out = if inv.format == Format::Json {
        to_json(&json!({ "element": x, "diagram": d, "crossings": d.crossings().len() }))
    } else {
        d.to_svg()
    };
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("ctilde").chain(args.iter().copied()))
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(call(&["normalize", "-n", "2", "s0 s2 s1"]).stdout, "D^1 |\n");
        assert_eq!(call(&["normalize", "-n", "2", ""]).stdout, "D^0 |\n");
    }

    #[test]
    fn eq_exit_codes() {
        assert_eq!(call(&["eq", "-n", "2", "s0 s1 s0 s1", "s1 s0 s1 s0"]).code, 0);
        assert_eq!(call(&["eq", "-n", "2", "s0 s1", "s1 s0"]).code, 1);
    }

    #[test]
    fn parse_and_domain_errors() {
        assert_eq!(call(&["normalize", "s9"]).code, 1);
        assert_eq!(call(&["normalize", "x1"]).code, 2);
        assert_eq!(call(&["frobnicate"]).code, 2);
        let out = call(&["lcm", "--format", "json", "(1,3)", "(2,3"]);
        assert_eq!(out.code, 2);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "parse");
        let out = call(&["divides", "--format", "json", "(1,4)(2,3)", "(1,3)"]);
        assert_eq!(out.code, 1);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "domain");
    }

    #[test]
    fn lattice_commands() {
        let lcm = call(&["lcm", "(2,3)", "(1,2)(3,4)"]);
        assert_eq!(lcm.code, 0, "{lcm:?}");
        assert_eq!(call(&["divides", "(2,3)", lcm.stdout.trim()]).stdout, "true\n");
        let gcd = call(&["gcd", "(2,3)", "(1,2)(3,4)"]);
        assert_eq!(gcd.code, 0);
        assert_eq!(call(&["divides", gcd.stdout.trim(), "(2,3)"]).stdout, "true\n");
    }

    #[test]
    fn enumerations_report_window() {
        for cmd in ["atoms", "divisors", "present"] {
            let out = call(&[cmd, "-K", "1"]);
            assert_eq!(out.code, 0, "{cmd}");
            assert!(out.stdout.starts_with("# window 1"), "{cmd}: {}", out.stdout);
        }
    }

    #[test]
    fn hurwitz_command() {
        let out = call(&["hurwitz", "-n", "2", "-K", "1", "--orbit-window", "3"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("decompositions 24"), "{}", out.stdout);
        assert!(out.stdout.contains("orbit covers decompositions true"), "{}", out.stdout);
    }

    #[test]
    fn centralize_command() {
        let out = call(&["centralize", "-n", "2", "2"]);
        assert!(out.stdout.contains("fixed atoms 4 divisors 6"), "{}", out.stdout);
        assert!(out.stdout.ends_with("matches true\n"));
    }

    #[test]
    fn draw_command() {
        let out = call(&["draw", "--period", "9", "--x-residues", "5,6,7,8,9", "(5,7,8,3,2)"]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.starts_with("<svg"));
        assert_eq!(call(&["draw", "(1,4)(2,3)"]).code, 1);
        assert_eq!(call(&["atoms", "--format", "svg"]).code, 2);
    }
}
