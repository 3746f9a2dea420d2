//! The `hemispaces` command line.
//!
//! Exit status is 0 on success, 1 when a verification or count check fails,
//! and 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::enumeration::{
    bell_f, bell_f_table, count_hemispaces, enumerate_hemispaces, enumerate_splittings,
    enumerate_weak_orders, hemispaces_of, weak_order_to_splitting,
};
use crate::error::Error;
use crate::faces::{classify, face_catalog, face_conditions, Hyperplane};
use crate::hemispace::Hemispace;
use crate::json::{
    count_row, face_to_json, hemispace_to_json, index_set_to_json, parse_hemispace,
    parse_hyperplane,
};
use crate::maxplus::Point;
use crate::render::render_svg;
use crate::verify::{printed_sequence_note, run_all};

#[derive(Debug, Parser)]
#[command(name = "hemispaces", version, about = "Max-plus hyperplane faces and hemispaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the faces of a hyperplane with their defining conditions.
    Decompose {
        /// Hyperplane JSON, or a path to a file holding it.
        #[arg(long)]
        hyperplane: String,
    },
    /// Print the face containing a point.
    Classify {
        #[arg(long)]
        hyperplane: String,
        /// Comma-separated coordinates, e.g. `1,-inf,3/2`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Stream hemispaces as JSON lines.
    Enumerate {
        /// Dimension; every centered hyperplane plus the empty set and the whole space.
        #[arg(long)]
        n: Option<usize>,
        /// Restrict to the pairs related to one centered hyperplane.
        #[arg(long)]
        hyperplane: Option<String>,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare enumerated hemisphere counts with the recurrence for 1..=n.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Print f(0), ..., f(n).
    Bell {
        #[arg(long)]
        n: usize,
    },
    /// Count the splittings of the nonempty subsets of [m] into two union-closed collections.
    Splittings {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        m: u8,
        /// Also list each splitting with its weak-order preimage.
        #[arg(long)]
        list: bool,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        n: u8,
        /// Sampled segment pairs per hemispace in the convexity suite.
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw the decomposition of R^2_max as SVG.
    Render {
        #[arg(long)]
        hyperplane: String,
        /// Color by membership in this hemispace instead of by face.
        #[arg(long)]
        hemispace: Option<String>,
        /// Output file, `-` for standard output.
        #[arg(long)]
        svg: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Inline JSON when the argument looks like an object, a file path otherwise.
fn json_argument(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))
    }
}

fn load_hyperplane(arg: &str) -> Result<Hyperplane, Failure> {
    Ok(parse_hyperplane(&json_argument(arg)?)?)
}

fn load_hemispace(arg: &str) -> Result<Hemispace, Failure> {
    Ok(parse_hemispace(&json_argument(arg)?)?)
}

struct Style {
    color: bool,
}

impl Style {
    fn status(&self, pass: bool) -> String {
        let word = if pass { "PASS" } else { "FAIL" };
        if !self.color {
            return word.to_string();
        }
        let code = if pass { 32 } else { 31 };
        format!("\x1b[{code}m{word}\x1b[0m")
    }
}

fn execute(command: Command, out: &mut dyn Write, style: &Style) -> Outcome {
    match command {
        Command::Decompose { hyperplane } => {
            let h = load_hyperplane(&hyperplane)?;
            for face in face_catalog(&h) {
                let row = json!({
                    "face": face_to_json(face),
                    "codim": face.codimension(),
                    "pure": face.is_pure(&h),
                    "conditions": face_conditions(&h, face)?,
                });
                writeln!(out, "{row}")?;
            }
        }
        Command::Classify { hyperplane, point } => {
            let h = load_hyperplane(&hyperplane)?;
            let p: Point = point.parse().map_err(Error::from)?;
            writeln!(out, "{}", face_to_json(classify(&h, &p)?))?;
        }
        Command::Enumerate { n, hyperplane, out: path } => {
            let hemispaces = match (n, hyperplane) {
                (_, Some(arg)) => {
                    let h = load_hyperplane(&arg)?;
                    if let Some(n) = n.filter(|&n| n != h.dim()) {
                        return Err(Failure::Usage(format!(
                            "--n {n} does not match the hyperplane dimension {}",
                            h.dim()
                        )));
                    }
                    hemispaces_of(&h)?
                }
                (Some(n), None) if (1..=5).contains(&n) => enumerate_hemispaces(n),
                (Some(n), None) => {
                    return Err(Failure::Usage(format!("--n must be in 1..=5, got {n}")))
                }
                (None, None) => {
                    return Err(Failure::Usage("enumerate needs --n or --hyperplane".into()))
                }
            };
            let mut text = String::new();
            for hm in &hemispaces {
                text.push_str(&hemispace_to_json(hm).to_string());
                text.push('\n');
            }
            match path {
                Some(p) => std::fs::write(&p, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Count { n } => {
            if !(1..=5).contains(&n) {
                return Err(Failure::Usage(format!("--n must be in 1..=5, got {n}")));
            }
            let mut all_match = true;
            for k in 1..=n {
                let enumerated = count_hemispaces(k);
                let formula = bell_f(k) * 2u32;
                all_match &= enumerated == formula;
                writeln!(out, "{}", count_row(k, &enumerated, &formula))?;
            }
            if !all_match {
                return Err(Failure::Check);
            }
        }
        Command::Bell { n } => {
            let values: Vec<String> = bell_f_table(n).iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", values.join(" "))?;
        }
        Command::Splittings { m, list } => {
            let m = usize::from(m);
            let splittings = enumerate_splittings(m);
            writeln!(out, "{}", json!({"m": m, "splittings": splittings.len()}))?;
            if list {
                let preimages: Vec<_> = enumerate_weak_orders(m)
                    .into_iter()
                    .map(|w| (weak_order_to_splitting(&w), w))
                    .collect();
                for s in &splittings {
                    let family = |f: &std::collections::BTreeSet<_>| -> Vec<_> {
                        f.iter().map(|&x| index_set_to_json(x)).collect()
                    };
                    let weak = preimages.iter().find(|(image, _)| image == s).map(|(_, w)| {
                        w.layers().iter().map(|&l| index_set_to_json(l)).collect::<Vec<_>>()
                    });
                    writeln!(
                        out,
                        "{}",
                        json!({"c": family(&s.c), "rest": family(&s.rest), "weak_order": weak})
                    )?;
                }
            }
        }
        Command::Verify { n, trials, seed } => {
            let results = run_all(usize::from(n), trials, seed);
            for r in &results {
                writeln!(out, "{} {}: {}", style.status(r.pass), r.name, r.detail)?;
            }
            writeln!(out, "{}", printed_sequence_note())?;
            if results.iter().any(|r| !r.pass) {
                return Err(Failure::Check);
            }
        }
        Command::Render { hyperplane, hemispace, svg } => {
            let h = load_hyperplane(&hyperplane)?;
            let hm = hemispace.as_deref().map(load_hemispace).transpose()?;
            let picture = render_svg(&h, hm.as_ref())?;
            if svg.as_os_str() == "-" {
                out.write_all(picture.as_bytes())?;
            } else {
                std::fs::write(&svg, picture)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", svg.display())))?;
            }
        }
    }
    Ok(())
}

/// Runs the command line without color and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_styled(args, out, err, false)
}

/// Like [`run`], with ANSI colors in the verification report when `color`.
pub fn run_styled<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = if color { e.render().ansi().to_string() } else { e.render().to_string() };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(cli.command, out, &Style { color }) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hemispaces").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bell_and_count() {
        assert_eq!(call(&["bell", "--n", "4"]).1, "1 3 13 75 541\n");
        let (code, out, _) = call(&["count", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.lines().last().unwrap(),
            r#"{"n":2,"enumerated":26,"formula":26,"match":true}"#
        );
    }

    #[test]
    fn classify_point() {
        let h = r#"{"n":2,"I":[1,2],"J":[],"L":[],"alpha":true}"#;
        let (code, out, _) = call(&["classify", "--hyperplane", h, "--point", "1,0"]);
        assert_eq!((code, out.as_str()), (0, "{\"k\":[1]}\n"));
        let (code, _, err) = call(&["classify", "--hyperplane", h, "--point", "1,x"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["count", "--n", "2", "--extra"]).0, 2);
        assert_eq!(call(&["enumerate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
