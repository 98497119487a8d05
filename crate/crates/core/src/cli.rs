//! Command line front end.
//!
//! Each subcommand prints exactly one document: a JSON object on one line,
//! or a TSV/SVG table for `range`. Exit codes: 0 success, 1 domain error
//! (the JSON body is `{"error": ...}`), 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classes::{KnotType, LegendrianClass, Presentation, RangeEntry};
use crate::contact::{dividing_profile, ContactStructure, Sign, TorusSpan};
use crate::error::{Error, Result};
use crate::lattice::Direction;
use crate::oracle::verify_against_closed_form;
use crate::stable::{becomes_isotopic_after, minimal_mixed_merge, minimal_same_sign_merge, StableQuery};

#[derive(Debug, Parser)]
#[command(name = "t3leg", version, about = "Legendrian linear curves in (T^3, xi_n)")]
struct Cli {
    /// Write the document to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct KnotArgs {
    /// Index of the contact structure xi_n.
    #[arg(long)]
    n: u32,
    /// Direction c1,c2,c3 of the linear knot type.
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    direction: [i64; 3],
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximal Thurston-Bennequin invariant.
    Tbmax {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Slope and number of dividing curves of a convex linear torus.
    DividingProfile {
        #[arg(long)]
        n: u32,
        /// Spanning vectors as b1,b2,b3:c1,c2,c3.
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        span: ([i64; 3], [i64; 3]),
    },
    /// Number of Legendrian classes with the given tb and r.
    Count {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, allow_negative_numbers = true)]
        tb: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// Canonical class of one presentation, or whether two are isotopic.
    Classify {
        #[command(flatten)]
        knot: KnotArgs,
        /// base:p:m for horizontal directions, p:m otherwise.
        #[arg(long = "pres", required = true, num_args = 1, action = clap::ArgAction::Append)]
        pres: Vec<String>,
    },
    /// Apply one stabilisation to a presented class.
    Stabilize {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        pres: String,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Classes that stabilise to the presented class.
    Destabilize {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        pres: String,
    },
    /// Mountain range of class counts down to --tb-min.
    Range {
        #[command(flatten)]
        knot: KnotArgs,
        /// Lowest tb to list; defaults to tb_max.
        #[arg(long, allow_negative_numbers = true)]
        tb_min: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Stable isotopy of two presentations.
    StableMerge {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "pres", required = true, num_args = 1, action = clap::ArgAction::Append)]
        pres: Vec<String>,
        /// Extra stabilisations p:m applied to both curves.
        #[arg(long, value_parser = parse_pair)]
        extra: Option<(u32, u32)>,
        /// Largest k tried by the same-sign search.
        #[arg(long, default_value_t = 10)]
        same_sign_bound: u32,
    },
    /// Negative-stable class count at --sl, or the transversal simplicity verdict.
    Transverse {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, allow_negative_numbers = true)]
        sl: Option<i64>,
    },
    /// Compare the brute-force word closure with the closed-form counts.
    Oracle {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        depth: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Svg,
}

fn parse_vector(s: &str) -> std::result::Result<[i64; 3], String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<i64>| format!("expected 3 integers, got {}", v.len()))
}

fn parse_span(s: &str) -> std::result::Result<([i64; 3], [i64; 3]), String> {
    let (b, c) = s.split_once(':').ok_or("expected b1,b2,b3:c1,c2,c3")?;
    Ok((parse_vector(b)?, parse_vector(c)?))
}

fn parse_pair(s: &str) -> std::result::Result<(u32, u32), String> {
    let (p, m) = s.split_once(':').ok_or("expected p:m")?;
    Ok((
        p.parse().map_err(|e| format!("{p:?}: {e}"))?,
        m.parse().map_err(|e| format!("{m:?}: {e}"))?,
    ))
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    s.parse().map_err(|_| "expected + or -".to_string())
}

impl KnotArgs {
    fn knot_type(&self) -> Result<KnotType> {
        let cs = ContactStructure::new(self.n)?;
        let d = Direction::try_from(self.direction)?;
        Ok(KnotType::new(cs, d))
    }
}

/// Parse `base:p:m` (horizontal directions) or `p:m`.
pub fn parse_presentation(kt: &KnotType, s: &str) -> Result<Presentation> {
    let fields = s
        .split(':')
        .map(|f| f.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::MalformedPresentation("expected non-negative integers"))?;
    let pres = match (kt.is_vertical(), fields.as_slice()) {
        (true, &[base, p, m]) => kt.presentation(Some(base as usize), p, m),
        (false, &[p, m]) => kt.presentation(None, p, m),
        (true, _) => return Err(Error::MalformedPresentation("expected base:p:m")),
        (false, _) => return Err(Error::MalformedPresentation("expected p:m")),
    };
    kt.canonicalize(&pres)?;
    Ok(pres)
}

/// A class together with its classical invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassView {
    pub tb: i64,
    pub r: i64,
    #[serde(flatten)]
    pub class: LegendrianClass,
}

impl From<LegendrianClass> for ClassView {
    fn from(class: LegendrianClass) -> Self {
        ClassView {
            tb: class.tb(),
            r: class.r(),
            class,
        }
    }
}

#[derive(Serialize)]
struct ParentView {
    class: ClassView,
    sign: Sign,
}

#[derive(Serialize)]
struct RangeDocument<'a> {
    n: u32,
    direction: Direction,
    tb_max: i64,
    tb_min: i64,
    entries: &'a [RangeEntry],
}

/// Everything a run produced; the binary decides where it goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub out_file: Option<PathBuf>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serialisable document");
    s.push('\n');
    s
}

fn execute(command: &Command) -> Result<String> {
    use serde_json::json as j;
    Ok(match command {
        Command::Tbmax { knot } => json(&j!({ "tb_max": knot.knot_type()?.tb_max() })),
        Command::DividingProfile { n, span } => {
            let cs = ContactStructure::new(*n)?;
            let profile = dividing_profile(cs, &TorusSpan::new(span.0, span.1)?);
            json(&j!({ "slope": profile.slope.to_string(), "count": profile.count }))
        }
        Command::Count { knot, tb, r } => json(&j!({ "count": knot.knot_type()?.count_classes(*tb, *r) })),
        Command::Classify { knot, pres } => {
            let kt = knot.knot_type()?;
            let parsed = pres
                .iter()
                .map(|p| parse_presentation(&kt, p))
                .collect::<Result<Vec<_>>>()?;
            match parsed.as_slice() {
                [one] => json(&j!({ "class": ClassView::from(kt.canonicalize(one)?) })),
                [a, b] => json(&j!({ "isotopic": kt.is_isotopic(a, b)? })),
                _ => return Err(Error::MalformedPresentation("classify takes one or two presentations")),
            }
        }
        Command::Stabilize { knot, pres, sign } => {
            let kt = knot.knot_type()?;
            let from = kt.canonicalize(&parse_presentation(&kt, pres)?)?;
            let to = kt.stabilize(&from, *sign);
            json(&j!({ "from": ClassView::from(from), "sign": sign, "to": ClassView::from(to) }))
        }
        Command::Destabilize { knot, pres } => {
            let kt = knot.knot_type()?;
            let class = kt.canonicalize(&parse_presentation(&kt, pres)?)?;
            let parents: Vec<ParentView> = kt
                .destabilize_parents(&class)
                .into_iter()
                .map(|(c, sign)| ParentView { class: c.into(), sign })
                .collect();
            json(&j!({ "class": ClassView::from(class), "parents": parents }))
        }
        Command::Range { knot, tb_min, format } => {
            let kt = knot.knot_type()?;
            let tb_min = tb_min.unwrap_or(kt.tb_max());
            let entries = kt.enumerate_range(tb_min)?;
            match format {
                Format::Json => json(&RangeDocument {
                    n: kt.contact_structure().n(),
                    direction: kt.direction(),
                    tb_max: kt.tb_max(),
                    tb_min,
                    entries: &entries,
                }),
                Format::Tsv => range_tsv(&entries),
                Format::Svg => range_svg(&kt, tb_min, &entries),
            }
        }
        Command::StableMerge {
            knot,
            pres,
            extra,
            same_sign_bound,
        } => {
            let kt = knot.knot_type()?;
            let [a, b] = match pres.as_slice() {
                [a, b] => [parse_presentation(&kt, a)?, parse_presentation(&kt, b)?],
                _ => return Err(Error::MalformedPresentation("stable-merge takes two presentations")),
            };
            match extra {
                Some((p, m)) => {
                    let q = StableQuery {
                        pres1: a,
                        pres2: b,
                        extra_p: *p,
                        extra_m: *m,
                    };
                    json(&j!({ "extra": [p, m], "isotopic": becomes_isotopic_after(&q)? }))
                }
                None => json(&j!({
                    "minimal_mixed": minimal_mixed_merge(&a, &b)?,
                    "minimal_same_sign": minimal_same_sign_merge(&a, &b, *same_sign_bound)?,
                })),
            }
        }
        Command::Transverse { knot, sl } => {
            let kt = knot.knot_type()?;
            match sl {
                Some(sl) => json(&j!({ "sl": sl, "count": kt.negative_stable_class_count(*sl) })),
                None => json(&j!({ "transversally_simple": kt.is_transversally_simple() })),
            }
        }
        Command::Oracle { knot, depth } => {
            let kt = knot.knot_type()?;
            json(&verify_against_closed_form(
                kt.contact_structure(),
                &kt.direction(),
                *depth,
            )?)
        }
    })
}

fn range_tsv(entries: &[RangeEntry]) -> String {
    let mut s = String::from("tb\tr\tcount\n");
    for e in entries {
        let _ = writeln!(s, "{}\t{}\t{}", e.tb, e.r, e.count);
    }
    s
}

const CELL: i64 = 36;
const MARGIN: i64 = 48;

/// Static mountain range: one row per tb (tb_max on top), one column per r.
fn range_svg(kt: &KnotType, tb_min: i64, entries: &[RangeEntry]) -> String {
    let t = kt.tb_max();
    let reach = t - tb_min;
    let width = 2 * MARGIN + (2 * reach + 1) * CELL;
    let height = 2 * MARGIN + (reach + 1) * CELL;
    let x_of = |r: i64| MARGIN + (r + reach) * CELL;
    let y_of = |tb: i64| MARGIN + (t - tb) * CELL;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<title>n={} direction={} tb_max={}</title>"#,
        kt.contact_structure().n(),
        kt.direction(),
        t
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    for tb in (tb_min..=t).rev() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{tb}</text>"#,
            MARGIN - 6,
            y_of(tb) + CELL / 2 + 4
        );
    }
    for r in -reach..=reach {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{r}</text>"#,
            x_of(r) + CELL / 2,
            MARGIN - 8
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">r</text>"#,
        width / 2,
        MARGIN / 2 - 4
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">tb</text>"#,
        MARGIN / 3,
        height / 2
    );
    for e in entries {
        let (x, y) = (x_of(e.r), y_of(e.tb));
        let _ = writeln!(
            s,
            r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="#dce6f2" stroke="#345"/>"##
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            x + CELL / 2,
            y + CELL / 2 + 4,
            e.count
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Run the tool on `args` (including the program name) without touching
/// the process streams.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                    out_file: None,
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                    out_file: None,
                }
            };
        }
    };
    let (code, stdout) = match execute(&cli.command) {
        Ok(doc) => (0, doc),
        Err(e) => (1, json(&serde_json::json!({ "error": e.to_string() }))),
    };
    CliOutput {
        code,
        stdout,
        stderr: String::new(),
        out_file: cli.out,
    }
}

/// Entry point used by the binary: prints or writes the document and
/// returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    use std::io::Write;

    let out = run(args);
    eprint!("{}", out.stderr);
    match &out.out_file {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return 1;
            }
        }
    }
    out.code
}
