//! Command-line front end.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on success, 1 on a
//! domain error (bad word, overflow, invalid signature) and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, GroupElement, GroupId};
use crate::centralizer::{center, centralizer, cyclic_membership, SubgroupDescriptor};
use crate::classifier::{classify, GroupKind, PresentationSignature, SignatureError};
use crate::oracle::{ball, verify_centralizer};
use crate::words::{format, parse_element, Alphabet, WordError};

#[derive(Debug, Parser)]
#[command(name = "crystgroups", version, about = "Exact computations in the euclidean crystallographic groups G0..G6")]
pub struct Cli {
    /// Emit one JSON object per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group name, G0..G6.
    #[arg(long, short)]
    pub group: GroupId,

    /// Generator alphabet for input words.
    #[arg(long, default_value = "new")]
    pub alphabet: Alphabet,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of a word.
    Normalize {
        #[command(flatten)]
        g: GroupArgs,
        word: String,
    },
    /// Product of two words.
    Mul {
        #[command(flatten)]
        g: GroupArgs,
        x: String,
        y: String,
    },
    /// Inverse of a word.
    Inv {
        #[command(flatten)]
        g: GroupArgs,
        x: String,
    },
    /// k-th power of a word.
    #[command(allow_negative_numbers = true)]
    Pow {
        #[command(flatten)]
        g: GroupArgs,
        x: String,
        k: i64,
    },
    /// Order of an element, or `infinite`.
    Order {
        #[command(flatten)]
        g: GroupArgs,
        x: String,
    },
    /// Whether two words commute.
    Commutes {
        #[command(flatten)]
        g: GroupArgs,
        x: String,
        y: String,
    },
    /// Closed-form centralizer of an element.
    Centralizer {
        #[command(flatten)]
        g: GroupArgs,
        u: String,
    },
    /// Center of a group.
    Center {
        /// Group name, G0..G6.
        #[arg(long, short)]
        group: GroupId,
    },
    /// Whether `x` lies in the centralizer of `u`; with `--cyclic`, an exponent k
    /// with u^k = x (or `none`).
    Member {
        #[command(flatten)]
        g: GroupArgs,
        /// Solve u^k = x instead of testing commutation.
        #[arg(long)]
        cyclic: bool,
        u: String,
        x: String,
    },
    /// Classify a Fuchsian signature.
    Classify {
        /// Orientable base (presentation with commutators); non-orientable otherwise.
        #[arg(long)]
        orientable: bool,
        /// Genus of the base surface.
        #[arg(long)]
        genus: u32,
        /// Comma-separated cone orders.
        #[arg(long, value_delimiter = ',')]
        alphas: Vec<u32>,
        /// Number of boundary generators.
        #[arg(long, short = 'p', default_value_t = 0)]
        boundary: u32,
    },
    /// Check the closed-form centralizer against brute force on a coordinate box.
    Verify {
        #[command(flatten)]
        g: GroupArgs,
        u: String,
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
    /// List the coordinate box of the given radius.
    Ball {
        /// Group name, G0..G6.
        #[arg(long, short)]
        group: GroupId,
        #[arg(long)]
        radius: u32,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Serialize)]
struct JsonLine<'a> {
    group: Option<GroupId>,
    n1: Option<i64>,
    n2: Option<i64>,
    point: Option<&'a str>,
    extra: Value,
}

impl<'a> JsonLine<'a> {
    fn element(x: &GroupElement, extra: Value) -> Self {
        JsonLine {
            group: Some(x.group()),
            n1: Some(x.n1()),
            n2: Some(x.n2()),
            point: Some(x.point_part().symbol(x.group())),
            extra,
        }
    }

    fn group_only(group: Option<GroupId>, extra: Value) -> Self {
        JsonLine {
            group,
            n1: None,
            n2: None,
            point: None,
            extra,
        }
    }
}

fn element_json(x: &GroupElement) -> Value {
    json!({
        "n1": x.n1(),
        "n2": x.n2(),
        "point": x.point_part().symbol(x.group()),
        "text": format(x),
    })
}

fn descriptor_json(s: &SubgroupDescriptor) -> Value {
    json!({
        "variant": s.variant_name(),
        "generators": s.generators().iter().map(element_json).collect::<Vec<_>>(),
    })
}

struct Output<'w> {
    json: bool,
    out: &'w mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, text: &str, line: JsonLine<'_>) -> Result<(), CliError> {
        if self.json {
            let s = serde_json::to_string(&line).expect("plain data serializes");
            writeln!(self.out, "{s}")?;
        } else {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }

    fn element(&mut self, x: &GroupElement) -> Result<(), CliError> {
        self.emit(&format(x), JsonLine::element(x, Value::Null))
    }
}

fn parse(g: &GroupArgs, text: &str) -> Result<GroupElement, CliError> {
    Ok(parse_element(text, g.group, g.alphabet)?)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut o = Output {
        json: cli.json,
        out,
    };
    match &cli.command {
        Command::Normalize { g, word } => o.element(&parse(g, word)?),
        Command::Mul { g, x, y } => o.element(&parse(g, x)?.multiply(&parse(g, y)?)?),
        Command::Inv { g, x } => o.element(&parse(g, x)?.inverse()?),
        Command::Pow { g, x, k } => o.element(&parse(g, x)?.power(*k)?),
        Command::Order { g, x } => {
            let x = parse(g, x)?;
            let ord = x.order();
            let extra = match ord {
                crate::Order::Finite(k) => json!({ "order": k }),
                crate::Order::Infinite => json!({ "order": "infinite" }),
            };
            o.emit(&ord.to_string(), JsonLine::element(&x, extra))
        }
        Command::Commutes { g, x, y } => {
            let (x, y) = (parse(g, x)?, parse(g, y)?);
            let c = x.commutes_with(&y)?;
            o.emit(
                &c.to_string(),
                JsonLine::element(&x, json!({ "with": element_json(&y), "commutes": c })),
            )
        }
        Command::Centralizer { g, u } => {
            let u = parse(g, u)?;
            let z = centralizer(&u)?;
            o.emit(&z.to_string(), JsonLine::element(&u, descriptor_json(&z)))
        }
        Command::Center { group } => {
            let z = center(*group);
            o.emit(&z.to_string(), JsonLine::group_only(Some(*group), descriptor_json(&z)))
        }
        Command::Member { g, cyclic, u, x } => {
            let (u, x) = (parse(g, u)?, parse(g, x)?);
            if *cyclic {
                let k = cyclic_membership(&u, &x)?;
                let text = k.map_or_else(|| "none".to_string(), |k| k.to_string());
                o.emit(
                    &text,
                    JsonLine::element(&x, json!({ "generator": element_json(&u), "exponent": k })),
                )
            } else {
                let z = centralizer(&u)?;
                let m = z.contains(&x)?;
                o.emit(
                    &m.to_string(),
                    JsonLine::element(
                        &x,
                        json!({ "of": element_json(&u), "subgroup": descriptor_json(&z), "member": m }),
                    ),
                )
            }
        }
        Command::Classify {
            orientable,
            genus,
            alphas,
            boundary,
        } => {
            let sig = PresentationSignature::new(*orientable, *genus, alphas.clone(), *boundary)?;
            let res = classify(&sig);
            let group = match res.kind {
                GroupKind::Euclidean(g) => Some(g),
                _ => None,
            };
            let extra = json!({
                "kind": res.kind.to_string(),
                "chi_factor": res.chi_factor.map(|c| c.to_string()),
            });
            o.emit(&res.kind.to_string(), JsonLine::group_only(group, extra))
        }
        Command::Verify { g, u, radius } => {
            let u = parse(g, u)?;
            let z = centralizer(&u)?;
            let rep = verify_centralizer(&u, *radius)?;
            if o.json {
                let extra = json!({
                    "centralizer": descriptor_json(&z),
                    "box_radius": rep.box_radius,
                    "agree": rep.agree,
                    "witnesses": rep.witnesses.iter().map(element_json).collect::<Vec<_>>(),
                });
                o.emit("", JsonLine::element(&u, extra))
            } else {
                writeln!(o.out, "subject: {}", format(&rep.subject))?;
                writeln!(o.out, "centralizer: {z}")?;
                writeln!(o.out, "radius: {}", rep.box_radius)?;
                writeln!(o.out, "agree: {}", rep.agree)?;
                for w in &rep.witnesses {
                    writeln!(o.out, "witness: {}", format(w))?;
                }
                Ok(())
            }
        }
        Command::Ball { group, radius } => {
            for x in ball(*group, *radius) {
                o.element(&x)?;
            }
            Ok(())
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
