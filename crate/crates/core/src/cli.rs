//! The `greenstone` command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::actions::Actions;
use crate::biact::FiniteBiact;
use crate::dot;
use crate::enumerate::{all_semigroups_vec, MAX_EXHAUSTIVE_ORDER};
use crate::error::{Error, Result};
use crate::format::{self, Document};
use crate::green::{green_index, GreenStructure, Preorder, Relation};
use crate::props::{self, Analysis, Side};
use crate::semigroup::FiniteSemigroup;
use crate::symbolic::catalog::chain_dump;
use crate::symbolic::{construct_usa, construct_usta, lookup, CATALOG_NAMES};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CLAIM: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "greenstone",
    version,
    about = "Green's relations, stability and minimal conditions for semigroups and biacts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class counts, predicates and ideals of a semigroup or biact file.
    Analyze {
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Egg-box diagrams, or a class poset with --poset.
    Eggbox {
        input: PathBuf,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
        /// Draw the L, R or J class poset instead of the egg-boxes.
        #[arg(long, value_enum)]
        poset: Option<K>,
    },
    /// Green index of a subsemigroup.
    Index {
        #[arg(long)]
        semigroup: PathBuf,
        /// Comma-separated element ids or labels.
        #[arg(long)]
        sub: String,
    },
    /// Build a new semigroup or biact from parts.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Write every semigroup of the given order, one JSON file each.
    Enum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Named infinite examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the claim registry.
    Verify {
        /// "all" or a comma-separated list of claim ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = crate::symbolic::DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = crate::symbolic::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        random_biacts: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// List the registered claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Bounded search for a counterexample to the open transfer question.
    Probe {
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// U(S,T;A): S, T and the points of A, plus a zero.
    Usta {
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// U(S;A) for an (S,S)-biact A.
    Usa {
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rees quotient S/I.
    Rees {
        #[arg(long)]
        semigroup: PathBuf,
        /// Comma-separated element ids or labels of the ideal.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 0-direct union of S and T.
    Zdu {
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The (S,T)-biact S×T.
    Product {
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// List the catalog names.
    List,
    /// Property sheet of an entry, or a verified chain with --chain.
    Show {
        name: String,
        #[arg(long, value_enum)]
        chain: Option<K>,
        /// Number of chain elements to dump.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum K {
    L,
    R,
    J,
}

impl From<K> for Preorder {
    fn from(k: K) -> Self {
        match k {
            K::L => Preorder::L,
            K::R => Preorder::R,
            K::J => Preorder::J,
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownClaim(_) | Error::UnknownEntry(_) => EXIT_USAGE,
        _ => EXIT_VALIDATION,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_document(path: &Path) -> Result<Document> {
    format::parse_document(&read(path)?)
}

fn read_semigroup(path: &Path) -> Result<FiniteSemigroup> {
    match read_document(path)? {
        Document::Semigroup(s) => Ok(s),
        Document::Biact(_) => Err(Error::BadShape(format!(
            "{}: expected a semigroup, found a biact",
            path.display()
        ))),
    }
}

fn read_biact(path: &Path) -> Result<FiniteBiact> {
    format::parse_biact(&read(path)?)
}

/// Comma-separated ids or labels.
fn parse_subset(s: &FiniteSemigroup, text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let id = s
            .find_label(item)
            .or_else(|| item.parse().ok())
            .filter(|&i| i < s.order())
            .ok_or_else(|| {
                Error::BadShape(format!("{item:?} is neither an element id nor a label"))
            })?;
        out.push(id);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn std::io::Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn counts(g: &GreenStructure) -> String {
    Relation::ALL
        .iter()
        .map(|&r| format!("{}:{}", r.name(), g.class_count(r)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn analysis_json<X: Actions + ?Sized>(an: &Analysis<'_, X>) -> serde_json::Value {
    let mut preds = serde_json::Map::new();
    for k in Preorder::ALL {
        preds.insert(format!("M_{}", k.name()), json!(an.minimal_condition(k)));
    }
    preds.insert("left_stable".into(), json!(an.left_stable()));
    preds.insert("right_stable".into(), json!(an.right_stable()));
    preds.insert("stable".into(), json!(an.stable()));
    preds.insert("stable_char".into(), json!(an.stable_char()));
    preds.insert("l_periodic".into(), json!(an.l_periodic()));
    preds.insert("r_periodic".into(), json!(an.r_periodic()));
    json!({
        "counts": Relation::ALL.iter().map(|&r| (r.name(), g_count(an, r))).collect::<std::collections::BTreeMap<_, _>>(),
        "left_stable_forms": an.stable_forms(Side::Left),
        "right_stable_forms": an.stable_forms(Side::Right),
        "predicates": preds,
        "green": an.green.dump(),
    })
}

fn g_count<X: Actions + ?Sized>(an: &Analysis<'_, X>, r: Relation) -> usize {
    an.green.class_count(r)
}

fn analysis_text<X: Actions + ?Sized>(an: &Analysis<'_, X>) -> String {
    let mut s = format!("{}; stable: {}\n", counts(&an.green), an.stable().value);
    let mk: Vec<String> = Preorder::ALL
        .iter()
        .map(|&k| format!("M_{}: {}", k.name(), an.minimal_condition(k).value))
        .collect();
    s.push_str(&format!("{}\n", mk.join(", ")));
    s.push_str(&format!(
        "left stable: {}, right stable: {}, L-periodic: {}, R-periodic: {}\n",
        an.left_stable().value,
        an.right_stable().value,
        an.l_periodic().value,
        an.r_periodic().value
    ));
    let forms = |side| {
        an.stable_forms(side)
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect::<String>()
    };
    s.push_str(&format!(
        "stability forms: left {}, right {}\n",
        forms(Side::Left),
        forms(Side::Right)
    ));
    s
}

/// Distinct principal ideals, which are the ideals the analysis lists.
fn principal_ideals(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = s.elements().map(|a| s.principal_ideal(a)).collect();
    out.sort();
    out.dedup();
    out
}

fn analyze(input: &Path, as_json: bool, out: &mut dyn std::io::Write) -> Result<()> {
    let text = match read_document(input)? {
        Document::Semigroup(s) => {
            let an = Analysis::new(&s);
            let gb = props::group_bound(&s);
            let ideals = principal_ideals(&s);
            if as_json {
                let mut v = analysis_json(&an);
                v["kind"] = json!("semigroup");
                v["order"] = json!(s.order());
                v["predicates"]["group_bound"] = json!(gb);
                v["principal_ideals"] = json!(ideals);
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            } else {
                let mut t = format!("semigroup of order {}\n", s.order());
                t.push_str(&analysis_text(&an));
                t.push_str(&format!("group-bound: {}\n", gb.value));
                for i in &ideals {
                    let labels: Vec<String> = i.iter().map(|&a| s.label(a)).collect();
                    t.push_str(&format!("principal ideal: {{{}}}\n", labels.join(", ")));
                }
                t
            }
        }
        Document::Biact(a) => {
            let an = Analysis::new(&a);
            if as_json {
                let mut v = analysis_json(&an);
                v["kind"] = json!("biact");
                v["size"] = json!(a.size());
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            } else {
                let mut t = format!(
                    "biact of size {} over semigroups of order {} and {}\n",
                    a.size(),
                    a.left().order(),
                    a.right().order()
                );
                t.push_str(&analysis_text(&an));
                let subacts = a
                    .subacts()?
                    .into_iter()
                    .filter(|b| !b.members.is_empty())
                    .count();
                t.push_str(&format!("non-empty subacts: {subacts}\n"));
                t
            }
        }
    };
    emit(&text, None, out)
}

fn eggbox(
    input: &Path,
    as_dot: bool,
    poset: Option<K>,
    out: &mut dyn std::io::Write,
) -> Result<()> {
    let doc = read_document(input)?;
    let (g, labels): (GreenStructure, Vec<String>) = match &doc {
        Document::Semigroup(s) => (
            GreenStructure::of(s),
            s.elements().map(|a| s.label(a)).collect(),
        ),
        Document::Biact(a) => (
            GreenStructure::of(a),
            (0..a.size()).map(|x| a.label(x)).collect(),
        ),
    };
    let label = |x: usize| labels[x].clone();
    let text = match (poset, as_dot) {
        (Some(k), true) => dot::class_poset(&g, k.into(), &label),
        (Some(k), false) => {
            let k: Preorder = k.into();
            let rel = match k {
                Preorder::L => Relation::L,
                Preorder::R => Relation::R,
                Preorder::J => Relation::J,
            };
            let mut t = String::new();
            for (c, m) in g.classes(rel).iter().enumerate() {
                let names: Vec<String> = m.iter().map(|&x| label(x)).collect();
                t.push_str(&format!("{}{c}: {}\n", k.name(), names.join(" ")));
            }
            for (u, l) in g.covers(k) {
                t.push_str(&format!("{0}{u} > {0}{l}\n", k.name()));
            }
            t
        }
        (None, true) => dot::eggbox(&g, &label)?,
        (None, false) => {
            let mut t = String::new();
            for d in 0..g.class_count(Relation::D) {
                let grid = g.eggbox(d)?;
                t.push_str(&format!("D{d}\n"));
                for row in &grid.elements {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| {
                            let names: Vec<String> = c.iter().map(|&x| label(x)).collect();
                            format!("{:^9}", names.join(" "))
                        })
                        .collect();
                    t.push_str(&format!("|{}|\n", cells.join("|")));
                }
            }
            t
        }
    };
    emit(&text, None, out)
}

fn index(semigroup: &Path, sub: &str, out: &mut dyn std::io::Write) -> Result<()> {
    let s = read_semigroup(semigroup)?;
    let t = parse_subset(&s, sub)?;
    let r = green_index(&s, &t)?;
    emit(&format!("{}\n", r.index), None, out)
}

fn construct(kind: ConstructKind, out: &mut dyn std::io::Write) -> Result<()> {
    match kind {
        ConstructKind::Usta { s, t, a, out: path } => {
            let (s, t, a) = (read_semigroup(&s)?, read_semigroup(&t)?, read_biact(&a)?);
            let (u, _) = construct_usta(&s, &t, &a)?;
            emit(&format::semigroup_to_json(&u), path.as_deref(), out)
        }
        ConstructKind::Usa { s, a, out: path } => {
            let (s, a) = (read_semigroup(&s)?, read_biact(&a)?);
            let (u, _) = construct_usa(&s, &a)?;
            emit(&format::semigroup_to_json(&u), path.as_deref(), out)
        }
        ConstructKind::Rees {
            semigroup,
            ideal,
            out: path,
        } => {
            let s = read_semigroup(&semigroup)?;
            let i = parse_subset(&s, &ideal)?;
            let (q, _) = s.rees_quotient(&i)?;
            emit(&format::semigroup_to_json(&q), path.as_deref(), out)
        }
        ConstructKind::Zdu { s, t, out: path } => {
            let u = FiniteSemigroup::zero_direct_union(&read_semigroup(&s)?, &read_semigroup(&t)?);
            emit(&format::semigroup_to_json(&u), path.as_deref(), out)
        }
        ConstructKind::Product { s, t, out: path } => {
            let p = FiniteBiact::product(&read_semigroup(&s)?, &read_semigroup(&t)?);
            emit(&format::biact_to_json(&p), path.as_deref(), out)
        }
    }
}

fn enumerate(order: usize, dir: &Path, out: &mut dyn std::io::Write) -> Result<()> {
    if order == 0 || order > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::CapExceeded(format!(
            "order must be between 1 and {MAX_EXHAUSTIVE_ORDER}"
        )));
    }
    fs::create_dir_all(dir)?;
    let all = all_semigroups_vec(order)?;
    for (i, s) in all.iter().enumerate() {
        fs::write(
            dir.join(format!("order{order}-{i:03}.json")),
            format::semigroup_to_json(s),
        )?;
    }
    emit(
        &format!("wrote {} semigroups to {}\n", all.len(), dir.display()),
        None,
        out,
    )
}

fn catalog_cmd(action: CatalogAction, out: &mut dyn std::io::Write) -> Result<i32> {
    match action {
        CatalogAction::List => {
            let mut t = String::new();
            for name in CATALOG_NAMES {
                let e = lookup(name)?;
                let parts: Vec<&str> = e.parts.iter().map(|(n, _)| n.as_str()).collect();
                t.push_str(&format!("{name}: {}\n", parts.join(", ")));
            }
            emit(&t, None, out)?;
            Ok(EXIT_OK)
        }
        CatalogAction::Show {
            name,
            chain: Some(k),
            depth,
        } => {
            let e = lookup(&name)?;
            let (part, check) = chain_dump(&e, k.into(), depth as usize - 1)?;
            let elems: Vec<String> = check.elements.iter().map(|x| x.to_string()).collect();
            let v = json!({
                "entry": name,
                "part": part,
                "relation": Preorder::from(k).name(),
                "strictly_descending": check.ok,
                "elements": elems,
            });
            emit(
                &format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
                None,
                out,
            )?;
            Ok(if check.ok { EXIT_OK } else { EXIT_CLAIM })
        }
        CatalogAction::Show {
            name, chain: None, ..
        } => {
            let e = lookup(&name)?;
            let mut t = String::new();
            for (part, obj) in &e.parts {
                t.push_str(&format!("{name}/{part}: {}\n", obj.name()));
                let sheet = obj.sheet();
                for p in crate::symbolic::Property::ALL {
                    if let Some(v) = sheet.get(p) {
                        t.push_str(&format!("  {p:?}: {v}\n"));
                    }
                }
            }
            let problems = e.audit();
            for p in &problems {
                t.push_str(&format!("audit: {p}\n"));
            }
            emit(&t, None, out)?;
            Ok(if problems.is_empty() {
                EXIT_OK
            } else {
                EXIT_CLAIM
            })
        }
    }
}

fn execute(command: Command, out: &mut dyn std::io::Write) -> Result<i32> {
    match command {
        Command::Analyze { input, json } => analyze(&input, json, out).map(|_| EXIT_OK),
        Command::Eggbox { input, dot, poset } => eggbox(&input, dot, poset, out).map(|_| EXIT_OK),
        Command::Index { semigroup, sub } => index(&semigroup, &sub, out).map(|_| EXIT_OK),
        Command::Construct { kind } => construct(kind, out).map(|_| EXIT_OK),
        Command::Enum { order, out: dir } => enumerate(order, &dir, out).map(|_| EXIT_OK),
        Command::Catalog { action } => catalog_cmd(action, out),
        Command::Verify {
            suite,
            max_order,
            depth,
            samples,
            seed,
            random_biacts,
            report,
            list,
        } => {
            if list {
                for c in verify::registry() {
                    writeln!(out, "{:<14} {}", c.id, c.summary)?;
                }
                return Ok(EXIT_OK);
            }
            let config = VerifyConfig {
                seed,
                max_order,
                depth,
                samples,
                random_biacts,
                ..VerifyConfig::default()
            };
            let r = verify::run_suite(&suite, &config)?;
            if let Some(p) = report {
                fs::write(&p, r.to_json())
                    .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            emit(&r.summary(), None, out)?;
            Ok(if r.ok() { EXIT_OK } else { EXIT_CLAIM })
        }
        Command::Probe { depth, report } => {
            let config = VerifyConfig {
                depth,
                ..VerifyConfig::default()
            };
            let r = verify::probe_open_problem(&config)?;
            emit(&r.to_json(), report.as_deref(), out)?;
            if report.is_some() {
                writeln!(out, "{}", r.conclusion)?;
            }
            Ok(EXIT_OK)
        }
    }
}
