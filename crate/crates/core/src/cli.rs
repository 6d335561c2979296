//! The `tl` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification or determinant comparison fails.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cellmod::{gram_matrix, module_structure_check, restriction_filtration_check, routes_agree_check};
use crate::diagrams::relations_check;
use crate::exactring::check_p_identities;
use crate::gramdet::{det_report, direct_det, gramdet_check, DetReport};
use crate::jucys::{separation_check, spectrum_table, triangular_action_check, verify_jm_properties};
use crate::murphy::{
    murphy_bijection, restriction_criterion_check, star_symmetry_check, triangular_right_action_check, MurphyIndex,
};
use crate::report::Report;
use crate::seminormal::{seminormal_check, seminormal_rows};
use crate::tableaux::{dim, partitions_of, tableaux, Partition};
use crate::Error;

pub const THREADS_ENV: &str = "TL_THREADS";

#[derive(Parser, Debug)]
#[command(name = "tl", version, about = "Exact computations in the Temperley-Lieb algebra TL_n(x)")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: TL_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of the cell modules of A_n.
    Dims { n: usize },
    /// Levels 0..n of the Bratteli diagram.
    Bratteli { n: usize },
    /// The Murphy basis, one line per basis diagram.
    Basis { n: usize, f: Option<usize> },
    /// Gram matrix of the cellular form on C^(f, n-2f).
    Gram { n: usize, f: usize },
    /// Gram determinant of C^(f, n-2f).
    Det {
        n: usize,
        f: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Largest dimension handled by Bareiss; above it the direct route interpolates.
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// r_t(k) and z_t(k) for every tableau of shape (f, n-2f).
    Spectrum { n: usize, f: usize },
    /// Seminormal vectors, norms and r-values for shape (f, n-2f).
    Seminormal { n: usize, f: usize },
    /// Run every verification suite at size n.
    Verify {
        n: usize,
        /// Directory of golden outputs to compare against.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Write golden outputs for size n instead of comparing.
        #[arg(long, requires = "golden")]
        bless: bool,
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    Branching,
    Closed,
    All,
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

type Out<'a> = &'a mut dyn Write;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: Out = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let threads = cli.threads.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    let result = match threads {
        Some(k) if k > 0 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(&cli, &mut buf));
                out.write_all(&buf).map_err(Failure::from).and(r)
            }
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        Some(_) => Err(Failure::Usage("--threads must be positive".into())),
        None => dispatch(&cli, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Check) => 2,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn size(n: usize) -> Result<usize, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if n > crate::diagrams::MAX_N {
        return Err(Error::TooLarge(n).into());
    }
    Ok(n)
}

fn shape(n: usize, f: usize) -> Result<Partition, Failure> {
    Ok(Partition::of(size(n)?, f)?)
}

fn emit_json<T: Serialize>(out: Out, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn dispatch(cli: &Cli, out: Out) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Dims { n } => {
            let n = size(*n)?;
            let parts = partitions_of(n);
            if json {
                let map: serde_json::Map<String, Value> =
                    parts.iter().map(|l| (l.to_string(), json!(dim(*l) as u64))).collect();
                emit_json(out, &map)?;
            } else {
                for l in parts {
                    writeln!(out, "{l}\t{}", dim(l))?;
                }
            }
        }
        Command::Bratteli { n } => {
            let n = size(*n)?;
            let mut levels = Vec::new();
            for k in 0..=n {
                let nodes: Vec<Value> =
                    partitions_of(k).into_iter().map(|l| json!({"lambda": l, "dim": dim(l) as u64})).collect();
                let edges: Vec<Value> = partitions_of(k)
                    .into_iter()
                    .flat_map(|l| l.predecessors().into_iter().map(move |m| json!([m, l])))
                    .collect();
                if !json {
                    let cells: Vec<String> = partitions_of(k).iter().map(|l| format!("{l}:{}", dim(*l))).collect();
                    writeln!(out, "{k}\t{}", cells.join(" "))?;
                }
                levels.push(json!({"level": k, "nodes": nodes, "edges": edges}));
            }
            if json {
                emit_json(out, &levels)?;
            }
        }
        Command::Basis { n, f } => {
            let n = size(*n)?;
            let shapes = match f {
                Some(f) => vec![shape(n, *f)?],
                None => partitions_of(n),
            };
            for lambda in shapes {
                let list = tableaux(lambda);
                for u in list.iter() {
                    for v in list.iter() {
                        let idx = MurphyIndex::new(u.clone(), v.clone())?;
                        let (d, _) = idx.word().diagram();
                        if json {
                            emit_json(out, &json!({"lambda": lambda, "u": u.fseq(), "v": v.fseq(), "diagram": d}))?;
                        } else {
                            writeln!(out, "{idx}\t{d}")?;
                        }
                    }
                }
            }
        }
        Command::Gram { n, f } => {
            let g = gram_matrix(shape(*n, *f)?);
            if json {
                emit_json(out, &g)?;
            } else {
                write!(out, "{g}")?;
            }
        }
        Command::Det { n, f, method, limit } => {
            let lambda = shape(*n, *f)?;
            let report = det_for(lambda, *method, *limit)?;
            if json {
                emit_json(out, &report)?;
            } else {
                let methods = report["methods"].as_object().expect("methods object");
                for (name, v) in methods {
                    writeln!(out, "{name}\t{}", render_value(v))?;
                }
                writeln!(out, "agree\t{}", report["agree"])?;
            }
            if report["agree"] != json!(true) {
                return Err(Failure::Check);
            }
        }
        Command::Spectrum { n, f } => {
            let table = spectrum_table(shape(*n, *f)?);
            if json {
                emit_json(out, &table.rows)?;
            } else {
                for row in &table.rows {
                    let r: Vec<String> = row.r.iter().map(|p| p.to_string()).collect();
                    let z: Vec<String> = row.z.iter().map(|p| p.to_string()).collect();
                    writeln!(out, "{:?}\tr = [{}]\tz = [{}]", row.tableau, r.join(", "), z.join(", "))?;
                }
            }
        }
        Command::Seminormal { n, f } => {
            let rows = seminormal_rows(shape(*n, *f)?)?;
            if json {
                emit_json(out, &rows)?;
            } else {
                for row in &rows {
                    let coords: Vec<String> =
                        row.coords.support().iter().map(|(t, c)| format!("({c}) m{:?}", t.fseq())).collect();
                    writeln!(out, "{:?}\tgamma = {}\tf = {}", row.tableau, row.gamma, coords.join(" + "))?;
                }
            }
        }
        Command::Verify { n, golden, bless, limit } => {
            let n = size(*n)?;
            let mut reports = verify_suites(n, *limit)?;
            if let Some(dir) = golden {
                if *bless {
                    let written = bless_golden(dir, n)?;
                    writeln!(out, "wrote {written} golden files to {}", dir.display())?;
                } else {
                    reports.push(compare_golden(dir)?);
                }
            }
            if json {
                emit_json(out, &reports)?;
            } else {
                for r in &reports {
                    writeln!(out, "{r}")?;
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn render_value(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Object(m) if m.contains_key("num") => {
            let num = crate::exactring::IntPoly::from_strings(&strings(&m["num"])).map(|p| p.to_string());
            let den = crate::exactring::IntPoly::from_strings(&strings(&m["den"])).map(|p| p.to_string());
            match (num, den) {
                (Ok(a), Ok(b)) if b == "1" => a,
                (Ok(a), Ok(b)) => format!("({a}) / ({b})"),
                _ => v.to_string(),
            }
        }
        Value::Array(_) => crate::exactring::IntPoly::from_strings(&strings(v)).map_or(v.to_string(), |p| p.to_string()),
        other => other.to_string(),
    }
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn det_for(lambda: Partition, method: Method, limit: usize) -> Result<Value, Failure> {
    let mut methods = serde_json::Map::new();
    let (value, agree) = if method == Method::Direct {
        let d = direct_det(lambda, limit)?;
        methods.insert("direct".into(), json!(d));
        (json!(d), true)
    } else {
        let r: DetReport = det_report(lambda, limit, method == Method::All)?;
        if matches!(method, Method::Closed | Method::All) {
            methods.insert("closed".into(), json!(r.closed));
        }
        if matches!(method, Method::Branching | Method::All) {
            methods.insert("branching".into(), json!(r.branching));
        }
        if let Some(d) = &r.direct {
            methods.insert("direct".into(), json!(d));
        }
        let picked = if method == Method::Branching { &r.branching } else { &r.closed };
        let det = picked.as_poly().map_or(Value::Null, |p| json!(p));
        (det, method != Method::All || r.agree)
    };
    Ok(json!({"lambda": lambda, "det": value, "methods": methods, "agree": agree}))
}

/// Every verification suite at size `n`.
pub fn verify_suites(n: usize, limit: usize) -> Result<Vec<Report>, Error> {
    let mut out = vec![check_p_identities(n.max(2)), relations_check(n)];
    let basis = murphy_bijection(n)?;
    let mut bij = Report::new(format!("Murphy bijection, n = {n}"));
    bij.check(basis.len() as u128 == crate::diagrams::catalan(n), || format!("{} basis elements", basis.len()));
    out.push(bij);
    out.push(star_symmetry_check(n));
    out.push(triangular_right_action_check(n, &basis));
    out.push(restriction_criterion_check(n));
    let mut cells = Report::new(format!("cell modules, n = {n}"));
    let mut jm = Report::new(format!("JM spectra, n = {n}"));
    let mut semi = Report::new(format!("seminormal bases, n = {n}"));
    for lambda in partitions_of(n) {
        cells.absorb(routes_agree_check(lambda, &basis));
        cells.absorb(module_structure_check(lambda));
        cells.absorb(restriction_filtration_check(lambda));
        jm.absorb(triangular_action_check(lambda));
        semi.absorb(seminormal_check(lambda));
    }
    out.extend([cells, verify_jm_properties(n), jm, separation_check(n), semi, gramdet_check(n, limit)]);
    Ok(out)
}

/// Command lines stored as golden files for size `n`.
pub fn golden_commands(n: usize) -> Vec<Vec<String>> {
    let mut cmds = vec![
        vec!["dims".to_string(), n.to_string(), "--json".into()],
        vec!["bratteli".to_string(), n.to_string(), "--json".into()],
        vec!["basis".to_string(), n.to_string(), "--json".into()],
    ];
    for lambda in partitions_of(n) {
        for verb in ["gram", "det", "spectrum", "seminormal"] {
            cmds.push(vec![verb.into(), n.to_string(), lambda.f.to_string(), "--json".into()]);
        }
    }
    cmds
}

fn golden_name(cmd: &[String]) -> String {
    format!("{}.golden", cmd.join("_"))
}

fn capture(cmd: &[String]) -> (i32, Vec<u8>) {
    let mut buf = Vec::new();
    let mut sink = Vec::new();
    let args = std::iter::once("tl".to_string()).chain(cmd.iter().cloned());
    let code = run(args, &mut buf, &mut sink);
    (code, buf)
}

fn bless_golden(dir: &Path, n: usize) -> Result<usize, Failure> {
    fs::create_dir_all(dir)?;
    let cmds = golden_commands(n);
    for cmd in &cmds {
        let (_, bytes) = capture(cmd);
        fs::write(dir.join(golden_name(cmd)), bytes)?;
    }
    Ok(cmds.len())
}

fn compare_golden(dir: &Path) -> Result<Report, Failure> {
    let mut rep = Report::new(format!("golden files in {}", dir.display()));
    let mut names: Vec<String> = fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().into_string().ok())
        .filter(|name| name.ends_with(".golden"))
        .collect();
    names.sort();
    for name in names {
        let cmd: Vec<String> = name.trim_end_matches(".golden").split('_').map(String::from).collect();
        let want = fs::read(dir.join(&name))?;
        let (_, got) = capture(&cmd);
        rep.check(got == want, || format!("{name}: output differs"));
    }
    Ok(rep)
}
