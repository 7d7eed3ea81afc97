//! The `pqgroups` command line.
//!
//! Exit codes: 0 success, 1 negative answer or failed check, 2 usage error,
//! 3 unreadable or malformed input file.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{error::ErrorKind, Parser, Subcommand};
use serde::Serialize;

use crate::classification::{classify, verify_theorem, ClassificationResult};
use crate::enumerate::{enumerate_groups_with, EnumerationBudget};
use crate::format::{read_group_file, write_group, write_group_file, FormatError};
use crate::group::{cyclic_group, quaternion_group, symmetric_group, FiniteGroup};
use crate::morphisms::{automorphism_group, isomorphism_or_reason};
use crate::products::{cyclic_semidirect, dihedral_group, direct_product};
use crate::recognition::{internal_direct, internal_semidirect};
use crate::subgroup::closure;

#[derive(Parser, Debug)]
#[command(name = "pqgroups", version, about = "Finite groups of order p^2 and pq")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a group and write its Cayley table
    Construct {
        #[command(subcommand)]
        kind: Construction,
        /// Write here instead of stdout
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Classify a group of order p^2 or pq
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two groups are isomorphic
    Iso { first: PathBuf, second: PathBuf },
    /// Compute the automorphism group
    Aut {
        file: PathBuf,
        /// Write the automorphism group's Cayley table here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recognise G as an internal semidirect product N ⋊ H
    Recognize {
        file: PathBuf,
        /// Generators of N, comma separated
        #[arg(long = "n", value_delimiter = ',', required = true)]
        normal: Vec<usize>,
        /// Generators of H, comma separated
        #[arg(long = "h", value_delimiter = ',', required = true)]
        complement: Vec<usize>,
        /// Require H to be normal too and target N × H
        #[arg(long)]
        direct: bool,
    },
    /// Enumerate all groups of order n up to isomorphism
    Enumerate {
        n: usize,
        /// Write order<n>_class<k>.cayley files here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow prime, p^2 and pq orders up to 33
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the p^2 / pq classification against the enumeration oracle
    Verify {
        #[arg(long = "max")]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    Cyclic {
        n: usize,
    },
    Symmetric {
        k: usize,
    },
    Quaternion,
    Dihedral {
        n: usize,
    },
    /// Direct product of two group files
    Direct {
        first: PathBuf,
        second: PathBuf,
    },
    /// C_q ⋊ C_p with the generator of C_p acting by r -> r^k
    Sdp {
        q: usize,
        p: usize,
        #[arg(long)]
        k: usize,
    },
}

enum Failure {
    /// Exit 1. The message goes to stdout since it is an answer.
    Negative(String),
    Usage(String),
    Input(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let (code, stdout, stderr) = match execute(cli.command) {
        Ok(text) => (0, text, String::new()),
        Err(Failure::Negative(text)) => (1, text, String::new()),
        Err(Failure::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
        Err(Failure::Input(msg)) => (3, String::new(), format!("error: {msg}\n")),
    };
    let _ = out.write_all(stdout.as_bytes());
    let _ = err.write_all(stderr.as_bytes());
    code
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Construct { kind, out } => construct(kind, out.as_deref()),
        Command::Classify { file, json } => classify_cmd(&file, json),
        Command::Iso { first, second } => iso_cmd(&first, &second),
        Command::Aut { file, out } => aut_cmd(&file, out.as_deref()),
        Command::Recognize { file, normal, complement, direct } => recognize_cmd(&file, &normal, &complement, direct),
        Command::Enumerate { n, out, extended, json } => enumerate_cmd(n, out.as_deref(), extended, json),
        Command::Verify { max_order, json } => verify_cmd(max_order, json),
    }
}

fn load(path: &Path) -> Result<Arc<FiniteGroup>, Failure> {
    Ok(Arc::new(read_group_file(path)?))
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialise");
    s.push('\n');
    s
}

fn emit_group(g: &FiniteGroup, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            write_group_file(path, g)?;
            Ok(String::new())
        }
        None => Ok(write_group(g)),
    }
}

fn construct(kind: Construction, out: Option<&Path>) -> Outcome {
    let g = match kind {
        Construction::Cyclic { n } => cyclic_group(n).map_err(usage)?,
        Construction::Symmetric { k } => symmetric_group(k).map_err(usage)?,
        Construction::Quaternion => quaternion_group(),
        Construction::Dihedral { n } => Arc::unwrap_or_clone(dihedral_group(n).map_err(usage)?.group),
        Construction::Direct { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            Arc::unwrap_or_clone(direct_product(&a, &b).map_err(usage)?.group)
        }
        Construction::Sdp { q, p, k } => Arc::unwrap_or_clone(cyclic_semidirect(q, p, k).map_err(usage)?.group),
    };
    emit_group(&g, out)
}

#[derive(Serialize)]
struct ClassifyOutput {
    tag: &'static str,
    order: usize,
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    generator: Option<usize>,
    /// Image of each element in the representative.
    map: Vec<usize>,
}

fn classify_cmd(file: &Path, json: bool) -> Outcome {
    let g = load(file)?;
    let result = classify(&g).map_err(|e| Failure::Negative(format!("cannot classify: {e}\n")))?;
    let mut o = ClassifyOutput {
        tag: result.tag(),
        order: g.order(),
        p: None,
        q: None,
        k: None,
        generator: None,
        map: result.iso().map().to_vec(),
    };
    match &result {
        ClassificationResult::Cyclic { generator, .. } => o.generator = Some(*generator),
        ClassificationResult::ElementaryAbelianPP { p, .. } => o.p = Some(*p),
        ClassificationResult::SemidirectQP { p, q, k, .. } => (o.p, o.q, o.k) = (Some(*p), Some(*q), Some(*k)),
    }
    if json {
        return Ok(to_json(&o));
    }
    let mut s = format!("tag: {}\norder: {}\n", o.tag, o.order);
    for (name, v) in [("generator", o.generator), ("p", o.p), ("q", o.q), ("k", o.k)] {
        if let Some(v) = v {
            s += &format!("{name}: {v}\n");
        }
    }
    s += &format!("map: {}\n", join(&o.map));
    Ok(s)
}

fn iso_cmd(first: &Path, second: &Path) -> Outcome {
    let (a, b) = (load(first)?, load(second)?);
    match isomorphism_or_reason(&a, &b) {
        Ok(iso) => Ok(format!("isomorphic\nmap: {}\n", join(iso.map()))),
        Err(reason) => Err(Failure::Negative(format!("not isomorphic: {reason}\n"))),
    }
}

fn aut_cmd(file: &Path, out: Option<&Path>) -> Outcome {
    let g = load(file)?;
    let aut = automorphism_group(&g).map_err(|e| Failure::Negative(format!("{e}\n")))?;
    let carrier = aut.carrier();
    if let Some(path) = out {
        write_group_file(path, carrier)?;
    }
    let cyclic = if carrier.is_cyclic().is_some() { "yes" } else { "no" };
    let mut s = format!("order: {}\ncyclic: {cyclic}\n", aut.order());
    for (i, a) in aut.autos().iter().enumerate() {
        s += &format!("aut {i}: {}\n", join(a.map()));
    }
    Ok(s)
}

fn recognize_cmd(file: &Path, normal: &[usize], complement: &[usize], direct: bool) -> Outcome {
    let g = load(file)?;
    if let Some(&x) = normal.iter().chain(complement).find(|&&x| x >= g.order()) {
        return Err(Failure::Usage(format!("element {x} is out of range for order {}", g.order())));
    }
    let n = closure(&g, normal.iter().copied());
    let h = closure(&g, complement.iter().copied());
    let refused = |e: crate::recognition::RecognitionError| Failure::Negative(format!("not recognised: {e}\n"));
    let (iso, trivial) = if direct {
        let d = internal_direct(&g, &n, &h).map_err(refused)?;
        (d.iso, true)
    } else {
        let w = internal_semidirect(&g, &n, &h).map_err(refused)?;
        let trivial = w.phi.is_trivial();
        (w.iso, trivial)
    };
    Ok(format!(
        "normal: {}\ncomplement: {}\naction: {}\nmap: {}\n",
        join(n.members()),
        join(h.members()),
        if trivial { "trivial" } else { "nontrivial" },
        join(iso.map())
    ))
}

#[derive(Serialize)]
struct EnumerateOutput {
    order: usize,
    count: usize,
    stats: crate::enumerate::EnumerationStats,
}

fn enumerate_cmd(n: usize, out: Option<&Path>, extended: bool, json: bool) -> Outcome {
    let budget = if extended { EnumerationBudget::extended() } else { EnumerationBudget::default() };
    let report = enumerate_groups_with(n, &budget).map_err(usage)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|source| FormatError::Io { path: dir.display().to_string(), source })?;
        for (k, g) in report.representatives.iter().enumerate() {
            write_group_file(dir.join(format!("order{n}_class{}.cayley", k + 1)), g)?;
        }
    }
    let o = EnumerateOutput { order: n, count: report.count, stats: report.stats };
    if json {
        return Ok(to_json(&o));
    }
    Ok(format!(
        "order: {}\ncount: {}\nnodes: {}\ntables completed: {}\niso rejections: {}\n",
        o.order, o.count, o.stats.nodes, o.stats.tables_completed, o.stats.iso_rejections
    ))
}

fn verify_cmd(max_order: usize, json: bool) -> Outcome {
    let report = verify_theorem(max_order);
    let text = if json {
        to_json(&report)
    } else {
        let mut s =
            format!("{:>5} {:>3} {:>3} {:>9} {:>6}  {:<6} tags\n", "order", "p", "q", "predicted", "oracle", "result");
        for r in &report.rows {
            let oracle = r.oracle.map_or("-".to_string(), |c| c.to_string());
            let result = if r.pass { "pass" } else { "FAIL" };
            s += &format!(
                "{:>5} {:>3} {:>3} {:>9} {:>6}  {:<6} {}",
                r.order,
                r.p,
                r.q,
                r.predicted,
                oracle,
                result,
                r.tags.join(",")
            );
            if let Some(e) = &r.error {
                s += &format!(" ({e})");
            }
            s.push('\n');
        }
        s += if report.pass { "all orders pass\n" } else { "some orders FAIL\n" };
        s
    };
    if report.pass {
        Ok(text)
    } else {
        Err(Failure::Negative(text))
    }
}
