use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mdhom::bdiagram::{compare_framed, compare_unframed, jumping_rates, FramedDiagram};
use mdhom::eggers::{build_tree, export_tree, TreeFormat};
use mdhom::exactnum::{fmt_rational, parse_rational, ExtRat};
use mdhom::mdcurve::{md_diagram, relative_multiplicities, render_table};
use mdhom::oracle::{crosscheck, random_curves, CurveSpec};
use mdhom::puiseux::Curve;
use mdhom::simplicial::{bcone_diagram, SimplicialPair};

#[derive(Parser)]
#[command(name = "mdhom", version, about = "MD homology of plane curve germs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Framed diagram of a curve as a table
    Compute {
        curve: PathBuf,
        /// Ranks and the morphisms from inf to b and from b to 1
        #[arg(long)]
        at: Option<String>,
        /// Also write the framed diagram JSON to this file
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Eggers-Wall tree (DOT by default)
    Tree {
        curve: PathBuf,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Jumping rates, one per line
    Jumps { curve: PathBuf },
    /// Compare two curves by their diagrams
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        framed: bool,
    },
    /// Multiplicities of the branches over their tangent lines
    Multiplicities {
        curve: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the diagram against the truncation and covering oracles
    Oracle {
        curve: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeded random curves to check
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// MD homology of the b-cone over a simplicial pair
    Cone {
        complex: PathBuf,
        #[arg(long)]
        b: String,
    },
}

enum Failure {
    Input(String),
    Oracle(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_curve(path: &Path) -> Result<Curve, Failure> {
    let c = Curve::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in c.conjugacy_warnings() {
        eprintln!(
            "warning: {} and {} have contact {} but a conjugate parametrization reaches {}",
            w.first, w.second, w.contact, w.conjugate_contact
        );
    }
    Ok(c)
}

fn diagram(path: &Path) -> Result<FramedDiagram, Failure> {
    md_diagram(&load_curve(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_level(text: &str) -> Result<ExtRat, Failure> {
    text.parse::<ExtRat>()
        .map_err(|e| Failure::Input(format!("bad level {text:?}: {e}")))
}

fn compute(curve: &Path, at: Option<&str>, json: Option<&Path>) -> Result<String, Failure> {
    let f = diagram(curve)?;
    if let Some(out) = json {
        fs::write(out, f.to_json() + "\n").map_err(|e| format!("{}: {e}", out.display()))?;
    }
    let Some(at) = at else {
        return Ok(render_table(&f));
    };
    let b = parse_level(at)?;
    let mut out = String::new();
    let err = |e: mdhom::bdiagram::DiagramError| Failure::Input(e.to_string());
    let _ = writeln!(out, "b = {b}");
    let _ = writeln!(out, "rank0 = {}", f.deg0().evaluate(&b).map_err(err)?);
    let _ = writeln!(out, "rank1 = {}", f.deg1().evaluate(&b).map_err(err)?);
    let inf = ExtRat::infinity();
    let one = ExtRat::integer(1);
    let mut maps = vec![("inf", b.to_string(), inf.clone(), b.clone())];
    if b >= one {
        maps.push((at, "1".to_string(), b.clone(), one));
    }
    for (from, to, b1, b2) in maps {
        for d in [f.deg0(), f.deg1()] {
            let m = d.morphism_matrix(&b1, &b2).map_err(err)?;
            let _ = writeln!(out, "h{}({from} -> {to}):\n{m}", d.degree());
        }
    }
    Ok(out)
}

fn tree(curve: &Path, json: bool) -> Result<String, Failure> {
    let t = build_tree(&load_curve(curve)?).map_err(|e| format!("{}: {e}", curve.display()))?;
    let text = export_tree(&t, if json { TreeFormat::Json } else { TreeFormat::Dot });
    Ok(if text.ends_with('\n') { text } else { text + "\n" })
}

fn jumps(curve: &Path) -> Result<String, Failure> {
    let f = diagram(curve)?;
    Ok(jumping_rates(&[f.deg0(), f.deg1()])
        .iter()
        .map(|r| fmt_rational(r) + "\n")
        .collect())
}

fn compare(a: &Path, b: &Path, framed: bool) -> Result<String, Failure> {
    let (fa, fb) = (diagram(a)?, diagram(b)?);
    Ok(if framed {
        format!("framed: {}\n", compare_framed(&fa, &fb))
    } else {
        format!("{}\n", compare_unframed((fa.deg0(), fa.deg1()), (fb.deg0(), fb.deg1())))
    })
}

fn multiplicities(curve: &Path, json: bool) -> Result<String, Failure> {
    let c = load_curve(curve)?;
    let r = relative_multiplicities(&c).map_err(|e| format!("{}: {e}", curve.display()))?;
    Ok(if json {
        serde_json::to_string_pretty(&r.to_json_value()).expect("json") + "\n"
    } else {
        r.render()
    })
}

fn oracle(curve: Option<&Path>, seed: u64, random: Option<usize>, json: bool) -> Result<String, Failure> {
    let mut curves: Vec<(String, Curve)> = Vec::new();
    if let Some(path) = curve {
        curves.push((path.display().to_string(), load_curve(path)?));
    }
    if let Some(k) = random {
        for (i, c) in random_curves(seed, k, &CurveSpec::default()).into_iter().enumerate() {
            curves.push((format!("random {i} (seed {seed})"), c));
        }
    }
    if curves.is_empty() {
        return Err(Failure::Input("oracle needs a curve file or --random".into()));
    }
    let reports: Vec<_> = curves.iter().map(|(label, c)| (label, c, crosscheck(c))).collect();
    let failed = reports.iter().filter(|(_, _, r)| !r.passed()).count();
    let out = if json {
        let items: Vec<serde_json::Value> = reports
            .iter()
            .map(|(label, c, r)| {
                serde_json::json!({
                    "label": label,
                    "curve": serde_json::from_str::<serde_json::Value>(&c.to_json()).expect("json"),
                    "passed": r.passed(),
                    "report": r.to_json_value(),
                })
            })
            .collect();
        serde_json::to_string_pretty(&items).expect("json") + "\n"
    } else {
        let mut out = String::new();
        for (label, _, r) in &reports {
            let _ = write!(out, "== {label}\n{}", r.render());
        }
        let _ = writeln!(out, "{} curves, {failed} failed", reports.len());
        out
    };
    if failed > 0 {
        Err(Failure::Oracle(out))
    } else {
        Ok(out)
    }
}

fn cone(complex: &Path, b: &str) -> Result<String, Failure> {
    let p = SimplicialPair::from_json(&read(complex)?).map_err(|e| format!("{}: {e}", complex.display()))?;
    let b = parse_rational(b).ok_or_else(|| format!("bad b {b:?}: expected p or p/q"))?;
    let d = bcone_diagram(&p, &b).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "b = {}", fmt_rational(&b));
    let _ = writeln!(out, "degree  below  at_b  inf");
    for n in 0..d.below.len().max(d.at_b.degrees.len()) {
        let (below, at) = d.ranks(n);
        let _ = writeln!(out, "{n:>6}  {below:>5}  {at:>4}  {:>3}", d.at_infinity.rank(n));
    }
    for (n, h) in d.at_b.degrees.iter().enumerate() {
        if !h.torsion.is_empty() {
            let t: Vec<String> = h.torsion.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "torsion in degree {n}: {}", t.join(" "));
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute { curve, at, json } => compute(&curve, at.as_deref(), json.as_deref()),
        Command::Tree { curve, dot: _, json } => tree(&curve, json),
        Command::Jumps { curve } => jumps(&curve),
        Command::Compare { a, b, framed } => compare(&a, &b, framed),
        Command::Multiplicities { curve, json } => multiplicities(&curve, json),
        Command::Oracle {
            curve,
            seed,
            random,
            json,
        } => oracle(curve.as_deref(), seed, random, json),
        Command::Cone { complex, b } => cone(&complex, &b),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Oracle(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}
