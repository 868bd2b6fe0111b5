use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxhecke::afun::AData;
use coxhecke::conjectures::{quasisplit_compare, Checker, ConjectureReport};
use coxhecke::coxeter::{fold, Gen};
use coxhecke::dihedral_oracle::DihedralSpec;
use coxhecke::hecke::HeckeElt;
use coxhecke::jring::JTable;
use coxhecke::kl::Kl;
use coxhecke::oracle_diff::{self, DiffOptions};
use coxhecke::symbols::{self, Symbol};
use coxhecke::{CellKind, CellPartition, CoxeterSystem, EngineHint, Error, Laurent, Region};

#[derive(Parser, Debug)]
#[command(name = "coxhecke", version, about = "Hecke algebras with unequal parameters: KL polynomials, cells, a-function, J ring")]
struct Cli {
    /// System file, or a preset: a3, an:n, bn:n,a,b, b2:L1,L2, g2:a,b, i2m:m,L1,L2, i2inf:L1,L2, affA:n, affC:p.
    #[arg(long, global = true)]
    system: Option<String>,
    /// Worker thread cap.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Length bound of the region for infinite groups.
    #[arg(long, global = true)]
    radius: Option<usize>,
    /// Boundary layer excluded from the trusted core.
    #[arg(long, global = true)]
    margin: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached KL columns.
    #[arg(long, global = true, env = "COXHECKE_CACHE")]
    cache: Option<PathBuf>,
    /// Print the dihedral closed forms next to the generic results.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Tex,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Kind {
    Left,
    Right,
    TwoSided,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// p_{y,w}.
    Klpoly { y: String, w: String },
    /// c_w in the T basis.
    Cbasis { w: String },
    /// μ^s_{y,w}; s is a 1-based generator index.
    Mu { s: usize, y: String, w: String },
    /// All h_{x,y,z} with x, y in the trusted core.
    Htable,
    /// Left, right or two-sided cells with their order.
    Cells {
        #[arg(long, value_enum, default_value_t = Kind::Left)]
        kind: Kind,
    },
    /// a(z), Δ(z), n_z.
    Afun,
    /// Distinguished involutions with n_d.
    Dset,
    /// Nonzero γ_{x,y,z}.
    Gamma,
    /// Structure constants of J.
    Jring,
    /// φ(c_x^†) in J_A.
    Phi { x: String },
    /// P1-P15 and Ptilde.
    CheckConjectures {
        /// Comma-separated ids, e.g. P7,P15.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Fold the system by a diagram automorphism and compare with the split group.
    Fold {
        /// Images of generators 1..n, 1-based, e.g. 3,2,1.
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
    },
    /// Symbol combinatorics for type B/C with parameters (a, b).
    Symbols {
        #[command(subcommand)]
        op: SymOp,
    },
    /// Compare the generic engines with the dihedral closed forms.
    OracleDiff {
        #[arg(long, default_value_t = 12)]
        window: u32,
        #[arg(long, default_value_t = 7)]
        product_len: u32,
    },
}

#[derive(clap::Args, Debug)]
struct Params {
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
}

#[derive(clap::Args, Debug)]
struct Bip {
    /// Symbol text such as 0,2,5/1,3.
    symbol: Option<String>,
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    beta: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum SymOp {
    /// Rank of a symbol.
    Rank {
        #[command(flatten)]
        p: Params,
        symbol: String,
    },
    /// a-value and f-value of a symbol or bipartition.
    A {
        #[command(flatten)]
        p: Params,
        #[command(flatten)]
        bip: Bip,
    },
    /// Hoefsmit product of a bipartition.
    Hoefsmit {
        #[command(flatten)]
        p: Params,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        beta: Vec<i64>,
    },
    /// Constructible representations and families of W_n.
    Families {
        #[command(flatten)]
        p: Params,
        n: i64,
    },
}

/// An error the user caused by how the command was invoked.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<Usage>().is_some() || matches!(e.downcast_ref::<Error>(), Some(Error::Parse(_)));
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

struct Ctx {
    sys: Arc<CoxeterSystem>,
    kl: Arc<Kl>,
    radius: usize,
    margin: usize,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self> {
        let spec = cli.system.as_deref().ok_or_else(|| Usage("--system is required for this subcommand".into()))?;
        let path = PathBuf::from(spec);
        let sys = if path.is_file() {
            let text = std::fs::read_to_string(&path).with_context(|| format!("--system {spec}"))?;
            CoxeterSystem::from_config(&text, EngineHint::Auto)?.with_name(spec)
        } else {
            CoxeterSystem::preset(spec)?
        };
        let sys = Arc::new(sys);
        let kl = Arc::new(Kl::new(sys.clone()));
        if let Some(dir) = &cli.cache {
            kl.load_columns(dir)?;
        }
        Ok(Ctx { sys, kl, radius: cli.radius.unwrap_or(10), margin: cli.margin.unwrap_or(3) })
    }

    fn el(&self, s: &str) -> Result<coxhecke::Element> {
        Ok(self.sys.parse_element(s)?)
    }

    fn region(&self) -> Result<Region> {
        Ok(Region::auto(&self.sys, self.radius, self.margin)?)
    }

    fn data(&self) -> Result<AData> {
        Ok(AData::build_auto(self.kl.clone(), self.radius, self.margin)?)
    }

    /// The closed-form oracle, when the system is dihedral.
    fn oracle(&self) -> Option<DihedralSpec> {
        if self.sys.rank() != 2 {
            return None;
        }
        let m = self.sys.matrix().get(0, 1);
        let w = self.sys.weights();
        DihedralSpec::new(m, w[0], w[1]).ok()
    }

    fn save(&self, cli: &Cli) -> Result<()> {
        if let Some(dir) = &cli.cache {
            self.kl.save_columns(dir).with_context(|| format!("writing cache {}", dir.display()))?;
        }
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let mut out = String::new();
    let outcome = match &cli.cmd {
        Cmd::Symbols { op } => symbols_cmd(cli.format, op, &mut out)?,
        Cmd::OracleDiff { window, product_len } => {
            let opts = DiffOptions { window: *window, product_len: *product_len, radius: cli.radius.unwrap_or(18), margin: cli.margin.unwrap_or(3) };
            let rep = oracle_diff::run(&opts)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", rep.to_json())?,
                _ => {
                    for l in rep.lines() {
                        writeln!(out, "{l}")?;
                    }
                }
            }
            if rep.is_clean() {
                Outcome::Ok
            } else {
                Outcome::CheckFailed
            }
        }
        cmd => {
            let cx = Ctx::new(cli)?;
            let o = system_cmd(cli, &cx, cmd, &mut out)?;
            cx.save(cli)?;
            o
        }
    };
    print!("{out}");
    Ok(outcome)
}

fn laurent(f: Format, p: &Laurent) -> String {
    match f {
        Format::Tex => p.to_tex(),
        _ => p.to_text(),
    }
}

fn hecke_tex(h: &HeckeElt, b: &str) -> String {
    if h.is_zero() {
        return "0".into();
    }
    h.terms().iter().map(|(w, c)| format!("({}){b}_{{{}}}", c.to_tex(), w.label())).collect::<Vec<_>>().join(" + ")
}

fn system_cmd(cli: &Cli, cx: &Ctx, cmd: &Cmd, out: &mut String) -> Result<Outcome> {
    let f = cli.format;
    match cmd {
        Cmd::Klpoly { y, w } => {
            let (yy, ww) = (cx.el(y)?, cx.el(w)?);
            let p = cx.kl.p(&yy, &ww);
            match f {
                Format::Json => writeln!(out, "{}", json!({"y": yy.to_text(), "w": ww.to_text(), "p": p.to_text()}))?,
                Format::Csv => writeln!(out, "y,w,p\n{},{},{}", yy.to_text(), ww.to_text(), p.to_text())?,
                _ => writeln!(out, "{}", laurent(f, &p))?,
            }
            if cli.oracle {
                if let Some(spec) = cx.oracle() {
                    let want = spec.c_closed_form(spec.parse(&ww.to_text())?)?;
                    let q = want.get(&spec.parse(&yy.to_text())?).cloned().unwrap_or_default();
                    writeln!(out, "oracle: {} ({})", laurent(f, &q), if q == p { "agree" } else { "DIFFER" })?;
                }
            }
        }
        Cmd::Cbasis { w } => {
            let ww = cx.el(w)?;
            let c = cx.kl.c(&ww);
            match f {
                Format::Json => writeln!(out, "{}", json!({"w": ww.to_text(), "c": c.to_json()}))?,
                Format::Csv => {
                    writeln!(out, "y,coefficient")?;
                    for (y, p) in c.terms() {
                        writeln!(out, "{},{}", y.to_text(), p.to_text())?;
                    }
                }
                Format::Tex => writeln!(out, "{}", hecke_tex(&c, "T"))?,
                Format::Text => writeln!(out, "{c}")?,
            }
            if cli.oracle {
                match cx.oracle() {
                    Some(spec) => {
                        let d = spec.parse(&ww.to_text())?;
                        match spec.c_closed_form(d) {
                            Ok(want) => {
                                let agree = c.terms().len() == want.len() && c.terms().iter().all(|(y, p)| spec.parse(&y.to_text()).ok().and_then(|k| want.get(&k)) == Some(p));
                                let s: Vec<String> = want.iter().map(|(y, p)| format!("({}){}", laurent(f, p), y)).collect();
                                writeln!(out, "oracle: {} ({})", s.join(" + "), if agree { "agree" } else { "DIFFER" })?;
                            }
                            Err(e) => writeln!(out, "oracle: {e}")?,
                        }
                    }
                    None => writeln!(out, "oracle: not a dihedral system")?,
                }
            }
        }
        Cmd::Mu { s, y, w } => {
            if *s == 0 || *s > cx.sys.rank() {
                return Err(Usage(format!("generator {s} out of range 1..={}", cx.sys.rank())).into());
            }
            let m = cx.kl.mu((*s - 1) as Gen, &cx.el(y)?, &cx.el(w)?)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"s": s, "y": y, "w": w, "mu": m.to_text()}))?,
                _ => writeln!(out, "{}", laurent(f, &m))?,
            }
        }
        Cmd::Htable => {
            let region = cx.region()?;
            let core = region.core();
            let mut rows = Vec::new();
            for x in &core {
                for y in &core {
                    for (z, h) in cx.kl.h(x, y).terms() {
                        rows.push((x.clone(), y.clone(), z.clone(), h.clone()));
                    }
                }
            }
            match f {
                Format::Json => {
                    let v: Vec<Value> = rows.iter().map(|(x, y, z, h)| json!([x.to_text(), y.to_text(), z.to_text(), h.to_text()])).collect();
                    writeln!(out, "{}", json!({"region": region.describe(), "h": v}))?;
                }
                Format::Csv => {
                    writeln!(out, "x,y,z,h")?;
                    for (x, y, z, h) in &rows {
                        writeln!(out, "{},{},{},{}", x.to_text(), y.to_text(), z.to_text(), h.to_text())?;
                    }
                }
                _ => {
                    for (x, y, z, h) in &rows {
                        writeln!(out, "h[{x},{y},{z}] = {}", laurent(f, h))?;
                    }
                }
            }
        }
        Cmd::Cells { kind } => {
            let k = match kind {
                Kind::Left => CellKind::Left,
                Kind::Right => CellKind::Right,
                Kind::TwoSided => CellKind::TwoSided,
            };
            let region = cx.region()?;
            let p = CellPartition::compute(&cx.kl, &region, k)?;
            match f {
                Format::Json => writeln!(out, "{}", p.to_json())?,
                Format::Csv => {
                    writeln!(out, "w,cell")?;
                    for (i, b) in p.blocks.iter().enumerate() {
                        for w in b {
                            writeln!(out, "{},{i}", w.to_text())?;
                        }
                    }
                }
                _ => {
                    writeln!(out, "# {} cells on {}", k.name(), region.describe())?;
                    for b in p.blocks.iter().filter(|b| b.iter().any(|w| region.in_core(w))) {
                        writeln!(out, "{{{}}}", b.iter().map(|w| w.label()).collect::<Vec<_>>().join(", "))?;
                    }
                }
            }
        }
        Cmd::Afun => {
            let data = cx.data()?;
            let spec = if cli.oracle { cx.oracle() } else { None };
            match f {
                Format::Json => writeln!(out, "{}", data.to_json())?,
                Format::Csv if spec.is_none() => write!(out, "{}", data.to_csv())?,
                _ => {
                    let tex = f == Format::Tex;
                    let sep = if tex { " & " } else { "," };
                    let end = if tex { " \\\\" } else { "" };
                    let mut head = vec!["z", "a", "certified", "delta", "n"];
                    if spec.is_some() {
                        head.push("oracle_a");
                    }
                    writeln!(out, "{}{end}", head.join(sep))?;
                    for k in data.core() {
                        let z = &data.elems()[k];
                        let mut row = vec![z.label(), data.a[k].to_string(), data.cert[k].name().to_string(), data.delta[k].to_string(), data.nz[k].to_string()];
                        if let Some(s) = &spec {
                            row.push(s.parse(&z.to_text()).and_then(|d| s.a_value(d)).map_or_else(|e| format!("({e})"), |v| v.to_string()));
                        }
                        writeln!(out, "{}{end}", row.join(sep))?;
                    }
                }
            }
        }
        Cmd::Dset => {
            let data = cx.data()?;
            let d = data.dset()?;
            match f {
                Format::Json => {
                    let v: Vec<Value> = d.iter().map(|z| Ok(json!([z.to_text(), data.n_of(z)?]))).collect::<Result<_>>()?;
                    writeln!(out, "{}", json!({"region": data.region.describe(), "dset": v}))?;
                }
                _ => {
                    writeln!(out, "d,n_d")?;
                    for z in &d {
                        writeln!(out, "{},{}", z.label(), data.n_of(z)?)?;
                    }
                }
            }
        }
        Cmd::Gamma => {
            let data = cx.data()?;
            match f {
                Format::Json => {
                    let el = data.elems();
                    let v: Vec<Value> = data.gamma_table()?.into_iter().map(|((x, y, z), g)| json!([el[x].to_text(), el[y].to_text(), el[z].to_text(), g])).collect();
                    writeln!(out, "{}", json!({"region": data.region.describe(), "gamma": v}))?;
                }
                _ => write!(out, "{}", data.gamma_csv()?)?,
            }
        }
        Cmd::Jring => {
            let data = cx.data()?;
            let jt = JTable::build(&data)?;
            match f {
                Format::Json => writeln!(out, "{}", jt.to_json())?,
                Format::Csv => {
                    writeln!(out, "x,y,z,coefficient")?;
                    for ((x, y), p) in &jt.products {
                        for (z, c) in &p.terms {
                            writeln!(out, "{},{},{},{c}", x.to_text(), y.to_text(), z.to_text())?;
                        }
                    }
                }
                _ => {
                    writeln!(out, "unit = {}", jt.unit::<i64>())?;
                    for ((x, y), p) in &jt.products {
                        if !p.is_zero() {
                            writeln!(out, "t_{x} t_{y} = {p}")?;
                        }
                    }
                    if !jt.incomplete.is_empty() {
                        writeln!(out, "# {} products not determined in the window", jt.incomplete.len())?;
                    }
                }
            }
        }
        Cmd::Phi { x } => {
            let data = cx.data()?;
            let jt = JTable::build(&data)?;
            let xx = cx.el(x)?;
            let p = jt.phi_cdag(&xx)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"x": xx.to_text(), "phi": p.to_json()}))?,
                _ => writeln!(out, "{p}")?,
            }
        }
        Cmd::CheckConjectures { only } => {
            let data = cx.data()?;
            let checker = Checker::new(&data)?;
            let reps = checker.check_all(only.as_deref())?;
            return print_reports(f, &reps, out);
        }
        Cmd::Fold { perm } => {
            if perm.len() != cx.sys.rank() || perm.iter().any(|&p| p == 0) {
                return Err(Usage(format!("--perm needs {} one-based generator images", cx.sys.rank())).into());
            }
            let u: Vec<Gen> = perm.iter().map(|&p| (p - 1) as Gen).collect();
            let fo = fold(cx.sys.clone(), &u)?;
            let small = AData::build_auto(Arc::new(Kl::new(fo.folded.clone())), cx.radius, cx.margin)?;
            let big = cx.data()?;
            if f == Format::Text {
                writeln!(out, "# folded system\n{}", fo.folded.to_config().trim_end())?;
            }
            let reps = quasisplit_compare(&small, &big, &|x| fo.embed(x))?;
            return print_reports(f, &reps, out);
        }
        Cmd::Symbols { .. } | Cmd::OracleDiff { .. } => unreachable!("handled without a system"),
    }
    Ok(Outcome::Ok)
}

fn print_reports(f: Format, reps: &[ConjectureReport], out: &mut String) -> Result<Outcome> {
    for r in reps {
        match f {
            Format::Json => writeln!(out, "{}", r.to_json())?,
            _ => {
                writeln!(out, "{}", r.line())?;
                if !r.holds() {
                    for w in &r.witnesses {
                        writeln!(out, "  witness: {w}")?;
                    }
                }
                if let Some(n) = &r.note {
                    writeln!(out, "  note: {n}")?;
                }
            }
        }
    }
    Ok(if reps.iter().all(|r| r.holds() || r.status == coxhecke::conjectures::Status::NotApplicable) {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn bip_of(bip: &Bip, a: i64, b: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    match &bip.symbol {
        Some(s) => Ok(Symbol::parse(s, a, b)?.to_bipartition()),
        None => Ok((bip.alpha.clone(), bip.beta.clone())),
    }
}

fn show_part(p: &[i64]) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn symbols_cmd(f: Format, op: &SymOp, out: &mut String) -> Result<Outcome> {
    match op {
        SymOp::Rank { p, symbol } => {
            let s = Symbol::parse(symbol, p.a, p.b)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"symbol": s.to_string(), "rank": s.rank()}))?,
                _ => writeln!(out, "{}", s.rank())?,
            }
        }
        SymOp::A { p, bip } => {
            let (al, be) = bip_of(bip, p.a, p.b)?;
            let n = al.iter().sum::<i64>() + be.iter().sum::<i64>();
            let s = Symbol::of_bipartition(&al, &be, p.a, p.b, n)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"alpha": al, "beta": be, "symbol": s.to_string(), "a": s.a_value(), "f": s.f_value()}))?,
                Format::Csv => writeln!(out, "alpha,beta,symbol,a,f\n{},{},{},{},{}", show_part(&al), show_part(&be), s, s.a_value(), s.f_value())?,
                _ => writeln!(out, "symbol {s}\na {}\nf {}", s.a_value(), s.f_value())?,
            }
        }
        SymOp::Hoefsmit { p, alpha, beta } => {
            let h = symbols::hoefsmit_f(alpha, beta, p.a, p.b)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"alpha": alpha, "beta": beta, "f": h.to_text()}))?,
                _ => writeln!(out, "{}", laurent(f, &h))?,
            }
        }
        SymOp::Families { p, n } => {
            if *n < 0 {
                return Err(Usage("n must be nonnegative".into()).into());
            }
            let reps = symbols::constructible_representations(p.a, p.b, *n)?;
            let fams = symbols::families(p.a, p.b, *n)?;
            let label = |s: &Symbol| {
                let (x, y) = s.to_bipartition();
                format!("({};{})", show_part(&x), show_part(&y))
            };
            match f {
                Format::Json => {
                    let j = |v: &[Vec<Symbol>]| -> Vec<Value> { v.iter().map(|g| json!({"a": g[0].a_value(), "members": g.iter().map(label).collect::<Vec<_>>()})).collect() };
                    writeln!(out, "{}", json!({"constructible": j(&reps), "families": j(&fams)}))?;
                }
                _ => {
                    writeln!(out, "# families")?;
                    for g in &fams {
                        writeln!(out, "a={} {}", g[0].a_value(), g.iter().map(label).collect::<Vec<_>>().join(" "))?;
                    }
                    writeln!(out, "# constructible representations")?;
                    for g in &reps {
                        writeln!(out, "{}", g.iter().map(label).collect::<Vec<_>>().join(" + "))?;
                    }
                }
            }
        }
    }
    Ok(Outcome::Ok)
}
