//! Command-line front end: evolve states, print energy/counting/tau reports,
//! rebuild boxes from counting increments, and run the property suites.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dnca::automaton::{self, reconstruct, rho_colors, rho_g, rho_star};
use dnca::energies::{self, corner_energy_star};
use dnca::kashiwara::{brute_force_r, phi0};
use dnca::kind::EnergyKind;
use dnca::rigged;
use dnca::rmatrix::{affine_ybe, check_table1, inverse_property};
use dnca::textio::{format_box, format_box_zeta, format_path, parse_pair, parse_path, parse_trace};
use dnca::{BoxState, Letter, Path};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dnca",
    version,
    about = "Soliton cellular automaton of type D: combinatorial R, energies, counting functions and tau functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply the time evolution and print the evolved rows
    Evolve(EvolveArgs),
    /// Generalized energies of the state or of all its prefixes
    Energy(EnergyArgs),
    /// Counting functions (letters in row 0 plus the spacetime quadrant)
    Rho(RhoArgs),
    /// Rebuild one box from counting-function increments
    Reconstruct(ReconstructArgs),
    /// Ultradiscrete tau table of a state and its rigged configuration
    Tau(TauArgs),
    /// Property suites; exit code 1 if any check fails
    Check(CheckArgs),
    /// Generating polynomial of an energy over highest states of a shape
    Xpoly(XpolyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Args)]
struct StateInput {
    /// Rank n >= 3 (optional when the file carries an `n <rank>` header)
    #[arg(long)]
    n: Option<usize>,
    /// Inline state: boxes of signed letters joined with '|'
    #[arg(long, conflicts_with = "file")]
    state: Option<String>,
    /// File with an `n <rank>` header and one state per line (first row used)
    #[arg(long)]
    file: Option<std::path::PathBuf>,
}

impl StateInput {
    fn load(&self) -> Result<Path> {
        if let Some(f) = &self.file {
            let text = std::fs::read_to_string(f)
                .with_context(|| format!("reading {}", f.display()))?;
            let (n, rows) = parse_trace(&text)?;
            if let Some(want) = self.n {
                if want != n {
                    bail!("file declares rank {n}, --n says {want}");
                }
            }
            return Ok(rows.into_iter().next().expect("trace has rows"));
        }
        let s = self
            .state
            .as_deref()
            .ok_or_else(|| anyhow!("need --state or --file"))?;
        let n = self.n.ok_or_else(|| anyhow!("--state needs --n"))?;
        Ok(parse_path(n, s)?)
    }
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    input: StateInput,
    /// Carrier capacity: a positive integer or `inf`
    #[arg(long, default_value = "inf")]
    l: String,
    /// Number of time steps
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Use the mirror evolution (carrier swept right to left)
    #[arg(long)]
    star: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnergyArgs {
    #[command(flatten)]
    input: StateInput,
    /// Single kind (`v0`, `v*3`, `w2`, `w2-v2`, `v0^s1`); default all
    #[arg(long)]
    g: Option<String>,
    /// Report every prefix instead of the full state only
    #[arg(long)]
    prefixes: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RhoArgs {
    #[command(flatten)]
    input: StateInput,
    /// Single kind; default: the whole counting table
    #[arg(long, conflicts_with_all = ["colors", "star_a"])]
    g: Option<String>,
    /// Explicit color list, e.g. `2,3,-2,-1` (negative = barred)
    #[arg(long)]
    colors: Option<String>,
    /// Mirror counting for the starred kind of the given color
    #[arg(long, conflicts_with = "colors")]
    star_a: Option<usize>,
    /// Report every prefix instead of the full state only
    #[arg(long)]
    prefixes: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Rank n >= 3
    #[arg(long)]
    n: usize,
    /// Capacity of the box to rebuild
    #[arg(long)]
    cap: i64,
    /// Counting increments, e.g. `v0=10,v1=9,...,v*3=7,w2-v2=7,w1-v1=6`
    #[arg(long)]
    deltas: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TauArgs {
    /// Pair file: `n <rank>`, `state <path>`, `rc <triples>`
    #[arg(long)]
    pair: std::path::PathBuf,
    /// Single row d (default: all 0..=n plus the phi0 row)
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[command(subcommand)]
    suite: Suite,
}

#[derive(Args, Clone)]
struct SuiteOpts {
    /// Restrict the randomized part to one rank
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Randomized cases per rank
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Suite {
    /// Yang-Baxter equation and the inverse property of R
    Ybe(SuiteOpts),
    /// Involution/conjugation laws of the V and W pieces
    Table1(SuiteOpts),
    /// Generalized energies against counting functions
    Main(SuiteOpts),
    /// Mirror energies against mirror counting functions
    Star(SuiteOpts),
    /// Tau-function equalities on a state/rigged-configuration pair
    Conjecture {
        /// Pair file to check
        #[arg(long)]
        pair: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed R formula against the operator-commutation bijection
    Oracle(SuiteOpts),
}

#[derive(Args)]
struct XpolyArgs {
    /// Rank n >= 3
    #[arg(long)]
    n: usize,
    /// Box capacities, e.g. `1,1,2`
    #[arg(long)]
    shape: String,
    /// Energy kind
    #[arg(long, default_value = "v0")]
    g: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    // behave like a regular unix filter when the reader goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Evolve(a) => cmd_evolve(a).map(|_| true),
        Cmd::Energy(a) => cmd_energy(a).map(|_| true),
        Cmd::Rho(a) => cmd_rho(a).map(|_| true),
        Cmd::Reconstruct(a) => cmd_reconstruct(a).map(|_| true),
        Cmd::Tau(a) => cmd_tau(a).map(|_| true),
        Cmd::Xpoly(a) => cmd_xpoly(a).map(|_| true),
        Cmd::Check(a) => cmd_check(a),
    }
}

fn parse_cap(s: &str) -> Result<Option<i64>> {
    if s == "inf" {
        return Ok(None);
    }
    let l: i64 = s.parse().with_context(|| format!("bad capacity {s:?}"))?;
    if l < 1 {
        bail!("capacity must be positive");
    }
    Ok(Some(l))
}

fn parse_kind(s: &str, n: usize) -> Result<EnergyKind> {
    let g = EnergyKind::parse(s)?;
    g.validate(n)?;
    Ok(g)
}

fn cmd_evolve(a: EvolveArgs) -> Result<()> {
    let mut p = a.input.load()?;
    let l = parse_cap(&a.l)?;
    for t in 1..=a.steps {
        p = match (l, a.star) {
            (Some(cap), false) => automaton::evolve(&p, cap).0,
            (Some(cap), true) => automaton::star_evolve(&p, cap).0,
            (None, false) => automaton::t_infinity(&p)?,
            (None, true) => automaton::t_star_infinity(&p)?,
        };
        match a.format {
            Format::Text => println!("{}", format_path(&p)),
            Format::JsonLines => println!("{}", json!({"t": t, "state": format_path(&p)})),
        }
    }
    Ok(())
}

fn cmd_energy(a: EnergyArgs) -> Result<()> {
    let p = a.input.load()?;
    let n = p.n();
    let kinds = match &a.g {
        Some(s) => vec![parse_kind(s, n)?],
        None => EnergyKind::report_kinds(n),
    };
    let table = energies::energies(&p)?;
    let ks: Vec<usize> = if a.prefixes {
        (1..=p.len()).collect()
    } else {
        vec![p.len()]
    };
    if a.format == Format::Text {
        let head: Vec<String> = kinds.iter().map(|g| g.to_string()).collect();
        println!("k {}", head.join(" "));
    }
    for k in ks {
        let row: Vec<i64> = kinds
            .iter()
            .map(|&g| table.value(g, k).expect("kind in report"))
            .collect();
        match a.format {
            Format::Text => {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{k} {}", cells.join(" "));
            }
            Format::JsonLines => {
                let mut obj = serde_json::Map::new();
                obj.insert("k".into(), json!(k));
                for (g, v) in kinds.iter().zip(&row) {
                    obj.insert(g.to_string(), json!(v));
                }
                println!("{}", serde_json::Value::Object(obj));
            }
        }
    }
    Ok(())
}

fn parse_colors(s: &str) -> Result<Vec<Letter>> {
    s.split(',')
        .map(|t| {
            let v: i32 = t
                .trim()
                .parse()
                .with_context(|| format!("bad color {t:?}"))?;
            Ok(Letter(v))
        })
        .collect()
}

fn cmd_rho(a: RhoArgs) -> Result<()> {
    let p = a.input.load()?;
    let n = p.n();
    enum Sel {
        Kind(EnergyKind),
        Colors(Vec<Letter>),
        Star(usize),
    }
    let sels: Vec<(String, Sel)> = if let Some(s) = &a.g {
        let g = parse_kind(s, n)?;
        vec![(g.to_string(), Sel::Kind(g))]
    } else if let Some(c) = &a.colors {
        vec![(format!("[{c}]"), Sel::Colors(parse_colors(c)?))]
    } else if let Some(aa) = a.star_a {
        vec![(format!("rho*{aa}"), Sel::Star(aa))]
    } else {
        EnergyKind::counting_kinds(n)
            .into_iter()
            .map(|g| (g.to_string(), Sel::Kind(g)))
            .collect()
    };
    let ks: Vec<usize> = if a.prefixes {
        (1..=p.len()).collect()
    } else {
        vec![p.len()]
    };
    if a.format == Format::Text {
        let head: Vec<String> = sels.iter().map(|(name, _)| name.clone()).collect();
        println!("k {}", head.join(" "));
    }
    for &k in &ks {
        let q = p.prefix(k);
        let mut row = Vec::new();
        for (_, sel) in &sels {
            row.push(match sel {
                Sel::Kind(g) => rho_g(&q, *g)?,
                Sel::Colors(cs) => rho_colors(&q, cs)?,
                Sel::Star(aa) => rho_star(&q, *aa)?,
            });
        }
        match a.format {
            Format::Text => {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{k} {}", cells.join(" "));
            }
            Format::JsonLines => {
                let mut obj = serde_json::Map::new();
                obj.insert("k".into(), json!(k));
                for ((name, _), v) in sels.iter().zip(&row) {
                    obj.insert(name.clone(), json!(v));
                }
                println!("{}", serde_json::Value::Object(obj));
            }
        }
    }
    Ok(())
}

fn cmd_reconstruct(a: ReconstructArgs) -> Result<()> {
    let mut map = std::collections::HashMap::new();
    for part in a.deltas.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("expected kind=value, got {part:?}"))?;
        let g = parse_kind(key.trim(), a.n)?;
        let v: i64 = val
            .trim()
            .parse()
            .with_context(|| format!("bad increment {val:?}"))?;
        map.insert(g, v);
    }
    let b = reconstruct(a.n, a.cap, |g| map.get(&g).copied())?;
    match a.format {
        Format::Text => println!("{}", format_box(&b)),
        Format::JsonLines => {
            println!(
                "{}",
                json!({"box": format_box(&b), "zeta": format_box_zeta(&b)})
            )
        }
    }
    Ok(())
}

fn cmd_tau(a: TauArgs) -> Result<()> {
    let text = std::fs::read_to_string(&a.pair)
        .with_context(|| format!("reading {}", a.pair.display()))?;
    let (p, rc) = parse_pair(&text)?;
    let shape = p.shape();
    let ds: Vec<usize> = match a.d {
        Some(d) => vec![d],
        None => (0..=p.n()).collect(),
    };
    for &d in &ds {
        match a.format {
            Format::Text => {
                let row: Vec<String> = (0..=p.len())
                    .map(|k| rc.tau(&shape, d, k).map(|v| v.to_string()))
                    .collect::<dnca::Result<_>>()?;
                println!("tau({d}) {}", row.join(" "));
            }
            Format::JsonLines => {
                for k in 0..=p.len() {
                    println!("{}", json!({"d": d, "k": k, "tau": rc.tau(&shape, d, k)?}));
                }
            }
        }
    }
    if a.d.is_none() {
        match a.format {
            Format::Text => {
                let row: Vec<String> = (0..=p.len())
                    .map(|k| phi0(&p.prefix(k)).to_string())
                    .collect();
                println!("phi0 {}", row.join(" "));
            }
            Format::JsonLines => {
                for k in 0..=p.len() {
                    println!("{}", json!({"k": k, "phi0": phi0(&p.prefix(k))}));
                }
            }
        }
    }
    Ok(())
}

fn cmd_xpoly(a: XpolyArgs) -> Result<()> {
    let shape: Vec<i64> = a
        .shape
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .with_context(|| format!("bad capacity {t:?}"))
        })
        .collect::<Result<_>>()?;
    let g = parse_kind(&a.g, a.n)?;
    let table = rigged::xpoly(a.n, &shape, g)?;
    for (wt, poly) in table {
        match a.format {
            Format::Text => {
                let terms: Vec<String> = poly
                    .iter()
                    .map(|(e, c)| if *c == 1 {
                        format!("q^{e}")
                    } else {
                        format!("{c} q^{e}")
                    })
                    .collect();
                let w: Vec<String> = wt.iter().map(|v| v.to_string()).collect();
                println!("weight ({}): {}", w.join(","), terms.join(" + "));
            }
            Format::JsonLines => {
                let poly: serde_json::Map<String, serde_json::Value> = poly
                    .iter()
                    .map(|(e, c)| (e.to_string(), json!(c)))
                    .collect();
                println!("{}", json!({"weight": wt, "poly": poly}));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- check suites

struct Reporter {
    format: Format,
    failures: usize,
}

impl Reporter {
    fn new(format: Format) -> Self {
        Reporter {
            format,
            failures: 0,
        }
    }

    fn report(&mut self, name: &str, outcome: std::result::Result<(), String>) {
        match (&outcome, self.format) {
            (Ok(()), Format::Text) => println!("PASS {name}"),
            (Err(w), Format::Text) => println!("FAIL {name}: {w}"),
            (Ok(()), Format::JsonLines) => {
                println!("{}", json!({"check": name, "ok": true}))
            }
            (Err(w), Format::JsonLines) => {
                println!("{}", json!({"check": name, "ok": false, "witness": w}))
            }
        }
        if outcome.is_err() {
            self.failures += 1;
        }
    }

    fn all_ok(&self) -> bool {
        self.failures == 0
    }
}

fn random_box(rng: &mut ChaCha8Rng, n: usize, max_cap: i64) -> BoxState {
    let cap = rng.gen_range(1..=max_cap);
    loop {
        let mut zeta = vec![0i64; 2 * n];
        for _ in 0..cap {
            zeta[rng.gen_range(0..2 * n)] += 1;
        }
        if zeta[n - 1] == 0 || zeta[n] == 0 {
            return BoxState::new(n, zeta).expect("sampled box is valid");
        }
    }
}

fn random_path(rng: &mut ChaCha8Rng, n: usize, max_len: usize, max_cap: i64) -> Path {
    let len = rng.gen_range(1..=max_len);
    let boxes = (0..len).map(|_| random_box(rng, n, max_cap)).collect();
    Path::new(n, boxes).expect("sampled path is valid")
}

fn ranks(opt: &SuiteOpts, default: &[usize]) -> Vec<usize> {
    match opt.n {
        Some(n) => vec![n],
        None => default.to_vec(),
    }
}

fn check_ybe(opts: &SuiteOpts) -> Result<bool> {
    let mut rep = Reporter::new(opts.format);
    let b1: Vec<BoxState> = BoxState::enumerate(3, 1);
    let b2: Vec<BoxState> = BoxState::enumerate(3, 2);
    let exhaustive = || -> std::result::Result<(), String> {
        for a in &b1 {
            for b in &b1 {
                for c in &b1 {
                    affine_ybe(a, b, c)?;
                    inverse_property(a, b)?;
                }
            }
        }
        for a in &b2 {
            for b in &b1 {
                for c in &b2 {
                    affine_ybe(a, b, c)?;
                    inverse_property(a, b)?;
                    inverse_property(b, c)?;
                }
            }
        }
        Ok(())
    };
    rep.report("ybe exhaustive rank 3 (unit and mixed capacities)", exhaustive());
    let cases = opts.cases.unwrap_or(2000);
    for n in ranks(opts, &[4, 5]) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ n as u64);
        let mut random = || -> std::result::Result<(), String> {
            for _ in 0..cases {
                let a = random_box(&mut rng, n, 4);
                let b = random_box(&mut rng, n, 4);
                let c = random_box(&mut rng, n, 4);
                affine_ybe(&a, &b, &c)?;
                inverse_property(&a, &b)?;
            }
            Ok(())
        };
        rep.report(&format!("ybe random rank {n} ({cases} triples)"), random());
    }
    Ok(rep.all_ok())
}

fn check_table1_suite(opts: &SuiteOpts) -> Result<bool> {
    let mut rep = Reporter::new(opts.format);
    let cases = opts.cases.unwrap_or(1000);
    for n in ranks(opts, &[3, 4, 5]) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 8);
        let mut suite = || -> std::result::Result<(), String> {
            for _ in 0..cases {
                let a = random_box(&mut rng, n, 4);
                let b = random_box(&mut rng, n, 4);
                check_table1(&a, &b)?;
            }
            Ok(())
        };
        rep.report(&format!("table1 rank {n} ({cases} pairs)"), suite());
    }
    Ok(rep.all_ok())
}

fn counting_targets(n: usize) -> Vec<EnergyKind> {
    let mut kinds = EnergyKind::counting_kinds(n);
    kinds.extend((1..=n - 1).map(EnergyKind::W));
    kinds
}

fn check_main(opts: &SuiteOpts) -> Result<bool> {
    let mut rep = Reporter::new(opts.format);
    let fixed = parse_path(
        4,
        "1 2 4 -3 -2 -1 | 2 3 4 | 2 -3 -2 -1 | 1 3 -4 -4 | 1 1 | 1 1 | 1 1 | 1 1 | 1 1 | 1 1 | 1 1 | 1 1",
    )?;
    if opts.n.is_none() || opts.n == Some(4) {
        rep.report(
            "energies equal counting functions on the mixed-capacity state",
            compare_energy_rho(&fixed),
        );
    }
    let cases = opts.cases.unwrap_or(300);
    for n in ranks(opts, &[3, 4, 5]) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 16);
        let mut suite = || -> std::result::Result<(), String> {
            for _ in 0..cases {
                compare_energy_rho(&random_path(&mut rng, n, 8, 3))?;
            }
            Ok(())
        };
        rep.report(&format!("energies vs counting rank {n} ({cases} states)"), suite());
    }
    Ok(rep.all_ok())
}

fn compare_energy_rho(p: &Path) -> std::result::Result<(), String> {
    let table = energies::energies(p).map_err(|e| e.to_string())?;
    for g in counting_targets(p.n()) {
        for k in 0..=p.len() {
            let e = table.value(g, k).expect("kind in report");
            let r = rho_g(&p.prefix(k), g).map_err(|e| e.to_string())?;
            if e != r {
                return Err(format!(
                    "E_{g} = {e} but rho_{g} = {r} at prefix {k} of {}",
                    format_path(p)
                ));
            }
        }
    }
    Ok(())
}

fn check_star(opts: &SuiteOpts) -> Result<bool> {
    let mut rep = Reporter::new(opts.format);
    let cases = opts.cases.unwrap_or(300);
    for n in ranks(opts, &[3, 4, 5]) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 24);
        let mut suite = || -> std::result::Result<(), String> {
            for _ in 0..cases {
                let p = random_path(&mut rng, n, 8, 3);
                for a in 1..=n - 2 {
                    let e = corner_energy_star(&p, a).map_err(|e| e.to_string())?;
                    let r = rho_star(&p, a).map_err(|e| e.to_string())?;
                    if e != r {
                        return Err(format!(
                            "E*_v*{a} = {e} but rho*_{a} = {r} on {}",
                            format_path(&p)
                        ));
                    }
                }
            }
            Ok(())
        };
        rep.report(&format!("mirror energies rank {n} ({cases} states)"), suite());
    }
    Ok(rep.all_ok())
}

fn check_conjecture_suite(pair: &std::path::Path, format: Format) -> Result<bool> {
    let text =
        std::fs::read_to_string(pair).with_context(|| format!("reading {}", pair.display()))?;
    let (p, rc) = parse_pair(&text)?;
    let n = p.n();
    let shape = p.shape();
    let table = energies::energies(&p)?;
    let mut rep = Reporter::new(format);
    let named: [(usize, EnergyKind, &str); 4] = [
        (0, EnergyKind::V(0), "tau(0) = E_v0"),
        (1, EnergyKind::V0Sigma1, "tau(1) = E_v0^s1"),
        (n - 1, EnergyKind::VStar(n - 1), "tau(n-1) = E_v*"),
        (n, EnergyKind::V(n - 1), "tau(n) = E_v(n-1)"),
    ];
    for (d, g, name) in named {
        let case = || -> std::result::Result<(), String> {
            for k in 0..=p.len() {
                let want = table.value(g, k).expect("kind in report");
                let got = rc.tau(&shape, d, k).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("k={k}: tau = {got}, energy = {want}"));
                }
            }
            Ok(())
        };
        rep.report(name, case());
    }
    let last = || -> std::result::Result<(), String> {
        for k in 0..=p.len() {
            let want = table.value(EnergyKind::W(2), k).expect("kind in report")
                - table.value(EnergyKind::V(0), k).expect("kind in report")
                + phi0(&p.prefix(k));
            let got = rc.tau(&shape, 2, k).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("k={k}: tau = {got}, combination = {want}"));
            }
        }
        Ok(())
    };
    rep.report("tau(2) = E_w2 - E_v0 + phi0", last());
    Ok(rep.all_ok())
}

fn check_oracle(opts: &SuiteOpts) -> Result<bool> {
    let mut rep = Reporter::new(opts.format);
    for (n, l, m) in [(3, 1, 1), (3, 2, 1), (4, 1, 1)] {
        if let Some(want) = opts.n {
            if want != n {
                continue;
            }
        }
        let run = || -> std::result::Result<(), String> {
            let oracle = brute_force_r(n, l, m).map_err(|e| e.to_string())?;
            oracle.verify_formula().map_err(|e| e.to_string())
        };
        rep.report(&format!("oracle B{l} (x) B{m} rank {n}"), run());
    }
    Ok(rep.all_ok())
}

fn cmd_check(a: CheckArgs) -> Result<bool> {
    match &a.suite {
        Suite::Ybe(o) => check_ybe(o),
        Suite::Table1(o) => check_table1_suite(o),
        Suite::Main(o) => check_main(o),
        Suite::Star(o) => check_star(o),
        Suite::Conjecture { pair, format } => check_conjecture_suite(pair, *format),
        Suite::Oracle(o) => check_oracle(o),
    }
}
