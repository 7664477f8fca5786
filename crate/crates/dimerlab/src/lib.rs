//! The `dimerlab` command line: every subcommand reads a `.tg` file and
//! prints a deterministic text report.

pub mod svg;

use clap::{Parser, Subcommand};
use cluster::{commutativity_check, face_coordinates, hamiltonians, mutation_invariance_check, x_transform};
use exactalg::{fmt_rat, int, parse_rat, rat, Rat};
use kasteleyn::{
    apply_gauge, enumerate_matchings, kasteleyn_matrix, kasteleyn_orientation, normalize_spectral, sign_theorem_check,
    spectral_polynomial, unit_weights,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use torusgraph::{offset_gauge, parse_graph, serialize_graph, TorusGraph, Vec2};
use zigzag::{check_consistency, extract_zigzags, front_arrangement, newton_polygon, stacky_fan, Verdict};

#[derive(Parser, Debug)]
#[command(name = "dimerlab", version, about = "Dimer models on the torus, computed exactly")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Where to write the SVG (fronts, newton) or the moved graph (squaremove).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Front parameter in [0, 1].
    #[arg(long, global = true, default_value = "1")]
    t: String,
    /// Face for squaremove.
    #[arg(long, global = true)]
    face: Option<usize>,
    /// Worker threads for commute.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Edge weights: one rational per edge, whitespace separated (default all 1).
    #[arg(long, global = true)]
    weights: Option<PathBuf>,
    /// Random samples for commute.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// SVG width in pixels.
    #[arg(long, global = true, default_value_t = 400)]
    width: i64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse and validate.
    Validate { input: PathBuf },
    /// Strands with their classes, then the consistency verdict.
    Zigzags { input: PathBuf },
    /// Consistency verdict; exit 1 when inconsistent.
    Consistency { input: PathBuf },
    /// Newton polygon from strand classes.
    Newton { input: PathBuf },
    /// Stacky fan of the Newton polygon.
    Fan { input: PathBuf },
    /// Kasteleyn signs, matrix and determinant.
    Kasteleyn { input: PathBuf },
    /// Normalized spectral polynomial.
    Detcurve { input: PathBuf },
    /// Perfect matchings grouped by class.
    Matchings { input: PathBuf },
    /// Matching expansion, polygon agreement and gauge invariance.
    Check { input: PathBuf },
    /// Square move at --face with the transformed coordinates.
    Squaremove { input: PathBuf },
    /// Coefficients at interior and boundary lattice points.
    Hamiltonians { input: PathBuf },
    /// Poisson brackets of Hamiltonians at seeded random points.
    Commute { input: PathBuf },
    /// Geodesic fronts of the stacky fan at --t.
    Fronts { input: PathBuf },
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Fail {
    /// Bad invocation or unreadable files: exit 2.
    Usage(String),
    /// Invalid input or a failed check: exit 1. The text is the report.
    Check(String),
}

type Res = Result<String, Fail>;

fn check<E: std::fmt::Display>(e: E) -> Fail {
    Fail::Check(e.to_string())
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                let first = text.lines().next().unwrap_or("usage error").to_string();
                Output { code, stdout: String::new(), stderr: first + "\n" }
            };
        }
    };
    match dispatch(&cli) {
        Ok(s) => Output { code: 0, stdout: s, stderr: String::new() },
        Err(Fail::Usage(m)) => Output { code: 2, stdout: String::new(), stderr: m + "\n" },
        Err(Fail::Check(m)) => Output { code: 1, stdout: m + "\n", stderr: String::new() },
    }
}

fn load(path: &PathBuf) -> Result<TorusGraph, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(check)
}

fn weights(cli: &Cli, g: &TorusGraph) -> Result<Vec<Rat>, Fail> {
    let Some(path) = &cli.weights else { return Ok(unit_weights(g)) };
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))?;
    let w: Option<Vec<Rat>> = text.split_whitespace().map(parse_rat).collect();
    let w = w.ok_or_else(|| Fail::Usage(format!("{}: weights must be rationals", path.display())))?;
    kasteleyn::check_weights(g, &w).map_err(check)?;
    Ok(w)
}

fn write_out(cli: &Cli, text: &str) -> Result<bool, Fail> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map(|_| true).map_err(|e| Fail::Usage(format!("cannot write {}: {e}", p.display()))),
        None => Ok(false),
    }
}

fn random_weights(g: &TorusGraph, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    (0..g.edge_count()).map(|_| rat(rng.gen_range(1..=9), rng.gen_range(1..=9))).collect()
}

fn pt(p: Vec2) -> String {
    format!("({},{})", p.0, p.1)
}

fn classes(g: &TorusGraph) -> Vec<Vec2> {
    extract_zigzags(g).iter().map(|z| z.cls).collect()
}

fn verdict_line(g: &TorusGraph) -> (bool, String) {
    match check_consistency(g) {
        Verdict::Consistent => (true, "consistent: yes".into()),
        Verdict::Inconsistent(w) => (false, format!("consistent: no ({w})")),
    }
}

fn curve(g: &TorusGraph, w: &[Rat]) -> Result<String, Fail> {
    let kappa = kasteleyn_orientation(g).map_err(check)?;
    let det = spectral_polynomial(&kasteleyn_matrix(g, w, &kappa).map_err(check)?).map_err(check)?;
    Ok(normalize_spectral(&det).map_err(check)?.to_string())
}

fn dispatch(cli: &Cli) -> Res {
    let mut s = String::new();
    match &cli.cmd {
        Cmd::Validate { input } => {
            let g = load(input)?;
            let _ = writeln!(
                s,
                "valid: black={} white={} edges={} faces={}",
                g.black_count(),
                g.white_count(),
                g.edge_count(),
                g.faces().len()
            );
        }
        Cmd::Zigzags { input } => {
            let g = load(input)?;
            for (k, z) in extract_zigzags(&g).iter().enumerate() {
                let _ = writeln!(s, "zz{k}: class={} len={}", pt(z.cls), z.len());
            }
            let _ = writeln!(s, "{}", verdict_line(&g).1);
        }
        Cmd::Consistency { input } => {
            let g = load(input)?;
            let (ok, line) = verdict_line(&g);
            if !ok {
                return Err(Fail::Check(line));
            }
            let _ = writeln!(s, "{line}");
        }
        Cmd::Newton { input } => {
            let g = load(input)?;
            let p = newton_polygon(&classes(&g)).map_err(check)?;
            let vs: Vec<String> = p.vertices().iter().map(|&v| pt(v)).collect();
            let _ = writeln!(s, "polygon: {}", vs.join(" "));
            let _ = writeln!(s, "interior points: {}", p.interior_points().len());
            let _ = writeln!(s, "boundary points: {}", p.boundary_count());
            write_out(cli, &svg::polygon_svg(&p, cli.width))?;
        }
        Cmd::Fan { input } => {
            let g = load(input)?;
            let fan = stacky_fan(&newton_polygon(&classes(&g)).map_err(check)?).map_err(check)?;
            for (k, r) in fan.rays.iter().enumerate() {
                let _ = writeln!(s, "ray {k}: generator={} multiplicity={}", pt(r.generator), r.multiplicity);
            }
        }
        Cmd::Kasteleyn { input } => {
            let g = load(input)?;
            let w = weights(cli, &g)?;
            let kappa = kasteleyn_orientation(&g).map_err(check)?;
            let signs: Vec<&str> = kappa.iter().map(|&k| if k < 0 { "-" } else { "+" }).collect();
            let _ = writeln!(s, "kappa: {}", signs.join(" "));
            let kd = kasteleyn_matrix(&g, &w, &kappa).map_err(check)?;
            for (i, row) in kd.matrix.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if !p.is_zero() {
                        let _ = writeln!(s, "K[w{i}][b{j}] = {p}");
                    }
                }
            }
            let det = spectral_polynomial(&kd).map_err(check)?;
            let _ = writeln!(s, "det: {det}");
        }
        Cmd::Detcurve { input } => {
            let g = load(input)?;
            let _ = writeln!(s, "{}", curve(&g, &weights(cli, &g)?)?);
        }
        Cmd::Matchings { input } => {
            let g = load(input)?;
            let mut by: BTreeMap<Vec2, (usize, Rat)> = BTreeMap::new();
            for m in enumerate_matchings(&g, &weights(cli, &g)?) {
                let e = by.entry(m.class).or_insert((0, int(0)));
                e.0 += 1;
                e.1 += m.weight;
            }
            for (c, (n, w)) in by {
                let _ = writeln!(s, "class={} count={n} weight-sum={}", pt(c), fmt_rat(&w));
            }
        }
        Cmd::Check { input } => s = run_check(cli, &load(input)?)?,
        Cmd::Squaremove { input } => {
            let face = cli.face.ok_or_else(|| Fail::Usage("squaremove needs --face <id>".into()))?;
            let g = load(input)?;
            let seed = face_coordinates(&g, &weights(cli, &g)?).map_err(check)?;
            let moved = x_transform(&seed, face).map_err(check)?;
            let rep = mutation_invariance_check(&seed, face).map_err(check)?;
            let tg = serialize_graph(&moved.graph);
            if !write_out(cli, &tg)? {
                s.push_str(&tg);
            }
            for (f, x) in moved.x.iter().enumerate() {
                let _ = writeln!(s, "X[{f}]={}", fmt_rat(x));
            }
            let _ = writeln!(s, "qx={}", fmt_rat(&moved.q[0]));
            let _ = writeln!(s, "qy={}", fmt_rat(&moved.q[1]));
            let _ = writeln!(s, "curve: {}", if rep.holds() { "preserved" } else { "CHANGED" });
            if !rep.holds() {
                return Err(Fail::Check(format!("{s}before: {}\nafter: {}", rep.before, rep.after)));
            }
        }
        Cmd::Hamiltonians { input } => {
            let g = load(input)?;
            let h = hamiltonians(&g, &weights(cli, &g)?).map_err(check)?;
            for (p, c) in &h.interior {
                let _ = writeln!(s, "interior {}: {}", pt(*p), fmt_rat(c));
            }
            for (p, c) in &h.casimirs {
                let _ = writeln!(s, "boundary {}: {}", pt(*p), fmt_rat(c));
            }
        }
        Cmd::Commute { input } => s = run_commute(cli, &load(input)?)?,
        Cmd::Fronts { input } => {
            let t = parse_rat(&cli.t).ok_or_else(|| Fail::Usage(format!("--t: not a rational: {}", cli.t)))?;
            let g = load(input)?;
            let fan = stacky_fan(&newton_polygon(&classes(&g)).map_err(check)?).map_err(check)?;
            let fronts = front_arrangement(&fan, &t).map_err(|e| Fail::Usage(format!("--t: {e}")))?;
            for f in &fronts {
                let _ = writeln!(
                    s,
                    "geodesic ray={} n={} generator={} level={} coorientation={}",
                    f.ray,
                    f.n,
                    pt(f.generator),
                    fmt_rat(&f.level),
                    pt(f.coorientation)
                );
            }
            write_out(cli, &svg::fronts_svg(&fronts, cli.width))?;
        }
    }
    Ok(s)
}

fn run_check(cli: &Cli, g: &TorusGraph) -> Res {
    let mut s = String::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let base = weights(cli, g)?;
    let rep = sign_theorem_check(g, &base).map_err(check)?;
    for _ in 0..5 {
        sign_theorem_check(g, &random_weights(g, &mut rng)).map_err(check)?;
    }
    let strand = newton_polygon(&classes(g)).map_err(check)?;
    let kappa = kasteleyn_orientation(g).map_err(check)?;
    let det = spectral_polynomial(&kasteleyn_matrix(g, &base, &kappa).map_err(check)?).map_err(check)?;
    if det.newton().map_err(check)?.canonical() != strand {
        return Err(Fail::Check("FAIL: spectral and strand polygons differ".into()));
    }
    let reference = curve(g, &base)?;
    for _ in 0..10 {
        let mut unit = || rat(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let gb: Vec<Rat> = (0..g.black_count()).map(|_| unit()).collect();
        let gw: Vec<Rat> = (0..g.white_count()).map(|_| unit()).collect();
        let fb: Vec<Vec2> = (0..g.black_count()).map(|_| (rng.gen_range(-2..=2), rng.gen_range(-2..=2))).collect();
        let fw: Vec<Vec2> = (0..g.white_count()).map(|_| (rng.gen_range(-2..=2), rng.gen_range(-2..=2))).collect();
        let w = apply_gauge(g, &base, &gb, &gw).map_err(check)?;
        if curve(g, &w)? != reference || curve(&offset_gauge(g, &fb, &fw), &base)? != reference {
            return Err(Fail::Check("FAIL: spectral curve changed under a gauge".into()));
        }
    }
    s.push_str("OK\n");
    let sign = |v: Option<i8>| match v {
        Some(1) => "+",
        Some(_) => "-",
        None => ".",
    };
    let t = rep.parity_signs;
    let _ = writeln!(s, "signs (i mod 2, j mod 2): (0,0){} (0,1){} (1,0){} (1,1){}", sign(t[0][0]), sign(t[0][1]), sign(t[1][0]), sign(t[1][1]));
    for r in &rep.rows {
        let _ = writeln!(s, "class={} coefficient={} matchings={} sign={}", pt(r.class), fmt_rat(&r.coefficient), r.count, r.sign);
    }
    Ok(s)
}

fn run_commute(cli: &Cli, g: &TorusGraph) -> Res {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let seeds: Vec<_> = (0..cli.samples)
        .map(|_| face_coordinates(g, &random_weights(g, &mut rng)))
        .collect::<Result<_, _>>()
        .map_err(check)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
        .map_err(|e| Fail::Usage(format!("--jobs: {e}")))?;
    let reports: Vec<_> = pool.install(|| {
        use rayon::prelude::*;
        seeds.par_iter().map(commutativity_check).collect()
    });
    let mut s = String::new();
    let mut ok = true;
    for (k, r) in reports.into_iter().enumerate() {
        let r = r.map_err(check)?;
        let _ = writeln!(
            s,
            "sample {k}: {} Hamiltonian pairs, {} Casimir brackets, all zero: {}",
            r.pairs.len(),
            r.casimirs.len(),
            if r.all_vanish() { "yes" } else { "no" }
        );
        for (p, q, v) in r.pairs.iter().chain(&r.casimirs).filter(|t| t.2 != int(0)) {
            let _ = writeln!(s, "  {{H{}, c{}}} = {}", pt(*p), pt(*q), fmt_rat(v));
        }
        ok &= r.all_vanish();
    }
    if !ok {
        return Err(Fail::Check(s + "FAIL"));
    }
    s.push_str("OK\n");
    Ok(s)
}
