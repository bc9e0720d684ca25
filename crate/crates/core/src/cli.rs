//! The `knotcert` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! and input errors, 3 when a budget ran out before a decision.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bistellar::{reduce, write_trace, FrozenFaces, ReduceConfig};
use crate::catalog::{load_entry, verify_catalog, CatalogConfig, CatalogName};
use crate::complex::{parse_cplx, parse_cplx_maximal, to_cplx_string, Face, Pseudomanifold, SimplicialComplex, Vertex};
use crate::iso::{are_isomorphic, automorphism_group};
use crate::knot::{certify_nonconstructible, count_homs, Certification, FiniteGroup, KnotConfig};
use crate::moves::{cone, family_ball, family_sphere, one_point_suspension};
use crate::recognition::{verify_ball3, verify_sphere, RecognitionConfig, Verdict};
use crate::shelling::{find_shelling, free_facets, is_constructible, Constructibility, ShellingError, ShellingResult};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "knotcert", version, about = "Certify knotted, non-constructible balls and spheres")]
struct Cli {
    /// Output style: readable text or `key=value` records.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for link checks and searches.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args, Debug, Clone)]
struct RecognitionArgs {
    /// Accepted bistellar flips per seed.
    #[arg(long, default_value_t = 100_000)]
    flips: usize,
    /// Comma-separated reduction seeds, tried in order.
    #[arg(long, value_delimiter = ',', default_values_t = [0u64, 1, 2])]
    seeds: Vec<u64>,
}

impl RecognitionArgs {
    fn config(&self) -> RecognitionConfig {
        RecognitionConfig { flip_budget: self.flips, seeds: self.seeds.clone() }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    Ball3,
    Sphere3,
    Sphere4,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f-vector, Euler characteristic and pseudomanifold status.
    Info { file: PathBuf },
    /// Recognize a 3-ball, 3-sphere or 4-sphere.
    Verify {
        file: PathBuf,
        #[arg(long = "as", value_enum)]
        shape: Shape,
        #[command(flatten)]
        recognition: RecognitionArgs,
        /// Write the certifying flip sequence here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Search for a shelling order.
    Shelling {
        file: PathBuf,
        /// Search-node budget.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Facets of a 3-ball whose removal leaves a 3-ball.
    FreeFacets {
        file: PathBuf,
        #[command(flatten)]
        recognition: RecognitionArgs,
    },
    /// Budgeted constructibility search.
    Constructible {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Look for a knotted triangle.
    Knot {
        file: PathBuf,
        /// Target groups: S3, A4, D4, or a path to a group table.
        #[arg(long, value_delimiter = ',', default_values_t = ["S3".to_string(), "A4".to_string(), "D4".to_string()])]
        groups: Vec<String>,
        /// Barycentric subdivisions before removing the knot.
        #[arg(long, default_value_t = 1)]
        subdivisions: usize,
    },
    /// Build complexes.
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Write the complex here instead of standard output.
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Shrink a triangulation by bistellar flips.
    Reduce {
        file: PathBuf,
        /// Faces to keep, e.g. "1 2;1 3;2 3". May be repeated.
        #[arg(long)]
        freeze: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Accepted-flip budget.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide isomorphism of two complexes.
    Iso { a: PathBuf, b: PathBuf },
    /// Automorphism group order and generators.
    Auts { file: PathBuf },
    /// The embedded complexes.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Cone with a new apex (default: largest vertex + 1).
    Cone {
        file: PathBuf,
        #[arg(long)]
        apex: Option<Vertex>,
    },
    /// One-point suspension at a vertex.
    Ops {
        file: PathBuf,
        #[arg(long)]
        vertex: Vertex,
        /// New vertex (default: largest vertex + 1).
        #[arg(long)]
        fresh: Option<Vertex>,
    },
    /// Non-constructible d-sphere with d+10 vertices.
    FamilySphere {
        #[arg(long)]
        dim: usize,
    },
    /// Non-constructible d-ball with d+9 vertices and 37 facets.
    FamilyBall {
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    /// Print one entry, or write every entry into a directory.
    Export {
        name: Option<String>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Check every claim about the embedded complexes.
    Verify {
        #[command(flatten)]
        recognition: RecognitionArgs,
        /// Also run the exhaustive shelling search with this node budget.
        #[arg(long)]
        shelling_budget: Option<usize>,
    },
}

/// Ordered output records.
struct Report {
    format: Format,
    lines: Vec<(String, String)>,
    body: String,
}

impl Report {
    fn new(format: Format) -> Self {
        Report { format, lines: Vec::new(), body: String::new() }
    }

    fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.lines {
            match self.format {
                Format::Text => writeln!(s, "{k}: {v}").unwrap(),
                Format::Kv => writeln!(s, "{k}={v}").unwrap(),
            }
        }
        s.push_str(&self.body);
        s
    }
}

struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_cplx(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn faces_str(fs: &[Face]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
}

fn spaced(f: &Face) -> String {
    f.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn status_str(p: Pseudomanifold) -> &'static str {
    match p {
        Pseudomanifold::Closed => "closed",
        Pseudomanifold::WithBoundary => "with_boundary",
        Pseudomanifold::No => "no",
    }
}

fn verdict_code<C>(v: &Verdict<C>) -> i32 {
    match v {
        Verdict::Yes(_) => EXIT_PASS,
        Verdict::No(_) => EXIT_FAIL,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn parse_frozen(specs: &[String]) -> Result<FrozenFaces, Failure> {
    let mut faces = Vec::new();
    for spec in specs {
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let vs: Result<Vec<Vertex>, _> = part.split_whitespace().map(str::parse).collect();
            let vs = vs.map_err(|_| usage(format!("bad frozen face {part:?}")))?;
            faces.push(Face::new(vs));
        }
    }
    Ok(FrozenFaces::new(faces))
}

fn load_group(spec: &str) -> Result<FiniteGroup, Failure> {
    match FiniteGroup::builtin(spec) {
        Ok(g) => Ok(g),
        Err(_) => {
            let text = std::fs::read_to_string(spec).map_err(|e| usage(format!("group {spec}: {e}")))?;
            let name = Path::new(spec).file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
            FiniteGroup::parse(name, &text).map_err(|e| usage(format!("group {spec}: {e}")))
        }
    }
}

fn execute(cli: &Cli) -> Result<(Report, i32), Failure> {
    let mut r = Report::new(cli.format);
    r.kv("command", command_name(&cli.command));
    let code = match &cli.command {
        Command::Info { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let c = parse_cplx_maximal(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            r.kv("dim", c.dim())
                .kv("vertices", c.num_vertices())
                .kv("facets", c.num_facets())
                .kv("f_vector", c.f_vector())
                .kv("euler_characteristic", c.euler_characteristic())
                .kv("pseudomanifold", status_str(c.pseudomanifold_status()));
            EXIT_PASS
        }
        Command::Verify { file, shape, recognition, trace } => {
            let c = read_complex(file)?;
            let cfg = recognition.config();
            r.kv("flip_budget", cfg.flip_budget).kv("seeds", format!("{:?}", cfg.seeds));
            let (label, code, cert) = match shape {
                Shape::Ball3 => {
                    let v = verify_ball3(&c, &cfg);
                    let cert = match &v {
                        Verdict::Yes(b) => Some((b.sphere.clone(), Some(b.apex))),
                        _ => None,
                    };
                    (v.label(), verdict_code(&v), (cert, witness_of(&v)))
                }
                Shape::Sphere3 | Shape::Sphere4 => {
                    let d = if *shape == Shape::Sphere3 { 3 } else { 4 };
                    let v = verify_sphere(&c, d, &cfg).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
                    let cert = match &v {
                        Verdict::Yes(s) => Some((s.clone(), None)),
                        _ => None,
                    };
                    (v.label(), verdict_code(&v), (cert, witness_of(&v)))
                }
            };
            r.kv("result", label);
            if let Some(w) = cert.1 {
                r.kv("witness", w);
            }
            if let Some((sphere, apex)) = cert.0 {
                if let Some(a) = apex {
                    r.kv("cone_apex", a);
                }
                r.kv("certificate_seed", sphere.seed).kv("certificate_flips", sphere.trace.len());
                if let Some(path) = trace {
                    let config = ReduceConfig { budget: cfg.flip_budget, ..ReduceConfig::with_seed(sphere.seed) };
                    write_file(path, &write_trace(&config, &sphere.trace))?;
                    r.kv("trace", path.display());
                }
            }
            code
        }
        Command::Shelling { file, budget } => {
            let c = read_complex(file)?;
            r.kv("budget", budget);
            let s = find_shelling(&c, *budget);
            r.kv("result", s.label());
            match &s {
                ShellingResult::Shellable(cert) => {
                    r.kv("replays", cert.verify(&c)).kv("order", faces_str(&cert.order));
                    EXIT_PASS
                }
                ShellingResult::NotShellable { nodes } => {
                    r.kv("nodes", nodes);
                    EXIT_FAIL
                }
                ShellingResult::Unknown { nodes } => {
                    r.kv("nodes", nodes);
                    EXIT_UNKNOWN
                }
            }
        }
        Command::FreeFacets { file, recognition } => {
            let c = read_complex(file)?;
            let cfg = recognition.config();
            r.kv("flip_budget", cfg.flip_budget).kv("seeds", format!("{:?}", cfg.seeds));
            match free_facets(&c, &cfg) {
                Ok(ff) => {
                    r.kv("count", ff.len()).kv("strongly_nonshellable", ff.is_empty());
                    for f in &ff {
                        r.kv("free_facet", spaced(f));
                    }
                    EXIT_PASS
                }
                Err(e @ ShellingError::NotABall(_)) => {
                    r.kv("error", e);
                    EXIT_FAIL
                }
                Err(e @ ShellingError::Undecided(_)) => {
                    r.kv("error", e);
                    EXIT_UNKNOWN
                }
            }
        }
        Command::Constructible { file, budget } => {
            let c = read_complex(file)?;
            r.kv("budget", budget);
            let res = is_constructible(&c, *budget);
            r.kv("result", res.label());
            match &res {
                Constructibility::Yes(tree) => {
                    r.kv("tree_verifies", tree.verify(&c)).kv("tree_depth", tree.depth());
                    EXIT_PASS
                }
                Constructibility::No => EXIT_FAIL,
                Constructibility::Unknown { nodes } => {
                    r.kv("nodes", nodes);
                    EXIT_UNKNOWN
                }
            }
        }
        Command::Knot { file, groups, subdivisions } => {
            let c = read_complex(file)?;
            let groups: Vec<FiniteGroup> = groups.iter().map(|g| load_group(g)).collect::<Result<_, _>>()?;
            let names: Vec<&str> = groups.iter().map(|g| g.name.as_str()).collect();
            r.kv("groups", names.join(",")).kv("subdivisions", subdivisions);
            let config = KnotConfig { groups, subdivisions: *subdivisions, ..KnotConfig::default() };
            match certify_nonconstructible(&c, &config) {
                Ok(Certification::Certified { witness, sphere, consequences }) => {
                    let group = config.groups.iter().find(|g| g.name == witness.group).expect("configured");
                    r.kv("result", "certified")
                        .kv("cycle", spaced(&witness.cycle))
                        .kv("presentation", &witness.presentation)
                        .kv("group", &witness.group)
                        .kv("images", format!("{:?}", witness.images))
                        .kv("witness_checks", witness.check(&sphere, group))
                        .kv(
                            "s3_homs",
                            count_homs(&witness.presentation, &FiniteGroup::symmetric3(), 8)
                                .map_or_else(|e| e.to_string(), |n| n.to_string()),
                        )
                        .kv("non_constructible", consequences.non_constructible)
                        .kv("non_shellable", consequences.non_shellable)
                        .kv("no_straight_embedding", consequences.no_straight_embedding);
                    EXIT_PASS
                }
                Ok(Certification::NoneFound { candidates }) => {
                    r.kv("result", "none_found").kv("candidates", candidates);
                    EXIT_UNKNOWN
                }
                Err(e) => {
                    r.kv("result", "error").kv("error", e);
                    EXIT_FAIL
                }
            }
        }
        Command::Construct { what, output } => {
            let c = match what {
                Construct::Cone { file, apex } => {
                    let c = read_complex(file)?;
                    cone(&c, apex.unwrap_or(c.max_vertex() + 1)).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?
                }
                Construct::Ops { file, vertex, fresh } => {
                    let c = read_complex(file)?;
                    one_point_suspension(&c, *vertex, fresh.unwrap_or(c.max_vertex() + 1))
                        .map_err(|e| Failure(EXIT_FAIL, e.to_string()))?
                }
                Construct::FamilySphere { dim } => {
                    family_sphere(*dim).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?
                }
                Construct::FamilyBall { dim } => family_ball(*dim).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?,
            };
            let text = to_cplx_string(&c);
            r.kv("f_vector", c.f_vector());
            match output {
                Some(path) => {
                    write_file(path, &text)?;
                    r.kv("output", path.display());
                }
                None => r.body = text,
            }
            EXIT_PASS
        }
        Command::Reduce { file, freeze, seed, budget, trace, output } => {
            let c = read_complex(file)?;
            let frozen = parse_frozen(freeze)?;
            let config = ReduceConfig { budget: *budget, frozen, ..ReduceConfig::with_seed(*seed) };
            r.kv("seed", seed).kv("budget", budget).kv("frozen", faces_str(config.frozen.faces()));
            let red = reduce(&c, &config);
            r.kv("f_vector_before", c.f_vector())
                .kv("f_vector_after", red.complex.f_vector())
                .kv("trace_length", red.trace.len())
                .kv("accepted", red.accepted)
                .kv("steps", red.steps)
                .kv("reheats", red.reheats)
                .kv("simplex_boundary", red.is_simplex_boundary());
            if let Some(path) = trace {
                write_file(path, &write_trace(&config, &red.trace))?;
                r.kv("trace", path.display());
            }
            match output {
                Some(path) => {
                    write_file(path, &to_cplx_string(&red.complex))?;
                    r.kv("output", path.display());
                }
                None => r.body = to_cplx_string(&red.complex),
            }
            EXIT_PASS
        }
        Command::Iso { a, b } => {
            let (ca, cb) = (read_complex(a)?, read_complex(b)?);
            match are_isomorphic(&ca, &cb) {
                Some(map) => {
                    let pairs: Vec<String> = map.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                    r.kv("result", "isomorphic").kv("map", pairs.join(" "));
                }
                None => {
                    r.kv("result", "not isomorphic");
                }
            }
            EXIT_PASS
        }
        Command::Auts { file } => {
            let c = read_complex(file)?;
            let g = automorphism_group(&c);
            r.kv("order", g.order);
            for p in &g.generators {
                r.kv("generator", p);
            }
            EXIT_PASS
        }
        Command::Catalog { what } => match what {
            CatalogCmd::List => {
                for name in CatalogName::ALL {
                    r.kv(name.as_str(), load_entry(name).f_vector());
                }
                EXIT_PASS
            }
            CatalogCmd::Export { name, dir } => {
                match (name, dir) {
                    (Some(n), None) => {
                        let entry: CatalogName = n.parse().map_err(usage)?;
                        r.lines.clear();
                        r.body = to_cplx_string(&load_entry(entry));
                    }
                    (None, Some(d)) => {
                        std::fs::create_dir_all(d).map_err(|e| usage(format!("{}: {e}", d.display())))?;
                        for entry in CatalogName::ALL {
                            let path = d.join(format!("{}.cplx", entry.as_str()));
                            write_file(&path, &to_cplx_string(&load_entry(entry)))?;
                            r.kv("wrote", path.display());
                        }
                    }
                    _ => return Err(usage("give either a catalog name or --dir")),
                }
                EXIT_PASS
            }
            CatalogCmd::Verify { recognition, shelling_budget } => {
                let cfg = CatalogConfig {
                    recognition: recognition.config(),
                    shelling_budget: *shelling_budget,
                    ..CatalogConfig::default()
                };
                r.kv("flip_budget", cfg.recognition.flip_budget)
                    .kv("seeds", format!("{:?}", cfg.recognition.seeds))
                    .kv("shelling_budget", shelling_budget.map_or("off".to_string(), |b| b.to_string()));
                let report = verify_catalog(&cfg);
                for claim in &report.claims {
                    let detail = if claim.detail.is_empty() { String::new() } else { format!(" {}", claim.detail) };
                    r.kv(&claim.name, format!("{}{detail}", if claim.passed { "pass" } else { "FAIL" }));
                }
                r.kv("claims", report.claims.len()).kv("all_passed", report.all_passed());
                if report.all_passed() {
                    EXIT_PASS
                } else {
                    EXIT_FAIL
                }
            }
        },
    };
    Ok((r, code))
}

fn witness_of<C>(v: &Verdict<C>) -> Option<String> {
    match v {
        Verdict::No(w) => Some(w.to_string()),
        Verdict::Unknown { seeds_tried, flips_used } => {
            Some(format!("seeds_tried={seeds_tried} flips_used={flips_used}"))
        }
        Verdict::Yes(_) => None,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Verify { .. } => "verify",
        Command::Shelling { .. } => "shelling",
        Command::FreeFacets { .. } => "free-facets",
        Command::Constructible { .. } => "constructible",
        Command::Knot { .. } => "knot",
        Command::Construct { .. } => "construct",
        Command::Reduce { .. } => "reduce",
        Command::Iso { .. } => "iso",
        Command::Auts { .. } => "auts",
        Command::Catalog { .. } => "catalog",
    }
}

/// Runs the command line with explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "cannot start {} workers: {e}", cli.jobs);
            return EXIT_USAGE;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok((report, code)) => {
            let _ = out.write_all(report.render().as_bytes());
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Runs the command line against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
