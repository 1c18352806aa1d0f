use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unicyclic::bounds::{audit, AuditConfig, AuditReport};
use unicyclic::enumerate::{
    enumerate_unicyclic_with_codes, extremal_search, EnumerationFilter, ExtremalSearchResult,
    SearchTarget,
};
use unicyclic::extremal::{build_h_member, ExtremalFamily};
use unicyclic::majorization::parse_real;
use unicyclic::verify::{verify, VerifyOptions, VerifySummary};
use unicyclic::{index, parse_edge_list, Error, FunctionSpec, Graph, IndexSpec, Mode};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "unicyclic",
    version,
    about = "Degree-based indices and extremal bounds for unicyclic graphs"
)]
struct Cli {
    /// Relative tolerance for floating-point comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Comma-separated α values (replaces the default grid).
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<String>,
    /// Comma-separated exdeg bases `a` (replaces the default grid).
    #[arg(long = "a", global = true, value_delimiter = ',')]
    a: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Worker threads, 0 = all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Restrict to graphs with this maximum degree.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Restrict to graphs with this many pendant vertices.
    #[arg(long, global = true)]
    pendants: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Tabular,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate indices on graph files ("-" reads stdin).
    Compute {
        #[arg(required = true)]
        files: Vec<String>,
        /// Comma-separated indices, e.g. M1,F,ID,NK,NK*,SEI_2,M1^0.5,W.
        #[arg(long, short, value_delimiter = ',', default_value = "M1,F,ID,NK,NK*")]
        index: Vec<String>,
    },
    /// Check a unicyclic graph against every catalog bound.
    Audit { file: String },
    /// Audit every unicyclic graph in a range such as 4..7 or 6.
    Verify { range: String },
    /// List unicyclic graphs on n vertices up to isomorphism.
    Enumerate { n: usize },
    /// Exhaustive minimum and maximum of an index over unicyclic graphs.
    ExtremalSearch {
        n: usize,
        /// Index to optimise.
        #[arg(long, short, conflicts_with = "function")]
        index: Option<String>,
        /// Function f: power(x), exdeg(x), identity, self_power.
        #[arg(long, short)]
        function: Option<String>,
        /// I (sum of f) or II (product of f).
        #[arg(long, default_value = "I")]
        mode: String,
    },
    /// Emit a member of an extremal family as an edge list.
    Construct {
        /// cycle, unthree, H, K, A or B
        family: String,
        n: usize,
        /// Δ for H and K, p for A and B.
        param: Option<usize>,
        /// Cycle length for H.
        #[arg(long)]
        cycle: Option<usize>,
        /// Comma-separated path lengths for H.
        #[arg(long, value_delimiter = ',')]
        paths: Vec<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
    Ok(text)
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    parse_edge_list(&read_input(path)?).map_err(|e| Failure::Domain(format!("{path}: {e}")))
}

fn parse_list(values: &[String]) -> Result<Vec<f64>, Failure> {
    values
        .iter()
        .map(|v| parse_real(v).map_err(Failure::from))
        .collect()
}

impl Cli {
    fn config(&self) -> Result<AuditConfig, Failure> {
        let mut cfg = AuditConfig {
            tolerance: self.tolerance,
            ..AuditConfig::default()
        };
        if !self.alpha.is_empty() {
            cfg.alpha_grid = parse_list(&self.alpha)?;
        }
        if !self.a.is_empty() {
            cfg.a_grid = parse_list(&self.a)?;
        }
        cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(cfg)
    }

    fn filter(&self) -> EnumerationFilter {
        EnumerationFilter {
            max_degree: self.max_degree,
            pendant_count: self.pendants,
        }
    }
}

fn cmd_compute(cli: &Cli, files: &[String], names: &[String]) -> CmdResult {
    let mut specs = names
        .iter()
        .map(|s| IndexSpec::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    for a in parse_list(&cli.alpha)? {
        specs.push(IndexSpec::M1Alpha(a));
    }
    for a in parse_list(&cli.a)? {
        specs.push(IndexSpec::sei(a)?);
    }
    let mut out = String::new();
    if cli.output == Output::Tabular {
        out.push_str("graph,index,value,exact,mode\n");
    }
    for file in files {
        let g = load_graph(file)?;
        for spec in &specs {
            let v = index::eval(spec, &g)
                .map_err(|e| Failure::Domain(format!("{file}: {spec}: {e}")))?;
            match cli.output {
                Output::Text => {
                    let exact = if v.is_exact() && v.exact_repr() != v.to_string() {
                        format!(" = {}", v.exact_repr())
                    } else {
                        String::new()
                    };
                    out.push_str(&format!("{file}\t{spec}\t{v}{exact}\t[{}]\n", v.mode()));
                }
                Output::Tabular => {
                    out.push_str(&format!(
                        "{file},{spec},{v},{},{}\n",
                        v.exact_repr(),
                        v.mode()
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn render_audit(cli: &Cli, report: &AuditReport) -> String {
    match cli.output {
        Output::Text => report.to_text(),
        Output::Tabular => format!(
            "{}\n{}",
            AuditReport::TABULAR_HEADER,
            report.to_tabular_rows()
        ),
    }
}

fn cmd_audit(cli: &Cli, file: &str) -> Result<(String, bool), Failure> {
    let g = load_graph(file)?;
    if !g.is_unicyclic() {
        return Err(Failure::Domain(format!(
            "{file}: graph is not unicyclic (needs connected with m = n)"
        )));
    }
    if g.vertex_count() < 4 {
        return Err(Failure::Domain(format!("{file}: audit needs n >= 4")));
    }
    let report = audit(&g, &cli.config()?)?;
    Ok((render_audit(cli, &report), report.is_clean()))
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let body = text.trim().trim_start_matches("n=");
    let bad = || Failure::Usage(format!("invalid range '{text}', expected N or A..B"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match body.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => {
            let n = parse(body)?;
            Ok((n, n))
        }
    }
}

fn cmd_verify(cli: &Cli, range: &str) -> Result<(String, bool), Failure> {
    let (n_min, n_max) = parse_range(range)?;
    let opts = VerifyOptions {
        n_min,
        n_max,
        filter: cli.filter(),
        config: cli.config()?,
        jobs: cli.jobs,
    };
    let summary: VerifySummary = verify(&opts)?;
    let text = match cli.output {
        Output::Text => format!("{summary}\n"),
        Output::Tabular => summary.to_tabular(),
    };
    Ok((text, summary.is_clean()))
}

fn cmd_enumerate(cli: &Cli, n: usize) -> CmdResult {
    let mut out = String::new();
    for (code, g) in enumerate_unicyclic_with_codes(n, &cli.filter())? {
        out.push_str(&format!(
            "# n={} max_degree={} pendants={} degrees={} code={}\n",
            n,
            g.max_degree(),
            g.pendant_count(),
            g.degree_sequence()?,
            code
        ));
        out.push_str(&g.to_edge_list());
        out.push('\n');
    }
    Ok(out)
}

fn render_search(cli: &Cli, r: &ExtremalSearchResult) -> String {
    let show = |v: &Option<unicyclic::IndexValue>| {
        v.as_ref()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into())
    };
    match cli.output {
        Output::Text => {
            let mut out = format!("target={} n={} classes={}\n", r.target, r.n, r.class_size);
            out.push_str(&format!(
                "min={} attained by {} class(es)\n",
                show(&r.min),
                r.minimizers.len()
            ));
            for (code, _) in &r.minimizers {
                out.push_str(&format!("  min {code}\n"));
            }
            out.push_str(&format!(
                "max={} attained by {} class(es)\n",
                show(&r.max),
                r.maximizers.len()
            ));
            for (code, _) in &r.maximizers {
                out.push_str(&format!("  max {code}\n"));
            }
            out
        }
        Output::Tabular => {
            let mut out = String::from("target,n,extremum,value,code\n");
            for (kind, list) in [("min", &r.minimizers), ("max", &r.maximizers)] {
                for (code, v) in list {
                    out.push_str(&format!("{},{},{kind},{v},{code}\n", r.target, r.n));
                }
            }
            out
        }
    }
}

fn cmd_search(
    cli: &Cli,
    n: usize,
    index: &Option<String>,
    function: &Option<String>,
    mode: &str,
) -> CmdResult {
    let target = match (index, function) {
        (Some(spec), None) => SearchTarget::Index(IndexSpec::parse(spec)?),
        (None, Some(f)) => {
            let mode = match mode {
                "I" | "i" | "additive" => Mode::Additive,
                "II" | "ii" | "multiplicative" => Mode::Multiplicative,
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown mode '{other}', expected I or II"
                    )))
                }
            };
            SearchTarget::Function(FunctionSpec::parse(f)?, mode)
        }
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --index or --function".into(),
            ))
        }
    };
    let r = extremal_search(&target, n, &cli.filter(), cli.tolerance)?;
    Ok(render_search(cli, &r))
}

fn cmd_construct(
    family: &str,
    n: usize,
    param: Option<usize>,
    cycle: Option<usize>,
    paths: &[usize],
) -> CmdResult {
    let need =
        |what: &str| param.ok_or_else(|| Failure::Usage(format!("family {family} needs {what}")));
    let fam = match family.to_ascii_lowercase().as_str() {
        "cycle" | "c" => ExtremalFamily::Cycle { n },
        "unthree" | "u" | "un3" => ExtremalFamily::UnThree { n },
        "h" => ExtremalFamily::H {
            n,
            delta: need("Δ")?,
        },
        "k" => ExtremalFamily::K {
            n,
            delta: need("Δ")?,
        },
        "a" => ExtremalFamily::SeqA { n, p: need("p")? },
        "b" => ExtremalFamily::SeqB { n, p: need("p")? },
        other => return Err(Failure::Usage(format!("unknown family '{other}'"))),
    };
    let custom = cycle.is_some() || !paths.is_empty();
    let g = match (fam, custom) {
        (ExtremalFamily::H { n, delta }, true) => {
            let k = cycle.ok_or_else(|| Failure::Usage("--paths needs --cycle".into()))?;
            build_h_member(n, delta, k, paths)?
        }
        (_, true) => {
            return Err(Failure::Usage(
                "--cycle and --paths apply to family H only".into(),
            ))
        }
        _ => fam.representative()?,
    };
    Ok(format!(
        "# family {fam}\n# degrees {}\n# family sequence {}\n{}",
        g.degree_sequence()?,
        fam.sequence()?,
        g.to_edge_list()
    ))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(Failure::Usage("--tolerance must be positive".into()));
    }
    match &cli.command {
        Command::Compute { files, index } => cmd_compute(cli, files, index).map(|s| (s, true)),
        Command::Audit { file } => cmd_audit(cli, file),
        Command::Verify { range } => cmd_verify(cli, range),
        Command::Enumerate { n } => cmd_enumerate(cli, *n).map(|s| (s, true)),
        Command::ExtremalSearch {
            n,
            index,
            function,
            mode,
        } => cmd_search(cli, *n, index, function, mode).map(|s| (s, true)),
        Command::Construct {
            family,
            n,
            param,
            cycle,
            paths,
        } => cmd_construct(family, *n, *param, *cycle, paths).map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = run(&cli).and_then(|(text, clean)| {
        let mut stdout = io::stdout().lock();
        let _ = stdout.write_all(text.as_bytes());
        if clean {
            Ok(())
        } else {
            Err(Failure::Verify)
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Verify) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
