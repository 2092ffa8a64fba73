use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mstruct::construct::{
    all_examples, examples_report, line_in_p4, lines_in_p3, plane_in_p6, run_construction,
    ConstructionPlan,
};
use mstruct::report::Report;
use mstruct::script::{self, Config};
use mstruct::{MonomialOrder, Rational};

/// Exact ideal arithmetic and certified multiple structures.
#[derive(Parser, Debug)]
#[command(name = "mstruct", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Monomial order for rings that do not name one: lex, grevlex or block(k).
    #[arg(long, global = true, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,

    /// Truncation degree for local computations (searched for when absent).
    #[arg(long, global = true, value_name = "N")]
    trunc: Option<u32>,

    /// Write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    /// Affine chart for linear supports with parameters, as `var=1`.
    #[arg(long, global = true, value_name = "VAR=1", value_parser = parse_chart)]
    chart: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a script file.
    Run { script: PathBuf },
    /// Certify the worked examples.
    Examples {
        #[arg(long, value_enum, default_value_t = ExampleSet::All)]
        set: ExampleSet,
    },
    /// Run the step-by-step construction for one plan.
    Construct(ConstructArgs),
    /// Certify the structure described by an ideal file.
    Check { file: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExampleSet {
    All,
    P3,
    P4,
    P6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Case {
    A,
    B,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Length of the chain, at least 2.
    #[arg(short, long)]
    n: u32,
    #[arg(long, value_enum, ignore_case = true, default_value_t = Case::A)]
    case: Case,
    /// Comma-separated α₂, …, α_(n-1) for case A.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    alphas: Vec<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    r: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    s: Option<Rational>,
    #[arg(long, default_value_t = 2)]
    codim: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    lambda: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    mu: Option<Rational>,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|e: mstruct::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|_| format!("not a rational number: '{s}'"))
}

fn parse_chart(s: &str) -> Result<String, String> {
    match s.split_once('=') {
        Some((v, "1")) if !v.trim().is_empty() => Ok(v.trim().to_string()),
        _ => Err(format!("expected VAR=1, got '{s}'")),
    }
}

impl ConstructArgs {
    fn plan(&self) -> ConstructionPlan {
        let mut plan = match self.case {
            Case::A => ConstructionPlan::type_a(self.n, self.alphas.clone()),
            Case::B => ConstructionPlan::type_b(self.n),
        };
        plan = plan.with_codim(self.codim);
        let r = self.r.clone().unwrap_or_else(|| plan.r.clone());
        let s = self.s.clone().unwrap_or_else(|| plan.s.clone());
        let lambda = self.lambda.clone().unwrap_or_else(|| plan.lambda.clone());
        let mu = self.mu.clone().unwrap_or_else(|| plan.mu.clone());
        plan.with_values(r, s).with_shear(lambda, mu)
    }

    fn label(&self) -> String {
        match self.case {
            Case::A => format!("construct/A/n{}", self.n),
            Case::B => format!("construct/B/n{}", self.n),
        }
    }
}

fn execute(cli: &Cli, config: &Config) -> Result<Report, String> {
    let read = |p: &PathBuf| fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
    let report = match &cli.command {
        Command::Run { script } => script::run(&read(script)?, config),
        Command::Check { file } => script::check_ideal_file(&read(file)?, config),
        Command::Construct(args) => {
            if args.case == Case::B && !args.alphas.is_empty() {
                return Err("--alphas applies to case A only".into());
            }
            run_construction(&args.plan()).map(|c| c.report(&args.label()))
        }
        Command::Examples { set } => {
            let list = match set {
                ExampleSet::All => all_examples(),
                ExampleSet::P3 => lines_in_p3(),
                ExampleSet::P4 => line_in_p4(0).and_then(|a| Ok(vec![a, line_in_p4(1)?])),
                ExampleSet::P6 => plane_in_p6(0).map(|e| vec![e]),
            };
            list.map(|l| examples_report(&l))
        }
    };
    report.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        order: cli.global.order,
        trunc: cli.global.trunc,
        chart: cli.global.chart.clone(),
    };
    let report = match execute(&cli, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.render_text());
    if let Some(path) = &cli.global.report {
        if let Err(e) = fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        let failed = report.checks().filter(|c| !c.ok()).count();
        eprintln!("{failed} check(s) failed");
        ExitCode::FAILURE
    }
}
