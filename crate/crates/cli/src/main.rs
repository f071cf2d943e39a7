use std::path::PathBuf;
use std::process::ExitCode;

use bicc::FinSetObj;
use bicc_cli::checks::{self, Check, Settings};
use bicc_cli::input::{self, InputError};
use bicc_cli::report::{CheckReport, SweepReport};
use bicc_cli::dot;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bicc", version, about = "Checks the distributivity and currying isomorphisms in finite instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Instance {
    Finset,
    Heyting,
    Terms,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Distrib,
    Curry,
    Adjunction,
    Mediator,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Check {
        match c {
            CheckArg::Distrib => Check::Distrib,
            CheckArg::Curry => Check::Curry,
            CheckArg::Adjunction => Check::Adjunction,
            CheckArg::Mediator => Check::Mediator,
        }
    }
}

#[derive(clap::Args)]
struct Common {
    /// Seeded samples for large hom-sets, or random environments for terms
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest base-set size in term interpretations
    #[arg(long, default_value_t = 3)]
    max_base_size: usize,
    /// Emit JSON instead of one line per check
    #[arg(long)]
    json: bool,
}

impl Common {
    fn settings(&self) -> Settings {
        Settings {
            trials: self.trials,
            seed: self.seed,
            max_base_size: self.max_base_size,
            ..Settings::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run one check on one set of parameters
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        #[arg(long, value_enum, default_value = "finset")]
        instance: Instance,
        /// Sizes of A,B,C (finset)
        #[arg(long)]
        sizes: Option<String>,
        /// JSON file of named sets (finset)
        #[arg(long)]
        sets: Option<PathBuf>,
        /// divisors:N, downset:<poset.json>, or a lattice JSON file (heyting)
        #[arg(long)]
        lattice: Option<String>,
        /// Three objects x,y,z: set names, lattice elements or types
        #[arg(long)]
        objects: Option<String>,
        /// Size of the mediator's target D (finset); defaults to (A×B)+(A×C)
        #[arg(long)]
        codomain_size: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every check over a family of parameters
    Sweep {
        #[arg(long, value_enum, default_value = "finset")]
        instance: Instance,
        /// Largest set size k; triples range over {0..k}³ (finset)
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Largest poset for down-set lattices (heyting)
        #[arg(long, default_value_t = 3)]
        max_poset: usize,
        /// Also sweep divisor lattices 1..=N (heyting)
        #[arg(long, default_value_t = 0)]
        max_divisor: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Print a construction diagram (1-5) as dot
    EmitDot {
        id: String,
        /// Instantiate in finite sets of these sizes instead of symbolically
        #[arg(long)]
        sizes: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            check,
            instance,
            sizes,
            sets,
            lattice,
            objects,
            codomain_size,
            common,
        } => {
            let check = Check::from(check);
            let settings = common.settings();
            let report = verify(check, instance, sizes, sets, lattice, objects, codomain_size, &settings)
                .unwrap_or_else(|(source, e)| checks::rejected(check, instance_name(instance), &source, &e, &settings));
            emit(&report, common.json);
            report.verdict.exit_code()
        }
        Command::Sweep {
            instance,
            max_size,
            max_poset,
            max_divisor,
            common,
        } => {
            let settings = common.settings();
            let reports = match instance {
                Instance::Finset => checks::sweep_finset(max_size, &settings),
                Instance::Heyting => checks::sweep_heyting(max_poset, max_divisor, &settings),
                Instance::Terms => checks::sweep_terms(&settings),
            };
            let sweep = SweepReport::new(reports);
            if common.json {
                println!("{}", serde_json::to_string_pretty(&sweep).expect("serializable"));
            } else {
                for r in &sweep.reports {
                    emit(r, false);
                }
                println!("{}", sweep.summary);
            }
            sweep.summary.verdict().exit_code()
        }
        Command::EmitDot { id, sizes } => emit_dot(&id, sizes.as_deref()),
    };
    ExitCode::from(code as u8)
}

fn instance_name(i: Instance) -> &'static str {
    match i {
        Instance::Finset => "finset",
        Instance::Heyting => "heyting",
        Instance::Terms => "terms",
    }
}

fn emit(report: &CheckReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        return;
    }
    println!("{}", report.line());
    if let Some(cx) = &report.counterexample {
        println!("{}", serde_json::to_string_pretty(cx).expect("serializable"));
    }
}

type Rejection = (String, InputError);

#[allow(clippy::too_many_arguments)]
fn verify(
    check: Check,
    instance: Instance,
    sizes: Option<String>,
    sets: Option<PathBuf>,
    lattice: Option<String>,
    objects: Option<String>,
    codomain_size: Option<usize>,
    settings: &Settings,
) -> Result<CheckReport, Rejection> {
    let tag = |source: &str| {
        let source = source.to_string();
        move |e: InputError| (source, e)
    };
    let names = objects
        .as_deref()
        .map(input::parse_objects)
        .transpose()
        .map_err(tag("--objects"))?;
    match instance {
        Instance::Finset => {
            let objs = match (&sets, &sizes) {
                (Some(path), _) => input::load_sets(path, names.as_ref()).map_err(tag(&path.display().to_string()))?,
                (None, Some(s)) => {
                    let [a, b, c] = input::parse_sizes(s).map_err(tag("--sizes"))?;
                    [FinSetObj::base("A", a), FinSetObj::base("B", b), FinSetObj::base("C", c)]
                }
                (None, None) => return Err(tag("--sizes")(InputError::new("finset needs --sizes or --sets"))),
            };
            let d = codomain_size.map(|n| FinSetObj::base("D", n));
            Ok(checks::finset(check, &objs, d.as_ref(), settings))
        }
        Instance::Heyting => {
            let spec = lattice.ok_or_else(|| ("--lattice".to_string(), InputError::new("heyting needs --lattice")))?;
            let (name, l) = input::load_lattice(&spec).map_err(tag(&spec))?;
            let h = input::heyting(l).map_err(tag(&spec))?;
            let objs = names
                .as_ref()
                .map(|n| input::lattice_objects(&h, n))
                .transpose()
                .map_err(tag("--objects"))?;
            Ok(checks::heyting(check, &h, &name, objs.as_ref(), settings))
        }
        Instance::Terms => {
            let names = names.unwrap_or_else(|| ["A", "B", "C"].map(String::from));
            let objs = input::type_objects(&names).map_err(tag("--objects"))?;
            Ok(checks::terms(check, &objs, settings))
        }
    }
}

fn emit_dot(id: &str, sizes: Option<&str>) -> i32 {
    let id = match id.parse::<u8>() {
        Ok(n) if dot::DIAGRAMS.contains(&n) => n,
        _ => {
            eprintln!("error: unknown diagram {id:?}; expected 1 to 5");
            return 2;
        }
    };
    let diagram = match sizes.map(input::parse_sizes).transpose() {
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
        Ok(None) => dot::symbolic(id),
        Ok(Some(s)) => dot::finset(id, s),
    };
    match diagram {
        Ok(d) => {
            print!("{}", d.to_dot());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
