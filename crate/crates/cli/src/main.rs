use std::io::{self, Read};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use bandbraid::braid::{band_to_artin, closure_profile, parse_word, BandWord, InputMode};
use bandbraid::fdtc::{check_main_hypotheses, dehornoy_floor, fdtc_interval};
use bandbraid::foliation::{
    ab_stabilization, coherence_run, defect_from_foliation, euler_and_sl, extended_graph,
    fdtc_upper_bound, key_lemma_check, negative_elliptic_bound, stabilize_all_ab, validate_complex,
    CoherenceEvent, CoherenceState, DefectBound, FoliationComplex,
};
use bandbraid::garside::{is_rigid, is_strongly_quasipositive_closure, left_normal_form};
use bandbraid::lab::{
    enumerate_and_verify, run_scenario, scenario_names, BatchRecord, EnumerateConfig, Property,
    Sweep,
};
use bandbraid::par::Execution;
use bandbraid::surface::{build_surface, component_genera, defect_report, surface_stats};
use bandbraid::Error;

#[derive(Parser)]
#[command(name = "bandbraid", version, about = "Band-generator braid words, Bennequin surfaces and open book foliations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Append the elapsed time of each computation.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Args)]
struct WordArgs {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Read the word in Artin generators `a1^-1 a2 ...`.
    #[arg(long)]
    artin: bool,
    /// Braid word, e.g. "s(1,3) s(2,4)^-1".
    word: String,
}

impl WordArgs {
    fn parse(&self) -> Result<BandWord, Error> {
        let mode = if self.artin { InputMode::Artin } else { InputMode::Band };
        parse_word(&self.word, self.n, mode)
    }
}

#[derive(Args)]
struct ComplexArgs {
    /// Foliation complex file, `-` for standard input.
    file: String,
}

impl ComplexArgs {
    fn load(&self) -> Result<FoliationComplex, Failure> {
        let text = if self.file == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(&self.file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", self.file)))?
        };
        Ok(text.parse()?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a word and print it in band and Artin generators.
    Parse(WordArgs),
    /// Self-linking number of the closure.
    Sl(WordArgs),
    /// Bennequin defect given the genus of the closure.
    Defect {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        genus: u64,
    },
    /// Bennequin surface statistics.
    Surface {
        #[command(flatten)]
        word: WordArgs,
        /// Also report every connected component.
        #[arg(long)]
        components: bool,
    },
    /// Left normal form in the dual Garside structure.
    Nf(WordArgs),
    /// Infimum of the word.
    Inf(WordArgs),
    /// Strong quasipositivity of the closure via the summit infimum.
    Sqp(WordArgs),
    /// Rigidity of the normal form.
    Rigid(WordArgs),
    /// Dehornoy floor.
    Floor(WordArgs),
    /// Interval containing the fractional Dehn twist coefficient.
    Fdtc {
        #[command(flatten)]
        word: WordArgs,
        /// Defect, to test the large-coefficient hypotheses.
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Validate a foliation complex.
    FolCheck(ComplexArgs),
    /// Extended graph and the valence bound.
    FolGraph(ComplexArgs),
    /// ab-stabilization along one region, or along all of them.
    FolStab {
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        region: Option<u32>,
        #[arg(long)]
        all: bool,
    },
    /// Defect and FDTC bounds from a foliation, or the constraint on
    /// negative elliptic points from a lower bound on the coefficient.
    FolBound {
        /// Foliation complex file, `-` for standard input.
        #[arg(required_unless_present = "c_lower")]
        file: Option<String>,
        #[arg(long)]
        binding: Option<String>,
        /// Lower bound on the coefficient, e.g. "5/2".
        #[arg(long, requires_all = ["delta", "k"], conflicts_with = "file")]
        c_lower: Option<String>,
        #[arg(long)]
        delta: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Run a sequence of coherence events on the c-circle counts.
    Coherence {
        /// Initial counts as "coherent,incoherent".
        #[arg(long, default_value = "0,0")]
        start: String,
        /// Events: 1 2 3a 3b 4a 4b aa.
        events: Vec<String>,
    },
    /// Run a worked-example scenario.
    Scenario {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Exhaustive or seeded sweep checking a property on every word.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
        /// sl-markov, nf-vs-oracle, sqp-sharp, lemma33 or garside.
        #[arg(long)]
        property: String,
        /// Seeded sweep instead of an exhaustive one.
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    /// Exit 1: the input is well formed but mathematically inconsistent.
    Inconsistent(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_inconsistency() {
            Failure::Inconsistent(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

struct Report {
    records: Vec<BatchRecord>,
    /// Set when the mathematics rejects the input after output was produced.
    inconsistency: Option<String>,
}

impl Report {
    fn one(r: BatchRecord) -> Self {
        Report {
            records: vec![r],
            inconsistency: None,
        }
    }
}

fn rec(op: &str, input: impl Into<String>) -> BatchRecord {
    BatchRecord::new(op, input)
}

fn run(cmd: &Command) -> Result<Report, Failure> {
    Ok(match cmd {
        Command::Parse(a) => {
            let w = a.parse()?;
            Report::one(
                rec("parse", &a.word)
                    .field("strands", w.strands())
                    .field("letters", w.len())
                    .field("band", &w)
                    .field("artin", band_to_artin(&w))
                    .field("exp", w.exponent_sum())
                    .field("positive", w.is_positive()),
            )
        }
        Command::Sl(a) => {
            let w = a.parse()?;
            let p = closure_profile(&w);
            Report::one(
                rec("sl", &a.word)
                    .field("sl", w.self_linking())
                    .field("exp", w.exponent_sum())
                    .field("strands", w.strands())
                    .field("components", p.component_count)
                    .field("knot", p.is_knot()),
            )
        }
        Command::Defect { word, genus } => {
            let w = word.parse()?;
            let d = defect_report(&w, *genus)?;
            let mut r = rec("defect", &word.word)
                .field("sl", d.sl)
                .field("minus_chi", d.minus_chi)
                .field("defect", d.defect)
                .field("negative_bands", d.negative_bands)
                .field("minimal_genus_consistent", d.minimal_genus_consistent);
            if let (Some(g), Some(gap)) = (d.surface_genus, d.genus_gap()) {
                r.push("surface_genus", g);
                r.push("genus_gap", gap);
            }
            Report::one(r)
        }
        Command::Surface { word, components } => {
            let w = word.parse()?;
            let f = build_surface(&w);
            let s = surface_stats(&f);
            let mut r = rec("surface", &word.word)
                .field("disks", f.disks())
                .field("bands", f.bands().len())
                .field("euler_char", s.euler_char)
                .field("components", s.components)
                .field("boundary_components", s.boundary_components)
                .field("genus", s.genus.map_or("disconnected".to_string(), |g| g.to_string()))
                .field("negative_bands", s.negative_bands)
                .field("positive_bands", s.positive_bands)
                .field("non_fibered_hint", s.non_fibered_hint);
            if *components {
                for (k, c) in component_genera(&f).iter().enumerate() {
                    let disks: Vec<String> = c.disks.iter().map(usize::to_string).collect();
                    r.push(
                        format!("component{}", k + 1),
                        format!(
                            "disks {} bands {} chi {} boundary {} genus {}",
                            disks.join(","),
                            c.bands,
                            c.euler_char,
                            c.boundary_components,
                            c.genus
                        ),
                    );
                }
            }
            Report::one(r)
        }
        Command::Nf(a) => {
            let nf = left_normal_form(&a.parse()?);
            Report::one(
                rec("nf", &a.word)
                    .field("nf", &nf)
                    .field("inf", nf.inf())
                    .field("sup", nf.sup())
                    .field("canonical_length", nf.canonical_length())
                    .field("word", nf.to_band_word()),
            )
        }
        Command::Inf(a) => Report::one(rec("inf", &a.word).field("inf", left_normal_form(&a.parse()?).inf())),
        Command::Sqp(a) => {
            let v = is_strongly_quasipositive_closure(&a.parse()?);
            let mut r = rec("sqp", &a.word)
                .field("sqp", v.strongly_quasipositive)
                .field("summit_inf", v.summit.summit_inf)
                .field("cyclings", v.summit.cyclings);
            if let Some(g) = v.witness() {
                r.push("witness", if g.is_empty() { "identity".to_string() } else { g.to_string() });
                r.push("conjugate", &v.summit.conjugate);
            }
            Report::one(r)
        }
        Command::Rigid(a) => Report::one(rec("rigid", &a.word).field("rigid", is_rigid(&a.parse()?)?)),
        Command::Floor(a) => Report::one(rec("floor", &a.word).field("floor", dehornoy_floor(&a.parse()?)?)),
        Command::Fdtc { word, delta } => {
            let iv = fdtc_interval(&word.parse()?)?;
            let mut r = rec("fdtc", &word.word).field("interval", &iv);
            if let Some(d) = delta {
                let h = check_main_hypotheses(&iv, *d);
                r.push("main2", h.main2);
                r.push("main1", h.main1);
                r.push("sqp_clause", h.sqp_clause);
            }
            Report::one(r)
        }
        Command::FolCheck(a) => {
            let c = a.load()?;
            let violations = validate_complex(&c);
            let k = c.counts();
            let mut r = rec("fol-check", &a.file)
                .field("valid", violations.is_empty())
                .field("violations", violations.len())
                .field("e_pos", k.e_pos)
                .field("e_neg", k.e_neg)
                .field("h_pos", k.h_pos)
                .field("h_neg", k.h_neg);
            for (i, v) in violations.iter().enumerate() {
                r.push(format!("violation{}", i + 1), v);
            }
            if violations.is_empty() {
                let (chi, sl) = euler_and_sl(&c)?;
                r.push("chi", chi);
                r.push("sl", sl);
                r.push("bennequin", c.is_bennequin());
                Report::one(r)
            } else {
                Report {
                    records: vec![r],
                    inconsistency: Some(format!("{} violation(s)", violations.len())),
                }
            }
        }
        Command::FolGraph(a) => {
            let c = a.load()?;
            let g = extended_graph(&c)?;
            let mut r = rec("fol-graph", &a.file)
                .field("non_fake", g.non_fake.len())
                .field("fake", g.fake.len())
                .field("edges", g.edges.len());
            let valences: Vec<String> = g.valences().iter().map(|(v, k)| format!("{v}:{k}")).collect();
            r.push("valences", valences.join(" "));
            match key_lemma_check(&c) {
                Ok(l) => {
                    r.push("min_non_fake_valence", l.min_non_fake_valence);
                    r.push("bound", l.bound);
                    r.push("holds", l.holds);
                }
                Err(e) => r.push("key_lemma", format!("not applicable: {e}")),
            }
            Report::one(r)
        }
        Command::FolStab { complex, region, all } => {
            let c = complex.load()?;
            if *all {
                let (out, steps) = stabilize_all_ab(&c)?;
                let kinds: Vec<String> = steps
                    .iter()
                    .map(|s| format!("{}:{:?}", s.removed_hyperbolic, s.kind).to_lowercase())
                    .collect();
                Report::one(
                    rec("fol-stab", &complex.file)
                        .field("steps", steps.len())
                        .field("moves", kinds.join(" "))
                        .field("bennequin", out.is_bennequin())
                        .field("complex", out),
                )
            } else {
                let region = region.expect("clap requires --region without --all");
                let s = ab_stabilization(&c, region)?;
                Report::one(
                    rec("fol-stab", &complex.file)
                        .field("kind", format!("{:?}", s.kind).to_lowercase())
                        .field("removed_elliptic", s.removed_elliptic)
                        .field("removed_hyperbolic", s.removed_hyperbolic)
                        .field("bennequin", s.complex.is_bennequin())
                        .field("complex", &s.complex),
                )
            }
        }
        Command::FolBound {
            file,
            binding,
            c_lower,
            delta,
            k,
        } => {
            if let Some(c) = c_lower {
                let lower: BigRational = c
                    .parse()
                    .map_err(|_| Failure::Usage(format!("not a rational number: '{c}'")))?;
                let (d, k) = (delta.expect("required by clap"), k.expect("required by clap"));
                let bound = negative_elliptic_bound(&lower, d, k)?;
                Report::one(rec("fol-bound", c).field("constraint", bound))
            } else {
                let a = ComplexArgs {
                    file: file.clone().expect("required by clap"),
                };
                let c = a.load()?;
                c.ensure_valid()?;
                let d = defect_from_foliation(&c)?;
                let mut r = rec("fol-bound", &a.file)
                    .field("defect_bound", d.value())
                    .field("defect_exact", matches!(d, DefectBound::Exact(_)));
                if let Some(b) = binding {
                    r.push("fdtc_upper_bound", fdtc_upper_bound(&c, b)?);
                }
                Report::one(r)
            }
        }
        Command::Coherence { start, events } => {
            let (c, i): (u64, u64) = start
                .split_once(',')
                .and_then(|(c, i)| Some((c.trim().parse().ok()?, i.trim().parse().ok()?)))
                .ok_or_else(|| Failure::Usage(format!("--start expects 'coherent,incoherent', got '{start}'")))?;
            let events = events
                .iter()
                .map(|e| e.parse::<CoherenceEvent>())
                .collect::<Result<Vec<_>, _>>()?;
            let run = coherence_run(CoherenceState { coherent: c, incoherent: i }, &events)?;
            let history: Vec<String> = run
                .history
                .iter()
                .map(|s| format!("{},{}", s.coherent, s.incoherent))
                .collect();
            let f = run.final_state();
            Report::one(
                rec("coherence", events.iter().map(|e| e.label()).collect::<Vec<_>>().join(" "))
                    .field("history", history.join(" "))
                    .field("final", format!("{},{}", f.coherent, f.incoherent))
                    .field("final_incoherent", f.incoherent)
                    .field(
                        "delta",
                        format!("{:+},{:+}", f.coherent as i64 - c as i64, f.incoherent as i64 - i as i64),
                    )
                    .field("incoherent_monotone", run.incoherent_monotone)
                    .field("incoherent_closes", run.incoherent_closes)
                    .field("coherent_closes", run.coherent_closes)
                    .field("closure_holds", run.closure_holds()),
            )
        }
        Command::Scenario { name, all } => {
            let names: Vec<String> = if *all {
                scenario_names().into_iter().map(String::from).collect()
            } else {
                vec![name.clone().expect("required by clap")]
            };
            let mut records = Vec::new();
            let mut failed = 0;
            for n in &names {
                let report = run_scenario(n)?;
                for c in &report.checks {
                    let actual = c.actual.clone().unwrap_or_else(|| "missing".into());
                    if !c.passed() {
                        failed += 1;
                    }
                    records.push(
                        rec("scenario", n)
                            .field("fact", &c.key)
                            .field(&c.key, &actual)
                            .field("expected", &c.expected)
                            .field("source", c.source)
                            .field("status", if c.passed() { "pass" } else { "FAIL" }),
                    );
                }
            }
            Report {
                records,
                inconsistency: (failed > 0).then(|| format!("{failed} scenario check(s) failed")),
            }
        }
        Command::Enumerate {
            n,
            max_length,
            property,
            seed,
            samples,
            sequential,
        } => {
            let property: Property = property.parse()?;
            let sweep = match (seed, samples) {
                (Some(seed), Some(samples)) => Sweep::Seeded {
                    seed: *seed,
                    samples: *samples,
                },
                (None, None) => Sweep::Exhaustive,
                _ => return Err(Failure::Usage("--samples needs --seed".into())),
            };
            let mut cfg = EnumerateConfig::new(*n, *max_length, property, sweep);
            if *sequential {
                cfg.execution = Execution::Sequential;
            }
            let s = enumerate_and_verify(&cfg)?;
            let input = match sweep {
                Sweep::Exhaustive => format!("n={n} max_length={max_length} exhaustive"),
                Sweep::Seeded { seed, samples } => format!("n={n} max_length={max_length} seed={seed} samples={samples}"),
            };
            let mut r = rec("enumerate", input)
                .field("property", s.property)
                .field("cases", s.cases)
                .field("violations", s.violation_count);
            for (i, v) in s.violations.iter().enumerate() {
                r.push(format!("violation{}", i + 1), v);
            }
            Report {
                inconsistency: (!s.passed()).then(|| format!("{} violation(s)", s.violation_count)),
                records: vec![r],
            }
        }
    })
}

fn print(report: &Report, format: Format) {
    for (i, r) in report.records.iter().enumerate() {
        match format {
            Format::Records => println!("{r}"),
            Format::Human => {
                if r.op == "scenario" {
                    let get = |k: &str| r.get(k).unwrap_or_default();
                    let fact = get("fact");
                    println!(
                        "{:<4} {}: {} = {} (expected {}, {})",
                        if get("status") == "pass" { "ok" } else { "FAIL" },
                        r.input,
                        fact,
                        get(fact),
                        get("expected"),
                        get("source")
                    );
                } else {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", r.human());
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            if cli.timings {
                let elapsed = start.elapsed();
                for r in &mut report.records {
                    r.elapsed = Some(elapsed);
                }
            }
            print(&report, cli.format);
            match report.inconsistency {
                Some(msg) => {
                    eprintln!("inconsistent: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("inconsistent: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
