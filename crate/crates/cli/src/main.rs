//! `hn`: command-line front end for slope maps, Bruhat data, weight
//! multisets, strata and splitting types on the projective line.

mod input;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use hnstrat::bruhat::CosetSetup;
use hnstrat::p1::{self, SplittingType};
use hnstrat::reps::{self, WeightMultiset};
use hnstrat::rootdata::{WeylElement, DEFAULT_CAP};
use hnstrat::slope::{self, SlopeVector};
use hnstrat::strata::{self, Stratum};
use hnstrat::verify::{self, VerifyConfig};
use hnstrat::{Error, Parabolic, QuotientClass, RootDatum};

use input::{parse_class, parse_ints, parse_parabolic, parse_rational, CliError, DatumArgs};

#[derive(Parser, Debug)]
#[command(name = "hn", version, about = "Slope maps, semistability and Harder-Narasimhan strata for reductive groups")]
struct Cli {
    /// Aligned human-readable output.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Single-line JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a root datum: Cartan matrix, roots, Weyl group order, component group.
    Datum(DatumCmd),
    /// Slope vector φ_P of a degree class and its dominant P-regularity.
    Slope(SlopeCmd),
    /// Minimal double-coset representatives, deeper Levi sets and root identities.
    Bruhat(BruhatCmd),
    /// Weight multisets of irreducible representations and derived subspaces.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Stratum enumeration, comparison, closure and destabilization predicates.
    #[command(subcommand)]
    Strata(StrataCmd),
    /// Vector bundles on the projective line.
    #[command(subcommand)]
    P1(P1Cmd),
    /// Run the property sweeps; exits 0 iff all pass.
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
struct DatumCmd {
    #[command(flatten)]
    datum: DatumArgs,
    /// Include the list of positive roots.
    #[arg(long)]
    roots: bool,
}

/// A degree class, either in quotient coordinates or as an integral lift.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DegreeArgs {
    /// Class in `Λ̌_{G,P}`, e.g. `3,0` or `(1,0)[1]`.
    #[arg(long, allow_hyphen_values = true)]
    degree: Option<String>,
    /// Integral coweight whose class is used.
    #[arg(long, allow_hyphen_values = true)]
    lift: Option<String>,
}

#[derive(Args, Debug)]
struct SlopeCmd {
    #[command(flatten)]
    datum: DatumArgs,
    /// Parabolic subset I_M: comma-separated simple indices, `B` for none, `G` for all.
    #[arg(long = "IM", default_value = "")]
    im: String,
    #[command(flatten)]
    degree: DegreeArgs,
    /// Also report the parabolic, the class, proj_P and any failing simple root.
    #[arg(long)]
    detail: bool,
}

#[derive(Args, Debug)]
struct BruhatCmd {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(long = "M1", default_value = "")]
    m1: String,
    #[arg(long = "M2", default_value = "")]
    m2: String,
    /// Restrict to one Weyl element given as a word of simple reflections, e.g. `1,0`.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct HighestArgs {
    /// Highest weight in lattice coordinates.
    #[arg(long, allow_hyphen_values = true)]
    highest: Option<String>,
    /// Highest weight by its pairings with the simple coroots.
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Args, Debug)]
struct RepArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[command(flatten)]
    highest: HighestArgs,
}

#[derive(Subcommand, Debug)]
enum WeightsCmd {
    /// All weights with multiplicities.
    Multiset(RepArgs),
    /// The part `V[λ + ℤR_M]` and whether it is one-dimensional.
    Subspace {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long = "IM", default_value = "")]
        im: String,
    },
    /// Dimensions of the subspaces attached to a minimal representative.
    Bruhat {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long = "M1", default_value = "")]
        m1: String,
        #[arg(long = "M2", default_value = "")]
        m2: String,
        /// Word of the minimal representative; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Levels of the representation by pairing with a slope vector.
    Filtration {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long = "IM", default_value = "")]
        im: String,
        #[command(flatten)]
        degree: DegreeArgs,
    },
}

#[derive(Args, Debug)]
struct StratumArgs {
    #[arg(long = "IM", default_value = "")]
    im: String,
    #[arg(long, allow_hyphen_values = true)]
    degree: String,
}

#[derive(Subcommand, Debug)]
enum StrataCmd {
    /// Strata over a component with ω̌-coefficients at most `bound`.
    Enumerate {
        #[command(flatten)]
        datum: DatumArgs,
        /// Class in `Λ̌_{G,G}`.
        #[arg(long = "lambda-G", allow_hyphen_values = true)]
        lambda_g: String,
        /// Nonnegative rational bound.
        #[arg(long)]
        bound: String,
    },
    /// Compare a canonical stratum with another reduction of the same component.
    Compare {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long = "canonical-IM", default_value = "")]
        canonical_im: String,
        #[arg(long = "canonical-degree", allow_hyphen_values = true)]
        canonical_degree: String,
        #[command(flatten)]
        other: StratumArgs,
    },
    /// Closure predicates between strata `a` and `b`.
    Closure {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long = "a-IM", default_value = "")]
        a_im: String,
        #[arg(long = "a-degree", allow_hyphen_values = true)]
        a_degree: String,
        #[arg(long = "b-IM", default_value = "")]
        b_im: String,
        #[arg(long = "b-degree", allow_hyphen_values = true)]
        b_degree: String,
    },
    /// Whether a reduction destabilizes a bundle of class `lambda-G`.
    Destabilizing {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        reduction: StratumArgs,
        #[arg(long = "lambda-G", allow_hyphen_values = true)]
        lambda_g: String,
    },
}

#[derive(Subcommand, Debug)]
enum P1Cmd {
    /// Harder-Narasimhan data and canonical stratum of a splitting type.
    Hn {
        #[arg(long = "type", allow_hyphen_values = true)]
        st: String,
    },
    /// Whether one splitting type specializes to another.
    Specialize {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Specialization poset of a box of splitting types.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long = "box")]
        box_bound: i64,
        /// Emit Graphviz DOT instead of JSON or text.
        #[arg(long)]
        dot: bool,
    },
    /// The GL(3) degree-3 example of strata whose closures meet without containment.
    #[command(name = "gl3-report")]
    Gl3Report,
    /// Dimension of Hom between split bundles, and top-block Hom vanishing.
    Hom {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Permutation flags of a split bundle against its canonical reduction.
    Flags {
        #[arg(long = "type", allow_hyphen_values = true)]
        st: String,
    },
}

#[derive(Args, Debug)]
struct VerifyCmd {
    /// Semisimple rank bound for the Lie-theoretic sweeps.
    #[arg(long, default_value_t = 3)]
    rank: usize,
    /// Semisimple rank bound for the slope-image sweep.
    #[arg(long = "slope-rank", default_value_t = 4)]
    slope_rank: usize,
    /// Largest n in the projective-line sweeps.
    #[arg(long = "p1-rank", default_value_t = 4)]
    p1_rank: usize,
    /// Coordinate bound for lifts, labels and splitting types.
    #[arg(long = "box", default_value_t = 3)]
    box_bound: i64,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

enum Rendered {
    Value(Value),
    Raw(String),
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("domain values serialize")
}

fn cap() -> Result<usize, CliError> {
    match std::env::var("HN_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Input(format!("HN_CAP must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn stratum(rd: &RootDatum, im: &str, degree: &str) -> Result<Stratum, CliError> {
    let p = parse_parabolic(rd, im)?;
    Ok(strata::make_stratum(rd, p, &parse_class(degree)?)?)
}

fn degree_class(rd: &RootDatum, p: Parabolic, d: &DegreeArgs) -> Result<QuotientClass, CliError> {
    match (&d.degree, &d.lift) {
        (Some(c), _) => Ok(parse_class(c)?),
        (None, Some(l)) => Ok(rd.quotient(p).project(&hnstrat::Coweight(parse_ints(l)?))?),
        (None, None) => unreachable!("clap enforces one of --degree, --lift"),
    }
}

fn rep(args: &RepArgs) -> Result<(RootDatum, WeightMultiset), CliError> {
    let rd = args.datum.load()?;
    let lambda = match (&args.highest.highest, &args.highest.labels) {
        (Some(h), _) => parse_ints(h)?,
        (None, Some(l)) => hnstrat::lattice::weight_with_labels(&rd, &parse_ints(l)?)?
            .ok_or_else(|| CliError::Input(format!("no integral weight of {} has labels {l}", rd.name())))?,
        (None, None) => unreachable!("clap enforces one of --highest, --labels"),
    };
    let v = reps::weyl_weights(&rd, &lambda)?;
    Ok((rd, v))
}

fn word(rd: &RootDatum, s: &str) -> Result<WeylElement, CliError> {
    let letters: Vec<usize> = parse_ints(s)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::Input(format!("negative index {x} in word"))))
        .collect::<Result<_, _>>()?;
    Ok(WeylElement::from_word(rd, &letters)?)
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let out = match &cli.command {
        Command::Datum(c) => {
            let rd = c.datum.load()?;
            let group = rd.weyl_group(cap()?)?;
            let comp = rd.quotient(rd.full());
            let mut v = json!({
                "name": rd.name(),
                "datum": value(&rd),
                "semisimple_rank": rd.num_simple(),
                "cartan": rd.cartan(),
                "symmetrizer": rd.symmetrizer(),
                "positive_roots": rd.positive_roots().len(),
                "weyl_order": group.len(),
                "longest_element": group.longest().word_string(),
                "component_group": {
                    "free_rank": comp.free_rank(),
                    "torsion": comp.torsion_invariants(),
                },
            });
            if c.roots {
                v["roots"] = rd
                    .positive_roots()
                    .iter()
                    .map(|r| json!({"coeffs": r.coeffs, "root": r.weight, "coroot": r.coroot}))
                    .collect();
            }
            Rendered::Value(v)
        }
        Command::Slope(c) => {
            let rd = c.datum.load()?;
            let p = parse_parabolic(&rd, &c.im)?;
            let class = degree_class(&rd, p, &c.degree)?;
            let s = slope::phi(&rd, p, &class)?;
            let mut v = json!({
                "phi": value(&s)["coords"],
                "dominant_P_regular": slope::is_dominant_P_regular(&rd, &s),
            });
            if c.detail {
                v["I_M"] = value(&p);
                v["degree"] = value(&class);
                v["proj_P"] = value(&slope::proj_P(&rd, p, &class)?);
                if let Some((j, q)) = slope::regularity_failure(&rd, &s) {
                    v["failing_root"] = json!({"index": j, "pairing": hnstrat::rational::format(&q)});
                }
            }
            Rendered::Value(v)
        }
        Command::Bruhat(c) => {
            let rd = c.datum.load()?;
            let setup = CosetSetup::new(&rd, parse_parabolic(&rd, &c.m1)?, parse_parabolic(&rd, &c.m2)?)?;
            let reps: Vec<WeylElement> = match &c.word {
                Some(w) => vec![word(&rd, w)?],
                None => setup.min_reps(&rd.weyl_group(cap()?)?),
            };
            let mut rows = Vec::new();
            for w in &reps {
                let levi = setup.deeper_levi_sets(w)?;
                let report = setup.verify_root_identities(w)?;
                rows.push(json!({
                    "w": w.word_string(),
                    "length": w.length(),
                    "levi": value(&levi),
                    "identities": value(&report),
                    "all_pass": report.all_pass(),
                }));
            }
            Rendered::Value(json!({"count": rows.len(), "representatives": rows}))
        }
        Command::Weights(w) => Rendered::Value(weights(w)?),
        Command::Strata(s) => Rendered::Value(strata_cmd(s)?),
        Command::P1(p) => p1_cmd(p, cli.text)?,
        Command::Verify(c) => {
            let cfg = VerifyConfig {
                max_rank: c.rank,
                slope_rank: c.slope_rank,
                p1_rank: c.p1_rank,
                box_bound: c.box_bound,
                samples: c.samples,
                seed: c.seed,
                cap: cap()?,
            };
            let results = verify::run_all(&cfg)?;
            let ok = results.iter().all(verify::SweepResult::passed);
            let v = json!({"config": value(&cfg), "sweeps": value(&results), "all_pass": ok});
            if !ok {
                return Err(CliError::VerifyFailed(render(cli, Rendered::Value(v))));
            }
            Rendered::Value(v)
        }
    };
    Ok(out)
}

fn weights(cmd: &WeightsCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        WeightsCmd::Multiset(r) => {
            let (rd, v) = rep(r)?;
            json!({"dim": v.dim(), "weyl_dimension": hnstrat::rational::format(&reps::weyl_dimension(&rd, &v.highest.0)?), "multiset": value(&v)})
        }
        WeightsCmd::Subspace { rep: r, im } => {
            let (rd, v) = rep(r)?;
            let p = parse_parabolic(&rd, im)?;
            let sub = reps::subspace_mod_RM(&rd, &v, p);
            json!({
                "I_M": value(&p),
                "dim": sub.dim(),
                "one_dimensional": sub.dim() == 1,
                "highest_in_levi_character_lattice": hnstrat::lattice::in_weight_sublattice(&rd, p, &v.highest.0),
                "subspace": value(&sub),
            })
        }
        WeightsCmd::Bruhat { rep: r, m1, m2, word: w } => {
            let (rd, v) = rep(r)?;
            let setup = CosetSetup::new(&rd, parse_parabolic(&rd, m1)?, parse_parabolic(&rd, m2)?)?;
            let levi = setup.deeper_levi_sets(&word(&rd, w)?)?;
            json!({"levi": value(&levi), "dims": value(&reps::bruhat_subspaces(&rd, &v, &levi))})
        }
        WeightsCmd::Filtration { rep: r, im, degree } => {
            let (rd, v) = rep(r)?;
            let p = parse_parabolic(&rd, im)?;
            let s: SlopeVector = slope::phi(&rd, p, &degree_class(&rd, p, degree)?)?;
            let levels = reps::filtration_levels(&rd, &v, &s)?;
            let rows: Vec<Value> = levels
                .iter()
                .map(|l| {
                    json!({
                        "q": hnstrat::rational::format(&l.q),
                        "dim": l.dim(),
                        "degree": hnstrat::rational::format(&l.degree(&s)),
                        "weights": value(&l.weights),
                    })
                })
                .collect();
            json!({"phi": value(&s)["coords"], "levels": rows})
        }
    })
}

fn strata_cmd(cmd: &StrataCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        StrataCmd::Enumerate { datum, lambda_g, bound } => {
            let rd = datum.load()?;
            let lg = parse_class(lambda_g)?;
            let b = parse_rational(bound)?;
            let list = strata::enumerate_strata(&rd, &lg, &b)?;
            json!({
                "lambda_G": value(&lg),
                "bound": hnstrat::rational::format(&b),
                "count": list.len(),
                "strata": value(&list),
            })
        }
        StrataCmd::Compare { datum, canonical_im, canonical_degree, other } => {
            let rd = datum.load()?;
            let canon = stratum(&rd, canonical_im, canonical_degree)?;
            let p = parse_parabolic(&rd, &other.im)?;
            let c = strata::comparison_geq(&rd, &canon, p, &parse_class(&other.degree)?)?;
            json!({"canonical": value(&canon), "comparison": value(&c)})
        }
        StrataCmd::Closure { datum, a_im, a_degree, b_im, b_degree } => {
            let rd = datum.load()?;
            let a = stratum(&rd, a_im, a_degree)?;
            let b = stratum(&rd, b_im, b_degree)?;
            let contains = match strata::closure_same_parabolic_contains(&rd, &a, &b) {
                Ok(x) => json!(x),
                Err(Error::ParabolicMismatch(..)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            json!({
                "a": value(&a),
                "b": value(&b),
                "same_parabolic_contains": contains,
                "meets": strata::closure_meets_necessary(&rd, &a, &b),
                "meets_kind": "necessary-only",
            })
        }
        StrataCmd::Destabilizing { datum, reduction, lambda_g } => {
            let rd = datum.load()?;
            let p = parse_parabolic(&rd, &reduction.im)?;
            let d = parse_class(&reduction.degree)?;
            let lg = parse_class(lambda_g)?;
            let w = strata::destabilizing_witness(&rd, p, &d, &lg)?;
            let verdict = strata::is_destabilizing(&rd, p, &d, &lg)?;
            json!({"destabilizing": verdict, "tests": value(&w)})
        }
    })
}

fn splitting(s: &str) -> Result<SplittingType, CliError> {
    Ok(SplittingType::new(parse_ints(s)?)?)
}

fn p1_cmd(cmd: &P1Cmd, text: bool) -> Result<Rendered, CliError> {
    Ok(match cmd {
        P1Cmd::Hn { st } => {
            let (hn, s) = p1::canonical_reduction(&splitting(st)?)?;
            Rendered::Value(json!({"hn": value(&hn), "stratum": value(&s)}))
        }
        P1Cmd::Specialize { from, to } => {
            Rendered::Value(json!(p1::specializes_to(&splitting(from)?, &splitting(to)?)?))
        }
        P1Cmd::Poset { n, degree, box_bound, dot } => {
            let r = p1::strata_poset(*n, *degree, *box_bound)?;
            if *dot {
                Rendered::Raw(r.to_dot().trim_end().to_string())
            } else if text {
                let edges: Vec<String> =
                    r.edges.iter().map(|[a, b]| format!("{} -> {}", r.nodes[*a], r.nodes[*b])).collect();
                let mut v = value(&r);
                v["edges"] = json!(edges);
                v["nodes"] = r.nodes.iter().map(ToString::to_string).collect();
                Rendered::Value(v)
            } else {
                Rendered::Value(value(&r))
            }
        }
        P1Cmd::Gl3Report => Rendered::Value(value(&p1::gl3_report()?)),
        P1Cmd::Hom { from, to } => {
            let a = splitting(from)?;
            let b = splitting(to)?;
            Rendered::Value(json!({
                "hom_dim": p1::hom_dim(a.degrees(), b.degrees()),
                "top_block_vanishing": {
                    "from": p1::mds_hom_vanishing(&a),
                    "to": p1::mds_hom_vanishing(&b),
                },
            }))
        }
        P1Cmd::Flags { st } => {
            let s = splitting(st)?;
            let rd = RootDatum::gl(s.rank())?;
            let c = p1::compare_permutation_flags(&rd, &s)?;
            Rendered::Value(json!({"flags": p1::flag_strata_of_permutations(&s), "comparison": value(&c)}))
        }
    })
}

fn render(cli: &Cli, r: Rendered) -> String {
    match r {
        Rendered::Raw(s) => s,
        Rendered::Value(v) if cli.text => output::text(&v),
        Rendered::Value(v) => output::json_line(&v),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => 64,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(r) => {
            println!("{}", render(&cli, r));
            ExitCode::SUCCESS
        }
        Err(CliError::VerifyFailed(report)) => {
            println!("{report}");
            eprintln!("hn: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("hn: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
