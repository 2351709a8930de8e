//! Command-line surface for `nset-core`: JSON documents in, JSON documents
//! out, one command per library operation.

pub mod document;
pub mod suites;

use clap::Subcommand;
use nset_core::{
    box_differences, chain_build, circle_project, explore2d, generates, geo_search, geo_upper,
    integer_differences, is_nset, is_nset_nd, matched_pairs, proper_bound_check,
    represent_one_capped, theorem2_build_capped, theorem4_check, BigInt, PairCount,
};
use serde_json::{json, Map, Value};

pub use document::Document;

pub const DEFAULT_GRID: u64 = 4;
pub const DEFAULT_SHIFT_BOUND: u64 = 4;
pub const DEFAULT_MAX_WEIGHT: u64 = 64;
pub const DEFAULT_MAX_COMPONENTS: usize = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Input that does not match any document schema. Exit status 2.
    #[error("schema violation: {0}")]
    Schema(String),
    /// A well-formed input rejected by the library. Exit status 1.
    #[error(transparent)]
    Domain(#[from] nset_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Schema(_) | CliError::Io(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema(_) => "SchemaViolation",
            CliError::Domain(e) => e.kind(),
            CliError::Io(_) => "Io",
        }
    }

    /// Machine-readable report describing the failure.
    pub fn to_document(&self) -> Document {
        let mut fields = Map::new();
        fields.insert("error".into(), Value::from(self.kind()));
        fields.insert("message".into(), Value::from(self.to_string()));
        Document::report(fields)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Canonicalize an interval set.
    Canon,
    /// Decide the N-set property of an interval set or box set.
    CheckNset,
    /// Positive integer differences of an interval set.
    Diffs,
    /// Points x with x and x - a both in the set.
    Witnesses {
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
    },
    /// Count pairs of points with equal fractional parts.
    Pairs,
    /// Build the block chain of a chain specification.
    ChainBuild,
    /// Construct an N-set realizing an integer set.
    Build {
        /// Emit a report with the construction trace instead of the bare set.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
    },
    /// Build, extract differences and compare with the input.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
    },
    /// Additive weight and geometric upper bound.
    Weights {
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
    },
    /// Search a grid family for N-sets with few components.
    GeoSearch {
        #[arg(long, default_value_t = DEFAULT_MAX_COMPONENTS)]
        max_components: usize,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: u64,
        #[arg(long, default_value_t = DEFAULT_SHIFT_BOUND)]
        shift_bound: u64,
    },
    /// Lattice difference set of a box set.
    NdDiffs,
    /// N-set, generation and boundedness checks for a box set.
    NdCheck,
    /// Search cell tilings of the torus for a planar lattice difference set.
    Explore2d {
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: u64,
        #[arg(long, default_value_t = DEFAULT_SHIFT_BOUND)]
        shift_bound: u64,
    },
    /// Run the seeded randomized property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// A command's output and exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Document,
    pub status: i32,
}

impl From<Document> for Outcome {
    fn from(document: Document) -> Self {
        Outcome {
            document,
            status: 0,
        }
    }
}

fn report(value: Value) -> Document {
    match value {
        Value::Object(fields) => Document::report(fields),
        _ => unreachable!("reports are objects"),
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// Runs one command on one input document.
pub fn run(command: &Command, input: &Document) -> Result<Outcome, CliError> {
    let out = match command {
        Command::Canon => Document::interval_set(&input.to_interval_set()?),
        Command::CheckNset => match input {
            Document::BoxSet { .. } => {
                let k = input.to_box_set()?;
                report(json!({ "dimension": k.dimension(), "is_nset": is_nset_nd(&k) }))
            }
            _ => {
                let k = input.to_interval_set()?;
                let cover = circle_project(&k);
                let arcs: Vec<[String; 2]> = cover
                    .arcs()
                    .iter()
                    .map(|a| [a.lo().to_string(), a.hi().to_string()])
                    .collect();
                report(json!({
                    "is_nset": is_nset(&k),
                    "components": k.components(),
                    "arcs": arcs,
                }))
            }
        },
        Command::Diffs => Document::integer_set(&integer_differences(&input.to_interval_set()?)),
        Command::Witnesses { shift } => {
            let k = input.to_interval_set()?;
            let a = document::WireInt::Text(shift.clone()).parse()?;
            let w = nset_core::witnesses(&k, &a)?;
            report(json!({
                "shift": a.to_string(),
                "empty": w.is_none(),
                "witnesses": w.as_ref().map(document::intervals_value).unwrap_or(json!([])),
            }))
        }
        Command::Pairs => {
            let k = input.to_interval_set()?;
            match matched_pairs(&k) {
                Some(pairs) => {
                    let listed: Vec<[String; 2]> = pairs
                        .iter()
                        .map(|(y, x)| [y.to_string(), x.to_string()])
                        .collect();
                    report(json!({ "pairs": pairs.len(), "list": listed }))
                }
                None => report(json!({ "pairs": PairCount::Infinite.to_string() })),
            }
        }
        Command::ChainBuild => {
            let spec = input.to_chain_spec()?;
            let (k, predicted) = chain_build(&spec)?;
            report(json!({
                "intervals": document::intervals_value(&k),
                "predicted": strings(predicted.values()),
                "is_nset": is_nset(&k),
            }))
        }
        Command::Build { trace, max_weight } => {
            let a = input.to_integer_set()?;
            let (k, t) = theorem2_build_capped(&a, Some(*max_weight))?;
            if *trace {
                let points: Vec<Value> = t
                    .attached_points
                    .iter()
                    .map(|(x, a)| json!({ "point": x.to_string(), "element": a.to_string() }))
                    .collect();
                report(json!({
                    "intervals": document::intervals_value(&k),
                    "certificate": t.repr.certificate(),
                    "weight": t.repr.weight(),
                    "a_tilde": strings(&t.a_tilde),
                    "b": strings(&t.b),
                    "attached_points": points,
                }))
            } else {
                Document::interval_set(&k)
            }
        }
        Command::Verify { max_weight } => {
            let a = input.to_integer_set()?;
            let built = run(&Command::Build { trace: false, max_weight: *max_weight }, input)?;
            let diffs = run(&Command::Diffs, &built.document)?.document.to_integer_set()?;
            let k = built.document.to_interval_set()?;
            let ok = diffs == a && is_nset(&k);
            return Ok(Outcome {
                document: report(json!({
                    "ok": ok,
                    "input": strings(a.values()),
                    "differences": strings(diffs.values()),
                })),
                status: if ok { 0 } else { 1 },
            });
        }
        Command::Weights { max_weight } => {
            let a = input.to_integer_set()?;
            let r = represent_one_capped(&a, Some(*max_weight))?;
            report(json!({
                "add": r.weight(),
                "geo_upper": geo_upper(&a)?,
                "geo_is_interval": nset_core::geo_is_interval(&a),
                "certificate": r.certificate(),
                "coefficients": strings(&r.coefficients()),
            }))
        }
        Command::GeoSearch { max_components, grid, shift_bound } => {
            let a = input.to_integer_set()?;
            let hit = geo_search(&a, *max_components, *grid, *shift_bound)?;
            report(json!({
                "components": hit.as_ref().map(|h| h.components),
                "intervals": hit.as_ref().map(|h| document::intervals_value(&h.set)),
                "max_components": max_components,
                "grid": grid,
                "shift_bound": shift_bound,
            }))
        }
        Command::NdDiffs => Document::lattice_set(&box_differences(&input.to_box_set()?)),
        Command::NdCheck => {
            let k = input.to_box_set()?;
            let nset = is_nset_nd(&k);
            let diffs = box_differences(&k);
            report(json!({
                "dimension": k.dimension(),
                "is_nset": nset,
                "generates": generates(&diffs)?,
                "proper_bound": proper_bound_check(&k),
                "radius": k.radius_bound().to_string(),
                "theorem4": if nset { Some(theorem4_check(&k)?) } else { None },
            }))
        }
        Command::Explore2d { grid, shift_bound } => {
            let target = input.to_lattice_set()?;
            let found = explore2d(&target, *grid, *shift_bound)?;
            let mut fields = Map::new();
            fields.insert("found".into(), Value::from(found.is_some()));
            fields.insert(
                "set".into(),
                match &found {
                    Some(k) => serde_json::to_value(Document::box_set(k)).unwrap(),
                    None => Value::Null,
                },
            );
            fields.insert("grid".into(), Value::from(*grid));
            fields.insert("shift_bound".into(), Value::from(*shift_bound));
            Document::report(fields)
        }
        Command::Selftest { seed, samples } => {
            let summary = suites::run_all(*seed, *samples);
            let ok = summary.iter().all(|s| s.passed == s.samples);
            return Ok(Outcome {
                document: report(json!({
                    "seed": seed,
                    "suites": summary.iter().map(|s| json!({
                        "name": s.name,
                        "samples": s.samples,
                        "passed": s.passed,
                    })).collect::<Vec<_>>(),
                    "ok": ok,
                })),
                status: if ok { 0 } else { 1 },
            });
        }
    };
    Ok(out.into())
}
