//! Command-line front end: argument parsing, job validation, dispatch,
//! output rendering and a content-addressed result cache.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::counting::{
    conjecture_scan, counting_report, cycle_classes, euler_linear_term_check, simple_count_poly,
};
use crate::error::{Error, Result};
use crate::existence::{simple_nonempty, st_nonempty_al, ExistenceOracle, SstMethod};
use crate::exactq::Poly;
use crate::framed::{count_forests, enumerate_forests, forest_genfun, hilb_betti, hilb_nonempty, smooth_model_poincare};
use crate::hn::{HnKernel, HnMethod};
use crate::oracle::{point_counts, verify, DEFAULT_BUDGET};
use crate::quiver::{theta_coprime, DimVector, Quiver, Stability, StandardQuiver};
use crate::roots::classify_root;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "QMODULI_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "qmoduli", version, about = "Counting polynomials, Betti numbers and existence criteria for quiver moduli")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for cached results; caching is off when unset.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct QuiverArg {
    /// Builtin `loop:m`, `kronecker:m`, `subspace:m`, or a path to a quiver JSON file.
    #[arg(long)]
    pub quiver: String,
}

#[derive(Args, Debug, Clone)]
pub struct Dim {
    /// Dimension vector as a JSON object keyed by vertex name.
    #[arg(long)]
    pub d: String,
}

#[derive(Args, Debug, Clone)]
pub struct Theta {
    /// Stability as a JSON object keyed by vertex name.
    #[arg(long)]
    pub theta: String,
}

#[derive(Args, Debug, Clone)]
pub struct Framing {
    /// Framing vector as a JSON object keyed by vertex name.
    #[arg(long)]
    pub n: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root combinatorics.
    Roots {
        #[command(subcommand)]
        action: RootsCmd,
    },
    /// Euler form ⟨d,e⟩.
    EulerForm {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        #[arg(long)]
        e: String,
    },
    /// Whether d is coprime for the stability.
    Coprime {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
    },
    /// The rational function P_d(q).
    HnPoly {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
        #[arg(long, default_value = "recursive")]
        method: String,
    },
    /// Betti polynomial of the moduli space in the coprime case.
    Betti {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
    },
    /// Counting polynomials.
    Count {
        #[command(subcommand)]
        kind: CountCmd,
    },
    /// Non-emptiness decisions.
    Exists {
        #[command(subcommand)]
        kind: ExistsCmd,
    },
    /// Noncommutative Hilbert schemes.
    Hilb {
        #[command(subcommand)]
        kind: HilbCmd,
    },
    /// Poincaré polynomial of the smooth model.
    SmoothModel {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
        #[command(flatten)]
        n: Framing,
    },
    /// Cycle statistics.
    Cycles {
        #[command(subcommand)]
        kind: CyclesCmd,
    },
    /// Positivity of simple counts in q−1 below a bound.
    ConjectureScan {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        d_max: String,
    },
    /// Brute-force finite-field checks.
    Oracle {
        #[command(subcommand)]
        kind: OracleCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum RootsCmd {
    Classify {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        /// Run the reduction on quivers with oriented cycles too.
        #[arg(long)]
        allow_cycles: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CountCmd {
    Stable {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
    },
    Sst {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
    },
    Simple {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExistsCmd {
    Sst {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
        #[arg(long, default_value = "schofield")]
        method: String,
    },
    St {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
    },
    Simple {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
    },
    Al {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        /// JSON list of `[multiplicity, {vertex: dim}]` pairs.
        #[arg(long)]
        parts: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum HilbCmd {
    Betti {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        #[command(flatten)]
        n: Framing,
    },
    Nonempty {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        #[command(flatten)]
        n: Framing,
    },
    Forests {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        #[command(flatten)]
        n: Framing,
        /// Refuse to list more forests than this.
        #[arg(long, default_value_t = 10_000)]
        max_enumerate: u64,
        /// Only count.
        #[arg(long)]
        count_only: bool,
    },
    Genfun {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        n: Framing,
        #[arg(long, default_value_t = 5)]
        truncation: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CyclesCmd {
    Primitive {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        d: Dim,
        /// Also compare with the linear term of the simple count.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    Verify {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    Census {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        d: Dim,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// A fully validated job.
#[derive(Clone, Debug, Serialize)]
pub struct JobSpec {
    pub command: String,
    pub quiver: Quiver,
    pub d: Option<DimVector>,
    pub e: Option<DimVector>,
    pub theta: Option<Stability>,
    pub n: Option<DimVector>,
    pub method: Option<String>,
    pub parts: Option<Vec<(i64, DimVector)>>,
    pub field: Option<u32>,
    pub budget: Option<u64>,
    pub truncation: Option<i64>,
    pub max_enumerate: Option<u64>,
    pub flag: bool,
    pub format: Format,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

/// Loads a builtin (`kind:m`) or a quiver JSON file.
pub fn load_quiver(source: &str) -> Result<Quiver> {
    if !Path::new(source).exists() {
        if let Ok(std) = source.parse::<StandardQuiver>() {
            return Quiver::standard(std);
        }
    }
    let text = fs::read_to_string(source).map_err(|e| Error::invalid(format!("quiver: cannot read {source:?}: {e}")))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::invalid(format!("quiver: {source:?} is not JSON: {e}")))?;
    Quiver::from_json(&value)
}

/// Parses `{"vertex": value}` (or a bare integer on one-vertex quivers).
pub fn parse_vector(q: &Quiver, text: &str, field: &str) -> Result<Vec<i64>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::invalid(format!("{field}: not JSON: {e}")))?;
    vector_from_value(q, &value, field)
}

fn vector_from_value(q: &Quiver, value: &Value, field: &str) -> Result<Vec<i64>> {
    match value {
        Value::Number(n) if q.num_vertices() == 1 => {
            let x = n.as_i64().ok_or_else(|| Error::invalid(format!("{field}: expected an integer")))?;
            Ok(vec![x])
        }
        Value::Object(_) => {
            let map: BTreeMap<String, i64> = serde_json::from_value(value.clone())
                .map_err(|e| Error::invalid(format!("{field}: expected integer values: {e}")))?;
            q.vector_from_map(&map, field)
        }
        _ => Err(Error::invalid(format!("{field}: expected a JSON object keyed by vertex name"))),
    }
}

fn parse_dim(q: &Quiver, text: &str, field: &str) -> Result<DimVector> {
    DimVector::new(parse_vector(q, text, field)?).map_err(|_| Error::invalid(format!("{field}: entries must be nonnegative")))
}

fn parse_theta(q: &Quiver, text: &str) -> Result<Stability> {
    Ok(Stability::new(parse_vector(q, text, "theta")?))
}

fn parse_parts(q: &Quiver, text: &str) -> Result<Vec<(i64, DimVector)>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::invalid(format!("parts: not JSON: {e}")))?;
    let list = value.as_array().ok_or_else(|| Error::invalid("parts: expected a list of [multiplicity, vector] pairs"))?;
    list.iter()
        .map(|item| {
            let pair = item.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::invalid("parts: each entry must be [multiplicity, vector]"))?;
            let m = pair[0].as_i64().ok_or_else(|| Error::invalid("parts: multiplicity must be an integer"))?;
            let d = DimVector::new(vector_from_value(q, &pair[1], "parts")?)
                .map_err(|_| Error::invalid("parts: entries must be nonnegative"))?;
            Ok((m, d))
        })
        .collect()
}

impl JobSpec {
    fn base(command: &str, quiver: &QuiverArg, cli: &Cli) -> Result<JobSpec> {
        Ok(JobSpec {
            command: command.to_string(),
            quiver: load_quiver(&quiver.quiver)?,
            d: None,
            e: None,
            theta: None,
            n: None,
            method: None,
            parts: None,
            field: None,
            budget: None,
            truncation: None,
            max_enumerate: None,
            flag: false,
            format: cli.format,
            cache_dir: cli.cache_dir.clone(),
        })
    }

    fn with_d(mut self, d: &Dim) -> Result<Self> {
        self.d = Some(parse_dim(&self.quiver, &d.d, "d")?);
        Ok(self)
    }

    fn with_theta(mut self, t: &Theta) -> Result<Self> {
        self.theta = Some(parse_theta(&self.quiver, &t.theta)?);
        Ok(self)
    }

    fn with_n(mut self, n: &Framing) -> Result<Self> {
        self.n = Some(parse_dim(&self.quiver, &n.n, "n")?);
        Ok(self)
    }

    /// Validates the parsed command line into a job.
    pub fn from_cli(cli: &Cli) -> Result<JobSpec> {
        use Command as C;
        Ok(match &cli.command {
            C::Roots { action: RootsCmd::Classify { quiver, d, allow_cycles } } => {
                let mut j = Self::base("roots classify", quiver, cli)?.with_d(d)?;
                j.flag = *allow_cycles;
                j
            }
            C::EulerForm { quiver, d, e } => {
                let mut j = Self::base("euler-form", quiver, cli)?.with_d(d)?;
                j.e = Some(parse_dim(&j.quiver, e, "e")?);
                j
            }
            C::Coprime { quiver, theta, d } => Self::base("coprime", quiver, cli)?.with_theta(theta)?.with_d(d)?,
            C::HnPoly { quiver, theta, d, method } => {
                method.parse::<HnMethod>()?;
                let mut j = Self::base("hn-poly", quiver, cli)?.with_theta(theta)?.with_d(d)?;
                j.method = Some(method.clone());
                j
            }
            C::Betti { quiver, theta, d } => Self::base("betti", quiver, cli)?.with_theta(theta)?.with_d(d)?,
            C::Count { kind } => match kind {
                CountCmd::Stable { quiver, theta, d } => {
                    Self::base("count stable", quiver, cli)?.with_theta(theta)?.with_d(d)?
                }
                CountCmd::Sst { quiver, theta, d } => Self::base("count sst", quiver, cli)?.with_theta(theta)?.with_d(d)?,
                CountCmd::Simple { quiver, d } => Self::base("count simple", quiver, cli)?.with_d(d)?,
            },
            C::Exists { kind } => match kind {
                ExistsCmd::Sst { quiver, theta, d, method } => {
                    method.parse::<SstMethod>()?;
                    let mut j = Self::base("exists sst", quiver, cli)?.with_theta(theta)?.with_d(d)?;
                    j.method = Some(method.clone());
                    j
                }
                ExistsCmd::St { quiver, theta, d } => Self::base("exists st", quiver, cli)?.with_theta(theta)?.with_d(d)?,
                ExistsCmd::Simple { quiver, d } => Self::base("exists simple", quiver, cli)?.with_d(d)?,
                ExistsCmd::Al { quiver, theta, parts } => {
                    let mut j = Self::base("exists al", quiver, cli)?.with_theta(theta)?;
                    j.parts = Some(parse_parts(&j.quiver, parts)?);
                    j
                }
            },
            C::Hilb { kind } => match kind {
                HilbCmd::Betti { quiver, d, n } => Self::base("hilb betti", quiver, cli)?.with_d(d)?.with_n(n)?,
                HilbCmd::Nonempty { quiver, d, n } => Self::base("hilb nonempty", quiver, cli)?.with_d(d)?.with_n(n)?,
                HilbCmd::Forests { quiver, d, n, max_enumerate, count_only } => {
                    let mut j = Self::base("hilb forests", quiver, cli)?.with_d(d)?.with_n(n)?;
                    j.max_enumerate = Some(*max_enumerate);
                    j.flag = *count_only;
                    j
                }
                HilbCmd::Genfun { quiver, n, truncation } => {
                    if *truncation < 0 {
                        return Err(Error::invalid("truncation: must be nonnegative"));
                    }
                    let mut j = Self::base("hilb genfun", quiver, cli)?.with_n(n)?;
                    j.truncation = Some(*truncation);
                    j
                }
            },
            C::SmoothModel { quiver, theta, d, n } => {
                Self::base("smooth-model", quiver, cli)?.with_theta(theta)?.with_d(d)?.with_n(n)?
            }
            C::Cycles { kind: CyclesCmd::Primitive { quiver, d, check } } => {
                let mut j = Self::base("cycles primitive", quiver, cli)?.with_d(d)?;
                j.flag = *check;
                j
            }
            C::ConjectureScan { quiver, d_max } => {
                let mut j = Self::base("conjecture-scan", quiver, cli)?;
                j.d = Some(parse_dim(&j.quiver, d_max, "d-max")?);
                j
            }
            C::Oracle { kind } => {
                let (name, quiver, theta, d, q, budget) = match kind {
                    OracleCmd::Verify { quiver, theta, d, q, budget } => ("oracle verify", quiver, theta, d, q, budget),
                    OracleCmd::Census { quiver, theta, d, q, budget } => ("oracle census", quiver, theta, d, q, budget),
                };
                crate::oracle::linalg::check_field(*q)?;
                let mut j = Self::base(name, quiver, cli)?.with_theta(theta)?.with_d(d)?;
                j.field = Some(*q);
                j.budget = Some(*budget);
                j
            }
        })
    }

    /// Content hash of everything that determines the output.
    pub fn cache_key(&self) -> String {
        let canonical = serde_json::to_string(&serde_json::to_value(self).expect("job serializes")).expect("json");
        let digest = Sha256::digest(canonical.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// A command result: a JSON document and, for tabular results, CSV rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Output {
    fn doc(json: Value) -> Self {
        Output { json, table: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("json") + "\n"),
            Format::Csv => {
                let (header, rows) = match &self.table {
                    Some(t) => t.clone(),
                    None => {
                        let obj = self.json.as_object().cloned().unwrap_or_default();
                        let rows = obj
                            .into_iter()
                            .map(|(k, v)| vec![k, v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())])
                            .collect();
                        (vec!["key".to_string(), "value".to_string()], rows)
                    }
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::invalid(format!("csv: {e}"));
                w.write_record(&header).map_err(io)?;
                for r in rows {
                    w.write_record(&r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::invalid(format!("csv: {e}")))?;
                Ok(String::from_utf8(bytes).expect("utf-8"))
            }
        }
    }
}

fn poly_doc(p: &Poly) -> Value {
    let at_one = p.eval(&num::BigRational::from_integer(1.into()));
    json!({ "poly": p, "text": p.to_string(), "value_at_1": at_one.to_string() })
}

fn need<'a, T>(v: &'a Option<T>, field: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| Error::invalid(format!("{field}: required")))
}

/// Executes a validated job.
pub fn execute(job: &JobSpec) -> Result<Output> {
    let q = &job.quiver;
    let names = |v: &[i64]| serde_json::to_value(q.vector_to_map(v)).expect("map");
    let d = || need(&job.d, "d");
    let theta = || need(&job.theta, "theta");
    let n = || need(&job.n, "n");
    Ok(match job.command.as_str() {
        "roots classify" => {
            let c = classify_root(q, d()?, job.flag)?;
            let witness: Vec<&str> = c.witness.iter().map(|&i| q.vertices()[i].as_str()).collect();
            Output::doc(json!({
                "verdict": c.verdict,
                "witness": witness,
                "reduced": names(&c.reduced),
                "parameters": c.parameters,
            }))
        }
        "euler-form" => Output::doc(json!({ "value": q.euler_form(d()?, need(&job.e, "e")?)? })),
        "coprime" => Output::doc(json!({ "coprime": theta_coprime(q, theta()?, d()?)? })),
        "hn-poly" => {
            let method: HnMethod = need(&job.method, "method")?.parse()?;
            let p = HnKernel::new(q, theta()?)?.p(d()?, method)?;
            Output::doc(json!({ "p": p, "text": p.to_string() }))
        }
        "betti" => Output::doc(poly_doc(&HnKernel::new(q, theta()?)?.betti_coprime(d()?)?)),
        "count stable" | "count sst" => {
            let r = counting_report(q, theta()?, d()?)?;
            let p = if job.command == "count stable" { &r.stable } else { &r.semistable };
            let mut doc = poly_doc(p);
            doc["report"] = serde_json::to_value(&r).expect("report");
            Output::doc(doc)
        }
        "count simple" => Output::doc(poly_doc(&simple_count_poly(q, d()?)?)),
        "exists sst" => {
            let method: SstMethod = need(&job.method, "method")?.parse()?;
            Output::doc(json!({ "nonempty": ExistenceOracle::new(q, theta()?)?.sst_nonempty(d()?, method)? }))
        }
        "exists st" => Output::doc(json!({ "nonempty": ExistenceOracle::new(q, theta()?)?.st_nonempty(d()?)? })),
        "exists simple" => Output::doc(json!({ "nonempty": simple_nonempty(q, d()?)? })),
        "exists al" => Output::doc(json!({ "nonempty": st_nonempty_al(q, theta()?, need(&job.parts, "parts")?)? })),
        "hilb betti" => Output::doc(poly_doc(&hilb_betti(q, d()?, n()?)?)),
        "hilb nonempty" => Output::doc(json!({ "nonempty": hilb_nonempty(q, d()?, n()?)? })),
        "hilb forests" => {
            let count = count_forests(q, d()?, n()?)?;
            if job.flag {
                Output::doc(json!({ "count": count.to_string() }))
            } else {
                let forests = enumerate_forests(q, d()?, n()?, *need(&job.max_enumerate, "max-enumerate")?)?;
                let rows = forests
                    .iter()
                    .enumerate()
                    .flat_map(|(k, f)| {
                        f.slots.iter().map(move |s| {
                            vec![k.to_string(), q.vertices()[s.vertex].clone(), s.copy.to_string(), serde_json::to_string(&s.paths).expect("json")]
                        })
                    })
                    .collect();
                let doc = json!({ "count": count.to_string(), "forests": forests });
                Output { json: doc, table: Some((vec!["forest".into(), "vertex".into(), "copy".into(), "paths".into()], rows)) }
            }
        }
        "hilb genfun" => {
            let g = forest_genfun(q, n()?, *need(&job.truncation, "truncation")?)?;
            let mut rows = Vec::new();
            let mut coeffs = Vec::new();
            for (k, v) in g.iter() {
                let value = v.to_string();
                rows.push(vec![serde_json::to_string(&q.vector_to_map(k.as_slice())).expect("json"), value.clone()]);
                coeffs.push(json!({ "d": names(k.as_slice()), "value": value }));
            }
            Output { json: json!({ "coefficients": coeffs }), table: Some((vec!["d".into(), "value".into()], rows)) }
        }
        "smooth-model" => Output::doc(poly_doc(&smooth_model_poincare(q, theta()?, d()?, n()?)?)),
        "cycles primitive" => {
            let classes = cycle_classes(q, d()?)?;
            let primitive: Vec<&[usize]> = classes.iter().filter(|c| c.is_primitive()).map(|c| c.arrows()).collect();
            let mut doc = json!({ "count": primitive.len(), "classes": primitive });
            if job.flag {
                doc["linear_term_check"] = serde_json::to_value(euler_linear_term_check(q, d()?, true)?).expect("json");
            }
            Output::doc(doc)
        }
        "conjecture-scan" => {
            let rows = conjecture_scan(q, d()?)?;
            let table = rows
                .iter()
                .map(|r| vec![serde_json::to_string(&q.vector_to_map(&r.d)).expect("json"), r.simple_count.to_string(), r.positive_in_qminus1.to_string()])
                .collect();
            let doc: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "d": names(&r.d), "poly": r.simple_count, "text": r.simple_count.to_string(), "positive": r.positive_in_qminus1 }))
                .collect();
            Output { json: json!({ "rows": doc }), table: Some((vec!["d".into(), "poly".into(), "positive".into()], table)) }
        }
        "oracle verify" => {
            let r = verify(q, theta()?, d()?, *need(&job.field, "q")?, *need(&job.budget, "budget")?)?;
            let rows = r.checks.iter().map(|c| vec![c.name.clone(), c.pass.to_string(), c.expected.clone(), c.actual.clone()]).collect();
            Output {
                json: serde_json::to_value(&r).expect("json"),
                table: Some((vec!["check".into(), "pass".into(), "expected".into(), "actual".into()], rows)),
            }
        }
        "oracle census" => {
            let c = point_counts(q, theta()?, d()?, *need(&job.field, "q")?, *need(&job.budget, "budget")?)?;
            let rows = c.census.iter().map(|(t, n)| vec![crate::oracle::type_label(t), n.to_string()]).collect();
            Output {
                json: serde_json::to_value(&c).expect("json"),
                table: Some((vec!["hn_type".into(), "count".into()], rows)),
            }
        }
        other => return Err(Error::invalid(format!("command: unknown {other:?}"))),
    })
}

fn write_atomic(dir: &Path, name: &str, contents: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, dir.join(name))
}

/// Runs a job, consulting and filling the cache; returns the rendered output.
pub fn run(job: &JobSpec) -> Result<String> {
    let key = job.cache_key();
    let file = format!("{key}.out");
    if let Some(dir) = &job.cache_dir {
        if let Ok(hit) = fs::read_to_string(dir.join(&file)) {
            return Ok(hit);
        }
    }
    let text = execute(job)?.render(job.format)?;
    if let Some(dir) = &job.cache_dir {
        // A failed cache write only costs a recomputation later.
        let _ = write_atomic(dir, &file, &text);
    }
    Ok(text)
}

fn error_json(kind: &str, message: &str) -> String {
    serde_json::to_string(&json!({ "error": kind, "message": message.trim_end() })).expect("json") + "\n"
}

/// Parses arguments, runs, and returns `(exit code, stdout, stderr)`.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => return (0, e.to_string(), String::new()),
        Err(e) => return (1, String::new(), error_json("invalid_input", &e.to_string())),
    };
    match JobSpec::from_cli(&cli).and_then(|job| run(&job)) {
        Ok(out) => (0, out, String::new()),
        Err(e) => {
            let kind = match e {
                Error::InvalidInput(_) => "invalid_input",
                Error::SizeGuard(_) => "size_guard",
                Error::Integrality(_) => "integrality",
            };
            (e.exit_code(), String::new(), error_json(kind, &e.to_string()))
        }
    }
}
