//! Command-line front end.
//!
//! Five subcommands: `classify` (shape-based primitivity verdicts), `shapes`
//! (enumerate every cuspidal shape for given parameters, with verdicts),
//! `hecke` (induced-module simplicity tables for a Hecke algebra built from
//! flags), `oracle` (brute-force group-level verification of a pinned corpus
//! case), and `verify` (the end-to-end verification suite).
//!
//! Every run echoes its full resolved configuration, including seeds, as the
//! first line (text/TSV) or under the `"config"` key (JSON).  Output is
//! byte-identical across reruns with the same flags and seed.  Exit codes:
//! 0 = verdict/report produced, 1 = a verification mismatch was found,
//! 2 = invalid input.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classify::{
    enumerate_cuspidal_shapes, is_primitive_series, is_primitive_unipotent, CuspidalShapeGL,
    GroupCase, GroupKind, JordanFactor, JordanFactorKind, PrimitivityVerdict,
};
use crate::coxeter::CoxeterType;
use crate::error::Error;
use crate::field::{multiplicative_order, Field};
use crate::grouprep::{find_cuspidal_unipotent, oracle_primitivity, GlGroup, LeviGroup};
use crate::hecke::HeckeAlgebra;
use crate::verify::{conclusively_reducible, run as run_criteria};

/// Relative path tried first when no manifest flag is given.
pub const DEFAULT_MANIFEST: &str = "corpus/desk_corpus.json";
/// Committed manifest, compiled in as the fallback ground truth.
pub const EMBEDDED_MANIFEST: &str = include_str!("../../../corpus/desk_corpus.json");

#[derive(Parser)]
#[command(
    name = "hcprim",
    version,
    about = "Primitivity of modular Harish-Chandra series for finite classical groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every randomized procedure.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Tsv => "tsv",
            Format::Json => "json",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide primitivity of a Harish-Chandra series from combinatorial data.
    Classify {
        /// Group family: GL, GU, Sp, CSp or SO.
        #[arg(long)]
        case: Option<String>,
        /// Rank parameter of the group.
        #[arg(short = 'n', long)]
        n: Option<usize>,
        /// Size of the defining field (a prime power).
        #[arg(short = 'q', long)]
        q: Option<u64>,
        /// Coefficient characteristic (a prime different from the one of q).
        #[arg(short = 'l', long)]
        l: u64,
        /// Cuspidal shape, e.g. "1^1+(1*2^1)^1" (linear groups only).
        #[arg(long)]
        shape: Option<String>,
        /// Jordan-decomposition route: comma-separated factors KIND:n:q or
        /// KIND:n:q:SHAPE, e.g. "GL:3:3:1^1+(1*2^1)^1,GU:2:4".
        #[arg(long, conflicts_with_all = ["case", "n", "q", "shape"])]
        factors: Option<String>,
    },
    /// Enumerate every cuspidal shape for the given parameters, with verdicts.
    Shapes {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'q', long)]
        q: u64,
        #[arg(short = 'l', long)]
        l: u64,
    },
    /// Induced-module simplicity table for a Hecke algebra built from flags.
    Hecke {
        /// Coxeter type, e.g. "A2", "B2", "A1xA1".
        #[arg(long = "type")]
        typ: String,
        /// Order of the coefficient field (a prime power).
        #[arg(long)]
        field: u64,
        /// Per-orbit parameters: comma-separated nonzero field elements.
        #[arg(long)]
        params: String,
        /// One generator subset, comma-separated 1-based indices ("none" for
        /// the empty subset); omitted = sweep every proper subset.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Run the brute-force group oracle on pinned corpus cases.
    Oracle {
        /// Corpus case id; omitted = every case in the manifest.
        #[arg(long)]
        case: Option<String>,
        /// Corpus manifest path (default: corpus/desk_corpus.json, falling
        /// back to the compiled-in copy).
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Run the end-to-end verification suite.
    Verify {
        /// Comma-separated check numbers in 1..=7; omitted = all seven.
        #[arg(long)]
        criteria: Option<String>,
    },
}

/// One pinned corpus entry: the series data, the seed it was frozen with,
/// and the expected classification and oracle outcomes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusCase {
    pub id: String,
    pub n: usize,
    pub q: u64,
    pub l: u64,
    pub composition: Vec<usize>,
    pub cuspidal_dims: Vec<usize>,
    pub shape: String,
    pub classification_verdict: String,
    pub classification_witness: Option<Vec<usize>>,
    pub expected_simples: Vec<ExpectedSimple>,
    pub seed: u64,
    pub note: String,
}

/// Expected oracle verdict for one simple in a corpus series, in canonical
/// order (sorted by dimension, then multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedSimple {
    pub dim: usize,
    pub multiplicity: usize,
    pub primitive: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Corpus {
    pub cases: Vec<CorpusCase>,
}

/// Parse and execute `argv`, returning the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Classify { case, n, q, l, shape, factors } => {
            cmd_classify(cli, case, *n, *q, *l, shape, factors)
        }
        Command::Shapes { n, q, l } => cmd_shapes(cli, *n, *q, *l),
        Command::Hecke { typ, field, params, subset } => {
            cmd_hecke(cli, typ, *field, params, subset)
        }
        Command::Oracle { case, manifest } => cmd_oracle(cli, case, manifest),
        Command::Verify { criteria } => cmd_verify(cli, criteria),
    }
}

fn config_line(cli: &Cli, sub: &str, pairs: &[(&str, String)]) -> String {
    let mut s = format!("# hcprim {sub}");
    for (k, v) in pairs {
        s.push_str(&format!(" {k}={v}"));
    }
    s.push_str(&format!(" format={} seed={}", cli.format.name(), cli.seed));
    s
}

fn config_json(cli: &Cli, sub: &str, pairs: &[(&str, String)]) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    map.insert("subcommand".into(), json!(sub));
    for (k, v) in pairs {
        map.insert((*k).into(), json!(v));
    }
    map.insert("format".into(), json!(cli.format.name()));
    map.insert("seed".into(), json!(cli.seed));
    serde_json::Value::Object(map)
}

fn print_tsv(header: &[&str], rows: &[Vec<String>]) {
    println!("{}", header.join("\t"));
    for row in rows {
        println!("{}", row.join("\t"));
    }
}

fn emit(
    cli: &Cli,
    sub: &str,
    pairs: &[(&str, String)],
    results: serde_json::Value,
    text: Vec<String>,
    tsv_header: &[&str],
    tsv_rows: Vec<Vec<String>>,
) {
    match cli.format {
        Format::Json => {
            let doc = json!({ "config": config_json(cli, sub, pairs), "results": results });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("{}", config_line(cli, sub, pairs));
            for line in text {
                println!("{line}");
            }
        }
        Format::Tsv => {
            println!("{}", config_line(cli, sub, pairs));
            print_tsv(tsv_header, &tsv_rows);
        }
    }
}

fn witness_text(w: &Option<Vec<usize>>) -> String {
    match w {
        None => "-".to_string(),
        Some(parts) => parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
    }
}

fn verdict_text_lines(v: &PrimitivityVerdict) -> Vec<String> {
    vec![
        format!(
            "case {} n={} q={} l={} e={} shape {}",
            v.case,
            v.n,
            v.q,
            v.l,
            v.e,
            v.shape.as_deref().unwrap_or("-")
        ),
        format!("verdict {} ({})", v.verdict, v.clause),
        format!("witness {}", witness_text(&v.witness)),
    ]
}

fn verdict_tsv_row(v: &PrimitivityVerdict) -> Vec<String> {
    vec![
        v.case.clone(),
        v.n.to_string(),
        v.q.to_string(),
        v.l.to_string(),
        v.e.to_string(),
        v.shape.clone().unwrap_or_else(|| "-".into()),
        v.verdict.clone(),
        witness_text(&v.witness),
        v.clause.clone(),
    ]
}

const VERDICT_HEADER: [&str; 9] =
    ["case", "n", "q", "l", "e", "shape", "verdict", "witness", "clause"];

fn cmd_classify(
    cli: &Cli,
    case: &Option<String>,
    n: Option<usize>,
    q: Option<u64>,
    l: u64,
    shape: &Option<String>,
    factors: &Option<String>,
) -> Result<i32, Error> {
    let verdict;
    let mut pairs: Vec<(&str, String)> = Vec::new();
    if let Some(factor_text) = factors {
        pairs.push(("factors", factor_text.clone()));
        pairs.push(("l", l.to_string()));
        let parsed = parse_factor_list(factor_text, l)?;
        verdict = is_primitive_series(&parsed, l)?;
    } else {
        let case_name = case
            .as_deref()
            .ok_or_else(|| Error::BadInput("--case is required without --factors".into()))?;
        let n = n.ok_or_else(|| Error::BadInput("-n is required without --factors".into()))?;
        let q = q.ok_or_else(|| Error::BadInput("-q is required without --factors".into()))?;
        pairs.push(("case", case_name.to_string()));
        pairs.push(("n", n.to_string()));
        pairs.push(("q", q.to_string()));
        pairs.push(("l", l.to_string()));
        if let Some(s) = shape {
            pairs.push(("shape", s.clone()));
        }
        let kind = GroupKind::parse(case_name)?;
        let group_case = GroupCase::new(kind, n, q, l)?;
        let parsed_shape = match shape {
            Some(text) => Some(CuspidalShapeGL::parse(text, group_case.e()?, l)?),
            None => None,
        };
        verdict = is_primitive_unipotent(&group_case, parsed_shape.as_ref())?;
    }
    emit(
        cli,
        "classify",
        &pairs,
        serde_json::to_value(&verdict).expect("serializable"),
        verdict_text_lines(&verdict),
        &VERDICT_HEADER,
        vec![verdict_tsv_row(&verdict)],
    );
    Ok(0)
}

/// Parse `KIND:n:q` or `KIND:n:q:SHAPE` factors separated by commas.
fn parse_factor_list(text: &str, l: u64) -> Result<Vec<JordanFactor>, Error> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let fields: Vec<&str> = piece.splitn(4, ':').collect();
        if fields.len() < 3 {
            return Err(Error::BadInput(format!(
                "factor '{piece}' is not KIND:n:q or KIND:n:q:SHAPE"
            )));
        }
        let kind = match GroupKind::parse(fields[0])? {
            GroupKind::Gl => JordanFactorKind::Linear,
            GroupKind::Gu => JordanFactorKind::Unitary,
            other => {
                return Err(Error::BadInput(format!(
                    "factor kind {} is not linear or unitary",
                    other.name()
                )))
            }
        };
        let n: usize = fields[1]
            .parse()
            .map_err(|_| Error::BadInput(format!("bad factor rank '{}'", fields[1])))?;
        let q: u64 = fields[2]
            .parse()
            .map_err(|_| Error::BadInput(format!("bad factor field size '{}'", fields[2])))?;
        let shape = match fields.get(3) {
            Some(text) => Some(CuspidalShapeGL::parse(text, multiplicative_order(q, l)?, l)?),
            None => None,
        };
        out.push(JordanFactor { kind, n, q, shape });
    }
    Ok(out)
}

fn cmd_shapes(cli: &Cli, n: usize, q: u64, l: u64) -> Result<i32, Error> {
    let case = GroupCase::new(GroupKind::Gl, n, q, l)?;
    let e = case.e()?;
    let pairs = [
        ("n", n.to_string()),
        ("q", q.to_string()),
        ("l", l.to_string()),
        ("e", e.to_string()),
    ];
    let mut verdicts = Vec::new();
    for shape in enumerate_cuspidal_shapes(n, e, l)? {
        verdicts.push(is_primitive_unipotent(&case, Some(&shape))?);
    }
    let text = verdicts
        .iter()
        .map(|v| {
            format!(
                "{}  {} ({})  witness {}",
                v.shape.as_deref().unwrap_or("-"),
                v.verdict,
                v.clause,
                witness_text(&v.witness)
            )
        })
        .collect();
    let rows = verdicts.iter().map(verdict_tsv_row).collect();
    emit(
        cli,
        "shapes",
        &pairs,
        serde_json::to_value(&verdicts).expect("serializable"),
        text,
        &VERDICT_HEADER,
        rows,
    );
    Ok(0)
}

#[derive(Serialize)]
struct HeckeRow {
    subset: Vec<usize>,
    simple_dim: usize,
    induced_dim: usize,
    reducible: bool,
}

fn cmd_hecke(
    cli: &Cli,
    typ_text: &str,
    field_order: u64,
    params_text: &str,
    subset: &Option<String>,
) -> Result<i32, Error> {
    let typ = CoxeterType::parse(typ_text)?;
    let field = Field::of_order(field_order)?;
    let params: Vec<u32> = params_text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::BadInput(format!("bad parameter '{p}'")))
        })
        .collect::<Result<_, _>>()?;
    let alg = HeckeAlgebra::new(&field, &typ, &params)?;
    let rank = typ.num_generators();
    let subsets: Vec<Vec<usize>> = match subset {
        Some(text) => vec![parse_subset(text, rank)?],
        None => (0..(1u32 << rank) - 1)
            .map(|mask| (1..=rank).filter(|s| mask >> (s - 1) & 1 == 1).collect())
            .collect(),
    };
    let mut rows_out: Vec<HeckeRow> = Vec::new();
    for j in &subsets {
        let (sub, _) = alg.parabolic(j)?;
        for (x, _mult) in sub.simples(cli.seed)? {
            let induced = if x.field() == alg.field() {
                alg.induce(j, &x)?
            } else {
                alg.extend_scalars(x.field())?.induce(j, &x)?
            };
            let reducible = conclusively_reducible(&induced.module, cli.seed)?;
            rows_out.push(HeckeRow {
                subset: j.clone(),
                simple_dim: x.dim(),
                induced_dim: induced.module.dim(),
                reducible,
            });
        }
    }
    let pairs = [
        ("type", typ_text.to_string()),
        ("field", field_order.to_string()),
        ("params", params_text.to_string()),
        (
            "subset",
            subset.clone().unwrap_or_else(|| "all-proper".into()),
        ),
    ];
    let subset_text = |j: &[usize]| -> String {
        if j.is_empty() {
            "-".to_string()
        } else {
            j.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        }
    };
    let text = rows_out
        .iter()
        .map(|r| {
            format!(
                "subset {{{}}}  simple dim {}  induced dim {}  {}",
                subset_text(&r.subset),
                r.simple_dim,
                r.induced_dim,
                if r.reducible { "reducible" } else { "irreducible" }
            )
        })
        .collect();
    let rows = rows_out
        .iter()
        .map(|r| {
            vec![
                subset_text(&r.subset),
                r.simple_dim.to_string(),
                r.induced_dim.to_string(),
                r.reducible.to_string(),
            ]
        })
        .collect();
    emit(
        cli,
        "hecke",
        &pairs,
        serde_json::to_value(&rows_out).expect("serializable"),
        text,
        &["subset", "simple_dim", "induced_dim", "reducible"],
        rows,
    );
    Ok(0)
}

fn parse_subset(text: &str, rank: usize) -> Result<Vec<usize>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "none" {
        return Ok(Vec::new());
    }
    let mut out: Vec<usize> = trimmed
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadInput(format!("bad generator index '{p}'")))
        })
        .collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    if out.iter().any(|&s| s == 0 || s > rank) {
        return Err(Error::BadInput(format!(
            "generator indices must lie in 1..={rank}"
        )));
    }
    if out.len() == rank {
        return Err(Error::BadInput("subset must be proper".into()));
    }
    Ok(out)
}

/// Load the corpus manifest: explicit path, else the default relative path,
/// else the compiled-in copy.  Returns the text and a description of where
/// it came from.
pub fn load_manifest(path: &Option<PathBuf>) -> Result<(String, String), Error> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::BadInput(format!("manifest {}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        None => {
            let default = PathBuf::from(DEFAULT_MANIFEST);
            if default.is_file() {
                let text = std::fs::read_to_string(&default)
                    .map_err(|e| Error::BadInput(format!("manifest {DEFAULT_MANIFEST}: {e}")))?;
                Ok((text, DEFAULT_MANIFEST.to_string()))
            } else {
                Ok((EMBEDDED_MANIFEST.to_string(), "builtin".to_string()))
            }
        }
    }
}

/// Outcome of replaying one corpus case through both the classification and
/// the group oracle.
#[derive(Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub classification: PrimitivityVerdict,
    pub simples: Vec<ExpectedSimple>,
    pub expected_simples: Vec<ExpectedSimple>,
    pub agreement: bool,
}

/// Replay one corpus case: classify its shape, run the oracle on its series,
/// canonicalize the per-simple verdicts, and compare both against the pinned
/// expectations.
pub fn replay_corpus_case(c: &CorpusCase) -> Result<CaseOutcome, Error> {
    let case = GroupCase::new(GroupKind::Gl, c.n, c.q, c.l)?;
    let shape = CuspidalShapeGL::parse(&c.shape, case.e()?, c.l)?;
    let classification = is_primitive_unipotent(&case, Some(&shape))?;

    let group = GlGroup::new(c.n, c.q)?;
    let coeff = Field::new(c.l, 1)?;
    let levi = LeviGroup::new(&c.composition, c.q)?;
    if c.cuspidal_dims.len() != levi.factors().len() {
        return Err(Error::BadInput(format!(
            "case {}: {} cuspidal dims for {} Levi factors",
            c.id,
            c.cuspidal_dims.len(),
            levi.factors().len()
        )));
    }
    let mut x0 = Vec::new();
    for (f, &want) in levi.factors().iter().zip(&c.cuspidal_dims) {
        let found = find_cuspidal_unipotent(f, &coeff, c.seed)?
            .into_iter()
            .find(|m| m.dim() == want)
            .ok_or_else(|| {
                Error::NoCuspidal(format!(
                    "case {}: no unipotent cuspidal of dimension {want} on GL{}({})",
                    c.id,
                    f.n(),
                    f.q()
                ))
            })?;
        x0.push(found);
    }
    let verdicts = oracle_primitivity(&group, &c.composition, &x0, c.seed)?;
    let mut simples: Vec<ExpectedSimple> = verdicts
        .iter()
        .map(|v| ExpectedSimple {
            dim: v.dim,
            multiplicity: v.multiplicity,
            primitive: v.primitive,
            witness: v.witness.clone(),
        })
        .collect();
    simples.sort_by(|a, b| {
        (a.dim, a.multiplicity, a.primitive)
            .cmp(&(b.dim, b.multiplicity, b.primitive))
            .then_with(|| a.witness.cmp(&b.witness))
    });

    let agreement = classification.verdict == c.classification_verdict
        && classification.witness == c.classification_witness
        && simples == c.expected_simples;
    Ok(CaseOutcome {
        id: c.id.clone(),
        classification,
        simples,
        expected_simples: c.expected_simples.clone(),
        agreement,
    })
}

fn cmd_oracle(
    cli: &Cli,
    case_id: &Option<String>,
    manifest: &Option<PathBuf>,
) -> Result<i32, Error> {
    let (text, source) = load_manifest(manifest)?;
    let corpus: Corpus = serde_json::from_str(&text)
        .map_err(|e| Error::BadInput(format!("manifest {source}: {e}")))?;
    let picks: Vec<&CorpusCase> = match case_id {
        Some(id) => {
            let found: Vec<&CorpusCase> = corpus.cases.iter().filter(|c| &c.id == id).collect();
            if found.is_empty() {
                return Err(Error::BadInput(format!("no corpus case named '{id}'")));
            }
            found
        }
        None => corpus.cases.iter().collect(),
    };
    let pairs = [
        ("manifest", source.clone()),
        (
            "case",
            case_id.clone().unwrap_or_else(|| "all".into()),
        ),
        (
            "case_seeds",
            picks
                .iter()
                .map(|c| format!("{}:{}", c.id, c.seed))
                .collect::<Vec<_>>()
                .join(","),
        ),
    ];
    let mut outcomes = Vec::new();
    for c in &picks {
        outcomes.push(replay_corpus_case(c)?);
    }
    let any_mismatch = outcomes.iter().any(|o| !o.agreement);

    let mut text_lines = Vec::new();
    let mut rows = Vec::new();
    for o in &outcomes {
        text_lines.push(format!(
            "case {}: classification {} witness {} [{}]",
            o.id,
            o.classification.verdict,
            witness_text(&o.classification.witness),
            if o.agreement { "ok" } else { "MISMATCH" }
        ));
        for s in &o.simples {
            text_lines.push(format!(
                "  simple dim {} x{}  {}  witness {}",
                s.dim,
                s.multiplicity,
                if s.primitive { "primitive" } else { "imprimitive" },
                witness_text(&s.witness)
            ));
            rows.push(vec![
                o.id.clone(),
                s.dim.to_string(),
                s.multiplicity.to_string(),
                s.primitive.to_string(),
                witness_text(&s.witness),
                o.agreement.to_string(),
            ]);
        }
    }
    text_lines.push(if any_mismatch {
        "corpus: MISMATCH".to_string()
    } else {
        format!("corpus: {} case(s) agree", outcomes.len())
    });

    emit(
        cli,
        "oracle",
        &pairs,
        serde_json::to_value(&outcomes).expect("serializable"),
        text_lines,
        &["case", "dim", "multiplicity", "primitive", "witness", "agreement"],
        rows,
    );
    Ok(if any_mismatch { 1 } else { 0 })
}

fn cmd_verify(cli: &Cli, criteria: &Option<String>) -> Result<i32, Error> {
    let which: Option<Vec<u32>> = match criteria {
        None => None,
        Some(text) => Some(
            text.split(',')
                .map(|p| {
                    p.trim().parse::<u32>().map_err(|_| {
                        Error::BadInput(format!("bad criterion number '{p}'"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    if let Some(ids) = &which {
        if ids.iter().any(|i| !(1..=7).contains(i)) {
            return Err(Error::BadInput("criteria must lie in 1..=7".into()));
        }
    }
    let reports = run_criteria(which.as_deref(), cli.seed);
    for r in &reports {
        eprintln!("# criterion {} took {} ms", r.id, r.millis);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let pairs = [(
        "criteria",
        criteria.clone().unwrap_or_else(|| "all".into()),
    )];
    let mut text: Vec<String> = reports.iter().map(|r| r.line()).collect();
    text.push(if failed == 0 {
        format!("verify: all {} criteria passed", reports.len())
    } else {
        format!("verify: {failed} of {} criteria FAILED", reports.len())
    });
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.name.to_string(),
                r.passed.to_string(),
                r.details.clone(),
            ]
        })
        .collect();
    emit(
        cli,
        "verify",
        &pairs,
        serde_json::to_value(&reports).expect("serializable"),
        text,
        &["id", "name", "passed", "details"],
        rows,
    );
    Ok(if failed > 0 { 1 } else { 0 })
}
