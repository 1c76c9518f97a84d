//! Command-line surface for the exact growth engine: dimension tables by
//! either route, cross-route verification, polynomial-degree fits, and
//! tableau counts, emitted as deterministic JSON or CSV reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gkdim_core::cocharacter::{self, fit_degree, FitError};
use gkdim_core::graded_model::{Family, GradingSpec};
use gkdim_core::spanning::{
    multidegrees_of_total, word_count, DimCache, Engine, MultiDegree, DEFAULT_WORD_CAP,
};
use gkdim_core::tableaux::{schur_dim_one_row, schur_dim_two_row, ssyt_count, Partition};
use gkdim_core::{Int, Nat};

#[derive(Parser)]
#[command(
    name = "gkdim",
    version,
    about = "Exact growth tables, degree fits, and tableau counts for graded matrix models"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-degree dimension increments a_m, by one or both routes.
    Am(AmArgs),
    /// Growth table plus a certified polynomial-degree fit.
    Fit(FitArgs),
    /// Semistandard tableau count of a shape, with closed forms when they exist.
    Schur(SchurArgs),
    /// Per-multidegree dimensions for the cyclic n x n matrix model.
    Sln(SlnArgs),
    /// Cross-check both dimension routes over the built-in verification matrix.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "sl2-z2")]
    Sl2Z2,
    #[value(name = "sl2-z2xz2")]
    Sl2Z2xz2,
    #[value(name = "sl2-z")]
    Sl2Z,
    #[value(name = "sln")]
    Sln,
}

impl FamilyArg {
    fn as_str(&self) -> &'static str {
        match self {
            FamilyArg::Sl2Z2 => "sl2-z2",
            FamilyArg::Sl2Z2xz2 => "sl2-z2xz2",
            FamilyArg::Sl2Z => "sl2-z",
            FamilyArg::Sln => "sln",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Formula,
    Both,
}

impl MethodArg {
    fn as_str(&self) -> &'static str {
        match self {
            MethodArg::Brute => "brute",
            MethodArg::Formula => "formula",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include per-m wall-clock timings in the JSON report. Timed runs
    /// are not byte-stable across invocations.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ModelArgs {
    /// Grading family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Matrix size; required by (and only valid for) --family sln.
    #[arg(long)]
    n: Option<u8>,
    /// Number of generators per support degree.
    #[arg(long)]
    k: u16,
    /// Enumerate all words instead of pinning the first letter.
    #[arg(long)]
    no_fix_first: bool,
    /// Per-multidegree cap on enumerated words; larger components are
    /// refused rather than attempted.
    #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
    max_words: u64,
}

impl ModelArgs {
    fn family(&self) -> Result<Family> {
        Ok(match self.family {
            FamilyArg::Sl2Z2 => Family::Sl2Z2,
            FamilyArg::Sl2Z2xz2 => Family::Sl2Z2Z2,
            FamilyArg::Sl2Z => Family::Sl2Z,
            FamilyArg::Sln => Family::Sln,
        })
    }

    fn spec(&self) -> Result<GradingSpec> {
        if self.k == 0 {
            bail!("--k must be at least 1");
        }
        match self.family {
            FamilyArg::Sln => {
                let n = self
                    .n
                    .ok_or_else(|| anyhow!("--family sln requires --n"))?;
                if n < 2 {
                    bail!("--n must be at least 2");
                }
                Ok(GradingSpec::sln(n))
            }
            _ => {
                if self.n.is_some() {
                    bail!("--n only applies to --family sln");
                }
                Ok(match self.family {
                    FamilyArg::Sl2Z2 => GradingSpec::sl2_z2(),
                    FamilyArg::Sl2Z2xz2 => GradingSpec::sl2_z2z2(),
                    FamilyArg::Sl2Z => GradingSpec::sl2_z(),
                    FamilyArg::Sln => unreachable!(),
                })
            }
        }
    }

    fn engine(&self, cache: Arc<DimCache>) -> Result<Engine> {
        Ok(Engine::new(self.spec()?, self.k)
            .with_fix_first(!self.no_fix_first)
            .with_word_cap(self.max_words)
            .with_cache(cache))
    }
}

#[derive(Args)]
struct AmArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Largest total degree to tabulate.
    #[arg(long)]
    m_max: u32,
    /// Dimension route: generic-matrix rank, closed-form sums, or both.
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Largest total degree sampled for the fit.
    #[arg(long, default_value_t = 60)]
    m_max: u32,
    /// Route producing the fitted growth table.
    #[arg(long, value_enum, default_value = "formula")]
    method: MethodArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SchurArgs {
    /// Partition shape as comma-separated row lengths, e.g. 4,2,1.
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<u32>,
    /// Number of tableau entries (alphabet size).
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SlnArgs {
    /// Matrix size.
    #[arg(long)]
    n: u8,
    /// Number of generators per support degree.
    #[arg(long)]
    k: u16,
    /// Largest total degree to tabulate.
    #[arg(long)]
    m_max: u32,
    /// Also compute associative dimensions per multidegree: the filtered
    /// spanning words and the full word span.
    #[arg(long)]
    assoc: bool,
    /// Enumerate all words instead of pinning the first letter.
    #[arg(long)]
    no_fix_first: bool,
    /// Per-multidegree cap on enumerated words.
    #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
    max_words: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct ConfigEcho {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fix_first: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_words: Option<u64>,
    format: String,
}

impl ConfigEcho {
    fn new(command: &str, format: FormatArg) -> Self {
        ConfigEcho {
            command: command.to_string(),
            family: None,
            n: None,
            k: None,
            m_max: None,
            method: None,
            shape: None,
            fix_first: None,
            max_words: None,
            format: match format {
                FormatArg::Json => "json".to_string(),
                FormatArg::Csv => "csv".to_string(),
            },
        }
    }
}

#[derive(Serialize)]
struct FitEcho {
    degree: u32,
    stride: u32,
    window: [u32; 2],
    stable: bool,
}

#[derive(Serialize)]
struct TimingRow {
    m: u32,
    millis: u64,
}

#[derive(Serialize)]
struct Report {
    config: ConfigEcho,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit: Option<FitEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Vec<TimingRow>>,
}

impl Report {
    fn render(&self, format: FormatArg) -> String {
        match format {
            FormatArg::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            FormatArg::Csv => {
                let mut s = String::new();
                s.push_str(&csv_line(&self.columns));
                for row in &self.rows {
                    s.push_str(&csv_line(row));
                }
                s
            }
        }
    }
}

fn csv_line<S: AsRef<str>>(cells: &[S]) -> String {
    let mut out = String::new();
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let c = cell.as_ref();
        if c.contains(',') || c.contains('"') {
            out.push('"');
            out.push_str(&c.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(c);
        }
    }
    out.push('\n');
    out
}

fn emit(report: &Report, output: &OutputArgs) -> Result<()> {
    let text = report.render(output.format);
    match &output.out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing report to {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Cache file under the directory named by GKDIM_CACHE_DIR, when set.
fn cache_file() -> Option<PathBuf> {
    std::env::var_os("GKDIM_CACHE_DIR").map(|dir| Path::new(&dir).join("dims.json"))
}

fn load_cache() -> Result<Arc<DimCache>> {
    let cache = Arc::new(DimCache::new());
    if let Some(file) = cache_file() {
        if file.exists() {
            let text = fs::read_to_string(&file)
                .with_context(|| format!("reading cache {}", file.display()))?;
            let entries: BTreeMap<String, u64> = serde_json::from_str(&text)
                .with_context(|| format!("parsing cache {}", file.display()))?;
            cache.absorb(entries);
        }
    }
    Ok(cache)
}

fn save_cache(cache: &DimCache) -> Result<()> {
    if let Some(file) = cache_file() {
        if let Some(dir) = file.parent() {
            fs::create_dir_all(dir)
                .with_context(|| format!("creating cache dir {}", dir.display()))?;
        }
        let map: BTreeMap<String, u64> = cache.snapshot().into_iter().collect();
        let mut text = serde_json::to_string_pretty(&map).expect("cache serializes");
        text.push('\n');
        fs::write(&file, text)
            .with_context(|| format!("writing cache {}", file.display()))?;
    }
    Ok(())
}

/// Refuse a whole brute-force run up front if any multidegree in its
/// range would blow the word cap, instead of grinding through the small
/// components first and failing mid-table.
fn preflight_word_caps(engine: &Engine, m_max: u32) -> Result<()> {
    for m in 1..=m_max {
        for md in multidegrees_of_total(engine.spec(), engine.k(), m) {
            let over = match word_count(&md, engine.fix_first()) {
                Some(words) => (words > u128::from(engine.word_cap()))
                    .then(|| words.to_string()),
                None => Some("more than 2^128".to_string()),
            };
            if let Some(words) = over {
                bail!(
                    "refusing this configuration: multidegree {} at m={m} needs {words} words, \
                     over the cap of {}; raise --max-words to proceed",
                    md.canonical(),
                    engine.word_cap()
                );
            }
        }
    }
    Ok(())
}

/// One a_m row by the requested route(s). Returns the values in column
/// order plus the per-row match verdict (None unless both routes ran).
fn am_row(
    engine: Option<&Engine>,
    family: Family,
    k: u16,
    m: u32,
    method: MethodArg,
) -> Result<(Vec<String>, Option<bool>)> {
    let brute = match method {
        MethodArg::Brute | MethodArg::Both => {
            let e = engine.expect("engine present for brute route");
            Some(Nat::from(e.a_m(m).with_context(|| {
                format!("brute-force dimensions at m={m}; raise --max-words to allow more words")
            })?))
        }
        MethodArg::Formula => None,
    };
    let formula = match method {
        MethodArg::Formula | MethodArg::Both => Some(
            cocharacter::a_m(family, k, m)
                .map_err(|e| anyhow!("closed-form route unavailable: {e}; use --method brute"))?,
        ),
        MethodArg::Brute => None,
    };
    let mut cells = vec![m.to_string()];
    if let Some(b) = &brute {
        cells.push(b.to_string());
    }
    if let Some(f) = &formula {
        cells.push(f.to_string());
    }
    let verdict = match (&brute, &formula) {
        (Some(b), Some(f)) => {
            let ok = b == f;
            cells.push(ok.to_string());
            Some(ok)
        }
        _ => None,
    };
    Ok((cells, verdict))
}

fn am_columns(method: MethodArg) -> Vec<String> {
    let mut cols = vec!["m".to_string()];
    match method {
        MethodArg::Brute => cols.push("a_m_brute".to_string()),
        MethodArg::Formula => cols.push("a_m_formula".to_string()),
        MethodArg::Both => {
            cols.push("a_m_brute".to_string());
            cols.push("a_m_formula".to_string());
            cols.push("match".to_string());
        }
    }
    cols
}

fn cmd_am(args: AmArgs) -> Result<ExitCode> {
    if args.m_max < 1 {
        bail!("--m-max must be at least 1");
    }
    let family = args.model.family()?;
    let cache = load_cache()?;
    let needs_engine = args.method != MethodArg::Formula;
    let engine = if needs_engine {
        Some(args.model.engine(cache.clone())?)
    } else {
        // Validate the model flags even when no engine is needed.
        args.model.spec()?;
        None
    };
    if family == Family::Sln && args.method != MethodArg::Brute {
        bail!(
            "no closed form exists for the cyclic family; use --method brute or the sln subcommand"
        );
    }
    if let Some(e) = &engine {
        preflight_word_caps(e, args.m_max)?;
    }

    let mut config = ConfigEcho::new("am", args.output.format);
    config.family = Some(args.model.family.as_str().to_string());
    config.n = args.model.n;
    config.k = Some(u32::from(args.model.k));
    config.m_max = Some(args.m_max);
    config.method = Some(args.method.as_str().to_string());
    config.fix_first = Some(!args.model.no_fix_first);
    config.max_words = Some(args.model.max_words);

    let mut rows = Vec::new();
    let mut timings = Vec::new();
    let mut all_match = true;
    for m in 1..=args.m_max {
        let started = Instant::now();
        let (cells, verdict) = am_row(engine.as_ref(), family, args.model.k, m, args.method)?;
        timings.push(TimingRow {
            m,
            millis: started.elapsed().as_millis() as u64,
        });
        if verdict == Some(false) {
            all_match = false;
        }
        rows.push(cells);
    }

    let report = Report {
        config,
        columns: am_columns(args.method),
        rows,
        fit: None,
        timings: args.output.timings.then_some(timings),
    };
    emit(&report, &args.output)?;
    save_cache(&cache)?;
    if !all_match {
        eprintln!("route mismatch detected; see the match column");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fit(args: FitArgs) -> Result<ExitCode> {
    if args.m_max < 1 {
        bail!("--m-max must be at least 1");
    }
    let family = args.model.family()?;
    if args.method == MethodArg::Both {
        bail!("--method both is not meaningful for fit; pick brute or formula");
    }
    if family == Family::Sln && args.method == MethodArg::Formula {
        bail!("no closed form exists for the cyclic family; use --method brute");
    }
    let cache = load_cache()?;

    let table = match args.method {
        MethodArg::Formula => {
            args.model.spec()?;
            cocharacter::growth_table(family, args.model.k, args.m_max)
                .map_err(|e| anyhow!("closed-form route unavailable: {e}"))?
        }
        MethodArg::Brute => {
            let engine = args.model.engine(cache.clone())?;
            preflight_word_caps(&engine, args.m_max)?;
            engine
                .growth_table(args.m_max)
                .context("brute-force growth table")?
        }
        MethodArg::Both => unreachable!(),
    };
    let growth = table.growth();
    let samples: Vec<(u32, Int)> = growth
        .iter()
        .enumerate()
        .map(|(i, g)| (i as u32 + 1, Int::from(g.clone())))
        .collect();
    let fit = fit_degree(&samples).map_err(|e| match e {
        FitError::InsufficientData { len } => anyhow!(
            "only {len} usable samples; raise --m-max until the trailing difference window closes"
        ),
    })?;

    let mut config = ConfigEcho::new("fit", args.output.format);
    config.family = Some(args.model.family.as_str().to_string());
    config.n = args.model.n;
    config.k = Some(u32::from(args.model.k));
    config.m_max = Some(args.m_max);
    config.method = Some(args.method.as_str().to_string());
    config.fix_first = Some(!args.model.no_fix_first);
    config.max_words = Some(args.model.max_words);

    let col = match args.method {
        MethodArg::Brute => "a_m_brute",
        _ => "a_m_formula",
    };
    let rows = table
        .a
        .iter()
        .zip(&growth)
        .enumerate()
        .map(|(i, (a, g))| vec![(i + 1).to_string(), a.to_string(), g.to_string()])
        .collect();

    let report = Report {
        config,
        columns: vec!["m".to_string(), col.to_string(), "g".to_string()],
        rows,
        fit: Some(FitEcho {
            degree: fit.degree,
            stride: fit.stride,
            window: [fit.window.0, fit.window.1],
            stable: fit.stable,
        }),
        timings: None,
    };
    emit(&report, &args.output)?;
    save_cache(&cache)?;
    eprintln!(
        "fitted degree {} (stride {}, window {}..={}, {})",
        fit.degree,
        fit.stride,
        fit.window.0,
        fit.window.1,
        if fit.stable { "stable" } else { "UNSTABLE" }
    );
    if !fit.stable {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_schur(args: SchurArgs) -> Result<ExitCode> {
    if args.k < 1 {
        bail!("--k must be at least 1");
    }
    let shape = Partition::new(args.shape.clone())
        .map_err(|e| anyhow!("invalid shape: {e}"))?;
    let enumerated = ssyt_count(&shape, args.k);
    let closed = match shape.parts() {
        [] => Some(schur_dim_one_row(0, args.k)),
        [p] => Some(schur_dim_one_row(*p, args.k)),
        [a, b] => Some(schur_dim_two_row(*a, *b, args.k).expect("a >= b by partition validity")),
        _ => None,
    };
    let equal = closed.as_ref().map(|c| *c == enumerated);

    let mut config = ConfigEcho::new("schur", args.output.format);
    config.k = Some(args.k);
    config.shape = Some(shape.to_string());

    let report = Report {
        config,
        columns: ["shape", "k", "enumerated", "closed_form", "equal"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows: vec![vec![
            shape.to_string(),
            args.k.to_string(),
            enumerated.to_string(),
            closed.as_ref().map(Nat::to_string).unwrap_or_default(),
            equal.map(|e| e.to_string()).unwrap_or_default(),
        ]],
        fit: None,
        timings: None,
    };
    emit(&report, &args.output)?;
    if equal == Some(false) {
        eprintln!("closed form disagrees with enumeration");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sln(args: SlnArgs) -> Result<ExitCode> {
    if args.n < 2 {
        bail!("--n must be at least 2");
    }
    if args.k == 0 {
        bail!("--k must be at least 1");
    }
    if args.m_max < 1 {
        bail!("--m-max must be at least 1");
    }
    let cache = load_cache()?;
    let engine = Engine::new(GradingSpec::sln(args.n), args.k)
        .with_fix_first(!args.no_fix_first)
        .with_word_cap(args.max_words)
        .with_cache(cache.clone());
    preflight_word_caps(&engine, args.m_max)?;

    let mut config = ConfigEcho::new("sln", args.output.format);
    config.family = Some("sln".to_string());
    config.n = Some(args.n);
    config.k = Some(u32::from(args.k));
    config.m_max = Some(args.m_max);
    config.fix_first = Some(!args.no_fix_first);
    config.max_words = Some(args.max_words);

    let mut columns = vec![
        "m".to_string(),
        "multidegree".to_string(),
        "lie_dim".to_string(),
    ];
    if args.assoc {
        columns.push("assoc_filtered_dim".to_string());
        columns.push("assoc_all_dim".to_string());
    }

    let mut rows = Vec::new();
    let mut timings = Vec::new();
    for m in 1..=args.m_max {
        let started = Instant::now();
        let dims = engine.component_dims_of_total(m).with_context(|| {
            format!("word enumeration refused at m={m}; raise --max-words to allow more words")
        })?;
        let (filtered, all): (BTreeMap<MultiDegree, u64>, BTreeMap<MultiDegree, u64>) =
            if args.assoc {
                (
                    engine
                        .assoc_spanning_dims(m)
                        .with_context(|| format!("filtered associative dims at m={m}"))?
                        .into_iter()
                        .collect(),
                    engine
                        .assoc_all_dims(m)
                        .with_context(|| format!("associative dims at m={m}"))?
                        .into_iter()
                        .collect(),
                )
            } else {
                (BTreeMap::new(), BTreeMap::new())
            };
        for (md, dim) in dims {
            let mut row = vec![m.to_string(), md.canonical(), dim.to_string()];
            if args.assoc {
                row.push(filtered.get(&md).copied().unwrap_or(0).to_string());
                row.push(all.get(&md).copied().unwrap_or(0).to_string());
            }
            rows.push(row);
        }
        timings.push(TimingRow {
            m,
            millis: started.elapsed().as_millis() as u64,
        });
    }

    let report = Report {
        config,
        columns,
        rows,
        fit: None,
        timings: args.output.timings.then_some(timings),
    };
    emit(&report, &args.output)?;
    save_cache(&cache)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let cache = load_cache()?;
    let matrix: [(FamilyArg, Family, GradingSpec, u32); 3] = [
        (FamilyArg::Sl2Z2, Family::Sl2Z2, GradingSpec::sl2_z2(), 8),
        (
            FamilyArg::Sl2Z2xz2,
            Family::Sl2Z2Z2,
            GradingSpec::sl2_z2z2(),
            7,
        ),
        (FamilyArg::Sl2Z, Family::Sl2Z, GradingSpec::sl2_z(), 7),
    ];

    let mut config = ConfigEcho::new("verify", args.output.format);
    config.method = Some("both".to_string());

    let mut rows = Vec::new();
    let mut all_match = true;
    for (name, family, spec, m_max) in matrix {
        for k in 1..=2u16 {
            let engine = Engine::new(spec.clone(), k).with_cache(cache.clone());
            for m in 1..=m_max {
                let brute = Nat::from(engine.a_m(m)?);
                let formula = cocharacter::a_m(family, k, m)?;
                let ok = brute == formula;
                all_match &= ok;
                rows.push(vec![
                    name.as_str().to_string(),
                    k.to_string(),
                    m.to_string(),
                    brute.to_string(),
                    formula.to_string(),
                    ok.to_string(),
                ]);
            }
        }
    }

    let report = Report {
        config,
        columns: ["family", "k", "m", "a_m_brute", "a_m_formula", "match"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows,
        fit: None,
        timings: None,
    };
    emit(&report, &args.output)?;
    save_cache(&cache)?;
    if all_match {
        eprintln!("all routes agree over the verification matrix");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("route mismatch detected; see the match column");
        Ok(ExitCode::from(1))
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Am(args) => cmd_am(args),
        Cmd::Fit(args) => cmd_fit(args),
        Cmd::Schur(args) => cmd_schur(args),
        Cmd::Sln(args) => cmd_sln(args),
        Cmd::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
