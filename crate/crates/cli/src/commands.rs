use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use serde::Serialize;
use wiener_core::bounds::{self, BoundReport};
use wiener_core::graph::EdgeListReader;
use wiener_core::verifier::{self, Execution, Family, InvalidLines, RandomCorpus};
use wiener_core::{generators, parse_graph6, write_graph6, Error, Graph, SweepSummary};

use crate::output::{self, OutputRecord};
use crate::{
    BoundArgs, ComputeArgs, Format, GenFamily, GenerateArgs, MonotonicityArgs, SharpnessArgs,
    VerifyArgs,
};

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn record_for(g: &Graph, allow_disconnected: bool) -> anyhow::Result<OutputRecord> {
    let graph6 = write_graph6(g);
    match bounds::evaluate_par(g) {
        Ok(r) => Ok(OutputRecord::connected(graph6, &r)),
        Err(Error::Disconnected | Error::EmptyGraph) if allow_disconnected => {
            Ok(OutputRecord::disconnected(graph6, g))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn compute(args: &ComputeArgs) -> anyhow::Result<ExitCode> {
    let input = output::open_lines(args.input.as_deref())?;
    let mut out = stdout();
    if !args.json {
        writeln!(out, "{}", output::RECORD_HEADER)?;
    }
    let emit = |out: &mut BufWriter<_>, index: usize, g: Graph| -> anyhow::Result<()> {
        let rec = record_for(&g, args.allow_disconnected)
            .with_context(|| format!("graph {index}"))?;
        if args.json {
            output::json_line(out, &rec)?;
        } else {
            writeln!(out, "{}", output::record_row(&rec))?;
        }
        Ok(())
    };
    match args.format {
        Format::G6 => {
            let mut index = 0;
            for (i, line) in input.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                index += 1;
                let g = parse_graph6(&line).map_err(|e| anyhow!("line {}: {e}", i + 1))?;
                emit(&mut out, index, g)?;
            }
        }
        Format::Edgelist => {
            for (i, g) in EdgeListReader::new(input.lines()).enumerate() {
                emit(&mut out, i + 1, g?)?;
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BoundOutput {
    n: u64,
    m: u64,
    d: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_moore: Option<u64>,
    bound: u64,
    terms: BoundTerms,
}

#[derive(Serialize)]
struct BoundTerms {
    pair_baseline: u64,
    minus_size: u64,
    path_surplus: u64,
    off_path_vertices: u64,
    off_path_surplus_each: u64,
}

pub fn bound(args: &BoundArgs) -> anyhow::Result<ExitCode> {
    let (n, m) = (args.n, args.m);
    let (d, d_moore) = match (args.d, args.delta) {
        (Some(d), _) => (d, None),
        (None, Some(delta)) => {
            let d_min = bounds::diameter_lb_from_moore(n, delta)?;
            (bounds::clamped_diameter(n, m, d_min)?, Some(d_min))
        }
        (None, None) => bail!("one of --d or --delta is required"),
    };
    let value = bounds::theorem1_bound(n, m, d)?;
    let terms = BoundTerms {
        pair_baseline: n.saturating_mul(n - 1),
        minus_size: m,
        path_surplus: bounds::x_excess(d),
        off_path_vertices: n - d - 1,
        off_path_surplus_each: bounds::z_excess_per_vertex(d)?,
    };
    let mut out = stdout();
    if args.json {
        let rec = BoundOutput {
            n,
            m,
            d,
            delta: args.delta,
            d_moore,
            bound: value,
            terms,
        };
        output::json_line(&mut out, &rec)?;
    } else if args.trace {
        if let (Some(delta), Some(d_min)) = (args.delta, d_moore) {
            let moore = bounds::moore_bound(delta, d_min)?;
            writeln!(
                out,
                "Moore bound: smallest d with n_max(delta={delta}, d) >= {n} is {d_min} (n_max = {})",
                moore.n_max
            )?;
            if d != d_min {
                writeln!(out, "diameter raised to {d} (graph is not complete)")?;
            }
        }
        writeln!(out, "n(n-1)                       = {}", terms.pair_baseline)?;
        writeln!(out, "-m                           = -{}", terms.minus_size)?;
        writeln!(out, "d(d-1)(d-2)/6                = {}", terms.path_surplus)?;
        writeln!(
            out,
            "(n-d-1) * z(d)               = {} * {} = {}",
            terms.off_path_vertices,
            terms.off_path_surplus_each,
            terms.off_path_vertices * terms.off_path_surplus_each
        )?;
        writeln!(
            out,
            "  z(d) = {}",
            if d % 2 == 1 { "((d-3)/2)^2 (d odd)" } else { "(d-2)(d-4)/4 (d even)" }
        )?;
        writeln!(out, "bound (n={n}, m={m}, d={d})    = {value}")?;
    } else {
        writeln!(out, "{value}")?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn print_summary(summary: &SweepSummary, json: bool) -> anyhow::Result<ExitCode> {
    let mut out = stdout();
    if json {
        output::json_line(&mut out, summary)?;
    } else {
        let opt = |v: Option<i64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        writeln!(out, "graphs checked  {}", summary.graphs_checked)?;
        writeln!(out, "disconnected    {}", summary.disconnected)?;
        if summary.invalid > 0 {
            writeln!(out, "invalid lines   {}", summary.invalid)?;
        }
        writeln!(out, "applicable      {}", summary.applicable)?;
        writeln!(out, "violations      {}", summary.violations)?;
        writeln!(out, "tight           {}", summary.tight_count)?;
        writeln!(out, "gap range       {} .. {}", opt(summary.min_gap), opt(summary.max_gap))?;
        if !summary.tight_examples.is_empty() {
            writeln!(out, "tight examples  {}", summary.tight_examples.join(" "))?;
        }
    }
    out.flush()?;
    Ok(if summary.violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn verify(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let summary = if let Some(n) = args.exhaustive {
        verifier::exhaustive_sweep_with(n, execution, args.examples)?
    } else if let Some(path) = &args.stream {
        let input = output::open_lines(Some(path))?;
        let mode = if args.skip_invalid {
            InvalidLines::Skip
        } else {
            InvalidLines::Abort
        };
        verifier::stream_sweep(input.lines(), mode, args.examples)?
    } else if let Some(count) = args.random {
        let max = args.order.ok_or_else(|| anyhow!("--random needs --order"))?;
        let corpus = RandomCorpus::new(count, args.min_order.unwrap_or(max), max, args.seed)?;
        verifier::random_sweep(&corpus, execution, args.examples)?
    } else {
        bail!("one of --exhaustive, --stream or --random is required");
    };
    print_summary(&summary, args.json)
}

pub fn generate(args: &GenerateArgs) -> anyhow::Result<ExitCode> {
    let need = |what: &str| args.param.ok_or_else(|| anyhow!("{what} needs a size parameter"));
    let g = match args.family {
        GenFamily::Path => generators::path(need("path")?)?,
        GenFamily::Cycle => generators::cycle(need("cycle")?)?,
        GenFamily::Star => generators::star(need("star")?)?,
        GenFamily::Complete => generators::complete(need("complete")?)?,
        GenFamily::Prism => generators::prism(),
        GenFamily::Petersen => generators::petersen(),
        GenFamily::Random => generators::random_connected(need("random")?, args.p, args.seed)?,
    };
    let mut out = stdout();
    match args.emit {
        Format::G6 => writeln!(out, "{}", write_graph6(&g))?,
        Format::Edgelist => write!(out, "{}", g.to_edge_list_text())?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SharpnessRecord<'a> {
    family: String,
    parameter: Option<usize>,
    #[serde(flatten)]
    record: &'a OutputRecord,
}

pub fn sharpness(args: &SharpnessArgs) -> anyhow::Result<ExitCode> {
    let family: Family = args.family.parse()?;
    let entries = verifier::sharpness_scan(family, args.from..=args.to)?;
    let mut out = stdout();
    if !args.json {
        writeln!(out, "family\tparam\t{}", output::RECORD_HEADER)?;
    }
    for e in &entries {
        let rec = OutputRecord::connected(e.graph6.clone(), &e.report);
        if args.json {
            let wrapped = SharpnessRecord {
                family: e.family.to_string(),
                parameter: e.parameter,
                record: &rec,
            };
            output::json_line(&mut out, &wrapped)?;
        } else {
            let param = e.parameter.map_or_else(|| "-".to_string(), |p| p.to_string());
            writeln!(out, "{}\t{param}\t{}", e.family, output::record_row(&rec))?;
        }
    }
    if !args.json {
        let tight = entries.iter().filter(|e| e.report.tight).count();
        writeln!(out, "# {tight} of {} instances tight", entries.len())?;
    }
    out.flush()?;
    let violated = entries.iter().any(|e| BoundReport::is_violation(&e.report));
    Ok(if violated { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

pub fn monotonicity(args: &MonotonicityArgs) -> anyhow::Result<ExitCode> {
    let report = verifier::monotonicity_scan(args.n, args.m)?;
    let mut out = stdout();
    if args.json {
        output::json_line(&mut out, &report)?;
    } else {
        writeln!(out, "d\tbound")?;
        for (d, b) in &report.values {
            writeln!(out, "{d}\t{b}")?;
        }
        if report.non_decreasing {
            writeln!(out, "# non-decreasing in d")?;
        } else {
            writeln!(out, "# finding: bound decreases at d = {:?}", report.decreases_at)?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
