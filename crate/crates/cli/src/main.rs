//! `fpf`: spectral sets and tilings over Z_p^d from the command line.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fpf_core::directions::{direction_set, graph_presentation, missing_directions, GraphPresentation};
use fpf_core::fourier::{evaluate_complex, fourier_coefficient, hyperplane_profile, zero_set};
use fpf_core::setfile::{format_set, read_set};
use fpf_core::spectra::{is_spectral_pair, spectrum_search};
use fpf_core::tiling::{is_tiling_pair, tiling_search};
use fpf_core::verifier::{check_pair, search_z35_with, verify_fuglede, CampaignConfig, CampaignMode};
use fpf_core::{PointSet, PrimeModulus};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "fpf", version, about = "Spectral sets and translational tilings in Z_p^d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyperplane profile and exact Fourier coefficient, or the zero set.
    Fourier {
        #[arg(long)]
        set: PathBuf,
        /// Frequency as comma-separated residues.
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a spectrum, or search for one.
    Spectral {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        spectrum: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a tiling complement, or search for one.
    Tile {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        complement: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Direction set, missing directions and graph presentation.
    Directions {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check that spectral sets and tiles coincide in the plane Z_p^2.
    Verify {
        #[arg(long)]
        p: u64,
        /// exhaustive, size:<k> or sample:<n>
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, env = "FPF_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        audit: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Certify a pair file: spectral pair, tiling pair, obstructions.
    CheckPair {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search Z_3^5 for a 6-point spectral set, which cannot tile.
    SearchZ35 {
        #[arg(long, default_value_t = 600)]
        budget_secs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn load(path: &PathBuf) -> Result<PointSet> {
    read_set(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(format: Format, value: &Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("json value")),
        Format::Text => print!("{text}"),
    }
}

fn fourier(set: &PointSet, m: Option<&str>, format: Format) -> Result<()> {
    let a = *set.ambient();
    let Some(m) = m else {
        let zs = zero_set(set)?;
        let p = a.p();
        let classes: Vec<Value> = zs
            .classes()
            .iter()
            .map(|rep| {
                let members: Vec<String> = (1..p).map(|r| a.scale(r, rep).to_string()).collect();
                json!({ "direction": rep.to_string(), "members": members })
            })
            .collect();
        let mut text = format!("zero set: {} frequencies\n", zs.len());
        for c in &classes {
            let members: Vec<&str> = c["members"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
            text += &format!("  {}: {}\n", c["direction"].as_str().unwrap(), members.join(" "));
        }
        emit(format, &json!({ "zero_set_size": zs.len(), "classes": classes }), text);
        return Ok(());
    };
    let coords = m
        .split(',')
        .map(|t| t.trim().parse::<u64>().with_context(|| format!("bad residue {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    let m = a.vector(&coords)?;
    let profile = hyperplane_profile(set, &m)?;
    let value = fourier_coefficient(set, &m)?;
    let z = evaluate_complex(&value);
    let zero = value.is_zero();
    let text = format!(
        "m = {m}\nprofile: {:?}\ncoefficient: {value}\nnumeric: {:.12} {:+.12}i\n{}\n",
        profile.counts(),
        z.re,
        z.im,
        if zero { "ZERO" } else { "NONZERO" }
    );
    let out = json!({
        "m": m.to_string(),
        "profile": profile.counts(),
        "coefficient": value.coeffs(),
        "numeric": [z.re, z.im],
        "zero": zero,
    });
    emit(format, &out, text);
    Ok(())
}

fn spectral(set: &PointSet, spectrum: Option<PointSet>, format: Format) -> Result<()> {
    if let Some(a) = spectrum {
        let ok = is_spectral_pair(set, &a)?;
        let text = if ok { "SPECTRAL PAIR\n" } else { "NOT A SPECTRAL PAIR\n" }.to_string();
        emit(format, &json!({ "spectral_pair": ok }), text);
        return Ok(());
    }
    let s = spectrum_search(set)?;
    let text = match &s.spectrum {
        Some(a) => format!("SPECTRAL\nspectrum:\n{}", format_set(a)),
        None => format!(
            "NOT SPECTRAL\nlargest clique through 0 in the zero-difference graph: {} < {}\n",
            s.clique_bound,
            set.len()
        ),
    };
    let out = json!({
        "spectral": s.spectrum.is_some(),
        "spectrum": s.spectrum.as_ref().map(format_set),
        "clique_bound": s.clique_bound,
        "zero_set_size": s.zero_set_size,
    });
    emit(format, &out, text);
    Ok(())
}

fn tile(set: &PointSet, complement: Option<PointSet>, format: Format) -> Result<()> {
    if let Some(t) = complement {
        let ok = is_tiling_pair(set, &t)?;
        let text = if ok { "TILING PAIR\n" } else { "NOT A TILING PAIR\n" }.to_string();
        emit(format, &json!({ "tiling_pair": ok }), text);
        return Ok(());
    }
    let s = tiling_search(set)?;
    let text = match (&s.complement, &s.obstruction) {
        (Some(t), _) => format!("TILES\ncomplement:\n{}", format_set(t)),
        (None, Some(o)) => format!("DOES NOT TILE: {o}\n"),
        (None, None) => "DOES NOT TILE\n".to_string(),
    };
    let out = json!({
        "tiles": s.complement.is_some(),
        "complement": s.complement.as_ref().map(format_set),
        "obstruction": s.obstruction.as_ref().map(|o| o.to_string()),
    });
    emit(format, &out, text);
    Ok(())
}

fn presentation_json(g: &GraphPresentation) -> Value {
    let values: serde_json::Map<String, Value> = g.values().iter().map(|(s, t)| (s.to_string(), json!(t))).collect();
    json!({
        "e1": g.e1().to_string(),
        "e2": g.e2().to_string(),
        "kind": g.kind(),
        "values": values,
        "full_support": g.has_full_support(),
    })
}

fn directions(set: &PointSet, format: Format) -> Result<()> {
    let ds: Vec<String> = direction_set(set)?.iter().map(|c| c.to_string()).collect();
    let missing: Vec<String> = missing_directions(set)?.iter().map(|c| c.to_string()).collect();
    let graph = if set.ambient().dim() == 2 { graph_presentation(set)? } else { None };
    let mut text = format!("directions: {}\nmissing: {}\n", ds.join(" "), missing.join(" "));
    match &graph {
        Some(g) => {
            let pts: Vec<String> = g.values().iter().map(|(s, t)| format!("{s}->{t}")).collect();
            text += &format!("graph over e1 = {}, e2 = {} ({:?}): {}\n", g.e1(), g.e2(), g.kind(), pts.join(" "));
        }
        None => text += "no graph presentation\n",
    }
    let out = json!({
        "directions": ds,
        "missing": missing,
        "graph_presentation": graph.as_ref().map(presentation_json),
    });
    emit(format, &out, text);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Fourier { set, m, format } => fourier(&load(&set)?, m.as_deref(), format)?,
        Command::Spectral { set, spectrum, format } => {
            spectral(&load(&set)?, spectrum.as_ref().map(load).transpose()?, format)?
        }
        Command::Tile { set, complement, format } => {
            tile(&load(&set)?, complement.as_ref().map(load).transpose()?, format)?
        }
        Command::Directions { set, format } => directions(&load(&set)?, format)?,
        Command::Verify { p, mode, seed, jobs, audit, out, format } => {
            let mut mode: CampaignMode = mode.parse()?;
            if let CampaignMode::Sampled { n, .. } = mode {
                mode = CampaignMode::Sampled { n, seed };
            }
            let jobs = match jobs {
                Some(j) => j,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let config = CampaignConfig::new(PrimeModulus::new(p)?, mode).with_jobs(jobs).with_audit(audit);
            let outcome = verify_fuglede(&config)?;
            let report = &outcome.report;
            if let Some(path) = out {
                std::fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.summary()),
            }
            eprintln!("jobs {}, {:.3} s", outcome.metadata.jobs, outcome.metadata.wall_clock_secs);
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::CheckPair { file, format } => {
            let cert = check_pair(&file).with_context(|| format!("checking {}", file.display()))?;
            match format {
                Format::Json => print!("{}", cert.to_json()),
                Format::Text => print!("{}", cert.summary()),
            }
        }
        Command::SearchZ35 { budget_secs, seed, format } => {
            let s = search_z35_with(Duration::from_secs(budget_secs), seed)?;
            eprintln!("{} restarts, {} candidates, {:.1} s", s.restarts, s.candidates, s.elapsed.as_secs_f64());
            match (&s.certificate, format) {
                (Some(c), Format::Json) => print!("{}", c.to_json()),
                (Some(c), Format::Text) => print!("{}{}---\n{}", c.summary(), format_set(&c.set), format_set(&c.partner)),
                (None, Format::Json) => println!("null"),
                (None, Format::Text) => println!("no pair found within {budget_secs} s"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
