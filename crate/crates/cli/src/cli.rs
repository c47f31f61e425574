//! Command-line surface.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use edgesquare_core::catalog::{catalog_facets, generic_square_complex};
use edgesquare_core::census::{cm_by_class, CensusOptions, CensusRecord, ClassFlags, DEFAULT_CENSUS_CAP};
use edgesquare_core::cm::{
    cycle_square_classification_with, necessary_condition_screen, purity_report, square_is_cm_with, CycleMode,
    Route, SquareOptions, DEFAULT_CYCLE_CAP,
};
use edgesquare_core::ideal::{edge_ideal, ideal_power, polarize_ideal};
use edgesquare_core::{Error as CoreError, FieldSpec, Graph};

use crate::builtin::resolve_graph;
use crate::error::CliError;
use crate::io::to_graph6;
use crate::parallel::{parallel_census, RayonSweep};
use crate::records::{CensusLine, CycleRecord, FacetRecord, IdealRecord, PurityRecord, ScreenRecord, VerdictRecord};
use crate::text::{self, VarStyle};

#[derive(Debug, Parser)]
#[command(name = "edgesquare", version, about = "Stanley-Reisner complexes of squared edge ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Spell polarized variables `x_1` instead of `x1`.
    #[arg(long, global = true)]
    pub subscript: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Catalog,
    Generic,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Catalog => Route::Catalog,
            RouteArg::Generic => Route::Generic,
            RouteArg::Both => Route::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print I(G), I(G)^2 and the polarization of I(G)^2.
    ShowIdeal { graph: String },
    /// Print the facets of the square complex.
    Facets {
        graph: String,
        /// Annotate each facet with the families producing it.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = RouteArg::Catalog)]
        route: RouteArg,
    },
    /// Compare purity of the square complex with its graph-side prediction.
    IsPure { graph: String },
    /// Decide whether I(G)^2 is Cohen-Macaulay.
    IsCm {
        graph: String,
        /// Field characteristic.
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
        /// Skip the connectivity and purity pre-checks.
        #[arg(long)]
        no_fast_fail: bool,
        #[arg(long, value_enum, default_value_t = RouteArg::Catalog)]
        route: RouteArg,
    },
    /// Classify the square of a cycle edge ideal.
    ClassifyCycle {
        t: usize,
        /// Also run the full check.
        #[arg(long)]
        verify: bool,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
        /// Largest cycle length to verify.
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// Run the cheap necessary conditions.
    Screen { graph: String },
    /// Check every connected graph on 2..=n vertices.
    Census {
        n: usize,
        /// Field characteristics (repeat or comma separate).
        #[arg(long = "char", value_delimiter = ',', default_values_t = vec![2u32])]
        characteristics: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: usize,
        /// Also run the full check on graphs the screen rejects.
        #[arg(long)]
        verify_screened: bool,
    },
}

fn field(p: u32) -> Result<FieldSpec, CliError> {
    Ok(FieldSpec::new(p)?)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value).map_err(|e| CliError::Output(e.into()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

/// Runs one command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let style = VarStyle { subscript: cli.subscript };
    let json = cli.format == Format::JsonLines;
    match &cli.command {
        Command::ShowIdeal { graph } => {
            let g = resolve_graph(graph)?;
            let i = edge_ideal(&g);
            let sq = ideal_power(&i, 2)?;
            let pol = polarize_ideal(&sq);
            if json {
                let gens = |s: String| -> Vec<String> {
                    let inner = s.trim_start_matches('(').trim_end_matches(')');
                    if inner == "0" { Vec::new() } else { inner.split(", ").map(String::from).collect() }
                };
                json_line(
                    out,
                    &IdealRecord {
                        edge_ideal: gens(text::render_ideal(&g, &i)),
                        square: gens(text::render_ideal(&g, &sq)),
                        polarized: gens(text::render_polarized(&g, &pol, style)),
                    },
                )?;
            } else {
                writeln!(out, "I(G) = {}", text::render_ideal(&g, &i))?;
                writeln!(out, "I(G)^2 = {}", text::render_ideal(&g, &sq))?;
                writeln!(out, "P(I(G)^2) = {}", text::render_polarized(&g, &pol, style))?;
            }
        }
        Command::Facets { graph, witness, route } => {
            let g = resolve_graph(graph)?;
            facets(&g, *witness, (*route).into(), style, json, out)?;
        }
        Command::IsPure { graph } => {
            let g = resolve_graph(graph)?;
            let r = purity_report(&g)?;
            if json {
                json_line(out, &PurityRecord::from(r))?;
            } else {
                for line in text::render_purity(&r) {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Command::IsCm { graph, characteristic, no_fast_fail, route } => {
            let g = resolve_graph(graph)?;
            let options = SquareOptions { route: (*route).into(), fast_fail: !no_fast_fail };
            let v = square_is_cm_with(&g, field(*characteristic)?, options, &RayonSweep)?;
            if json {
                json_line(out, &VerdictRecord::new(&g, &v, style))?;
            } else {
                writeln!(out, "{}", text::render_verdict(&g, &v, style))?;
            }
        }
        Command::ClassifyCycle { t, verify, characteristic, cap } => {
            let mode = if *verify { CycleMode::Verify } else { CycleMode::Theorem };
            let c = cycle_square_classification_with(*t, field(*characteristic)?, mode, *cap, &RayonSweep)?;
            if json {
                json_line(out, &CycleRecord::new(&c, style)?)?;
            } else {
                let label = |cm: bool| if cm { "CM" } else { "NOT CM" };
                let mut line = format!("{} (theorem)", label(c.theorem));
                if let Some(v) = c.verified {
                    let rel = if v.is_cm == c.theorem { "=" } else { "!=" };
                    line += &format!(" {rel} {} (verified, p={})", label(v.is_cm), v.field.characteristic());
                }
                writeln!(out, "{line}")?;
                writeln!(out, "unmixed: {}", c.unmixed)?;
            }
            if !c.agrees() {
                return Err(CoreError::Inconsistency(format!("C_{t}: verified verdict contradicts the classification")).into());
            }
        }
        Command::Screen { graph } => {
            let g = resolve_graph(graph)?;
            let r = necessary_condition_screen(&g)?;
            if json {
                json_line(out, &ScreenRecord::new(&g, r))?;
            } else {
                writeln!(out, "{}", text::render_rejection(&g, r))?;
            }
        }
        Command::Census { n, characteristics, cap, verify_screened } => {
            let fields = characteristics.iter().map(|&p| field(p)).collect::<Result<Vec<_>, _>>()?;
            let options = CensusOptions { cap: *cap, verify_screened: *verify_screened };
            let records = parallel_census(*n, &fields, options)?;
            if json {
                for (id, r) in records.iter().enumerate() {
                    json_line(out, &CensusLine::new(id, r, style))?;
                }
            } else {
                census_table(&records, out)?;
            }
        }
    }
    Ok(())
}

fn facets(
    g: &Graph,
    witness: bool,
    route: Route,
    style: VarStyle,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if route == Route::Generic {
        if witness {
            return Err(CliError::Spec("--witness needs the catalog route".into()));
        }
        let complex = generic_square_complex(g)?;
        if json {
            for names in complex.facets().iter().map(|&f| text::face_names(g, f, style)) {
                json_line(out, &FacetRecord { facet: names, witnesses: Vec::new() })?;
            }
        } else {
            for line in text::face_lines(g, complex.facets(), style) {
                writeln!(out, "{line}")?;
            }
        }
        return Ok(());
    }
    let cat = catalog_facets(g)?;
    if route == Route::Both {
        // fails with an inconsistency error on any difference
        edgesquare_core::cm::square_complex(g, Route::Both)?;
    }
    if json {
        let mut records: Vec<FacetRecord> = cat.iter().map(|f| FacetRecord::new(g, f, style)).collect();
        records.sort_by(|a, b| a.facet.cmp(&b.facet));
        for r in &records {
            json_line(out, r)?;
        }
    } else {
        for line in text::facet_lines(g, &cat, style, witness) {
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

fn class_list(c: &ClassFlags) -> String {
    let names: Vec<&str> =
        ClassFlags::NAMES.iter().zip(c.as_array()).filter(|(_, on)| *on).map(|(n, _)| *n).collect();
    if names.is_empty() {
        "-".into()
    } else {
        names.join(",")
    }
}

fn verdict_cell(v: &edgesquare_core::CmVerdict) -> String {
    match (v.is_cm, v.fast_fail) {
        (true, _) => "CM".into(),
        (false, Some(tag)) => format!("no ({})", tag.as_str()),
        (false, None) => "no (witness)".into(),
    }
}

fn census_table(records: &[CensusRecord], out: &mut dyn Write) -> Result<(), CliError> {
    let fields: Vec<u32> =
        records.first().map(|r| r.verdicts.iter().map(|v| v.field.characteristic()).collect()).unwrap_or_default();
    let mut header = format!("{:>4}  {:<10} {:>2} {:>2}  {:<46} {:<12}", "id", "graph6", "n", "m", "classes", "screen");
    for p in &fields {
        header += &format!("  {:<36}", format!("p={p}"));
    }
    writeln!(out, "{}", header.trim_end())?;
    for (id, r) in records.iter().enumerate() {
        let g = &r.graph;
        let screen = r.screen.map_or("-", |s| s.as_str());
        let mut row = format!(
            "{:>4}  {:<10} {:>2} {:>2}  {:<46} {:<12}",
            id,
            to_graph6(g),
            g.order(),
            g.edge_count(),
            class_list(&r.classes),
            screen
        );
        for v in &r.verdicts {
            row += &format!("  {:<36}", verdict_cell(v));
        }
        writeln!(out, "{}", row.trim_end())?;
    }
    writeln!(out)?;
    writeln!(out, "graphs: {}", records.len())?;
    writeln!(out, "CM squares by class:")?;
    for (k, (class, hits)) in cm_by_class(records).into_iter().enumerate() {
        let members = records.iter().filter(|r| r.classes.as_array()[k]).count();
        let list: Vec<String> = hits.iter().map(|&i| to_graph6(&records[i].graph)).collect();
        writeln!(out, "  {class}: {} of {members} [{}]", hits.len(), list.join(" "))?;
    }
    let all: Vec<String> = records.iter().filter(|r| r.is_cm()).map(|r| to_graph6(&r.graph)).collect();
    writeln!(out, "  any: {} of {} [{}]", all.len(), records.len(), all.join(" "))?;
    let disagreements = records.iter().filter(|r| r.field_disagreement()).count();
    writeln!(out, "field disagreements: {disagreements}")?;
    Ok(())
}
