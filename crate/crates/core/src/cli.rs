//! Command-line front end. [`execute`] renders the output as a string so
//! the whole command surface is testable without spawning a process; the
//! binary only prints it and maps errors to exit status 2.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{
    bound_thm21, check, format_ratio, resolve_polarization, syzygy_slope, Assumptions, Criterion,
    NamedPolarization, Polarization,
};
use crate::cohomology::h0_certified;
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::{
    is_ample, is_globally_generated, minus_one_curves, Assertion, Family, SurfaceModel, Truth,
};

#[derive(Debug, Parser)]
#[command(name = "syzcert", version, about = "Certify slope stability of syzygy bundles on surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify stability of M_L with one criterion or the automatic chain.
    Check(CheckArgs),
    /// Search the smallest n for which M_{nL+D} is certified H-stable.
    Bound(BoundArgs),
    /// Tabulate verdicts over a box of classes as CSV.
    Sweep(SweepArgs),
    /// Describe a surface model.
    Info(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// p2 | hirzebruch:n | delpezzo:r | numeric:L2=..,LK=..,K2=..,chiO=..,q=..
    #[arg(long)]
    pub surface: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Hypotheses {
    /// Comma list of ample, generated, irreducible-member, bn-general,
    /// nonhyperelliptic, k-trivial.
    #[arg(long = "assert", value_delimiter = ',')]
    pub assertions: Vec<String>,
    #[arg(long = "cliff-bound")]
    pub cliff_bound: Option<i64>,
}

impl Hypotheses {
    fn assumptions(&self) -> Result<Assumptions> {
        let flags = self
            .assertions
            .iter()
            .map(|s| s.parse::<Assertion>())
            .collect::<Result<Vec<_>>>()?;
        let mut asm = Assumptions::with(flags);
        asm.cliff_bound = self.cliff_bound;
        Ok(asm)
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated coordinates; may be omitted on numeric surfaces.
    #[arg(long = "L", allow_hyphen_values = true)]
    pub l: Option<String>,
    /// Coordinates, `L` or `antiK`.
    #[arg(long = "H", default_value = "L", allow_hyphen_values = true)]
    pub h: String,
    /// auto | thm32 | cor33 | prop34 | cor35 | cor36 | cor37 | thm37 | thm21
    #[arg(long, default_value = "auto")]
    pub criterion: String,
    #[command(flatten)]
    pub hyp: Hypotheses,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "L", allow_hyphen_values = true)]
    pub l: String,
    #[arg(long = "D", allow_hyphen_values = true)]
    pub d: Option<String>,
    #[arg(long = "H", default_value = "L", allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, default_value_t = 1000)]
    pub nmax: i64,
    /// Positive integer or `auto`.
    #[arg(long = "m-mult", default_value = "auto")]
    pub m_mult: String,
    #[command(flatten)]
    pub hyp: Hypotheses,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Range `lo..hi` (inclusive) of the first coordinate.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Range of the second coordinate.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Degree range on the plane.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// One range per coordinate, or a single range for all of them.
    #[arg(long = "range", allow_hyphen_values = true)]
    pub ranges: Vec<String>,
    #[arg(long = "H", default_value = "L", allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, default_value = "auto")]
    pub criterion: String,
    #[command(flatten)]
    pub hyp: Hypotheses,
}

/// Runs a command and writes its output to stdout or `--out`.
pub fn run(cli: &Cli) -> Result<()> {
    let text = execute(cli)?;
    let out = match &cli.command {
        Command::Check(a) => &a.common.out,
        Command::Bound(a) => &a.common.out,
        Command::Sweep(a) => &a.common.out,
        Command::Info(a) => &a.out,
    };
    match out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Check(a) => run_check(a),
        Command::Bound(a) => run_bound(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Info(a) => run_info(a),
    }
}

fn surface(common: &Common) -> Result<SurfaceModel> {
    common.surface.parse()
}

pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(t.trim(), "expected an integer"))
        })
        .collect()
}

fn parse_class(surface: &SurfaceModel, s: &str) -> Result<DivisorClass> {
    surface.class(&parse_vector(s)?)
}

fn line_class(surface: &SurfaceModel, l: Option<&str>) -> Result<DivisorClass> {
    match (l, surface.is_numeric()) {
        (None, true) => Ok(DivisorClass::zero(0)),
        (Some("L"), true) => Ok(DivisorClass::zero(0)),
        (Some(_), true) => Err(Error::InvalidParameter(
            "numeric surfaces carry L through L2 and LK; omit --L".into(),
        )),
        (None, false) => Err(Error::InvalidParameter("--L is required".into())),
        (Some(s), false) => parse_class(surface, s),
    }
}

fn parse_polarization(surface: &SurfaceModel, s: &str) -> Result<Polarization> {
    match s.trim() {
        "L" => Ok(Polarization::Named(NamedPolarization::SameAsL)),
        "antiK" => Ok(Polarization::Named(NamedPolarization::AntiCanonical)),
        other => parse_class(surface, other).map(Polarization::Class),
    }
}

fn parse_criterion(s: &str) -> Result<Option<Criterion>> {
    match s {
        "auto" => Ok(None),
        other => other.parse().map(Some),
    }
}

fn run_check(a: &CheckArgs) -> Result<String> {
    let s = surface(&a.common)?;
    let l = line_class(&s, a.l.as_deref())?;
    let h = parse_polarization(&s, &a.h)?;
    let criterion = parse_criterion(&a.criterion)?;
    let cert = check(&s, &l, &h, criterion, &a.hyp.assumptions()?)?;
    render_certificate(&cert, a.common.format)
}

fn render_certificate(cert: &crate::certify::Certificate, format: Option<Format>) -> Result<String> {
    match format.unwrap_or(Format::Json) {
        Format::Json => Ok(cert.to_json() + "\n"),
        Format::Text => Ok(cert.to_text()),
        Format::Csv => Err(Error::InvalidParameter(
            "csv output is only available for sweep".into(),
        )),
    }
}

fn run_bound(a: &BoundArgs) -> Result<String> {
    let s = surface(&a.common)?;
    let asm = a.hyp.assumptions()?;
    let m = match a.m_mult.trim() {
        "auto" => None,
        v => Some(
            v.parse::<i64>()
                .map_err(|_| Error::parse(v, "expected a positive integer or auto"))?,
        ),
    };
    if a.nmax < 1 {
        return Err(Error::InvalidParameter(format!("--nmax {} < 1", a.nmax)));
    }
    let (l, d, h) = if s.is_numeric() {
        let z = DivisorClass::zero(0);
        (z.clone(), z.clone(), z)
    } else {
        let l = parse_class(&s, &a.l)?;
        let d = match &a.d {
            Some(d) => parse_class(&s, d)?,
            None => DivisorClass::zero(s.rank()),
        };
        let h = resolve_polarization(&s, &l, &parse_polarization(&s, &a.h)?)?;
        (l, d, h)
    };
    let search = bound_thm21(&s, &l, &d, &h, m, a.nmax, &asm)?;
    render_certificate(&search.certificate, a.common.format)
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let p = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::parse(s, "expected lo..hi"))
    };
    let (lo, hi) = (p(lo)?, p(hi)?);
    if lo > hi {
        return Err(Error::parse(s, "empty range"));
    }
    Ok((lo, hi))
}

fn sweep_ranges(a: &SweepArgs, s: &SurfaceModel) -> Result<Vec<(i64, i64)>> {
    let rank = s.rank();
    let raw: Vec<&str> = if !a.ranges.is_empty() {
        a.ranges.iter().map(String::as_str).collect()
    } else {
        [&a.a, &a.b, &a.d]
            .into_iter()
            .flatten()
            .map(String::as_str)
            .collect()
    };
    let mut ranges = raw.into_iter().map(parse_range).collect::<Result<Vec<_>>>()?;
    if ranges.len() == 1 && rank > 1 && !a.ranges.is_empty() {
        ranges = vec![ranges[0]; rank];
    }
    if ranges.len() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: ranges.len(),
        });
    }
    Ok(ranges)
}

/// All integer vectors in the box, in lexicographic order.
pub fn box_points(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        out.push(cur.clone());
        let mut i = ranges.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                break;
            }
            cur[i] = ranges[i].0;
        }
    }
}

/// One row of a sweep table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub coords: String,
    pub ample: bool,
    pub generated: String,
    #[serde(rename = "minus_LK")]
    pub minus_lk: i64,
    pub h0: String,
    pub rank: String,
    pub slope: String,
    pub criterion: String,
    pub verdict: String,
}

fn truth_str(t: Truth) -> &'static str {
    match t {
        Truth::Yes => "yes",
        Truth::No => "no",
        Truth::Unknown => "unknown",
    }
}

pub fn sweep_row(
    s: &SurfaceModel,
    coords: &[i64],
    h: &Polarization,
    criterion: Option<Criterion>,
    asm: &Assumptions,
) -> Result<SweepRow> {
    let l = s.class(coords)?;
    let hc = resolve_polarization(s, &l, h)?;
    let h0 = h0_certified(s, &l)?;
    let stats = syzygy_slope(s, &l, &hc).ok().flatten();
    let cert = check(s, &l, h, criterion, asm)?;
    Ok(SweepRow {
        coords: coords
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(";"),
        ample: is_ample(s, &l)?,
        generated: truth_str(is_globally_generated(s, &l)?).to_string(),
        minus_lk: -s.intersect(&l, &s.canonical)?,
        h0: h0.map(|v| v.to_string()).unwrap_or_default(),
        rank: stats.as_ref().map(|st| st.rank.to_string()).unwrap_or_default(),
        slope: stats.map(|st| format_ratio(&st.slope)).unwrap_or_default(),
        criterion: cert.criterion.to_string(),
        verdict: cert.verdict.to_string(),
    })
}

fn run_sweep(a: &SweepArgs) -> Result<String> {
    let s = surface(&a.common)?;
    if s.is_numeric() {
        return Err(Error::Unsupported {
            op: "sweep",
            family: s.family.to_string(),
        });
    }
    let ranges = sweep_ranges(a, &s)?;
    let h = parse_polarization(&s, &a.h)?;
    let criterion = parse_criterion(&a.criterion)?;
    let asm = a.hyp.assumptions()?;
    let rows = box_points(&ranges)
        .par_iter()
        .map(|c| sweep_row(&s, c, &h, criterion, &asm))
        .collect::<Result<Vec<_>>>()?;
    match a.common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row)
                    .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Json => Ok(serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"),
        Format::Text => Err(Error::InvalidParameter(
            "sweep supports csv and json output".into(),
        )),
    }
}

#[derive(Debug, Serialize)]
struct SurfaceInfo {
    surface: String,
    basis: Vec<String>,
    matrix: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    canonical: Vec<i64>,
    #[serde(rename = "K2")]
    k2: i64,
    #[serde(rename = "chiO")]
    chi_o: i64,
    q: i64,
    extremal_rays: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minus_one_curves: Option<Vec<Vec<i64>>>,
}

fn run_info(a: &Common) -> Result<String> {
    let s = surface(a)?;
    let coords = |v: &[DivisorClass]| v.iter().map(|c| c.coords().to_vec()).collect::<Vec<_>>();
    let info = SurfaceInfo {
        surface: s.descriptor(),
        basis: s.basis_labels.clone(),
        matrix: s.form.matrix().to_vec(),
        canonical: s.canonical.coords().to_vec(),
        k2: s.canonical_square()?,
        chi_o: s.chi_o,
        q: s.q,
        extremal_rays: coords(&s.extremal_rays),
        minus_one_curves: match s.family {
            Family::DelPezzo(_) => Some(coords(&minus_one_curves(&s)?)),
            _ => None,
        },
    };
    match a.format.unwrap_or(Format::Text) {
        Format::Json => Ok(serde_json::to_string_pretty(&info).expect("info serializes") + "\n"),
        Format::Text => Ok(info_text(&s, &info)),
        Format::Csv => Err(Error::InvalidParameter("info supports text and json".into())),
    }
}

fn info_text(s: &SurfaceModel, info: &SurfaceInfo) -> String {
    let labels = &s.basis_labels;
    let show = |v: &[i64]| match DivisorClass::new(v.to_vec()) {
        Ok(c) if !labels.is_empty() => c.display_with(labels).to_string(),
        _ => format!("{v:?}"),
    };
    let mut out = format!("surface: {}\n", info.surface);
    if let Some(d) = &s.numeric {
        out.push_str(&format!("L^2 = {}, L.K = {}\n", d.l2, d.lk));
    } else {
        out.push_str(&format!("basis: {}\n", labels.join(", ")));
        out.push_str("intersection matrix:\n");
        for row in &info.matrix {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            out.push_str(&format!("  [{}]\n", cells.join(" ")));
        }
        out.push_str(&format!("K = {}\n", show(&info.canonical)));
    }
    out.push_str(&format!("K^2 = {}\n", info.k2));
    out.push_str(&format!("chi(O) = {}, q = {}\n", info.chi_o, info.q));
    if !s.is_numeric() {
        out.push_str(&format!("extremal rays ({}):\n", info.extremal_rays.len()));
        for r in &info.extremal_rays {
            out.push_str(&format!("  {}\n", show(r)));
        }
    }
    if let Some(curves) = &info.minus_one_curves {
        out.push_str(&format!("(-1)-curves ({}):\n", curves.len()));
        for c in curves {
            out.push_str(&format!("  {}\n", show(c)));
        }
    }
    out
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Format as ValueEnum>::from_str(s, false).map_err(|_| Error::parse(s, "unknown format"))
    }
}
