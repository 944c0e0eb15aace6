use std::path::Path;

use anyhow::{Context, Result};
use dasquare::census::{associative_clan_name, Census, ASSOCIATIVE_CLANS};
use dasquare::classify::classify;
use dasquare::compound::{commutator, compound, compound_with_step, triple_products};
use dasquare::parse::to_json;
use dasquare::powering::{cbh_alternation_check, trajectory, CbhVerdict};
use dasquare::spectra::{gerschgorin_disks, in_disk_union, Axis, Disk};
use dasquare::structure::{predicted_constancy_power, zero_jordan_profile};
use dasquare::{
    constancy_onset, BigInt, CharPoly, Eigenvalue, IntSquare, JordanZeroProfile, PowerTrajectory,
    SpectralSummary,
};
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::fmt::{self as f, SquareRows, Table};
use crate::input::{load, Subject};
use crate::report::{trajectory_markdown, verdict_text, Report};
use crate::{svg, InputError, InvariantViolation};

pub fn run(cli: &Cli) -> Result<String> {
    if cli.max_p == 0 {
        return Err(InputError("--max-p must be at least 1".into()).into());
    }
    match &cli.command {
        Command::Analyze { input } => analyze(cli, input),
        Command::Power { input } => power(cli, input),
        Command::Compound { pattern, base, kind, step, output } => {
            let pattern = load(pattern)?;
            let base = load(base)?;
            let square = match step {
                Some(text) => {
                    let delta: BigInt = text
                        .parse()
                        .map_err(|_| InputError(format!("--step `{text}` is not an integer")))?;
                    compound_with_step(pattern.square(), base.square(), &delta)?
                }
                None => compound(pattern.square(), base.square(), *kind)?,
            };
            if let Some(path) = output {
                write_file(path, &format!("{}\n", to_json(&square)))?;
            }
            let how = match step {
                Some(d) => format!("step {d}"),
                None => kind.to_string(),
            };
            let name = format!("{}⊗{} ({how})", pattern.name, base.name);
            let provenance = format!("compound of pattern {} and base {}", pattern.name, base.name);
            compound_summary(cli, Subject::new(name, provenance, &square))
        }
        Command::Enumerate4 { census, find_1ev } => enumerate4(cli, census.as_deref(), *find_1ev),
        Command::Products { x, y } => products(cli, &load(x)?, &load(y)?),
        Command::Gerschgorin { input } => gerschgorin(cli, &load(input)?),
        Command::Catalog { name, list } => match (name, list) {
            (Some(n), false) => catalog_show(cli, &load(n)?),
            _ => Ok(catalog_list(cli.format())),
        },
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    Ok(text)
}

fn analyze(cli: &Cli, input: &str) -> Result<String> {
    let report = Report::build(load(input)?, cli.max_p)?;
    if let (Some(path), Some(t)) = (&cli.svg, &report.trajectory) {
        write_file(path, &svg::power_curves(&report.subject.name, t))?;
    }
    match cli.format() {
        Format::Json => json(&report),
        Format::Markdown => Ok(report.markdown()),
    }
}

#[derive(Serialize)]
struct PowerOutput<'a> {
    subject: &'a Subject,
    trajectory: &'a PowerTrajectory,
    constancy_onset: Option<usize>,
    verdict: CbhVerdict,
}

fn power(cli: &Cli, input: &str) -> Result<String> {
    let subject = load(input)?;
    let t = trajectory(subject.square(), cli.max_p)?;
    if let Some(path) = &cli.svg {
        write_file(path, &svg::power_curves(&subject.name, &t))?;
    }
    let verdict = cbh_alternation_check(&t);
    match cli.format() {
        Format::Json => json(&PowerOutput {
            subject: &subject,
            trajectory: &t,
            constancy_onset: t.constancy_onset,
            verdict,
        }),
        Format::Markdown => Ok(format!(
            "# Powers of {}\n\n{}\nverdict: {}\n",
            subject.name,
            trajectory_markdown(&t),
            verdict_text(&verdict)
        )),
    }
}

#[derive(Serialize)]
struct CompoundOutput<'a> {
    subject: &'a Subject,
    spectra: &'a SpectralSummary,
    jordan: &'a JordanZeroProfile,
    constancy_onset: Option<usize>,
    nilpotency_index: Option<usize>,
}

fn compound_summary(cli: &Cli, subject: Subject) -> Result<String> {
    let a = subject.square();
    let spectra = SpectralSummary::of(a)?;
    let jordan = zero_jordan_profile(a);
    let onset = constancy_onset(a, cli.max_p);
    let nil = spectra.one_ev.then(|| predicted_constancy_power(a)).transpose()?;
    if let (Some(k), Some(p)) = (nil, onset) {
        if k != p {
            return Err(InvariantViolation(format!("nilpotency index {k} but constant from power {p}")).into());
        }
    }
    if cli.format() == Format::Json {
        return json(&CompoundOutput {
            subject: &subject,
            spectra: &spectra,
            jordan: &jordan,
            constancy_onset: onset,
            nilpotency_index: nil,
        });
    }
    let mut out = format!("# {}\n\n```text\n{}```\n\n", subject.name, f::matrix_block(a));
    let mut t = Table::new(&["quantity", "value"]);
    t.row(&["order", &a.order().to_string()]);
    t.row(&["linesum", &f::opt_int(spectra.linesum.as_ref())]);
    t.row(&["characteristic polynomial", &spectra.char_poly.to_string()]);
    t.row(&["rank", &spectra.rank.to_string()]);
    t.row(&["μ (zero eigenvalues)", &spectra.mu.to_string()]);
    t.row(&["1EV", f::yes_no(spectra.one_ev)]);
    t.row(&["Compression %", &f::opt_sig(spectra.compression_pct)]);
    t.row(&["Spread", &f::opt_rational(spectra.spread.as_ref())]);
    t.row(&["R-index", &f::opt_int(spectra.r_index.as_ref())]);
    let blocks: Vec<String> = jordan.block_sizes.iter().map(ToString::to_string).collect();
    t.row(&["zero Jordan blocks", &blocks.join(", ")]);
    t.row(&[
        "constant from p",
        &onset.map_or_else(|| format!("none up to {}", cli.max_p), |p| p.to_string()),
    ]);
    out.push_str(&t.render());
    Ok(out)
}

#[derive(Serialize)]
struct ProductRecord {
    label: String,
    #[serde(serialize_with = "dasquare::serde_big::opt_int")]
    linesum: Option<BigInt>,
    #[serde(serialize_with = "dasquare::serde_big::int")]
    d1: BigInt,
    #[serde(serialize_with = "dasquare::serde_big::int")]
    d2: BigInt,
    char_poly: CharPoly,
    eigenvalues: Vec<Eigenvalue>,
    one_ev: bool,
    constancy_onset: Option<usize>,
    rows: SquareRows,
}

impl ProductRecord {
    fn of(label: &str, a: &IntSquare, max_p: usize) -> Self {
        let flags = classify(a);
        let char_poly = a.char_poly();
        let one_ev = flags
            .linesum
            .as_ref()
            .is_some_and(|l| !num_traits::Zero::is_zero(l) && char_poly == CharPoly::one_ev(a.order(), l));
        Self {
            label: label.into(),
            linesum: flags.linesum,
            d1: flags.d1,
            d2: flags.d2,
            eigenvalues: dasquare::eigenvalues(&char_poly),
            char_poly,
            one_ev,
            constancy_onset: constancy_onset(a, max_p),
            rows: SquareRows(a.clone()),
        }
    }
}

#[derive(Serialize)]
struct ProductsOutput<'a> {
    x: &'a Subject,
    y: &'a Subject,
    products: Vec<ProductRecord>,
}

fn products(cli: &Cli, x: &Subject, y: &Subject) -> Result<String> {
    let (a, b) = (x.square(), y.square());
    let tp = triple_products(a, b)?;
    let mut records = vec![
        ProductRecord::of("X·Y", &tp.pair, cli.max_p),
        ProductRecord::of("Y·X", &b.mul(a)?, cli.max_p),
        ProductRecord::of("[X,Y]", &commutator(a, b)?, cli.max_p),
    ];
    for (label, m) in tp.labelled() {
        records.push(ProductRecord::of(label, m, cli.max_p));
    }
    if cli.format() == Format::Json {
        return json(&ProductsOutput { x, y, products: records });
    }
    let mut out = format!("# Products of X = {} and Y = {}\n\nP = X·Y\n\n", x.name, y.name);
    let mut t = Table::new(&["product", "CharPoly", "λ", "d1", "d2", "1EV", "constant from p"]);
    for r in &records {
        t.row(&[
            r.label.clone(),
            r.char_poly.to_string(),
            f::eigenvalues(&r.eigenvalues),
            r.d1.to_string(),
            r.d2.to_string(),
            f::yes_no(r.one_ev).to_string(),
            r.constancy_onset.map_or_else(|| "—".into(), |p| p.to_string()),
        ]);
    }
    out.push_str(&t.render());
    for r in &records {
        out.push_str(&format!("\n## {}\n\n```text\n{}```\n", r.label, f::matrix_block(&r.rows.0)));
    }
    Ok(out)
}

#[derive(Serialize)]
struct GerschgorinOutput<'a> {
    subject: &'a Subject,
    axis: Axis,
    disks: &'a [Disk],
    eigenvalues: &'a [Eigenvalue],
}

fn gerschgorin(cli: &Cli, subject: &Subject) -> Result<String> {
    let a = subject.square();
    let disks = gerschgorin_disks(a, cli.axis);
    let eigs = dasquare::eigenvalues(&a.char_poly());
    for e in &eigs {
        let tol = 1e-6 * e.value().norm().max(1.0);
        if !in_disk_union(&disks, e.value(), tol) {
            return Err(InvariantViolation(format!(
                "eigenvalue {} lies outside every Gerschgorin disk",
                f::eigenvalue(e)
            ))
            .into());
        }
    }
    if let Some(path) = &cli.svg {
        write_file(path, &svg::gerschgorin(&subject.name, &disks, &eigs))?;
    }
    if cli.format() == Format::Json {
        return json(&GerschgorinOutput { subject, axis: cli.axis, disks: &disks, eigenvalues: &eigs });
    }
    let axis = match cli.axis {
        Axis::Row => "row",
        Axis::Column => "column",
    };
    let compact: Vec<String> = disks.iter().map(|d| format!("({},{})", d.center, d.radius)).collect();
    let mut out = format!("# Gerschgorin disks of {} ({axis} sums)\n\n{}\n\n", subject.name, compact.join(","));
    let mut t = Table::new(&["center", "radius"]);
    for d in &disks {
        t.row(&[d.center.to_string(), d.radius.to_string()]);
    }
    out.push_str(&t.render());
    out.push_str(&format!("\neigenvalues: {}\n", f::eigenvalues(&eigs)));
    Ok(out)
}

#[derive(Serialize)]
struct CensusRow<'a> {
    index: usize,
    cells: String,
    associative: bool,
    pandiagonal: bool,
    mu: usize,
    one_ev: bool,
    r_index: String,
    clan: usize,
    clan_name: &'a str,
}

#[derive(Serialize)]
struct ClanRow {
    clan: &'static str,
    singular_values: Vec<String>,
    one_ev_indices: Vec<usize>,
    associative_members: Vec<usize>,
    #[serde(serialize_with = "dasquare::serde_big::int")]
    r_index: BigInt,
}

#[derive(Serialize)]
struct CensusOutput<'a> {
    raw_solutions: usize,
    frenicle_forms: usize,
    associative: usize,
    pandiagonal: usize,
    clans: usize,
    one_ev: usize,
    calibration_ok: bool,
    calibration: &'a dasquare::census::Calibration,
    #[serde(skip_serializing_if = "Option::is_none")]
    associative_clans: Option<Vec<ClanRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one_ev_squares: Option<Vec<dasquare::census::OneEvEntry>>,
}

fn enumerate4(cli: &Cli, csv_path: Option<&Path>, find_1ev: bool) -> Result<String> {
    let census = Census::shared();
    let calibration = census.calibration();
    if !calibration.ok() {
        eprintln!("warning: Frenicle calibration failed; index-based names may not match printed indices");
        for a in &calibration.anchors {
            eprintln!("warning:   {} printed at {}, found at {}", a.name, a.printed, a.found);
        }
    }
    let clan_name = |id: usize| -> &'static str {
        census
            .clans()
            .iter()
            .find(|c| c.id == id)
            .and_then(|c| associative_clan_name(&c.key))
            .unwrap_or("")
    };
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
        for m in census.members() {
            let cells: Vec<String> = m.square.entries().iter().map(ToString::to_string).collect();
            w.serialize(CensusRow {
                index: m.index,
                cells: cells.join(" "),
                associative: m.associative,
                pandiagonal: m.pandiagonal,
                mu: m.mu,
                one_ev: m.one_ev,
                r_index: m.r_index.to_string(),
                clan: m.clan,
                clan_name: clan_name(m.clan),
            })?;
        }
        w.flush()?;
    }
    let members = census.members();
    let count = |p: fn(&dasquare::census::Member) -> bool| members.iter().filter(|m| p(m)).count();
    let associative_clans = find_1ev.then(|| {
        ASSOCIATIVE_CLANS
            .iter()
            .map(|(name, roots)| {
                let of_clan = |m: &&dasquare::census::Member| m.associative && clan_name(m.clan) == *name;
                let r: i64 = roots.iter().map(|s| s * s).sum::<i64>() - 34i64.pow(4);
                ClanRow {
                    clan: name,
                    singular_values: roots.iter().map(|&s| f::surd(s as u64)).collect(),
                    one_ev_indices: members.iter().filter(of_clan).filter(|m| m.one_ev).map(|m| m.index).collect(),
                    associative_members: members.iter().filter(of_clan).map(|m| m.index).collect(),
                    r_index: BigInt::from(r),
                }
            })
            .collect::<Vec<_>>()
    });
    let out = CensusOutput {
        raw_solutions: census.raw_count(),
        frenicle_forms: census.len(),
        associative: count(|m| m.associative),
        pandiagonal: count(|m| m.pandiagonal),
        clans: census.clans().len(),
        one_ev: count(|m| m.one_ev),
        calibration_ok: calibration.ok(),
        calibration: &calibration,
        associative_clans,
        one_ev_squares: find_1ev.then(|| census.onev_census(false)),
    };
    if cli.format() == Format::Json {
        return json(&out);
    }
    let mut text = String::from("# Order-4 classic magic squares\n\n");
    let mut t = Table::new(&["quantity", "value"]);
    t.row(&["raw solutions", &out.raw_solutions.to_string()]);
    t.row(&["Frenicle forms", &out.frenicle_forms.to_string()]);
    t.row(&["associative", &out.associative.to_string()]);
    t.row(&["pandiagonal", &out.pandiagonal.to_string()]);
    t.row(&["singular-value clans", &out.clans.to_string()]);
    t.row(&["1EV", &out.one_ev.to_string()]);
    text.push_str(&t.render());
    text.push_str("\n## Calibration\n\n");
    let mut t = Table::new(&["anchor", "printed index", "found index"]);
    for a in &calibration.anchors {
        t.row(&[a.name.to_string(), a.printed.to_string(), a.found.to_string()]);
    }
    text.push_str(&t.render());
    text.push_str(if calibration.ok() { "\ncalibration: ok\n" } else { "\ncalibration: FAILED\n" });
    if let Some(rows) = &out.associative_clans {
        text.push_str("\n## Associative clans\n\n");
        let mut t = Table::new(&["clan", "σ", "1EV indices", "associative members", "R"]);
        for r in rows {
            let list = |v: &[usize]| {
                if v.is_empty() {
                    "none".to_string()
                } else {
                    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                }
            };
            t.row(&[
                r.clan.to_string(),
                r.singular_values.join(", "),
                list(&r.one_ev_indices),
                format!("{} (first {})", r.associative_members.len(), r.associative_members.first().copied().unwrap_or(0)),
                r.r_index.to_string(),
            ]);
        }
        text.push_str(&t.render());
    }
    if let Some(all) = &out.one_ev_squares {
        text.push_str("\n## All 1EV squares\n\n");
        let mut t = Table::new(&["index", "clan", "associative", "R"]);
        for e in all {
            let name = clan_name(e.clan);
            let m = &members[e.index - 1];
            t.row(&[
                e.index.to_string(),
                if name.is_empty() { e.clan.to_string() } else { format!("{} ({name})", e.clan) },
                f::yes_no(m.associative).to_string(),
                e.r_index.to_string(),
            ]);
        }
        text.push_str(&t.render());
    }
    Ok(text)
}

fn catalog_show(cli: &Cli, subject: &Subject) -> Result<String> {
    match cli.format() {
        Format::Json => json(subject),
        Format::Markdown => Ok(format!(
            "# {}\n\n{}\n\n```text\n{}```\n",
            subject.name,
            subject.provenance,
            f::matrix_block(subject.square())
        )),
    }
}

#[derive(Serialize)]
struct CatalogLine {
    name: &'static str,
    order: usize,
    provenance: &'static str,
}

fn catalog_list(format: Format) -> String {
    let lines: Vec<CatalogLine> = dasquare::catalog::entries()
        .into_iter()
        .map(|e| CatalogLine { name: e.name, order: e.square.order(), provenance: e.provenance })
        .collect();
    if format == Format::Json {
        return json(&lines).expect("catalog serializes");
    }
    let mut t = Table::new(&["name", "order", "provenance"]);
    for l in &lines {
        t.row(&[l.name.to_string(), l.order.to_string(), l.provenance.to_string()]);
    }
    format!(
        "# Catalog\n\n{}\nAlso accepted: identity<n>, ones<n>, f<k> (k-th order-4 magic square, 1..880).\n",
        t.render()
    )
}
