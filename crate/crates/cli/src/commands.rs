//! Subcommand implementations. Each produces a [`Report`]: the document to
//! emit and the exit code that goes with it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use polyloop_core::complex::path_graph;
use polyloop_core::decomp::{
    cone_loop_split, dj_book_decompose, dj_cycle_book_decompose, dj_path_decompose, dj_points_decompose,
    dj_simplex_decompose, poly_fold_decompose,
};
use polyloop_core::homology::{table_to_spheres, BettiTable};
use polyloop_core::series::{hilbert_sr, koszul_loop_series};
use polyloop_core::space::poincare_series;
use polyloop_core::{Atom, DecompResult, LoopModel, SimplicialComplex, SpaceExpr, SphereMultiset, TruncSeries};
use serde_json::{json, Value};

use crate::cache::{write_atomic, Cache};
use crate::error::{CliError, CliResult};
use crate::family::Family;
use crate::json::{render, BettiJson, ComplexJson, DecompJson, SeriesJson};
use crate::parallel::hochster_parallel;
use crate::{sexpr, Cli, Command, Format, SeriesKind, VerifyMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub code: u8,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, code: 0 }
    }
}

/// Runs the command, consulting the cache when one is configured, and
/// writes the body to `--out` if given. The caller prints the body otherwise.
pub fn run(cli: &Cli) -> CliResult<Report> {
    let report = match &cli.cache_dir {
        Some(dir) => {
            let cache = Cache::open(dir)?;
            let key = Cache::key(&request(cli)?);
            match cache.get(&key).and_then(|v| serde_json::from_value::<(String, u8)>(v).ok()) {
                Some((body, code)) => Report { body, code },
                None => {
                    let r = execute(cli)?;
                    cache.insert(&key, &json!([r.body, r.code]))?;
                    r
                }
            }
        }
        None => execute(cli)?,
    };
    if let Some(path) = &cli.out {
        write_atomic(path, report.body.as_bytes())?;
    }
    Ok(report)
}

/// Everything that determines the output; worker count and paths do not.
fn request(cli: &Cli) -> CliResult<Value> {
    let format = match cli.format {
        Format::Json => "json",
        Format::Text => "text",
    };
    let what = match &cli.command {
        Command::Build { family } => json!(["build", Family::parse(family)?.canonical()?]),
        Command::Decompose { family } => json!(["decompose", Family::parse(family)?.canonical()?]),
        Command::Hochster { family } => json!(["hochster", Family::parse(family)?.canonical()?]),
        Command::Verify { mode, family } => {
            json!(["verify", format!("{mode:?}"), Family::parse(family)?.canonical()?])
        }
        Command::Series { kind: SeriesKind::Term, args } => json!(["series", "term", args.join(" ")]),
        Command::Series { kind, args } => json!(["series", format!("{kind:?}"), Family::parse(args)?.canonical()?]),
    };
    Ok(json!({ "command": what, "N": cli.n, "max_dim": cli.max_dim, "format": format }))
}

fn execute(cli: &Cli) -> CliResult<Report> {
    let n = cli.n as usize;
    match &cli.command {
        Command::Build { family } => build(cli, &Family::parse(family)?),
        Command::Decompose { family } => {
            let r = decompose(&Family::parse(family)?, n, cli.max_dim)?;
            Ok(Report::ok(match cli.format {
                Format::Json => render(&DecompJson::from(&r))?,
                Format::Text => decomp_text(&r),
            }))
        }
        Command::Hochster { family } => {
            let table = hochster_parallel(&Family::parse(family)?.complex()?, cli.jobs())?;
            Ok(Report::ok(match cli.format {
                Format::Json => render(&BettiJson::from(&table))?,
                Format::Text => betti_text(&table),
            }))
        }
        Command::Verify { mode, family } => verify(cli, *mode, &Family::parse(family)?),
        Command::Series { kind, args } => {
            let s = match kind {
                SeriesKind::Term => poincare_series(&sexpr::parse_any(&args.join(" "))?, n)?,
                SeriesKind::Hilbert => hilbert_sr(&Family::parse(args)?.complex()?, n)?,
                SeriesKind::Koszul => koszul_loop_series(&Family::parse(args)?.complex()?, n)?,
            };
            Ok(Report::ok(match cli.format {
                Format::Json => render(&SeriesJson::from(&s))?,
                Format::Text => s.to_string(),
            }))
        }
    }
}

fn build(cli: &Cli, family: &Family) -> CliResult<Report> {
    let k = family.complex()?;
    Ok(Report::ok(match cli.format {
        Format::Json => render(&ComplexJson::from(&k))?,
        Format::Text => complex_text(&k),
    }))
}

/// The decomposition covering `family`. Books with `l = 2n` take the planar
/// route and get explicit sphere tables; other books, cycles and gluing
/// specifications are decomposed symbolically.
pub fn decompose(family: &Family, n: usize, max_dim: u32) -> CliResult<DecompResult> {
    Ok(match family {
        Family::Path(l) => dj_path_decompose(*l, n)?,
        Family::Points(k) => dj_points_decompose(*k, n)?,
        Family::Simplex(k) => dj_simplex_decompose(*k, n)?,
        Family::PlanarBook { l, p } => dj_book_decompose(*l, *p, n, max_dim)?,
        Family::Book { n: k, l, p } if *l == 2 * *k => {
            family.complex()?;
            dj_book_decompose(*k, *p, n, max_dim)?
        }
        Family::Book { n: k, l, p } => dj_cycle_book_decompose(*k, *l, *p, n)?,
        Family::Cycle(l) => {
            family.complex()?;
            let zk = SpaceExpr::atom(Atom::new(format!("Z_C{l}")));
            let mut r = cone_loop_split(*l, &LoopModel::Circles, &zk, n)?;
            r.family = "cycle".into();
            r.params = BTreeMap::from([("l".to_string(), *l as u64)]);
            r
        }
        Family::GlueSpecFile(_) => {
            let spec = family.glue_spec()?.expect("glue spec family");
            let zk = SpaceExpr::atom(Atom::new("Z_K1"));
            let base = cone_loop_split(spec.base().ground_size(), &LoopModel::Circles, &zk, n)?.total;
            poly_fold_decompose(&spec, &base, &SpaceExpr::atom(Atom::new("G")), n)?
        }
        Family::File(_) => {
            return Err(CliError::Invalid(
                "no decomposition for an arbitrary complex; use a named family or a gluing spec".into(),
            ))
        }
    })
}

/// The complex whose moment-angle complex the `zk` table describes.
fn porter_complex(family: &Family) -> CliResult<SimplicialComplex> {
    match family {
        Family::Path(_) | Family::Points(_) | Family::Simplex(_) => family.complex(),
        Family::PlanarBook { l, .. } => Ok(path_graph(*l)?),
        Family::Book { n, l, .. } if *l == 2 * *n => Ok(path_graph(*n)?),
        _ => Err(CliError::Invalid("porter-hochster needs a path, points, simplex or planar book".into())),
    }
}

struct Check {
    mode: &'static str,
    pass: bool,
    detail: String,
    discrepancy: Option<(usize, i128, i128)>,
}

fn first_difference(expected: &[i128], got: &[i128]) -> Option<(usize, i128, i128)> {
    (0..expected.len().max(got.len())).find_map(|d| {
        let (e, g) = (expected.get(d).copied().unwrap_or(0), got.get(d).copied().unwrap_or(0));
        (e != g).then_some((d, e, g))
    })
}

fn porter_check(cli: &Cli, family: &Family) -> CliResult<Check> {
    let k = porter_complex(family)?;
    let r = decompose(family, cli.n as usize, cli.max_dim)?;
    let got = r
        .spheres_of("zk")
        .ok_or_else(|| CliError::Invalid("decomposition has no sphere table".into()))?;
    let hochster = table_to_spheres(&hochster_parallel(&k, cli.jobs())?)?;
    let ceiling = got.ceiling().unwrap_or(u32::MAX);
    let mut expected = SphereMultiset::new();
    for (&d, &c) in hochster.counts().range(..=ceiling) {
        expected.add(d, c);
    }
    let top = expected.counts().keys().chain(got.counts().keys()).max().copied().unwrap_or(0) as usize;
    let dense = |s: &SphereMultiset| (0..=top).map(|d| s.get(d as u32) as i128).collect::<Vec<_>>();
    let discrepancy = first_difference(&dense(&expected), &dense(got));
    let detail = match discrepancy {
        None => format!("sphere multisets equal ({} spheres)", expected.total()),
        Some((d, e, g)) => format!("first discrepancy at dimension {d}: expected {e}, got {g}"),
    };
    Ok(Check { mode: "porter-hochster", pass: discrepancy.is_none(), detail, discrepancy })
}

fn koszul_check(cli: &Cli, family: &Family) -> CliResult<Check> {
    let expected = koszul_loop_series(&family.complex()?, cli.n as usize)?;
    let r = decompose(family, cli.n as usize, cli.max_dim)?;
    let got: TruncSeries = r
        .series
        .ok_or_else(|| CliError::Invalid("decomposition has symbolic factors and no series".into()))?;
    let discrepancy = first_difference(expected.coeffs(), got.coeffs());
    let detail = match discrepancy {
        None => format!("{} coefficients equal", expected.coeffs().len()),
        Some((d, e, g)) => format!("first discrepancy at degree {d}: expected {e}, got {g}"),
    };
    Ok(Check { mode: "koszul", pass: discrepancy.is_none(), detail, discrepancy })
}

fn verify(cli: &Cli, mode: VerifyMode, family: &Family) -> CliResult<Report> {
    let checks = match mode {
        VerifyMode::PorterHochster => vec![porter_check(cli, family)?],
        VerifyMode::Koszul => vec![koszul_check(cli, family)?],
        VerifyMode::All => vec![porter_check(cli, family)?, koszul_check(cli, family)?],
    };
    let pass = checks.iter().all(|c| c.pass);
    let body = match cli.format {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| {
                    let mut v = json!({ "mode": c.mode, "pass": c.pass, "detail": c.detail });
                    if let Some((d, e, g)) = c.discrepancy {
                        v["discrepancy"] = json!({ "degree": d, "expected": e, "got": g });
                    }
                    v
                })
                .collect();
            render(&json!({ "checks": list, "pass": pass }))?
        }
        Format::Text => checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.mode, c.detail))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Report { body, code: if pass { 0 } else { 1 } })
}

fn complex_text(k: &SimplicialComplex) -> String {
    let mut out = format!("m {}", k.ground_size());
    for f in k.facets() {
        let face: Vec<String> = f.iter().map(usize::to_string).collect();
        write!(out, "\n{{{}}}", face.join(",")).unwrap();
    }
    out
}

fn betti_text(t: &BettiTable) -> String {
    let mut out = format!("m {}", t.m());
    for (d, r) in t.ranks() {
        write!(out, "\nb_{d} = {r}").unwrap();
    }
    out
}

fn spheres_text(s: &SphereMultiset) -> String {
    let mut parts: Vec<String> = s.counts().iter().map(|(d, c)| format!("{c} x S^{d}")).collect();
    if parts.is_empty() {
        parts.push("point".into());
    }
    if let Some(c) = s.ceiling() {
        parts.push(format!("(dimensions above {c} omitted)"));
    }
    parts.join(", ")
}

fn decomp_text(r: &DecompResult) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut out = format!("family {} {}\ntotal {}", r.family, params.join(" "), r.total);
    for (name, term) in &r.factors {
        write!(out, "\nfactor {name} {term}").unwrap();
    }
    for (name, s) in &r.spheres {
        write!(out, "\nspheres {name}: {}", spheres_text(s)).unwrap();
    }
    match &r.series {
        Some(s) => write!(out, "\nseries {s}").unwrap(),
        None => out.push_str("\nseries unavailable (undeclared atoms)"),
    }
    if let Some((m, s)) = &r.circle_witness {
        write!(out, "\ncircles {m}, quotient {s}").unwrap();
    }
    let steps: Vec<&str> = r.provenance.iter().map(|s| s.name()).collect();
    write!(out, "\nsteps {}", steps.join(" -> ")).unwrap();
    out
}
