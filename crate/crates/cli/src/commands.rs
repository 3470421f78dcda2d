use std::fs;
use std::path::Path;

use chowkit_core::alternating::{dual_family_ring, elementary_alternating, is_alternating_family, sharp, DUAL_FAMILY};
use chowkit_core::chow::{
    chow_ambient, chow_complete_intersection, chow_hypersurface, chow_points, chow_substitute, intersects_system, meets,
    membership, projection, ChowForm, FinitePointSet, ProjectivePoint, SplitStatus,
};
use chowkit_core::grammar::parse;
use chowkit_core::numres::{normalized_point_resultant, point_resultant, segre, veronese, AlgebraicPoint};
use chowkit_core::symfun::{decompose_symmetric, sigma_table, wedge_table};
use chowkit_core::wedge::{expand_split, macaulay, paired_point_block, wedge_coeff, wedge_split, SplitForm};
use chowkit_core::{BlockRef, Context, Error, GroupKind, Homogeneity, Limits, Poly, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{ChowKind, Cli, Command, PointInput, PolyInput};
use crate::error::{CliError, CliResult};
use crate::manifest::{
    format_element, format_point, number_field, parse_elements, parse_rational, parse_vector, read_json, Manifest,
};

pub const UNSPLIT: &str = "unsplit-over-Q";

pub struct Output {
    pub result: Value,
    pub text: String,
    pub status: &'static str,
}

impl Output {
    fn poly(p: &Poly) -> Self {
        Self::scalar(p.to_string())
    }

    fn scalar(s: String) -> Self {
        Output { result: json!(s), text: s, status: "ok" }
    }

    fn boolean(b: bool) -> Self {
        Output { result: json!(b), text: b.to_string(), status: "ok" }
    }

    fn lines(items: Vec<String>) -> Self {
        Output { text: items.join("\n"), result: json!(items), status: "ok" }
    }
}

/// `CHOWKIT_LIMITS="n=4,d=5,D=5,field=8"`; absent keys keep their defaults.
pub fn limits_from_env(var: Option<String>) -> CliResult<Limits> {
    let mut limits = Limits::default();
    let Some(text) = var else {
        return Ok(limits);
    };
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("CHOWKIT_LIMITS: expected key=value, got `{item}`")))?;
        let v: usize = value
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("CHOWKIT_LIMITS: `{value}` is not a number")))?;
        match key.trim() {
            "n" => limits.max_dim = v,
            "d" => limits.max_degree = v as u32,
            "D" => limits.max_count = v,
            "field" => limits.max_field_degree = v,
            k => return Err(CliError::usage(format!("CHOWKIT_LIMITS: unknown key `{k}`"))),
        }
    }
    Ok(limits)
}

pub fn run(cli: &Cli, limits: Limits) -> CliResult<Output> {
    let mut ctx = Context::with_limits(limits);
    match &cli.command {
        Command::Sigma { n, count } => {
            check_size("n", *n, limits.max_dim)?;
            check_size("D", *count, limits.max_count)?;
            Ok(Output::lines(sigma_table(*n, *count).into_iter().map(|(a, p)| format!("s{a} = {p}")).collect()))
        }
        Command::Decompose { poly, family } => {
            let p = load_poly(poly)?;
            Ok(Output::scalar(decompose_symmetric(&mut ctx, &p, family)?.to_string()))
        }
        Command::WedgeTable { n, d, count } => Ok(Output::scalar(wedge_table(&mut ctx, *n, *d, *count)?.to_string())),
        Command::Wedge { f, g, split, dual } => {
            let f = Manifest::load(f)?.one(None)?;
            match (g, split) {
                (Some(g), _) => {
                    let g = Manifest::load(g)?.one(None)?;
                    let dual = resolve_block(g.ring(), dual)?;
                    Ok(Output::poly(&wedge_coeff(&mut ctx, &f, &g, &dual)?))
                }
                (None, Some(path)) => Ok(Output::poly(&wedge_with_split(&mut ctx, &f, path, dual)?)),
                (None, None) => Err(CliError::usage("give --g or --split")),
            }
        }
        Command::Macaulay { system } => {
            let fs = Manifest::load(system)?.system()?;
            Ok(Output::poly(&macaulay(&mut ctx, &fs)?))
        }
        Command::CheckAlternating { poly, family } => Ok(Output::boolean(is_alternating_family(&load_poly(poly)?, family)?)),
        Command::Sharp { poly, family } => Ok(Output::poly(&sharp(&load_poly(poly)?, family)?)),
        Command::Minors { n, m } => {
            check_size("n", *n, limits.max_dim)?;
            let minors = elementary_alternating(*n, *m)?;
            Ok(Output::lines(
                minors
                    .into_iter()
                    .map(|(s, p)| {
                        let cols: Vec<String> = s.iter().map(usize::to_string).collect();
                        format!("[{}] = {p}", cols.join(","))
                    })
                    .collect(),
            ))
        }
        Command::Chow { kind, out } => {
            let c = build_chow(&mut ctx, kind, &limits)?;
            if let Some(path) = out {
                let manifest = Manifest::to_value(c.poly().ring(), c.poly(), Some(c.family()));
                let text = serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Internal(e.to_string()))?;
                fs::write(path, text + "\n").map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            }
            Ok(Output::poly(c.poly()))
        }
        Command::Meets { chow, lambda, random, range } => {
            let c = load_chow(chow)?;
            match random {
                Some(k) => Ok(sample_meets(&c, *k, *range, cli.seed, cli.parallel)),
                None => meets_or_substitute(&c, lambda),
            }
        }
        Command::Intersects { chow, system } => {
            let c = load_chow(chow)?;
            let fs = Manifest::load(system)?.system()?;
            Ok(Output::boolean(intersects_system(&mut ctx, &c, &fs)?))
        }
        Command::Member { chow, point } => {
            let c = load_chow(chow)?;
            Ok(Output::boolean(membership(&c, &parse_vector(point)?)?))
        }
        Command::Project { chow, lambda } => {
            let c = load_chow(chow)?;
            let ls = parse_lambdas(lambda, c.ambient())?;
            Ok(Output::poly(&projection(&c, &ls)?))
        }
        Command::PointResultant { point, normalized } => {
            let xi = load_point(point, &point.coords, &limits)?;
            let r = if *normalized { normalized_point_resultant(&xi)? } else { point_resultant(&xi)? };
            Ok(Output::poly(&r))
        }
        Command::Veronese { point, d, resultant } => {
            let xi = load_point(point, &point.coords, &limits)?;
            point_output(&veronese(&xi, *d)?, *resultant)
        }
        Command::Segre { point, coords2, resultant } => {
            let xi = load_point(point, &point.coords, &limits)?;
            let up = load_point(point, coords2, &limits)?;
            point_output(&segre(&xi, &up)?, *resultant)
        }
    }
}

fn check_size(what: &'static str, value: usize, limit: usize) -> CliResult<()> {
    if value > limit {
        return Err(Error::SizeLimit { what, value, limit }.into());
    }
    Ok(())
}

fn load_poly(input: &PolyInput) -> CliResult<Poly> {
    Manifest::load(&input.input)?.one(input.name.as_deref())
}

fn load_chow(path: &Path) -> CliResult<ChowForm> {
    let m = Manifest::load(path)?;
    let family = m.family.clone().unwrap_or_else(|| DUAL_FAMILY.to_string());
    Ok(ChowForm::new(m.one(None)?, &family)?)
}

/// `L` names copy 0 of the group `L`; `L2` names copy 2 unless a group is
/// literally called `L2`.
fn resolve_block(ring: &Ring, name: &str) -> CliResult<BlockRef> {
    if ring.group(name).is_some() {
        return Ok(BlockRef::new(name, 0));
    }
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let copy = name[split.len()..].parse().map_err(|_| CliError::Domain(Error::UnknownGroup(name.into())))?;
    let r = BlockRef::new(split, copy);
    ring.block_index(&r)?;
    Ok(r)
}

fn wedge_with_split(ctx: &mut Context, f: &Poly, path: &Path, dual: &str) -> CliResult<Poly> {
    let v = read_json(path)?;
    let y = match v.get("y") {
        Some(y) => parse_rational(y.as_str().ok_or_else(|| CliError::usage("`y` must be a string"))?)?,
        None => Rational::from_integer(1.into()),
    };
    let points = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::usage("a split form needs a `points` array"))?
        .iter()
        .map(string_vector)
        .collect::<CliResult<Vec<_>>>()?;
    let n = match points.first() {
        Some(p) => p.len().checked_sub(1).ok_or_else(|| CliError::usage("empty point"))?,
        None => {
            return Err(CliError::usage("a split form needs at least one point"));
        }
    };
    let g = SplitForm::new(y, points)?;
    match paired_point_block(f, n)? {
        Some(b) => Ok(wedge_split(f, &f.ring().block_ref(b), &g)?),
        None => {
            let ring = dual_family_ring(dual, n, 1);
            let dual = BlockRef::new(dual, 0);
            let coeff = expand_split(&g, &ring, &dual)?;
            Ok(wedge_coeff(ctx, f, &coeff, &dual)?)
        }
    }
}

fn string_vector(v: &Value) -> CliResult<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| CliError::usage("a point must be an array of strings"))?
        .iter()
        .map(|c| match c {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()),
            _ => Err(CliError::usage("coordinates must be strings or integers")),
        })
        .collect()
}

fn build_chow(ctx: &mut Context, kind: &ChowKind, limits: &Limits) -> CliResult<ChowForm> {
    match kind {
        ChowKind::Points { points } => Ok(chow_points(&load_point_set(points, limits)?)?),
        ChowKind::Hypersurface { poly } => Ok(chow_hypersurface(&load_poly(poly)?)?),
        ChowKind::Ambient { n, power } => Ok(chow_ambient(*n, *power)?),
        ChowKind::Ci { system } => {
            let fs = Manifest::load(system)?.system()?;
            let ring = fs[0].ring();
            let n = match ring.blocks_of_kind(GroupKind::Point).as_slice() {
                [b] => ring.block_len(*b) - 1,
                _ => return Err(Error::AmbiguousGroup("a complete intersection needs exactly one point group".into()).into()),
            };
            Ok(chow_complete_intersection(ctx, &fs, n)?)
        }
    }
}

fn load_point_set(path: &Path, limits: &Limits) -> CliResult<FinitePointSet> {
    let v = read_json(path)?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::usage("a point set needs `n`"))? as usize;
    let field = number_field(v.get("minpoly").and_then(Value::as_str), limits)?;
    let items = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::usage("a point set needs a `points` array"))?;
    let mut points = Vec::new();
    for item in items {
        let (coords, mult) = match item {
            Value::Array(_) => (item, 1),
            Value::Object(o) => (
                o.get("coords").ok_or_else(|| CliError::usage("a point needs `coords`"))?,
                o.get("mult").and_then(Value::as_u64).unwrap_or(1) as u32,
            ),
            _ => return Err(CliError::usage("a point must be an array or an object")),
        };
        let texts: Vec<String> = coords
            .as_array()
            .ok_or_else(|| CliError::usage("`coords` must be an array"))?
            .iter()
            .map(|c| match c {
                Value::String(s) => Ok(s.clone()),
                Value::Number(x) => Ok(x.to_string()),
                _ => Err(CliError::usage("coordinates must be strings or integers")),
            })
            .collect::<CliResult<_>>()?;
        let elems = parse_elements(&texts.join(","))?;
        let xi = AlgebraicPoint::new(field.clone(), elems)?;
        let p = match xi.as_rational() {
            Some(x) => ProjectivePoint::Rational(x),
            None => ProjectivePoint::Algebraic(xi),
        };
        points.push((p, mult));
    }
    Ok(FinitePointSet::new(n, points)?)
}

/// A linear form in `L0_*` or a comma-separated coefficient list.
fn parse_lambdas(items: &[String], n: usize) -> CliResult<Vec<Vec<Rational>>> {
    let ring = dual_family_ring(DUAL_FAMILY, n, 1);
    items
        .iter()
        .map(|s| {
            if !s.chars().any(|c| c.is_ascii_alphabetic()) {
                let v = parse_vector(s)?;
                if v.len() != n + 1 {
                    return Err(Error::DimensionMismatch { expected: n, got: v.len().saturating_sub(1) }.into());
                }
                return Ok(v);
            }
            let p = parse(s, &ring)?;
            if !matches!(p.block_degree(0), Homogeneity::Degree(1) | Homogeneity::Zero) {
                return Err(Error::NotHomogeneous { group: "L0".into() }.into());
            }
            Ok((0..=n).map(|i| p.coeff(&chowkit_core::Monomial::var(&ring, 0, i, 1))).collect())
        })
        .collect()
}

fn meets_or_substitute(c: &ChowForm, lambda: &[String]) -> CliResult<Output> {
    let ls = parse_lambdas(lambda, c.ambient())?;
    if c.dim() >= 0 && ls.len() == c.dim() as usize {
        let s = chow_substitute(c, &ls)?;
        return Ok(match s.status {
            SplitStatus::Split(g) => {
                let pts: Vec<String> = g
                    .points()
                    .iter()
                    .map(|x| format_point(&x.iter().map(ToString::to_string).collect::<Vec<_>>()))
                    .collect();
                Output::lines(pts)
            }
            SplitStatus::Zero => Output::scalar("0".into()),
            SplitStatus::Unsplit => Output { status: UNSPLIT, ..Output::poly(&s.form) },
        });
    }
    Ok(Output::boolean(meets(c, &ls)?))
}

fn sample_meets(c: &ChowForm, k: usize, range: i64, seed: u64, parallel: bool) -> Output {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = c.ambient() + 1;
    let count = (c.dim() + 1).max(0) as usize;
    let samples: Vec<Vec<Vec<Rational>>> = (0..k)
        .map(|_| {
            (0..count)
                .map(|_| (0..width).map(|_| Rational::from_integer(rng.gen_range(-range..=range).into())).collect())
                .collect()
        })
        .collect();
    let hit = |ls: &Vec<Vec<Rational>>| meets(c, ls).unwrap_or(false);
    let hits = if parallel {
        samples.par_iter().filter(|ls| hit(ls)).count()
    } else {
        samples.iter().filter(|ls| hit(ls)).count()
    };
    Output::scalar(format!("{hits}/{k}"))
}

fn load_point(input: &PointInput, coords: &str, limits: &Limits) -> CliResult<AlgebraicPoint> {
    let field = number_field(input.minpoly.as_deref(), limits)?;
    Ok(AlgebraicPoint::new(field, parse_elements(coords)?)?)
}

fn point_output(xi: &AlgebraicPoint, resultant: bool) -> CliResult<Output> {
    if resultant {
        return Ok(Output::poly(&point_resultant(xi)?));
    }
    let coords: Vec<String> = xi.coords().iter().map(format_element).collect();
    let text = coords.join(",");
    Ok(Output { result: json!(coords), text, status: "ok" })
}
