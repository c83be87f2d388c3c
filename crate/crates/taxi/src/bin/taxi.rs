//! Command-line surface: exact-rational triangle geometry with JSON
//! output ("p/q" strings, never floats) and deterministic SVG rendering.
//!
//! Exit codes: 0 computed, 1 invalid input, 2 internal inconsistency.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use taxi::apollonius::{
    construct_apollonius, exists_closed_form, steep_slope_sweep, universal_region, ApolloniusResult,
};
use taxi::excircles::{
    canonicalize, construct_excircle, excenter_cevians, full_complement, Excircle, Side,
};
use taxi::geom::{Point, Slope, TaxiCircle};
use taxi::inscription::{circumcircles, classify_triangle};
use taxi::rat::{format_rat, parse_rat, rat, Rat};
use taxi::{Result, TaxiError};

#[derive(Parser)]
#[command(name = "taxi", about = "Exact taxicab triangle geometry", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the triangle's angles and inscription status.
    Classify {
        /// Triangle literal "x1,y1 x2,y2 x3,y3" with exact rational tokens.
        triangle: String,
        /// Also write the JSON document to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide and construct the triangle's excircles.
    Excircles {
        triangle: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide and construct the triangle's Apollonius circle(s).
    Apollonius {
        triangle: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Universal-region membership for canonical slopes "ma,mb".
    Region {
        /// Shallow slope pair "ma,mb" with exact rational tokens.
        slopes: String,
        /// Sweep this many steep m_c values (max 64) and report existence
        /// for each.
        #[arg(long, value_name = "N")]
        mc_sweep: Option<usize>,
        /// Rasterize membership over a 201x201 grid of (ma, mb) cells.
        #[arg(long)]
        raster: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cross-check closed forms, constructive solvers, and oracles.
    Check {
        /// Single triangle to check; omit with --random.
        triangle: Option<String>,
        /// Check this many seeded random triangles instead.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Render the triangle with its circles to SVG.
    Render {
        triangle: String,
        /// Write the SVG here instead of stdout.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Excenter-cevian concurrency exploration (no theorem asserted).
    Concurrency {
        /// Single triangle; omit with --random.
        triangle: Option<String>,
        /// Sample this many random minimally inscribed triangles.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_point(token: &str) -> Result<Point> {
    let parts: Vec<&str> = token.split(',').collect();
    if parts.len() != 2 {
        return Err(TaxiError::Parse(format!(
            "expected \"x,y\" but found \"{token}\""
        )));
    }
    Ok(Point::new(parse_rat(parts[0])?, parse_rat(parts[1])?))
}

fn parse_triangle(text: &str) -> Result<(Point, Point, Point)> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(TaxiError::Parse(format!(
            "expected three points \"x1,y1 x2,y2 x3,y3\" but found {} token(s)",
            tokens.len()
        )));
    }
    let a = parse_point(tokens[0])?;
    let b = parse_point(tokens[1])?;
    let c = parse_point(tokens[2])?;
    taxi::inscription::require_triangle(&a, &b, &c)?;
    Ok((a, b, c))
}

fn jrat(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn jpoint(p: &Point) -> Value {
    json!([format_rat(&p.x), format_rat(&p.y)])
}

fn jcircle(c: &TaxiCircle) -> Value {
    json!({ "center": jpoint(&c.center), "radius": jrat(&c.radius) })
}

fn jslope(s: &Slope) -> Value {
    match s {
        Slope::Finite(m) => jrat(m),
        Slope::Vertical => Value::String("vertical".to_string()),
    }
}

fn jtriangle(a: &Point, b: &Point, c: &Point) -> Value {
    json!([jpoint(a), jpoint(b), jpoint(c)])
}

fn classification_json(a: &Point, b: &Point, c: &Point) -> Result<Value> {
    let cls = classify_triangle(a, b, c)?;
    let circ = circumcircles(a, b, c)?;
    Ok(json!({
        "angles": cls.angles.iter().map(|k| k.name()).collect::<Vec<_>>(),
        "inscribed": cls.inscribed,
        "completely_count": cls.completely_count,
        "minimally_inscribed": cls.minimally_inscribed,
        "circumcircles": {
            "isolated": circ.isolated.iter().map(jcircle).collect::<Vec<_>>(),
            "families": circ.families.iter().map(|f| json!({
                "anchor": jpoint(&f.anchor),
                "dir": [jrat(&f.dir.0), jrat(&f.dir.1)],
                "t_min": f.t_min.as_ref().map(jrat),
                "t_max": f.t_max.as_ref().map(jrat),
                "radius0": jrat(&f.radius0),
                "radius_slope": jrat(&f.radius_slope),
            })).collect::<Vec<_>>(),
        },
    }))
}

fn excircle_json(e: &Excircle) -> Value {
    json!({
        "circle": jcircle(&e.circle),
        "witnesses": e.witnesses.iter().map(jpoint).collect::<Vec<_>>(),
    })
}

fn excircles_json(a: &Point, b: &Point, c: &Point) -> Result<(Value, Vec<Excircle>)> {
    let fc = full_complement(a, b, c)?;
    let mut sides = serde_json::Map::new();
    let mut built = Vec::new();
    for side in Side::ALL {
        let e = construct_excircle(a, b, c, side)?;
        sides.insert(
            side.name().to_string(),
            match &e {
                Some(e) => excircle_json(e),
                None => Value::Null,
            },
        );
        if let Some(e) = e {
            built.push(e);
        }
    }
    let value = json!({
        "all_exist": fc.all_exist,
        "rule": fc.rule.name(),
        "sides": Value::Object(sides),
    });
    Ok((value, built))
}

fn apollonius_json(a: &Point, b: &Point, c: &Point) -> Result<Value> {
    let decision = exists_closed_form(a, b, c)?;
    let (_, excircles) = excircles_json(a, b, c)?;
    let constructed: Option<ApolloniusResult> = if excircles.len() == 3 {
        Some(construct_apollonius(&excircles[0], &excircles[1], &excircles[2])?)
    } else {
        None
    };
    let canonical = canonicalize(a, b, c).ok().map(|ct| {
        json!({
            "m_a": jrat(&ct.m_a),
            "m_b": jrat(&ct.m_b),
            "m_c": jslope(&ct.m_c),
        })
    });
    let jcond = |cv: &taxi::apollonius::CondEval| {
        json!({ "lhs": jrat(&cv.lhs), "rhs": jrat(&cv.rhs), "holds": cv.holds })
    };
    Ok(json!({
        "exists": decision.exists,
        "rule": decision.rule.name(),
        "lhs": decision.lhs.as_ref().map(jrat),
        "rhs": decision.rhs.as_ref().map(jrat),
        "cond1": decision.cond1.as_ref().map(jcond),
        "cond2": decision.cond2.as_ref().map(jcond),
        "canonical_slopes": canonical,
        "circles": constructed.as_ref().map(|res| res.circles.iter().map(|ac| json!({
            "circle": jcircle(&ac.circle),
            "tight": ac.tight.iter().map(jrat).collect::<Vec<_>>(),
        })).collect::<Vec<_>>()),
        "families": constructed.as_ref().map(|res| res.families.iter().map(|f| json!({
            "anchor": jpoint(&f.anchor),
            "dir": [jrat(&f.dir.0), jrat(&f.dir.1)],
            "t_min": f.t_min.as_ref().map(jrat),
            "t_max": f.t_max.as_ref().map(jrat),
            "radius0": jrat(&f.radius0),
            "radius_slope": jrat(&f.radius_slope),
        })).collect::<Vec<_>>()),
    }))
}

fn region_json(slopes: &str, mc_sweep: Option<usize>, raster: bool) -> Result<Value> {
    let parts: Vec<&str> = slopes.split(',').collect();
    if parts.len() != 2 {
        return Err(TaxiError::Parse(format!(
            "expected \"ma,mb\" but found \"{slopes}\""
        )));
    }
    let m_a = parse_rat(parts[0])?;
    let m_b = parse_rat(parts[1])?;
    let verdict = universal_region(&m_a, &m_b)?;
    let mut doc = json!({
        "m_a": jrat(&m_a),
        "m_b": jrat(&m_b),
        "inside": verdict.inside,
        "slack_ok": verdict.slack_ok,
        "lhs": verdict.lhs.as_ref().map(jrat),
        "rhs": verdict.rhs.as_ref().map(jrat),
    });
    if let Some(n) = mc_sweep {
        let sweep = steep_slope_sweep();
        let take = if n == 0 { sweep.len() } else { n.min(sweep.len()) };
        let mut rows = Vec::with_capacity(take);
        for m_c in sweep.iter().take(take) {
            let (ta, tb, tc) =
                taxi::apollonius::realize_canonical(&m_a, &m_b, &Slope::Finite(m_c.clone()))?;
            let d = exists_closed_form(&ta, &tb, &tc)?;
            rows.push(json!({ "m_c": jrat(m_c), "exists": d.exists }));
        }
        doc["mc_sweep"] = Value::Array(rows);
    }
    if raster {
        // 201x201 cell centers over (m_a, m_b) in (0,1) x (-1,1),
        // evaluated exactly; rows from high m_b to low, '1' = inside
        let n = 201i64;
        let mut rows = Vec::with_capacity(n as usize);
        for i in (0..n).rev() {
            let mb = rat(2 * i + 1, n) - rat(1, 1);
            let mut row = String::with_capacity(n as usize);
            for j in 0..n {
                let ma = rat(2 * j + 1, 2 * n);
                let inside = if mb < ma {
                    universal_region(&ma, &mb).map(|v| v.inside).unwrap_or(false)
                } else {
                    false
                };
                row.push(if inside { '1' } else { '0' });
            }
            rows.push(Value::String(row));
        }
        doc["raster"] = json!({
            "grid": [n, n],
            "ma_range": ["0", "1"],
            "mb_range": ["-1", "1"],
            "rows": rows,
        });
    }
    Ok(doc)
}

fn check_json(
    triangle: &Option<String>,
    random: Option<usize>,
    seed: u64,
) -> Result<(Value, bool)> {
    let report = match (triangle, random) {
        (Some(text), None) => {
            let (a, b, c) = parse_triangle(text)?;
            let mut report = taxi::consistency::CheckReport::default();
            taxi::consistency::check_triangle(&a, &b, &c, &mut report)?;
            report
        }
        (None, Some(n)) => taxi::consistency::run_random(n, seed)?,
        _ => {
            return Err(TaxiError::Parse(
                "check needs either a triangle literal or --random N".into(),
            ))
        }
    };
    let ok = report.passed();
    let value = json!({
        "triangles": report.triangles,
        "oracle_checks": report.oracle_checks,
        "agreements": report.agreements,
        "unknown_skipped": report.unknown_skipped,
        "unknown_within_ceiling": report.unknown_within_ceiling(),
        "mismatches": report.mismatches,
        "passed": ok,
    });
    Ok((value, ok))
}

fn concurrency_json(
    triangle: &Option<String>,
    random: Option<usize>,
    seed: u64,
) -> Result<Value> {
    let jreport = |r: &taxi::excircles::ConcurrencyReport| {
        json!({
            "excenters": r.excenters.iter().map(jpoint).collect::<Vec<_>>(),
            "intersections": r.intersections.iter()
                .map(|p| p.as_ref().map(jpoint)).collect::<Vec<_>>(),
            "concurrent": r.concurrent,
        })
    };
    match (triangle, random) {
        (Some(text), None) => {
            let (a, b, c) = parse_triangle(text)?;
            let report = excenter_cevians(&a, &b, &c)?;
            Ok(json!({ "input": jtriangle(&a, &b, &c), "report": jreport(&report) }))
        }
        (None, Some(n)) => {
            let mut rng = taxi::sampling::rng(seed);
            let mut concurrent = 0usize;
            let mut samples = Vec::with_capacity(n.min(16));
            for _ in 0..n {
                let ((a, b, c), _) = taxi::sampling::random_minimal_triangle(&mut rng);
                let report = excenter_cevians(&a, &b, &c)?;
                if report.concurrent {
                    concurrent += 1;
                }
                if samples.len() < 16 {
                    samples.push(json!({
                        "triangle": jtriangle(&a, &b, &c),
                        "concurrent": report.concurrent,
                    }));
                }
            }
            Ok(json!({
                "samples": n,
                "seed": seed,
                "concurrent_count": concurrent,
                "fraction": format!("{concurrent}/{n}"),
                "first_samples": samples,
            }))
        }
        _ => Err(TaxiError::Parse(
            "concurrency needs either a triangle literal or --random N".into(),
        )),
    }
}

fn emit(doc: &Value, json_path: &Option<PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("serializable document");
    if let Some(path) = json_path {
        std::fs::write(path, &text)
            .map_err(|e| TaxiError::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    // tolerate closed pipes (e.g. piping into `head`)
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
    Ok(())
}

fn wrap(input: Value, key: &str, body: Value) -> Value {
    json!({ "schema": "v1", "input": input, key: body })
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Classify { triangle, json } => {
            let (a, b, c) = parse_triangle(triangle)?;
            let doc = wrap(
                jtriangle(&a, &b, &c),
                "classification",
                classification_json(&a, &b, &c)?,
            );
            emit(&doc, json)?;
            Ok(true)
        }
        Cmd::Excircles { triangle, json } => {
            let (a, b, c) = parse_triangle(triangle)?;
            let (body, _) = excircles_json(&a, &b, &c)?;
            let doc = wrap(jtriangle(&a, &b, &c), "excircles", body);
            emit(&doc, json)?;
            Ok(true)
        }
        Cmd::Apollonius { triangle, json } => {
            let (a, b, c) = parse_triangle(triangle)?;
            let doc = wrap(
                jtriangle(&a, &b, &c),
                "apollonius",
                apollonius_json(&a, &b, &c)?,
            );
            emit(&doc, json)?;
            Ok(true)
        }
        Cmd::Region {
            slopes,
            mc_sweep,
            raster,
            json,
        } => {
            let body = region_json(slopes, *mc_sweep, *raster)?;
            let doc = json!({ "schema": "v1", "input": slopes, "region": body });
            emit(&doc, json)?;
            Ok(true)
        }
        Cmd::Check {
            triangle,
            random,
            seed,
            json,
        } => {
            let (body, ok) = check_json(triangle, *random, *seed)?;
            let input = match triangle {
                Some(t) => Value::String(t.clone()),
                None => json!({ "random": random, "seed": seed }),
            };
            let doc = json!({ "schema": "v1", "input": input, "check": body });
            emit(&doc, json)?;
            Ok(ok)
        }
        Cmd::Render { triangle, svg } => {
            let (a, b, c) = parse_triangle(triangle)?;
            let scene = taxi::scene::default_scene(&a, &b, &c)?;
            let bytes = taxi::scene::render_svg(&scene);
            match svg {
                Some(path) => std::fs::write(path, &bytes).map_err(|e| {
                    TaxiError::Parse(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{bytes}"),
            }
            Ok(true)
        }
        Cmd::Concurrency {
            triangle,
            random,
            seed,
            json,
        } => {
            let body = concurrency_json(triangle, *random, *seed)?;
            let doc = json!({ "schema": "v1", "concurrency": body });
            emit(&doc, json)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        // a consistency mismatch is the internal-inconsistency pathway
        Ok(false) => ExitCode::from(2),
        Err(TaxiError::Inconsistent(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
