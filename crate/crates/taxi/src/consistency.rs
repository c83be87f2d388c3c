//! Three-way agreement checks between the closed-form decisions, the
//! exact constructive solvers, and the brute-force oracles. Shared by the
//! CLI `check` command and the property suites.
//!
//! Semantics of oracle verdicts here:
//! - `ExistsWitness` contradicts a solver that found nothing.
//! - `CertifiedNone` contradicts a solver only if some exact solution lies
//!   inside the certified region (solutions outside it are out of scope of
//!   the certificate by construction).
//! - `Unknown` never contradicts anything; it is tallied and the suite
//!   fails only if the Unknown rate exceeds 2%.

use crate::apollonius::{construct_apollonius, exists_closed_form, ApolloniusResult};
use crate::excircles::{
    construct_excircle, full_complement, triangle_diameter, Excircle, Side,
};
use crate::geom::{cheb, Point};
use crate::inscription::{circumcircles, classify_triangle, CircumFamily};
use crate::oracle::{
    default_inflate, default_pitch, oracle_apollonius, oracle_circumcircle, oracle_excircle,
    OracleVerdict, SearchRegion,
};
use crate::rat::{format_rat, Rat};
use crate::Result;
use num_traits::Zero;

/// Tallies from a consistency run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Triangles processed.
    pub triangles: usize,
    /// Individual solver-vs-oracle comparisons attempted.
    pub oracle_checks: usize,
    /// Comparisons that agreed.
    pub agreements: usize,
    /// Comparisons skipped on an Unknown verdict.
    pub unknown_skipped: usize,
    /// Human-readable descriptions of every disagreement.
    pub mismatches: Vec<String>,
}

impl CheckReport {
    pub fn merge(&mut self, other: CheckReport) {
        self.triangles += other.triangles;
        self.oracle_checks += other.oracle_checks;
        self.agreements += other.agreements;
        self.unknown_skipped += other.unknown_skipped;
        self.mismatches.extend(other.mismatches);
    }

    /// Unknown verdicts may cover at most 2% of all oracle comparisons.
    pub fn unknown_within_ceiling(&self) -> bool {
        self.unknown_skipped * 50 <= self.oracle_checks
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.unknown_within_ceiling()
    }
}

fn fmt_pt(p: &Point) -> String {
    format!("({},{})", format_rat(&p.x), format_rat(&p.y))
}

fn fmt_tri(a: &Point, b: &Point, c: &Point) -> String {
    format!("{} {} {}", fmt_pt(a), fmt_pt(b), fmt_pt(c))
}

/// Range of `t` for which anchor + t*dir stays inside the region, clipped
/// to [t_min, t_max]; None when the intersection is empty.
fn clip_line_to_region(
    anchor: &Point,
    dir: &(Rat, Rat),
    t_min: &Option<Rat>,
    t_max: &Option<Rat>,
    region: &SearchRegion,
) -> Option<(Option<Rat>, Option<Rat>)> {
    let mut lo = t_min.clone();
    let mut hi = t_max.clone();
    let mut axis = |p0: &Rat, d: &Rat, lo_b: &Rat, hi_b: &Rat| -> bool {
        if d.is_zero() {
            return p0 >= lo_b && p0 <= hi_b;
        }
        let t1 = (lo_b - p0) / d;
        let t2 = (hi_b - p0) / d;
        let (a, b) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        if lo.as_ref().map_or(true, |v| *v < a) {
            lo = Some(a);
        }
        if hi.as_ref().map_or(true, |v| *v > b) {
            hi = Some(b);
        }
        true
    };
    if !axis(&anchor.x, &dir.0, &region.x_min, &region.x_max) {
        return None;
    }
    if !axis(&anchor.y, &dir.1, &region.y_min, &region.y_max) {
        return None;
    }
    match (&lo, &hi) {
        (Some(a), Some(b)) if a > b => None,
        _ => Some((lo, hi)),
    }
}

fn family_meets_region(f: &CircumFamily, region: &SearchRegion) -> bool {
    clip_line_to_region(&f.anchor, &f.dir, &f.t_min, &f.t_max, region).is_some()
}

/// Record the outcome of one solver-vs-oracle comparison.
fn tally(
    report: &mut CheckReport,
    verdict_exists: Option<bool>,
    solver_hit_in_region: bool,
    solver_any: bool,
    label: String,
) {
    report.oracle_checks += 1;
    match verdict_exists {
        None => report.unknown_skipped += 1,
        Some(true) if solver_any => report.agreements += 1,
        Some(false) if !solver_hit_in_region => report.agreements += 1,
        Some(true) => report.mismatches.push(format!(
            "{label}: oracle found a witness but the exact solver found nothing"
        )),
        Some(false) => report.mismatches.push(format!(
            "{label}: oracle certified none but an exact solution lies in the region"
        )),
    }
}

/// Circumcircle leg: classification ⟺ solver ⟺ oracle.
pub fn check_circumcircle(
    a: &Point,
    b: &Point,
    c: &Point,
    inflate: &Rat,
    pitch: &Rat,
    report: &mut CheckReport,
) -> Result<()> {
    let label = format!("circumcircle {}", fmt_tri(a, b, c));
    let class = classify_triangle(a, b, c)?;
    let circ = circumcircles(a, b, c)?;
    if class.inscribed == circ.is_empty() {
        report.mismatches.push(format!(
            "{label}: inscribed={} but solver returned {} solutions",
            class.inscribed,
            if circ.is_empty() { "no" } else { "some" }
        ));
    }
    let verdict = oracle_circumcircle(a, b, c, inflate, pitch);
    let (in_region, any) = match &verdict {
        OracleVerdict::CertifiedNone { region } => {
            let hit = circ.isolated.iter().any(|s| region.contains(&s.center))
                || circ.families.iter().any(|f| family_meets_region(f, region));
            (hit, !circ.is_empty())
        }
        _ => (!circ.is_empty(), !circ.is_empty()),
    };
    tally(report, verdict.exists(), in_region, any, label);
    Ok(())
}

/// Excircle leg: closed-form complement ⟺ per-side solver ⟺ oracle.
/// Returns the constructed excircles when all three exist.
pub fn check_excircles(
    a: &Point,
    b: &Point,
    c: &Point,
    inflate: &Rat,
    pitch: &Rat,
    report: &mut CheckReport,
) -> Result<Option<[Excircle; 3]>> {
    let fc = full_complement(a, b, c)?;
    let mut built: Vec<Option<Excircle>> = Vec::with_capacity(3);
    for side in Side::ALL {
        let e = construct_excircle(a, b, c, side)?;
        let label = format!("excircle side {} {}", side.name(), fmt_tri(a, b, c));
        let verdict = oracle_excircle(a, b, c, side, inflate, pitch);
        let (in_region, any) = match (&verdict, &e) {
            (OracleVerdict::CertifiedNone { region }, Some(ex)) => {
                (region.contains(&ex.circle.center), true)
            }
            _ => (e.is_some(), e.is_some()),
        };
        tally(report, verdict.exists(), in_region, any, label);
        built.push(e);
    }
    let all = built.iter().all(|e| e.is_some());
    if fc.all_exist != all {
        report.mismatches.push(format!(
            "full complement {}: closed form says {} but construction says {}",
            fmt_tri(a, b, c),
            fc.all_exist,
            all
        ));
    }
    if all {
        let mut it = built.into_iter().map(|e| e.unwrap());
        Ok(Some([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]))
    } else {
        Ok(None)
    }
}

fn apollonius_meets_region(res: &ApolloniusResult, region: &SearchRegion) -> bool {
    // the apollonius oracle searches in Chebyshev coordinates
    res.circles.iter().any(|s| region.contains(&cheb(&s.circle.center)))
        || res.families.iter().any(|f| {
            let anchor = cheb(&f.anchor);
            let dir = (&f.dir.0 + &f.dir.1, &f.dir.0 - &f.dir.1);
            clip_line_to_region(&anchor, &dir, &f.t_min, &f.t_max, region).is_some()
        })
}

/// Apollonius leg: closed form ⟺ constructive ⟺ oracle, given the full
/// excircle complement.
pub fn check_apollonius(
    a: &Point,
    b: &Point,
    c: &Point,
    exc: &[Excircle; 3],
    inflate: &Rat,
    pitch: &Rat,
    report: &mut CheckReport,
) -> Result<()> {
    let label = format!("apollonius {}", fmt_tri(a, b, c));
    let decision = exists_closed_form(a, b, c)?;
    let res = construct_apollonius(&exc[0], &exc[1], &exc[2])?;
    if decision.exists != !res.is_empty() {
        report.mismatches.push(format!(
            "{label}: closed form (rule {}) says {} but construction found {} circles and {} families",
            decision.rule.name(),
            decision.exists,
            res.circles.len(),
            res.families.len()
        ));
    }
    for circle in &res.circles {
        if circle.tight.iter().any(|t| !t.is_zero()) {
            report.mismatches.push(format!(
                "{label}: constructed circle at {} has nonzero tightness residual",
                fmt_pt(&circle.circle.center)
            ));
        }
    }
    let verdict = oracle_apollonius(&exc[0], &exc[1], &exc[2], inflate, pitch);
    let (in_region, any) = match &verdict {
        OracleVerdict::CertifiedNone { region } => {
            (apollonius_meets_region(&res, region), !res.is_empty())
        }
        _ => (!res.is_empty(), !res.is_empty()),
    };
    tally(report, verdict.exists(), in_region, any, label);
    Ok(())
}

/// Full consistency pass over one triangle with default oracle parameters.
pub fn check_triangle(a: &Point, b: &Point, c: &Point, report: &mut CheckReport) -> Result<()> {
    let inflate = default_inflate();
    let pitch = default_pitch(&triangle_diameter(a, b, c));
    report.triangles += 1;
    check_circumcircle(a, b, c, &inflate, &pitch, report)?;
    if let Some(exc) = check_excircles(a, b, c, &inflate, &pitch, report)? {
        check_apollonius(a, b, c, &exc, &inflate, &pitch, report)?;
    }
    Ok(())
}

/// Consistency over `n` seeded random triangles.
pub fn run_random(n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = crate::sampling::rng(seed);
    let mut report = CheckReport::default();
    for _ in 0..n {
        let (a, b, c) = crate::sampling::random_triangle(&mut rng);
        check_triangle(&a, &b, &c, &mut report)?;
    }
    Ok(report)
}
