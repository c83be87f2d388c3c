//! Apollonius-circle existence and construction: the closed-form slope
//! conditions for a circle tangentially encompassing all three excircles,
//! the diagnostic geometry behind them, an exact constructive solver in
//! Chebyshev coordinates, and the universal (any-m_c) slope region.

use crate::error::{Result, TaxiError};
use crate::excircles::{canonicalize, full_complement, CanonicalTriangle, Excircle};
use crate::geom::{cheb, cheb_inv, d1, linf, Point, Slope, TaxiCircle};
use crate::inscription::side_slopes;
use crate::rat::{rint, Rat};
use num_traits::{One, Signed, Zero};

/// Exact evaluation of one inequality condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondEval {
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

/// Which rule decided Apollonius-circle existence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApolloniusRule {
    /// No full complement of excircles, so no Apollonius circle.
    NoExcircles,
    /// Minimally inscribed, finite steep m_c, first condition satisfied.
    Cond1,
    /// Minimally inscribed, finite steep m_c, decided by the second
    /// condition (also reported when neither condition holds).
    Cond2,
    /// Minimally inscribed with vertical side AB: either steep-limit
    /// condition (2m_a − m_b ≥ 1 or 1 − m_a + 2m_b ≤ 0) suffices.
    Vertical,
    /// Two completely inscribed angles with opposing non-diagonal sides:
    /// always has an Apollonius circle.
    TwoCompletely,
    /// Horizontal + vertical legs: hypotenuse slope interval test.
    HorVert,
}

impl ApolloniusRule {
    pub fn name(&self) -> &'static str {
        match self {
            ApolloniusRule::NoExcircles => "no_excircles",
            ApolloniusRule::Cond1 => "cond1",
            ApolloniusRule::Cond2 => "cond2",
            ApolloniusRule::Vertical => "vertical",
            ApolloniusRule::TwoCompletely => "two_completely",
            ApolloniusRule::HorVert => "hor_vert",
        }
    }
}

/// Existence verdict with the exact values of the applied inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApolloniusDecision {
    pub exists: bool,
    pub rule: ApolloniusRule,
    /// lhs/rhs of the inequality that settled the verdict, when one did.
    pub lhs: Option<Rat>,
    pub rhs: Option<Rat>,
    /// Both condition evaluations, when the finite-m_c rule applied.
    pub cond1: Option<CondEval>,
    pub cond2: Option<CondEval>,
}

/// First condition: m_b/m_c + 2m_a − m_b − 1 ≥ 1/m_c.
pub fn eval_cond1(m_a: &Rat, m_b: &Rat, m_c: &Rat) -> CondEval {
    let lhs = m_b / m_c + rint(2) * m_a - m_b - Rat::one();
    let rhs = Rat::one() / m_c;
    let holds = lhs >= rhs;
    CondEval { lhs, rhs, holds }
}

/// Second condition: 1 − m_a + 2m_b − m_a/m_c ≤ 1/m_c.
pub fn eval_cond2(m_a: &Rat, m_b: &Rat, m_c: &Rat) -> CondEval {
    let lhs = Rat::one() - m_a + rint(2) * m_b - m_a / m_c;
    let rhs = Rat::one() / m_c;
    let holds = lhs <= rhs;
    CondEval { lhs, rhs, holds }
}

fn check_canonical_slopes(m_a: &Rat, m_b: &Rat, m_c: &Slope) -> Result<()> {
    if !(m_a > &Rat::zero() && m_a < &Rat::one() && m_b > &rint(-1) && m_b < m_a) {
        return Err(TaxiError::Precondition(format!(
            "slopes must satisfy 0 < m_a < 1 and -1 < m_b < m_a, got m_a={m_a}, m_b={m_b}"
        )));
    }
    if let Slope::Finite(m) = m_c {
        if m.abs() <= Rat::one() {
            return Err(TaxiError::Precondition(format!(
                "m_c must be steep, got {m}"
            )));
        }
    }
    Ok(())
}

/// Existence decision from canonical slopes alone: either condition may
/// grant existence (requiring both was the prior work's error).
pub fn decide_slopes(m_a: &Rat, m_b: &Rat, m_c: &Slope) -> Result<ApolloniusDecision> {
    check_canonical_slopes(m_a, m_b, m_c)?;
    match m_c {
        Slope::Vertical => {
            // both finite-slope conditions survive the vertical limit:
            // the first becomes 2m_a − m_b ≥ 1 and the second becomes
            // 1 − m_a + 2m_b ≤ 0; either suffices (confirmed by the
            // constructive solver and the search oracle on vertical-side
            // triangles such as m_a = 1/28, m_b = −1/2)
            let c1 = CondEval {
                lhs: rint(2) * m_a - m_b,
                rhs: Rat::one(),
                holds: rint(2) * m_a - m_b >= Rat::one(),
            };
            let c2 = CondEval {
                lhs: Rat::one() - m_a + rint(2) * m_b,
                rhs: Rat::zero(),
                holds: Rat::one() - m_a + rint(2) * m_b <= Rat::zero(),
            };
            let applied = if c1.holds { &c1 } else { &c2 };
            Ok(ApolloniusDecision {
                exists: c1.holds || c2.holds,
                rule: ApolloniusRule::Vertical,
                lhs: Some(applied.lhs.clone()),
                rhs: Some(applied.rhs.clone()),
                cond1: Some(c1.clone()),
                cond2: Some(c2),
            })
        }
        Slope::Finite(m) => {
            let c1 = eval_cond1(m_a, m_b, m);
            let c2 = eval_cond2(m_a, m_b, m);
            let (exists, rule, applied) = if c1.holds {
                (true, ApolloniusRule::Cond1, &c1)
            } else {
                (c2.holds, ApolloniusRule::Cond2, &c2)
            };
            Ok(ApolloniusDecision {
                exists,
                rule,
                lhs: Some(applied.lhs.clone()),
                rhs: Some(applied.rhs.clone()),
                cond1: Some(c1.clone()),
                cond2: Some(c2),
            })
        }
    }
}

/// A right triangle with horizontal and vertical legs has an Apollonius
/// circle iff the hypotenuse slope m satisfies 1/2 ≤ |m| < 1 or
/// 1 < |m| ≤ 2.
pub fn hor_vert_exists(m: &Slope) -> Result<bool> {
    let m = match m {
        Slope::Vertical => {
            return Err(TaxiError::Precondition(
                "vertical hypotenuse makes the right triangle degenerate".into(),
            ))
        }
        Slope::Finite(m) => m,
    };
    if m.is_zero() {
        return Err(TaxiError::Precondition(
            "horizontal hypotenuse makes the right triangle degenerate".into(),
        ));
    }
    let a = m.abs();
    let half = crate::rat::rat(1, 2);
    Ok((a >= half && a < Rat::one()) || (a > Rat::one() && a <= rint(2)))
}

/// If the triangle has both a horizontal and a vertical side, return the
/// slope of the remaining side (the hypotenuse).
pub fn hor_vert_hypotenuse(a: &Point, b: &Point, c: &Point) -> Result<Option<Slope>> {
    let slopes = side_slopes(a, b, c)?;
    let has_v = slopes.iter().any(|s| *s == Slope::Vertical);
    let has_h = slopes.iter().any(|s| s.finite().is_some_and(|m| m.is_zero()));
    if !(has_v && has_h) {
        return Ok(None);
    }
    Ok(slopes
        .into_iter()
        .find(|s| *s != Slope::Vertical && !s.finite().is_some_and(|m| m.is_zero())))
}

/// Closed-form existence pipeline. Hor/vert right triangles are decided
/// by the hypotenuse-slope interval: it agrees with the canonical-frame
/// vertical condition everywhere except the diagonal hypotenuse |m|=1,
/// where the interval (as stated) wins and reports nonexistence.
pub fn exists_closed_form(a: &Point, b: &Point, c: &Point) -> Result<ApolloniusDecision> {
    let comp = full_complement(a, b, c)?;
    if !comp.all_exist {
        return Ok(ApolloniusDecision {
            exists: false,
            rule: ApolloniusRule::NoExcircles,
            lhs: None,
            rhs: None,
            cond1: None,
            cond2: None,
        });
    }
    if let Some(m) = hor_vert_hypotenuse(a, b, c)? {
        let exists = hor_vert_exists(&m)?;
        return Ok(ApolloniusDecision {
            exists,
            rule: ApolloniusRule::HorVert,
            lhs: m.finite().map(|v| v.abs()),
            rhs: None,
            cond1: None,
            cond2: None,
        });
    }
    let class = crate::inscription::classify_triangle(a, b, c)?;
    if class.completely_count == 2 {
        return Ok(ApolloniusDecision {
            exists: true,
            rule: ApolloniusRule::TwoCompletely,
            lhs: None,
            rhs: None,
            cond1: None,
            cond2: None,
        });
    }
    let ct = canonicalize(a, b, c)?;
    decide_slopes(&ct.m_a, &ct.m_b, &ct.m_c)
}

/// The derivation's diagnostic geometry in the canonical frame: the
/// intersections of line AB with the diagonals through the origin and the
/// two dashed comparison lines whose intercepts drive the conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionTrace {
    pub d: Point,
    pub e: Point,
    pub green_intercept: Rat,
    pub red_intercept: Rat,
    pub k: Rat,
    pub t2: Point,
    pub t3: Point,
    pub t4: Point,
    pub cond1_holds: bool,
    pub cond2_holds: bool,
}

/// cond1 ⟺ T4 lies on or above the green line y = −x + green_intercept;
/// cond2 ⟺ T2 lies on or below the red line y = x + red_intercept.
pub fn condition_trace(ct: &CanonicalTriangle) -> Result<ConditionTrace> {
    let m_c = ct.m_c.finite().ok_or_else(|| {
        TaxiError::Precondition(
            "the trace geometry needs a finite m_c; use the vertical limit form instead".into(),
        )
    })?;
    if !ct.minimally_inscribed() {
        return Err(TaxiError::Precondition(
            "condition trace applies to minimally inscribed canonical triangles".into(),
        ));
    }
    let (x_a, y_a) = (&ct.a.x, &ct.a.y);
    let num = y_a - x_a * m_c;
    let green = rint(2) * &num / (Rat::one() - m_c);
    let red = rint(2) * &num / (m_c + Rat::one());
    let d = Point::new(&green / rint(2), &green / rint(2));
    let e = Point::new(-&red / rint(2), &red / rint(2));
    let sol = crate::excircles::excircle_opposite_closed_form(ct)?;
    let cond1_holds = &ct.m_a * &sol.k >= -&sol.k + &green;
    let cond2_holds = &ct.m_b * &sol.k <= &sol.k + &red;
    Ok(ConditionTrace {
        d,
        e,
        green_intercept: green,
        red_intercept: red,
        k: sol.k.clone(),
        t2: sol.t2.clone(),
        t3: sol.t3.clone(),
        t4: sol.t4.clone(),
        cond1_holds,
        cond2_holds,
    })
}

/// An Apollonius circle with its tightness residuals
/// enclose_dist(center, excircle_i) − radius, all exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApolloniusCircle {
    pub circle: TaxiCircle,
    pub tight: [Rat; 3],
}

/// A one-parameter family of Apollonius centers (line in the plane) with
/// affinely varying radius, clipped to its validity range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApolloniusFamily {
    pub anchor: Point,
    pub dir: (Rat, Rat),
    pub t_min: Option<Rat>,
    pub t_max: Option<Rat>,
    pub radius0: Rat,
    pub radius_slope: Rat,
}

impl ApolloniusFamily {
    pub fn circle_at(&self, t: &Rat) -> TaxiCircle {
        let c = Point::new(&self.anchor.x + &self.dir.0 * t, &self.anchor.y + &self.dir.1 * t);
        TaxiCircle::new(c, &self.radius0 + &self.radius_slope * t)
    }

    pub fn representative_t(&self) -> Rat {
        match (&self.t_min, &self.t_max) {
            (Some(a), Some(b)) => (a + b) / rint(2),
            (Some(a), None) => a + Rat::one(),
            (None, Some(b)) => b - Rat::one(),
            (None, None) => Rat::zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ApolloniusResult {
    pub circles: Vec<ApolloniusCircle>,
    pub families: Vec<ApolloniusFamily>,
}

impl ApolloniusResult {
    pub fn is_empty(&self) -> bool {
        self.circles.is_empty() && self.families.is_empty()
    }
}

/// Outcome of an exact 3x3 solve that may be rank-deficient.
enum Lin3 {
    Unique([Rat; 3]),
    Line { p: [Rat; 3], d: [Rat; 3] },
    Degenerate,
}

/// Gauss-Jordan elimination on an exact 3x4 augmented matrix.
fn solve3_general(rows: &[[Rat; 4]; 3]) -> Lin3 {
    let mut m: Vec<[Rat; 4]> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..3 {
        let Some(pr) = (row..3).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let pv = m[row][col].clone();
        for k in col..4 {
            m[row][k] = &m[row][k] / &pv;
        }
        for r in 0..3 {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..4 {
                    m[r][k] = &m[r][k] - &f * &m[row][k];
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == 3 {
            break;
        }
    }
    if m.iter().any(|r| {
        r[0].is_zero() && r[1].is_zero() && r[2].is_zero() && !r[3].is_zero()
    }) {
        return Lin3::Degenerate;
    }
    match pivot_cols.len() {
        3 => Lin3::Unique([m[0][3].clone(), m[1][3].clone(), m[2][3].clone()]),
        2 => {
            let free = (0..3).find(|c| !pivot_cols.contains(c)).unwrap();
            let mut p = [Rat::zero(), Rat::zero(), Rat::zero()];
            let mut d = [Rat::zero(), Rat::zero(), Rat::zero()];
            d[free] = Rat::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                p[pc] = m[i][3].clone();
                d[pc] = -&m[i][free];
            }
            Lin3::Line { p, d }
        }
        _ => Lin3::Degenerate,
    }
}

/// Construct every circle tangentially encompassing the three excircles.
///
/// In Chebyshev coordinates the requirement d1(C, c_i) + r_i = R becomes
/// max(|u − u_i|, |v − v_i|) = R − r_i; enumerating which coordinate
/// attains the max and with which sign gives 4 linear cases per excircle
/// and at most 64 exact 3x3 systems in (u, v, R). Every candidate is
/// validated against the original equations, so wrong case guesses never
/// leak through. Rank-deficient consistent cases yield one-parameter
/// families clipped to the rectangle where the case assumption holds.
pub fn construct_apollonius(
    e1: &Excircle,
    e2: &Excircle,
    e3: &Excircle,
) -> Result<ApolloniusResult> {
    let exc = [e1, e2, e3];
    for e in &exc {
        if !e.circle.radius.is_positive() {
            return Err(TaxiError::Precondition("excircle with non-positive radius".into()));
        }
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            if exc[i].circle.center == exc[j].circle.center {
                return Err(TaxiError::Precondition(
                    "concentric or duplicate excircles do not come from one triangle".into(),
                ));
            }
        }
    }
    let q: Vec<Point> = exc.iter().map(|e| cheb(&e.circle.center)).collect();
    let r: Vec<Rat> = exc.iter().map(|e| e.circle.radius.clone()).collect();

    // validate (u, v, R) against the original tangential-enclosure
    // equations, in both coordinate systems
    let validate = |u: &Rat, v: &Rat, big_r: &Rat| -> Option<ApolloniusCircle> {
        let qc = Point::new(u.clone(), v.clone());
        let center = cheb_inv(&qc);
        let mut tight = Vec::with_capacity(3);
        for (e, ri) in exc.iter().zip(r.iter()) {
            if big_r <= ri {
                return None;
            }
            if &linf(&qc, &cheb(&e.circle.center)) + ri != *big_r {
                return None;
            }
            let residual = d1(&center, &e.circle.center) + ri - big_r;
            if !residual.is_zero() {
                return None;
            }
            tight.push(residual);
        }
        Some(ApolloniusCircle {
            circle: TaxiCircle::new(center, big_r.clone()),
            tight: [tight[0].clone(), tight[1].clone(), tight[2].clone()],
        })
    };

    // case: for excircle i, coordinate `coord` attains the max with sign
    // `s`: s*(w_coord − q_i.coord) = R − r_i
    let case_row = |i: usize, coord: usize, s: i8| -> [Rat; 4] {
        let sv = rint(s as i64);
        let qi = if coord == 0 { &q[i].x } else { &q[i].y };
        let mut row = [Rat::zero(), Rat::zero(), rint(-1), &sv * qi - &r[i]];
        row[coord] = sv;
        row
    };

    let mut result = ApolloniusResult::default();
    let mut seen: std::collections::BTreeSet<(Rat, Rat, Rat)> = Default::default();
    let mut seen_fams: std::collections::BTreeSet<String> = Default::default();
    let cases: [(usize, i8); 4] = [(0, 1), (0, -1), (1, 1), (1, -1)];
    for &c1 in &cases {
        for &c2 in &cases {
            for &c3 in &cases {
                let picks = [c1, c2, c3];
                let rows = [
                    case_row(0, c1.0, c1.1),
                    case_row(1, c2.0, c2.1),
                    case_row(2, c3.0, c3.1),
                ];
                match solve3_general(&rows) {
                    Lin3::Unique([u, v, big_r]) => {
                        if let Some(sol) = validate(&u, &v, &big_r) {
                            if seen.insert((
                                sol.circle.center.x.clone(),
                                sol.circle.center.y.clone(),
                                sol.circle.radius.clone(),
                            )) {
                                result.circles.push(sol);
                            }
                        }
                    }
                    Lin3::Line { p, d } => {
                        if let Some(fam) = clip_family(&p, &d, &picks, &q, &r, &validate) {
                            let key = format!("{fam:?}");
                            if seen_fams.insert(key) {
                                result.families.push(fam);
                            }
                        }
                    }
                    Lin3::Degenerate => {}
                }
            }
        }
    }
    result.circles.sort_by_key(|s| {
        (
            s.circle.radius.clone(),
            &s.circle.center.x + &s.circle.center.y,
            &s.circle.center.x - &s.circle.center.y,
        )
    });
    Ok(result)
}

/// Clip the solution line of a rank-deficient case to the parameter range
/// where the case's max/sign assumptions hold, then validate and convert
/// back to original coordinates.
fn clip_family(
    p: &[Rat; 3],
    d: &[Rat; 3],
    picks: &[(usize, i8); 3],
    q: &[Point],
    r: &[Rat],
    validate: &dyn Fn(&Rat, &Rat, &Rat) -> Option<ApolloniusCircle>,
) -> Option<ApolloniusFamily> {
    let mut t_min: Option<Rat> = None;
    let mut t_max: Option<Rat> = None;
    let mut feasible = true;
    let mut tighten = |coef: Rat, cons: Rat| {
        // coef*t + cons >= 0
        if coef.is_zero() {
            if cons.is_negative() {
                feasible = false;
            }
        } else {
            let bound = -&cons / &coef;
            if coef.is_positive() {
                if t_min.as_ref().map_or(true, |m| bound > *m) {
                    t_min = Some(bound);
                }
            } else if t_max.as_ref().map_or(true, |m| bound < *m) {
                t_max = Some(bound);
            }
        }
    };
    for (i, &(coord, s)) in picks.iter().enumerate() {
        let sv = rint(s as i64);
        let other = 1 - coord;
        let qi = [&q[i].x, &q[i].y];
        // chosen(t) = s*(p[coord] + t*d[coord] − q_i[coord])
        let ch_coef = &sv * &d[coord];
        let ch_cons = &sv * (&p[coord] - qi[coord]);
        // other(t) = p[other] + t*d[other] − q_i[other]
        let ot_coef = d[other].clone();
        let ot_cons = &p[other] - qi[other];
        // chosen ± other >= 0
        tighten(&ch_coef - &ot_coef, &ch_cons - &ot_cons);
        tighten(&ch_coef + &ot_coef, &ch_cons + &ot_cons);
    }
    // R(t) − r_j >= 0; strictness is checked at the representative
    for rj in r {
        tighten(d[2].clone(), &p[2] - rj);
    }
    if !feasible {
        return None;
    }
    if let (Some(lo), Some(hi)) = (&t_min, &t_max) {
        if lo > hi {
            return None;
        }
    }
    let fam_cheb = ApolloniusFamily {
        anchor: Point::new(p[0].clone(), p[1].clone()),
        dir: (d[0].clone(), d[1].clone()),
        t_min,
        t_max,
        radius0: p[2].clone(),
        radius_slope: d[2].clone(),
    };
    let t = fam_cheb.representative_t();
    let cu = &fam_cheb.anchor.x + &fam_cheb.dir.0 * &t;
    let cv = &fam_cheb.anchor.y + &fam_cheb.dir.1 * &t;
    let big_r = &fam_cheb.radius0 + &fam_cheb.radius_slope * &t;
    validate(&cu, &cv, &big_r)?;
    // map the family back to original coordinates (cheb_inv is linear)
    let anchor = cheb_inv(&fam_cheb.anchor);
    let half = crate::rat::rat(1, 2);
    let dir = (
        (&fam_cheb.dir.0 + &fam_cheb.dir.1) * &half,
        (&fam_cheb.dir.0 - &fam_cheb.dir.1) * &half,
    );
    Some(ApolloniusFamily {
        anchor,
        dir,
        t_min: fam_cheb.t_min,
        t_max: fam_cheb.t_max,
        radius0: fam_cheb.radius0,
        radius_slope: fam_cheb.radius_slope,
    })
}

/// Verdict on the universal region: do all steep m_c admit an Apollonius
/// circle for these shallow slopes?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionVerdict {
    pub inside: bool,
    /// lhs/rhs of the region inequality, present when slack_ok.
    pub lhs: Option<Rat>,
    pub rhs: Option<Rat>,
    /// 2m_a − m_b − 1 > 0 (necessary for membership).
    pub slack_ok: bool,
}

/// inside ⟺ 2m_a − m_b − 1 > 0 and
/// (1 − m_b)/(2m_a − m_b − 1) < (m_a + 1)/(1 − m_a + 2m_b).
pub fn universal_region(m_a: &Rat, m_b: &Rat) -> Result<RegionVerdict> {
    if !(m_a > &Rat::zero() && m_a < &Rat::one() && m_b > &rint(-1) && m_b < m_a) {
        return Err(TaxiError::Precondition(format!(
            "slopes outside the canonical box: m_a={m_a}, m_b={m_b}"
        )));
    }
    let slack = rint(2) * m_a - m_b - Rat::one();
    if !slack.is_positive() {
        return Ok(RegionVerdict {
            inside: false,
            lhs: None,
            rhs: None,
            slack_ok: false,
        });
    }
    let lhs = (Rat::one() - m_b) / &slack;
    let rhs = (m_a + Rat::one()) / (Rat::one() - m_a + rint(2) * m_b);
    Ok(RegionVerdict {
        inside: lhs < rhs,
        lhs: Some(lhs),
        rhs: Some(rhs),
        slack_ok: true,
    })
}

/// 64 steep slopes for region sweeps: 32 positive values from just above
/// the diagonal out to 10^6, mirrored to negatives. Includes ±8.
pub fn steep_slope_sweep() -> Vec<Rat> {
    let mut pos: Vec<Rat> = Vec::with_capacity(32);
    for j in 1..=16i64 {
        pos.push(Rat::one() + crate::rat::rat(j, 8));
    }
    for j in 17..=28i64 {
        pos.push(rint(3) + crate::rat::rat(j - 16, 2));
    }
    for v in [16, 101, 10_000, 1_000_000] {
        pos.push(rint(v));
    }
    let mut all = Vec::with_capacity(64);
    for m in &pos {
        all.push(m.clone());
    }
    for m in &pos {
        all.push(-m);
    }
    all
}

/// Concrete triangle realizing canonical slopes: C at the origin,
/// B = (1, m_a), and A at the intersection of y = m_b·x with the line of
/// slope m_c through B. Returns (A, B, C).
pub fn realize_canonical(m_a: &Rat, m_b: &Rat, m_c: &Slope) -> Result<(Point, Point, Point)> {
    check_canonical_slopes(m_a, m_b, m_c)?;
    let b = Point::new(Rat::one(), m_a.clone());
    let a = match m_c {
        Slope::Vertical => Point::new(Rat::one(), m_b.clone()),
        Slope::Finite(m) => {
            let t = (m - m_a) / (m - m_b);
            Point::new(t.clone(), m_b * &t)
        }
    };
    Ok((a, b, Point::new(Rat::zero(), Rat::zero())))
}

/// Concrete right triangle with horizontal and vertical legs whose
/// hypotenuse has slope m. Returns (A, B, C) with the right angle at C.
pub fn realize_hor_vert(m: &Rat) -> Result<(Point, Point, Point)> {
    if m.is_zero() {
        return Err(TaxiError::Precondition("hypotenuse slope must be nonzero".into()));
    }
    let c = Point::new(Rat::zero(), Rat::zero());
    if m.is_positive() {
        Ok((Point::new(Rat::zero(), m.clone()), Point::of(-1, 0), c))
    } else {
        Ok((Point::new(Rat::zero(), -m), Point::of(1, 0), c))
    }
}
