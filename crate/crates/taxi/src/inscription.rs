//! Inscribed-angle classification of taxicab angles and triangles, and
//! the three-point circle solver: three non-collinear points lie on a
//! taxicab circle exactly when the triangle they form is inscribed.

use crate::error::{Result, TaxiError};
use crate::geom::{cross, LinearObject, Point, Slope, SlopeClass, TaxiCircle};
use crate::rat::{rint, Rat};
use num_traits::{Signed, Zero};

/// Inscription class of a single triangle angle.
///
/// An angle placed with its vertex at a taxicab circle's vertex is
/// completely inscribed when neither diagonal line through the vertex
/// meets the open angle interior, strictly positively (negatively)
/// inscribed when exactly the slope -1 (+1) diagonal does, and not
/// inscribed when both do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleClass {
    CompletelyInscribed,
    StrictlyPositive,
    StrictlyNegative,
    NotInscribed,
}

impl AngleClass {
    /// A line of slope +1 through the vertex avoids the angle interior.
    pub fn positively_inscribed(&self) -> bool {
        matches!(self, AngleClass::CompletelyInscribed | AngleClass::StrictlyPositive)
    }

    /// A line of slope -1 through the vertex avoids the angle interior.
    pub fn negatively_inscribed(&self) -> bool {
        matches!(self, AngleClass::CompletelyInscribed | AngleClass::StrictlyNegative)
    }

    pub fn name(&self) -> &'static str {
        match self {
            AngleClass::CompletelyInscribed => "completely_inscribed",
            AngleClass::StrictlyPositive => "strictly_positive",
            AngleClass::StrictlyNegative => "strictly_negative",
            AngleClass::NotInscribed => "not_inscribed",
        }
    }

    /// Class after applying a D4 element that exchanges the diagonals.
    pub fn swap(&self) -> AngleClass {
        match self {
            AngleClass::StrictlyPositive => AngleClass::StrictlyNegative,
            AngleClass::StrictlyNegative => AngleClass::StrictlyPositive,
            other => *other,
        }
    }
}

/// True iff `w` lies strictly inside the open angle spanned by `d1` and
/// `d2` (an angle strictly between 0 and a straight angle).
fn strictly_inside(d1: &(Rat, Rat), d2: &(Rat, Rat), w: &(Rat, Rat)) -> bool {
    let c = cross(d1, d2);
    debug_assert!(!c.is_zero());
    if c.is_positive() {
        cross(d1, w).is_positive() && cross(w, d2).is_positive()
    } else {
        cross(d1, w).is_negative() && cross(w, d2).is_negative()
    }
}

/// Classify the angle at `vertex` spanned by the rays with directions
/// `dir1` and `dir2`. A ray lying exactly on a diagonal contributes
/// nothing: the interior test is strict.
pub fn classify_angle(_vertex: &Point, dir1: &(Rat, Rat), dir2: &(Rat, Rat)) -> Result<AngleClass> {
    if (dir1.0.is_zero() && dir1.1.is_zero()) || (dir2.0.is_zero() && dir2.1.is_zero()) {
        return Err(TaxiError::InvalidTriangle("zero direction at an angle".into()));
    }
    if cross(dir1, dir2).is_zero() {
        return Err(TaxiError::InvalidTriangle(
            "degenerate (zero or straight) angle".into(),
        ));
    }
    let pos_diag = [(rint(1), rint(1)), (rint(-1), rint(-1))];
    let neg_diag = [(rint(1), rint(-1)), (rint(-1), rint(1))];
    let n_plus = pos_diag.iter().any(|w| strictly_inside(dir1, dir2, w));
    let n_minus = neg_diag.iter().any(|w| strictly_inside(dir1, dir2, w));
    Ok(match (n_plus, n_minus) {
        (false, false) => AngleClass::CompletelyInscribed,
        (true, false) => AngleClass::StrictlyNegative,
        (false, true) => AngleClass::StrictlyPositive,
        (true, true) => AngleClass::NotInscribed,
    })
}

/// Per-vertex classification plus the inscription summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleClassification {
    /// Angle classes at the vertices, in input order.
    pub angles: [AngleClass; 3],
    pub inscribed: bool,
    pub completely_count: usize,
    pub minimally_inscribed: bool,
}

pub fn require_triangle(a: &Point, b: &Point, c: &Point) -> Result<()> {
    if a == b || b == c || a == c {
        return Err(TaxiError::InvalidTriangle("duplicate points".into()));
    }
    if crate::geom::orient(a, b, c) == 0 {
        return Err(TaxiError::InvalidTriangle("collinear points".into()));
    }
    Ok(())
}

pub fn classify_triangle(a: &Point, b: &Point, c: &Point) -> Result<TriangleClassification> {
    require_triangle(a, b, c)?;
    let dir = |from: &Point, to: &Point| (&to.x - &from.x, &to.y - &from.y);
    let angles = [
        classify_angle(a, &dir(a, b), &dir(a, c))?,
        classify_angle(b, &dir(b, a), &dir(b, c))?,
        classify_angle(c, &dir(c, a), &dir(c, b))?,
    ];
    let inscribed = angles.iter().all(|k| *k != AngleClass::NotInscribed);
    let completely_count = angles
        .iter()
        .filter(|k| **k == AngleClass::CompletelyInscribed)
        .count();
    Ok(TriangleClassification {
        angles,
        inscribed,
        completely_count,
        minimally_inscribed: inscribed && completely_count == 1,
    })
}

/// A one-parameter family of circumcircle centers: the line
/// `anchor + t * dir` for t in the given (possibly unbounded) range,
/// with radius `radius0 + t * radius_slope`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircumFamily {
    pub anchor: Point,
    pub dir: (Rat, Rat),
    pub t_min: Option<Rat>,
    pub t_max: Option<Rat>,
    pub radius0: Rat,
    pub radius_slope: Rat,
}

impl CircumFamily {
    pub fn circle_at(&self, t: &Rat) -> TaxiCircle {
        let c = Point::new(&self.anchor.x + &self.dir.0 * t, &self.anchor.y + &self.dir.1 * t);
        TaxiCircle::new(c, &self.radius0 + &self.radius_slope * t)
    }

    /// A point of the family, preferring a finite range endpoint.
    pub fn representative_t(&self) -> Rat {
        match (&self.t_min, &self.t_max) {
            (Some(a), Some(b)) => (a + b) / rint(2),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => Rat::zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CircumcircleResult {
    pub isolated: Vec<TaxiCircle>,
    pub families: Vec<CircumFamily>,
}

impl CircumcircleResult {
    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.families.is_empty()
    }
}

const SIGNS: [i8; 2] = [1, -1];

fn sgn_rat(s: i8) -> Rat {
    rint(s as i64)
}

/// Solve d1(c,p1) = d1(c,p2) = d1(c,p3) exactly by enumerating the sign
/// cases of each absolute-value expansion. Each case fixes, for every
/// input point, the signs of (cx - x_i) and (cy - y_i); the two
/// equidistance equations then become linear in (cx, cy). Candidates are
/// validated against the original equations, so a wrong sign guess can
/// never leak through. Rank-deficient consistent cases yield
/// one-parameter families, clipped to the rectangle where the assumed
/// sign pattern holds.
pub fn circumcircles(p1: &Point, p2: &Point, p3: &Point) -> Result<CircumcircleResult> {
    require_triangle(p1, p2, p3)?;
    let pts = [p1, p2, p3];
    let mut result = CircumcircleResult::default();
    let mut seen_isolated: std::collections::BTreeSet<(Rat, Rat)> = Default::default();
    let mut seen_families: std::collections::BTreeSet<String> = Default::default();

    for &sx1 in &SIGNS {
        for &sy1 in &SIGNS {
            for &sx2 in &SIGNS {
                for &sy2 in &SIGNS {
                    for &sx3 in &SIGNS {
                        for &sy3 in &SIGNS {
                            let signs = [(sx1, sy1), (sx2, sy2), (sx3, sy3)];
                            solve_sign_case(
                                &pts,
                                &signs,
                                &mut result,
                                &mut seen_isolated,
                                &mut seen_families,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(result)
}

/// d1(c, p_i) under a fixed sign pattern is the affine form
/// sx*(cx - x_i) + sy*(cy - y_i); equate pattern 1 with pattern i.
fn eq_row(p1: &Point, s1: (i8, i8), pi: &Point, si: (i8, i8)) -> (Rat, Rat, Rat) {
    // a*cx + b*cy = rhs
    let a = sgn_rat(s1.0) - sgn_rat(si.0);
    let b = sgn_rat(s1.1) - sgn_rat(si.1);
    let rhs = sgn_rat(s1.0) * &p1.x + sgn_rat(s1.1) * &p1.y
        - sgn_rat(si.0) * &pi.x
        - sgn_rat(si.1) * &pi.y;
    (a, b, rhs)
}

fn validate_center(c: &Point, pts: &[&Point; 3]) -> Option<Rat> {
    let r = crate::geom::d1(c, pts[0]);
    if crate::geom::d1(c, pts[1]) == r && crate::geom::d1(c, pts[2]) == r && r.is_positive() {
        Some(r)
    } else {
        None
    }
}

fn solve_sign_case(
    pts: &[&Point; 3],
    signs: &[(i8, i8); 3],
    out: &mut CircumcircleResult,
    seen_isolated: &mut std::collections::BTreeSet<(Rat, Rat)>,
    seen_families: &mut std::collections::BTreeSet<String>,
) {
    let (a1, b1, c1) = eq_row(pts[0], signs[0], pts[1], signs[1]);
    let (a2, b2, c2) = eq_row(pts[0], signs[0], pts[2], signs[2]);
    let det = &a1 * &b2 - &a2 * &b1;
    if !det.is_zero() {
        let cx = (&c1 * &b2 - &c2 * &b1) / &det;
        let cy = (&a1 * &c2 - &a2 * &c1) / &det;
        let c = Point::new(cx, cy);
        if let Some(r) = validate_center(&c, pts) {
            if seen_isolated.insert((c.x.clone(), c.y.clone())) {
                out.isolated.push(TaxiCircle::new(c, r));
            }
        }
        return;
    }
    // Singular: the two equations describe parallel (or trivial) lines.
    // A consistent rank-1 or rank-0 system leaves a line of centers
    // inside this sign rectangle.
    let line = solution_line(&(a1, b1, c1), &(a2, b2, c2), pts, signs);
    let Some((anchor, dir)) = line else { return };
    // Clip to the sign-validity rectangle: s*(coord - v_i) >= 0 per point
    // and coordinate, each a linear constraint on t. Also require r(t) > 0.
    let mut t_min: Option<Rat> = None;
    let mut t_max: Option<Rat> = None;
    let mut feasible = true;
    let mut tighten = |coef: &Rat, cons: &Rat| {
        // constraint: coef*t + cons >= 0
        if coef.is_zero() {
            if cons.is_negative() {
                feasible = false;
            }
        } else {
            let bound = -cons / coef;
            if coef.is_positive() {
                if t_min.as_ref().map_or(true, |m| bound > *m) {
                    t_min = Some(bound);
                }
            } else if t_max.as_ref().map_or(true, |m| bound < *m) {
                t_max = Some(bound);
            }
        }
    };
    for (p, s) in pts.iter().zip(signs.iter()) {
        // sx*(anchor.x + t*dir.x - p.x) >= 0
        tighten(
            &(sgn_rat(s.0) * &dir.0),
            &(sgn_rat(s.0) * (&anchor.x - &p.x)),
        );
        tighten(
            &(sgn_rat(s.1) * &dir.1),
            &(sgn_rat(s.1) * (&anchor.y - &p.y)),
        );
    }
    if !feasible {
        return;
    }
    if let (Some(lo), Some(hi)) = (&t_min, &t_max) {
        if lo > hi {
            return;
        }
    }
    // radius along the line, affine under the sign pattern of point 1
    let r0 = sgn_rat(signs[0].0) * (&anchor.x - &pts[0].x)
        + sgn_rat(signs[0].1) * (&anchor.y - &pts[0].y);
    let r_slope = sgn_rat(signs[0].0) * &dir.0 + sgn_rat(signs[0].1) * &dir.1;
    let fam = CircumFamily {
        anchor,
        dir,
        t_min,
        t_max,
        radius0: r0,
        radius_slope: r_slope,
    };
    // Validate a representative against the original equations.
    let t = fam.representative_t();
    let circle = fam.circle_at(&t);
    if validate_center(&circle.center, pts).is_none() {
        return;
    }
    match (&fam.t_min, &fam.t_max) {
        (Some(a), Some(b)) if a == b => {
            let c = fam.circle_at(a);
            if let Some(r) = validate_center(&c.center, pts) {
                if seen_isolated.insert((c.center.x.clone(), c.center.y.clone())) {
                    out.isolated.push(TaxiCircle::new(c.center, r));
                }
            }
        }
        _ => {
            let key = format!("{:?}", fam);
            if seen_families.insert(key) {
                out.families.push(fam);
            }
        }
    }
}

/// Solution line of two (possibly trivial) parallel affine equations.
fn solution_line(
    e1: &(Rat, Rat, Rat),
    e2: &(Rat, Rat, Rat),
    _pts: &[&Point; 3],
    _signs: &[(i8, i8); 3],
) -> Option<(Point, (Rat, Rat))> {
    let nontrivial = |e: &(Rat, Rat, Rat)| !(e.0.is_zero() && e.1.is_zero());
    let consistent_trivial = |e: &(Rat, Rat, Rat)| e.0.is_zero() && e.1.is_zero() && e.2.is_zero();
    let line_of = |e: &(Rat, Rat, Rat)| -> (Point, (Rat, Rat)) {
        // a*x + b*y = c; direction (-b, a)
        let anchor = if !e.0.is_zero() {
            Point::new(&e.2 / &e.0, Rat::zero())
        } else {
            Point::new(Rat::zero(), &e.2 / &e.1)
        };
        (anchor, (-&e.1, e.0.clone()))
    };
    match (nontrivial(e1), nontrivial(e2)) {
        (true, true) => {
            // parallel; consistent only if they are the same line
            // check e2 is a multiple of e1
            let (a1, b1, c1) = e1;
            let (a2, b2, c2) = e2;
            // cross of normals is zero by caller; check constants align:
            // need (a1,b1,c1) ~ (a2,b2,c2)
            let ok = if !a1.is_zero() {
                let k = a2 / a1;
                *b2 == &k * b1 && *c2 == &k * c1
            } else {
                let k = b2 / b1;
                *a2 == &k * a1 && *c2 == &k * c1
            };
            if ok {
                Some(line_of(e1))
            } else {
                None
            }
        }
        (true, false) => consistent_trivial(e2).then(|| line_of(e1)),
        (false, true) => consistent_trivial(e1).then(|| line_of(e2)),
        (false, false) => {
            // both trivial: a two-parameter family needs three collinear
            // points, which the caller rejects
            None
        }
    }
}

/// Segment view of a bounded family, when both ends are finite.
pub fn family_segment(f: &CircumFamily) -> Option<LinearObject> {
    match (&f.t_min, &f.t_max) {
        (Some(a), Some(b)) => Some(LinearObject::segment(
            &f.circle_at(a).center,
            &f.circle_at(b).center,
        )),
        _ => None,
    }
}

/// Side slopes of a triangle: (a, b, c) opposite vertices (A, B, C).
pub fn side_slopes(a: &Point, b: &Point, c: &Point) -> Result<[Slope; 3]> {
    Ok([
        Slope::between(b, c)?,
        Slope::between(a, c)?,
        Slope::between(a, b)?,
    ])
}

/// Count of diagonal (slope +/-1) sides.
pub fn diagonal_side_count(slopes: &[Slope; 3]) -> usize {
    slopes
        .iter()
        .filter(|s| s.class() == SlopeClass::Diagonal)
        .count()
}
