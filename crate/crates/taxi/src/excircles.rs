//! Excircle existence and construction. A triangle has a full complement
//! of excircles only for certain inscription classes; for minimally
//! inscribed triangles in the canonical frame the excircle opposite the
//! completely inscribed angle has a closed form.

use crate::error::{Result, TaxiError};
use crate::geom::{
    d1, dist_to, line_intersection, nearest_on, point_in_triangle, Containment, Isometry,
    LinearObject, Point, Slope, SlopeClass, TaxiCircle, D4_ALL,
};
use crate::inscription::{classify_triangle, require_triangle, side_slopes, AngleClass};
use crate::rat::{rint, Rat};
use num_traits::{One, Signed, Zero};

/// Triangle side labels: side `a` is opposite vertex A, etc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn name(&self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
            Side::C => "c",
        }
    }
}

/// A triangle moved to a canonical frame: the completely inscribed angle
/// C at the origin, rays toward B and A with shallow slopes
/// m_b < m_a, m_a > 0, both vertices in the open right half plane, and
/// (for minimally inscribed input) a steep opposite side.
#[derive(Debug, Clone)]
pub struct CanonicalTriangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub m_a: Rat,
    pub m_b: Rat,
    pub m_c: Slope,
    /// Maps original coordinates to the canonical frame.
    pub to_canonical: Isometry,
    /// Indices into the original (A, B, C) input for the canonical
    /// A, B, C labels.
    pub labels: [usize; 3],
}

impl CanonicalTriangle {
    pub fn minimally_inscribed(&self) -> bool {
        self.m_a < Rat::one()
    }
}

/// Move an inscribed triangle with one or two completely inscribed angles
/// into the canonical frame. The D4 element is chosen as the first fit in
/// a fixed enumeration order, so the result is deterministic; composing
/// `to_canonical.inverse()` recovers the input exactly.
pub fn canonicalize(a: &Point, b: &Point, c: &Point) -> Result<CanonicalTriangle> {
    let class = classify_triangle(a, b, c)?;
    if !class.inscribed || class.completely_count == 0 {
        return Err(TaxiError::Precondition(
            "canonical frame requires an inscribed triangle with a completely inscribed angle"
                .into(),
        ));
    }
    if class.completely_count == 3 {
        return Err(TaxiError::Precondition(
            "a triangle with three completely inscribed angles has no canonical frame".into(),
        ));
    }
    let verts = [a, b, c];
    let want_diag = class.completely_count == 2;
    for (ci, vc) in verts.iter().enumerate() {
        if class.angles[ci] != AngleClass::CompletelyInscribed {
            continue;
        }
        let others: Vec<usize> = (0..3).filter(|i| *i != ci).collect();
        for g in D4_ALL {
            let iso = {
                let moved = g.apply(vc);
                Isometry::new(g, (-moved.x, -moved.y))
            };
            let q0 = iso.apply(verts[others[0]]);
            let q1 = iso.apply(verts[others[1]]);
            if !q0.x.is_positive() || !q1.x.is_positive() {
                continue;
            }
            let s0 = &q0.y / &q0.x;
            let s1 = &q1.y / &q1.x;
            // larger slope is m_a; that vertex is B
            let (m_a, m_b, bi, ai, bp, ap) = if s0 > s1 {
                (s0, s1, others[0], others[1], q0.clone(), q1.clone())
            } else if s1 > s0 {
                (s1, s0, others[1], others[0], q1.clone(), q0.clone())
            } else {
                continue;
            };
            if !m_a.is_positive() || m_b <= rint(-1) {
                continue;
            }
            let diag_a = m_a == Rat::one();
            if want_diag {
                if !diag_a || m_b.abs() >= Rat::one() {
                    continue;
                }
            } else if m_a >= Rat::one() || m_b.abs() >= Rat::one() {
                continue;
            }
            let m_c = Slope::between(&ap, &bp)?;
            if !want_diag && m_c.class() != SlopeClass::Steep {
                // cannot happen for a minimally inscribed triangle; guard
                continue;
            }
            return Ok(CanonicalTriangle {
                a: ap,
                b: bp,
                c: Point::new(Rat::zero(), Rat::zero()),
                m_a,
                m_b,
                m_c,
                to_canonical: iso,
                labels: [ai, bi, ci],
            });
        }
    }
    Err(TaxiError::Inconsistent(
        "no D4 element produced a canonical frame".into(),
    ))
}

/// Closed-form excircle for the side opposite the completely inscribed
/// angle, in the canonical frame: k fixes the x-coordinate of the two
/// axis-aligned tangency points on the angle's rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcircleSolution {
    pub k: Rat,
    pub r: Rat,
    pub center: Point,
    pub t1: Point,
    pub t2: Point,
    pub t3: Point,
    pub t4: Point,
}

impl ExcircleSolution {
    pub fn circle(&self) -> TaxiCircle {
        TaxiCircle::new(self.center.clone(), self.r.clone())
    }
}

/// k = 2(y_a - x_a m_c) / (m_a + m_b + m_a m_c - m_b m_c - 2 m_c);
/// the excircle of side AB then has radius (k/2)(m_a - m_b) with center
/// (k, (k/2)(m_a + m_b)).
pub fn excircle_opposite_closed_form(ct: &CanonicalTriangle) -> Result<ExcircleSolution> {
    if !ct.minimally_inscribed() {
        return Err(TaxiError::Precondition(
            "closed form applies to minimally inscribed canonical triangles".into(),
        ));
    }
    let m_c = ct.m_c.finite().ok_or_else(|| {
        TaxiError::Precondition(
            "closed form requires a finite steep opposite slope; use the constructive path for \
             a vertical side"
                .into(),
        )
    })?;
    let (m_a, m_b) = (&ct.m_a, &ct.m_b);
    let (x_a, y_a) = (&ct.a.x, &ct.a.y);
    let den = m_a + m_b + m_a * m_c - m_b * m_c - rint(2) * m_c;
    if den.is_zero() {
        return Err(TaxiError::Inconsistent("degenerate k denominator".into()));
    }
    let k = rint(2) * (y_a - x_a * m_c) / den;
    if !k.is_positive() {
        return Err(TaxiError::Inconsistent(
            "non-positive k signals a precondition violation".into(),
        ));
    }
    let r = &k / rint(2) * (m_a - m_b);
    let mid = &k / rint(2) * (m_a + m_b);
    Ok(ExcircleSolution {
        center: Point::new(k.clone(), mid.clone()),
        t1: Point::new(&k - &r, mid.clone()),
        t2: Point::new(k.clone(), m_b * &k),
        t3: Point::new(&k + &r, mid.clone()),
        t4: Point::new(k.clone(), m_a * &k),
        k,
        r,
    })
}

/// A constructed excircle with its tangency witnesses: the contact point
/// on the side and on each of the two opposite-angle rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excircle {
    pub side: Side,
    pub circle: TaxiCircle,
    pub witnesses: [Point; 3],
}

/// Tangency objects for an excircle of `side`: the side segment plus the
/// full rays from the opposite vertex through each side endpoint
/// (the side and its extension beyond the far vertex).
pub fn tangency_objects(a: &Point, b: &Point, c: &Point, side: Side) -> [LinearObject; 3] {
    let (apex, e1, e2) = match side {
        Side::A => (a, b, c),
        Side::B => (b, a, c),
        Side::C => (c, a, b),
    };
    [
        LinearObject::segment(e1, e2),
        LinearObject::ray_through(apex, e1),
        LinearObject::ray_through(apex, e2),
    ]
}

/// One linear hypothesis about how a tangency constraint is realized:
/// contact on the supporting line from one side of it, or contact pinned
/// at an endpoint of the object with a fixed sign pattern.
#[derive(Debug, Clone)]
enum Hypothesis {
    /// sign * (signed line offset of center) = max(1,|m|) * r
    LineContact { sign: i8 },
    /// sx*(cx - ex) + sy*(cy - ey) = r
    EndpointContact { e: Point, sx: i8, sy: i8 },
}

fn hypotheses_for(obj: &LinearObject) -> Vec<Hypothesis> {
    let mut out = vec![Hypothesis::LineContact { sign: 1 }, Hypothesis::LineContact { sign: -1 }];
    let endpoints: Vec<Point> = match obj {
        LinearObject::Line { .. } => vec![],
        LinearObject::Ray { origin, .. } => vec![origin.clone()],
        LinearObject::Segment { p, q } => vec![p.clone(), q.clone()],
    };
    for e in endpoints {
        for sx in [1i8, -1] {
            for sy in [1i8, -1] {
                out.push(Hypothesis::EndpointContact {
                    e: e.clone(),
                    sx,
                    sy,
                });
            }
        }
    }
    out
}

/// Row of the 3x3 system in (cx, cy, r): coefficients plus rhs.
fn hypothesis_row(obj: &LinearObject, h: &Hypothesis) -> Option<[Rat; 4]> {
    match h {
        Hypothesis::EndpointContact { e, sx, sy } => Some([
            rint(*sx as i64),
            rint(*sy as i64),
            rint(-1),
            rint(*sx as i64) * &e.x + rint(*sy as i64) * &e.y,
        ]),
        Hypothesis::LineContact { sign } => {
            let (anchor, dir) = match obj {
                LinearObject::Line { anchor, dir } => (anchor.clone(), dir.clone()),
                LinearObject::Ray { origin, dir } => (origin.clone(), dir.clone()),
                LinearObject::Segment { p, q } => (p.clone(), (&q.x - &p.x, &q.y - &p.y)),
            };
            let s = rint(*sign as i64);
            if dir.0.is_zero() {
                // vertical line x = anchor.x: s*(cx - ax) = r
                Some([s.clone(), Rat::zero(), rint(-1), s * &anchor.x])
            } else {
                let m = &dir.1 / &dir.0;
                let b0 = &anchor.y - &m * &anchor.x;
                let scale = if m.abs() > Rat::one() { m.abs() } else { Rat::one() };
                // s*(cy - m*cx - b0) = scale * r
                Some([-(&s * &m), s.clone(), -scale, s * b0])
            }
        }
    }
}

/// Cramer solve of a 3x3 exact system; None when singular.
fn solve3(rows: &[[Rat; 4]; 3]) -> Option<[Rat; 3]> {
    let det3 = |m: &[[&Rat; 3]; 3]| -> Rat {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let base = [
        [&rows[0][0], &rows[0][1], &rows[0][2]],
        [&rows[1][0], &rows[1][1], &rows[1][2]],
        [&rows[2][0], &rows[2][1], &rows[2][2]],
    ];
    let d = det3(&base);
    if d.is_zero() {
        return None;
    }
    let mut out: Vec<Rat> = Vec::with_capacity(3);
    for col in 0..3 {
        let mut m = base;
        for (row_idx, row) in rows.iter().enumerate() {
            m[row_idx][col] = &row[3];
        }
        out.push(det3(&m) / &d);
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// All validated excircles for one side, in canonical order.
pub fn construct_excircle_all(a: &Point, b: &Point, c: &Point, side: Side) -> Result<Vec<Excircle>> {
    require_triangle(a, b, c)?;
    let objs = tangency_objects(a, b, c, side);
    let hyp: Vec<Vec<Hypothesis>> = objs.iter().map(hypotheses_for).collect();
    let mut seen: std::collections::BTreeSet<(Rat, Rat, Rat)> = Default::default();
    let mut found = Vec::new();
    for h0 in &hyp[0] {
        let Some(r0) = hypothesis_row(&objs[0], h0) else { continue };
        for h1 in &hyp[1] {
            let Some(r1) = hypothesis_row(&objs[1], h1) else { continue };
            for h2 in &hyp[2] {
                let Some(r2) = hypothesis_row(&objs[2], h2) else { continue };
                let rows = [r0.clone(), r1.clone(), r2.clone()];
                let Some([cx, cy, r]) = solve3(&rows) else { continue };
                if !r.is_positive() {
                    continue;
                }
                let center = Point::new(cx, cy);
                if !seen.insert((center.x.clone(), center.y.clone(), r.clone())) {
                    continue;
                }
                if let Some(exc) = validate_excircle(a, b, c, side, &objs, center, r) {
                    found.push(exc);
                }
            }
        }
    }
    found.sort_by(|p, q| p.circle.cmp(&q.circle));
    Ok(found)
}

/// The "outside the triangle" half of the excircle definition: the center
/// must sit strictly beyond the supporting line of `side`, on the far
/// side from the opposite vertex. Without this, degenerate circles that
/// merely graze the triangle at its vertices would slip through.
pub fn escribed_for(a: &Point, b: &Point, c: &Point, side: Side, center: &Point) -> bool {
    let (apex, e1, e2) = match side {
        Side::A => (a, b, c),
        Side::B => (b, a, c),
        Side::C => (c, a, b),
    };
    let s_apex = crate::geom::orient(e1, e2, apex);
    let s_center = crate::geom::orient(e1, e2, center);
    s_apex * s_center == -1
}

fn validate_excircle(
    a: &Point,
    b: &Point,
    c: &Point,
    side: Side,
    objs: &[LinearObject; 3],
    center: Point,
    r: Rat,
) -> Option<Excircle> {
    let mut witnesses = Vec::with_capacity(3);
    for obj in objs {
        let (dist, q) = nearest_on(&center, obj);
        if dist != r {
            return None;
        }
        witnesses.push(q);
    }
    // Interior disjoint from the triangle: the rays already cover two
    // sides and their extensions, the segment covers the third, so every
    // boundary point is at distance >= r; it remains to keep the center
    // outside the triangle, beyond the tangent side.
    if point_in_triangle(&center, a, b, c) != Containment::Outside {
        return None;
    }
    if !escribed_for(a, b, c, side, &center) {
        return None;
    }
    Some(Excircle {
        side,
        circle: TaxiCircle::new(center, r),
        witnesses: [witnesses[0].clone(), witnesses[1].clone(), witnesses[2].clone()],
    })
}

/// The canonical excircle for a side, when one exists.
pub fn construct_excircle(a: &Point, b: &Point, c: &Point, side: Side) -> Result<Option<Excircle>> {
    Ok(construct_excircle_all(a, b, c, side)?.into_iter().next())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementRule {
    /// Some angle is not inscribed: the opposite side has no excircle.
    NotInscribed,
    /// Minimally inscribed: every side has an excircle.
    Minimal,
    /// Two completely inscribed angles: a full complement exists iff the
    /// two non-diagonal sides have opposing slope classes.
    TwoCompletely,
    /// Three completely inscribed angles: only two excircles exist.
    ThreeCompletely,
}

impl ComplementRule {
    pub fn name(&self) -> &'static str {
        match self {
            ComplementRule::NotInscribed => "not_inscribed",
            ComplementRule::Minimal => "minimal",
            ComplementRule::TwoCompletely => "two_completely",
            ComplementRule::ThreeCompletely => "three_completely",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullComplementDecision {
    pub all_exist: bool,
    pub rule: ComplementRule,
}

/// Closed-form decision on whether all three sides carry an excircle.
pub fn full_complement(a: &Point, b: &Point, c: &Point) -> Result<FullComplementDecision> {
    let class = classify_triangle(a, b, c)?;
    if !class.inscribed {
        return Ok(FullComplementDecision {
            all_exist: false,
            rule: ComplementRule::NotInscribed,
        });
    }
    match class.completely_count {
        1 => Ok(FullComplementDecision {
            all_exist: true,
            rule: ComplementRule::Minimal,
        }),
        2 => {
            let slopes = side_slopes(a, b, c)?;
            let non_diag: Vec<SlopeClass> = slopes
                .iter()
                .map(|s| s.class())
                .filter(|k| *k != SlopeClass::Diagonal)
                .collect();
            let all_exist = non_diag.len() == 2
                && non_diag.contains(&SlopeClass::Steep)
                && non_diag.contains(&SlopeClass::Shallow);
            Ok(FullComplementDecision {
                all_exist,
                rule: ComplementRule::TwoCompletely,
            })
        }
        3 => Ok(FullComplementDecision {
            all_exist: false,
            rule: ComplementRule::ThreeCompletely,
        }),
        _ => Err(TaxiError::Inconsistent(
            "inscribed triangle without a completely inscribed angle".into(),
        )),
    }
}

/// Excenters joined to their vertices: intersection geometry of the three
/// cevian lines. No concurrency theorem is asserted; this is an
/// exploration probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcurrencyReport {
    pub excenters: [Point; 3],
    /// Pairwise intersections of cevians (a,b), (a,c), (b,c).
    pub intersections: [Option<Point>; 3],
    pub concurrent: bool,
}

pub fn excenter_cevians(a: &Point, b: &Point, c: &Point) -> Result<ConcurrencyReport> {
    let decision = full_complement(a, b, c)?;
    if !decision.all_exist {
        return Err(TaxiError::Precondition(
            "excenter cevians require a full complement of excircles".into(),
        ));
    }
    let mut centers = Vec::with_capacity(3);
    for side in Side::ALL {
        let exc = construct_excircle(a, b, c, side)?.ok_or_else(|| {
            TaxiError::Inconsistent(format!(
                "full complement predicted but side {} has no excircle",
                side.name()
            ))
        })?;
        centers.push(exc.circle.center);
    }
    let verts = [a, b, c];
    let lines: Vec<(Point, (Rat, Rat))> = verts
        .iter()
        .zip(centers.iter())
        .map(|(v, e)| ((*v).clone(), (&e.x - &v.x, &e.y - &v.y)))
        .collect();
    let inter = |i: usize, j: usize| -> Option<Point> {
        line_intersection(&lines[i].0, &lines[i].1, &lines[j].0, &lines[j].1)
    };
    let intersections = [inter(0, 1), inter(0, 2), inter(1, 2)];
    let concurrent = match &intersections {
        [Some(p), Some(q), Some(s)] => p == q && q == s,
        _ => {
            // parallel or coincident cevians: concurrent only if some
            // point lies on all three lines
            let on_line = |p: &Point, i: usize| {
                crate::geom::cross(&(&p.x - &lines[i].0.x, &p.y - &lines[i].0.y), &lines[i].1)
                    .is_zero()
            };
            intersections
                .iter()
                .flatten()
                .any(|p| (0..3).all(|i| on_line(p, i)))
        }
    };
    Ok(ConcurrencyReport {
        excenters: [centers[0].clone(), centers[1].clone(), centers[2].clone()],
        intersections,
        concurrent,
    })
}

/// Sanity predicate used by tests and the consistency runner: the circle
/// really is an excircle for the side.
pub fn is_excircle(a: &Point, b: &Point, c: &Point, side: Side, circle: &TaxiCircle) -> bool {
    let objs = tangency_objects(a, b, c, side);
    objs.iter().all(|o| dist_to(&circle.center, o) == circle.radius)
        && point_in_triangle(&circle.center, a, b, c) == Containment::Outside
        && escribed_for(a, b, c, side, &circle.center)
}

/// Triangle d1 diameter: the largest pairwise distance.
pub fn triangle_diameter(a: &Point, b: &Point, c: &Point) -> Rat {
    let mut m = d1(a, b);
    for v in [d1(a, c), d1(b, c)] {
        if v > m {
            m = v;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::D4;
    use crate::rat::rat;

    fn pt(x: i64, y: i64) -> Point {
        Point::of(x, y)
    }

    #[test]
    fn canonicalize_identity_case() {
        // C=(0,0), B on y=(3/4)x, A=(5,1) with m_b=1/5, m_c steep
        let b = pt(4, 3);
        let a = pt(5, 1);
        let c = pt(0, 0);
        let ct = canonicalize(&a, &b, &c).unwrap();
        assert_eq!(ct.to_canonical, Isometry::identity());
        assert_eq!(ct.m_a, rat(3, 4));
        assert_eq!(ct.m_b, rat(1, 5));
        assert_eq!(ct.m_c, Slope::Finite(rint(-2)));
        assert_eq!(ct.labels, [0, 1, 2]);
    }

    #[test]
    fn canonicalize_worked_example() {
        let ct = canonicalize(&pt(0, 0), &pt(5, 1), &pt(3, 4)).unwrap();
        assert_eq!(ct.c, pt(0, 0));
        assert_eq!(ct.m_a, rat(3, 4));
        assert_eq!(ct.m_b, rat(-2, 3));
        assert_eq!(ct.m_c, Slope::Finite(rint(5)));
        assert_eq!(ct.to_canonical.d4, D4::ReflectAnti);
        // round trip: uncanonicalize recovers the input vertices exactly
        let back = ct.to_canonical.inverse();
        assert_eq!(back.apply(&ct.c), pt(3, 4));
        let imgs = [back.apply(&ct.a), back.apply(&ct.b)];
        assert!(imgs.contains(&pt(0, 0)) && imgs.contains(&pt(5, 1)));
    }

    #[test]
    fn canonicalize_mirror_profile() {
        let (a, b, c) = (pt(5, 1), pt(4, 3), pt(0, 0));
        let ct = canonicalize(&a, &b, &c).unwrap();
        let refl = Isometry::new(D4::ReflectX0, (Rat::zero(), Rat::zero()));
        let ct2 = canonicalize(&refl.apply(&a), &refl.apply(&b), &refl.apply(&c)).unwrap();
        assert_eq!(ct.m_a, ct2.m_a);
        assert_eq!(ct.m_b, ct2.m_b);
        match (&ct.m_c, &ct2.m_c) {
            (Slope::Finite(x), Slope::Finite(y)) => assert_eq!(x.abs(), y.abs()),
            (a, b) => assert_eq!(a, b),
        }
    }

    #[test]
    fn canonicalize_rejections() {
        // not inscribed
        assert!(canonicalize(&pt(0, 0), &pt(1, 2), &pt(1, -2)).is_err());
        // three completely inscribed angles: two diagonal sides
        let t = classify_triangle(&pt(0, 0), &pt(2, 2), &pt(4, 0)).unwrap();
        assert_eq!(t.completely_count, 3);
        assert!(canonicalize(&pt(0, 0), &pt(2, 2), &pt(4, 0)).is_err());
    }

    /// Substitution oracle for the closed form: T1 must satisfy the AB
    /// line equation y = m_c (x - x_a) + y_a exactly.
    fn t1_on_ab(ct: &CanonicalTriangle, sol: &ExcircleSolution) {
        let m_c = ct.m_c.finite().unwrap();
        assert_eq!(sol.t1.y, m_c * (&sol.t1.x - &ct.a.x) + &ct.a.y);
    }

    #[test]
    fn closed_form_figure8_slopes() {
        // m_a=3/4, m_b=1/5, m_c=5/2, A=(5,1); B sits on y=3x/4 where
        // slope(A,B)=5/2: B = t*(1, 3/4) with (3t/4 - 1)/(t - 5) = 5/2
        // -> t = 46/7
        let a = pt(5, 1);
        let c = pt(0, 0);
        let b = Point::new(rat(46, 7), rat(46, 7) * rat(3, 4));
        let ct = canonicalize(&a, &b, &c).unwrap();
        assert_eq!(ct.m_c, Slope::Finite(rat(5, 2)));
        let sol = excircle_opposite_closed_form(&ct).unwrap();
        assert_eq!(sol.k, rat(920, 107));
        assert_eq!(sol.r, rat(253, 107));
        assert_eq!(sol.center, Point::new(rat(920, 107), rat(437, 107)));
        assert_eq!(sol.t1, Point::new(rat(667, 107), rat(437, 107)));
        t1_on_ab(&ct, &sol);
        // tangency predicates against the actual objects
        let circle = sol.circle();
        for obj in tangency_objects(&a, &b, &c, Side::C) {
            assert!(crate::geom::tangent(&circle, &obj), "not tangent to {obj:?}");
        }
    }

    #[test]
    fn closed_form_second_example() {
        // m_a=1/2, m_b=-1/2, m_c=2, A=(2,-1)
        let a = pt(2, -1);
        // B = t*(1,1/2) with slope(A,B)=2: (t/2 + 1)/(t - 2) = 2 -> t = 10/3
        let b = Point::new(rat(10, 3), rat(5, 3));
        let c = pt(0, 0);
        let ct = canonicalize(&a, &b, &c).unwrap();
        assert_eq!(ct.m_a, rat(1, 2));
        assert_eq!(ct.m_b, rat(-1, 2));
        assert_eq!(ct.m_c, Slope::Finite(rint(2)));
        let sol = excircle_opposite_closed_form(&ct).unwrap();
        assert_eq!(sol.k, rint(5));
        assert_eq!(sol.r, rat(5, 2));
        assert_eq!(sol.center, Point::new(rint(5), rint(0)));
        assert_eq!(sol.t1, Point::new(rat(5, 2), rint(0)));
        t1_on_ab(&ct, &sol);
    }

    #[test]
    fn closed_form_vertical_rejected() {
        let a = Point::new(rint(1), rat(-1, 2));
        let b = Point::new(rint(1), rat(1, 2));
        let c = pt(0, 0);
        let ct = canonicalize(&a, &b, &c).unwrap();
        assert_eq!(ct.m_c, Slope::Vertical);
        assert!(excircle_opposite_closed_form(&ct).is_err());
        // the constructive path still succeeds
        let exc = construct_excircle(&a, &b, &c, Side::C).unwrap();
        assert!(exc.is_some());
    }

    #[test]
    fn full_complement_rules() {
        let d = full_complement(&pt(0, 0), &pt(1, 2), &pt(1, -2)).unwrap();
        assert!(!d.all_exist);
        assert_eq!(d.rule, ComplementRule::NotInscribed);

        let d = full_complement(&pt(0, 0), &pt(5, 1), &pt(3, 4)).unwrap();
        assert!(d.all_exist);
        assert_eq!(d.rule, ComplementRule::Minimal);

        // diagonal side + two shallow sides (figure-6-left shape)
        let d = full_complement(&pt(0, 0), &pt(4, 4), &pt(7, 2)).unwrap();
        assert_eq!(d.rule, ComplementRule::TwoCompletely);
        assert!(!d.all_exist);

        // diagonal side + shallow + steep (figure-6-right shape)
        let d = full_complement(&pt(0, 0), &pt(4, 4), &pt(5, -1)).unwrap();
        assert_eq!(d.rule, ComplementRule::TwoCompletely);
        assert!(d.all_exist);

        // three completely inscribed
        let d = full_complement(&pt(0, 0), &pt(2, 2), &pt(4, 0)).unwrap();
        assert_eq!(d.rule, ComplementRule::ThreeCompletely);
        assert!(!d.all_exist);
    }

    #[test]
    fn construct_matches_rules() {
        // minimally inscribed: all three sides succeed
        let (a, b, c) = (pt(0, 0), pt(5, 1), pt(3, 4));
        for side in Side::ALL {
            let exc = construct_excircle(&a, &b, &c, side).unwrap();
            let exc = exc.unwrap_or_else(|| panic!("missing excircle for side {}", side.name()));
            assert!(is_excircle(&a, &b, &c, side, &exc.circle));
        }
        // side-c result equals the closed form mapped through canonicalize
        let ct = canonicalize(&a, &b, &c).unwrap();
        let sol = excircle_opposite_closed_form(&ct).unwrap();
        let back = ct.to_canonical.inverse();
        let mapped = back.apply_circle(&sol.circle());
        // side c of the canonical labels: the side opposite the original
        // completely inscribed vertex, which is input index labels[2]
        let orig_side = [Side::A, Side::B, Side::C][ct.labels[2]];
        let exc = construct_excircle(&a, &b, &c, orig_side).unwrap().unwrap();
        assert_eq!(exc.circle, mapped);
    }

    #[test]
    fn construct_empty_cases() {
        // figure-6-left: the side joining the two completely inscribed
        // angles (the endpoints of the diagonal side are those angles;
        // the failing side is one of the shallow ones)
        let (a, b, c) = (pt(0, 0), pt(4, 4), pt(7, 2));
        // completely inscribed angles at A and C; side b joins them
        assert!(construct_excircle(&a, &b, &c, Side::B).unwrap().is_none());
        assert!(construct_excircle(&a, &b, &c, Side::A).unwrap().is_some());
        assert!(construct_excircle(&a, &b, &c, Side::C).unwrap().is_some());

        // not-inscribed angle at (0,0): the opposite side (side A is
        // opposite vertex A=(0,0)) has no excircle
        let (a, b, c) = (pt(0, 0), pt(1, 2), pt(1, -2));
        assert!(construct_excircle(&a, &b, &c, Side::A).unwrap().is_none());
    }

    #[test]
    fn excircle_pinned_vertex() {
        // sides adjacent to the completely inscribed vertex pin a circle
        // vertex at that triangle vertex
        let (a, b, c) = (pt(5, 1), pt(4, 3), pt(0, 0));
        // completely inscribed angle is at C=(0,0); sides a (opposite A)
        // and b (opposite B) are adjacent to C
        for side in [Side::A, Side::B] {
            let exc = construct_excircle(&a, &b, &c, side).unwrap().unwrap();
            let pinned = exc
                .circle
                .vertices()
                .iter()
                .any(|v| *v == c);
            assert!(pinned, "side {} excircle not pinned at C: {:?}", side.name(), exc);
        }
    }

    #[test]
    fn excenter_cevians_runs() {
        let (a, b, c) = (pt(0, 0), pt(5, 1), pt(3, 4));
        let rep = excenter_cevians(&a, &b, &c).unwrap();
        // equivariance under a D4 isometry
        let iso = Isometry::new(D4::Rot90, (rint(3), rint(-2)));
        let rep2 = excenter_cevians(&iso.apply(&a), &iso.apply(&b), &iso.apply(&c)).unwrap();
        assert_eq!(rep.concurrent, rep2.concurrent);
        // precondition failure
        assert!(excenter_cevians(&pt(0, 0), &pt(1, 2), &pt(1, -2)).is_err());
    }
}
