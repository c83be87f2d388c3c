//! L1 metric primitives: points, slopes, linear objects, taxicab circles,
//! tangency and enclosure predicates, the Chebyshev transform, and the
//! D4 + translation isometry group. All arithmetic is exact.

use crate::error::{Result, TaxiError};
use crate::rat::{rint, Rat};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn of(x: i64, y: i64) -> Self {
        Point::new(rint(x), rint(y))
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            crate::rat::format_rat(&self.x),
            crate::rat::format_rat(&self.y)
        )
    }
}

/// Taxicab distance |dx| + |dy|.
pub fn d1(p: &Point, q: &Point) -> Rat {
    (&p.x - &q.x).abs() + (&p.y - &q.y).abs()
}

/// Chebyshev transform (x, y) -> (x+y, x-y). Maps d1 to the L-infinity
/// distance; inverted by `cheb_inv`.
pub fn cheb(p: &Point) -> Point {
    Point::new(&p.x + &p.y, &p.x - &p.y)
}

pub fn cheb_inv(p: &Point) -> Point {
    let half = crate::rat::rat(1, 2);
    Point::new((&p.x + &p.y) * &half, (&p.x - &p.y) * &half)
}

/// L-infinity distance, used on Chebyshev-transformed coordinates.
pub fn linf(p: &Point, q: &Point) -> Rat {
    let dx = (&p.x - &q.x).abs();
    let dy = (&p.y - &q.y).abs();
    if dx >= dy {
        dx
    } else {
        dy
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeClass {
    Shallow,
    Diagonal,
    Steep,
}

/// Line slope with vertical as a first-class variant; nothing in the
/// library ever divides by a zero run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    Vertical,
}

impl Slope {
    pub fn between(p: &Point, q: &Point) -> Result<Slope> {
        if p == q {
            return Err(TaxiError::InvalidTriangle(format!(
                "duplicate points {p} and {q}"
            )));
        }
        if p.x == q.x {
            Ok(Slope::Vertical)
        } else {
            Ok(Slope::Finite((&q.y - &p.y) / (&q.x - &p.x)))
        }
    }

    pub fn of_dir(dir: &(Rat, Rat)) -> Result<Slope> {
        if dir.0.is_zero() && dir.1.is_zero() {
            return Err(TaxiError::Precondition("zero direction".into()));
        }
        if dir.0.is_zero() {
            Ok(Slope::Vertical)
        } else {
            Ok(Slope::Finite(&dir.1 / &dir.0))
        }
    }

    pub fn class(&self) -> SlopeClass {
        match self {
            Slope::Vertical => SlopeClass::Steep,
            Slope::Finite(m) => {
                let a = m.abs();
                if a < Rat::one() {
                    SlopeClass::Shallow
                } else if a == Rat::one() {
                    SlopeClass::Diagonal
                } else {
                    SlopeClass::Steep
                }
            }
        }
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Slope::Finite(m) => Some(m),
            Slope::Vertical => None,
        }
    }
}

/// A line, ray, or segment; the substrate for every tangency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearObject {
    Line { anchor: Point, dir: (Rat, Rat) },
    Ray { origin: Point, dir: (Rat, Rat) },
    Segment { p: Point, q: Point },
}

impl LinearObject {
    pub fn line_through(p: &Point, q: &Point) -> LinearObject {
        LinearObject::Line {
            anchor: p.clone(),
            dir: (&q.x - &p.x, &q.y - &p.y),
        }
    }

    pub fn ray_through(origin: &Point, toward: &Point) -> LinearObject {
        LinearObject::Ray {
            origin: origin.clone(),
            dir: (&toward.x - &origin.x, &toward.y - &origin.y),
        }
    }

    pub fn segment(p: &Point, q: &Point) -> LinearObject {
        LinearObject::Segment {
            p: p.clone(),
            q: q.clone(),
        }
    }

    pub(crate) fn start_and_dir(&self) -> (Point, (Rat, Rat)) {
        match self {
            LinearObject::Line { anchor, dir } => (anchor.clone(), dir.clone()),
            LinearObject::Ray { origin, dir } => (origin.clone(), dir.clone()),
            LinearObject::Segment { p, q } => (p.clone(), (&q.x - &p.x, &q.y - &p.y)),
        }
    }

    pub fn point_at(&self, t: &Rat) -> Point {
        let (a, d) = self.start_and_dir();
        Point::new(&a.x + &d.0 * t, &a.y + &d.1 * t)
    }
}

/// Nearest point on `obj` to `p` under d1, with the distance.
///
/// The d1 distance along the object is a convex piecewise-linear function
/// of the parameter, so the minimum over a clamped range is attained at a
/// range endpoint or at one of the two breakpoints where a coordinate
/// difference changes sign.
pub fn nearest_on(p: &Point, obj: &LinearObject) -> (Rat, Point) {
    let (a, d) = obj.start_and_dir();
    // g(t) = |a.x + t d.x - p.x| + |a.y + t d.y - p.y|
    let ax = &a.x - &p.x;
    let ay = &a.y - &p.y;
    let (lo, hi): (Option<Rat>, Option<Rat>) = match obj {
        LinearObject::Line { .. } => (None, None),
        LinearObject::Ray { .. } => (Some(Rat::zero()), None),
        LinearObject::Segment { .. } => (Some(Rat::zero()), Some(Rat::one())),
    };
    // g(t) is convex piecewise linear with kinks where each coordinate
    // term vanishes; between the kinks the dominant coordinate's slope
    // wins, so the unconstrained minimum sits at the dominant kink.
    let t = if d.0.abs() >= d.1.abs() && !d.0.is_zero() {
        -&ax / &d.0
    } else {
        -&ay / &d.1
    };
    let t = match &lo {
        Some(l) if t < *l => l.clone(),
        _ => t,
    };
    let t = match &hi {
        Some(h) if t > *h => h.clone(),
        _ => t,
    };
    let dist = (&ax + &d.0 * &t).abs() + (&ay + &d.1 * &t).abs();
    (dist, obj.point_at(&t))
}

/// Minimum d1 distance from `p` to a linear object.
pub fn dist_to(p: &Point, obj: &LinearObject) -> Rat {
    nearest_on(p, obj).0
}

/// A taxicab circle: the d1 sphere of radius `radius` about `center`,
/// a diamond with axis-aligned vertices and slope +/-1 sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TaxiCircle {
    pub center: Point,
    pub radius: Rat,
}

impl TaxiCircle {
    pub fn new(center: Point, radius: Rat) -> Self {
        TaxiCircle { center, radius }
    }

    /// East, north, west, south vertices.
    pub fn vertices(&self) -> [Point; 4] {
        let c = &self.center;
        let r = &self.radius;
        [
            Point::new(&c.x + r, c.y.clone()),
            Point::new(c.x.clone(), &c.y + r),
            Point::new(&c.x - r, c.y.clone()),
            Point::new(c.x.clone(), &c.y - r),
        ]
    }
}

/// True iff the circle touches the object without crossing it:
/// the minimum distance from the center equals the radius. Overlap of a
/// slope +/-1 side with the object counts as tangency.
pub fn tangent(c: &TaxiCircle, obj: &LinearObject) -> bool {
    dist_to(&c.center, obj) == c.radius
}

/// Farthest d1 distance from `outer_center` to a point of `inner`:
/// d1(outer_center, inner.center) + inner.radius. An outer circle of
/// radius R encloses `inner` iff this is <= R, internally tangent iff = R.
pub fn enclose_dist(outer_center: &Point, inner: &TaxiCircle) -> Rat {
    d1(outer_center, &inner.center) + &inner.radius
}

/// The eight elements of the dihedral group of the square, acting on
/// the plane about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4 {
    Identity,
    /// Reflection about the line x = 0.
    ReflectX0,
    /// Reflection about the line y = 0.
    ReflectY0,
    /// Reflection about y = x.
    ReflectDiag,
    /// Reflection about y = -x.
    ReflectAnti,
    Rot90,
    Rot180,
    Rot270,
}

/// Fixed enumeration order; canonicalization picks the first element that
/// fits, so this order is part of the library's deterministic behavior.
pub const D4_ALL: [D4; 8] = [
    D4::Identity,
    D4::ReflectX0,
    D4::ReflectY0,
    D4::ReflectDiag,
    D4::ReflectAnti,
    D4::Rot90,
    D4::Rot180,
    D4::Rot270,
];

impl D4 {
    pub fn apply(&self, p: &Point) -> Point {
        let (x, y) = (&p.x, &p.y);
        match self {
            D4::Identity => Point::new(x.clone(), y.clone()),
            D4::ReflectX0 => Point::new(-x, y.clone()),
            D4::ReflectY0 => Point::new(x.clone(), -y),
            D4::ReflectDiag => Point::new(y.clone(), x.clone()),
            D4::ReflectAnti => Point::new(-y, -x),
            D4::Rot90 => Point::new(-y, x.clone()),
            D4::Rot180 => Point::new(-x, -y),
            D4::Rot270 => Point::new(y.clone(), -x),
        }
    }

    /// True when the element exchanges the two diagonal directions
    /// (slope +1 <-> slope -1); these swap the strictly-positive and
    /// strictly-negative inscription classes.
    pub fn swaps_diagonals(&self) -> bool {
        matches!(self, D4::ReflectX0 | D4::ReflectY0 | D4::Rot90 | D4::Rot270)
    }

    pub fn inverse(&self) -> D4 {
        match self {
            D4::Rot90 => D4::Rot270,
            D4::Rot270 => D4::Rot90,
            other => *other,
        }
    }

    /// Composition: apply `first`, then `self`.
    pub fn after(&self, first: &D4) -> D4 {
        let e1 = Point::of(1, 0);
        let e2 = Point::of(0, 1);
        let i1 = self.apply(&first.apply(&e1));
        let i2 = self.apply(&first.apply(&e2));
        for g in D4_ALL {
            if g.apply(&e1) == i1 && g.apply(&e2) == i2 {
                return g;
            }
        }
        unreachable!("D4 is closed under composition")
    }
}

/// A d1 isometry: a D4 element applied first, then a translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    pub d4: D4,
    pub translation: (Rat, Rat),
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            d4: D4::Identity,
            translation: (Rat::zero(), Rat::zero()),
        }
    }

    pub fn new(d4: D4, translation: (Rat, Rat)) -> Self {
        Isometry { d4, translation }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let q = self.d4.apply(p);
        Point::new(&q.x + &self.translation.0, &q.y + &self.translation.1)
    }

    pub fn apply_dir(&self, dir: &(Rat, Rat)) -> (Rat, Rat) {
        let q = self.d4.apply(&Point::new(dir.0.clone(), dir.1.clone()));
        (q.x, q.y)
    }

    pub fn apply_circle(&self, c: &TaxiCircle) -> TaxiCircle {
        TaxiCircle::new(self.apply(&c.center), c.radius.clone())
    }

    pub fn apply_obj(&self, obj: &LinearObject) -> LinearObject {
        match obj {
            LinearObject::Line { anchor, dir } => LinearObject::Line {
                anchor: self.apply(anchor),
                dir: self.apply_dir(dir),
            },
            LinearObject::Ray { origin, dir } => LinearObject::Ray {
                origin: self.apply(origin),
                dir: self.apply_dir(dir),
            },
            LinearObject::Segment { p, q } => LinearObject::Segment {
                p: self.apply(p),
                q: self.apply(q),
            },
        }
    }

    pub fn inverse(&self) -> Isometry {
        let g = self.d4.inverse();
        let t = g.apply(&Point::new(
            self.translation.0.clone(),
            self.translation.1.clone(),
        ));
        Isometry {
            d4: g,
            translation: (-t.x, -t.y),
        }
    }

    /// `self` after `first`: p -> self(first(p)).
    pub fn compose(&self, first: &Isometry) -> Isometry {
        // self(first(p)) = self.d4(first.d4(p)) + self.d4(first.t) + self.t
        let d4 = self.d4.after(&first.d4);
        let base = self.d4.apply(&Point::new(
            first.translation.0.clone(),
            first.translation.1.clone(),
        ));
        Isometry {
            d4,
            translation: (
                base.x + &self.translation.0,
                base.y + &self.translation.1,
            ),
        }
    }
}

/// Exact cross product of two direction vectors.
pub fn cross(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Orientation of the triple (a, b, c): sign of the signed area.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let v = cross(&(&b.x - &a.x, &b.y - &a.y), &(&c.x - &a.x, &c.y - &a.y));
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// Exact point-in-triangle test.
pub fn point_in_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> Containment {
    let s1 = orient(a, b, p);
    let s2 = orient(b, c, p);
    let s3 = orient(c, a, p);
    if (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0) {
        Containment::Inside
    } else if (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0) {
        Containment::Boundary
    } else {
        Containment::Outside
    }
}

/// Intersection of two lines given as (anchor, dir); None when parallel.
pub fn line_intersection(
    a1: &Point,
    d1v: &(Rat, Rat),
    a2: &Point,
    d2v: &(Rat, Rat),
) -> Option<Point> {
    let den = cross(d1v, d2v);
    if den.is_zero() {
        return None;
    }
    let rhs = (&a2.x - &a1.x, &a2.y - &a1.y);
    let t = cross(&rhs, d2v) / den;
    Some(Point::new(&a1.x + &d1v.0 * &t, &a1.y + &d1v.1 * &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn pt(x: i64, y: i64) -> Point {
        Point::of(x, y)
    }

    #[test]
    fn d1_examples() {
        assert_eq!(d1(&pt(0, 0), &pt(0, 0)), rint(0));
        assert_eq!(d1(&pt(0, 0), &pt(3, 4)), rint(7));
        // (5,1) to (46/7, 69/14): 11/7 + 55/14 = 77/14
        let p = Point::new(rint(5), rint(1));
        let q = Point::new(rat(46, 7), rat(69, 14));
        assert_eq!(d1(&p, &q), rat(77, 14));
        // independent recomputation by coordinates
        assert_eq!(rat(46, 7) - rint(5), rat(11, 7));
        assert_eq!(rat(69, 14) - rint(1), rat(55, 14));
        assert_eq!(rat(11, 7) + rat(55, 14), rat(77, 14));
    }

    /// Sampling lower/upper bound for the distance from p to obj over the
    /// parameter window [t0, t1]: d1 along the object is Lipschitz in t
    /// with constant |dx|+|dy|, so a sample pitch of h certifies the true
    /// minimum to within h*(|dx|+|dy|)/2.
    fn sampling_bounds(p: &Point, obj: &LinearObject, t0: i64, t1: i64, steps: i64) -> (Rat, Rat) {
        let (a, d) = match obj {
            LinearObject::Line { anchor, dir } => (anchor.clone(), dir.clone()),
            LinearObject::Ray { origin, dir } => (origin.clone(), dir.clone()),
            LinearObject::Segment { p, q } => (p.clone(), (&q.x - &p.x, &q.y - &p.y)),
        };
        let lip = d.0.abs() + d.1.abs();
        let mut best: Option<Rat> = None;
        for i in 0..=steps {
            let t = rat(t0 * steps + (t1 - t0) * i, steps);
            let q = Point::new(&a.x + &d.0 * &t, &a.y + &d.1 * &t);
            let v = d1(p, &q);
            if best.as_ref().map_or(true, |b| v < *b) {
                best = Some(v);
            }
        }
        let upper = best.unwrap();
        let h = rat(t1 - t0, steps);
        let lower = &upper - h * lip / rint(2);
        (lower, upper)
    }

    #[test]
    fn dist_to_line_examples() {
        // line y = x/2 + 1
        let line = LinearObject::Line {
            anchor: Point::new(rint(0), rint(1)),
            dir: (rint(2), rint(1)),
        };
        let p = pt(0, 0);
        assert_eq!(dist_to(&p, &line), rint(1));
        let (lo, hi) = sampling_bounds(&p, &line, -4, 4, 2048);
        assert!(dist_to(&p, &line) >= lo && dist_to(&p, &line) <= hi);

        // vertical line x = 2
        let v = LinearObject::Line {
            anchor: pt(2, 0),
            dir: (rint(0), rint(1)),
        };
        assert_eq!(dist_to(&p, &v), rint(2));
    }

    #[test]
    fn dist_to_segment_endpoint_case() {
        let seg = LinearObject::segment(&pt(1, 1), &pt(2, 2));
        let p = pt(0, 0);
        assert_eq!(dist_to(&p, &seg), rint(2));
        let (lo, hi) = sampling_bounds(&p, &seg, 0, 1, 2048);
        assert!(dist_to(&p, &seg) >= lo && dist_to(&p, &seg) <= hi);
        let (_, q) = nearest_on(&p, &seg);
        assert_eq!(q, pt(1, 1));
    }

    #[test]
    fn tangency_examples() {
        let c = TaxiCircle::new(pt(0, 0), rint(2));
        let x2 = LinearObject::Line {
            anchor: pt(2, 0),
            dir: (rint(0), rint(1)),
        };
        assert!(tangent(&c, &x2));
        // y = x + 2 overlaps a full side of the circle
        let diag = LinearObject::Line {
            anchor: pt(0, 2),
            dir: (rint(1), rint(1)),
        };
        assert_eq!(dist_to(&c.center, &diag), rint(2));
        assert!(tangent(&c, &diag));
        let x1 = LinearObject::Line {
            anchor: pt(1, 0),
            dir: (rint(0), rint(1)),
        };
        assert!(!tangent(&c, &x1));
    }

    #[test]
    fn enclose_dist_examples() {
        assert_eq!(
            enclose_dist(&pt(0, 0), &TaxiCircle::new(pt(0, 0), rint(3))),
            rint(3)
        );
        assert_eq!(
            enclose_dist(&pt(0, 0), &TaxiCircle::new(pt(4, 0), rint(1))),
            rint(5)
        );
        let inner = TaxiCircle::new(pt(-2, 3), rat(1, 2));
        assert_eq!(enclose_dist(&pt(1, 1), &inner), rat(11, 2));
        // max over the inner diamond's vertices
        let m = inner
            .vertices()
            .iter()
            .map(|v| d1(&pt(1, 1), v))
            .max()
            .unwrap();
        assert_eq!(m, rat(11, 2));
    }

    #[test]
    fn cheb_examples() {
        assert_eq!(cheb(&pt(0, 0)), pt(0, 0));
        let img = cheb(&pt(3, 4));
        assert_eq!(img, pt(7, -1));
        assert_eq!(linf(&pt(0, 0), &img), rint(7));
        let p = Point::new(rat(5, 3), rat(-7, 2));
        assert_eq!(cheb_inv(&cheb(&p)), p);
    }

    #[test]
    fn isometry_examples() {
        assert_eq!(Isometry::identity().apply(&pt(2, 3)), pt(2, 3));
        let refl = Isometry::new(D4::ReflectDiag, (rint(0), rint(0)));
        assert_eq!(refl.apply(&pt(2, 3)), pt(3, 2));
        let combo = Isometry::new(D4::ReflectX0, (rint(1), rint(0)));
        assert_eq!(combo.apply(&pt(2, 3)), pt(-1, 3));
    }

    #[test]
    fn isometry_round_trip_and_composition() {
        let g = Isometry::new(D4::Rot90, (rat(3, 7), rint(-2)));
        let h = Isometry::new(D4::ReflectAnti, (rint(1), rat(5, 3)));
        let p = Point::new(rat(2, 5), rat(-9, 4));
        assert_eq!(g.inverse().apply(&g.apply(&p)), p);
        assert_eq!(h.compose(&g).apply(&p), h.apply(&g.apply(&p)));
    }
}
