//! Independent brute-force validators. Each oracle minimizes an exact
//! piecewise-linear violation function over a rational search box with
//! branch-and-bound: a cell whose center value exceeds the Lipschitz
//! bound for its radius provably contains no zero and is pruned. Cells
//! that survive to the resolution floor leave an honest Unknown verdict.
//!
//! The oracles deliberately share no solving logic with the exact
//! modules: candidate witnesses come from local finite-difference affine
//! models, and only the exact-core distance primitives are reused for
//! final validation.

use crate::geom::{cheb, cheb_inv, d1, dist_to, linf, orient, point_in_triangle, Containment,
    LinearObject, Point, TaxiCircle};
use crate::rat::{rat, rint, Rat};
use num_traits::{Signed, Zero};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// The rectangle that was searched, with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRegion {
    pub x_min: Rat,
    pub x_max: Rat,
    pub y_min: Rat,
    pub y_max: Rat,
    pub inflate: Rat,
    pub pitch: Rat,
}

impl SearchRegion {
    pub fn contains(&self, p: &Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// An exact rational witness that passes the exact predicates.
    ExistsWitness { circle: TaxiCircle },
    /// The Lipschitz certificate excludes every point of the region.
    CertifiedNone { region: SearchRegion },
    /// Neither a witness nor a certificate within budget.
    Unknown { best_residual: Rat, region: SearchRegion },
}

impl OracleVerdict {
    pub fn exists(&self) -> Option<bool> {
        match self {
            OracleVerdict::ExistsWitness { .. } => Some(true),
            OracleVerdict::CertifiedNone { .. } => Some(false),
            OracleVerdict::Unknown { .. } => None,
        }
    }
}

/// Default inflation factor for search boxes.
pub fn default_inflate() -> Rat {
    rint(8)
}

/// Default grid pitch: 1/256 of the configuration diameter.
pub fn default_pitch(diameter: &Rat) -> Rat {
    diameter * rat(1, 256)
}

/// Inflate the bounding box of `pts` by `inflate` about its center.
fn inflated_region(pts: &[&Point], inflate: &Rat, pitch: &Rat) -> SearchRegion {
    let mut x_min = pts[0].x.clone();
    let mut x_max = pts[0].x.clone();
    let mut y_min = pts[0].y.clone();
    let mut y_max = pts[0].y.clone();
    for p in pts.iter().skip(1) {
        if p.x < x_min {
            x_min = p.x.clone();
        }
        if p.x > x_max {
            x_max = p.x.clone();
        }
        if p.y < y_min {
            y_min = p.y.clone();
        }
        if p.y > y_max {
            y_max = p.y.clone();
        }
    }
    let half = rat(1, 2);
    let cx = (&x_min + &x_max) * &half;
    let cy = (&y_min + &y_max) * &half;
    // never let a degenerate axis collapse the box
    let mut hx = (&x_max - &x_min) * &half;
    let mut hy = (&y_max - &y_min) * &half;
    let floor = if &hx + &hy > Rat::zero() { (&hx + &hy) * rat(1, 4) } else { rint(1) };
    if hx < floor {
        hx = floor.clone();
    }
    if hy < floor {
        hy = floor;
    }
    SearchRegion {
        x_min: &cx - &hx * inflate,
        x_max: &cx + &hx * inflate,
        y_min: &cy - &hy * inflate,
        y_max: &cy + &hy * inflate,
        inflate: inflate.clone(),
        pitch: pitch.clone(),
    }
}

/// Exact Cramer solve of a 3x3 system (local to the oracle on purpose).
fn cramer3(rows: &[[Rat; 4]; 3]) -> Option<[Rat; 3]> {
    let det = |a: &[[&Rat; 3]; 3]| -> Rat {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let base = [
        [&rows[0][0], &rows[0][1], &rows[0][2]],
        [&rows[1][0], &rows[1][1], &rows[1][2]],
        [&rows[2][0], &rows[2][1], &rows[2][2]],
    ];
    let d = det(&base);
    if d.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(3);
    for col in 0..3 {
        let mut m = base;
        for (ri, row) in rows.iter().enumerate() {
            m[ri][col] = &row[3];
        }
        out.push(det(&m) / &d);
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

struct Problem<'a> {
    /// The three exact distance-like functions to equalize.
    dists: [&'a dyn Fn(&Point) -> Rat; 3],
    /// Extra violation terms (e.g. wrong-side penalties), each 1-Lipschitz.
    penalty: &'a dyn Fn(&Point) -> Rat,
    /// d1 Lipschitz constant of the violation function.
    lipschitz: Rat,
    /// Exact acceptance of a candidate (center, radius).
    accept: &'a dyn Fn(&Point, &Rat) -> bool,
    /// Optional cell discard test for a box (center, hx, hy): returns true
    /// when exact per-distance range analysis proves the spread stays
    /// positive over the whole cell, which prunes far tighter than the
    /// generic Lipschitz bound on cone-shaped distances.
    site_prune: Option<&'a dyn Fn(&Point, &Rat, &Rat) -> bool>,
}

impl Problem<'_> {
    /// Violation: half the spread of the three distances, or the penalty.
    fn violation(&self, p: &Point) -> Rat {
        let d0 = (self.dists[0])(p);
        let d1v = (self.dists[1])(p);
        let d2v = (self.dists[2])(p);
        let mut lo = d0.clone();
        let mut hi = d0;
        for v in [d1v, d2v] {
            if v < lo {
                lo = v.clone();
            }
            if v > hi {
                hi = v;
            }
        }
        let spread = (&hi - &lo) * rat(1, 2);
        let pen = (self.penalty)(p);
        if pen > spread {
            pen
        } else {
            spread
        }
    }

    /// One step of a local affine model of each distance around `seed`
    /// with step signs (sx, sy), solved for an exact equalizing point.
    fn refine_step(&self, seed: &Point, h: &Rat, sx: i8, sy: i8) -> Option<(Point, Rat)> {
        let hx = rint(sx as i64) * h;
        let hy = rint(sy as i64) * h;
        let px = Point::new(&seed.x + &hx, seed.y.clone());
        let py = Point::new(seed.x.clone(), &seed.y + &hy);
        let mut rows: Vec<[Rat; 4]> = Vec::with_capacity(3);
        for f in &self.dists {
            let base = f(seed);
            let gx = (f(&px) - &base) / &hx;
            let gy = (f(&py) - &base) / &hy;
            // base + gx*dx + gy*dy = r
            rows.push([gx, gy, rint(-1), -base]);
        }
        let rows: [[Rat; 4]; 3] = [rows[0].clone(), rows[1].clone(), rows[2].clone()];
        let [dx, dy, r] = cramer3(&rows)?;
        Some((Point::new(&seed.x + dx, &seed.y + dy), r))
    }

    /// Newton-like iteration on the piecewise-linear model: each affine
    /// solve is re-seeded at its own prediction, which hops between linear
    /// pieces and converges in a few steps once a true solution's basin is
    /// reached. Intermediate iterates are snapped to a dyadic grid so that
    /// chained exact solves cannot compound into enormous denominators;
    /// the final solve from a snapped seed still lands exactly on the
    /// solution whenever the seed shares its linear piece. The model is
    /// only a guess; `accept` does exact validation.
    fn refine(&self, seed: &Point, h: &Rat, sx: i8, sy: i8, grid: &Rat) -> Option<(Point, Rat)> {
        let snap = |v: &Rat| -> Rat { (v / grid).round() * grid };
        let mut cur = seed.clone();
        for _ in 0..8 {
            let (w, r) = self.refine_step(&cur, h, sx, sy)?;
            if r.is_positive() && (self.accept)(&w, &r) {
                return Some((w, r));
            }
            let w = Point::new(snap(&w.x), snap(&w.y));
            if w == cur {
                return None; // fixed point that fails exact validation
            }
            cur = w;
        }
        None
    }
}

/// Best-first branch-and-bound over the region. Returns the verdict.
fn search(problem: &Problem<'_>, region: SearchRegion) -> OracleVerdict {
    let half = rat(1, 2);
    let cx = (&region.x_min + &region.x_max) * &half;
    let cy = (&region.y_min + &region.y_max) * &half;
    let hx = (&region.x_max - &region.x_min) * &half;
    let hy = (&region.y_max - &region.y_min) * &half;
    // The pitch sets the nominal grid; cells deepen adaptively well below
    // it so that narrow near-misses (violations far smaller than the
    // pitch) can still be certified. The hard floor only bounds work.
    let floor = &region.pitch * rat(1, 1024);
    // Newton iterates snap to this grid; far below the floor so snapping
    // never blocks convergence between distinct linear pieces.
    let grid = &floor * rat(1, 1024);
    let max_evals = 40_000usize;
    // local affine refinement is cheap insurance near a true solution but
    // pure waste along a near-miss valley; cap how often it is tried
    let mut refine_left = 512usize;

    let mut heap: BinaryHeap<Reverse<(Rat, Rat, Rat, Rat, Rat)>> = BinaryHeap::new();
    let center0 = Point::new(cx.clone(), cy.clone());
    let f0 = problem.violation(&center0);
    heap.push(Reverse((f0, cx, cy, hx, hy)));
    let mut evals = 1usize;
    let mut best_residual: Option<Rat> = None;
    let mut exhausted = true;

    while let Some(Reverse((f, cx, cy, hx, hy))) = heap.pop() {
        let radius = &hx + &hy;
        if f > &problem.lipschitz * &radius {
            continue; // no zero in this cell
        }
        // tighter prune: if even the most optimistic pairing of exact
        // per-distance ranges over the cell keeps a positive spread, the
        // cell contains no equalizing point
        let seed = Point::new(cx.clone(), cy.clone());
        if let Some(sp) = problem.site_prune {
            evals += 1;
            if sp(&seed, &hx, &hy) {
                continue;
            }
        }
        // candidate refinement seeded at the cell center: always worth
        // trying on a cell that improves the best residual (those are the
        // cells closing in on a true solution), capped otherwise. Gradients
        // are sampled at pitch scale so coarse cells still get locally
        // faithful affine models.
        let improving = best_residual.as_ref().map_or(true, |b| f < *b);
        let halving = best_residual.as_ref().map_or(true, |b| &f + &f < *b);
        let deep = radius <= region.pitch;
        let h = (&radius).min(&region.pitch) * rat(1, 4);
        if !h.is_zero() && (halving || (deep && refine_left > 0)) {
            if !halving {
                refine_left -= 1;
            }
            for (sx, sy) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                if let Some((w, r)) = problem.refine(&seed, &h, sx, sy, &grid) {
                    return OracleVerdict::ExistsWitness {
                        circle: TaxiCircle::new(w, r),
                    };
                }
                evals += 3;
            }
        }
        if improving {
            best_residual = Some(f.clone());
        }
        if radius <= floor {
            // unresolved at the resolution floor
            exhausted = false;
            continue;
        }
        if evals >= max_evals {
            exhausted = false;
            break;
        }
        let qx = &hx * &half;
        let qy = &hy * &half;
        for sx in [-1i64, 1] {
            for sy in [-1i64, 1] {
                let nx = &cx + rint(sx) * &qx;
                let ny = &cy + rint(sy) * &qy;
                let fc = problem.violation(&Point::new(nx.clone(), ny.clone()));
                evals += 1;
                heap.push(Reverse((fc, nx, ny, qx.clone(), qy.clone())));
            }
        }
    }
    if exhausted {
        OracleVerdict::CertifiedNone { region }
    } else {
        OracleVerdict::Unknown {
            best_residual: best_residual.unwrap_or_else(Rat::zero),
            region,
        }
    }
}

/// Does a taxicab circle pass through all three points? Searches for an
/// equidistant center.
pub fn oracle_circumcircle(
    p1: &Point,
    p2: &Point,
    p3: &Point,
    inflate: &Rat,
    pitch: &Rat,
) -> OracleVerdict {
    let region = inflated_region(&[p1, p2, p3], inflate, pitch);
    let f1 = |c: &Point| d1(c, p1);
    let f2 = |c: &Point| d1(c, p2);
    let f3 = |c: &Point| d1(c, p3);
    let none = |_: &Point| Rat::zero();
    let accept = |w: &Point, r: &Rat| {
        r.is_positive() && d1(w, p1) == *r && d1(w, p2) == *r && d1(w, p3) == *r
    };
    // exact range of d1 from an axis-aligned box to a fixed point; prune
    // when some site's minimum exceeds another's maximum over the cell
    let prune = |c: &Point, hx: &Rat, hy: &Rat| -> bool {
        let one = |p: &Point| {
            let ax = (&c.x - &p.x).abs();
            let ay = (&c.y - &p.y).abs();
            let lo_x = if &ax > hx { &ax - hx } else { Rat::zero() };
            let lo_y = if &ay > hy { &ay - hy } else { Rat::zero() };
            (lo_x + lo_y, ax + hx + ay + hy)
        };
        let b = [one(p1), one(p2), one(p3)];
        (0..3).any(|i| (0..3).any(|j| i != j && b[i].0 > b[j].1))
    };
    let problem = Problem {
        dists: [&f1, &f2, &f3],
        penalty: &none,
        lipschitz: rint(1),
        accept: &accept,
        site_prune: Some(&prune),
    };
    if let Some(ir) = try_int_region(&region, &[p1, p2, p3]) {
        let pts = [p1, p2, p3].map(|p| {
            Some((scaled_i128(&p.x, &ir.scale)?, scaled_i128(&p.y, &ir.scale)?))
        });
        if let [Some(a), Some(b), Some(c)] = pts {
            if int_guard(ir.cmax, 1) {
                return search_int(&ICircum { pts: [a, b, c] }, &problem, &ir, region, 2);
            }
        }
    }
    search(&problem, region)
}

/// Does an excircle exist for `side`? Searches for a center equidistant
/// from the side segment and the two opposite-angle rays, strictly beyond
/// the side and outside the triangle.
pub fn oracle_excircle(
    a: &Point,
    b: &Point,
    c: &Point,
    side: crate::excircles::Side,
    inflate: &Rat,
    pitch: &Rat,
) -> OracleVerdict {
    use crate::excircles::Side;
    let (apex, e1, e2) = match side {
        Side::A => (a, b, c),
        Side::B => (b, a, c),
        Side::C => (c, a, b),
    };
    let seg = LinearObject::segment(e1, e2);
    let ray1 = LinearObject::ray_through(apex, e1);
    let ray2 = LinearObject::ray_through(apex, e2);
    let side_line = LinearObject::line_through(e1, e2);
    let s_apex = orient(e1, e2, apex);

    let region = inflated_region(&[a, b, c], inflate, pitch);
    let f1 = |p: &Point| dist_to(p, &seg);
    let f2 = |p: &Point| dist_to(p, &ray1);
    let f3 = |p: &Point| dist_to(p, &ray2);
    // wrong-side penalty: distance to the side line when the center is on
    // the apex side of it (1-Lipschitz, zero exactly on the good side)
    let penalty = |p: &Point| {
        if orient(e1, e2, p) == s_apex {
            dist_to(p, &side_line)
        } else {
            Rat::zero()
        }
    };
    let accept = |w: &Point, r: &Rat| {
        r.is_positive()
            && dist_to(w, &seg) == *r
            && dist_to(w, &ray1) == *r
            && dist_to(w, &ray2) == *r
            && point_in_triangle(w, a, b, c) == Containment::Outside
            && orient(e1, e2, w) * s_apex == -1
    };
    // range of the d1 distance from a box to a convex object: the max is
    // attained at a corner (the distance is convex), and the min is
    // bounded below via the Lipschitz property at the center. Corner maxima
    // are computed lazily: only sites whose lower bound sits below the
    // largest lower bound can possibly witness a positive spread.
    let objs = [&seg, &ray1, &ray2];
    let prune = |c: &Point, hx: &Rat, hy: &Rat| -> bool {
        let rad = hx + hy;
        let lows: Vec<Rat> = objs
            .iter()
            .map(|o| {
                let dc = dist_to(c, o);
                if dc > rad {
                    &dc - &rad
                } else {
                    Rat::zero()
                }
            })
            .collect();
        let biggest_low = lows.iter().max().unwrap().clone();
        if biggest_low.is_zero() {
            return false;
        }
        let corners = [
            Point::new(&c.x - hx, &c.y - hy),
            Point::new(&c.x + hx, &c.y - hy),
            Point::new(&c.x - hx, &c.y + hy),
            Point::new(&c.x + hx, &c.y + hy),
        ];
        objs.iter().zip(&lows).any(|(o, lo)| {
            *lo < biggest_low
                && corners.iter().map(|p| dist_to(p, o)).max().unwrap() < biggest_low
        })
    };
    let problem = Problem {
        dists: [&f1, &f2, &f3],
        penalty: &penalty,
        lipschitz: rint(1),
        accept: &accept,
        site_prune: Some(&prune),
    };
    if let Some(ir) = try_int_region(&region, &[a, b, c]) {
        let iobjs = [
            IObj::build(&seg, &ir.scale),
            IObj::build(&ray1, &ir.scale),
            IObj::build(&ray2, &ir.scale),
        ];
        if let [Some(o1), Some(o2), Some(o3)] = iobjs {
            let l = o1.dden.lcm(&o2.dden).lcm(&o3.dden);
            if int_guard(ir.cmax, l) {
                let ev = IExcircle {
                    objs: [o1, o2, o3],
                    l,
                    s_apex: s_apex as i128,
                };
                return search_int(&ev, &problem, &ir, region, 2 * l);
            }
        }
    }
    search(&problem, region)
}

/// Does a circle tangentially encompassing all three excircles exist?
/// Searches Chebyshev coordinates, where enclosure distance to excircle i
/// is L∞ distance to its transformed center plus its radius.
pub fn oracle_apollonius(
    e1: &crate::excircles::Excircle,
    e2: &crate::excircles::Excircle,
    e3: &crate::excircles::Excircle,
    inflate: &Rat,
    pitch: &Rat,
) -> OracleVerdict {
    let q1 = cheb(&e1.circle.center);
    let q2 = cheb(&e2.circle.center);
    let q3 = cheb(&e3.circle.center);
    let (r1, r2, r3) = (&e1.circle.radius, &e2.circle.radius, &e3.circle.radius);
    let region = inflated_region(&[&q1, &q2, &q3], inflate, pitch);
    let f1 = |p: &Point| linf(p, &q1) + r1;
    let f2 = |p: &Point| linf(p, &q2) + r2;
    let f3 = |p: &Point| linf(p, &q3) + r3;
    let none = |_: &Point| Rat::zero();
    let accept = |w: &Point, r: &Rat| {
        [(&q1, r1), (&q2, r2), (&q3, r3)]
            .iter()
            .all(|(q, ri)| &(linf(w, q) + *ri) == r && r > ri)
    };
    // exact range of L∞ distance from an axis-aligned box to a point
    let sites = [(&q1, r1), (&q2, r2), (&q3, r3)];
    let prune = |c: &Point, hx: &Rat, hy: &Rat| -> bool {
        let one = |(q, ri): &(&Point, &Rat)| {
            let ax = (&c.x - &q.x).abs();
            let ay = (&c.y - &q.y).abs();
            let lo_x = if &ax > hx { &ax - hx } else { Rat::zero() };
            let lo_y = if &ay > hy { &ay - hy } else { Rat::zero() };
            let lo = lo_x.max(lo_y);
            let hi = (ax + hx).max(ay + hy);
            (lo + *ri, hi + *ri)
        };
        let b = [one(&sites[0]), one(&sites[1]), one(&sites[2])];
        (0..3).any(|i| (0..3).any(|j| i != j && b[i].0 > b[j].1))
    };
    let verdict = search(
        &Problem {
            dists: [&f1, &f2, &f3],
            penalty: &none,
            lipschitz: rint(1),
            accept: &accept,
            site_prune: Some(&prune),
        },
        region,
    );
    // report the witness in original coordinates
    match verdict {
        OracleVerdict::ExistsWitness { circle } => OracleVerdict::ExistsWitness {
            circle: TaxiCircle::new(cheb_inv(&circle.center), circle.radius),
        },
        other => other,
    }
}

// ----- integer fast path -----
//
// The branch-and-bound above is exact but spends most of its time
// normalizing rationals. When the inputs share a modest common
// denominator, the identical search runs in scaled i128 integers: spatial
// coordinates become integers at a power-of-two multiple of that
// denominator, and each distance is a fraction over the small fixed
// denominator of its object's primitive direction, so values at a common
// scale compare without any division. A magnitude guard proves that no
// intermediate product can overflow; inputs failing the guard take the
// rational path. The larger evaluation budget the cheap arithmetic
// affords also shrinks the Unknown rate.

use num_bigint::BigInt;
use num_integer::Integer;

/// Power-of-two headroom multiplied into the spatial scale so halvings
/// down to the resolution floor stay integral.
const SPATIAL_SHIFT: usize = 26;
const INT_MAX_EVALS: usize = 400_000;

/// `r * scale` when that product is an integer.
fn scaled_int(r: &Rat, scale: &BigInt) -> Option<BigInt> {
    let (q, rem) = (r.numer() * scale).div_rem(r.denom());
    if rem.is_zero() {
        Some(q)
    } else {
        None
    }
}

fn scaled_i128(r: &Rat, scale: &BigInt) -> Option<i128> {
    i128::try_from(&scaled_int(r, scale)?).ok()
}

/// The search region in scaled integer coordinates.
struct IntRegion {
    scale: BigInt,
    cx: i128,
    cy: i128,
    hx: i128,
    hy: i128,
    floor: i128,
    pitch: i128,
    /// Largest absolute scaled coordinate any queried point can have.
    cmax: i128,
}

fn try_int_region(region: &SearchRegion, inputs: &[&Point]) -> Option<IntRegion> {
    let mut den = region.x_min.denom().clone();
    for r in [
        &region.x_max,
        &region.y_min,
        &region.y_max,
        &region.pitch,
    ] {
        den = den.lcm(r.denom());
    }
    for p in inputs {
        den = den.lcm(p.x.denom()).lcm(p.y.denom());
    }
    let scale: BigInt = den << SPATIAL_SHIFT;
    let x_min = scaled_i128(&region.x_min, &scale)?;
    let x_max = scaled_i128(&region.x_max, &scale)?;
    let y_min = scaled_i128(&region.y_min, &scale)?;
    let y_max = scaled_i128(&region.y_max, &scale)?;
    let pitch = scaled_i128(&region.pitch, &scale)?;
    if pitch <= 0 || (x_max - x_min) % 2 != 0 || (y_max - y_min) % 2 != 0 || pitch % 1024 != 0 {
        return None;
    }
    Some(IntRegion {
        scale,
        cx: (x_min + x_max) / 2,
        cy: (y_min + y_max) / 2,
        hx: (x_max - x_min) / 2,
        hy: (y_max - y_min) / 2,
        floor: pitch / 1024,
        pitch,
        cmax: x_min
            .abs()
            .max(x_max.abs())
            .max(y_min.abs())
            .max(y_max.abs()),
    })
}

/// No product formed by the integer evaluators may overflow i128; proved
/// up front from the coordinate bound and the common denominator. Each
/// distance numerator is at most 4*cmax times its own denominator, so
/// values at scale l never exceed 4*cmax*l and every derived quantity
/// stays within 16*cmax*l.
fn int_guard(cmax: i128, l: i128) -> bool {
    let m = BigInt::from(16) * BigInt::from(cmax) * BigInt::from(l);
    m.bits() <= 122
}

/// A distance value num/den with a small fixed positive denominator.
#[derive(Clone, Copy)]
struct IFrac {
    num: i128,
    den: i128,
}

#[derive(Clone, Copy)]
enum IKind {
    Ray,
    Segment,
}

/// A ray or segment in scaled integer coordinates. Mirrors `nearest_on`:
/// the d1 distance along the object is convex piecewise-linear in the
/// parameter, minimized at the dominant coordinate's kink, clamped to the
/// parameter range.
#[derive(Clone, Copy)]
struct IObj {
    ax: i128,
    ay: i128,
    /// Full direction at spatial scale (reaches the far endpoint at t=1).
    fx: i128,
    fy: i128,
    /// Primitive integer direction with the same ratio and signs.
    dx: i128,
    dy: i128,
    dom_x: bool,
    /// |dominant primitive component|: the distance denominator.
    dden: i128,
    kind: IKind,
}

impl IObj {
    fn build(obj: &LinearObject, scale: &BigInt) -> Option<IObj> {
        let kind = match obj {
            LinearObject::Line { .. } => return None,
            LinearObject::Ray { .. } => IKind::Ray,
            LinearObject::Segment { .. } => IKind::Segment,
        };
        let (a, d) = obj.start_and_dir();
        let ix = d.0.numer() * d.1.denom();
        let iy = d.1.numer() * d.0.denom();
        let g = ix.gcd(&iy);
        if g.is_zero() {
            return None;
        }
        let dx = i128::try_from(&(&ix / &g)).ok()?;
        let dy = i128::try_from(&(&iy / &g)).ok()?;
        let dom_x = dx.abs() >= dy.abs() && dx != 0;
        Some(IObj {
            ax: scaled_i128(&a.x, scale)?,
            ay: scaled_i128(&a.y, scale)?,
            fx: scaled_i128(&d.0, scale)?,
            fy: scaled_i128(&d.1, scale)?,
            dx,
            dy,
            dom_x,
            dden: if dom_x { dx.abs() } else { dy.abs() },
            kind,
        })
    }

    fn dist(&self, px: i128, py: i128) -> IFrac {
        let ax = self.ax - px;
        let ay = self.ay - py;
        let (adom, fdom) = if self.dom_x {
            (ax, self.fx)
        } else {
            (ay, self.fy)
        };
        // unconstrained kink at t* = -adom/fdom; clamp to t >= 0
        let t_neg = if fdom > 0 { -adom < 0 } else { -adom > 0 };
        if t_neg {
            return IFrac {
                num: ax.abs() + ay.abs(),
                den: 1,
            };
        }
        // and to t <= 1 for segments
        let t_big = if fdom > 0 { -adom > fdom } else { -adom < fdom };
        if matches!(self.kind, IKind::Segment) && t_big {
            return IFrac {
                num: (ax + self.fx).abs() + (ay + self.fy).abs(),
                den: 1,
            };
        }
        IFrac {
            num: (ax * self.dy - ay * self.dx).abs(),
            den: self.dden,
        }
    }
}

/// Violation and cell-prune evaluators at a fixed violation scale `cd`.
trait IntEval {
    fn violation(&self, px: i128, py: i128) -> i128;
    fn prune(&self, px: i128, py: i128, hx: i128, hy: i128) -> bool;
}

struct ICircum {
    pts: [(i128, i128); 3],
}

impl IntEval for ICircum {
    // cd = 2: the spread itself is twice the violation
    fn violation(&self, px: i128, py: i128) -> i128 {
        let mut lo = i128::MAX;
        let mut hi = i128::MIN;
        for (x, y) in self.pts {
            let v = (px - x).abs() + (py - y).abs();
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    }

    fn prune(&self, px: i128, py: i128, hx: i128, hy: i128) -> bool {
        let b: Vec<(i128, i128)> = self
            .pts
            .iter()
            .map(|(x, y)| {
                let ax = (px - x).abs();
                let ay = (py - y).abs();
                ((ax - hx).max(0) + (ay - hy).max(0), ax + hx + ay + hy)
            })
            .collect();
        (0..3).any(|i| (0..3).any(|j| i != j && b[i].0 > b[j].1))
    }
}

struct IExcircle {
    /// Side segment first, then the two opposite-angle rays.
    objs: [IObj; 3],
    /// lcm of the three distance denominators; cd = 2l.
    l: i128,
    s_apex: i128,
}

impl IntEval for IExcircle {
    fn violation(&self, px: i128, py: i128) -> i128 {
        let mut lo = i128::MAX;
        let mut hi = i128::MIN;
        for o in &self.objs {
            let f = o.dist(px, py);
            let v = f.num * (self.l / f.den);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        // spread at scale l equals half the spread at scale cd = 2l
        let spread = hi - lo;
        // wrong-side penalty: distance to the side line on the apex side
        let seg = &self.objs[0];
        let cr = (seg.ax - px) * seg.dy - (seg.ay - py) * seg.dx;
        let pen = if cr.signum() as i128 == self.s_apex {
            cr.abs() * (2 * self.l / seg.dden)
        } else {
            0
        };
        spread.max(pen)
    }

    fn prune(&self, px: i128, py: i128, hx: i128, hy: i128) -> bool {
        let rad_l = (hx + hy) * self.l;
        let mut lows = [0i128; 3];
        for (i, o) in self.objs.iter().enumerate() {
            let f = o.dist(px, py);
            lows[i] = (f.num * (self.l / f.den) - rad_l).max(0);
        }
        let biggest = *lows.iter().max().unwrap();
        if biggest == 0 {
            return false;
        }
        let corners = [
            (px - hx, py - hy),
            (px + hx, py - hy),
            (px - hx, py + hy),
            (px + hx, py + hy),
        ];
        self.objs.iter().zip(&lows).any(|(o, lo)| {
            *lo < biggest
                && corners.iter().all(|&(x, y)| {
                    let f = o.dist(x, y);
                    f.num * (self.l / f.den) < biggest
                })
        })
    }
}

/// The same best-first branch-and-bound as `search`, in scaled integers.
/// Candidate refinement and exact acceptance still run through the
/// rational `Problem`.
fn search_int(
    ev: &dyn IntEval,
    problem: &Problem<'_>,
    ir: &IntRegion,
    region: SearchRegion,
    cd: i128,
) -> OracleVerdict {
    let floor_rat = &region.pitch * rat(1, 1024);
    let grid = &floor_rat * rat(1, 1024);
    let to_rat = |v: i128| Rat::new(BigInt::from(v), ir.scale.clone());
    let mut refine_left = 128usize;

    let mut heap: BinaryHeap<Reverse<(i128, i128, i128, i128, i128)>> = BinaryHeap::new();
    let f0 = ev.violation(ir.cx, ir.cy);
    heap.push(Reverse((f0, ir.cx, ir.cy, ir.hx, ir.hy)));
    let mut evals = 1usize;
    let mut best: Option<i128> = None;
    let mut exhausted = true;

    while let Some(Reverse((f, cx, cy, hx, hy))) = heap.pop() {
        let radius = hx + hy;
        if f > radius * cd {
            continue; // Lipschitz bound: no zero in this cell
        }
        evals += 1;
        if ev.prune(cx, cy, hx, hy) {
            continue;
        }
        let improving = best.map_or(true, |b| f < b);
        let halving = best.map_or(true, |b| 2 * f < b);
        let deep = radius <= ir.pitch;
        if halving || (deep && refine_left > 0) {
            if !halving {
                refine_left -= 1;
            }
            let seed = Point::new(to_rat(cx), to_rat(cy));
            let h = to_rat(radius).min(region.pitch.clone()) * rat(1, 4);
            if !h.is_zero() {
                for (sx, sy) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                    if let Some((w, r)) = problem.refine(&seed, &h, sx, sy, &grid) {
                        return OracleVerdict::ExistsWitness {
                            circle: TaxiCircle::new(w, r),
                        };
                    }
                    evals += 3;
                }
            }
        }
        if improving {
            best = Some(f);
        }
        if radius <= ir.floor || hx % 2 != 0 || hy % 2 != 0 {
            exhausted = false; // unresolved at the resolution floor
            continue;
        }
        if evals >= INT_MAX_EVALS {
            exhausted = false;
            break;
        }
        let qx = hx / 2;
        let qy = hy / 2;
        for sx in [-1i128, 1] {
            for sy in [-1i128, 1] {
                let nx = cx + sx * qx;
                let ny = cy + sy * qy;
                let fc = ev.violation(nx, ny);
                evals += 1;
                heap.push(Reverse((fc, nx, ny, qx, qy)));
            }
        }
    }
    if exhausted {
        OracleVerdict::CertifiedNone { region }
    } else {
        OracleVerdict::Unknown {
            best_residual: best
                .map_or_else(Rat::zero, |b| Rat::new(BigInt::from(b), &ir.scale * BigInt::from(cd))),
            region,
        }
    }
}
