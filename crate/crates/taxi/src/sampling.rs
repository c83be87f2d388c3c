//! Seeded random generation of rational triangles and canonical slope
//! configurations for the consistency suites. All generators are
//! deterministic functions of the RNG state, so a fixed seed reproduces
//! the exact same inputs.

use crate::geom::{Point, Slope};
use crate::inscription::classify_triangle;
use crate::rat::{rat, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The suite RNG. ChaCha gives identical streams on every platform.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random rational with numerator in [-50, 50] and denominator in [1, 50].
pub fn random_rat<R: Rng>(r: &mut R) -> Rat {
    let num = r.gen_range(-50i64..=50);
    let den = r.gen_range(1i64..=50);
    rat(num, den)
}

pub fn random_point<R: Rng>(r: &mut R) -> Point {
    Point::new(random_rat(r), random_rat(r))
}

/// A random non-degenerate triangle (distinct, non-collinear vertices).
pub fn random_triangle<R: Rng>(r: &mut R) -> (Point, Point, Point) {
    loop {
        let a = random_point(r);
        let b = random_point(r);
        let c = random_point(r);
        if crate::geom::orient(&a, &b, &c) != 0 {
            return (a, b, c);
        }
    }
}

/// A random strictly positive rational below 1 (both parts ≤ 50).
fn random_unit_slope<R: Rng>(r: &mut R) -> Rat {
    let den = r.gen_range(2i64..=50);
    let num = r.gen_range(1i64..den);
    rat(num, den)
}

/// A random steep slope: |m| > 1, or vertical with probability 1/16.
pub fn random_steep_slope<R: Rng>(r: &mut R) -> Slope {
    if r.gen_range(0u32..16) == 0 {
        return Slope::Vertical;
    }
    let den = r.gen_range(1i64..=20);
    let num = r.gen_range(den + 1..=den * 20);
    let sign = if r.gen_bool(0.5) { 1 } else { -1 };
    Slope::Finite(rat(sign * num, den))
}

/// Canonical minimally inscribed slope triple: 0 < m_a < 1,
/// −1 < m_b < m_a, and steep m_c, rejected until the realized triangle
/// actually classifies as minimally inscribed.
pub fn random_minimal_slopes<R: Rng>(r: &mut R) -> (Rat, Rat, Slope) {
    loop {
        let m_a = random_unit_slope(r);
        let m_b = loop {
            let den = r.gen_range(2i64..=50);
            let num = r.gen_range(-(den - 1)..den);
            let v = rat(num, den);
            if v < m_a {
                break v;
            }
        };
        let m_c = random_steep_slope(r);
        if let Some((a, b, c)) = realize_if_minimal(&m_a, &m_b, &m_c) {
            let _ = (a, b, c);
            return (m_a, m_b, m_c);
        }
    }
}

fn realize_if_minimal(m_a: &Rat, m_b: &Rat, m_c: &Slope) -> Option<(Point, Point, Point)> {
    let (a, b, c) = crate::apollonius::realize_canonical(m_a, m_b, m_c).ok()?;
    let cls = classify_triangle(&a, &b, &c).ok()?;
    if cls.minimally_inscribed {
        Some((a, b, c))
    } else {
        None
    }
}

/// A realized random canonical minimally inscribed triangle together with
/// its slope triple.
pub fn random_minimal_triangle<R: Rng>(r: &mut R) -> ((Point, Point, Point), (Rat, Rat, Slope)) {
    loop {
        let (m_a, m_b, m_c) = random_minimal_slopes(r);
        if let Some(t) = realize_if_minimal(&m_a, &m_b, &m_c) {
            return (t, (m_a, m_b, m_c));
        }
    }
}
