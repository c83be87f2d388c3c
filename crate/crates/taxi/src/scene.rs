//! Deterministic SVG rendering. A scene is a pure value; rendering is a
//! pure function of it, so identical scenes produce byte-identical SVG.
//! Coordinates are emitted as 6-significant-digit decimal approximations
//! of the exact rationals, for display only.

use crate::excircles::Side;
use crate::geom::{Point, TaxiCircle};
use crate::rat::{approx6, rat, rint, Rat};
use num_traits::Zero;

/// Guide stroke colors, fixed in code for golden-file stability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuideColor {
    Gray,
    Green,
    Red,
}

impl GuideColor {
    fn hex(self) -> &'static str {
        match self {
            GuideColor::Gray => "#999999",
            GuideColor::Green => "#2e8b57",
            GuideColor::Red => "#cc0000",
        }
    }
}

/// A dashed guide segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guide {
    pub from: Point,
    pub to: Point,
    pub color: GuideColor,
}

/// Everything to draw, all computed for the same triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneSpec {
    pub triangle: (Point, Point, Point),
    /// Excircles in side order a, b, c (missing sides simply absent).
    pub excircles: Vec<(Side, TaxiCircle)>,
    pub apollonius: Vec<TaxiCircle>,
    pub guides: Vec<Guide>,
    pub labels: Vec<(Point, String)>,
}

impl SceneSpec {
    pub fn triangle_only(a: &Point, b: &Point, c: &Point) -> SceneSpec {
        SceneSpec {
            triangle: (a.clone(), b.clone(), c.clone()),
            excircles: Vec::new(),
            apollonius: Vec::new(),
            guides: Vec::new(),
            labels: Vec::new(),
        }
    }
}

fn side_color(side: Side) -> &'static str {
    match side {
        Side::A => "#2e8b57",
        Side::B => "#1f77b4",
        Side::C => "#d62728",
    }
}

const TRIANGLE_COLOR: &str = "#000000";
const APOLLONIUS_COLOR: &str = "#ff7f0e";

struct Bounds {
    x_min: Rat,
    x_max: Rat,
    y_min: Rat,
    y_max: Rat,
}

impl Bounds {
    fn new(p: &Point) -> Bounds {
        Bounds {
            x_min: p.x.clone(),
            x_max: p.x.clone(),
            y_min: p.y.clone(),
            y_max: p.y.clone(),
        }
    }

    fn add(&mut self, p: &Point) {
        if p.x < self.x_min {
            self.x_min = p.x.clone();
        }
        if p.x > self.x_max {
            self.x_max = p.x.clone();
        }
        if p.y < self.y_min {
            self.y_min = p.y.clone();
        }
        if p.y > self.y_max {
            self.y_max = p.y.clone();
        }
    }

    fn add_circle(&mut self, c: &TaxiCircle) {
        for v in c.vertices() {
            self.add(&v);
        }
    }
}

/// Emit a coordinate pair with the y axis flipped for screen space.
fn xy(p: &Point) -> (String, String) {
    (approx6(&p.x), approx6(&(-&p.y)))
}

fn polygon(out: &mut String, pts: &[Point], color: &str, width: &str, dashed: bool) {
    out.push_str("<polygon points=\"");
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let (x, y) = xy(p);
        out.push_str(&format!("{x},{y}"));
    }
    out.push_str(&format!(
        "\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\""
    ));
    if dashed {
        out.push_str(" stroke-dasharray=\"4 3\"");
    }
    out.push_str("/>\n");
}

/// Render the scene to a standalone SVG document.
pub fn render_svg(scene: &SceneSpec) -> String {
    let (a, b, c) = &scene.triangle;
    let mut bounds = Bounds::new(a);
    bounds.add(b);
    bounds.add(c);
    for (_, circle) in &scene.excircles {
        bounds.add_circle(circle);
    }
    for circle in &scene.apollonius {
        bounds.add_circle(circle);
    }
    for g in &scene.guides {
        bounds.add(&g.from);
        bounds.add(&g.to);
    }
    for (p, _) in &scene.labels {
        bounds.add(p);
    }
    // viewport: bounding box of all elements inflated by 10%
    let w = &bounds.x_max - &bounds.x_min;
    let h = &bounds.y_max - &bounds.y_min;
    let pad_base = if &w + &h > Rat::zero() { &w + &h } else { rint(2) };
    let pad = &pad_base * rat(1, 20);
    let x0 = &bounds.x_min - &pad;
    let y0 = -&bounds.y_max - &pad;
    let vw = &w + rint(2) * &pad;
    let vh = &h + rint(2) * &pad;
    let stroke = approx6(&(&pad_base * rat(1, 300)));
    let font = approx6(&(&pad_base * rat(1, 40)));

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        approx6(&x0),
        approx6(&y0),
        approx6(&vw),
        approx6(&vh)
    ));
    // fixed element order: triangle, excircles a/b/c, apollonius, guides,
    // labels
    polygon(
        &mut out,
        &[a.clone(), b.clone(), c.clone()],
        TRIANGLE_COLOR,
        &stroke,
        false,
    );
    for (side, circle) in &scene.excircles {
        polygon(&mut out, &circle.vertices(), side_color(*side), &stroke, false);
    }
    for circle in &scene.apollonius {
        polygon(&mut out, &circle.vertices(), APOLLONIUS_COLOR, &stroke, false);
    }
    for g in &scene.guides {
        let (x1, y1) = xy(&g.from);
        let (x2, y2) = xy(&g.to);
        out.push_str(&format!(
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{}\" stroke-width=\"{stroke}\" stroke-dasharray=\"4 3\"/>\n",
            g.color.hex()
        ));
    }
    for (p, text) in &scene.labels {
        let (x, y) = xy(p);
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-size=\"{font}\" font-family=\"monospace\" fill=\"#000000\">{text}</text>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// The default scene for a triangle: the triangle itself, every excircle
/// that exists, every Apollonius circle that exists, diagonal guides
/// through each excircle center, and vertex labels.
pub fn default_scene(a: &Point, b: &Point, c: &Point) -> crate::Result<SceneSpec> {
    let mut scene = SceneSpec::triangle_only(a, b, c);
    let mut excircles: Vec<crate::excircles::Excircle> = Vec::new();
    for side in Side::ALL {
        if let Some(e) = crate::excircles::construct_excircle(a, b, c, side)? {
            scene.excircles.push((side, e.circle.clone()));
            excircles.push(e);
        }
    }
    if excircles.len() == 3 {
        let res =
            crate::apollonius::construct_apollonius(&excircles[0], &excircles[1], &excircles[2])?;
        for circle in &res.circles {
            scene.apollonius.push(circle.circle.clone());
        }
        for family in &res.families {
            scene.apollonius.push(family.circle_at(&family.representative_t()));
        }
    }
    // diagonal guides through each excircle center, spanning its diamond
    for (_, circle) in scene.excircles.clone() {
        let r = &circle.radius;
        let cc = &circle.center;
        let half = rat(1, 2);
        let rr = r * &half;
        scene.guides.push(Guide {
            from: Point::new(&cc.x - &rr, &cc.y - &rr),
            to: Point::new(&cc.x + &rr, &cc.y + &rr),
            color: GuideColor::Gray,
        });
        scene.guides.push(Guide {
            from: Point::new(&cc.x - &rr, &cc.y + &rr),
            to: Point::new(&cc.x + &rr, &cc.y - &rr),
            color: GuideColor::Gray,
        });
    }
    scene.labels.push((a.clone(), "A".to_string()));
    scene.labels.push((b.clone(), "B".to_string()));
    scene.labels.push((c.clone(), "C".to_string()));
    Ok(scene)
}
