//! Randomized invariants of the exact core: metric identities, isometry
//! equivariance, and agreement between the closed forms and the
//! constructive solvers.

use proptest::prelude::*;

use taxi::apollonius::{decide_slopes, realize_canonical, universal_region};
use taxi::excircles::{
    canonicalize, construct_excircle, excircle_opposite_closed_form, Side,
};
use taxi::geom::{
    cheb, d1, enclose_dist, linf, orient, Isometry, Point, Slope, D4_ALL,
};
use taxi::inscription::{circumcircles, classify_triangle};
use taxi::rat::{rat, Rat};
use num_traits::{Signed, Zero};

fn prat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=50).prop_map(|(n, d)| rat(n, d))
}

fn ppoint() -> impl Strategy<Value = Point> {
    (prat(), prat()).prop_map(|(x, y)| Point::new(x, y))
}

fn ptriangle() -> impl Strategy<Value = (Point, Point, Point)> {
    (ppoint(), ppoint(), ppoint())
        .prop_filter("vertices must not be collinear", |(a, b, c)| {
            orient(a, b, c) != 0
        })
}

fn pisometry() -> impl Strategy<Value = Isometry> {
    (0usize..8, prat(), prat()).prop_map(|(k, tx, ty)| Isometry::new(D4_ALL[k], (tx, ty)))
}

/// Slopes of a minimally inscribed canonical triangle with finite steep
/// opposite slope: 0 < m_a < 1, -1 < m_b < m_a, |m_c| > 1.
fn pminimal_slopes() -> impl Strategy<Value = (Rat, Rat, Rat)> {
    (
        (1i64..50, 1i64..50),
        (-49i64..50, 1i64..50),
        (-40i64..=40, 1i64..=8),
    )
        .prop_map(|((an, ad), (bn, bd), (cn, cd))| {
            let m_a = rat(an.min(ad * 2 - 1).max(1), ad * 2); // in (0, 1)
            let m_b = rat(bn, bd * 50) * &m_a; // in (-m_a, m_a) ⊂ (-1, m_a)
            let m_c = rat(cn, cd) + if cn >= 0 { rat(2, 1) } else { rat(-2, 1) };
            (m_a, m_b, m_c)
        })
        .prop_filter("m_b must stay below m_a", |(m_a, m_b, _)| m_b < m_a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isometries_preserve_d1(p in ppoint(), q in ppoint(), t in pisometry()) {
        prop_assert_eq!(d1(&t.apply(&p), &t.apply(&q)), d1(&p, &q));
    }

    #[test]
    fn chebyshev_transform_turns_d1_into_linf(p in ppoint(), q in ppoint()) {
        prop_assert_eq!(linf(&cheb(&p), &cheb(&q)), d1(&p, &q));
    }

    #[test]
    fn classification_is_equivariant(tri in ptriangle(), t in pisometry()) {
        let (a, b, c) = &tri;
        let base = classify_triangle(a, b, c).unwrap();
        let moved = classify_triangle(&t.apply(a), &t.apply(b), &t.apply(c)).unwrap();
        let expect: Vec<_> = base
            .angles
            .iter()
            .map(|k| if t.d4.swaps_diagonals() { k.swap() } else { *k })
            .collect();
        prop_assert_eq!(moved.angles.to_vec(), expect);
        prop_assert_eq!(moved.inscribed, base.inscribed);
        prop_assert_eq!(moved.completely_count, base.completely_count);
    }

    #[test]
    fn circumcircles_pass_exact_equidistance(tri in ptriangle()) {
        let (a, b, c) = &tri;
        let class = classify_triangle(a, b, c).unwrap();
        let res = circumcircles(a, b, c).unwrap();
        prop_assert_eq!(class.inscribed, !res.is_empty());
        for circle in &res.isolated {
            for p in [a, b, c] {
                prop_assert_eq!(d1(&circle.center, p), circle.radius.clone());
            }
        }
        for family in &res.families {
            let circle = family.circle_at(&family.representative_t());
            for p in [a, b, c] {
                prop_assert_eq!(d1(&circle.center, p), circle.radius.clone());
            }
        }
    }

    #[test]
    fn excircles_enclose_nothing_short(tri in ptriangle()) {
        let (a, b, c) = &tri;
        for side in Side::ALL {
            if let Some(e) = construct_excircle(a, b, c, side).unwrap() {
                prop_assert!(e.circle.radius.is_positive());
                prop_assert!(taxi::excircles::is_excircle(a, b, c, side, &e.circle));
            }
        }
    }

    #[test]
    fn closed_form_matches_constructive_excircle(slopes in pminimal_slopes()) {
        let (m_a, m_b, m_c) = &slopes;
        let (a, b, c) = realize_canonical(m_a, m_b, &Slope::Finite(m_c.clone())).unwrap();
        let ct = canonicalize(&a, &b, &c).unwrap();
        prop_assume!(ct.minimally_inscribed());
        prop_assume!(matches!(ct.m_c, Slope::Finite(_)));
        let sol = excircle_opposite_closed_form(&ct).unwrap();
        let built = construct_excircle(&ct.a, &ct.b, &ct.c, Side::C)
            .unwrap()
            .expect("side-c excircle of a minimally inscribed triangle");
        prop_assert_eq!(&sol.center, &built.circle.center);
        prop_assert_eq!(&sol.r, &built.circle.radius);
        prop_assert_eq!(orient(&ct.a, &ct.b, &sol.t1), 0);
    }

    #[test]
    fn apollonius_circles_are_exactly_tangent(slopes in pminimal_slopes()) {
        let (m_a, m_b, m_c) = &slopes;
        let (a, b, c) = realize_canonical(m_a, m_b, &Slope::Finite(m_c.clone())).unwrap();
        prop_assume!(classify_triangle(&a, &b, &c).unwrap().inscribed);
        let exc: Vec<_> = Side::ALL
            .iter()
            .filter_map(|s| construct_excircle(&a, &b, &c, *s).unwrap())
            .collect();
        prop_assume!(exc.len() == 3);
        let res = taxi::apollonius::construct_apollonius(&exc[0], &exc[1], &exc[2]).unwrap();
        for circle in &res.circles {
            prop_assert!(circle.tight.iter().all(Rat::is_zero));
            for e in &exc {
                prop_assert_eq!(
                    enclose_dist(&circle.circle.center, &e.circle),
                    circle.circle.radius.clone()
                );
                prop_assert!(circle.circle.radius > e.circle.radius);
            }
        }
    }

    // The region formula is validated on the non-negative half of the
    // m_b range, where its single printed inequality governs membership.
    #[test]
    fn region_membership_predicts_sweep(slopes in pminimal_slopes()) {
        let (m_a, m_b_raw, _) = &slopes;
        let m_b = m_b_raw.abs() * rat(9, 10);
        prop_assume!(&m_b < m_a);
        let verdict = universal_region(m_a, &m_b).unwrap();
        let sample = [rat(9, 8), rat(3, 2), rat(4, 1), rat(1_000_000, 1),
                      rat(-9, 8), rat(-3, 2), rat(-4, 1), rat(-1_000_000, 1)];
        let all_exist = sample.iter().all(|m| {
            decide_slopes(m_a, &m_b, &Slope::Finite(m.clone())).unwrap().exists
        });
        if verdict.inside {
            prop_assert!(all_exist, "inside the region every steep m_c must work");
        }
    }

    // The vertical rule is the m_c -> ±infinity limit of the finite
    // conditions; away from the two boundary hyperplanes the verdicts at
    // m_c = ±10^6 must agree with it.
    #[test]
    fn vertical_rule_is_the_steep_limit(slopes in pminimal_slopes()) {
        let (m_a, m_b, _) = &slopes;
        let b1 = rat(2, 1) * m_a - m_b - rat(1, 1);
        let b2 = rat(1, 1) - m_a + rat(2, 1) * m_b;
        prop_assume!(!b1.is_zero() && !b2.is_zero());
        let vertical = decide_slopes(m_a, m_b, &Slope::Vertical).unwrap().exists;
        for m in [rat(1_000_000, 1), rat(-1_000_000, 1)] {
            let finite = decide_slopes(m_a, m_b, &Slope::Finite(m)).unwrap().exists;
            prop_assert_eq!(finite, vertical);
        }
    }
}

#[test]
fn chebyshev_is_an_involution_up_to_scale() {
    // cheb followed by its inverse is the identity on sample points
    let pts = [
        Point::of(0, 0),
        Point::of(3, -4),
        Point::new(rat(5, 7), rat(-2, 9)),
    ];
    for p in &pts {
        assert_eq!(taxi::geom::cheb_inv(&cheb(p)), p.clone());
    }
}
