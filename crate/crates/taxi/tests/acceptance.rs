//! End-to-end acceptance suite (custom harness): runs each numbered
//! criterion in order, prints exactly one pass/fail line per criterion,
//! and enforces each criterion's runtime budget. Exits nonzero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use taxi::apollonius::{
    construct_apollonius, decide_slopes, exists_closed_form, hor_vert_exists, realize_canonical,
    realize_hor_vert, steep_slope_sweep, universal_region,
};
use taxi::consistency::{
    check_apollonius, check_circumcircle, check_excircles, CheckReport,
};
use taxi::excircles::{
    canonicalize, construct_excircle, excenter_cevians, excircle_opposite_closed_form,
    full_complement, is_excircle, triangle_diameter, Side,
};
use taxi::geom::{orient, Point, Slope};
use taxi::inscription::classify_triangle;
use taxi::oracle::{default_inflate, default_pitch};
use taxi::rat::{format_rat, rat, Rat};
use taxi::sampling::{random_minimal_triangle, random_triangle, rng};
use num_traits::Zero;

fn pass(n: u32, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {n}: over budget ({elapsed:?} >= {budget:?})"
    );
    println!("criterion {n}: pass ({detail}; {elapsed:.2?})");
}

fn triangle_literal(a: &Point, b: &Point, c: &Point) -> String {
    [a, b, c]
        .iter()
        .map(|p| format!("{},{}", format_rat(&p.x), format_rat(&p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn taxi_cmd(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_taxi"))
        .args(args)
        .output()
        .expect("failed to launch taxi binary")
}

fn criterion_01_condition_values_for_slopes_3_4_1_5_5_2() {
    let t0 = Instant::now();
    let d = decide_slopes(&rat(3, 4), &rat(1, 5), &Slope::Finite(rat(5, 2))).unwrap();
    let c1 = d.cond1.as_ref().expect("cond1 evaluated");
    let c2 = d.cond2.as_ref().expect("cond2 evaluated");
    assert_eq!((&c1.lhs, &c1.rhs, c1.holds), (&rat(19, 50), &rat(2, 5), false));
    assert_eq!((&c2.lhs, &c2.rhs, c2.holds), (&rat(7, 20), &rat(2, 5), true));
    assert!(d.exists);
    pass(1, t0, Duration::from_secs(1), "19/50 fails, 7/20 holds, exists");
}

fn criterion_02_condition_values_for_slopes_3_5_3_10_neg8() {
    let t0 = Instant::now();
    let d = decide_slopes(&rat(3, 5), &rat(3, 10), &Slope::Finite(rat(-8, 1))).unwrap();
    let c1 = d.cond1.as_ref().expect("cond1 evaluated");
    let c2 = d.cond2.as_ref().expect("cond2 evaluated");
    assert_eq!((&c1.lhs, &c1.rhs, c1.holds), (&rat(-11, 80), &rat(-1, 8), false));
    assert_eq!((&c2.lhs, &c2.rhs, c2.holds), (&rat(43, 40), &rat(-1, 8), false));
    assert!(!d.exists);
    pass(2, t0, Duration::from_secs(1), "both conditions fail, no circle");
}

fn criterion_03_tangent_circle_construction_for_slopes_3_4_1_5_3() {
    let t0 = Instant::now();
    let (a, b, c) = realize_canonical(&rat(3, 4), &rat(1, 5), &Slope::Finite(rat(3, 1))).unwrap();
    assert!(exists_closed_form(&a, &b, &c).unwrap().exists);
    let exc: Vec<_> = Side::ALL
        .iter()
        .map(|s| construct_excircle(&a, &b, &c, *s).unwrap().expect("excircle"))
        .collect();
    let res = construct_apollonius(&exc[0], &exc[1], &exc[2]).unwrap();
    assert!(!res.circles.is_empty(), "expected at least one tangent circle");
    for circle in &res.circles {
        assert!(circle.tight.iter().all(Rat::is_zero), "nonzero residual");
    }
    pass(3, t0, Duration::from_secs(5), "circle constructed, residuals 0");
}

fn criterion_04_hypotenuse_slope_sweep() {
    let t0 = Instant::now();
    let cases: [(Rat, bool); 9] = [
        (rat(1, 4), false),
        (rat(9, 20), false),
        (rat(1, 2), true),
        (rat(3, 4), true),
        (rat(1, 1), false),
        (rat(3, 2), true),
        (rat(2, 1), true),
        (rat(21, 10), false),
        (rat(3, 1), false),
    ];
    for (m, expected) in &cases {
        assert_eq!(
            hor_vert_exists(&Slope::Finite(m.clone())).unwrap(),
            *expected,
            "interval verdict for slope {m}"
        );
        let (a, b, c) = realize_hor_vert(m).unwrap();
        assert_eq!(
            exists_closed_form(&a, &b, &c).unwrap().exists,
            *expected,
            "realized-triangle verdict for slope {m}"
        );
    }
    pass(4, t0, Duration::from_secs(5), "9 slopes match F,F,T,T,F,T,T,F,F");
}

fn criterion_05_circumcircle_suite_1000() {
    let t0 = Instant::now();
    let mut r = rng(7);
    let mut report = CheckReport::default();
    for _ in 0..1000 {
        let (a, b, c) = random_triangle(&mut r);
        let inflate = default_inflate();
        let pitch = default_pitch(&triangle_diameter(&a, &b, &c));
        // the check records any divergence between classification,
        // constructed circumcircles, and the oracle
        check_circumcircle(&a, &b, &c, &inflate, &pitch, &mut report).unwrap();
        let class = classify_triangle(&a, &b, &c).unwrap();
        let circ = taxi::inscription::circumcircles(&a, &b, &c).unwrap();
        assert_eq!(class.inscribed, !circ.is_empty());
    }
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert!(report.unknown_within_ceiling(), "unknown rate above 2%");
    let detail = format!(
        "1000 triangles, {} checks, {} unknown",
        report.oracle_checks, report.unknown_skipped
    );
    pass(5, t0, Duration::from_secs(120), &detail);
}

fn criterion_06_excircle_suite_1000() {
    let t0 = Instant::now();
    let mut r = rng(7);
    let mut report = CheckReport::default();
    for _ in 0..1000 {
        let (a, b, c) = random_triangle(&mut r);
        let inflate = default_inflate();
        let pitch = default_pitch(&triangle_diameter(&a, &b, &c));
        check_excircles(&a, &b, &c, &inflate, &pitch, &mut report).unwrap();
        let fc = full_complement(&a, &b, &c).unwrap();
        let mut built = 0usize;
        for side in Side::ALL {
            if let Some(e) = construct_excircle(&a, &b, &c, side).unwrap() {
                built += 1;
                assert!(
                    is_excircle(&a, &b, &c, side, &e.circle),
                    "constructed excircle fails exact predicates"
                );
            }
        }
        assert_eq!(fc.all_exist, built == 3, "full_complement vs construction");
    }
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert!(report.unknown_within_ceiling(), "unknown rate above 2%");
    let detail = format!(
        "1000 triangles, {} checks, {} unknown",
        report.oracle_checks, report.unknown_skipped
    );
    pass(6, t0, Duration::from_secs(300), &detail);
}

fn criterion_07_apollonius_suite_1000() {
    let t0 = Instant::now();
    let mut r = rng(7);
    let mut report = CheckReport::default();
    for _ in 0..1000 {
        let ((a, b, c), _) = random_minimal_triangle(&mut r);
        let exc: [taxi::excircles::Excircle; 3] = [
            construct_excircle(&a, &b, &c, Side::A).unwrap().expect("excircle a"),
            construct_excircle(&a, &b, &c, Side::B).unwrap().expect("excircle b"),
            construct_excircle(&a, &b, &c, Side::C).unwrap().expect("excircle c"),
        ];
        let res = construct_apollonius(&exc[0], &exc[1], &exc[2]).unwrap();
        for circle in &res.circles {
            assert!(circle.tight.iter().all(Rat::is_zero), "nonzero residual");
        }
        assert_eq!(
            exists_closed_form(&a, &b, &c).unwrap().exists,
            !res.is_empty(),
            "closed form vs construction for {a:?} {b:?} {c:?}"
        );
        let inflate = default_inflate();
        let pitch = default_pitch(&triangle_diameter(&a, &b, &c));
        check_apollonius(&a, &b, &c, &exc, &inflate, &pitch, &mut report).unwrap();
    }
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert!(report.unknown_within_ceiling(), "unknown rate above 2%");
    let detail = format!(
        "1000 full-complement triangles, {} checks, {} unknown",
        report.oracle_checks, report.unknown_skipped
    );
    pass(7, t0, Duration::from_secs(600), &detail);
}

fn criterion_08_universal_region() {
    let t0 = Instant::now();
    let v = universal_region(&rat(3, 4), &rat(1, 5)).unwrap();
    assert!(v.inside);
    assert_eq!(v.lhs, Some(rat(8, 3)));
    assert_eq!(v.rhs, Some(rat(35, 13)));
    let sweep = steep_slope_sweep();
    assert_eq!(sweep.len(), 64);
    for m in &sweep {
        let d = decide_slopes(&rat(3, 4), &rat(1, 5), &Slope::Finite(m.clone())).unwrap();
        assert!(d.exists, "inside-region slopes must admit a circle at m_c={m}");
    }
    let failing: Vec<&Rat> = sweep
        .iter()
        .filter(|m| {
            !decide_slopes(&rat(3, 5), &rat(3, 10), &Slope::Finite((*m).clone()))
                .unwrap()
                .exists
        })
        .collect();
    assert!(!failing.is_empty(), "outside-region slopes must fail somewhere");
    assert!(failing.contains(&&rat(-8, 1)), "m_c = -8 must fail");
    pass(8, t0, Duration::from_secs(30), "8/3 < 35/13; 64-slope sweep");
}

fn criterion_09_closed_form_vs_constructive_excircle_200() {
    let t0 = Instant::now();
    let mut r = rng(11);
    let mut done = 0usize;
    while done < 200 {
        let ((a, b, c), (_, _, m_c)) = random_minimal_triangle(&mut r);
        if matches!(m_c, Slope::Vertical) {
            continue; // the closed form requires a finite opposite slope
        }
        done += 1;
        let ct = canonicalize(&a, &b, &c).unwrap();
        assert!(ct.minimally_inscribed());
        let sol = excircle_opposite_closed_form(&ct).unwrap();
        let built = construct_excircle(&ct.a, &ct.b, &ct.c, Side::C)
            .unwrap()
            .expect("side-c excircle of a minimally inscribed triangle");
        assert_eq!(sol.center, built.circle.center, "closed-form center");
        assert_eq!(sol.r, built.circle.radius, "closed-form radius");
        assert_eq!(
            orient(&ct.a, &ct.b, &sol.t1),
            0,
            "T1 must sit on the AB line"
        );
    }
    pass(9, t0, Duration::from_secs(60), "200 canonical triangles agree");
}

fn criterion_10_concurrency_exploration_100() {
    let t0 = Instant::now();
    let mut r = rng(5);
    let mut concurrent = 0usize;
    for _ in 0..100 {
        let ((a, b, c), _) = random_minimal_triangle(&mut r);
        let rep = excenter_cevians(&a, &b, &c).unwrap();
        if rep.concurrent {
            concurrent += 1;
        }
    }
    let out1 = taxi_cmd(&["concurrency", "--random", "100", "--seed", "5"]);
    let out2 = taxi_cmd(&["concurrency", "--random", "100", "--seed", "5"]);
    assert!(out1.status.success() && out2.status.success());
    assert_eq!(out1.stdout, out2.stdout, "report must be reproducible");
    let v: serde_json::Value = serde_json::from_slice(&out1.stdout).unwrap();
    let fraction = v["concurrency"]["fraction"].as_str().unwrap().to_string();
    assert_eq!(fraction, format!("{concurrent}/100"), "library vs CLI tally");
    pass(
        10,
        t0,
        Duration::from_secs(60),
        &format!("fraction {fraction}, stable across runs"),
    );
}

fn criterion_11_determinism() {
    let t0 = Instant::now();
    for (m_a, m_b, m_c) in [
        (rat(3, 4), rat(1, 5), rat(5, 2)),
        (rat(3, 4), rat(1, 5), rat(3, 1)),
    ] {
        let (a, b, c) = realize_canonical(&m_a, &m_b, &Slope::Finite(m_c)).unwrap();
        let lit = triangle_literal(&a, &b, &c);
        let s1 = taxi_cmd(&["render", &lit]);
        let s2 = taxi_cmd(&["render", &lit]);
        assert!(s1.status.success() && s2.status.success());
        assert!(!s1.stdout.is_empty());
        assert_eq!(s1.stdout, s2.stdout, "SVG must be byte-identical");
    }
    let c1 = taxi_cmd(&["check", "--random", "1000", "--seed", "7"]);
    let c2 = taxi_cmd(&["check", "--random", "1000", "--seed", "7"]);
    assert!(c1.status.success() && c2.status.success());
    assert_eq!(c1.stdout, c2.stdout, "check tallies must be identical");
    let v: serde_json::Value = serde_json::from_slice(&c1.stdout).unwrap();
    assert_eq!(v["check"]["mismatches"].as_array().map(Vec::len), Some(0));
    pass(11, t0, Duration::from_secs(600), "SVG and check tallies stable");
}

fn main() {
    let criteria: [(u32, &str, fn()); 11] = [
        (1, "condition values for slopes (3/4, 1/5, 5/2)", criterion_01_condition_values_for_slopes_3_4_1_5_5_2),
        (2, "condition values for slopes (3/5, 3/10, -8)", criterion_02_condition_values_for_slopes_3_5_3_10_neg8),
        (3, "tangent-circle construction for slopes (3/4, 1/5, 3)", criterion_03_tangent_circle_construction_for_slopes_3_4_1_5_3),
        (4, "hypotenuse slope sweep", criterion_04_hypotenuse_slope_sweep),
        (5, "circumcircle suite (1000 triangles)", criterion_05_circumcircle_suite_1000),
        (6, "excircle suite (1000 triangles)", criterion_06_excircle_suite_1000),
        (7, "tangent-circle suite (1000 triangles)", criterion_07_apollonius_suite_1000),
        (8, "universal slope region", criterion_08_universal_region),
        (9, "closed-form vs constructive excircle (200 triangles)", criterion_09_closed_form_vs_constructive_excircle_200),
        (10, "excenter concurrency exploration (100 triangles)", criterion_10_concurrency_exploration_100),
        (11, "determinism of render and check", criterion_11_determinism),
    ];
    let mut failures = 0usize;
    for (n, name, f) in criteria {
        if let Err(e) = std::panic::catch_unwind(f) {
            let msg = e
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| e.downcast_ref::<&str>().copied())
                .unwrap_or("panic");
            println!("criterion {n}: FAIL ({name}: {msg})");
            failures += 1;
        }
    }
    if failures > 0 {
        eprintln!("acceptance: {failures} criterion(s) failed");
        std::process::exit(1);
    }
    println!("acceptance: all 11 criteria passed");
}
