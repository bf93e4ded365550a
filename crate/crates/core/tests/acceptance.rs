//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::cell::Cell;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use syzcert::certify::{
    bound_thm21, check, check_delpezzo_antik, check_hirzebruch, Assumptions, Certificate,
    Criterion, Polarization, Status, Verdict,
};
use syzcert::cohomology::{chi, h0_certified, h0_exact};
use syzcert::curves::{curve_syzygy_semistability, CurveRestriction, CurveStability};
use syzcert::lattice::DivisorClass;
use syzcert::surfaces::{
    has_irreducible_member, is_ample, is_globally_generated, is_nef, minus_one_curves,
    MemberStatus, SurfaceModel, Truth,
};

type Outcome = Result<String, String>;

fn surface(s: &str) -> SurfaceModel {
    s.parse().expect("built-in surface")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn minus_one_counts() -> Outcome {
    let start = Instant::now();
    let expected = [1usize, 3, 6, 10, 16, 27, 56, 240];
    let mut counts = Vec::new();
    for r in 1..=8u8 {
        let s = surface(&format!("delpezzo:{r}"));
        let curves = minus_one_curves(&s).map_err(|e| e.to_string())?;
        for c in &curves {
            let c2 = s.self_intersect(c).unwrap();
            let ck = s.intersect(c, &s.canonical).unwrap();
            ensure(c2 == -1 && ck == -1, || format!("dP{r}: {c} has C^2={c2}, C.K={ck}"))?;
        }
        let distinct: BTreeSet<_> = curves.iter().collect();
        ensure(distinct.len() == curves.len(), || format!("dP{r}: duplicates"))?;
        counts.push(curves.len());
    }
    ensure(counts == expected, || format!("counts {counts:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("counts {counts:?} in {:?}", start.elapsed()))
}

fn riemann_roch_vs_counting() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=3i64 {
        let s = surface(&format!("hirzebruch:{n}"));
        for a in 0..=5 {
            for b in n * a..=12 {
                let d = DivisorClass::new(vec![a, b]).unwrap();
                ensure(is_nef(&s, &d).unwrap(), || format!("F_{n}: ({a},{b}) not nef"))?;
                let (h0, x) = (h0_exact(&s, &d).unwrap(), chi(&s, &d).unwrap());
                ensure(h0 == x, || format!("F_{n} ({a},{b}): h0={h0}, chi={x}"))?;
                checked += 1;
            }
        }
    }
    let p2 = surface("p2");
    for d in 0..=20i64 {
        let h0 = h0_exact(&p2, &DivisorClass::new(vec![d]).unwrap()).unwrap();
        ensure(h0 == (d + 1) * (d + 2) / 2, || format!("P2 d={d}: h0={h0}"))?;
        checked += 1;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{checked} classes in {:?}", start.elapsed()))
}

fn f1_dp1_cross_oracle() -> Outcome {
    let (f1, dp1) = (surface("hirzebruch:1"), surface("delpezzo:1"));
    let mut checked = 0;
    for a in 0..=10i64 {
        for b in 0..=10i64 {
            let c = DivisorClass::new(vec![a, b]).unwrap();
            if !is_nef(&f1, &c).unwrap() {
                continue;
            }
            // E -> e1, F -> h - e1
            let image = DivisorClass::new(vec![b, a - b]).unwrap();
            let exact = h0_exact(&f1, &c).unwrap();
            let certified = h0_certified(&dp1, &image).unwrap();
            ensure(certified == Some(exact), || {
                format!("({a},{b}): F1 {exact}, dP1 {certified:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} nef classes agree"))
}

fn hirzebruch_reproduction() -> Outcome {
    let mut checked = 0;
    let mut min_minus_lk = i64::MAX;
    for n in 0..=3i64 {
        let s = surface(&format!("hirzebruch:{n}"));
        for a in 1..=4 {
            for b in n * a + 1..=n * a + 8 {
                let l = DivisorClass::new(vec![a, b]).unwrap();
                ensure(is_ample(&s, &l).unwrap(), || format!("F_{n} ({a},{b}) not ample"))?;
                let minus_lk = -s.intersect(&l, &s.canonical).unwrap();
                ensure(minus_lk == 2 * b - a * n + 2 * a && minus_lk >= 4, || {
                    format!("F_{n} ({a},{b}): -LK={minus_lk}")
                })?;
                min_minus_lk = min_minus_lk.min(minus_lk);
                let cert = check_hirzebruch(&s, &l, &Assumptions::none()).unwrap();
                ensure(cert.verdict == Verdict::HStable, || {
                    format!("F_{n} ({a},{b}): {:?}", cert.blocking())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} ample classes HStable, min -LK = {min_minus_lk}"))
}

/// Every class in the box with `|c| <= 4`. A class with a positive `e_i`
/// coefficient has `L.e_i < 0`, so only non-positive `e` coefficients can
/// be generated; the rest of the box is skipped without evaluation.
fn delpezzo_antik_reproduction() -> Outcome {
    let mut certified = 0usize;
    let mut visited = 0usize;
    for r in 1..=8usize {
        let s = surface(&format!("delpezzo:{r}"));
        for index in 0..5usize.pow(r as u32) {
            let mut rest = index;
            let mut coords = vec![0i64; r + 1];
            for c in coords.iter_mut().skip(1) {
                *c = -((rest % 5) as i64);
                rest /= 5;
            }
            for a in -4..=4i64 {
                visited += 1;
                coords[0] = a;
                let l = s.class(&coords).unwrap();
                if is_globally_generated(&s, &l).unwrap() != Truth::Yes
                    || has_irreducible_member(&s, &l, &BTreeSet::new()) == MemberStatus::Unknown
                {
                    continue;
                }
                let l2 = s.self_intersect(&l).unwrap();
                let lk = s.intersect(&l, &s.canonical).unwrap();
                let h0 = h0_certified(&s, &l).unwrap();
                ensure(h0 == Some(1 + (l2 - lk) / 2), || format!("dP{r} {l}: h0 {h0:?}"))?;
                ensure(-lk <= l2 + 2, || format!("dP{r} {l}: -LK={} > L^2+2", -lk))?;
                let cert = check_delpezzo_antik(&s, &l, &Assumptions::none()).unwrap();
                ensure(cert.is_stable() && cert.h == Polarization::ANTI_K, || {
                    format!("dP{r} {l}: {:?}", cert.blocking())
                })?;
                certified += 1;
            }
        }
    }
    Ok(format!("{certified} generated classes with members HStable ({visited} visited)"))
}

fn bound_desk_checks() -> Outcome {
    let cases: [(&str, &[i64], &[i64], &[i64], i64); 3] = [
        ("p2", &[1], &[0], &[1], 1),
        ("p2", &[1], &[-3], &[1], 4),
        ("hirzebruch:1", &[1, 2], &[0, 0], &[1, 2], 1),
    ];
    let mut found = Vec::new();
    for (name, l, d, h, want) in cases {
        let start = Instant::now();
        let s = surface(name);
        let search = bound_thm21(
            &s,
            &s.class(l).unwrap(),
            &s.class(d).unwrap(),
            &s.class(h).unwrap(),
            None,
            1000,
            &Assumptions::none(),
        )
        .map_err(|e| e.to_string())?;
        within(start.elapsed(), Duration::from_secs(1))?;
        let n = search.certificate.n;
        ensure(n == Some(want) && search.certificate.is_stable(), || {
            format!("{name} L={l:?} D={d:?}: n={n:?}, want {want}")
        })?;
        found.push(want);
    }
    Ok(format!("n = {found:?}"))
}

const BUILT_IN: [&str; 14] = [
    "p2",
    "hirzebruch:0",
    "hirzebruch:1",
    "hirzebruch:2",
    "hirzebruch:3",
    "delpezzo:0",
    "delpezzo:1",
    "delpezzo:2",
    "delpezzo:3",
    "delpezzo:4",
    "delpezzo:5",
    "delpezzo:6",
    "delpezzo:7",
    "delpezzo:8",
];

fn seeded() -> TestRng {
    TestRng::deterministic_rng(RngAlgorithm::ChaCha)
}

fn serre_symmetry() -> Outcome {
    for name in BUILT_IN {
        let s = surface(name);
        let mut runner = TestRunner::new_with_rng(Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        }, seeded());
        runner
            .run(&prop::collection::vec(-1000i64..=1000, s.rank()), |v| {
                let d = DivisorClass::new(v).unwrap();
                let dual = s.canonical.minus(&d).unwrap();
                prop_assert_eq!(chi(&s, &d).unwrap(), chi(&s, &dual).unwrap());
                Ok(())
            })
            .map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("1000 random classes on each of {} surfaces", BUILT_IN.len()))
}

fn certificate_integrity() -> Outcome {
    let criterion = prop::option::of(prop::sample::select(Criterion::ALL.to_vec()));
    let strategy = (
        prop::sample::select(BUILT_IN.to_vec()),
        prop::collection::vec(-4i64..=4, 9),
        prop::collection::vec(-3i64..=3, 9),
        0..3u8,
        criterion,
        prop::option::of(0i64..=3),
    );
    let mut runner = TestRunner::new_with_rng(Config {
        cases: 2000,
        failure_persistence: None,
        ..Config::default()
    }, seeded());
    let produced = Cell::new(0usize);
    let stable = Cell::new(0usize);
    runner
        .run(&strategy, |(name, lv, hv, hk, criterion, cliff)| {
            let s = surface(name);
            let l = DivisorClass::new(lv[..s.rank()].to_vec()).unwrap();
            let h = match hk {
                0 => Polarization::L,
                1 => Polarization::ANTI_K,
                _ => Polarization::Class(DivisorClass::new(hv[..s.rank()].to_vec()).unwrap()),
            };
            let mut asm = Assumptions::none();
            asm.cliff_bound = cliff;
            let Ok(cert) = check(&s, &l, &h, criterion, &asm) else {
                return Ok(());
            };
            produced.set(produced.get() + 1);
            let blocked = cert
                .hypotheses
                .iter()
                .any(|h| matches!(h.status, Status::Failed | Status::Unknown));
            prop_assert_eq!(cert.is_stable(), !blocked && !cert.hypotheses.is_empty());
            if cert.is_stable() {
                stable.set(stable.get() + 1);
            }
            let back = Certificate::from_json(&cert.to_json()).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert_eq!(back.to_json(), cert.to_json());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let (produced, stable) = (produced.get(), stable.get());
    ensure(stable > 0 && stable < produced, || {
        format!("degenerate sample: {stable} stable of {produced}")
    })?;
    Ok(format!("{produced} certificates ({stable} HStable) consistent and round-trip"))
}

fn curve_grid() -> Outcome {
    let status = |g: i64, d: i64| {
        curve_syzygy_semistability(&CurveRestriction::plain(g, d).unwrap())
            .unwrap()
            .status
    };
    for g in 0..=20i64 {
        let row: Vec<CurveStability> = (1..=60).map(|d| status(g, d)).collect();
        ensure(status(g, 2 * g + 1) == CurveStability::Stable, || {
            format!("(g={g}, d={}) not Stable", 2 * g + 1)
        })?;
        // semistability never lapses as d grows
        for (i, w) in row.windows(2).enumerate() {
            let d = i as i64 + 1;
            ensure(!w[0].is_semistable() || w[1].is_semistable(), || {
                format!("g={g}: semistable at d={d}, not at d={}", d + 1)
            })?;
        }
        if g >= 1 {
            ensure((2 * g + 1..=60).all(|d| status(g, d) == CurveStability::Stable), || {
                format!("g={g}: not Stable for some d > 2g")
            })?;
            ensure(status(g, 2 * g).is_semistable(), || format!("(g={g}, 2g) not semistable"))?;
            ensure(row.windows(2).all(|w| w[0] <= w[1]), || {
                format!("g={g}: status decreases with degree")
            })?;
        }
        if g >= 2 {
            ensure(status(g, 2 * g) == CurveStability::Semistable, || {
                format!("(g={g}, 2g) not Semistable")
            })?;
        }
    }
    // g = 0: M = O(-1)^d, stable only in rank one
    ensure(
        status(0, 1) == CurveStability::Stable
            && (2..=60).all(|d| status(0, d) == CurveStability::Semistable),
        || "g=0 row does not match O(-1)^d".into(),
    )?;
    Ok("g <= 20, d <= 60; (g,2g+1) Stable, (g,2g) semistable; ordered for g >= 1".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("(-1)-curve counts and numerics, r = 1..8", minus_one_counts),
        ("Riemann-Roch equals section count on F_n and P2", riemann_roch_vs_counting),
        ("h0 on F_1 equals certified h0 on dP_1", f1_dp1_cross_oracle),
        ("ample classes on F_n: -LK >= 4 and HStable", hirzebruch_reproduction),
        ("dP_r, H = -K: rank, adjunction bound, HStable", delpezzo_antik_reproduction),
        ("effective bound desk checks", bound_desk_checks),
        ("chi(D) = chi(K - D)", serre_symmetry),
        ("certificate integrity and JSON round-trip", certificate_integrity),
        ("curve rule-base grid", curve_grid),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
