//! Effective search for `n` such that `M_{L_n}`, `L_n = nL + D`, is
//! `H`-stable.
//!
//! Fix a nonsingular `C ∈ |H'|`, `H' = mH`, of genus `g`. A destabilizing
//! subsheaf of `M_{L_n}` forces
//! `h⁰(H') - 1 + h⁰(L_n - H') < rk N_n <= h⁰(L_n|_C) - 1`
//! as soon as `h¹(L_n - H') = 0` and `M_{L_n|C}` is semistable. So
//! `M_{L_n}` is `H`-stable whenever
//!
//! * (a) `h¹(L_n - H') = 0`,
//! * (b) `L_n.H' >= 2g`,
//! * (c) `h⁰(H') >= 3`,
//! * (d) `h⁰(H') - 1 + h⁰(L_n - H') >= h⁰(L_n|_C) - 1`, with
//!   `h⁰(L_n|_C) = L_n.H' - g + 1` (non-special by (b)).

use super::{
    hyp_ample, hyp_member, line_data, Assumptions, Certificate, Criterion, Hypothesis,
    Polarization, Status,
};
use crate::cohomology::{h0_certified, h1_vanishing};
use crate::curves::genus_of_member;
use crate::error::Result;
use crate::lattice::DivisorClass;
use crate::surfaces::{
    has_irreducible_member, is_ample, is_globally_generated, MemberStatus, SurfaceModel, Truth,
};

/// Per-`n` record of the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionTrace {
    pub n: i64,
    pub ample_generated: bool,
    pub h1_vanishes: Option<bool>,
    pub degree_ok: Option<bool>,
    pub sections_ok: Option<bool>,
}

impl ConditionTrace {
    pub fn all_hold(&self) -> bool {
        self.ample_generated
            && self.h1_vanishes == Some(true)
            && self.degree_ok == Some(true)
            && self.sections_ok == Some(true)
    }

    fn blocking(&self) -> &'static str {
        if !self.ample_generated {
            "L_n not ample and generated"
        } else if self.h1_vanishes != Some(true) {
            "(a) h^1(L_n - H') = 0"
        } else if self.degree_ok != Some(true) {
            "(b) L_n.H' >= 2g"
        } else {
            "(d) section inequality"
        }
    }
}

/// Result of the search with every intermediate number kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSearch {
    pub certificate: Certificate,
    pub trace: Vec<ConditionTrace>,
}

/// Smallest `n <= n_max` for which conditions (a)–(d) certify `H`-stability
/// of `M_{nL+D}`. `m` defaults to 1 when `|H|` is known to contain an
/// irreducible member.
pub fn bound_thm21(
    surface: &SurfaceModel,
    l: &DivisorClass,
    d: &DivisorClass,
    h: &DivisorClass,
    m: Option<i64>,
    n_max: i64,
    assumptions: &Assumptions,
) -> Result<BoundSearch> {
    let polarization = Polarization::Class(h.clone());
    let finish = |hyps: Vec<Hypothesis>, n: Option<i64>, trace: Vec<ConditionTrace>| BoundSearch {
        certificate: Certificate::new(
            Criterion::Thm21,
            surface.descriptor(),
            line_data(surface, l),
            polarization.clone(),
            hyps,
            n,
        ),
        trace,
    };

    if surface.is_numeric() {
        let hyp = Hypothesis::new(
            "lattice",
            "cohomology of nL + D - H is computable",
            Status::Unknown,
            "numeric surfaces carry no lattice",
        );
        return Ok(finish(vec![hyp], None, Vec::new()));
    }
    let l = surface.class(l.coords())?;
    let d = surface.class(d.coords())?;
    let h = surface.class(h.coords())?;

    let mut hyps = vec![
        hyp_ample(surface, &l, assumptions, "L")?,
        hyp_ample(surface, &h, assumptions, "H")?,
    ];

    let flags = assumptions.effective(surface);
    let m = match m {
        Some(m) if m >= 1 => m,
        Some(m) => {
            hyps.push(Hypothesis::new(
                "multiple",
                "H' = mH with m >= 1",
                Status::Failed,
                format!("m={m}"),
            ));
            return Ok(finish(hyps, None, Vec::new()));
        }
        None => match has_irreducible_member(surface, &h, &flags) {
            MemberStatus::Heuristic | MemberStatus::Asserted => 1,
            MemberStatus::Unknown => {
                hyps.push(Hypothesis::new(
                    "multiple",
                    "H' = mH with an irreducible nonsingular member",
                    Status::Unknown,
                    "|H| not known to contain an irreducible curve; supply m",
                ));
                return Ok(finish(hyps, None, Vec::new()));
            }
        },
    };
    let hp = h.scaled(m)?;
    hyps.push(hyp_member(surface, &hp, assumptions, "H'")?);

    let genus = match genus_of_member(surface, &hp) {
        Ok(g) => g,
        Err(e) => {
            hyps.push(Hypothesis::new("H'-genus", "g(C) >= 0", Status::Failed, e.to_string()));
            return Ok(finish(hyps, None, Vec::new()));
        }
    };
    let h0_hp = h0_certified(surface, &hp)?;
    let (pencil_status, pencil_evidence) = match h0_hp {
        Some(v) if v >= 3 => (Status::Verified, format!("m={m}, h^0(H')={v}, g={genus}")),
        Some(v) => (Status::Failed, format!("m={m}, h^0(H')={v} < 3")),
        None => (Status::Unknown, format!("m={m}, h^0(H') not certified")),
    };
    hyps.push(Hypothesis::new(
        "c-pencil",
        "(c) h^0(H') >= 3, i.e. dim|H'| >= 2",
        pencil_status,
        pencil_evidence,
    ));
    let Some(h0_hp) = h0_hp.filter(|&v| v >= 3) else {
        return Ok(finish(hyps, None, Vec::new()));
    };

    let mut trace = Vec::new();
    let mut found: Option<(i64, String, String, String)> = None;
    for n in 1..=n_max {
        let ln = match l.scaled(n).and_then(|x| x.plus(&d)) {
            Ok(c) => c,
            Err(_) => break,
        };
        let mut t = ConditionTrace {
            n,
            ample_generated: false,
            h1_vanishes: None,
            degree_ok: None,
            sections_ok: None,
        };
        t.ample_generated =
            is_ample(surface, &ln)? && is_globally_generated(surface, &ln)? == Truth::Yes;
        let diff = ln.minus(&hp)?;
        let (h1, rule) = h1_vanishing(surface, &diff)?;
        t.h1_vanishes = match h1 {
            Truth::Yes => Some(true),
            Truth::No => Some(false),
            Truth::Unknown => None,
        };
        let degree = surface.intersect(&ln, &hp)?;
        t.degree_ok = Some(degree >= 2 * genus);
        let h0_diff = h0_certified(surface, &diff)?;
        let curve_h0 = degree - genus + 1;
        t.sections_ok = h0_diff.map(|v| h0_hp - 1 + v >= curve_h0 - 1);

        if t.all_hold() && found.is_none() {
            let h0_diff = h0_diff.unwrap_or_default();
            found = Some((
                n,
                format!("L_n - H' = {diff}, rule {rule:?}"),
                format!("L_n.H' = {degree} >= 2g = {}", 2 * genus),
                format!(
                    "h^0(H') - 1 + h^0(L_n - H') = {} - 1 + {h0_diff} = {} >= h^0(L_n|_C) - 1 = {}",
                    h0_hp,
                    h0_hp - 1 + h0_diff,
                    curve_h0 - 1
                ),
            ));
        }
        trace.push(t);
        if found.is_some() {
            break;
        }
    }

    let first = |f: &dyn Fn(&ConditionTrace) -> bool| {
        trace
            .iter()
            .find(|t| f(t))
            .map_or_else(|| "-".to_string(), |t| t.n.to_string())
    };
    let firsts = format!(
        "first n satisfying: ample+generated {}, (a) {}, (b) {}, (d) {}",
        first(&|t| t.ample_generated),
        first(&|t| t.h1_vanishes == Some(true)),
        first(&|t| t.degree_ok == Some(true)),
        first(&|t| t.sections_ok == Some(true)),
    );

    match found {
        Some((n, a, b, dd)) => {
            hyps.push(Hypothesis::new(
                "search",
                "smallest n <= n_max with L_n ample, generated and (a)-(d)",
                Status::Verified,
                format!("n={n}; {firsts}"),
            ));
            hyps.push(Hypothesis::new("a-vanishing", "(a) h^1(L_n - H') = 0", Status::Verified, a));
            hyps.push(Hypothesis::new("b-degree", "(b) L_n.H' >= 2g", Status::Verified, b));
            hyps.push(Hypothesis::new(
                "d-sections",
                "(d) h^0(H') - 1 + h^0(L_n - H') >= h^0(L_n|_C) - 1",
                Status::Verified,
                dd,
            ));
            Ok(finish(hyps, Some(n), trace))
        }
        None => {
            let last = trace
                .last()
                .map_or_else(|| "no n searched".to_string(), |t| format!("n={}: {}", t.n, t.blocking()));
            hyps.push(Hypothesis::new(
                "search",
                "smallest n <= n_max with L_n ample, generated and (a)-(d)",
                Status::Unknown,
                format!("none up to n_max={n_max}; last blocking {last}; {firsts}"),
            ));
            Ok(finish(hyps, None, trace))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::Verdict;

    fn surface(s: &str) -> SurfaceModel {
        s.parse().unwrap()
    }

    fn run(s: &SurfaceModel, l: &[i64], d: &[i64], h: &[i64]) -> BoundSearch {
        bound_thm21(
            s,
            &s.class(l).unwrap(),
            &s.class(d).unwrap(),
            &s.class(h).unwrap(),
            None,
            1000,
            &Assumptions::none(),
        )
        .unwrap()
    }

    #[test]
    fn plane_examples() {
        let p2 = surface("p2");
        assert_eq!(run(&p2, &[1], &[0], &[1]).certificate.n, Some(1));
        let r = run(&p2, &[1], &[-3], &[1]);
        assert_eq!(r.certificate.n, Some(4));
        assert!(r.certificate.is_stable());
        assert!(r
            .certificate
            .hypothesis("search")
            .unwrap()
            .evidence
            .contains("ample+generated 4"));
    }

    #[test]
    fn hirzebruch_example() {
        let f1 = surface("hirzebruch:1");
        let r = run(&f1, &[1, 2], &[0, 0], &[1, 2]);
        assert_eq!(r.certificate.n, Some(1));
        assert!(r
            .certificate
            .hypothesis("d-sections")
            .unwrap()
            .evidence
            .contains("5 - 1 + 1 = 5 >= h^0(L_n|_C) - 1 = 3"));
    }

    #[test]
    fn numeric_surface_is_inconclusive() {
        let s = surface("numeric:L2=10,LK=0,K2=0,chiO=1,q=0");
        let z = DivisorClass::zero(0);
        let r = bound_thm21(&s, &z, &z, &z, None, 10, &Assumptions::none()).unwrap();
        assert_eq!(r.certificate.verdict, Verdict::Inconclusive);
        assert_eq!(r.certificate.n, None);
    }

    #[test]
    fn search_exhaustion_reports_blocking_condition() {
        let p2 = surface("p2");
        let r = bound_thm21(
            &p2,
            &p2.class(&[1]).unwrap(),
            &p2.class(&[-30]).unwrap(),
            &p2.class(&[1]).unwrap(),
            None,
            5,
            &Assumptions::none(),
        )
        .unwrap();
        assert_eq!(r.certificate.n, None);
        let ev = &r.certificate.hypothesis("search").unwrap().evidence;
        assert!(ev.contains("n=5: L_n not ample and generated"), "{ev}");
    }

    #[test]
    fn pencil_condition_blocks_small_polarizations() {
        // H = F on F_1 is nef with h^0 = 2: m must be supplied, and m = 1 fails (c)
        let f1 = surface("hirzebruch:1");
        let r = bound_thm21(
            &f1,
            &f1.class(&[1, 2]).unwrap(),
            &f1.class(&[0, 0]).unwrap(),
            &f1.class(&[0, 1]).unwrap(),
            None,
            10,
            &Assumptions::none(),
        )
        .unwrap();
        assert_eq!(r.certificate.hypothesis("multiple").unwrap().status, Status::Unknown);
        let r = bound_thm21(
            &f1,
            &f1.class(&[1, 2]).unwrap(),
            &f1.class(&[0, 0]).unwrap(),
            &f1.class(&[0, 1]).unwrap(),
            Some(1),
            10,
            &Assumptions::none(),
        )
        .unwrap();
        assert_eq!(r.certificate.hypothesis("H-ample").unwrap().status, Status::Failed);
    }

    #[test]
    fn explicit_multiple() {
        let p2 = surface("p2");
        let r = bound_thm21(
            &p2,
            &p2.class(&[1]).unwrap(),
            &p2.class(&[0]).unwrap(),
            &p2.class(&[1]).unwrap(),
            Some(2),
            100,
            &Assumptions::none(),
        )
        .unwrap();
        // H' = 2h, g = 0: need (n-2)h with h^1 = 0 and 5 + h^0((n-2)h) >= n
        assert!(r.certificate.is_stable());
        assert_eq!(r.certificate.n, Some(1));
    }
}
