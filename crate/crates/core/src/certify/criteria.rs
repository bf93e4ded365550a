//! One function per stability criterion. Each evaluates the criterion's
//! hypotheses with exact numbers and never short-circuits to a verdict:
//! the verdict is always derived from the hypothesis list.

use num_rational::Ratio;

use super::{
    asserted_or_unknown, format_ratio, hyp_ample, hyp_generated, hyp_member, hyp_regular,
    line_data, line_numbers, resolve_polarization, syzygy_slope, Assumptions, Certificate,
    Criterion, Hypothesis, LineBundleData, Polarization, Status,
};
use crate::cohomology::{h0_certified, h1_vanishing};
use crate::curves::{
    curve_h0_nonspecial, curve_syzygy_semistability, genus_from_numbers, max_clifford,
    CurveRestriction, CurveRule,
};
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::{is_ample, Assertion, Family, SurfaceModel, Truth};

fn genus_hypothesis(id: &str, c2: i64, ck: i64) -> (Hypothesis, Option<i64>) {
    match genus_from_numbers(c2, ck) {
        Ok(g) => (
            Hypothesis::new(
                format!("{id}-genus"),
                format!("members of |{id}| have genus g = 1 + ({id}^2 + {id}.K)/2 >= 0"),
                Status::Verified,
                format!("{id}^2={c2}, {id}.K={ck}, g={g}"),
            ),
            Some(g),
        ),
        Err(e) => (
            Hypothesis::new(
                format!("{id}-genus"),
                format!("members of |{id}| have non-negative genus"),
                Status::Failed,
                format!("{id}^2={c2}, {id}.K={ck}: {e}"),
            ),
            None,
        ),
    }
}

/// Sufficient criterion for `H`-stability via the restriction to a
/// nonsingular `C ∈ |H|`: `h¹(L - H) = 0`, `h⁰(H) >= h⁰(L|_C)`, and
/// `M_{L|C}` semistable.
pub fn check_thm32(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &Polarization,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let hc = resolve_polarization(surface, l, h)?;
    let same = hc == *l;
    let mut hyps = vec![
        hyp_ample(surface, l, assumptions, "L")?,
        hyp_generated(surface, l, assumptions, "L")?,
        hyp_member(surface, &hc, assumptions, "H")?,
    ];
    let (h2, hk) = line_numbers(surface, &hc)?;
    let (genus_hyp, genus) = genus_hypothesis("H", h2, hk);
    hyps.push(genus_hyp);

    // (1) h^1(L - H) = 0
    let statement = "h^1(L - H) = 0";
    hyps.push(if same {
        let status = if surface.q == 0 {
            Status::Verified
        } else {
            Status::Failed
        };
        Hypothesis::new("h1-vanishing", statement, status, format!("L - H = 0, h^1(O) = q = {}", surface.q))
    } else {
        let diff = l.minus(&hc)?;
        let (truth, rule) = h1_vanishing(surface, &diff)?;
        let status = match truth {
            Truth::Yes => Status::Verified,
            Truth::No => Status::Failed,
            Truth::Unknown => Status::Unknown,
        };
        Hypothesis::new(
            "h1-vanishing",
            statement,
            status,
            format!("L - H = {diff}; rule {rule:?}"),
        )
    });

    let degree = line_restricted_degree(surface, l, &hc)?;
    // (2) h^0(H) >= h^0(L|_C)
    let statement = "h^0(H) >= h^0(L|_C)";
    hyps.push(match genus {
        _ if same && surface.q == 0 => Hypothesis::new(
            "sections",
            statement,
            Status::Verified,
            "H = L and q = 0: h^0(L) = h^0(L|_C) + 1",
        ),
        None => Hypothesis::new("sections", statement, Status::Unknown, "genus unavailable"),
        Some(g) => {
            let curve = curve_h0_nonspecial(g, degree);
            let global = if surface.is_numeric() {
                None
            } else {
                h0_certified(surface, &hc)?
            };
            match (global, curve) {
                (Some(a), Some(b)) => Hypothesis::new(
                    "sections",
                    statement,
                    if a >= b { Status::Verified } else { Status::Failed },
                    format!("h^0(H)={a}, h^0(L|_C)={b} (deg={degree}, g={g})"),
                ),
                (a, b) => Hypothesis::new(
                    "sections",
                    statement,
                    Status::Unknown,
                    format!(
                        "h^0(H)={}, h^0(L|_C)={} (deg={degree}, g={g})",
                        fmt_opt(a),
                        fmt_opt(b)
                    ),
                ),
            }
        }
    });

    // (3) M_{L|C} semistable
    hyps.push(match genus {
        Some(g) => curve_hypothesis(g, degree, assumptions),
        None => Hypothesis::new(
            "curve-semistable",
            "M_{L|C} is semistable",
            Status::Unknown,
            "genus unavailable",
        ),
    });

    Ok(Certificate::new(
        Criterion::Thm32,
        surface.descriptor(),
        line_data(surface, l),
        h.clone(),
        hyps,
        None,
    ))
}

fn line_restricted_degree(surface: &SurfaceModel, l: &DivisorClass, h: &DivisorClass) -> Result<i64> {
    if surface.is_numeric() && l.rank() == 0 {
        return line_numbers(surface, l).map(|(l2, _)| l2);
    }
    surface.intersect(l, h)
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "unknown".to_string(), |v| v.to_string())
}

fn curve_hypothesis(genus: i64, degree: i64, assumptions: &Assumptions) -> Hypothesis {
    let statement = "M_{L|C} is semistable";
    let data = match CurveRestriction::new(
        genus,
        degree,
        assumptions.cliff_bound,
        assumptions.curve_flags(),
    ) {
        Ok(d) => d,
        Err(e) => {
            return Hypothesis::new("curve-semistable", statement, Status::Failed, e.to_string())
        }
    };
    match curve_syzygy_semistability(&data) {
        Ok(v) => {
            let status = match (v.status.is_semistable(), v.rule) {
                (false, _) => Status::Unknown,
                (true, CurveRule::BrillNoetherGeneral | CurveRule::CliffordBound) => {
                    Status::Asserted
                }
                (true, _) => Status::Verified,
            };
            Hypothesis::new(
                "curve-semistable",
                statement,
                status,
                format!("{:?} by rule {}: {}", v.status, v.rule, v.reason),
            )
        }
        Err(e) => Hypothesis::new("curve-semistable", statement, Status::Failed, e.to_string()),
    }
}

/// `L`-stability when `|L|` has a member of genus at most one or a
/// Brill–Noether general member.
pub fn check_cor33(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let mut hyps = vec![
        hyp_regular(surface),
        hyp_ample(surface, l, assumptions, "L")?,
        hyp_generated(surface, l, assumptions, "L")?,
        hyp_member(surface, l, assumptions, "L")?,
    ];
    let (l2, lk) = line_numbers(surface, l)?;
    let (genus_hyp, genus) = genus_hypothesis("L", l2, lk);
    hyps.push(genus_hyp);
    if let Some(g) = genus {
        let statement = "g(C) <= 1 or C is Brill-Noether general";
        hyps.push(if g <= 1 {
            Hypothesis::new("low-genus-or-bn", statement, Status::Verified, format!("g={g} <= 1"))
        } else if assumptions.flags.contains(&Assertion::BnGeneral) {
            Hypothesis::new(
                "low-genus-or-bn",
                statement,
                Status::Asserted,
                format!("g={g}; Brill-Noether generality asserted"),
            )
        } else {
            Hypothesis::new(
                "low-genus-or-bn",
                statement,
                Status::Unknown,
                format!("g={g} > 1 and bn-general not asserted"),
            )
        });
    }
    Ok(Certificate::new(
        Criterion::Cor33,
        surface.descriptor(),
        line_data(surface, l),
        Polarization::L,
        hyps,
        None,
    ))
}

/// The degree branch shared by the `-L.K` criteria: `deg L|_C = L²` against
/// `2g - cliff`, with the low-genus fallback.
fn anticanonical_degree_branch(
    l2: i64,
    lk: i64,
    genus: i64,
    assumptions: &Assumptions,
) -> Hypothesis {
    let minus_lk = -lk;
    let statement = "deg L|_C = L^2 >= 2g - cliff(C) (branch on -L.K)";
    let base = format!("L^2={l2}, -L.K={minus_lk}, g={genus}");
    if minus_lk >= 2 {
        return Hypothesis::new(
            "degree-branch",
            statement,
            Status::Verified,
            format!("{base}; -L.K >= 2 gives L^2 = 2g - 2 - L.K >= 2g = {}", 2 * genus),
        );
    }
    let needed = match minus_lk {
        1 => Some(1),
        0 => Some(2),
        _ => None,
    };
    if let (Some(needed), Some(cliff)) = (needed, assumptions.cliff_bound) {
        let max = max_clifford(genus);
        if cliff < 0 || cliff > max {
            return Hypothesis::new(
                "degree-branch",
                statement,
                Status::Failed,
                format!("{base}; inconsistent assertion: cliff >= {cliff} but cliff <= {max} in genus {genus}"),
            );
        }
        if cliff >= needed {
            return Hypothesis::new(
                "degree-branch",
                statement,
                Status::Asserted,
                format!(
                    "{base}; cliff >= {cliff} >= {needed}: L^2 = {l2} >= 2g - cliff = {}",
                    2 * genus - cliff
                ),
            );
        }
    }
    if genus <= 1 {
        return Hypothesis::new(
            "degree-branch",
            statement,
            Status::Verified,
            format!("{base}; genus <= 1 fallback"),
        );
    }
    let need = match needed {
        Some(n) => format!("cliff(C) >= {n} required"),
        None => "-L.K < 0: no branch applies".to_string(),
    };
    Hypothesis::new(
        "degree-branch",
        statement,
        Status::Unknown,
        format!("{base}; {need}"),
    )
}

/// `L`-stability on regular surfaces from the sign of `-L.K`.
pub fn check_prop34(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let mut hyps = vec![
        hyp_regular(surface),
        hyp_ample(surface, l, assumptions, "L")?,
        hyp_generated(surface, l, assumptions, "L")?,
        hyp_member(surface, l, assumptions, "L")?,
    ];
    let (l2, lk) = line_numbers(surface, l)?;
    let (genus_hyp, genus) = genus_hypothesis("L", l2, lk);
    hyps.push(genus_hyp);
    if let Some(g) = genus {
        hyps.push(anticanonical_degree_branch(l2, lk, g, assumptions));
    }
    Ok(Certificate::new(
        Criterion::Prop34,
        surface.descriptor(),
        line_data(surface, l),
        Polarization::L,
        hyps,
        None,
    ))
}

fn require_family(surface: &SurfaceModel, op: &'static str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported {
            op,
            family: surface.family.to_string(),
        })
    }
}

/// Every ample class on a Hirzebruch surface: `-L.K = 2b - an + 2a >= 2`.
pub fn check_hirzebruch(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let Family::Hirzebruch(n) = surface.family else {
        return Err(Error::Unsupported {
            op: "check_hirzebruch",
            family: surface.family.to_string(),
        });
    };
    let l = surface.class(l.coords())?;
    let (a, b, n) = (l.coords()[0], l.coords()[1], i64::from(n));
    let ample = is_ample(surface, &l)?;
    let mut hyps = vec![
        hyp_regular(surface),
        Hypothesis::new(
            "L-ample",
            "L = aC_n + bF is ample (a > 0, b > na)",
            if ample { Status::Verified } else { Status::Failed },
            format!("a={a}, b={b}, n={n}, na={}", n * a),
        ),
        hyp_generated(surface, &l, assumptions, "L")?,
        hyp_member(surface, &l, assumptions, "L")?,
    ];
    let (l2, lk) = line_numbers(surface, &l)?;
    let closed_form = 2 * b - a * n + 2 * a;
    debug_assert_eq!(closed_form, -lk);
    let minus_lk = -lk;
    hyps.push(Hypothesis::new(
        "minus-LK",
        "-L.K = 2b - an + 2a >= 2",
        if minus_lk >= 2 { Status::Verified } else { Status::Failed },
        format!(
            "-L.K={minus_lk} (lattice) = 2b-an+2a={closed_form}; minimum over ample classes is n+4 >= 4, so -L.K > 3 as well"
        ),
    ));
    let (genus_hyp, genus) = genus_hypothesis("L", l2, lk);
    hyps.push(genus_hyp);
    if let Some(g) = genus {
        hyps.push(anticanonical_degree_branch(l2, lk, g, assumptions));
    }
    Ok(Certificate::new(
        Criterion::Cor36,
        surface.descriptor(),
        LineBundleData::Class(l),
        Polarization::L,
        hyps,
        None,
    ))
}

/// `L`-stability for ample generated `L` with an irreducible member on a
/// del Pezzo surface.
pub fn check_delpezzo_l(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    require_family(
        surface,
        "check_delpezzo_L",
        matches!(surface.family, Family::DelPezzo(_)),
    )?;
    let l = surface.class(l.coords())?;
    let mut hyps = vec![
        hyp_regular(surface),
        hyp_ample(surface, &l, assumptions, "L")?,
        hyp_generated(surface, &l, assumptions, "L")?,
        hyp_member(surface, &l, assumptions, "L")?,
    ];
    let (l2, lk) = line_numbers(surface, &l)?;
    let (genus_hyp, genus) = genus_hypothesis("L", l2, lk);
    hyps.push(genus_hyp);
    if let Some(g) = genus {
        hyps.push(if g <= 1 {
            Hypothesis::new(
                "route",
                "g(C) <= 1 (low-genus route) or -L.K >= 2",
                Status::Verified,
                format!("g={g} <= 1"),
            )
        } else {
            Hypothesis::new(
                "route",
                "g(C) <= 1 (low-genus route) or -L.K >= 2",
                if -lk >= 2 { Status::Verified } else { Status::Failed },
                format!("g={g}, -L.K={}", -lk),
            )
        });
    }
    Ok(Certificate::new(
        Criterion::Cor35,
        surface.descriptor(),
        LineBundleData::Class(l),
        Polarization::L,
        hyps,
        None,
    ))
}

/// `L`-stability on a surface with numerically trivial canonical class
/// (Enriques surfaces), given a Clifford bound `cliff(C) >= 2`.
pub fn check_enriques(surface: &SurfaceModel, assumptions: &Assumptions) -> Result<Certificate> {
    let Some(data) = &surface.numeric else {
        return Err(Error::Unsupported {
            op: "check_enriques",
            family: surface.family.to_string(),
        });
    };
    let l = DivisorClass::zero(0);
    let flags = assumptions.effective(surface);
    let mut hyps = vec![
        if flags.contains(&Assertion::KNumericallyTrivial) {
            Hypothesis::new("K-trivial", "K_X is numerically trivial", Status::Asserted, "asserted")
        } else {
            Hypothesis::new(
                "K-trivial",
                "K_X is numerically trivial",
                Status::Unknown,
                "not asserted (use Ktriv=1)",
            )
        },
        Hypothesis::new(
            "K-numbers",
            "L.K = 0 and K^2 = 0",
            if data.lk == 0 && data.k2 == 0 { Status::Verified } else { Status::Failed },
            format!("L.K={}, K^2={}", data.lk, data.k2),
        ),
        hyp_regular(surface),
        asserted_or_unknown("L-ample", "L is ample", flags.contains(&Assertion::Ample)),
        asserted_or_unknown(
            "L-generated",
            "L is globally generated",
            flags.contains(&Assertion::Generated),
        ),
        asserted_or_unknown(
            "L-member",
            "|L| contains an irreducible nonsingular curve",
            flags.contains(&Assertion::IrreducibleMember),
        ),
    ];
    let (genus_hyp, genus) = genus_hypothesis("L", data.l2, data.lk);
    hyps.push(genus_hyp);
    if let Some(g) = genus {
        let statement = "cliff(C) >= 2, so deg L|_C = L^2 = 2g - 2 >= 2g - cliff(C)";
        let max = max_clifford(g);
        hyps.push(match assumptions.cliff_bound {
            None => Hypothesis::new("clifford", statement, Status::Unknown, "no Clifford bound given"),
            Some(c) if c < 0 || c > max => Hypothesis::new(
                "clifford",
                statement,
                Status::Failed,
                format!("inconsistent assertion: cliff >= {c} but cliff <= {max} in genus {g}"),
            ),
            Some(c) if c >= 2 => Hypothesis::new(
                "clifford",
                statement,
                Status::Asserted,
                format!(
                    "g={g}, deg={} >= 2g - cliff = {}",
                    data.l2,
                    2 * g - c
                ),
            ),
            Some(c) => Hypothesis::new(
                "clifford",
                statement,
                Status::Unknown,
                format!("cliff >= {c} is below the required 2"),
            ),
        });
    }
    Ok(Certificate::new(
        Criterion::Cor37,
        surface.descriptor(),
        line_data(surface, &l),
        Polarization::L,
        hyps,
        None,
    ))
}

/// `-K`-stability of `M_L` on a del Pezzo surface for generated `L` with an
/// irreducible member.
pub fn check_delpezzo_antik(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    require_family(
        surface,
        "check_delpezzo_antiK",
        matches!(surface.family, Family::DelPezzo(_)),
    )?;
    let l = surface.class(l.coords())?;
    let mut hyps = vec![
        hyp_generated(surface, &l, assumptions, "L")?,
        hyp_member(surface, &l, assumptions, "L")?,
    ];
    let (l2, lk) = line_numbers(surface, &l)?;
    let twice_rank = l2 - lk;
    let rank = twice_rank / 2;
    let h0 = h0_certified(surface, &l)?;
    let rank_ok = twice_rank >= 2 && twice_rank % 2 == 0 && h0.is_none_or(|h| h - 1 == rank);
    hyps.push(Hypothesis::new(
        "rank",
        "rank M_L = (L^2 - L.K)/2 >= 1",
        if rank_ok { Status::Verified } else { Status::Failed },
        format!("L^2={l2}, L.K={lk}, rank={rank}, h^0(L)={}", fmt_opt(h0)),
    ));
    hyps.push(Hypothesis::new(
        "adjunction",
        "-L.K <= L^2 + 2 (genus of the member is >= 0)",
        if -lk <= l2 + 2 { Status::Verified } else { Status::Failed },
        format!("-L.K={} <= L^2+2={}", -lk, l2 + 2),
    ));
    if twice_rank > 0 {
        let dual_slope = Ratio::new(-2 * lk, twice_rank);
        let gap = Ratio::from(1) + Ratio::new(2, twice_rank);
        let mut evidence = format!(
            "mu(M_L^dual) = -2LK/(L^2-LK) = {} <= 1 + 2/(L^2-LK) = {} < mu(F) for every quotient F",
            format_ratio(&dual_slope),
            format_ratio(&gap)
        );
        if h0.is_some_and(|h| h >= 2) {
            if let Some(stats) = syzygy_slope(surface, &l, &surface.anticanonical())? {
                evidence.push_str(&format!("; mu_(-K)(M_L) = {}", format_ratio(&stats.slope)));
            }
        }
        hyps.push(Hypothesis::new(
            "slope-gap",
            "mu(M_L^dual) <= 1 + 2/(L^2 - L.K)",
            if dual_slope <= gap { Status::Verified } else { Status::Failed },
            evidence,
        ));
    }
    Ok(Certificate::new(
        Criterion::Thm37,
        surface.descriptor(),
        LineBundleData::Class(l),
        Polarization::ANTI_K,
        hyps,
        None,
    ))
}
