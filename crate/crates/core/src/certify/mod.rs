//! Certificate-producing stability criteria for syzygy bundles `M_L`, the
//! slope arithmetic they rely on, and the effective search for `n` such
//! that `M_{nL+D}` is `H`-stable.

mod auto;
mod bound;
mod certificate;
mod criteria;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub use auto::{applicable_criteria, check, check_auto};
pub use bound::{bound_thm21, BoundSearch, ConditionTrace};
pub use certificate::{
    Certificate, Criterion, Hypothesis, LineBundleData, NamedPolarization, Polarization, Status,
    Verdict,
};
pub use criteria::{
    check_cor33, check_delpezzo_antik, check_delpezzo_l, check_enriques, check_hirzebruch,
    check_prop34, check_thm32,
};

use crate::cohomology::h0_certified;
use crate::curves::CurveFlag;
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::{
    has_irreducible_member, is_ample, is_globally_generated, Assertion, MemberStatus,
    SurfaceModel, Truth,
};

/// User assertions and the optional Clifford-index lower bound for the
/// curve member used by a criterion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assumptions {
    pub flags: BTreeSet<Assertion>,
    pub cliff_bound: Option<i64>,
}

impl Assumptions {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with(flags: impl IntoIterator<Item = Assertion>) -> Self {
        Assumptions {
            flags: flags.into_iter().collect(),
            cliff_bound: None,
        }
    }

    pub fn cliff(mut self, bound: i64) -> Self {
        self.cliff_bound = Some(bound);
        self
    }

    /// Flags given here together with those carried by numeric surface data.
    pub fn effective(&self, surface: &SurfaceModel) -> BTreeSet<Assertion> {
        let mut all = self.flags.clone();
        if let Some(data) = &surface.numeric {
            all.extend(data.assertions.iter().copied());
        }
        all
    }

    fn asserts(&self, surface: &SurfaceModel, a: Assertion) -> bool {
        self.effective(surface).contains(&a)
    }

    fn curve_flags(&self) -> BTreeSet<CurveFlag> {
        let mut flags = BTreeSet::new();
        if self.flags.contains(&Assertion::BnGeneral) {
            flags.insert(CurveFlag::BnGeneral);
        }
        if self.flags.contains(&Assertion::Nonhyperelliptic) {
            flags.insert(CurveFlag::Nonhyperelliptic);
        }
        flags
    }
}

/// Rank, first Chern class and `H`-slope of the syzygy bundle `M_L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyzygyStats {
    pub rank: i64,
    pub c1: DivisorClass,
    pub slope_numerator: i64,
    #[serde(serialize_with = "serialize_ratio")]
    pub slope: Ratio<i64>,
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn serialize_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// `rank = h⁰(L) - 1`, `c₁ = -L`, `μ_H = -L.H / rank`. Returns `None` when
/// `h⁰(L)` cannot be certified.
pub fn syzygy_slope(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &DivisorClass,
) -> Result<Option<SyzygyStats>> {
    let Some(h0) = h0_certified(surface, l)? else {
        return Ok(None);
    };
    if h0 < 2 {
        return Err(Error::InvalidParameter(format!(
            "M_L needs h0(L) >= 2, got {h0}"
        )));
    }
    let rank = h0 - 1;
    let numerator = -surface.intersect(l, h)?;
    Ok(Some(SyzygyStats {
        rank,
        c1: l.negated(),
        slope_numerator: numerator,
        slope: Ratio::new(numerator, rank),
    }))
}

/// `(L², L.K)` from the lattice, or from numeric data when `L` has rank 0.
pub(crate) fn line_numbers(surface: &SurfaceModel, l: &DivisorClass) -> Result<(i64, i64)> {
    match &surface.numeric {
        Some(data) if l.rank() == 0 => Ok((data.l2, data.lk)),
        _ => Ok((
            surface.self_intersect(l)?,
            surface.intersect(l, &surface.canonical)?,
        )),
    }
}

pub(crate) fn line_data(surface: &SurfaceModel, l: &DivisorClass) -> LineBundleData {
    match &surface.numeric {
        Some(data) if l.rank() == 0 => LineBundleData::Numeric {
            l2: data.l2,
            lk: data.lk,
        },
        _ => LineBundleData::Class(l.clone()),
    }
}

/// Resolves `antiK`/`L` tags to a class on the surface.
pub fn resolve_polarization(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &Polarization,
) -> Result<DivisorClass> {
    match h {
        Polarization::Class(c) => surface.class(c.coords()),
        Polarization::Named(NamedPolarization::SameAsL) => Ok(l.clone()),
        Polarization::Named(NamedPolarization::AntiCanonical) => {
            if surface.is_numeric() {
                return Err(Error::Unsupported {
                    op: "antiK polarization",
                    family: surface.family.to_string(),
                });
            }
            Ok(surface.anticanonical())
        }
    }
}

// Shared hypotheses.

pub(crate) fn hyp_regular(surface: &SurfaceModel) -> Hypothesis {
    let status = if surface.q == 0 {
        Status::Verified
    } else {
        Status::Failed
    };
    Hypothesis::new("regular", "X is regular (q = 0)", status, format!("q={}", surface.q))
}

pub(crate) fn hyp_ample(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
    id: &str,
) -> Result<Hypothesis> {
    let statement = format!("{id} is ample");
    if surface.is_numeric() {
        return Ok(asserted_or_unknown(
            &format!("{id}-ample"),
            &statement,
            assumptions.asserts(surface, Assertion::Ample),
        ));
    }
    let min = min_ray_pairing(surface, l)?;
    let status = if is_ample(surface, l)? {
        Status::Verified
    } else {
        Status::Failed
    };
    Ok(Hypothesis::new(
        format!("{id}-ample"),
        statement,
        status,
        format!(
            "min {id}.R over {} curve-cone generators = {min}",
            surface.extremal_rays.len()
        ),
    ))
}

fn min_ray_pairing(surface: &SurfaceModel, l: &DivisorClass) -> Result<i64> {
    let mut min = i64::MAX;
    for ray in &surface.extremal_rays {
        min = min.min(surface.intersect(l, ray)?);
    }
    Ok(min)
}

pub(crate) fn hyp_generated(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
    id: &str,
) -> Result<Hypothesis> {
    let statement = format!("{id} is globally generated");
    let asserted = assumptions.asserts(surface, Assertion::Generated);
    if surface.is_numeric() {
        return Ok(asserted_or_unknown(&format!("{id}-generated"), &statement, asserted));
    }
    let anti_degree = surface.intersect(l, &surface.anticanonical())?;
    let (status, evidence) = match is_globally_generated(surface, l)? {
        Truth::Yes => (Status::Verified, format!("nef; {id}.(-K)={anti_degree}")),
        Truth::No => (Status::Failed, "not nef".to_string()),
        Truth::Unknown if asserted => (
            Status::Asserted,
            format!("nef with {id}.(-K)={anti_degree}; generation asserted"),
        ),
        Truth::Unknown => (
            Status::Unknown,
            format!("nef with {id}.(-K)={anti_degree} on a degree-1 del Pezzo"),
        ),
    };
    Ok(Hypothesis::new(format!("{id}-generated"), statement, status, evidence))
}

pub(crate) fn hyp_member(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assumptions: &Assumptions,
    id: &str,
) -> Result<Hypothesis> {
    let statement = format!("|{id}| contains an irreducible nonsingular curve");
    let hid = format!("{id}-member");
    let flags = assumptions.effective(surface);
    Ok(match has_irreducible_member(surface, l, &flags) {
        MemberStatus::Heuristic => {
            let sq = surface.self_intersect(l)?;
            Hypothesis::new(
                hid,
                statement,
                Status::Verified,
                format!("heuristic: {id} generated with {id}^2={sq} > 0 (Bertini)"),
            )
        }
        MemberStatus::Asserted => Hypothesis::new(hid, statement, Status::Asserted, "asserted"),
        MemberStatus::Unknown => Hypothesis::new(
            hid,
            statement,
            Status::Unknown,
            "not generated with positive square; assert irreducible-member",
        ),
    })
}

pub(crate) fn asserted_or_unknown(id: &str, statement: &str, asserted: bool) -> Hypothesis {
    if asserted {
        Hypothesis::new(id, statement, Status::Asserted, "asserted")
    } else {
        Hypothesis::new(id, statement, Status::Unknown, "not computable in numeric mode")
    }
}
