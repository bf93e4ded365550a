//! Restriction of a line bundle to a member `C` of a linear system, and the
//! rule base deciding (semi)stability of the restricted syzygy bundle
//! `M_{L|C}` on the curve.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::SurfaceModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveFlag {
    BnGeneral,
    Nonhyperelliptic,
    IsCanonical,
}

/// Numerical data of `L|_C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRestriction {
    genus: i64,
    degree: i64,
    cliff_lower_bound: Option<i64>,
    flags: BTreeSet<CurveFlag>,
}

/// Largest Clifford index a curve of genus `g` can have.
pub fn max_clifford(genus: i64) -> i64 {
    if genus >= 1 {
        (genus - 1) / 2
    } else {
        0
    }
}

impl CurveRestriction {
    pub fn new(
        genus: i64,
        degree: i64,
        cliff_lower_bound: Option<i64>,
        flags: BTreeSet<CurveFlag>,
    ) -> Result<Self> {
        if genus < 0 {
            return Err(Error::NegativeGenus(genus));
        }
        if let Some(bound) = cliff_lower_bound {
            let max = max_clifford(genus);
            if bound < 0 || bound > max {
                return Err(Error::InconsistentClifford { bound, genus, max });
            }
        }
        if flags.contains(&CurveFlag::IsCanonical) && degree != 2 * genus - 2 {
            return Err(Error::InvalidParameter(format!(
                "canonical restriction on genus {genus} must have degree {}, got {degree}",
                2 * genus - 2
            )));
        }
        Ok(CurveRestriction {
            genus,
            degree,
            cliff_lower_bound,
            flags,
        })
    }

    pub fn plain(genus: i64, degree: i64) -> Result<Self> {
        Self::new(genus, degree, None, BTreeSet::new())
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn cliff_lower_bound(&self) -> Option<i64> {
        self.cliff_lower_bound
    }

    pub fn flags(&self) -> &BTreeSet<CurveFlag> {
        &self.flags
    }

    /// `h⁰(L|_C)` by Riemann–Roch, available when `deg >= 2g - 1`.
    pub fn h0(&self) -> Option<i64> {
        curve_h0_nonspecial(self.genus, self.degree)
    }
}

pub fn curve_h0_nonspecial(genus: i64, degree: i64) -> Option<i64> {
    (degree >= 2 * genus - 1).then(|| degree - genus + 1)
}

/// Ordered `Unknown < Semistable < Stable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CurveStability {
    Unknown,
    Semistable,
    Stable,
}

impl CurveStability {
    pub fn is_semistable(self) -> bool {
        self >= CurveStability::Semistable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveRule {
    RationalSplitting,
    Elliptic,
    DegreeAboveTwiceGenus,
    DegreeTwiceGenus,
    Canonical,
    CliffordBound,
    BrillNoetherGeneral,
    NoRule,
}

impl fmt::Display for CurveRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveRule::RationalSplitting => "rational-splitting",
            CurveRule::Elliptic => "elliptic",
            CurveRule::DegreeAboveTwiceGenus => "deg>2g",
            CurveRule::DegreeTwiceGenus => "deg=2g",
            CurveRule::Canonical => "canonical",
            CurveRule::CliffordBound => "deg>=2g-cliff",
            CurveRule::BrillNoetherGeneral => "bn-general",
            CurveRule::NoRule => "none",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveVerdict {
    pub status: CurveStability,
    pub rule: CurveRule,
    pub reason: String,
}

fn verdict(status: CurveStability, rule: CurveRule, reason: String) -> CurveVerdict {
    CurveVerdict {
        status,
        rule,
        reason,
    }
}

/// First matching rule wins. Rank-one bundles are reported `Stable`.
pub fn curve_syzygy_semistability(data: &CurveRestriction) -> Result<CurveVerdict> {
    use CurveStability::*;
    let (g, d) = (data.genus, data.degree);
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    if g == 0 {
        // M is a sum of d copies of O(-1)
        let status = if d == 1 { Stable } else { Semistable };
        return Ok(verdict(
            status,
            CurveRule::RationalSplitting,
            format!("g=0: M = O(-1)^{d}"),
        ));
    }
    if g == 1 && d >= 2 {
        return Ok(verdict(
            Stable,
            CurveRule::Elliptic,
            format!("g=1, d={d} >= 2"),
        ));
    }
    if d > 2 * g {
        return Ok(verdict(
            Stable,
            CurveRule::DegreeAboveTwiceGenus,
            format!("d={d} > 2g={}", 2 * g),
        ));
    }
    if d == 2 * g {
        return Ok(verdict(
            Semistable,
            CurveRule::DegreeTwiceGenus,
            format!("d={d} = 2g"),
        ));
    }
    if data.flags.contains(&CurveFlag::IsCanonical) {
        let status = if data.flags.contains(&CurveFlag::Nonhyperelliptic) {
            Stable
        } else {
            Semistable
        };
        return Ok(verdict(
            status,
            CurveRule::Canonical,
            format!("canonical restriction, g={g}"),
        ));
    }
    if let Some(cliff) = data.cliff_lower_bound {
        if d >= 2 * g - cliff {
            return Ok(verdict(
                Semistable,
                CurveRule::CliffordBound,
                format!("d={d} >= 2g-cliff={}", 2 * g - cliff),
            ));
        }
    }
    if data.flags.contains(&CurveFlag::BnGeneral) {
        return Ok(verdict(
            Semistable,
            CurveRule::BrillNoetherGeneral,
            format!("general curve of genus {g} (asserted)"),
        ));
    }
    Ok(verdict(
        Unknown,
        CurveRule::NoRule,
        format!("no rule applies to g={g}, d={d}"),
    ))
}

/// Arithmetic genus `1 + (C² + C.K)/2` of a member of `|C|`.
pub fn genus_of_member(surface: &SurfaceModel, c: &DivisorClass) -> Result<i64> {
    let (c2, ck) = match &surface.numeric {
        Some(data) if c.rank() == 0 => (data.l2, data.lk),
        _ => (
            surface.self_intersect(c)?,
            surface.intersect(c, &surface.canonical)?,
        ),
    };
    genus_from_numbers(c2, ck)
}

pub fn genus_from_numbers(c2: i64, ck: i64) -> Result<i64> {
    let s = c2 + ck;
    if s.rem_euclid(2) != 0 {
        return Err(Error::Parity(s));
    }
    let g = 1 + s / 2;
    if g < 0 {
        return Err(Error::NegativeGenus(g));
    }
    Ok(g)
}

pub fn restricted_degree(
    surface: &SurfaceModel,
    l: &DivisorClass,
    c: &DivisorClass,
) -> Result<i64> {
    surface.intersect(l, c)
}
