//! Euler characteristics by Riemann–Roch, exact section counts on the toric
//! families, and the vanishing rules used to certify `h¹ = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::{is_ample, is_nef, Family, NumericSurfaceData, SurfaceModel, Truth};

/// How a section count or vanishing statement was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    ExactFormula,
    ChiPlusVanishing,
    Unknown,
}

/// Which rule certified `h¹(D) = 0` (or refuted it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingRule {
    /// `h¹ = h⁰(D) + h⁰(K - D) - χ(D)` with both counts exact.
    ExactFormula,
    /// Nef classes on del Pezzo surfaces have no higher cohomology.
    DelPezzoNef,
    /// `D - K` ample.
    Kodaira,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub h0: Option<i64>,
    pub h1_zero: Truth,
    pub h2_zero: Truth,
    pub chi: i64,
    pub method: Method,
}

/// `χ(D) = χ(O) + D.(D - K)/2`.
pub fn chi(surface: &SurfaceModel, d: &DivisorClass) -> Result<i64> {
    if let Some(data) = &surface.numeric {
        if d.rank() == 0 {
            return chi_numeric(data);
        }
    }
    let d2 = surface.self_intersect(d)?;
    let dk = surface.intersect(d, &surface.canonical)?;
    riemann_roch(surface.chi_o, d2, dk)
}

/// Euler characteristic of the line bundle `L` recorded in numeric data.
pub fn chi_numeric(data: &NumericSurfaceData) -> Result<i64> {
    riemann_roch(data.chi_o, data.l2, data.lk)
}

fn riemann_roch(chi_o: i64, d2: i64, dk: i64) -> Result<i64> {
    let twice = d2 - dk;
    if twice.rem_euclid(2) != 0 {
        return Err(Error::Parity(d2 + dk));
    }
    Ok(chi_o + twice / 2)
}

/// Exact `h⁰` on `P²` and on Hirzebruch surfaces, where
/// `π_* O(aC_n + bF) = ⊕_{k=0..a} O(b - kn)`.
pub fn h0_exact(surface: &SurfaceModel, d: &DivisorClass) -> Result<i64> {
    match surface.family {
        Family::P2 => {
            let deg = surface.class(d.coords())?.coords()[0] as i128;
            if deg < 0 {
                return Ok(0);
            }
            narrow((deg + 1) * (deg + 2) / 2)
        }
        Family::Hirzebruch(n) => {
            let c = surface.class(d.coords())?;
            let (a, b, n) = (c.coords()[0], c.coords()[1] as i128, i128::from(n));
            if a < 0 {
                return Ok(0);
            }
            let mut total: i128 = 0;
            for k in 0..=a as i128 {
                let deg = b - k * n;
                if deg < 0 {
                    break;
                }
                total += deg + 1;
            }
            narrow(total)
        }
        other => Err(Error::Unsupported {
            op: "h0_exact",
            family: other.to_string(),
        }),
    }
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("section count"))
}

/// `h⁰` when it can be certified: exact on toric families, `χ` for nef
/// classes on del Pezzo surfaces.
pub fn h0_certified(surface: &SurfaceModel, d: &DivisorClass) -> Result<Option<i64>> {
    match surface.family {
        Family::P2 | Family::Hirzebruch(_) => h0_exact(surface, d).map(Some),
        Family::DelPezzo(_) => {
            if is_nef(surface, d)? {
                chi(surface, d).map(Some)
            } else {
                Ok(None)
            }
        }
        Family::Numeric => Ok(None),
    }
}

/// Decides `h¹(D) = 0` by the first applicable rule: exact toric formula,
/// then nef-on-del-Pezzo, then Kodaira vanishing for `D - K` ample.
pub fn h1_vanishing(surface: &SurfaceModel, d: &DivisorClass) -> Result<(Truth, VanishingRule)> {
    if surface.is_numeric() {
        return Ok((Truth::Unknown, VanishingRule::None));
    }
    match surface.family {
        Family::P2 | Family::Hirzebruch(_) => {
            let h0 = h0_exact(surface, d)?;
            let h2 = h0_exact(surface, &surface.canonical.minus(d)?)?;
            let h1 = h0 + h2 - chi(surface, d)?;
            debug_assert!(h1 >= 0);
            return Ok((Truth::from(h1 == 0), VanishingRule::ExactFormula));
        }
        Family::DelPezzo(_) if is_nef(surface, d)? => {
            return Ok((Truth::Yes, VanishingRule::DelPezzoNef));
        }
        _ => {}
    }
    if is_ample(surface, &d.minus(&surface.canonical)?)? {
        return Ok((Truth::Yes, VanishingRule::Kodaira));
    }
    Ok((Truth::Unknown, VanishingRule::None))
}

pub fn h1_is_zero(surface: &SurfaceModel, d: &DivisorClass) -> Result<Truth> {
    h1_vanishing(surface, d).map(|(t, _)| t)
}

/// Everything known about the cohomology of `O(D)`.
pub fn cohomology(surface: &SurfaceModel, d: &DivisorClass) -> Result<CohomologyResult> {
    let chi = chi(surface, d)?;
    if surface.is_numeric() {
        return Ok(CohomologyResult {
            h0: None,
            h1_zero: Truth::Unknown,
            h2_zero: Truth::Unknown,
            chi,
            method: Method::Unknown,
        });
    }
    let (h1_zero, rule) = h1_vanishing(surface, d)?;
    match surface.family {
        Family::P2 | Family::Hirzebruch(_) => {
            let h2 = h0_exact(surface, &surface.canonical.minus(d)?)?;
            Ok(CohomologyResult {
                h0: Some(h0_exact(surface, d)?),
                h1_zero,
                h2_zero: Truth::from(h2 == 0),
                chi,
                method: Method::ExactFormula,
            })
        }
        _ if rule == VanishingRule::DelPezzoNef => Ok(CohomologyResult {
            h0: Some(chi),
            h1_zero,
            h2_zero: Truth::Yes,
            chi,
            method: Method::ChiPlusVanishing,
        }),
        _ => Ok(CohomologyResult {
            h0: None,
            h1_zero,
            h2_zero: Truth::Unknown,
            chi,
            method: Method::Unknown,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::SurfaceModel;

    fn surface(s: &str) -> SurfaceModel {
        s.parse().unwrap()
    }

    fn class(s: &SurfaceModel, c: &[i64]) -> DivisorClass {
        s.class(c).unwrap()
    }

    #[test]
    fn euler_characteristic_examples() {
        let p2 = surface("p2");
        assert_eq!(chi(&p2, &class(&p2, &[2])).unwrap(), 6);
        let f2 = surface("hirzebruch:2");
        assert_eq!(chi(&f2, &class(&f2, &[1, 3])).unwrap(), 6);
        for s in ["p2", "hirzebruch:3", "delpezzo:5"] {
            let s = surface(s);
            assert_eq!(chi(&s, &DivisorClass::zero(s.rank())).unwrap(), s.chi_o);
        }
        let enriques = surface("numeric:L2=10,LK=0,K2=0,chiO=1,q=0");
        assert_eq!(chi(&enriques, &DivisorClass::zero(0)).unwrap(), 6);
    }

    #[test]
    fn exact_section_counts() {
        let p2 = surface("p2");
        assert_eq!(h0_exact(&p2, &class(&p2, &[3])).unwrap(), 10);
        assert_eq!(h0_exact(&p2, &class(&p2, &[-1])).unwrap(), 0);
        let f2 = surface("hirzebruch:2");
        assert_eq!(h0_exact(&f2, &class(&f2, &[1, 3])).unwrap(), 6);
        let f1 = surface("hirzebruch:1");
        assert_eq!(h0_exact(&f1, &class(&f1, &[-1, 0])).unwrap(), 0);
        // b < kn for large k: only the first summands contribute
        assert_eq!(h0_exact(&f2, &class(&f2, &[5, 3])).unwrap(), 4 + 2);
        assert!(h0_exact(&surface("delpezzo:2"), &DivisorClass::zero(3)).is_err());
    }

    #[test]
    fn certified_section_counts() {
        let dp6 = surface("delpezzo:6");
        assert_eq!(h0_certified(&dp6, &dp6.anticanonical()).unwrap(), Some(4));
        let dp1 = surface("delpezzo:1");
        assert_eq!(h0_certified(&dp1, &class(&dp1, &[1, -1])).unwrap(), Some(2));
        let dp8 = surface("delpezzo:8");
        let mut e1 = vec![0; 9];
        e1[1] = 1;
        assert_eq!(h0_certified(&dp8, &class(&dp8, &e1)).unwrap(), None);
    }

    #[test]
    fn vanishing_examples() {
        let p2 = surface("p2");
        for n in 1..30 {
            assert_eq!(h1_is_zero(&p2, &class(&p2, &[n - 1])).unwrap(), Truth::Yes);
        }
        let f1 = surface("hirzebruch:1");
        assert_eq!(
            h1_vanishing(&f1, &class(&f1, &[2, 3])).unwrap(),
            (Truth::Yes, VanishingRule::ExactFormula)
        );
        // -2F on F_1: h^0 = 0, h^2 = h^0(-2C - F) = 0, chi = 1 + (0 - 4)/2 = -1
        assert_eq!(h1_is_zero(&f1, &class(&f1, &[0, -2])).unwrap(), Truth::No);
        let numeric = surface("numeric:L2=10,LK=0,K2=0,chiO=1,q=0");
        assert_eq!(h1_is_zero(&numeric, &DivisorClass::zero(0)).unwrap(), Truth::Unknown);
    }

    #[test]
    fn kodaira_rule_on_del_pezzo() {
        // e1 - e2 on dP_2 is not nef, but e1 - e2 - K = 3h - 2e2 is not ample either
        let dp2 = surface("delpezzo:2");
        assert_eq!(
            h1_vanishing(&dp2, &class(&dp2, &[0, 1, -1])).unwrap(),
            (Truth::Unknown, VanishingRule::None)
        );
        // D = -e1 on dP_1 is not nef, and D - K = 3h - 2e1 is ample
        let dp1 = surface("delpezzo:1");
        let d = class(&dp1, &[0, -1]);
        assert!(!is_nef(&dp1, &d).unwrap());
        assert!(is_ample(&dp1, &d.minus(&dp1.canonical).unwrap()).unwrap());
        assert_eq!(
            h1_vanishing(&dp1, &d).unwrap(),
            (Truth::Yes, VanishingRule::Kodaira)
        );
    }

    #[test]
    fn cohomology_summary_is_consistent() {
        let f2 = surface("hirzebruch:2");
        let r = cohomology(&f2, &class(&f2, &[1, 3])).unwrap();
        assert_eq!(r.h0, Some(6));
        assert_eq!(r.chi, 6);
        assert_eq!(r.h1_zero, Truth::Yes);
        assert_eq!(r.h2_zero, Truth::Yes);
        assert_eq!(r.method, Method::ExactFormula);
        let dp4 = surface("delpezzo:4");
        let r = cohomology(&dp4, &dp4.anticanonical()).unwrap();
        assert_eq!(r.h0, Some(6));
        assert_eq!(r.method, Method::ChiPlusVanishing);
    }
}
