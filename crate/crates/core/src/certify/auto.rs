use super::{
    bound_thm21, check_cor33, check_delpezzo_antik, check_delpezzo_l, check_enriques,
    check_hirzebruch, check_prop34, check_thm32, resolve_polarization, Assumptions, Certificate,
    Criterion, Polarization,
};
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::surfaces::{Assertion, Family, SurfaceModel};

fn polarization_is_l(surface: &SurfaceModel, l: &DivisorClass, h: &Polarization) -> bool {
    match h {
        Polarization::Class(_) => resolve_polarization(surface, l, h).is_ok_and(|c| c == *l),
        _ => *h == Polarization::L,
    }
}

fn polarization_is_anti_k(surface: &SurfaceModel, l: &DivisorClass, h: &Polarization) -> bool {
    match h {
        Polarization::Class(_) if !surface.is_numeric() => {
            resolve_polarization(surface, l, h).is_ok_and(|c| c == surface.anticanonical())
        }
        _ => *h == Polarization::ANTI_K,
    }
}

/// Criteria whose shape fits `(surface, H)`, in the order `auto` tries them.
pub fn applicable_criteria(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &Polarization,
) -> Vec<Criterion> {
    let same = polarization_is_l(surface, l, h);
    let anti_k = polarization_is_anti_k(surface, l, h);
    let k_trivial = surface
        .numeric
        .as_ref()
        .is_some_and(|d| d.assertions.contains(&Assertion::KNumericallyTrivial));
    let mut out = Vec::new();
    match surface.family {
        Family::Hirzebruch(_) if same => out.push(Criterion::Cor36),
        Family::DelPezzo(_) if same => out.push(Criterion::Cor35),
        Family::DelPezzo(_) if anti_k => out.push(Criterion::Thm37),
        Family::Numeric if same && k_trivial => out.push(Criterion::Cor37),
        _ => {}
    }
    if same {
        out.extend([Criterion::Cor33, Criterion::Prop34]);
    }
    out.push(Criterion::Thm32);
    if !surface.is_numeric() {
        out.push(Criterion::Thm21);
    }
    out
}

/// Runs one criterion. `Thm21` here certifies `M_L` itself: the effective
/// search with `D = 0` restricted to `n = 1`.
pub fn check(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &Polarization,
    criterion: Option<Criterion>,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let Some(criterion) = criterion else {
        return check_auto(surface, l, h, assumptions);
    };
    let l = if surface.is_numeric() {
        l.clone()
    } else {
        surface.class(l.coords())?
    };
    let needs_same = matches!(
        criterion,
        Criterion::Cor33 | Criterion::Prop34 | Criterion::Cor35 | Criterion::Cor36 | Criterion::Cor37
    );
    if needs_same && !polarization_is_l(surface, &l, h) {
        return Err(Error::InvalidParameter(format!(
            "{criterion} certifies L-stability; use --H L"
        )));
    }
    if criterion == Criterion::Thm37 && !polarization_is_anti_k(surface, &l, h) {
        return Err(Error::InvalidParameter(
            "thm37 certifies -K-stability; use --H antiK".into(),
        ));
    }
    match criterion {
        Criterion::Thm32 => check_thm32(surface, &l, h, assumptions),
        Criterion::Cor33 => check_cor33(surface, &l, assumptions),
        Criterion::Prop34 => check_prop34(surface, &l, assumptions),
        Criterion::Cor35 => check_delpezzo_l(surface, &l, assumptions),
        Criterion::Cor36 => check_hirzebruch(surface, &l, assumptions),
        Criterion::Cor37 => check_enriques(surface, assumptions),
        Criterion::Thm37 => check_delpezzo_antik(surface, &l, assumptions),
        Criterion::Thm21 => {
            let hc = resolve_polarization(surface, &l, h)?;
            let zero = DivisorClass::zero(l.rank());
            Ok(bound_thm21(surface, &l, &zero, &hc, None, 1, assumptions)?.certificate)
        }
    }
}

/// Tries the applicable criteria in order and returns the first `HStable`
/// certificate, or the certificate of the first criterion tried.
pub fn check_auto(
    surface: &SurfaceModel,
    l: &DivisorClass,
    h: &Polarization,
    assumptions: &Assumptions,
) -> Result<Certificate> {
    let mut first = None;
    for criterion in applicable_criteria(surface, l, h) {
        let cert = check(surface, l, h, Some(criterion), assumptions)?;
        if cert.is_stable() {
            return Ok(cert);
        }
        first.get_or_insert(cert);
    }
    first.ok_or_else(|| Error::InvalidParameter("no applicable criterion".into()))
}
