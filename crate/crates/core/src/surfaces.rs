//! Built-in surface models: the projective plane, Hirzebruch surfaces,
//! del Pezzo surfaces of every degree, and a purely numeric mode for
//! surfaces whose lattice is not modelled (Enriques surfaces in practice).
//!
//! Positivity on the lattice families is decided against the generators
//! of the curve cone, which is polyhedral for all of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{intersect, self_intersect, DivisorClass, IntersectionForm};

/// Three-valued answer for tests that may be undecidable from lattice data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Truth {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::Yes
        } else {
            Truth::No
        }
    }
}

/// User-supplied facts that cannot be computed from the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Assertion {
    Ample,
    Generated,
    IrreducibleMember,
    BnGeneral,
    Nonhyperelliptic,
    KNumericallyTrivial,
}

impl FromStr for Assertion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ample" => Ok(Assertion::Ample),
            "generated" => Ok(Assertion::Generated),
            "irreducible-member" => Ok(Assertion::IrreducibleMember),
            "bn-general" => Ok(Assertion::BnGeneral),
            "nonhyperelliptic" => Ok(Assertion::Nonhyperelliptic),
            "k-trivial" => Ok(Assertion::KNumericallyTrivial),
            other => Err(Error::parse(other, "unknown assertion")),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Assertion::Ample => "ample",
            Assertion::Generated => "generated",
            Assertion::IrreducibleMember => "irreducible-member",
            Assertion::BnGeneral => "bn-general",
            Assertion::Nonhyperelliptic => "nonhyperelliptic",
            Assertion::KNumericallyTrivial => "k-trivial",
        })
    }
}

/// Numbers carried by a surface whose Picard lattice is not modelled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericSurfaceData {
    pub l2: i64,
    pub lk: i64,
    pub k2: i64,
    pub chi_o: i64,
    pub q: i64,
    pub assertions: BTreeSet<Assertion>,
}

impl NumericSurfaceData {
    pub fn new(
        l2: i64,
        lk: i64,
        k2: i64,
        chi_o: i64,
        q: i64,
        assertions: BTreeSet<Assertion>,
    ) -> Result<Self> {
        if q < 0 {
            return Err(Error::InvalidParameter(format!("irregularity q = {q} < 0")));
        }
        if (l2 + lk).rem_euclid(2) != 0 {
            return Err(Error::Parity(l2 + lk));
        }
        if assertions.contains(&Assertion::KNumericallyTrivial) && (lk != 0 || k2 != 0) {
            return Err(Error::InvalidParameter(format!(
                "numerically trivial K requires L.K = 0 and K^2 = 0 (got {lk}, {k2})"
            )));
        }
        Ok(NumericSurfaceData {
            l2,
            lk,
            k2,
            chi_o,
            q,
            assertions,
        })
    }
}

/// Family tag of a surface model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    P2,
    Hirzebruch(u32),
    DelPezzo(u8),
    Numeric,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P2 => write!(f, "p2"),
            Family::Hirzebruch(n) => write!(f, "hirzebruch:{n}"),
            Family::DelPezzo(r) => write!(f, "delpezzo:{r}"),
            Family::Numeric => write!(f, "numeric"),
        }
    }
}

/// Parsed surface descriptor: `p2`, `hirzebruch:n`, `delpezzo:r`, or
/// `numeric:L2=..,LK=..,K2=..,chiO=..,q=..` (optionally `,Ktriv=1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceSpec {
    P2,
    Hirzebruch(u32),
    DelPezzo(u8),
    Numeric(NumericSurfaceData),
}

impl FromStr for SurfaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        match (head, tail) {
            ("p2", None) => Ok(SurfaceSpec::P2),
            ("hirzebruch", Some(n)) => n
                .trim()
                .parse::<u32>()
                .map(SurfaceSpec::Hirzebruch)
                .map_err(|_| Error::parse(n, "expected a non-negative integer n")),
            ("delpezzo", Some(r)) => match r.trim().parse::<u8>() {
                Ok(r) if r <= 8 => Ok(SurfaceSpec::DelPezzo(r)),
                _ => Err(Error::parse(r, "expected an integer 0 <= r <= 8")),
            },
            ("numeric", Some(fields)) => parse_numeric(fields).map(SurfaceSpec::Numeric),
            _ => Err(Error::parse(s, "unknown surface descriptor")),
        }
    }
}

fn parse_numeric(fields: &str) -> Result<NumericSurfaceData> {
    let mut l2 = None;
    let mut lk = None;
    let mut k2 = None;
    let mut chi_o = None;
    let mut q = None;
    let mut assertions = BTreeSet::new();
    for field in fields.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::parse(field, "expected key=value"))?;
        let v: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::parse(value, "expected an integer"))?;
        let slot = match key.trim() {
            "L2" => &mut l2,
            "LK" => &mut lk,
            "K2" => &mut k2,
            "chiO" => &mut chi_o,
            "q" => &mut q,
            "Ktriv" => {
                if v != 0 {
                    assertions.insert(Assertion::KNumericallyTrivial);
                }
                continue;
            }
            other => return Err(Error::parse(other, "unknown numeric field")),
        };
        *slot = Some(v);
    }
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| Error::parse(fields, format!("missing field {name}")))
    };
    NumericSurfaceData::new(
        need(l2, "L2")?,
        need(lk, "LK")?,
        need(k2, "K2")?,
        need(chi_o, "chiO")?,
        need(q, "q")?,
        assertions,
    )
}

/// A surface with its lattice, canonical class and curve-cone generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub family: Family,
    pub basis_labels: Vec<String>,
    pub form: IntersectionForm,
    pub canonical: DivisorClass,
    pub chi_o: i64,
    pub q: i64,
    pub extremal_rays: Vec<DivisorClass>,
    pub numeric: Option<NumericSurfaceData>,
}

impl SurfaceModel {
    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn is_numeric(&self) -> bool {
        self.numeric.is_some()
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        intersect(a, b, &self.form)
    }

    pub fn self_intersect(&self, a: &DivisorClass) -> Result<i64> {
        self_intersect(a, &self.form)
    }

    pub fn class(&self, coords: &[i64]) -> Result<DivisorClass> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        DivisorClass::new(coords.to_vec())
    }

    pub fn anticanonical(&self) -> DivisorClass {
        self.canonical.negated()
    }

    /// The descriptor string this model was built from.
    pub fn descriptor(&self) -> String {
        match &self.numeric {
            Some(d) => {
                let mut s = format!(
                    "numeric:L2={},LK={},K2={},chiO={},q={}",
                    d.l2, d.lk, d.k2, d.chi_o, d.q
                );
                if d.assertions.contains(&Assertion::KNumericallyTrivial) {
                    s.push_str(",Ktriv=1");
                }
                s
            }
            None => self.family.to_string(),
        }
    }

    pub fn canonical_square(&self) -> Result<i64> {
        match &self.numeric {
            Some(d) => Ok(d.k2),
            None => self.self_intersect(&self.canonical),
        }
    }

    fn require_lattice(&self, op: &'static str) -> Result<()> {
        if self.is_numeric() {
            return Err(Error::Unsupported {
                op,
                family: self.family.to_string(),
            });
        }
        Ok(())
    }
}

impl FromStr for SurfaceModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_surface(&s.parse()?)
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn make_surface(spec: &SurfaceSpec) -> Result<SurfaceModel> {
    match spec {
        SurfaceSpec::P2 => Ok(SurfaceModel {
            family: Family::P2,
            basis_labels: labels(&["h"]),
            form: IntersectionForm::diagonal(&[1]),
            canonical: DivisorClass::new(vec![-3])?,
            chi_o: 1,
            q: 0,
            extremal_rays: vec![DivisorClass::new(vec![1])?],
            numeric: None,
        }),
        SurfaceSpec::Hirzebruch(n) => {
            let n = i64::from(*n);
            let form = IntersectionForm::new(vec![vec![-n, 1], vec![1, 0]])?;
            let canonical = DivisorClass::new(vec![-2, -(n + 2)])?;
            Ok(SurfaceModel {
                family: Family::Hirzebruch(n as u32),
                basis_labels: vec![format!("C_{n}"), "F".to_string()],
                form,
                canonical,
                chi_o: 1,
                q: 0,
                extremal_rays: vec![DivisorClass::basis(2, 0), DivisorClass::basis(2, 1)],
                numeric: None,
            })
        }
        SurfaceSpec::DelPezzo(r) => {
            let r = *r;
            if r > 8 {
                return Err(Error::InvalidParameter(format!(
                    "del Pezzo surfaces blow up at most 8 points, got {r}"
                )));
            }
            let rank = 1 + r as usize;
            let mut diag = vec![1];
            diag.extend(std::iter::repeat_n(-1, r as usize));
            let mut canonical = vec![-3];
            canonical.extend(std::iter::repeat_n(1, r as usize));
            let mut basis_labels = vec!["h".to_string()];
            basis_labels.extend((1..=r).map(|i| format!("e{i}")));

            let mut model = SurfaceModel {
                family: Family::DelPezzo(r),
                basis_labels,
                form: IntersectionForm::diagonal(&diag),
                canonical: DivisorClass::new(canonical)?,
                chi_o: 1,
                q: 0,
                extremal_rays: Vec::new(),
                numeric: None,
            };
            model.extremal_rays = match r {
                0 => vec![DivisorClass::basis(1, 0)],
                _ => {
                    let mut rays = minus_one_curves(&model)?;
                    if r == 1 {
                        rays.push(DivisorClass::new(vec![1, -1])?);
                    }
                    rays
                }
            };
            debug_assert!(rank == model.rank());
            Ok(model)
        }
        SurfaceSpec::Numeric(data) => Ok(SurfaceModel {
            family: Family::Numeric,
            basis_labels: Vec::new(),
            form: IntersectionForm::diagonal(&[]),
            canonical: DivisorClass::zero(0),
            chi_o: data.chi_o,
            q: data.q,
            extremal_rays: Vec::new(),
            numeric: Some(data.clone()),
        }),
    }
}

/// All classes `C = a h - Σ m_i e_i` on a del Pezzo surface with `C² = -1`
/// and `C.K = -1`, searched over `0 <= a <= 6` and `-1 <= m_i <= 3`.
///
/// The two conditions read `Σ m_i = 3a - 1` and `Σ m_i² = a² + 1`; the
/// search prunes on the running sums but visits every box point that could
/// still satisfy both. The result is ordered by `(a, m_1, .., m_r)`.
pub fn minus_one_curves(surface: &SurfaceModel) -> Result<Vec<DivisorClass>> {
    let r = match surface.family {
        Family::DelPezzo(r) if r >= 1 => r as usize,
        other => {
            return Err(Error::Unsupported {
                op: "minus_one_curves",
                family: other.to_string(),
            })
        }
    };
    let mut found: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut m = vec![0i64; r];
    for a in 0..=6i64 {
        search_multiplicities(&mut m, 0, 3 * a - 1, a * a + 1, &mut |m| {
            found.push((a, m.to_vec()))
        });
    }
    found.sort();
    let classes = found
        .into_iter()
        .map(|(a, m)| {
            let mut coords = Vec::with_capacity(r + 1);
            coords.push(a);
            coords.extend(m.iter().map(|x| -x));
            DivisorClass::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(classes.iter().all(|c| {
        surface.self_intersect(c).ok() == Some(-1)
            && surface.intersect(c, &surface.canonical).ok() == Some(-1)
    }));
    Ok(classes)
}

const MULT_MIN: i64 = -1;
const MULT_MAX: i64 = 3;

fn search_multiplicities(
    m: &mut [i64],
    pos: usize,
    sum_left: i64,
    sq_left: i64,
    emit: &mut impl FnMut(&[i64]),
) {
    let slots = (m.len() - pos) as i64;
    if slots == 0 {
        if sum_left == 0 && sq_left == 0 {
            emit(m);
        }
        return;
    }
    if sq_left < 0 || sum_left < MULT_MIN * slots || sum_left > MULT_MAX * slots {
        return;
    }
    for v in MULT_MIN..=MULT_MAX {
        m[pos] = v;
        search_multiplicities(m, pos + 1, sum_left - v, sq_left - v * v, emit);
    }
    m[pos] = 0;
}

pub fn is_nef(surface: &SurfaceModel, l: &DivisorClass) -> Result<bool> {
    surface.require_lattice("is_nef")?;
    for ray in &surface.extremal_rays {
        if surface.intersect(l, ray)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_ample(surface: &SurfaceModel, l: &DivisorClass) -> Result<bool> {
    surface.require_lattice("is_ample")?;
    for ray in &surface.extremal_rays {
        if surface.intersect(l, ray)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Base-point freeness from positivity. Nef classes are generated on toric
/// surfaces and on del Pezzo surfaces of degree at least 2; in degree 1 the
/// anticanonical degree must be at least 2.
pub fn is_globally_generated(surface: &SurfaceModel, l: &DivisorClass) -> Result<Truth> {
    surface.require_lattice("is_globally_generated")?;
    if !is_nef(surface, l)? {
        return Ok(Truth::No);
    }
    match surface.family {
        Family::DelPezzo(8) => {
            let anti_degree = surface.intersect(l, &surface.anticanonical())?;
            Ok(if anti_degree >= 2 || l.is_zero() {
                Truth::Yes
            } else {
                Truth::Unknown
            })
        }
        _ => Ok(Truth::Yes),
    }
}

/// How the existence of an irreducible member of `|L|` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MemberStatus {
    /// `L` is generated with `L² > 0`, so the general member is irreducible.
    Heuristic,
    Asserted,
    Unknown,
}

pub fn has_irreducible_member(
    surface: &SurfaceModel,
    l: &DivisorClass,
    assertions: &BTreeSet<Assertion>,
) -> MemberStatus {
    let asserted = assertions.contains(&Assertion::IrreducibleMember)
        || surface
            .numeric
            .as_ref()
            .is_some_and(|d| d.assertions.contains(&Assertion::IrreducibleMember));
    if !surface.is_numeric() {
        let generated = is_globally_generated(surface, l).ok() == Some(Truth::Yes);
        let big = surface.self_intersect(l).map(|s| s > 0).unwrap_or(false);
        if generated && big {
            return MemberStatus::Heuristic;
        }
    }
    if asserted {
        MemberStatus::Asserted
    } else {
        MemberStatus::Unknown
    }
}
