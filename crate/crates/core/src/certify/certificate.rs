use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::DivisorClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Thm32,
    Cor33,
    Prop34,
    Cor35,
    Cor36,
    Cor37,
    Thm37,
    Thm21,
}

impl Criterion {
    pub const ALL: [Criterion; 8] = [
        Criterion::Thm32,
        Criterion::Cor33,
        Criterion::Prop34,
        Criterion::Cor35,
        Criterion::Cor36,
        Criterion::Cor37,
        Criterion::Thm37,
        Criterion::Thm21,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::Thm32 => "thm32",
            Criterion::Cor33 => "cor33",
            Criterion::Prop34 => "prop34",
            Criterion::Cor35 => "cor35",
            Criterion::Cor36 => "cor36",
            Criterion::Cor37 => "cor37",
            Criterion::Thm37 => "thm37",
            Criterion::Thm21 => "thm21",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::parse(s, "unknown criterion"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Verified,
    Asserted,
    Failed,
    Unknown,
}

impl Status {
    pub fn holds(self) -> bool {
        matches!(self, Status::Verified | Status::Asserted)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    HStable,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HStable => "HStable",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub evidence: String,
}

impl Hypothesis {
    pub fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        status: Status,
        evidence: impl Into<String>,
    ) -> Self {
        Hypothesis {
            id: id.into(),
            statement: statement.into(),
            status,
            evidence: evidence.into(),
        }
    }
}

/// The line bundle a certificate is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LineBundleData {
    Class(DivisorClass),
    Numeric {
        #[serde(rename = "L2")]
        l2: i64,
        #[serde(rename = "LK")]
        lk: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedPolarization {
    #[serde(rename = "antiK")]
    AntiCanonical,
    #[serde(rename = "L")]
    SameAsL,
}

/// The polarization `H`, either explicit or one of the tags `antiK`, `L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Polarization {
    Class(DivisorClass),
    Named(NamedPolarization),
}

impl Polarization {
    pub const ANTI_K: Polarization = Polarization::Named(NamedPolarization::AntiCanonical);
    pub const L: Polarization = Polarization::Named(NamedPolarization::SameAsL);
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarization::Class(c) => write!(f, "{c}"),
            Polarization::Named(NamedPolarization::AntiCanonical) => f.write_str("antiK"),
            Polarization::Named(NamedPolarization::SameAsL) => f.write_str("L"),
        }
    }
}

/// A stability certificate. The verdict is derived from the hypotheses:
/// `HStable` exactly when there is at least one hypothesis and every one of
/// them is `Verified` or `Asserted`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub criterion: Criterion,
    pub surface: String,
    #[serde(rename = "L")]
    pub l: LineBundleData,
    #[serde(rename = "H")]
    pub h: Polarization,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
}

impl Certificate {
    pub fn new(
        criterion: Criterion,
        surface: String,
        l: LineBundleData,
        h: Polarization,
        hypotheses: Vec<Hypothesis>,
        n: Option<i64>,
    ) -> Self {
        let verdict = derive_verdict(&hypotheses);
        Certificate {
            criterion,
            surface,
            l,
            h,
            hypotheses,
            verdict,
            n,
        }
    }

    pub fn is_stable(&self) -> bool {
        self.verdict == Verdict::HStable
    }

    /// True when the stored verdict agrees with the hypotheses.
    pub fn is_consistent(&self) -> bool {
        self.verdict == derive_verdict(&self.hypotheses)
    }

    pub fn hypothesis(&self, id: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.id == id)
    }

    /// First hypothesis that prevents an `HStable` verdict.
    pub fn blocking(&self) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| !h.status.holds())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse("certificate", e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("criterion: {}\n", self.criterion));
        out.push_str(&format!("surface:   {}\n", self.surface));
        match &self.l {
            LineBundleData::Class(c) => out.push_str(&format!("L:         {c}\n")),
            LineBundleData::Numeric { l2, lk } => {
                out.push_str(&format!("L:         L^2={l2}, L.K={lk}\n"))
            }
        }
        out.push_str(&format!("H:         {}\n", self.h));
        if let Some(n) = self.n {
            out.push_str(&format!("n:         {n}\n"));
        }
        out.push_str("hypotheses:\n");
        for h in &self.hypotheses {
            out.push_str(&format!(
                "  [{:?}] {}: {}\n      {}\n",
                h.status, h.id, h.statement, h.evidence
            ));
        }
        out.push_str(&format!("verdict:   {}\n", self.verdict));
        out
    }
}

fn derive_verdict(hypotheses: &[Hypothesis]) -> Verdict {
    if !hypotheses.is_empty() && hypotheses.iter().all(|h| h.status.holds()) {
        Verdict::HStable
    } else {
        Verdict::Inconclusive
    }
}
