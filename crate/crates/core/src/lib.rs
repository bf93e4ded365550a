//! Exact certificates for slope stability of syzygy bundles `M_L` on
//! smooth projective surfaces.
//!
//! The pipeline is: build a [`SurfaceModel`](surfaces::SurfaceModel) from a
//! descriptor, pick a [`DivisorClass`](lattice::DivisorClass) `L` and a
//! polarization `H`, and ask [`certify`] for a
//! [`Certificate`](certify::Certificate). Every certificate lists the
//! hypotheses it checked with the integers that decided them; the verdict
//! is `HStable` only when all of them hold.
//!
//! ```
//! use syzcert::certify::{check_auto, Assumptions, Polarization};
//! use syzcert::surfaces::SurfaceModel;
//!
//! let f1: SurfaceModel = "hirzebruch:1".parse().unwrap();
//! let l = f1.class(&[1, 2]).unwrap();
//! let cert = check_auto(&f1, &l, &Polarization::L, &Assumptions::none()).unwrap();
//! assert!(cert.is_stable());
//! ```

pub mod certify;
pub mod cli;
pub mod cohomology;
pub mod curves;
pub mod error;
pub mod lattice;
pub mod surfaces;

pub use error::{Error, Result};
