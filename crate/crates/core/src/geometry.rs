//! Hyperbolic trigonometry of quasiregular `[n, m, n, m]` tilings.
//!
//! A regular `x`-gon with interior angle `a` splits into `2x` right triangles
//! with angles `pi/x` at the centre and `a/2` at a vertex, so its half edge
//! satisfies `cosh(l/2) = cos(pi/x) / sin(a/2)`. In an `[n, m, n, m]` tiling
//! the two polygons share every edge and `a_n + a_m = pi`, which gives
//! `tan(a_n/2) = cos(pi/n) / cos(pi/m)`.

use std::f64::consts::PI;

use thiserror::Error;

use crate::signatures::TilingSignature;

/// Default tolerance for geometric identities.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Angle defects below this are treated as flat.
const FLAT_EPS: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("({n}, {m}) is spherical: (n-2)(m-2) < 4")]
    Spherical { n: u32, m: u32 },
    #[error("polygons need at least 3 sides, got {0}")]
    TooFewSides(u32),
    #[error("interior angle {alpha} is outside (0, {max}] for a {n}-gon")]
    InvalidAngle { n: u32, alpha: f64, max: f64 },
    #[error("cross-ratio formula is singular for x = {0} (2cos(2pi/x) + 1 = 0)")]
    SingularCrossRatio(u32),
    #[error("signature {0} has no polygon counts")]
    MissingCounts(TilingSignature),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonGeometry {
    pub n: u32,
    pub alpha: f64,
    /// Hyperbolic edge length; `0.0` for flat polygons.
    pub edge_length: f64,
    pub area: f64,
    /// Euclidean polygon: zero angle defect, no canonical size.
    pub flat: bool,
}

/// Dihedral angles of one bipyramid wedge over an `n`-gon face.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeAngles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

/// Interior angles `(alpha_n, alpha_m)` of the regular polygons in the
/// `[n, m, n, m]` tiling. The pair sums to `pi` by construction.
pub fn interior_angles(n: u32, m: u32) -> Result<(f64, f64), GeometryError> {
    for x in [n, m] {
        if x < 3 {
            return Err(GeometryError::TooFewSides(x));
        }
    }
    if (n - 2) * (m - 2) < 4 {
        return Err(GeometryError::Spherical { n, m });
    }
    let (nf, mf) = (f64::from(n), f64::from(m));
    let alpha_n = 2.0 * ((PI / nf).cos() / (PI / mf).cos()).atan();
    Ok((alpha_n, PI - alpha_n))
}

/// Largest interior angle a regular `n`-gon can have (the Euclidean one).
pub fn flat_angle(n: u32) -> f64 {
    f64::from(n - 2) * PI / f64::from(n)
}

pub fn polygon_geometry(n: u32, alpha: f64) -> Result<PolygonGeometry, GeometryError> {
    if n < 3 {
        return Err(GeometryError::TooFewSides(n));
    }
    let max = flat_angle(n);
    if !(alpha > 0.0 && alpha <= max + FLAT_EPS) {
        return Err(GeometryError::InvalidAngle { n, alpha, max });
    }
    let nf = f64::from(n);
    let defect = (nf - 2.0) * PI - nf * alpha;
    if defect <= FLAT_EPS {
        return Ok(PolygonGeometry {
            n,
            alpha,
            edge_length: 0.0,
            area: 0.0,
            flat: true,
        });
    }
    let ratio = (PI / nf).cos() / (alpha / 2.0).sin();
    Ok(PolygonGeometry {
        n,
        alpha,
        edge_length: 2.0 * ratio.acosh(),
        area: defect,
        flat: false,
    })
}

/// `k_n a(T_n) + k_m a(T_m) - 4 pi (g - 1)`.
pub fn gauss_bonnet_residual(sig: &TilingSignature) -> Result<f64, GeometryError> {
    let (Some(k_n), Some(k_m)) = (sig.k_n, sig.k_m) else {
        return Err(GeometryError::MissingCounts(*sig));
    };
    let (alpha_n, alpha_m) = interior_angles(sig.n, sig.m)?;
    let tn = polygon_geometry(sig.n, alpha_n)?;
    let tm = polygon_geometry(sig.m, alpha_m)?;
    let total = k_n as f64 * tn.area + k_m as f64 * tm.area;
    Ok(total - 4.0 * PI * (f64::from(sig.genus) - 1.0))
}

pub fn wedge_angles(n: u32, alpha: f64) -> WedgeAngles {
    let half = alpha / 2.0;
    WedgeAngles {
        a: 2.0 * PI / f64::from(n),
        b: half,
        c: half,
        d: PI - alpha,
        e: half,
        f: half,
    }
}

/// Dihedral angle of the checkerboard polyhedron along an edge where the
/// wedges of an `n`-gon and an `m`-gon meet: `((pi - a_n) + (pi - a_m)) / 2`.
pub fn dihedral_check(alpha_n: f64, alpha_m: f64) -> f64 {
    (PI - alpha_n + PI - alpha_m) / 2.0
}

/// Cross-ratio of four consecutive ideal vertices of a regular ideal `x`-gon.
pub fn regular_cross_ratio(x: u32) -> Result<f64, GeometryError> {
    if x < 3 {
        return Err(GeometryError::TooFewSides(x));
    }
    let denom = 2.0 * (2.0 * PI / f64::from(x)).cos() + 1.0;
    if denom.abs() < FLAT_EPS {
        return Err(GeometryError::SingularCrossRatio(x));
    }
    Ok(1.0 + 1.0 / denom)
}
