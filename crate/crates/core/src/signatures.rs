//! Tiling signatures `(n, m, k_n, k_m)` for a projection surface of genus `g`.
//!
//! Every edge of an `[n, m, n, m]` diagram borders one `n`-gon and one
//! `m`-gon, so `k_n * n = k_m * m`. For `g >= 2` the area bookkeeping of the
//! hyperbolic tiling reduces to
//!
//! ```text
//! 4(g - 1) = k_n (n - 2 - 2n/m) = k_m (m - 2 - 2m/n)
//! ```
//!
//! which fixes both counts once `(g, n, m)` is chosen. All arithmetic here is
//! exact.

use std::fmt;

use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("invalid genus {0}: genus must be at least 1")]
    InvalidGenus(i64),
    #[error("genus {0} is outside the domain of the counting bound (requires g >= 2)")]
    OutOfDomain(i64),
    #[error("invalid polygon pair ({n}, {m}): {reason}")]
    InvalidPair {
        n: u32,
        m: u32,
        reason: &'static str,
    },
    #[error("polygon counts k_n={k_n}, k_m={k_m} violate k_n*n = k_m*m for (n, m) = ({n}, {m})")]
    CountMismatch { n: u32, m: u32, k_n: u64, k_m: u64 },
}

/// One admissible tiling of a genus-`g` surface by regular `n`-gons and
/// `m`-gons in an `[n, m, n, m]` vertex pattern, with `n <= m`.
///
/// For the torus the polygon counts are not determined by the surface, so
/// `k_n` and `k_m` are `None` unless a concrete quotient has been chosen with
/// [`TilingSignature::with_counts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingSignature {
    pub genus: u32,
    pub n: u32,
    pub m: u32,
    pub k_n: Option<u64>,
    pub k_m: Option<u64>,
}

impl TilingSignature {
    /// The Euclidean signature `(n, m)` on the torus with unbounded counts.
    pub fn euclidean(n: u32, m: u32) -> Result<Self, SignatureError> {
        let (n, m) = (n.min(m), n.max(m));
        if !is_euclidean_pair(n, m) {
            return Err(SignatureError::InvalidPair {
                n,
                m,
                reason: "the torus only admits (4, 4) and (3, 6)",
            });
        }
        Ok(TilingSignature {
            genus: 1,
            n,
            m,
            k_n: None,
            k_m: None,
        })
    }

    /// Fixes the polygon counts of a torus signature, selecting a concrete
    /// quotient of the Euclidean tiling. Counts must satisfy `k_n*n = k_m*m`.
    pub fn with_counts(self, k_n: u64, k_m: u64) -> Result<Self, SignatureError> {
        if k_n == 0 || k_m == 0 || k_n * u64::from(self.n) != k_m * u64::from(self.m) {
            return Err(SignatureError::CountMismatch {
                n: self.n,
                m: self.m,
                k_n,
                k_m,
            });
        }
        if self.genus >= 2 && (Some(k_n) != self.k_n || Some(k_m) != self.k_m) {
            return Err(SignatureError::CountMismatch {
                n: self.n,
                m: self.m,
                k_n,
                k_m,
            });
        }
        Ok(TilingSignature {
            k_n: Some(k_n),
            k_m: Some(k_m),
            ..self
        })
    }

    pub fn is_euclidean(&self) -> bool {
        self.genus == 1
    }

    /// Number of edges of the diagram, `k_n * n` (equal to `k_m * m`).
    pub fn edge_count(&self) -> Option<u64> {
        self.k_n.map(|k| k * u64::from(self.n))
    }

    /// Checks the defining identities exactly.
    pub fn is_consistent(&self) -> bool {
        if self.n < 3 || self.n > self.m {
            return false;
        }
        if self.genus == 1 {
            let counts_ok = match (self.k_n, self.k_m) {
                (None, None) => true,
                (Some(kn), Some(km)) => kn * u64::from(self.n) == km * u64::from(self.m),
                _ => false,
            };
            return is_euclidean_pair(self.n, self.m) && counts_ok;
        }
        let (Some(k_n), Some(k_m)) = (self.k_n, self.k_m) else {
            return false;
        };
        if (self.n - 2) * (self.m - 2) <= 4 {
            return false;
        }
        let n = Ratio::from_integer(i64::from(self.n));
        let m = Ratio::from_integer(i64::from(self.m));
        let two = Ratio::from_integer(2);
        let lhs = Ratio::from_integer(4 * (i64::from(self.genus) - 1));
        let eq1 = Ratio::from_integer(k_n as i64) * (n - two - two * n / m);
        let eq2 = Ratio::from_integer(k_m as i64) * (m - two - two * m / n);
        lhs == eq1 && lhs == eq2 && k_n * u64::from(self.n) == k_m * u64::from(self.m)
    }
}

/// Rows print in the column order `genus m n k_m k_n`; unbounded counts print
/// as `-`.
impl fmt::Display for TilingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let count = |k: Option<u64>| k.map_or_else(|| "-".to_string(), |k| k.to_string());
        write!(
            f,
            "{} {} {} {} {}",
            self.genus,
            self.m,
            self.n,
            count(self.k_m),
            count(self.k_n)
        )
    }
}

fn is_euclidean_pair(n: u32, m: u32) -> bool {
    matches!((n, m), (4, 4) | (3, 6))
}

fn check_genus(g: i64) -> Result<u32, SignatureError> {
    if g < 1 || g > i64::from(u32::MAX) {
        return Err(SignatureError::InvalidGenus(g));
    }
    Ok(g as u32)
}

/// Largest `m` that can occur for genus `g >= 2`.
pub fn max_sides(g: u32) -> u32 {
    12 * g - 6
}

/// Solves for the counts of the pair `(n, m)` on a genus-`g` surface.
///
/// Returns `None` when either count is not a positive integer. The pair is
/// normalised so that `n <= m`.
pub fn signature_from_pair(g: u32, n: u32, m: u32) -> Option<TilingSignature> {
    if g < 2 || n < 3 || m < 3 {
        return None;
    }
    let (n, m) = (n.min(m), n.max(m));
    let (n64, m64, g64) = (u64::from(n), u64::from(m), u64::from(g));
    // k_n = 4(g-1) m / (nm - 2m - 2n); non-positive denominators are not hyperbolic.
    let denom = (n64 * m64) as i64 - 2 * m64 as i64 - 2 * n64 as i64;
    if denom <= 0 {
        return None;
    }
    let k_n = Ratio::new((4 * (g64 - 1) * m64) as i64, denom);
    if !k_n.is_integer() {
        return None;
    }
    let k_m = k_n * Ratio::from_integer(n64 as i64) / Ratio::from_integer(m64 as i64);
    if !k_m.is_integer() {
        return None;
    }
    let (k_n, k_m) = (k_n.to_integer(), k_m.to_integer());
    if k_n <= 0 || k_m <= 0 {
        return None;
    }
    Some(TilingSignature {
        genus: g,
        n,
        m,
        k_n: Some(k_n as u64),
        k_m: Some(k_m as u64),
    })
}

/// All signatures for genus `g`, sorted by `(m, n)`.
pub fn enumerate_signatures(g: i64) -> Result<Vec<TilingSignature>, SignatureError> {
    let g = check_genus(g)?;
    if g == 1 {
        return Ok(vec![
            TilingSignature {
                genus: 1,
                n: 4,
                m: 4,
                k_n: None,
                k_m: None,
            },
            TilingSignature {
                genus: 1,
                n: 3,
                m: 6,
                k_n: None,
                k_m: None,
            },
        ]);
    }
    let mut out = Vec::new();
    for m in 3..=max_sides(g) {
        for n in 3..=m {
            if let Some(sig) = signature_from_pair(g, n, m) {
                out.push(sig);
            }
        }
    }
    Ok(out)
}

/// The unique signature with a single polygon of each colour: `n = m = 4g`.
pub fn special_case_k1(g: u32) -> Result<TilingSignature, SignatureError> {
    if g < 2 {
        return Err(SignatureError::OutOfDomain(i64::from(g)));
    }
    Ok(TilingSignature {
        genus: g,
        n: 4 * g,
        m: 4 * g,
        k_n: Some(1),
        k_m: Some(1),
    })
}

/// Upper bounds on the number of tiling pairs and on the number of links for
/// a surface of genus `g >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountBound {
    pub genus: u32,
    /// `310g^2/9 - 101g/3 + 4`, not rounded.
    pub pair_bound: BigRational,
    /// `(84g - 83)!`
    pub factorial: BigUint,
    /// `pair_bound * (84g - 83)!`
    pub link_bound: BigRational,
}

impl CountBound {
    pub fn factorial_argument(&self) -> u64 {
        84 * u64::from(self.genus) - 83
    }
}

pub fn factorial(x: u64) -> BigUint {
    (1..=x).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn count_bounds(g: i64) -> Result<CountBound, SignatureError> {
    if g < 2 {
        return Err(SignatureError::OutOfDomain(g));
    }
    let genus = check_genus(g)?;
    let g = BigRational::from_integer(g.into());
    let r = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    let pair_bound = r(310, 9) * &g * &g - r(101, 3) * &g + r(4, 1);
    let factorial = factorial(84 * u64::from(genus) - 83);
    let link_bound = &pair_bound * BigRational::from_integer(factorial.clone().into());
    debug_assert!(pair_bound > BigRational::zero());
    Ok(CountBound {
        genus,
        pair_bound,
        factorial,
        link_bound,
    })
}

/// Convenience for callers that want a float view of an exact count.
pub fn approx(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::INFINITY)
}
