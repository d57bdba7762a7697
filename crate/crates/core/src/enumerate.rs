//! Exhaustive search over gluings of `k_n` white `n`-gons and `k_m` shaded
//! `m`-gons into 4-valent alternating diagrams.
//!
//! Every edge of a checkerboard-coloured diagram separates a white face from
//! a shaded one, so a gluing is a bijection from white sides to shaded sides.
//! The search assigns that bijection side by side. Each assignment fixes the
//! vertex rotation on two darts; a partial vertex longer than four darts is
//! pruned and a partial vertex of exactly four darts forces the pairing that
//! closes it.
//!
//! The gluing grows from a root edge: the next side to pair is always the
//! lowest open side of a polygon already in use, and a polygon enters the
//! search only as the first unused one of its colour, at side 0. Once every
//! polygon in use is closed the map is a connected component, so a state
//! with polygons left over is dropped.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagrams::{
    canonical_form, canonical_relabel, canonical_representative, oriented_form, verify,
    CanonicalForm, DiagramReport, SurfaceMap,
};
use crate::signatures::TilingSignature;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search too large: {edges} edges exceeds the limit of {max_edges}")]
    TooLarge { edges: u64, max_edges: usize },
    #[error("signature {0} has no polygon counts; choose a quotient with explicit counts")]
    MissingCounts(TilingSignature),
    #[error("signature {0} is inconsistent")]
    InvalidSignature(TilingSignature),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_edges: usize,
    /// Identify a diagram with its mirror image.
    pub mirror_quotient: bool,
    /// Run the top-level branches on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_edges: 24,
            mirror_quotient: true,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedDiagram {
    pub form: CanonicalForm,
    /// Canonically labelled representative.
    pub map: SurfaceMap,
    pub report: DiagramReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub signature: TilingSignature,
    /// Pairwise non-isomorphic diagrams passing every verifier, sorted by form.
    pub diagrams: Vec<EnumeratedDiagram>,
    pub knot_count: usize,
    /// Complete 4-valent gluings reached by the search.
    pub leaves: u64,
    /// Distinct connected 4-valent maps before the verifiers ran.
    pub candidates: usize,
}

#[derive(Clone)]
struct Search {
    white_darts: usize,
    n: usize,
    m: usize,
    phi: Vec<usize>,
    phi_inv: Vec<usize>,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    white_used: Vec<usize>,
    shaded_used: Vec<usize>,
    trail: Vec<(usize, usize)>,
    mirror_quotient: bool,
}

#[derive(Default)]
struct Found {
    leaves: u64,
    maps: BTreeMap<CanonicalForm, SurfaceMap>,
}

impl Found {
    fn merge(mut self, other: Found) -> Found {
        self.leaves += other.leaves;
        for (k, v) in other.maps {
            self.maps.entry(k).or_insert(v);
        }
        self
    }
}

impl Search {
    fn new(n: usize, m: usize, k_n: usize, k_m: usize, mirror_quotient: bool) -> Self {
        let white_darts = n * k_n;
        let total = 2 * white_darts;
        let mut phi = vec![0; total];
        for p in 0..k_n {
            for i in 0..n {
                phi[p * n + i] = p * n + (i + 1) % n;
            }
        }
        for q in 0..k_m {
            for j in 0..m {
                phi[white_darts + q * m + j] = white_darts + q * m + (j + 1) % m;
            }
        }
        let mut phi_inv = vec![0; total];
        for (d, &e) in phi.iter().enumerate() {
            phi_inv[e] = d;
        }
        Search {
            white_darts,
            n,
            m,
            phi,
            phi_inv,
            alpha: vec![NONE; total],
            sigma: vec![NONE; total],
            sigma_inv: vec![NONE; total],
            white_used: vec![0; k_n],
            shaded_used: vec![0; k_m],
            trail: Vec::new(),
            mirror_quotient,
        }
    }

    fn is_white(&self, d: usize) -> bool {
        d < self.white_darts
    }

    fn shaded_polygon(&self, s: usize) -> usize {
        (s - self.white_darts) / self.m
    }

    fn in_use(&self, d: usize) -> bool {
        if self.is_white(d) {
            self.white_used[d / self.n] > 0
        } else {
            self.shaded_used[self.shaded_polygon(d)] > 0
        }
    }

    fn pair(&mut self, w: usize, s: usize) {
        self.alpha[w] = s;
        self.alpha[s] = w;
        let (sw, ss) = (self.phi[s], self.phi[w]);
        self.sigma[w] = sw;
        self.sigma_inv[sw] = w;
        self.sigma[s] = ss;
        self.sigma_inv[ss] = s;
        let q = self.shaded_polygon(s);
        self.shaded_used[q] += 1;
        self.white_used[w / self.n] += 1;
        self.trail.push((w, s));
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (w, s) = self.trail.pop().unwrap();
            let (sw, ss) = (self.sigma[w], self.sigma[s]);
            self.sigma_inv[sw] = NONE;
            self.sigma_inv[ss] = NONE;
            for d in [w, s] {
                self.alpha[d] = NONE;
                self.sigma[d] = NONE;
            }
            let q = self.shaded_polygon(s);
            self.shaded_used[q] -= 1;
            self.white_used[w / self.n] -= 1;
        }
    }

    /// Inspects the partial vertex through `x`. Returns `Err` if it cannot be
    /// completed to a 4-valent vertex, and a forced pairing when it has four
    /// darts but is still open.
    fn check_vertex(&self, x: usize) -> Result<Option<(usize, usize)>, ()> {
        let mut len = 1;
        let mut tail = x;
        while self.sigma[tail] != NONE {
            tail = self.sigma[tail];
            if tail == x {
                return if len == 4 { Ok(None) } else { Err(()) };
            }
            len += 1;
            if len > 4 {
                return Err(());
            }
        }
        let mut head = x;
        while self.sigma_inv[head] != NONE {
            head = self.sigma_inv[head];
            len += 1;
            if len > 4 {
                return Err(());
            }
        }
        if len < 4 {
            return Ok(None);
        }
        // sigma(tail) must be head, i.e. alpha(tail) = phi^-1(head)
        let target = self.phi_inv[head];
        if self.alpha[target] != NONE || self.is_white(target) == self.is_white(tail) {
            return Err(());
        }
        Ok(Some(if self.is_white(tail) {
            (tail, target)
        } else {
            (target, tail)
        }))
    }

    /// Pairs `w` with `s` and propagates forced pairings.
    fn assign(&mut self, w: usize, s: usize) -> bool {
        let mut queue = vec![(w, s)];
        while let Some((w, s)) = queue.pop() {
            if self.alpha[w] != NONE || self.alpha[s] != NONE {
                if self.alpha[w] == s {
                    continue;
                }
                return false;
            }
            self.pair(w, s);
            for x in [w, s] {
                match self.check_vertex(x) {
                    Err(()) => return false,
                    Ok(Some(forced)) => queue.push(forced),
                    Ok(None) => {}
                }
            }
        }
        true
    }

    fn next_side(&self) -> Next {
        match (0..self.alpha.len()).find(|&d| self.alpha[d] == NONE && self.in_use(d)) {
            Some(d) => Next::Side(d),
            None if self.trail.len() == self.white_darts => Next::Complete,
            None => Next::Disconnected,
        }
    }

    /// Partners worth trying for the open side `d`: open sides of polygons in
    /// use and side 0 of the first unused polygon of the other colour.
    fn candidates(&self, d: usize) -> Vec<usize> {
        let (base, size, used) = if self.is_white(d) {
            (self.white_darts, self.m, &self.shaded_used)
        } else {
            (0, self.n, &self.white_used)
        };
        let mut out = Vec::new();
        let mut fresh_taken = false;
        for (q, &u) in used.iter().enumerate() {
            let first = base + q * size;
            if u == 0 {
                if !fresh_taken {
                    out.push(first);
                    fresh_taken = true;
                }
                continue;
            }
            out.extend((first..first + size).filter(|&e| self.alpha[e] == NONE));
        }
        out
    }

    fn assign_pair(&mut self, d: usize, e: usize) -> bool {
        if self.is_white(d) {
            self.assign(d, e)
        } else {
            self.assign(e, d)
        }
    }

    fn leaf(&self, found: &mut Found) {
        found.leaves += 1;
        let map = SurfaceMap::new(self.sigma.clone(), self.alpha.clone())
            .expect("complete search states are 4-valent maps");
        if !map.is_connected() {
            return;
        }
        let form = if self.mirror_quotient {
            canonical_form(&map)
        } else {
            oriented_form(&map)
        };
        if !found.maps.contains_key(&form) {
            let rep = if self.mirror_quotient {
                canonical_representative(&map)
            } else {
                canonical_relabel(&map)
            };
            found.maps.insert(form, rep);
        }
    }

    fn run(&mut self, found: &mut Found) {
        let d = match self.next_side() {
            Next::Side(d) => d,
            Next::Complete => return self.leaf(found),
            Next::Disconnected => return,
        };
        for e in self.candidates(d) {
            let mark = self.trail.len();
            if self.assign_pair(d, e) {
                self.run(found);
            }
            self.undo_to(mark);
        }
    }

    /// Explores the children of the current state independently.
    fn run_parallel(&mut self) -> Found {
        let d = match self.next_side() {
            Next::Side(d) => d,
            Next::Complete => {
                let mut found = Found::default();
                self.leaf(&mut found);
                return found;
            }
            Next::Disconnected => return Found::default(),
        };
        self.candidates(d)
            .into_par_iter()
            .map(|e| {
                let mut branch = self.clone();
                let mut found = Found::default();
                if branch.assign_pair(d, e) {
                    branch.run(&mut found);
                }
                found
            })
            .reduce(Found::default, Found::merge)
    }
}

enum Next {
    Side(usize),
    Complete,
    Disconnected,
}

fn counts(sig: &TilingSignature) -> Result<(usize, usize), SearchError> {
    match (sig.k_n, sig.k_m) {
        (Some(k_n), Some(k_m)) => Ok((k_n as usize, k_m as usize)),
        _ => Err(SearchError::MissingCounts(*sig)),
    }
}

/// Every diagram of the signature, up to isomorphism (and mirror image when
/// `limits.mirror_quotient` is set), that passes all verifiers at genus `g`.
pub fn enumerate_diagrams(
    sig: &TilingSignature,
    limits: &SearchLimits,
) -> Result<EnumerationResult, SearchError> {
    let (k_n, k_m) = counts(sig)?;
    if !sig.is_consistent() {
        return Err(SearchError::InvalidSignature(*sig));
    }
    let edges = sig.edge_count().unwrap_or(0);
    if edges > limits.max_edges as u64 {
        return Err(SearchError::TooLarge {
            edges,
            max_edges: limits.max_edges,
        });
    }
    let (n, m) = (sig.n as usize, sig.m as usize);
    let mut search = Search::new(n, m, k_n, k_m, limits.mirror_quotient);
    // rotating and relabelling shaded polygons puts the partner of the first
    // white side at side 0 of the first shaded polygon
    let white_darts = search.white_darts;
    let found = if search.assign(0, white_darts) {
        if limits.parallel {
            search.run_parallel()
        } else {
            let mut found = Found::default();
            search.run(&mut found);
            found
        }
    } else {
        Found::default()
    };

    let candidates = found.maps.len();
    let checked: Vec<(CanonicalForm, SurfaceMap, DiagramReport)> = found
        .maps
        .into_iter()
        .filter_map(|(form, map)| {
            let report = verify(&map).ok()?;
            Some((form, map, report))
        })
        .collect();
    let diagrams: Vec<EnumeratedDiagram> = checked
        .into_iter()
        .filter(|(_, _, r)| r.genus == sig.genus && r.polygon_types == Some((n, m)) && r.passes())
        .map(|(form, map, report)| EnumeratedDiagram { form, map, report })
        .collect();
    let knot_count = diagrams.iter().filter(|d| d.report.components == 1).count();
    Ok(EnumerationResult {
        signature: *sig,
        diagrams,
        knot_count,
        leaves: found.leaves,
        candidates,
    })
}

/// Canonical forms of the one-component diagrams of the signature.
pub fn find_knots(
    sig: &TilingSignature,
    limits: &SearchLimits,
) -> Result<Vec<CanonicalForm>, SearchError> {
    let result = enumerate_diagrams(sig, limits)?;
    Ok(result
        .diagrams
        .into_iter()
        .filter(|d| d.report.components == 1)
        .map(|d| d.form)
        .collect())
}
