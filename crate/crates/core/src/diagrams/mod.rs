//! Link projection diagrams as combinatorial maps, and their verifiers.

mod canonical;
mod checks;
mod format;
mod gluing;
mod map;

use std::fmt;

use thiserror::Error;

pub use canonical::{
    canonical_form, canonical_relabel, canonical_representative, oriented_form, CanonicalForm,
};
pub use checks::{
    checkerboard, gear_shift_edge_classes, two_cut_curves, vertex_pattern, weakly_prime,
    CheckerboardColoring, FaceColor, OddCycle, Primality, TwoCut,
};
pub use format::{parse_diagram, write_diagram, ParseError};
pub use gluing::{from_gluing, to_gluing, GluingSpec, Orientation, Pairing, Polygon, SideRef};
pub use map::SurfaceMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("side {0} is not glued to anything")]
    IncompleteGluing(String),
    #[error("side {0} is glued more than once")]
    DuplicateSide(String),
    #[error("side {0} is glued to itself")]
    SelfPairedSide(String),
    #[error("side {0} does not exist")]
    UnknownSide(String),
    #[error("gluing is not orientable (conflict at polygon {polygon})")]
    NonOrientable { polygon: String },
    #[error("crossing through dart {dart} has valence {valence}, expected 4")]
    Valence { dart: usize, valence: usize },
    #[error("diagram is not connected")]
    Disconnected,
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Everything the verifiers report about one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub genus: u32,
    pub vertices: usize,
    pub edges: usize,
    /// Sorted face side counts.
    pub face_vector: Vec<usize>,
    /// `(n, m)` with `n <= m`, when at most two face sizes occur.
    pub polygon_types: Option<(usize, usize)>,
    pub vertex_pattern_ok: bool,
    pub colorable: bool,
    pub odd_cycle: Option<Vec<usize>>,
    /// Faces of a combinatorial map are disks by construction.
    pub cellular: bool,
    pub weakly_prime: bool,
    pub prime_witness: Option<TwoCut>,
    pub components: usize,
    /// Empty when the diagram has no checkerboard coloring.
    pub edge_class_sizes: Vec<usize>,
}

impl DiagramReport {
    /// All conditions for a right-angled alternating diagram hold.
    pub fn passes(&self) -> bool {
        self.vertex_pattern_ok
            && self.colorable
            && self.cellular
            && self.weakly_prime
            && !self.edge_class_sizes.is_empty()
            && self.edge_class_sizes.iter().all(|&s| s == 4)
    }
}

fn distinct_sizes(face_vector: &[usize]) -> Option<(usize, usize)> {
    let mut sizes = face_vector.to_vec();
    sizes.dedup();
    match sizes[..] {
        [n] => Some((n, n)),
        [n, m] => Some((n, m)),
        _ => None,
    }
}

/// Runs every verifier on a connected map.
pub fn verify(map: &SurfaceMap) -> Result<DiagramReport, DiagramError> {
    let genus = map.genus()?;
    let face_vector = map.face_vector();
    let polygon_types = distinct_sizes(&face_vector);
    let vertex_pattern_ok = polygon_types.is_some_and(|(n, m)| vertex_pattern(map, n, m));
    let coloring = checkerboard(map);
    let primality = weakly_prime(map);
    let edge_class_sizes = match &coloring {
        Ok(c) => gear_shift_edge_classes(map, c),
        Err(_) => Vec::new(),
    };
    Ok(DiagramReport {
        genus,
        vertices: map.vertex_count(),
        edges: map.edge_count(),
        face_vector,
        polygon_types,
        vertex_pattern_ok,
        colorable: coloring.is_ok(),
        odd_cycle: coloring.err().map(|c| c.faces),
        cellular: true,
        weakly_prime: primality.weakly_prime,
        prime_witness: primality.witness,
        components: map.components(),
        edge_class_sizes,
    })
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        writeln!(f, "vertices {}", self.vertices)?;
        writeln!(f, "edges {}", self.edges)?;
        writeln!(f, "faces {}", join(&self.face_vector))?;
        match self.polygon_types {
            Some((n, m)) => writeln!(f, "pattern [{n},{m},{n},{m}] {}", self.vertex_pattern_ok)?,
            None => writeln!(f, "pattern none false")?,
        }
        writeln!(f, "colorable {}", self.colorable)?;
        if let Some(cycle) = &self.odd_cycle {
            writeln!(f, "odd_cycle {}", join(cycle))?;
        }
        writeln!(f, "cellular {}", self.cellular)?;
        writeln!(f, "weakly_prime {}", self.weakly_prime)?;
        if let Some(w) = &self.prime_witness {
            writeln!(
                f,
                "two_cut edges {} {} faces {} {} enclosed_crossings {}",
                w.edges[0], w.edges[1], w.faces[0], w.faces[1], w.enclosed_vertices
            )?;
        }
        writeln!(f, "components {}", self.components)?;
        writeln!(f, "edge_classes {}", join(&self.edge_class_sizes))?;
        write!(f, "verdict {}", if self.passes() { "pass" } else { "fail" })
    }
}
