use std::collections::VecDeque;

use super::{DiagramError, SurfaceMap};

/// How two polygon sides are identified.
///
/// With both polygons labelled counterclockwise, `Reversing` glues the sides
/// with opposite boundary directions (the orientable identification) and
/// `Twisted` glues them with matching directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Reversing,
    Twisted,
}

impl Orientation {
    pub fn symbol(self) -> char {
        match self {
            Orientation::Reversing => '+',
            Orientation::Twisted => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    pub id: String,
    pub sides: usize,
}

/// Side `edge` (0-based, counterclockwise) of polygon `polygon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideRef {
    pub polygon: usize,
    pub edge: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pairing {
    pub a: SideRef,
    pub b: SideRef,
    pub orientation: Orientation,
}

/// An edge pairing of a disjoint collection of polygons.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GluingSpec {
    pub polygons: Vec<Polygon>,
    pub pairings: Vec<Pairing>,
}

impl GluingSpec {
    pub fn new(polygons: Vec<Polygon>) -> Self {
        GluingSpec {
            polygons,
            pairings: Vec::new(),
        }
    }

    pub fn add_polygon(&mut self, id: impl Into<String>, sides: usize) -> usize {
        self.polygons.push(Polygon {
            id: id.into(),
            sides,
        });
        self.polygons.len() - 1
    }

    pub fn glue(&mut self, a: (usize, usize), b: (usize, usize), orientation: Orientation) {
        self.pairings.push(Pairing {
            a: SideRef {
                polygon: a.0,
                edge: a.1,
            },
            b: SideRef {
                polygon: b.0,
                edge: b.1,
            },
            orientation,
        });
    }

    fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.polygons.len() + 1);
        let mut total = 0;
        for p in &self.polygons {
            offsets.push(total);
            total += p.sides;
        }
        offsets.push(total);
        offsets
    }

    fn side_label(&self, side: SideRef) -> String {
        match self.polygons.get(side.polygon) {
            Some(p) => format!("{}.{}", p.id, side.edge),
            None => format!("#{}.{}", side.polygon, side.edge),
        }
    }

    /// Chooses an orientation for every polygon so that each pairing becomes
    /// orientation reversing; `true` marks a polygon whose labelling must be
    /// read clockwise.
    fn orient(&self) -> Result<Vec<bool>, DiagramError> {
        let k = self.polygons.len();
        let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); k];
        for p in &self.pairings {
            let twist = p.orientation == Orientation::Twisted;
            adjacency[p.a.polygon].push((p.b.polygon, twist));
            adjacency[p.b.polygon].push((p.a.polygon, twist));
        }
        let mut flip: Vec<Option<bool>> = vec![None; k];
        for root in 0..k {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(p) = queue.pop_front() {
                let fp = flip[p].unwrap();
                for &(q, twist) in &adjacency[p] {
                    let want = fp ^ twist;
                    match flip[q] {
                        None => {
                            flip[q] = Some(want);
                            queue.push_back(q);
                        }
                        Some(fq) if fq != want => {
                            return Err(DiagramError::NonOrientable {
                                polygon: self.polygons[q].id.clone(),
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(flip.into_iter().map(Option::unwrap).collect())
    }
}

/// Builds the quotient map of a gluing. Darts are numbered polygon by
/// polygon, side by side, so dart `offset(p) + i` is side `i` of polygon `p`.
pub fn from_gluing(spec: &GluingSpec) -> Result<SurfaceMap, DiagramError> {
    if spec.polygons.is_empty() {
        return Err(DiagramError::InvalidMap("gluing has no polygons".into()));
    }
    if let Some(p) = spec.polygons.iter().find(|p| p.sides == 0) {
        return Err(DiagramError::InvalidMap(format!(
            "polygon {} has no sides",
            p.id
        )));
    }
    let offsets = spec.offsets();
    let total = *offsets.last().unwrap();
    let mut alpha = vec![usize::MAX; total];
    let dart = |side: SideRef| -> Result<usize, DiagramError> {
        match spec.polygons.get(side.polygon) {
            Some(p) if side.edge < p.sides => Ok(offsets[side.polygon] + side.edge),
            _ => Err(DiagramError::UnknownSide(spec.side_label(side))),
        }
    };
    for p in &spec.pairings {
        let (a, b) = (dart(p.a)?, dart(p.b)?);
        if a == b {
            return Err(DiagramError::SelfPairedSide(spec.side_label(p.a)));
        }
        for (d, side) in [(a, p.a), (b, p.b)] {
            if alpha[d] != usize::MAX {
                return Err(DiagramError::DuplicateSide(spec.side_label(side)));
            }
        }
        alpha[a] = b;
        alpha[b] = a;
    }
    if let Some(d) = alpha.iter().position(|&x| x == usize::MAX) {
        let polygon = offsets.partition_point(|&o| o <= d) - 1;
        let side = SideRef {
            polygon,
            edge: d - offsets[polygon],
        };
        return Err(DiagramError::IncompleteGluing(spec.side_label(side)));
    }
    let flip = spec.orient()?;
    let mut phi = vec![0; total];
    for (p, poly) in spec.polygons.iter().enumerate() {
        let base = offsets[p];
        for i in 0..poly.sides {
            let next = if flip[p] {
                (i + poly.sides - 1) % poly.sides
            } else {
                (i + 1) % poly.sides
            };
            phi[base + i] = base + next;
        }
    }
    // phi = sigma ∘ alpha, so sigma = phi ∘ alpha
    let sigma: Vec<usize> = (0..total).map(|d| phi[alpha[d]]).collect();
    SurfaceMap::new(sigma, alpha)
}

/// Writes a map back out as a gluing of its faces. Face `i` becomes polygon
/// `F<i>` whose side 0 is the smallest dart on its boundary.
pub fn to_gluing(map: &SurfaceMap) -> GluingSpec {
    let mut slot = vec![(0, 0); map.dart_count()];
    let mut spec = GluingSpec::default();
    for (f, face) in map.faces().iter().enumerate() {
        spec.add_polygon(format!("F{f}"), face.len());
        for (i, &d) in face.iter().enumerate() {
            slot[d] = (f, i);
        }
    }
    for d in 0..map.dart_count() {
        let e = map.alpha(d);
        if d < e {
            spec.glue(slot[d], slot[e], Orientation::Reversing);
        }
    }
    spec
}
