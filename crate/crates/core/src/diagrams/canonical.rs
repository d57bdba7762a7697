use std::fmt;

use super::SurfaceMap;

/// Byte encoding of a map up to isomorphism. Byte order agrees with the
/// numeric order of the encoded labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Breadth-first relabelling from `start`: returns the new label of every
/// dart, or `None` if the map is disconnected.
fn bfs_labels(map: &SurfaceMap, start: usize) -> Option<Vec<usize>> {
    let n = map.dart_count();
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[start] = 0;
    order.push(start);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for next in [map.sigma(d), map.alpha(d)] {
            if label[next] == usize::MAX {
                label[next] = order.len();
                order.push(next);
            }
        }
        i += 1;
    }
    (order.len() == n).then_some(label)
}

/// `(sigma, alpha)` of the relabelled map, in label order.
fn code(map: &SurfaceMap, label: &[usize]) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0); map.dart_count()];
    for d in 0..map.dart_count() {
        out[label[d]] = (label[map.sigma(d)], label[map.alpha(d)]);
    }
    out
}

/// The relabelled copy of `map` whose code is smallest over all start darts,
/// respecting orientation.
pub fn canonical_relabel(map: &SurfaceMap) -> SurfaceMap {
    let mut best: Option<(Vec<(usize, usize)>, Vec<usize>)> = None;
    for start in 0..map.dart_count() {
        let Some(label) = bfs_labels(map, start) else {
            // disconnected maps fall back to their own labelling
            return map.clone();
        };
        let c = code(map, &label);
        if best.as_ref().map_or(true, |(b, _)| c < *b) {
            best = Some((c, label));
        }
    }
    let (_, label) = best.expect("maps have darts");
    map.relabel(&label).expect("bfs labels are a permutation")
}

fn encode(map: &SurfaceMap) -> CanonicalForm {
    let mut bytes = Vec::with_capacity(4 + 8 * map.dart_count());
    bytes.extend_from_slice(&(map.dart_count() as u32).to_be_bytes());
    for d in 0..map.dart_count() {
        bytes.extend_from_slice(&(map.sigma(d) as u32).to_be_bytes());
        bytes.extend_from_slice(&(map.alpha(d) as u32).to_be_bytes());
    }
    CanonicalForm(bytes)
}

/// Form invariant under orientation-preserving isomorphism only.
pub fn oriented_form(map: &SurfaceMap) -> CanonicalForm {
    encode(&canonical_relabel(map))
}

/// Form shared by a map, its relabellings and its mirror image.
pub fn canonical_form(map: &SurfaceMap) -> CanonicalForm {
    oriented_form(map).min(oriented_form(&map.mirror()))
}

/// Canonical representative of the class used by [`canonical_form`].
pub fn canonical_representative(map: &SurfaceMap) -> SurfaceMap {
    let a = canonical_relabel(map);
    let b = canonical_relabel(&map.mirror());
    if encode(&a) <= encode(&b) {
        a
    } else {
        b
    }
}
