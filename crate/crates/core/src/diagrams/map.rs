use std::collections::VecDeque;

use super::DiagramError;

/// A 4-valent graph cellularly embedded in a closed orientable surface,
/// stored as two permutations on darts.
///
/// `alpha` pairs the two darts of every edge and `sigma` rotates the darts
/// leaving a vertex. Faces are the orbits of `phi = sigma ∘ alpha`; a dart
/// runs along the boundary of the face on its left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceMap {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
}

/// Orbits of a permutation, each starting at its smallest element, in order
/// of that element.
pub(crate) fn orbits(perm: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut owner = vec![usize::MAX; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if owner[start] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        while owner[d] == usize::MAX {
            owner[d] = out.len();
            orbit.push(d);
            d = perm[d];
        }
        out.push(orbit);
    }
    (owner, out)
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &x in perm {
        if x >= perm.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl SurfaceMap {
    /// Builds a map from its vertex rotation and edge involution.
    ///
    /// Fails unless `alpha` is a fixed-point-free involution and every orbit
    /// of `sigma` has length 4.
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>) -> Result<Self, DiagramError> {
        if sigma.len() != alpha.len() {
            return Err(DiagramError::InvalidMap(
                "sigma and alpha have different lengths".into(),
            ));
        }
        if sigma.is_empty() {
            return Err(DiagramError::InvalidMap("map has no darts".into()));
        }
        if !is_permutation(&sigma) || !is_permutation(&alpha) {
            return Err(DiagramError::InvalidMap(
                "sigma and alpha must be permutations".into(),
            ));
        }
        if let Some(d) = (0..alpha.len()).find(|&d| alpha[d] == d || alpha[alpha[d]] != d) {
            return Err(DiagramError::InvalidMap(format!(
                "alpha is not a fixed-point-free involution at dart {d}"
            )));
        }
        let (vertex_of, vertices) = orbits(&sigma);
        if let Some(v) = vertices.iter().find(|v| v.len() != 4) {
            return Err(DiagramError::Valence {
                dart: v[0],
                valence: v.len(),
            });
        }
        let phi: Vec<usize> = (0..sigma.len()).map(|d| sigma[alpha[d]]).collect();
        let (face_of, faces) = orbits(&phi);
        Ok(SurfaceMap {
            sigma,
            alpha,
            face_of,
            faces,
            vertex_of,
            vertices,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    /// Next dart along the boundary of the face on the left of `d`.
    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha_perm(&self) -> &[usize] {
        &self.alpha
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// Edge index of a dart: edges are numbered by their smaller dart.
    pub fn edge_key(&self, d: usize) -> usize {
        d.min(self.alpha[d])
    }

    /// Face boundaries as dart cycles in `phi` order.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Vertices as dart cycles in `sigma` order.
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn face_degree(&self, face: usize) -> usize {
        self.faces[face].len()
    }

    /// Sorted face side counts.
    pub fn face_vector(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.faces.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.dart_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = queue.pop_front() {
            for next in [self.sigma[d], self.alpha[d]] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    queue.push_back(next);
                }
            }
        }
        count == self.dart_count()
    }

    /// Genus from `V - E + F = 2 - 2g`.
    pub fn genus(&self) -> Result<u32, DiagramError> {
        if !self.is_connected() {
            return Err(DiagramError::Disconnected);
        }
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0);
        Ok(((2 - chi) / 2) as u32)
    }

    /// The same diagram seen from the other side of the surface.
    pub fn mirror(&self) -> SurfaceMap {
        let mut inverse = vec![0; self.dart_count()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inverse[s] = d;
        }
        SurfaceMap::new(inverse, self.alpha.clone()).expect("mirror preserves map invariants")
    }

    /// Renames dart `d` to `perm[d]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SurfaceMap, DiagramError> {
        if perm.len() != self.dart_count() || !is_permutation(perm) {
            return Err(DiagramError::InvalidMap(
                "relabelling is not a permutation".into(),
            ));
        }
        let n = self.dart_count();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            sigma[perm[d]] = perm[self.sigma[d]];
            alpha[perm[d]] = perm[self.alpha[d]];
        }
        SurfaceMap::new(sigma, alpha)
    }

    /// Number of link components: orbits of the straight-ahead walk, which
    /// leaves each crossing through the dart opposite the one it arrived on.
    pub fn components(&self) -> usize {
        let mut edge_seen = vec![false; self.dart_count()];
        let mut count = 0;
        for start in 0..self.dart_count() {
            if edge_seen[self.edge_key(start)] {
                continue;
            }
            count += 1;
            let mut d = start;
            loop {
                edge_seen[self.edge_key(d)] = true;
                let arrived = self.alpha[d];
                d = self.sigma[self.sigma[arrived]];
                if d == start {
                    break;
                }
            }
        }
        count
    }
}
