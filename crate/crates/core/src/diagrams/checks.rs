//! Verifiers for the diagram conditions of a right-angled alternating link.

use std::collections::{BTreeSet, VecDeque};

use super::SurfaceMap;

/// `true` iff the faces around every crossing read `n, m, n, m` cyclically
/// and no edge has the same face on both sides.
///
/// For `n != m` the second condition follows from the first; for `n == m` it
/// is what separates an `[n, n, n, n]` pattern from a face wrapping around a
/// crossing.
pub fn vertex_pattern(map: &SurfaceMap, n: usize, m: usize) -> bool {
    let self_adjacent = (0..map.dart_count()).any(|d| map.face_of(d) == map.face_of(map.alpha(d)));
    if self_adjacent {
        return false;
    }
    map.vertices().iter().all(|darts| {
        let sizes: Vec<usize> = darts
            .iter()
            .map(|&d| map.face_degree(map.face_of(d)))
            .collect();
        sizes == [n, m, n, m] || sizes == [m, n, m, n]
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceColor {
    White,
    Shaded,
}

impl FaceColor {
    fn other(self) -> Self {
        match self {
            FaceColor::White => FaceColor::Shaded,
            FaceColor::Shaded => FaceColor::White,
        }
    }
}

/// A proper 2-colouring of the faces. In every connected component the face
/// with the smallest dart is white.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardColoring {
    pub colors: Vec<FaceColor>,
}

impl CheckerboardColoring {
    pub fn color(&self, face: usize) -> FaceColor {
        self.colors[face]
    }

    /// The other coloring of the same map.
    pub fn swapped(&self) -> Self {
        CheckerboardColoring {
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }
}

/// A closed walk of odd length in the face adjacency graph, listed as faces;
/// consecutive faces (cyclically) share an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub faces: Vec<usize>,
}

pub fn checkerboard(map: &SurfaceMap) -> Result<CheckerboardColoring, OddCycle> {
    let faces = map.face_count();
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); faces];
    for d in 0..map.dart_count() {
        let (f, g) = (map.face_of(d), map.face_of(map.alpha(d)));
        if f == g {
            return Err(OddCycle { faces: vec![f] });
        }
        neighbours[f].push(g);
    }
    let mut color: Vec<Option<FaceColor>> = vec![None; faces];
    let mut parent = vec![usize::MAX; faces];
    for root in 0..faces {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(FaceColor::White);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let cf = color[f].unwrap();
            for &g in &neighbours[f] {
                match color[g] {
                    None => {
                        color[g] = Some(cf.other());
                        parent[g] = f;
                        queue.push_back(g);
                    }
                    Some(cg) if cg == cf => {
                        return Err(OddCycle {
                            faces: odd_cycle(&parent, f, g),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(CheckerboardColoring {
        colors: color.into_iter().map(Option::unwrap).collect(),
    })
}

/// Tree paths from `f` and `g` up to their common ancestor, closed by the
/// edge `f`–`g`. Both endpoints have the same depth parity, so the cycle is odd.
fn odd_cycle(parent: &[usize], f: usize, g: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pf, pg) = (path(f), path(g));
    let on_g: BTreeSet<usize> = pg.iter().copied().collect();
    let lca_pos = pf
        .iter()
        .position(|x| on_g.contains(x))
        .expect("same BFS tree");
    let lca = pf[lca_pos];
    let mut cycle: Vec<usize> = pf[..=lca_pos].to_vec();
    let g_pos = pg.iter().position(|&x| x == lca).unwrap();
    cycle.extend(pg[..g_pos].iter().rev());
    cycle
}

/// A simple closed curve meeting the diagram in one point of each of two
/// distinct edges and bounding a disk that contains a crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCut {
    /// The edges crossed, by smaller dart.
    pub edges: [usize; 2],
    /// The faces the curve runs through (may coincide).
    pub faces: [usize; 2],
    /// Darts whose sides the curve crosses from inside `faces[0]`.
    pub darts: [usize; 2],
    /// Number of crossings enclosed by the disk.
    pub enclosed_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primality {
    pub weakly_prime: bool,
    pub witness: Option<TwoCut>,
}

/// Candidate two-crossing curves: pairs of darts `(a, b)` on one face whose
/// partners `alpha(a)`, `alpha(b)` lie on one face, crossing distinct edges,
/// with non-interleaving chords when both faces coincide.
pub fn two_cut_curves(map: &SurfaceMap) -> Vec<(usize, usize)> {
    let mut position = vec![0; map.dart_count()];
    for face in map.faces() {
        for (i, &d) in face.iter().enumerate() {
            position[d] = i;
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for face in map.faces() {
        for (i, &a) in face.iter().enumerate() {
            for &b in &face[i + 1..] {
                let (pa, pb) = (map.alpha(a), map.alpha(b));
                if map.edge_key(a) == map.edge_key(b) || map.face_of(pa) != map.face_of(pb) {
                    continue;
                }
                if map.face_of(a) == map.face_of(pa) {
                    let (lo, hi) = (position[a].min(position[b]), position[a].max(position[b]));
                    let inside = |d: usize| lo < position[d] && position[d] < hi;
                    if inside(pa) != inside(pb) {
                        continue;
                    }
                }
                let key = {
                    let first = (a.min(b), a.max(b));
                    let second = (pa.min(pb), pa.max(pb));
                    first.min(second)
                };
                if seen.insert(key) {
                    out.push(key);
                }
            }
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Euler characteristics of the two sides of the curve through darts `a` and
/// `b`, with their vertex counts, or `None` when the curve does not separate.
///
/// Works on half-edges: dart `d` also names the half of its edge next to its
/// origin. Cutting removes the two crossed edges' midpoints and splits the
/// two faces along chords; everything else stays glued.
fn sides_of_curve(map: &SurfaceMap, a: usize, b: usize) -> Option<[(i64, usize); 2]> {
    let darts = map.dart_count();
    let (pa, pb) = (map.alpha(a), map.alpha(b));
    let cut_edges = [map.edge_key(a), map.edge_key(b)];
    let (f1, f2) = (map.face_of(a), map.face_of(pa));
    let mut uf = UnionFind::new(darts);
    for d in 0..darts {
        uf.union(d, map.sigma(d));
        if !cut_edges.contains(&map.edge_key(d)) {
            uf.union(d, map.alpha(d));
        }
    }

    // Face pieces, each a list of half-edges along its boundary.
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    for (f, face) in map.faces().iter().enumerate() {
        // boundary sequence: slot i contributes half-edges face[i], alpha(face[i])
        let halves: Vec<usize> = face.iter().flat_map(|&d| [d, map.alpha(d)]).collect();
        let chords: Vec<[usize; 2]> = match (f == f1, f == f2) {
            (false, false) => {
                pieces.push(halves);
                continue;
            }
            (true, true) => vec![[a, b], [pa, pb]],
            (true, false) => vec![[a, b]],
            (false, true) => vec![[pa, pb]],
        };
        let slot = |d: usize| face.iter().position(|&x| x == d).unwrap();
        // cut after boundary position 2*slot
        let mut cuts: Vec<(usize, usize)> = Vec::new();
        for (c, chord) in chords.iter().enumerate() {
            cuts.push((slot(chord[0]), c));
            cuts.push((slot(chord[1]), c));
        }
        cuts.sort_unstable();
        let len = halves.len();
        // arcs between consecutive cuts; arc j runs from cut j to cut j+1
        let arcs: Vec<Vec<usize>> = (0..cuts.len())
            .map(|j| {
                let start = 2 * cuts[j].0 + 1;
                let end = 2 * cuts[(j + 1) % cuts.len()].0 + 1;
                let span = (end + len - start) % len;
                (0..span).map(|t| halves[(start + t) % len]).collect()
            })
            .collect();
        if chords.len() == 1 {
            pieces.extend(arcs);
        } else {
            // an arc bounded by both ends of one chord is cut off on its own;
            // the other two arcs share the strip between the chords
            let mut middle = Vec::new();
            for (j, arc) in arcs.into_iter().enumerate() {
                if cuts[j].1 == cuts[(j + 1) % cuts.len()].1 {
                    pieces.push(arc);
                } else {
                    middle.extend(arc);
                }
            }
            pieces.push(middle);
        }
    }
    for piece in &pieces {
        for w in piece.windows(2) {
            uf.union(w[0], w[1]);
        }
    }

    let root_a = uf.find(a);
    let root_other = uf.find(pa);
    if root_a == root_other {
        return None;
    }
    let roots = [root_a, root_other];
    let side = |uf: &mut UnionFind, d: usize| {
        let r = uf.find(d);
        roots.iter().position(|&x| x == r).expect("two sides")
    };
    // each side also carries the two crossing points and the two chords,
    // which cancel in V - E + F
    let mut chi = [0i64; 2];
    let mut verts = [0usize; 2];
    for v in map.vertices() {
        let s = side(&mut uf, v[0]);
        chi[s] += 1;
        verts[s] += 1;
    }
    for d in 0..darts {
        if d < map.alpha(d) && !cut_edges.contains(&d) {
            let s = side(&mut uf, d);
            chi[s] -= 1;
        }
    }
    // each cut edge leaves one half on each side
    for h in [a, pa, b, pb] {
        let s = side(&mut uf, h);
        chi[s] -= 1;
    }
    for piece in &pieces {
        let s = side(&mut uf, piece[0]);
        chi[s] += 1;
    }
    Some([(chi[0], verts[0]), (chi[1], verts[1])])
}

pub fn weakly_prime(map: &SurfaceMap) -> Primality {
    for (a, b) in two_cut_curves(map) {
        let Some(sides) = sides_of_curve(map, a, b) else {
            continue;
        };
        if let Some(&(_, enclosed)) = sides.iter().find(|(chi, verts)| *chi == 1 && *verts > 0) {
            let witness = TwoCut {
                edges: [map.edge_key(a), map.edge_key(b)],
                faces: [map.face_of(a), map.face_of(map.alpha(a))],
                darts: [a, b],
                enclosed_vertices: enclosed,
            };
            return Primality {
                weakly_prime: false,
                witness: Some(witness),
            };
        }
    }
    Primality {
        weakly_prime: true,
        witness: None,
    }
}

/// Sizes of the edge classes formed when two copies of the diagram are glued
/// face to face, each face turned one edge: white faces clockwise, shaded
/// faces counterclockwise. Sorted ascending.
pub fn gear_shift_edge_classes(map: &SurfaceMap, coloring: &CheckerboardColoring) -> Vec<usize> {
    let lower = map.dart_count();
    // edge e of the upper copy is node e, of the lower copy node lower + e
    let mut uf = UnionFind::new(2 * lower);
    for (f, face) in map.faces().iter().enumerate() {
        let k = face.len();
        for (i, &d) in face.iter().enumerate() {
            // face boundaries run counterclockwise, so clockwise is a step back
            let j = match coloring.color(f) {
                FaceColor::White => (i + k - 1) % k,
                FaceColor::Shaded => (i + 1) % k,
            };
            uf.union(map.edge_key(d), lower + map.edge_key(face[j]));
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for d in 0..map.dart_count() {
        if d == map.edge_key(d) {
            for node in [d, lower + d] {
                let r = uf.find(node);
                *sizes.entry(r).or_insert(0usize) += 1;
            }
        }
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    out.sort_unstable();
    out
}
