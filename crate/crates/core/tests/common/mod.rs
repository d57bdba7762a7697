//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};
use std::path::PathBuf;

use rgcr::diagrams::{
    canonical_form, from_gluing, parse_diagram, CanonicalForm, GluingSpec, Orientation, SurfaceMap,
};

pub fn data_path(name: &str) -> PathBuf {
    // also compiled into the command-line crate's acceptance suite
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
}

pub fn load(name: &str) -> SurfaceMap {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    from_gluing(&parse_diagram(&text).unwrap()).unwrap()
}

fn extend_matching(
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    let Some(i) = used.iter().position(|u| !u) else {
        visit(current);
        return;
    };
    used[i] = true;
    for j in i + 1..used.len() {
        if !used[j] {
            used[j] = true;
            current.push((i, j));
            extend_matching(used, current, visit);
            current.pop();
            used[j] = false;
        }
    }
    used[i] = false;
}

/// Calls `visit` with every perfect matching of `0..n`.
pub fn for_each_matching(n: usize, visit: &mut impl FnMut(&[(usize, usize)])) {
    assert!(n % 2 == 0);
    extend_matching(&mut vec![false; n], &mut Vec::new(), visit);
}

/// Every connected 4-valent map obtained by gluing polygons of the given
/// sizes with orientable identifications, one per isomorphism class.
pub fn gluing_census(sizes: &[usize]) -> BTreeMap<CanonicalForm, SurfaceMap> {
    let mut sides = Vec::new();
    for (p, &s) in sizes.iter().enumerate() {
        sides.extend((0..s).map(|i| (p, i)));
    }
    let mut out = BTreeMap::new();
    for_each_matching(sides.len(), &mut |pairs| {
        let mut spec = GluingSpec::default();
        for (p, &s) in sizes.iter().enumerate() {
            spec.add_polygon(format!("P{p}"), s);
        }
        for &(i, j) in pairs {
            spec.glue(sides[i], sides[j], Orientation::Reversing);
        }
        if let Ok(map) = from_gluing(&spec) {
            if map.is_connected() {
                out.entry(canonical_form(&map)).or_insert(map);
            }
        }
    });
    out
}

/// Every connected 4-valent map with `vertices` crossings, one per
/// isomorphism class. The rotation is fixed to `(0 1 2 3)(4 5 6 7)...` and the
/// edge pairing ranges over perfect matchings. Relabelling crossings and
/// rotating them moves the partner of any chosen dart into `{1, 2, 3, 4}`, so
/// only those partners of dart 0 are tried.
pub fn four_valent_census(vertices: usize) -> BTreeMap<CanonicalForm, SurfaceMap> {
    let n = 4 * vertices;
    let sigma: Vec<usize> = (0..n).map(|d| d - d % 4 + (d + 1) % 4).collect();
    let mut out = BTreeMap::new();
    let mut visit = |pairs: &[(usize, usize)]| {
        let mut alpha = vec![0; n];
        for &(i, j) in pairs {
            alpha[i] = j;
            alpha[j] = i;
        }
        let map = SurfaceMap::new(sigma.clone(), alpha).unwrap();
        if map.is_connected() {
            out.entry(canonical_form(&map)).or_insert(map);
        }
    };
    for partner in 1..n.min(5) {
        let mut used = vec![false; n];
        used[0] = true;
        used[partner] = true;
        extend_matching(&mut used, &mut vec![(0, partner)], &mut visit);
    }
    out
}

/// All connected 4-valent maps of positive genus with at most four crossings.
pub fn small_maps() -> &'static [SurfaceMap] {
    static MAPS: std::sync::OnceLock<Vec<SurfaceMap>> = std::sync::OnceLock::new();
    MAPS.get_or_init(|| {
        (1..=4)
            .flat_map(|v| four_valent_census(v).into_values())
            .filter(|m| m.genus().unwrap() >= 1)
            .collect()
    })
}

/// Partitions of `total` into parts of size at least 1, as non-decreasing lists.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in min..=rest {
            current.push(part);
            go(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out
}

/// Orientation-preserving isomorphism test by propagating a single choice of
/// image for dart 0.
pub fn isomorphic(a: &SurfaceMap, b: &SurfaceMap) -> bool {
    let n = a.dart_count();
    if n != b.dart_count() {
        return false;
    }
    'start: for target in 0..n {
        let mut image = vec![usize::MAX; n];
        let mut taken = vec![false; n];
        image[0] = target;
        taken[target] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(d) = queue.pop_front() {
            let fd = image[d];
            for (next, want) in [(a.sigma(d), b.sigma(fd)), (a.alpha(d), b.alpha(fd))] {
                if image[next] == usize::MAX {
                    if taken[want] {
                        continue 'start;
                    }
                    image[next] = want;
                    taken[want] = true;
                    queue.push_back(next);
                } else if image[next] != want {
                    continue 'start;
                }
            }
        }
        if image.iter().all(|&x| x != usize::MAX) {
            return true;
        }
    }
    false
}

pub fn isomorphic_up_to_mirror(a: &SurfaceMap, b: &SurfaceMap) -> bool {
    isomorphic(a, b) || isomorphic(a, &b.mirror())
}

/// Link components by following strands: leaving a crossing along dart `d`,
/// the strand arrives at `alpha(d)` and continues on the dart opposite to it.
pub fn strand_count(map: &SurfaceMap) -> usize {
    let n = map.dart_count();
    let mut seen = vec![false; n];
    let mut strands = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        strands += 1;
        let mut d = start;
        loop {
            // mark the edge in both directions
            seen[d] = true;
            let arrive = map.alpha(d);
            seen[arrive] = true;
            d = map.sigma(map.sigma(arrive));
            if d == start {
                break;
            }
            assert!(!seen[d], "strand revisits an edge");
        }
    }
    strands
}

/// Growable rotation system for cutting curves into a map.
struct Surgery {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
}

impl Surgery {
    fn phi(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    fn same_face(&self, u: usize, w: usize) -> bool {
        let mut d = self.phi(u);
        loop {
            if d == w {
                return true;
            }
            if d == u {
                return false;
            }
            d = self.phi(d);
        }
    }

    /// Puts a new 2-valent vertex in the middle of the edge of `d`. Afterwards
    /// both `d` and its old partner end at the new vertex. Returns the two
    /// new darts `(x, y)` with `alpha(d) = x` and `y` following `d` on its face.
    fn subdivide(&mut self, d: usize) -> (usize, usize) {
        let dp = self.alpha[d];
        let x = self.sigma.len();
        let y = x + 1;
        self.sigma.extend([y, x]);
        self.alpha.extend([d, dp]);
        self.alpha[d] = x;
        self.alpha[dp] = y;
        (x, y)
    }

    /// Adds an edge across the face containing `u` and `w`, from the corner
    /// following `u` to the corner following `w`. Returns its two darts.
    fn chord(&mut self, u: usize, w: usize) -> [usize; 2] {
        let (au, aw) = (self.alpha[u], self.alpha[w]);
        let (su, sw) = (self.sigma[au], self.sigma[aw]);
        let c1 = self.sigma.len();
        let c2 = c1 + 1;
        self.sigma[au] = c1;
        self.sigma[aw] = c2;
        self.sigma.extend([su, sw]);
        self.alpha.extend([c2, c1]);
        [c1, c2]
    }

    fn orbits(&self, perm: impl Fn(usize) -> usize) -> Vec<usize> {
        let n = self.sigma.len();
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if id[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            while id[d] == usize::MAX {
                id[d] = count;
                d = perm(d);
            }
            count += 1;
        }
        id
    }
}

/// A curve meeting the diagram in two edge points. Point `i` lies on the edge
/// of dart `darts[i]`; the curve runs through the face of `darts[0]` from the
/// first point to the second and back through the face on the other side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Curve {
    pub darts: [usize; 2],
}

/// Cuts the surface along `curve` and returns, for every side, its Euler
/// characteristic and the number of crossings it contains. `None` when the
/// curve cannot be drawn without self-intersection.
pub fn cut(map: &SurfaceMap, curve: Curve) -> Option<Vec<(i64, usize)>> {
    let n0 = map.dart_count();
    let [s1, s2] = curve.darts;
    let mut s = Surgery {
        sigma: (0..n0).map(|d| map.sigma(d)).collect(),
        alpha: (0..n0).map(|d| map.alpha(d)).collect(),
    };
    let face = |d: usize| map.face_of(d);
    if face(s1) != face(s2) || face(map.alpha(s1)) != face(map.alpha(s2)) {
        return None;
    }
    let a1 = map.alpha(s1);
    // corners of the curve at each point: (dart on the s-side, dart on the far side)
    let (p, q, far_arc): ((usize, usize), (usize, usize), bool);
    if map.edge_key(s1) != map.edge_key(s2) {
        let a2 = map.alpha(s2);
        s.subdivide(s1);
        s.subdivide(s2);
        p = (s1, a1);
        q = (s2, a2);
        far_arc = false;
    } else {
        // both points on one edge, the second further along `s1`
        let (_, y1) = s.subdivide(s1);
        let (x2, _) = s.subdivide(y1);
        p = (s1, x2);
        q = (y1, a1);
        // with s2 = alpha(s1) the arc in the first face ends on the far side
        far_arc = s2 != s1;
    }
    let (near_end, far_end) = if far_arc { (q.1, q.0) } else { (q.0, q.1) };
    if !s.same_face(p.0, near_end) {
        return None;
    }
    let first = s.chord(p.0, near_end);
    if !s.same_face(p.1, far_end) {
        return None;
    }
    let second = s.chord(p.1, far_end);
    let on_curve = |d: usize| first.contains(&d) || second.contains(&d);

    let total = s.sigma.len();
    let face_id = s.orbits(|d| s.phi(d));
    let vertex_id = s.orbits(|d| s.sigma[d]);
    let faces = face_id.iter().max().unwrap() + 1;
    // faces on one side of the curve: joined across every edge not on the curve
    let mut side: Vec<usize> = (0..faces).collect();
    fn root(side: &mut [usize], mut x: usize) -> usize {
        while side[x] != x {
            side[x] = side[side[x]];
            x = side[x];
        }
        x
    }
    for d in 0..total {
        if !on_curve(d) {
            let (a, b) = (
                root(&mut side, face_id[d]),
                root(&mut side, face_id[s.alpha[d]]),
            );
            side[a.max(b)] = a.min(b);
        }
    }
    let mut chi: BTreeMap<usize, i64> = BTreeMap::new();
    let mut crossings: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..faces {
        *chi.entry(root(&mut side, f)).or_default() += 1;
    }
    for d in 0..total {
        if !on_curve(d) && d < s.alpha[d] {
            *chi.entry(root(&mut side, face_id[d])).or_default() -= 1;
        }
    }
    let mut counted = vec![false; total];
    for d in 0..n0 {
        let v = vertex_id[d];
        if !counted[v] {
            counted[v] = true;
            let r = root(&mut side, face_id[d]);
            *chi.entry(r).or_default() += 1;
            *crossings.entry(r).or_default() += 1;
        }
    }
    Some(
        chi.iter()
            .map(|(r, &c)| (c, crossings.get(r).copied().unwrap_or(0)))
            .collect(),
    )
}

/// Every curve through two edge points, including both points on one edge.
pub fn all_curves(map: &SurfaceMap) -> Vec<Curve> {
    let n = map.dart_count();
    let mut out = Vec::new();
    for s1 in 0..n {
        for s2 in 0..n {
            out.push(Curve { darts: [s1, s2] });
        }
    }
    out
}

/// `true` when the curve bounds a disk containing a crossing.
pub fn is_two_cut(map: &SurfaceMap, curve: Curve) -> bool {
    cut(map, curve).is_some_and(|sides| sides.iter().any(|&(chi, v)| chi == 1 && v > 0))
}

/// Weak primality by exhaustive curve search; only meaningful in genus >= 1.
pub fn weakly_prime_oracle(map: &SurfaceMap) -> bool {
    all_curves(map).into_iter().all(|c| !is_two_cut(map, c))
}
