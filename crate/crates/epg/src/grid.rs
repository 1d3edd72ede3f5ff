//! Grid geometry: points, canonical edges, axis-aligned lattice paths with
//! bends, and the relevant-edge machinery (extraction, reconstruction, and
//! intersection testing through relevant edges only).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Direction of a grid edge or path segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Horizontal,
    Vertical,
}

impl Dir {
    pub fn perpendicular(self) -> Dir {
        match self {
            Dir::Horizontal => Dir::Vertical,
            Dir::Vertical => Dir::Horizontal,
        }
    }
}

/// A grid point, addressed by column `x` and row `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: u32,
    pub y: u32,
}

impl GridPoint {
    pub fn new(x: u32, y: u32) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit grid edge in canonical form: `origin` is the lexicographically
/// smaller endpoint, so equality and ordering are stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    pub origin: GridPoint,
    pub dir: Dir,
}

impl GridEdge {
    pub fn horizontal(x: u32, y: u32) -> Self {
        GridEdge { origin: GridPoint::new(x, y), dir: Dir::Horizontal }
    }

    pub fn vertical(x: u32, y: u32) -> Self {
        GridEdge { origin: GridPoint::new(x, y), dir: Dir::Vertical }
    }

    /// The canonical edge between two points at distance one.
    pub fn between(a: GridPoint, b: GridPoint) -> Option<Self> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo.y == hi.y && lo.x + 1 == hi.x {
            Some(GridEdge { origin: lo, dir: Dir::Horizontal })
        } else if lo.x == hi.x && lo.y + 1 == hi.y {
            Some(GridEdge { origin: lo, dir: Dir::Vertical })
        } else {
            None
        }
    }

    pub fn other_end(&self) -> GridPoint {
        match self.dir {
            Dir::Horizontal => GridPoint::new(self.origin.x + 1, self.origin.y),
            Dir::Vertical => GridPoint::new(self.origin.x, self.origin.y + 1),
        }
    }

    pub fn endpoints(&self) -> [GridPoint; 2] {
        [self.origin, self.other_end()]
    }

    pub fn touches(&self, p: GridPoint) -> bool {
        self.origin == p || self.other_end() == p
    }

    /// The unique common endpoint of two distinct edges, if any.
    pub fn shared_point(&self, other: &GridEdge) -> Option<GridPoint> {
        self.endpoints()
            .into_iter()
            .find(|p| other.touches(*p))
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.dir {
            Dir::Horizontal => 'H',
            Dir::Vertical => 'V',
        };
        write!(f, "{}@{}", tag, self.origin)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("a path needs at least two corners")]
    TooFewCorners,
    #[error("corners {0} and {1} differ in both coordinates")]
    NonAxisAligned(GridPoint, GridPoint),
    #[error("zero-length segment at corner {0}")]
    ZeroLengthSegment(GridPoint),
    #[error("grid edge {0} traced twice")]
    SelfOverlap(GridEdge),
}

/// An axis-aligned grid path stored as its corner sequence.
///
/// Invariants after construction: consecutive corners differ in exactly one
/// coordinate, directions of consecutive segments alternate (every internal
/// corner is a bend), no grid edge is traced twice, and the corner order is
/// normalized so the lexicographically smaller endpoint comes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    corners: Vec<GridPoint>,
}

impl LatticePath {
    /// Builds a validated path from a corner sequence. Collinear consecutive
    /// triples that keep moving the same way are merged into one segment.
    pub fn from_corners<I>(corners: I) -> Result<Self, PathError>
    where
        I: IntoIterator<Item = GridPoint>,
    {
        let raw: Vec<GridPoint> = corners.into_iter().collect();
        if raw.len() < 2 {
            return Err(PathError::TooFewCorners);
        }
        let mut merged: Vec<GridPoint> = Vec::with_capacity(raw.len());
        for &p in &raw {
            if let Some(&prev) = merged.last() {
                if prev == p {
                    return Err(PathError::ZeroLengthSegment(p));
                }
                if prev.x != p.x && prev.y != p.y {
                    return Err(PathError::NonAxisAligned(prev, p));
                }
                if merged.len() >= 2 {
                    let back2 = merged[merged.len() - 2];
                    if same_heading(back2, prev, p) {
                        merged.pop();
                    }
                }
            }
            merged.push(p);
        }
        if merged.len() < 2 {
            return Err(PathError::TooFewCorners);
        }
        // Reversals and genuine re-traces both surface as duplicate edges.
        let mut seen = BTreeSet::new();
        for (a, b) in merged.iter().zip(merged.iter().skip(1)) {
            for e in segment_edges(*a, *b) {
                if !seen.insert(e) {
                    return Err(PathError::SelfOverlap(e));
                }
            }
        }
        if merged.last().unwrap() < merged.first().unwrap() {
            merged.reverse();
        }
        Ok(LatticePath { corners: merged })
    }

    pub fn corners(&self) -> &[GridPoint] {
        &self.corners
    }

    pub fn bends(&self) -> usize {
        self.corners.len() - 2
    }

    pub fn segments(&self) -> usize {
        self.corners.len() - 1
    }

    pub fn endpoints(&self) -> (GridPoint, GridPoint) {
        (*self.corners.first().unwrap(), *self.corners.last().unwrap())
    }

    /// Every unit grid edge traced by the path.
    pub fn edges(&self) -> BTreeSet<GridEdge> {
        let mut out = BTreeSet::new();
        for (a, b) in self.corners.iter().zip(self.corners.iter().skip(1)) {
            out.extend(segment_edges(*a, *b));
        }
        out
    }

    /// Edge membership without materializing the edge set.
    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        self.corners
            .iter()
            .zip(self.corners.iter().skip(1))
            .any(|(a, b)| segment_contains(*a, *b, e))
    }

    /// Every grid point visited by the path.
    pub fn points(&self) -> BTreeSet<GridPoint> {
        let mut out = BTreeSet::new();
        for (a, b) in self.corners.iter().zip(self.corners.iter().skip(1)) {
            let (a, b) = (*a, *b);
            if a.y == b.y {
                let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
                out.extend((lo..=hi).map(|x| GridPoint::new(x, a.y)));
            } else {
                let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
                out.extend((lo..=hi).map(|y| GridPoint::new(a.x, y)));
            }
        }
        out
    }

    pub fn max_coords(&self) -> (u32, u32) {
        let mx = self.corners.iter().map(|p| p.x).max().unwrap();
        let my = self.corners.iter().map(|p| p.y).max().unwrap();
        (mx, my)
    }

    pub fn min_coords(&self) -> (u32, u32) {
        let mx = self.corners.iter().map(|p| p.x).min().unwrap();
        let my = self.corners.iter().map(|p| p.y).min().unwrap();
        (mx, my)
    }

    /// Shifts the whole path left/down. Panics if a coordinate underflows.
    pub fn translated_down(&self, dx: u32, dy: u32) -> LatticePath {
        let corners = self
            .corners
            .iter()
            .map(|p| GridPoint::new(p.x - dx, p.y - dy))
            .collect();
        LatticePath { corners }
    }

    /// The bend corner of a single-bend path.
    pub fn bend_point(&self) -> Option<GridPoint> {
        if self.corners.len() == 3 {
            Some(self.corners[1])
        } else {
            None
        }
    }

    /// The relevant edges (extremity and bend edges), in path order, with
    /// role flags. An edge serving several roles is stored once.
    pub fn relevant_edges(&self) -> RelevantEdgeSeq {
        let segs: Vec<(GridPoint, GridPoint)> = self
            .corners
            .iter()
            .zip(self.corners.iter().skip(1))
            .map(|(a, b)| (*a, *b))
            .collect();
        let mut entries: Vec<RelevantEdge> = Vec::new();
        let mut push = |edge: GridEdge, extremity: bool, bend: bool| {
            if let Some(last) = entries.last_mut() {
                if last.edge == edge {
                    last.is_extremity |= extremity;
                    last.is_bend |= bend;
                    return;
                }
            }
            entries.push(RelevantEdge { edge, is_extremity: extremity, is_bend: bend });
        };
        push(first_edge(segs[0].0, segs[0].1), true, false);
        for w in segs.windows(2) {
            push(last_edge(w[0].0, w[0].1), false, true);
            push(first_edge(w[1].0, w[1].1), false, true);
        }
        let last = *segs.last().unwrap();
        push(last_edge(last.0, last.1), true, false);
        RelevantEdgeSeq { entries }
    }
}

fn same_heading(a: GridPoint, b: GridPoint, c: GridPoint) -> bool {
    let ab = (b.x as i64 - a.x as i64, b.y as i64 - a.y as i64);
    let bc = (c.x as i64 - b.x as i64, c.y as i64 - b.y as i64);
    (ab.0.signum(), ab.1.signum()) == (bc.0.signum(), bc.1.signum())
}

fn segment_edges(a: GridPoint, b: GridPoint) -> Vec<GridEdge> {
    if a.y == b.y {
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        (lo..hi).map(|x| GridEdge::horizontal(x, a.y)).collect()
    } else {
        let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
        (lo..hi).map(|y| GridEdge::vertical(a.x, y)).collect()
    }
}

fn segment_contains(a: GridPoint, b: GridPoint, e: &GridEdge) -> bool {
    if a.y == b.y {
        e.dir == Dir::Horizontal
            && e.origin.y == a.y
            && e.origin.x >= a.x.min(b.x)
            && e.origin.x + 1 <= a.x.max(b.x)
    } else {
        e.dir == Dir::Vertical
            && e.origin.x == a.x
            && e.origin.y >= a.y.min(b.y)
            && e.origin.y + 1 <= a.y.max(b.y)
    }
}

/// First traced edge of the directed segment a -> b.
fn first_edge(a: GridPoint, b: GridPoint) -> GridEdge {
    if a.y == b.y {
        if b.x > a.x {
            GridEdge::horizontal(a.x, a.y)
        } else {
            GridEdge::horizontal(a.x - 1, a.y)
        }
    } else if b.y > a.y {
        GridEdge::vertical(a.x, a.y)
    } else {
        GridEdge::vertical(a.x, a.y - 1)
    }
}

/// Last traced edge of the directed segment a -> b.
fn last_edge(a: GridPoint, b: GridPoint) -> GridEdge {
    first_edge(b, a)
}

/// One relevant edge with its role flags. A unit segment can make a single
/// edge serve as extremity and bend edge at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelevantEdge {
    pub edge: GridEdge,
    pub is_extremity: bool,
    pub is_bend: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("inconsistent relevant-edge sequence: {0}")]
    InconsistentSequence(String),
    /// Reserved: role flags currently disambiguate every sequence produced
    /// by `relevant_edges`, so this variant is never constructed.
    #[error("ambiguous relevant-edge sequence")]
    AmbiguousSequence,
}

/// Ordered relevant edges of a path; the certificate currency of the
/// NP-membership argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevantEdgeSeq {
    pub entries: Vec<RelevantEdge>,
}

impl RelevantEdgeSeq {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        self.entries.iter().map(|e| e.edge)
    }

    /// Rebuilds the unique path with this relevant-edge sequence.
    ///
    /// Follows the walk from one extremity edge: consecutive relevant edges
    /// of a segment share its row or column; a bend pair shares the bend
    /// corner. The candidate is validated by recomputing its relevant edges.
    pub fn reconstruct(&self) -> Result<LatticePath, ReconstructError> {
        let bad = |msg: &str| ReconstructError::InconsistentSequence(msg.to_string());
        if self.entries.is_empty() {
            return Err(bad("empty sequence"));
        }
        // Group maximal runs of equal direction; each run is one segment's
        // pair of delimiting edges (collapsed to one for unit segments).
        let mut runs: Vec<Vec<GridEdge>> = Vec::new();
        for entry in &self.entries {
            match runs.last_mut() {
                Some(run) if run[0].dir == entry.edge.dir => run.push(entry.edge),
                _ => runs.push(vec![entry.edge]),
            }
        }
        for run in &runs {
            if run.len() > 2 {
                return Err(bad("more than two relevant edges on one segment"));
            }
            let line_of = |e: &GridEdge| match e.dir {
                Dir::Horizontal => e.origin.y,
                Dir::Vertical => e.origin.x,
            };
            if run.len() == 2 && line_of(&run[0]) != line_of(&run[1]) {
                return Err(bad("consecutive relevant edges share neither row nor column"));
            }
        }
        let enter = |run: &[GridEdge]| run[0];
        let exit = |run: &[GridEdge]| *run.last().unwrap();
        // Bend corners: shared endpoint of each consecutive exit/enter pair.
        let mut bends = Vec::new();
        for w in runs.windows(2) {
            match exit(&w[0]).shared_point(&enter(&w[1])) {
                Some(p) => bends.push(p),
                None => return Err(bad("bend pair has no common grid point")),
            }
        }
        let far_endpoint = |e: GridEdge, from: GridPoint| -> GridPoint {
            let [p, q] = e.endpoints();
            let d = |a: GridPoint| {
                (a.x as i64 - from.x as i64).abs() + (a.y as i64 - from.y as i64).abs()
            };
            if d(p) >= d(q) {
                p
            } else {
                q
            }
        };
        let start;
        let end;
        if runs.len() == 1 {
            let run = &runs[0];
            let (a, b) = (enter(run), exit(run));
            if a == b {
                start = a.origin;
                end = a.other_end();
            } else {
                // Outermost endpoints of the two extremity edges.
                start = far_endpoint(a, b.origin);
                end = far_endpoint(b, a.origin);
            }
        } else {
            start = far_endpoint(enter(&runs[0]), bends[0]);
            end = far_endpoint(exit(runs.last().unwrap()), *bends.last().unwrap());
        }
        let mut corners = vec![start];
        corners.extend(bends);
        corners.push(end);
        let path = LatticePath::from_corners(corners)
            .map_err(|e| bad(&format!("derived corners invalid: {e}")))?;
        if path.relevant_edges() == *self {
            Ok(path)
        } else {
            Err(bad("sequence is not the relevant-edge sequence of any path"))
        }
    }
}

/// Edge-intersection test: true plus the shared edges when the two paths
/// have at least one grid edge in common. Point contact does not count.
pub fn paths_intersect(p: &LatticePath, q: &LatticePath) -> (bool, BTreeSet<GridEdge>) {
    let shared: BTreeSet<GridEdge> = p.edges().intersection(&q.edges()).copied().collect();
    (!shared.is_empty(), shared)
}

/// Intersection test that inspects relevant edges only: two paths intersect
/// iff a relevant edge of one lies on the other.
pub fn intersect_via_relevant(p: &LatticePath, q: &LatticePath) -> bool {
    p.relevant_edges().edges().any(|e| q.contains_edge(&e))
        || q.relevant_edges().edges().any(|e| p.contains_edge(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: u32, y: u32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn path(corners: &[(u32, u32)]) -> LatticePath {
        LatticePath::from_corners(corners.iter().map(|&(x, y)| pt(x, y))).unwrap()
    }

    #[test]
    fn straight_path_has_no_bends() {
        let p = path(&[(0, 0), (3, 0)]);
        assert_eq!(p.bends(), 0);
        assert_eq!(p.segments(), 1);
    }

    #[test]
    fn l_shape_has_one_bend() {
        let p = path(&[(0, 0), (2, 0), (2, 3)]);
        assert_eq!(p.bends(), 1);
        assert_eq!(p.segments(), 2);
    }

    #[test]
    fn zero_length_segment_rejected() {
        let err = LatticePath::from_corners([pt(0, 0), pt(1, 0), pt(1, 0)]).unwrap_err();
        assert_eq!(err, PathError::ZeroLengthSegment(pt(1, 0)));
    }

    #[test]
    fn diagonal_step_rejected() {
        let err = LatticePath::from_corners([pt(0, 0), pt(1, 1)]).unwrap_err();
        assert!(matches!(err, PathError::NonAxisAligned(..)));
    }

    #[test]
    fn retraced_edge_rejected() {
        let err = LatticePath::from_corners([pt(0, 0), pt(3, 0), pt(1, 0)]).unwrap_err();
        assert!(matches!(err, PathError::SelfOverlap(_)));
    }

    #[test]
    fn collinear_corners_merge() {
        let p = path(&[(0, 0), (1, 0), (3, 0)]);
        assert_eq!(p.corners(), &[pt(0, 0), pt(3, 0)]);
        assert_eq!(p.bends(), 0);
    }

    #[test]
    fn orientation_normalized() {
        let p = path(&[(2, 3), (2, 0), (0, 0)]);
        assert_eq!(p.endpoints().0, pt(0, 0));
    }

    #[test]
    fn edges_of_straight() {
        let p = path(&[(0, 0), (2, 0)]);
        let expect: BTreeSet<_> =
            [GridEdge::horizontal(0, 0), GridEdge::horizontal(1, 0)].into_iter().collect();
        assert_eq!(p.edges(), expect);
    }

    #[test]
    fn edges_of_unit_l() {
        let p = path(&[(0, 0), (1, 0), (1, 1)]);
        let expect: BTreeSet<_> =
            [GridEdge::horizontal(0, 0), GridEdge::vertical(1, 0)].into_iter().collect();
        assert_eq!(p.edges(), expect);
    }

    #[test]
    fn edges_of_two_bend_span() {
        let p = path(&[(0, 0), (0, 2), (2, 2)]);
        assert_eq!(p.edges().len(), 4);
        assert_eq!(p.edges().iter().filter(|e| e.dir == Dir::Vertical).count(), 2);
    }

    #[test]
    fn relevant_edges_straight() {
        let seq = path(&[(0, 0), (3, 0)]).relevant_edges();
        let edges: Vec<_> = seq.edges().collect();
        assert_eq!(edges, vec![GridEdge::horizontal(0, 0), GridEdge::horizontal(2, 0)]);
        assert!(seq.entries.iter().all(|e| e.is_extremity && !e.is_bend));
    }

    #[test]
    fn relevant_edges_l_shape() {
        let seq = path(&[(0, 0), (2, 0), (2, 3)]).relevant_edges();
        let edges: Vec<_> = seq.edges().collect();
        assert_eq!(
            edges,
            vec![
                GridEdge::horizontal(0, 0),
                GridEdge::horizontal(1, 0),
                GridEdge::vertical(2, 0),
                GridEdge::vertical(2, 2),
            ]
        );
    }

    #[test]
    fn relevant_edges_unit_arms_collapse() {
        let seq = path(&[(0, 0), (1, 0), (1, 1)]).relevant_edges();
        assert_eq!(seq.len(), 2);
        assert!(seq.entries.iter().all(|e| e.is_extremity && e.is_bend));
    }

    #[test]
    fn relevant_count_bound() {
        // 2(k+1) with equality when all segments have length >= 2.
        let p = path(&[(0, 0), (2, 0), (2, 2), (4, 2)]);
        assert_eq!(p.relevant_edges().len(), 2 * (p.bends() + 1));
        let q = path(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert!(q.relevant_edges().len() <= 2 * (q.bends() + 1));
    }

    #[test]
    fn reconstruct_round_trip() {
        let p = path(&[(0, 0), (2, 0), (2, 3)]);
        let back = p.relevant_edges().reconstruct().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn reconstruct_zero_bend_fill_in() {
        let seq = RelevantEdgeSeq {
            entries: vec![
                RelevantEdge { edge: GridEdge::horizontal(0, 0), is_extremity: true, is_bend: false },
                RelevantEdge { edge: GridEdge::horizontal(5, 0), is_extremity: true, is_bend: false },
            ],
        };
        let p = seq.reconstruct().unwrap();
        assert_eq!(p.corners(), &[pt(0, 0), pt(6, 0)]);
    }

    #[test]
    fn reconstruct_rejects_mismatched_lines() {
        let seq = RelevantEdgeSeq {
            entries: vec![
                RelevantEdge { edge: GridEdge::horizontal(0, 0), is_extremity: true, is_bend: false },
                RelevantEdge { edge: GridEdge::horizontal(5, 2), is_extremity: true, is_bend: false },
            ],
        };
        assert!(matches!(
            seq.reconstruct(),
            Err(ReconstructError::InconsistentSequence(_))
        ));
    }

    #[test]
    fn reconstruct_rejects_detached_bend_pair() {
        // Bend pair whose second edge lies in a different column than the
        // continuation requires.
        let seq = RelevantEdgeSeq {
            entries: vec![
                RelevantEdge { edge: GridEdge::horizontal(0, 0), is_extremity: true, is_bend: false },
                RelevantEdge { edge: GridEdge::horizontal(3, 0), is_extremity: false, is_bend: true },
                RelevantEdge { edge: GridEdge::vertical(7, 0), is_extremity: false, is_bend: true },
                RelevantEdge { edge: GridEdge::vertical(7, 4), is_extremity: true, is_bend: false },
            ],
        };
        assert!(matches!(
            seq.reconstruct(),
            Err(ReconstructError::InconsistentSequence(_))
        ));
    }

    #[test]
    fn intersection_needs_a_shared_edge() {
        // Crossing at a point is not an intersection.
        let p = path(&[(0, 1), (2, 1)]);
        let q = path(&[(1, 0), (1, 2)]);
        let (hit, shared) = paths_intersect(&p, &q);
        assert!(!hit);
        assert!(shared.is_empty());
    }

    #[test]
    fn overlap_window_reported() {
        let p = path(&[(0, 0), (3, 0)]);
        let q = path(&[(2, 0), (5, 0)]);
        let (hit, shared) = paths_intersect(&p, &q);
        assert!(hit);
        assert_eq!(shared.into_iter().collect::<Vec<_>>(), vec![GridEdge::horizontal(2, 0)]);
    }

    #[test]
    fn nested_paths_intersect_via_relevant() {
        let outer = path(&[(0, 0), (5, 0)]);
        let inner = path(&[(1, 0), (3, 0)]);
        assert!(intersect_via_relevant(&outer, &inner));
        assert!(paths_intersect(&outer, &inner).0);
    }

    #[test]
    fn contains_edge_matches_edge_set() {
        let p = path(&[(0, 0), (4, 0), (4, 3), (2, 3)]);
        for e in p.edges() {
            assert!(p.contains_edge(&e));
        }
        assert!(!p.contains_edge(&GridEdge::horizontal(0, 1)));
        assert!(!p.contains_edge(&GridEdge::vertical(0, 0)));
    }
}
