//! Integer lattice geometry: points, unit grid-edges, axis-aligned trails,
//! monotonicity predicates and bounding boxes.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("a path needs at least one corner")]
    EmptyPath,
    #[error("segment {index} from {from} to {to} is not axis-aligned")]
    NotAxisAligned {
        index: usize,
        from: GridPoint,
        to: GridPoint,
    },
    #[error("segment {index} has zero length at {at}")]
    ZeroLengthSegment { index: usize, at: GridPoint },
    #[error("grid-edge {0} is used twice")]
    RepeatedEdge(GridEdge),
    #[error("monotonicity is undefined for closed paths")]
    ClosedPath,
    #[error("bounding box of an empty collection")]
    EmptyCollection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub const fn offset(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    pub const fn right(self) -> Self {
        self.offset(1, 0)
    }

    pub const fn up(self) -> Self {
        self.offset(0, 1)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

/// Unit grid-edge; endpoints stored in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridEdge {
    a: GridPoint,
    b: GridPoint,
}

impl GridEdge {
    /// `None` unless `p` and `q` are at distance exactly one.
    pub fn new(p: GridPoint, q: GridPoint) -> Option<Self> {
        let d = (p.x - q.x).abs() + (p.y - q.y).abs();
        if d != 1 {
            return None;
        }
        Some(if p < q {
            Self { a: p, b: q }
        } else {
            Self { a: q, b: p }
        })
    }

    /// Edge from `p` to `p + (1, 0)`.
    pub fn rightward(p: GridPoint) -> Self {
        Self { a: p, b: p.right() }
    }

    /// Edge from `p` to `p + (0, 1)`.
    pub fn upward(p: GridPoint) -> Self {
        Self { a: p, b: p.up() }
    }

    /// The lower-left endpoint.
    pub fn low(&self) -> GridPoint {
        self.a
    }

    pub fn high(&self) -> GridPoint {
        self.b
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})-({})", self.a, self.b)
    }
}

/// Strongest monotonicity class shared by a set of paths, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MonotoneClass {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "xy")]
    Xy,
    #[serde(rename = "xy+")]
    XyPlus,
}

impl fmt::Display for MonotoneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonotoneClass::None => "none",
            MonotoneClass::X => "x",
            MonotoneClass::Xy => "xy",
            MonotoneClass::XyPlus => "xy+",
        })
    }
}

/// Axis-aligned lattice trail given by its corners.
///
/// Consecutive corners differ in exactly one coordinate. Grid-points may be
/// revisited but no unit grid-edge is used twice. A closed path also joins
/// its last corner back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPath {
    corners: Vec<GridPoint>,
    closed: bool,
}

impl GridPath {
    pub fn new(corners: Vec<GridPoint>, closed: bool) -> Result<Self, GridError> {
        let path = Self { corners, closed };
        path.check()?;
        Ok(path)
    }

    pub fn open(
        corners: impl IntoIterator<Item = impl Into<GridPoint>>,
    ) -> Result<Self, GridError> {
        Self::new(corners.into_iter().map(Into::into).collect(), false)
    }

    pub fn closed(
        corners: impl IntoIterator<Item = impl Into<GridPoint>>,
    ) -> Result<Self, GridError> {
        Self::new(corners.into_iter().map(Into::into).collect(), true)
    }

    pub fn point(p: GridPoint) -> Self {
        Self {
            corners: vec![p],
            closed: false,
        }
    }

    /// Builds a path from a point sequence and drops collinear interior corners.
    pub fn from_points(points: Vec<GridPoint>, closed: bool) -> Result<Self, GridError> {
        Ok(Self::new(points, closed)?.simplified())
    }

    fn check(&self) -> Result<(), GridError> {
        if self.corners.is_empty() {
            return Err(GridError::EmptyPath);
        }
        for (index, (from, to)) in self.segments().enumerate() {
            if from == to {
                return Err(GridError::ZeroLengthSegment { index, at: from });
            }
            if from.x != to.x && from.y != to.y {
                return Err(GridError::NotAxisAligned { index, from, to });
            }
        }
        let mut seen = BTreeSet::new();
        for e in self.unit_edges() {
            if !seen.insert(e) {
                return Err(GridError::RepeatedEdge(e));
            }
        }
        Ok(())
    }

    pub fn corners(&self) -> &[GridPoint] {
        &self.corners
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Consecutive corner pairs, including the wrap-around pair of a closed path.
    pub fn segments(&self) -> impl Iterator<Item = (GridPoint, GridPoint)> + '_ {
        let n = self.corners.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(move |i| (self.corners[i], self.corners[(i + 1) % n]))
    }

    /// Unit-step point sequence. A closed path does not repeat its start.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut pts = vec![self.corners[0]];
        for (from, to) in self.segments() {
            let (dx, dy) = ((to.x - from.x).signum(), (to.y - from.y).signum());
            let mut p = from;
            while p != to {
                p = p.offset(dx, dy);
                pts.push(p);
            }
        }
        if self.closed {
            pts.pop();
        }
        pts
    }

    /// Unit grid-edges in traversal order; closed paths include the wrap edge.
    pub fn unit_edges(&self) -> Vec<GridEdge> {
        let pts = self.points();
        let mut edges: Vec<GridEdge> = pts
            .windows(2)
            .map(|w| GridEdge::new(w[0], w[1]).unwrap())
            .collect();
        if self.closed {
            edges.push(GridEdge::new(*pts.last().unwrap(), pts[0]).unwrap());
        }
        edges
    }

    pub fn edge_set(&self) -> BTreeSet<GridEdge> {
        self.unit_edges().into_iter().collect()
    }

    pub fn point_set(&self) -> BTreeSet<GridPoint> {
        self.points().into_iter().collect()
    }

    /// Number of unit grid-edges.
    pub fn len(&self) -> usize {
        self.segments()
            .map(|(a, b)| ((a.x - b.x).abs() + (a.y - b.y).abs()) as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> GridPoint {
        self.corners[0]
    }

    pub fn end(&self) -> GridPoint {
        if self.closed {
            self.corners[0]
        } else {
            *self.corners.last().unwrap()
        }
    }

    pub fn reversed(&self) -> Self {
        let mut corners = self.corners.clone();
        corners.reverse();
        Self {
            corners,
            closed: self.closed,
        }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        self.map_corners(|p| p.offset(dx, dy))
    }

    /// Applies a coordinate map to every corner. The map must keep segments
    /// axis-aligned (true for coordinate-wise strictly monotone maps).
    pub(crate) fn map_corners(&self, f: impl Fn(GridPoint) -> GridPoint) -> Self {
        Self {
            corners: self.corners.iter().map(|&p| f(p)).collect(),
            closed: self.closed,
        }
    }

    /// Drops corners lying in the middle of a straight run.
    pub fn simplified(&self) -> Self {
        let mut pts: Vec<GridPoint> = Vec::with_capacity(self.corners.len());
        for &p in &self.corners {
            if pts.last() == Some(&p) {
                continue;
            }
            while pts.len() >= 2 && collinear(pts[pts.len() - 2], pts[pts.len() - 1], p) {
                pts.pop();
            }
            pts.push(p);
        }
        if self.closed {
            // Merge across the wrap-around point.
            loop {
                let n = pts.len();
                if n >= 3 && collinear(pts[n - 1], pts[0], pts[1]) {
                    pts.remove(0);
                } else if n >= 3 && collinear(pts[n - 2], pts[n - 1], pts[0]) {
                    pts.pop();
                } else {
                    break;
                }
            }
        }
        Self {
            corners: pts,
            closed: self.closed,
        }
    }

    fn steps(&self) -> Result<Vec<(i64, i64)>, GridError> {
        if self.closed {
            return Err(GridError::ClosedPath);
        }
        Ok(self
            .segments()
            .map(|(a, b)| ((b.x - a.x).signum(), (b.y - a.y).signum()))
            .collect())
    }

    /// Some traversal has non-decreasing x.
    pub fn is_x_monotone(&self) -> Result<bool, GridError> {
        let steps = self.steps()?;
        Ok(one_sign(steps.iter().map(|s| s.0)))
    }

    /// Some traversal has non-decreasing x and monotone y.
    pub fn is_xy_monotone(&self) -> Result<bool, GridError> {
        let steps = self.steps()?;
        Ok(one_sign(steps.iter().map(|s| s.0)) && one_sign(steps.iter().map(|s| s.1)))
    }

    /// Some traversal has both coordinates non-decreasing.
    pub fn is_xy_plus_monotone(&self) -> Result<bool, GridError> {
        let steps = self.steps()?;
        let forward = steps.iter().all(|&(dx, dy)| dx >= 0 && dy >= 0);
        let backward = steps.iter().all(|&(dx, dy)| dx <= 0 && dy <= 0);
        Ok(forward || backward)
    }

    /// Strongest class this path belongs to; closed paths are `None`.
    pub fn monotone_class(&self) -> MonotoneClass {
        if self.closed {
            return MonotoneClass::None;
        }
        if self.is_xy_plus_monotone().unwrap() {
            MonotoneClass::XyPlus
        } else if self.is_xy_monotone().unwrap() {
            MonotoneClass::Xy
        } else if self.is_x_monotone().unwrap() {
            MonotoneClass::X
        } else {
            MonotoneClass::None
        }
    }

    pub fn bounding_box(&self) -> BoundingBox {
        bounding_box([self]).unwrap()
    }
}

fn collinear(a: GridPoint, b: GridPoint, c: GridPoint) -> bool {
    let d1 = ((b.x - a.x).signum(), (b.y - a.y).signum());
    let d2 = ((c.x - b.x).signum(), (c.y - b.y).signum());
    d1 == d2
}

fn one_sign(mut values: impl Iterator<Item = i64> + Clone) -> bool {
    values.clone().all(|v| v >= 0) || values.all(|v| v <= 0)
}

/// Smallest axis-aligned box holding a set of grid-points, measured in
/// grid-points per side (a single point is 1 x 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub origin: GridPoint,
    pub width: u64,
    pub height: u64,
}

impl BoundingBox {
    pub fn max(&self) -> GridPoint {
        self.origin
            .offset(self.width as i64 - 1, self.height as i64 - 1)
    }

    pub fn fits(&self, width: u64, height: u64) -> bool {
        self.width <= width && self.height <= height
    }
}

impl fmt::Display for BoundingBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

pub fn bounding_box<'a>(
    paths: impl IntoIterator<Item = &'a GridPath>,
) -> Result<BoundingBox, GridError> {
    let mut corners = paths.into_iter().flat_map(|p| p.corners.iter());
    let first = *corners.next().ok_or(GridError::EmptyCollection)?;
    let (mut lo, mut hi) = (first, first);
    for p in corners {
        lo = GridPoint::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = GridPoint::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    Ok(BoundingBox {
        origin: lo,
        width: (hi.x - lo.x + 1) as u64,
        height: (hi.y - lo.y + 1) as u64,
    })
}
