//! Deterministic SVG rendering of grid representations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::VertexId;
use crate::grid::{GridEdge, GridPoint};
use crate::representation::{stats, GridRepresentation};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StyleError {
    #[error("cell size {0} is below the minimum of 4 pixels")]
    CellTooSmall(u32),
    #[error("offset {offset} must be below cell / (multiplicity + 1) = {cell} / {slots}")]
    OffsetTooLarge {
        offset: u32,
        cell: u32,
        slots: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    /// Pixels between neighbouring grid-points; at least 4.
    pub cell: u32,
    /// Pixels between parallel strokes on a shared grid-edge.
    pub offset: u32,
    /// Overrides the palette colour of individual vertices.
    pub colours: BTreeMap<VertexId, String>,
    pub labels: bool,
    pub grid_dots: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            cell: 24,
            offset: 3,
            colours: BTreeMap::new(),
            labels: true,
            grid_dots: true,
        }
    }
}

impl RenderStyle {
    /// Checks the style against a representation of the given multiplicity.
    pub fn check(&self, multiplicity: usize) -> Result<(), StyleError> {
        if self.cell < 4 {
            return Err(StyleError::CellTooSmall(self.cell));
        }
        let slots = multiplicity.max(1) + 1;
        if self.offset as usize * slots >= self.cell as usize {
            return Err(StyleError::OffsetTooLarge {
                offset: self.offset,
                cell: self.cell,
                slots,
            });
        }
        Ok(())
    }

    fn colour(&self, v: VertexId, rank: usize) -> &str {
        self.colours
            .get(&v)
            .map_or(PALETTE[rank % PALETTE.len()], String::as_str)
    }
}

/// Renders every path as one polyline in its own colour.
///
/// The owners of a shared grid-edge are drawn side by side in increasing
/// vertex order, so identical input yields identical bytes.
pub fn render_svg(rep: &GridRepresentation, style: &RenderStyle) -> Result<String, StyleError> {
    let s = stats(rep);
    style.check(s.multiplicity)?;
    let Some(bb) = s.bbox else {
        return Ok(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\">\n</svg>\n"
                .into(),
        );
    };
    let cell = style.cell as f64;
    let margin = cell;
    let width = (bb.width - 1) as f64 * cell + 2.0 * margin;
    let height = (bb.height - 1) as f64 * cell + 2.0 * margin;
    let top = bb.origin.y + bb.height as i64 - 1;
    let px = |p: GridPoint| {
        (
            margin + (p.x - bb.origin.x) as f64 * cell,
            margin + (top - p.y) as f64 * cell,
        )
    };

    let mut owners: BTreeMap<GridEdge, Vec<VertexId>> = BTreeMap::new();
    for (&v, path) in &rep.paths {
        for e in path.edge_set() {
            owners.entry(e).or_default().push(v);
        }
    }
    // Perpendicular shift of `v` on `e`, centred on the grid line.
    let shift = |e: GridEdge, v: VertexId| {
        let list = &owners[&e];
        let k = list.iter().position(|&w| w == v).unwrap() as f64;
        let d = (k - (list.len() - 1) as f64 / 2.0) * style.offset as f64;
        if e.is_horizontal() {
            (0.0, d)
        } else {
            (d, 0.0)
        }
    };

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(
        out,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    )
    .unwrap();
    if style.grid_dots {
        out.push_str("<g fill=\"#bbbbbb\">\n");
        for y in (bb.origin.y..=top).rev() {
            for x in bb.origin.x..bb.origin.x + bb.width as i64 {
                let (cx, cy) = px(GridPoint::new(x, y));
                writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"1\"/>").unwrap();
            }
        }
        out.push_str("</g>\n");
    }

    for (rank, (&v, path)) in rep.paths.iter().enumerate() {
        let colour = style.colour(v, rank);
        writeln!(out, "<g id=\"v{v}\" stroke=\"{colour}\" fill=\"{colour}\">").unwrap();
        let mut pts = path.points();
        if path.is_closed() {
            pts.push(pts[0]);
        }
        if pts.len() == 1 {
            let (cx, cy) = px(pts[0]);
            writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\"/>").unwrap();
        } else {
            let mut coords: Vec<(f64, f64)> = Vec::new();
            for w in pts.windows(2) {
                let e = GridEdge::new(w[0], w[1]).expect("unit steps");
                let (dx, dy) = shift(e, v);
                for p in [w[0], w[1]] {
                    let (x, y) = px(p);
                    let c = (x + dx, y + dy);
                    if coords.last() != Some(&c) {
                        coords.push(c);
                    }
                }
            }
            let list: Vec<String> = coords.iter().map(|(x, y)| format!("{x},{y}")).collect();
            writeln!(
                out,
                "<polyline points=\"{}\" fill=\"none\" stroke-width=\"2\" stroke-linejoin=\"round\"/>",
                list.join(" ")
            )
            .unwrap();
        }
        if style.labels {
            let (x, y) = coords_of_label(px(path.start()), cell);
            writeln!(
                out,
                "<text x=\"{x}\" y=\"{y}\" stroke=\"none\" font-family=\"sans-serif\" font-size=\"{}\">{v}</text>",
                (cell / 2.0).max(4.0)
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn coords_of_label((x, y): (f64, f64), cell: f64) -> (f64, f64) {
    (x - cell / 2.0, y - cell / 4.0)
}
