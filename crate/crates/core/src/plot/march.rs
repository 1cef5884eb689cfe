use crate::dualize::PlanePoint;
use crate::polyring::{FloatPolynomial, Polynomial, VarId, NUM_VARS};

use super::{PlotError, Segment, Viewport};

pub const MIN_GRID: usize = 16;

// Corners: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1).
// Edges: 0 = c0-c1 (bottom), 1 = c1-c2 (right), 2 = c2-c3 (top), 3 = c3-c0 (left).
const EDGE_CORNERS: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];

/// Edge pairs joined inside a cell, by corner mask (bit k set when corner k
/// is positive). Saddles 5 and 10 are resolved separately.
const CASES: [&[(usize, usize)]; 16] = [
    &[],
    &[(3, 0)],
    &[(0, 1)],
    &[(3, 1)],
    &[(1, 2)],
    &[],
    &[(0, 2)],
    &[(3, 2)],
    &[(2, 3)],
    &[(0, 2)],
    &[],
    &[(1, 2)],
    &[(1, 3)],
    &[(0, 1)],
    &[(0, 3)],
    &[],
];

fn saddle(mask: usize, center_positive: bool) -> &'static [(usize, usize)] {
    // Positive center joins the positive corners, cutting off the negatives.
    match (mask, center_positive) {
        (5, true) | (10, false) => &[(0, 1), (2, 3)],
        (5, false) | (10, true) => &[(3, 0), (1, 2)],
        _ => unreachable!(),
    }
}

/// Marching squares for the zero set of `p(u, v)` over `grid x grid` cells
/// covering the viewport. Corner values come from float evaluation; a corner
/// counts as positive when its value is `> 0`.
pub fn trace_implicit(
    p: &Polynomial,
    u: VarId,
    v: VarId,
    vp: &Viewport,
    grid: usize,
) -> Result<Vec<Segment>, PlotError> {
    if grid < MIN_GRID {
        return Err(PlotError::GridTooSmall(grid));
    }
    if let Some(&w) = p.variables().iter().find(|&&w| w != u && w != v) {
        return Err(PlotError::StrayVariable(w));
    }
    let fp = FloatPolynomial::new(p);
    let xs: Vec<f64> = (0..=grid)
        .map(|i| vp.xmin + (vp.xmax - vp.xmin) * i as f64 / grid as f64)
        .collect();
    let ys: Vec<f64> = (0..=grid)
        .map(|j| vp.ymin + (vp.ymax - vp.ymin) * j as f64 / grid as f64)
        .collect();
    let eval = |x: f64, y: f64| {
        let mut point = [0.0; NUM_VARS];
        point[u.index()] = x;
        point[v.index()] = y;
        fp.eval_dense(&point).value
    };
    let values: Vec<Vec<f64>> = ys
        .iter()
        .map(|&y| xs.iter().map(|&x| eval(x, y)).collect())
        .collect();

    let mut segments = Vec::new();
    for j in 0..grid {
        for i in 0..grid {
            let corners = [
                (xs[i], ys[j], values[j][i]),
                (xs[i + 1], ys[j], values[j][i + 1]),
                (xs[i + 1], ys[j + 1], values[j + 1][i + 1]),
                (xs[i], ys[j + 1], values[j + 1][i]),
            ];
            let mask = corners
                .iter()
                .enumerate()
                .fold(0, |m, (k, c)| m | (usize::from(c.2 > 0.0) << k));
            let pairs = match mask {
                5 | 10 => {
                    let center = eval(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]));
                    saddle(mask, center > 0.0)
                }
                _ => CASES[mask],
            };
            let crossing = |edge: usize| {
                let (a, b) = EDGE_CORNERS[edge];
                let (ca, cb) = (corners[a], corners[b]);
                let t = ca.2 / (ca.2 - cb.2);
                PlanePoint::new(ca.0 + t * (cb.0 - ca.0), ca.1 + t * (cb.1 - ca.1))
            };
            for &(e1, e2) in pairs {
                let (a, b) = (crossing(e1), crossing(e2));
                // both ends collapse onto a zero corner
                if a != b {
                    segments.push(Segment::new(a, b));
                }
            }
        }
    }
    Ok(segments)
}
