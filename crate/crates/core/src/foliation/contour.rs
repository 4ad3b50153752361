//! Marching squares on a rectangular grid.

use std::collections::BTreeMap;

/// A contour piece; `closed` polylines repeat no point (the last connects to the first).
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Edge {
    /// Between nodes `(i, j)` and `(i + 1, j)`.
    H(usize, usize),
    /// Between nodes `(i, j)` and `(i, j + 1)`.
    V(usize, usize),
}

/// Zero contour of `values[i][j] = f(xs[i], ys[j])` over the cells accepted by `keep(i, j)`
/// (cell `(i, j)` spans nodes `i..=i+1`, `j..=j+1`). Saddles are resolved by the cell mean.
pub fn marching_squares(xs: &[f64], ys: &[f64], values: &[Vec<f64>], keep: impl Fn(usize, usize) -> bool) -> Vec<Polyline> {
    let pos = |v: f64| v >= 0.0;
    let mut points: BTreeMap<Edge, (f64, f64)> = BTreeMap::new();
    let mut crossing = |e: Edge| -> Edge {
        points.entry(e).or_insert_with(|| {
            let ((i0, j0), (i1, j1)) = match e {
                Edge::H(i, j) => ((i, j), (i + 1, j)),
                Edge::V(i, j) => ((i, j), (i, j + 1)),
            };
            let (v0, v1) = (values[i0][j0], values[i1][j1]);
            let s = v0 / (v0 - v1);
            (xs[i0] + s * (xs[i1] - xs[i0]), ys[j0] + s * (ys[j1] - ys[j0]))
        });
        e
    };
    let mut segments: Vec<(Edge, Edge)> = Vec::new();
    for i in 0..xs.len().saturating_sub(1) {
        for j in 0..ys.len().saturating_sub(1) {
            if !keep(i, j) {
                continue;
            }
            let (a, b, c, d) = (values[i][j], values[i + 1][j], values[i + 1][j + 1], values[i][j + 1]);
            let bottom = Edge::H(i, j);
            let right = Edge::V(i + 1, j);
            let top = Edge::H(i, j + 1);
            let left = Edge::V(i, j);
            let mut crossed = Vec::with_capacity(4);
            if pos(a) != pos(b) {
                crossed.push(bottom);
            }
            if pos(b) != pos(c) {
                crossed.push(right);
            }
            if pos(d) != pos(c) {
                crossed.push(top);
            }
            if pos(a) != pos(d) {
                crossed.push(left);
            }
            match crossed.len() {
                2 => segments.push((crossing(crossed[0]), crossing(crossed[1]))),
                4 => {
                    if pos(0.25 * (a + b + c + d)) == pos(a) {
                        segments.push((crossing(bottom), crossing(right)));
                        segments.push((crossing(top), crossing(left)));
                    } else {
                        segments.push((crossing(bottom), crossing(left)));
                        segments.push((crossing(right), crossing(top)));
                    }
                }
                _ => {}
            }
        }
    }
    link(&segments, &points)
}

fn link(segments: &[(Edge, Edge)], points: &BTreeMap<Edge, (f64, f64)>) -> Vec<Polyline> {
    let mut adj: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (k, (e0, e1)) in segments.iter().enumerate() {
        adj.entry(*e0).or_default().push(k);
        adj.entry(*e1).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    let walk = |start_edge: Edge, first: usize, used: &mut Vec<bool>| -> (Vec<Edge>, bool) {
        let mut chain = vec![start_edge];
        let mut seg = first;
        let mut at = start_edge;
        loop {
            used[seg] = true;
            let (e0, e1) = segments[seg];
            let next = if e0 == at { e1 } else { e0 };
            if next == start_edge {
                return (chain, true);
            }
            chain.push(next);
            at = next;
            match adj[&next].iter().find(|&&s| !used[s]) {
                Some(&s) => seg = s,
                None => return (chain, false),
            }
        }
    };
    // open chains start at edges used by a single segment
    let ends: Vec<Edge> = adj.iter().filter(|(_, v)| v.len() == 1).map(|(e, _)| *e).collect();
    for e in ends {
        let s = adj[&e][0];
        if used[s] {
            continue;
        }
        let (chain, closed) = walk(e, s, &mut used);
        out.push(Polyline { points: chain.iter().map(|e| points[e]).collect(), closed });
    }
    for s in 0..segments.len() {
        if used[s] {
            continue;
        }
        let (chain, closed) = walk(segments[s].0, s, &mut used);
        out.push(Polyline { points: chain.iter().map(|e| points[e]).collect(), closed });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, r: f64) -> Vec<f64> {
        (0..n).map(|k| -r + (k as f64 + 0.5) * 2.0 * r / n as f64).collect()
    }

    #[test]
    fn circle_is_one_closed_loop() {
        let xs = grid(64, 2.0);
        let vals: Vec<Vec<f64>> = xs.iter().map(|x| xs.iter().map(|y| x * x + y * y - 1.0).collect()).collect();
        let lines = marching_squares(&xs, &xs, &vals, |_, _| true);
        assert_eq!(lines.len(), 1);
        assert!(lines[0].closed);
        for (x, y) in &lines[0].points {
            assert!(((x * x + y * y).sqrt() - 1.0).abs() < 2e-3);
        }
    }

    #[test]
    fn line_is_one_open_polyline() {
        let xs = grid(32, 1.0);
        let vals: Vec<Vec<f64>> = xs.iter().map(|_| xs.iter().map(|y| y - 0.1).collect()).collect();
        let lines = marching_squares(&xs, &xs, &vals, |_, _| true);
        assert_eq!(lines.len(), 1);
        assert!(!lines[0].closed);
        assert_eq!(lines[0].points.len(), 32);
    }

    #[test]
    fn axes_with_center_removed_give_four_arms() {
        let xs = grid(64, 1.0);
        let vals: Vec<Vec<f64>> = xs.iter().map(|x| xs.iter().map(|y| x * y).collect()).collect();
        let lines = marching_squares(&xs, &xs, &vals, |i, j| !(30..=33).contains(&i) || !(30..=33).contains(&j));
        assert_eq!(lines.len(), 4);
    }
}
