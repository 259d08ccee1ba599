use std::fmt::Write as _;

use latnorm::{DigitalSet, LatticePoint};

const EMPTY: char = '·';
const POINT: char = '●';
const WITNESS: char = '○';

/// Text grid, top row first, one character per lattice cell of the bounding box.
pub fn ascii(s: &DigitalSet, witness: Option<LatticePoint>) -> String {
    let Some((x0, y0, x1, y1)) = s.bounds() else { return String::new() };
    let mut out = String::new();
    for y in (y0..=y1).rev() {
        for x in x0..=x1 {
            let p = LatticePoint::new(x, y);
            out.push(if Some(p) == witness {
                WITNESS
            } else if s.contains(p) {
                POINT
            } else {
                EMPTY
            });
        }
        out.push('\n');
    }
    out
}

/// One unit square per point, y axis pointing up.
pub fn svg(s: &DigitalSet, witness: Option<LatticePoint>) -> String {
    let Some((x0, y0, x1, y1)) = s.bounds() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 0 0\"/>\n".to_string();
    };
    let (w, h) = (x1 - x0 + 1, y1 - y0 + 1);
    let mut out = String::new();
    let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\">");
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    for p in s {
        let fill = if Some(*p) == witness { "white\" stroke=\"black\" stroke-width=\"0.1" } else { "black" };
        let _ = writeln!(out, "<rect x=\"{}\" y=\"{}\" width=\"1\" height=\"1\" fill=\"{fill}\"/>", p.x - x0, y1 - p.y);
    }
    out.push_str("</svg>\n");
    out
}
