use std::fmt::Write as _;
use std::io::Write;

use crate::chain::Polyline;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::smoother::compression_ratio;

const MARGIN: f64 = 0.05;
const ORIGINAL_STROKE: &str = "#9db4d6";
const SMOOTHED_STROKE: &str = "#1b2a49";

/// Renders the original and smoothed polylines projected onto `axes` as an
/// SVG 1.1 overlay. Data y grows upward.
pub fn emit_svg<T, W>(
    original: &Polyline<T>,
    smoothed: &Polyline<T>,
    axes: (usize, usize),
    mut sink: W,
) -> Result<()>
where
    T: Scalar,
    W: Write,
{
    let (ax, ay) = axes;
    for p in [original, smoothed] {
        if ax >= p.dim() || ay >= p.dim() {
            return Err(Error::invalid(format!(
                "axes ({ax}, {ay}) out of range for dimension {}",
                p.dim()
            )));
        }
    }
    let steps = original.len().saturating_sub(smoothed.len());
    let cr = compression_ratio(original.segments(), smoothed.segments())?;

    let project = |p: &Polyline<T>| -> Vec<(f64, f64)> {
        p.points()
            .map(|pt| {
                let x = pt[ax].to_f64().unwrap_or(f64::NAN);
                let y = pt[ay].to_f64().unwrap_or(f64::NAN);
                (x, 0.0 - y)
            })
            .collect()
    };
    let orig = project(original);
    let smooth = project(smoothed);

    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in orig.iter().chain(&smooth) {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    // a flat extent falls back to a unit span centred on the data
    let (mut w, mut h) = (x1 - x0, y1 - y0);
    if !(w > 0.0 && w.is_finite()) {
        x0 -= 0.5;
        w = 1.0;
    }
    if !(h > 0.0 && h.is_finite()) {
        y0 -= 0.5;
        h = 1.0;
    }
    let (mx, my) = (w * MARGIN, h * MARGIN);
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my);

    let mut doc = String::new();
    doc.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"800\" height=\"500\" viewBox=\"{vx} {vy} {vw} {vh}\" \
         preserveAspectRatio=\"none\">"
    );
    let _ = writeln!(
        doc,
        "  <rect x=\"{vx}\" y=\"{vy}\" width=\"{vw}\" height=\"{vh}\" fill=\"white\"/>"
    );
    for (pts, stroke, width) in [
        (&orig, ORIGINAL_STROKE, 1.0),
        (&smooth, SMOOTHED_STROKE, 2.0),
    ] {
        let mut coords = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            if i > 0 {
                coords.push(' ');
            }
            let _ = write!(coords, "{x},{y}");
        }
        let _ = writeln!(
            doc,
            "  <polyline points=\"{coords}\" fill=\"none\" stroke=\"{stroke}\" \
             stroke-width=\"{width}\" vector-effect=\"non-scaling-stroke\"/>"
        );
    }
    let font = vh * 0.05;
    let _ = writeln!(
        doc,
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{font}\" \
         fill=\"{SMOOTHED_STROKE}\">steps: {steps}, c.r.: {cr:.2}%</text>",
        vx + mx,
        vy + my + font,
    );
    doc.push_str("</svg>\n");

    sink.write_all(doc.as_bytes())?;
    Ok(())
}
