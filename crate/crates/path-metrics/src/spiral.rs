//! Spiralling number: net turns of a path around the line through its
//! endpoints, via continuous unwrapping of the cylindrical angle.

use mesh_core::{Point3, Polytope, Vec3};

use geodesic::SurfacePath;

use crate::MetricError;

/// Distance below which a sample counts as lying on the axis (scaled by the
/// axis length).
const TOL_AXIS: f64 = 1e-9;

/// Unwrapped angular trace of a path around its endpoint axis.
#[derive(Debug, Clone)]
pub struct SpiralReport {
    pub axis_point: Point3,
    pub axis_dir: Vec3,
    /// Arc-length positions of the retained samples.
    pub arc: Vec<f64>,
    /// Unwrapped angular coordinate at the samples, in turns.
    pub phi: Vec<f64>,
    /// `s(P) = |φ(first interior) − φ(last interior)|`, in turns.
    pub s: f64,
    /// Some samples were discarded for lying on the axis.
    pub axis_degenerate: bool,
}

/// Spiralling number of a surface path with respect to the line through `a`
/// and `b` (normally the path endpoints).
pub fn spiralling_number(
    poly: &Polytope,
    path: &SurfacePath,
    a: &Point3,
    b: &Point3,
) -> Result<SpiralReport, MetricError> {
    let pts = path.positions(poly);
    let tol = 1e-6 * poly.tol_scale();
    assert!(
        (pts[0] - a).norm() <= tol && (pts[pts.len() - 1] - b).norm() <= tol,
        "path endpoints must match the axis endpoints"
    );
    spiral_of_polyline(&pts, a, b)
}

/// Core unwrap on a raw polyline.
pub fn spiral_of_polyline(pts: &[Point3], a: &Point3, b: &Point3) -> Result<SpiralReport, MetricError> {
    let axis = b - a;
    let axis_len = axis.norm();
    if axis_len == 0.0 {
        return Err(MetricError::AxisDegenerate);
    }
    let w = axis / axis_len;
    // fixed orthonormal frame perpendicular to the axis
    let mut e1 = w.cross(&Vec3::z());
    if e1.norm() < 1e-6 {
        e1 = w.cross(&Vec3::x());
    }
    let e1 = e1.normalize();
    let e2 = w.cross(&e1);

    let total_len: f64 = pts.windows(2).map(|s| (s[1] - s[0]).norm()).sum();
    if total_len == 0.0 {
        return Err(MetricError::AxisDegenerate);
    }
    let trim = (1e-6 * total_len).max(1e-7);

    // arc-length parameterized polyline samples, trimmed at both ends
    let mut samples: Vec<(f64, Point3)> = Vec::with_capacity(pts.len() + 8);
    let mut acc = 0.0;
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            acc += (p - pts[i - 1]).norm();
        }
        samples.push((acc, *p));
    }
    let lo = trim.min(total_len / 4.0);
    let hi = total_len - lo;
    let mut trimmed: Vec<(f64, Point3)> = vec![(lo, point_at(&samples, lo))];
    for &(s, p) in &samples {
        if s > lo && s < hi {
            trimmed.push((s, p));
        }
    }
    trimmed.push((hi, point_at(&samples, hi)));

    // adaptive subdivision until consecutive azimuth jumps are < π/2
    let radial = |p: &Point3| -> Vec3 {
        let d = p - a;
        d - w * d.dot(&w)
    };
    let on_axis = |p: &Point3| radial(p).norm() <= TOL_AXIS * axis_len.max(1.0);
    let azimuth = |p: &Point3| -> f64 {
        let r = radial(p);
        e2.dot(&r).atan2(e1.dot(&r))
    };

    let mut work = trimmed;
    for _pass in 0..40 {
        let mut refined: Vec<(f64, Point3)> = Vec::with_capacity(work.len() * 2);
        let mut split_any = false;
        for i in 0..work.len() {
            refined.push(work[i]);
            if i + 1 >= work.len() {
                break;
            }
            let (s0, p0) = work[i];
            let (s1, p1) = work[i + 1];
            if on_axis(&p0) || on_axis(&p1) {
                continue;
            }
            let jump = principal(azimuth(&p1) - azimuth(&p0)).abs();
            if jump >= std::f64::consts::FRAC_PI_2 * 0.95 && (s1 - s0) > 1e-12 * total_len {
                let sm = 0.5 * (s0 + s1);
                refined.push((sm, point_at(&samples, sm)));
                split_any = true;
            }
        }
        work = refined;
        if !split_any {
            break;
        }
    }

    // unwrap over the off-axis samples
    let mut arc = Vec::with_capacity(work.len());
    let mut phi = Vec::with_capacity(work.len());
    let mut axis_degenerate = false;
    let mut last_raw: Option<f64> = None;
    let mut unwrapped = 0.0;
    for (s, p) in &work {
        if on_axis(p) {
            axis_degenerate = true;
            continue;
        }
        let raw = azimuth(p);
        unwrapped = match last_raw {
            None => raw,
            Some(prev) => unwrapped + principal(raw - prev),
        };
        last_raw = Some(raw);
        arc.push(*s);
        phi.push(unwrapped / std::f64::consts::TAU);
    }
    if phi.is_empty() {
        return Err(MetricError::AxisDegenerate);
    }
    let s_number = (phi[phi.len() - 1] - phi[0]).abs();
    Ok(SpiralReport {
        axis_point: *a,
        axis_dir: w,
        arc,
        phi,
        s: s_number,
        axis_degenerate,
    })
}

fn principal(mut d: f64) -> f64 {
    while d > std::f64::consts::PI {
        d -= std::f64::consts::TAU;
    }
    while d < -std::f64::consts::PI {
        d += std::f64::consts::TAU;
    }
    d
}

fn point_at(samples: &[(f64, Point3)], s: f64) -> Point3 {
    let mut prev = samples[0];
    for &(si, pi) in samples.iter().skip(1) {
        if s <= si {
            let span = si - prev.0;
            if span <= 0.0 {
                return pi;
            }
            let t = (s - prev.0) / span;
            return prev.1 + (pi - prev.1) * t;
        }
        prev = (si, pi);
    }
    samples.last().unwrap().1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Octagonal helix: radial lead-in from the axis, two full octagon turns,
    /// radial lead-out. The radial legs keep φ constant, so s is exactly 2.
    fn helix() -> (Vec<Point3>, Point3, Point3) {
        let a = Point3::new(0.0, 0.0, 0.0);
        let b = Point3::new(0.0, 0.0, 1.0);
        let mut pts = vec![a];
        let n = 16;
        for k in 0..=n {
            let ang = k as f64 * std::f64::consts::TAU / 8.0;
            let z = 0.1 + 0.8 * k as f64 / n as f64;
            pts.push(Point3::new(ang.cos(), ang.sin(), z));
        }
        pts.push(b);
        (pts, a, b)
    }

    #[test]
    fn helix_two_turns() {
        let (pts, a, b) = helix();
        let rep = spiral_of_polyline(&pts, &a, &b).unwrap();
        assert!((rep.s - 2.0).abs() < 1e-9, "s = {}", rep.s);
        // endpoint trimming keeps every sample off the axis
        assert!(!rep.axis_degenerate);
    }

    #[test]
    fn helix_reversed_same_s() {
        let (mut pts, a, b) = helix();
        pts.reverse();
        let rep = spiral_of_polyline(&pts, &b, &a).unwrap();
        assert!((rep.s - 2.0).abs() < 1e-9);
    }

    #[test]
    fn half_plane_path_has_zero_s() {
        // path in the x>0 half of the xz-plane bounded by the z-axis
        let a = Point3::new(1.0, 0.0, 0.0);
        let b = Point3::new(1.0, 0.0, 1.0);
        let pts = vec![
            a,
            Point3::new(2.0, 0.0, 0.2),
            Point3::new(1.5, 0.0, 0.4),
            Point3::new(3.0, 0.0, 0.8),
            b,
        ];
        // axis through a and b is vertical; all points share azimuth 0
        let rep = spiral_of_polyline(&pts, &a, &b).unwrap();
        assert!(rep.s.abs() < 1e-12, "s = {}", rep.s);
        assert!(!rep.axis_degenerate);
    }

    #[test]
    fn unwrap_is_continuous() {
        let (pts, a, b) = helix();
        let rep = spiral_of_polyline(&pts, &a, &b).unwrap();
        for w in rep.phi.windows(2) {
            assert!((w[1] - w[0]).abs() < 0.5, "jump ≥ π after unwrap");
        }
    }
}
