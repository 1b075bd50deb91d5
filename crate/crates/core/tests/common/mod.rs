#![allow(dead_code)]

use std::path::PathBuf;

use evscan::CurvePoint;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Reads an "x y z" golden file.
pub fn read_points(name: &str) -> Vec<CurvePoint> {
    std::fs::read_to_string(data_path(name))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: Vec<usize> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            CurvePoint { x: v[0], y: v[1], z: v[2] }
        })
        .collect()
}

pub fn read_label_grid(name: &str) -> Vec<Vec<u32>> {
    std::fs::read_to_string(data_path(name))
        .unwrap()
        .lines()
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

fn sgn(v: i64) -> i64 {
    v.signum()
}

fn floor_half(v: i64) -> i64 {
    v.div_euclid(2)
}

/// Line-for-line port of the generalized Hilbert recursion with its twelve
/// scalar arguments (Python `//` is floor division).
#[allow(clippy::too_many_arguments)]
pub fn gilbert_rec(
    out: &mut Vec<(i64, i64, i64)>,
    x: i64, y: i64, z: i64,
    ax: i64, ay: i64, az: i64,
    bx: i64, by: i64, bz: i64,
    cx: i64, cy: i64, cz: i64,
) {
    let w = (ax + ay + az).abs();
    let h = (bx + by + bz).abs();
    let d = (cx + cy + cz).abs();
    let (dax, day, daz) = (sgn(ax), sgn(ay), sgn(az));
    let (dbx, dby, dbz) = (sgn(bx), sgn(by), sgn(bz));
    let (dcx, dcy, dcz) = (sgn(cx), sgn(cy), sgn(cz));

    if h == 1 && d == 1 {
        for i in 0..w {
            out.push((x + i * dax, y + i * day, z + i * daz));
        }
        return;
    }
    if w == 1 && d == 1 {
        for i in 0..h {
            out.push((x + i * dbx, y + i * dby, z + i * dbz));
        }
        return;
    }
    if w == 1 && h == 1 {
        for i in 0..d {
            out.push((x + i * dcx, y + i * dcy, z + i * dcz));
        }
        return;
    }

    let (mut ax2, mut ay2, mut az2) = (floor_half(ax), floor_half(ay), floor_half(az));
    let (mut bx2, mut by2, mut bz2) = (floor_half(bx), floor_half(by), floor_half(bz));
    let (mut cx2, mut cy2, mut cz2) = (floor_half(cx), floor_half(cy), floor_half(cz));
    let w2 = (ax2 + ay2 + az2).abs();
    let h2 = (bx2 + by2 + bz2).abs();
    let d2 = (cx2 + cy2 + cz2).abs();

    if w2 % 2 == 1 && w > 2 {
        (ax2, ay2, az2) = (ax2 + dax, ay2 + day, az2 + daz);
    }
    if h2 % 2 == 1 && h > 2 {
        (bx2, by2, bz2) = (bx2 + dbx, by2 + dby, bz2 + dbz);
    }
    if d2 % 2 == 1 && d > 2 {
        (cx2, cy2, cz2) = (cx2 + dcx, cy2 + dcy, cz2 + dcz);
    }

    if 2 * w > 3 * h && 2 * w > 3 * d {
        gilbert_rec(out, x, y, z, ax2, ay2, az2, bx, by, bz, cx, cy, cz);
        gilbert_rec(out, x + ax2, y + ay2, z + az2, ax - ax2, ay - ay2, az - az2, bx, by, bz, cx, cy, cz);
    } else if 3 * h > 4 * d {
        gilbert_rec(out, x, y, z, bx2, by2, bz2, cx, cy, cz, ax2, ay2, az2);
        gilbert_rec(out, x + bx2, y + by2, z + bz2, ax, ay, az, bx - bx2, by - by2, bz - bz2, cx, cy, cz);
        gilbert_rec(
            out,
            x + (ax - dax) + (bx2 - dbx), y + (ay - day) + (by2 - dby), z + (az - daz) + (bz2 - dbz),
            -bx2, -by2, -bz2,
            cx, cy, cz,
            -(ax - ax2), -(ay - ay2), -(az - az2),
        );
    } else if 3 * d > 4 * h {
        gilbert_rec(out, x, y, z, cx2, cy2, cz2, ax2, ay2, az2, bx, by, bz);
        gilbert_rec(out, x + cx2, y + cy2, z + cz2, ax, ay, az, bx, by, bz, cx - cx2, cy - cy2, cz - cz2);
        gilbert_rec(
            out,
            x + (ax - dax) + (cx2 - dcx), y + (ay - day) + (cy2 - dcy), z + (az - daz) + (cz2 - dcz),
            -cx2, -cy2, -cz2,
            -(ax - ax2), -(ay - ay2), -(az - az2),
            bx, by, bz,
        );
    } else {
        gilbert_rec(out, x, y, z, bx2, by2, bz2, cx2, cy2, cz2, ax2, ay2, az2);
        gilbert_rec(out, x + bx2, y + by2, z + bz2, cx, cy, cz, ax2, ay2, az2, bx - bx2, by - by2, bz - bz2);
        gilbert_rec(
            out,
            x + (bx2 - dbx) + (cx - dcx), y + (by2 - dby) + (cy - dcy), z + (bz2 - dbz) + (cz - dcz),
            ax, ay, az,
            -bx2, -by2, -bz2,
            -(cx - cx2), -(cy - cy2), -(cz - cz2),
        );
        gilbert_rec(
            out,
            x + (ax - dax) + bx2 + (cx - dcx), y + (ay - day) + by2 + (cy - dcy), z + (az - daz) + bz2 + (cz - dcz),
            -cx, -cy, -cz,
            -(ax - ax2), -(ay - ay2), -(az - az2),
            bx - bx2, by - by2, bz - bz2,
        );
        gilbert_rec(
            out,
            x + (ax - dax) + (bx2 - dbx), y + (ay - day) + (by2 - dby), z + (az - daz) + (bz2 - dbz),
            -bx2, -by2, -bz2,
            cx2, cy2, cz2,
            -(ax - ax2), -(ay - ay2), -(az - az2),
        );
    }
}

pub fn gilbert_oracle(w: usize, h: usize, d: usize) -> Vec<CurvePoint> {
    let (w, h, d) = (w as i64, h as i64, d as i64);
    let mut out = Vec::new();
    if w >= h && w >= d {
        gilbert_rec(&mut out, 0, 0, 0, w, 0, 0, 0, h, 0, 0, 0, d);
    } else if h >= w && h >= d {
        gilbert_rec(&mut out, 0, 0, 0, 0, h, 0, w, 0, 0, 0, 0, d);
    } else {
        gilbert_rec(&mut out, 0, 0, 0, 0, 0, d, w, 0, 0, 0, h, 0);
    }
    out.into_iter()
        .map(|(x, y, z)| CurvePoint { x: x as usize, y: y as usize, z: z as usize })
        .collect()
}

/// Checks that `points` visits each cell of `w×h×d` exactly once.
pub fn covers_grid(points: &[CurvePoint], w: usize, h: usize, d: usize) -> bool {
    if points.len() != w * h * d {
        return false;
    }
    let mut seen = vec![false; w * h * d];
    for p in points {
        if p.x >= w || p.y >= h || p.z >= d {
            return false;
        }
        let i = p.x + w * (p.y + h * p.z);
        if seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}
