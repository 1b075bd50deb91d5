mod common;

use common::{covers_grid, gilbert_oracle, read_points};
use evscan::curves::{
    deserialize, generate_hilbert, generate_peano, generate_reshape, generate_trans_hilbert, generate_zorder,
    read_text, serialize, write_binary, write_text,
};
use evscan::{generate, CurveKind, CurvePoint, Error, FeatureVolume, GridDims};
use proptest::prelude::*;

fn dims(w: usize, h: usize, d: usize) -> GridDims {
    GridDims::new(w, h, d).unwrap()
}

fn pt(x: usize, y: usize) -> CurvePoint {
    CurvePoint { x, y, z: 0 }
}

#[test]
fn hilbert_matches_goldens() {
    for (name, (w, h, d)) in [
        ("hilbert_2x2x1.txt", (2, 2, 1)),
        ("hilbert_4x4x1.txt", (4, 4, 1)),
        ("hilbert_8x8x1.txt", (8, 8, 1)),
        ("hilbert_4x4x4.txt", (4, 4, 4)),
        ("hilbert_5x3x1.txt", (5, 3, 1)),
        ("hilbert_6x4x3.txt", (6, 4, 3)),
    ] {
        let path = generate_hilbert(dims(w, h, d)).unwrap();
        assert_eq!(path.points(), &read_points(name)[..], "{name}");
    }
}

#[test]
fn trans_hilbert_matches_goldens() {
    for (name, (w, h)) in [("trans_hilbert_2x2x1.txt", (2, 2)), ("trans_hilbert_4x2x1.txt", (4, 2))] {
        let path = generate_trans_hilbert(dims(w, h, 1)).unwrap();
        assert_eq!(path.points(), &read_points(name)[..], "{name}");
        assert!(path.is_bijective());
    }
}

#[test]
fn goldens_agree_with_transliteration() {
    for (name, (w, h, d)) in [
        ("hilbert_4x4x4.txt", (4, 4, 4)),
        ("hilbert_6x4x3.txt", (6, 4, 3)),
        ("hilbert_5x3x1.txt", (5, 3, 1)),
    ] {
        assert_eq!(gilbert_oracle(w, h, d), read_points(name), "{name}");
    }
}

#[test]
fn two_by_two_is_u_shaped() {
    let p = generate_hilbert(dims(2, 2, 1)).unwrap();
    assert_eq!(p.points(), &[pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)]);
    assert_eq!(p.max_step(), 1);
}

#[test]
fn degenerate_grid() {
    for kind in CurveKind::ALL {
        let p = generate(kind, dims(1, 1, 1)).unwrap();
        assert_eq!(p.points(), &[CurvePoint { x: 0, y: 0, z: 0 }], "{kind}");
    }
}

#[test]
fn trans_hilbert_is_axis_swap_of_hilbert() {
    for (w, h, d) in [(2, 2, 1), (4, 2, 1), (7, 5, 1), (8, 8, 1), (6, 4, 3), (3, 9, 2)] {
        let t = generate_trans_hilbert(dims(w, h, d)).unwrap();
        let swapped: Vec<_> = t.points().iter().map(|p| CurvePoint { x: p.y, y: p.x, z: p.z }).collect();
        let base = generate_hilbert(dims(h, w, d)).unwrap();
        assert_eq!(swapped, base.points(), "{w}x{h}x{d}");
    }
}

#[test]
fn zorder_orders() {
    let z = generate_zorder(dims(2, 2, 1)).unwrap();
    assert_eq!(z.points(), &[pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)]);
    let z = generate_zorder(dims(4, 4, 1)).unwrap();
    assert!(z.is_bijective());
    assert!(z.max_step() > 1);
    assert!(matches!(generate_zorder(dims(6, 4, 1)), Err(Error::UnsupportedSize { .. })));
}

#[test]
fn peano_orders() {
    let p = generate_peano(dims(3, 3, 1)).unwrap();
    assert_eq!(p.len(), 9);
    assert_eq!(p.max_step(), 1);
    let p = generate_peano(dims(9, 9, 1)).unwrap();
    assert!(p.is_bijective());
    assert_eq!(p.max_step(), 1);
    assert!(matches!(generate_peano(dims(6, 3, 1)), Err(Error::UnsupportedSize { .. })));
}

#[test]
fn reshape_orders() {
    assert_eq!(generate_reshape(dims(2, 2, 1)).points(), &[pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)]);
    assert_eq!(generate_reshape(dims(3, 1, 1)).points(), &[pt(0, 0), pt(1, 0), pt(2, 0)]);
    let r = generate_reshape(dims(2, 2, 2));
    let jumps = r.points().windows(2).filter(|w| w[0].l1_distance(&w[1]) > 1).count();
    assert_eq!(jumps, 3);
}

#[test]
fn unit_steps_on_native_sizes() {
    for n in [2, 4, 8, 16, 32] {
        for d in [1, n] {
            if n * n * d > 40_000 {
                continue;
            }
            for kind in [CurveKind::Hilbert, CurveKind::TransHilbert] {
                assert_eq!(generate(kind, dims(n, n, d)).unwrap().max_step(), 1, "{kind} {n}x{n}x{d}");
            }
            assert!(generate(CurveKind::ZOrder, dims(n, n, d)).unwrap().max_step() > 1);
            assert!(generate(CurveKind::Reshape, dims(n, n, d)).unwrap().max_step() > 1);
        }
    }
    for (w, h, d) in [(27, 27, 1), (9, 9, 9), (3, 27, 1)] {
        assert_eq!(generate_peano(dims(w, h, d)).unwrap().max_step(), 1);
    }
}

#[test]
fn identity_volume_reshape_serializes_in_order() {
    let vol = FeatureVolume::from_fn(1, 3, 5, |_, y, x| (y * 5 + x) as f64).unwrap();
    let seq = serialize(&generate_reshape(dims(5, 3, 1)), &vol).unwrap();
    assert_eq!(seq.values(), (0..15).map(|v| v as f64).collect::<Vec<_>>());
}

#[test]
fn hilbert_serialization_follows_path() {
    let vol = FeatureVolume::from_fn(1, 4, 4, |_, y, x| (y * 4 + x) as f64).unwrap();
    let path = generate_hilbert(dims(4, 4, 1)).unwrap();
    let seq = serialize(&path, &vol).unwrap();
    // golden path read by hand into row-major indices
    let expected: Vec<f64> = read_points("hilbert_4x4x1.txt").iter().map(|p| (p.y * 4 + p.x) as f64).collect();
    assert_eq!(seq.values(), expected);
}

#[test]
fn export_round_trip() {
    let path = generate_hilbert(dims(6, 4, 3)).unwrap();
    let mut text = Vec::new();
    write_text(&path, &mut text).unwrap();
    assert_eq!(String::from_utf8(text.clone()).unwrap().lines().count(), 72);
    let back = read_text(path.dims(), path.kind(), &text[..]).unwrap();
    assert_eq!(back, path);

    let mut bin = Vec::new();
    write_binary(&path, &mut bin).unwrap();
    let idx: Vec<usize> = bin.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap()) as usize).collect();
    assert_eq!(idx, path.linear_indices());
}

#[test]
fn read_text_rejects_duplicates() {
    let text = "0 0 0\n0 0 0\n1 0 0\n1 1 0\n";
    assert!(read_text(dims(2, 2, 1), CurveKind::Hilbert, text.as_bytes()).is_err());
}

fn small_dims() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..40, 1usize..40, prop_oneof![Just(1usize), 1usize..12])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hilbert_equals_transliteration((w, h, d) in small_dims()) {
        let path = generate_hilbert(dims(w, h, d)).unwrap();
        prop_assert_eq!(path.points(), &gilbert_oracle(w, h, d)[..]);
        prop_assert!(covers_grid(path.points(), w, h, d));
    }

    #[test]
    fn every_generator_is_bijective((w, h, d) in small_dims()) {
        let g = dims(w, h, d);
        for kind in CurveKind::ALL {
            if kind.supports(g) {
                let p = generate(kind, g).unwrap();
                prop_assert!(covers_grid(p.points(), w, h, d), "{} {}", kind, g);
            }
        }
    }

    #[test]
    fn serialize_round_trip((w, h, d) in small_dims(), seed in any::<u64>(), kind_ix in 0usize..5) {
        let kind = CurveKind::ALL[kind_ix];
        let g = dims(w, h, d);
        prop_assume!(kind.supports(g));
        let path = generate(kind, g).unwrap();
        let channels = if d == 1 { 1 + (seed % 3) as usize } else { d };
        let vol = FeatureVolume::from_fn(channels, h, w, |c, y, x| {
            ((seed ^ (c * 7919 + y * 131 + x) as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 11) as f64 * 1e-9 - 3.0
        }).unwrap();
        let back = deserialize(&path, &serialize(&path, &vol).unwrap()).unwrap();
        prop_assert_eq!(back, vol);
    }
}
