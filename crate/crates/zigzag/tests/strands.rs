use exactalg::{rat, Polygon};
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torusgraph::{offset_gauge, parse_graph, TorusGraph, Vec2};
use zigzag::{extract_zigzags, front_arrangement, newton_polygon, stacky_fan, zigzag_next};

const CONSISTENT: [&str; 8] = ["hex1", "sq1", "hex2", "hex3", "hex4", "sq22", "sq4", "sq2"];

fn load(name: &str) -> TorusGraph {
    let path = format!("{}/../../fixtures/{name}.tg", env!("CARGO_MANIFEST_DIR"));
    parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn classes(g: &TorusGraph) -> Vec<Vec2> {
    extract_zigzags(g).iter().map(|z| z.cls).collect()
}

fn sorted(mut v: Vec<Vec2>) -> Vec<Vec2> {
    v.sort();
    v
}

/// Searches GL₂(Z) matrices with entries in [−2, 2] for one carrying `a` onto `b`.
fn related_by_automorphism(a: &[Vec2], b: &[Vec2]) -> Option<[i64; 4]> {
    let target = sorted(b.to_vec());
    for m in 0..625 {
        let e: Vec<i64> = (0..4).map(|k| (m / 5i64.pow(k)) % 5 - 2).collect();
        if (e[0] * e[3] - e[1] * e[2]).abs() != 1 {
            continue;
        }
        let img: Vec<Vec2> = a.iter().map(|v| (e[0] * v.0 + e[1] * v.1, e[2] * v.0 + e[3] * v.1)).collect();
        if sorted(img) == target {
            return Some([e[0], e[1], e[2], e[3]]);
        }
    }
    None
}

#[test]
fn hexagonal_classes() {
    let hex1 = classes(&load("hex1"));
    assert_eq!(sorted(hex1.clone()), sorted(vec![(1, 0), (0, -1), (-1, 1)]));
    let hex2 = classes(&load("hex2"));
    let reference = [(0, 1), (0, 1), (-1, 0), (1, -2)];
    assert!(related_by_automorphism(&hex2, &reference).is_some());
    let neg: Vec<Vec2> = hex2.iter().map(|v| (-v.0, -v.1)).collect();
    assert_eq!(sorted(neg), sorted(reference.to_vec()));
    assert_eq!(classes(&load("sq1")).len(), 4);
}

#[test]
fn classes_sum_to_zero_and_edges_are_crossed_twice() {
    for name in CONSISTENT.iter().chain(&["bad-bigon", "trivial-class"]) {
        let g = load(name);
        let zs = extract_zigzags(&g);
        let total = zs.iter().fold((0, 0), |s, z| (s.0 + z.cls.0, s.1 + z.cls.1));
        assert_eq!(total, (0, 0), "{name}");
        let mut uses = vec![0; g.edge_count()];
        for z in &zs {
            for (k, d) in z.passes.iter().enumerate() {
                uses[d.edge] += 1;
                assert_eq!(zigzag_next(&g, *d), z.passes[(k + 1) % z.len()]);
            }
            assert_eq!(z.offsets.len(), z.len(), "{name}");
            let mut pos = z.offsets[0];
            for (k, d) in z.passes.iter().enumerate() {
                assert_eq!(pos, z.offsets[k], "{name}");
                let o = g.edge(d.edge).offset;
                let s = d.sign();
                pos = (pos.0 + s * o.0, pos.1 + s * o.1);
            }
            assert_eq!((pos.0 - z.offsets[0].0, pos.1 - z.offsets[0].1), z.cls, "{name}");
        }
        assert!(uses.iter().all(|&u| u == 2), "{name}: {uses:?}");
    }
}

#[test]
fn polygon_ignores_class_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in CONSISTENT {
        let mut cs = classes(&load(name));
        let p = newton_polygon(&cs).unwrap();
        for _ in 0..20 {
            cs.shuffle(&mut rng);
            assert_eq!(newton_polygon(&cs).unwrap(), p, "{name}");
        }
    }
}

#[test]
fn fixture_polygons() {
    let expect: [(&str, &[Vec2], usize); 8] = [
        ("hex1", &[(0, 0), (1, 0), (0, 1)], 0),
        ("sq1", &[(0, 0), (1, 0), (1, 1), (0, 1)], 0),
        ("hex2", &[], 0),
        ("hex3", &[], 1),
        ("hex4", &[], 0),
        ("sq22", &[], 1),
        ("sq4", &[], 2),
        ("sq2", &[], 1),
    ];
    for (name, verts, interior) in expect {
        let p = newton_polygon(&classes(&load(name))).unwrap();
        if !verts.is_empty() {
            assert_eq!(p, Polygon::hull(verts.iter().copied()).unwrap().canonical(), "{name}");
        }
        assert_eq!(p.interior_points().len(), interior, "{name}");
    }
}

#[test]
fn fans_close_up() {
    for name in CONSISTENT {
        let fan = stacky_fan(&newton_polygon(&classes(&load(name))).unwrap()).unwrap();
        assert_eq!(fan.closure(), (0, 0), "{name}");
        let total: i64 = fan.rays.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total as usize, fan.polygon.boundary_count() as usize, "{name}");
        for (i, a) in fan.rays.iter().enumerate() {
            for b in &fan.rays[i + 1..] {
                assert_ne!(a.generator, b.generator, "{name}");
            }
        }
    }
    let hex2 = stacky_fan(&newton_polygon(&classes(&load("hex2"))).unwrap()).unwrap();
    let mut mult: Vec<i64> = hex2.rays.iter().map(|r| r.multiplicity).collect();
    mult.sort();
    assert_eq!(mult, [1, 1, 2]);
}

#[test]
fn gauge_leaves_strand_data_alone() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in CONSISTENT {
        let g = load(name);
        let cs = sorted(classes(&g));
        let p = newton_polygon(&cs).unwrap();
        let fan = stacky_fan(&p).unwrap();
        for _ in 0..5 {
            let mut v = |n: usize| -> Vec<Vec2> { (0..n).map(|_| (rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect() };
            let (fb, fw) = (v(g.black_count()), v(g.white_count()));
            let h = offset_gauge(&g, &fb, &fw);
            assert_eq!(sorted(classes(&h)), cs, "{name}");
            let q = newton_polygon(&classes(&h)).unwrap();
            assert_eq!(q, p);
            assert_eq!(stacky_fan(&q).unwrap(), fan);
        }
    }
}

#[test]
fn hex2_fronts_space_the_doubled_ray() {
    let fan = stacky_fan(&newton_polygon(&classes(&load("hex2"))).unwrap()).unwrap();
    let fronts = front_arrangement(&fan, &rat(1, 1)).unwrap();
    assert_eq!(fronts.len(), 4);
    let doubled: Vec<_> = fronts.iter().filter(|f| fan.rays[f.ray].multiplicity == 2).collect();
    assert_eq!(doubled.len(), 2);
    assert_eq!(doubled[0].generator, doubled[1].generator);
    assert_eq!(&doubled[1].level - &doubled[0].level, rat(1, 2));
    let collapsed = front_arrangement(&fan, &rat(0, 1)).unwrap();
    assert!(collapsed.iter().all(|f| f.level == rat(0, 1)));
}
