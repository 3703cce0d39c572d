use knotwidth::carving::heuristic_carving;
use knotwidth::families::braid_closure;
use knotwidth::triangulation::{bezout_pair, layered_solid_torus, torus_complement, Triangulation};
use knotwidth::{parse_pd, run_pipeline, subdivide_to_simple, Diagram};
use proptest::prelude::*;

fn braid_word() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (3usize..=4).prop_flat_map(|s| {
        let gen = (1..s as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g });
        (Just(s), prop::collection::vec(gen, 3..9))
    })
}

fn diagram() -> impl Strategy<Value = Diagram> {
    braid_word().prop_filter_map("closure fails", |(s, w)| braid_closure(s, &w).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn diagram_maps_are_spheres(d in diagram()) {
        prop_assert_eq!(d.map().euler_characteristic(), 2);
        let s = subdivide_to_simple(&d);
        prop_assert!(s.is_simple());
        prop_assert_eq!(s.map().euler_characteristic(), 2);
    }

    #[test]
    fn pd_round_trip(d in diagram()) {
        let pd = d.to_pd().unwrap();
        let back = parse_pd(&pd).unwrap();
        prop_assert!(d.is_isomorphic(&back));
    }

    #[test]
    fn middle_sets_have_even_size(d in diagram()) {
        // Every vertex of a diagram graph has even degree, so every cut is even.
        let g = subdivide_to_simple(&d).graph();
        let dec = heuristic_carving(&g);
        prop_assert!(dec.middle_sizes().iter().all(|m| m % 2 == 0));
    }

    #[test]
    fn pipeline_stages_are_consistent(d in diagram()) {
        let Ok(run) = run_pipeline(&d, 12) else { return Ok(()) };
        prop_assert!(run.curves.validate(run.graph.map(), &run.carving).all_passed());
        prop_assert!(run.spheres.weights().iter().all(|w| w % 2 == 0));
        prop_assert!(run.spheres.cost() <= run.carving.width());
        prop_assert!(run.splitting.cost() <= 2 * run.spheres.cost());
    }

    #[test]
    fn bezout_identity(p in 2u64..200, q in 2u64..200) {
        match bezout_pair(p, q) {
            Ok((u, v)) => {
                prop_assert_eq!(p * v, q * u + 1);
                prop_assert!(v < q && u < p);
            }
            Err(_) => prop_assert!(knotwidth::families::gcd(p as i64, q as i64) != 1),
        }
    }

    #[test]
    fn gluings_are_involutions(p in 3u64..25, q in 2u64..25) {
        prop_assume!(p != q && knotwidth::families::gcd(p as i64, q as i64) == 1);
        let t = torus_complement(p, q).unwrap().triangulation;
        for tet in 0..t.size() {
            for f in 0..4 {
                if let Some((t2, perm)) = t.gluing(tet, f) {
                    let (back, inv) = t.gluing(t2, perm[f] as usize).unwrap();
                    prop_assert_eq!(back, tet);
                    for i in 0..4 {
                        prop_assert_eq!(inv[perm[i] as usize] as usize, i);
                    }
                }
            }
        }
    }

    #[test]
    fn triangulation_text_round_trip(p in 2u64..40, u in 1u64..40) {
        prop_assume!(u < p && knotwidth::families::gcd(p as i64, u as i64) == 1);
        let t = layered_solid_torus(p, u).unwrap().triangulation;
        let back = Triangulation::from_text(&t.to_text()).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(Triangulation::from_json(&t.to_json()).unwrap(), t);
    }
}
