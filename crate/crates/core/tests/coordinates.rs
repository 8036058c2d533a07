mod common;

use common::{oracle_edge, oracle_triple, to_raw};
use flagdual::flags::{is_very_generic, Flag};
use flagdual::numerics::{GaussRat, Scalar};
use flagdual::tetra::{complete_from_minimal, edge_coords, reconstruct, MinimalCoords, EDGES, FACES};
use num_complex::Complex64;
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Complex64::new(a, b))
}

/// A random flag: a point and a random line through it.
fn flag() -> impl Strategy<Value = Flag<Complex64>> {
    ([cplx(), cplx(), cplx()], [cplx(), cplx()]).prop_filter_map("nondegenerate", |(x, uv)| {
        // line through x: any (u, v, w) with u x0 + v x1 + w x2 = 0
        if x[2].norm() < 0.2 {
            return None;
        }
        let w = -(uv[0] * x[0] + uv[1] * x[1]) / x[2];
        Flag::new(x, [uv[0], uv[1], w]).ok()
    })
}

fn tuple() -> impl Strategy<Value = [Flag<Complex64>; 4]> {
    [flag(), flag(), flag(), flag()].prop_filter("very generic", |t| is_very_generic(t))
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-9i64..10, 1i64..6, -9i64..10, 1i64..6).prop_map(|(a, b, c, d)| GaussRat::from_fracs(a, b, c, d))
}

proptest! {
    #[test]
    fn edges_match_the_determinant_oracle(t in tuple()) {
        let Ok(c) = edge_coords(&t) else { return Ok(()) };
        let raw = to_raw(&t);
        for (i, j) in EDGES {
            let o = oracle_edge(&raw, usize::from(i), usize::from(j));
            prop_assert!(c.z(i, j).close_to(&o, 1e-7), "z{i}{j}: {} vs {o}", c.z(i, j));
        }
    }

    #[test]
    fn faces_match_the_triple_ratio_oracle(t in tuple()) {
        let Ok(c) = edge_coords(&t) else { return Ok(()) };
        let raw = to_raw(&t);
        for f in FACES {
            let o = oracle_triple(&raw, usize::from(f[0]), usize::from(f[1]), usize::from(f[2]));
            prop_assert!(c.face(f).unwrap().close_to(&o, 1e-7), "{f:?}");
        }
    }

    #[test]
    fn reconstruction_round_trips_exactly(v in [gauss(), gauss(), gauss(), gauss()]) {
        let Ok(m) = MinimalCoords::from_array(v) else { return Ok(()) };
        let Ok(c) = complete_from_minimal(&m) else { return Ok(()) };
        let flags = reconstruct(&m).unwrap();
        prop_assert_eq!(edge_coords(&flags).unwrap(), c);
    }

    #[test]
    fn vertex_products_are_minus_one(v in [gauss(), gauss(), gauss(), gauss()]) {
        let Ok(m) = MinimalCoords::from_array(v) else { return Ok(()) };
        let Ok(c) = complete_from_minimal(&m) else { return Ok(()) };
        for i in 1..=4 {
            prop_assert_eq!(c.vertex_product(i), GaussRat::from_i64(-1));
        }
    }
}
