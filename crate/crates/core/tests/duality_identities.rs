mod common;

use common::{exact_cr_tuple, float_tetra, rng};
use flagdual::complex::census::hyperbolic_example;
use flagdual::duality::{beta_defect, conjugate_coords, dual_coords_closed, dual_coords_matrix, to_w};
use flagdual::numerics::{GaussRat, Scalar};
use flagdual::prebloch::bloch_wigner;
use flagdual::tetra::{complete_from_minimal, edge_coords, even_completion, reconstruct, MinimalCoords, EDGES};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-9i64..10, 1i64..6, -9i64..10, 1i64..6).prop_map(|(a, b, c, d)| GaussRat::from_fracs(a, b, c, d))
}

fn minimal() -> impl Strategy<Value = MinimalCoords<GaussRat>> {
    [gauss(), gauss(), gauss(), gauss()].prop_filter_map("very generic", |v| {
        let m = MinimalCoords::from_array(v).ok()?;
        complete_from_minimal(&m).ok()?.very_generic().then_some(m)
    })
}

proptest! {
    #[test]
    fn closed_form_matches_dual_flags(m in minimal()) {
        let c = complete_from_minimal(&m).unwrap();
        let Ok(closed) = dual_coords_closed(&c) else { return Ok(()) };
        prop_assert_eq!(closed, dual_coords_matrix(&reconstruct(&m).unwrap()).unwrap());
    }

    #[test]
    fn duality_is_an_involution(m in minimal()) {
        let c = complete_from_minimal(&m).unwrap();
        let Ok(d) = dual_coords_closed(&c) else { return Ok(()) };
        if d.very_generic() {
            prop_assert_eq!(dual_coords_closed(&d).unwrap(), c);
        }
    }

    #[test]
    fn opposite_edge_products_swap(m in minimal()) {
        let c = complete_from_minimal(&m).unwrap();
        let Ok(d) = dual_coords_closed(&c) else { return Ok(()) };
        for (i, j) in EDGES {
            let (k, l) = even_completion(i, j);
            prop_assert_eq!(
                d.z(i, j).clone() * d.z(j, i).clone(),
                c.z(k, l).clone() * c.z(l, k).clone()
            );
        }
        prop_assert_eq!(to_w(&d), to_w(&c).swap());
    }

    #[test]
    fn conjugation_commutes_with_duality(m in minimal()) {
        let c = complete_from_minimal(&m).unwrap();
        let Ok(d) = dual_coords_closed(&c) else { return Ok(()) };
        prop_assert_eq!(dual_coords_closed(&conjugate_coords(&c)).unwrap(), conjugate_coords(&d));
    }

    #[test]
    fn hyperbolic_tetrahedra_are_self_dual(a in -9i64..10, b in 1i64..6, c in 1i64..10, d in 1i64..6) {
        let z = GaussRat::from_fracs(a, b, c, d);
        let dc = hyperbolic_example(&z).unwrap();
        let t = &dc.coords()[0];
        prop_assert_eq!(&dual_coords_closed(t).unwrap(), t);
        prop_assert!(t.faces().iter().all(Scalar::is_one));
    }
}

#[test]
fn defect_identity_through_the_quadrature_free_path() {
    let mut r = rng(11);
    for _ in 0..200 {
        let c = float_tetra(&mut r);
        let Ok(d) = dual_coords_closed(&c) else { continue };
        let lhs = c.beta().eval_d() - d.beta().eval_d();
        let rhs: f64 = c.faces().iter().map(|f| bloch_wigner(-f)).sum();
        assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
        assert!((beta_defect(&c).unwrap().eval_d() - rhs).abs() < 1e-12);
    }
}

#[test]
fn cr_tetrahedra_dualize_to_their_conjugates() {
    let mut r = rng(5);
    let mut seen = 0;
    while seen < 50 {
        let Ok(c) = edge_coords(&exact_cr_tuple(&mut r)) else { continue };
        if !c.very_generic() {
            continue;
        }
        seen += 1;
        assert_eq!(dual_coords_closed(&c).unwrap(), c.conj());
        for (i, j) in EDGES {
            let (k, l) = even_completion(i, j);
            let lhs = c.z(i, j).clone() * c.z(j, i).clone();
            assert_eq!(lhs, (c.z(k, l).clone() * c.z(l, k).clone()).conj());
        }
        let d = c.beta().eval_d() - dual_coords_closed(&c).unwrap().beta().eval_d();
        assert!((d - beta_defect(&c).unwrap().eval_d()).abs() < 1e-9);
    }
}
