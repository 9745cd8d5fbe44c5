use morsekit_core::constructions::*;
use morsekit_core::verify::{betti_numbers, exhaustive_collapsible, exhaustive_nonevasive, Decision, DEFAULT_SIZE_LIMIT};
use morsekit_core::{Face, SimplicialComplex};

fn shared_codim_one(a: &Face, b: &Face) -> bool {
    a.len() == b.len() && a.vertices().iter().filter(|v| b.contains(**v)).count() == a.len() - 1
}

#[test]
fn sigma_has_one_free_face() {
    for d in 2..=5 {
        let k = build_sigma(d).unwrap();
        assert_eq!(k.num_faces(0), (1 << d) + d + 1, "d = {d}");
        assert_eq!(k.euler_characteristic(), 1);
        assert!(k.is_pure());
        let free = k.free_faces();
        assert_eq!(free.len(), 1, "d = {d}");
        let expected: Vec<u32> = (1..=d as u32).collect();
        assert_eq!(free[0].0.vertices(), &expected[..]);
    }
}

#[test]
fn sigma_pull_order_changes_nothing_essential() {
    let orders: [&[u32]; 3] = [&[7, 6, 5, 4], &[5, 4, 6, 7], &[6, 7, 4, 5]];
    for o in orders {
        let k = build_sigma_with_order(2, Some(o)).unwrap();
        assert_eq!(k.f_vector(), [7, 19, 13]);
        assert_eq!(k.free_faces().len(), 1);
    }
}

#[test]
fn e_bar_has_two_adjacent_free_faces() {
    for d in 2..=3 {
        let k = build_e(d).unwrap();
        assert_eq!(k.dim(), d);
        assert_eq!(k.euler_characteristic(), 1);
        let free = k.free_faces();
        assert_eq!(free.len(), 2, "d = {d}");
        assert!(shared_codim_one(&free[0].0, &free[1].0));
    }
}

#[test]
fn named_complexes() {
    let t = build_two_optima();
    assert_eq!(t.f_vector(), [106, 596, 1064, 573]);
    assert_eq!(t.free_faces().len(), 1);
    let p = build_sigma2_sigma3prime();
    assert_eq!(p.f_vector(), [25, 128, 218, 114]);
    let h = dunce_hat();
    assert_eq!(h.free_faces().len(), 0);
    assert_eq!(betti_numbers(&h, DEFAULT_SIZE_LIMIT).unwrap().ranks, vec![1, 0, 0]);
    assert_eq!(exhaustive_collapsible(&h, 1_000_000), Decision::No);
    let q = poincare();
    assert_eq!(q.f_vector(), POINCARE_F);
    assert!(check_poincare(&q).is_ok());
}

#[test]
fn two_optima_is_acyclic() {
    let b = betti_numbers(&build_two_optima(), DEFAULT_SIZE_LIMIT).unwrap();
    assert_eq!(b.ranks, vec![1, 0, 0, 0]);
    assert!(b.is_torsion_free());
}

#[test]
fn sigma2_is_collapsible_but_evasive() {
    let k = build_sigma(2).unwrap();
    assert_eq!(exhaustive_collapsible(&k, 1_000_000), Decision::Yes);
    assert_eq!(exhaustive_nonevasive(&k, 1_000_000), Decision::No);
}

#[test]
fn subdivision_multiplies_facets() {
    let t = build_two_optima();
    let sd = barycentric_subdivision(&t, 1).unwrap();
    assert_eq!(sd.num_faces(3), 24 * 573);
    assert_eq!(sd.num_faces(0), t.total_faces());
    assert_eq!(sd.euler_characteristic(), 1);
    let s = simplex(2);
    assert_eq!(barycentric_subdivision(&s, 2).unwrap().num_faces(2), 36);
}

#[test]
fn cross_polytope_and_antiprism() {
    for d in 2..=4 {
        let c = cross_polytope(d).unwrap();
        assert_eq!(c.num_faces(0), 2 * d);
        assert_eq!(c.num_faces(d - 1), 1 << d);
        assert_eq!(c.euler_characteristic(), if d % 2 == 0 { 0 } else { 2 });
        let a = antiprism_triangulation(d, None).unwrap();
        assert_eq!(a.dim(), d);
        assert_eq!(a.num_faces(0), (1 << d) + 2 * d);
        assert_eq!(a.euler_characteristic(), 1);
        // the boundary is the cross-polytope
        let bd = a.boundary_complex().unwrap();
        assert_eq!(bd.f_vector(), c.f_vector());
    }
}

#[test]
fn suspensions() {
    let circle = simplex_boundary(2).unwrap();
    let s = suspension(&circle).unwrap();
    assert_eq!(s.f_vector(), [5, 9, 6]);
    let o = one_point_suspension(&circle, 1).unwrap();
    assert_eq!(o.num_faces(0), 4);
    assert_eq!(o.euler_characteristic(), 2);
    assert_eq!(betti_numbers(&o, DEFAULT_SIZE_LIMIT).unwrap().ranks, vec![1, 0, 1]);
}

#[test]
fn product_with_interval_is_a_thickening() {
    let k = poincare();
    let p = product_with_interval(&k).unwrap();
    assert_eq!(p.num_faces(0), 32);
    assert_eq!(p.num_faces(4), 4 * 90);
    assert_eq!(p.euler_characteristic(), 0);
    assert!(p.contains_complex(&k));
    let empty = SimplicialComplex::empty();
    assert!(product_with_interval(&empty).is_err());
}
