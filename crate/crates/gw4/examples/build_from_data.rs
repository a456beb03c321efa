//! Assembles a graph of weights from raw fixed-point data: signed points
//! with weight pairs, fixed surfaces with Euler numbers, and the invariant
//! spheres joining weights above 1.

use gw4::euler::{edge_euler, is_admissible};
use gw4::graph::Sign;
use gw4::gw1;
use gw4::surgery::build_graph;

fn main() {
    // a sphere rotation S(2,3) plus a rotation of CP^2 as one disjoint datum
    let points = [
        (Sign::Plus, (2, 3)),
        (Sign::Minus, (2, 3)),
        (Sign::Plus, (1, 1)),
    ];
    let surfaces = [1i64];
    let spheres = [(0usize, 1usize, 2u64), (0, 1, 3)];

    let g = build_graph(&points, &surfaces, &spheres).unwrap();
    println!("{}", gw1::serialize(&g));
    assert!(g.is_valid());
    assert!(is_admissible(&g).is_admissible());
    for (id, _) in g.edges() {
        println!("edge {id}: n_e = {}", edge_euler(&g, id).unwrap());
    }

    // data that no graph covers: a weight-2 sphere with nowhere to land
    let err = build_graph(&[(Sign::Plus, (2, 3)), (Sign::Minus, (2, 5))], &[], &[(0, 1, 2), (0, 1, 3)])
        .unwrap_err();
    println!("inconsistent data rejected: {err}");
}
