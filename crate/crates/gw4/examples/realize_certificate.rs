//! Decides realizability of a points-only graph: a certificate for a
//! realizable one and a witness for each kind of rejection.

use gw4::graph::{GraphOfWeights, Sign};
use gw4::models::{model, ModelName};
use gw4::realize::{realize, replay};

fn main() {
    let g = model(ModelName::S, 4, 7).unwrap();
    let cert = realize(&g).unwrap();
    println!("S(4,7) certificate:\n{}", cert.serialize());
    let rebuilt = replay(&cert).unwrap();
    assert_eq!(rebuilt, g);
    println!("replay reconstructs the input exactly\n");

    // a graph the gate rejects: two + points, no way to balance the sum
    let mut bad = GraphOfWeights::new();
    bad.add_point("p1", Sign::Plus).unwrap();
    bad.add_point("p2", Sign::Plus).unwrap();
    bad.add_edge("e1", "p1", "p2", 1).unwrap();
    bad.add_edge("e2", "p1", "p2", 1).unwrap();
    match realize(&bad) {
        Err(r) => println!("double-plus graph rejected: {r}"),
        Ok(_) => unreachable!(),
    }

    // a non-admissible graph: the label-3 edge gets n_e = -1/3
    let mut frac = GraphOfWeights::new();
    frac.add_point("p1", Sign::Plus).unwrap();
    frac.add_point("p2", Sign::Minus).unwrap();
    frac.add_point("q1", Sign::Minus).unwrap();
    frac.add_point("q2", Sign::Plus).unwrap();
    frac.add_edge("e3", "p1", "p2", 3).unwrap();
    frac.add_edge("e1", "p1", "q1", 1).unwrap();
    frac.add_edge("e2", "p2", "q2", 2).unwrap();
    frac.add_edge("e4", "q1", "q2", 5).unwrap();
    match realize(&frac) {
        Err(r) => println!("fractional graph rejected: {r}"),
        Ok(_) => unreachable!(),
    }
}
