//! Exact Laurent windows of the fixed-point sum: the residues at z = 1
//! vanish and the constant term is the L-genus.

use gw4::exact::{expand, Center};
use gw4::formulas::{ah_sum, l_genus, point_term};
use gw4::models::{model_fixed_surface, FixedSurfaceModel};

fn main() {
    // a single point with weights {2,3}: the t-expansion at z = 1 starts
    // 4/(ab) t^-2 + 4/(ab) t^-1 + (a^2+b^2+1)/(3ab) + ...
    let term = point_term(2, 3);
    let w = expand(&term, Center::One, -2, 4);
    print!("point term (2,3) at z=1:");
    for (i, c) in w.coeffs.iter().enumerate() {
        print!(" t^{}: {c}", w.min_order + i as i64);
    }
    println!();

    // the full sum of a closed manifold has no pole at z = 1
    let g = model_fixed_surface(FixedSurfaceModel::P10);
    let f = ah_sum(&g).unwrap();
    let w = expand(&f, Center::One, -2, 3);
    println!(
        "P(1,0) sum at z=1: t^-2: {}, t^-1: {}, t^0: {}",
        w.coeffs[0], w.coeffs[1], w.coeffs[2]
    );
    assert_eq!(w.coeffs[2], l_genus(&g).unwrap());
    println!("constant term equals the L-genus {}", w.coeffs[2]);

    // the window at z = 0 of a constant function is the constant alone
    let w0 = expand(&f, Center::Zero, 0, 5);
    let rendered: Vec<String> = w0.coeffs.iter().map(|c| c.to_string()).collect();
    println!("P(1,0) sum at z=0: {}", rendered.join(" "));
}
