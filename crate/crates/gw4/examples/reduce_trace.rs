//! Reduces the connected-sum model P#Q(2,5) to an all-label-1 graph and
//! prints each detached block along the way.

use gw4::formulas::check_ah;
use gw4::gw1;
use gw4::models::{model, ModelName};
use gw4::surgery::reduce;

fn main() {
    let g = model(ModelName::PQ, 2, 5).unwrap();
    println!("input:\n{}", gw1::serialize(&g));

    let trace = reduce(&g).unwrap();
    for m in &trace.moves {
        println!("{}", m.to_line());
    }
    println!(
        "\nblocks detached: {} P, {} Q, {} P#Q",
        trace.tallies.p, trace.tallies.q, trace.tallies.pq
    );
    println!("final graph:\n{}", gw1::serialize(&trace.final_graph));

    // the constant is conserved: +1 per P block, -1 per Q block
    let before = check_ah(&g).unwrap().constant.unwrap();
    let after = check_ah(&trace.final_graph).unwrap().constant.unwrap();
    println!(
        "constant {before} = {after} + {} - {}",
        trace.tallies.p, trace.tallies.q
    );
}
