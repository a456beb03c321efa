//! Grows a random realizable graph by inverse splits, then shows that
//! realize finds its way back to a balanced base.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gw4::formulas::check_ah;
use gw4::gw1;
use gw4::random::random_realizable;
use gw4::realize::{realize, replay};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (g, moves) = random_realizable(&mut rng, 2, 8, 9);
    println!("grown by {} inverse splits:\n{}", moves.len(), gw1::serialize(&g));
    let report = check_ah(&g).unwrap();
    println!(
        "constant = {}, signature = {}",
        report.constant.as_ref().unwrap(),
        report.signature
    );
    assert!(report.holds());

    let cert = realize(&g).unwrap();
    println!(
        "certified: base of {} S(1,1) blocks, {} moves",
        cert.base,
        cert.moves.len()
    );
    assert_eq!(replay(&cert).unwrap(), g);
    println!("replay reconstructs the grown graph exactly");
}
