//! Trades every weight-{1,1} fixed point for a fixed surface. The
//! resulting surfaces-only graph always has Euler numbers summing to 0.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gw4::gw1;
use gw4::random::random_balanced_base;
use gw4::surgery::to_surfaces_only;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let g = random_balanced_base(&mut rng, 3);
    println!("points-only input:\n{}", gw1::serialize(&g));

    let (converted, tallies) = to_surfaces_only(&g).unwrap();
    println!("surfaces-only output:\n{}", gw1::serialize(&converted));
    println!(
        "blocks consumed: {} P(1,0), {} Q(1,0)",
        tallies.p10, tallies.q10
    );

    let total: i64 = converted.surfaces().map(|(_, n)| n).sum();
    println!("sum of Euler numbers = {total}");
    assert_eq!(total, 0);
}
