//! Verifies the signature identity on the whole model family: the
//! constant of the fixed-point sum equals the signature for every model
//! graph with coprime parameters up to 12.

use num_integer::Integer;

use gw4::formulas::check_ah;
use gw4::models::{model, model_fixed_surface, FixedSurfaceModel, ModelName};

fn main() {
    for f in [
        FixedSurfaceModel::P10,
        FixedSurfaceModel::Q10,
        FixedSurfaceModel::S10,
    ] {
        let g = model_fixed_surface(f);
        let report = check_ah(&g).unwrap();
        println!(
            "{f:?}: constant = {}, signature = {}",
            report.constant.as_ref().unwrap(),
            report.signature
        );
        assert!(report.holds());
    }
    for a in 1..=12u64 {
        for b in (a + 1)..=12 {
            if a.gcd(&b) != 1 {
                continue;
            }
            for name in [ModelName::S, ModelName::P, ModelName::Q, ModelName::PQ] {
                let g = model(name, a, b).unwrap();
                let report = check_ah(&g).unwrap();
                assert!(report.holds(), "{name:?}({a},{b})");
                println!(
                    "{name:?}({a},{b}): constant = {} = signature",
                    report.constant.unwrap()
                );
            }
        }
    }
    println!("signature identity holds on every model graph");
}
