//! Emits Graphviz DOT for a model graph; pipe into `dot -Tsvg` to render.

use gw4::dot::export_dot;
use gw4::models::{model, ModelName};

fn main() {
    let g = model(ModelName::PQ, 2, 5).unwrap();
    print!("{}", export_dot(&g));
}
