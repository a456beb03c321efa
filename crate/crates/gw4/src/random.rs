//! Random generation of realizable graphs: balanced all-label-1 bases and
//! random inverse splits. Every graph produced here passes the
//! realizability gate by construction, which makes the generators useful
//! as a test oracle for `realize`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{EdgeId, GraphOfWeights, Sign, VertexId};
use crate::surgery::{unsplit_step, MoveKind, MoveRecord};

fn fresh_vertex_id(g: &GraphOfWeights) -> VertexId {
    (1..)
        .map(|i| format!("v{i}"))
        .find(|id| g.vertex(id).is_none())
        .unwrap()
}

fn fresh_edge_id(g: &GraphOfWeights) -> EdgeId {
    (1..)
        .map(|i| format!("g{i}"))
        .find(|id| g.edge(id).is_none())
        .unwrap()
}

/// A random 2-regular bipartite matching on k positive and k negative
/// points, all labels 1. Bipartiteness rules out self-loops, so the
/// result is always valid, admissible, and has constant signature sum 0.
pub fn random_balanced_base<R: Rng + ?Sized>(rng: &mut R, k: usize) -> GraphOfWeights {
    let mut g = GraphOfWeights::new();
    let mut left = Vec::with_capacity(2 * k);
    let mut right = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let p = format!("a{i}");
        let q = format!("b{i}");
        g.add_point(p.clone(), Sign::Plus).unwrap();
        g.add_point(q.clone(), Sign::Minus).unwrap();
        left.push(p.clone());
        left.push(p);
        right.push(q.clone());
        right.push(q);
    }
    right.shuffle(rng);
    for (i, (l, r)) in left.into_iter().zip(right).enumerate() {
        g.add_edge(format!("e{}", i + 1), l, r, 1).unwrap();
    }
    g
}

enum Candidate {
    /// Undo a contraction at `at`: split it into two points joined by a
    /// new edge of label a + b, rehoming the `moved` edge (label b).
    Contract {
        at: VertexId,
        moved: EdgeId,
        a: u64,
        b: u64,
        sign: Sign,
    },
    /// Undo a relabeling: raise `edge` from l - w to l.
    Relabel { edge: EdgeId, w: u64, l: u64 },
}

fn candidates(g: &GraphOfWeights, max_label: u64) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (id, sign) in g.points() {
        let inc = g.incident_endpoints(id);
        if inc.len() != 2 {
            continue;
        }
        // either incident edge may play the moved role
        for (keep, moved) in [(inc[0], inc[1]), (inc[1], inc[0])] {
            let a = g.edge(keep).unwrap().label;
            let b = g.edge(moved).unwrap().label;
            if a + b <= max_label {
                out.push(Candidate::Contract {
                    at: id.clone(),
                    moved: moved.clone(),
                    a,
                    b,
                    sign,
                });
            }
        }
    }
    for (id, e) in g.edges() {
        if e.is_self_loop() {
            continue;
        }
        let (u, v) = (&e.ends.0, &e.ends.1);
        let (su, sv) = match (g.point_sign(u), g.point_sign(v)) {
            (Some(su), Some(sv)) => (su, sv),
            _ => continue,
        };
        if su == sv {
            continue;
        }
        let wu = crate::euler::other_weight(g, id, u).unwrap();
        let wv = crate::euler::other_weight(g, id, v).unwrap();
        if wu == wv && e.label + wu <= max_label {
            out.push(Candidate::Relabel {
                edge: id.clone(),
                w: wu,
                l: e.label + wu,
            });
        }
    }
    out
}

/// One random inverse split with resulting labels bounded by max_label.
/// Returns the grown graph and the forward-replayable move, or None if no
/// inverse split fits under the bound.
pub fn random_unsplit<R: Rng + ?Sized>(
    rng: &mut R,
    g: &GraphOfWeights,
    max_label: u64,
) -> Option<(GraphOfWeights, MoveRecord)> {
    let cands = candidates(g, max_label);
    if cands.is_empty() {
        return None;
    }
    let pick = &cands[rng.gen_range(0..cands.len())];
    let record = match pick {
        Candidate::Contract {
            at,
            moved,
            a,
            b,
            sign,
        } => MoveRecord {
            kind: if *sign == Sign::Plus {
                MoveKind::ContractP
            } else {
                MoveKind::ContractQ
            },
            edge: fresh_edge_id(g),
            params: (*a, *b),
            block: format!(
                "{}({},{})",
                if *sign == Sign::Plus { "P" } else { "Q" },
                (*a).min(*b),
                a + b
            ),
            at: Some(at.clone()),
            from: Some(fresh_vertex_id(g)),
            moved: Some(moved.clone()),
        },
        Candidate::Relabel { edge, w, l } => MoveRecord {
            kind: MoveKind::RelabelPQ,
            edge: edge.clone(),
            params: (*w, *l),
            block: format!("P#Q({},{})", l - w, l),
            at: None,
            from: None,
            moved: None,
        },
    };
    let grown = unsplit_step(g, &record).expect("candidate moves always apply");
    Some((grown, record))
}

/// A random realizable points-only graph: a balanced base grown by up to
/// `steps` inverse splits. Also returns the moves in the order applied.
pub fn random_realizable<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    steps: usize,
    max_label: u64,
) -> (GraphOfWeights, Vec<MoveRecord>) {
    let mut g = random_balanced_base(rng, k);
    let mut moves = Vec::new();
    for _ in 0..steps {
        match random_unsplit(rng, &g, max_label) {
            Some((g2, m)) => {
                g = g2;
                moves.push(m);
            }
            None => break,
        }
    }
    (g, moves)
}
