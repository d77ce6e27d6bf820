use super::BraidWord;
use crate::diagram::{OrientedGraph, PDCode, Slot};

// Corner slots of a braid crossing, strands running downwards. For `sigma_i`
// the over-strand runs from top-right to bottom-left; for its inverse from
// top-left to bottom-right. Order: [top-left, top-right, bottom-left, bottom-right].
const POSITIVE_CORNERS: [u8; 4] = [0, 3, 1, 2];
const NEGATIVE_CORNERS: [u8; 4] = [1, 0, 2, 3];

#[derive(Clone, Copy)]
enum Dangling {
    Top(usize),
    Out(Slot),
}

impl BraidWord {
    /// Oriented PD code of the closure, strands oriented top to bottom and
    /// closed around the right. Letter `k` becomes crossing `k`, with the
    /// sign of the letter. Strands that never cross become free circles.
    pub fn closure_pd(&self) -> PDCode {
        let n = self.strands();
        let mut graph = OrientedGraph::new();
        let mut dangling: Vec<Dangling> = (0..n).map(Dangling::Top).collect();
        let mut first_target: Vec<Option<Slot>> = vec![None; n];
        for &g in self.letters() {
            let positive = g > 0;
            let corners = if positive { POSITIVE_CORNERS } else { NEGATIVE_CORNERS };
            let k = graph.add_crossing(positive);
            let left = g.unsigned_abs() as usize - 1;
            for (pos, corner) in [(left, corners[0]), (left + 1, corners[1])] {
                let to = Slot::new(k, corner);
                match dangling[pos] {
                    Dangling::Top(p) => first_target[p] = Some(to),
                    Dangling::Out(from) => graph.connect(from, to),
                }
            }
            dangling[left] = Dangling::Out(Slot::new(k, corners[2]));
            dangling[left + 1] = Dangling::Out(Slot::new(k, corners[3]));
        }
        for (pos, end) in dangling.into_iter().enumerate() {
            match end {
                Dangling::Top(_) => graph.free_circles += 1,
                Dangling::Out(from) => {
                    let to = first_target[pos].expect("a touched position has a first crossing");
                    graph.connect(from, to);
                }
            }
        }
        PDCode::from_graph(graph)
    }
}
