use std::collections::BTreeMap;
use std::fmt;

use super::graph::{over_in, OrientedGraph, Slot, UNDER_IN, UNDER_OUT};
use super::{DiagramError, Sign};

/// An oriented link diagram in planar-diagram notation.
///
/// Each crossing lists four edge ids counterclockwise starting from the
/// incoming under-strand. Edge ids run consecutively along each oriented
/// component (the largest id of a component is followed by its smallest).
/// Zero-crossing components are carried separately in `free_circles`.
///
/// When a two-edge component never passes under, its ids cannot tell the
/// two directions apart; such a component is read as entering its first
/// crossing (in list order) along its smaller id. Codes produced by this
/// crate always follow that rule.
#[derive(Clone)]
pub struct PDCode {
    crossings: Vec<[usize; 4]>,
    free_circles: usize,
    graph: OrientedGraph,
}

impl PartialEq for PDCode {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.free_circles == other.free_circles
    }
}

impl Eq for PDCode {}

impl fmt::Debug for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PDCode")
            .field("crossings", &self.crossings)
            .field("free_circles", &self.free_circles)
            .finish()
    }
}

impl PDCode {
    /// Validates a PD code and derives its orientation.
    pub fn new(crossings: Vec<[usize; 4]>, free_circles: usize) -> Result<Self, DiagramError> {
        let graph = orient(&crossings, free_circles)?;
        Ok(Self { crossings, free_circles, graph })
    }

    /// The `m`-component unlink drawn without crossings.
    pub fn unlink(m: usize) -> Result<Self, DiagramError> {
        Self::new(Vec::new(), m)
    }

    pub(crate) fn from_graph(graph: OrientedGraph) -> Self {
        let crossings = graph.number_edges();
        Self {
            crossings,
            free_circles: graph.free_circles,
            graph,
        }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Number of link components, including free circles.
    pub fn components(&self) -> usize {
        self.graph.crossing_components() + self.free_circles
    }

    fn check_index(&self, k: usize) -> Result<(), DiagramError> {
        if k >= self.crossings.len() {
            return Err(DiagramError::CrossingIndex {
                index: k,
                crossings: self.crossings.len(),
            });
        }
        Ok(())
    }

    /// Sign of crossing `k`: positive iff the over-strand runs from the
    /// fourth listed edge to the second.
    pub fn crossing_sign(&self, k: usize) -> Result<Sign, DiagramError> {
        self.check_index(k)?;
        Ok(Sign::from_positive(self.graph.positive[k]))
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.graph.positive.iter().map(|&p| Sign::from_positive(p))
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs().map(Sign::value).sum()
    }

    /// The same diagram with `m` extra separate unknotted components.
    pub fn with_extra_circles(&self, m: usize) -> Self {
        let mut out = self.clone();
        out.free_circles += m;
        out.graph.free_circles += m;
        out
    }

    /// Mirror image: over and under exchanged at every crossing.
    pub fn mirror(&self) -> Self {
        let mut g = self.graph.clone();
        for k in 0..g.len() {
            g.switch(k);
        }
        Self::from_graph(g)
    }

    /// Every component with its orientation reversed.
    pub fn reverse(&self) -> Self {
        let mut g = self.graph.clone();
        g.reverse();
        Self::from_graph(g)
    }

    /// Exchanges over and under at crossing `k`.
    pub fn switch_crossing(&self, k: usize) -> Result<Self, DiagramError> {
        self.check_index(k)?;
        let mut g = self.graph.clone();
        g.switch(k);
        Ok(Self::from_graph(g))
    }

    /// Replaces crossing `k` by its orientation-respecting smoothing.
    pub fn smooth_crossing(&self, k: usize) -> Result<Self, DiagramError> {
        self.check_index(k)?;
        let mut g = self.graph.clone();
        g.smooth_oriented(k);
        Ok(Self::from_graph(g))
    }

    /// `(L+, L-, L0)` at crossing `k`: the diagram with crossing `k` made
    /// positive, made negative, and smoothed along the orientation.
    pub fn skein_triple(&self, k: usize) -> Result<(Self, Self, Self), DiagramError> {
        self.check_index(k)?;
        let switched = self.switch_crossing(k)?;
        let (plus, minus) = if self.graph.positive[k] {
            (self.clone(), switched)
        } else {
            (switched, self.clone())
        };
        Ok((plus, minus, self.smooth_crossing(k)?))
    }

    /// Edge ids remapped onto `0..edges`, for union-find.
    pub(crate) fn compact_crossings(&self) -> (Vec<[u32; 4]>, usize) {
        let mut index = BTreeMap::new();
        for c in &self.crossings {
            for &id in c {
                let next = index.len() as u32;
                index.entry(id).or_insert(next);
            }
        }
        let compact = self
            .crossings
            .iter()
            .map(|c| c.map(|id| index[&id]))
            .collect();
        (compact, index.len())
    }
}

fn malformed(msg: impl Into<String>) -> DiagramError {
    DiagramError::MalformedSuccession(msg.into())
}

// Derives the oriented graph from raw PD tuples.
fn orient(crossings: &[[usize; 4]], free_circles: usize) -> Result<OrientedGraph, DiagramError> {
    let mut occurrences: BTreeMap<usize, Vec<Slot>> = BTreeMap::new();
    for (k, c) in crossings.iter().enumerate() {
        for (p, &id) in c.iter().enumerate() {
            occurrences.entry(id).or_default().push(Slot::new(k, p as u8));
        }
    }
    for (&arc, slots) in &occurrences {
        if slots.len() != 2 {
            return Err(DiagramError::ArcMultiplicity { arc, count: slots.len() });
        }
    }
    if crossings.is_empty() && free_circles == 0 {
        return Err(DiagramError::NoComponents);
    }
    let id_at = |s: Slot| crossings[s.crossing][s.pos as usize];
    let opposite = |s: Slot| Slot::new(s.crossing, (s.pos + 2) % 4);

    // incoming slot of every pass, indexed by (crossing, pass) with pass 0 =
    // under (slots 0/2) and pass 1 = over (slots 1/3)
    let mut incoming: Vec<[Option<u8>; 2]> = vec![[None; 2]; crossings.len()];
    let mut visited: BTreeMap<usize, bool> = occurrences.keys().map(|&id| (id, false)).collect();

    for &seed in occurrences.keys() {
        if visited[&seed] {
            continue;
        }
        // collect the component containing `seed` through strand passes
        let mut ids = vec![seed];
        let mut passes: Vec<(usize, usize)> = Vec::new();
        visited.insert(seed, true);
        let mut stack = vec![seed];
        while let Some(id) = stack.pop() {
            for &s in &occurrences[&id] {
                let pass = (s.crossing, (s.pos % 2) as usize);
                if !passes.contains(&pass) {
                    passes.push(pass);
                }
                let other = id_at(opposite(s));
                if !visited[&other] {
                    visited.insert(other, true);
                    ids.push(other);
                    stack.push(other);
                }
            }
        }
        ids.sort_unstable();
        passes.sort_unstable();
        let (lo, hi) = (ids[0], *ids.last().unwrap());
        if hi - lo + 1 != ids.len() {
            return Err(malformed(format!(
                "edges {ids:?} of one component are not consecutive"
            )));
        }
        let m = ids.len();
        if m == 1 {
            return Err(malformed(format!("edge {lo} closes on itself through one crossing")));
        }
        let succ = |x: usize| if x == hi { lo } else { x + 1 };

        if m >= 3 {
            for &(k, pass) in &passes {
                let (s1, s2) = (pass as u8, pass as u8 + 2);
                let (x, y) = (crossings[k][s1 as usize], crossings[k][s2 as usize]);
                let inc = if succ(x) == y {
                    s1
                } else if succ(y) == x {
                    s2
                } else {
                    return Err(malformed(format!(
                        "edges {x} and {y} meet at crossing {k} but are not consecutive"
                    )));
                };
                incoming[k][pass] = Some(inc);
            }
        } else {
            // two passes; each edge enters exactly one of them
            let mut entering: Option<(usize, usize)> = None;
            for &(k, pass) in &passes {
                if pass == 0 {
                    let x = crossings[k][UNDER_IN as usize];
                    if let Some((_, y)) = entering {
                        if x == y {
                            return Err(malformed(format!("edge {x} enters two crossings")));
                        }
                    }
                    entering = Some((k, x));
                }
            }
            let first_in = match entering {
                Some((k, x)) => (k, 0usize, x),
                None => (passes[0].0, passes[0].1, lo),
            };
            for &(k, pass) in &passes {
                let wanted = if (k, pass) == (first_in.0, first_in.1) {
                    first_in.2
                } else if first_in.2 == lo {
                    hi
                } else {
                    lo
                };
                let s1 = pass as u8;
                let inc = if crossings[k][s1 as usize] == wanted { s1 } else { s1 + 2 };
                incoming[k][pass] = Some(inc);
            }
        }
    }

    let mut graph = OrientedGraph::new();
    graph.free_circles = free_circles;
    for (k, inc) in incoming.iter().enumerate() {
        if inc[0] != Some(UNDER_IN) {
            return Err(malformed(format!(
                "under-strand at crossing {k} does not run from the first edge to the third"
            )));
        }
        let positive = inc[1] == Some(3);
        graph.add_crossing(positive);
    }
    // each edge: starts at one outgoing slot, ends at one incoming slot
    let mut start: BTreeMap<usize, Slot> = BTreeMap::new();
    let mut end: BTreeMap<usize, Slot> = BTreeMap::new();
    for k in 0..crossings.len() {
        for in_slot in [Slot::new(k, UNDER_IN), Slot::new(k, over_in(graph.positive[k]))] {
            let out_slot = opposite(in_slot);
            debug_assert!(out_slot.pos == UNDER_OUT || graph.is_out(out_slot));
            if end.insert(id_at(in_slot), in_slot).is_some() {
                return Err(malformed(format!("edge {} enters two crossings", id_at(in_slot))));
            }
            if start.insert(id_at(out_slot), out_slot).is_some() {
                return Err(malformed(format!("edge {} leaves two crossings", id_at(out_slot))));
            }
        }
    }
    for (id, from) in start {
        let to = end[&id];
        graph.connect(from, to);
    }
    Ok(graph)
}
