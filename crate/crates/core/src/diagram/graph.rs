//! Oriented 4-valent diagram graph underlying a PD code.
//!
//! Each crossing has four slots in counterclockwise order, slot 0 being the
//! incoming under-strand and slot 2 the outgoing under-strand. A positive
//! crossing has its over-strand entering at slot 3 and leaving at slot 1; a
//! negative one enters at 1 and leaves at 3. Every outgoing slot is joined by
//! a diagram edge to exactly one incoming slot.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Slot {
    pub crossing: usize,
    pub pos: u8,
}

impl Slot {
    pub fn new(crossing: usize, pos: u8) -> Self {
        Self { crossing, pos }
    }
}

pub(crate) const UNDER_IN: u8 = 0;
pub(crate) const UNDER_OUT: u8 = 2;

pub(crate) fn over_in(positive: bool) -> u8 {
    if positive {
        3
    } else {
        1
    }
}

pub(crate) fn over_out(positive: bool) -> u8 {
    if positive {
        1
    } else {
        3
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrientedGraph {
    pub positive: Vec<bool>,
    /// `next[k][pos]` is the incoming slot reached from outgoing slot `(k, pos)`.
    pub next: Vec<[Option<Slot>; 4]>,
    pub free_circles: usize,
}

impl OrientedGraph {
    pub fn new() -> Self {
        Self {
            positive: Vec::new(),
            next: Vec::new(),
            free_circles: 0,
        }
    }

    pub fn add_crossing(&mut self, positive: bool) -> usize {
        self.positive.push(positive);
        self.next.push([None; 4]);
        self.positive.len() - 1
    }

    pub fn connect(&mut self, from: Slot, to: Slot) {
        debug_assert!(self.is_out(from) && !self.is_out(to));
        self.next[from.crossing][from.pos as usize] = Some(to);
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_out(&self, s: Slot) -> bool {
        s.pos == UNDER_OUT || s.pos == over_out(self.positive[s.crossing])
    }

    /// The outgoing slot on the same strand as incoming slot `s`.
    pub fn through(&self, s: Slot) -> Slot {
        let pos = if s.pos == UNDER_IN {
            UNDER_OUT
        } else {
            over_out(self.positive[s.crossing])
        };
        Slot::new(s.crossing, pos)
    }

    pub fn in_slots(&self, k: usize) -> [Slot; 2] {
        [Slot::new(k, UNDER_IN), Slot::new(k, over_in(self.positive[k]))]
    }

    pub fn out_slots(&self, k: usize) -> [Slot; 2] {
        [Slot::new(k, UNDER_OUT), Slot::new(k, over_out(self.positive[k]))]
    }

    pub fn target(&self, out: Slot) -> Slot {
        self.next[out.crossing][out.pos as usize].expect("diagram edge left dangling")
    }

    /// Edge ids for every slot. Components are numbered consecutively along
    /// their orientation from 1, each starting at the edge entering its first
    /// pass in crossing order (under-pass before over-pass at a crossing).
    pub fn number_edges(&self) -> Vec<[usize; 4]> {
        let mut prev = vec![[Slot::new(usize::MAX, 0); 4]; self.len()];
        for k in 0..self.len() {
            for out in self.out_slots(k) {
                let t = self.target(out);
                prev[t.crossing][t.pos as usize] = out;
            }
        }
        let mut ids = vec![[0usize; 4]; self.len()];
        let mut next_id = 1;
        for k in 0..self.len() {
            for start in self.in_slots(k) {
                if ids[k][start.pos as usize] != 0 {
                    continue;
                }
                let mut cur = start;
                loop {
                    let from = prev[cur.crossing][cur.pos as usize];
                    ids[cur.crossing][cur.pos as usize] = next_id;
                    ids[from.crossing][from.pos as usize] = next_id;
                    next_id += 1;
                    cur = self.target(self.through(cur));
                    if cur == start {
                        break;
                    }
                }
            }
        }
        ids
    }

    /// Number of closed components that pass through at least one crossing.
    pub fn crossing_components(&self) -> usize {
        let mut seen = vec![[false; 4]; self.len()];
        let mut count = 0;
        for k in 0..self.len() {
            for start in self.in_slots(k) {
                if seen[k][start.pos as usize] {
                    continue;
                }
                count += 1;
                let mut cur = start;
                loop {
                    seen[cur.crossing][cur.pos as usize] = true;
                    cur = self.target(self.through(cur));
                    if cur == start {
                        break;
                    }
                }
            }
        }
        count
    }

    fn relabel(&mut self, map: impl Fn(Slot) -> Slot) {
        let mut next = vec![[None; 4]; self.len()];
        for (k, row) in self.next.iter().enumerate() {
            for (p, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let from = map(Slot::new(k, p as u8));
                    next[from.crossing][from.pos as usize] = Some(map(*t));
                }
            }
        }
        self.next = next;
    }

    /// Exchanges over and under at crossing `k`, flipping its sign.
    pub fn switch(&mut self, k: usize) {
        let r = over_in(self.positive[k]);
        self.relabel(|s| {
            if s.crossing == k {
                Slot::new(k, (s.pos + 4 - r) % 4)
            } else {
                s
            }
        });
        self.positive[k] = !self.positive[k];
    }

    /// Reverses the orientation of every component. Crossing signs are unchanged.
    pub fn reverse(&mut self) {
        let mut next = vec![[None; 4]; self.len()];
        let rot = |s: Slot| Slot::new(s.crossing, (s.pos + 2) % 4);
        for (k, row) in self.next.iter().enumerate() {
            for (p, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let old_from = Slot::new(k, p as u8);
                    let new_from = rot(*t);
                    let new_to = rot(old_from);
                    next[new_from.crossing][new_from.pos as usize] = Some(new_to);
                }
            }
        }
        self.next = next;
    }

    /// Replaces crossing `k` by its orientation-respecting smoothing. Closed
    /// curves left without crossings become free circles.
    pub fn smooth_oriented(&mut self, k: usize) {
        let positive = self.positive[k];
        let joined = |s: Slot| {
            // incoming under joins outgoing over, incoming over joins outgoing under
            if s.pos == UNDER_IN {
                Slot::new(k, over_out(positive))
            } else {
                Slot::new(k, UNDER_OUT)
            }
        };
        let mut consumed = [false; 4];
        let mut next = self.next.clone();
        for (c, row) in next.iter_mut().enumerate() {
            if c == k {
                continue;
            }
            for out in self.out_slots(c) {
                let mut t = self.target(out);
                while t.crossing == k {
                    let o = joined(t);
                    consumed[o.pos as usize] = true;
                    t = self.target(o);
                }
                row[out.pos as usize] = Some(t);
            }
        }
        // arcs that only ever pass through crossing k close up on their own
        for o in self.out_slots(k) {
            if consumed[o.pos as usize] {
                continue;
            }
            self.free_circles += 1;
            let mut cur = o;
            loop {
                consumed[cur.pos as usize] = true;
                let nxt = joined(self.target(cur));
                if consumed[nxt.pos as usize] {
                    break;
                }
                cur = nxt;
            }
        }
        next.remove(k);
        self.positive.remove(k);
        let shift = |s: Slot| {
            if s.crossing > k {
                Slot::new(s.crossing - 1, s.pos)
            } else {
                s
            }
        };
        self.next = next
            .into_iter()
            .map(|row| row.map(|t| t.map(shift)))
            .collect();
    }
}
