use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{FaceId, SimplicialComplex};
use crate::face::Vertex;

use super::{MorseEvent, MorseTrace, MorseVector, Strategy};

/// Set of small integers with O(1) insert, remove and uniform sampling.
#[derive(Debug, Default)]
struct IndexSet {
    items: Vec<u32>,
    pos: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

impl IndexSet {
    fn reset(&mut self, universe: usize) {
        self.items.clear();
        self.pos.clear();
        self.pos.resize(universe, ABSENT);
    }

    fn insert(&mut self, x: u32) {
        if self.pos[x as usize] == ABSENT {
            self.pos[x as usize] = self.items.len() as u32;
            self.items.push(x);
        }
    }

    fn remove(&mut self, x: u32) {
        let p = self.pos[x as usize];
        if p != ABSENT {
            let last = self.items.pop().expect("nonempty");
            if last != x {
                self.items[p as usize] = last;
                self.pos[last as usize] = p;
            }
            self.pos[x as usize] = ABSENT;
        }
    }

    fn sample(&self, rng: &mut impl Rng) -> Option<u32> {
        if self.items.is_empty() {
            None
        } else {
            Some(self.items[rng.random_range(0..self.items.len())])
        }
    }
}

/// Reusable per-worker buffers.
#[derive(Debug, Default)]
pub struct Scratch {
    cocount: Vec<u32>,
    alive: Vec<bool>,
    free: IndexSet,
    tops: IndexSet,
    heap_min: BinaryHeap<Reverse<u32>>,
    heap_max: BinaryHeap<u32>,
    rank_low: Vec<u32>,
    by_rank_low: Vec<u32>,
    rank_top: Vec<u32>,
    by_rank_top: Vec<u32>,
    keys: Vec<u128>,
}

/// Precomputed view of a complex for repeated runs.
#[derive(Debug)]
pub struct MorseEngine<'a> {
    k: &'a SimplicialComplex,
    offsets: Vec<usize>,
    /// Faces of each dimension as flat tuples of vertex positions.
    positions: Vec<Vec<u32>>,
    bits: u32,
}

impl<'a> MorseEngine<'a> {
    pub fn new(k: &'a SimplicialComplex) -> Self {
        let verts = k.vertices();
        let mut offsets = Vec::with_capacity(k.dim() + 2);
        let mut acc = 0;
        let mut positions = Vec::new();
        if !k.is_empty() {
            for j in 0..=k.dim() {
                offsets.push(acc);
                acc += k.num_faces(j);
                positions.push(
                    k.faces(j)
                        .flat_map(|f| f.iter().map(|v| verts.binary_search(v).expect("vertex of complex") as u32))
                        .collect(),
                );
            }
        }
        offsets.push(acc);
        let bits = 32 - (verts.len() as u32).leading_zeros();
        MorseEngine { k, offsets, positions, bits: bits.max(1) }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.k
    }

    fn gid(&self, dim: usize, index: u32) -> usize {
        self.offsets[dim] + index as usize
    }

    /// Ranks of the `dim`-faces in lexicographic order of their sorted
    /// relabeled vertex tuples: `rank[i]` is the rank of face `i`, `by_rank`
    /// its inverse.
    fn lex_ranks(&self, dim: usize, relabel: &[u32], keys: &mut Vec<u128>, rank: &mut Vec<u32>, by_rank: &mut Vec<u32>) {
        let n = self.k.num_faces(dim);
        let arity = dim + 1;
        let flat = &self.positions[dim];
        by_rank.clear();
        by_rank.extend(0..n as u32);
        let mut tuple: Vec<u32> = Vec::with_capacity(arity);
        if self.bits as usize * arity <= 128 {
            keys.clear();
            for f in flat.chunks_exact(arity) {
                tuple.clear();
                tuple.extend(f.iter().map(|&p| relabel[p as usize]));
                tuple.sort_unstable();
                keys.push(tuple.iter().fold(0u128, |acc, &x| acc << self.bits | x as u128));
            }
            by_rank.sort_unstable_by_key(|&i| keys[i as usize]);
        } else {
            let mut relabeled: Vec<u32> = Vec::with_capacity(flat.len());
            for f in flat.chunks_exact(arity) {
                let start = relabeled.len();
                relabeled.extend(f.iter().map(|&p| relabel[p as usize]));
                relabeled[start..].sort_unstable();
            }
            by_rank.sort_unstable_by(|&a, &b| {
                let (a, b) = (a as usize * arity, b as usize * arity);
                relabeled[a..a + arity].cmp(&relabeled[b..b + arity])
            });
        }
        rank.clear();
        rank.resize(n, 0);
        for (r, &i) in by_rank.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
    }

    /// Runs one deconstruction. Events are appended to `events` when given.
    /// Returns the Morse vector and, for lex strategies, the relabeling
    /// (new label of the vertex at each position of `vertices()`).
    pub fn run(
        &self,
        strategy: Strategy,
        seed: u64,
        scratch: &mut Scratch,
        mut events: Option<&mut Vec<MorseEvent>>,
    ) -> (MorseVector, Vec<Vertex>) {
        let k = self.k;
        let mut counts = vec![0u64; if k.is_empty() { 0 } else { k.dim() + 1 }];
        if k.is_empty() {
            return (MorseVector(counts), Vec::new());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let relabel: Vec<u32> = if strategy.is_lex() {
            let mut p: Vec<u32> = (1..=k.num_faces(0) as u32).collect();
            p.shuffle(&mut rng);
            p
        } else {
            Vec::new()
        };

        let total = *self.offsets.last().expect("offsets");
        let s = scratch;
        s.cocount.clear();
        s.alive.clear();
        s.alive.resize(total, true);
        for j in 0..=k.dim() {
            for i in 0..k.num_faces(j) {
                s.cocount.push(k.cofaces(FaceId::new(j, i)).len() as u32);
            }
        }

        for top in (0..=k.dim()).rev() {
            let n_top = k.num_faces(top);
            let low = top.checked_sub(1);
            match strategy {
                Strategy::Random => {
                    s.tops.reset(n_top);
                    for i in 0..n_top as u32 {
                        if s.alive[self.gid(top, i)] {
                            s.tops.insert(i);
                        }
                    }
                    s.free.reset(low.map_or(0, |l| k.num_faces(l)));
                    if let Some(l) = low {
                        for i in 0..k.num_faces(l) as u32 {
                            let g = self.gid(l, i);
                            if s.alive[g] && s.cocount[g] == 1 {
                                s.free.insert(i);
                            }
                        }
                    }
                }
                Strategy::RandomLexFirst | Strategy::RandomLexLast => {
                    self.lex_ranks(top, &relabel, &mut s.keys, &mut s.rank_top, &mut s.by_rank_top);
                    s.heap_min.clear();
                    s.heap_max.clear();
                    if let Some(l) = low {
                        self.lex_ranks(l, &relabel, &mut s.keys, &mut s.rank_low, &mut s.by_rank_low);
                        for i in 0..k.num_faces(l) as u32 {
                            let g = self.gid(l, i);
                            if s.alive[g] && s.cocount[g] == 1 {
                                let r = s.rank_low[i as usize];
                                s.heap_min.push(Reverse(r));
                                s.heap_max.push(r);
                            }
                        }
                    }
                }
            }
            // pointer into by_rank_top for critical picks
            let mut lo_ptr = 0usize;
            let mut hi_ptr = n_top;

            loop {
                // 1. look for a free (top-1)-face
                let free = match (strategy, low) {
                    (_, None) => None,
                    (Strategy::Random, Some(_)) => s.free.sample(&mut rng),
                    (Strategy::RandomLexFirst, Some(l)) => loop {
                        match s.heap_min.pop() {
                            None => break None,
                            Some(Reverse(r)) => {
                                let i = s.by_rank_low[r as usize];
                                let g = self.gid(l, i);
                                if s.alive[g] && s.cocount[g] == 1 {
                                    break Some(i);
                                }
                            }
                        }
                    },
                    (Strategy::RandomLexLast, Some(l)) => loop {
                        match s.heap_max.pop() {
                            None => break None,
                            Some(r) => {
                                let i = s.by_rank_low[r as usize];
                                let g = self.gid(l, i);
                                if s.alive[g] && s.cocount[g] == 1 {
                                    break Some(i);
                                }
                            }
                        }
                    },
                };
                if let (Some(sigma), Some(l)) = (free, low) {
                    let sid = FaceId::new(l, sigma as usize);
                    let tau = *k
                        .cofaces(sid)
                        .iter()
                        .find(|&&t| s.alive[self.gid(top, t)])
                        .expect("free face has a live coface");
                    self.remove_top(top, tau, s, strategy);
                    self.remove_low(l, sigma, s, strategy);
                    if let Some(ev) = events.as_deref_mut() {
                        ev.push(MorseEvent::Collapse { free: sid, coface: FaceId::new(top, tau as usize) });
                    }
                    continue;
                }
                // 2. otherwise a critical top face
                let crit = match strategy {
                    Strategy::Random => s.tops.sample(&mut rng),
                    Strategy::RandomLexFirst => {
                        while lo_ptr < n_top && !s.alive[self.gid(top, s.by_rank_top[lo_ptr])] {
                            lo_ptr += 1;
                        }
                        (lo_ptr < n_top).then(|| s.by_rank_top[lo_ptr])
                    }
                    Strategy::RandomLexLast => {
                        while hi_ptr > 0 && !s.alive[self.gid(top, s.by_rank_top[hi_ptr - 1])] {
                            hi_ptr -= 1;
                        }
                        (hi_ptr > 0).then(|| s.by_rank_top[hi_ptr - 1])
                    }
                };
                match crit {
                    Some(tau) => {
                        self.remove_top(top, tau, s, strategy);
                        counts[top] += 1;
                        if let Some(ev) = events.as_deref_mut() {
                            ev.push(MorseEvent::Critical(FaceId::new(top, tau as usize)));
                        }
                    }
                    None => break,
                }
            }
        }
        (MorseVector(counts), relabel)
    }

    /// Removes a top-level face and updates the free-face candidates below.
    fn remove_top(&self, top: usize, tau: u32, s: &mut Scratch, strategy: Strategy) {
        let g = self.gid(top, tau);
        debug_assert!(s.alive[g] && s.cocount[g] == 0);
        s.alive[g] = false;
        if strategy == Strategy::Random {
            s.tops.remove(tau);
        }
        if top == 0 {
            return;
        }
        let l = top - 1;
        for &b in self.k.boundary(FaceId::new(top, tau as usize)) {
            let gb = self.gid(l, b);
            s.cocount[gb] -= 1;
            if !s.alive[gb] {
                continue;
            }
            match (strategy, s.cocount[gb]) {
                (Strategy::Random, 1) => s.free.insert(b),
                (Strategy::Random, 0) => s.free.remove(b),
                (Strategy::RandomLexFirst, 1) => s.heap_min.push(Reverse(s.rank_low[b as usize])),
                (Strategy::RandomLexLast, 1) => s.heap_max.push(s.rank_low[b as usize]),
                _ => {}
            }
        }
    }

    /// Removes the free face of a collapse pair.
    fn remove_low(&self, l: usize, sigma: u32, s: &mut Scratch, strategy: Strategy) {
        let g = self.gid(l, sigma);
        debug_assert!(s.alive[g] && s.cocount[g] == 0);
        s.alive[g] = false;
        if strategy == Strategy::Random {
            s.free.remove(sigma);
        }
        if l > 0 {
            for &b in self.k.boundary(FaceId::new(l, sigma as usize)) {
                s.cocount[self.gid(l - 1, b)] -= 1;
            }
        }
    }

    /// One run with a full trace.
    pub fn trace(&self, strategy: Strategy, seed: u64, scratch: &mut Scratch) -> (MorseTrace, MorseVector) {
        let mut events = Vec::with_capacity(self.offsets.last().copied().unwrap_or(0));
        let (vector, relabeling) = self.run(strategy, seed, scratch, Some(&mut events));
        (MorseTrace { events, seed, strategy, relabeling }, vector)
    }

    /// One run returning only the Morse vector.
    pub fn vector(&self, strategy: Strategy, seed: u64, scratch: &mut Scratch) -> MorseVector {
        self.run(strategy, seed, scratch, None).0
    }
}

/// Runs one level-wise deconstruction of `k` and returns its trace and
/// Morse vector. Deterministic in `(strategy, seed)`.
pub fn run_strategy(k: &SimplicialComplex, strategy: Strategy, seed: u64) -> (MorseTrace, MorseVector) {
    MorseEngine::new(k).trace(strategy, seed, &mut Scratch::default())
}
