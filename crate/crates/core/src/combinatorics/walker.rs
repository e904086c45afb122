//! The random-turn vicious walker and its bijection with standard tableaux.
//!
//! Particles start at sites `1, 2, …, p`. Particle `k` has moved `c_k`
//! times and sits at `k − c_k`; it is left-movable iff its left site is
//! vacant, i.e. `k = 1` or `c_{k−1} > c_k`. Recording the times at which
//! particle `k` moved in row `k` gives a standard Young tableau with at most
//! `p` rows, and every such tableau arises from exactly one history.

use rand::{Rng, RngExt};

use crate::error::{Error, Result};

use super::tableau::Tableau;

/// A sequence of left moves; `moves[t]` is the (1-based) particle moved at
/// time `t + 1`. `p = None` stands for infinitely many particles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkHistory {
    moves: Vec<usize>,
    p: Option<usize>,
}

impl WalkHistory {
    /// Validates that every move is legal.
    pub fn new(moves: Vec<usize>, p: Option<usize>) -> Result<Self> {
        let mut counts = Vec::new();
        for (t, &k) in moves.iter().enumerate() {
            if k == 0 || p.is_some_and(|p| k > p) {
                return Err(Error::Invariant(format!("move {} names particle {k} outside 1..={p:?}", t + 1)));
            }
            if !left_movable(&counts, k) {
                return Err(Error::Invariant(format!("particle {k} is blocked at time {}", t + 1)));
            }
            bump(&mut counts, k);
        }
        Ok(WalkHistory { moves, p })
    }

    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    pub fn particles(&self) -> Option<usize> {
        self.p
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Number of moves made by each particle that moved at least once, from
    /// the left.
    pub fn move_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &k in &self.moves {
            bump(&mut counts, k);
        }
        counts
    }

    /// Number of moves of the leftmost particle.
    pub fn first_particle_moves(&self) -> usize {
        self.moves.iter().filter(|&&k| k == 1).count()
    }

    /// All legal histories of `n` steps, in lexicographic order of `moves`.
    pub fn all(n: usize, p: Option<usize>) -> Vec<WalkHistory> {
        fn rec(n: usize, p: Option<usize>, counts: &mut Vec<usize>, moves: &mut Vec<usize>, out: &mut Vec<WalkHistory>) {
            if moves.len() == n {
                out.push(WalkHistory { moves: moves.clone(), p });
                return;
            }
            for k in movable(counts, p) {
                bump(counts, k);
                moves.push(k);
                rec(n, p, counts, moves, out);
                moves.pop();
                counts[k - 1] -= 1;
                if counts.last() == Some(&0) {
                    counts.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, p, &mut Vec::new(), &mut Vec::new(), &mut out);
        out
    }
}

/// `counts` only lists particles up to the last one that has moved; the
/// rest have count 0.
fn left_movable(counts: &[usize], k: usize) -> bool {
    let c = |i: usize| counts.get(i - 1).copied().unwrap_or(0);
    k == 1 || c(k - 1) > c(k)
}

fn bump(counts: &mut Vec<usize>, k: usize) {
    if counts.len() < k {
        counts.resize(k, 0);
    }
    counts[k - 1] += 1;
}

/// Currently left-movable particles. Beyond the last particle that has
/// moved only the next one can be movable, so the list is finite even when
/// `p` is unbounded.
fn movable(counts: &[usize], p: Option<usize>) -> Vec<usize> {
    let limit = p.map_or(counts.len() + 1, |p| p.min(counts.len() + 1));
    (1..=limit).filter(|&k| left_movable(counts, k)).collect()
}

/// Runs `n_steps` of the random-turn dynamics, moving at each step a
/// uniformly chosen left-movable particle.
pub fn simulate_random_turn<R: Rng + ?Sized>(n_steps: usize, p: Option<usize>, rng: &mut R) -> Result<WalkHistory> {
    if p == Some(0) && n_steps > 0 {
        return Err(Error::param("no particles to move"));
    }
    let mut counts = Vec::new();
    let mut moves = Vec::with_capacity(n_steps);
    for _ in 0..n_steps {
        let choices = movable(&counts, p);
        let k = choices[rng.random_range(0..choices.len())];
        bump(&mut counts, k);
        moves.push(k);
    }
    Ok(WalkHistory { moves, p })
}

/// Row `k` lists the times at which particle `k` moved.
pub fn walk_to_tableau(h: &WalkHistory) -> Tableau {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (t, &k) in h.moves.iter().enumerate() {
        if rows.len() < k {
            rows.resize(k, Vec::new());
        }
        rows[k - 1].push(t + 1);
    }
    Tableau::new(rows).expect("legal histories give standard tableaux")
}

/// Inverse of [`walk_to_tableau`]; fails for non-standard tableaux or when
/// the tableau has more than `p` rows.
pub fn tableau_to_walk(t: &Tableau, p: Option<usize>) -> Result<WalkHistory> {
    t.check_standard()?;
    if p.is_some_and(|p| t.rows().len() > p) {
        return Err(Error::Invariant(format!("{} rows exceed {p:?} particles", t.rows().len())));
    }
    let mut moves = vec![0; t.size()];
    for (k, row) in t.rows().iter().enumerate() {
        for &time in row {
            moves[time - 1] = k + 1;
        }
    }
    Ok(WalkHistory { moves, p })
}
