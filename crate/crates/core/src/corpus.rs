//! Seeded generator of random quadratic string bound quivers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::StringAlgebra;
use crate::quiver::{check_finite_dimensional, BoundQuiver, WitnessCycle};

#[derive(Clone, Copy, Debug)]
pub struct CorpusConfig {
    pub max_vertices: usize,
    pub max_arrows: usize,
    /// Probability of forcing the gentle condition at each vertex.
    pub gentle_bias: f64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { max_vertices: 5, max_arrows: 8, gentle_bias: 0.3 }
    }
}

/// One random connected, finite-dimensional string bound quiver.
pub fn random_string_quiver(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> BoundQuiver {
    loop {
        if let Some(q) = attempt(rng, cfg) {
            return q;
        }
    }
}

fn attempt(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> Option<BoundQuiver> {
    let nv = rng.random_range(1..=cfg.max_vertices);
    let cap = cfg.max_arrows.min(2 * nv);
    let target_arrows = rng.random_range(nv.saturating_sub(1).max(1)..=cap.max(1));
    let mut out_deg = vec![0usize; nv];
    let mut in_deg = vec![0usize; nv];
    let mut arrows: Vec<(u32, u32)> = Vec::new();
    let mut add = |s: usize, t: usize, arrows: &mut Vec<(u32, u32)>| {
        if out_deg[s] < 2 && in_deg[t] < 2 {
            out_deg[s] += 1;
            in_deg[t] += 1;
            arrows.push((s as u32, t as u32));
            true
        } else {
            false
        }
    };
    for v in 1..nv {
        let mut placed = false;
        for _ in 0..20 {
            let u = rng.random_range(0..v);
            let ok = if rng.random_bool(0.5) { add(u, v, &mut arrows) } else { add(v, u, &mut arrows) };
            if ok {
                placed = true;
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    let mut tries = 0;
    while arrows.len() < target_arrows && tries < 50 {
        tries += 1;
        let s = rng.random_range(0..nv);
        let t = rng.random_range(0..nv);
        add(s, t, &mut arrows);
    }

    let mut relations: Vec<(u32, u32)> = Vec::new();
    for v in 0..nv {
        let ins: Vec<u32> = (0..arrows.len() as u32).filter(|&a| arrows[a as usize].1 as usize == v).collect();
        let outs: Vec<u32> = (0..arrows.len() as u32).filter(|&a| arrows[a as usize].0 as usize == v).collect();
        if ins.is_empty() || outs.is_empty() {
            continue;
        }
        let gentle = rng.random_bool(cfg.gentle_bias);
        // non-relations form a partial matching between incoming and outgoing
        let mut outs_shuffled = outs.clone();
        outs_shuffled.shuffle(rng);
        let mut free: Vec<(u32, u32)> = Vec::new();
        for (&a, &b) in ins.iter().zip(&outs_shuffled) {
            if gentle || rng.random_bool(0.6) {
                free.push((a, b));
            }
        }
        for &a in &ins {
            for &b in &outs {
                if !free.contains(&(a, b)) {
                    relations.push((a, b));
                }
            }
        }
    }

    loop {
        let q = BoundQuiver::from_indices(nv, &arrows, &relations).ok()?;
        match check_finite_dimensional(&q) {
            Ok(()) => return StringAlgebra::new(q.clone()).ok().map(|_| q),
            Err(WitnessCycle(c)) => {
                let ids: Vec<u32> = c.arrows().iter().map(|a| a.index() as u32).collect();
                let j = rng.random_range(0..ids.len());
                relations.push((ids[j], ids[(j + 1) % ids.len()]));
            }
        }
    }
}

/// `count` quivers from a fixed seed.
pub fn corpus(seed: u64, count: usize, cfg: &CorpusConfig) -> Vec<BoundQuiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_string_quiver(&mut rng, cfg)).collect()
}

/// The default test corpus: 60 quivers with at most 5 vertices and 8 arrows.
pub fn default_corpus() -> Vec<BoundQuiver> {
    corpus(0x5eed_2024, 60, &CorpusConfig::default())
}
