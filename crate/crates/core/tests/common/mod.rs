//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use monord::{ExpVec, MonomialIdeal};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A vector of the given total degree, spread uniformly over coordinates.
pub fn vec_of_degree(rng: &mut impl Rng, m: usize, d: u32) -> Vec<u32> {
    let mut v = vec![0; m];
    for _ in 0..d {
        v[rng.gen_range(0..m)] += 1;
    }
    v
}

/// A nonzero proper ideal: between 1 and `max_gens` generators of degree
/// `1..=max_deg`.
pub fn random_ideal(rng: &mut impl Rng, m: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            ExpVec::new(vec_of_degree(rng, m, d))
        })
        .collect();
    MonomialIdeal::new(m, gens).unwrap()
}

/// All points of ℕ^m of degree exactly `n`, enumerated independently of the library.
pub fn points_of_degree(m: usize, n: u32) -> Vec<Vec<u32>> {
    if m == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in points_of_degree(m - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn raw_gens(e: &MonomialIdeal) -> Vec<Vec<u32>> {
    e.gens().iter().map(|g| g.entries().to_vec()).collect()
}

/// `H_E(0..=n_max)` by enumerating every lattice point.
pub fn brute_hilbert(e: &MonomialIdeal, n_max: u32) -> Vec<u64> {
    let gens = raw_gens(e);
    (0..=n_max)
        .map(|n| {
            points_of_degree(e.dim(), n)
                .iter()
                .filter(|p| !gens.iter().any(|g| divides(g, p)))
                .count() as u64
        })
        .collect()
}

/// Prefix sums of [`brute_hilbert`].
pub fn brute_samuel(e: &MonomialIdeal, s_max: u32) -> Vec<u64> {
    brute_hilbert(e, s_max)
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Every antichain of `points` as an ideal, plus the zero ideal.
pub fn all_ideals_in_box(m: usize, max_deg: u32) -> Vec<MonomialIdeal> {
    let points: Vec<Vec<u32>> = (0..=max_deg).flat_map(|n| points_of_degree(m, n)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        points: &[Vec<u32>],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        out.push(chosen.iter().map(|&i| points[i].clone()).collect());
        for k in from..points.len() {
            if chosen
                .iter()
                .any(|&c| divides(&points[c], &points[k]) || divides(&points[k], &points[c]))
            {
                continue;
            }
            chosen.push(k);
            rec(points, k + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&points, 0, &mut chosen, &mut raw);
    for gens in raw {
        out.push(MonomialIdeal::new(m, gens.into_iter().map(ExpVec::new).collect()).unwrap());
    }
    out
}

/// A random down-closed set of `size` points in ℕ^m (grown by adding
/// minimal points of the complement), returned with the ideal of its
/// complement.
pub fn random_artinian(rng: &mut impl Rng, m: usize, size: usize) -> (Vec<Vec<u32>>, MonomialIdeal) {
    let mut inside: Vec<Vec<u32>> = vec![vec![0; m]];
    let addable = |inside: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
        let mut cands: Vec<Vec<u32>> = Vec::new();
        for p in inside {
            for i in 0..m {
                let mut q = p.clone();
                q[i] += 1;
                if inside.contains(&q) || cands.contains(&q) {
                    continue;
                }
                let below_inside = (0..m).all(|j| {
                    q[j] == 0 || {
                        let mut r = q.clone();
                        r[j] -= 1;
                        inside.contains(&r)
                    }
                });
                if below_inside {
                    cands.push(q);
                }
            }
        }
        cands
    };
    while inside.len() < size {
        let cands = addable(&inside);
        inside.push(cands.choose(rng).unwrap().clone());
    }
    let gens = addable(&inside).into_iter().map(ExpVec::new).collect();
    (inside, MonomialIdeal::new(m, gens).unwrap())
}
