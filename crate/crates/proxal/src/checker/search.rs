//! Relation searches: exhaustive over all explicit relations at n <= 2, and
//! seeded random sampling at n = 3 (where the relation space has 2^64
//! members).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::primal::Primal;
use crate::proximity::{check_primal_proximity, ProximityRelation};
use crate::sets::{SetError, Universe};

/// Bit positions a candidate relation must clear or set to have any chance of
/// passing axioms 3 and 4. A position is `a * 2^n + b` for the pair `(A, B)`.
fn forced_bits(u: &Universe, p: &Primal) -> (Vec<usize>, Vec<usize>) {
    let sc = u.subset_count() as usize;
    let mut zeros = Vec::new();
    let mut ones = Vec::new();
    for a in u.subsets() {
        let row_dead = !p.contains(u.complement(a));
        for b in u.subsets() {
            let pos = a.mask() as usize * sc + b.mask() as usize;
            if row_dead {
                zeros.push(pos);
            } else if p.contains(u.complement(a.inter(b))) {
                ones.push(pos);
            }
        }
    }
    (zeros, ones)
}

/// All explicit relations satisfying the five axioms against `p`, in
/// ascending order of the packed relation bits (row-major, row `A`, bit `B`).
/// Only axiom-free bit positions are enumerated; forced positions are fixed
/// up front and the survivors get the full check.
pub fn exhaustive_relation_search(
    u: &Universe,
    p: &Primal,
) -> Result<Vec<ProximityRelation>, SetError> {
    if u.n() > 2 {
        return Err(SetError::SizeCap(format!(
            "exhaustive relation search needs n <= 2, got {}",
            u.n()
        )));
    }
    let sc = u.subset_count() as usize;
    let total_bits = sc * sc;
    let (zeros, ones) = forced_bits(u, p);
    let mut fixed = vec![false; total_bits];
    let mut base_bits = 0u64;
    for &pos in &zeros {
        fixed[pos] = true;
    }
    for &pos in &ones {
        fixed[pos] = true;
        base_bits |= 1 << pos;
    }
    let free: Vec<usize> = (0..total_bits).filter(|&pos| !fixed[pos]).collect();

    let mut found = Vec::new();
    for combo in 0u64..(1u64 << free.len()) {
        let mut bits = base_bits;
        for (i, &pos) in free.iter().enumerate() {
            if combo >> i & 1 == 1 {
                bits |= 1 << pos;
            }
        }
        let rows: Vec<u32> = (0..sc)
            .map(|a| (bits >> (a * sc) & ((1u64 << sc) - 1)) as u32)
            .collect();
        let r = ProximityRelation::explicit(u, rows);
        if check_primal_proximity(&r, p).all_pass() {
            found.push(r);
        }
    }
    // free-bit combos do not enumerate in packed-bits order; restore it
    found.sort_by_key(|r| {
        let mut bits = 0u64;
        for (a, row) in r.matrix().iter().enumerate() {
            bits |= (*row as u64) << (a * sc);
        }
        bits
    });
    Ok(found)
}

/// Draws `count` random candidate relations at n = 3, repairs each toward
/// axioms 1, 3, and 4, and keeps the ones passing the full check. Duplicates
/// keep their first occurrence; same seed, same output.
pub fn random_relation_sample(
    u: &Universe,
    p: &Primal,
    count: usize,
    seed: u64,
) -> Result<Vec<ProximityRelation>, SetError> {
    if u.n() != 3 {
        return Err(SetError::SizeCap(format!(
            "random relation sampling is for n = 3, got {}",
            u.n()
        )));
    }
    let sc = u.subset_count() as usize;
    let row_mask = (1u32 << sc) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = Vec::new();
    let mut found = Vec::new();
    for _ in 0..count {
        let mut rows: Vec<u32> = (0..sc).map(|_| rng.gen::<u32>() & row_mask).collect();
        // symmetrize (axiom 1)
        for a in 0..sc {
            for b in 0..a {
                if rows[a] >> b & 1 == 1 || rows[b] >> a & 1 == 1 {
                    rows[a] |= 1 << b;
                    rows[b] |= 1 << a;
                }
            }
        }
        // force required pairs on (axiom 4); those rows are never dead,
        // since the primal is downward closed
        for a in u.subsets() {
            for b in u.subsets() {
                if p.contains(u.complement(a.inter(b))) {
                    rows[a.mask() as usize] |= 1 << b.mask();
                }
            }
        }
        // clear dead rows and, to keep symmetry, their columns (axiom 3)
        for a in u.subsets() {
            if !p.contains(u.complement(a)) {
                rows[a.mask() as usize] = 0;
                for row in rows.iter_mut() {
                    *row &= !(1 << a.mask());
                }
            }
        }
        if seen.contains(&rows) {
            continue;
        }
        seen.push(rows.clone());
        let r = ProximityRelation::explicit(u, rows);
        if check_primal_proximity(&r, p).all_pass() {
            found.push(r);
        }
    }
    Ok(found)
}
