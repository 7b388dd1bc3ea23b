//! Deterministic order statistics and inversion counting.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A value carrying a stable identity; ordered by `(value, tag)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ranked {
    pub value: f64,
    pub tag: usize,
}

impl Ranked {
    pub fn new(value: f64, tag: usize) -> Self {
        Ranked { value, tag }
    }

    #[inline]
    pub fn order(&self, other: &Ranked) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then(self.tag.cmp(&other.tag))
    }
}

/// The `k`-th smallest item (1-based) by `(value, tag)`.
///
/// Median of medians with groups of five, so the running time is linear in
/// the worst case.
pub fn rank_select(items: &[Ranked], k: usize) -> Result<Ranked> {
    if k == 0 || k > items.len() {
        return Err(Error::Rank {
            k,
            len: items.len(),
        });
    }
    if items.iter().any(|r| !r.value.is_finite()) {
        return Err(Error::NonFinite("ranked value"));
    }
    Ok(select_in_place(items.to_vec(), k - 1))
}

fn select_in_place(mut items: Vec<Ranked>, mut index: usize) -> Ranked {
    loop {
        if items.len() <= 10 {
            items.sort_unstable_by(Ranked::order);
            return items[index];
        }
        let pivot = median_of_medians(&items);
        let mut less = Vec::new();
        let mut greater = Vec::new();
        let mut equal = 0usize;
        for r in &items {
            match r.order(&pivot) {
                Ordering::Less => less.push(*r),
                Ordering::Greater => greater.push(*r),
                Ordering::Equal => equal += 1,
            }
        }
        if index < less.len() {
            items = less;
        } else if index < less.len() + equal {
            return pivot;
        } else {
            index -= less.len() + equal;
            items = greater;
        }
    }
}

fn median_of_medians(items: &[Ranked]) -> Ranked {
    let medians: Vec<Ranked> = items
        .chunks(5)
        .map(|chunk| {
            let mut group = chunk.to_vec();
            group.sort_unstable_by(Ranked::order);
            group[(group.len() - 1) / 2]
        })
        .collect();
    let mid = (medians.len() - 1) / 2;
    select_in_place(medians, mid)
}

/// Number of unordered pairs whose relative order differs between the two
/// permutations. Symmetric; `O(n log n)`.
pub fn count_inversions(perm_a: &[usize], perm_b: &[usize]) -> Result<u64> {
    if perm_a.len() != perm_b.len() {
        return Err(Error::Permutation);
    }
    let mut position = HashMap::with_capacity(perm_a.len());
    for (i, &id) in perm_a.iter().enumerate() {
        if position.insert(id, i as u32).is_some() {
            return Err(Error::Permutation);
        }
    }
    let mut seen = vec![false; perm_a.len()];
    let mut seq = Vec::with_capacity(perm_b.len());
    for id in perm_b {
        let &p = position.get(id).ok_or(Error::Permutation)?;
        if std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::Permutation);
        }
        seq.push(p);
    }
    Ok(sequence_inversions(&mut seq))
}

/// Counts pairs `i < j` with `seq[i] > seq[j]`, sorting `seq` as a side effect.
pub(crate) fn sequence_inversions(seq: &mut [u32]) -> u64 {
    let mut buf = vec![0u32; seq.len()];
    merge_count(seq, &mut buf)
}

fn merge_count(seq: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (left, right) = seq.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        merge_count(left, bl) + merge_count(right, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            buf[k] = seq[i];
            i += 1;
        } else {
            buf[k] = seq[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&seq[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&buf[..n]);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ranked(values: &[f64]) -> Vec<Ranked> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| Ranked::new(v, i))
            .collect()
    }

    #[test]
    fn select_examples() {
        assert_eq!(rank_select(&ranked(&[5.0]), 1).unwrap().value, 5.0);
        assert_eq!(rank_select(&ranked(&[3.0, 1.0, 2.0]), 2).unwrap().value, 2.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let values: Vec<f64> = (0..1000).map(|_| rng.gen::<f64>()).collect();
        let items = ranked(&values);
        let mut sorted = items.clone();
        sorted.sort_by(Ranked::order);
        assert_eq!(rank_select(&items, 500).unwrap(), sorted[499]);
    }

    #[test]
    fn select_rejects_bad_rank() {
        let items = ranked(&[1.0, 2.0]);
        assert_eq!(rank_select(&items, 0), Err(Error::Rank { k: 0, len: 2 }));
        assert_eq!(rank_select(&items, 3), Err(Error::Rank { k: 3, len: 2 }));
        assert!(rank_select(&[], 1).is_err());
    }

    #[test]
    fn select_breaks_ties_by_tag() {
        let items = vec![Ranked::new(1.0, 7), Ranked::new(1.0, 3), Ranked::new(1.0, 5)];
        assert_eq!(rank_select(&items, 1).unwrap().tag, 3);
        assert_eq!(rank_select(&items, 3).unwrap().tag, 7);
    }

    #[test]
    fn select_many_duplicates() {
        let items: Vec<Ranked> = (0..500).map(|i| Ranked::new((i % 3) as f64, 0)).collect();
        assert_eq!(rank_select(&items, 200).unwrap().value, 1.0);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(count_inversions(&[0, 1, 2], &[0, 1, 2]).unwrap(), 0);
        assert_eq!(count_inversions(&[1, 2], &[2, 1]).unwrap(), 1);
        assert_eq!(count_inversions(&[1, 2, 3, 4], &[4, 3, 2, 1]).unwrap(), 6);
    }

    #[test]
    fn inversion_rejects_non_permutations() {
        assert_eq!(count_inversions(&[1, 2], &[1, 3]), Err(Error::Permutation));
        assert_eq!(count_inversions(&[1, 1], &[1, 1]), Err(Error::Permutation));
        assert_eq!(count_inversions(&[1, 2], &[1, 2, 3]), Err(Error::Permutation));
        assert_eq!(count_inversions(&[1, 2], &[2, 2]), Err(Error::Permutation));
    }
}
