//! Unshuffle permutations and increasing index tuples.

/// One `(m, n)`-shuffle, stored 0-based: `perm[i] = σ(i + 1) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub perm: Vec<usize>,
    pub sign: i8,
}

/// All `(m, n)`-shuffles: permutations of `m + n` letters that increase on
/// the first `m` positions and on the last `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleSet {
    pub m: usize,
    pub n: usize,
    pub elements: Vec<Shuffle>,
}

impl ShuffleSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Shuffle> {
        self.elements.iter()
    }
}

/// Ordinary permutation sign via inversion count.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Enumerates `sh(m, n)` in lexicographic order of the permutation words.
///
/// A shuffle is fixed by which letters occupy the first `m` slots, so the
/// lexicographic order is that of the `m`-subsets. Intended for
/// `m + n ≤ 8`; larger inputs work but grow as a binomial coefficient.
pub fn shuffles(m: usize, n: usize) -> ShuffleSet {
    let total = m + n;
    let elements = combinations(total, m)
        .into_iter()
        .map(|head| {
            let mut perm = head.clone();
            perm.extend((0..total).filter(|x| !head.contains(x)));
            let sign = permutation_sign(&perm);
            Shuffle { perm, sign }
        })
        .collect();
    ShuffleSet { m, n, elements }
}

/// Strictly increasing `k`-tuples drawn from `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Position of an increasing tuple in [`combinations`]`(n, k)`.
pub fn combination_rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut prev: usize = 0;
    for (i, &t) in tuple.iter().enumerate() {
        let start = if i == 0 { 0 } else { prev + 1 };
        for skipped in start..t {
            rank += binomial(n - skipped - 1, k - i - 1);
        }
        prev = t;
    }
    rank
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `tuple` and returns the sign of the sorting permutation, or `None`
/// if an index repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut t = tuple.to_vec();
    let mut sign = 1i8;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((t, sign))
    }
}
