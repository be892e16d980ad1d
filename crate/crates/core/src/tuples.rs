//! Index tuples: binomials, increasing tuples and their lexicographic ranks.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(pos) = (0..k).rev().find(|&p| current[p] < n - k + p) else {
            return out;
        };
        current[pos] += 1;
        for q in pos + 1..k {
            current[q] = current[q - 1] + 1;
        }
    }
}

/// Lexicographic rank of a strictly increasing tuple among all increasing
/// tuples of the same length drawn from `0..n`.
pub fn rank_combination(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut start = 0;
    for (t, &c) in tuple.iter().enumerate() {
        for v in start..c {
            rank += binomial(n - v - 1, k - t - 1);
        }
        start = c + 1;
    }
    rank
}

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or `None` when an index repeats.
pub fn sort_with_sign(tuple: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Rank of the tuple in `0..n`^k, most significant position first.
pub fn rank_word(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &w| acc * n + w)
}

/// Inverse of [`rank_word`].
pub fn unrank_word(n: usize, k: usize, mut rank: usize) -> Vec<usize> {
    let mut word = vec![0; k];
    for slot in word.iter_mut().rev() {
        *slot = rank % n;
        rank /= n;
    }
    word
}
