//! Suffix array (prefix doubling with counting sort) and Kasai LCP.

/// Suffix array of `text` whose symbols are `< alphabet`.
pub fn suffix_array(text: &[u8], alphabet: usize) -> Vec<usize> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    let mut tmp = vec![0usize; n];
    let mut buckets = alphabet.max(n) + 1;

    let mut k = 1;
    loop {
        // Sort by (rank[i], rank[i + k]) with rank 0 reserved for "past the end".
        let key2 = |i: usize| if i + k < n { rank[i + k] + 1 } else { 0 };
        let mut order: Vec<usize> = (0..n).collect();
        counting_sort(&mut order, &mut tmp, key2, buckets + 1);
        counting_sort(&mut order, &mut tmp, |i| rank[i], buckets);
        sa.copy_from_slice(&order);

        tmp[sa[0]] = 0;
        for w in 1..n {
            let (p, c) = (sa[w - 1], sa[w]);
            let same = rank[p] == rank[c] && key2(p) == key2(c);
            tmp[c] = tmp[p] + usize::from(!same);
        }
        std::mem::swap(&mut rank, &mut tmp);
        let classes = rank[sa[n - 1]] + 1;
        if classes == n {
            break;
        }
        buckets = classes;
        k *= 2;
    }
    sa
}

fn counting_sort<F: Fn(usize) -> usize>(
    items: &mut [usize],
    scratch: &mut [usize],
    key: F,
    buckets: usize,
) {
    let mut count = vec![0usize; buckets + 1];
    for &i in items.iter() {
        count[key(i) + 1] += 1;
    }
    for b in 1..count.len() {
        count[b] += count[b - 1];
    }
    for &i in items.iter() {
        let k = key(i);
        scratch[count[k]] = i;
        count[k] += 1;
    }
    items.copy_from_slice(&scratch[..items.len()]);
}

/// `lcp[r]` = longest common prefix of suffixes `sa[r-1]` and `sa[r]`;
/// `lcp[0] = 0`.
pub fn lcp_array(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (r, &s) in sa.iter().enumerate() {
        rank[s] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && text[i + h] == text[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// Number of distinct factors of every length `1..=max_len` of `text`.
/// Entry `L - 1` holds the count for length `L`.
pub fn factor_counts(text: &[u8], alphabet: usize, max_len: usize) -> Vec<usize> {
    let n = text.len();
    let sa = suffix_array(text, alphabet);
    let lcp = lcp_array(text, &sa);
    // Suffix at rank r contributes a new factor for each L in (lcp[r], n - sa[r]].
    // A suffix shorter than L that is a prefix of a block of suffixes sorts
    // before the whole block, so blocks sharing an L-prefix stay contiguous.
    let mut diff = vec![0i64; max_len + 2];
    for r in 0..n {
        let lo = lcp[r] + 1;
        let hi = (n - sa[r]).min(max_len);
        if lo <= hi {
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
    }
    let mut out = Vec::with_capacity(max_len);
    let mut acc = 0i64;
    for d in diff.iter().take(max_len + 1).skip(1) {
        acc += d;
        out.push(acc as usize);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn naive_sa(t: &[u8]) -> Vec<usize> {
        let mut v: Vec<usize> = (0..t.len()).collect();
        v.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
        v
    }

    #[test]
    fn banana() {
        let t: Vec<u8> = b"banana".iter().map(|c| c - b'a').collect();
        assert_eq!(suffix_array(&t, 26), vec![5, 3, 1, 0, 4, 2]);
        let sa = suffix_array(&t, 26);
        assert_eq!(lcp_array(&t, &sa), vec![0, 1, 3, 0, 0, 2]);
    }

    #[test]
    fn empty_and_single() {
        assert!(suffix_array(&[], 4).is_empty());
        assert_eq!(suffix_array(&[2], 4), vec![0]);
        assert_eq!(factor_counts(&[2], 4, 3), vec![1, 0, 0]);
    }

    proptest! {
        #[test]
        fn matches_naive(t in proptest::collection::vec(0u8..4, 0..200)) {
            let sa = suffix_array(&t, 4);
            prop_assert_eq!(&sa, &naive_sa(&t));
            let counts = factor_counts(&t, 4, 12);
            for l in 1..=12usize {
                let set: HashSet<&[u8]> = t.windows(l).collect();
                prop_assert_eq!(counts[l - 1], set.len());
            }
        }
    }
}
