//! Patience sorting.

/// Length of the longest strictly increasing subsequence.
pub fn lis_len<T: Ord>(seq: &[T]) -> usize {
    lis_len_by(seq, |a, b| a < b)
}

/// Length of the longest chain under the strict order `less`.
///
/// `less` must be a strict weak order on the values of `seq`.
pub fn lis_len_by<T, F>(seq: &[T], less: F) -> usize
where
    F: Fn(&T, &T) -> bool,
{
    // piles[k] is the smallest possible tail of an increasing run of length k+1
    let mut piles: Vec<&T> = Vec::new();
    for x in seq {
        let k = piles.partition_point(|&top| less(top, x));
        if k == piles.len() {
            piles.push(x);
        } else {
            piles[k] = x;
        }
    }
    piles.len()
}

#[cfg(test)]
pub(crate) fn lis_brute_force(seq: &[usize]) -> usize {
    let n = seq.len();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let mut last: Option<usize> = None;
        let mut ok = true;
        for (i, &v) in seq.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if let Some(l) = last {
                    if v <= l {
                        ok = false;
                        break;
                    }
                }
                last = Some(v);
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(lis_len::<u32>(&[]), 0);
        assert_eq!(lis_len(&[5, 1, 3, 2, 4]), 3);
        assert_eq!(lis_brute_force(&[5, 1, 3, 2, 4]), 3);
        assert_eq!(lis_len(&[1, 2, 3, 4]), 4);
        assert_eq!(lis_len(&[3, 2, 1]), 1);
        // strictness: equal values never chain
        assert_eq!(lis_len(&[2, 2, 2]), 1);
    }
}
