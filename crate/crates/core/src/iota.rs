//! The fixed index convention `..., 1, 2, 1, t_lambda, 2, 1, 2, ...`.

/// Color `i_k` of coordinate `k`.
pub fn color(k: i64) -> u8 {
    assert!(k != 0, "index 0 carries no color");
    match (k > 0, k.rem_euclid(2) == 1) {
        (true, true) | (false, false) => 1,
        _ => 2,
    }
}

/// Next index of the same color above `k`.
pub fn k_plus(k: i64) -> i64 {
    match k {
        -1 => 2,
        -2 => 1,
        _ => k + 2,
    }
}

/// Next index of the same color below `k`.
pub fn k_minus(k: i64) -> i64 {
    match k {
        1 => -2,
        2 => -1,
        _ => k - 2,
    }
}

/// Successor of `k` in the index order, skipping 0.
pub fn succ(k: i64) -> i64 {
    if k == -1 {
        1
    } else {
        k + 1
    }
}

/// Predecessor of `k` in the index order, skipping 0.
pub fn pred(k: i64) -> i64 {
    if k == 1 {
        -1
    } else {
        k - 1
    }
}

/// Nonzero indices in `lo..=hi`, ascending.
pub fn indices(lo: i64, hi: i64) -> impl DoubleEndedIterator<Item = i64> + Clone {
    (lo..=hi).filter(|&k| k != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors_alternate() {
        assert_eq!([1, 2, 3, 4].map(color), [1, 2, 1, 2]);
        assert_eq!([-1, -2, -3, -4].map(color), [2, 1, 2, 1]);
        for k in indices(-30, 30) {
            assert_ne!(color(k), color(succ(k)));
        }
    }

    #[test]
    fn neighbours_share_color() {
        for k in indices(-30, 30) {
            assert_eq!(color(k_plus(k)), color(k));
            assert_eq!(color(k_minus(k)), color(k));
            assert_eq!(k_minus(k_plus(k)), k);
            // exactly one index of the other color lies strictly between
            let between = indices(k.min(k_plus(k)) + 1, k_plus(k) - 1).count();
            assert_eq!(between, 1);
        }
        assert_eq!(k_plus(-1), 2);
        assert_eq!(k_plus(-2), 1);
        assert_eq!(k_minus(1), -2);
        assert_eq!(k_minus(2), -1);
    }
}
