use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// All k-element subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Complement of a sorted index set within `{0, .., n-1}`.
pub(crate) fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - set.len());
    let mut it = set.iter().copied().peekable();
    for i in 0..n {
        if it.peek() == Some(&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}

pub(crate) fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub(crate) fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

pub(crate) fn vec_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
