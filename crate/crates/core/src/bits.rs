//! Small bit and enumeration helpers shared by the exhaustive searches.

/// Iterate over the set bits of a mask, ascending.
#[inline]
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// All k-subsets of [0, n) as bitmasks, in lexicographic order of the
/// ascending id tuple ({0,1,2} first). Lex order is what the witness
/// tie-breaking rules are stated in, so searches must consume subsets
/// in this order.
pub struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        if self.k == 0 {
            self.done = true;
            return Some(mask);
        }
        // advance to the next tuple
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - (self.k - i) {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// All size-k multisets of [0, n) as sorted vectors, lexicographic order
/// ([0,0,..,0] first).
pub struct Multisets {
    n: usize,
    cur: Vec<u8>,
    done: bool,
}

impl Multisets {
    pub fn new(n: usize, k: usize) -> Self {
        Multisets {
            n,
            cur: vec![0; k],
            done: n == 0 && k > 0,
        }
    }
}

impl Iterator for Multisets {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if (self.cur[i] as usize) < self.n - 1 {
                let v = self.cur[i] + 1;
                for j in i..k {
                    self.cur[j] = v;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Binomial coefficients up to n = 80, saturating at u64::MAX.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n - i) as u128 / (i + 1) as u128;
        if num > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    num as u64
}
