use serde::Serialize;

/// A Disjoint Set instance: does the family hold two disjoint members?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    pub ground: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(ground: usize, sets: Vec<Vec<usize>>) -> Self {
        assert!(sets.iter().flatten().all(|&x| x < ground), "element outside the ground set");
        SetFamily { ground, sets }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kernel {
    Naive,
    #[default]
    Packed,
}

pub fn disjoint_set(f: &SetFamily, kernel: Kernel) -> Option<(usize, usize)> {
    match kernel {
        Kernel::Naive => disjoint_set_naive(f),
        Kernel::Packed => disjoint_set_bitpacked(f),
    }
}

/// Pairwise scan with a membership marker; first disjoint pair in
/// lexicographic order.
pub fn disjoint_set_naive(f: &SetFamily) -> Option<(usize, usize)> {
    let mut mark = vec![false; f.ground];
    for (i, a) in f.sets.iter().enumerate() {
        for &x in a {
            mark[x] = true;
        }
        let hit = (i + 1..f.sets.len()).find(|&j| !f.sets[j].iter().any(|&x| mark[x]));
        for &x in a {
            mark[x] = false;
        }
        if let Some(j) = hit {
            return Some((i, j));
        }
    }
    None
}

/// Word-parallel scan: every set becomes a bit vector over the ground set
/// and each pair stops at its first nonzero intersection word.
pub fn disjoint_set_bitpacked(f: &SetFamily) -> Option<(usize, usize)> {
    let words = f.ground.div_ceil(64).max(1);
    let mut bits = vec![0u64; words * f.sets.len()];
    // only the words between the lowest and highest element can intersect
    let mut span = Vec::with_capacity(f.sets.len());
    for (i, s) in f.sets.iter().enumerate() {
        let row = &mut bits[i * words..(i + 1) * words];
        for &x in s {
            row[x / 64] |= 1 << (x % 64);
        }
        let lo = s.iter().min().map_or(0, |&x| x / 64);
        let hi = s.iter().max().map_or(0, |&x| x / 64 + 1);
        span.push((lo, hi));
    }
    for i in 0..f.sets.len() {
        let a = &bits[i * words..(i + 1) * words];
        for j in i + 1..f.sets.len() {
            let b = &bits[j * words..(j + 1) * words];
            let lo = span[i].0.max(span[j].0);
            let hi = span[i].1.min(span[j].1);
            if lo >= hi || (lo..hi).all(|w| a[w] & b[w] == 0) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = SetFamily::new(5, vec![vec![1, 2], vec![2, 3], vec![4]]);
        assert_eq!(disjoint_set_naive(&f), Some((0, 2)));
        assert_eq!(disjoint_set_bitpacked(&f), Some((0, 2)));
        let g = SetFamily::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert_eq!(disjoint_set_naive(&g), None);
        assert_eq!(disjoint_set_bitpacked(&g), None);
    }

    #[test]
    fn wide_ground_set() {
        let f = SetFamily::new(300, vec![vec![0, 299], vec![299, 150], vec![1, 64, 128]]);
        assert_eq!(disjoint_set_naive(&f), Some((0, 2)));
        assert_eq!(disjoint_set_bitpacked(&f), Some((0, 2)));
    }
}
