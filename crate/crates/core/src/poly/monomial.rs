use std::cmp::Ordering;
use std::fmt;

/// Exponent vector over the `2n` ring variables `z_1..z_n, w̄_1..w̄_n`.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `z_1 > z_2 > … > w̄_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    pub fn unit(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self / o` when every exponent of `o` is at most the matching one here.
    pub fn checked_div(&self, o: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn divides(&self, o: &MultiIndex) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn split(&self, n: usize) -> (&[u32], &[u32]) {
        self.0.split_at(n)
    }

    pub fn join(z: &[u32], w: &[u32]) -> MultiIndex {
        let mut v = Vec::with_capacity(z.len() + w.len());
        v.extend_from_slice(z);
        v.extend_from_slice(w);
        MultiIndex(v)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = MultiIndex(vec![2, 0, 0, 0]);
        let b = MultiIndex(vec![1, 1, 0, 0]);
        let c = MultiIndex(vec![0, 0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert!(MultiIndex(vec![0, 1, 0, 0]) > MultiIndex(vec![0, 0, 1, 0]));
    }

    #[test]
    fn division_of_monomials() {
        let a = MultiIndex(vec![2, 1]);
        assert_eq!(a.checked_div(&MultiIndex(vec![1, 1])), Some(MultiIndex(vec![1, 0])));
        assert_eq!(a.checked_div(&MultiIndex(vec![0, 2])), None);
    }
}
