use std::fmt::Debug;
use std::hash::Hash;

/// What the closure machinery needs from a group element.
///
/// `mul(a, b)` is the product `a·b`; for permutations that means "apply `a`,
/// then `b`", so right cosets and right actions compose correctly.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Identity of the same shape (degree or modulus) as `self`.
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Two elements can be multiplied together.
    fn compatible(&self, other: &Self) -> bool;

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.identity_like();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    fn conj(&self, by: &Self) -> Self {
        by.inverse().mul(self).mul(by)
    }

    fn commutator(&self, other: &Self) -> Self {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }
}
