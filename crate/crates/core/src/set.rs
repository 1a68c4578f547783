//! Sorted sets of element labels.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Ground-set elements are named by positive integers.
pub type Label = u32;

/// A finite set of labels, stored sorted and without duplicates.
///
/// The ordering is the canonical one used for every enumerated family:
/// first by cardinality, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(Vec<Label>);

impl ElementSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: Label) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn insert(&mut self, x: Label) -> bool {
        match self.0.binary_search(&x) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, x);
                true
            }
        }
    }

    pub fn remove(&mut self, x: Label) -> bool {
        match self.0.binary_search(&x) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, x: Label) -> Self {
        let mut s = self.clone();
        s.insert(x);
        s
    }

    pub fn without(&self, x: Label) -> Self {
        let mut s = self.clone();
        s.remove(x);
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| !other.contains(x))
    }

    pub fn union(&self, other: &ElementSet) -> Self {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &ElementSet) -> Self {
        self.iter().filter(|&x| other.contains(x)).collect()
    }

    pub fn difference(&self, other: &ElementSet) -> Self {
        self.iter().filter(|&x| !other.contains(x)).collect()
    }

    pub fn largest(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn into_vec(self) -> Vec<Label> {
        self.0
    }
}

impl FromIterator<Label> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut v: Vec<Label> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[Label; N]> for ElementSet {
    fn from(xs: [Label; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl From<&[Label]> for ElementSet {
    fn from(xs: &[Label]) -> Self {
        xs.iter().copied().collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Sorts a family canonically and removes duplicates.
pub fn canonicalize(family: &mut Vec<ElementSet>) {
    family.sort();
    family.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut fam = vec![
            ElementSet::from([2, 3, 4]),
            ElementSet::from([1, 5]),
            ElementSet::from([1, 2, 9]),
            ElementSet::from([1, 5]),
        ];
        canonicalize(&mut fam);
        assert_eq!(
            fam,
            vec![ElementSet::from([1, 5]), ElementSet::from([1, 2, 9]), ElementSet::from([2, 3, 4])]
        );
    }

    #[test]
    fn set_algebra() {
        let s = ElementSet::from([4, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3, 4]);
        let t = ElementSet::from([3, 5]);
        assert_eq!(s.union(&t).as_slice(), &[1, 3, 4, 5]);
        assert_eq!(s.intersection(&t).as_slice(), &[3]);
        assert_eq!(s.difference(&t).as_slice(), &[1, 4]);
        assert!(ElementSet::from([1, 4]).is_subset(&s));
        assert_eq!(s.to_string(), "{1,3,4}");
    }
}
