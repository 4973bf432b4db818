use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite, ordered universe of discourse.
///
/// Label order is significant: it fixes the storage layout of every set and
/// relation built over the universe, and it breaks ties when ranking.
/// Cloning is cheap; the labels are shared.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<Inner>,
}

struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe {
            inner: Arc::new(Inner { labels, index }),
        })
    }

    pub fn empty() -> Self {
        Universe::new(Vec::<String>::new()).expect("empty universe is valid")
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.inner.index.contains_key(label)
    }

    /// Same labels, possibly in a different order.
    pub fn same_elements(&self, other: &Universe) -> bool {
        self.len() == other.len() && other.labels().iter().all(|l| self.contains(l))
    }

    /// For each position of `self`, the position of the same label in `other`.
    /// `None` unless both universes hold the same labels.
    pub(crate) fn alignment(&self, other: &Universe) -> Option<Vec<usize>> {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return Some((0..self.len()).collect());
        }
        if !self.same_elements(other) {
            return None;
        }
        Some(
            self.labels()
                .iter()
                .map(|l| other.position(l).expect("checked by same_elements"))
                .collect(),
        )
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            Universe::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn alignment_follows_labels() {
        let u = Universe::new(["x", "y", "z"]).unwrap();
        let v = Universe::new(["z", "x", "y"]).unwrap();
        assert_eq!(u.alignment(&v), Some(vec![1, 2, 0]));
        assert_ne!(u, v);
        let w = Universe::new(["x", "y"]).unwrap();
        assert_eq!(u.alignment(&w), None);
    }
}
