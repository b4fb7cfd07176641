use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{self, Subset};

/// A finite set of named elements with a fixed canonical order.
#[derive(Clone)]
pub struct FinSet {
    inner: Arc<Inner>,
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl FinSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateElement(n.clone()));
            }
        }
        Ok(FinSet { inner: Arc::new(Inner { names, index }) })
    }

    /// `prefix0, prefix1, ...`
    pub fn numbered(prefix: &str, n: usize) -> Self {
        FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).expect("numbered names are distinct")
    }

    /// Elements named by their index: `0, 1, ...`
    pub fn range(n: usize) -> Self {
        FinSet::numbered("", n)
    }

    pub fn empty() -> Self {
        FinSet::range(0)
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::OutOfCarrier {
            element: name.to_string(),
            carrier: self.inner.names.join(","),
        })
    }

    /// Builds a subset from element names, rejecting names outside the carrier.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset> {
        let mut s = subset::empty(self.len());
        for n in names {
            s.insert(self.require(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn subset_name(&self, s: &Subset) -> String {
        let parts: Vec<&str> = s.ones().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Lexicographically ordered pairs, named `(a,b)`.
    pub fn product(&self, other: &FinSet) -> FinSet {
        let mut names = Vec::with_capacity(self.len() * other.len());
        for a in self.names() {
            for b in other.names() {
                names.push(format!("({a},{b})"));
            }
        }
        FinSet::new(names).expect("pairs of distinct names are distinct")
    }

    pub fn same(&self, other: &FinSet) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for FinSet {}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.names.join(","))
    }
}
