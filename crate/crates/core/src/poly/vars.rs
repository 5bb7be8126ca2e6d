use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered, immutable list of variable names.
///
/// The position of a name is its slot in every exponent vector built over
/// the table. Tables are shared by reference; extending one produces a new
/// table and leaves the original untouched.
#[derive(Clone)]
pub struct VarTable(Arc<Inner>);

impl VarTable {
    pub fn new<I, T>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarTable(Arc::new(Inner { names, index })))
    }

    /// Table `x0, x1, ..., x{count-1}`.
    pub fn indexed(prefix: &str, start: usize, count: usize) -> Self {
        Self::new((start..start + count).map(|i| format!("{prefix}{i}")))
            .expect("generated names are distinct")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    /// New table with the given names appended (names already present are skipped).
    pub fn extended<I, T>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let mut names = self.0.names.clone();
        for name in extra {
            let name = name.into();
            if !self.contains(&name) && !names.contains(&name) {
                names.push(name);
            }
        }
        Self::new(names).expect("extension keeps names unique")
    }

    /// True when every name of `self` also occurs in `other`.
    pub fn embeds_into(&self, other: &VarTable) -> bool {
        self.same(other) || self.names().iter().all(|n| other.contains(n))
    }

    /// Position of each of our variables inside `other`.
    pub fn mapping_into(&self, other: &VarTable) -> Result<Vec<usize>> {
        self.names().iter().map(|n| other.require(n)).collect()
    }

    pub(crate) fn same(&self, other: &VarTable) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }

    /// The smaller of the two tables embedded in the larger.
    pub fn common(&self, other: &VarTable) -> Result<VarTable> {
        if self.embeds_into(other) {
            Ok(other.clone())
        } else if other.embeds_into(self) {
            Ok(self.clone())
        } else {
            Err(Error::IncompatibleVars {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for VarTable {}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names().join(", "))
    }
}
