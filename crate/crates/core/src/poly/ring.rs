use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Ordered list of variable names of a polynomial ring over `Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Arc<[String]>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    /// Builds a ring from distinct identifier names. At least one variable is required.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(RingSpec {
            names: names.into(),
        })
    }

    /// The ring with no variables, i.e. `Q` itself. Only produced by substitution.
    pub(crate) fn constants() -> Self {
        RingSpec {
            names: Arc::from(Vec::<String>::new()),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same ring with the variables at `indices` removed.
    pub fn without(&self, indices: &[usize]) -> Self {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        RingSpec {
            names: names.into(),
        }
    }

    /// A ring whose variables are `extra` followed by the variables of `self`.
    pub fn with_front<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = extra
            .into_iter()
            .map(Into::into)
            .chain(self.names.iter().cloned())
            .collect();
        RingSpec::new(names)
    }

    /// A ring whose variables are those of `self` followed by `extra`.
    pub fn with_back<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = self
            .names
            .iter()
            .cloned()
            .chain(extra.into_iter().map(Into::into))
            .collect();
        RingSpec::new(names)
    }

    /// A name that is not used by any variable of this ring.
    pub(crate) fn fresh_name(&self, stem: &str) -> String {
        let mut candidate = stem.to_string();
        let mut i = 0;
        while self.index_of(&candidate).is_some() {
            i += 1;
            candidate = format!("{stem}{i}");
        }
        candidate
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.names.join(","))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(RingSpec::new(["x", "x"]).is_err());
        assert!(RingSpec::new(["2x"]).is_err());
        assert!(RingSpec::new(Vec::<String>::new()).is_err());
        let r = RingSpec::new(["x", "y"]).unwrap();
        assert_eq!(r.arity(), 2);
        assert_eq!(r.index_of("y"), Some(1));
        assert_eq!(r.without(&[0]).names(), &["y".to_string()]);
        assert_eq!(r.fresh_name("x"), "x1");
        assert_eq!(r.fresh_name("t"), "t");
    }
}
