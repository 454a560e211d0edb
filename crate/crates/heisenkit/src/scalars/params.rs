//! Declared parameter sets and rational assignments for them.

use std::fmt;
use std::sync::Arc;

use num::BigRational;

use super::ScalarError;

/// An ordered set of parameter names. Shared by every polynomial and scalar
/// built over it; exponent vectors index into this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    names: Vec<String>,
}

pub type ParamsRef = Arc<Params>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Params {
    /// The empty parameter set; scalars over it are plain rationals.
    pub fn empty() -> ParamsRef {
        Arc::new(Params { names: Vec::new() })
    }

    /// Declares a parameter set. Names must be distinct identifiers.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<ParamsRef, ScalarError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(ScalarError::BadParamName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(ScalarError::DuplicateParam(n.clone()));
            }
        }
        Ok(Arc::new(Params { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A new set with extra names appended; existing indices are preserved.
    pub fn extend<S: Into<String>>(
        &self,
        extra: impl IntoIterator<Item = S>,
    ) -> Result<ParamsRef, ScalarError> {
        let mut names = self.names.clone();
        for n in extra {
            let n = n.into();
            if !valid_name(&n) {
                return Err(ScalarError::BadParamName(n));
            }
            if names.contains(&n) {
                return Err(ScalarError::DuplicateParam(n));
            }
            names.push(n);
        }
        Ok(Arc::new(Params { names }))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

/// A total assignment of rational values to a parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    params: ParamsRef,
    values: Vec<BigRational>,
}

impl Assignment {
    pub fn new(params: ParamsRef, values: Vec<BigRational>) -> Self {
        assert_eq!(params.len(), values.len(), "assignment arity mismatch");
        Assignment { params, values }
    }

    /// Builds an assignment from `(name, value)` pairs; every parameter of
    /// the set must be covered.
    pub fn from_pairs(
        params: &ParamsRef,
        pairs: &[(String, BigRational)],
    ) -> Result<Self, ScalarError> {
        let mut values = vec![None; params.len()];
        for (name, v) in pairs {
            let idx = params
                .index_of(name)
                .ok_or_else(|| ScalarError::UnknownParam(name.clone()))?;
            values[idx] = Some(v.clone());
        }
        let mut out = Vec::with_capacity(params.len());
        for (i, v) in values.into_iter().enumerate() {
            match v {
                Some(v) => out.push(v),
                None => return Err(ScalarError::MissingAssignment(params.name(i).to_string())),
            }
        }
        Ok(Assignment::new(params.clone(), out))
    }

    pub fn params(&self) -> &ParamsRef {
        &self.params
    }

    pub fn value(&self, idx: usize) -> &BigRational {
        &self.values[idx]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .params
            .names()
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            Params::new(["p", "p"]),
            Err(ScalarError::DuplicateParam(_))
        ));
        assert!(matches!(
            Params::new(["2bad"]),
            Err(ScalarError::BadParamName(_))
        ));
    }

    #[test]
    fn extend_preserves_indices() {
        let p = Params::new(["p", "q"]).unwrap();
        let ext = p.extend(["k"]).unwrap();
        assert_eq!(ext.index_of("p"), Some(0));
        assert_eq!(ext.index_of("q"), Some(1));
        assert_eq!(ext.index_of("k"), Some(2));
    }
}
