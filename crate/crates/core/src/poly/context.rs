use std::fmt;
use std::sync::Arc;

use crate::error::PolyError;

/// Ordered, duplicate-free list of variable names shared by polynomials.
#[derive(Clone)]
pub struct VarContext(Arc<[String]>);

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarContext, PolyError> {
        let mut seen: Vec<&str> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if seen.contains(&n) {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            seen.push(n);
        }
        Ok(VarContext(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// Panicking constructor for literal name lists.
    pub fn of(names: &[&str]) -> VarContext {
        VarContext::new(names).expect("duplicate variable name")
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &VarContext) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarContext {}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarContext({})", self.0.join(","))
    }
}
