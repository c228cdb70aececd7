use std::fmt;
use std::sync::Arc;

use super::{CoefficientField, MonomialOrder, PolyError};

/// A polynomial ring context: variable names, coefficient field and monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: CoefficientField, order: MonomialOrder) -> Result<Arc<Self>, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        order.validate(vars.len()).map_err(PolyError::BadOrder)?;
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    /// Shorthand for a ring over `Q` with grevlex.
    pub fn rational(vars: &[&str]) -> Arc<Self> {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), CoefficientField::Rational, MonomialOrder::Grevlex)
            .expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>, PolyError> {
        Self::new(self.vars.clone(), self.field, order)
    }

    /// True when polynomials of `other` can be reinterpreted here by re-sorting.
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}
