use crate::cohomology::{is_cocycle, Cochain};
use crate::error::Error;
use crate::lie::{LieAlgebra, Representation};

/// Classification data `(g, U, (ρ, V), J)` with `J` a 3-cocycle in
/// `C(g, ρ, V)`. Only `dim U` matters for `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    rep: Representation,
    dim_u: usize,
    jtilde: Cochain,
}

impl Quadruple {
    pub fn new(rep: Representation, dim_u: usize, jtilde: Cochain) -> Result<Self, Error> {
        let q = Self { rep, dim_u, jtilde };
        q.check()?;
        Ok(q)
    }

    pub(crate) fn new_unchecked(rep: Representation, dim_u: usize, jtilde: Cochain) -> Self {
        Self { rep, dim_u, jtilde }
    }

    /// Jacobi identity, representation law and `δJ = 0`, in that order.
    pub fn check(&self) -> Result<(), Error> {
        self.g()
            .check()
            .map_err(|e| Error::InvalidQuadruple(format!("Jacobi identity: {e}")))?;
        self.rep
            .check()
            .map_err(|e| Error::InvalidQuadruple(format!("representation law: {e}")))?;
        let j = &self.jtilde;
        if j.degree() != 3 || j.dim_g() != self.g().dim() || j.dim_v() != self.rep.dim_v() {
            return Err(Error::InvalidQuadruple(format!(
                "Jtilde has degree {} on dim {} with values in dim {}, expected degree 3 on dim {} with values in dim {}",
                j.degree(),
                j.dim_g(),
                j.dim_v(),
                self.g().dim(),
                self.rep.dim_v()
            )));
        }
        if !is_cocycle(j, &self.rep)? {
            return Err(Error::InvalidQuadruple("Jtilde is not a cocycle".into()));
        }
        Ok(())
    }

    pub fn g(&self) -> &LieAlgebra {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim_v()
    }

    pub fn jtilde(&self) -> &Cochain {
        &self.jtilde
    }

    /// Same data with `U` replaced.
    pub fn with_dim_u(&self, dim_u: usize) -> Quadruple {
        Self { dim_u, ..self.clone() }
    }
}
