use crate::error::{Error, Result};

/// Size limits shared by enumeration, graph construction and the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|R|^n` that may be enumerated (isotropy census, degree counts).
    pub enumeration: u64,
    /// Largest vertex count of a materialized graph (dense adjacency).
    pub graph_vertices: usize,
    /// Vertex limit for domination, diameter, planarity and isomorphism.
    pub solver: usize,
    /// Vertex limit for clique search on a complement (independence number).
    pub complement_clique: usize,
    /// Loop-vertex limit for the clique-loop number.
    pub clique_loop: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 1 << 20,
            graph_vertices: 1 << 14,
            solver: 4096,
            complement_clique: 1024,
            clique_loop: 1024,
        }
    }
}

impl Caps {
    /// Defaults with a different graph vertex cap.
    pub fn with_graph_cap(cap: usize) -> Self {
        Caps { graph_vertices: cap, ..Caps::default() }
    }

    pub(crate) fn check_solver(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.solver {
            return Err(Error::cap(what, n as u64, self.solver as u64));
        }
        Ok(())
    }
}
