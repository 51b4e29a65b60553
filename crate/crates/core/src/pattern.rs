use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{families, Multigraph};

/// A graph to be found as an immersion, with optional roots.
#[derive(Clone, PartialEq, Eq)]
pub enum PatternGraph {
    K33,
    K5,
    /// Wheel with four rim vertices, rooted at the hub (vertex 0).
    W4,
    /// Path `x0 - a - b - x1` with `x0 a` and `b x1` doubled, rooted at `(x0, x1)`.
    Eyeglasses,
    Custom { graph: Multigraph, roots: Vec<usize> },
}

impl PatternGraph {
    pub fn custom(graph: Multigraph, roots: Vec<usize>) -> Result<Self> {
        crate::graph::RootedMultigraph::new(graph.clone(), roots.clone())?;
        Ok(PatternGraph::Custom { graph, roots })
    }

    pub fn graph(&self) -> Multigraph {
        match self {
            PatternGraph::K33 => families::k33(),
            PatternGraph::K5 => families::complete(5),
            PatternGraph::W4 => families::wheel(4),
            PatternGraph::Eyeglasses => eyeglasses(),
            PatternGraph::Custom { graph, .. } => graph.clone(),
        }
    }

    pub fn roots(&self) -> Vec<usize> {
        match self {
            PatternGraph::K33 | PatternGraph::K5 => Vec::new(),
            PatternGraph::W4 => vec![0],
            PatternGraph::Eyeglasses => vec![0, 3],
            PatternGraph::Custom { roots, .. } => roots.clone(),
        }
    }

    pub fn edge_count(&self) -> u32 {
        self.graph().edge_count()
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "k33" | "k3,3" => Ok(PatternGraph::K33),
            "k5" => Ok(PatternGraph::K5),
            "w4" => Ok(PatternGraph::W4),
            "eyeglasses" => Ok(PatternGraph::Eyeglasses),
            other => Err(Error::Precondition(format!("unknown pattern {other:?}"))),
        }
    }
}

impl fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternGraph::K33 => write!(f, "K33"),
            PatternGraph::K5 => write!(f, "K5"),
            PatternGraph::W4 => write!(f, "W4"),
            PatternGraph::Eyeglasses => write!(f, "Eyeglasses"),
            PatternGraph::Custom { graph, roots } => write!(f, "Custom({graph:?}, roots={roots:?})"),
        }
    }
}

fn eyeglasses() -> Multigraph {
    Multigraph::build(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 2)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        assert_eq!(PatternGraph::K33.edge_count(), 9);
        assert_eq!(PatternGraph::K5.edge_count(), 10);
        assert_eq!(PatternGraph::W4.edge_count(), 8);
        let e = PatternGraph::Eyeglasses.graph();
        assert_eq!(e.edge_count(), 5);
        assert_eq!((e.degree(0), e.degree(3)), (2, 2));
        assert_eq!(PatternGraph::Eyeglasses.roots(), vec![0, 3]);
        assert_eq!(PatternGraph::W4.graph().degree(0), 4);
    }

    #[test]
    fn custom_roots_validated() {
        let g = families::path(3);
        assert!(PatternGraph::custom(g.clone(), vec![0, 0]).is_err());
        assert!(PatternGraph::custom(g.clone(), vec![3]).is_err());
        assert!(PatternGraph::custom(g, vec![2, 0]).is_ok());
        assert!(PatternGraph::parse("K5").is_ok());
        assert!(PatternGraph::parse("k7").is_err());
    }
}
