//! The embedding document: the on-disk form of a book embedding.
//!
//! Serialized as JSON with exactly four fields:
//!
//! ```json
//! {
//!   "n": 4,
//!   "k": 2,
//!   "order": [0, 1, 2, 3],
//!   "pages": [[0, 1, 1], [0, 2, 1], [1, 3, 2]]
//! }
//! ```
//!
//! `order` is a permutation of `0..n`; `pages` lists one `[u, v, page]`
//! triple per edge, sorted by endpoint pair, pages 1-based. The graph is
//! implied: its edges are exactly the listed pairs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BookEmbedding, Graph, GraphError, LinearOrder, PageAssignment};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EmbeddingDoc {
    pub n: usize,
    pub k: usize,
    pub order: Vec<usize>,
    pub pages: Vec<[usize; 3]>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad order: {0}")]
    Order(GraphError),
    #[error("bad edge list: {0}")]
    Edges(GraphError),
}

impl EmbeddingDoc {
    /// Captures an embedding of `g` into document form.
    pub fn from_embedding(g: &Graph, emb: &BookEmbedding) -> Self {
        let pages = emb
            .assignment
            .iter()
            .map(|((u, v), p)| [u, v, p])
            .collect();
        EmbeddingDoc {
            n: g.n(),
            k: emb.assignment.k(),
            order: emb.order.perm().to_vec(),
            pages,
        }
    }

    /// Rebuilds the implied graph and the embedding. The graph's edges are
    /// exactly the pairs listed in `pages`.
    pub fn into_parts(self) -> Result<(Graph, BookEmbedding), DocError> {
        let order = LinearOrder::new(self.order).map_err(DocError::Order)?;
        if order.len() != self.n {
            return Err(DocError::Order(GraphError::OrderLength(order.len(), self.n)));
        }
        let g = Graph::new(self.n, self.pages.iter().map(|t| (t[0], t[1])))
            .map_err(DocError::Edges)?;
        let assignment =
            PageAssignment::new(self.k, self.pages.iter().map(|t| ((t[0], t[1]), t[2])));
        Ok((g, BookEmbedding::new(order, assignment)))
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty-printed JSON with a trailing newline; byte-stable for a given
    /// document.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
