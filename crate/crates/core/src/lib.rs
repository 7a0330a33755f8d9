//! Plane graphs of maximum degree 4 without 5-cycles, and the list coloring
//! of their squares.
//!
//! The modules follow the argument in order: plane embeddings, squares,
//! exact choosability, the reducible catalog, matching configurations in a
//! host graph, and the discharging audit. `corpus` supplies test graphs and
//! `cli` wraps everything in a batch front end.

pub mod choosability;
pub mod cli;
pub mod corpus;
pub mod discharging;
pub mod matcher;
pub mod plane_graph;
pub mod reducibility;
pub mod square;

/// Runs the guide's code listings as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/plane-graphs.md")]
    mod plane_graphs {}
    #[doc = include_str!("../../../book/src/squares.md")]
    mod squares {}
    #[doc = include_str!("../../../book/src/choosability.md")]
    mod choosability {}
    #[doc = include_str!("../../../book/src/reducibility.md")]
    mod reducibility {}
    #[doc = include_str!("../../../book/src/matching.md")]
    mod matching {}
    #[doc = include_str!("../../../book/src/discharging.md")]
    mod discharging {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
