pub mod arith;
pub mod bijections;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod orders;
pub mod partitions;
pub mod tableaux;
pub mod verify;
pub mod vos;

pub use error::{Error, Result};

// The guide in book/ is compiled into doctests so its snippets stay runnable.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/grid.md")]
    mod grid {}
    #[doc = include_str!("../../../book/src/vos.md")]
    mod vos {}
    #[doc = include_str!("../../../book/src/orders.md")]
    mod orders {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/enumerate.md")]
    mod enumerate {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
