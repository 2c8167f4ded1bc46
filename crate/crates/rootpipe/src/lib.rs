//! File formats, rendering, and shared plumbing for the `rootpipe` binary.

pub mod io;
pub mod render;

pub use io::LoadError;
pub use render::OutputFormat;
