pub mod cli;
pub mod cohomology;
pub mod exactla;
pub mod fields;
pub mod graded;
pub mod membership;
pub mod monsky;
