pub mod cli;
pub mod exact;
pub mod localization;
pub mod random;
pub mod residues;
pub mod spaces;
pub mod symfun;
