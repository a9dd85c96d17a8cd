pub mod bdiagram;
pub mod eggers;
pub mod exactnum;
pub mod mdcurve;
pub mod oracle;
pub mod puiseux;
pub mod simplicial;
