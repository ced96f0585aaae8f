pub mod algebra;
pub mod expr;
pub mod hyperbolic;
pub mod linalg;
pub mod qfield;
pub mod random;
pub mod repmod;
pub mod verify;
pub mod whittaker;
