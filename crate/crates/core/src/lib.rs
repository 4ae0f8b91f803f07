pub mod error;
pub mod families;
pub mod graph;
pub mod optimize;
pub mod products;
pub mod resolving;
pub mod verify;
