pub mod game;
pub mod monoid;
pub mod notation;
pub mod numbers;
pub mod sprigs;
pub mod universe;
pub mod verify;

pub use game::{Arena, Convention, Game, GameError, Outcome, Player};
pub use numbers::{Color, ColorString, Dyadic, NumberError};
