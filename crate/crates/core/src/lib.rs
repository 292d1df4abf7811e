//! Combinatorial game values for pawn endgames.
//!
//! A pawn position is split into independent file spans, each span is
//! valued as a short partizan game, and the sum of those values decides the
//! winner under the last-mover-wins convention.

#![allow(clippy::should_implement_trait, clippy::mutable_key_type)]

pub mod analysis;
pub mod board;
pub mod corpus;
pub mod exec;
pub mod kernel;
pub mod valuation;
