//! Jones polynomial of knots and links, computed three ways: the Kauffman
//! bracket state sum over planar diagrams, the Markov trace of the
//! Temperley-Lieb representation of a braid, and the skein relation used as
//! a cross-check.

pub mod laurent;
pub mod tl;
pub mod braid;
pub mod diagram;
pub mod jones;
pub mod cli;
