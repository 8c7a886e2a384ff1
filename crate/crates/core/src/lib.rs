pub mod corpus;
pub mod fsm;
pub mod lexicon;
pub mod parser;
pub mod prover;
pub mod readings;
pub mod semantics;
pub mod syntax;
