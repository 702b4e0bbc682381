use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid structure-constant table: {0}")]
    InvalidTable(String),

    #[error("Leibniz identity fails on basis triple ({}, {}, {})", .0[0], .0[1], .0[2])]
    NotLeibniz([usize; 3]),

    #[error("algebra is not a Lie algebra")]
    NotLie,

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("algebra is not semisimple")]
    NotSemisimple,

    #[error("a simple summand does not split over the rationals")]
    NonSplitUnsupported,

    #[error("h does not act diagonally with integer weights on the module")]
    NotSemisimpleAction,

    #[error("module axiom fails on basis pair ({a}, {b}) of component `{component}`")]
    ModuleAxiom {
        component: String,
        a: usize,
        b: usize,
    },

    #[error("actions of components `{first}` and `{second}` do not commute")]
    NonCommuting { first: String, second: String },

    #[error("component lists of modules do not match")]
    ComponentMismatch,

    #[error("unknown component `{0}`")]
    UnknownComponent(String),

    #[error("component `{0}` is not a canonical sl2 copy")]
    NotSl2Component(String),

    #[error("component `{0}` is not a simple Lie algebra")]
    NotSimpleComponent(String),

    #[error("irreducibility over `{0}` is undecidable without a declared attribute")]
    UndecidableIrreducibility(String),

    #[error("Levi layout is inconsistent with the table: {0}")]
    LayoutInconsistent(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
