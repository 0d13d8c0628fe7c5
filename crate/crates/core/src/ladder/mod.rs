//! Constructive route: `|J, M⟩` states built over the product basis with
//! exact ladder-operator action.

pub mod alpha;
pub mod construct;
pub mod state;

pub use alpha::{alpha_sequence, AlphaSequence};
pub use construct::{
    beta_closed_form, highest_weight_state, stretched_multiplet_state, BetaExpansion,
};
pub use state::{lower_normalized, lowering_norm, ProductBasisIndex, StateVector};
