//! Physics applications of the closed forms.
//!
//! Quantum problems use `ħ = m = 1`; the single-δ well has width `a = 1`
//! and the double-δ problem is parameterized by `s = a/b` alone.

pub mod delta;
pub mod diffraction;
pub mod spring;
pub mod wien;

pub use delta::{double_delta_energies, single_delta_even_energy, DoubleDeltaEnergies};
pub use diffraction::{angle_to_u, diffraction_maxima, diffraction_profile, DiffractionGeometry};
pub use spring::{spring_frequency, spring_xi, SpringSystem};
pub use wien::{planck_profile, wien_constant, wien_x0, PhysicalConstants, WienMethod};
