//! Instance generators: the hardness constructions, the OV lower-bound
//! matrix, and planted Yes-instances.

mod bmatrix;
mod cnf;
mod conrmc_r2;
mod one_in_three;
mod ov;
mod planted;
mod sat3b2;

pub use bmatrix::{gamma_b, gen_a, gen_a_swapped, gen_b, gen_b_offsets, width_b, GadgetStack};
pub use cnf::{conflicts, CnfFormula};
pub use conrmc_r2::{conrmc_r2_block, reduce_conrmc_r2};
pub use one_in_three::{one_in_three_matrix, reduce_1in3sat, OneInThreeReduction};
pub use ov::{gen_ov, OvInstance};
pub use planted::{
    erase, plant_ball, plant_diameter3, plant_from, plant_sunflower_matrix, plant_yes_instance, random_complete,
    Diameter3Shape, PlantedInstance,
};
pub use sat3b2::{reduce_3b2sat, reduce_3b2sat_with, sat3b2_matrix, MultiplierRule, PairClass, Sat3b2Reduction};
