//! Weighted reflection factorizations of Coxeter elements: enumeration and closed forms.

pub mod crosscheck;
pub mod enumerate;
pub mod formulas;

pub use crosscheck::{frobenius_crosscheck_sn, gt_crosscheck_sn, young_chains};
pub use enumerate::{enumerate_series_formal, enumerate_series_numeric, specialize, Exec, MonomialTables, Target};
pub use formulas::{
    dihedral_closed_form, dihedral_reflection_labels, dihedral_reflection_tower, divisor_chain_spectrum,
    divisor_chain_weights, finer_formula_bn, finer_formula_gr1n, finer_matrix_gr1n, product_formula_for_tower,
    reduced_count, verify_dihedral, verify_main_theorem, verify_main_theorem_all_orderings, ReducedCount,
};
