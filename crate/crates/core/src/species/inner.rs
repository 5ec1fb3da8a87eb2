//! Inner plethysm, computed degree by degree through fix counts.
//!
//! For `g` homogeneous of degree `n` with character `χ(μ) = fix g[μ]`,
//! `p_λ[χ](μ) = Π_k χ(μ^k)^{m_k(λ)}` and `f ⊛ g = Σ_{μ ⊢ n} f[χ](μ) p_μ / z_μ`.
//! Every degree up to the bound is processed, including degrees where `g`
//! vanishes: there `χ = 0` and only the constant term of `f` survives.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multisort::BiSeries;
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::{z_rat, PSeries, Rational};

fn degree_range(bound: Option<usize>, top: Option<usize>, f: &PSeries) -> (usize, Option<usize>) {
    match bound {
        Some(b) => (b, Some(b)),
        None => {
            let top = top.unwrap_or(0);
            // A constant term of `f` contributes in every degree; stop at the
            // top degree of `g`.
            let out = (!f.constant_term().is_zero()).then_some(top);
            (top, out)
        }
    }
}

/// `f ⊛ g` for a polynomial `f`.
pub fn inner_plethysm(f: &PSeries, g: &PSeries) -> Result<PSeries> {
    if !f.is_exact() {
        return Err(Error::NotPolynomial("inner plethysm"));
    }
    let (top, bound) = degree_range(g.bound(), g.max_degree(), f);
    let mut terms = Vec::new();
    for n in 0..=top {
        let parts = enumerate_partitions(n);
        let chi: HashMap<&Partition, Rational> = parts.iter().map(|nu| (nu, g.fix_at(nu))).collect();
        for mu in &parts {
            let mut value = Rational::zero();
            for (lambda, c) in f.terms() {
                let mut prod = c.clone();
                for (k, m) in lambda.multiplicities() {
                    prod *= num_traits::pow(chi[&mu.power(k)].clone(), m);
                    if prod.is_zero() {
                        break;
                    }
                }
                value += prod;
            }
            terms.push((mu.clone(), value / z_rat(mu)));
        }
    }
    Ok(PSeries::from_terms(bound, terms))
}

/// `f ⊛_Y g`: inner plethysm acting on the `y` sort, with the Adams
/// operations also acting on the `x` coefficients.
pub fn inner_plethysm_y(f: &PSeries, g: &BiSeries) -> Result<BiSeries> {
    if !f.is_exact() {
        return Err(Error::NotPolynomial("inner plethysm in Y"));
    }
    let top_y = g.terms().map(|((_, y), _)| y.size()).max();
    let (top, bound_y) = degree_range(g.bound_y(), top_y, f);
    let bound_x = g.bound_x();
    let sections = g.y_sections();
    let mut out_sections = Vec::new();
    for n in 0..=top {
        let parts = enumerate_partitions(n);
        // χ(ν) = z_ν · (x-section at ν).
        let chi: HashMap<&Partition, PSeries> = parts
            .iter()
            .map(|nu| {
                let s = sections
                    .get(nu)
                    .map(|s| s.scale(&z_rat(nu)))
                    .unwrap_or_else(|| PSeries::zero(bound_x));
                (nu, s)
            })
            .collect();
        let unit = {
            let one = PSeries::one();
            one.truncate_opt(bound_x)
        };
        let computed: Vec<(Partition, PSeries)> = parts
            .par_iter()
            .map(|mu| {
                let mut adams: HashMap<usize, PSeries> = HashMap::new();
                let mut total = PSeries::zero(bound_x);
                for (lambda, c) in f.terms() {
                    let mut prod = unit.clone();
                    for (l, m) in lambda.multiplicities() {
                        let a = adams
                            .entry(l)
                            .or_insert_with(|| chi[&mu.power(l)].adams(l).truncate_opt(bound_x));
                        prod = prod.multiply(&a.pow(m));
                        if prod.is_zero() {
                            break;
                        }
                    }
                    total = &total + &prod.scale(c);
                }
                let section = total.scale(&(Rational::one() / z_rat(mu)));
                (mu.clone(), section)
            })
            .collect();
        out_sections.extend(computed);
    }
    Ok(BiSeries::from_y_sections(bound_x, bound_y, out_sections))
}
