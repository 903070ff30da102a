//! Counting and enumeration per family and method.

use clap::ValueEnum;
use guillotine_core::separability::enumeration_size;
use guillotine_core::series::{
    alternating_explicit, alternating_gf, boundary_gf, boundary_square_explicit,
    count_guillotine_recursive, count_separable_explicit, guillotine_explicit, guillotine_gf,
    separable_axes, separable_count, wincc_gf, wincc_recurrence, window_avoiding_explicit,
    window_avoiding_gf,
};
use guillotine_core::{
    alternating_predicate, boundary_predicate, count_class, enumerate_colored_trees,
    enumerate_dperms, is_separable, window_predicate, BigUint, ColoredTree, DPermutation, Error,
    PatternSpec,
};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Separable d-permutations of [n] (needs --d).
    Separable,
    /// Guillotine partitions of a q-box by n cuts (needs --q).
    Guillotine,
    /// Boundary guillotine partitions of a d-box (needs --d).
    Boundary,
    /// m-alternating guillotine partitions (needs --d and --m).
    Alternating,
    /// Window-avoiding guillotine partitions (needs --d).
    Window,
    /// Square partitions avoiding both window orientations.
    Wincc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gf,
    Recursive,
    Explicit,
    Brute,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::Recursive => "recursive",
            Method::Explicit => "explicit",
            Method::Brute => "brute",
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Separable => "separable",
            Family::Guillotine => "guillotine",
            Family::Boundary => "boundary",
            Family::Alternating => "alternating",
            Family::Window => "window",
            Family::Wincc => "wincc",
        }
    }

    /// The parameter that labels table columns, if any.
    pub fn column_parameter(self) -> Option<&'static str> {
        match self {
            Family::Guillotine => Some("q"),
            Family::Wincc => None,
            _ => Some("d"),
        }
    }
}

/// Fixed parameters of one count. `dim` is `d` or `q` depending on the family.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub family: Family,
    pub dim: u32,
    pub m: u32,
    pub max_work: u64,
}

fn wincc_patterns() -> Vec<PatternSpec> {
    ["2413", "3142", "2143", "3412"]
        .iter()
        .map(|s| s.parse().expect("fixed patterns"))
        .collect()
}

pub fn methods(p: &Params) -> Vec<Method> {
    use Method::*;
    match p.family {
        Family::Separable | Family::Guillotine => vec![Gf, Recursive, Explicit, Brute],
        Family::Boundary if p.dim == 2 => vec![Gf, Explicit, Brute],
        Family::Boundary => vec![Gf, Brute],
        Family::Alternating | Family::Window => vec![Gf, Explicit, Brute],
        Family::Wincc => vec![Gf, Recursive, Brute],
    }
}

fn nth(
    series: guillotine_core::Result<guillotine_core::TruncatedPowerSeries>,
    n: usize,
) -> Result<BigUint, Failure> {
    Ok(series?.to_counts()?.swap_remove(n))
}

fn small_dim(v: u32, what: &str) -> Result<u32, Failure> {
    if v > 16 {
        return Err(Failure::Usage(format!(
            "{what} = {v} is too large for enumeration"
        )));
    }
    Ok(v)
}

pub fn count(p: &Params, method: Method, n: usize) -> Result<BigUint, Failure> {
    if !methods(p).contains(&method) {
        return Err(Failure::Usage(format!(
            "method {} does not apply to family {}{}",
            method.name(),
            p.family.name(),
            if p.family == Family::Boundary {
                " with d != 2"
            } else {
                ""
            }
        )));
    }
    let (dim, m) = (p.dim, p.m);
    match (p.family, method) {
        (Family::Separable, Method::Gf) => Ok(separable_count(dim, n)?),
        (Family::Separable, Method::Recursive) => {
            if n == 0 {
                return Err(Error::Domain("separable d-permutations need n >= 1".into()).into());
            }
            Ok(count_guillotine_recursive(separable_axes(dim)?, n - 1)?)
        }
        (Family::Separable, Method::Explicit) => Ok(count_separable_explicit(dim, n)?),
        (Family::Separable, Method::Brute) => {
            separable_axes(dim)?;
            let d = small_dim(dim, "d")? as usize;
            guard(enumeration_size(d, n), p.max_work)?;
            Ok(BigUint::from(
                enumerate_dperms(d, n)?.filter(is_separable).count(),
            ))
        }
        (Family::Guillotine, Method::Gf) => nth(guillotine_gf(u64::from(dim), n), n),
        (Family::Guillotine, Method::Recursive) => {
            Ok(count_guillotine_recursive(u64::from(dim), n)?)
        }
        (Family::Guillotine, Method::Explicit) => Ok(guillotine_explicit(u64::from(dim), n)?),
        (Family::Guillotine, Method::Brute) => count_trees(p, n, |_| true),
        (Family::Boundary, Method::Gf) => nth(boundary_gf(dim, n), n),
        (Family::Boundary, Method::Explicit) => Ok(boundary_square_explicit(n)),
        (Family::Boundary, Method::Brute) => count_trees(p, n, boundary_predicate),
        (Family::Alternating, Method::Gf) => nth(alternating_gf(dim, m, n), n),
        (Family::Alternating, Method::Explicit) => Ok(alternating_explicit(dim, m, n)?),
        (Family::Alternating, Method::Brute) => {
            count_trees(p, n, |t| alternating_predicate(t, m as usize))
        }
        (Family::Window, Method::Gf) => nth(window_avoiding_gf(dim, n), n),
        (Family::Window, Method::Explicit) => Ok(window_avoiding_explicit(dim, n)?),
        (Family::Window, Method::Brute) => count_trees(p, n, window_predicate),
        (Family::Wincc, Method::Gf) => Ok(wincc_gf(n).to_counts()?.swap_remove(n)),
        (Family::Wincc, Method::Recursive) => Ok(wincc_recurrence(n).swap_remove(n)),
        (Family::Wincc, Method::Brute) => Ok(BigUint::from(count_class(
            2,
            n + 1,
            &wincc_patterns(),
            p.max_work,
        )?)),
        _ => unreachable!("filtered by methods()"),
    }
}

fn guard(size: Option<u128>, max_work: u64) -> Result<(), Failure> {
    match size {
        Some(s) if s <= u128::from(max_work) => Ok(()),
        _ => Err(Error::Resource {
            required: size.map_or_else(|| "more than 2^128".to_string(), |s| s.to_string()),
            limit: max_work,
        }
        .into()),
    }
}

/// Colors and predicate of the trees behind a tree family.
fn tree_colors(p: &Params) -> Result<u32, Failure> {
    match p.family {
        Family::Guillotine => small_dim(p.dim, "q"),
        Family::Boundary | Family::Alternating | Family::Window => small_dim(p.dim, "d"),
        _ => unreachable!("not a tree family"),
    }
}

fn tree_guard(colors: u32, n: usize, max_work: u64) -> Result<(), Failure> {
    let total = nth(guillotine_gf(u64::from(colors), n), n)?;
    guard(u128::try_from(total).ok(), max_work)
}

fn count_trees(p: &Params, n: usize, f: impl Fn(&ColoredTree) -> bool) -> Result<BigUint, Failure> {
    let colors = tree_colors(p)?;
    tree_guard(colors, n, p.max_work)?;
    Ok(BigUint::from(
        enumerate_colored_trees(colors, n, f)?.count(),
    ))
}

/// One enumerated object.
pub enum Item {
    Tree(ColoredTree),
    Perm(DPermutation),
}

/// Streams the objects counted by `count(p, Brute, n)` to `emit`.
pub fn enumerate(p: &Params, n: usize, mut emit: impl FnMut(Item)) -> Result<(), Failure> {
    let m = p.m as usize;
    match p.family {
        Family::Separable => {
            separable_axes(p.dim)?;
            let d = small_dim(p.dim, "d")? as usize;
            guard(enumeration_size(d, n), p.max_work)?;
            enumerate_dperms(d, n)?
                .filter(is_separable)
                .for_each(|q| emit(Item::Perm(q)));
        }
        Family::Wincc => {
            guard(enumeration_size(2, n + 1), p.max_work)?;
            let pats = wincc_patterns();
            for q in enumerate_dperms(2, n + 1)? {
                let mut keep = true;
                for pat in &pats {
                    keep &= guillotine_core::avoids(&q, pat)?;
                }
                if keep {
                    emit(Item::Perm(q));
                }
            }
        }
        family => {
            let colors = tree_colors(p)?;
            tree_guard(colors, n, p.max_work)?;
            if family == Family::Alternating && m < 2 {
                return Err(Failure::Usage("--m must be at least 2".into()));
            }
            let keep = |t: &ColoredTree| match family {
                Family::Boundary => boundary_predicate(t),
                Family::Alternating => alternating_predicate(t, m),
                Family::Window => window_predicate(t),
                _ => true,
            };
            enumerate_colored_trees(colors, n, keep)?.for_each(|t| emit(Item::Tree(t)));
        }
    }
    Ok(())
}
