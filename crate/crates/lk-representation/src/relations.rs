//! Exact verification of the defining relations of the BMW algebra on a
//! family of matrices.

use std::fmt;

use exact_rings::{Field, Matrix, Scalar};
use rayon::prelude::*;

use crate::build::LKMatrices;

/// Outcome of one relation family, checked over all admissible node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub instances: usize,
    /// Node tuples at which the relation failed.
    pub failures: Vec<Vec<usize>>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{:<16} {verdict} ({} instances)  {}", c.name, c.instances, c.statement)?;
        }
        Ok(())
    }
}

type Check<'a> = Box<dyn Fn(&[usize]) -> bool + Send + Sync + 'a>;

struct Family<'a> {
    name: &'static str,
    statement: &'static str,
    tuples: Vec<Vec<usize>>,
    holds: Check<'a>,
}

fn pairs_far(n: usize) -> Vec<Vec<usize>> {
    let mut v = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                v.push(vec![i, j]);
            }
        }
    }
    v
}

fn singles(n: usize) -> Vec<Vec<usize>> {
    (1..n).map(|i| vec![i]).collect()
}

fn up(n: usize) -> Vec<Vec<usize>> {
    (1..n.saturating_sub(1)).map(|i| vec![i]).collect()
}

fn down(n: usize) -> Vec<Vec<usize>> {
    (2..n).map(|i| vec![i]).collect()
}

/// Checks every relation with exact equality and reports each family.
pub fn verify_relations<F: Field>(m: &LKMatrices<F>) -> RelationReport {
    let n = m.n;
    let p = &m.params;
    let id = m.identity();
    let g = |i: usize| m.g(i);
    let e = |i: usize| m.e(i);
    let l = p.l.clone();
    let l_inv = p.l_inv.clone();
    let mm = p.m.clone();
    let x = p.x.clone();
    let mul = |a: &Matrix<F::El>, b: &Matrix<F::El>| a.mul(b);

    let families: Vec<Family<'_>> = vec![
        Family {
            name: "commute",
            statement: "g_i g_j = g_j g_i for |i-j| >= 2",
            tuples: pairs_far(n),
            holds: Box::new(|t| mul(g(t[0]), g(t[1])) == mul(g(t[1]), g(t[0]))),
        },
        Family {
            name: "braid",
            statement: "g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}",
            tuples: up(n),
            holds: Box::new(|t| {
                let (a, b) = (g(t[0]), g(t[0] + 1));
                mul(&mul(a, b), a) == mul(&mul(b, a), b)
            }),
        },
        Family {
            name: "e-definition",
            statement: "e_i = (l/m)(g_i^2 + m g_i - 1)",
            tuples: singles(n),
            holds: Box::new(|t| crate::build::e_from_g(p, g(t[0])) == *e(t[0])),
        },
        Family {
            name: "g-e-absorb",
            statement: "g_i e_i = l^{-1} e_i",
            tuples: singles(n),
            holds: Box::new(|t| mul(g(t[0]), e(t[0])) == e(t[0]).scale(&l_inv)),
        },
        Family {
            name: "e-g-e-up",
            statement: "e_i g_{i+1} e_i = l e_i",
            tuples: up(n),
            holds: Box::new(|t| mul(&mul(e(t[0]), g(t[0] + 1)), e(t[0])) == e(t[0]).scale(&l)),
        },
        Family {
            name: "e-g-e-down",
            statement: "e_i g_{i-1} e_i = l e_i",
            tuples: down(n),
            holds: Box::new(|t| mul(&mul(e(t[0]), g(t[0] - 1)), e(t[0])) == e(t[0]).scale(&l)),
        },
        Family {
            name: "e-g-absorb",
            statement: "e_i g_i = l^{-1} e_i",
            tuples: singles(n),
            holds: Box::new(|t| mul(e(t[0]), g(t[0])) == e(t[0]).scale(&l_inv)),
        },
        Family {
            name: "quadratic",
            statement: "g_i^2 = 1 - m g_i + m l^{-1} e_i",
            tuples: singles(n),
            holds: Box::new(|t| {
                let a = g(t[0]);
                let rhs = id.sub(&a.scale(&mm)).add(&e(t[0]).scale(&mm.mul(&l_inv)));
                mul(a, a) == rhs
            }),
        },
        Family {
            name: "inverse",
            statement: "g_i^{-1} = g_i + m - m e_i and g_i g_i^{-1} = 1",
            tuples: singles(n),
            holds: Box::new(|t| {
                let i = t[0];
                let formula = crate::build::ginv_from_g_e(p, g(i), e(i));
                formula == *m.ginv(i) && mul(g(i), m.ginv(i)) == id && mul(m.ginv(i), g(i)) == id
            }),
        },
        Family {
            name: "mixed-braid-up",
            statement: "g_i g_{i+1} e_i = e_{i+1} e_i",
            tuples: up(n),
            holds: Box::new(|t| {
                let i = t[0];
                mul(&mul(g(i), g(i + 1)), e(i)) == mul(e(i + 1), e(i))
            }),
        },
        Family {
            name: "mixed-braid-down",
            statement: "g_i g_{i-1} e_i = e_{i-1} e_i",
            tuples: down(n),
            holds: Box::new(|t| {
                let i = t[0];
                mul(&mul(g(i), g(i - 1)), e(i)) == mul(e(i - 1), e(i))
            }),
        },
        Family {
            name: "g-e-e-up",
            statement: "g_i e_{i+1} e_i = g_{i+1} e_i + m(e_i - e_{i+1} e_i)",
            tuples: up(n),
            holds: Box::new(|t| {
                let i = t[0];
                let ee = mul(e(i + 1), e(i));
                mul(g(i), &ee) == mul(g(i + 1), e(i)).add(&e(i).sub(&ee).scale(&mm))
            }),
        },
        Family {
            name: "g-e-e-down",
            statement: "g_i e_{i-1} e_i = g_{i-1} e_i + m(e_i - e_{i-1} e_i)",
            tuples: down(n),
            holds: Box::new(|t| {
                let i = t[0];
                let ee = mul(e(i - 1), e(i));
                mul(g(i), &ee) == mul(g(i - 1), e(i)).add(&e(i).sub(&ee).scale(&mm))
            }),
        },
        Family {
            name: "idempotent",
            statement: "e_i^2 = x e_i",
            tuples: singles(n),
            holds: Box::new(|t| mul(e(t[0]), e(t[0])) == e(t[0]).scale(&x)),
        },
        Family {
            name: "e-e-far",
            statement: "e_i e_j = 0 for |i-j| >= 2",
            tuples: pairs_far(n),
            holds: Box::new(|t| mul(e(t[0]), e(t[1])).is_zero()),
        },
    ];

    let checks = families
        .par_iter()
        .map(|fam| {
            let failures: Vec<Vec<usize>> = fam.tuples.par_iter().filter(|t| !(fam.holds)(t)).cloned().collect();
            RelationCheck { name: fam.name, statement: fam.statement, instances: fam.tuples.len(), failures }
        })
        .collect();
    RelationReport { n, checks }
}
