//! The named extremal graphs.
//!
//! Labelling is deterministic: the hub is `0`, the star leaves follow with
//! the apex-adjacent leaves first, then the apex, and every pendant added by
//! a later step takes the next free label. Each constructor returns the
//! apex as its witness; for the tree families it is the last added leaf.

use crate::error::{Error, Result};
use crate::formulas::{self, ClosedFormValue};
use crate::graph::{Graph, QuasiTreeWitness, Vertex};
use crate::report::{ClaimId, DetailRecord, Number, ParamRange, VerificationReport};
use crate::sombor::sombor_index;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Star `S_n`.
    S,
    /// `S'_n`: a star with one leaf extended by a pendant.
    Sprime,
    /// `S''_n`: `S'_{n-1}` with an extra leaf on its 2-vertex.
    Sdprime,
    Q,
    Qstar,
    Qprime,
    Qdprime,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::S,
        Family::Sprime,
        Family::Sdprime,
        Family::Q,
        Family::Qstar,
        Family::Qprime,
        Family::Qdprime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::Sprime => "Sprime",
            Family::Sdprime => "Sdprime",
            Family::Q => "Q",
            Family::Qstar => "Qstar",
            Family::Qprime => "Qprime",
            Family::Qdprime => "Qdprime",
        }
    }

    pub fn is_tree_family(self) -> bool {
        matches!(self, Family::S | Family::Sprime | Family::Sdprime)
    }

    /// Smallest supported order.
    pub fn min_order(self) -> usize {
        match self {
            Family::S | Family::Q => 3,
            Family::Sprime | Family::Qstar => 4,
            Family::Qprime => 5,
            Family::Sdprime | Family::Qdprime => 6,
        }
    }

    /// Valid apex degrees at order `n` (the tree families only admit 1).
    pub fn valid_k(self, n: usize) -> Vec<usize> {
        if n < self.min_order() {
            return Vec::new();
        }
        match self {
            Family::S | Family::Sprime | Family::Sdprime => vec![1],
            Family::Q | Family::Qprime => (1..n).collect(),
            Family::Qstar => (1..=n - 2).collect(),
            Family::Qdprime if n >= 7 => vec![1, 3, n - 1],
            Family::Qdprime => vec![1, 3],
        }
    }

    fn range_description(self) -> &'static str {
        match self {
            Family::S => "n >= 3",
            Family::Sprime => "n >= 4",
            Family::Sdprime => "n >= 6",
            Family::Q => "n >= 3, 1 <= k <= n-1",
            Family::Qstar => "n >= 4, 1 <= k <= n-2",
            Family::Qprime => "n >= 5, 1 <= k <= n-1",
            Family::Qdprime => "k in {1, 3} with n >= 6, or k = n-1 with n >= 7",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}; expected one of S, Sprime, Sdprime, Q, Qstar, Qprime, Qdprime"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Apex degree; forced to 1 for the tree families.
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        let k = if family.is_tree_family() { 1 } else { k };
        if !family.valid_k(n).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "{family} is defined for {}; got n={n} k={k}",
                family.range_description()
            )));
        }
        Ok(FamilySpec { family, n, k })
    }

    /// Every valid member with `n_min <= n <= n_max`.
    pub fn all(n_min: usize, n_max: usize) -> impl Iterator<Item = FamilySpec> {
        Family::ALL.into_iter().flat_map(move |family| {
            (n_min..=n_max).flat_map(move |n| family.valid_k(n).into_iter().map(move |k| FamilySpec { family, n, k }))
        })
    }

    /// Conventional name, e.g. `Q'_{6,2}` or `S''_7`.
    pub fn display_name(&self) -> String {
        let (base, marks) = match self.family {
            Family::S => ("S", ""),
            Family::Sprime => ("S", "'"),
            Family::Sdprime => ("S", "''"),
            Family::Q => ("Q", ""),
            Family::Qstar => ("Q", "*"),
            Family::Qprime => ("Q", "'"),
            Family::Qdprime => ("Q", "''"),
        };
        if self.family.is_tree_family() {
            format!("{base}{marks}_{}", self.n)
        } else {
            format!("{base}{marks}_{{{},{}}}", self.n, self.k)
        }
    }

    /// The closed form this family member attains.
    pub fn closed_form(&self) -> Result<ClosedFormValue> {
        let FamilySpec { family, n, k } = *self;
        match family {
            Family::S => formulas::phi(n, 1),
            Family::Sprime => formulas::phi_star(n, 1),
            Family::Sdprime => formulas::phi_dprime(n, 1),
            Family::Q => formulas::phi(n, k),
            Family::Qstar => formulas::phi_star(n, k),
            Family::Qprime => formulas::phi_prime(n, k),
            Family::Qdprime => formulas::phi_dprime(n, k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name())
    }
}

struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    /// Star `S_{order}` with hub 0 and leaves `1..order`.
    fn star(order: usize) -> Self {
        Builder {
            n: order,
            edges: (1..order).map(|i| (0, i)).collect(),
        }
    }

    /// Adds a new vertex joined to `targets` and returns it.
    fn attach(&mut self, targets: &[Vertex]) -> Vertex {
        let v = self.n;
        self.n += 1;
        self.edges.extend(targets.iter().map(|&t| (t, v)));
        v
    }

    fn finish(self, apex: Vertex) -> (Graph, QuasiTreeWitness) {
        let g = Graph::from_edges_unchecked(self.n, self.edges);
        let k = g.deg(apex);
        (g, QuasiTreeWitness { apex, k })
    }
}

/// `Q_{n,k}`: star `S_{n-1}` plus an apex joined to the hub and to leaves
/// `1..k`. The apex is returned alongside.
fn q(n: usize, k: usize) -> (Builder, Vertex) {
    let mut b = Builder::star(n - 1);
    let mut targets = vec![0];
    targets.extend(1..k);
    let apex = b.attach(&targets);
    (b, apex)
}

fn q_prime(n: usize, k: usize) -> (Builder, Vertex) {
    match k {
        1 => {
            let mut b = Builder::star(n - 1);
            let v = b.attach(&[1]);
            (b, v)
        }
        2 => {
            // pendant on the triangle's other 2-vertex, leaf 1
            let (mut b, apex) = q(n - 1, 2);
            b.attach(&[1]);
            (b, apex)
        }
        _ => {
            // one new vertex joined to the 2-vertex at leaf 1 and to the apex
            let (mut b, apex) = q(n - 1, k - 1);
            b.attach(&[1, apex]);
            (b, apex)
        }
    }
}

pub fn construct(spec: FamilySpec) -> Result<(Graph, QuasiTreeWitness)> {
    let FamilySpec { family, n, k } = FamilySpec::new(spec.family, spec.n, spec.k)?;
    let (builder, apex) = match family {
        Family::S => {
            let mut b = Builder::star(n - 1);
            let v = b.attach(&[0]);
            (b, v)
        }
        Family::Sprime => q_prime(n, 1),
        Family::Sdprime => {
            let mut b = Builder::star(n - 2);
            b.attach(&[1]);
            let v = b.attach(&[1]);
            (b, v)
        }
        Family::Q => q(n, k),
        Family::Qstar => {
            let mut b = Builder::star(n - 1);
            let targets: Vec<Vertex> = (1..=k).collect();
            let apex = b.attach(&targets);
            (b, apex)
        }
        Family::Qprime => q_prime(n, k),
        Family::Qdprime => match k {
            1 => return construct(FamilySpec::new(Family::Sdprime, n, 1)?),
            3 => {
                // pendant on leaf 1, a common neighbour of hub and apex
                let (mut b, apex) = q(n - 1, 3);
                b.attach(&[1]);
                (b, apex)
            }
            _ => {
                // leaf 1 is the 3-vertex of Q'_{n-1,n-2}
                let (mut b, apex) = q_prime(n - 1, n - 2);
                b.attach(&[1, apex]);
                (b, apex)
            }
        },
    };
    let (g, witness) = builder.finish(apex);
    debug_assert_eq!(witness.k, k);
    debug_assert!(witness.verify(&g), "{spec:?} witness");
    debug_assert!(
        (sombor_index(&g).value - spec_closed_form_value(family, n, k)).abs() < 1e-9,
        "{spec:?} disagrees with its closed form"
    );
    Ok((g, witness))
}

fn spec_closed_form_value(family: Family, n: usize, k: usize) -> f64 {
    FamilySpec { family, n, k }.closed_form().map(|v| v.value).unwrap_or(f64::NAN)
}

/// Agreement of every constructed family member with its closed form and
/// witness, for `5 <= n <= n_max`.
pub fn check_constructor_formula(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(ClaimId::ConstructorFormula, ParamRange::new(5, n_max, "all valid k per family"));
    for spec in FamilySpec::all(5, n_max) {
        let (g, witness) = construct(spec).expect("valid member");
        let so = sombor_index(&g);
        let form = spec.closed_form().expect("valid member");
        let gap = (so.value - form.value).abs();
        let exact = so.radicals() == &form.radicals();
        let ok = gap < 1e-9 && exact && witness.verify(&g) && g.n() == spec.n;
        report.check(ok, || {
            DetailRecord::at(spec.n, spec.k, format!("SO({spec}) = {}", form.name), false)
                .values(Number::exact(&form.radicals()), Number::from(&so))
        });
    }
    report.finish(started)
}
