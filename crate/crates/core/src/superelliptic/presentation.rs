//! Generator actions and relations of `G = Aut(X)` over `H = ⟨τ⟩`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::equation::{apply_automorphism, Action, CurveEquation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub action: Action,
}

/// The power of `τ` a relation is stated to equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum StatedPower {
    Exact(u64),
    /// Some unspecified member of the list.
    OneOf(Vec<u64>),
    /// The relation is listed for completeness only.
    None,
}

/// `(g_1 g_2 ⋯)^e = τ^k`, where the product applies `g_last` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub word: Vec<usize>,
    pub exponent: u32,
    pub stated: StatedPower,
    /// `None` when a letter has no constructed multiplier.
    pub computed: Option<u64>,
}

impl Relation {
    /// `true` unless the stated and computed powers are both known and
    /// disagree.
    pub fn consistent(&self) -> bool {
        match (&self.stated, self.computed) {
            (StatedPower::Exact(k), Some(c)) => *k == c,
            (StatedPower::OneOf(ks), Some(c)) => ks.contains(&c),
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutPresentation {
    n: u64,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    abelian: bool,
}

impl AutPresentation {
    /// Starts a presentation with `τ` as generator 0.
    pub fn new(n: u64) -> Self {
        Self {
            n,
            generators: vec![Generator {
                name: "tau".into(),
                action: Action::tau(n),
            }],
            relations: vec![],
            abelian: true,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub(crate) fn push_generator(&mut self, name: &str, action: Action) -> usize {
        self.generators.push(Generator {
            name: name.into(),
            action,
        });
        self.generators.len() - 1
    }

    pub(crate) fn set_abelian(&mut self, abelian: bool) {
        self.abelian = abelian;
    }

    /// Evaluates the word by composition and records the relation.
    pub(crate) fn push_relation(&mut self, word: Vec<usize>, exponent: u32, stated: StatedPower) {
        let computed = self.evaluate(&word, exponent);
        let stated = match stated {
            StatedPower::Exact(k) => StatedPower::Exact(k % self.n),
            other => other,
        };
        self.relations.push(Relation {
            word,
            exponent,
            stated,
            computed,
        });
    }

    fn evaluate(&self, word: &[usize], exponent: u32) -> Option<u64> {
        let mut base = Action::identity();
        for &g in word {
            base = base.compose(&self.generators[g].action)?;
        }
        base.pow(exponent)?.as_tau_power(self.n)
    }

    /// The text form of a relation, e.g. `(AB)^3`.
    pub fn word_text(&self, rel: &Relation) -> String {
        let letters: String = rel
            .word
            .iter()
            .map(|&g| self.generators[g].name.as_str())
            .collect();
        if rel.word.len() == 1 {
            format!("{letters}^{}", rel.exponent)
        } else {
            format!("({letters})^{}", rel.exponent)
        }
    }

    /// `τg = gτ` for every generator with a constructed multiplier.
    pub fn tau_is_central(&self) -> bool {
        let tau = &self.generators[0].action;
        self.generators.iter().skip(1).all(|g| {
            match (tau.compose(&g.action), g.action.compose(tau)) {
                (Some(l), Some(r)) => l.same_action(&r).unwrap_or(false),
                _ => true,
            }
        })
    }

    /// `apply_automorphism` for each generator; unconstructed multipliers
    /// report `None`.
    pub fn check_against(&self, eq: &CurveEquation) -> Vec<(String, Option<bool>)> {
        self.generators
            .iter()
            .map(|g| {
                let ok = g
                    .action
                    .multiplier
                    .as_explicit()
                    .map(|_| apply_automorphism(eq, &g.action));
                (g.name.clone(), ok)
            })
            .collect()
    }
}

impl fmt::Display for AutPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        write!(f, "<{} : tau^{} = 1", names.join(", "), self.n)?;
        for rel in &self.relations {
            let rhs = match (&rel.stated, rel.computed) {
                (_, Some(c)) => format!("tau^{c}"),
                (StatedPower::OneOf(ks), None) => format!("tau^l, l in {ks:?}"),
                (StatedPower::Exact(k), None) => format!("tau^{k}"),
                (StatedPower::None, None) => "?".into(),
            };
            write!(f, ", {} = {rhs}", self.word_text(rel))?;
        }
        write!(f, ", tau central>")
    }
}

/// Invariant factors of an abelian presentation, via Smith normal form of
/// the relation matrix (`τ^n = 1` and `g^e = τ^k` for each relation).
pub fn abelian_invariants(pres: &AutPresentation) -> Result<Vec<u64>> {
    if !pres.is_abelian() {
        return Err(Error::Unsupported(
            "invariant factors need an abelian presentation".into(),
        ));
    }
    let cols = pres.generators.len();
    let mut rows = vec![{
        let mut r = vec![0i128; cols];
        r[0] = pres.n as i128;
        r
    }];
    for rel in &pres.relations {
        if rel.word.len() != 1 {
            return Err(Error::Unsupported(format!(
                "relation {} is not a power of one generator",
                pres.word_text(rel)
            )));
        }
        let k = rel.computed.ok_or_else(|| {
            Error::Unsupported(format!(
                "relation {} was not evaluated",
                pres.word_text(rel)
            ))
        })?;
        let mut r = vec![0i128; cols];
        r[rel.word[0]] += rel.exponent as i128;
        r[0] -= k as i128;
        rows.push(r);
    }
    let diag = smith_diagonal(rows, cols);
    if diag.len() < cols || diag.contains(&0) {
        return Err(Error::Inconsistent(
            "relations do not present a finite group".into(),
        ));
    }
    Ok(diag
        .into_iter()
        .filter(|&d| d != 1)
        .map(|d| d as u64)
        .collect())
}

/// Diagonal of the Smith normal form (nonnegative, each dividing the next).
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero entry in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let p = m[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0)) {
            for j in t..cols {
                let v = m[i][j];
                m[t][j] += v;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}
