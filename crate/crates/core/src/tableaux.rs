//! `B(lambda)` in type `A_n` as semistandard tableaux.
//!
//! A tableau is read row by row from the top, each row right to left; that
//! word is an element of `B(omega_1)^{⊗N}` under this crate's tensor
//! convention. On the word, letter `i` is an open bracket and `i+1` a close
//! bracket for color `i`; `f_i` turns the leftmost unmatched `i` into `i+1`
//! and `e_i` the rightmost unmatched `i+1` into `i`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::cartan::{CartanData, Weight};
use crate::crystal::{CrystalGraph, Provenance};
use crate::error::{Error, Result};

/// A semistandard Young tableau in English notation, entries `1..=n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn is_semistandard(&self, max_entry: u8) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
            && self.rows.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, &x)| {
                    (1..=max_entry).contains(&x)
                        && (c == 0 || row[c - 1] <= x)
                        && (r == 0 || self.rows[r - 1][c] < x)
                })
            })
    }

    /// Content converted to fundamental-weight coordinates:
    /// `wt_i = #i - #(i+1)`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut content = vec![0i64; rank + 2];
        for &x in self.rows.iter().flatten() {
            content[x as usize] += 1;
        }
        Weight((1..=rank).map(|i| content[i] - content[i + 1]).collect())
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    fn from_reading_word(shape: &[usize], word: &[u8]) -> Self {
        let mut rows = Vec::with_capacity(shape.len());
        let mut pos = 0;
        for &len in shape {
            let mut row = word[pos..pos + len].to_vec();
            row.reverse();
            rows.push(row);
            pos += len;
        }
        Tableau { rows }
    }
}

impl fmt::Display for Tableau {
    /// `[[1,1],[2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Partition with `c_j` columns of height `j` (row lengths, zero rows dropped).
pub fn shape_of(lam: &Weight) -> Vec<usize> {
    let c = lam.coords();
    (0..c.len())
        .map(|k| c[k..].iter().map(|&x| x as usize).sum::<usize>())
        .filter(|&len| len > 0)
        .collect()
}

/// Unmatched positions of `i` (open) and `i+1` (close) for color `i`.
fn unmatched(word: &[u8], color: usize) -> (Vec<usize>, Vec<usize>) {
    let open = (color + 1) as u8;
    let close = open + 1;
    let mut opens = Vec::new();
    let mut closes = Vec::new();
    for (p, &x) in word.iter().enumerate() {
        if x == open {
            opens.push(p);
        } else if x == close && opens.pop().is_none() {
            closes.push(p);
        }
    }
    (opens, closes)
}

/// `f_i` on a word of `B(omega_1)^{⊗N}`.
pub fn word_f(word: &[u8], color: usize) -> Option<Vec<u8>> {
    let (opens, _) = unmatched(word, color);
    let &p = opens.first()?;
    let mut out = word.to_vec();
    out[p] += 1;
    Some(out)
}

/// `e_i` on a word of `B(omega_1)^{⊗N}`.
pub fn word_e(word: &[u8], color: usize) -> Option<Vec<u8>> {
    let (_, closes) = unmatched(word, color);
    let &p = closes.last()?;
    let mut out = word.to_vec();
    out[p] -= 1;
    Some(out)
}

/// All semistandard tableaux of `shape` with entries `1..=max_entry`, in
/// lexicographic order of their rows (the superstandard tableau first).
pub fn semistandard_tableaux(shape: &[usize], max_entry: u8) -> Vec<Tableau> {
    fn fill(
        max_entry: u8,
        cell: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<Tableau>,
    ) {
        if cell == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[cell];
        let lo_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for x in lo_left.max(lo_above)..=max_entry {
            rows[r].push(x);
            fill(max_entry, cell + 1, cells, rows, out);
            rows[r].pop();
        }
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(max_entry, 0, &cells, &mut rows, &mut out);
    out
}

/// `B(lambda)` for type `A_n` together with the tableau of each element.
/// Element 0 is the highest-weight (superstandard) tableau.
pub fn build_with_tableaux(
    c: &Arc<CartanData>,
    lam: &Weight,
) -> Result<(CrystalGraph, Vec<Tableau>)> {
    if !c.cartan_type().is_type_a() {
        return Err(Error::NoModel(c.cartan_type().to_string()));
    }
    c.check_dominant(lam)?;
    let n = c.rank();
    let max_entry = u8::try_from(n + 1).map_err(|_| Error::Overflow("tableau entries"))?;
    let shape = shape_of(lam);
    let tableaux = semistandard_tableaux(&shape, max_entry);
    let index: HashMap<&Tableau, usize> =
        tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (k, t) in tableaux.iter().enumerate() {
        let word = t.reading_word();
        for i in 0..n {
            if let Some(next) = word_f(&word, i) {
                let target = Tableau::from_reading_word(&shape, &next);
                let &to = index.get(&target).ok_or_else(|| {
                    Error::InvalidCrystal(format!("f_{} left the tableau set at {t}", i + 1))
                })?;
                edges.push((i, k, to));
            }
        }
    }
    let weights = tableaux.iter().map(|t| t.weight(n)).collect();
    let g = CrystalGraph::from_edges(c.clone(), weights, edges, Provenance::Tableaux)?;
    Ok((g, tableaux))
}

/// `B(lambda)` for type `A_n`.
pub fn build_type_a(c: &Arc<CartanData>, lam: &Weight) -> Result<CrystalGraph> {
    build_with_tableaux(c, lam).map(|(g, _)| g)
}

/// Weyl dimension formula `prod_beta (lambda + rho, beta) / (rho, beta)`,
/// exact, for any finite type.
pub fn dimension_oracle(c: &CartanData, lam: &Weight) -> Result<u128> {
    c.check_dominant(lam)?;
    let rho = c.rho();
    let shifted = &rho + lam;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for beta in c.positive_roots() {
        let top = c.root_weight_form(beta, &shifted) as u128;
        let bottom = c.root_weight_form(beta, &rho) as u128;
        num = num
            .checked_mul(top)
            .ok_or(Error::Overflow("dimension formula"))?;
        den = den
            .checked_mul(bottom)
            .ok_or(Error::Overflow("dimension formula"))?;
        let g = num_integer::gcd(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::Overflow(
            "dimension formula did not reduce to an integer",
        ));
    }
    Ok(num)
}
