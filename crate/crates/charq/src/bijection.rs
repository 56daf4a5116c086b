//! The box-and-circle correspondence for complement tuples of the type-B
//! Shi family: an independent combinatorial route to the count
//! `(q - 2m)^m`.
//!
//! A placement assigns the labels `1..=m` to boxes arranged in two rows
//! of `B` boxes each (upper row first, then lower, left to right; the
//! upper-left box is always off limits). Decoding lays circles into the
//! boxes — each box pair contributes a leading unlabeled circle, the
//! upper box's labels ascending, then the lower box's labels descending,
//! with an unlabeled mirror opposite every labeled circle and no leading
//! circle in the lower-left box — and then numbers all circles clockwise
//! from the upper-left corner: the upper row left to right, then (for
//! even `q`) a side circle carrying `q/2`, then the lower row right to
//! left. A label's number is its coordinate.
//!
//! Odd `q` uses `(q+1)/2 - m` boxes per side. Even `q` splits by whether
//! some coordinate equals `q/2`: if none does, `q/2 - m` boxes per side
//! plus an unlabeled side circle; if `x_k = q/2`, then `q/2 - m + 1`
//! boxes per side with the side circle labeled `k`, the lower-right box
//! unused, and the upper-right box closed to labels above `k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::counting::in_complement;
use crate::shi::build_shi_b_allowing_degenerate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    /// The placement breaks a structural rule (bad box index, missing or
    /// duplicated label, forbidden box).
    InvariantViolation(String),
    /// The tuple handed to `encode` lies on some hyperplane of the
    /// family.
    NotInComplement,
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::InvariantViolation(msg) => write!(f, "invalid placement: {msg}"),
            BijectionError::NotInComplement => {
                write!(f, "tuple lies on a hyperplane of the family")
            }
        }
    }
}

impl std::error::Error for BijectionError {}

fn invalid(msg: impl Into<String>) -> BijectionError {
    BijectionError::InvariantViolation(msg.into())
}

/// A placement for odd `q`: labels `1..=m` into boxes `1..2B` (box `0`,
/// the upper-left one, is forbidden), `B = (q+1)/2 - m` per side. Boxes
/// `0..B` form the upper row left to right, `B..2B` the lower row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPlacement {
    pub m: usize,
    pub q: u64,
    pub box_of: BTreeMap<usize, usize>,
}

/// Even-`q` placements come in two shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenVariant {
    /// No coordinate equals `q/2`; `q/2 - m` boxes per side and an
    /// unlabeled side circle.
    NoHalf,
    /// `x_k = q/2`; `q/2 - m + 1` boxes per side, side circle labeled
    /// `k`, lower-right box unused, upper-right box closed to labels
    /// above `k`.
    Half(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPlacement {
    pub m: usize,
    pub q: u64,
    pub variant: EvenVariant,
    pub box_of: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    Odd(OddPlacement),
    Even(EvenPlacement),
}

impl Placement {
    pub fn m(&self) -> usize {
        match self {
            Placement::Odd(p) => p.m,
            Placement::Even(p) => p.m,
        }
    }

    pub fn q(&self) -> u64 {
        match self {
            Placement::Odd(p) => p.q,
            Placement::Even(p) => p.q,
        }
    }

    pub fn boxes_per_side(&self) -> usize {
        match self {
            Placement::Odd(p) => (p.q.div_ceil(2)) as usize - p.m,
            Placement::Even(p) => match p.variant {
                EvenVariant::NoHalf => (p.q / 2) as usize - p.m,
                EvenVariant::Half(_) => (p.q / 2) as usize - p.m + 1,
            },
        }
    }

    fn box_of(&self) -> &BTreeMap<usize, usize> {
        match self {
            Placement::Odd(p) => &p.box_of,
            Placement::Even(p) => &p.box_of,
        }
    }

    fn side_label(&self) -> Option<usize> {
        match self {
            Placement::Even(EvenPlacement { variant: EvenVariant::Half(k), .. }) => Some(*k),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), BijectionError> {
        let m = self.m();
        let q = self.q();
        if m == 0 {
            return Err(invalid("m must be at least 1"));
        }
        match self {
            Placement::Odd(p) => {
                if q.is_multiple_of(2) {
                    return Err(invalid("odd placement with even q"));
                }
                if q.div_ceil(2) as usize <= p.m {
                    return Err(invalid(format!("q = {q} leaves no boxes for m = {m}")));
                }
            }
            Placement::Even(p) => {
                if q % 2 == 1 {
                    return Err(invalid("even placement with odd q"));
                }
                let half = (q / 2) as usize;
                let enough = match p.variant {
                    EvenVariant::NoHalf => half > p.m,
                    EvenVariant::Half(k) => {
                        if !(1..=m).contains(&k) {
                            return Err(invalid(format!("side label {k} out of range")));
                        }
                        half + 1 > p.m
                    }
                };
                if !enough {
                    return Err(invalid(format!("q = {q} leaves no boxes for m = {m}")));
                }
            }
        }
        let boxes = self.boxes_per_side();
        let expected: BTreeSet<usize> = match self.side_label() {
            None => (1..=m).collect(),
            Some(k) => (1..=m).filter(|&s| s != k).collect(),
        };
        let found: BTreeSet<usize> = self.box_of().keys().copied().collect();
        if expected != found {
            return Err(invalid(format!("labels {found:?} do not match expected {expected:?}")));
        }
        for (&label, &b) in self.box_of() {
            if b == 0 {
                return Err(invalid(format!("label {label} in the upper-left box")));
            }
            if b >= 2 * boxes {
                return Err(invalid(format!("label {label} in box {b}, beyond {}", 2 * boxes - 1)));
            }
            if let Some(k) = self.side_label() {
                if b == 2 * boxes - 1 {
                    return Err(invalid(format!("label {label} in the unused lower-right box")));
                }
                if label > k && b == boxes - 1 {
                    return Err(invalid(format!(
                        "label {label} > {k} in the upper-right box"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One circle of a laid-out placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Circle {
    pub label: Option<usize>,
    pub value: u64,
}

/// The circles of one box pair: the upper box's row and the lower box's
/// row, left to right. The lower-left box has no leading circle, so the
/// first pair's lower row is one shorter and starts one slot to the
/// right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRow {
    pub upper: Vec<Circle>,
    pub lower: Vec<Circle>,
}

/// A fully laid-out placement with clockwise values assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub m: usize,
    pub q: u64,
    pub pairs: Vec<CircleRow>,
    pub side: Option<Circle>,
}

/// Lay out a placement's circles and assign clockwise values.
pub fn layout(p: &Placement) -> Result<Layout, BijectionError> {
    p.validate()?;
    let m = p.m();
    let q = p.q();
    let boxes = p.boxes_per_side();

    let mut upper_labels: Vec<Vec<usize>> = vec![Vec::new(); boxes];
    let mut lower_labels: Vec<Vec<usize>> = vec![Vec::new(); boxes];
    for (&label, &b) in p.box_of() {
        if b < boxes {
            upper_labels[b].push(label);
        } else {
            lower_labels[b - boxes].push(label);
        }
    }
    for labels in &mut upper_labels {
        labels.sort_unstable();
    }
    for labels in &mut lower_labels {
        labels.sort_unstable_by(|a, b| b.cmp(a));
    }
    if !upper_labels[0].is_empty() {
        return Err(invalid("upper-left box must stay empty"));
    }

    let mut pairs = Vec::with_capacity(boxes);
    let mut col = 0usize;
    for pair in 0..boxes {
        let ups = &upper_labels[pair];
        let lows = &lower_labels[pair];
        let mut upper = Vec::with_capacity(1 + ups.len() + lows.len());
        let mut lower = Vec::new();
        upper.push(Circle { label: None, value: col as u64 });
        for (t, &s) in ups.iter().enumerate() {
            upper.push(Circle { label: Some(s), value: (col + 1 + t) as u64 });
        }
        for t in 0..lows.len() {
            upper.push(Circle { label: None, value: (col + 1 + ups.len() + t) as u64 });
        }
        if pair > 0 {
            lower.push(Circle { label: None, value: q - col as u64 });
            for t in 0..ups.len() {
                lower.push(Circle { label: None, value: q - (col + 1 + t) as u64 });
            }
        }
        for (t, &s) in lows.iter().enumerate() {
            lower.push(Circle { label: Some(s), value: q - (col + 1 + ups.len() + t) as u64 });
        }
        col += 1 + ups.len() + lows.len();
        pairs.push(CircleRow { upper, lower });
    }

    let upper_expected = q.div_ceil(2) as usize;
    if col != upper_expected {
        return Err(invalid(format!(
            "layout spans {col} columns, expected {upper_expected}"
        )));
    }

    let side = match p {
        Placement::Odd(_) => None,
        Placement::Even(_) => Some(Circle { label: p.side_label(), value: q / 2 }),
    };

    let total: usize = pairs.iter().map(|r| r.upper.len() + r.lower.len()).sum::<usize>()
        + usize::from(side.is_some());
    debug_assert_eq!(total as u64, q, "every residue gets exactly one circle");

    Ok(Layout { m, q, pairs, side })
}

/// Decode a placement to its tuple in `Z_q^m`.
pub fn decode(p: &Placement) -> Result<Vec<u64>, BijectionError> {
    let lay = layout(p)?;
    let mut x = vec![None; lay.m];
    let mut put = |label: usize, value: u64| -> Result<(), BijectionError> {
        match x.get_mut(label - 1) {
            Some(slot @ None) => {
                *slot = Some(value);
                Ok(())
            }
            _ => Err(invalid(format!("label {label} placed twice"))),
        }
    };
    for row in &lay.pairs {
        for c in row.upper.iter().chain(&row.lower) {
            if let Some(s) = c.label {
                put(s, c.value)?;
            }
        }
    }
    if let Some(side) = lay.side {
        if let Some(k) = side.label {
            put(k, side.value)?;
        }
    }
    x.into_iter()
        .enumerate()
        .map(|(idx, v)| v.ok_or_else(|| invalid(format!("label {} missing", idx + 1))))
        .collect()
}

/// Encode a complement tuple as the unique placement decoding to it.
pub fn encode(x: &[u64], q: u64) -> Result<Placement, BijectionError> {
    let m = x.len();
    if m == 0 || q < 2 {
        return Err(invalid("need m >= 1 and q >= 2"));
    }
    if let Some(bad) = x.iter().find(|&&v| v >= q) {
        return Err(invalid(format!("coordinate {bad} is not a residue mod {q}")));
    }
    let family = build_shi_b_allowing_degenerate(m, true)
        .expect("family exists for every m >= 1");
    if !in_complement(&family, x, q) {
        return Err(BijectionError::NotInComplement);
    }

    let (upper_count, side_label) = if q % 2 == 1 {
        (q.div_ceil(2) as usize, None)
    } else {
        let k = x.iter().position(|&v| v == q / 2).map(|idx| idx + 1);
        ((q / 2) as usize, k)
    };

    // Column occupancy: upper value v sits at column v, lower value v at
    // column q - v. Complement tuples never collide.
    #[derive(Clone, Copy)]
    enum Slot {
        Upper(usize),
        Lower(usize),
    }
    let mut by_column: BTreeMap<usize, Slot> = BTreeMap::new();
    for (idx, &v) in x.iter().enumerate() {
        let label = idx + 1;
        if side_label == Some(label) {
            continue;
        }
        let (col, slot) = if (v as usize) < upper_count {
            (v as usize, Slot::Upper(label))
        } else {
            ((q - v) as usize, Slot::Lower(label))
        };
        if by_column.insert(col, slot).is_some() {
            return Err(invalid(format!("two labels share column {col}")));
        }
    }

    let leading: Vec<usize> =
        (0..upper_count).filter(|c| !by_column.contains_key(c)).collect();
    if leading.first() != Some(&0) {
        return Err(invalid("column 0 must stay unlabeled"));
    }
    let boxes = leading.len();

    let mut box_of = BTreeMap::new();
    for (&col, &slot) in &by_column {
        let pair = leading.partition_point(|&start| start <= col) - 1;
        match slot {
            Slot::Upper(label) => box_of.insert(label, pair),
            Slot::Lower(label) => box_of.insert(label, boxes + pair),
        };
    }

    let placement = if q % 2 == 1 {
        Placement::Odd(OddPlacement { m, q, box_of })
    } else {
        let variant = match side_label {
            None => EvenVariant::NoHalf,
            Some(k) => EvenVariant::Half(k),
        };
        Placement::Even(EvenPlacement { m, q, variant, box_of })
    };

    // A complement tuple always reconstructs; anything else would have
    // been rejected above.
    let back = decode(&placement)?;
    if back != x {
        return Err(invalid("reconstruction mismatch"));
    }
    Ok(placement)
}

struct Section {
    m: usize,
    q: u64,
    variant: Option<EvenVariant>,
    labels: Vec<usize>,
    choices: Vec<Vec<usize>>,
    digits: Vec<usize>,
    exhausted: bool,
}

impl Section {
    fn placement(&self) -> Placement {
        let box_of: BTreeMap<usize, usize> = self
            .labels
            .iter()
            .zip(&self.digits)
            .map(|(&label, &d)| (label, self.choices[label - 1][d]))
            .collect();
        match self.variant {
            None => Placement::Odd(OddPlacement { m: self.m, q: self.q, box_of }),
            Some(variant) => {
                Placement::Even(EvenPlacement { m: self.m, q: self.q, variant, box_of })
            }
        }
    }

    fn step(&mut self) {
        // Rightmost label varies fastest.
        for pos in (0..self.labels.len()).rev() {
            self.digits[pos] += 1;
            if self.digits[pos] < self.choices[self.labels[pos] - 1].len() {
                return;
            }
            self.digits[pos] = 0;
        }
        self.exhausted = true;
    }
}

/// All placements for the given dimension and modulus, lazily, in a fixed
/// deterministic order (for even `q`: the no-half shape first, then the
/// half shapes for `k = 1..=m`; within a shape, boxes advance
/// odometer-style with the highest label fastest). The total is exactly
/// `(q - 2m)^m`.
pub fn enumerate_placements(m: usize, q: u64) -> impl Iterator<Item = Placement> {
    assert!(m >= 1, "need at least one label");
    assert!(q >= 2 * m as u64 + 2, "enumeration needs q >= 2m + 2");

    let mut sections = Vec::new();
    if q % 2 == 1 {
        let boxes = q.div_ceil(2) as usize - m;
        let admissible: Vec<usize> = (1..2 * boxes).collect();
        sections.push(Section {
            m,
            q,
            variant: None,
            labels: (1..=m).collect(),
            choices: vec![admissible; m],
            digits: vec![0; m],
            exhausted: false,
        });
    } else {
        let boxes = (q / 2) as usize - m;
        let admissible: Vec<usize> = (1..2 * boxes).collect();
        sections.push(Section {
            m,
            q,
            variant: Some(EvenVariant::NoHalf),
            labels: (1..=m).collect(),
            choices: vec![admissible; m],
            digits: vec![0; m],
            exhausted: false,
        });
        for k in 1..=m {
            let boxes = (q / 2) as usize - m + 1;
            let labels: Vec<usize> = (1..=m).filter(|&s| s != k).collect();
            let choices: Vec<Vec<usize>> = (1..=m)
                .map(|s| {
                    (1..2 * boxes - 1)
                        .filter(|&b| s < k || b != boxes - 1)
                        .collect()
                })
                .collect();
            sections.push(Section {
                m,
                q,
                variant: Some(EvenVariant::Half(k)),
                digits: vec![0; labels.len()],
                labels,
                choices,
                exhausted: false,
            });
        }
    }

    let mut sections = sections.into_iter();
    let mut current = sections.next();
    std::iter::from_fn(move || loop {
        let section = current.as_mut()?;
        let starved =
            section.labels.iter().any(|&s| section.choices[s - 1].is_empty());
        if section.exhausted || starved {
            current = sections.next();
            continue;
        }
        if section.labels.is_empty() {
            // Single placement with no boxed labels (m = 1 half shape).
            section.exhausted = true;
            return Some(section.placement());
        }
        let next = section.placement();
        section.step();
        return Some(next);
    })
}

/// Number of digits needed to print labels up to `m`.
fn label_width(m: usize) -> usize {
    m.to_string().len()
}

/// Fixed-width text rendering of a placement: the two box rows, the side
/// circle for even `q`, and the decoded tuple.
pub fn render(p: &Placement) -> Result<String, BijectionError> {
    let lay = layout(p)?;
    let tuple = decode(p)?;
    let w = label_width(lay.m);
    let cell = |c: &Circle| match c.label {
        Some(s) => format!("({s:>w$})"),
        None => format!("({:w$})", ""),
    };

    let mut out = String::new();
    match p {
        Placement::Odd(_) => {
            out.push_str(&format!(
                "m={} q={} parity=odd boxes={}+{}\n",
                lay.m,
                lay.q,
                lay.pairs.len(),
                lay.pairs.len()
            ));
        }
        Placement::Even(placement) => {
            let variant = match placement.variant {
                EvenVariant::NoHalf => "no-half".to_string(),
                EvenVariant::Half(k) => format!("half({k})"),
            };
            out.push_str(&format!(
                "m={} q={} parity=even variant={} boxes={}+{}\n",
                lay.m,
                lay.q,
                variant,
                lay.pairs.len(),
                lay.pairs.len()
            ));
        }
    }

    let mut upper_line = String::new();
    let mut lower_line = String::new();
    for (pair, row) in lay.pairs.iter().enumerate() {
        upper_line.push('[');
        for c in &row.upper {
            upper_line.push_str(&cell(c));
        }
        upper_line.push(']');
        lower_line.push('[');
        if pair == 0 {
            lower_line.push_str(&" ".repeat(w + 2));
        }
        for c in &row.lower {
            lower_line.push_str(&cell(c));
        }
        lower_line.push(']');
    }
    out.push_str(&upper_line);
    out.push('\n');
    out.push_str(&lower_line);
    out.push('\n');
    if let Some(side) = lay.side {
        out.push_str(&format!("side: {}\n", cell(&side)));
    }
    let rendered: Vec<String> = tuple.iter().map(u64::to_string).collect();
    out.push_str(&format!("tuple: ({})\n", rendered.join(", ")));
    Ok(out)
}
