//! The torus algebra A(T): idempotents ι0, ι1 and the chords ρ1, ρ2, ρ3 with
//! their composites, subject to ρ2ρ1 = ρ3ρ2 = 0.

use crate::grading_group::GradingElement;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("the zero element has no grading")]
    ZeroHasNoGrading,
    #[error("unknown algebra element {0:?}")]
    Parse(String),
    #[error("chords {0} and {1} are not composable")]
    Incomposable(AlgebraElement, AlgebraElement),
    #[error("{0} is not a chord")]
    NotAChord(AlgebraElement),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraElement {
    Iota0,
    Iota1,
    Rho1,
    Rho2,
    Rho3,
    Rho12,
    Rho23,
    Rho123,
    Zero,
}

use AlgebraElement::*;

pub const BASIS: [AlgebraElement; 8] = [Iota0, Iota1, Rho1, Rho2, Rho3, Rho12, Rho23, Rho123];
pub const CHORDS: [AlgebraElement; 6] = [Rho1, Rho2, Rho3, Rho12, Rho23, Rho123];

/// Idempotent index 0 or 1.
pub type Idem = u8;

impl AlgebraElement {
    /// Chords as digit intervals [first, last] of the quiver path.
    fn interval(self) -> Option<(u8, u8)> {
        Some(match self {
            Rho1 => (1, 1),
            Rho2 => (2, 2),
            Rho3 => (3, 3),
            Rho12 => (1, 2),
            Rho23 => (2, 3),
            Rho123 => (1, 3),
            _ => return None,
        })
    }

    fn from_interval(a: u8, b: u8) -> AlgebraElement {
        match (a, b) {
            (1, 1) => Rho1,
            (2, 2) => Rho2,
            (3, 3) => Rho3,
            (1, 2) => Rho12,
            (2, 3) => Rho23,
            (1, 3) => Rho123,
            _ => Zero,
        }
    }

    pub fn is_chord(self) -> bool {
        self.interval().is_some()
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, Iota0 | Iota1)
    }

    pub fn idempotent(i: Idem) -> AlgebraElement {
        if i == 0 {
            Iota0
        } else {
            Iota1
        }
    }

    pub fn left_idem(self) -> Option<Idem> {
        match self {
            Iota0 => Some(0),
            Iota1 => Some(1),
            Zero => None,
            c => c.interval().map(|(a, _)| if a % 2 == 1 { 0 } else { 1 }),
        }
    }

    pub fn right_idem(self) -> Option<Idem> {
        match self {
            Iota0 => Some(0),
            Iota1 => Some(1),
            Zero => None,
            c => c.interval().map(|(_, b)| if b % 2 == 1 { 1 } else { 0 }),
        }
    }

    pub fn multiply(self, b: AlgebraElement) -> AlgebraElement {
        if self == Zero || b == Zero {
            return Zero;
        }
        if self.right_idem() != b.left_idem() {
            return Zero;
        }
        if self.is_idempotent() {
            return b;
        }
        if b.is_idempotent() {
            return self;
        }
        let (a0, a1) = self.interval().unwrap();
        let (b0, b1) = b.interval().unwrap();
        if b0 == a1 + 1 {
            AlgebraElement::from_interval(a0, b1)
        } else {
            Zero
        }
    }

    pub fn grading(self) -> Result<GradingElement, AlgebraError> {
        let gen = |d: u8| match d {
            1 => GradingElement::from_ratios((-1, 2), (1, 2), (-1, 2)),
            2 => GradingElement::from_ratios((-1, 2), (1, 2), (1, 2)),
            _ => GradingElement::from_ratios((-1, 2), (-1, 2), (1, 2)),
        };
        match self {
            Zero => Err(AlgebraError::ZeroHasNoGrading),
            Iota0 | Iota1 => Ok(GradingElement::identity()),
            c => {
                let (a, b) = c.interval().unwrap();
                Ok((a + 1..=b).fold(gen(a), |acc, d| acc.multiply(&gen(d))))
            }
        }
    }

    /// Digit string "1", "23", ... of a chord.
    pub fn digits(self) -> String {
        match self.interval() {
            Some((a, b)) => (a..=b).map(|d| char::from(b'0' + d)).collect(),
            None => String::new(),
        }
    }

    pub fn from_digits(s: &str) -> Option<AlgebraElement> {
        match s {
            "1" => Some(Rho1),
            "2" => Some(Rho2),
            "3" => Some(Rho3),
            "12" => Some(Rho12),
            "23" => Some(Rho23),
            "123" => Some(Rho123),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Iota0 => "i0",
            Iota1 => "i1",
            Rho1 => "r1",
            Rho2 => "r2",
            Rho3 => "r3",
            Rho12 => "r12",
            Rho23 => "r23",
            Rho123 => "r123",
            Zero => "0",
        }
    }

    /// Swap 1 and 3 digit-wise. ρ12 ↔ ρ23 reverses the digit order, so the
    /// result is returned as a digit string rather than an element.
    pub fn swapped_digits(self) -> String {
        self.digits()
            .chars()
            .map(|c| match c {
                '1' => '3',
                '3' => '1',
                x => x,
            })
            .collect()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraElement {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "i0" => Iota0,
            "i1" => Iota1,
            "r1" => Rho1,
            "r2" => Rho2,
            "r3" => Rho3,
            "r12" => Rho12,
            "r23" => Rho23,
            "r123" => Rho123,
            _ => return Err(AlgebraError::Parse(s.to_string())),
        })
    }
}

/// A composable sequence of chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChordSequence(Vec<AlgebraElement>);

impl ChordSequence {
    pub fn new(chords: Vec<AlgebraElement>) -> Result<Self, AlgebraError> {
        for c in &chords {
            if !c.is_chord() {
                return Err(AlgebraError::NotAChord(*c));
            }
        }
        for w in chords.windows(2) {
            if w[0].right_idem() != w[1].left_idem() {
                return Err(AlgebraError::Incomposable(w[0], w[1]));
            }
        }
        Ok(ChordSequence(chords))
    }

    pub fn empty() -> Self {
        ChordSequence(Vec::new())
    }

    /// Appends without re-checking; callers guarantee composability.
    pub(crate) fn pushed(&self, c: AlgebraElement) -> Self {
        let mut v = self.0.clone();
        v.push(c);
        ChordSequence(v)
    }

    pub fn chords(&self) -> &[AlgebraElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grading(&self) -> GradingElement {
        self.0.iter().fold(GradingElement::identity(), |acc, c| {
            acc.multiply(&c.grading().expect("chords are graded"))
        })
    }
}

impl fmt::Display for ChordSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|c| c.name()).collect();
        write!(f, "[{}]", names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_from_the_quiver() {
        assert_eq!(Rho1.multiply(Rho2), Rho12);
        assert_eq!(Rho2.multiply(Rho3), Rho23);
        assert_eq!(Rho1.multiply(Rho23), Rho123);
        assert_eq!(Rho12.multiply(Rho3), Rho123);
        assert_eq!(Rho2.multiply(Rho1), Zero);
        assert_eq!(Rho3.multiply(Rho2), Zero);
        assert_eq!(Iota0.multiply(Rho1), Rho1);
        assert_eq!(Rho1.multiply(Iota0), Zero);
        assert_eq!(Rho1.multiply(Iota1), Rho1);
    }

    #[test]
    fn nonzero_table_is_exactly_the_listed_products() {
        let mut nonzero = Vec::new();
        for a in BASIS {
            for b in BASIS {
                if a.multiply(b) != Zero {
                    nonzero.push((a, b));
                }
            }
        }
        // 2 idempotent squares + 6 left units + 6 right units + 4 chord products
        assert_eq!(nonzero.len(), 18);
    }

    #[test]
    fn gradings() {
        assert_eq!(Rho2.grading().unwrap().to_string(), "(-1/2;1/2,1/2)");
        assert!(Iota1.grading().unwrap().is_identity());
        assert_eq!(Rho12.grading().unwrap().to_string(), "(-1/2;1,0)");
        assert_eq!(Rho123.grading().unwrap().to_string(), "(-1/2;1/2,1/2)");
        assert_eq!(Zero.grading(), Err(AlgebraError::ZeroHasNoGrading));
    }

    #[test]
    fn rho123_grading_from_the_group_law() {
        let prod = Rho1
            .grading()
            .unwrap()
            .multiply(&Rho2.grading().unwrap())
            .multiply(&Rho3.grading().unwrap());
        assert_eq!(Rho123.grading().unwrap(), prod);
    }

    #[test]
    fn chord_sequences_are_checked() {
        assert!(ChordSequence::new(vec![Rho3, Rho2, Rho1]).is_ok());
        assert!(ChordSequence::new(vec![Rho1, Rho1]).is_err());
        assert!(ChordSequence::new(vec![Iota0]).is_err());
    }

    #[test]
    fn swap_and_names() {
        assert_eq!(Rho23.swapped_digits(), "21");
        assert_eq!(Rho123.swapped_digits(), "321");
        for a in BASIS {
            assert_eq!(a.name().parse::<AlgebraElement>().unwrap(), a);
        }
    }
}
