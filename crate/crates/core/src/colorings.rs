//! Total colorings of the positive integers.
//!
//! Besides two trivial colorings used to exercise the solver, this module
//! holds the three adversarial constructions:
//!
//! * [`Delta2Coloring`]: two colors read off a limit approximation through
//!   the base-3 residue classes.
//! * [`FourColoring`]: parity of the very-short-gap count, split by the
//!   lowest base-3 digit.
//! * [`ThreeColoring`]: parity of the very-short-gap count, rotated through
//!   R/G/B according to the `±` class of the lowest base-7 digit.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerals::{pm_class, residue_class, Decomposition};
use crate::stages::{vsg_of, EnumeratedFunction, LimitApproximation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u8);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Symbolic names for the three-coloring: R = 0, G = 1, B = 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorName {
    Red,
    Green,
    Blue,
}

impl ColorName {
    pub const ALL: [ColorName; 3] = [ColorName::Red, ColorName::Green, ColorName::Blue];

    pub fn color(self) -> Color {
        Color(self as u8)
    }

    pub fn from_color(c: Color) -> Option<Self> {
        ColorName::ALL.get(usize::from(c.0)).copied()
    }
}

impl fmt::Display for ColorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColorName::Red => "R",
            ColorName::Green => "G",
            ColorName::Blue => "B",
        })
    }
}

/// A deterministic map from the positive integers to `[0, color_count)`.
pub trait Coloring: Send + Sync {
    fn color_count(&self) -> u8;

    /// Color of `n`; callers guarantee `n >= 1`.
    fn color(&self, n: u64) -> Color;

    /// Printable provenance of the construction and its parameters.
    fn descriptor(&self) -> String;

    /// How a color should be printed.
    fn color_label(&self, c: Color) -> String {
        c.to_string()
    }
}

impl<C: Coloring + ?Sized> Coloring for &C {
    fn color_count(&self) -> u8 {
        (**self).color_count()
    }

    fn color(&self, n: u64) -> Color {
        (**self).color(n)
    }

    fn descriptor(&self) -> String {
        (**self).descriptor()
    }

    fn color_label(&self, c: Color) -> String {
        (**self).color_label(c)
    }
}

impl<C: Coloring + ?Sized> Coloring for Box<C> {
    fn color_count(&self) -> u8 {
        (**self).color_count()
    }

    fn color(&self, n: u64) -> Color {
        (**self).color(n)
    }

    fn descriptor(&self) -> String {
        (**self).descriptor()
    }

    fn color_label(&self, c: Color) -> String {
        (**self).color_label(c)
    }
}

pub fn eval_color<C: Coloring + ?Sized>(c: &C, n: u64) -> Result<Color> {
    if n == 0 {
        return Err(Error::domain("0 is not a positive integer"));
    }
    Ok(c.color(n))
}

/// `n mod 2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Parity;

impl Coloring for Parity {
    fn color_count(&self) -> u8 {
        2
    }

    fn color(&self, n: u64) -> Color {
        Color((n % 2) as u8)
    }

    fn descriptor(&self) -> String {
        "parity".into()
    }
}

/// Everything gets color 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct Constant;

impl Coloring for Constant {
    fn color_count(&self) -> u8 {
        2
    }

    fn color(&self, _n: u64) -> Color {
        Color(0)
    }

    fn descriptor(&self) -> String {
        "const".into()
    }
}

/// `c(s) = f(k_s, s)` on `O_{k,1}` and `1 - f(k_s, s)` on `O_{k,2}`, base 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta2Coloring {
    approx: LimitApproximation,
}

impl Delta2Coloring {
    pub fn new(approx: LimitApproximation) -> Self {
        Delta2Coloring { approx }
    }

    pub fn approximation(&self) -> &LimitApproximation {
        &self.approx
    }
}

pub fn delta2_coloring(approx: LimitApproximation) -> Delta2Coloring {
    Delta2Coloring::new(approx)
}

impl Coloring for Delta2Coloring {
    fn color_count(&self) -> u8 {
        2
    }

    fn color(&self, s: u64) -> Color {
        let class = residue_class(s, 3).expect("colorings are evaluated on positive integers");
        let bit = self.approx.approx_eval(u64::from(class.level), s);
        Color(if class.digit == 1 { bit } else { 1 - bit })
    }

    fn descriptor(&self) -> String {
        format!(
            "delta2[horizon={},default={},schedules={},max_stage={}]",
            self.approx.horizon(),
            self.approx.default_value(),
            self.approx.schedules().len(),
            self.approx.max_stabilization_stage()
        )
    }
}

fn function_params(f: &EnumeratedFunction) -> String {
    let table: Vec<String> = f
        .exceptions()
        .iter()
        .map(|(x, y)| format!("{x}>{y}"))
        .collect();
    format!(
        "tail={},threshold={},table={}",
        f.tail_offset(),
        f.threshold(),
        table.join(";")
    )
}

/// `VSG(n) mod 2` when `i(n) = 1`, `2 + VSG(n) mod 2` when `i(n) = 2`, base 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourColoring {
    f: EnumeratedFunction,
}

impl FourColoring {
    pub fn new(f: EnumeratedFunction) -> Self {
        FourColoring { f }
    }

    pub fn function(&self) -> &EnumeratedFunction {
        &self.f
    }
}

pub fn four_coloring(f: EnumeratedFunction) -> FourColoring {
    FourColoring::new(f)
}

impl Coloring for FourColoring {
    fn color_count(&self) -> u8 {
        4
    }

    fn color(&self, n: u64) -> Color {
        let d = Decomposition::new(n, 3).expect("colorings are evaluated on positive integers");
        let parity = (vsg_of(&self.f, &d) % 2) as u8;
        Color(if d.first_digit() == 1 {
            parity
        } else {
            2 + parity
        })
    }

    fn descriptor(&self) -> String {
        format!("four[base=3,{}]", function_params(&self.f))
    }
}

/// R/G, G/B, B/R on the `±1`, `±2`, `±3` classes of the lowest base-7 digit,
/// choosing by the parity of `VSG(n)` over base 7.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeColoring {
    f: EnumeratedFunction,
}

impl ThreeColoring {
    pub fn new(f: EnumeratedFunction) -> Self {
        ThreeColoring { f }
    }

    pub fn function(&self) -> &EnumeratedFunction {
        &self.f
    }

    /// The branch table: color for a `±` class and a VSG parity.
    pub fn branch(pm: u8, parity: u8) -> ColorName {
        use ColorName::*;
        match (pm, parity) {
            (1, 0) => Red,
            (1, _) => Green,
            (2, 0) => Green,
            (2, _) => Blue,
            (3, 0) => Blue,
            _ => Red,
        }
    }

    pub fn color_name(&self, n: u64) -> ColorName {
        let d = Decomposition::new(n, 7).expect("colorings are evaluated on positive integers");
        let pm = pm_class(d.first_digit()).expect("base-7 digits are in [1, 6]");
        Self::branch(pm, (vsg_of(&self.f, &d) % 2) as u8)
    }
}

pub fn three_coloring(f: EnumeratedFunction) -> ThreeColoring {
    ThreeColoring::new(f)
}

impl Coloring for ThreeColoring {
    fn color_count(&self) -> u8 {
        3
    }

    fn color(&self, n: u64) -> Color {
        self.color_name(n).color()
    }

    fn descriptor(&self) -> String {
        format!("three[base=7,{}]", function_params(&self.f))
    }

    fn color_label(&self, c: Color) -> String {
        ColorName::from_color(c).map_or_else(|| c.to_string(), |name| name.to_string())
    }
}
