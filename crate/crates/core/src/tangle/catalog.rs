//! Small named diagrams used by tests, docs, and the command line.

use super::{parse, SlicedDiagram};

/// Names accepted by [`catalog_diagram`], in display order.
pub const CATALOG_NAMES: [&str; 10] = [
    "empty",
    "unknot",
    "unknot_tw+",
    "unknot_tw-",
    "two_circles",
    "hopf+",
    "hopf-",
    "trefoil_r",
    "trefoil_l",
    "figure8",
];

/// Looks up a built-in diagram by name.
///
/// The trefoils are plat closures of three like-signed crossings; `_r` is
/// the one with writhe +3. The figure-eight word alternates crossing
/// columns and signs, giving the 4-crossing alternating knot.
pub fn catalog_diagram(name: &str) -> Option<SlicedDiagram> {
    let text = match name {
        "empty" => "",
        "unknot" => "u\nn",
        "unknot_tw+" => "u\nt+ |\nn",
        "unknot_tw-" => "u\nt- |\nn",
        "two_circles" => "u u\nn n",
        "hopf+" => "u u\n| x+ |\n| x+ |\nn n",
        "hopf-" => "u u\n| x- |\n| x- |\nn n",
        "trefoil_r" => "u u\n| x+ |\n| x+ |\n| x+ |\nn n",
        "trefoil_l" => "u u\n| x- |\n| x- |\n| x- |\nn n",
        "figure8" => "u u\n| x+ |\n| x+ |\nx- | |\n| x+ |\nn n",
        _ => return None,
    };
    Some(parse(text).expect("catalog words are valid"))
}
