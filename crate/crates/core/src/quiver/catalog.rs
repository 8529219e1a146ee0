//! Canonical labeled diagrams. Vertices are named `1..=n`.

use super::{ArrowLabel, Quiver};
use crate::dimseq;

fn path(n: usize) -> Vec<(String, String)> {
    (1..n)
        .map(|i| (i.to_string(), (i + 1).to_string()))
        .collect()
}

fn build(arrows: Vec<(String, String)>, heavy: Option<(usize, Vec<u32>)>) -> Quiver {
    let mut b = Quiver::builder();
    for (i, (s, t)) in arrows.into_iter().enumerate() {
        b = match &heavy {
            Some((j, seq)) if *j == i => {
                b.labeled(s, t, ArrowLabel::sequence(seq.clone()).unwrap())
            }
            _ => b.arrow(s, t),
        };
    }
    b.build().expect("catalog diagrams are valid")
}

/// Linear `A_n`: `1 -> 2 -> ... -> n`.
pub fn a(n: usize) -> Quiver {
    assert!(n >= 1);
    if n == 1 {
        return Quiver::builder().vertex("1").build().unwrap();
    }
    build(path(n), None)
}

/// Linear `B_n` with `(n-1) -> n` carrying `(2,1,2,1)`.
pub fn b(n: usize) -> Quiver {
    assert!(n >= 2);
    build(path(n), Some((n - 2, vec![2, 1, 2, 1])))
}

/// Linear `C_n` with `(n-1) -> n` carrying `(1,2,1,2)`.
pub fn c(n: usize) -> Quiver {
    assert!(n >= 2);
    build(path(n), Some((n - 2, vec![1, 2, 1, 2])))
}

/// `D_n`: path `1 -> ... -> n-1` with `n-2 -> n`.
pub fn d(n: usize) -> Quiver {
    assert!(n >= 4);
    let mut arrows = path(n - 1);
    arrows.push(((n - 2).to_string(), n.to_string()));
    build(arrows, None)
}

fn exceptional(n: usize) -> Quiver {
    // E7 keeps the name 6 for the short leaf, so its long arm ends at 7
    let (mut arrows, leaf) = if n == 7 {
        let mut arrows = path(5);
        arrows.push(("5".into(), "7".into()));
        (arrows, "6".to_string())
    } else {
        (path(n - 1), n.to_string())
    };
    arrows.push(("3".into(), leaf));
    build(arrows, None)
}

/// `E6`: path `1 -> 2 -> 3 -> 4 -> 5` with `3 -> 6`.
pub fn e6() -> Quiver {
    exceptional(6)
}

/// `E7`: path `1 -> 2 -> 3 -> 4 -> 5 -> 7` with `3 -> 6`.
pub fn e7() -> Quiver {
    exceptional(7)
}

/// `E8`: path `1 -> ... -> 7` with `3 -> 8`.
pub fn e8() -> Quiver {
    exceptional(8)
}

/// `F4`: `1 -> 2 -> 3 -> 4` with the middle arrow carrying `(2,1,2,1)`.
pub fn f4() -> Quiver {
    build(path(4), Some((1, vec![2, 1, 2, 1])))
}

/// `G2`: a single arrow with valuation `(1,3)`.
pub fn g2() -> Quiver {
    build(path(2), Some((0, vec![1, 3, 1, 3, 1, 3])))
}

/// `H3`: `1 -> 2 -> 3` with `2 -> 3` carrying `(3,1,2,2,1)`.
pub fn h3() -> Quiver {
    build(path(3), Some((1, vec![3, 1, 2, 2, 1])))
}

/// `H4`: `1 -> 2 -> 3 -> 4` with `3 -> 4` carrying `(3,1,2,2,1)`.
pub fn h4() -> Quiver {
    build(path(4), Some((2, vec![3, 1, 2, 2, 1])))
}

/// `I2(p)`: a single arrow carrying `(p-2, 1, 2, ..., 2, 1)`.
pub fn i2(p: usize) -> Quiver {
    assert!(p >= 3);
    build(path(2), Some((0, dimseq::koethe_shape(p))))
}
