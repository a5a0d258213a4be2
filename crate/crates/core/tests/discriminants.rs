//! Discriminant branches against a numerical brute-force oracle and the sign
//! symmetry of the unfoldings.

use num_traits::ToPrimitive;
use swallowtail_core::classifier::NormalForm;
use swallowtail_core::discriminants::{build_family, discriminant, Branch, Family, Which};
use swallowtail_core::{FPoly, QPoly, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn float(p: &QPoly) -> FPoly {
    p.map_coeffs(|c| c.to_f64().unwrap())
}

fn forms() -> Vec<NormalForm> {
    let mut out = vec![NormalForm::u(1), NormalForm::u(-1)];
    for a in [q(1, 1), q(-1, 1), q(1, 18), q(2, 1)] {
        out.push(NormalForm::v(1, a.clone()));
        out.push(NormalForm::v(2, a.clone()));
        for s in [1, -1] {
            for b in [q(1, 1), q(-1, 3)] {
                out.push(NormalForm::w(s, a.clone(), b));
            }
        }
    }
    out
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Whether the family point `pt` is the source point of `br` at the
/// parameters read off `pt`.
fn on_branch(br: &Branch, fam_names: &[String], pt: &[f64]) -> bool {
    let params: Vec<f64> = br
        .param_names()
        .iter()
        .map(|n| {
            let i = fam_names
                .iter()
                .position(|m| m == n)
                .expect("parameter is a family variable");
            pt[i]
        })
        .collect();
    br.source.iter().zip(pt).all(|(s, &x)| {
        let v = float(s).eval(&params);
        (v - x).abs() <= 1e-7 * (1.0 + x.abs())
    })
}

/// Real roots of a univariate `f64` function on `[lo, hi]` by sign change
/// and bisection.
fn roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let xs = grid(lo, hi, steps);
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (mut a, mut b) = (w[0], w[1]);
        let (fa, fb) = (f(a), f(b));
        if fa == 0.0 {
            out.push(a);
            continue;
        }
        if fa * fb > 0.0 {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if f(a) * f(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

fn curve_coverage(fam: &Family, which: Which) -> usize {
    let h = fam.of(which);
    let dh = float(&h.derivative(0));
    let names = which.family_context().names().to_vec();
    let branches = discriminant(fam, which).unwrap();
    let mut hits = 0;
    for t in grid(-1.5, 1.5, 13) {
        for a2 in grid(-2.0, 2.0, 9) {
            // ∂H/∂t is affine in a1.
            let c0 = dh.eval(&[t, 0.0, a2]);
            let c1 = dh.eval(&[t, 1.0, a2]) - c0;
            let a1s = if c1.abs() > 1e-12 {
                vec![-c0 / c1]
            } else if c0.abs() < 1e-12 {
                grid(-2.0, 2.0, 5)
            } else {
                vec![]
            };
            for a1 in a1s {
                let pt = [t, a1, a2];
                assert!(dh.eval(&pt).abs() < 1e-6);
                assert!(
                    branches.iter().any(|b| on_branch(b, &names, &pt)),
                    "{which} of {}: critical point {pt:?} on no branch",
                    fam.form
                );
                hits += 1;
            }
        }
    }
    hits
}

fn surface_coverage(fam: &Family) -> usize {
    let gx = float(&fam.g.derivative(0));
    let gy = float(&fam.g.derivative(1));
    let names = Which::D1.family_context().names().to_vec();
    let branches = discriminant(fam, Which::D1).unwrap();
    let mut hits = 0;
    for y in grid(-1.2, 1.2, 9) {
        for a2 in grid(-1.5, 1.5, 7) {
            // ∂G/∂y does not involve a1; ∂G/∂x is affine in it.
            for x in roots(|x| gy.eval(&[x, y, 0.0, a2]), -8.0, 8.0, 1601) {
                let c0 = gx.eval(&[x, y, 0.0, a2]);
                let c1 = gx.eval(&[x, y, 1.0, a2]) - c0;
                assert!(c1.abs() > 1e-12);
                let pt = [x, y, -c0 / c1, a2];
                assert!(
                    branches.iter().any(|b| on_branch(b, &names, &pt)),
                    "D1 of {}: critical point {pt:?} on no branch",
                    fam.form
                );
                hits += 1;
            }
        }
    }
    hits
}

#[test]
fn every_sampled_critical_point_lies_on_a_branch() {
    for form in forms() {
        let fam = build_family(&form).unwrap();
        let d2 = curve_coverage(&fam, Which::D2);
        let d3 = curve_coverage(&fam, Which::D3);
        assert!(d2 >= 40 && d3 >= 40, "{form}: too few samples ({d2}, {d3})");
        if fam.case > 1 {
            assert!(surface_coverage(&fam) > 50, "{form}");
        } else {
            assert!(discriminant(&fam, Which::D1).unwrap().is_empty());
        }
    }
}

#[test]
fn emitted_branches_are_critical() {
    for form in forms() {
        let fam = build_family(&form).unwrap();
        for which in Which::ALL {
            let h = fam.of(which);
            let n = h.context().arity();
            for br in discriminant(&fam, which).unwrap() {
                // Spatial derivatives only: t, or x and y.
                let spatial = if n == 3 { 1 } else { 2 };
                for i in 0..spatial {
                    let on = h.derivative(i).compose(&br.source).unwrap();
                    assert!(on.is_zero(), "{form} {which} {}: {on}", br.label);
                }
            }
        }
    }
}

/// `−F(s, a, b; a1, a2) = F(−s, −a, −b; −a1, −a2)`, so the discriminant of the
/// sign-flipped form is the image of the original under
/// `(a1, a2, value) ↦ (−a1, −a2, −value)`, with `a1`, `a2` negated wherever
/// they are branch parameters.
#[test]
fn sign_flip_negates_branch_maps() {
    let pairs = [
        (NormalForm::u(1), NormalForm::u(-1)),
        (
            NormalForm::w(1, q(1, 1), q(1, 1)),
            NormalForm::w(-1, q(-1, 1), q(-1, 1)),
        ),
        (
            NormalForm::w(1, q(1, 18), q(-1, 3)),
            NormalForm::w(-1, q(-1, 18), q(1, 3)),
        ),
        (
            NormalForm::w(-1, q(2, 1), q(1, 1)),
            NormalForm::w(1, q(-2, 1), q(-1, 1)),
        ),
    ];
    for (plus, minus) in pairs {
        let fp = build_family(&plus).unwrap();
        let fm = build_family(&minus).unwrap();
        assert_eq!(fp.f.scale(&q(-1, 1)), {
            let ctx = fm.f.context().clone();
            let mut images: Vec<QPoly> = (0..5).map(|i| QPoly::var_at(&ctx, i)).collect();
            images[3] = images[3].scale(&q(-1, 1));
            images[4] = images[4].scale(&q(-1, 1));
            fm.f.compose(&images).unwrap()
        });
        for which in Which::ALL {
            let bp = discriminant(&fp, which).unwrap();
            let bm = discriminant(&fm, which).unwrap();
            assert_eq!(bp.len(), bm.len(), "{plus} {which}");
            for br in &bp {
                let images: Vec<QPoly> = br
                    .param_names()
                    .iter()
                    .enumerate()
                    .map(|(i, n)| {
                        let v = QPoly::var_at(&br.params, i);
                        if n.starts_with('a') {
                            v.scale(&q(-1, 1))
                        } else {
                            v
                        }
                    })
                    .collect();
                let flipped: Vec<QPoly> = br
                    .map
                    .iter()
                    .map(|m| m.compose(&images).unwrap().scale(&q(-1, 1)))
                    .collect();
                assert!(
                    bm.iter()
                        .any(|o| o.params.names() == br.params.names()
                            && o.map.iter().zip(&flipped).all(|(x, y)| x == y)),
                    "{plus} → {minus}, {which} {}: no matching branch",
                    br.label
                );
            }
        }
    }
}
