//! Newton polyhedra of monomial ideals: H-representation, integral closure,
//! and the exact volume of the region under the polyhedron.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::Rational;

/// Supporting inequality `normal · x ≥ offset` with a primitive,
/// componentwise nonnegative integer normal and positive offset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn value(&self, x: &[u32]) -> i64 {
        self.normal.iter().zip(x).map(|(n, &e)| n * e as i64).sum()
    }

    pub fn holds(&self, x: &[u32]) -> bool {
        self.value(x) >= self.offset
    }

    /// Normal and offset rescaled so the offset is 1.
    pub fn normalized(&self) -> (Vec<Rational>, Rational) {
        let off = BigInt::from(self.offset);
        let normal = self.normal.iter().map(|&n| Rational::new(BigInt::from(n), off.clone())).collect();
        (normal, Rational::from_integer(1.into()))
    }
}

/// `conv(generators) + R^n_{≥0}` in H-representation. Coordinate
/// inequalities `x_i ≥ 0` are implicit and not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    nvars: usize,
    generators: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.contains_slice(m.exps())
    }

    fn contains_slice(&self, m: &[u32]) -> bool {
        self.facets.iter().all(|f| f.holds(m))
    }

    /// True iff the complement in the orthant is bounded.
    pub fn is_bounded(&self) -> bool {
        (0..self.nvars).all(|i| self.generators.iter().any(|g| g.pure_power_var() == Some(i) || g.is_one()))
    }
}

/// Builds the Newton polyhedron of a nonzero ideal.
///
/// Two variables use the lower convex chain of the generators. Three or more
/// variables enumerate every hyperplane spanned by generators and coordinate
/// directions and keep the supporting ones with nonnegative normals.
pub fn newton_polyhedron(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = a.nvars();
    let pts: Vec<Vec<i64>> = a.gens().iter().map(|g| g.exps().iter().map(|&e| e as i64).collect()).collect();
    let facets = match n {
        1 => vec![Facet { normal: vec![1], offset: pts.iter().map(|p| p[0]).min().unwrap() }],
        2 => planar_facets(&pts),
        _ => spanned_facets(n, &pts)?,
    };
    let facets = facets.into_iter().filter(|f| f.offset > 0).collect::<BTreeSet<_>>();
    Ok(NewtonPolyhedron { nvars: n, generators: a.gens().to_vec(), facets: facets.into_iter().collect() })
}

pub fn np_contains(np: &NewtonPolyhedron, m: &ExponentVector) -> bool {
    np.contains(m)
}

fn primitive(normal: Vec<i64>, offset: i64) -> Facet {
    let g = normal.iter().fold(offset.abs(), |acc, &x| acc.gcd(&x.abs()));
    let g = if g == 0 { 1 } else { g };
    Facet { normal: normal.into_iter().map(|x| x / g).collect(), offset: offset / g }
}

fn cross2(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn planar_facets(pts: &[Vec<i64>]) -> Vec<Facet> {
    let mut sorted = pts.to_vec();
    sorted.sort();
    let mut hull: Vec<Vec<i64>> = Vec::new();
    for p in sorted {
        while hull.len() >= 2 && cross2(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let mut out = Vec::new();
    let first = &hull[0];
    let last = &hull[hull.len() - 1];
    out.push(primitive(vec![1, 0], first[0]));
    out.push(primitive(vec![0, 1], last[1]));
    for w in hull.windows(2) {
        let (p, q) = (&w[0], &w[1]);
        let normal = vec![p[1] - q[1], q[0] - p[0]];
        let offset = normal[0] * p[0] + normal[1] * p[1];
        out.push(primitive(normal, offset));
    }
    out
}

/// Determinant of a small integer matrix by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Normal of the hyperplane spanned by `rows` (n−1 vectors in Z^n).
fn cofactor_normal(rows: &[Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|col| {
            let minor: Vec<Vec<i128>> =
                rows.iter().map(|r| (0..n).filter(|&c| c != col).map(|c| r[c] as i128).collect()).collect();
            let d = det(minor);
            let v = if col % 2 == 0 { d } else { -d };
            v as i64
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn spanned_facets(n: usize, pts: &[Vec<i64>]) -> Result<Vec<Facet>> {
    let mut found = BTreeSet::new();
    let max_k = n.min(pts.len());
    for k in 1..=max_k {
        let dir_sets = combinations(n, n - k);
        for chosen in combinations(pts.len(), k) {
            let base = &pts[chosen[0]];
            let mut rows: Vec<Vec<i64>> =
                chosen[1..].iter().map(|&j| pts[j].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
            for dirs in &dir_sets {
                rows.truncate(k - 1);
                for &d in dirs {
                    let mut e = vec![0i64; n];
                    e[d] = 1;
                    rows.push(e);
                }
                let mut normal = cofactor_normal(&rows, n);
                if normal.iter().all(|&x| x == 0) {
                    continue;
                }
                if normal.iter().all(|&x| x <= 0) {
                    normal.iter_mut().for_each(|x| *x = -*x);
                } else if normal.iter().any(|&x| x < 0) {
                    continue;
                }
                let offset: i64 = normal.iter().zip(base).map(|(a, b)| a * b).sum();
                if offset <= 0 {
                    continue;
                }
                let supporting = pts.iter().all(|p| normal.iter().zip(p).map(|(a, b)| a * b).sum::<i64>() >= offset);
                if supporting {
                    found.insert(primitive(normal, offset));
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Lattice points of the Newton polyhedron, as a canonical ideal.
///
/// Minimal lattice points never exceed the largest generator exponent in any
/// coordinate, so the scan is confined to that box.
pub fn integral_closure(a: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = newton_polyhedron(a)?;
    let n = a.nvars();
    let bounds: Vec<u32> = (0..n).map(|i| a.gens().iter().map(|g| g.exps()[i]).max().unwrap()).collect();
    let mut raw = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if np.contains_slice(&cur) {
            let minimal = (0..n).all(|i| {
                if cur[i] == 0 {
                    return true;
                }
                cur[i] -= 1;
                let inside = np.contains_slice(&cur);
                cur[i] += 1;
                !inside
            });
            if minimal {
                raw.push(cur.clone());
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(MonomialIdeal::from_vecs(n, raw));
            }
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

pub fn is_integrally_closed(a: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(a)? == *a)
}

/// Exact volume of `{x ≥ 0} \ NP` for at most three variables.
///
/// The region is star-shaped from the origin, so it splits into cones over
/// the facets with positive offset. Each cone has volume
/// `offset · area(projected facet) / (n · normal_last)`, where the facet is
/// projected along the last coordinate.
pub fn complement_volume(np: &NewtonPolyhedron) -> Result<Rational> {
    let n = np.nvars;
    if n > 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    if !np.is_bounded() {
        return Err(Error::InfiniteVolume);
    }
    let mut total = Rational::zero();
    for f in &np.facets {
        let on_facet: Vec<&[u32]> = np.generators.iter().map(|g| g.exps()).filter(|g| f.value(g) == f.offset).collect();
        let last = f.normal[n - 1];
        if last <= 0 {
            return Err(Error::Internal(format!("facet {f:?} of a bounded region has a zero normal entry")));
        }
        // twice the (n-1)-volume of the projected facet
        let doubled: i64 = match n {
            1 => 2,
            2 => {
                let xs = on_facet.iter().map(|g| g[0] as i64);
                2 * (xs.clone().max().unwrap() - xs.min().unwrap())
            }
            _ => {
                let proj: Vec<(i64, i64)> = on_facet.iter().map(|g| (g[0] as i64, g[1] as i64)).collect();
                doubled_hull_area(proj)
            }
        };
        total += Rational::new(BigInt::from(f.offset) * BigInt::from(doubled), BigInt::from(2 * n as i64 * last));
    }
    Ok(total)
}

/// Twice the area of the convex hull of planar integer points.
fn doubled_hull_area(mut pts: Vec<(i64, i64)>) -> i64 {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return 0;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    let mut area = 0;
    for i in 0..hull.len() {
        let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
        area += a.0 * b.1 - a.1 * b.0;
    }
    area.abs()
}
