//! Value parsers for command-line arguments. Errors are plain strings so
//! clap reports them as usage errors.

use std::f64::consts::PI;

use dunkl_core::{HalfInt, SectorLabels};

pub fn half_int(s: &str) -> Result<HalfInt, String> {
    s.parse().map_err(|e: dunkl_core::DunklError| e.to_string())
}

/// `"mu1,mu2,mu3"`.
pub fn mu_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("expected three comma-separated values, got '{s}'"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("'{t}' is not a number"));
    Ok([num(a)?, num(b)?, num(c)?])
}

/// Parity sectors in the order given.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorList(pub Vec<SectorLabels>);

/// Points `(r, θ, φ)` in the order given.
#[derive(Debug, Clone, PartialEq)]
pub struct PointList(pub Vec<[f64; 3]>);

/// `"all"` or a comma-separated list such as `"+++,-+-"`.
pub fn sectors(s: &str) -> Result<SectorList, String> {
    if s.trim() == "all" {
        return Ok(SectorList(SectorLabels::all().collect()));
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let sector: SectorLabels = part.parse().map_err(|e: dunkl_core::DunklError| e.to_string())?;
        if !out.contains(&sector) {
            out.push(sector);
        }
    }
    Ok(SectorList(out))
}

pub fn sector(s: &str) -> Result<SectorLabels, String> {
    s.parse().map_err(|e: dunkl_core::DunklError| e.to_string())
}

/// A number, or a multiple of π written as `pi`, `pi/2`, `3pi/4`, `-pi/4`.
pub fn angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let bad = || format!("'{t}' is not a number or a multiple of pi");
    let Some(idx) = t.find("pi") else {
        return Err(bad());
    };
    let (coef, rest) = t.split_at(idx);
    let coef = match coef.trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let den = match rest[2..].strip_prefix('/') {
        None if rest.len() == 2 => 1.0,
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
        None => return Err(bad()),
    };
    Ok(coef * PI / den)
}

/// `"r,θ,φ;r,θ,φ;…"`.
pub fn points(s: &str) -> Result<PointList, String> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let parts: Vec<&str> = p.split(',').collect();
            let [r, t, f] = parts[..] else {
                return Err(format!("point '{p}' must be r,theta,phi"));
            };
            Ok([angle(r)?, angle(t)?, angle(f)?])
        })
        .collect::<Result<_, _>>()
        .map(PointList)
}

/// `"start:end:count"`, inclusive of both ends.
fn axis(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts[..] {
        [v] => Ok(vec![angle(v)?]),
        [a, b, n] => {
            let (a, b) = (angle(a)?, angle(b)?);
            let n: usize = n.trim().parse().map_err(|_| format!("'{n}' is not a point count"))?;
            match n {
                0 => Err("point count must be positive".into()),
                1 => Ok(vec![a]),
                _ => Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()),
            }
        }
        _ => Err(format!("axis '{s}' must be a value or start:end:count")),
    }
}

/// Tensor grid `"r-axis;θ-axis;φ-axis"`, each axis a value or `start:end:count`.
pub fn grid(s: &str) -> Result<PointList, String> {
    let axes: Vec<&str> = s.split(';').collect();
    let [r, t, f] = axes[..] else {
        return Err(format!("grid '{s}' needs three axes separated by ';'"));
    };
    let (r, t, f) = (axis(r)?, axis(t)?, axis(f)?);
    let mut out = Vec::with_capacity(r.len() * t.len() * f.len());
    for &ri in &r {
        for &ti in &t {
            for &fi in &f {
                out.push([ri, ti, fi]);
            }
        }
    }
    Ok(PointList(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_needs_three_numbers() {
        assert_eq!(mu_triple("0.3, 0.3,0.3").unwrap(), [0.3; 3]);
        assert!(mu_triple("0.3,0.3").is_err());
        assert!(mu_triple("a,b,c").is_err());
    }

    #[test]
    fn half_integers_in_both_spellings() {
        assert_eq!(half_int("1/2").unwrap(), half_int("0.5").unwrap());
        assert!(half_int("0.3").is_err());
    }

    #[test]
    fn angles() {
        assert_eq!(angle("1.25").unwrap(), 1.25);
        assert_eq!(angle("pi/2").unwrap(), PI / 2.0);
        assert_eq!(angle("3pi/4").unwrap(), 0.75 * PI);
        assert_eq!(angle("-pi").unwrap(), -PI);
        assert!(angle("pie").is_err());
        assert!(angle("x").is_err());
    }

    #[test]
    fn point_lists_and_grids() {
        assert_eq!(points("0.5,1,1;1,pi/3,2").unwrap().0.len(), 2);
        assert!(points("0.5,1").is_err());
        let g = grid("0.5:1.5:3;1;0.2:0.4:2").unwrap().0;
        assert_eq!(g.len(), 6);
        assert_eq!(g[5], [1.5, 1.0, 0.4]);
    }

    #[test]
    fn sector_lists() {
        assert_eq!(sectors("all").unwrap().0.len(), 8);
        assert_eq!(sectors("+++,-+-,+++").unwrap().0.len(), 2);
        assert!(sectors("++").is_err());
    }
}
