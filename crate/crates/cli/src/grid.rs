use std::f64::consts::PI;
use std::str::FromStr;

/// Parses a decimal or a fraction such as `-2/3`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if den == 0.0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            num / den
        }
        None => s.parse().map_err(|_| format!("not a number: `{s}`"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("not a finite number: `{s}`"))
    }
}

/// An angle given in units of π, or in radians when `radians` is set.
pub fn parse_angle(s: &str, radians: bool) -> Result<f64, String> {
    let v = parse_number(s)?;
    Ok(if radians { v } else { v * PI })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridParam {
    R,
    Theta,
    Eta,
}

/// One `--grid name=min:max:steps` value, bounds as written.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub param: GridParam,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, range) = s
            .split_once('=')
            .ok_or_else(|| format!("expected name=min:max:steps, got `{s}`"))?;
        let param = match name.trim() {
            "r" => GridParam::R,
            "theta" => GridParam::Theta,
            "eta" => GridParam::Eta,
            other => return Err(format!("unknown grid parameter `{other}` (expected r, theta or eta)")),
        };
        let parts: Vec<&str> = range.split(':').collect();
        let [min, max, steps] = parts[..] else {
            return Err(format!("expected min:max:steps, got `{range}`"));
        };
        let steps: usize = steps.trim().parse().map_err(|_| format!("bad step count `{steps}`"))?;
        if steps == 0 {
            return Err("a grid needs at least one step".into());
        }
        Ok(GridSpec {
            param,
            min: parse_number(min)?,
            max: parse_number(max)?,
            steps,
        })
    }
}

impl GridSpec {
    /// `steps` evenly spaced points from `min` to `max` inclusive, scaled by `unit`.
    pub fn points(&self, unit: f64) -> Vec<f64> {
        linspace(self.min * unit, self.max * unit, self.steps)
    }
}

pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![min];
    }
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                max
            } else {
                min + (max - min) * i as f64 / last
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_and_fractions() {
        assert_eq!(parse_number("0.25").unwrap(), 0.25);
        assert_eq!(parse_number("1/4").unwrap(), 0.25);
        assert_eq!(parse_number("-2/3").unwrap(), -2.0 / 3.0);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("x").is_err());
        assert!(parse_number("inf").is_err());
    }

    #[test]
    fn angles_default_to_pi_units() {
        assert_eq!(parse_angle("1/3", false).unwrap(), PI / 3.0);
        assert_eq!(parse_angle("0.5", true).unwrap(), 0.5);
    }

    #[test]
    fn grid_specs() {
        let g: GridSpec = "r=0:0.95:21".parse().unwrap();
        assert_eq!(g.param, GridParam::R);
        let pts = g.points(1.0);
        assert_eq!(pts.len(), 21);
        assert_eq!(pts[0], 0.0);
        assert_eq!(pts[20], 0.95);
        let g: GridSpec = "theta=0:1/3:3".parse().unwrap();
        assert_eq!(g.points(PI), vec![0.0, PI / 6.0, PI / 3.0]);
        assert_eq!("eta=0.5:1:1".parse::<GridSpec>().unwrap().points(1.0), vec![0.5]);
        assert!("r=0:1".parse::<GridSpec>().is_err());
        assert!("r=0:1:0".parse::<GridSpec>().is_err());
        assert!("phi=0:1:3".parse::<GridSpec>().is_err());
    }
}
