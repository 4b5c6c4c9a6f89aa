use crate::CatalogError;
use mfsr_knop::IsotropyDescription;
use mfsr_lattice::{Series, SimpleFactor};

fn err(src: &str, m: impl Into<String>) -> CatalogError {
    CatalogError::Isotropy(src.to_string(), m.into())
}

/// Add the algebra named by one term (e.g. `sp(5)`, `gl(2)`, `e6`).
fn add_term(d: &mut IsotropyDescription, name: &str, arg: Option<i64>, src: &str) -> Result<(), CatalogError> {
    let need = || arg.ok_or_else(|| err(src, format!("`{name}` needs an argument")));
    let mut push = |s: Series, r: usize| -> Result<(), CatalogError> {
        let f = SimpleFactor::new(s, r).map_err(|e| err(src, e.to_string()))?;
        d.simple_parts.push(f);
        Ok(())
    };
    match name {
        "0" => {}
        "t" => d.torus_dim += usize::try_from(need()?).map_err(|_| err(src, "negative torus"))?,
        "sl" => {
            let n = need()?;
            if n >= 2 {
                push(Series::A, n as usize - 1)?;
            }
        }
        "gl" => {
            let n = need()?;
            if n >= 1 {
                d.torus_dim += 1;
            }
            if n >= 2 {
                push(Series::A, n as usize - 1)?;
            }
        }
        "sp" => {
            let n = need()?;
            if n >= 1 {
                if n % 2 == 0 {
                    push(Series::C, n as usize / 2)?;
                } else {
                    d.odd_symplectic_parts.push(((n + 1) / 2) as u32);
                }
            }
        }
        "so" => match need()? {
            n if n <= 1 => {}
            2 => d.torus_dim += 1,
            3 => push(Series::A, 1)?,
            4 => {
                push(Series::A, 1)?;
                push(Series::A, 1)?;
            }
            n if n % 2 == 1 => push(Series::B, n as usize / 2)?,
            n => push(Series::D, n as usize / 2)?,
        },
        "g2" => push(Series::G2, 2)?,
        "e6" => push(Series::E6, 6)?,
        "e7" => push(Series::E7, 7)?,
        _ => return Err(err(src, format!("unknown algebra `{name}`"))),
    }
    Ok(())
}

/// Parse a concrete isotropy string such as `sp(3)+sl(2)^2+t(1)` into its
/// normalized description. Degenerate terms vanish (gl(0) = so(1) = sp(0) =
/// sp(-1) = 0) and gl(k) is sl(k) + t(1).
pub fn parse_isotropy(src: &str) -> Result<IsotropyDescription, CatalogError> {
    let mut d = IsotropyDescription::default();
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err(src, "empty"));
    }
    for term in compact.split('+') {
        let (body, times) = match term.split_once('^') {
            Some((b, k)) => (b, k.parse::<usize>().map_err(|_| err(src, format!("bad exponent in `{term}`")))?),
            None => (term, 1),
        };
        let (name, arg) = match body.split_once('(') {
            Some((n, rest)) => {
                let a = rest
                    .strip_suffix(')')
                    .ok_or_else(|| err(src, format!("unbalanced `{term}`")))?
                    .parse::<i64>()
                    .map_err(|_| err(src, format!("bad argument in `{term}`")))?;
                (n, Some(a))
            }
            None => (body, None),
        };
        for _ in 0..times {
            add_term(&mut d, name, arg, src)?;
        }
    }
    Ok(d.normalized())
}
