//! Textual lens-space literals: `L(p,q)`, `p,q`, `S3`, `S2xS1`, `RP3`.

use lensdist_core::RawLensParams;

pub fn parse_lens(s: &str) -> Result<RawLensParams, String> {
    let t = s.trim();
    match t.to_ascii_uppercase().as_str() {
        "S3" => return Ok(RawLensParams::new(1, 0).expect("coprime")),
        "S2XS1" => return Ok(RawLensParams::new(0, 1).expect("coprime")),
        "RP3" => return Ok(RawLensParams::new(2, 1).expect("coprime")),
        _ => {}
    }
    let inner = match t.strip_prefix('L').or_else(|| t.strip_prefix('l')) {
        Some(rest) => rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("malformed lens literal `{s}`, expected L(p,q)"))?,
        None => t,
    };
    let (p, q) = inner
        .split_once(',')
        .ok_or_else(|| format!("malformed lens literal `{s}`, expected L(p,q)"))?;
    let p: i64 = p.trim().parse().map_err(|_| format!("`{}` is not an integer in `{s}`", p.trim()))?;
    let q: i64 = q.trim().parse().map_err(|_| format!("`{}` is not an integer in `{s}`", q.trim()))?;
    RawLensParams::new(p, q).map_err(|e| e.to_string())
}
