use std::fmt::Write;

use anyhow::Result;
use hindman_core::decoders::{self, Evidence};
use hindman_core::solver::{
    format_integer_set, search_monochromatic_parallel, synthesize_delta2_solution,
    synthesize_power_solution, thin_chain, thin_first_digit, Chain, MonoCertificate,
};
use hindman_core::stages::{gap_counts, range_oracle as oracle};
use hindman_core::{decompose as expand, Coloring, SolutionCandidate};

use crate::inputs::{
    braces, build_coloring, check_base, load_approx, load_enum, load_set, parse_range, usage,
};
use crate::{
    ColorArgs, DecodeDelta2Args, DecodeRangeArgs, DecomposeArgs, RangeOracleArgs, SearchArgs,
    SynthArgs, ThinArgs, ThinMode, VerifyArgs,
};

pub fn decompose(a: &DecomposeArgs) -> Result<String> {
    if a.base < 2 {
        return Err(usage(format!("--base must be at least 2, got {}", a.base)));
    }
    let f = a.enum_path.as_deref().map(load_enum).transpose()?;
    let mut out = String::new();
    for &n in &a.numbers {
        let d = expand(n, a.base)?;
        writeln!(out, "{d}")?;
        writeln!(
            out,
            "  lambda={} mu={} i={} class={}",
            d.lambda(),
            d.mu(),
            d.first_digit(),
            d.residue_class()
        )?;
        let gaps: Vec<String> = d.gaps().iter().map(ToString::to_string).collect();
        let gaps = if gaps.is_empty() {
            "none".to_string()
        } else {
            gaps.join(",")
        };
        writeln!(out, "  gaps={gaps}")?;
        if let Some(f) = &f {
            let counts = gap_counts(f, &d);
            writeln!(out, "  sg={} vsg={}", counts.short, counts.very_short)?;
        }
    }
    Ok(out)
}

pub fn color(a: &ColorArgs) -> Result<String> {
    let range = parse_range(&a.range)?;
    let c = build_coloring(&a.scheme)?;
    let mut out = format!("# scheme={}\nn,color\n", c.descriptor());
    for n in range {
        writeln!(out, "{n},{}", c.color(n))?;
    }
    Ok(out)
}

pub fn search(a: &SearchArgs) -> Result<String> {
    if a.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let c = build_coloring(&a.scheme)?;
    let found = search_monochromatic_parallel(&c, a.horizon, a.sum_len, a.size, a.jobs)?;
    let mut out = format!(
        "# search scheme={} N={} sum-len={} size={}\n",
        c.descriptor(),
        a.horizon,
        a.sum_len,
        a.size
    );
    match found {
        Some(s) => {
            let color = s
                .check(&c)?
                .color()
                .expect("search returns monochromatic sets");
            writeln!(out, "# color={}", c.color_label(color))?;
            out.push_str(&s.to_string());
        }
        None => out.push_str("# no monochromatic set found\n"),
    }
    Ok(out)
}

fn subset_sum(xs: &[u64]) -> String {
    let sum: u64 = xs.iter().sum();
    format!("{}={sum}", braces(xs))
}

pub fn verify(a: &VerifyArgs) -> Result<String> {
    let c = build_coloring(&a.scheme)?;
    let set = SolutionCandidate::new(load_set(&a.set_path)?, a.sum_len)?;
    if set.is_empty() {
        return Err(usage(format!("{} holds no elements", a.set_path.display())));
    }
    Ok(match set.check(&c)? {
        MonoCertificate::Monochromatic { color } => {
            format!("monochromatic color={}\n", c.color_label(color))
        }
        MonoCertificate::Violation {
            first,
            first_color,
            second,
            second_color,
        } => format!(
            "violation {} color={} vs {} color={}\n",
            subset_sum(&first),
            c.color_label(first_color),
            subset_sum(&second),
            c.color_label(second_color)
        ),
    })
}

pub fn thin(a: &ThinArgs) -> Result<String> {
    let xs = load_set(&a.set_path)?;
    let kept = match a.mode {
        ThinMode::Chain => thin_chain(&xs, a.base)?,
        ThinMode::Digit => thin_first_digit(&xs, a.base)?,
        ThinMode::Both => thin_chain(&thin_first_digit(&xs, a.base)?, a.base)?,
    };
    let mode = match a.mode {
        ThinMode::Chain => "chain",
        ThinMode::Digit => "digit",
        ThinMode::Both => "both",
    };
    Ok(format!(
        "# thin mode={mode} base={} kept={}/{}\n{}",
        a.base,
        kept.len(),
        xs.len(),
        format_integer_set(&kept)
    ))
}

pub fn synth(a: &SynthArgs) -> Result<String> {
    match (&a.enum_path, &a.approx_path) {
        (Some(path), None) => {
            check_base(a.base)?;
            let f = load_enum(path)?;
            let s = synthesize_power_solution(&f, a.base, a.size, a.sum_len)?;
            Ok(format!(
                "# synth base={} size={} sum-len={} (privileged: uses the range of f)\n{s}",
                a.base,
                a.size,
                s.sum_bound()
            ))
        }
        (None, Some(path)) => {
            let approx = load_approx(path)?;
            let s = synthesize_delta2_solution(&approx, a.size)?;
            Ok(format!(
                "# synth delta2 size={} sum-len={} (privileged: uses limits and stabilization stages)\n{s}",
                a.size,
                s.sum_bound()
            ))
        }
        _ => Err(usage(
            "synth needs exactly one of --enum PATH or --approx PATH",
        )),
    }
}

pub fn decode_range(a: &DecodeRangeArgs) -> Result<String> {
    check_base(a.base)?;
    let f = load_enum(&a.enum_path)?;
    let chain = Chain::new(&load_set(&a.set_path)?, a.base)?;
    // labelling only; the decoder itself never sees ground truth
    let (chain, fresh) = chain.certify(&f);
    let table = decoders::decode_range_table(&chain, &f)?;
    let mut out = format!(
        "# decode-range enum={} set={} base={} certified={}\n",
        a.enum_path.display(),
        a.set_path.display(),
        a.base,
        if fresh { "yes" } else { "no" }
    );
    out.push_str("y,member,n,m,bound\n");
    for v in table {
        let Evidence::Chain {
            element,
            successor,
            bound,
        } = v.evidence
        else {
            unreachable!("range verdicts carry chain evidence")
        };
        writeln!(
            out,
            "{},{},{element},{successor},{bound}",
            v.query,
            u8::from(v.member)
        )?;
    }
    Ok(out)
}

pub fn decode_delta2(a: &DecodeDelta2Args) -> Result<String> {
    let approx = load_approx(&a.approx_path)?;
    let horizon = approx.horizon();
    let c = hindman_core::colorings::delta2_coloring(approx);
    let w = load_set(&a.set_path)?;
    let b = decoders::decode_delta2(&w, &c, horizon)?;
    let mut out = format!(
        "# decode-delta2 approx={} set={} horizon={horizon}\n",
        a.approx_path.display(),
        a.set_path.display()
    );
    out.push_str("element,k,digit,color,value\n");
    for v in &b.evidence {
        let Evidence::Residue {
            element,
            class,
            color,
        } = v.evidence
        else {
            unreachable!("delta2 verdicts carry residue evidence")
        };
        writeln!(
            out,
            "{element},{},{},{color},{}",
            v.query,
            class.digit,
            u8::from(v.member)
        )?;
    }
    writeln!(out, "# B0={}", braces(&b.b0))?;
    writeln!(out, "# B1={}", braces(&b.b1))?;
    Ok(out)
}

pub fn range_oracle(a: &RangeOracleArgs) -> Result<String> {
    let f = load_enum(&a.enum_path)?;
    let queries = match (&a.range, &a.set_path) {
        (Some(r), None) => parse_range(r)?,
        (None, Some(path)) => {
            check_base(a.base)?;
            let chain = Chain::new(&load_set(path)?, a.base)?;
            let limit = chain.decodable_limit().unwrap_or(0);
            if limit == 0 {
                return Err(anyhow::anyhow!("{} decodes no queries", path.display()));
            }
            1..=u64::from(limit)
        }
        _ => return Err(usage("range-oracle needs --range A..B or --set PATH")),
    };
    let mut out = format!(
        "# PRIVILEGED ground truth, not available to decoders\n# range-oracle enum={}\ny,member,witness\n",
        a.enum_path.display()
    );
    for y in queries {
        let witness = f.witness(y).map(|x| x.to_string()).unwrap_or_default();
        writeln!(out, "{y},{},{witness}", u8::from(oracle(&f, y)))?;
    }
    Ok(out)
}
