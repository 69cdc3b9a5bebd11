//! Checked end-to-end transcripts. Each step prints `[ok]` or `[FAIL]`; the
//! command exits with 1 if any step failed.

use std::collections::BTreeSet;

use anyhow::Result;
use hindman_core::colorings::{delta2_coloring, four_coloring, three_coloring};
use hindman_core::decoders::{decode_delta2, decode_range_membership, Evidence};
use hindman_core::numerals::{residue_class, ResidueClass};
use hindman_core::solver::{delta2_choice, synthesize_delta2_solution, synthesize_power_chain};
use hindman_core::stages::{classify_gap, range_oracle, sg_of, vsg_of, Probe};
use hindman_core::{
    decompose, Coloring, EnumeratedFunction, Gap, LimitApproximation, SolutionCandidate,
};

use crate::inputs::{braces, check_base, load_approx, load_enum};
use crate::{DemoDelta2Args, DemoRangeArgs};

const REFERENCE_ENUM: &str = "1 4\n2 6\n3 8\n4 2\ntail 6 4\n";

const REFERENCE_APPROX: &str = "\
0: 0=0 4=1 9=0
1: 0=1 3=0 12=1
2: 0=0 7=1 15=0
3: 0=1 2=0 30=1
default 0
horizon 5
";

/// Upper end of the stabilized-disagreement scan.
const SCAN_BOUND: u64 = 6561;

pub struct Transcript {
    pub text: String,
    pub passed: bool,
    steps: usize,
    failures: usize,
}

impl Transcript {
    fn new() -> Self {
        Transcript {
            text: String::new(),
            passed: true,
            steps: 0,
            failures: 0,
        }
    }

    fn note(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, ok: bool, line: impl AsRef<str>) {
        self.steps += 1;
        if !ok {
            self.failures += 1;
            self.passed = false;
        }
        let tag = if ok { "[ok]  " } else { "[FAIL]" };
        self.note(format!("{tag} {}", line.as_ref()));
    }

    fn finish(mut self) -> Self {
        let summary = format!(
            "{}/{} checks passed",
            self.steps - self.failures,
            self.steps
        );
        self.note(summary);
        self
    }
}

pub fn range(a: &DemoRangeArgs) -> Result<Transcript> {
    check_base(a.base)?;
    let (f, source) = match &a.enum_path {
        Some(path) => (load_enum(path)?, path.display().to_string()),
        None => (
            REFERENCE_ENUM.parse::<EnumeratedFunction>()?,
            "built-in reference".to_string(),
        ),
    };
    let coloring: Box<dyn Coloring> = if a.base == 7 {
        Box::new(three_coloring(f.clone()))
    } else {
        Box::new(four_coloring(f.clone()))
    };
    let mut t = Transcript::new();
    t.note(format!(
        "# range decoding demo: base {}, chain length {}",
        a.base, a.size
    ));
    t.note(format!("# f from {source}: {}", coloring.descriptor()));

    let chain = synthesize_power_chain(&f, a.base, a.size)?;
    let xs = chain.elements();
    let exponents: Vec<u32> = chain.links().iter().map(|d| d.lambda()).collect();
    t.note(format!(
        "# synthesized X = {} (exponents {})",
        braces(&xs),
        braces(&exponents)
    ));

    let links = chain.links().to_vec();
    let ordered = links.windows(2).all(|p| p[0].mu() < p[1].lambda());
    t.check(
        ordered,
        "chain condition: mu(n) < lambda(m) for consecutive n < m",
    );

    let (chain, fresh) = chain.certify(&f);
    t.check(
        fresh,
        "freshness: every y <= mu(n) in the range of f has a preimage <= lambda(m)",
    );

    let solution = SolutionCandidate::new(xs.clone(), 3)?;
    let cert = solution.check(&coloring)?;
    let label = cert
        .color()
        .map(|c| coloring.color_label(c))
        .unwrap_or_else(|| "-".into());
    t.check(
        cert.verdict(),
        format!("FS^{{<=3}}(X) is monochromatic, color={label}"),
    );

    let mut identities = true;
    for p in links.windows(2) {
        let (n, m) = (&p[0], &p[1]);
        let s = decompose(n.value() + m.value(), a.base)?;
        let link = Gap::new(n.mu(), m.lambda())?;
        let short = classify_gap(&f, link, s.mu())?.short;
        identities &= sg_of(&f, &s) == sg_of(&f, n) + sg_of(&f, m) + usize::from(short);
        identities &= !fresh || vsg_of(&f, &s) == sg_of(&f, n) + vsg_of(&f, m);
    }
    t.check(
        identities,
        "gap counts: SG(n+m) = SG(n) + SG(m) + [link short], VSG(n+m) = SG(n) + VSG(m)",
    );

    let limit = chain.decodable_limit().map_or(0, u64::from);
    let probe = Probe::new(&f);
    let mut rows = Vec::new();
    let mut bounded = true;
    let mut agree = true;
    for y in 1..=limit {
        probe.reset();
        let v = decode_range_membership(&chain, &probe, y)?;
        let Evidence::Chain {
            element,
            successor,
            bound,
        } = v.evidence
        else {
            unreachable!("range verdicts carry chain evidence")
        };
        bounded &= probe.max_argument() <= bound;
        agree &= v.member == range_oracle(&f, y);
        rows.push(format!(
            "{y},{},{element},{successor},{bound},{}",
            u8::from(v.member),
            probe.max_argument()
        ));
    }
    t.check(limit > 0, format!("decodable queries: y in [1, {limit}]"));
    t.note("y,member,n,m,bound,max_query");
    for row in rows {
        t.note(row);
    }
    t.check(bounded, "no verdict queried f beyond lambda(m)");
    t.check(agree, "decoded verdicts match the privileged range oracle");
    Ok(t.finish())
}

pub fn delta2(a: &DemoDelta2Args) -> Result<Transcript> {
    let (approx, source) = match &a.approx_path {
        Some(path) => (load_approx(path)?, path.display().to_string()),
        None => (
            REFERENCE_APPROX.parse::<LimitApproximation>()?,
            "built-in".to_string(),
        ),
    };
    let c = delta2_coloring(approx.clone());
    let horizon = approx.horizon();
    let mut t = Transcript::new();
    t.note(format!(
        "# limit decoding demo: |W| = {}, approximation from {source}",
        a.size
    ));
    t.note("# finite mind-change schedules stand in for a bi-immune target set");
    let changes: usize = approx.schedules().values().map(|s| s.mind_changes()).sum();
    t.note(format!(
        "# horizon K={horizon}, {} schedules, {changes} mind changes, last stabilization at stage {}",
        approx.schedules().len(),
        approx.max_stabilization_stage()
    ));

    let (value, indices) = delta2_choice(&approx, a.size)?;
    t.note(format!(
        "# indices sharing limit value {value}: {}",
        braces(&indices)
    ));
    let w = synthesize_delta2_solution(&approx, a.size)?;
    t.note(format!("# synthesized W = {}", braces(w.elements())));
    let floor = approx.max_stabilization_stage();
    t.check(
        w.elements().iter().all(|&s| s >= floor),
        format!("every element of W is past stabilization (>= {floor})"),
    );
    let cert = w.check(&c)?;
    t.check(
        cert.color()
            .is_some_and(|col| u64::from(col.0) == u64::from(value)),
        format!("FS^{{<=2}}(W) is monochromatic with color {value}"),
    );

    let mut disagree = true;
    let mut pairs = 0u64;
    for k in 0..=horizon {
        let Ok(level) = u32::try_from(k) else { break };
        let start = approx.stabilization_stage(k).max(1);
        let side = |digit| -> Result<Vec<u8>> {
            let class = ResidueClass::new(3, level, digit)?;
            Ok((start..=SCAN_BOUND)
                .filter(|&n| class.contains(n))
                .map(|n| c.color(n).0)
                .collect())
        };
        let (ones, twos) = (side(1)?, side(2)?);
        // all cross pairs differ iff the color sets are disjoint
        let set: BTreeSet<u8> = ones.iter().copied().collect();
        disagree &= twos.iter().all(|col| !set.contains(col));
        pairs += (ones.len() * twos.len()) as u64;
    }
    t.check(
        disagree,
        format!("past sigma(k), O_(k,1) and O_(k,2) never share a color ({pairs} pairs, k <= {horizon}, n <= {SCAN_BOUND})"),
    );

    let b = decode_delta2(w.elements(), &c, horizon)?;
    t.note(format!("# B0 = {}, B1 = {}", braces(&b.b0), braces(&b.b1)));
    t.check(
        b.b1.iter().all(|&k| approx.limit_value(k) == 1)
            && b.b0.iter().all(|&k| approx.limit_value(k) == 0),
        "B1 lies inside A and B0 inside its complement (checked against the limits)",
    );
    t.check(b.is_disjoint(), "B0 and B1 are disjoint");
    let informative: BTreeSet<u64> = w
        .elements()
        .iter()
        .map(|&s| residue_class(s, 3).map(|cl| u64::from(cl.level)))
        .collect::<hindman_core::Result<_>>()?;
    let covered = informative
        .iter()
        .filter(|&&k| k <= horizon)
        .all(|k| b.b0.contains(k) || b.b1.contains(k));
    t.check(
        covered,
        format!(
            "every informative index is decoded: {}",
            braces(&informative)
        ),
    );
    Ok(t.finish())
}
