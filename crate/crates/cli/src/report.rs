//! The claim battery and its JSON and Markdown renderings.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use sp6_core::proof::ProofReport;
use sp6_core::{liealg, orbits, slicegeom, Exec, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub section: String,
    pub statement: String,
    pub status: Status,
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
    pub seed: u64,
    pub samples: usize,
    pub version: String,
}

impl VerificationReport {
    /// Every claim that ran passed.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# Verification report\n\nversion {}, seed {}, samples {}\n\n| id | section | status | statement |\n|---|---|---|---|\n",
            self.version, self.seed, self.samples
        );
        for c in &self.claims {
            out.push_str(&format!("| `{}` | {} | {} | {} |\n", c.id, c.section, c.status, c.statement));
        }
        for c in &self.claims {
            out.push_str(&format!("\n## {} ({})\n\n{}\n", c.id, c.status, c.statement));
            if let Some(w) = &c.witness {
                out.push_str("\n```text\n");
                for part in w.split("; ") {
                    out.push_str(part);
                    out.push('\n');
                }
                out.push_str("```\n");
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub sections: BTreeSet<u8>,
    pub seed: u64,
    pub samples: usize,
    pub exec: Exec,
    /// Adds a claim that always fails, for testing the exit-code contract.
    pub inject_failure: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            sections: (1..=5).collect(),
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            exec: Exec::default(),
            inject_failure: false,
        }
    }
}

pub const DEFAULT_SEED: u64 = 20240611;
pub const DEFAULT_SAMPLES: usize = 100;

type Runner = fn(&VerifyConfig) -> Result<ProofReport>;

pub struct ClaimDef {
    pub id: &'static str,
    pub section: u8,
    pub statement: &'static str,
    run: Runner,
}

/// All registered claims. Per-claim sample counts scale with `samples`.
pub fn registry() -> Vec<ClaimDef> {
    fn def(id: &'static str, section: u8, statement: &'static str, run: Runner) -> ClaimDef {
        ClaimDef { id, section, statement, run }
    }
    vec![
        def("S1.slice-basis", 1, "The square-zero triple is an sl2-triple and the block basis spans the 9-dimensional centralizer of y0.", |_| {
            liealg::slice_basis_check()
        }),
        def("S1.trace-identities", 1, "On the slice, tr A = tr A^3 = 0, tr A^2 = 2 g1, tr A^4 = 2 g1^2 + 4 g2^2, and all 5x5 minors vanish.", |c| {
            slicegeom::verify_t_equations(c.exec)
        }),
        def("S1.membership", 1, "The rank and trace test for T agrees with the equations g1 = g2 = 0.", |c| {
            slicegeom::membership_equivalence_check(5 * c.samples, c.seed, c.exec)
        }),
        def("S1.orbit-dimensions", 1, "x0 has Jordan type [2,2,2], the representative has [4,2], and their orbits have dimensions 12 and 16.", |_| {
            orbits::orbit_dimension_check()
        }),
        def("S1.orbit-closures", 1, "A^4 = 0 and A^2 = 0 characterize the closures of the [4,2] and [2,2,2] orbits.", |c| {
            orbits::power_closure_check(5 * c.samples, c.seed, c.exec)
        }),
        def("S1.singular-loci", 1, "On the cone, A^4 vanishes identically on XI and A^3 on DELTA; the singular points are detected exactly.", |c| {
            slicegeom::verify_singular_loci_symbolic(c.samples.div_ceil(2), c.seed, c.exec)
        }),
        def("S1.components", 1, "The component of a point of T determines the Jordan type of its slice matrix.", |c| {
            slicegeom::classification_check(2 * c.samples, c.seed, c.exec)
        }),
        def("S2.wreath-quotient", 2, "The quadratic map from C^4 lands in T, is invariant under the dihedral group of order 8 up to u -> -u, and has generic fibres of size 8.", |c| {
            slicegeom::verify_wreath_iso(c.samples, c.seed, c.exec)
        }),
        def("S3.parabolics", 3, "The two parabolics have 5-dimensional Levi, 2-dimensional Levi center and 8-dimensional nilradical.", |_| {
            liealg::parabolic_check()
        }),
        def("S3.fiber-sampler", 3, "Fibre flags over x0 exist exactly on the conic (P1) or quadric (P2), and every sampled flag satisfies the fibre conditions.", |c| {
            slicegeom::fiber_suite(c.samples, c.seed, c.exec)
        }),
        def("S3.kernel-limit", 3, "z_t is nilpotent of order 3 in T, and ker z_t tends to span{e1, e2 - i e3} as t -> 0.", |c| {
            slicegeom::kernel_limit_check(c.samples.clamp(1, 10), c.seed, c.exec)
        }),
        def("S4.deformation-p1", 4, "For flag type [1,2,2,1], g(z+u)g^-1 has charpoly (λ^2-s^2)(λ^2-t^2)^2 and z + u is stable under the unipotent radical.", |c| {
            slicegeom::deformation_family_check(&[1, 2, 2, 1], c.samples, c.seed, c.exec)
        }),
        def("S4.deformation-p2", 4, "For flag type [2,1,1,2], g(z+u)g^-1 has charpoly (λ^2-s^2)^2(λ^2-t^2) and z + u is stable under the unipotent radical.", |c| {
            slicegeom::deformation_family_check(&[2, 1, 1, 2], c.samples, c.seed, c.exec)
        }),
        def("S5.weyl-groups", 5, "W has order 48, W(L) order 2, W^P order 4 acting by sign changes on the fixed space, and eta is W^P-invariant.", |c| {
            liealg::weyl_check(c.samples, c.seed)
        }),
    ]
}

fn injected(_: &VerifyConfig) -> Result<ProofReport> {
    let mut r = ProofReport::new("injected failure");
    r.push("deliberately false", false, "injected for exit-code testing");
    Ok(r)
}

fn run_one(def: &ClaimDef, config: &VerifyConfig) -> Claim {
    let start = Instant::now();
    let (status, witness) = match (def.run)(config) {
        Ok(report) if report.passed() => (Status::Pass, report.summary_witness()),
        Ok(report) => (Status::Fail, report.summary_witness()),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    Claim {
        id: def.id.to_string(),
        section: def.section.to_string(),
        statement: def.statement.to_string(),
        status,
        witness: Some(witness),
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the claims of the selected sections, sorted by id.
pub fn run_verify(config: &VerifyConfig) -> VerificationReport {
    let mut defs: Vec<ClaimDef> = registry().into_iter().filter(|s| config.sections.contains(&s.section)).collect();
    if config.inject_failure {
        defs.push(ClaimDef { id: "S0.injected-failure", section: 0, statement: "Always fails.", run: injected });
    }
    let mut claims = config.exec.map_slice(&defs, |s| run_one(s, config));
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    VerificationReport { claims, seed: config.seed, samples: config.samples, version: env!("CARGO_PKG_VERSION").to_string() }
}

/// Parses `"1,3,5"`; the empty string selects nothing.
pub fn parse_sections(text: &str) -> std::result::Result<BTreeSet<u8>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.parse::<u8>() {
            Ok(n @ 1..=5) => Ok(n),
            _ => Err(format!("invalid section `{p}`; expected a number from 1 to 5")),
        })
        .collect()
}
