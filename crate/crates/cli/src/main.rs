//! Single binary exposing the verification and computation surfaces as
//! subcommands with deterministic JSON/text reports.
//!
//! Exit codes: 0 when every check in the report passes, 1 when some
//! check fails (or a golden comparison mismatches), 2 on usage or input
//! errors.

mod ingest;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use siegel_core::cycles;
use siegel_core::exact::{parse_rat, rat_string};
use siegel_core::fock::{self, FockSpace};
use siegel_core::humbert;
use siegel_core::liealg;
use siegel_core::plucker;
use siegel_core::verify::{self, VerifyConfig, XorShift64};
use siegel_core::weyl::{self, WeylElement};

use report::Report;

#[derive(Parser)]
#[command(
    name = "siegel",
    about = "Exact verification of the oscillator model, the isogeny dictionary, \
             Humbert arithmetic and special-cycle combinatorics",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Compare the rendered report against a golden file; mismatch
    /// fails the run.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// K-type analysis of the polynomial model.
    #[command(subcommand)]
    Fock(FockCmd),
    /// so(3,2) structure: roots, parabolics, bidegree tables.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Wedge/skew dictionary and the isogeny.
    #[command(subcommand)]
    Plucker(PluckerCmd),
    /// Humbert surfaces and exact period points.
    #[command(subcommand)]
    Humbert(HumbertCmd),
    /// Lattice enumeration and orbit partitions.
    #[command(subcommand)]
    Cycles(CyclesCmd),
    /// Run the full acceptance suite.
    VerifyAll(VerifyAllArgs),
}

#[derive(Subcommand)]
enum FockCmd {
    /// Isotypic decomposition of one degree.
    Decompose {
        #[arg(long)]
        degree: u16,
        #[arg(long, default_value_t = 6)]
        cap_degree: u16,
    },
    /// Harmonic basis of a K-type (e.g. --ktype 5x1).
    Harmonics {
        #[arg(long)]
        ktype: String,
        #[arg(long, default_value_t = 6)]
        cap_degree: u16,
    },
    /// Lowest-degree spanning check through --dmax.
    Howe {
        #[arg(long)]
        ktype: String,
        #[arg(long, default_value_t = 6)]
        dmax: u16,
        #[arg(long, default_value_t = 6)]
        cap_degree: u16,
    },
    /// Properties of the closed equivariant (1,1)-cochain.
    Phi,
    /// K-type multiplicities of the (1,1) wedge space.
    Wedge,
}

#[derive(Subcommand)]
enum LieCmd {
    /// The bidegree family table.
    Table,
    /// One theta-stable parabolic from a rational torus point.
    Parabolic {
        #[arg(long, allow_hyphen_values = true)]
        x1: String,
        #[arg(long, allow_hyphen_values = true)]
        x2: String,
    },
    /// Root vector eigenrelation verification.
    Roots,
}

#[derive(Subcommand)]
enum PluckerCmd {
    /// Run the full identity suite.
    Verify {
        #[arg(long, default_value_t = 0x5eed_cafe)]
        seed: u64,
    },
    /// The 5x5 image of a symplectic matrix under the isogeny; the
    /// matrix is a JSON 4x4 array of "p/q" strings.
    Rho {
        #[arg(long)]
        g: PathBuf,
    },
}

#[derive(Subcommand)]
enum HumbertCmd {
    /// Neron-Severi rank at an exact period point.
    Ns {
        #[arg(long)]
        tau: PathBuf,
    },
    /// Exact membership of a singular relation.
    Member {
        #[arg(long)]
        tau: PathBuf,
        /// Five integers a,b,c,d,e.
        #[arg(long, allow_hyphen_values = true)]
        rel: String,
    },
    /// Normal form of a positive discriminant.
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// The numeric positive 3-plane at an exact period point.
    Ztau {
        #[arg(long)]
        tau: PathBuf,
    },
}

#[derive(Subcommand)]
enum CyclesCmd {
    /// Enumerate, partition and classify one congruence datum.
    Report {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        /// Congruence class representative h (five integers).
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0,0,0")]
        h: String,
        #[arg(long, default_value_t = 1)]
        level: i64,
        #[arg(long = "box", default_value_t = 3)]
        box_bound: i64,
        #[arg(long, default_value_t = 12)]
        height: i64,
    },
}

#[derive(Args)]
struct VerifyAllArgs {
    /// Seed for the randomized property checks.
    #[arg(long, default_value_t = 0x5eed_cafe)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    cap_degree: u16,
    #[arg(long = "box", default_value_t = 3)]
    box_bound: i64,
    #[arg(long, default_value_t = 12)]
    height: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.cmd) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    print!("{rendered}");
    let mut ok = report.all_passed();
    if let Some(golden) = &cli.golden {
        match std::fs::read_to_string(golden) {
            Ok(expected) => {
                if expected != rendered {
                    eprintln!("golden mismatch against {}", golden.display());
                    ok = false;
                }
            }
            Err(e) => {
                eprintln!("error: cannot read golden file {}: {e}", golden.display());
                return ExitCode::from(2);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: &Cmd) -> Result<Report> {
    match cmd {
        Cmd::Fock(f) => run_fock(f),
        Cmd::Lie(l) => run_lie(l),
        Cmd::Plucker(p) => run_plucker(p),
        Cmd::Humbert(h) => run_humbert(h),
        Cmd::Cycles(c) => run_cycles(c),
        Cmd::VerifyAll(v) => run_verify_all(v),
    }
}

fn poly_lines(p: &weyl::Poly5) -> Vec<String> {
    WeylElement::from_poly(p)
        .text()
        .lines()
        .map(|s| s.to_string())
        .collect()
}

fn ktype_str(kt: &fock::KType) -> String {
    format!("({}, {})", kt.so3_dim(), kt.so2_char())
}

fn run_fock(cmd: &FockCmd) -> Result<Report> {
    match cmd {
        FockCmd::Decompose { degree, cap_degree } => {
            let fs = FockSpace::new(*cap_degree);
            let comps = fs
                .decompose_degree(*degree)
                .map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("fock decompose")
                .input("degree", *degree)
                .input("cap_degree", fs.cap());
            let table: Vec<Value> = comps
                .iter()
                .map(|c| {
                    json!({
                        "degree": c.degree,
                        "ktype": ktype_str(&c.ktype),
                        "multiplicity": c.multiplicity(),
                        "dim": c.dim(),
                    })
                })
                .collect();
            let total: usize = comps.iter().map(|c| c.dim()).sum();
            let d = *degree as usize;
            let expect = (d + 1) * (d + 2) * (d + 3) * (d + 4) / 24;
            r.result("components", table);
            r.result("total_dim", total);
            r.check(
                "dimension-bookkeeping",
                total == expect,
                format!("{total} = C({}+4, 4) = {expect}", degree),
            );
            Ok(r)
        }
        FockCmd::Harmonics { ktype, cap_degree } => {
            let kt = ingest::parse_ktype(ktype)?;
            let fs = FockSpace::new(*cap_degree);
            let h = fs.harmonics(kt).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("fock harmonics")
                .input("ktype", ktype_str(&kt))
                .input("cap_degree", fs.cap());
            r.result("degree", h.degree);
            r.result("dim", h.dim());
            r.result(
                "basis",
                Value::Array(
                    h.basis
                        .iter()
                        .map(|p| Value::Array(poly_lines(p).into_iter().map(Value::from).collect()))
                        .collect(),
                ),
            );
            let expected_dim = kt.so3_dim();
            r.check(
                "harmonic-dimension",
                h.dim() == expected_dim,
                format!("dim {} (irreducible dimension {})", h.dim(), expected_dim),
            );
            r.check(
                "lowering-operators-annihilate",
                {
                    let t = weyl::Sl2Triples::new();
                    h.basis
                        .iter()
                        .all(|p| t.y_alpha.apply(p).is_zero() && t.y_mu.apply(p).is_zero())
                },
                "every basis vector is harmonic",
            );
            Ok(r)
        }
        FockCmd::Howe { ktype, dmax, cap_degree } => {
            let kt = ingest::parse_ktype(ktype)?;
            let fs = FockSpace::new(*cap_degree);
            let cert = fs.howe_span_check(kt, *dmax).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("fock howe")
                .input("ktype", ktype_str(&kt))
                .input("dmax", *dmax);
            r.result("base_degree", cert.base_degree);
            r.result(
                "per_degree",
                Value::Array(
                    cert.per_degree
                        .iter()
                        .map(|(d, s, i)| json!({"degree": d, "span_dim": s, "isotype_dim": i}))
                        .collect(),
                ),
            );
            r.check(
                "raised-harmonics-exhaust-isotype",
                cert.holds,
                format!("{} degrees compared", cert.per_degree.len()),
            );
            Ok(r)
        }
        FockCmd::Phi => {
            let om = weyl::build_omega_so32().map_err(|e| anyhow!("{e}"))?;
            let phi = fock::phi_plus();
            let mut r = Report::new("fock phi");
            r.result("bidegrees", json!(phi.bidegrees()));
            let (span, _) = fock::value_span(&phi);
            r.result("image_dim", span.rank());
            let (rank5, _) = fock::restriction_rank_on_five_isotype(&phi);
            r.result("five_isotype_restriction_rank", rank5);
            let isotypes = fock::image_isotype_dims(&phi);
            r.result(
                "image_isotypes",
                isotypes
                    .iter()
                    .map(|(kt, dim)| json!({"ktype": ktype_str(kt), "dim": dim}))
                    .collect::<Vec<_>>(),
            );
            r.check("k-equivariant", phi.is_k_equivariant(&om), "exact identity");
            r.check(
                "closed",
                fock::rel_lie_differential(&phi, &om).is_zero(),
                "d(phi+) = 0 exactly",
            );
            r.check(
                "image-is-quadratics-in-the-first-three-variables",
                span.rank() == 6,
                format!("image dim {}", span.rank()),
            );
            r.check(
                "five-isotype-restriction-bijective",
                rank5 == 5,
                format!("rank {rank5} of 5"),
            );
            r.check(
                "image-isotypes",
                isotypes == vec![(fock::KType::trivial(), 1), (fock::KType::five(), 5)],
                "the image splits as the trivial type plus the five-type",
            );
            Ok(r)
        }
        FockCmd::Wedge => {
            let m = fock::wedge_decompose_p11();
            let mut r = Report::new("fock wedge");
            r.result(
                "multiplicities",
                Value::Array(
                    m.iter()
                        .map(|(kt, mult)| json!({"ktype": ktype_str(kt), "multiplicity": mult}))
                        .collect(),
                ),
            );
            let total: usize = m.iter().map(|(kt, mult)| kt.so3_dim() * mult).sum();
            r.result("total_dim", total);
            let expected = vec![
                (fock::KType::trivial(), 1),
                (fock::KType::vector(), 1),
                (fock::KType::five(), 1),
            ];
            r.check(
                "multiplicity-table",
                m == expected && total == 9,
                "1, 3 and 5 each once; dimension 9",
            );
            Ok(r)
        }
    }
}

fn run_lie(cmd: &LieCmd) -> Result<Report> {
    match cmd {
        LieCmd::Table => {
            let mut r = Report::new("lie table");
            let mut rows = Vec::new();
            for ((x1, x2), label) in liealg::family_representatives() {
                let q = liealg::parabolic_from(
                    siegel_core::exact::rat_int(x1),
                    siegel_core::exact::rat_int(x2),
                );
                let kt = liealg::vz_ktype(&q).ok();
                rows.push(json!({
                    "x": [x1, x2],
                    "family": label,
                    "levi": q.levi_label,
                    "r_plus": q.r_plus,
                    "r_minus": q.r_minus,
                    "dim_levi": q.dim_l(),
                    "bidegrees": q.bidegrees.iter()
                        .map(|(p, qq, dim)| json!([p, qq, dim]))
                        .collect::<Vec<_>>(),
                    "lowest_ktype": kt.map(|k| ktype_str(&k)),
                }));
            }
            r.result("families", rows);
            // spot checks of the table
            let q10 = liealg::parabolic_from(
                siegel_core::exact::rat_int(1),
                siegel_core::exact::rat_int(0),
            );
            r.check(
                "holomorphic-pair-family",
                q10.bidegrees == vec![(1, 1, 1), (2, 2, 1)]
                    && liealg::vz_ktype(&q10) == Ok(fock::KType::five()),
                "bidegrees (1,1), (2,2); lowest K-type (5, 0)",
            );
            let q00 = liealg::parabolic_from(
                siegel_core::exact::rat_int(0),
                siegel_core::exact::rat_int(0),
            );
            r.check(
                "full-levi-family",
                q00.bidegrees == vec![(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)],
                "bidegrees (j, j) for 0 <= j <= 3",
            );
            Ok(r)
        }
        LieCmd::Parabolic { x1, x2 } => {
            let x1 = parse_rat(x1).ok_or_else(|| anyhow!("cannot parse x1 {x1:?}"))?;
            let x2 = parse_rat(x2).ok_or_else(|| anyhow!("cannot parse x2 {x2:?}"))?;
            let q = liealg::parabolic_from(x1.clone(), x2.clone());
            let mut r = Report::new("lie parabolic")
                .input("x1", rat_string(&x1))
                .input("x2", rat_string(&x2));
            r.result("levi", q.levi_label.clone());
            r.result("dim_levi", q.dim_l());
            r.result("dim_nilradical", q.dim_u());
            r.result("r_plus", q.r_plus);
            r.result("r_minus", q.r_minus);
            r.result(
                "bidegrees",
                q.bidegrees
                    .iter()
                    .map(|(p, qq, dim)| json!([p, qq, dim]))
                    .collect::<Vec<_>>(),
            );
            match liealg::vz_ktype(&q) {
                Ok(kt) => r.result("lowest_ktype", ktype_str(&kt)),
                Err(e) => r.result("lowest_ktype_error", format!("{e}")),
            }
            r.check(
                "dimension-bookkeeping",
                q.dim_l() + 2 * q.dim_u() == 10,
                format!("dim l + 2 dim u = {} + 2*{} = 10", q.dim_l(), q.dim_u()),
            );
            Ok(r)
        }
        LieCmd::Roots => {
            let datum = liealg::roots();
            let mut r = Report::new("lie roots");
            r.result("count", datum.vectors.len());
            r.result(
                "roots",
                datum
                    .vectors
                    .iter()
                    .map(|(root, _)| json!([root.ca, root.cb]))
                    .collect::<Vec<_>>(),
            );
            r.check(
                "eigenrelations",
                datum.verify_eigenrelations(),
                "ad(t) X = gamma(t) X for all eight root vectors",
            );
            Ok(r)
        }
    }
}

fn run_plucker(cmd: &PluckerCmd) -> Result<Report> {
    let PluckerCmd::Verify { seed } = cmd else {
        return run_plucker_rho(cmd);
    };
    let mut r = Report::new("plucker verify").input("seed", *seed);
    let c = verify::c09_isogeny_dictionary(&VerifyConfig {
        seed: *seed,
        ..VerifyConfig::default()
    });
    r.check(c.name, c.passed, c.detail);
    // additional dictionary identities
    let mut rng = XorShift64::new(*seed ^ 0x77);
    let mut quadric_ok = true;
    for _ in 0..20 {
        let x: [siegel_core::exact::Rat; 4] =
            core::array::from_fn(|_| siegel_core::exact::rat_int(rng.small_int(6)));
        let y: [siegel_core::exact::Rat; 4] =
            core::array::from_fn(|_| siegel_core::exact::rat_int(rng.small_int(6)));
        quadric_ok &= plucker::plucker_quadric_check(&x, &y);
    }
    r.check("plucker-quadric-on-decomposables", quadric_ok, "20 seeded wedges");
    r.check(
        "psi-is-not-decomposable",
        plucker::plucker_quadric(&plucker::WedgeVector::psi())
            == siegel_core::exact::rat_int(-1),
        "Q(psi) = -1",
    );
    let mut roundtrip_ok = true;
    for _ in 0..20 {
        let v = plucker::FiveCoords::from_ints(
            rng.small_int(6),
            rng.small_int(6),
            rng.small_int(6),
            rng.small_int(6),
            rng.small_int(6),
        );
        roundtrip_ok &= plucker::project_psi_perp(&plucker::embed_five(&v)) == Ok(v);
    }
    r.check("five-coordinate-round-trip", roundtrip_ok, "20 seeded vectors");
    Ok(r)
}

fn run_plucker_rho(cmd: &PluckerCmd) -> Result<Report> {
    let PluckerCmd::Rho { g } = cmd else {
        unreachable!("verify handled by the caller");
    };
    let raw = std::fs::read_to_string(g)
        .map_err(|e| anyhow!("reading {}: {e}", g.display()))?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&raw)
        .map_err(|e| anyhow!("parsing {}: {e}", g.display()))?;
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(anyhow!("expected a 4x4 array of rational strings"));
    }
    let mut gm = siegel_core::exact::Matrix::zero(4, 4);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            gm[(r, c)] = parse_rat(s).ok_or_else(|| anyhow!("cannot parse rational {s:?}"))?;
        }
    }
    let rho = plucker::iso_rho(&gm).map_err(|e| anyhow!("{e}"))?;
    let mut r = Report::new("plucker rho").input("g", g.display().to_string());
    r.result(
        "rho",
        (0..5)
            .map(|i| {
                Value::Array((0..5).map(|j| Value::from(rat_string(&rho[(i, j)]))).collect())
            })
            .collect::<Vec<_>>(),
    );
    let gram = plucker::delta_gram();
    r.check(
        "preserves-the-discriminant-form",
        rho.transpose().matmul(&gram).matmul(&rho) == gram,
        "rho^t G rho = G exactly",
    );
    r.check(
        "special",
        rho.det().ok() == Some(siegel_core::exact::rat_int(1)),
        "det rho = 1",
    );
    Ok(r)
}

fn run_humbert(cmd: &HumbertCmd) -> Result<Report> {
    match cmd {
        HumbertCmd::Ns { tau } => {
            let point = ingest::load_tau(tau)?;
            let (basis, rank) = humbert::t11_and_ns_rank(&point).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("humbert ns").input("tau", tau.display().to_string());
            r.result("kernel_dim", basis.len());
            r.result("ns_rank", rank);
            r.result(
                "kernel_basis",
                basis
                    .iter()
                    .map(|v| {
                        Value::Array(
                            v.as_array().iter().map(|x| Value::from(rat_string(x))).collect(),
                        )
                    })
                    .collect::<Vec<_>>(),
            );
            r.check(
                "rank-is-one-plus-kernel",
                rank == 1 + basis.len(),
                format!("{rank} = 1 + {}", basis.len()),
            );
            Ok(r)
        }
        HumbertCmd::Member { tau, rel } => {
            let point = ingest::load_tau(tau)?;
            let v = ingest::parse_five(rel)?;
            let rel = humbert::SingularRelation::new(v[0], v[1], v[2], v[3], v[4]);
            let is_member = humbert::membership(&point, &rel).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("humbert member")
                .input("tau", tau.display().to_string())
                .input("rel", json!(v));
            r.result("discriminant", rel.discriminant());
            r.result("member", is_member);
            r.check(
                "membership",
                is_member,
                if is_member {
                    "relation vanishes at tau"
                } else {
                    "relation does not vanish at tau"
                },
            );
            Ok(r)
        }
        HumbertCmd::NormalForm { disc } => {
            let rel = humbert::normal_form(*disc).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("humbert normal-form").input("disc", *disc);
            r.result("relation", json!(rel.vector()));
            r.check(
                "discriminant-round-trip",
                rel.discriminant() == *disc && rel.is_primitive(),
                format!("Delta = {}, primitive", rel.discriminant()),
            );
            Ok(r)
        }
        HumbertCmd::Ztau { tau } => {
            let point = ingest::load_tau(tau)?;
            let fiber = humbert::z_tau(&point).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("humbert ztau").input("tau", tau.display().to_string());
            r.result(
                "z_tau",
                fiber
                    .z_tau
                    .iter()
                    .map(|row| json!(row.to_vec()))
                    .collect::<Vec<_>>(),
            );
            r.result("restricted_minors", json!(fiber.restricted_minors.to_vec()));
            r.result("exact_kernel_dim", fiber.t11_basis.len());
            r.check(
                "three-dimensional",
                fiber.z_tau.len() == 3,
                format!("numeric solution space has dim {}", fiber.z_tau.len()),
            );
            r.check(
                "positive-definite-restriction",
                fiber.restricted_minors.iter().all(|&m| m > 0.0),
                format!("principal minors {:?}", fiber.restricted_minors),
            );
            let defect = point.algebra().embedding_defect();
            r.check(
                "embedding-coherence",
                defect < 1e-18,
                format!("squared multiplicativity defect {defect:e} (advisory embedding)"),
            );
            let j = [
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [-1, 0, 0, 0],
                [0, -1, 0, 0],
            ];
            match humbert::equivariance_defect_sqr(&point, &j) {
                Ok(d2) => r.check(
                    "equivariance-under-the-weyl-element",
                    d2 < 1e-12,
                    format!("squared defect {d2:e}"),
                ),
                Err(e) => r.check("equivariance-under-the-weyl-element", false, format!("{e}")),
            }
            Ok(r)
        }
    }
}

fn run_cycles(cmd: &CyclesCmd) -> Result<Report> {
    let CyclesCmd::Report { disc, h, level, box_bound, height } = cmd;
    let hv = ingest::parse_five(h)?;
    let rep = cycles::cycle_report(*disc, hv, *level, *box_bound, *height)
        .map_err(|e| anyhow!("{e}"))?;
    let mut r = Report::new("cycles report")
        .input("disc", *disc)
        .input("h", json!(hv))
        .input("level", *level)
        .input("box", *box_bound)
        .input("height", *height);
    r.result("stable_range", rep.stable_range);
    r.result("vector_count", rep.vector_count);
    r.result("primitive_count", rep.primitive_count);
    r.result("orbit_count", rep.orbit_count);
    r.result("exact", rep.exact);
    r.result("escaped_height_bound", rep.partition.escaped);
    r.result("generator_set", rep.partition.generator_set.clone());
    if *level > 1 {
        r.result(
            "congruence_words",
            rep.partition
                .congruence_words
                .iter()
                .map(|w| json!(w))
                .collect::<Vec<_>>(),
        );
    }
    if let Some(idx) = rep.normal_form_class {
        r.result("normal_form_class", idx);
    }
    if rep.vector_count <= 200 {
        r.result(
            "classes",
            rep.partition
                .classes
                .iter()
                .map(|c| Value::Array(c.iter().map(|v| json!(v)).collect()))
                .collect::<Vec<_>>(),
        );
    } else {
        r.result(
            "class_representatives",
            rep.partition
                .classes
                .iter()
                .map(|c| json!(c[0]))
                .collect::<Vec<_>>(),
        );
        r.result(
            "class_sizes",
            rep.partition.classes.iter().map(|c| c.len()).collect::<Vec<_>>(),
        );
    }
    r.check(
        "partition-covers-enumeration",
        rep.partition.classes.iter().map(|c| c.len()).sum::<usize>() == rep.vector_count,
        format!("{} vectors across {} classes", rep.vector_count, rep.orbit_count),
    );
    r.check(
        "exactness",
        rep.exact,
        if rep.partition.escaped {
            "height bound escaped but invariants separate the classes"
        } else {
            "no generator move left the height bound"
        },
    );
    Ok(r)
}

fn run_verify_all(args: &VerifyAllArgs) -> Result<Report> {
    let cfg = VerifyConfig {
        seed: args.seed,
        cap_degree: args.cap_degree,
        box_bound: args.box_bound,
        height_bound: args.height,
    };
    let threads: usize = std::env::var("HUMBERT_KERNEL_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
        .clamp(1, 16);
    let checks = run_all_checks(&cfg, threads);
    let mut r = Report::new("verify-all")
        .input("seed", args.seed)
        .input("cap_degree", args.cap_degree)
        .input("box", args.box_bound)
        .input("height", args.height)
        .input("threads", threads as u64);
    for c in checks {
        r.check(c.name, c.passed, c.detail);
    }
    Ok(r)
}

/// Run the acceptance checks, possibly across worker threads; the
/// output order is always the criterion order.
fn run_all_checks(cfg: &VerifyConfig, threads: usize) -> Vec<verify::Check> {
    type CheckFn = fn(&VerifyConfig) -> verify::Check;
    let fns: Vec<CheckFn> = vec![
        verify::c01_harmonic_dimensions,
        verify::c02_sl2_and_dual_pair,
        verify::c03_omega_bracket_homomorphism,
        verify::c04_closedness,
        verify::c05_wedge_multiplicities,
        verify::c06_lowest_degree_span,
        verify::c07_weight_bookkeeping,
        verify::c08_parabolic_tables,
        verify::c09_isogeny_dictionary,
        verify::c10_neron_severi_ranks,
        verify::c11_discriminant_congruence,
        verify::c12_single_orbit_certification,
        verify::c13_frame_classification,
        verify::c14_fiber_equivariance,
    ];
    if threads <= 1 {
        return fns.iter().map(|f| f(cfg)).collect();
    }
    let mut results: Vec<Option<verify::Check>> = (0..fns.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in fns.chunks(fns.len().div_ceil(threads)) {
            let cfg = *cfg;
            handles.push(scope.spawn(move || {
                chunk.iter().map(|f| f(&cfg)).collect::<Vec<_>>()
            }));
        }
        let mut idx = 0;
        for h in handles {
            for c in h.join().expect("verification worker panicked") {
                results[idx] = Some(c);
                idx += 1;
            }
        }
    });
    results.into_iter().map(|c| c.expect("all checks ran")).collect()
}
