//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints its pass/fail line, tolerance and timing even when it passes.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use ftc_core::algebra::center;
use ftc_core::fusion::{lambda_group, BlockPartition, FusionRing};
use ftc_core::groups::GroupTable;
use ftc_core::hopf::{
    central_grouplikes, gen_group_algebra, grouplike_independence, grouplikes, pivotal_grouplikes, HopfAlgebra,
};
use ftc_core::io::{parse_document, Document};
use ftc_core::phi::{phi_map, run_all};
use ftc_core::rep::{ext_linkage_blocks, fusion_from_hopf, hopf_simples, idempotent_blocks, DEFAULT_SEED};
use ftc_core::{Field, Matrix, Scalar};
use ftc_oracles::{fusion_from_characters, grouplikes_bruteforce, lambda_bruteforce, s3_character_table, PlainHopf};

type Check = Result<String, String>;

fn instances_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

/// Every bundled Hopf instance, sorted by file name.
fn hopf_corpus() -> Vec<(String, HopfAlgebra)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(instances_dir())
        .expect("instances directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .filter_map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            match parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display())) {
                Document::Hopf(h) => Some((p.file_stem().unwrap().to_string_lossy().into_owned(), h)),
                _ => None,
            }
        })
        .collect()
}

fn fusion_instance(name: &str) -> (FusionRing, BlockPartition) {
    let text = std::fs::read_to_string(instances_dir().join(name)).unwrap();
    match parse_document(&text).unwrap() {
        Document::Fusion(f, b) => (f, b),
        _ => panic!("{name} is not fusion data"),
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let t = Instant::now();
    let out = f();
    let el = t.elapsed();
    if el > limit {
        return Err(format!(
            "{what} took {:.3} s, over the {:.0} s limit",
            el.as_secs_f64(),
            limit.as_secs_f64()
        ));
    }
    Ok(out)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn residues(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(|x| x.as_residue().expect("prime field scalar")).collect()
}

fn plain(h: &HopfAlgebra) -> PlainHopf {
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.alg.product_terms(i, j) {
                mult.push((i, j, *k, c.as_residue().unwrap()));
            }
        }
    }
    PlainHopf {
        p: h.field().characteristic(),
        dim: n,
        mult,
        comult: h
            .comult
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(j, k, c)| (*j, *k, c.as_residue().unwrap()))
                    .collect()
            })
            .collect(),
        counit: residues(&h.counit),
    }
}

fn group_ring(n: usize) -> FusionRing {
    let t = GroupTable::cyclic(n);
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| t.mul(a, b)).collect()).collect();
    FusionRing::group_ring(&table, 0)
}

fn triples(f: &FusionRing) -> Vec<(usize, usize, usize)> {
    f.entries().map(|(t, _)| t).collect()
}

fn c1_lambda_cyclic() -> Check {
    // every root of unity of order at most 8 is a power of a primitive 840th root
    const M: u64 = 840;
    let mut worst = 0.0f64;
    for n in 2..=8usize {
        let f = group_ring(n);
        let b = BlockPartition::singletons(&f);
        let t = Instant::now();
        let lg = lambda_group(&f, &b, 0, None).map_err(|e| e.to_string())?;
        worst = worst.max(t.elapsed().as_secs_f64());
        ensure(t.elapsed() < Duration::from_secs(1), || format!("Z/{n} over 1 s"))?;
        ensure(lg.order() == n && lg.invariants.is_cyclic(), || {
            format!("Z/{n}: order {} invariants {:?}", lg.order(), lg.invariants)
        })?;
        let ours: BTreeSet<Vec<u64>> = lg
            .functions
            .iter()
            .map(|l| {
                let m = l.modulus.max(1);
                assert_eq!(M % m, 0);
                l.exponents.iter().map(|e| e % m * (M / m)).collect()
            })
            .collect();
        let oracle: BTreeSet<Vec<u64>> = lambda_bruteforce(n, &triples(&f), &[], M).into_iter().collect();
        ensure(ours == oracle, || {
            format!("Z/{n}: {} functions vs {} from brute force", ours.len(), oracle.len())
        })?;
    }
    Ok(format!(
        "n = 2..8 cyclic of order n, equal to brute force; slowest {worst:.3} s"
    ))
}

fn c2_char_p_kernel() -> Check {
    let limit = Duration::from_secs(1);
    let (f, b) = fusion_instance("z6_fusion.json");
    let lg = timed(limit, "Z/6 lambda group", || lambda_group(&f, &b, 3, None))?.map_err(|e| e.to_string())?;
    ensure(lg.order() == 2, || format!("Z/6 at char 3: order {}", lg.order()))?;
    let f3 = Field::prime(3).unwrap();
    let h = gen_group_algebra(&GroupTable::cyclic(3), &f3).map_err(|e| e.to_string())?;
    let (gs, table) = timed(limit, "F_3[Z/3] pipeline", || {
        (grouplikes(&h), phi_map(&h, DEFAULT_SEED))
    })?;
    let gs = gs.map_err(|e| e.to_string())?;
    let table = table.map_err(|e| e.to_string())?;
    ensure(gs.len() == 3, || format!("|G| = {}", gs.len()))?;
    ensure(table.kernel().len() == 3, || {
        format!("|Ker| = {}", table.kernel().len())
    })?;
    ensure(table.image().len() == 1, || format!("|Im| = {}", table.image().len()))?;
    Ok("Z/6 at char 3 has order 2; F_3[Z/3]: |G| = 3, |Ker| = 3, |Im| = 1".into())
}

fn c3_rep_s3() -> Check {
    let f7 = Field::prime(7).unwrap();
    let h = gen_group_algebra(&GroupTable::symmetric3(), &f7).map_err(|e| e.to_string())?;
    let (hf, lg, central, cert) = timed(Duration::from_secs(5), "Rep(S3) pipeline", || {
        let hf = fusion_from_hopf(&h, DEFAULT_SEED).map_err(|e| e.to_string())?;
        let lg = lambda_group(&hf.ring, &hf.blocks, 7, Some(&f7)).map_err(|e| e.to_string())?;
        let gs = grouplikes(&h).map_err(|e| e.to_string())?;
        let central = central_grouplikes(&h, &gs);
        let cert = run_all(&h, "s3_f7", DEFAULT_SEED);
        Ok::<_, String>((hf, lg, central, cert))
    })??;
    ensure(hf.simples.dims() == vec![1, 1, 2], || {
        format!("dims {:?}", hf.simples.dims())
    })?;
    // oracle order: trivial, sign, standard; ours puts the unit first and sorts the rest
    let (sizes, chars) = s3_character_table();
    let oracle = fusion_from_characters(&sizes, &chars);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let ours = hf.ring.n(i, j, k) as i64;
                ensure(ours == oracle[i][j][k], || {
                    format!("N_{i}{j}^{k} = {ours}, character table gives {}", oracle[i][j][k])
                })?;
            }
        }
    }
    ensure(hf.ring.product(2, 2) == vec![1, 1, 1], || "V x V".into())?;
    ensure(
        hf.blocks.classes.len() == 3 && hf.blocks.classes.iter().all(|c| c.len() == 1),
        || format!("blocks {:?}", hf.blocks.classes),
    )?;
    ensure(lg.order() == 1, || format!("lambda group of order {}", lg.order()))?;
    ensure(central.len() == 1, || format!("{} central grouplikes", central.len()))?;
    ensure(cert.passed(), || "certificate has a failing entry".into())?;
    Ok("dims {1,1,2}, V x V = 1 + s + V matches the character table, 3 singleton blocks, trivial lambda group and centre, certificate passes".into())
}

fn c4_bound(corpus: &[(String, HopfAlgebra)]) -> Check {
    let mut parts = Vec::new();
    timed(Duration::from_secs(30), "corpus", || -> Result<(), String> {
        for (name, h) in corpus {
            let gs = grouplikes(h).map_err(|e| format!("{name}: {e}"))?;
            let c = central_grouplikes(h, &gs).len();
            let z = center(&h.alg).dim();
            ensure(c <= z, || {
                format!("{name}: {c} central grouplikes > centre dimension {z}")
            })?;
            parts.push(format!("{name} {c}<={z}"));
        }
        Ok(())
    })??;
    Ok(format!("{} instances: {}", corpus.len(), parts.join(", ")))
}

fn c5_independence(corpus: &[(String, HopfAlgebra)]) -> Check {
    for (name, h) in corpus {
        timed(Duration::from_secs(1), name, || -> Result<(), String> {
            let gs = grouplikes(h).map_err(|e| format!("{name}: {e}"))?;
            let central = central_grouplikes(h, &gs);
            ensure(grouplike_independence(h.field(), &gs), || {
                format!("{name}: grouplikes dependent")
            })?;
            ensure(grouplike_independence(h.field(), &central), || {
                format!("{name}: central grouplikes dependent")
            })
        })??;
    }
    Ok(format!("full rank on all {} instances", corpus.len()))
}

/// Matrix of `x -> g x g^{-1}` in the algebra basis.
fn conjugation(h: &HopfAlgebra, g: &[Scalar]) -> Matrix {
    let g_inv = h.antipode_of(g);
    h.alg.left_mult_matrix(g).mul(&h.alg.right_mult_matrix(&g_inv))
}

fn c6_pivotal(corpus: &[(String, HopfAlgebra)]) -> Check {
    let mut seen = (0, 0);
    for (name, h) in corpus {
        timed(Duration::from_secs(1), name, || -> Result<(), String> {
            let gs = grouplikes(h).map_err(|e| format!("{name}: {e}"))?;
            let piv = pivotal_grouplikes(h, &gs).map_err(|e| format!("{name}: {e}"))?;
            if name.starts_with("sweedler") || name.starts_with("taft") {
                ensure(piv.len() == 1, || format!("{name}: |Piv| = {}", piv.len()))?;
                let g_idx = h
                    .alg
                    .names()
                    .iter()
                    .position(|s| s == "g")
                    .ok_or("no basis element g")?;
                let g = h.alg.basis_vector(g_idx);
                ensure(gs.elements[piv[0]] == g, || format!("{name}: pivotal element is not g"))?;
                ensure(h.antipode_squared() == conjugation(h, &g), || {
                    format!("{name}: S^2 != ad g")
                })?;
                seen.0 += 1;
            } else if !name.starts_with("dual") {
                let central = central_grouplikes(h, &gs);
                let piv_set: BTreeSet<&Vec<Scalar>> = piv.iter().map(|&i| &gs.elements[i]).collect();
                let cen_set: BTreeSet<&Vec<Scalar>> = central.elements.iter().collect();
                ensure(piv_set == cen_set, || {
                    format!("{name}: Piv differs from central grouplikes")
                })?;
                seen.1 += 1;
            }
            Ok(())
        })??;
    }
    Ok(format!(
        "{} pointed instances with Piv = {{g}} and S^2 = ad g, {} group algebras with Piv = central",
        seen.0, seen.1
    ))
}

fn c7_grouplike_oracle(corpus: &[(String, HopfAlgebra)]) -> Check {
    let mut count = 0;
    timed(Duration::from_secs(10), "dim <= 9 corpus", || -> Result<(), String> {
        for (name, h) in corpus.iter().filter(|(_, h)| h.dim() <= 9) {
            let gs = grouplikes(h).map_err(|e| format!("{name}: {e}"))?;
            let ours: BTreeSet<Vec<u64>> = gs.elements.iter().map(|g| residues(g)).collect();
            let oracle: BTreeSet<Vec<u64>> = grouplikes_bruteforce(&plain(h)).into_iter().collect();
            ensure(ours == oracle, || {
                format!("{name}: {} grouplikes vs {} by brute force", ours.len(), oracle.len())
            })?;
            count += 1;
        }
        Ok(())
    })??;
    Ok(format!("set equality on {count} instances of dimension at most 9"))
}

fn c8_blocks(corpus: &[(String, HopfAlgebra)]) -> Check {
    let mut count = 0;
    let mut nonsemisimple = Vec::new();
    timed(Duration::from_secs(10), "corpus", || -> Result<(), String> {
        for (name, h) in corpus {
            let cat = hopf_simples(h, DEFAULT_SEED).map_err(|e| format!("{name}: {e}"))?;
            let a = idempotent_blocks(&h.alg, &cat).map_err(|e| format!("{name}: {e}"))?;
            let b = ext_linkage_blocks(&h.alg, &cat).map_err(|e| format!("{name}: {e}"))?;
            ensure(a == b, || format!("{name}: {:?} vs {:?}", a.classes, b.classes))?;
            if a.classes.len() < cat.len() {
                nonsemisimple.push(name.clone());
            }
            count += 1;
        }
        Ok(())
    })??;
    ensure(nonsemisimple.iter().any(|n| n == "s3_f3"), || {
        "F_3[S3] should have a block with two simples".into()
    })?;
    Ok(format!(
        "equal on {count} instances; linked simples in {}",
        nonsemisimple.join(", ")
    ))
}

fn c9_determinism(corpus: &[(String, HopfAlgebra)]) -> Check {
    let bin = env!("CARGO_BIN_EXE_ftc");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, _) in corpus {
        let path = instances_dir().join(format!("{name}.json"));
        let mut runs = Vec::new();
        for r in 0..2 {
            let out = dir.path().join(format!("{name}.{r}.json"));
            let o = Command::new(bin)
                .arg("certify")
                .arg(&path)
                .args(["--seed", "12345", "-o"])
                .arg(&out)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(o.status.code() == Some(0), || {
                format!("{name}: exit {:?}", o.status.code())
            })?;
            runs.push((o.stdout, std::fs::read(&out).map_err(|e| e.to_string())?));
        }
        ensure(runs[0] == runs[1], || {
            format!("{name}: certificates differ between runs")
        })?;
    }
    Ok(format!(
        "byte-identical report and certificate on {} instances",
        corpus.len()
    ))
}

fn main() {
    let corpus = hopf_corpus();
    let criteria: Vec<(&str, &str, &str, Box<dyn Fn() -> Check + '_>)> = vec![
        (
            "1",
            "lambda groups of Z/n",
            "exact, < 1 s each",
            Box::new(c1_lambda_cyclic),
        ),
        (
            "2",
            "characteristic-p kernel",
            "exact, < 1 s",
            Box::new(c2_char_p_kernel),
        ),
        ("3", "Rep(S3) end to end", "exact, < 5 s", Box::new(c3_rep_s3)),
        (
            "4",
            "central grouplikes vs centre",
            "exact inequality, < 30 s",
            Box::new(|| c4_bound(&corpus)),
        ),
        (
            "5",
            "grouplike independence",
            "exact rank, < 1 s each",
            Box::new(|| c5_independence(&corpus)),
        ),
        (
            "6",
            "pivotal structures",
            "exact, < 1 s each",
            Box::new(|| c6_pivotal(&corpus)),
        ),
        (
            "7",
            "grouplikes vs brute force",
            "exact set equality, < 10 s",
            Box::new(|| c7_grouplike_oracle(&corpus)),
        ),
        (
            "8",
            "blocks by two methods",
            "exact partition equality, < 10 s",
            Box::new(|| c8_blocks(&corpus)),
        ),
        (
            "9",
            "certificate determinism",
            "byte-identical",
            Box::new(|| c9_determinism(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (id, what, tol, run) in &criteria {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {id} PASS  {what} [{tol}] {secs:.3} s: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL  {what} [{tol}] {secs:.3} s: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
