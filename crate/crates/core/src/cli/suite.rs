use nilcomplex::ncomplex::{
    contraction_check, contraction_matrix, hexagon_check, kapranov_check, proposition2_check, NDiffModule,
};
use nilcomplex::qdga::{matrix_example, psi_map, tensor_algebra, triviality_check, FiniteAlgebra};
use nilcomplex::random::{random_graded_ses, random_module, random_ses, rng};
use nilcomplex::simplicial::{
    build_hochschild, build_simplicial_forms, build_simplicial_set_module, lemma9_contraction, theorem1_diagram,
    theorem234_check, theorem4_simplicial_check, Bimodule, CosimplicialModule, SimplicialComplexK,
};
use nilcomplex::{Error, QContext};
use rayon::prelude::*;

use super::{Failure, RunConfig, Suite};

pub type Outcome = Result<String, String>;
type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Item {
    pub name: &'static str,
    check: Check,
}

fn item(name: &'static str, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Item {
    Item { name, check: Box::new(check) }
}

fn fail(e: Error) -> String {
    e.to_string()
}

/// Seed for one suite item, so that items are independent of scheduling.
fn item_seed(seed: u64, name: &str) -> u64 {
    name.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| h.rotate_left(7) ^ b as u64)
}

fn hexagons(e: &NDiffModule) -> Result<usize, Error> {
    let n = e.order();
    let mut count = 0;
    for l in 1..n {
        for m in 1..n - l {
            hexagon_check(e, l, m)?;
            count += 1;
        }
    }
    Ok(count)
}

/// Cosimplicial instances shared by the theorem items.
fn instances(cfg: &RunConfig, ctx: &QContext) -> Result<Vec<(String, CosimplicialModule)>, Error> {
    let name = cfg.preset.clone().unwrap_or_else(|| "dual_numbers".into());
    let a = FiniteAlgebra::preset(&name, ctx.field())?;
    let h = build_hochschild(&a, &Bimodule::regular(&a), ctx, cfg.algebra_window())?;
    let forms = build_simplicial_forms(&SimplicialComplexK::triangle_boundary(), ctx, cfg.algebra_window())?;
    Ok(vec![(format!("C({name}, {name})"), h), ("forms on the triangle boundary".into(), forms.module().clone())])
}

fn over_instances(
    cfg: &RunConfig,
    ctx: &QContext,
    f: impl Fn(&CosimplicialModule) -> Result<usize, Error> + Send + Sync + 'static,
) -> impl Fn() -> Outcome + Send + Sync + 'static {
    let (cfg, ctx) = (cfg.clone(), ctx.clone());
    move || {
        let mut total = 0;
        for (label, e) in instances(&cfg, &ctx).map_err(fail)? {
            total += f(&e).map_err(|err| format!("{label}: {err}"))?;
        }
        Ok(format!("{total} checks"))
    }
}

fn core_items(cfg: &RunConfig, ctx: &QContext) -> Vec<Item> {
    let n = ctx.order();
    let trials = cfg.trials;
    let seed = cfg.seed;
    let mut items = Vec::new();
    let c = ctx.clone();
    items.push(item("lemma1", move || {
        let mut r = rng(item_seed(seed, "lemma1"));
        let mut count = 0;
        for t in 0..trials {
            let e = random_module(&c, 2 * n + t % n, &mut r);
            count += hexagons(&e).map_err(|err| format!("trial {t}: {err}; d = {:?}", e.d()))?;
        }
        Ok(format!("{count} hexagons exact"))
    }));
    let c = ctx.clone();
    items.push(item("lemma2", move || {
        let mut r = rng(item_seed(seed, "lemma2"));
        for t in 0..trials {
            let s = random_ses(&c, 2 * n, &mut r);
            for level in 1..n {
                s.hexagon_ses_check(level).map_err(|err| format!("trial {t}, level {level}: {err}"))?;
            }
        }
        let g = random_graded_ses(&c, 0, 2 * n as i64, n + 2, &mut r).map_err(fail)?;
        for level in 1..n {
            for k in 0..=2 * n as i64 {
                g.long_exact_check(level, k).map_err(|err| format!("graded, level {level}, degree {k}: {err}"))?;
            }
        }
        Ok(format!("{trials} sequences"))
    }));
    let c = ctx.clone();
    items.push(item("lemma5", move || {
        let e = NDiffModule::shift(&c, n).map_err(fail)?;
        match contraction_check(&e, &contraction_matrix(&c, n), &c).map_err(fail)? {
            true => Ok(format!("H_{n} D_{n} - q D_{n} H_{n} = Id")),
            false => Err("Σ D^(N-1-k) H^(N-1) D^k ≠ [N-1]_q! Id".into()),
        }
    }));
    let c = ctx.clone();
    items.push(item("prop2", move || {
        let mut r = rng(item_seed(seed, "prop2"));
        for t in 0..trials {
            let e = random_module(&c, 2 * n + t % (2 * n), &mut r);
            if !proposition2_check(&e).map_err(fail)? {
                return Err(format!("trial {t}: d = {:?}", e.d()));
            }
        }
        Ok(format!("{trials} modules"))
    }));
    items.push(item(
        "lemma8",
        over_instances(cfg, ctx, |e| {
            for m in 0..3 {
                e.lemma8_check(m)?;
            }
            Ok(3)
        }),
    ));
    items.push(item(
        "cor3",
        over_instances(cfg, ctx, |e| {
            e.corollary34_check()?;
            Ok(1)
        }),
    ));
    items.push(item(
        "cor4",
        over_instances(cfg, ctx, |e| {
            for p in 0..3 {
                e.remark3_check(p)?;
            }
            Ok(3)
        }),
    ));
    items.push(item(
        "thm1",
        over_instances(cfg, ctx, |e| {
            for p in 0..3 {
                theorem1_diagram(e, p)?;
            }
            Ok(3)
        }),
    ));
    items.push(item(
        "lemma9",
        over_instances(cfg, ctx, |e| {
            for p in 0..=3.min(e.max_degree()) {
                if !lemma9_contraction(e, p)? {
                    return Err(Error::Mismatch(vec![format!("H_(m)(E_{}, δ_{}) ≠ 0", p + 1, p + 1)]));
                }
            }
            Ok(4)
        }),
    ));
    // The same check covers Φ bijectivity and the dictionary; each line keeps its own failures.
    for (name, phi) in [("thm2", true), ("thm3", false)] {
        items.push(item(
            name,
            over_instances(cfg, ctx, move |e| {
                let mut checked = 0;
                for p in 0..3 {
                    match theorem234_check(e, p) {
                        Ok(r) => checked += if phi { r.phi_checked.len() } else { r.cells_checked },
                        Err(Error::Mismatch(list)) => {
                            let mine: Vec<String> = list.into_iter().filter(|s| s.starts_with('Φ') == phi).collect();
                            if !mine.is_empty() {
                                return Err(Error::Mismatch(mine));
                            }
                        }
                        Err(other) => return Err(other),
                    }
                }
                Ok(checked)
            }),
        ));
    }
    let (c, window) = (ctx.clone(), cfg.simplicial_window());
    items.push(item("thm4", move || {
        let mut cells = 0;
        for (label, k) in [("point", SimplicialComplexK::point()), ("triangle", SimplicialComplexK::triangle_boundary())] {
            let s = build_simplicial_set_module(&k, &c, window).map_err(fail)?;
            for variant in 0..2 {
                cells += theorem4_simplicial_check(&s, variant).map_err(|err| format!("{label}, d'_{variant}: {err}"))?.cells_checked;
            }
        }
        Ok(format!("{cells} cells"))
    }));
    let c = ctx.clone();
    items.push(item("kapranov", move || {
        let mut r = rng(item_seed(seed, "kapranov"));
        for t in 0..trials {
            let e = random_module(&c, 2 * n + t % (2 * n), &mut r);
            let rep = kapranov_check(&e).map_err(fail)?;
            if !rep.holds() {
                return Err(format!("trial {t}: {rep:?}; d = {:?}", e.d()));
            }
        }
        Ok(format!("{trials} modules"))
    }));
    items
}

fn qdga_items(cfg: &RunConfig, ctx: &QContext) -> Vec<Item> {
    let name = cfg.preset.clone().unwrap_or_else(|| "dual_numbers".into());
    let top = cfg.algebra_window();
    let mut items = Vec::new();
    let (c, nm) = (ctx.clone(), name.clone());
    items.push(item("qdga-leibniz", move || {
        let a = FiniteAlgebra::preset(&nm, c.field()).map_err(fail)?;
        tensor_algebra(&a, &c, top).map_err(fail)?;
        let lambdas: Vec<_> = (1..=c.order() as i64).map(|x| c.field().from_i64(x)).collect();
        matrix_example(&c, &lambdas).map_err(|err| format!("matrix example: {err}"))?;
        Ok(format!("T({nm}) up to degree {top} and the matrix example"))
    }));
    let (c, nm) = (ctx.clone(), name.clone());
    items.push(item("qdga-trivial", move || {
        let a = FiniteAlgebra::preset(&nm, c.field()).map_err(fail)?;
        let t = tensor_algebra(&a, &c, top).map_err(fail)?;
        triviality_check(&t, None).map_err(fail)?;
        Ok("H^0 = k, H^(>=1) = 0 for T and Ω".into())
    }));
    let (c, nm) = (ctx.clone(), name);
    items.push(item("qdga-psi", move || {
        let a = FiniteAlgebra::preset(&nm, c.field()).map_err(fail)?;
        let t = tensor_algebra(&a, &c, top.min(4)).map_err(fail)?;
        let h = nilcomplex::qdga::hochschild_algebra(&a, &c, top.min(4)).map_err(fail)?;
        let rep = psi_map(&t, &h).map_err(fail)?;
        if rep.holds() {
            Ok("Ψ is a map of cosimplicial algebras".into())
        } else {
            Err(format!("{rep:?}"))
        }
    }));
    items
}

/// Checks on a user-supplied complex: construction first, then the module-level results.
fn input_items(cfg: &RunConfig) -> Vec<Item> {
    let cfg = cfg.clone();
    let load = move || cfg.ncomplex_file().map_err(|f| f.message);
    let l = load.clone();
    let mut items = vec![item("input", move || l().map(|c| format!("dims {:?}", c.dims())))];
    let l = load.clone();
    items.push(item("lemma1", move || Ok(format!("{} hexagons exact", hexagons(&l()?.total()).map_err(fail)?))));
    let l = load.clone();
    items.push(item("prop2", move || match proposition2_check(&l()?.total()).map_err(fail)? {
        true => Ok("multiplicities agree".into()),
        false => Err("multiplicity formula disagrees".into()),
    }));
    let l = load;
    items.push(item("kapranov", move || {
        let rep = kapranov_check(&l()?.total()).map_err(fail)?;
        if rep.holds() {
            Ok(format!("dim H_(•) = {}", rep.total_dim))
        } else {
            Err(format!("{rep:?}"))
        }
    }));
    items
}

pub fn items(cfg: &RunConfig) -> Result<Vec<Item>, Failure> {
    if cfg.file.is_some() {
        return Ok(input_items(cfg));
    }
    let ctx = cfg.ctx()?;
    ctx.require_a1()?;
    let mut out = Vec::new();
    if matches!(cfg.suite, Suite::Core | Suite::All) {
        out.extend(core_items(cfg, &ctx));
    }
    if matches!(cfg.suite, Suite::Qdga | Suite::All) {
        out.extend(qdga_items(cfg, &ctx));
    }
    Ok(out)
}

/// Runs the items in parallel; results keep declaration order.
pub fn run(items: &[Item]) -> Vec<(&'static str, Outcome)> {
    items.par_iter().map(|it| (it.name, (it.check)())).collect()
}
