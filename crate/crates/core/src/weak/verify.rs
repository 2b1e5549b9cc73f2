use super::chi::ChiContext;
use super::nu::NuContext;
use super::{triple_count, TRIPLE_BUDGET};
use crate::checks::CheckReport;
use crate::error::Error;
use crate::perm::{PermGroup, Permutation};
use crate::zlin::InvariantFactors;

/// The Schur multiplier computed as `W/R` inside `χ` and as `J/Δ` inside `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurReport {
    pub via_chi: InvariantFactors,
    pub via_nu: InvariantFactors,
    pub agree: bool,
    /// Whether both quotients are abelian, so the invariants describe them
    /// completely.
    pub abelian: bool,
}

pub fn schur_multiplier(c: &ChiContext, r: &PermGroup, n: &NuContext) -> Result<SchurReport, Error> {
    let w_mod_r = c.w().quotient(r)?.into_group();
    let j_mod_delta = n.nu_j().quotient(n.delta())?.into_group();
    let via_chi = w_mod_r.abelian_invariants();
    let via_nu = j_mod_delta.abelian_invariants();
    Ok(SchurReport {
        agree: via_chi == via_nu,
        abelian: w_mod_r.is_abelian() && j_mod_delta.is_abelian(),
        via_chi,
        via_nu,
    })
}

fn order_detail(name: &str, g: &PermGroup) -> String {
    format!("|{name}| = {}", g.order())
}

fn commute(a: &PermGroup, b: &PermGroup) -> bool {
    a.generators()
        .iter()
        .all(|x| b.generators().iter().all(|y| x.mul(y) == y.mul(x)))
}

/// Clauses (i)–(v) of the basic lemma on `D`, `L`, `W` and `R`.
pub fn verify_lemma_chain(c: &ChiContext, r: &PermGroup) -> Result<CheckReport, Error> {
    let g = c.group();
    let m = c.model();
    let mut report = CheckReport::new();

    let normal = r.is_normal_in(g);
    let psi_inv = c.psi_subgroup(r).same_group(r);
    report.push("r-normal-psi-invariant", normal && psi_inv, order_detail("R", r));

    let w_h = g.commutator_subgroup(c.w(), c.h())?;
    let chain = w_h.is_subgroup_of(r) && r.is_subgroup_of(c.w()) && c.w().is_subgroup_of(c.d());
    report.push(
        "subgroup-chain",
        chain,
        format!(
            "|[W,H]| = {}, |R| = {}, |W| = {}, |D| = {}",
            w_h.order(),
            r.order(),
            c.w().order(),
            c.d().order()
        ),
    );

    let gens: Vec<usize> = (0..m.rank()).map(|i| m.generator_element(i)).collect();
    let mut ok = true;
    for &i in &gens {
        for &j in &gens {
            let k = Permutation::commutator(c.x_element(i), c.y_element(j));
            for &t in &gens {
                ok &= k.conjugate(c.x_element(t)) == k.conjugate(c.y_element(t));
            }
        }
    }
    report.push("conjugation-by-either-copy", ok, format!("{} generator triples", gens.len().pow(3)));

    report.push("d-centralizes-l", commute(c.d(), c.l()), String::new());

    let n = m.order();
    let (pool, label): (Vec<usize>, &str) = if triple_count(n) <= TRIPLE_BUDGET {
        ((0..n).collect(), "element")
    } else {
        (gens.clone(), "generator")
    };
    let mut triples = Vec::new();
    for &i in &pool {
        for &j in &pool {
            for &k in &pool {
                triples.push((i, j, k));
            }
        }
    }
    let ok = triples
        .iter()
        .all(|&(i, j, k)| r.contains(&c.defect(i, j, k)).unwrap_or(false));
    report.push("defects-in-r", ok, format!("{} {label} triples", triples.len()));
    Ok(report)
}

/// Compares `χ/D`, `χ/DL` and `χ/W` with `H × H`, `H/H′` and `T(H)`.
pub fn verify_canonical_quotients(c: &ChiContext) -> Result<CheckReport, Error> {
    let g = c.group();
    let h = c.model().group();
    let n = c.model().order() as u128;
    let mut report = CheckReport::new();

    let chi_d = g.quotient(c.d())?.into_group();
    let (qa, ha) = (chi_d.abelian_invariants(), c.h_squared().abelian_invariants());
    report.push(
        "chi-mod-d",
        chi_d.order() == n * n && qa == ha,
        format!("|chi/D| = {}, |H|^2 = {}, invariants {qa} vs {ha}", chi_d.order(), n * n),
    );

    let chi_dl = g.quotient(c.dl())?.into_group();
    let h_ab = h.abelian_invariants();
    let hab_order = n / c.model().derived_subgroup().order();
    let qa = chi_dl.abelian_invariants();
    report.push(
        "chi-mod-dl",
        chi_dl.order() == hab_order && qa == h_ab,
        format!("|chi/DL| = {}, |H/H'| = {hab_order}, invariants {qa} vs {h_ab}", chi_dl.order()),
    );

    let chi_w = g.quotient(c.w())?.into_group();
    let t = c.t_direct();
    let (qa, ta) = (chi_w.abelian_invariants(), t.abelian_invariants());
    report.push(
        "chi-mod-w",
        chi_w.order() == t.order() && qa == ta,
        format!("|chi/W| = {}, |T(H)| = {}, invariants {qa} vs {ta}", chi_w.order(), t.order()),
    );

    report.push(
        "chi-order-l-times-h",
        g.order() == c.l().order() * n,
        format!("|chi| = {}, |L| = {}, |H| = {n}", g.order(), c.l().order()),
    );
    Ok(report)
}

/// `χ/R` against `ν/Δ`, and the order of `χ/R` against the Schur
/// multiplier.
pub fn verify_corollary_chimodr(
    c: &ChiContext,
    r: &PermGroup,
    nu: &NuContext,
    schur: &SchurReport,
) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    let chi_r = c.group().quotient(r)?.into_group();
    let nu_delta = nu.group().quotient(nu.delta())?.into_group();
    let (a, b) = (chi_r.order(), nu_delta.order());
    let (ia, ib) = (chi_r.abelian_invariants(), nu_delta.abelian_invariants());
    report.push(
        "chi-mod-r-vs-nu-mod-delta",
        a == b && ia == ib,
        format!("|chi/R| = {a}, |nu/Delta| = {b}, invariants {ia} vs {ib}"),
    );

    let n = c.model().order() as u128;
    let multiplier = schur
        .via_chi
        .order()
        .and_then(|o| u128::try_from(o).ok())
        .unwrap_or(0);
    report.push(
        "chi-mod-r-order",
        a == n * n * multiplier,
        format!("|chi/R| = {a}, |H|^2 |M(H)| = {}", n * n * multiplier),
    );
    let t = c.t_direct().order();
    report.push(
        "chi-mod-r-via-t",
        a == t * multiplier,
        format!("|chi/R| = {a}, |T(H)| |M(H)| = {}", t * multiplier),
    );
    Ok(report)
}

/// The structure of `χ(H)` for abelian `H`.
pub fn verify_abelian_theorem(c: &ChiContext, r: &PermGroup) -> Result<CheckReport, Error> {
    if !c.model().is_abelian() {
        return Err(Error::Precondition("H is not abelian".into()));
    }
    let g = c.group();
    let h = c.h();
    let mut report = CheckReport::new();

    let l_h = g.commutator_subgroup(c.l(), h)?;
    report.push(
        "d-equals-w-equals-l-h",
        c.d().same_group(c.w()) && c.w().same_group(&l_h),
        format!("|D| = {}, |W| = {}, |[L,H]| = {}", c.d().order(), c.w().order(), l_h.order()),
    );

    let d_h = g.commutator_subgroup(c.d(), h)?;
    let l_h_h = g.commutator_subgroup(&l_h, h)?;
    let h_h = g.commutator_subgroup(h, h)?;
    let l_hh = g.commutator_subgroup(c.l(), &h_h)?;
    let mut detail = format!(
        "|R| = {}, |[D,H]| = {}, |[[L,H],H]| = {}",
        r.order(),
        d_h.order(),
        l_h_h.order()
    );
    if !l_hh.same_group(&l_h_h) {
        detail.push_str(&format!(", |[L,[H,H]]| = {}", l_hh.order()));
    }
    report.push("r-equals-d-h", r.same_group(&d_h), detail.clone());
    report.push("r-equals-l-2h", r.same_group(&l_h_h), detail);

    let class = c.l().nilpotency_class();
    report.push(
        "l-class-at-most-2",
        class.is_some_and(|k| k <= 2),
        format!("class {class:?}"),
    );

    let center = g.center()?;
    report.push(
        "l-derived-central",
        c.l_derived().is_subgroup_of(&center),
        format!("|L'| = {}, |Z(chi)| = {}", c.l_derived().order(), center.order()),
    );

    let d_squares: Vec<Permutation> = c.d().elements()?.iter().map(|x| x.mul(x)).collect();
    let d_sq = g.subgroup(d_squares)?;
    let n = c.model().order();
    let h_squares: Vec<Permutation> = (0..n)
        .map(|i| c.x_element(i).mul(c.x_element(i)))
        .collect();
    let h_sq = g.subgroup(h_squares)?;
    let h_sq_psi = g.commutator_subgroup(&h_sq, c.h_psi())?;
    report.push(
        "l-derived-from-squares",
        c.l_derived().same_group(&d_sq) && d_sq.same_group(&h_sq_psi),
        format!(
            "|L'| = {}, |<D^2>| = {}, |[H^2,H^psi]| = {}",
            c.l_derived().order(),
            d_sq.order(),
            h_sq_psi.order()
        ),
    );

    let exponent_two = r.elements()?.iter().all(|x| x.mul(x).is_identity());
    report.push("r-exponent-2", exponent_two, format!("|R| = {}", r.order()));
    Ok(report)
}

/// `γ₂(χ) = D` and `γ₃(χ) = R` for elementary abelian 2-groups.
pub fn verify_gamma_series(c: &ChiContext, r: &PermGroup) -> Result<CheckReport, Error> {
    let m = c.model();
    let elementary = m.is_abelian() && (0..m.order()).all(|i| m.multiply(i, i) == 0);
    if !elementary {
        return Err(Error::Precondition("H is not an elementary abelian 2-group".into()));
    }
    let series = c.group().lower_central_series();
    let term = |i: usize| series.get(i).unwrap_or_else(|| series.last().expect("nonempty"));
    let mut report = CheckReport::new();
    report.push(
        "gamma2-equals-d",
        term(1).same_group(c.d()),
        format!("|gamma2| = {}, |D| = {}", term(1).order(), c.d().order()),
    );
    report.push(
        "gamma3-equals-r",
        term(2).same_group(r),
        format!("|gamma3| = {}, |R| = {}", term(2).order(), r.order()),
    );
    Ok(report)
}

/// The map `χ(H) → χ(K)` induced by an epimorphism `φ: H → K` given by the
/// element of `K` assigned to each generator of `H`.
pub fn induced_epimorphism(
    source: &ChiContext,
    source_r: &PermGroup,
    target: &ChiContext,
    target_r: &PermGroup,
    phi: &[usize],
) -> Result<CheckReport, Error> {
    let (h, k) = (source.model(), target.model());
    if phi.len() != h.rank() {
        return Err(Error::Precondition(format!(
            "{} generator images for a group of rank {}",
            phi.len(),
            h.rank()
        )));
    }
    let images: Vec<Permutation> = phi.iter().map(|&e| k.element(e)).collect();
    let on_h = h.group().homomorphism(k.group(), images).map_err(|e| {
        Error::Precondition(format!("generator images do not define a homomorphism: {e}"))
    })?;
    if on_h.image().order() != k.order() as u128 {
        return Err(Error::Precondition("the map is not surjective".into()));
    }
    let lifted: Vec<Permutation> = phi
        .iter()
        .map(|&e| target.x_element(e).clone())
        .chain(phi.iter().map(|&e| target.y_element(e).clone()))
        .collect();
    let hat = source.group().homomorphism(target.group(), lifted)?;

    let mut report = CheckReport::new();
    report.push(
        "onto",
        hat.image().same_group(target.group()),
        format!("|image| = {}, |chi(K)| = {}", hat.image().order(), target.order()),
    );
    let commutes = source
        .group()
        .generators()
        .iter()
        .all(|g| hat.apply(&source.apply_psi(g)) == target.apply_psi(&hat.apply(g)));
    report.push("commutes-with-psi", commutes, String::new());
    let l_img = hat.map_subgroup(source.l());
    report.push(
        "l-image",
        l_img.same_group(target.l()),
        format!("|L(H)^phi| = {}, |L(K)| = {}", l_img.order(), target.l().order()),
    );
    let r_img = hat.map_subgroup(source_r);
    report.push(
        "r-image",
        r_img.same_group(target_r),
        format!("|R(H)^phi| = {}, |R(K)| = {}", r_img.order(), target_r.order()),
    );
    Ok(report)
}
