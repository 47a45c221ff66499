use crate::algebra::{IdempotentDecomposition, StructureAlgebra};
use crate::error::Result;
use crate::ffla::Subspace;
use crate::group::{centralizer_of, matrix_class_count, FrobeniusGroup, GroupSpec};

use super::fixed_point::witness_element;
use super::instance::InstanceAnalysis;
use super::report::{Claim, VerificationReport, Verdict};

fn report(inst: &InstanceAnalysis, claim: Claim, block: Option<usize>) -> VerificationReport {
    VerificationReport::new(claim, inst.label(), inst.p(), block)
}

fn skip_if_defect_zero(inst: &InstanceAnalysis, claim: Claim, b: usize) -> Option<VerificationReport> {
    (inst.blocks[b].defect == 0).then(|| report(inst, claim, Some(b)).verdict(Verdict::skipped("defect zero")))
}

/// `1 + p + ... + p^{m-1}`
fn geometric(p: u64, m: u32) -> u64 {
    (0..m).map(|i| p.pow(i)).sum()
}

pub fn check_uniserial_center(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::UniserialCenter, b) {
        return r;
    }
    let a = &inst.blocks[b];
    let c2 = a.loewy.c(2);
    let cyclic = a.defect_group.is_cyclic();
    let first = c2 == 1;
    let second = a.block.center.is_uniserial_local();
    // for cyclic D a block is nilpotent iff e = 1
    let third = cyclic && a.e() == 1;
    report(inst, Claim::UniserialCenter, Some(b))
        .value("c2", c2)
        .value("e", a.e())
        .flag("defect_group_cyclic", cyclic)
        .flag("c2_is_1", first)
        .flag("center_uniserial", second)
        .flag("nilpotent_and_cyclic", third)
        .verdict(Verdict::from_bool(first == second && second == third))
}

pub fn check_cyclic_defect(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    let a = &inst.blocks[b];
    if !a.defect_group.is_cyclic() {
        return report(inst, Claim::CyclicDefect, Some(b)).verdict(Verdict::skipped("defect group not cyclic"));
    }
    let pd = (inst.p() as u64).pow(a.defect) as usize;
    let e = a.e();
    let mut r = report(inst, Claim::CyclicDefect, Some(b))
        .value("p_d", pd)
        .value("e", e)
        .value("k", a.k())
        .value("loewy_length", a.loewy_length());
    if (pd - 1) % e != 0 {
        return r.note("e does not divide p^d - 1").verdict(Verdict::Fail);
    }
    let ll = (pd - 1) / e + 1;
    let k = (pd - 1) / e + e;
    let expected: Vec<usize> = (1..=ll).map(|n| if n == 2 { e } else { 1 }).collect();
    let codims_ok = a.loewy.codims == expected;
    let mut ok = codims_ok && a.loewy_length() == ll && a.k() == k;
    r = r.value("loewy_length_formula", ll).value("k_formula", k).flag("codims_match", codims_ok);
    if let Some(l) = a.l {
        r = r.value("l", l);
        ok &= l == e;
    }
    r.verdict(Verdict::from_bool(ok))
}

pub fn check_fixed_point_bound(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::FixedPointBound, b) {
        return r;
    }
    let a = &inst.blocks[b];
    let fpa = &inst.fixed[b];
    let (lambda, e) = (fpa.lambda(), a.e());
    let ll_fixed = fpa.loewy_length();
    // (lambda - 1)/e + 1 <= LL, multiplied through by e
    let lower = lambda - 1 + e <= e * ll_fixed;
    let upper = ll_fixed <= a.loewy_length();
    report(inst, Claim::FixedPointBound, Some(b))
        .value("lambda", lambda)
        .value("e", e)
        .value("fixed_point_loewy_length", ll_fixed)
        .value("loewy_length", a.loewy_length())
        .flag("lower", lower)
        .flag("upper", upper)
        .verdict(Verdict::from_bool(lower && upper))
}

pub fn check_exponent_bound(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::ExponentBound, b) {
        return r;
    }
    let a = &inst.blocks[b];
    let fpa = &inst.fixed[b];
    let p = inst.p() as u64;
    let m = fpa.center_type.m();
    let numerator = p.pow(m) + p - 2;
    let integral = numerator % (p - 1) == 0;
    let bound = numerator / (p - 1);
    let t = geometric(p, m);
    let ll_fixed = fpa.loewy_length();
    let mut r = report(inst, Claim::ExponentBound, Some(b))
        .value("m", m)
        .value("bound", bound)
        .value("t", t)
        .value("fixed_point_loewy_length", ll_fixed)
        .value("loewy_length", a.loewy_length())
        .flag("bound_integral", integral && bound == t + 1);
    let w = match witness_element(fpa) {
        Ok(w) => w,
        Err(err) => return r.note(err.to_string()).verdict(Verdict::Fail),
    };
    let f = fpa.algebra.field();
    let power = w.power(fpa);
    let expected_coeff = f.pow(f.from_int(w.orbit_size as i64), m as u64);
    let in_radical = fpa.algebra.radical().contains(&w.element);
    let nonzero = !StructureAlgebra::is_zero_vec(&power);
    let coeff_ok = power[0] == expected_coeff;
    let orbit_ok = w.orbit_size as u64 % p != 0 && a.e() % w.orbit_size == 0;
    r = r
        .value("orbit_size", w.orbit_size)
        .flag("witness_in_radical", in_radical)
        .flag("witness_power_nonzero", nonzero)
        .value("identity_coefficient", power[0].packed())
        .value("identity_coefficient_expected", expected_coeff.packed())
        .flag("orbit_size_divides_e", orbit_ok);
    let ok = integral
        && bound == t + 1
        && bound as usize <= ll_fixed
        && ll_fixed <= a.loewy_length()
        && in_radical
        && nonzero
        && coeff_ok
        && orbit_ok;
    r.verdict(Verdict::from_bool(ok))
}

pub fn check_character_bound(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::CharacterBound, b) {
        return r;
    }
    let a = &inst.blocks[b];
    let p = inst.p() as u64;
    let m = inst.fixed[b].center_type.m();
    let bound = (p.pow(m) + p - 2) / (p - 1);
    let k = a.k() as u64;
    let mut r = report(inst, Claim::CharacterBound, Some(b)).value("m", m).value("bound", bound).value("k", k);
    let mut ok = true;
    if m >= 2 {
        ok &= p + 2 <= k;
        r = r.value("p_plus_2", p + 2);
    }
    let Some(l) = a.l else {
        let r = r.note("l(B) not computed: group exceeds the full-algebra cap");
        return if ok { r.verdict(Verdict::skipped("l(B) not computed")) } else { r.verdict(Verdict::Fail) };
    };
    let l = l as u64;
    let middle = k + 1 - l;
    ok &= bound <= middle && middle <= k;
    r.value("l", l).value("k_minus_l_plus_1", middle).verdict(Verdict::from_bool(ok))
}

pub fn check_loewy_upper_bound(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    let a = &inst.blocks[b];
    let pd = (inst.p() as u64).pow(a.defect);
    report(inst, Claim::LoewyUpperBound, Some(b))
        .value("loewy_length", a.loewy_length())
        .value("p_d", pd)
        .verdict(Verdict::from_bool(a.loewy_length() as u64 <= pd))
}

pub fn check_sqrt_scan(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::SqrtScan, b) {
        return r;
    }
    let k = inst.blocks[b].k() as u64;
    let lhs = 4 * (inst.p() as u64 - 1);
    report(inst, Claim::SqrtScan, Some(b))
        .value("four_p_minus_1", lhs)
        .value("k_squared", k * k)
        .verdict(Verdict::from_bool(lhs <= k * k))
}

/// Evaluates the five sufficient conditions for `2 sqrt(p-1) <= k(B)` and
/// checks the inequalities they are meant to imply.
pub fn check_sufficient_conditions(inst: &InstanceAnalysis, b: usize) -> VerificationReport {
    if let Some(r) = skip_if_defect_zero(inst, Claim::SufficientConditions, b) {
        return r;
    }
    let a = &inst.blocks[b];
    let fpa = &inst.fixed[b];
    let p = inst.p() as u64;
    let (e, k, ll) = (a.e() as u64, a.k() as u64, a.loewy_length());
    let lambda = fpa.lambda() as u64;
    let (m, rank) = (fpa.center_type.m() as u64, fpa.center_type.rank() as u64);
    let c = |n: usize| a.loewy.c(n) as u64;
    let e_le_layer = (2..=ll).any(|n| e <= c(n));
    let e_le_l = a.l.map(|l| e <= l as u64);
    let not_elementary = !fpa.center_type.is_elementary();
    let layer_mrc = (2..=ll).find(|&n| e <= m * rank * c(n));
    let e_le_mrl = a.l.map(|l| e <= m * rank * l as u64);

    let mut r = report(inst, Claim::SufficientConditions, Some(b))
        .value("e", e)
        .value("k", k)
        .value("lambda", lambda)
        .value("m", m)
        .value("r", rank)
        .flag("e_le_some_layer", e_le_layer)
        .flag("center_not_elementary", not_elementary)
        .value("least_layer_e_le_mrc", layer_mrc.unwrap_or(0));
    if let (Some(l_ok), Some(mrl_ok)) = (e_le_l, e_le_mrl) {
        r = r.flag("e_le_l", l_ok).flag("e_le_mrl", mrl_ok);
    } else {
        r = r.note("conditions on l(B) unevaluated: l(B) not computed");
    }
    let mut ok = true;
    if e_le_layer || e_le_l == Some(true) {
        // k >= 1 + e + ((lambda-1)/e - 1), times e
        let chain = e * k >= e * e + lambda - 1;
        // e + (lambda-1)/e >= 2 sqrt(lambda-1), squared and times e^2
        let amgm = (e * e + lambda - 1).pow(2) >= 4 * e * e * (lambda - 1);
        let sqrt_lambda = 4 * (lambda - 1) <= k * k;
        r = r.flag("chain", chain).flag("chain_amgm", amgm).flag("sqrt_lambda_bound", sqrt_lambda);
        ok &= chain && amgm && sqrt_lambda;
    }
    let any = e_le_layer || e_le_l == Some(true) || not_elementary || layer_mrc.is_some() || e_le_mrl == Some(true);
    if any {
        let sqrt_p = 4 * (p - 1) <= k * k;
        r = r.flag("sqrt_p_bound", sqrt_p);
        ok &= sqrt_p;
    }
    r.flag("any_condition", any).verdict(Verdict::from_bool(ok))
}

/// `Σ k(B) = k(G)`, `Σ l(B) = #p-regular classes`, `c(1) = 1`,
/// `d = 0 <=> k = 1 <=> LL = 1`, idempotent identities and the `lambda` formula.
pub fn check_block_invariants(inst: &InstanceAnalysis) -> VerificationReport {
    let ctx = &inst.ctx;
    let sum_k: usize = inst.blocks.iter().map(|a| a.k()).sum();
    let mut ok = sum_k == ctx.class_count();
    let mut r = report(inst, Claim::BlockInvariants, None)
        .value("blocks", inst.blocks.len())
        .value("sum_k", sum_k)
        .value("classes", ctx.class_count());
    let regular = ctx.p_regular_classes().len();
    if inst.blocks.iter().all(|a| a.l.is_some()) {
        let sum_l: usize = inst.blocks.iter().filter_map(|a| a.l).sum();
        ok &= sum_l == regular;
        r = r.value("sum_l", sum_l);
    }
    r = r.value("p_regular_classes", regular);
    let c1 = inst.blocks.iter().all(|a| a.loewy.c(1) == 1);
    let zero = inst
        .blocks
        .iter()
        .all(|a| (a.defect == 0) == (a.k() == 1) && (a.k() == 1) == (a.loewy_length() == 1));
    let dec = IdempotentDecomposition { idempotents: inst.blocks.iter().map(|a| a.block.idempotent.clone()).collect() };
    let idempotents = dec.verify(ctx.center()).is_ok();
    let lambda = inst.fixed.iter().all(|f| f.lambda_direct.is_none_or(|l| l == f.lambda_formula));
    ok &= c1 && zero && idempotents && lambda;
    r.flag("c1_is_1", c1)
        .flag("defect_zero_iff_k1_iff_ll1", zero)
        .flag("idempotents", idempotents)
        .flag("lambda_formula", lambda)
        .verdict(Verdict::from_bool(ok))
}

/// `G = M_{p^d}`: `LL(ZFG) = p^{d-2}` and `p^{d-2}(p-1) < p^{d-1}+p-2`.
pub fn check_modular_group(inst: &InstanceAnalysis) -> VerificationReport {
    let r = report(inst, Claim::ModularGroup, None);
    let GroupSpec::Modular { p, d } = inst.spec else {
        return r.verdict(Verdict::skipped("not a modular p-group"));
    };
    if p as u32 != inst.p() {
        return r.verdict(Verdict::skipped("prime differs from the group's"));
    }
    if d < 4 {
        return r.verdict(Verdict::skipped("needs d >= 4"));
    }
    let p = p as u64;
    let a = &inst.blocks[0];
    let fpa = &inst.fixed[0];
    let ll = a.loewy_length() as u64;
    let center_order = p.pow(d - 2);
    let strict = center_order * (p - 1) < p.pow(d - 1) + p - 2;
    let center_ok = fpa.center.is_cyclic() && fpa.center.order() as u64 == center_order;
    let exponent = inst.ctx.group().exponent();
    let mut ok = inst.blocks.len() == 1 && ll == center_order && strict && center_ok && exponent == p.pow(d - 1);
    let mut r = r
        .value("loewy_length", ll)
        .value("p_d_minus_2", center_order)
        .value("bound_with_d_numerator", p.pow(d - 1) + p - 2)
        .value("bound_with_d_denominator", p - 1)
        .flag("strictly_below_d_bound", strict)
        .flag("center_cyclic_of_order_p_d_minus_2", center_ok)
        .value("exponent", exponent);
    if let Some(l) = a.l {
        let formula_ok = (center_order - 1) % l as u64 == 0 && (center_order - 1) / l as u64 + 1 == ll;
        ok &= formula_ok;
        r = r.value("l", l).flag("loewy_length_formula", formula_ok);
    }
    r.verdict(Verdict::from_bool(ok))
}

/// For `G = D ⋊ I` with `D` a cyclic Sylow `p`-subgroup and `C_G(D) = D`:
/// `Z(FG) = F[D]^G ⊕ Γ`, `Γ` spanned by defect-zero class sums, `Γ^2 = 0`,
/// and `J(Z)^2 = J(F[D]^G)^2`.
pub fn check_defect_zero_complement(inst: &InstanceAnalysis) -> VerificationReport {
    let r = report(inst, Claim::DefectZeroComplement, None);
    let ctx = &inst.ctx;
    let g = ctx.group();
    let d = &inst.blocks[0].defect_group;
    if !(d.is_normal() && d.is_cyclic() && centralizer_of(g, d) == *d) {
        return r.verdict(Verdict::skipped("not a cyclic Sylow subgroup extended by a faithful p'-group"));
    }
    match defect_zero_complement(inst) {
        Ok((values, ok)) => VerificationReport { values, ..r }.verdict(Verdict::from_bool(ok)),
        Err(e) => r.note(e.to_string()).verdict(Verdict::Fail),
    }
}

fn defect_zero_complement(inst: &InstanceAnalysis) -> Result<(indexmap::IndexMap<String, i64>, bool)> {
    let ctx = &inst.ctx;
    let z = ctx.center();
    let f = ctx.field();
    let d = &inst.blocks[0].defect_group;
    let k = ctx.class_count();
    let in_d: Vec<usize> = (0..k).filter(|&i| d.contains(ctx.classes()[i].representative)).collect();
    let gamma: Vec<usize> = (0..k).filter(|&i| ctx.class_defects()[i] == 0).collect();
    let partition = in_d.len() + gamma.len() == k && in_d.iter().all(|i| !gamma.contains(i));
    let gamma_sq = gamma
        .iter()
        .all(|&i| gamma.iter().all(|&j| StructureAlgebra::is_zero_vec(&z.mul(&z.basis_vector(i), &z.basis_vector(j)))));
    let gamma_space = Subspace::span(f.clone(), k, gamma.iter().map(|&i| z.basis_vector(i)));
    let gamma_ideal = gamma
        .iter()
        .all(|&j| (0..k).all(|i| gamma_space.contains(&z.mul_basis_left(i, &z.basis_vector(j)))));
    let fixed_space = Subspace::span(f.clone(), k, in_d.iter().map(|&i| z.basis_vector(i)));
    let fixed = z.subalgebra_on(&fixed_space, z.unit())?;
    let jz = z.loewy_profile();
    let jf = fixed.loewy_profile();
    let dim_j_ok = jz.dims[1] == jf.dims[1] + gamma.len();
    let dim_j2_ok = jz.dims.get(2).copied().unwrap_or(0) == jf.dims.get(2).copied().unwrap_or(0);
    let uniserial = fixed.is_uniserial_local();
    let mut v = indexmap::IndexMap::new();
    v.insert("classes".into(), k as i64);
    v.insert("dim_fixed_points".into(), in_d.len() as i64);
    v.insert("dim_gamma".into(), gamma.len() as i64);
    v.insert("partition".into(), partition as i64);
    v.insert("gamma_squared_zero".into(), gamma_sq as i64);
    v.insert("gamma_ideal".into(), gamma_ideal as i64);
    v.insert("dim_j_split".into(), dim_j_ok as i64);
    v.insert("dim_j2_equal".into(), dim_j2_ok as i64);
    v.insert("fixed_points_uniserial".into(), uniserial as i64);
    Ok((v, partition && gamma_sq && gamma_ideal && dim_j_ok && dim_j2_ok && uniserial))
}

/// Class counts of `G = P ⋊ (H × X)` against the closed forms at `x = (p-1)/22`.
pub fn check_frobenius_counts(fg: &FrobeniusGroup) -> VerificationReport {
    let (p, x) = (fg.p, fg.x);
    let mut r = VerificationReport::new(Claim::FrobeniusCounts, format!("FHK {p}"), p as u32, None);
    let k_complement = matrix_class_count(&fg.complement, p) as u64;
    let orbits = fg.nonzero_orbit_count() as u64;
    let k_orbit = k_complement + orbits;
    let k_direct = fg.group.conjugacy_classes().len() as u64;
    let k_complement_direct = match fg.complement_group() {
        Ok(h) => h.conjugacy_classes().len() as u64,
        Err(e) => return r.note(e.to_string()).verdict(Verdict::Fail),
    };
    // l(G) = k(H × X) since P is a normal Sylow p-subgroup
    let l = k_complement;
    let g = &fg.group;
    let l_direct =
        g.conjugacy_classes().iter().filter(|c| g.element_order(c.representative) % p != 0).count() as u64;
    let k_formula_ok = (p * p - 1) % (48 * x) == 0 && k_orbit == (p * p - 1) / (48 * x) + 8 * x;
    let k_linear_ok = 264 * k_orbit == 217 * p + 25;
    let l_ok = l == 8 * x && 11 * l == 4 * p - 4;
    let diff = k_orbit - l + 1;
    let diff_ok = 24 * diff == 11 * p + 35;
    r = r
        .value("k", k_orbit)
        .value("k_direct", k_direct)
        .value("k_complement", k_complement)
        .value("k_complement_direct", k_complement_direct)
        .value("nonzero_orbits", orbits)
        .value("l", l)
        .value("l_direct", l_direct)
        .value("k_minus_l_plus_1", diff)
        .value("x", x)
        .flag("k_formula", k_formula_ok)
        .flag("k_linear_formula", k_linear_ok)
        .flag("l_formula", l_ok)
        .flag("k_minus_l_plus_1_formula", diff_ok);
    let ok = k_formula_ok && k_linear_ok && l_ok && diff_ok && k_direct == k_orbit && k_complement_direct == k_complement && l_direct == l;
    r.verdict(Verdict::from_bool(ok))
}

/// All checks for an analyzed instance, blocks first.
pub fn run_checks(inst: &InstanceAnalysis) -> Vec<VerificationReport> {
    type BlockCheck = fn(&InstanceAnalysis, usize) -> VerificationReport;
    const BLOCK_CHECKS: [BlockCheck; 8] = [
        check_uniserial_center,
        check_cyclic_defect,
        check_fixed_point_bound,
        check_exponent_bound,
        check_character_bound,
        check_loewy_upper_bound,
        check_sqrt_scan,
        check_sufficient_conditions,
    ];
    let mut out = Vec::new();
    for b in 0..inst.blocks.len() {
        out.extend(BLOCK_CHECKS.iter().map(|c| c(inst, b)));
    }
    out.push(check_modular_group(inst));
    out.push(check_defect_zero_complement(inst));
    out.push(check_block_invariants(inst));
    out
}
