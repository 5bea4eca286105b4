//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Run with `cargo test -p symrep --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use symrep::characters::{
    central_idempotent, character_table, hook_cycle_character, mn_character,
    restriction_multiplicities, GroupAlgebraElement, DEFAULT_IDEMPOTENT_CAP, DEFAULT_TABLE_CAP,
};
use symrep::combinatorics::{factorial, partitions_of};
use symrep::fock::{boson_image_residual, fock_character, heisenberg_residual, lambda_op, FockVector};
use symrep::matrix::{ExactMatrix, FloatMatrix, Matrix};
use symrep::repforms::{
    coxeter_residuals, jm_matrix, jm_relation_residuals, natural_module_check, OrthogonalRep,
    Representation, SeminormalRep,
};
use symrep::symfunc::{
    contravariant_form, power_monomial, schur_in_monomials, schur_poly, GradedPolynomial,
    DEFAULT_SYMFUNC_CAP,
};
use symrep::tableaux::{is_valid_weight, standard_tableaux};
use symrep::{Partition, Permutation, Rational, SkewShape, WeightVector};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn straight(l: &Partition) -> SkewShape {
    SkewShape::straight(l.clone())
}

fn shapes_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(partitions_of)
}

fn c1_character_tables() -> Outcome {
    for n in 1..=7 {
        let t = character_table(n, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
        let k = t.entries.len();
        let nf = factorial(n);
        // Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) = n! δ_{λμ}
        for a in 0..k {
            for b in 0..k {
                let s: BigInt = (0..k)
                    .map(|j| &t.class_sizes[j] * &t.entries[a][j] * &t.entries[b][j])
                    .sum();
                let want = if a == b { nf.clone() } else { BigInt::zero() };
                ensure(s == want, || format!("row product ({a},{b}) at n={n} is {s}"))?;
            }
        }
        // Σ_λ χ^λ(ρ) χ^λ(σ) = z_ρ δ_{ρσ}
        for a in 0..k {
            for b in 0..k {
                let s: BigInt = (0..k).map(|i| &t.entries[i][a] * &t.entries[i][b]).sum();
                let want = if a == b {
                    t.col_labels()[a].centralizer_order()
                } else {
                    BigInt::zero()
                };
                ensure(s == want, || format!("column product ({a},{b}) at n={n} is {s}"))?;
            }
        }
        let identity = t.col_labels().iter().position(|p| p.len() == n).unwrap();
        let dims: BigInt = t.entries.iter().map(|r| &r[identity] * &r[identity]).sum();
        ensure(dims == nf, || format!("Σ dim² = {dims} at n={n}"))?;
    }
    Ok("n ≤ 7, exact".into())
}

fn c2_three_way() -> Outcome {
    let mut count = 0;
    let mut at_six = 0;
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let rep = SeminormalRep::new(&lambda).map_err(|e| e.to_string())?;
            for rho in partitions_of(n) {
                let mn = mn_character(&straight(&lambda), &rho).map_err(|e| e.to_string())?;
                let tr = rep
                    .rep_matrix(&Permutation::class_representative(&rho))
                    .map_err(|e| e.to_string())?
                    .trace();
                let fock = fock_character(&lambda, &rho).map_err(|e| e.to_string())?;
                ensure(Rational::from_integer(mn.clone()) == tr && mn == fock, || {
                    format!("χ^({lambda})({rho}): mn={mn} trace={tr} fock={fock}")
                })?;
                count += 1;
                if n == 6 {
                    at_six += 1;
                }
            }
        }
    }
    Ok(format!("{count} triples, {at_six} at n=6"))
}

fn c3_dimensions() -> Outcome {
    let mut count = 0;
    for n in 1..=10 {
        let ones = Partition::column(n);
        for lambda in partitions_of(n) {
            let hook = lambda.hook_dimension();
            let syt = BigInt::from(standard_tableaux(&straight(&lambda)).len());
            let chi = mn_character(&straight(&lambda), &ones).map_err(|e| e.to_string())?;
            ensure(hook == syt && syt == chi, || {
                format!("λ=({lambda}): hook={hook} syt={syt} χ(1ⁿ)={chi}")
            })?;
            count += 1;
        }
    }
    let d = Partition::new(vec![5, 3, 3, 1]).unwrap().hook_dimension();
    ensure(d == BigInt::from(4158), || format!("dim (5,3,3,1) = {d}"))?;
    Ok(format!("{count} shapes, dim(5,3,3,1) = 4158"))
}

fn c4_relations() -> Outcome {
    let mut worst: f64 = 0.0;
    for lambda in shapes_up_to(6) {
        let s = SeminormalRep::new(&lambda).map_err(|e| e.to_string())?;
        for (name, r) in coxeter_residuals(s.generators()) {
            ensure(r.is_zero(), || format!("seminormal ({lambda}): {name}"))?;
        }
        let o = OrthogonalRep::new(&straight(&lambda)).map_err(|e| e.to_string())?;
        for (_, r) in coxeter_residuals(o.generators()) {
            worst = worst.max(r.max_abs());
        }
        let id = FloatMatrix::identity(o.dim());
        for g in o.generators() {
            worst = worst.max((&g.transpose().matmul(g) - &id).max_abs());
        }
    }
    ensure(worst <= TOL, || format!("orthogonal residual {worst:e}"))?;
    Ok(format!("λ ⊢ n ≤ 6, orthogonal residual {worst:.1e}"))
}

fn c5_jm() -> Outcome {
    for lambda in shapes_up_to(6) {
        let rep = SeminormalRep::new(&lambda).map_err(|e| e.to_string())?;
        for k in 1..=lambda.size() {
            let l = jm_matrix(&rep, k).map_err(|e| e.to_string())?;
            let want: Vec<Rational> = rep.basis().iter().map(|t| q(t.content_of(k))).collect();
            ensure(l.is_diagonal() && l.diagonal() == want, || {
                format!("L_{k} on ({lambda}) is not diag(contents)")
            })?;
        }
        let rel = jm_relation_residuals(&rep).map_err(|e| e.to_string())?;
        ensure(rel.iter().all(Matrix::is_zero), || {
            format!("s_k L_k = L_(k+1) s_k - 1 fails on ({lambda})")
        })?;
    }
    Ok("λ ⊢ n ≤ 6, exact".into())
}

fn c6_frobenius() -> Outcome {
    for n in 1..=6 {
        for rho in partitions_of(n) {
            let mut sum = GradedPolynomial::zero();
            for lambda in partitions_of(n) {
                let chi = mn_character(&straight(&lambda), &rho).map_err(|e| e.to_string())?;
                sum = &sum + &schur_poly(&lambda).scale(&Rational::from_integer(chi));
            }
            ensure(sum == power_monomial(&rho), || format!("P_({rho}) expansion"))?;
        }
        for lambda in partitions_of(n) {
            let m = schur_in_monomials(&lambda, DEFAULT_SYMFUNC_CAP).map_err(|e| e.to_string())?;
            ensure(m == schur_poly(&lambda), || format!("S_({lambda}) two ways"))?;
        }
    }
    let shapes: Vec<Partition> = (0..=6).flat_map(partitions_of).collect();
    let polys: Vec<GradedPolynomial> = shapes.iter().map(schur_poly).collect();
    for (i, a) in polys.iter().enumerate() {
        for (j, b) in polys.iter().enumerate() {
            let want = if i == j { Rational::one() } else { Rational::zero() };
            ensure(contravariant_form(a, b) == want, || {
                format!("(S_({}), S_({}))", shapes[i], shapes[j])
            })?;
        }
    }
    Ok(format!("n ≤ 6, {} Schur pairs", polys.len() * polys.len()))
}

fn c7_heisenberg() -> Outcome {
    let mut count = 0;
    let steps: Vec<i64> = (-4..=4).filter(|&x| x != 0).collect();
    for lambda in (0..=8).flat_map(partitions_of) {
        for &a in &steps {
            for &b in &steps {
                let r = heisenberg_residual(a, b, &lambda, 16).map_err(|e| e.to_string())?;
                ensure(r.is_zero(), || format!("[Λ_{a}, Λ_{b}] on v_({lambda})"))?;
                count += 1;
            }
        }
    }
    let v = FockVector::vacuum(16);
    let ab = lambda_op(2, &lambda_op(-2, &v).unwrap()).unwrap();
    let ba = lambda_op(-2, &lambda_op(2, &v).unwrap()).unwrap();
    let comm = ab.sub(&ba).unwrap();
    ensure(comm == v.scale(&q(2)), || format!("[Λ_2, Λ_-2] v_∅ = {comm}"))?;
    Ok(format!("{count} residuals, [Λ_2, Λ_-2] v_∅ = {comm}"))
}

fn c8_boson() -> Outcome {
    let mut count = 0;
    for lambda in (0..=6).flat_map(partitions_of) {
        for n in 1..=3 {
            let r = boson_image_residual(&lambda, n, 16).map_err(|e| e.to_string())?;
            ensure(r.raising.is_zero(), || format!("raising, λ=({lambda}), n={n}"))?;
            ensure(r.lowering.is_zero(), || format!("lowering, λ=({lambda}), n={n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (λ, n) pairs, both directions"))
}

fn c9_idempotents() -> Outcome {
    for n in 1..=5 {
        let shapes = partitions_of(n);
        let es: Vec<GroupAlgebraElement> = shapes
            .iter()
            .map(|l| central_idempotent(n, l, DEFAULT_IDEMPOTENT_CAP))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let mut total = GroupAlgebraElement::zero(n);
        for (i, e) in es.iter().enumerate() {
            total = total.add(e).unwrap();
            for (j, f) in es.iter().enumerate() {
                let ef = e.convolve(f).unwrap();
                let want = if i == j { e.clone() } else { GroupAlgebraElement::zero(n) };
                ensure(ef == want, || format!("e_({}) e_({}) at n={n}", shapes[i], shapes[j]))?;
            }
            for k in 1..n {
                let s = GroupAlgebraElement::basis(Permutation::simple(k, n).unwrap());
                ensure(e.convolve(&s).unwrap() == s.convolve(e).unwrap(), || {
                    format!("e_({}) does not commute with s_{k}", shapes[i])
                })?;
            }
            for (j, mu) in shapes.iter().enumerate() {
                let rep = SeminormalRep::new(mu).unwrap();
                let m = rep.linear_combination(e.terms()).unwrap();
                let want = if i == j {
                    ExactMatrix::identity(rep.dim())
                } else {
                    ExactMatrix::zeros(rep.dim(), rep.dim())
                };
                ensure(m == want, || format!("e_({}) on V^({mu})", shapes[i]))?;
            }
        }
        ensure(total == GroupAlgebraElement::identity(n), || format!("Σ e_λ ≠ 1 at n={n}"))?;
    }
    Ok("n ≤ 5, exact".into())
}

fn c10_weights() -> Outcome {
    for n in 1..=5 {
        let from_tableaux: BTreeSet<Vec<i64>> = partitions_of(n)
            .iter()
            .flat_map(|l| standard_tableaux(&straight(l)))
            .map(|t| t.content_vector().0)
            .collect();
        let r = n as i64 - 1;
        let mut from_conditions = BTreeSet::new();
        let mut tuple = vec![-r; n];
        loop {
            if is_valid_weight(&WeightVector(tuple.clone())) {
                from_conditions.insert(tuple.clone());
            }
            // odometer over [-r, r]^n
            let mut i = 0;
            while i < n && tuple[i] == r {
                tuple[i] = -r;
                i += 1;
            }
            if i == n {
                break;
            }
            tuple[i] += 1;
        }
        ensure(from_tableaux == from_conditions, || {
            format!(
                "n={n}: {} tableau weights vs {} valid tuples",
                from_tableaux.len(),
                from_conditions.len()
            )
        })?;
    }
    Ok("n ≤ 5, set equality".into())
}

fn c11_skew() -> Outcome {
    let mut count = 0;
    for outer in shapes_up_to(6) {
        for size in 0..outer.size() {
            for inner in partitions_of(size).into_iter().filter(|i| outer.contains(i)) {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                let k = shape.size();
                let cycle = Partition::row(k);
                let hook = BigInt::from(hook_cycle_character(&shape).unwrap());
                let mn = mn_character(&shape, &cycle).unwrap();
                let rep = OrthogonalRep::new(&shape).unwrap();
                let tr = rep
                    .rep_matrix(&Permutation::class_representative(&cycle))
                    .unwrap()
                    .trace();
                let diff = (tr - mn.to_f64().unwrap()).abs();
                ensure(hook == mn && diff <= TOL, || {
                    format!("{shape}: hook={hook} mn={mn} trace={tr}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} skew shapes"))
}

fn c12_natural() -> Outcome {
    for n in 2..=8 {
        let ok = natural_module_check(n, TOL).map_err(|e| e.to_string())?;
        ensure(ok, || format!("n={n}"))?;
    }
    Ok("2 ≤ n ≤ 8".into())
}

fn c13_branching() -> Outcome {
    let mut count = 0;
    for lambda in shapes_up_to(7).filter(|l| l.size() >= 2) {
        let got = restriction_multiplicities(&lambda).map_err(|e| e.to_string())?;
        // indicator of shapes reachable by removing one box
        let mut want = BTreeMap::new();
        for nu in partitions_of(lambda.size() - 1) {
            if lambda.contains(&nu) {
                want.insert(nu, BigInt::one());
            }
        }
        ensure(got == want, || format!("restriction of ({lambda})"))?;
        count += 1;
    }
    Ok(format!("{count} shapes"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("character table orthogonality", c1_character_tables),
        ("three-way character agreement", c2_three_way),
        ("dimensions", c3_dimensions),
        ("representation relations", c4_relations),
        ("Jucys-Murphy spectrum", c5_jm),
        ("Frobenius identities", c6_frobenius),
        ("Heisenberg relations", c7_heisenberg),
        ("boson-fermion correspondence", c8_boson),
        ("central idempotents", c9_idempotents),
        ("weight spectrum", c10_weights),
        ("skew Murnaghan-Nakayama", c11_skew),
        ("natural module", c12_natural),
        ("branching", c13_branching),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
