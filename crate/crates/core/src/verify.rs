//! Cross-checks between independent computations, grouped into suites.
//!
//! Each suite first gathers its data (generator matrices, character values
//! from several methods, Fock residuals) and then checks it. A [`Mutation`]
//! may be injected between the two steps to confirm that the checks do fail
//! on corrupted data.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::{
    character_table, hook_cycle_character, restriction_multiplicities, MnEvaluator,
    DEFAULT_TABLE_CAP,
};
use crate::combinatorics::{factorial, partitions_of, Partition, Permutation, SkewShape};
use crate::error::{check_cap, Error, Result};
use crate::fock::{boson_image_residual, fock_character, heisenberg_residual, lambda_word, FockVector};
use crate::matrix::{ExactMatrix, FloatMatrix, Matrix};
use crate::repforms::{
    coxeter_residuals, jm_matrix, jm_relation_residuals, natural_module_check, OrthogonalRep,
    Representation, SeminormalRep,
};
use crate::symfunc::{
    contravariant_form, frobenius_expand, power_monomial, schur_in_monomials, schur_poly,
    DEFAULT_SYMFUNC_CAP,
};
use crate::tableaux::StandardTableau;
use crate::Rational;

/// Largest `n` accepted by [`run`].
pub const VERIFY_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Coxeter,
    Orthogonality,
    Characters,
    Fock,
    Boson,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Coxeter,
        Suite::Orthogonality,
        Suite::Characters,
        Suite::Fock,
        Suite::Boson,
    ];

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Suite::Coxeter => "coxeter",
            Suite::Orthogonality => "orthogonality",
            Suite::Characters => "characters",
            Suite::Fock => "fock",
            Suite::Boson => "boson",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coxeter" => Ok(Suite::Coxeter),
            "orthogonality" => Ok(Suite::Orthogonality),
            "characters" => Ok(Suite::Characters),
            "fock" => Ok(Suite::Fock),
            "boson" => Ok(Suite::Boson),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

/// Deliberate corruption applied to gathered data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Drop the `(-1)^{leg}` sign from Murnaghan-Nakayama values, i.e.
    /// replace each value by its absolute value.
    MnSign,
    /// Negate the diagonal coefficient of every orthogonal-form generator.
    OrthogonalSign,
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mn-sign" => Ok(Mutation::MnSign),
            "orthogonal-sign" => Ok(Mutation::OrthogonalSign),
            _ => Err(Error::Parse(format!("unknown mutation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n: usize,
    pub tolerance: f64,
    pub fock_cap: usize,
    pub mutation: Option<Mutation>,
}

impl VerifyOptions {
    pub fn new(n: usize) -> Self {
        VerifyOptions {
            n,
            tolerance: crate::repforms::DEFAULT_TOLERANCE,
            fock_cap: crate::fock::DEFAULT_FOCK_CAP,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<13} {} ({} cases)", c.suite, c.name, c.cases)?;
            if let Some(why) = &c.failure {
                write!(f, ": {why}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Accumulates cases for one check, remembering the first failure.
struct Tally {
    suite: Suite,
    name: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: impl Into<String>) -> Self {
        Tally {
            suite,
            name: name.into(),
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> Check {
        Check {
            suite: self.suite,
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Runs `suite` (or every suite) for all sizes up to `opts.n`.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    check_cap("verify n", opts.n, VERIFY_CAP)?;
    if opts.n == 0 {
        return Err(Error::Domain("verify needs n ≥ 1".into()));
    }
    if !(opts.tolerance > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {}", opts.tolerance)));
    }
    let mut report = Report::default();
    for s in suite.expand() {
        let checks = match s {
            Suite::Coxeter => coxeter_suite(opts)?,
            Suite::Orthogonality => orthogonality_suite(opts)?,
            Suite::Characters => characters_suite(opts)?,
            Suite::Fock => fock_suite(opts)?,
            Suite::Boson => boson_suite(opts)?,
            Suite::All => unreachable!(),
        };
        report.checks.extend(checks);
    }
    Ok(report)
}

/// Generator matrices detached from the representation that produced them.
struct Model<T> {
    degree: usize,
    basis: Vec<StandardTableau>,
    gens: Vec<Matrix<T>>,
}

impl<T: Clone + num_traits::Num> Representation for Model<T> {
    type Scalar = T;

    fn degree(&self) -> usize {
        self.degree
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    fn generators(&self) -> &[Matrix<T>] {
        &self.gens
    }
}

fn seminormal_model(lambda: &Partition) -> Result<Model<Rational>> {
    let rep = SeminormalRep::new(lambda)?;
    Ok(Model {
        degree: rep.degree(),
        basis: rep.basis().to_vec(),
        gens: rep.generators().to_vec(),
    })
}

fn orthogonal_model(shape: &SkewShape, mutation: Option<Mutation>) -> Result<Model<f64>> {
    let rep = OrthogonalRep::new(shape)?;
    let mut gens = rep.generators().to_vec();
    if mutation == Some(Mutation::OrthogonalSign) {
        for g in &mut gens {
            for i in 0..g.rows() {
                g[(i, i)] = -g[(i, i)];
            }
        }
    }
    Ok(Model {
        degree: rep.degree(),
        basis: rep.basis().to_vec(),
        gens,
    })
}

fn shapes_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(partitions_of)
}

/// Whether `L_k` is diagonal with the contents of the basis tableaux.
fn jm_spectrum_ok<T, F>(model: &Model<T>, close: F) -> Result<bool>
where
    T: Clone + num_traits::Num,
    F: Fn(&T, i64) -> bool,
{
    for k in 1..=model.degree {
        let l = jm_matrix(model, k)?;
        for i in 0..l.rows() {
            for j in 0..l.cols() {
                let want = if i == j { model.basis[i].content_of(k) } else { 0 };
                if !close(&l[(i, j)], want) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks exact relations on seminormal generators and approximate ones on
/// orthogonal generators, including the Jucys-Murphy spectrum.
pub fn check_exact_model(
    lambda: &Partition,
    gens: &[ExactMatrix],
    basis: &[StandardTableau],
) -> Result<(bool, bool, bool)> {
    let model = Model {
        degree: lambda.size(),
        basis: basis.to_vec(),
        gens: gens.to_vec(),
    };
    let coxeter = coxeter_residuals(gens).iter().all(|(_, r)| r.is_zero());
    let spectrum = jm_spectrum_ok(&model, |x, c| *x == Rational::from_integer(c.into()))?;
    let relation = jm_relation_residuals(&model)?.iter().all(Matrix::is_zero);
    Ok((coxeter, spectrum, relation))
}

fn coxeter_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = opts.tolerance;
    let mut exact = Tally::new(Suite::Coxeter, "seminormal Coxeter relations (exact)");
    let mut exact_jm = Tally::new(Suite::Coxeter, "seminormal JM spectrum and s_k L_k = L_{k+1} s_k - 1");
    let mut float = Tally::new(Suite::Coxeter, "orthogonal Coxeter relations");
    let mut float_jm = Tally::new(Suite::Coxeter, "orthogonal JM spectrum and relation");
    for lambda in shapes_up_to(opts.n) {
        let m = seminormal_model(&lambda)?;
        let (cox, spectrum, rel) = check_exact_model(&lambda, &m.gens, &m.basis)?;
        exact.record(cox, || format!("λ = {lambda}"));
        exact_jm.record(spectrum && rel, || format!("λ = {lambda}"));

        let o = orthogonal_model(&SkewShape::straight(lambda.clone()), opts.mutation)?;
        let cox = coxeter_residuals(&o.gens).iter().all(|(_, r)| r.max_abs() <= tol);
        float.record(cox, || format!("λ = {lambda}"));
        let spectrum = jm_spectrum_ok(&o, |x, c| (x - c as f64).abs() <= tol)?;
        let rel = jm_relation_residuals(&o)?.iter().all(|r| r.max_abs() <= tol);
        float_jm.record(spectrum && rel, || format!("λ = {lambda}"));
    }
    Ok(vec![exact.finish(), exact_jm.finish(), float.finish(), float_jm.finish()])
}

fn orthogonality_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rows = Tally::new(Suite::Orthogonality, "character table row and column orthogonality");
    let mut dims = Tally::new(Suite::Orthogonality, "sum of squared dimensions is n!");
    for n in 1..=opts.n {
        let mut table = character_table(n, DEFAULT_TABLE_CAP)?;
        if opts.mutation == Some(Mutation::MnSign) {
            for v in table.entries.iter_mut().flatten() {
                *v = v.abs();
            }
        }
        rows.record(table.rows_orthogonal() && table.columns_orthogonal(), || format!("n = {n}"));
        let total: BigInt = table.dimensions().iter().map(|d| d * d).sum();
        dims.record(total == factorial(n), || format!("n = {n}: got {total}"));
    }
    let mut unitary = Tally::new(Suite::Orthogonality, "orthogonal generators satisfy GᵀG = I");
    for lambda in shapes_up_to(opts.n) {
        let o = orthogonal_model(&SkewShape::straight(lambda.clone()), opts.mutation)?;
        let id = FloatMatrix::identity(o.basis.len());
        let ok = o
            .gens
            .iter()
            .all(|g| (&g.transpose().matmul(g) - &id).max_abs() <= opts.tolerance);
        unitary.record(ok, || format!("λ = {lambda}"));
    }
    let mut natural = Tally::new(Suite::Orthogonality, "natural module matches the orthogonal form of (n-1,1)");
    for n in 2..=opts.n {
        natural.record(natural_module_check(n, opts.tolerance)?, || format!("n = {n}"));
    }
    Ok(vec![rows.finish(), dims.finish(), unitary.finish(), natural.finish()])
}

/// Character values of one pair `(λ, ρ)` by three independent methods.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTriple {
    pub lambda: Partition,
    pub rho: Partition,
    pub mn: BigInt,
    pub trace: BigInt,
    pub fock: BigInt,
}

impl CharacterTriple {
    pub fn agrees(&self) -> bool {
        self.mn == self.trace && self.trace == self.fock
    }
}

/// `mn`, seminormal trace and Fock values for every `λ, ρ ⊢ n`.
pub fn character_triples(n: usize) -> Result<Vec<CharacterTriple>> {
    let mut mn = MnEvaluator::new();
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let rep = SeminormalRep::new(&lambda)?;
        let shape = SkewShape::straight(lambda.clone());
        for rho in partitions_of(n) {
            let trace = rep.rep_matrix(&Permutation::class_representative(&rho))?.trace();
            if !trace.is_integer() {
                return Err(Error::Verification(format!("trace {trace} of χ^{lambda}({rho}) is not an integer")));
            }
            out.push(CharacterTriple {
                mn: mn.character(&shape, &rho)?,
                trace: trace.to_integer(),
                fock: fock_character(&lambda, &rho)?,
                lambda: lambda.clone(),
                rho,
            });
        }
    }
    Ok(out)
}

fn characters_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = opts.tolerance;
    let mut three = Tally::new(Suite::Characters, "Murnaghan-Nakayama = seminormal trace = Fock");
    for n in 1..=opts.n {
        for mut t in character_triples(n)? {
            if opts.mutation == Some(Mutation::MnSign) {
                t.mn = t.mn.abs();
            }
            three.record(t.agrees(), || {
                format!("χ^({})({}): mn={} trace={} fock={}", t.lambda, t.rho, t.mn, t.trace, t.fock)
            });
        }
    }

    let mut skew = Tally::new(Suite::Characters, "skew full-cycle values: hook rule, MN and orthogonal trace");
    let mut mn = MnEvaluator::new();
    for outer in shapes_up_to(opts.n) {
        for size in 0..outer.size() {
            for inner in partitions_of(size).into_iter().filter(|i| outer.contains(i)) {
                let shape = SkewShape::new(outer.clone(), inner)?;
                let k = shape.size();
                let mut by_mn = mn.character(&shape, &Partition::row(k))?;
                if opts.mutation == Some(Mutation::MnSign) {
                    by_mn = by_mn.abs();
                }
                let by_hook = BigInt::from(hook_cycle_character(&shape)?);
                let o = orthogonal_model(&shape, opts.mutation)?;
                let cycle = Permutation::class_representative(&Partition::row(k));
                let by_trace = o.rep_matrix(&cycle)?.trace();
                let ok = by_mn == by_hook
                    && (by_trace - by_mn.to_f64().unwrap_or(f64::NAN)).abs() <= tol;
                skew.record(ok, || {
                    format!("{shape}: hook={by_hook} mn={by_mn} trace={by_trace}")
                });
            }
        }
    }

    let mut branching = Tally::new(Suite::Characters, "restriction is multiplicity free along removable nodes");
    for lambda in shapes_up_to(opts.n).filter(|l| l.size() >= 2) {
        let got = restriction_multiplicities(&lambda)?;
        let want: std::collections::BTreeMap<Partition, BigInt> = lambda
            .removable_nodes()
            .into_iter()
            .map(|node| Ok((lambda.with_node_removed(node)?, BigInt::one())))
            .collect::<Result<_>>()?;
        branching.record(got == want, || format!("λ = {lambda}"));
    }
    Ok(vec![three.finish(), skew.finish(), branching.finish()])
}

fn fock_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let cap = opts.fock_cap;
    let mut comm = Tally::new(Suite::Fock, "[Λ_a, Λ_b] = a δ_{a,-b} on v_λ");
    let steps: Vec<i64> = (-4..=4).filter(|&x| x != 0).collect();
    for lambda in std::iter::once(Partition::empty()).chain(shapes_up_to(opts.n)) {
        for &a in &steps {
            for &b in &steps {
                if lambda.size() + a.unsigned_abs() as usize + b.unsigned_abs() as usize > cap {
                    continue;
                }
                let r = heisenberg_residual(a, b, &lambda, cap)?;
                comm.record(r.is_zero(), || format!("a = {a}, b = {b}, λ = {lambda}"));
            }
        }
    }
    let mut vacuum = Tally::new(Suite::Fock, "[Λ_2, Λ_-2] v_∅ = 2 v_∅");
    if cap >= 2 {
        let v = FockVector::vacuum(cap);
        let lhs = lambda_word(&[2, -2], &v)?.sub(&lambda_word(&[-2, 2], &v)?)?;
        vacuum.record(lhs == v.scale(&Rational::from_integer(2.into())), || "residual nonzero".into());
    }
    let mut graded = Tally::new(Suite::Fock, "Λ_{-ρ} v_∅ span each degree");
    for j in 1..=opts.n.min(cap) {
        let basis = partitions_of(j);
        let rows = basis
            .iter()
            .map(|rho| {
                let word: Vec<i64> = rho.parts().iter().map(|&x| -(x as i64)).collect();
                let v = lambda_word(&word, &FockVector::vacuum(cap))?;
                Ok(basis.iter().map(|l| v.coefficient(l)).collect())
            })
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        let rank = ExactMatrix::from_rows(rows).rank();
        graded.record(rank == basis.len(), || format!("degree {j}: rank {rank}"));
    }
    Ok(vec![comm.finish(), vacuum.finish(), graded.finish()])
}

fn boson_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let cap = opts.fock_cap;
    let mut sigma = Tally::new(Suite::Boson, "σ intertwines Λ_{∓k} with k x_k and ∂/∂x_k");
    for lambda in std::iter::once(Partition::empty()).chain(shapes_up_to(opts.n)) {
        for k in 1..=3 {
            if lambda.size() + k > cap {
                continue;
            }
            let r = boson_image_residual(&lambda, k, cap)?;
            sigma.record(r.is_zero(), || format!("λ = {lambda}, k = {k}"));
        }
    }
    let mut frob = Tally::new(Suite::Boson, "P_ρ = Σ χ^λ(ρ) S_λ");
    let mut mono = Tally::new(Suite::Boson, "Schur polynomial from characters equals the determinant");
    let mut ortho = Tally::new(Suite::Boson, "Schur polynomials are orthonormal");
    let mut mn = MnEvaluator::new();
    for n in 1..=opts.n {
        for rho in partitions_of(n) {
            // frobenius_expand re-verifies internally; rebuild the sum here too
            let coeffs = frobenius_expand(&rho, DEFAULT_SYMFUNC_CAP)?;
            let mut sum = crate::symfunc::GradedPolynomial::zero();
            for lambda in partitions_of(n) {
                let mut chi = mn.character(&SkewShape::straight(lambda.clone()), &rho)?;
                if opts.mutation == Some(Mutation::MnSign) {
                    chi = chi.abs();
                }
                let listed = coeffs.get(&lambda).cloned().unwrap_or_else(BigInt::zero);
                if listed != chi {
                    frob.record(false, || format!("coefficient of S_{lambda} in P_{rho}"));
                }
                sum = &sum + &schur_poly(&lambda).scale(&Rational::from_integer(chi));
            }
            frob.record(sum == power_monomial(&rho), || format!("ρ = {rho}"));
        }
        for lambda in partitions_of(n) {
            let ok = schur_in_monomials(&lambda, DEFAULT_SYMFUNC_CAP)? == schur_poly(&lambda);
            mono.record(ok, || format!("λ = {lambda}"));
        }
    }
    let all: Vec<Partition> = shapes_up_to(opts.n).collect();
    let polys: Vec<_> = all.iter().map(schur_poly).collect();
    for (i, a) in polys.iter().enumerate() {
        for (j, b) in polys.iter().enumerate().skip(i) {
            let want = if i == j { Rational::one() } else { Rational::zero() };
            ortho.record(contravariant_form(a, b) == want, || {
                format!("(S_{}, S_{})", all[i], all[j])
            });
        }
    }
    Ok(vec![sigma.finish(), frob.finish(), mono.finish(), ortho.finish()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(suite: Suite, n: usize, mutation: Option<Mutation>) -> Report {
        let mut opts = VerifyOptions::new(n);
        opts.mutation = mutation;
        run(suite, &opts).unwrap()
    }

    #[test]
    fn every_suite_passes() {
        let report = run_with(Suite::All, 5, None);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 18);
        assert!(report.checks.iter().all(|c| c.cases > 0), "{report}");
    }

    #[test]
    fn mn_sign_error_is_detected() {
        let report = run_with(Suite::Characters, 4, Some(Mutation::MnSign));
        assert!(!report.passed());
        assert!(!run_with(Suite::Orthogonality, 4, Some(Mutation::MnSign)).passed());
        assert!(!run_with(Suite::Boson, 4, Some(Mutation::MnSign)).passed());
    }

    #[test]
    fn orthogonal_sign_error_is_detected() {
        let report = run_with(Suite::Coxeter, 4, Some(Mutation::OrthogonalSign));
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failed, vec!["orthogonal JM spectrum and relation".to_string()]);
        assert!(!run_with(Suite::Characters, 4, Some(Mutation::OrthogonalSign)).passed());
    }

    #[test]
    fn exact_checks_reject_a_bad_generator() {
        let lambda: Partition = "2,1".parse().unwrap();
        let rep = SeminormalRep::new(&lambda).unwrap();
        let mut gens = rep.generators().to_vec();
        assert_eq!(check_exact_model(&lambda, &gens, rep.basis()).unwrap(), (true, true, true));
        gens[1][(0, 1)] = -gens[1][(0, 1)].clone();
        let (cox, _, _) = check_exact_model(&lambda, &gens, rep.basis()).unwrap();
        assert!(!cox);
    }

    #[test]
    fn limits() {
        assert!(matches!(run(Suite::All, &VerifyOptions::new(9)), Err(Error::Resource { .. })));
        assert!(run(Suite::All, &VerifyOptions::new(0)).is_err());
        let mut opts = VerifyOptions::new(3);
        opts.tolerance = 0.0;
        assert!(run(Suite::Coxeter, &opts).is_err());
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
