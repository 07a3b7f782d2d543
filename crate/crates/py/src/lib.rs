//! Python bindings: families as lists of 1-based element lists, counts as
//! Python ints, searches returning witness-carrying result objects.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use shades::asympt;
use shades::extremal::{self, SearchBudget, Witness};
use shades::families::{self, FranklIndex, GenIndex};
use shades::report::VerificationReport;
use shades::setkit::{self, KSubset, SetFamily};
use shades::verify::{self, Claim, VerifyOptions};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_subset(elements: Vec<u32>, n: u32) -> PyResult<KSubset> {
    KSubset::from_elements(&elements, n).map_err(err)
}

fn to_family(members: Vec<Vec<u32>>, n: u32, k: u32) -> PyResult<SetFamily> {
    let masks = members
        .into_iter()
        .map(|m| to_subset(m, n).map(|s| s.mask()))
        .collect::<PyResult<Vec<_>>>()?;
    SetFamily::new(n, k, masks).map_err(err)
}

fn family_out(f: &SetFamily) -> Vec<Vec<u32>> {
    f.iter().map(|x| x.elements()).collect()
}

fn subsets_out(members: &[KSubset]) -> Vec<Vec<u32>> {
    members.iter().map(|x| x.elements()).collect()
}

fn witness_out(w: &Witness) -> Vec<Vec<u32>> {
    match w {
        Witness::Uniform(f) => family_out(f),
        Witness::Mixed { members, .. } => subsets_out(members),
    }
}

/// Value, witness families, and optimality status of one extremal search.
#[pyclass(frozen)]
struct SearchResult {
    #[pyo3(get)]
    value: BigUint,
    #[pyo3(get)]
    witness_a: Vec<Vec<u32>>,
    #[pyo3(get)]
    witness_b: Option<Vec<Vec<u32>>>,
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    nodes: u64,
}

impl From<extremal::ExtremalResult> for SearchResult {
    fn from(r: extremal::ExtremalResult) -> Self {
        SearchResult {
            value: r.value,
            witness_a: witness_out(&r.witness_a),
            witness_b: r.witness_b.as_ref().map(witness_out),
            status: r.status.as_str().to_string(),
            nodes: r.nodes,
        }
    }
}

/// One claim verdict at one parameter tuple.
#[pyclass(frozen)]
struct Report {
    #[pyo3(get)]
    claim: String,
    #[pyo3(get)]
    params: Vec<i64>,
    #[pyo3(get)]
    verdict: String,
    #[pyo3(get)]
    witness: Option<String>,
}

impl From<VerificationReport> for Report {
    fn from(r: VerificationReport) -> Self {
        Report {
            claim: r.claim,
            params: r.params,
            verdict: r.verdict.as_str().to_string(),
            witness: r.witness,
        }
    }
}

fn budget(max_nodes: u64, allow_partial: bool) -> SearchBudget {
    SearchBudget {
        max_nodes,
        max_seconds: None,
        allow_partial,
    }
}

#[pyfunction]
fn binomial(n: u64, k: i64) -> BigUint {
    setkit::binomial(n, k)
}

#[pyfunction]
fn enumerate_k_subsets(n: u32, k: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(family_out(&setkit::enumerate_k_subsets(n, k).map_err(err)?))
}

#[pyfunction]
fn shade(elements: Vec<u32>, n: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(family_out(&to_subset(elements, n)?.shade().map_err(err)?))
}

#[pyfunction]
fn m_shade(elements: Vec<u32>, n: u32, m: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(family_out(&to_subset(elements, n)?.m_shade(m).map_err(err)?))
}

#[pyfunction]
fn shade_family(members: Vec<Vec<u32>>, n: u32) -> PyResult<Vec<Vec<u32>>> {
    let subs = members
        .into_iter()
        .map(|m| to_subset(m, n))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(subsets_out(&setkit::shade_family(&subs).map_err(err)?))
}

#[pyfunction]
fn m_shade_family(members: Vec<Vec<u32>>, n: u32, k: u32, m: u32) -> PyResult<Vec<Vec<u32>>> {
    let fam = to_family(members, n, k)?;
    Ok(family_out(&fam.m_shade(m).map_err(err)?))
}

#[pyfunction]
fn is_homogeneous(elements: Vec<u32>, zero_set: Vec<u32>, n: u32) -> PyResult<bool> {
    let x = to_subset(elements, n)?;
    let c = setkit::Colouring::new(to_subset(zero_set, n)?);
    setkit::is_homogeneous(&x, &c).map_err(err)
}

#[pyfunction]
fn covered_colourings_count(members: Vec<Vec<u32>>, n: u32, k: u32) -> PyResult<BigUint> {
    setkit::covered_colourings_count(&to_family(members, n, k)?).map_err(err)
}

#[pyfunction]
fn frankl_family(n: u32, k: u32, t: u32, i: u32) -> PyResult<Vec<Vec<u32>>> {
    let idx = FranklIndex::new(n, k, t, i).map_err(err)?;
    Ok(family_out(&families::frankl_family(idx).map_err(err)?))
}

#[pyfunction]
fn g_family(n: u32, k: u32, t: u32, i: u32, j: u32) -> PyResult<Vec<Vec<u32>>> {
    let idx = GenIndex::new(n, k, t, i, j).map_err(err)?;
    Ok(family_out(&families::g_family(idx).map_err(err)?))
}

#[pyfunction]
fn frankl_card(n: u32, k: u32, t: u32, i: u32) -> PyResult<BigUint> {
    Ok(families::frankl_card(FranklIndex::new(n, k, t, i).map_err(err)?))
}

#[pyfunction]
fn g_card(n: u32, k: u32, t: u32, i: u32, j: u32) -> PyResult<BigUint> {
    Ok(families::g_card(GenIndex::new(n, k, t, i, j).map_err(err)?))
}

#[pyfunction]
fn frankl_card_center(m: u32, s: u32, i: u32) -> PyResult<BigUint> {
    families::frankl_card_center(m, s, i).map_err(err)
}

#[pyfunction]
fn is_t_intersecting(members: Vec<Vec<u32>>, n: u32, k: u32, t: u32) -> PyResult<bool> {
    Ok(families::is_t_intersecting(&to_family(members, n, k)?, t))
}

#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn is_cross_t_intersecting(
    a: Vec<Vec<u32>>,
    b: Vec<Vec<u32>>,
    n: u32,
    k: u32,
    l: u32,
    t: u32,
) -> PyResult<bool> {
    families::is_cross_t_intersecting(&to_family(a, n, k)?, &to_family(b, n, l)?, t).map_err(err)
}

#[pyfunction]
fn ak_value(n: u32, k: u32, t: u32) -> PyResult<BigUint> {
    extremal::ak_value(n, k, t).map_err(err)
}

#[pyfunction]
fn conjecture_j1_value(n: u32, m: u32, k: u32, t: u32) -> PyResult<BigUint> {
    extremal::conjecture_j1_value(n, m, k, t).map_err(err)
}

#[pyfunction]
fn conjecture_j4_value(n: u32, k: u32, l: u32, t: u32) -> PyResult<BigUint> {
    extremal::conjecture_j4_value(n, k, l, t).map_err(err)
}

#[pyfunction]
fn conjecture_j5_value(n: u32, mk: u32, ml: u32, k: u32, l: u32, t: u32) -> PyResult<BigUint> {
    extremal::conjecture_j5_value(n, mk, ml, k, l, t).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, k, t, max_nodes = 100_000_000, allow_partial = false))]
fn max_t_intersecting(
    n: u32,
    k: u32,
    t: u32,
    max_nodes: u64,
    allow_partial: bool,
) -> PyResult<SearchResult> {
    extremal::max_t_intersecting(n, k, t, &budget(max_nodes, allow_partial))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, m, k, t, max_nodes = 100_000_000, allow_partial = false))]
fn max_m_shade(
    n: u32,
    m: u32,
    k: u32,
    t: u32,
    max_nodes: u64,
    allow_partial: bool,
) -> PyResult<SearchResult> {
    extremal::max_m_shade(n, m, k, t, &budget(max_nodes, allow_partial))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, k, l, t, max_nodes = 100_000_000, allow_partial = false))]
fn max_cross_product(
    n: u32,
    k: u32,
    l: u32,
    t: u32,
    max_nodes: u64,
    allow_partial: bool,
) -> PyResult<SearchResult> {
    extremal::max_cross_product(n, k, l, t, &budget(max_nodes, allow_partial))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, mk, ml, k, l, t, max_nodes = 100_000_000, allow_partial = false))]
#[allow(clippy::too_many_arguments)]
fn max_cross_shade_product(
    n: u32,
    mk: u32,
    ml: u32,
    k: u32,
    l: u32,
    t: u32,
    max_nodes: u64,
    allow_partial: bool,
) -> PyResult<SearchResult> {
    extremal::max_cross_shade_product(n, mk, ml, k, l, t, &budget(max_nodes, allow_partial))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, m, k, t, max_nodes = 100_000_000, allow_partial = false))]
fn max_cross_shade_diagonal(
    n: u32,
    m: u32,
    k: u32,
    t: u32,
    max_nodes: u64,
    allow_partial: bool,
) -> PyResult<SearchResult> {
    extremal::max_cross_shade_diagonal(n, m, k, t, &budget(max_nodes, allow_partial))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, max_nodes = 100_000_000))]
fn sperner_max_shade(n: u32, max_nodes: u64) -> PyResult<SearchResult> {
    extremal::sperner_max_shade(n, &budget(max_nodes, false))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
fn std_normal_cdf(t: f64) -> PyResult<f64> {
    asympt::std_normal_cdf(t).map_err(err)
}

#[pyfunction]
fn log_binomial(n: u64, k: u64) -> PyResult<f64> {
    asympt::log_binomial(n, k).map_err(err)
}

#[pyfunction]
fn dml_ratio(n: u64, j: i64) -> PyResult<f64> {
    asympt::dml_ratio(n, j).map_err(err)
}

#[pyfunction]
fn dml_partial_sum(n: u64, a: f64, b: f64) -> PyResult<f64> {
    asympt::dml_partial_sum(n, a, b).map_err(err)
}

#[pyfunction]
fn lemma3_ratio(n: u64, k: u64, a: f64, b: f64) -> PyResult<f64> {
    asympt::lemma3_ratio(n, k, a, b).map_err(err)
}

#[pyfunction]
fn f_shade_ratio(m: u64, t: u64, i: u64) -> PyResult<f64> {
    asympt::f_shade_ratio(m, t, i).map_err(err)
}

/// (m, k, t, i_star, value, method) rows of the shade-ratio probe.
#[pyfunction]
#[pyo3(signature = (k_exp, t_exp, m_values))]
fn probe_conjecture_j2(
    k_exp: f64,
    t_exp: f64,
    m_values: Vec<u64>,
) -> PyResult<Vec<(u64, u64, u64, u64, f64, String)>> {
    let s = asympt::Schedule::power("py", k_exp, t_exp, m_values).map_err(err)?;
    Ok(asympt::probe_conjecture_j2(&s)
        .map_err(err)?
        .into_iter()
        .map(|p| (p.m, p.k, p.t, p.i_star, p.value, p.method.as_str().to_string()))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (claim, n_max = None, k_max = None, samples = 1000, seed = 0))]
fn verify_claim(
    claim: &str,
    n_max: Option<u32>,
    k_max: Option<u32>,
    samples: u64,
    seed: u64,
) -> PyResult<Vec<Report>> {
    let c = Claim::parse(claim).ok_or_else(|| err(format!("unknown claim `{claim}`")))?;
    let opts = VerifyOptions {
        n_max,
        k_max,
        samples,
        seed,
        budget: SearchBudget::default(),
    };
    Ok(verify::run_claim(c, &opts)
        .map_err(err)?
        .into_iter()
        .map(Into::into)
        .collect())
}

#[pymodule]
fn pyshades(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SearchResult>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_k_subsets, m)?)?;
    m.add_function(wrap_pyfunction!(shade, m)?)?;
    m.add_function(wrap_pyfunction!(m_shade, m)?)?;
    m.add_function(wrap_pyfunction!(shade_family, m)?)?;
    m.add_function(wrap_pyfunction!(m_shade_family, m)?)?;
    m.add_function(wrap_pyfunction!(is_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(covered_colourings_count, m)?)?;
    m.add_function(wrap_pyfunction!(frankl_family, m)?)?;
    m.add_function(wrap_pyfunction!(g_family, m)?)?;
    m.add_function(wrap_pyfunction!(frankl_card, m)?)?;
    m.add_function(wrap_pyfunction!(g_card, m)?)?;
    m.add_function(wrap_pyfunction!(frankl_card_center, m)?)?;
    m.add_function(wrap_pyfunction!(is_t_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(is_cross_t_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(ak_value, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_j1_value, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_j4_value, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_j5_value, m)?)?;
    m.add_function(wrap_pyfunction!(max_t_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(max_m_shade, m)?)?;
    m.add_function(wrap_pyfunction!(max_cross_product, m)?)?;
    m.add_function(wrap_pyfunction!(max_cross_shade_product, m)?)?;
    m.add_function(wrap_pyfunction!(max_cross_shade_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(sperner_max_shade, m)?)?;
    m.add_function(wrap_pyfunction!(std_normal_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(log_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(dml_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(dml_partial_sum, m)?)?;
    m.add_function(wrap_pyfunction!(lemma3_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(f_shade_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(probe_conjecture_j2, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    Ok(())
}
