import math

import numpy as np
import pytest

from conftest import digits_of, random_full_rank_code, random_pmf

from rngbound.analysis import (
    SourceModel,
    analyze,
    bound_codeword_sum,
    bound_cwe,
    bound_min_distance,
    bound_single_variable,
    bound_sum_chain,
    bound_weight_distribution,
    exact_delta,
    output_pmf_bruteforce,
    output_pmf_spectral,
    output_spectrum,
    sum_chain,
)
from rngbound.codes import LinearCode
from rngbound.errors import CapacityError
from rngbound.pmf import Pmf, convolve, from_bias, l1_from_uniform, tensor, uniform
from rngbound.transforms import spectrum_of

F3_HALF = Pmf(3, 1, [0.5, 0.25, 0.25])


def identity_code(p, k):
    return LinearCode(p, k, k, np.eye(k, dtype=int))


def parity_bias_direct(code, src, b):
    """Bias of the parity c . X with c = b^T G, by exhaustive enumeration."""
    c = (np.array(digits_of(b, 2, code.k)) @ code.G) % 2
    acc = 0.0
    for x in range(2**code.n):
        xd = digits_of(x, 2, code.n)
        prob = math.prod(src.symbols[j].values[xd[j]] for j in range(code.n))
        parity = sum(int(ci) * xi for ci, xi in zip(c, xd)) % 2
        acc += prob if parity == 0 else -prob
    return abs(acc)


# --- source models ------------------------------------------------------------


def test_source_model_iid_flag():
    src = SourceModel.from_bias(0.25, 4)
    assert src.iid and src.n == 4 and src.p == 2
    mixed = SourceModel(2, (from_bias(0.25), from_bias(0.5)))
    assert not mixed.iid


def test_source_model_validation():
    with pytest.raises(ValueError):
        SourceModel(2, ())
    with pytest.raises(ValueError):
        SourceModel(2, (uniform(3, 1),))
    with pytest.raises(ValueError):
        SourceModel(2, (uniform(2, 2),))
    with pytest.raises(ValueError):
        SourceModel.iid_from(uniform(2, 1), 0)


# --- exact output distributions ------------------------------------------------


def test_bruteforce_identity_code_is_tensor():
    rng = np.random.default_rng(103)
    for p, k in [(2, 3), (3, 2)]:
        symbols = tuple(random_pmf(rng, p, 1) for _ in range(k))
        out = output_pmf_bruteforce(identity_code(p, k), SourceModel(p, symbols))
        assert np.allclose(out.values, tensor(symbols).values, atol=1e-14)


def test_bruteforce_repetition_example(rep31):
    out = output_pmf_bruteforce(rep31, SourceModel.from_bias(0.5, 3))
    assert np.allclose(out.values, [0.5625, 0.4375], atol=1e-15)  # bias 0.5^3


def test_bruteforce_ternary_sum_is_convolution():
    code = LinearCode(3, 2, 1, [[1, 1]])
    out = output_pmf_bruteforce(code, SourceModel.iid_from(F3_HALF, 2))
    assert np.allclose(out.values, convolve(F3_HALF, F3_HALF).values, atol=1e-14)
    assert np.allclose(out.values, [3 / 8, 5 / 16, 5 / 16], atol=1e-14)


def test_bruteforce_capacity_refusal(rep31):
    with pytest.raises(CapacityError):
        output_pmf_bruteforce(rep31, SourceModel.from_bias(0.1, 3), max_outcomes=4)


def test_spectral_matches_bruteforce_random():
    rng = np.random.default_rng(107)
    for _ in range(40):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 7))
        k = int(rng.integers(1, min(n, 4) + 1))
        code = random_full_rank_code(rng, p, n, k)
        if rng.random() < 0.5:
            src = SourceModel.iid_from(random_pmf(rng, p, 1), n)
        else:
            src = SourceModel(p, tuple(random_pmf(rng, p, 1) for _ in range(n)))
        spectral = output_pmf_spectral(code, src)
        brute = output_pmf_bruteforce(code, src)
        assert np.abs(spectral.values - brute.values).max() < 1e-10


def test_output_spectrum_examples(rep31):
    code = LinearCode(3, 2, 1, [[1, 1]])
    s = output_spectrum(code, SourceModel.iid_from(F3_HALF, 2))
    assert abs(s.values[1] - (0.25) ** 2) < 1e-14  # product-formula eigenvalue

    s = output_spectrum(rep31, SourceModel.from_bias(0.5, 3))
    assert abs(s.values[1] - 0.125) < 1e-14  # eps^3


def test_output_spectrum_identity_is_kronecker_of_symbols():
    rng = np.random.default_rng(109)
    parts = [random_pmf(rng, 3, 1) for _ in range(2)]
    s = output_spectrum(identity_code(3, 2), SourceModel(3, tuple(parts)))
    kron = np.kron(spectrum_of(parts[1]).values, spectrum_of(parts[0]).values)
    assert np.abs(s.values - kron).max() < 1e-13


def test_spectral_shape_mismatch(rep31):
    with pytest.raises(ValueError):
        output_pmf_spectral(rep31, SourceModel.from_bias(0.5, 4))


def test_exact_delta_cases(rep31):
    assert exact_delta(rep31, SourceModel.from_bias(0.0, 3)) < 1e-12
    for eps in (0.2, 0.7):
        assert exact_delta(rep31, SourceModel.from_bias(eps, 3)) == pytest.approx(
            eps**3, abs=1e-14
        )
    # two independent bits through the identity: delta = eps + eps^2/2
    eps = 0.4
    got = exact_delta(identity_code(2, 2), SourceModel.from_bias(eps, 2))
    assert got == pytest.approx(eps + eps**2 / 2, abs=1e-14)


# --- bounds ---------------------------------------------------------------------


def test_bound_codeword_sum_cases(rep31):
    eps = 0.3
    assert bound_codeword_sum(rep31, SourceModel.from_bias(eps, 3)) == pytest.approx(
        eps**3, abs=1e-14
    )
    got = bound_codeword_sum(identity_code(2, 2), SourceModel.from_bias(eps, 2))
    assert got == pytest.approx(2 * eps + eps**2, abs=1e-14)
    assert bound_codeword_sum(rep31, SourceModel.from_bias(0.0, 3)) < 1e-15


def test_bound_codeword_sum_is_piling_up_product():
    # non-identical bits: each term is the product of biases on the support
    code = LinearCode(2, 2, 1, [[1, 1]])
    src = SourceModel(2, (from_bias(0.5), from_bias(0.25)))
    assert bound_codeword_sum(code, src) == pytest.approx(0.5 * 0.25, abs=1e-15)


def test_bound_weight_distribution_cases(hamming74, rep31):
    eps = 0.25
    expect = 7 * eps**3 + 7 * eps**4 + eps**7
    assert bound_weight_distribution(hamming74, eps) == pytest.approx(expect, abs=1e-16)
    assert bound_weight_distribution(hamming74, 0.0) == 0.0
    assert bound_weight_distribution(rep31, 0.6) == pytest.approx(0.6**3, abs=1e-15)
    with pytest.raises(ValueError):
        bound_weight_distribution(hamming74, 1.2)
    with pytest.raises(ValueError):
        bound_weight_distribution(hamming74, -0.1)


def test_bound_cwe_cases():
    code = LinearCode(3, 2, 1, [[1, 1]])
    lam = spectrum_of(F3_HALF)
    got = bound_cwe(code, lam)
    assert got == pytest.approx(2 * 0.25**2, abs=1e-14)  # two non-zero compositions
    assert exact_delta(code, SourceModel.iid_from(F3_HALF, 2)) <= got + 1e-12
    # uniform symbol: zero off-peak spectrum
    assert bound_cwe(code, spectrum_of(uniform(3, 1))) < 1e-14
    with pytest.raises(ValueError):
        bound_cwe(code, np.array([0.5, 0.1, 0.1]))


def test_bound_cwe_reduces_to_codeword_sum_for_binary():
    rng = np.random.default_rng(113)
    for _ in range(5):
        code = random_full_rank_code(rng, 2, 6, 3)
        sym = random_pmf(rng, 2, 1)
        src = SourceModel.iid_from(sym, 6)
        assert bound_cwe(code, spectrum_of(sym)) == pytest.approx(
            bound_codeword_sum(code, src), abs=1e-12
        )


def test_bound_min_distance_cases(hamming74, rep31):
    assert bound_min_distance(hamming74, 0.25) == 15 * 0.25**3 == 0.234375
    assert bound_min_distance(hamming74, 0.0) == 0.0
    assert bound_min_distance(rep31, 0.6) == pytest.approx(0.6**3, abs=1e-15)
    with pytest.raises(ValueError):
        bound_min_distance(hamming74, 2.0)


def test_bound_single_variable_cases():
    got = bound_single_variable(F3_HALF)
    assert got == pytest.approx(math.sqrt(2) / 4, abs=1e-12)
    assert l1_from_uniform(F3_HALF) <= got  # exact 1/3 vs 0.3535...
    assert bound_single_variable(uniform(5, 1)) < 1e-14
    eps = 0.35
    assert bound_single_variable(from_bias(eps)) == pytest.approx(eps, abs=1e-15)
    with pytest.raises(ValueError):
        bound_single_variable(uniform(2, 2))


def test_sum_chain_cases():
    assert np.allclose(sum_chain(F3_HALF, 1).values, F3_HALF.values, atol=1e-14)
    assert np.allclose(sum_chain(F3_HALF, 2).values, convolve(F3_HALF, F3_HALF).values, atol=1e-13)
    with pytest.raises(ValueError):
        sum_chain(F3_HALF, 0)
    with pytest.raises(ValueError):
        sum_chain(uniform(2, 2), 2)


def test_sum_chain_matches_repeated_convolution():
    rng = np.random.default_rng(127)
    for p in (2, 3, 5):
        m = random_pmf(rng, p, 1)
        acc = m
        for n in range(2, 7):
            acc = convolve(acc, m)
            assert np.abs(sum_chain(m, n).values - acc.values).max() < 1e-12


def test_sum_chain_distance_decays():
    deltas = [l1_from_uniform(sum_chain(F3_HALF, n)) for n in range(1, 12)]
    assert all(b <= a + 1e-15 for a, b in zip(deltas, deltas[1:]))
    assert deltas[-1] < 1e-5


def test_bound_sum_chain_cases():
    got = bound_sum_chain(F3_HALF, 2)
    assert got == pytest.approx(math.sqrt(2) / 16, abs=1e-12)
    assert l1_from_uniform(sum_chain(F3_HALF, 2)) <= got  # 1/12 vs 0.0884
    assert bound_sum_chain(uniform(3, 1), 5) < 1e-14
    assert bound_sum_chain(F3_HALF, 1) == bound_single_variable(F3_HALF)
    with pytest.raises(ValueError):
        bound_sum_chain(F3_HALF, 0)


# --- the consolidated report ----------------------------------------------------


def test_analyze_hamming_example(hamming74):
    report = analyze(hamming74, SourceModel.from_bias(0.25, 7))
    by_name = {e.name: e for e in report.entries}
    assert report.exact_delta is not None
    assert report.exact_delta_bruteforce == pytest.approx(report.exact_delta, abs=1e-12)
    wd = by_name["weight_distribution"]
    md = by_name["min_distance"]
    assert report.exact_delta <= wd.value <= md.value
    assert md.value == 0.234375
    assert (report.p, report.n, report.k, report.d) == (2, 7, 4, 3)
    assert all(e.applicable for e in report.entries)
    assert all(e.value >= report.exact_delta - 1e-9 for e in report.entries)
    assert all(e.tightness >= 1 - 1e-9 for e in report.entries)


def test_analyze_non_iid_marks_bounds_not_applicable():
    rng = np.random.default_rng(131)
    code = random_full_rank_code(rng, 3, 4, 2)
    src = SourceModel(3, tuple(random_pmf(rng, 3, 1) for _ in range(4)))
    report = analyze(code, src)
    by_name = {e.name: e for e in report.entries}
    assert by_name["codeword_sum"].applicable
    assert by_name["codeword_sum"].value >= report.exact_delta - 1e-9
    for name in ("cwe", "weight_distribution", "min_distance"):
        assert not by_name[name].applicable
        assert by_name[name].value is None
        assert by_name[name].tightness is None


def test_analyze_unbiased_source_all_zero(hamming74):
    report = analyze(hamming74, SourceModel.from_bias(0.0, 7))
    assert report.exact_delta < 1e-12
    assert all(e.value < 1e-12 for e in report.entries if e.value is not None)
    by_name = {e.name: e for e in report.entries}
    assert by_name["min_distance"].tightness == 0.0  # exact = 0 and bound = 0


def test_tightness_rules():
    from rngbound.analysis import _tightness

    assert _tightness(0.5, 0.25) == 2.0
    assert _tightness(0.5, 0.0) == math.inf  # exact 0, bound positive
    assert _tightness(0.0, 0.0) == 0.0  # both zero: floored ratio
    assert _tightness(None, 0.25) is None
    assert _tightness(0.5, None) is None


def test_analyze_tightness_through_report():
    # a zero-bias source through a parity: exact and bound both vanish
    code = LinearCode(2, 2, 1, [[1, 1]])
    src0 = SourceModel(2, (from_bias(0.0), from_bias(0.5)))
    report0 = analyze(code, src0)
    cs0 = next(e for e in report0.entries if e.name == "codeword_sum")
    assert report0.exact_delta < 1e-15
    assert cs0.value == pytest.approx(0.0, abs=1e-15)
    # a deterministic bit leaves the other bit's bias untouched
    src = SourceModel(2, (from_bias(1.0), from_bias(0.5)))
    report = analyze(code, src)
    cs = next(e for e in report.entries if e.name == "codeword_sum")
    assert report.exact_delta == pytest.approx(0.5)
    assert cs.tightness == pytest.approx(cs.value / report.exact_delta)


def test_analyze_identity_code_is_message_space_bound():
    # through the identity, the codeword sum is the sum of all parity biases
    src = SourceModel(2, (from_bias(0.5), from_bias(0.25)))
    code = identity_code(2, 2)
    report = analyze(code, src)
    cs = next(e for e in report.entries if e.name == "codeword_sum")
    direct = sum(parity_bias_direct(code, src, b) for b in range(1, 4))
    assert cs.value == pytest.approx(direct, abs=1e-13)


def test_walsh_bias_identity_against_parity_enumeration():
    rng = np.random.default_rng(137)
    for _ in range(10):
        n = int(rng.integers(2, 6))
        k = int(rng.integers(1, min(n, 3) + 1))
        code = random_full_rank_code(rng, 2, n, k)
        src = SourceModel(2, tuple(random_pmf(rng, 2, 1) for _ in range(n)))
        s = output_spectrum(code, src)
        for b in range(2**k):
            assert abs(s.values[b]) == pytest.approx(
                parity_bias_direct(code, src, b), abs=1e-12
            )


def test_row_space_invariance():
    rng = np.random.default_rng(139)
    for p, n, k in [(2, 6, 3), (3, 5, 2)]:
        code = random_full_rank_code(rng, p, n, k)
        # random invertible row operations preserve the row space
        M = np.eye(k, dtype=np.int64)
        for _ in range(12):
            op = rng.integers(0, 3)
            i, j = rng.choice(k, size=2, replace=False)
            if op == 0:
                M[[i, j]] = M[[j, i]]
            elif op == 1:
                M[i] = (M[i] * rng.integers(1, p)) % p
            else:
                M[i] = (M[i] + rng.integers(1, p) * M[j]) % p
        code2 = LinearCode(p, n, k, (M @ code.G) % p)
        src = SourceModel(p, tuple(random_pmf(rng, p, 1) for _ in range(n)))
        r1, r2 = analyze(code, src), analyze(code2, src)
        assert r1.exact_delta == pytest.approx(r2.exact_delta, abs=1e-12)
        assert r1.d == r2.d
        for e1, e2 in zip(r1.entries, r2.entries):
            if e1.value is None:
                assert e2.value is None
            else:
                assert e1.value == pytest.approx(e2.value, abs=1e-12)


def test_dominance_chain_iid():
    rng = np.random.default_rng(149)
    for _ in range(30):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 8))
        k = int(rng.integers(1, min(n, 4) + 1))
        code = random_full_rank_code(rng, p, n, k)
        src = SourceModel.iid_from(random_pmf(rng, p, 1), n)
        report = analyze(code, src)
        vals = [e.value for e in report.entries]  # chain order
        assert report.exact_delta <= vals[0] + 1e-9
        for lo, hi in zip(vals, vals[1:]):
            assert lo <= hi + 1e-9


def test_repetition_weight_bound_is_exact():
    for n in (2, 4, 7):
        code = LinearCode(2, n, 1, [[1] * n])
        for eps in (0.15, 0.5, 0.85):
            report = analyze(code, SourceModel.from_bias(eps, n))
            wd = next(e for e in report.entries if e.name == "weight_distribution")
            assert wd.value == pytest.approx(report.exact_delta, abs=1e-12)
