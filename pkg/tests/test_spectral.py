from __future__ import annotations

import itertools
from collections import Counter

import numpy as np
import pytest

from qtwist.linalg import LegSpace, embed, rel_diff, spectrum
from qtwist.rword import evaluate
from qtwist.spectral import (
    block_decompose,
    cg_isometries,
    hecke_projectors,
    rhat,
    spectra_agree,
    spectral_report,
    squared_spectrum,
)
from qtwist.twist import FLIPINV, TwistConfig, all_configs, build_boldR, paired_matrix
from qtwist.uqsl2 import flip, standard_data
from qtwist.verify import ybe_residual

from conftest import random_complex


def product_spectrum(config, q):
    """Eigenvalues of the twisted Rhat predicted from the diagonal factors alone.

    ``Rhat`` of ``R`` has {q: 3, -1/q: 1}; ``Rhat`` of ``R^-1_21`` is
    similar to ``(P R)^-1`` and has {1/q: 3, -q: 1}. The twist is a
    similarity transformation, so the spectrum is the product multiset.
    """
    per_leg = []
    for c in config.diag:
        pairs = [(q, 3), (-1 / q, 1)] if c is not FLIPINV else [(1 / q, 3), (-q, 1)]
        per_leg.append(pairs)
    counts = Counter()
    for combo in itertools.product(*per_leg):
        value = np.prod([v for v, _ in combo])
        counts[round(value, 10)] += int(np.prod([m for _, m in combo]))
    return sorted(counts.items(), reverse=True)


def test_rhat_basics(data13):
    assert np.array_equal(rhat(np.eye(4), 1), flip())
    sp = spectrum(rhat(data13.r_fund, 1))
    assert [m for _, m in sp] == [3, 1]
    assert abs(sp[0][0] - 1.3) < 1e-8 and abs(sp[1][0] + 1 / 1.3) < 1e-8
    with pytest.raises(ValueError):
        rhat(np.eye(8), 1)


def test_rhat_squared_consistency(data13):
    m = evaluate(build_boldR(TwistConfig.parse("s=2 diag=+- twist=-")), data13)
    rep = spectral_report(rhat(m, 2))
    rep2 = spectral_report(rhat(m, 2) @ rhat(m, 2))
    assert rep.all_real
    assert all(z.real > 0 for z, _ in rep2.eigenvalues)
    got = [(z, k) for z, k in rep2.eigenvalues]
    want = squared_spectrum(rep)
    assert len(got) == len(want)
    for (a, ka), (b, kb) in zip(got, want):
        assert ka == kb and abs(a - b) < 1e-7


def test_report_examples():
    rep = spectral_report(flip())
    assert rep.negative_real_distinct == 1 and rep.all_real and rep.wz_feasible
    rep = spectral_report(np.eye(4))
    assert rep.negative_real_distinct == 0 and not rep.wz_feasible
    assert rep.dim == 4


def test_report_complex_spectrum_not_feasible():
    rot = np.array([[0, -1], [1, 0]], dtype=complex)
    rep = spectral_report(np.kron(rot, np.diag([1, -1])))
    assert not rep.all_real and not rep.wz_feasible


def test_report_json_shape():
    d = spectral_report(flip()).to_dict()
    assert set(d) >= {"eigenvalues", "negative_real_distinct", "wz_feasible"}
    first = d["eigenvalues"][0]
    assert first["mult"] == 3 and first["im"] == 0.0
    assert first["re"] == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("q", [0.7, 1.3])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_spectra_match_product_oracle(q, s):
    data = standard_data(q)
    for cfg in all_configs(s):
        rep = spectral_report(rhat(evaluate(build_boldR(cfg), data), s))
        got = [(round(z.real, 10), m) for z, m in rep.eigenvalues]
        assert got == product_spectrum(cfg, q), cfg


def test_s3_standard_has_two_negative_values(data13):
    rep = spectral_report(rhat(evaluate(build_boldR(TwistConfig.standard(3)), data13), 3))
    assert rep.all_real
    assert rep.negative_real_distinct >= 2
    assert not rep.wz_feasible


@pytest.mark.parametrize("s", [2, 3])
def test_twist_independence(data13, s):
    for cfg in all_configs(s):
        if cfg.twist is FLIPINV:
            continue
        other = TwistConfig(s, cfg.diag, FLIPINV)
        a = spectral_report(rhat(evaluate(build_boldR(cfg), data13), s))
        b = spectral_report(rhat(evaluate(build_boldR(other), data13), s))
        assert spectra_agree(a, b, 1e-8)


def test_cg_classical_limit():
    iso = cg_isometries(standard_data(1.0))
    p = flip()
    assert iso.v_sym.shape == (4, 3) and iso.v_anti.shape == (4, 1)
    assert np.allclose(p @ iso.v_sym, iso.v_sym)
    assert np.allclose(p @ iso.v_anti, -iso.v_anti)


@pytest.mark.parametrize("q", [0.7, 1.3])
def test_cg_projectors_and_eigenspaces(q):
    data = standard_data(q)
    p_sym, p_anti = hecke_projectors(data)
    assert np.linalg.norm(p_sym + p_anti - np.eye(4)) < 1e-12
    assert np.linalg.norm(p_sym @ p_anti) < 1e-12
    iso = cg_isometries(data)
    rh = rhat(data.r_fund, 1)
    assert np.linalg.norm(rh @ iso.v_sym - q * iso.v_sym) < 1e-11
    assert np.linalg.norm(rh @ iso.v_anti + iso.v_anti / q) < 1e-11
    # the q-deformed projectors are not orthogonal; the isometries still are
    assert np.allclose(iso.basis.conj().T @ iso.basis, np.eye(4), atol=1e-12)


def test_block_decompose_identity(data13):
    dec = block_decompose(np.eye(16), cg_isometries(data13))
    assert dec.off_block < 1e-14
    for b in dec.blocks.values():
        assert np.allclose(b, np.eye(len(b)))


def test_block_decompose_contracted_matrix(data13):
    m = paired_matrix(TwistConfig.standard(1), data13, (2,))
    dec = block_decompose(m, cg_isometries(data13))
    assert dec.off_block < 1e-10
    # Hecke normalisation: the whole matrix carries q**2 relative to sl(2)
    assert abs(dec.scale - 1.3**2) < 1e-12
    norm = dec.normalized()
    for key in ("31", "13", "11"):
        assert np.allclose(norm[key], np.eye(len(norm[key])), atol=1e-10)
    r33 = dec.blocks["33"]
    assert ybe_residual(r33, 3) < 1e-9
    assert len(spectrum(rhat(r33, 1, leg_dim=3))) == 3


def test_block_decompose_sl2_normalisation_literal_identities():
    data = standard_data(1.3, "sl2")
    m = paired_matrix(TwistConfig.standard(1), data, (2,))
    dec = block_decompose(m, cg_isometries(data))
    for key in ("31", "13", "11"):
        assert np.allclose(dec.blocks[key], np.eye(len(dec.blocks[key])), atol=1e-10)


def test_block_decompose_random_is_not_block_diagonal(data13, rng):
    dec = block_decompose(random_complex(rng, 16, 16), cg_isometries(data13))
    assert dec.off_block > 1e-3
    with pytest.raises(ValueError):
        block_decompose(np.eye(8), cg_isometries(data13))


def test_reordering_within_contraction(data13):
    m = paired_matrix(TwistConfig.standard(1), data13, (2,))
    rh = rhat(data13.r_fund, 1)
    sp = LegSpace(4, 2)
    t = embed(rh, (1, 2), sp) @ embed(rh, (3, 4), sp)
    assert rel_diff(t @ m @ np.linalg.inv(t), m) < 1e-12
