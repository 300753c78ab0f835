"""Acceptance gate: the golden computations and property suites the
package must reproduce exactly, with the stated runtime budgets."""

import json
import random
import subprocess
import sys
import time

from klow import catalog, cone, excision, homology, kone, kzero, toeplitz


def _k0(name):
    return kzero.k0_report(catalog.ring(name)).group


def _k1(name):
    rep = kone.k1_report(catalog.ring(name), n_levels=(2,))
    return rep.levels[-1][1]


def test_1_k_group_golden_table():
    t0 = time.time()
    assert (_k0("F2").free_rank, _k0("F2").torsion) == (1, ())
    assert (_k0("F3").free_rank, _k0("F3").torsion) == (1, ())
    assert (_k0("Z4").free_rank, _k0("Z4").torsion) == (1, ())
    assert (_k0("F2xF2").free_rank, _k0("F2xF2").torsion) == (2, ())
    assert (_k0("M2F2").free_rank, _k0("M2F2").torsion) == (1, ())
    assert (_k1("F3").free_rank, _k1("F3").torsion) == (0, (2,))
    assert (_k1("F4").free_rank, _k1("F4").torsion) == (0, (3,))
    assert (_k1("F5").free_rank, _k1("F5").torsion) == (0, (4,))
    assert (_k1("Z4").free_rank, _k1("Z4").torsion) == (0, (2,))
    assert (_k1("F3eps").free_rank, _k1("F3eps").torsion) == (0, (6,))
    assert _k1("M2F2").is_trivial()
    assert time.time() - t0 < 300


def test_2_swan_counterexample():
    t0 = time.time()
    out = excision.swan_check(catalog.ring("F3"))
    assert out["relative_k1"].is_trivial()
    assert (out["ideal_k1"].free_rank, out["ideal_k1"].torsion) == (0, (3,))
    assert out["witness_identities"]        # all lambda in F3, mu = 2
    assert out["split_exact_fails"]
    assert time.time() - t0 < 600


def test_3_six_term_exactness():
    for name in ("Z4_mod2", "F3eps_aug", "F3xF3_second"):
        nodes, groups, maps = excision.six_term_check(catalog.extension(name))
        assert all(n["exact"] for n in nodes), (name, nodes)
    _, _, maps = excision.six_term_check(catalog.extension("F3xF3_second"))
    assert maps["K0A->K0B"].is_injective()


def test_4_boundary_properties():
    rng = random.Random(2024)
    failures = 0
    pairs = 0
    for name in ("Z4_mod2", "F3eps_aug"):
        ext = catalog.extension(name)
        ctx = excision._boundary_context(ext)
        units = sorted(ext.C.units())
        preim = {c: [b for b in range(ext.B.order) if ext.proj[b] == c]
                 for c in range(ext.C.order)}
        # lift-independence over random lift pairs; proj(h) = diag(g, g^-1)
        # is asserted inside every boundary_class call
        while pairs < 50 * (1 if name == "Z4_mod2" else 2):
            u = rng.choice(units)
            g = ((u,),)
            lift_a = ((rng.choice(preim[u]),),)
            lift_b = ((rng.choice(preim[u]),),)
            va, k0a = excision.boundary_class(ext, g, ghat=lift_a,
                                              context=ctx)
            vb, _ = excision.boundary_class(ext, g, ghat=lift_b, context=ctx)
            if k0a.presented.coords(va) != k0a.presented.coords(vb):
                failures += 1
            pairs += 1
        # additivity on generators: d(uv) = d(u) + d(v)
        for u in units:
            for v in units:
                uv = ext.C.mul_table[u][v]
                du, k0a = excision.boundary_class(ext, ((u,),), context=ctx)
                dv, _ = excision.boundary_class(ext, ((v,),), context=ctx)
                duv, _ = excision.boundary_class(ext, ((uv,),), context=ctx)
                s = [x + y for x, y in zip(du, dv)]
                if k0a.presented.coords(duv) != k0a.presented.coords(s):
                    failures += 1
    assert pairs == 100
    assert failures == 0


def test_5_whitehead_property_suite():
    total = 0
    for name in ("Z5", "F4"):
        out = kone.whitehead_sample_check(catalog.ring(name), 100)
        assert out["mismatches"] == 0
        total += out["samples"]
    assert total == 200


def test_6_cone_sum_ring_suite():
    for name in ("F2", "Z4"):
        out = cone.verify_cone(catalog.ring(name), window=64)
        assert all(r["pass"] for r in out), name


def test_7_toeplitz_suite():
    for name in ("F3", "Z4"):
        ring = catalog.ring(name)
        assert toeplitz.matrix_unit_law(ring, bound=6)
        q = toeplitz.q_involution_check(ring)
        assert q["q_squared"] and q["conjugation"]
        out = toeplitz.verify_toeplitz(ring, bound=6, window=16)
        assert all(r["pass"] for r in out)


def test_8_homology_suite():
    t0 = time.time()
    q = catalog.algebra("Q")
    cx = homology.build_connes_complex(q, n_max=5)
    assert homology.homology_ranks(cx)[:5] == [1, 0, 1, 0, 1]
    for name in catalog.algebra_names():
        alg = catalog.algebra(name)
        cx0 = homology.build_connes_complex(alg, n_max=1)
        # b.b = 0 and b'.b' = 0 are asserted inside the builders
        assert homology.homology_ranks(cx0)[0] == homology.hc0_oracle(alg)
    assert homology.hc0_oracle(catalog.algebra("M2Q")) == 1
    for name in ("Q", "QxQ", "M2Q", "Qeps"):
        out = homology.unital_bar_check(catalog.algebra(name), n_check=3)
        assert out["hbar"] == [0, 0, 0, 0], name
    out = homology.excisiveness_verdict(catalog.algebra("SQ1"))
    assert out["obstructed"] and out["degree"] == 0
    assert time.time() - t0 < 120


def test_9_determinism_of_verify_all():
    cmd = [sys.executable, "-m", "klow.cli", "verify", "all"]
    env_runs = []
    for _ in range(2):
        proc = subprocess.run(cmd, capture_output=True, check=True)
        env_runs.append(proc.stdout)
    assert env_runs[0] == env_runs[1]
    report = json.loads(env_runs[0])
    assert "timing_s" not in report
