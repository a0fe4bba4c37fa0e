import json
from fractions import Fraction
from math import factorial

import pytest

from wlpoly import identities as ids
from wlpoly.identities import (
    DEFAULT_JACOBI_SAMPLES,
    IDENTITIES,
    VerificationReport,
    ZeroDenominator,
    check_appell,
    check_average,
    check_combinatorics,
    check_content_transfer,
    check_decomposition,
    check_degree_vector_identity,
    check_t_map,
    check_weighted_content_sum,
    jacobi_form_search,
    plancherel_normalization,
    recurrence_form_system,
    rectangle_duality,
    run_identity,
)
from wlpoly.partitions import Partition, degree_vector, f_count, partitions_of, partitions_up_to
from wlpoly.polyalg import ALPHA, X, from_json_obj
from wlpoly.recurrence import wlp_thm1
from wlpoly.sequences import AppellSpec
from wlpoly.wronskian import custom

P = lambda *parts: Partition(parts)  # noqa: E731


def test_report_json_shape():
    rep = check_average(2)
    d = json.loads(rep.to_json())
    assert list(d) == ["identity", "range", "status", "witness", "ms"]
    assert d["status"] == "pass" and d["witness"] is None


def test_average_examples():
    assert check_average(0).passed
    assert (wlp_thm1(P(2)) + wlp_thm1(P(1, 1))) / 2 == (X + ALPHA) ** 2
    assert check_average(2).passed
    assert check_average(8).passed


def test_content_examples():
    assert check_content_transfer(P(2, 1)).passed
    assert check_content_transfer(Partition(())).passed
    assert check_content_transfer(P(3)).passed
    assert check_weighted_content_sum(P(1)).passed
    assert check_weighted_content_sum(Partition(())).passed
    assert check_weighted_content_sum(P(2, 1)).passed


@pytest.mark.parametrize("mu", partitions_up_to(10), ids=str)
def test_content_sweep(mu):
    assert check_content_transfer(mu).passed
    assert check_weighted_content_sum(mu).passed


def test_degree_vector_examples():
    lhs, rhs = ids._degree_vector_sides((5,))
    assert lhs == rhs == Fraction(5, 6)
    assert check_degree_vector_identity((3, 1)).passed
    assert check_degree_vector_identity((4, 2, 1)).passed
    with pytest.raises(ZeroDenominator):
        check_degree_vector_identity((2, 2))
    with pytest.raises(ZeroDenominator):
        check_degree_vector_identity((1, -1))


def test_degree_vector_sweep():
    for lam in partitions_up_to(10):
        assert check_degree_vector_identity(degree_vector(lam)).passed


def test_plancherel_examples():
    assert [f_count(lam) for lam in partitions_of(3)] == [1, 2, 1]
    assert plancherel_normalization(3).passed
    assert plancherel_normalization(0).passed
    assert plancherel_normalization(10).passed


def test_rectangle_examples():
    assert rectangle_duality(1, 1).passed
    assert rectangle_duality(2, 2).passed
    assert rectangle_duality(3, 2).passed and rectangle_duality(2, 3).passed


def test_decomposition_and_t_map():
    for lam in [P(1), P(2, 1), P(3, 2, 1), P(2, 2, 1, 1)]:
        assert check_decomposition(lam).passed
    for r in range(1, 6):
        assert check_t_map(r).passed
    assert check_t_map(3, P(2, 1, 1)).passed
    with pytest.raises(ValueError):
        check_t_map(2, P(1))


def test_appell_and_combinatorics():
    for n in range(0, 9):
        assert check_appell(n).passed
    for lam in partitions_up_to(8):
        assert check_combinatorics(lam).passed


def test_failing_report_carries_witness(monkeypatch):
    monkeypatch.setattr(ids, "wlp_thm1", lambda lam: wlp_thm1(lam) + X if lam.size == 2 else wlp_thm1(lam))
    rep = ids.check_thm1(P(1, 1))
    assert rep.failed and rep.status == "fail"
    assert rep.witness["partition"] == [1, 1]
    assert from_json_obj(rep.witness["residual"]) == X
    assert ids.check_thm1(P(1)).passed


# Jacobi form search


def test_jacobi_single_box_is_solvable():
    rep = jacobi_form_search(P(1))
    assert rep.status == "pass"
    for a0, b0, A, b, unknowns, sol in rep.details["samples"]:
        assert sol.status == "unique"
        a, c = sol.solution
        # F_(1) A_1 = a x + c with A_1 = x + (a0 - b0)/(a0 + b0)
        assert (a, c) == (1, (a0 - b0) / (a0 + b0))


@pytest.mark.parametrize("n", range(1, 5))
def test_jacobi_single_rows_are_solvable(n):
    assert jacobi_form_search(P(n)).status == "pass"


def test_jacobi_small_partitions_are_solvable():
    # at each fixed sample every partition up to size 4 admits the form
    for lam in partitions_up_to(4)[1:]:
        assert jacobi_form_search(lam).status == "pass", lam


def test_jacobi_smallest_infeasible_partition():
    infeasible = [lam for lam in partitions_up_to(5)[1:] if jacobi_form_search(lam).status == "infeasible"]
    assert infeasible == [P(1, 1, 1, 1, 1)]
    rep = jacobi_form_search(P(1, 1, 1, 1, 1))
    assert len(rep.witness["certificates"]) == len(DEFAULT_JACOBI_SAMPLES)
    for a0, b0, A, b, unknowns, sol in rep.details["samples"]:
        y = sol.certificate
        for col in range(len(A[0])):
            assert sum(y[i] * A[i][col] for i in range(len(A))) == 0
        assert sum(y[i] * b[i] for i in range(len(A))) == sol.residual != 0


def test_laguerre_satisfies_the_same_form():
    # the Laguerre family at a fixed parameter is a positive control
    a0 = Fraction(3, 7)
    spec = AppellSpec("custom", tuple(a0 * (-1) ** (k - 1) * factorial(k - 1) for k in range(1, 12)))
    from wlpoly.polyalg import solve_linear

    for lam in partitions_up_to(6)[1:]:
        A, b, _ = recurrence_form_system(lam, custom(spec))
        assert solve_linear(A, b).feasible, lam


# registry


def test_registry_names():
    expected = {"thm1", "alt", "hermite", "average", "content", "weighted-content", "degree-vector",
                "rectangle", "jacobi", "plancherel", "appell", "decomposition"}
    assert expected <= set(IDENTITIES)


def test_run_identity_thread_independent():
    one = [r.to_dict() for r in run_identity("thm1", 5, threads=1)]
    many = [r.to_dict() for r in run_identity("thm1", 5, threads=4)]
    strip = lambda rows: [{k: v for k, v in r.items() if k != "ms"} for r in rows]  # noqa: E731
    assert strip(one) == strip(many)
    assert len(one) == sum(len(partitions_of(n)) for n in range(6))
    with pytest.raises(ValueError):
        run_identity("nope", 3)


def test_report_status_properties():
    rep = VerificationReport("x", 1, "infeasible", {"partition": [1]}, 0.0)
    assert not rep.passed and not rep.failed
