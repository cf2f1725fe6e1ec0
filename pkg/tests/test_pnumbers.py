import pytest

from hikers import BudgetExceeded, Coloring, StatementSpec, exact_p, parse_krt, statement_holds, theorem9_bound
from hikers.homogeneity import find_end_homogeneous, longest_track_sequence
from hikers.pnumbers import rows_to_jsonl, verify_bound_grid

from oracles import brute_p, brute_statement, pascal


def test_statement_examples():
    assert statement_holds(StatementSpec(4, 1, 2, 3, "sequence"))
    res = statement_holds(StatementSpec(3, 1, 2, 3, "sequence"))
    assert not res
    assert res.counterexample.colors[:2] == (0, 1)
    assert res.counterexample == Coloring(3, 2, 2, (0, 1, 0))


@pytest.mark.parametrize("variant", ["sequence", "track"])
@pytest.mark.parametrize("N,r,k", [(4, 1, 3), (5, 1, 4), (4, 2, 4), (3, 0, 3)])
def test_one_color_always_holds(variant, N, r, k):
    assert statement_holds(StatementSpec(N, r, 1, k, variant))


@pytest.mark.parametrize("N,r,n,k", [(3, 1, 2, 3), (4, 1, 2, 3), (4, 1, 2, 4), (5, 1, 2, 4),
                                     (4, 2, 2, 4), (5, 0, 2, 3), (4, 1, 3, 3), (5, 2, 2, 5)])
def test_statement_matches_brute_force(N, r, n, k):
    assert statement_holds(StatementSpec(N, r, n, k, "sequence")).holds == brute_statement(N, r, n, k)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as info:
        statement_holds(StatementSpec(6, 1, 2, 4), budget=1000)
    assert info.value.required == 2**15


def test_invalid_statement():
    with pytest.raises(ValueError):
        StatementSpec(1, 1, 2, 3)
    with pytest.raises(ValueError):
        StatementSpec(4, 1, 2, 3, "tracks")


@pytest.mark.parametrize("variant", ["sequence", "track"])
def test_monotone_in_ground_size(variant):
    for r, n, k in [(1, 2, 3), (1, 2, 4), (2, 2, 4), (0, 3, 3), (1, 3, 3)]:
        seen_true = False
        for N in range(max(k, r + 1), 6):
            spec = StatementSpec(N, r, n, k, variant)
            if spec.space_size > 10**5:
                break
            holds = statement_holds(spec).holds
            assert holds or not seen_true
            seen_true |= holds


def test_parallel_scan_matches_serial():
    for spec in [StatementSpec(5, 1, 3, 3, "sequence"), StatementSpec(4, 1, 3, 4, "track")]:
        serial = statement_holds(spec, workers=1)
        parallel = statement_holds(spec, workers=2)
        assert serial == parallel


@pytest.mark.parametrize("k,r,n,expected", [(3, 1, 2, 8), (3, 1, 3, 14), (4, 2, 2, 77)])
def test_theorem9_bound(k, r, n, expected):
    assert theorem9_bound(k, r, n) == expected == r + 1 + sum(n ** pascal(r + i, r) for i in range(k - 1))


def test_theorem9_bound_edge_cases():
    assert theorem9_bound(1, 3, 2) == 4
    with pytest.raises(ValueError):
        theorem9_bound(3, 0, 2)
    big = theorem9_bound(12, 4, 7)
    assert big == 5 + sum(7 ** pascal(4 + i, 4) for i in range(11))
    assert big > 2**64


@pytest.mark.parametrize("k,r,n,p", [(3, 1, 2, 4), (4, 2, 2, 5), (3, 0, 2, 5)])
def test_exact_p_matches_brute_force(k, r, n, p):
    assert brute_p(k, r, n) == p
    for variant in ("sequence", "track"):
        assert exact_p(k, r, n, variant).p == p


def test_exact_p_three_colors():
    rep = exact_p(3, 1, 3, "sequence")
    assert rep.p == 5 and rep.bound == 14
    assert not brute_statement(4, 1, 3, 3)


def test_report_counterexample_refails_from_krt():
    for variant in ("sequence", "track"):
        for cell in [(3, 1, 2), (3, 1, 3), (4, 2, 2), (3, 0, 3)]:
            rep = exact_p(*cell, variant)
            c = parse_krt(rep.to_row()["counterexample_krt"])
            assert c.ground_size == rep.p - 1
            if variant == "sequence":
                assert find_end_homogeneous(c, cell[0]) is None
            else:
                assert len(longest_track_sequence(c).points) < cell[0]


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3])
def test_pigeonhole_closed_form(k, n):
    for variant in ("sequence", "track"):
        assert exact_p(k, 0, n, variant).p == n * (k - 1) + 1


@pytest.mark.parametrize("k,r", [(1, 1), (2, 1), (3, 2), (1, 3), (4, 3)])
def test_vacuous_cells_need_no_enumeration(k, r):
    rep = exact_p(k, r, 3)
    assert rep.p == max(k, r + 1)
    assert rep.colorings_checked == 0 and rep.counterexample is None


def test_variant_ordering():
    for cell in [(3, 1, 2), (3, 1, 3), (4, 2, 2), (3, 0, 3), (4, 0, 2), (3, 2, 2)]:
        assert exact_p(*cell, "sequence").p <= exact_p(*cell, "track").p


def test_budget_error_reports_lower_bound():
    with pytest.raises(BudgetExceeded) as info:
        exact_p(5, 1, 2, budget=2**10)
    # N = 5 fits (2^10 colorings) and fails; N = 6 does not fit
    assert info.value.lower_bound == 5


def test_grid_rows():
    rows = verify_bound_grid([(3, 1, 2), (3, 0, 2), (5, 1, 2)], budget=2**10)
    assert (rows[0]["p"], rows[0]["bound"], rows[0]["ok"]) == (4, "8", True)
    assert (rows[1]["p"], rows[1]["bound"], rows[1]["ok"]) == (5, "n/a (r=0)", None)
    assert "error" in rows[2] and rows[2]["lower_bound"] == 5
    assert rows_to_jsonl(rows).count("\n") == 3


def test_grid_two_cells():
    rows = verify_bound_grid([(3, 1, 3), (4, 2, 2)])
    assert [(r["p"], r["bound"], r["ok"]) for r in rows] == [(5, "14", True), (5, "77", True)]
    assert set(rows[0]) == {"k", "r", "n", "variant", "p", "bound", "ok", "counterexample_krt",
                            "colorings_checked", "elapsed_ms"}


@pytest.mark.parametrize("variant", ["sequence", "track"])
@pytest.mark.parametrize("N,r,n,k", [(3, 1, 2, 3), (4, 1, 2, 3), (4, 1, 3, 3), (5, 1, 2, 4), (4, 2, 2, 4),
                                     (5, 2, 2, 4), (6, 0, 3, 3), (4, 1, 2, 4), (5, 1, 3, 3)])
def test_pruned_walk_matches_plain_odometer(variant, N, r, n, k):
    spec = StatementSpec(N, r, n, k, variant)
    pruned = statement_holds(spec)
    plain = statement_holds(spec, prune=False)
    assert (pruned.holds, pruned.colorings_checked, pruned.counterexample) == \
        (plain.holds, plain.colorings_checked, plain.counterexample)
    assert pruned.searches <= plain.searches


def test_parallel_plain_scan_matches_serial():
    spec = StatementSpec(5, 1, 3, 3, "track")
    assert statement_holds(spec, workers=2, prune=False) == statement_holds(spec, prune=False)
