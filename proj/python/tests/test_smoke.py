import pytest

import ihxlab


def test_enumerate_degree_one():
    graphs = ihxlab.enumerate(1, connected=True)
    assert len(graphs) == 2
    assert all(g.startswith("tg1 ") for g in graphs)
    assert len(ihxlab.enumerate(1, allow_loops=False)) == 1


def test_canonicalize_is_stable():
    theta = ihxlab.enumerate(1, allow_loops=False)[0]
    encoding, sign = ihxlab.canonicalize(theta)
    assert sign == 1
    assert ihxlab.canonicalize(encoding) == (encoding, 1)


def test_quotient_ranks():
    assert ihxlab.quotient_rank(2, "ihx,loop")["quotient_dimension"] == 0
    assert ihxlab.quotient_rank(3, "ih0,loop")["quotient_dimension"] == 3
    assert ihxlab.quotient_rank(3, "ih0,loop", connected=True)["quotient_dimension"] == 1


def test_reduce_k4():
    k4 = ihxlab.enumerate(2, connected=True, allow_loops=False)[0]
    assert ihxlab.reduce(k4) == {"E2": "1/1"}


def test_alpha_and_invariants():
    theta = ihxlab.enumerate(1, allow_loops=False)[0]
    text = ihxlab.alpha(theta, 2, "exterior")
    assert text.startswith("tensor1 genus=2 space=ext2(ext3)")
    assert ihxlab.invariant_dimension(3, "ext2(ext3)") == 2
    assert ihxlab.space_dimension(3, "ext2(ext3)") == 190


def test_dimensions():
    assert ihxlab.weyl_dimension(2, [2, 2]) == 14
    d = ihxlab.decomposition(6, "1.1")
    assert d["total"] == 21528 and d["holds"]


def test_errors():
    with pytest.raises(ihxlab.StructuralError):
        ihxlab.quotient_rank(1, "bogus")
    with pytest.raises(ihxlab.StructuralError):
        ihxlab.canonicalize("not a graph")
    theta = ihxlab.enumerate(1, allow_loops=False)[0]
    with pytest.raises(ihxlab.PreconditionError):
        ihxlab.alpha(theta, 1, "symmetric")
    ihxlab.set_limits(3, 1000)
    try:
        with pytest.raises(ihxlab.CapacityError):
            ihxlab.quotient_rank(3, "ihx")
    finally:
        ihxlab.set_limits(100_000_000, 2_000_000)


def test_verify_graphs():
    passed, report = ihxlab.verify("graphs")
    assert passed
    assert "PASS" in report
