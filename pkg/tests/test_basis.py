import itertools

import pytest

from pegball import reference
from pegball.basis import (DEFAULT_K_LIMIT, compactness_check,
                           exceptional_check, is_peg_basis_member, m_set,
                           peg_basis, peg_basis_bound, standard_basis)
from pegball.distance import (Model, ResourceLimitError, ball, distance,
                              distance_peg)
from pegball.peg import ExceptionalKind, format_peg, parse_peg
from pegball.perm import avoids_all, contains_pattern, parse_perm


def test_peg_bases_frozen():
    for (model, k), want in reference.PEG_BASES.items():
        got = {format_peg(pp) for pp in peg_basis(Model(model), k).members}
        assert got == set(want)


def test_peg_basis_rd0():
    assert {format_peg(pp) for pp in peg_basis(Model.RD, 0).members} == {"1-"}


def test_peg_basis_bound():
    # members may not exceed the length bound: 2k+1 for reversals, k+2 for
    # prefix reversals
    assert peg_basis_bound(Model.RD, 1) == 3
    assert peg_basis_bound(Model.RD, 2) == 5
    assert peg_basis_bound(Model.PRD, 1) == 3
    assert peg_basis_bound(Model.PRD, 2) == 4
    for (model, k) in reference.PEG_BASES:
        pb = peg_basis(Model(model), k)
        assert pb.bound == peg_basis_bound(Model(model), k)
        assert all(len(pp) <= pb.bound for pp in pb.members)


def test_peg_basis_members_exceed_radius():
    for (model, k) in reference.PEG_BASES:
        for pp in peg_basis(Model(model), k).members:
            assert distance_peg(Model(model), pp) > k


def test_basis_prop_boundary_shape():
    # reversal basis members never start with a non-minus 1 or end with a
    # non-minus maximum; prefix-reversal members only obey the tail half
    for k in (0, 1):
        for pp in peg_basis(Model.RD, k).members:
            head, tail = pp.base[0], pp.base[-1]
            assert not (head == 1 and str(pp)[1] in "+.")
            assert not (tail == len(pp) and str(pp)[-1] in "+.")
    for k in (0, 1):
        for pp in peg_basis(Model.PRD, k).members:
            assert not (pp.base[-1] == len(pp) and str(pp)[-1] in "+.")


def test_is_peg_basis_member_is_model_dependent():
    theta3 = parse_peg("3. 1- 2.")
    assert not is_peg_basis_member(Model.RD, 1, theta3)
    assert is_peg_basis_member(Model.PRD, 1, theta3)
    assert is_peg_basis_member(Model.RD, 1, parse_peg("1- 2-"))
    assert not is_peg_basis_member(Model.RD, 1, parse_peg("1- 2- 3-"))


def test_peg_basis_k_limit():
    assert DEFAULT_K_LIMIT[Model.RD] == 3
    with pytest.raises(ResourceLimitError):
        peg_basis(Model.RD, 4)
    with pytest.raises(ResourceLimitError):
        peg_basis(Model.PRD, 2, k_limit=1)


def test_m_sets_frozen():
    for model, beta, want in reference.M_SETS:
        ms = m_set(Model(model), parse_peg(beta))
        assert ms.members == {parse_perm(t) for t in want}
        assert not ms.cap_hit


def test_m_set_target_distance():
    beta = parse_peg("2+ 1+")
    ms = m_set(Model.RD, beta)
    assert ms.target_distance == distance_peg(Model.RD, beta) == 3
    assert ms.members == {parse_perm("456123")}


def test_m_set_length_cap():
    ms = m_set(Model.RD, parse_peg("2+ 1+"), length_cap=3)
    assert ms.cap_hit
    assert ms.cap == 3
    assert ms.members == frozenset()


def test_standard_bases_frozen():
    for (model, k), want in reference.STANDARD_BASES.items():
        got = standard_basis(Model(model), k)
        assert got == {parse_perm(t) for t in want}


def test_rd_k2_basis_complete():
    got = standard_basis(Model.RD, 2)
    assert got == {parse_perm(t) for t in reference.RD_K2_BASIS}
    assert len(got) == 31


def test_rd_k2_sweep_only_members():
    # these three avoid the whole M-set union: their pegs contain the basis
    # peg 2+ 1+, but its only witness 456123 is longer than they are
    m_union = {p for beta in peg_basis(Model.RD, 2).members
               for p in m_set(Model.RD, beta).members}
    basis = standard_basis(Model.RD, 2)
    for text in reference.RD_K2_BASIS_SWEEP_ONLY:
        p = parse_perm(text)
        assert p in basis
        assert avoids_all(m_union, p)
        assert contains_pattern(parse_peg("2+ 1+").base, p)


def test_standard_basis_members_are_minimal_excluded():
    for (model, k) in (("rd", 1), ("rd", 2), ("prd", 1), ("prd", 2)):
        m = Model(model)
        for p in standard_basis(m, k):
            assert distance(m, p) > k
            n = len(p)
            for i in range(n):
                q = tuple(v - (v > p[i]) for j, v in enumerate(p) if j != i)
                assert distance(m, q) <= k


def test_standard_basis_oracle_equivalence():
    # p is in the ball iff it avoids the computed basis, for every n <= 7
    for (model, k) in (("rd", 2), ("prd", 2)):
        m = Model(model)
        basis = standard_basis(m, k)
        for n in range(1, 8):
            members = ball(m, k, n)
            for p in itertools.permutations(range(1, n + 1)):
                assert avoids_all(basis, p) == (tuple(p) in members)


def test_exceptional_check():
    for k, kinds in ((0, {(ExceptionalKind.THETA_EVEN, 2),
                          (ExceptionalKind.LAMBDA_EVEN, 2)}),
                     (1, {(ExceptionalKind.THETA_ODD, 3),
                          (ExceptionalKind.LAMBDA_ODD, 3)}),
                     (2, {(ExceptionalKind.THETA_EVEN, 4),
                          (ExceptionalKind.LAMBDA_EVEN, 4)})):
        reports = exceptional_check(k)
        assert {(r.kind, r.n) for r in reports} == kinds
        for r in reports:
            # exceptional pegs live in two consecutive bases
            assert r.distance == k + 2
            assert r.distance_ok and r.in_basis_k and r.in_basis_k_plus_1


def test_compactness_check():
    assert compactness_check(parse_peg("3. 4. 1- 5- 2+"))
    assert not compactness_check(parse_peg("3+ 4. 1- 5- 2+"))
    assert compactness_check(parse_peg(""))
