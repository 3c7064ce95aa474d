"""Paint-box color processes: mixing-variable laws, marginal color measures
via moments vs direct partition enumeration, the density-1/2 splitting
identity and its failure elsewhere, and exact uniqueness audits."""

from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from divcolor import (
    AtomicXi,
    PaintBox,
    PaintboxMixture,
    SimpleMixture,
    apply_phi,
    mainp12_decompose,
    marginal_color_measure,
    paintbox_rer_on_n,
    split_identity_check,
    uniqueness_audit,
    unprop_witness,
    xi_distribution,
)
from divcolor.measures import SizeLimitError, product_measure
from divcolor.paintbox import as_xi, simple_box

from conftest import paint_boxes, rationals_01

F = Fraction

inner_probs = rationals_01(max_den=8, open_ends=True)


# ---------------------------------------------------------------------------
# construction and validation


def test_paintbox_validation():
    with pytest.raises(ValueError):
        PaintBox((F(1, 4), F(1, 2)))  # increasing
    with pytest.raises(ValueError):
        PaintBox((F(2, 3), F(1, 2)))  # sum > 1
    with pytest.raises(ValueError):
        PaintBox((F(1, 2), F(0)))  # zero box
    assert simple_box(0) == PaintBox(())
    assert simple_box(F(1, 3)).probs == (F(1, 3),)
    assert PaintBox((F(1, 2), F(1, 4))).deficit == F(1, 4)


def test_atomic_xi_validation():
    with pytest.raises(ValueError):
        AtomicXi({F(3, 2): F(1)})
    with pytest.raises(ValueError):
        AtomicXi({F(1, 2): F(-1), F(1, 4): F(2)})
    with pytest.raises(ValueError):
        AtomicXi({F(1, 2): F(1, 3)})
    xi = AtomicXi({F(1, 4): F(1, 2), F(3, 4): F(1, 2)})
    assert xi.support() == [F(1, 4), F(3, 4)]
    assert xi.mean() == F(1, 2)
    assert xi.is_symmetric()


def test_mixture_validation():
    with pytest.raises(TypeError):
        PaintboxMixture({F(1, 2): F(1)})
    with pytest.raises(ValueError):
        PaintboxMixture({simple_box(F(1, 2)): F(1, 2)})
    with pytest.raises(TypeError):
        as_xi("not a mixing law", F(1, 2))


# ---------------------------------------------------------------------------
# the mixing-variable law


def test_two_box_mixing_law_at_half():
    xi = xi_distribution(PaintBox((F(1, 2), F(1, 4))), F(1, 2))
    assert xi.atoms == {
        F(1, 8): F(1, 4),
        F(3, 8): F(1, 4),
        F(5, 8): F(1, 4),
        F(7, 8): F(1, 4),
    }


@given(paint_boxes(), inner_probs)
@settings(max_examples=80)
def test_mixing_law_invariants(pb, p):
    xi = xi_distribution(pb, p)
    assert xi.mean() == p
    assert xi.min_atom() == pb.deficit * p
    assert xi.max_atom() == pb.deficit * p + pb.total
    assert len(xi.atoms) <= 2 ** len(pb.probs)


@given(paint_boxes())
def test_mixing_law_symmetric_at_half(pb):
    assert xi_distribution(pb, F(1, 2)).is_symmetric()


def test_empty_box_gives_iid():
    assert xi_distribution(PaintBox(()), F(1, 3)).atoms == {F(1, 3): F(1)}
    assert marginal_color_measure(PaintBox(()), F(1, 3), 4) == product_measure(4, F(1, 3))


# ---------------------------------------------------------------------------
# marginals: moment route vs partition-enumeration route


def test_two_box_partition_law_on_pair():
    nu = paintbox_rer_on_n(PaintBox((F(1, 2), F(1, 4))), 2)
    same = F(1, 4) + F(1, 16)
    assert nu.prob((0, 0)) == same
    assert nu.prob((0, 1)) == 1 - same


@given(
    paint_boxes(max_boxes=3, max_den=6),
    st.integers(2, 4),
    st.sampled_from([F(1, 3), F(1, 2), F(3, 4)]),
)
@settings(max_examples=60, deadline=None)
def test_moment_marginal_matches_partition_enumeration(pb, n, p):
    via_partitions = apply_phi(paintbox_rer_on_n(pb, n), p)
    via_moments = marginal_color_measure(pb, p, n)
    assert via_partitions == via_moments


@given(paint_boxes(max_boxes=3, max_den=6), st.integers(2, 5))
@settings(max_examples=40)
def test_marginal_is_01_symmetric_at_half(pb, n):
    mu = marginal_color_measure(pb, F(1, 2), n)
    for cfg, w in mu.items():
        flipped = "".join("1" if c == "0" else "0" for c in cfg)
        assert mu.prob(flipped) == w


def test_size_caps():
    pb = PaintBox((F(1, 2),))
    with pytest.raises(SizeLimitError):
        paintbox_rer_on_n(pb, 9)
    with pytest.raises(SizeLimitError):
        marginal_color_measure(pb, F(1, 2), 13)


# ---------------------------------------------------------------------------
# the splitting identity at density 1/2


@given(
    st.fractions(min_value=F(1, 8), max_value=1, max_denominator=8),
    st.fractions(min_value=F(1, 8), max_value=1, max_denominator=8),
    st.integers(2, 5),
)
@settings(max_examples=40, deadline=None)
def test_split_identity_holds_at_half(a, b, n):
    p1, p2 = max(a, b), min(a, b)
    if p1 + p2 > 1:
        p1, p2 = p1 / (p1 + p2), p2 / (p1 + p2)
    assert split_identity_check(p1, p2, n) is True


@pytest.mark.parametrize("p", [F(1, 3), F(2, 3), F(1, 4)])
def test_split_identity_fails_off_half(p):
    assert split_identity_check(F(1, 2), F(1, 4), 3, p=p) is False


def test_split_identity_validation():
    with pytest.raises(ValueError):
        split_identity_check(F(1, 4), F(1, 2), 3)
    with pytest.raises(ValueError):
        split_identity_check(F(1, 2), F(0), 3)


# ---------------------------------------------------------------------------
# decomposition into one-box mixtures at density 1/2


def test_decompose_fixture():
    xi = AtomicXi({F(1): F(3, 8), F(0): F(3, 8), F(1, 2): F(1, 4)})
    assert mainp12_decompose(xi).atoms == {F(1): F(3, 4), F(0): F(1, 4)}


def test_decompose_rejects_asymmetric():
    with pytest.raises(ValueError):
        mainp12_decompose(AtomicXi({F(1, 4): F(1)}))


@given(
    st.dictionaries(
        st.fractions(min_value=0, max_value=1, max_denominator=8),
        st.integers(1, 10),
        min_size=1,
        max_size=4,
    )
)
@settings(max_examples=60)
def test_decompose_round_trip(raw):
    total = sum(raw.values())
    mixture = SimpleMixture({s: F(w, total) for s, w in raw.items()})
    xi = as_xi(mixture, F(1, 2))
    assert xi.is_symmetric()
    assert mainp12_decompose(xi).atoms == mixture.atoms


def test_one_box_mixtures_collide_at_half():
    rho, rho_prime = unprop_witness(F(1, 4), F(3, 4))
    assert rho != rho_prime
    for n in range(2, 7):
        assert marginal_color_measure(rho, F(1, 2), n) == marginal_color_measure(
            rho_prime, F(1, 2), n
        )
    assert marginal_color_measure(rho, F(1, 3), 3) != marginal_color_measure(
        rho_prime, F(1, 3), 3
    )
    with pytest.raises(ValueError):
        unprop_witness(F(3, 4), F(1, 4))


# ---------------------------------------------------------------------------
# uniqueness audits away from density 1/2


def test_audit_one_box():
    audit = uniqueness_audit(simple_box(F(1, 2)), F(2, 3))
    assert audit.unique is True
    assert audit.family == "one-box"
    assert sum(w for _, w, _ in audit.system) == 1


def test_audit_two_box_candidate_set():
    audit = uniqueness_audit(PaintBox((F(1, 2), F(1, 4))), F(2, 3))
    assert audit.unique is True
    assert audit.family == "two-box"
    assert {pb.probs for pb in audit.candidates} == {
        (),
        (F(3, 4),),
        (F(1, 2), F(1, 4)),
        (F(1, 4), F(1, 4), F(1, 4)),
    }
    xi = xi_distribution(audit.target, audit.p)
    for atom, weight, _ in audit.system:
        assert xi.atoms[atom] == weight


def test_audit_diagonal_three_box():
    audit = uniqueness_audit(PaintBox((F(1, 4), F(1, 4), F(1, 4))), F(2, 3))
    assert audit.unique is True
    assert audit.family == "diagonal-three-box"


def test_audit_below_half_uses_complement():
    audit = uniqueness_audit(PaintBox((F(1, 2), F(1, 4))), F(1, 3))
    assert audit.p == F(2, 3)
    assert "complementary" in audit.note
    assert audit.unique is True


def test_audit_rejects_bad_inputs():
    with pytest.raises(ValueError):
        uniqueness_audit(simple_box(F(1, 2)), F(1, 2))
    with pytest.raises(ValueError):
        uniqueness_audit(simple_box(F(1, 2)), F(0))
    with pytest.raises(ValueError):
        uniqueness_audit(PaintBox((F(1, 2), F(1, 4), F(1, 8))), F(2, 3))
