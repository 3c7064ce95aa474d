"""Shared hypothesis strategies: random rational measures of every kind."""

from fractions import Fraction

import hypothesis.strategies as st

from divcolor import (
    ColorMeasure,
    ExchRERMeasure,
    PaintBox,
    RERMeasure,
    enumerate_integer_partitions,
    enumerate_set_partitions,
)
from divcolor.measures import all_configs


def rationals_01(max_den=16, open_ends=False):
    """Exact rationals in [0,1] (or (0,1)) with bounded denominator."""
    lo = Fraction(1, max_den) if open_ends else Fraction(0)
    hi = 1 - lo
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)


def _weights_on(draw, keys, scale):
    nums = draw(
        st.lists(st.integers(0, scale), min_size=len(keys), max_size=len(keys)).filter(
            lambda xs: sum(xs) > 0
        )
    )
    total = sum(nums)
    return {k: Fraction(x, total) for k, x in zip(keys, nums) if x}


@st.composite
def rer_measures(draw, n, scale=10):
    keys = enumerate_set_partitions(n)
    return RERMeasure(n, _weights_on(draw, keys, scale))


@st.composite
def exch_measures(draw, n, scale=10):
    keys = enumerate_integer_partitions(n)
    return ExchRERMeasure(n, _weights_on(draw, keys, scale))


@st.composite
def color_measures(draw, n, scale=10):
    keys = all_configs(n)
    return ColorMeasure(n, _weights_on(draw, keys, scale))


@st.composite
def paint_boxes(draw, max_boxes=4, max_den=8):
    k = draw(st.integers(0, max_boxes))
    probs = sorted(
        (
            draw(
                st.lists(
                    st.fractions(
                        min_value=Fraction(1, max_den),
                        max_value=1,
                        max_denominator=max_den,
                    ),
                    min_size=k,
                    max_size=k,
                )
            )
        ),
        reverse=True,
    )
    total = sum(probs, Fraction(0))
    if total > 1:
        probs = [q / total for q in probs]
        probs.sort(reverse=True)
    return PaintBox(tuple(probs))
