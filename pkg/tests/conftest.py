"""Shared reference oracles for the test suite.

The reference path works on plain numeric vectors with the rational
coupling matrix written out directly -- it never touches the symbolic
coefficient machinery, so agreement between the two is a genuine
cross-check, not a tautology.
"""

from fractions import Fraction

from b2weyl.algebra import MassVector, Weights, eval_at

F = Fraction

# Independent transcription of the coupling matrix (do not import it).
REF_CARTAN_3 = (
    (F(1), F(0), F(-1)),
    (F(0), F(1), F(-1)),
    (F(-1, 2), F(-1, 2), F(1)),
)
REF_CARTAN_SINH = ((F(1), F(-1)), (F(-1), F(1)))

# Enough varied rational weight samples to pin down any degree-two
# polynomial identity that the symbolic path claims.
SAMPLE_WEIGHTS = [
    (F(1), F(1), F(1)),
    (F(3, 2), F(1, 2), F(1)),
    (F(2), F(3), F(5)),
    (F(7, 3), F(1, 5), F(11, 2)),
    (F(1, 7), F(13, 4), F(2, 9)),
    (F(5), F(1, 2), F(8, 3)),
]


def reflect_reference(values, index, mu, cartan=REF_CARTAN_3):
    """Direct affine reflection on a numeric vector: the defining formula."""
    i = index - 1
    vals = list(values)
    vals[i] = 4 * mu[i] - 2 * sum(cartan[i][j] * vals[j] for j in range(len(vals))) + vals[i]
    return tuple(vals)


def apply_word_reference(values, word, mu, cartan=REF_CARTAN_3):
    for index in word:
        values = reflect_reference(values, index, mu, cartan)
    return values


def quadric_reference(values, mu):
    """Numeric residual of the invariant quadric, from its printed form."""
    s1, s2, s3 = values
    m1, m2, m3 = mu
    return (s1 - s3) ** 2 + (s2 - s3) ** 2 - 4 * (m1 * s1 + m2 * s2 + 2 * m3 * s3)


def assert_word_matches_reference(start: MassVector, word, result: MassVector):
    """The symbolic word action must agree with the numeric path everywhere."""
    for mu in SAMPLE_WEIGHTS:
        w = Weights.numeric(*mu)
        expected = apply_word_reference(eval_at(start, w), word, mu)
        assert eval_at(result, w) == expected, f"mismatch at mu={mu}"
