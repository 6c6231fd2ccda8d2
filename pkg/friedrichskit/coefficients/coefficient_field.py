# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Any, Callable, Sequence, Tuple

import numpy as np

from ..expression import ExprNode, parse_expression, differentiate
from ..expression.expression_builder import ZERO, add, neg, number, mul, sub

Interval = Tuple[float, float]

EntryPair = Tuple[ExprNode, ExprNode]
"""
The pair (real part, imaginary part) of an entry of a coefficient field.
"""


@dataclass(frozen=True)
class CoefficientField:
    """
    A matrix valued function x ↦ M(x) on an interval, given entrywise by pairs of
    real valued expressions (real part, imaginary part).

    The field is immutable and hashable; the arithmetic methods build new fields
    symbolically.
    """

    n: int
    """
    The size of the square matrices.
    """

    entries: Tuple[Tuple[EntryPair, ...], ...]
    """
    The n×n grid of (real part, imaginary part) expression pairs.
    """

    interval: Interval
    """
    The interval (a, b) on which the field is defined.
    """

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"The dimension must be positive: {self.n}")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"The coefficient field must be a {self.n}×{self.n} grid.")
        a, b = self.interval
        if not (np.isfinite(a) and np.isfinite(b) and a < b):
            raise ValueError(f"Invalid interval: {self.interval}")

    def entry(self, i: int, j: int) -> EntryPair:
        return self.entries[i][j]

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        """
        Evaluates this field at the specified points.

        :param x: a point or a 1-dimensional array of points.
        :return: an array of shape (n, n) for a scalar point, or of shape
            (len(x), n, n) for an array of points.
        """
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        result = np.empty((len(xs), self.n, self.n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, (re, im) in enumerate(row):
                value = re.evaluate(xs)
                if im != ZERO:
                    value = value + 1j * im.evaluate(xs)
                result[:, i, j] = value
        if np.ndim(x) == 0:
            return result[0]
        return result

    def evaluate_parts(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Evaluates the real part and the imaginary part expressions separately.

        :param x: a 1-dimensional array of points.
        :return: two complex arrays of shape (len(x), n, n); both are real valued
            for a well formed field.
        """
        xs = np.asarray(x, dtype=float)
        re_values = np.empty((len(xs), self.n, self.n), dtype=complex)
        im_values = np.empty((len(xs), self.n, self.n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, (re, im) in enumerate(row):
                re_values[:, i, j] = re.evaluate(xs)
                im_values[:, i, j] = im.evaluate(xs)
        return re_values, im_values

    def has_imaginary_part(self) -> bool:
        return any(im != ZERO for row in self.entries for _, im in row)

    def _map(self, fn: Callable[[EntryPair], EntryPair]) -> "CoefficientField":
        entries = tuple(tuple(fn(pair) for pair in row) for row in self.entries)
        return CoefficientField(self.n, entries, self.interval)

    def _combine(self, other: "CoefficientField",
                 fn: Callable[[ExprNode, ExprNode], ExprNode]) -> "CoefficientField":
        if other.n != self.n or other.interval != self.interval:
            raise ValueError("Cannot combine coefficient fields of different shapes "
                             "or intervals.")
        entries = tuple(
            tuple((fn(p[0], q[0]), fn(p[1], q[1])) for p, q in zip(row, other_row))
            for row, other_row in zip(self.entries, other.entries)
        )
        return CoefficientField(self.n, entries, self.interval)

    def derivative(self) -> "CoefficientField":
        """
        Calculates the entrywise symbolic derivative of this field.
        """
        return self._map(lambda p: (differentiate(p[0]), differentiate(p[1])))

    def conj_transpose(self) -> "CoefficientField":
        entries = tuple(
            tuple((self.entries[j][i][0], neg(self.entries[j][i][1]))
                  for j in range(self.n))
            for i in range(self.n)
        )
        return CoefficientField(self.n, entries, self.interval)

    def __add__(self, other: "CoefficientField") -> "CoefficientField":
        return self._combine(other, add)

    def __sub__(self, other: "CoefficientField") -> "CoefficientField":
        return self._combine(other, sub)

    def __neg__(self) -> "CoefficientField":
        return self._map(lambda p: (neg(p[0]), neg(p[1])))

    def scale(self, factor: float) -> "CoefficientField":
        """
        Multiplies this field by a real factor.
        """
        c = number(factor)
        return self._map(lambda p: (mul(c, p[0]), mul(c, p[1])))

    def times_i(self) -> "CoefficientField":
        """
        Multiplies this field by the imaginary unit: i(re + i·im) = −im + i·re.
        """
        return self._map(lambda p: (neg(p[1]), p[0]))

    def with_interval(self, interval: Interval) -> "CoefficientField":
        return CoefficientField(self.n, self.entries, interval)

    def submatrix(self, indices: Sequence[int]) -> "CoefficientField":
        """
        Gets the principal submatrix with the specified row and column indices.
        """
        entries = tuple(tuple(self.entries[i][j] for j in indices) for i in indices)
        return CoefficientField(len(indices), entries, self.interval)

    def block(self, index: int) -> "CoefficientField":
        """
        Gets the 1×1 diagonal block with the specified index.
        """
        return CoefficientField(1, ((self.entries[index][index],),), self.interval)

    def to_json(self) -> list:
        """
        Converts this field to its JSON representation, i.e., an n×n array of
        expression strings or {"re": .., "im": ..} objects.
        """
        result = []
        for row in self.entries:
            json_row = []
            for re, im in row:
                if im == ZERO:
                    json_row.append(re.to_text())
                else:
                    json_row.append({"re": re.to_text(), "im": im.to_text()})
            result.append(json_row)
        return result

    @staticmethod
    def from_exprs(exprs: Sequence[Sequence[ExprNode | EntryPair]],
                   interval: Interval) -> "CoefficientField":
        """
        Builds a field from a grid of real expressions or expression pairs.
        """
        entries = tuple(
            tuple(e if isinstance(e, tuple) else (e, ZERO) for e in row)
            for row in exprs
        )
        return CoefficientField(len(entries), entries, interval)

    @staticmethod
    def constant(matrix: Any, interval: Interval) -> "CoefficientField":
        """
        Builds a constant field from a numeric matrix.
        """
        m = np.atleast_2d(np.asarray(matrix, dtype=complex))
        return CoefficientField.from_exprs(
            [[(number(z.real), number(z.imag)) for z in row] for row in m],
            interval,
        )

    @staticmethod
    def zeros(n: int, interval: Interval) -> "CoefficientField":
        return CoefficientField.from_exprs([[ZERO] * n for _ in range(n)], interval)

    @staticmethod
    def identity(n: int, interval: Interval) -> "CoefficientField":
        return CoefficientField.constant(np.eye(n), interval)

    @staticmethod
    def parse(text: str | Sequence[Sequence[str]], interval: Interval) -> "CoefficientField":
        """
        Parses a field from a scalar expression or a grid of real expressions.

        :param text: e.g. "1+x" or [["1", "0"], ["0", "1-x"]].
        :param interval: the interval of the field.
        :return: the parsed field.
        """
        if isinstance(text, str):
            text = [[text]]
        return CoefficientField.from_json(text, len(text), interval, "field")

    @staticmethod
    def from_json(data: Any, n: int, interval: Interval, name: str) -> "CoefficientField":
        """
        Parses a field from its JSON representation.

        :param data: an n×n array whose entries are expression strings, numbers,
            or objects {"re": expr, "im": expr}.
        :param n: the expected dimension.
        :param interval: the interval of the field.
        :param name: the name of the field used in error messages.
        :return: the parsed field.
        :raise ValueError: if the data is malformed.
        """
        if (not isinstance(data, list) or len(data) != n
                or any(not isinstance(row, list) or len(row) != n for row in data)):
            raise ValueError(f"The field {name} must be a {n}×{n} array.")
        entries = tuple(
            tuple(_parse_entry(e, f"{name}[{i}][{j}]") for j, e in enumerate(row))
            for i, row in enumerate(data)
        )
        return CoefficientField(n, entries, interval)


def _parse_entry(data: Any, name: str) -> EntryPair:
    if isinstance(data, dict):
        unknown = set(data) - {"re", "im"}
        if unknown:
            raise ValueError(f"Unknown fields of the entry {name}: {sorted(unknown)}")
        return (_parse_part(data.get("re", "0"), name),
                _parse_part(data.get("im", "0"), name))
    return _parse_part(data, name), ZERO


def _parse_part(data: Any, name: str) -> ExprNode:
    if isinstance(data, bool):
        raise ValueError(f"Invalid expression of the entry {name}: {data!r}")
    if isinstance(data, (int, float)):
        return number(data)
    if isinstance(data, str):
        return parse_expression(data)
    raise ValueError(f"Invalid expression of the entry {name}: {data!r}")
