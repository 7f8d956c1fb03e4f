"""Tutte polynomials of connected multigraphs by deletion-contraction.

Parallel edges are handled as one bundle: for a bundle of k copies of {u, v}

    T(G) = (x + y + ... + y^(k-1)) T(G / bundle)          if the bundle is a bridge
    T(G) = T(G - bundle) + (1 + y + ... + y^(k-1)) T(G / bundle)   otherwise

Intermediate results are memoized on a cheap isomorphism invariant; the
bucket under each invariant is searched by exact comparison of the relabeled
edge set, so the memo never conflates two different graphs.
"""

from collections import OrderedDict
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
import threading

from beartype import beartype
import sympy

from parkext.exceptions import InvalidInputError
from parkext.graphs.multigraph import Multigraph, is_connected

__all__ = [
    "BivariatePolynomial",
    "tutte",
    "tutte_hilbert",
    "initial_coefficients_check",
    "clear_tutte_cache",
]


@dataclass(frozen=True)
class BivariatePolynomial:
    """Integer polynomial in x and y.

    Attributes:
        coeffs: coefficient of x^i y^j keyed by (i, j); zeros dropped
    """

    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {key: c for key, c in sorted(self.coeffs.items()) if c}
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial(_add(self.coeffs, other.coeffs))

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial(_mul(self.coeffs, other.coeffs))

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def evaluate(self, x, y) -> Fraction:
        """exact value at rational (or integer) x, y"""
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self.coeffs.items()), Fraction(0))

    def as_sympy(self) -> sympy.Expr:
        x, y = sympy.symbols("x y")
        return sympy.expand(sum(c * x**i * y**j for (i, j), c in self.coeffs.items()))

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        ordered = sorted(self.coeffs.items(), key=lambda item: (-sum(item[0]), -item[0][0]))
        terms = []
        for (i, j), c in ordered:
            monomial = "*".join(
                f"{name}^{power}" if power > 1 else name
                for name, power in (("x", i), ("y", j))
                if power
            )
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            else:
                terms.append(f"{c}*{monomial}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()


def _add(a: Mapping, b: Mapping) -> dict:
    total = dict(a)
    for key, c in b.items():
        total[key] = total.get(key, 0) + c
    return {key: c for key, c in total.items() if c}


def _mul(a: Mapping, b: Mapping) -> dict:
    product: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            product[key] = product.get(key, 0) + c1 * c2
    return {key: c for key, c in product.items() if c}


# one entry per invariant, holding (exact form, polynomial) pairs; least
# recently used invariants are evicted past MEMO_LIMIT
MEMO_LIMIT = 50_000
_MEMO: OrderedDict[tuple, list[tuple[tuple, dict]]] = OrderedDict()
_MEMO_LOCK = threading.Lock()


def clear_tutte_cache() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def _normalize(num_vertices: int, edges: Mapping) -> tuple[int, tuple]:
    """relabel vertices by decreasing weighted degree, then sort the edges"""
    degree = [0] * (num_vertices + 1)
    for (i, j), k in edges.items():
        degree[i] += k
        degree[j] += k
    order = sorted(range(1, num_vertices + 1), key=lambda v: (-degree[v], v))
    label = {old: new for new, old in enumerate(order, start=1)}
    relabeled = {}
    for (i, j), k in edges.items():
        a, b = sorted((label[i], label[j]))
        relabeled[(a, b)] = relabeled.get((a, b), 0) + k
    return num_vertices, tuple(sorted(relabeled.items()))


def _invariant(num_vertices: int, edges: tuple) -> tuple:
    degree = [0] * (num_vertices + 1)
    for (i, j), k in edges:
        degree[i] += k
        degree[j] += k
    return (
        num_vertices,
        tuple(sorted(degree[1:])),
        tuple(sorted((degree[i], degree[j], k) for (i, j), k in edges)),
    )


def _contract(num_vertices: int, edges: tuple, u: int, v: int) -> dict:
    """merge v into u (u < v) and drop the bundle between them"""
    merged: dict[tuple[int, int], int] = {}

    def relabel(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    for (i, j), k in edges:
        if {i, j} == {u, v}:
            continue
        a, b = sorted((relabel(i), relabel(j)))
        merged[(a, b)] = merged.get((a, b), 0) + k
    return merged


def _geometric(k: int, *, with_x: bool) -> dict:
    series = {(0, j): 1 for j in range(1 if with_x else 0, k)}
    if with_x:
        series[(1, 0)] = 1
    return series


def _tutte(num_vertices: int, edges: tuple) -> dict:
    if not edges:
        return {(0, 0): 1}
    key = _invariant(num_vertices, edges)
    with _MEMO_LOCK:
        for form, value in _MEMO.get(key, ()):
            if form == edges:
                _MEMO.move_to_end(key)
                return value

    (u, v), k = edges[0]
    rest = edges[1:]
    contracted = _tutte(*_normalize(num_vertices - 1, _contract(num_vertices, edges, u, v)))
    if not is_connected(num_vertices, (e for e, _ in rest)):
        result = _mul(_geometric(k, with_x=True), contracted)
    else:
        deleted = _tutte(*_normalize(num_vertices, dict(rest)))
        result = _add(deleted, _mul(_geometric(k, with_x=False), contracted))

    with _MEMO_LOCK:
        bucket = _MEMO.setdefault(key, [])
        if all(form != edges for form, _ in bucket):
            bucket.append((edges, result))
        _MEMO.move_to_end(key)
        while len(_MEMO) > MEMO_LIMIT:
            _MEMO.popitem(last=False)
    return result


@beartype
def tutte(graph: Multigraph) -> BivariatePolynomial:
    """Tutte polynomial T_G(x, y) of a connected loopless multigraph.

    ```python
    from parkext.graphs import complete_multigraph
    tutte(complete_multigraph(2)).to_string()   # 'x^2 + x + y'
    ```

    Raises:
        InvalidInputError: the graph is not connected
    """
    if not graph.is_connected():
        raise InvalidInputError(f"{graph} is not connected")
    return BivariatePolynomial(_tutte(*_normalize(graph.num_vertices, graph.edges)))


@beartype
def tutte_hilbert(graph: Multigraph) -> list[int]:
    """Coefficients of q^(e-v+1) T_G(1, 1/q), lowest degree first."""
    polynomial = tutte(graph)
    top = graph.num_edges - graph.num_vertices + 1
    series = [0] * (top + 1)
    for (_, j), c in polynomial.coeffs.items():
        series[top - j] += c
    return series


@beartype
def initial_coefficients_check(graph: Multigraph) -> bool:
    """True when the q^k coefficient of `tutte_hilbert` is binom(v+k-2, k)
    for every 0 <= k <= v-2.

    This holds whenever every edge cut of the graph has at least v - 1
    edges, which is the case for all the complete multigraphs
    K_{n+1}^{(ell, m)}. Sparser graphs such as trees fail it.
    """
    series = tutte_hilbert(graph)
    v = graph.num_vertices
    for k in range(0, v - 1):
        have = series[k] if k < len(series) else 0
        if have != comb(v + k - 2, k):
            return False
    return True
