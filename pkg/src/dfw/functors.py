"""Polynomial functors on free lattices and their values on presented groups.

Supported functor kinds (with the degree bounds the rest of the package
needs): tensor powers, symmetric powers SP^n for n <= 5, exterior powers
for n <= 3, and the degree-3 free Lie functor with its Lyndon-bracket
basis.  Induced maps are given in the indexed bases below; the Koszul-type
three-term complex built here is the engine behind the derived functors.

Basis orderings are lexicographic throughout: words for tensor powers,
non-decreasing tuples (monomials) for symmetric powers, strictly
increasing tuples for exterior powers, and Lyndon words of length 3 with
standard-factorization bracketing for the Lie cube.  For product bases
like U (x) SP^k(Q), the U index is the major coordinate.
"""

from __future__ import annotations

import functools
import itertools
from bisect import insort
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .abelian import PresentedGroup, purified_relations, tensor
from .linalg import IntMatrix, hstack, kron, rank, solve_matrix

SYM_MAX_DEGREE = 5
EXT_MAX_DEGREE = 3
TENSOR_MAX_DEGREE = 6

KINDS = ("tensor", "sym", "ext", "lie3")


def _check_degree(kind: str, degree: int) -> None:
    if kind == "sym":
        if not 0 <= degree <= SYM_MAX_DEGREE:
            raise ValueError(f"symmetric power degree {degree} out of range 0..{SYM_MAX_DEGREE}")
    elif kind == "ext":
        if not 0 <= degree <= EXT_MAX_DEGREE:
            raise ValueError(f"exterior power degree {degree} out of range 0..{EXT_MAX_DEGREE}")
    elif kind == "tensor":
        if not 0 <= degree <= TENSOR_MAX_DEGREE:
            raise ValueError(f"tensor power degree {degree} out of range 0..{TENSOR_MAX_DEGREE}")
    elif kind == "lie3":
        if degree != 3:
            raise ValueError("the Lie functor is supported in degree 3 only")
    else:
        raise ValueError(f"unknown functor kind {kind!r}")


def is_lyndon(word: Tuple[int, ...]) -> bool:
    """Strictly smaller than all of its proper rotations."""
    n = len(word)
    for s in range(1, n):
        if word >= word[s:] + word[:s]:
            return False
    return True


@dataclass(frozen=True)
class FunctorBasis:
    """Indexed basis of a polynomial functor of a free lattice."""

    kind: str
    degree: int
    source_rank: int
    elements: Tuple[Tuple[int, ...], ...]

    @functools.cached_property
    def index(self) -> Dict[Tuple[int, ...], int]:
        return {t: i for i, t in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def rank_of(self, t: Sequence[int]) -> int:
        return self.index[tuple(t)]

    def tuple_at(self, i: int) -> Tuple[int, ...]:
        return self.elements[i]


@functools.lru_cache(maxsize=None)
def basis(kind: str, degree: int, source_rank: int) -> FunctorBasis:
    _check_degree(kind, degree)
    letters = range(source_rank)
    if kind == "tensor":
        elems = tuple(itertools.product(letters, repeat=degree))
    elif kind == "sym":
        elems = tuple(itertools.combinations_with_replacement(letters, degree))
    elif kind == "ext":
        elems = tuple(itertools.combinations(letters, degree))
    else:
        elems = tuple(
            w for w in itertools.product(letters, repeat=3) if is_lyndon(w)
        )
    return FunctorBasis(kind, degree, source_rank, elems)


def _standard_bracketing(word: Tuple[int, ...]):
    """Nested-pair bracketing of a Lyndon word by standard factorization
    (the longest proper Lyndon suffix is the right factor)."""
    if len(word) == 1:
        return word[0]
    for s in range(1, len(word)):
        if is_lyndon(word[s:]):
            return (_standard_bracketing(word[:s]), _standard_bracketing(word[s:]))
    raise AssertionError(f"{word} is not Lyndon")


def _expand_bracket(tree) -> Dict[Tuple[int, ...], int]:
    """Commutator expansion of a bracket tree in the tensor algebra."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left = _expand_bracket(tree[0])
    right = _expand_bracket(tree[1])
    out: Dict[Tuple[int, ...], int] = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            out[wl + wr] = out.get(wl + wr, 0) + cl * cr
            out[wr + wl] = out.get(wr + wl, 0) - cl * cr
    return {w: c for w, c in out.items() if c}


@functools.lru_cache(maxsize=None)
def lie3_embedding(source_rank: int) -> IntMatrix:
    """Inclusion of the degree-3 free Lie lattice into the tensor cube.

    Column per Lyndon bracket, expanded into the word basis; e.g. for rank
    2 the bracket of the word xxy is [x,[x,y]] = xxy - 2 xyx + yxx.
    """
    lie = basis("lie3", 3, source_rank)
    cube = basis("tensor", 3, source_rank)
    cols = []
    for w in lie.elements:
        col = [0] * cube.size
        for word, c in _expand_bracket(_standard_bracketing(w)).items():
            col[cube.rank_of(word)] = c
        cols.append(col)
    return IntMatrix.from_cols(cols, rows=cube.size)


def _sym_times_letter(mono: Tuple[int, ...], j: int) -> Tuple[int, ...]:
    out = list(mono)
    insort(out, j)
    return tuple(out)


def _wedge_insert(combo: Tuple[int, ...], j: int):
    """Insert a letter into a strictly increasing tuple; returns
    (tuple, sign) or None when the letter repeats."""
    if j in combo:
        return None
    out = list(combo)
    pos = 0
    while pos < len(out) and out[pos] < j:
        pos += 1
    out.insert(pos, j)
    sign = -1 if (len(combo) - pos) % 2 else 1
    return tuple(out), sign


def induced_map(kind: str, degree: int, f: IntMatrix) -> IntMatrix:
    """Matrix of the functor applied to f: Z^cols -> Z^rows, in the
    indexed bases.  Functorial: identity to identity, composition to
    product."""
    _check_degree(kind, degree)
    src = basis(kind, degree, f.cols)
    dst = basis(kind, degree, f.rows)
    if kind == "tensor":
        if degree == 0:
            return IntMatrix.identity(1)
        out = f
        for _ in range(degree - 1):
            out = kron(out, f)
        return out
    if kind == "lie3":
        emb_src = lie3_embedding(f.cols)
        emb_dst = lie3_embedding(f.rows)
        cube_f = induced_map("tensor", 3, f)
        coords = solve_matrix(emb_dst, cube_f @ emb_src)
        if coords is None:
            raise AssertionError("tensor cube of f does not preserve Lie brackets")
        return coords
    cols = []
    for elem in src.elements:
        acc: Dict[Tuple[int, ...], int] = {(): 1}
        for letter in elem:
            nxt: Dict[Tuple[int, ...], int] = {}
            for partial, coeff in acc.items():
                for j in range(f.rows):
                    v = f.entry(j, letter)
                    if not v:
                        continue
                    if kind == "sym":
                        key = _sym_times_letter(partial, j)
                        nxt[key] = nxt.get(key, 0) + coeff * v
                    else:
                        ins = _wedge_insert(partial, j)
                        if ins is None:
                            continue
                        key, sign = ins
                        nxt[key] = nxt.get(key, 0) + sign * coeff * v
            acc = nxt
        col = [0] * dst.size
        for key, coeff in acc.items():
            if coeff:
                col[dst.rank_of(key)] = coeff
        cols.append(col)
    return IntMatrix.from_cols(cols, rows=dst.size)


@dataclass(frozen=True)
class FreeComplex:
    """Bounded chain complex of free lattices; terms[k] is the rank of the
    degree-k term and differentials[k-1] maps degree k to degree k-1."""

    terms: Tuple[int, ...]
    differentials: Tuple[IntMatrix, ...]

    def __post_init__(self):
        if len(self.differentials) != len(self.terms) - 1:
            raise ValueError("need one differential per adjacent pair of terms")
        for k, d in enumerate(self.differentials):
            if d.rows != self.terms[k] or d.cols != self.terms[k + 1]:
                raise ValueError(f"differential {k + 1} has shape {d.rows}x{d.cols}")
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k] @ self.differentials[k + 1]).is_zero:
                raise ValueError("d o d is nonzero")


def koszul_sp(m: int, u: IntMatrix) -> FreeComplex:
    """Three-term complex  Λ²(U) (x) SP^{m-2}(Q) -> U (x) SP^{m-1}(Q) -> SP^m(Q)
    for a sublattice U of Q = Z^rows given by independent columns.

    d1 multiplies a sublattice vector into the monomial; d2 sends
    (u ∧ v) (x) s to u (x) (v·s) - v (x) (u·s).  Its middle homology is the
    first derived functor of SP^m of the quotient.
    """
    if m < 2:
        raise ValueError("need degree m >= 2")
    r, s = u.rows, u.cols
    if rank(u) != s:
        raise ValueError("sublattice columns must be independent")
    sp_top = basis("sym", m, r)
    sp_mid = basis("sym", m - 1, r)
    sp_low = basis("sym", m - 2, r)
    wedge = basis("ext", 2, s)

    d1_cols = []
    for i in range(s):
        for mono in sp_mid.elements:
            col = [0] * sp_top.size
            for j in range(r):
                v = u.entry(j, i)
                if v:
                    col[sp_top.rank_of(_sym_times_letter(mono, j))] += v
            d1_cols.append(col)
    d1 = IntMatrix.from_cols(d1_cols, rows=sp_top.size)

    mid_dim = s * sp_mid.size
    d2_cols = []
    for (a, b) in wedge.elements:
        for mono in sp_low.elements:
            col = [0] * mid_dim
            for j in range(r):
                vb = u.entry(j, b)
                if vb:
                    col[a * sp_mid.size + sp_mid.rank_of(_sym_times_letter(mono, j))] += vb
                va = u.entry(j, a)
                if va:
                    col[b * sp_mid.size + sp_mid.rank_of(_sym_times_letter(mono, j))] -= va
            d2_cols.append(col)
    d2 = IntMatrix.from_cols(d2_cols, rows=mid_dim)

    return FreeComplex(
        terms=(sp_top.size, mid_dim, wedge.size * sp_low.size),
        differentials=(d1, d2),
    )


def sym_relations(n: int, u: IntMatrix) -> IntMatrix:
    """Relation columns presenting SP^n(Q/U) on the SP^n(Q) basis."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return u
    return koszul_sp(n, u).differentials[0]


def ext_relations(n: int, u: IntMatrix) -> IntMatrix:
    """Relation columns presenting Λ^n(Q/U): the image of U ∧ Λ^{n-1}(Q)."""
    r, s = u.rows, u.cols
    top = basis("ext", n, r)
    low = basis("ext", n - 1, r)
    cols = []
    for i in range(s):
        for combo in low.elements:
            col = [0] * top.size
            for j in range(r):
                v = u.entry(j, i)
                if v:
                    ins = _wedge_insert(combo, j)
                    if ins is not None:
                        key, sign = ins
                        col[top.rank_of(key)] += sign * v
            cols.append(col)
    return IntMatrix.from_cols(cols, rows=top.size)


def _superlie3_relation_columns(p: int) -> List[List[int]]:
    """Columns imposing {a,b,c} = {b,a,c} and vanishing cyclic sums on the
    tensor-cube basis of a rank-p group."""
    cube = basis("tensor", 3, p)
    cols = []
    for (i, j, k) in cube.elements:
        if i < j:
            col = [0] * cube.size
            col[cube.rank_of((i, j, k))] += 1
            col[cube.rank_of((j, i, k))] -= 1
            cols.append(col)
    for w in cube.elements:
        rots = [w, (w[2], w[0], w[1]), (w[1], w[2], w[0])]
        if w == min(rots):
            col = [0] * cube.size
            for rot in rots:
                col[cube.rank_of(rot)] += 1
            cols.append(col)
    return cols


def functor_on_group(kind: str, degree: int, a: PresentedGroup) -> PresentedGroup:
    """Value of the functor on a presented group.

    sym/ext values are cokernel presentations on the free-lattice basis of
    the generators; superlie3 imposes the symmetric and cyclic bracket
    relation families on the tensor cube (it is never given a free basis).
    """
    if kind == "superlie3":
        u = purified_relations(a)
        p = a.rank
        cube = basis("tensor", 3, p)
        ident = IntMatrix.identity(p)
        slot_rels = []
        if u.cols:
            slot_rels = [
                kron(kron(u, ident), ident),
                kron(kron(ident, u), ident),
                kron(kron(ident, ident), u),
            ]
        bracket_rels = IntMatrix.from_cols(
            _superlie3_relation_columns(p), rows=cube.size
        )
        return PresentedGroup(cube.size, hstack(*slot_rels, bracket_rels))
    _check_degree(kind, degree)
    if kind == "tensor":
        if degree == 0:
            return PresentedGroup.free(1)
        out = a
        for _ in range(degree - 1):
            out = tensor(out, a)
        return out
    u = purified_relations(a)
    if kind == "sym":
        return PresentedGroup(basis("sym", degree, a.rank).size, sym_relations(degree, u))
    if kind == "ext":
        return PresentedGroup(basis("ext", degree, a.rank).size, ext_relations(degree, u))
    raise ValueError(f"unsupported functor kind {kind!r} on groups")
