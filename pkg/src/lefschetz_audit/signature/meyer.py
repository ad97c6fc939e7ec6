"""Meyer's signature cocycle on Sp(2g, Z)."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ..errors import DimensionMismatch
from ..fibration import Factorization
from ..linalg import (
    FormSignature,
    IntegerMatrix,
    RationalMatrix,
    rational_nullspace,
    standard_symplectic_form,
    symmetric_signature,
)
from ..surface import SymplecticMatrix
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MeyerForm:
    """The form (x1+y1)ᵀ J (I-B) y2 restricted to V_{A,B}.

    ``basis`` holds vectors (x, y) of length 4g spanning
    V_{A,B} = {(x, y) : (A⁻¹ - I)x + (B - I)y = 0}.
    """
    g: int
    basis: Tuple[Tuple[Fraction, ...], ...]
    gram: RationalMatrix

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def signature(self) -> FormSignature:
        return symmetric_signature(self.gram, symmetrize=True)


def meyer_form(a: SymplecticMatrix, b: SymplecticMatrix) -> MeyerForm:
    """Build V_{A,B} and the Gram matrix of the Meyer form on it."""
    if a.g != b.g:
        raise DimensionMismatch(f"genus {a.g} and genus {b.g} matrices")
    g = a.g
    n = 2 * g
    identity = IntegerMatrix.identity(n)
    relation = (a.inverse().m - identity).hstack(b.m - identity)
    basis = tuple(rational_nullspace(relation))

    jb = (standard_symplectic_form(g) @ (identity - b.m)).to_rational()
    images = [jb.apply(v[n:]) for v in basis]
    rows = []
    for u in basis:
        s = [x + y for x, y in zip(u[:n], u[n:])]
        rows.append([sum(p * q for p, q in zip(s, w)) for w in images])
    gram = RationalMatrix.from_rows(rows, ncols=len(basis))
    return MeyerForm(g, basis, gram)


@lru_cache(maxsize=8192)
def _cocycle(a: SymplecticMatrix, b: SymplecticMatrix) -> Tuple[int, bool]:
    if a.is_identity() or b.is_identity():
        return 0, False
    sig = meyer_form(a, b).signature()
    return sig.value, sig.symmetrized


def meyer_cocycle(a: SymplecticMatrix, b: SymplecticMatrix) -> int:
    """
    Meyer's cocycle τ(A, B).

    Args:
        a: Symplectic matrix A
        b: Symplectic matrix B of the same genus

    Returns:
        Signature of the symmetrized Meyer form on V_{A,B}

    Raises:
        DimensionMismatch: genera differ
    """
    if a.g != b.g:
        raise DimensionMismatch(f"genus {a.g} and genus {b.g} matrices")
    return _cocycle(a, b)[0]


@dataclass(frozen=True)
class CocycleTerms:
    """Per-position cocycle values along a word."""
    terms: Tuple[int, ...]
    symmetrized: bool


def cocycle_terms(f: Factorization, workers: int = 1) -> CocycleTerms:
    """τ(P_j, R_{j+1}) for j = 1 .. l-1.

    Twist matrices act on column vectors, so the word's monodromy is a
    left-to-right product of the transposes R_j = T_jᵀ; P_j = R_1 ... R_j.
    Terms are returned in word order whatever the number of workers.
    """
    rows = [t.transpose() for t in f.letter_matrices()]
    prefixes: List[SymplecticMatrix] = []
    acc = SymplecticMatrix.identity(f.fiber_genus)
    for r in rows[:-1]:
        acc = acc @ r
        prefixes.append(acc)
    pairs = list(zip(prefixes, rows[1:]))

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda p: _cocycle(*p), pairs))
    else:
        results = [_cocycle(a, b) for a, b in pairs]

    logger.debug("cocycle_terms_computed", name=f.name, count=len(results))
    return CocycleTerms(
        terms=tuple(v for v, _ in results),
        symmetrized=any(s for _, s in results),
    )
