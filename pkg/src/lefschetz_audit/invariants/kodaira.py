"""Kodaira dimension of symplectic 4-manifolds and surfaces, Kneser's bound."""

from dataclasses import dataclass
from enum import Enum
from typing import Union

from ..errors import InconsistentInput, InvalidCodomain, NotMinimal


class KodairaDim(str, Enum):
    """Kodaira dimension; members are declared in increasing order."""
    NEG_INF = "-inf"
    ZERO = "0"
    ONE = "1"
    TWO = "2"

    @property
    def rank(self) -> int:
        """Position in -inf < 0 < 1 < 2."""
        return list(KodairaDim).index(self)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class KodairaInput:
    """Sign of K·ω, K² and whether the manifold is minimal."""
    k_dot_omega_sign: int
    k_squared: int
    minimal: bool

    def __post_init__(self):
        if self.k_dot_omega_sign not in (-1, 0, 1):
            raise ValueError(f"k_dot_omega_sign must be -1, 0 or 1, got {self.k_dot_omega_sign}")


class Unbounded(Enum):
    """No upper bound on the degree."""
    UNBOUNDED = "unbounded"

    def __str__(self) -> str:
        return "Unbounded"


UNBOUNDED = Unbounded.UNBOUNDED


def kodaira_dimension(inp: KodairaInput) -> KodairaDim:
    """
    Classify a minimal symplectic 4-manifold.

    Args:
        inp: Sign of K·ω, K² and minimality

    Returns:
        KodairaDim

    Raises:
        NotMinimal: the manifold is not minimal
        InconsistentInput: K·ω > 0 with K² < 0 on a minimal manifold
    """
    if not inp.minimal:
        raise NotMinimal("classify a minimal model instead")
    if inp.k_dot_omega_sign < 0:
        return KodairaDim.NEG_INF
    if inp.k_dot_omega_sign == 0:
        return KodairaDim.ZERO
    if inp.k_squared == 0:
        return KodairaDim.ONE
    if inp.k_squared > 0:
        return KodairaDim.TWO
    raise InconsistentInput("K·ω > 0 and K² < 0 cannot both hold on a minimal manifold")


def curve_kodaira(genus: int) -> KodairaDim:
    """Kodaira dimension of a closed surface; the sign of K·ω is that of 2·genus - 2."""
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")
    if genus == 0:
        return KodairaDim.NEG_INF
    if genus == 1:
        return KodairaDim.ZERO
    return KodairaDim.ONE


def kodaira_sum(a: KodairaDim, b: KodairaDim) -> KodairaDim:
    """a + b with -inf absorbing."""
    if KodairaDim.NEG_INF in (a, b):
        return KodairaDim.NEG_INF
    return KodairaDim(str(int(a.value) + int(b.value)))


def fibration_kodaira_bound(g: int, h: int) -> KodairaDim:
    """k(F) + k(Σ) for fiber genus g and base genus h."""
    return kodaira_sum(curve_kodaira(g), curve_kodaira(h))


def subadditivity_holds(k_m: KodairaDim, k_f: KodairaDim, k_sigma: KodairaDim) -> bool:
    """k(M) >= k(F) + k(Σ); -inf is below everything."""
    return k_m.rank >= kodaira_sum(k_f, k_sigma).rank


def kneser_max_degree(g_dom: int, g_cod: int) -> Union[int, Unbounded]:
    """
    Largest degree of a map between closed surfaces allowed by Kneser.

    Args:
        g_dom: Genus of the domain
        g_cod: Genus of the codomain, at least 1

    Returns:
        floor((g_dom - 1)/(g_cod - 1)) for g_cod >= 2, UNBOUNDED for a torus

    Raises:
        InvalidCodomain: g_cod = 0
    """
    if g_cod <= 0:
        raise InvalidCodomain("degrees of maps to the sphere are not constrained")
    if g_cod == 1:
        return UNBOUNDED
    return (g_dom - 1) // (g_cod - 1)
