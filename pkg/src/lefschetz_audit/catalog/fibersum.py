"""Fiber sum of two fibrations over the sphere by word concatenation."""

from typing import Dict, List, Optional, Tuple

from ..errors import GenusMismatch, NotClosed, WrongBaseGenus
from ..fibration import ClosureVerdict, Factorization, verify_closure
from ..surface import Curve
from ..utils.logger import get_logger

logger = get_logger(__name__)


def _fresh_name(base: str, taken: set) -> str:
    k = 2
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def fiber_sum(f1: Factorization, f2: Factorization, name: Optional[str] = None) -> Factorization:
    """
    Concatenate two closed words over the sphere.

    Curves of f2 whose name is already used by a different curve of f1 are
    renamed with a numeric suffix; identical declarations are shared.

    Args:
        f1: First summand
        f2: Second summand, same fiber genus
        name: Name of the result, "f1+f2" by default

    Returns:
        Closed factorization whose word is f1.word followed by f2.word

    Raises:
        GenusMismatch: fiber genera differ
        WrongBaseGenus: a summand lives over a positive-genus base
        NotClosed: a summand is not closed
    """
    if f1.fiber_genus != f2.fiber_genus:
        raise GenusMismatch(f"fiber genus {f1.fiber_genus} and {f2.fiber_genus} differ")
    for f in (f1, f2):
        if f.base_genus != 0:
            raise WrongBaseGenus(f"'{f.name}' lives over a base of genus {f.base_genus}")
        verdict = verify_closure(f)
        if verdict is not ClosureVerdict.CLOSED:
            raise NotClosed(f"'{f.name}' is not closed: {verdict.value}")

    curves: List[Tuple[str, Curve]] = list(f1.curves)
    table: Dict[str, Curve] = dict(curves)
    renames: Dict[str, str] = {}
    for cname, curve in f2.curves:
        if cname not in table:
            target = cname
        elif table[cname] == curve:
            continue
        else:
            target = _fresh_name(cname, set(table) | {n for n, _ in f2.curves})
            renames[cname] = target
        table[target] = curve
        curves.append((target, curve))

    word = f1.word + tuple(renames.get(letter, letter) for letter in f2.word)
    result = Factorization(
        name=name or f"{f1.name}+{f2.name}",
        fiber_genus=f1.fiber_genus,
        base_genus=0,
        curves=tuple(curves),
        word=word,
    )
    logger.info("fiber_sum_built", name=result.name, length=result.length, renamed=renames)
    if verify_closure(result) is not ClosureVerdict.CLOSED:
        raise NotClosed(f"fiber sum '{result.name}' is not closed")
    return result
