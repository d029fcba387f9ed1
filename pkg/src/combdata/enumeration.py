"""
One entry point for the exhaustive generators, each in its canonical
(lexicographic) order.

>>> sum(1 for _ in stream("partitions", 5))
7
>>> next(stream("reduced_words", (3, 2, 1)))
(1, 2, 1)
"""

from typing import Any, Iterator

from .partitions import check_partition, partitions, semistandard_tableaux, standard_tableaux
from .permutations import all_permutations, check_perm
from .words import reduced_words

KINDS = ("partitions", "permutations", "syt", "ssyt", "reduced_words")


def stream(kind: str, *args: Any) -> Iterator[Any]:
    """``stream("partitions", n)``, ``stream("permutations", n)``,
    ``stream("syt", shape)``, ``stream("ssyt", shape, max_entry)`` or
    ``stream("reduced_words", w)``."""
    if kind == "partitions":
        return partitions(*args)
    if kind == "permutations":
        return all_permutations(*args)
    if kind == "syt":
        return standard_tableaux(check_partition(args[0]))
    if kind == "ssyt":
        return semistandard_tableaux(check_partition(args[0]), args[1])
    if kind == "reduced_words":
        return reduced_words(check_perm(args[0]))
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
