"""Named families of permutation groups."""
from __future__ import annotations

from .errors import UnknownFamily
from .perm import (DEFAULT_BOUND, FiniteGroup, Permutation, closure, group_from_generators,
                   is_prime)

FAMILIES = ("cyclic", "dihedral", "quaternion", "symmetric", "alternating",
            "elementary_abelian", "s2p_normalizer", "wreath_family")


def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree, one_based=False)


def primitive_root(p: int) -> int:
    for r in range(2, p):
        if len({pow(r, k, p) for k in range(1, p)}) == p - 1:
            return r
    return 1


def cyclic(n: int) -> list[Permutation]:
    return [_cycle(list(range(n)), n)] if n > 1 else [Permutation.identity(1)]


def dihedral(order: int) -> tuple[int, list[Permutation]]:
    """Dihedral group of the given order acting on the vertices of a polygon."""
    if order < 4 or order % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    n = order // 2
    if n == 2:
        return 4, [Permutation.from_cycles([(1, 2), (3, 4)], 4),
                   Permutation.from_cycles([(1, 3), (2, 4)], 4)]
    rot = _cycle(list(range(n)), n)
    refl = Permutation((-i) % n for i in range(n))
    return n, [rot, refl]


def quaternion(order: int) -> tuple[int, list[Permutation]]:
    """Generalized quaternion group, regular representation.

    Elements ``x^a y^b`` are indexed ``a + b * half``; ``y^2 = x^(half/2)``.
    """
    if order < 8 or order & (order - 1):
        raise ValueError(f"quaternion order must be a power of 2 >= 8, got {order}")
    half = order // 2

    def idx(a: int, b: int) -> int:
        return a % half + b * half

    left_x = [0] * order
    left_y = [0] * order
    for a in range(half):
        for b in range(2):
            left_x[idx(a, b)] = idx(a + 1, b)
            left_y[idx(a, b)] = idx(-a, 1) if b == 0 else idx(-a + half // 2, 0)
    return order, [Permutation(left_x), Permutation(left_y)]


def symmetric(n: int) -> list[Permutation]:
    if n <= 1:
        return [Permutation.identity(max(n, 1))]
    gens = [_cycle(list(range(n)), n), _cycle([0, 1], n)]
    return gens


def alternating(n: int) -> list[Permutation]:
    if n <= 2:
        return [Permutation.identity(max(n, 1))]
    return [_cycle([0, 1, i], n) for i in range(2, n)]


def elementary_abelian(p: int, n: int) -> list[Permutation]:
    deg = p * n
    return [_cycle(list(range(b * p, b * p + p)), deg) for b in range(n)]


def symmetric_normalizer(degree: int, H_elements: frozenset[Permutation],
                         gens: list[Permutation]) -> frozenset[Permutation]:
    """All ``g`` in Sym(degree) with ``g h g^-1`` in H for every generator h.

    Backtracking over point images; each generator keeps the list of
    elements of H its conjugate could still equal.
    """
    by_type: dict[tuple, list[Permutation]] = {}
    for y in H_elements:
        by_type.setdefault(y.cycle_type(), []).append(y)
    cands0 = [by_type.get(h.cycle_type(), []) for h in gens]
    inverses = [h.inverse() for h in gens]
    found: set[Permutation] = set()
    image = [-1] * degree
    used = [False] * degree

    def consistent(cands: list[list[Permutation]], i: int) -> list[list[Permutation]] | None:
        # point i was just assigned; check every relation touching it
        out = []
        for h, hinv, cs in zip(gens, inverses, cands):
            keep = []
            for y in cs:
                ok = True
                for a in (i, hinv[i]):
                    b = h[a]
                    if image[a] >= 0 and image[b] >= 0 and y[image[a]] != image[b]:
                        ok = False
                        break
                if ok:
                    keep.append(y)
            if not keep:
                return None
            out.append(keep)
        return out

    def search(i: int, cands: list[list[Permutation]]) -> None:
        if i == degree:
            found.add(Permutation(image))
            return
        for v in range(degree):
            if used[v]:
                continue
            image[i] = v
            used[v] = True
            nxt = consistent(cands, i)
            if nxt is not None:
                search(i + 1, nxt)
            used[v] = False
            image[i] = -1

    search(0, cands0)
    return frozenset(found)


def s2p_normalizer(p: int) -> tuple[int, list[Permutation], frozenset[Permutation]]:
    """``N_{S_2p}(<(1..p), (p+1..2p)>)`` found by search inside Sym(2p)."""
    if p not in (2, 3, 5):
        raise ValueError(f"s2p_normalizer supports p in {{2, 3, 5}}, got {p}")
    deg = 2 * p
    gens = elementary_abelian(p, 2)
    S = closure(gens, Permutation.identity(deg))
    elems = symmetric_normalizer(deg, S, gens)
    return deg, _small_generating_set(elems, deg), elems


def _small_generating_set(elems: frozenset[Permutation], degree: int) -> list[Permutation]:
    ident = Permutation.identity(degree)
    gens: list[Permutation] = []
    span = frozenset([ident])
    for x in sorted(elems, key=lambda e: (-e.order(), e)):
        if x not in span:
            gens.append(x)
            span = closure(gens, ident)
            if span == elems:
                break
    return gens


def wreath_family(p: int, n: int) -> list[Permutation]:
    """``(C_p x| C_{p-1})^n x| S_n`` acting on ``n`` blocks of ``p`` points."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"wreath_family needs an odd prime, got {p}")
    if n < 1:
        raise ValueError("wreath_family needs n >= 1")
    deg = n * p
    r = primitive_root(p)
    gens = []
    for b in range(n):
        off = b * p
        gens.append(_cycle(list(range(off, off + p)), deg))
        mult = list(range(deg))
        for i in range(p):
            mult[off + i] = off + (r * i) % p
        gens.append(Permutation(mult))
    if n >= 2:
        swap = list(range(deg))
        for i in range(p):
            swap[i], swap[p + i] = p + i, i
        gens.append(Permutation(swap))
    if n >= 3:
        gens.append(Permutation((i + p) % deg for i in range(deg)))
    return gens


def named_group(family: str, params: tuple[int, ...] | list[int],
                bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Build a group from a family name and integer parameters.

    >>> named_group("dihedral", [8]).order
    8
    """
    params = tuple(int(x) for x in params)
    name = f"{family}:{','.join(map(str, params))}"

    def need(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"{family} takes {k} parameter(s), got {len(params)}")

    if family == "cyclic":
        need(1)
        if params[0] < 1:
            raise ValueError("cyclic order must be positive")
        gens = cyclic(params[0])
        return group_from_generators(len(gens[0]), gens, bound, name)
    if family == "dihedral":
        need(1)
        deg, gens = dihedral(params[0])
        return group_from_generators(deg, gens, bound, name)
    if family == "quaternion":
        need(1)
        deg, gens = quaternion(params[0])
        return group_from_generators(deg, gens, bound, name)
    if family == "symmetric":
        need(1)
        gens = symmetric(params[0])
        return group_from_generators(len(gens[0]), gens, bound, name)
    if family == "alternating":
        need(1)
        gens = alternating(params[0])
        return group_from_generators(len(gens[0]), gens, bound, name)
    if family == "elementary_abelian":
        need(2)
        p, n = params
        if not is_prime(p) or n < 1:
            raise ValueError("elementary_abelian needs a prime and n >= 1")
        return group_from_generators(p * n, elementary_abelian(p, n), bound, name)
    if family == "s2p_normalizer":
        need(1)
        deg, gens, elems = s2p_normalizer(params[0])
        if len(elems) > bound:
            from .errors import GroupTooLarge
            raise GroupTooLarge(f"group too large: more than {bound} elements")
        return FiniteGroup(deg, tuple(gens), elems, name)
    if family == "wreath_family":
        need(2)
        gens = wreath_family(*params)
        return group_from_generators(len(gens[0]), gens, bound, name)
    raise UnknownFamily(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def parse_family(spec: str, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Parse ``NAME:P1,P2`` (e.g. ``dihedral:8``, ``wreath_family:3,2``)."""
    name, _, rest = spec.partition(":")
    params = [int(x) for x in rest.replace(" ", "").split(",") if x] if rest else []
    return named_group(name.strip(), params, bound)


__all__ = ["FAMILIES", "named_group", "parse_family", "symmetric_normalizer",
           "primitive_root"]
