"""Scalar axiom predicates on explicit subspaces.

A second, deliberately naive implementation of every axiom instance, written
with Subspace operations only (no lattice tables).  ``holds`` answers whether
one quantifier instance is satisfied; it is used to re-evaluate witnesses and
as a brute-force oracle for the vectorized checkers on small lattices.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .subspace import Subspace, enumerate_subspaces, full_space, zero_space


class Ctx:
    """A family (or closure map / rank function) with naive helpers."""

    def __init__(self, q: int, n: int, members: Iterable[Subspace] = (), cl=None, rank=None):
        self.q, self.n = q, n
        self.members = sorted(set(members))
        self.set = set(self.members)
        self.cl = cl
        self.rank = rank
        self.spaces = list(enumerate_subspaces(q, n))
        self.atoms = [S for S in self.spaces if S.dim == 1]
        self.coatoms = [S for S in self.spaces if S.dim == n - 1]
        self.E = full_space(q, n)
        self.zero = zero_space(q, n)

    def inside(self, X: Subspace) -> list[Subspace]:
        return [S for S in self.members if X.contains(S)]

    def above(self, X: Subspace) -> list[Subspace]:
        return [S for S in self.members if S.contains(X)]

    def max_in(self, X: Subspace) -> list[Subspace]:
        c = self.inside(X)
        top = max((S.dim for S in c), default=-1)
        return [S for S in c if S.dim == top]

    def min_above(self, X: Subspace) -> list[Subspace]:
        c = self.above(X)
        bot = min((S.dim for S in c), default=-1)
        return [S for S in c if S.dim == bot]

    def basis_max(self, U: Subspace) -> list[Subspace]:
        inter = {B & U for B in self.members}
        top = max((S.dim for S in inter), default=-1)
        return [S for S in inter if S.dim == top]

    def covers(self, A: Subspace, B: Subspace) -> bool:
        """B covers A in the family."""
        if A == B or not B.contains(A):
            return False
        return not any(C != A and C != B and C.contains(A) and B.contains(C) for C in self.members)


def _codim1(A: Subspace, B: Subspace) -> bool:
    return B.contains(A) and B.dim == A.dim + 1


P = Callable[..., bool]

# axiom -> (roles with domains, predicate(ctx, **roles) -> instance holds)
# domains: L = all subspaces, M = family members, a = atoms, h = coatoms,
# 0 = the zero space only, E = the whole space only
AXIOMS: dict[str, tuple[tuple[tuple[str, str], ...], P]] = {}


def axiom(name: str, *roles: tuple[str, str]):
    def deco(fn):
        AXIOMS[name] = (roles, fn)
        return fn

    return deco


# rank (ctx.rank is a Subspace -> int callable)
@axiom("R1", ("A", "L"))
def _r1(c, A):
    return 0 <= c.rank(A) <= A.dim


@axiom("R2", ("A", "L"), ("B", "L"))
def _r2(c, A, B):
    return not B.contains(A) or c.rank(A) <= c.rank(B)


@axiom("R3", ("A", "L"), ("B", "L"))
def _r3(c, A, B):
    return c.rank(A + B) + c.rank(A & B) <= c.rank(A) + c.rank(B)


@axiom("R1'", ("A", "0"))
def _r1p(c, A):
    return c.rank(A) == 0


@axiom("R2'", ("A", "L"), ("x", "a"))
def _r2p(c, A, x):
    return c.rank(A) <= c.rank(A + x) <= c.rank(A) + 1


@axiom("R3'", ("A", "L"), ("x", "a"), ("y", "a"))
def _r3p(c, A, x, y):
    r = c.rank(A)
    if r == c.rank(A + x) == c.rank(A + y):
        return c.rank(A + x + y) == r
    return True


# independence
@axiom("I1")
def _i1(c):
    return bool(c.members)


@axiom("I2", ("I", "L"), ("J", "L"))
def _i2(c, I, J):
    return not (J in c.set and J.contains(I)) or I in c.set


@axiom("I3", ("I", "M"), ("J", "M"))
def _i3(c, I, J):
    if I.dim >= J.dim:
        return True
    return any(J.contains(x) and not I.contains(x) and (I + x) in c.set for x in c.atoms)


@axiom("I4", ("A", "L"), ("B", "L"), ("I", "L"), ("J", "L"))
def _i4(c, A, B, I, J):
    if I not in c.max_in(A) or J not in c.max_in(B):
        return True
    S = I + J
    return any(S.contains(K) for K in c.max_in(A + B))


@axiom("I4'", ("A", "L"), ("I", "L"), ("B", "L"))
def _i4p(c, A, I, B):
    if I not in c.max_in(A):
        return True
    return any((I + B).contains(K) for K in c.max_in(A + B))


@axiom("I4''", ("A", "L"), ("I", "L"), ("x", "a"))
def _i4pp(c, A, I, x):
    if I not in c.max_in(A):
        return True
    return any((x + I).contains(K) for K in c.max_in(x + A))


# bases
@axiom("B1")
def _b1(c):
    return bool(c.members)


@axiom("B2", ("B1", "M"), ("B2", "M"))
def _b2(c, B1, B2):
    return not B2.contains(B1) or B1 == B2


@axiom("B3", ("B1", "M"), ("B2", "M"), ("A", "L"))
def _b3(c, B1, B2, A):
    if not (_codim1(A, B1) and A.contains(B1 & B2)):
        return True
    return any(B2.contains(y) and (A + y) in c.set for y in c.atoms)


@axiom("B4", ("U", "L"), ("V", "L"), ("I", "L"), ("J", "L"))
def _b4(c, U, V, I, J):
    if I not in c.basis_max(U) or J not in c.basis_max(V):
        return True
    return any((I + J).contains(K) for K in c.basis_max(U + V))


@axiom("B4''", ("U", "L"), ("I", "L"), ("x", "a"))
def _b4pp(c, U, I, x):
    if I not in c.basis_max(U):
        return True
    return any((x + I).contains(K) for K in c.basis_max(x + U))


# flats
@axiom("F1", ("E", "E"))
def _f1(c, E):
    return E in c.set


@axiom("F2", ("F1", "M"), ("F2", "M"))
def _f2(c, F1, F2):
    return (F1 & F2) in c.set


@axiom("F3", ("F", "M"), ("x", "a"))
def _f3(c, F, x):
    if F.contains(x):
        return True
    return sum(1 for G in c.members if c.covers(F, G) and G.contains(x)) == 1


# hyperplanes
@axiom("H1", ("H", "E"))
def _h1(c, H):
    return H not in c.set


@axiom("H2", ("H1", "M"), ("H2", "M"))
def _h2(c, H1, H2):
    return not H2.contains(H1) or H1 == H2


@axiom("H3", ("H1", "M"), ("H2", "M"), ("x", "a"))
def _h3(c, H1, H2, x):
    if H1 == H2:
        return True
    S = (H1 & H2) + x
    return any(H.contains(S) for H in c.members)


@axiom("H3'", ("H1", "M"), ("H2", "M"), ("x", "a"), ("y", "a"))
def _h3p(c, H1, H2, x, y):
    if H1 == H2 or H1.contains(x) or H2.contains(x) or not H1.contains(y) or H2.contains(y):
        return True
    S = (H1 & H2) + x
    return any(H.contains(S) and not H.contains(y) for H in c.members)


# circuits
@axiom("C1", ("C", "0"))
def _c1(c, C):
    return C not in c.set


@axiom("C2", ("C1", "M"), ("C2", "M"))
def _c2(c, C1, C2):
    return not C2.contains(C1) or C1 == C2


@axiom("C3", ("C1", "M"), ("C2", "M"), ("X", "h"))
def _c3(c, C1, C2, X):
    if C1 == C2:
        return True
    S = (C1 + C2) & X
    return any(S.contains(C) for C in c.members)


@axiom("C3'", ("C1", "M"), ("C2", "M"), ("X", "h"), ("Y", "h"))
def _c3p(c, C1, C2, X, Y):
    if C1 == C2 or X.contains(C1) or X.contains(C2) or not Y.contains(C1) or Y.contains(C2):
        return True
    S = (C1 + C2) & X
    return any(S.contains(C) and not Y.contains(C) for C in c.members)


@axiom("C3bar", ("C1", "M"), ("C2", "M"), ("x", "a"))
def _c3bar(c, C1, C2, x):
    if C1 == C2 or not (C1 & C2).contains(x):
        return True
    S = C1 + C2
    return any(S.contains(C) and not C.contains(x) for C in c.members)


# dependence
@axiom("D1", ("D", "0"))
def _d1(c, D):
    return D not in c.set


@axiom("D2", ("D1", "M"), ("D2", "L"))
def _d2(c, D1, D2):
    return not D2.contains(D1) or D2 in c.set


@axiom("D3", ("D1", "M"), ("D2", "M"), ("D", "L"))
def _d3(c, D1, D2, D):
    if (D1 & D2) in c.set or not _codim1(D, D1 + D2):
        return True
    return D in c.set


# non-spanning
@axiom("N1", ("N", "E"))
def _n1(c, N):
    return N not in c.set


@axiom("N2", ("N1", "M"), ("N2", "L"))
def _n2(c, N1, N2):
    return not N1.contains(N2) or N2 in c.set


@axiom("N3", ("N1", "M"), ("N2", "M"), ("N", "L"))
def _n3(c, N1, N2, N):
    if (N1 + N2) in c.set or not _codim1(N1 & N2, N):
        return True
    return N in c.set


# closure (ctx.cl is a Subspace -> Subspace callable)
@axiom("Cl1", ("A", "L"))
def _cl1(c, A):
    return c.cl(A).contains(A)


@axiom("Cl2", ("A", "L"), ("B", "L"))
def _cl2(c, A, B):
    return not B.contains(A) or c.cl(B).contains(c.cl(A))


@axiom("Cl3", ("A", "L"))
def _cl3(c, A):
    return c.cl(c.cl(A)) == c.cl(A)


@axiom("Cl4", ("A", "L"), ("x", "a"), ("y", "a"))
def _cl4(c, A, x, y):
    if c.cl(A + x).contains(y) and not c.cl(A).contains(y):
        return c.cl(A + y).contains(x)
    return True


# open
@axiom("O1", ("O", "0"))
def _o1(c, O):
    return O in c.set


@axiom("O2", ("O1", "M"), ("O2", "M"))
def _o2(c, O1, O2):
    return (O1 + O2) in c.set


@axiom("O3", ("O", "M"), ("X", "h"))
def _o3(c, O, X):
    if X.contains(O):
        return True
    return sum(1 for Op in c.members if X.contains(Op) and c.covers(Op, O)) == 1


@axiom("O3bar", ("O", "M"))
def _o3bar(c, O):
    lower = [Op for Op in c.members if c.covers(Op, O)]
    if not lower:
        return True
    common = lower[0]
    for L in lower[1:]:
        common = common & L
    return common.dim == 0


# spanning
@axiom("S1", ("E", "E"))
def _s1(c, E):
    return E in c.set


@axiom("S2", ("I", "L"), ("J", "L"))
def _s2(c, I, J):
    return not (J in c.set and I.contains(J)) or I in c.set


@axiom("S3", ("I", "M"), ("J", "M"))
def _s3(c, I, J):
    if J.dim >= I.dim:
        return True
    return any(X.contains(J) and not X.contains(I) and (I & X) in c.set for X in c.coatoms)


@axiom("S4", ("A", "L"), ("B", "L"), ("I", "L"), ("J", "L"))
def _s4(c, A, B, I, J):
    if I not in c.min_above(A) or J not in c.min_above(B):
        return True
    return any(K.contains(I & J) for K in c.min_above(A & B))


@axiom("S4''", ("A", "L"), ("I", "L"), ("X", "h"))
def _s4pp(c, A, I, X):
    if I not in c.min_above(A):
        return True
    return any(K.contains(I & X) for K in c.min_above(A & X))


def holds(ctx: Ctx, name: str, roles: dict[str, Subspace] | None = None) -> bool:
    """Whether the quantifier instance ``roles`` of axiom ``name`` is satisfied."""
    _, fn = AXIOMS[name]
    return bool(fn(ctx, **(roles or {})))


def domain(ctx: Ctx, code: str) -> list[Subspace]:
    return {"L": ctx.spaces, "M": ctx.members, "a": ctx.atoms, "h": ctx.coatoms,
            "0": [ctx.zero], "E": [ctx.E]}[code]


def brute_first_violation(ctx: Ctx, name: str) -> dict[str, Subspace] | None:
    """Least violating tuple by naive nested loops in quantifier order."""
    roles, fn = AXIOMS[name]

    def rec(k, bound):
        if k == len(roles):
            return None if fn(ctx, **bound) else dict(bound)
        role, dom = roles[k]
        for S in domain(ctx, dom):
            bound[role] = S
            hit = rec(k + 1, bound)
            if hit is not None:
                return hit
        bound.pop(role, None)
        return None

    return rec(0, {})
