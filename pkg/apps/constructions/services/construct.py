from math import isqrt
from typing import Iterable, List, NamedTuple, Optional

from apps.bigroups.models import Vertex, u, v
from apps.bigroups.schemas import GroupCase
from apps.coloring.models import Partition
from core.exceptions import InternalException
from ..schemas import ConstructionSchema
from .blocks import u_block, v_block

# Lexicographically first three-class distinguishing colorings at n=6, found by the exact solver
FROZEN_CERTIFICATES = {
    ("f", 1): "0,0,0,0,1,1,0,1,0,2,1,2",
    ("g", 1): "0,0,0,0,0,1,0,0,1,2,1,2",
    ("g", 2): "0,0,0,0,0,1,0,0,1,2,1,2",
}


class Branch(NamedTuple):
    """Which construction produced a partition, with its (l, p) parameters where they apply."""
    name: str
    ell: Optional[int] = None
    p: Optional[int] = None

    def __str__(self) -> str:
        if self.ell is None:
            return self.name
        return f"{self.name} (l={self.ell}, p={self.p})"


class Construction(NamedTuple):
    case: GroupCase
    classes: List[List[Vertex]]
    branch: Branch

    def partition(self) -> Partition:
        return Partition.from_classes(self.classes, self.case.n)


def claimed_dn(case: GroupCase) -> int:
    n = case.n
    if case.case_id == "a":
        return n + 1
    if case.case_id == "b":
        return n - 1
    if case.case_id == "c":
        return n
    if case.case_id == "d":
        return isqrt(n) + 1
    if case.case_id == "e":
        return _ceil_sqrt(n - 1)
    return 3


def full_diagonal_branch(n: int) -> Branch:
    root = isqrt(n)
    if root * root == n:
        return Branch("square", root, 2 * root - 1)
    ell = root + 1
    p = n - (ell - 1) ** 2
    if 1 <= p < ell:
        return Branch("i", ell, p)
    if ell <= p <= 2 * ell - 2:
        return Branch("ii", ell, p)
    raise InternalException(detail=f"no crown construction covers n={n} (l={ell}, p={p})")


def alternating_diagonal_branch(n: int) -> Branch:
    ell = _ceil_sqrt(n - 1)
    p = n - 1 - (ell - 1) ** 2
    if not 1 <= p <= 2 * ell - 1:
        raise InternalException(detail=f"no crown construction covers n={n} (l={ell}, p={p})")
    return Branch("i" if p <= ell - 2 else "ii", ell, p)


def construct_classes(case: GroupCase) -> Construction:
    """The distinguishing classes P1..Pk for the case, in construction order."""
    n = case.n
    if case.case_id == "a":
        classes = [[v(i), u(i)] for i in range(1, n)] + [[v(n)], [u(n)]]
        return _built(case, classes, Branch("pairs"))
    if case.case_id in ("b", "h", "i"):
        classes = [[v(1), v(2), u(1)], [v(3), u(2), u(3)]] + [[v(i + 1), u(i + 1)] for i in range(3, n)]
        return _built(case, classes, Branch("alternating"))
    if case.case_id == "c":
        classes = [[v(1), v(2), u(1)], [u(2)]] + [[v(i), u(i)] for i in range(3, n + 1)]
        return _built(case, classes, Branch("matching-parity"))
    if case.case_id == "d":
        return _full_diagonal(case)
    if case.case_id == "e":
        return _alternating_diagonal(case)
    return _frozen_certificate(case)


def construct(case: GroupCase) -> Partition:
    return construct_classes(case).partition()


def _full_diagonal(case: GroupCase) -> Construction:
    n = case.n
    branch = full_diagonal_branch(n)
    ell = branch.ell
    if branch.name == "square":
        corner = u(ell * ell)
        classes = [(v_block(n, i, ell) | u_block(n, i, ell)) - {corner} for i in range(1, ell + 1)]
        classes.append({corner})
    elif branch.name == "i":
        q = ell - 1
        classes = [v_block(n, i, q) | u_block(n, i, q) for i in range(1, ell)]
        classes.append(v_block(n, ell, q))
    else:
        classes = [v_block(n, i, ell) | u_block(n, i, ell) for i in range(1, ell - 1)]
        classes.append(v_block(n, ell - 1, ell) | u_block(n, ell, ell))
        classes.append(v_block(n, ell, ell) | u_block(n, ell - 1, ell))
    return _built(case, classes, branch)


def _alternating_diagonal(case: GroupCase) -> Construction:
    n = case.n
    branch = alternating_diagonal_branch(n)
    ell = branch.ell
    if branch.name == "i":
        q = ell - 1
        moved = v(q * q + 1)
        classes = [v_block(n, i, q) | u_block(n, i, q) for i in range(1, ell - 1)]
        classes.append(v_block(n, ell - 1, q) | {moved} | u_block(n, ell - 1, q))
        classes.append(v_block(n, ell, q) - {moved})
    else:
        last = v(n)
        classes = [v_block(n, i, ell) | u_block(n, i, ell) for i in range(1, ell - 1)]
        classes.append(v_block(n, ell - 1, ell) | {last} | u_block(n, ell, ell))
        classes.append((v_block(n, ell, ell) - {last}) | u_block(n, ell - 1, ell))
    return _built(case, classes, branch)


def _frozen_certificate(case: GroupCase) -> Construction:
    rgs = FROZEN_CERTIFICATES.get((case.case_id, case.line))
    if rgs is None or case.n != 6:
        raise InternalException(detail=f"no frozen certificate for {case.label}")
    partition = Partition.parse_rgs(rgs, case.n)
    return Construction(case, partition.classes(), Branch("certificate"))


def _built(case: GroupCase, classes: Iterable[Iterable[Vertex]], branch: Branch) -> Construction:
    n = case.n
    ordered = [sorted(members, key=lambda x: x.position(n)) for members in classes]
    return Construction(case, ordered, branch)


def _ceil_sqrt(m: int) -> int:
    return isqrt(m - 1) + 1 if m > 0 else 0


def construction_schema(construction: Construction, distinguishing: bool) -> ConstructionSchema:
    case = construction.case
    partition = construction.partition()
    return ConstructionSchema(
        case=case.case_id,
        line=case.line,
        n=case.n,
        branch=construction.branch.name,
        ell=construction.branch.ell,
        p=construction.branch.p,
        classes=[[str(x) for x in members] for members in construction.classes],
        partition=partition.to_schema(),
        rgs=partition.rgs(),
        num_colors=partition.num_colors,
        distinguishing=distinguishing,
    )
