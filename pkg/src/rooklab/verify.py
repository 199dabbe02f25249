"""Named exhaustive invariant suites.

Each suite walks its cases in increasing size and stops at the first
violation, so the reported counterexample is the smallest one in
enumeration order.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from math import factorial

from .board import delta, is_permissible, is_singleton, local_l, root_vector
from .enumeration import boards_in_box, boards_up_to, equivalence_classes
from .errors import DoesNotFit
from .fs_bijection import apply_step, equivalence_script, map_l, map_local_l, transport, transpose_placement
from .gm_rook import (
    ainv,
    enumerate_configs,
    gm_rook_transport,
    involution_I,
    is_fixed,
    rook_count_formula,
    stirling2,
    transfer_f,
)
from .hit import (
    enumerate_hit_configs,
    gm_hit_transport,
    hit_involution,
    hit_is_fixed,
    hit_set,
    hit_transfer,
    hit_vector,
    is_full_placement,
    q_hit_polynomial,
)
from .placement import (
    inv,
    inv_breakdown,
    iter_cell_tuples,
    q_rook_polynomial,
    rook_count,
    rook_numbers,
)
from .poly import briggs_remmel_side, default_budget, level_product_side, rook_side

__all__ = ["SuiteResult", "SUITES", "run_suite", "default_cells", "triangle_boards", "square_boards"]

DEFAULT_CELLS = 10


def default_cells() -> int:
    return int(os.environ.get("ROOKLAB_BUDGET_CELLS", DEFAULT_CELLS))


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    counterexample: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "cases": self.cases,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


class _Stop(Exception):
    pass


def _fail(result: SuiteResult, **info):
    result.counterexample = {k: _plain(v) for k, v in info.items()}
    raise _Stop


def _plain(v):
    if hasattr(v, "heights"):
        return list(v.heights)
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if hasattr(v, "to_dict"):
        return v.to_dict()
    if hasattr(v, "coeffs"):
        return str(v)
    return v


def triangle_boards(N: int, m: int, singleton: bool = True):
    """Boards with N columns (zeros allowed) fitting inside the triangle."""
    out = []
    for B in boards_in_box(N, (N - 1) * m):
        try:
            root_vector(B, m, N)
        except DoesNotFit:
            continue
        if not singleton or is_singleton(B, m):
            out.append(B)
    return out


def square_boards(N: int, m: int):
    return boards_in_box(N, N * m)


# -- suites -------------------------------------------------------------------


def suite_factorization(res, max_cells, m_list, **_):
    for m in m_list:
        for B in boards_up_to(max_cells, include_empty=True):
            N = default_budget(B, m)
            for n in (N, N + 1):
                res.cases += 1
                lhs, rhs = rook_side(B, m, n), level_product_side(B, m, n)
                if lhs != rhs:
                    _fail(res, board=B, m=m, N=n, rook_side=lhs, product_side=rhs)


def suite_briggs_remmel(res, max_cells, m_list, **_):
    for m in m_list:
        for B in boards_up_to(max_cells, include_empty=True):
            if not is_singleton(B, m):
                continue
            res.cases += 1
            lhs, rhs = briggs_remmel_side(B, m), rook_side(B, m)
            if lhs != rhs:
                _fail(res, board=B, m=m, briggs_remmel_side=lhs, rook_side=rhs)


def suite_closed_form(res, m_list, max_n, **_):
    for N in range(1, max_n + 1):
        for m in m_list:
            for B in triangle_boards(N, m):
                for k in range(N):
                    res.cases += 1
                    got, want = rook_count_formula(B, m, N, k), rook_count(B, m, k)
                    if got != want:
                        _fail(res, board=B, m=m, N=N, k=k, formula=got, brute_force=want)


def suite_stirling(res, m_list, max_n, **_):
    for n in range(1, max_n + 1):
        for m in m_list:
            counts = rook_numbers(delta(n, m), m)
            for d in range(1, n + 1):
                res.cases += 1
                got = counts[n - d] if n - d < len(counts) else 0
                want = m ** (n - d) * stirling2(n, d)
                if got != want:
                    _fail(res, n=n, d=d, m=m, count=got, expected=want)


def suite_placement(res, max_cells, m_list, **_):
    for m in m_list:
        for B in boards_up_to(max_cells, include_empty=True):
            single = is_singleton(B, m)
            levels, cols = B.num_levels(m), sum(1 for h in B.heights if h)
            counts = rook_numbers(B, m)
            if len(counts) - 1 > min(levels, cols):
                _fail(res, board=B, m=m, rook_numbers=counts)
            for k in range(len(counts)):
                res.cases += 1
                if q_rook_polynomial(B, m, k)(1) != counts[k]:
                    _fail(res, board=B, m=m, k=k, reason="q-polynomial at 1")
                for cells in iter_cell_tuples(B, m, k):
                    total = inv(B, m, cells)
                    bd = inv_breakdown(B, m, cells)
                    if sum(bd.hinv) != total or (single and sum(bd.vinv) != total):
                        _fail(res, board=B, m=m, placement=cells, inv=total, hinv=bd.hinv, vinv=bd.vinv)


def suite_fs_steps(res, max_cells, m_list, **_):
    for m in m_list:
        for B in boards_up_to(max_cells):
            script = equivalence_script(B, B, m)
            steps = [s for s in script.steps if s.direction == "forward"]
            for step in steps:
                back = step.reversed()
                for k in range(len(rook_numbers(step.source, m))):
                    for cells in iter_cell_tuples(step.source, m, k):
                        res.cases += 1
                        image = apply_step(step, m, cells)
                        if inv(step.source, m, cells) != inv(step.target, m, image):
                            _fail(res, step=step.to_dict(), m=m, placement=cells, image=image, reason="inv")
                        if apply_step(back, m, image) != frozenset(cells):
                            _fail(res, step=step.to_dict(), m=m, placement=cells, reason="round trip")
            if is_singleton(B, m):
                _check_every_local_l(res, B, m)
            if m == 1 and is_singleton(B, 1):
                for k in range(len(rook_numbers(B, 1))):
                    for cells in iter_cell_tuples(B, 1, k):
                        res.cases += 1
                        if map_l(B, 1, cells).cells != transpose_placement(B, cells):
                            _fail(res, board=B, placement=cells, reason="m=1 transpose")


def _check_every_local_l(res, B, m):
    """Every permissible local l-operator, not only those a script uses."""
    for i in range(1, len(B) + 1):
        for p in range(1, B.num_levels(m) + 1):
            if B.height(i) <= (p - 1) * m or not is_permissible(B, m, i, p):
                continue
            target = local_l(B, m, i, p)
            counts = rook_numbers(B, m)
            if target.cells != B.cells or not is_singleton(target, m) or rook_numbers(target, m) != counts:
                _fail(res, board=B, m=m, i=i, p=p, target=target, reason="local l board")
            for k, rk in enumerate(counts):
                images = set()
                for cells in iter_cell_tuples(B, m, k):
                    res.cases += 1
                    image = map_local_l(B, m, i, p, cells).cells
                    if inv(B, m, cells) != inv(target, m, image):
                        _fail(res, board=B, m=m, i=i, p=p, placement=cells, reason="local l inv")
                    if map_local_l(B, m, i, p, image, "backward").cells != frozenset(cells):
                        _fail(res, board=B, m=m, i=i, p=p, placement=cells, reason="local l round trip")
                    images.add(image)
                if len(images) != rk:
                    _fail(res, board=B, m=m, i=i, p=p, k=k, reason="local l not a bijection")


def suite_fs_transport(res, max_cells, m_list, **_):
    boards = boards_up_to(max_cells)
    for m in m_list:
        for members in equivalence_classes(boards, m).values():
            for a in members:
                for b in members:
                    counts = rook_numbers(a, m)
                    if counts != rook_numbers(b, m):
                        _fail(res, a=a, b=b, m=m, reason="rook numbers differ")
                    for k, rk in enumerate(counts):
                        images = set()
                        for cells in iter_cell_tuples(a, m, k):
                            res.cases += 1
                            p = transport(a, b, m, cells)
                            if inv(a, m, cells) != inv(b, m, p.cells):
                                _fail(res, a=a, b=b, m=m, placement=cells, image=p.cells, reason="inv")
                            if transport(b, a, m, p.cells).cells != frozenset(cells):
                                _fail(res, a=a, b=b, m=m, placement=cells, reason="round trip")
                            images.add(p.cells)
                        if len(images) != rk:
                            _fail(res, a=a, b=b, m=m, k=k, reason="not a bijection")


def _root_groups(N, m):
    groups: dict[tuple, list] = {}
    for B in triangle_boards(N, m):
        groups.setdefault(tuple(sorted(root_vector(B, m, N))), []).append(B)
    return groups


def suite_gm_rook(res, m_list, max_n, **_):
    for N in range(1, max_n + 1):
        for m in m_list:
            for group in _root_groups(N, m).values():
                for a in group:
                    outside = sum(j * m for j in range(N)) - a.cells
                    for k in range(N):
                        configs = enumerate_configs(a, m, N, k)
                        pool = set(configs)
                        signed = 0
                        for c in configs:
                            res.cases += 1
                            d = involution_I(c)
                            bad = d not in pool or involution_I(d) != c
                            bad = bad or (d == c) != is_fixed(c) or (d != c and d.sign == c.sign)
                            if bad or ainv(d) != ainv(c):
                                _fail(res, config=c, image=d, reason="involution axioms")
                            signed += c.sign
                            if is_fixed(c) and ainv(c) != inv(c.board, m, c.blacks) + outside:
                                _fail(res, config=c, reason="fixed-point ainv offset")
                        if signed != rook_count(a, m, k):
                            _fail(res, board=a, m=m, N=N, k=k, signed_sum=signed, reason="signed sum")
                        for b in group:
                            for c in configs:
                                e = transfer_f(c, b)
                                if transfer_f(e, a) != c or ainv(e) != ainv(c) or e.sign != c.sign:
                                    _fail(res, config=c, target=b, reason="transfer")
                    for b in group:
                        for k in range(N):
                            images = set()
                            for cells in iter_cell_tuples(a, m, k):
                                res.cases += 1
                                p = gm_rook_transport(a, b, m, N, k, cells)
                                if inv(a, m, cells) != inv(b, m, p.cells):
                                    _fail(res, a=a, b=b, m=m, N=N, placement=cells, reason="inv")
                                images.add(p.cells)
                            if len(images) != rook_count(b, m, k):
                                _fail(res, a=a, b=b, m=m, N=N, k=k, reason="not a bijection")


def hit_bijection_ok(a, b, m, N):
    """Check that gm_hit_transport maps each k-hit set of ``a`` onto that of ``b``."""
    vec = hit_vector(b, m, N)
    heights = _padded(b, N)
    for k in range(N + 1):
        images = set()
        for r in hit_set(a, m, N, k):
            img = gm_hit_transport(a, b, m, N, k, r)
            hits = sum(1 for c, y in img if y <= heights[c - 1])
            if not is_full_placement(img, N, m) or hits != k:
                return False, {"k": k, "placement": _plain(r), "image": _plain(img)}
            images.add(img)
        if len(images) != vec[k]:
            return False, {"k": k, "images": len(images), "expected": vec[k]}
    return True, None


def _padded(B, N):
    h = B.stripped().heights
    return (0,) * (N - len(h)) + h


def suite_hit(res, m_list, max_n, bijection_n=3, samples=0, seed=0, **_):
    rng = random.Random(seed)
    for N in range(1, max_n + 1):
        for m in m_list:
            total = m**N * factorial(N)
            classes = equivalence_classes(square_boards(N, m), m)
            for rep, members in classes.items():
                lead = members[0]
                lead_vec = hit_vector(lead, m, N)
                for B in members:
                    res.cases += 1
                    vec = hit_vector(B, m, N)
                    if sum(vec) != total or vec != lead_vec:
                        _fail(res, a=lead, b=B, m=m, N=N, hits_a=lead_vec, hits_b=vec)
            pairs = [(ms[0], b) for ms in classes.values() for b in ms[1:]]
            if N <= bijection_n:
                chosen = pairs
            else:
                chosen = rng.sample(pairs, min(samples, len(pairs)))
            for a, b in chosen:
                res.cases += 1
                ok, info = hit_bijection_ok(a, b, m, N)
                if not ok:
                    _fail(res, a=a, b=b, m=m, N=N, **info)
            if N <= min(bijection_n, 3):
                for a, b in pairs[:4] if pairs else []:
                    for k in range(N + 1):
                        for c in enumerate_hit_configs(a, m, N, k):
                            res.cases += 1
                            d = hit_involution(c)
                            if hit_involution(d) != c or (d == c) != hit_is_fixed(c):
                                _fail(res, config=c, reason="hit involution")
                            if d != c and d.sign == c.sign:
                                _fail(res, config=c, reason="hit sign")
                            if hit_transfer(hit_transfer(c, b), a) != c:
                                _fail(res, config=c, target=b, reason="hit transfer round trip")


def suite_xi(res, m_list, max_n, **_):
    """Records, without asserting, whether the xi generating function is a class invariant."""
    differs = 0
    for N in range(1, max_n + 1):
        for m in m_list:
            classes = equivalence_classes(
                [B for B in square_boards(N, m) if is_singleton(B, m)], m
            )
            for members in classes.values():
                lead = members[0]
                for B in members[1:]:
                    for k in range(N + 1):
                        res.cases += 1
                        if q_hit_polynomial(lead, m, N, k) != q_hit_polynomial(B, m, N, k):
                            differs += 1
                            if len(res.notes) < 5:
                                res.notes.append({"a": _plain(lead), "b": _plain(B), "m": m, "N": N, "k": k})
    res.notes.insert(0, {"pairs_with_different_xi_polynomials": differs})


SUITES = {
    "factorization": suite_factorization,
    "briggs-remmel": suite_briggs_remmel,
    "closed-form": suite_closed_form,
    "stirling": suite_stirling,
    "placement": suite_placement,
    "fs-steps": suite_fs_steps,
    "fs-transport": suite_fs_transport,
    "gm-rook": suite_gm_rook,
    "hit": suite_hit,
    "xi": suite_xi,
}


def run_suite(name: str, max_cells: int | None = None, m_list=(1, 2, 3), max_n: int = 4, **extra) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    res = SuiteResult(name)
    cells = default_cells() if max_cells is None else max_cells
    try:
        SUITES[name](res, max_cells=cells, m_list=tuple(m_list), max_n=max_n, **extra)
    except _Stop:
        pass
    return res
