"""Closed-form maximum profile sizes."""
from functools import lru_cache

from prefgeo.core.enums import NormTag
from prefgeo.core.models.profile import Profile
from prefgeo.core.models.report import SizeBoundReport

L1_LINF_MAX_M4 = 19
L2_MAX_M4 = 18


def l2_planar_max_size(m: int) -> int:
    """Largest l2-Euclidean profile on m candidates in the plane.

    m(3m - 10)(m - 1)(m + 1)/24 + m(m - 1) + 1, evaluated exactly.

    Examples:
        >>> [l2_planar_max_size(m) for m in (3, 4, 5)]
        [6, 18, 46]
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    q, r = divmod(m * (3 * m - 10) * (m - 1) * (m + 1), 24)
    if r:
        raise ArithmeticError(f"non-integral size formula at m={m}")
    return q + m * (m - 1) + 1


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """|s(n, k)|: permutations of n elements with k cycles.

    Uses c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k).
    """
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return stirling_first_unsigned(n - 1, k - 1) + (n - 1) * stirling_first_unsigned(n - 1, k)


def bennett_max_size(m: int, d: int) -> int:
    """Largest l2-Euclidean profile on m candidates in R^d: sum of |s(m, k)| for k = m-d..m."""
    if not 1 <= d <= m:
        raise ValueError(f"need 1 <= d <= m, got m={m}, d={d}")
    return sum(stirling_first_unsigned(m, k) for k in range(m - d, m + 1))


def size_bound_report(prof: Profile, norm: NormTag) -> SizeBoundReport:
    """Compare |prof| with the known planar maximum.

    m = 4: 19 for l1/linf, 18 for l2. Other m under l2: l2_planar_max_size(m).
    m <= 3: m! under every norm. Otherwise the report is advisory (bound None).
    """
    norm = NormTag(norm)
    m = prof.m
    bound: int | None
    if m == 4:
        bound = L2_MAX_M4 if norm is NormTag.L2 else L1_LINF_MAX_M4
    elif norm is NormTag.L2:
        bound = l2_planar_max_size(m)
    elif m <= 3:
        bound = [1, 1, 2, 6][m]
    else:
        bound = None
    return SizeBoundReport(norm, m, len(prof), bound)
