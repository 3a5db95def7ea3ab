"""Pure-Python versions of the hot kernels (fallback for ``_ckernels``)."""
import numpy as np

# permutations of up to this many points are checked through an m**m lookup table
MAX_TABLE_M = 8


def match_permutations(ds, dt, compat, order, tol_abs, tol_rel, limit=0):
    """Enumerate permutations ``p`` with ``ds[i, j] ~ dt[p[i], p[j]]`` for all i, j.

    ``compat[i, t]`` pre-filters which targets source ``i`` may map to and
    ``order`` is the source visiting order. ``limit <= 0`` means no limit.
    Returns an int64 array of shape (k, m), rows in discovery order.
    """
    ds = np.asarray(ds, dtype=float)
    dt = np.asarray(dt, dtype=float)
    m = ds.shape[0]
    order = [int(i) for i in order]
    cand = [[t for t in range(m) if compat[s, t]] for s in range(m)]
    dsl = ds.tolist()
    dtl = dt.tolist()
    perm = [-1] * m
    used = [False] * m
    found = []

    def extend(depth):
        if depth == m:
            found.append(list(perm))
            return limit > 0 and len(found) >= limit
        src = order[depth]
        row_s = dsl[src]
        for t in cand[src]:
            if used[t]:
                continue
            row_t = dtl[t]
            ok = True
            for e in range(depth):
                s2 = order[e]
                a = row_s[s2]
                b = row_t[perm[s2]]
                if abs(a - b) > tol_abs + tol_rel * max(abs(a), abs(b)):
                    ok = False
                    break
            if not ok:
                continue
            perm[src] = t
            used[t] = True
            if extend(depth + 1):
                return True
            used[t] = False
            perm[src] = -1
        return False

    if m:
        extend(0)
    else:
        found.append([])
    return np.array(found, dtype=np.int64).reshape(len(found), m)


def perm_group_closed(perms):
    """True iff the rows of ``perms`` form a group under composition."""
    perms = np.asarray(perms, dtype=np.int64)
    if perms.ndim != 2 or perms.shape[0] == 0:
        return False
    k, m = perms.shape
    if m == 0:
        return True
    if perms.min() < 0 or perms.max() >= m:
        return False
    ident = np.arange(m, dtype=np.int64)
    inv = np.empty_like(perms)
    inv[np.arange(k)[:, None], perms] = ident
    if m > MAX_TABLE_M:
        members = set(map(tuple, perms.tolist()))
        if len(members) != k or tuple(ident.tolist()) not in members:
            return False
        if not all(tuple(r) in members for r in inv.tolist()):
            return False
        return all(tuple(r) in members for a in perms for r in a[perms].tolist())
    weights = m ** np.arange(m, dtype=np.int64)
    table = np.zeros(m ** m, dtype=bool)
    codes = perms @ weights
    table[codes] = True
    if np.count_nonzero(table) != k or not table[ident @ weights] or not table[inv @ weights].all():
        return False
    for a in perms:
        # (a . b)[i] = a[b[i]]
        if not table[a[perms] @ weights].all():
            return False
    return True
