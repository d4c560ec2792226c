"""Pure-Python group-coloring search (fallback for the compiled ``_kernel``).

Problem: color items ``0..m-1`` with colors ``0..k-1`` so that inside every
group all items carry pairwise distinct colors.  Proper edge colorings
(groups = edges at a vertex), Grünbaum hyper-colorings (groups = boundary
faces of a facet) and proper vertex colorings (groups = edges) are all
instances.

Both entry points take the same arguments as the compiled module:

``m``        number of items
``k``        number of colors (1..62)
``groups``   list of lists of item indices
"""

IMPLEMENTATION = "python"


def _item_groups(m, groups):
    ig = [[] for _ in range(m)]
    for g, members in enumerate(groups):
        for it in members:
            ig[it].append(g)
    return ig


def solve(m, k, groups, require_all=False):
    """Return one coloring as a list, or None.

    Items are chosen most-constrained first (fewest free colors, ties by
    lowest index).  Colors never used so far are interchangeable, so only
    the smallest of them is tried.  With ``require_all`` every color must
    occur at least once.
    """
    if k < 1 or k > 62:
        raise ValueError("k must be in 1..62")
    if any(len(g) > k for g in groups):
        return None
    if require_all and m < k:
        return None
    full = (1 << k) - 1
    ig = _item_groups(m, groups)
    used = [0] * len(groups)
    color = [-1] * m
    state = {"ncolors": 0}

    def pick():
        best = -1
        best_free = 99
        for it in range(m):
            if color[it] >= 0:
                continue
            mask = 0
            for g in ig[it]:
                mask |= used[g]
            free = bin(full & ~mask).count("1")
            if free < best_free:
                best, best_free = it, free
                if free <= 1:
                    break
        return best

    def rec(assigned):
        if assigned == m:
            return not require_all or state["ncolors"] == k
        if require_all and m - assigned < k - state["ncolors"]:
            return False
        it = pick()
        mask = 0
        for g in ig[it]:
            mask |= used[g]
        ncol = state["ncolors"]
        top = ncol + 1 if ncol < k else k
        for c in range(top):
            if mask >> c & 1:
                continue
            color[it] = c
            for g in ig[it]:
                used[g] |= 1 << c
            if c == ncol:
                state["ncolors"] = ncol + 1
            if rec(assigned + 1):
                return True
            state["ncolors"] = ncol
            for g in ig[it]:
                used[g] &= ~(1 << c)
            color[it] = -1
        return False

    return list(color) if rec(0) else None


def enumerate_all(m, k, groups, limit=-1):
    """All colorings (no symmetry reduction), in lexicographic order.

    Items are assigned in index order.  ``limit`` >= 0 caps the number of
    solutions collected.
    """
    if k < 1 or k > 62:
        raise ValueError("k must be in 1..62")
    if any(len(g) > k for g in groups):
        return []
    ig = _item_groups(m, groups)
    used = [0] * len(groups)
    color = [0] * m
    out = []

    def rec(it):
        if it == m:
            out.append(tuple(color))
            return limit >= 0 and len(out) >= limit
        mask = 0
        for g in ig[it]:
            mask |= used[g]
        for c in range(k):
            if mask >> c & 1:
                continue
            color[it] = c
            for g in ig[it]:
                used[g] |= 1 << c
            stop = rec(it + 1)
            for g in ig[it]:
                used[g] &= ~(1 << c)
            if stop:
                return True
        return False

    if limit != 0:
        rec(0)
    return out
