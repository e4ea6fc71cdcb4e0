"""Plain-Python reference computations, independent of the array code."""

import itertools

FILL = (0.0, 1.0, 1.0)


def dense(R):
    """{(x, y): [(t, i, f), ...]} over every pair, fill for absent ones."""
    return {(x, y): list(R[(x, y)]) for x in R.source for y in R.target}


def brute_compose(S, R):
    """S o R by looping over every intermediate element."""
    r, s = dense(R), dense(S)
    p = max(R.dimension, S.dimension)
    out = {}
    for x in R.source:
        for z in S.target:
            slots = []
            for j in range(p):
                ts, is_, fs = [], [], []
                for y in R.target:
                    a = r[(x, y)][j] if j < R.dimension else FILL
                    b = s[(y, z)][j] if j < S.dimension else FILL
                    ts.append(min(a[0], b[0]))
                    is_.append(max(a[1], b[1]))
                    fs.append(max(a[2], b[2]))
                slots.append((max(ts), min(is_), min(fs)))
            out[(x, z)] = slots
    return out


def brute_closure(R):
    """Best path value between every ordered pair, by enumerating walks.

    Truth: max over walks of the min along the walk; indeterminacy and
    falsity: min over walks of the max.  Walks of length up to m suffice
    because a longer walk repeats a vertex and dropping the cycle never
    hurts; we go to m + 1 anyway to be safe.
    """
    u = list(R.source)
    m = len(u)
    r = dense(R)
    out = {}
    for x in u:
        for z in u:
            slots = []
            for j in range(R.dimension):
                best = [0.0, 1.0, 1.0]
                for length in range(1, m + 2):
                    for mids in itertools.product(u, repeat=length - 1):
                        path = [x, *mids, z]
                        edges = [r[(a, b)][j] for a, b in zip(path, path[1:])]
                        best[0] = max(best[0], min(e[0] for e in edges))
                        best[1] = min(best[1], max(e[1] for e in edges))
                        best[2] = min(best[2], max(e[2] for e in edges))
                slots.append(tuple(best))
            out[(x, z)] = slots
    return out
