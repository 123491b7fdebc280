"""Pure-Python canonical-form kernel (reference and fallback for ``_canon_fast``)."""


def oriented_lift(reps):
    """Sign-adjust ``reps`` so consecutive pairings are +1.

    Returns ``(vectors, wrap)`` where ``wrap`` is the pairing of the last
    vector with the first.  Raises ``ValueError`` on a non-adjacent pair.
    """
    a0, b0 = reps[0]
    out = [(a0, b0)]
    pa, pb = a0, b0
    for i in range(1, len(reps)):
        a, b = reps[i]
        p = pa * b - pb * a
        if p == -1:
            a, b = -a, -b
        elif p != 1:
            raise ValueError(i)
        out.append((a, b))
        pa, pb = a, b
    return out, pa * b0 - pb * a0


def _best_for(vecs, wrap, best):
    n = len(vecs)
    ext = vecs + [(wrap * a, wrap * b) for a, b in vecs]
    for r in range(n):
        u1a, u1b = ext[r]
        u2a, u2b = ext[r + 1]
        cand = []
        better = best is None
        for j in range(r + 2, r + n):
            x, y = ext[j]
            ca = u2b * x - u2a * y
            cb = u1a * y - u1b * x
            if not better:
                k = 2 * (j - r - 2)
                ba, bb = best[k], best[k + 1]
                if ca > ba or (ca == ba and cb > bb):
                    break
                if ca < ba or cb < bb:
                    better = True
            cand.append(ca)
            cand.append(cb)
        else:
            if better:
                best = cand
    return best


def canonical_key(reps, dihedral):
    """Lexicographically least normalized lift over rotations (and reflections).

    ``reps`` is a list of ``(a, b)`` pairs forming a non-degenerate loop.  The
    result lists ``a, b`` of positions 3..n after normalizing the first two
    lifted vectors to ``(1,0), (0,1)``; those two are implied.
    """
    vecs, wrap = oriented_lift(reps)
    if wrap not in (1, -1):
        raise ValueError(len(reps))
    best = _best_for(vecs, wrap, None)
    if dihedral:
        # reflection of the polygon: reverse traversal composed with (a,b) -> (a,-b)
        mvecs, mwrap = oriented_lift([(a, -b) for a, b in reversed(reps)])
        best = _best_for(mvecs, mwrap, best)
    return tuple(best)
