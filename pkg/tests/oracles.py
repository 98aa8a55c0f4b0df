"""Slow, assumption-free reference implementations used only by the tests."""


def has_k_expression_generic(G, k):
    """Exhaustive search over every state reachable by create / union / join / relabel.

    A state is a label per vertex (0 = not yet created) and the set of edges
    built so far; joins that would create a non-edge of ``G`` are skipped.
    """
    n = G.n
    edges = sorted(G.edges())
    eidx = {e: i for i, e in enumerate(edges)}
    target = (1 << len(edges)) - 1
    seen, frontier, by_support = set(), [], {}

    def support(labs):
        return sum(1 << v for v, lab in enumerate(labs) if lab)

    def add(st):
        if st not in seen:
            seen.add(st)
            frontier.append(st)
            by_support.setdefault(support(st[0]), []).append(st)

    for v in range(n):
        for lab in range(1, k + 1):
            add((tuple(lab if u == v else 0 for u in range(n)), 0))
    while frontier:
        labs, em = frontier.pop()
        if all(labs) and em == target:
            return True
        present = set(labs) - {0}
        for i in present:
            for j in range(1, k + 1):
                if j != i:
                    add((tuple(j if lab == i else lab for lab in labs), em))
                if j > i and j in present:
                    new, ok = em, True
                    for u in range(n):
                        for v in range(n):
                            if labs[u] == i and labs[v] == j:
                                e = (min(u, v), max(u, v))
                                if e not in eidx:
                                    ok = False
                                    break
                                new |= 1 << eidx[e]
                        if not ok:
                            break
                    if ok:
                        add((labs, new))
        sup = support(labs)
        for other_sup, states in list(by_support.items()):
            if other_sup & sup:
                continue
            for olabs, oem in list(states):
                add((tuple(a or b for a, b in zip(labs, olabs)), em | oem))
    return False


def clique_width_generic(G):
    k = 1
    while not has_k_expression_generic(G, k):
        k += 1
    return k
