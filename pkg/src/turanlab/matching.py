"""Maximum cardinality matching in general graphs (Edmonds' blossom method)."""

from __future__ import annotations

from .graph import Graph, members


def maximum_matching(g: Graph) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or ``-1``.

    Augmenting paths are grown by BFS from each exposed vertex; odd cycles
    are contracted by relabelling their vertices with a common base.
    """
    n = g.n
    nbrs = [members(row) for row in g.adj]
    mate = [-1] * n

    # greedy start; the blossom phase only has to fix the remainder
    for v in range(n):
        if mate[v] == -1:
            for w in nbrs[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1 or not nbrs[root]:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return mate


def matching_number(g: Graph) -> int:
    """Size of a maximum matching, written nu(G) in the literature."""
    return sum(1 for m in maximum_matching(g) if m != -1) // 2
