"""Incremental level-ancestor queries over a grow-by-leaf tree.

Jump-pointer (binary lifting) scheme: every node keeps its ancestors at
power-of-two distances.  add_leaf costs O(log depth), queries O(log delta).
This is the documented fallback structure; its operation counts are kept
separate so the enclosing validator's per-push work can be reported with and
without them (a constant-time add-leaf/query structure exists in the
literature and would slot in behind the same two calls).

Nodes are numbered 1..n in insertion order; node 1 is the root.
"""

from __future__ import annotations

__all__ = ["JumpPointerLA"]


class JumpPointerLA:
    def __init__(self):
        self._up: list[list[int]] = []  # per node: ancestors at 1, 2, 4, ... levels
        self._depth: list[int] = []  # root depth 1
        self.ops = 0

    def __len__(self) -> int:
        return len(self._up)

    def add_leaf(self, parent: int) -> int:
        """Append a node under ``parent`` (0 for the root); returns its id."""
        node = len(self._up) + 1
        if parent == 0:
            self._up.append([0])
            self._depth.append(1)
            self.ops += 1
            return node
        row = [parent]
        self._depth.append(self._depth[parent - 1] + 1)
        k = 0
        while True:
            anc = row[k]
            up_anc = self._up[anc - 1]
            if k >= len(up_anc) or up_anc[k] == 0:
                break
            row.append(up_anc[k])
            k += 1
        self._up.append(row)
        self.ops += 1 + k
        return node

    def depth(self, node: int) -> int:
        return self._depth[node - 1]

    def parent(self, node: int) -> int:
        return self._up[node - 1][0]

    def la(self, node: int, delta: int) -> int:
        """Ancestor ``delta`` levels above ``node`` (delta 0 = the node)."""
        if delta < 0 or delta >= self._depth[node - 1]:
            raise ValueError(f"no ancestor {delta} levels above node {node}")
        v = node
        k = 0
        while delta:
            if delta & 1:
                v = self._up[v - 1][k]
                self.ops += 1
            delta >>= 1
            k += 1
            self.ops += 1
        return v

    def naive_la(self, node: int, delta: int) -> int:
        """Father-chain reference; for cross-checks only."""
        v = node
        for _ in range(delta):
            v = self._up[v - 1][0]
            if v == 0:
                raise ValueError("walked past the root")
        return v
