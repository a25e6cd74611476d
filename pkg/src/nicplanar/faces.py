"""Face traversal for combinatorial rotation systems.

A rotation system assigns every vertex a cyclic order of its neighbours.
Faces are the orbits of directed edges under the rule: having arrived at
``w`` along ``u -> w``, leave along the successor of ``u`` in the rotation
of ``w``.  On a spherical (planar, genus zero) embedding of a connected
graph the orbit count satisfies Euler's formula ``n - m + f = 2``.
"""

from __future__ import annotations

from typing import Mapping, Sequence

DirectedEdge = tuple[int, int]


def face_walk(rotations: Mapping[int, Sequence[int]]) -> list[list[DirectedEdge]]:
    """Return the faces of a rotation system as directed edge cycles.

    Every directed edge appears in exactly one face.  Faces are emitted in
    a deterministic order: sorted by their smallest directed edge, and each
    face is rotated to start at that edge.
    """
    position: dict[int, dict[int, int]] = {}
    for v, order in rotations.items():
        pos = {}
        for i, w in enumerate(order):
            if w in pos:
                raise ValueError(f"rotation of {v} repeats neighbour {w}")
            pos[w] = i
        position[v] = pos

    for v, order in rotations.items():
        for w in order:
            if w not in position or v not in position[w]:
                raise ValueError(f"rotation lists {v}-{w} in one direction only")

    seen: set[DirectedEdge] = set()
    faces: list[list[DirectedEdge]] = []
    for v in sorted(rotations):
        for w in rotations[v]:
            if (v, w) in seen:
                continue
            face: list[DirectedEdge] = []
            u, x = v, w
            while (u, x) not in seen:
                seen.add((u, x))
                face.append((u, x))
                order = rotations[x]
                nxt = order[(position[x][u] + 1) % len(order)]
                u, x = x, nxt
            if (u, x) != face[0]:
                raise ValueError("face walk did not close on its first edge")
            start = face.index(min(face))
            faces.append(face[start:] + face[:start])
    faces.sort(key=lambda f: f[0])
    return faces
