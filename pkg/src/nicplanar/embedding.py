"""Embeddings with at most one crossing per edge.

A :class:`NicEmbedding` couples the abstract graph with a crossing
registry and a rotation system of its planarization.  Each crossing is
replaced by a degree-4 dummy vertex; dummy ``i`` gets planarization id
``base.n + i`` and serializes as ``"x<i>"``.

``verify_nic`` checks the defining conditions (each edge crossed at most
once, two crossing pairs share at most one endpoint) plus structural
integrity of the planarization.  ``verify_maximal_embedding`` layers the
face conditions of maximal embeddings on top and delegates the dual
adjacency rules to :mod:`nicplanar.dual`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NonSphericalEmbedding, ParseError
from .faces import face_walk
from .graph import Edge, Graph, new_graph
from .planarity import test_planarity

Crossing = tuple[Edge, Edge]


def normalize_crossing(e1, e2) -> Crossing:
    a = tuple(sorted(e1))
    b = tuple(sorted(e2))
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class CrossingEntry:
    """One crossing: its dummy vertex and the ordered pair of base edges."""

    dummy: int
    first: Edge
    second: Edge

    @property
    def pair(self) -> Crossing:
        return (self.first, self.second)

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset(self.first + self.second)


@dataclass(frozen=True)
class CrossingRegistry:
    entries: tuple[CrossingEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def crossed_edges(self) -> list[Edge]:
        out = []
        for e in self.entries:
            out.append(e.first)
            out.append(e.second)
        return out

    def pairs(self) -> tuple[Crossing, ...]:
        return tuple(e.pair for e in self.entries)


@dataclass(frozen=True)
class NicEmbedding:
    base: Graph
    planarization: Graph
    rotations: tuple[tuple[int, ...], ...]
    registry: CrossingRegistry

    def is_dummy(self, v: int) -> bool:
        return v >= self.base.n

    def dummy_label(self, v: int) -> str:
        return f"x{v - self.base.n}"


@dataclass(frozen=True)
class Face:
    """A face as its cyclic corner sequence plus the directed boundary."""

    corners: tuple[int, ...]
    segments: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.corners)

    def corner_set(self) -> frozenset[int]:
        return frozenset(self.corners)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]
    checked: tuple[str, ...]
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.skipped:
            return f"skipped: {self.skipped}"
        if self.ok:
            return f"ok ({len(self.checked)} rules)"
        lines = [f"{len(self.violations)} violation(s):"]
        lines.extend(f"  [{v.rule}] {v.message}" for v in self.violations)
        return "\n".join(lines)


# --- construction ---


def build_planarization(base: Graph, crossings) -> tuple[Graph, CrossingRegistry]:
    """Replace each crossing by a dummy vertex of degree four.

    ``crossings`` is an iterable of edge pairs.  Dummies are numbered in
    input order starting at ``base.n``.  Validity of the pairs themselves
    (existence, disjointness, single use) is left to ``verify_nic``.
    """
    entries = []
    crossed: set[Edge] = set()
    # a set, so malformed registries (shared endpoints, repeated edges)
    # still planarize and get judged by verify_nic instead of crashing here
    star_edges: set[Edge] = set()
    next_id = base.n
    for e1, e2 in crossings:
        a, b = normalize_crossing(e1, e2)
        entries.append(CrossingEntry(next_id, a, b))
        crossed.add(a)
        crossed.add(b)
        for u in set(a + b):
            star_edges.add((u, next_id))
        next_id += 1
    kept = [e for e in base.edges if e not in crossed]
    planarization = new_graph(next_id, kept + sorted(star_edges))
    return planarization, CrossingRegistry(tuple(entries))


def _alternates(rot, entry) -> bool:
    opposite_a = {rot[0], rot[2]}
    opposite_b = {rot[1], rot[3]}
    return (set(entry.first) in (opposite_a, opposite_b) and
            set(entry.second) in (opposite_a, opposite_b))


def _pin_crossings(planarization: Graph, registry: CrossingRegistry):
    """Planar rotations that interleave the crossed pairs at every dummy.

    The planarity test returns an arbitrary embedding, and at a dummy of
    degree four it may lay the two crossed edges side by side, which draws
    a touch instead of a crossing.  Pinning threads a subdivided cycle
    through the four neighbours in interleaved order: the dummy plus that
    cycle is a subdivided wheel, so every planar embedding of the
    augmented graph carries the rim order around the hub.  Dropping the
    subdivision vertices from the rotations afterwards keeps planarity
    and keeps the forced order at each dummy.  Any 1-planar drawing
    admits the cycle edges routed alongside the crossing segments, so the
    augmentation is planar exactly when some embedding realizes every
    crossing.
    """
    extra: list[Edge] = []
    next_id = planarization.n
    for entry in registry:
        (a, b), (c, d) = entry.first, entry.second
        if len({a, b, c, d}) != 4:
            continue  # degenerate pair; left for verify_nic to report
        for u, v in ((a, c), (c, b), (b, d), (d, a)):
            extra.append((u, next_id))
            extra.append((v, next_id))
            next_id += 1
    augmented = new_graph(next_id, list(planarization.edges) + extra)
    result = test_planarity(augmented)
    if not result.planar:
        return None
    keep = planarization.n
    return tuple(
        tuple(w for w in result.rotations[v] if w < keep)
        for v in range(keep))


def embed_with_crossings(base: Graph, crossings, strict: bool = True) -> NicEmbedding:
    """Planarize, embed, and assemble a :class:`NicEmbedding`.

    Raises ``ValueError`` when the planarization is not planar or no
    planar embedding of it realizes every crossing.  With ``strict`` (the
    default) the result is passed through ``verify_nic`` and any
    violation raises, which generators rely on as a self-check.
    """
    planarization, registry = build_planarization(base, crossings)
    result = test_planarity(planarization)
    if not result.planar:
        raise ValueError("planarization of the crossing set is not planar")
    rotations = tuple(result.rotations[v] for v in range(planarization.n))
    if any(len(rotations[entry.dummy]) == 4 and
           not _alternates(rotations[entry.dummy], entry)
           for entry in registry):
        pinned = _pin_crossings(planarization, registry)
        if pinned is None:
            raise ValueError(
                "no planar embedding of the planarization realizes every "
                "registered crossing")
        rotations = pinned
    emb = NicEmbedding(base, planarization, rotations, registry)
    if strict:
        report = verify_nic(emb)
        if not report.ok:
            raise ValueError("constructed embedding is invalid:\n" + report.summary())
    return emb


# --- face traversal ---


def trace_faces(emb: NicEmbedding) -> tuple[Face, ...]:
    """Faces of the planarization's rotation system.

    Raises :class:`NonSphericalEmbedding` when the rotation system does
    not describe a sphere embedding (wrong neighbour sets, disconnected
    planarization, or a face count off Euler's formula).
    """
    g = emb.planarization
    if g.n != len(emb.rotations):
        raise NonSphericalEmbedding("rotation system size differs from vertex count")
    rotations = {}
    for v in range(g.n):
        rot = emb.rotations[v]
        if sorted(rot) != list(g.adjacency[v]):
            raise NonSphericalEmbedding(
                f"rotation of vertex {v} is not a permutation of its neighbours"
            )
        rotations[v] = rot
    from .graph import is_connected

    if g.n > 1 and not is_connected(g):
        raise NonSphericalEmbedding("planarization is disconnected")
    try:
        cycles = face_walk(rotations)
    except ValueError as exc:
        raise NonSphericalEmbedding(str(exc)) from exc
    if g.n - g.m + len(cycles) != 2:
        raise NonSphericalEmbedding(
            f"face count {len(cycles)} violates Euler's formula "
            f"(n={g.n}, m={g.m})"
        )
    return tuple(
        Face(tuple(u for u, _ in cyc), tuple(cyc)) for cyc in cycles
    )


def kite_corners(emb: NicEmbedding, entry: CrossingEntry) -> tuple[int, int, int, int]:
    """Corners of a crossing in rotation order around its dummy vertex."""
    return tuple(emb.rotations[entry.dummy])  # type: ignore[return-value]


# --- verification ---


def verify_nic(emb: NicEmbedding) -> VerificationReport:
    """Check the crossing conditions and planarization integrity."""
    base = emb.base
    checked = (
        "registry-edges-in-base",
        "edge-crossed-once",
        "crossing-pair-disjoint",
        "crossing-pairs-share-le-one",
        "dummy-numbering",
        "planarization-edges",
        "dummy-alternation",
        "spherical",
    )
    violations: list[Violation] = []

    for entry in emb.registry:
        for e in entry.pair:
            if e not in base.edge_set:
                violations.append(Violation(
                    "registry-edges-in-base",
                    f"crossing at {emb.dummy_label(entry.dummy)} uses {e}, "
                    "which is not an edge of the graph",
                ))

    seen_edges: set[Edge] = set()
    for entry in emb.registry:
        for e in entry.pair:
            if e in seen_edges:
                violations.append(Violation(
                    "edge-crossed-once", f"edge {e} appears in two crossings"
                ))
            seen_edges.add(e)

    for entry in emb.registry:
        if set(entry.first) & set(entry.second):
            violations.append(Violation(
                "crossing-pair-disjoint",
                f"edges {entry.first} and {entry.second} share an endpoint "
                "but are registered as crossing",
            ))

    # two registries share >= 2 vertices iff they share an unordered pair,
    # so one dictionary pass replaces the quadratic comparison
    entries = emb.registry.entries
    pair_owner: dict[tuple[int, int], int] = {}
    flagged: set[tuple[int, int]] = set()
    for idx, entry in enumerate(entries):
        pts = sorted(entry.endpoints)
        for a in range(len(pts)):
            for bb in range(a + 1, len(pts)):
                key = (pts[a], pts[bb])
                other = pair_owner.setdefault(key, idx)
                if other != idx and (other, idx) not in flagged:
                    flagged.add((other, idx))
                    violations.append(Violation(
                        "crossing-pairs-share-le-one",
                        f"crossing pairs {entries[other].pair} and "
                        f"{entry.pair} share vertices {list(key)}",
                    ))

    expected_ids = list(range(base.n, base.n + len(entries)))
    if [e.dummy for e in entries] != expected_ids or \
            emb.planarization.n != base.n + len(entries):
        violations.append(Violation(
            "dummy-numbering",
            "dummy ids must be consecutive from n in registry order",
        ))
        return VerificationReport(tuple(violations), checked)

    crossed = set(emb.registry.crossed_edges())
    expected = {e for e in base.edges if e not in crossed}
    for entry in entries:
        for u in entry.endpoints:
            expected.add((u, entry.dummy) if u < entry.dummy else (entry.dummy, u))
    if expected != emb.planarization.edge_set:
        missing = sorted(expected - emb.planarization.edge_set)[:4]
        extra = sorted(emb.planarization.edge_set - expected)[:4]
        violations.append(Violation(
            "planarization-edges",
            f"planarization edge set mismatch (missing {missing}, extra {extra})",
        ))
        return VerificationReport(tuple(violations), checked)

    for entry in entries:
        rot = emb.rotations[entry.dummy]
        if len(rot) == 4 and not _alternates(rot, entry):
            violations.append(Violation(
                "dummy-alternation",
                f"rotation {rot} at {emb.dummy_label(entry.dummy)} does not "
                f"alternate the crossed edges {entry.pair}",
            ))

    try:
        trace_faces(emb)
    except NonSphericalEmbedding as exc:
        violations.append(Violation("spherical", str(exc)))

    return VerificationReport(tuple(violations), checked)


def verify_maximal_embedding(
    emb: NicEmbedding, k5_catalog=None
) -> VerificationReport:
    """Check the face structure required of maximal embeddings.

    Every crossing must sit inside a kite (its four incident faces are
    triangles), every face must be a triangle, and the generalized dual
    must satisfy the adjacency rules.  With a ``k5_catalog`` (vertex sets
    of K5 subgraphs) the pairwise sharing of crossed K5s is also checked.
    Graphs on fewer than five vertices are reported as skipped since the
    maximality structure is not defined for them.
    """
    nic = verify_nic(emb)
    if not nic.ok:
        return nic
    checked = nic.checked + (
        "kite-faces", "all-triangles", "dual-rules",
    ) + (("k5-three-sharing",) if k5_catalog is not None else ())
    if emb.base.n < 5:
        return VerificationReport((), checked,
                                  skipped="maximality structure needs n >= 5")
    violations: list[Violation] = []
    faces = trace_faces(emb)

    by_dummy: dict[int, int] = {}
    for face in faces:
        if len(face) != 3:
            violations.append(Violation(
                "all-triangles",
                f"face {face.corners} has length {len(face)}",
            ))
        for v in face.corners:
            if emb.is_dummy(v):
                if len(face) != 3:
                    violations.append(Violation(
                        "kite-faces",
                        f"crossing {emb.dummy_label(v)} lies on the "
                        f"non-triangular face {face.corners}",
                    ))
                by_dummy[v] = by_dummy.get(v, 0) + 1
    for entry in emb.registry:
        if by_dummy.get(entry.dummy, 0) != 4:
            violations.append(Violation(
                "kite-faces",
                f"crossing {emb.dummy_label(entry.dummy)} is not surrounded "
                "by four faces",
            ))

    from . import dual as _dual
    from .errors import NotMaximalEmbedding

    try:
        d = _dual.build_dual(emb)
    except NotMaximalEmbedding as exc:
        violations.append(Violation("dual-rules", f"dual construction failed: {exc}"))
    else:
        violations.extend(_dual.check_adjacency_rules(d).violations)

    if k5_catalog is not None:
        sets = [frozenset(s) for s in k5_catalog]
        for entry in emb.registry:
            first_hosts = [s for s in sets if set(entry.first) <= s]
            second_hosts = [s for s in sets if set(entry.second) <= s]
            for h1 in first_hosts:
                for h2 in second_hosts:
                    if h1 != h2 and len(h1 & h2) < 3:
                        violations.append(Violation(
                            "k5-three-sharing",
                            f"K5s {sorted(h1)} and {sorted(h2)} cross at "
                            f"{emb.dummy_label(entry.dummy)} but share "
                            f"only {len(h1 & h2)} vertices",
                        ))

    return VerificationReport(tuple(violations), checked)


# --- derived graphs ---


def planar_reduction(emb: NicEmbedding) -> Graph:
    """Drop the lexicographically larger edge of each crossing pair."""
    dropped = {entry.second for entry in emb.registry}
    return new_graph(emb.base.n, [e for e in emb.base.edges if e not in dropped])


def planar_skeleton(emb: NicEmbedding) -> Graph:
    """Drop both edges of every crossing pair."""
    dropped = set(emb.registry.crossed_edges())
    return new_graph(emb.base.n, [e for e in emb.base.edges if e not in dropped])


# --- JSON interchange ---


def _vertex_name(emb_n: int, v: int) -> str | int:
    return f"x{v - emb_n}" if v >= emb_n else v


def embedding_to_json(emb: NicEmbedding) -> str:
    n = emb.base.n
    rotations = {}
    for v in range(emb.planarization.n):
        rot = emb.rotations[v]
        if rot:
            k = rot.index(min(rot))
            rot = rot[k:] + rot[:k]
        key = str(v) if v < n else f"x{v - n}"
        rotations[key] = [_vertex_name(n, w) for w in rot]
    doc = {
        "n": n,
        "edges": [list(e) for e in emb.base.edges],
        "crossings": [
            {"pair": [list(entry.first), list(entry.second)]}
            for entry in emb.registry
        ],
        "rotations": rotations,
    }
    return json.dumps(doc, sort_keys=True, indent=None)


def _parse_vertex_name(token, n: int, c: int):
    if isinstance(token, int):
        v = token
    elif isinstance(token, str) and token.startswith("x"):
        try:
            i = int(token[1:])
        except ValueError:
            raise ParseError(f"malformed dummy name {token!r}") from None
        if not 0 <= i < c:
            raise ParseError(f"dummy {token!r} out of range (c={c})")
        return n + i
    elif isinstance(token, str):
        try:
            v = int(token)
        except ValueError:
            raise ParseError(f"malformed vertex name {token!r}") from None
    else:
        raise ParseError(f"malformed vertex name {token!r}")
    if not 0 <= v < n:
        raise ParseError(f"vertex {v} out of range (n={n})")
    return v


def embedding_from_json(text: str | bytes) -> NicEmbedding:
    """Parse the JSON interchange form.  Structural errors raise ParseError;
    deeper validity is the business of ``verify_nic``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("n", "edges", "crossings", "rotations"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a non-negative integer")
    try:
        base = new_graph(n, [tuple(e) for e in doc["edges"]])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad edge list: {exc}") from exc

    pairs = []
    for item in doc["crossings"]:
        if not isinstance(item, dict) or "pair" not in item:
            raise ParseError("each crossing must be an object with a 'pair'")
        pair = item["pair"]
        if (not isinstance(pair, list) or len(pair) != 2 or
                any(not isinstance(e, list) or len(e) != 2 for e in pair)):
            raise ParseError(f"malformed crossing pair {pair!r}")
        pairs.append((tuple(pair[0]), tuple(pair[1])))
    c = len(pairs)

    try:
        planarization, registry = build_planarization(base, pairs)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad crossing list: {exc}") from exc

    rot_doc = doc["rotations"]
    if not isinstance(rot_doc, dict):
        raise ParseError("'rotations' must be an object")
    rotations: list[tuple[int, ...] | None] = [None] * planarization.n
    for key, order in rot_doc.items():
        v = _parse_vertex_name(key, n, c)
        if not isinstance(order, list):
            raise ParseError(f"rotation of {key!r} must be an array")
        rotations[v] = tuple(_parse_vertex_name(t, n, c) for t in order)
    for v in range(planarization.n):
        if rotations[v] is None:
            if planarization.degree(v) == 0:
                rotations[v] = ()
            else:
                name = str(v) if v < n else f"x{v - n}"
                raise ParseError(f"missing rotation for vertex {name}")
    return NicEmbedding(base, planarization, tuple(rotations), registry)
