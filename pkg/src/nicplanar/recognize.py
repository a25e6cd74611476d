"""Recognition of graphs sitting exactly on the NIC-planar density ceiling.

A graph with n >= 5 vertices is at the ceiling when 5m = 18(n - 2).
Such graphs admit essentially one embedding, and that rigidity makes
recognition cheap: every edge lies in exactly one K4 that is drawn as a
kite, and a K4 is drawn as a kite if and only if some edge of it lies in
no other K4.  The recognizer exploits this in four passes:

1. the edge-count gate, in exact integer arithmetic;
2. a K4 listing with an essential-step budget (the listing only
   completes within the budget when the graph is sparse enough to be a
   candidate at all);
3. bucketing the K4s by edge, selecting every K4 that is the sole
   occupant of some bucket, then requiring every edge to meet exactly
   one selected K4;
4. collapsing each selected K4 to a star around a fresh dummy vertex,
   planarity-testing that star graph, and re-expanding each dummy into
   a crossing whose pair is read off the dummy's rotation.

All failures are verdicts, not exceptions: callers get a reason code
and the counters the run produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import (
    CrossingEntry,
    CrossingRegistry,
    NicEmbedding,
    normalize_crossing,
    verify_nic,
)
from .graph import Edge, Graph, is_biconnected, new_graph
from .k4 import K4Catalog, Quad, bucket_by_edge, list_k4
from .planarity import test_planarity

#: reason codes carried by rejected results
EDGE_COUNT_MISMATCH = "EdgeCountMismatch"
STRUCTURALLY_INVALID = "StructurallyInvalid"
ARBORICITY_TIMEOUT = "ArboricityTimeout"
KITE_COVER_VIOLATION = "KiteCoverViolation"
NONPLANAR_STAR_GRAPH = "NonplanarStarGraph"

#: essential-step allowance per vertex for the K4 listing
DEFAULT_STEP_CAP_MULTIPLIER = 256


@dataclass(frozen=True)
class KiteSet:
    """The K4 subgraphs selected to be embedded with a crossing.

    On accepted inputs every edge of the host graph lies in exactly one
    member, which also forces members to share at most one vertex.
    """

    quads: tuple[Quad, ...]

    def __len__(self) -> int:
        return len(self.quads)

    def __iter__(self):
        return iter(self.quads)


@dataclass(frozen=True)
class RecognitionResult:
    """Verdict of a recognition run plus the counters it produced.

    ``embedding`` is set exactly when the graph was accepted; ``reason``
    is one of the module's reason-code constants otherwise.  The
    diagnostics dict records the catalog size, the number of selected
    kites, and the essential steps the K4 listing spent; entries are
    None when the run rejected before reaching that stage.
    """

    embedding: NicEmbedding | None
    reason: str | None
    kites: KiteSet | None
    diagnostics: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.embedding is not None


def _rejected(reason: str, message: str, **counts) -> RecognitionResult:
    diagnostics = {
        "catalog_size": None,
        "kite_count": None,
        "essential_steps": None,
        "message": message,
    }
    diagnostics.update(counts)
    return RecognitionResult(None, reason, None, diagnostics)


def recognize_optimal(g: Graph,
                      step_cap_multiplier: int = DEFAULT_STEP_CAP_MULTIPLIER,
                      ) -> RecognitionResult:
    """Decide whether ``g`` is NIC-planar with 5m = 18(n - 2), with witness.

    Accepted results carry an embedding that has passed ``verify_nic``
    and whose crossing count equals m - (3n - 6).  Rejections carry a
    reason code; no input raises.
    """
    n, m = g.n, g.m
    if n < 5:
        return _rejected(STRUCTURALLY_INVALID,
                         f"n = {n} is below the n >= 5 domain")
    if 5 * m != 18 * (n - 2):
        return _rejected(EDGE_COUNT_MISMATCH,
                         f"5m = {5 * m} differs from 18(n-2) = {18 * (n - 2)}")
    # the edge gate bounds m linearly in n, so the structure checks and
    # everything after them stay within the linear budget
    if not is_biconnected(g):
        return _rejected(STRUCTURALLY_INVALID,
                         "graph is not biconnected")

    step_cap = step_cap_multiplier * n
    catalog = list_k4(g, step_cap=step_cap)
    if catalog.timed_out:
        return _rejected(
            ARBORICITY_TIMEOUT,
            f"K4 listing passed {catalog.steps} essential steps "
            f"(cap {step_cap}), the graph is too dense to qualify",
            essential_steps=catalog.steps,
        )

    buckets = bucket_by_edge(catalog)
    selected = [False] * len(catalog.quads)
    for e in g.edges:
        ids = buckets.get(e, ())
        if len(ids) == 1:
            selected[ids[0]] = True

    for e in g.edges:
        hits = sum(1 for idx in buckets.get(e, ()) if selected[idx])
        if hits != 1:
            return _rejected(
                KITE_COVER_VIOLATION,
                f"edge {e} lies in {hits} selected kites, expected exactly 1",
                catalog_size=len(catalog),
                kite_count=sum(selected),
                essential_steps=catalog.steps,
            )

    kites = KiteSet(tuple(q for q, keep in zip(catalog.quads, selected) if keep))
    diagnostics = {
        "catalog_size": len(catalog),
        "kite_count": len(kites),
        "essential_steps": catalog.steps,
    }

    star, dummies = build_star_graph(g, kites)
    planarity = test_planarity(star)
    if not planarity.planar:
        diagnostics["message"] = "star graph is not planar"
        return RecognitionResult(None, NONPLANAR_STAR_GRAPH, None, diagnostics)

    rotations = tuple(planarity.rotations[v] for v in range(star.n))
    emb = reinsert_kites(star, rotations, kites, dummies)

    report = verify_nic(emb)
    if not report.ok:
        raise AssertionError(
            "recognizer produced an embedding that fails verification:\n"
            + report.summary())
    assert len(emb.registry) == m - (3 * n - 6)
    return RecognitionResult(emb, None, kites, diagnostics)


def build_star_graph(g: Graph, kites: KiteSet) -> tuple[Graph, dict[Quad, int]]:
    """Collapse each kite of ``g`` to a star around a fresh dummy vertex.

    All six edges inside a kite's vertex set are removed and a dummy
    adjacent to its four corners is added.  Dummies are numbered from
    ``g.n`` in sorted kite order.  Returns the star graph and the
    kite -> dummy map.  With an empty kite set this is the identity.
    """
    removed: set[Edge] = set()
    dummies: dict[Quad, int] = {}
    star_edges: list[Edge] = []
    next_id = g.n
    for quad in sorted(kites):
        a, b, c, d = quad
        removed.update(((a, b), (a, c), (a, d), (b, c), (b, d), (c, d)))
        dummies[quad] = next_id
        star_edges.extend((v, next_id) for v in quad)
        next_id += 1
    kept = [e for e in g.edges if e not in removed]
    return new_graph(next_id, kept + star_edges), dummies


def reinsert_kites(star: Graph, rotations, kites: KiteSet,
                   dummies: dict[Quad, int]) -> NicEmbedding:
    """Expand each star dummy back into a kite crossing.

    ``rotations`` must be a planar rotation system of ``star``.  The
    dummy's rotation dictates the crossing: opposite neighbours form
    the crossed pair, and the four remaining kite edges are spliced
    into the corner rotations right next to the dummy entry, so each
    wedge face at the dummy closes into a triangle.  The base graph is
    reconstructed from the star graph, so an empty kite set returns
    the planar input unchanged, with an empty registry.
    """
    n_base = star.n - len(kites)
    order = sorted(kites)
    if [dummies[q] for q in order] != list(range(n_base, star.n)):
        raise ValueError("dummy map does not number kites consecutively")

    kite_edges = []
    for quad in order:
        a, b, c, d = quad
        kite_edges.extend(((a, b), (a, c), (a, d), (b, c), (b, d), (c, d)))
    base_edges = [e for e in star.edges if e[1] < n_base] + kite_edges
    base = new_graph(n_base, base_edges)

    new_rotations = [list(rotations[v]) for v in range(star.n)]
    entries = []
    planar_kite_edges: list[Edge] = []
    for quad in order:
        z = dummies[quad]
        ring = rotations[z]
        entries.append(CrossingEntry(z, *normalize_crossing(
            (ring[0], ring[2]), (ring[1], ring[3]))))
        for i, v in enumerate(ring):
            after = ring[(i + 1) % 4]
            before = ring[(i - 1) % 4]
            planar_kite_edges.append((v, after) if v < after else (after, v))
            at = new_rotations[v].index(z)
            new_rotations[v][at:at + 1] = [after, z, before]

    planarization = new_graph(
        star.n, list(star.edges) + sorted(set(planar_kite_edges)))
    return NicEmbedding(base, planarization,
                        tuple(tuple(r) for r in new_rotations),
                        CrossingRegistry(tuple(entries)))
