"""Charges, the two discharging rules, the face spacing bound, and the audit.

Charges are exact ``Fraction`` values. Vertices start at ``2 d(x) - 6`` and
faces at ``len(face) - 6``; for a connected plane graph they sum to -12.
Rules, for every face C of length at least 7:

* R1: C gives 1 to each 2-vertex on it, once per corner (a 2-vertex with
  both corners on big faces receives 2).
* R2: C gives 1 to each 3-face sharing at least one edge with it, once per
  pair of faces however many edges they share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .embedding import PlaneEmbedding, face_stats
from .errors import EulerMismatch, HypothesisViolated, NotConnected, OutOfRange, TheoremContradiction
from .graph import (
    articulation_points, bfs_distances, enumerate_cycles, is_connected, set_distance, triangles,
)

BIG_FACE = 7
EULER_TOTAL = Fraction(-12)



@dataclass
class ChargeLedger:
    vertex_charge: list[Fraction]
    face_charge: list[Fraction]
    transfers: list[tuple[int, tuple[str, int], Fraction]] = field(default_factory=list)

    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(list(self.vertex_charge), list(self.face_charge), list(self.transfers))


def initial_charges(e: PlaneEmbedding) -> ChargeLedger:
    g = e.graph
    if not is_connected(g):
        raise NotConnected("charges need a connected embedding")
    ledger = ChargeLedger(
        [Fraction(2 * g.degree(v) - 6) for v in range(g.n)],
        [Fraction(len(face) - 6) for face in e.faces],
    )
    if ledger.total() != EULER_TOTAL:
        raise EulerMismatch(f"initial total {ledger.total()} != -12")
    return ledger


def apply_rules(e: PlaneEmbedding, ledger: ChargeLedger) -> ChargeLedger:
    g = e.graph
    out = ledger.copy()
    one = Fraction(1)
    before = ledger.total()
    for i, face in enumerate(e.faces):
        if len(face) < BIG_FACE:
            continue
        for a, _ in face:
            if g.degree(a) == 2:
                out.face_charge[i] -= one
                out.vertex_charge[a] += one
                out.transfers.append((i, ("vertex", a), one))
        small = sorted({
            e.face_of_dart[(b, a)] for a, b in face
            if len(e.faces[e.face_of_dart[(b, a)]]) == 3
        })
        for j in small:
            out.face_charge[i] -= one
            out.face_charge[j] += one
            out.transfers.append((i, ("face", j), one))
    if out.total() != before:
        raise AssertionError("discharging changed the total charge")
    return out


def spacing_max_marks(length: int) -> int:
    """Most marks that fit on a cycle of the given length.

    A mark is a vertex mark (one position, a 2-vertex) or an edge mark (two
    consecutive positions, an edge shared with a triangle). Cycle distance
    between footprints must be at least 4 for vertex/vertex and vertex/edge
    pairs and at least 3 for edge/edge pairs. Exhaustive backtracking over
    placements with the first mark starting at position 0.
    """
    if not 7 <= length <= 40:
        raise OutOfRange(f"length {length} outside 7..40")
    need = {(1, 1): 4, (1, 2): 4, (2, 1): 4, (2, 2): 3}

    def cyc(a: int, b: int) -> int:
        d = abs(a - b) % length
        return min(d, length - d)

    marks = [(s, k) for s in range(length) for k in (1, 2)]
    clash = {}
    for s, k in marks:
        cells = [(s + i) % length for i in range(k)]
        clash[(s, k)] = {
            (t, j) for t, j in marks
            if min(cyc(a, (t + i) % length) for a in cells for i in range(j)) < need[(k, j)]
        }

    best = 0

    def place(chosen: list, banned: set, pos: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        # starts of consecutive marks differ by >= 4 and the last one must
        # clear the mark at position 0
        if len(chosen) + (length + 1 - pos) // 4 <= best:
            return
        for start in range(pos, length):
            for size in (1, 2):
                m = (start, size)
                if m not in banned:
                    chosen.append(m)
                    place(chosen, banned | clash[m], start + size)
                    chosen.pop()

    for size in (1, 2):
        place([(0, size)], clash[(0, size)], size)
    return best


@dataclass
class AuditReport:
    hypotheses: dict[str, bool]
    predicates: dict[str, bool]
    details: dict[str, str]
    initial: ChargeLedger
    final: ChargeLedger
    negative_vertices: list[int]
    negative_faces: list[int]

    @property
    def verdict(self) -> str:
        clean = all(self.predicates.values()) and not self.negative_vertices and not self.negative_faces
        return "pass" if clean else "fail"


PREDICATES = {
    "P1": "no 1-vertex",
    "P2": "2-vertices pairwise at distance >= 4",
    "P3": "no 2-vertex is a cut vertex",
    "P4": "no 6-cycle through a 2-vertex",
    "P5": "no 3-cycle through a 2-vertex",
    "P6": "no 6-cycle sharing an edge with a 3-cycle",
    "P7": "3-cycles pairwise at distance >= 3",
    "P8": "3-cycles at distance >= 4 from every 2-vertex",
    "P9": "each face of length >= 7 has at most floor(len/4) 2-vertices plus adjacent 3-cycles",
}


def _cycle_edges(cycle) -> set[tuple[int, int]]:
    k = len(cycle)
    return {(min(cycle[i], cycle[(i + 1) % k]), max(cycle[i], cycle[(i + 1) % k])) for i in range(k)}


def audit(e: PlaneEmbedding, *, require_hypotheses: bool = True, strict: bool = True) -> AuditReport:
    """Evaluate the structural predicates and run the discharging.

    With ``require_hypotheses`` an input that is disconnected, not subcubic
    or has a 4- or 5-cycle raises :class:`HypothesisViolated`; otherwise
    those checks are only recorded. With ``strict`` an all-clear report
    raises :class:`TheoremContradiction`.
    """
    g = e.graph
    if not is_connected(g):
        raise NotConnected("audit needs a connected graph")
    cycles = enumerate_cycles(g, 6)
    hyp = {
        "subcubic": g.max_degree <= 3,
        "no C4": not cycles[4],
        "no C5": not cycles[5],
    }
    if require_hypotheses:
        for name, ok in hyp.items():
            if not ok:
                raise HypothesisViolated(name)

    twos = [v for v in range(g.n) if g.degree(v) == 2]
    tris = triangles(g)
    preds: dict[str, bool] = {}
    details: dict[str, str] = {}

    ones = [v for v in range(g.n) if g.degree(v) == 1]
    preds["P1"] = not ones
    details["P1"] = f"1-vertices {ones}" if ones else ""

    close = [(a, b) for a, b in combinations(twos, 2) if bfs_distances(g, [a])[b] < 4]
    preds["P2"] = not close
    details["P2"] = f"close pairs {close[:5]}" if close else ""

    cut = sorted(set(twos) & articulation_points(g))
    preds["P3"] = not cut
    details["P3"] = f"cut 2-vertices {cut}" if cut else ""

    two_set = set(twos)
    bad6 = [c for c in cycles[6] if two_set & set(c)]
    preds["P4"] = not bad6
    details["P4"] = f"6-cycles {bad6[:3]}" if bad6 else ""

    bad3 = [t for t in tris if two_set & set(t)]
    preds["P5"] = not bad3
    details["P5"] = f"3-cycles {bad3[:3]}" if bad3 else ""

    tri_edges = [_cycle_edges(t) for t in tris]
    touching = [c for c in cycles[6] if any(_cycle_edges(c) & te for te in tri_edges)]
    preds["P6"] = not touching
    details["P6"] = f"6-cycles {touching[:3]}" if touching else ""

    near_tris = [(s, t) for s, t in combinations(tris, 2) if set_distance(g, s, t) < 3]
    preds["P7"] = not near_tris
    details["P7"] = f"triangle pairs {near_tris[:3]}" if near_tris else ""

    near = [(t, v) for t in tris for v in twos if set_distance(g, t, [v]) < 4]
    preds["P8"] = not near
    details["P8"] = f"(triangle, 2-vertex) {near[:3]}" if near else ""

    crowded = []
    for i, st in enumerate(face_stats(e)):
        if st.length >= BIG_FACE and len(st.two_vertices) + len(st.triangles) > st.length // 4:
            crowded.append(i)
    preds["P9"] = not crowded
    details["P9"] = f"faces {crowded}" if crowded else ""

    initial = initial_charges(e)
    final = apply_rules(e, initial)
    report = AuditReport(
        hyp, preds, details, initial, final,
        [v for v, c in enumerate(final.vertex_charge) if c < 0],
        [i for i, c in enumerate(final.face_charge) if c < 0],
    )
    if strict and all(hyp.values()) and report.verdict == "pass":
        raise TheoremContradiction(report)
    return report
