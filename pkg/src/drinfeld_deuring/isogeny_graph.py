"""Directed correspondence graph on supersingular Delta-invariants.

For a vertex Delta0, every root Y of the neighbor polynomial

    -gamma(T^q) * (Y+1)^(q-1) * Y - Delta0

contributes the edge target

    Delta1 = -gamma(T) * Y^q / (Y+1)^(q-1).

Vertices are the roots of the Deuring polynomial h_{p(T)}.  Every root — of h
and of each neighbor polynomial — is taken in one shared ambient extension
kappa_m of kappa: the builder starts at the splitting degree of h and grows m
until all neighbor polynomials split, so no cross-field bookkeeping is needed.
Distinct Y-roots may map to the same Delta1; edges therefore carry a
multiplicity, and out-degree counted with multiplicity is exactly q.
"""

import warnings
from dataclasses import dataclass

from .drinfeld import deuring_h_universal
from .errors import AmbientTooSmallError, CapExceededError, DomainError
from .fields import CARD_CAP, FiniteField, embed
from .modulus import PrimeModulus
from .poly import PolyRing, roots_in_extension, splitting_degree


def neighbors(delta0, prime, ambient):
    """Multiset of edge targets of delta0, as elements of the ambient field."""
    if not delta0:
        raise DomainError("Delta = 0 is never a vertex")
    q = prime.q
    ring = PolyRing(ambient, "Y")
    Y = ring.gen
    g_Tq = embed(prime.alpha ** q, ambient)
    c = -ring.const(g_Tq) * (Y + ring.one) ** (q - 1) * Y - ring.const(delta0)
    roots = roots_in_extension(c, 1)
    if len(roots) < q:
        raise AmbientTooSmallError(
            f"only {len(roots)} of {q} neighbor roots lie in the ambient field",
            None)
    g_T = embed(prime.alpha, ambient)
    out = []
    for y in roots:
        # y = -1 would force delta0 = 0, so the inverse below is safe
        w = (y + ambient.one) ** (q - 1)
        out.append(-g_T * y ** q * w.inverse())
    return out


@dataclass(frozen=True)
class IsogenyGraph:
    prime: PrimeModulus
    ambient: FiniteField
    ambient_degree: int
    vertices: tuple
    edges: dict      # (src index, dst index) -> multiplicity
    stray_targets: tuple  # (src index, value) pairs falling outside the vertex set

    def to_json_dict(self):
        from . import grammar

        return {
            "q": self.prime.q,
            "p": grammar.render(self.prime.p_poly),
            "d": self.prime.d,
            "ambient_degree": self.ambient_degree,
            "size": len(self.vertices),
            "vertices": [grammar.render(v) for v in self.vertices],
            "edges": [[i, j, m] for (i, j), m in sorted(self.edges.items())],
            "stray_targets": [[i, grammar.render(t)]
                              for i, t in self.stray_targets],
        }

    def to_dot(self):
        from . import grammar

        lines = ["digraph supersingular {"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{grammar.render(v)}"];')
        for (i, j), mult in sorted(self.edges.items()):
            lines.extend([f"  v{i} -> v{j};"] * mult)
        lines.append("}")
        return "\n".join(lines) + "\n"


def _max_scan_degree(kappa):
    m = 1
    while kappa.card ** (m + 1) <= CARD_CAP:
        m += 1
    return m


def build_supersingular_graph(prime):
    h = deuring_h_universal(prime)
    kappa = prime.kappa
    d = prime.d
    max_m = _max_scan_degree(kappa)
    m = splitting_degree(h, max_m)
    if (2 * d) % (d * m):
        warnings.warn(
            f"roots of h generate a degree-{d * m} field over F_{prime.q}, "
            f"which does not divide 2d = {2 * d}")
    while True:
        ambient = kappa if m == 1 else kappa.extension(m)
        verts = roots_in_extension(h, m)
        try:
            targets = [neighbors(v, prime, ambient) for v in verts]
        except AmbientTooSmallError:
            if m >= max_m:
                raise CapExceededError(
                    "neighbor roots would need an ambient field beyond the "
                    f"{CARD_CAP} scan cap")
            m += 1
            continue
        break
    index = {v: i for i, v in enumerate(verts)}
    edges = {}
    strays = []
    for i, ts in enumerate(targets):
        for t in ts:
            j = index.get(t)
            if j is None:
                strays.append((i, t))
            else:
                edges[i, j] = edges.get((i, j), 0) + 1
    return IsogenyGraph(prime, ambient, m, tuple(verts), edges, tuple(strays))


@dataclass(frozen=True)
class ComponentReport:
    size: int
    expected_size: int
    out_degree_histogram: dict
    q_regular: bool
    closed: bool
    connected: bool

    @property
    def ok(self):
        return (self.q_regular and self.closed and self.connected
                and self.size == self.expected_size)

    def to_json_dict(self):
        return {
            "size": self.size,
            "expected_size": self.expected_size,
            "out_degree_histogram": {str(k): v for k, v in
                                     sorted(self.out_degree_histogram.items())},
            "q_regular": self.q_regular,
            "closed": self.closed,
            "connected": self.connected,
            "ok": self.ok,
        }


def verify_component(graph):
    """Size, q-regularity, closure and (undirected) connectivity of the graph."""
    n = len(graph.vertices)
    q = graph.prime.q
    d = graph.prime.d
    expected = (q ** d - 1) // (q - 1)
    outs = [0] * n
    for (i, _j), mult in graph.edges.items():
        outs[i] += mult
    for i, _t in graph.stray_targets:
        outs[i] += 1
    hist = {}
    for deg in outs:
        hist[deg] = hist.get(deg, 0) + 1
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in graph.edges:
        parent[find(i)] = find(j)
    connected = n > 0 and len({find(i) for i in range(n)}) == 1
    return ComponentReport(
        size=n,
        expected_size=expected,
        out_degree_histogram=hist,
        q_regular=n > 0 and hist == {q: n},
        closed=not graph.stray_targets,
        connected=connected,
    )
