from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Sequence

from ..exceptions import ComparablePrimes, EmptyInput, VertexOutOfRange
from ..models.complex import SimplicialComplex, face_mask
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def facet_graph(complex_: SimplicialComplex) -> Dict[int, List[int]]:
    """Facets joined when one is obtained from the other by a single swap."""
    masks = complex_.masks
    sizes = [bin(m).count("1") for m in masks]
    graph: Dict[int, List[int]] = {index: [] for index in range(len(masks))}
    for a, b in combinations(range(len(masks)), 2):
        if sizes[a] == sizes[b] and bin(masks[a] & masks[b]).count("1") == sizes[a] - 1:
            graph[a].append(b)
            graph[b].append(a)
    return graph


def is_strongly_connected(complex_: SimplicialComplex) -> bool:
    graph = facet_graph(complex_)
    seen = {0}
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for other in graph[node]:
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return len(seen) == len(graph)


class _DisjointSet:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.components = size

    def find(self, item: int) -> int:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.components -= 1
        return True


def connectivity_degree(
    primes: Sequence[Iterable[int]],
    n: int,
    projective: bool = False,
) -> int:
    """Connectedness dimension of the union of the linear spaces V(℘_A).

    Component V(℘_A) has dimension n − |A| and two components meet in dimension
    n − |A ∪ B|; with ``projective`` every dimension drops by one, so disjoint
    components meet in dimension −1. The result is the largest r for which the
    graph of components joined in dimension ≥ r is connected, capped by the
    largest component dimension.
    """
    masks: List[int] = []
    for prime in primes:
        prime = list(prime)
        for v in prime:
            if v < 1 or v > n:
                raise VertexOutOfRange(f"variable {v} outside [1, {n}]")
        masks.append(face_mask(prime))
    if not masks:
        raise EmptyInput("at least one prime is required")
    for a, b in combinations(masks, 2):
        if a & b in (a, b):
            raise ComparablePrimes("primes must be pairwise incomparable")

    shift = 1 if projective else 0
    dims = [n - bin(m).count("1") - shift for m in masks]
    if len(masks) == 1:
        return max(dims[0], -1)

    edges = sorted(
        ((n - bin(masks[a] | masks[b]).count("1") - shift, a, b) for a, b in combinations(range(len(masks)), 2)),
        reverse=True,
    )
    components = _DisjointSet(len(masks))
    bottleneck = edges[0][0]
    for weight, a, b in edges:
        if components.union(a, b):
            bottleneck = weight
            if components.components == 1:
                break
    result = min(bottleneck, max(dims))
    logger.debug("connectivity of %s components: %s", len(masks), result)
    return max(result, -1)
