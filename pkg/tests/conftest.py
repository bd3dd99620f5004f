"""Shared fixtures: the graph corpus used by the property suites.

The corpus collects every graph family the package constructs (product sets,
Kloosterman trace sets, polar trace sets, bent Hadamard sets, assorted
circulants) at desk scale, n <= 1024, so spectral identities and lemma
cross-checks can quantify over all of them.
"""

import itertools

import pytest

from cayleyx import (
    CayleyGraph,
    bent_hadamard_set,
    cyclic,
    kloosterman_trace_set,
    polar_trace_set,
    search_ramanujan_circulant,
    theorem33_set,
)


def _circulant(n, C):
    return CayleyGraph.build(cyclic(n), [(c,) for c in C])


@pytest.fixture(scope="session")
def corpus():
    graphs = []
    for s in range(4, 13, 2):
        for r in range(s, 13, 2):
            graphs.append((f"product({s},{r})", theorem33_set(s, r).graph))
    for m in range(2, 11):
        graphs.append((f"kloosterman-trace(m={m})", kloosterman_trace_set(m).graph))
    for m in range(1, 6):
        graphs.append((f"polar-trace(m={m})", polar_trace_set(m).graph))
    for u in range(1, 5):
        graphs.append((f"bent-hadamard(u={u})", bent_hadamard_set(u).graph))
    graphs.append(("Z20/{4,8,12,16}", _circulant(20, [4, 8, 12, 16])))
    graphs.append(("Z20/{2,6,14,18}", _circulant(20, [2, 6, 14, 18])))
    graphs.append(("Z20/{3,4,8,12,16,17}", _circulant(20, [3, 4, 8, 12, 16, 17])))
    for n in range(3, 13):
        graphs.append((f"cycle({n})", _circulant(n, {1, n - 1})))
    for hit in itertools.islice(search_ramanujan_circulant(15), 5):
        graphs.append((f"circulant(15,s={hit.encoding})", _circulant(15, hit.C)))
    assert len(graphs) >= 50
    return graphs
