#pragma once

// Exact subgraph counting. A "copy" of h in g is a subgraph of g isomorphic
// to h (not induced), so N(h,g) = injective homomorphisms / |Aut(h)|.

#include "turan/bigint.hpp"
#include "turan/graph.hpp"

namespace turan {

Count count_injective_homs(const Graph& h, const Graph& g);
Count count_copies(const Graph& h, const Graph& g);

// Copies of h whose vertex set contains v.
Count copy_degree(const Graph& h, const Graph& g, int v);

// True iff g contains no copy of f.
bool is_free(const Graph& g, const Graph& f);

}  // namespace turan
