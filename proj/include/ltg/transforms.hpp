#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ltg/ho_graph.hpp"

namespace ltg {

// Scope function -> prefix function on the same carrier: P(w) is the word of
// binders of w (excluding w itself), outermost first.
ApHoTermGraph scopes_to_prefixes(const HoTermGraph& h);

// Prefix function -> scope function on the same carrier:
// Sc(v) = {w : v occurs in P(w)} ∪ {v}.
HoTermGraph prefixes_to_scopes(const ApHoTermGraph& a);

// Delimiter insertion: wherever the prefix shrinks along an edge, interpose a
// chain of delimiter vertices, one per popped abstraction; with j = 2 each
// delimiter back-links to the abstraction it closes.  The result admits a
// correct prefix function.
TermGraph insert_delimiters(const ApHoTermGraph& a, int j);

// Delimiter erasure: drop delimiter vertices, rewiring each edge across the
// maximal delimiter chain it enters; restrict the prefix function.
// Throws Error("NotALambdaTG") when no correct prefix function exists.
ApHoTermGraph erase_delimiters(const TermGraph& g);

// Carrier projections.
TermGraph forget_scoping(const HoTermGraph& h);
TermGraph forget_scoping(const ApHoTermGraph& a);

// Maximal S-sharing: bisimulation collapse allowed to merge only delimiter
// vertices; the witness is an S-homomorphism.
std::pair<TermGraph, VertexMap> s_collapse(const TermGraph& g);

// Maximal-sharing pipeline on higher-order graphs with var back-links:
// translate to a first-order graph with delimiters and back-links, collapse,
// translate back.  With eager_required the pipeline refuses inputs whose
// first-order form is not eager-scope (Error("NotEagerScope")); without it a
// warning is recorded and the post-collapse graph is re-validated, failing
// with Error("CollapseLeftClass") if it lost the prefix discipline.
HoTermGraph max_share_pipeline(const HoTermGraph& h, bool eager_required = true,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace ltg
