#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltg/term_graph.hpp"

namespace ltg {

// A total vertex map between two term graphs: map[v] = image of source vertex
// v.  The source/target graphs are always passed alongside.
using VertexMap = std::vector<int>;

// Pointwise image of a vertex word.
std::vector<int> map_word(const VertexMap& h, const std::vector<int>& w);

struct HomDiagnostic {
    bool ok = true;
    std::string condition;  // "roots" | "labels" | "arguments" | "total"
    int witness = -1;       // offending source vertex, if any
};

// Structure-preservation check: roots, labels, indexed arguments.
bool check_homomorphism(const TermGraph& src, const TermGraph& dst, const VertexMap& h);
HomDiagnostic check_homomorphism_diag(const TermGraph& src, const TermGraph& dst,
                                      const VertexMap& h);

// The unique homomorphism g1 -> g2 if one exists (root anchoring plus
// deterministic ordered successors force the map).
std::optional<VertexMap> find_homomorphism(const TermGraph& g1, const TermGraph& g2);

// Bisimilarity, computed as the greatest fixpoint on label-compatible vertex
// pairs of the product space; true iff the root pair survives.
bool are_bisimilar(const TermGraph& g1, const TermGraph& g2);
// Witness variant: the greatest bisimulation restricted to pairs reachable
// from the root pair, empty if the graphs are not bisimilar.
std::vector<std::pair<int, int>> bisimulation_witness(const TermGraph& g1,
                                                      const TermGraph& g2);

// True iff h (assumed a homomorphism src -> dst) identifies only vertices
// labeled f.
bool check_f_homomorphism(const TermGraph& src, const TermGraph& dst, const VertexMap& h,
                          Label f);

// Bijective homomorphism, if any (unique when it exists).
std::optional<VertexMap> are_isomorphic(const TermGraph& g1, const TermGraph& g2);

// Bisimulation collapse via partition refinement (label split, then repeated
// splitting on indexed successor blocks), plus the witnessing homomorphism.
std::pair<TermGraph, VertexMap> collapse(const TermGraph& g);

// Restricted collapse: only vertices labeled `mergeable` may be identified;
// all other vertices start in singleton blocks.  Used for S-collapse.
std::pair<TermGraph, VertexMap> collapse_restricted(const TermGraph& g, Label mergeable);

// All homomorphic images of g up to isomorphism (including g itself and its
// collapse), each with its quotient map.  Enumerates label-respecting
// argument-closed congruences by breadth-first merging.
// Throws Error("SizeBound") if g has more than `bound` vertices.
std::vector<std::pair<TermGraph, VertexMap>> enumerate_images(const TermGraph& g,
                                                              int bound = 12);

// Given a family of graphs closed under the sharing order among themselves
// (e.g. enumerate_images output), check that every pair has a least upper
// bound and a greatest lower bound w.r.t. "admits a homomorphism onto".
bool check_lattice(const std::vector<TermGraph>& images);

}  // namespace ltg
