#pragma once

#include <optional>
#include <string>

#include "ltg/ho_graph.hpp"
#include "ltg/term_graph.hpp"

namespace ltg {

// A parsed term-graph file: the carrier, and at most one of a scope function
// (`scope` lines) or a prefix function (`prefix` lines).
struct ParsedGraph {
    TermGraph g;
    std::optional<std::vector<std::vector<int>>> scopes;  // per vertex, sorted
    std::optional<PrefixFn> prefix;
};

// Line-based format:
//   tg <sigkind>                      header; sigkind in {l,l0,l1,l01,l02,l11,l12}
//   <id> <label> <succ-id>*           one line per vertex
//   root <id>                         mandatory
//   scope <lam-id> <id>*              optional scope function lines
//   prefix <id> <lam-id>*             optional prefix function lines
// '#' starts a comment; order of lines is irrelevant.
ParsedGraph parse_tg(const std::string& text);

// Printers; vertices are emitted in canonical (root-first) order, with their
// stored names.  Output re-parses to an isomorphic graph.
std::string print_tg(const TermGraph& g);
std::string print_tg(const HoTermGraph& h);
std::string print_tg(const ApHoTermGraph& a);

// DOT export: argument indices as edge labels; back-link edges (var -> lam
// and the second argument of del) dashed; scopes as shaded clusters when a
// scope function is supplied.
std::string to_dot(const TermGraph& g,
                   const std::vector<std::vector<int>>* scopes = nullptr);

}  // namespace ltg
