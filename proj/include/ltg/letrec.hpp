#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltg/term_graph.hpp"

namespace ltg {

// Abstract syntax of the lambda calculus with letrec (closed terms only).
struct LetrecTerm {
    enum class Kind { Var, Abs, App, Letrec };

    Kind kind = Kind::Var;
    std::string name;                         // Var: variable; Abs: binder
    std::vector<LetrecTerm> children;         // Abs: [body]; App: [fun, arg];
                                              // Letrec: bindings..., body
    std::vector<std::string> binding_names;   // Letrec only
    int pos = 0;                              // source offset (diagnostics)
};

// Parse and resolve a term.  Lambda may be written '\' or 'λ'.
// Errors: SyntaxError(position), UnboundVariable(name), DuplicateBinding(name).
LetrecTerm parse_term(const std::string& text);

// Construct the eager-scope first-order graph of a closed term, over the
// signature with var back-links and two-argument delimiters.
// Errors: BlackHole for binding groups that unwind to nothing but bindings.
TermGraph term_to_graph(const LetrecTerm& t);

// Unfolding equivalence, decided by bisimilarity of the constructed graphs.
bool unfolding_equivalent(const LetrecTerm& t1, const LetrecTerm& t2);

}  // namespace ltg
