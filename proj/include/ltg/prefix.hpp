#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltg/homomorphism.hpp"
#include "ltg/term_graph.hpp"

namespace ltg {

// An abstraction-prefix function: for each vertex, the word of abstraction
// (lam) vertices whose scope it lies in, outermost first.  In the relaxed
// variant the function is undefined on delimiter vertices.
struct PrefixFn {
    std::vector<std::optional<std::vector<int>>> P;
    bool relaxed = false;

    bool defined(int v) const { return P[v].has_value(); }
    const std::vector<int>& at(int v) const {
        if (!P[v]) throw Error("UndefinedPrefix", "prefix undefined at vertex");
        return *P[v];
    }
};

struct PrefixDiagnostic {
    bool ok = true;
    std::string condition;  // e.g. "(root)", "(lambda)", "(at)", "(0)_0", "(0)_1",
                            // "(S)_1", "(S)_2", "(conflict)", "(wellformed)"
    int witness = -1;
};

// --- Delimiter signatures (exact stack discipline; unique prefix function) ---

// Root-first inference via the stack rules (lam pushes itself, app copies,
// var/del pop one), with conflict detection, followed by full verification.
std::optional<PrefixFn> infer_prefix(const TermGraph& g);
PrefixDiagnostic infer_prefix_diag(const TermGraph& g, std::optional<PrefixFn>* out = nullptr);

// Verify a candidate full prefix function against the exact conditions.
PrefixDiagnostic verify_prefix(const TermGraph& g, const PrefixFn& P);

// --- Delimiter-free signatures (prefix-order inequality discipline) ---

// Returns a canonical correct prefix function, none if no correct function
// exists.  With var back-links this is the eager (pointwise-shortest) one,
// read off the forced minimal scopes; without back-links it is computed by
// iterated longest-common-prefix meets and verified.
std::optional<PrefixFn> infer_prefix_sig_i(const TermGraph& g);
PrefixDiagnostic verify_prefix_sig_i(const TermGraph& g, const PrefixFn& P);

// --- Relaxed prefix functions (defined on non-delimiter vertices only; a
// chain of n delimiters pops n entries) ---
std::optional<PrefixFn> infer_relaxed_prefix(const TermGraph& g);

// --- Classification predicates ---

// Admits a correct (full / inequality) prefix function.  Throws
// Error("UnsupportedSignature") for signatures without var back-links or
// delimiters (l, l0).
bool is_lambda_tg(const TermGraph& g);

// Admits a relaxed prefix function; equivalent to being S-bisimilar to some
// graph that is a lambda term graph.  Delimiter signatures only.
bool is_lambda_tg_up_to_S(const TermGraph& g);

// Eager scope: every open scope is witnessed by a reachable variable
// occurrence before it closes.  Throws Error("NotALambdaTG") when no correct
// prefix function exists.  The two-argument form uses a caller-supplied
// (verified) prefix function.
bool is_eager_scope(const TermGraph& g);
bool is_eager_scope(const TermGraph& g, const PrefixFn& P);

// Fully back-linked: from any vertex the innermost enclosing abstraction is
// reachable by a path staying inside its scope.  Signatures with var
// back-links only.
bool is_fully_backlinked(const TermGraph& g);
bool is_fully_backlinked(const TermGraph& g, const PrefixFn& P);

// Generalized ("pumped") forms of the two path conditions, quantified over
// every occurrence of an abstraction vertex anywhere in a prefix (not just at
// the end).  Equivalent to the base forms; exposed for property tests.
bool eager_scope_pumped(const TermGraph& g, const PrefixFn& P);
bool fully_backlinked_pumped(const TermGraph& g, const PrefixFn& P);

// h maps P1 onto P2: pointwise image of every defined prefix word matches.
bool check_prefix_homomorphic_image(const TermGraph& g1, const PrefixFn& P1,
                                    const TermGraph& g2, const PrefixFn& P2,
                                    const VertexMap& h);

struct ScopeClassification {
    Signature sig;
    bool is_ltg = false;
    bool is_eager = false;
    bool is_fbl = false;
    bool is_ltg_up_to_S = false;
    std::optional<PrefixFn> prefix;
    std::optional<std::pair<std::string, int>> first_violation;  // (condition, vertex)
};

ScopeClassification classify(const TermGraph& g);

}  // namespace ltg
