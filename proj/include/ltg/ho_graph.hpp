#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltg/homomorphism.hpp"
#include "ltg/prefix.hpp"
#include "ltg/term_graph.hpp"

namespace ltg {

// Higher-order term graph: carrier over a delimiter-free signature plus an
// explicit scope function Sc mapping each abstraction vertex to the set of
// vertices in its extended scope.
struct HoTermGraph {
    TermGraph g;
    // scopes[v] = sorted vertex set Sc(v) for lam vertices; empty for others.
    std::vector<std::vector<int>> scopes;

    bool in_scope(int lam, int w) const;
};

// Higher-order term graph with an abstraction-prefix function instead of a
// scope function.
struct ApHoTermGraph {
    TermGraph g;
    PrefixFn P;
};

struct HoDiagnostic {
    bool ok = true;
    std::string condition;  // "(root)", "(self)", "(nest)", "(closed)",
                            // "(scope)_0", "(scope)_1", "(domain)"
    int witness = -1;
};

// Validity of a scope function per the six scoping conditions.
HoDiagnostic validate_ho_diag(const HoTermGraph& h);
bool validate_ho(const HoTermGraph& h);

// The binders of w — the abstraction vertices whose scope contains w —
// ordered outermost first (by strict scope inclusion).
std::vector<int> binders(const HoTermGraph& h, int w);

// Validity of a prefix function under the inequality discipline.
HoDiagnostic validate_ap_ho_diag(const ApHoTermGraph& a);
bool validate_ap_ho(const ApHoTermGraph& a);

// Carrier homomorphism that also maps scope sets onto scope sets pointwise.
bool check_ho_homomorphism(const HoTermGraph& src, const HoTermGraph& dst,
                           const VertexMap& h);

// Carrier homomorphism that also maps prefix words onto prefix words.
bool check_ap_homomorphism(const ApHoTermGraph& src, const ApHoTermGraph& dst,
                           const VertexMap& h);

}  // namespace ltg
