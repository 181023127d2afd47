#include "ltg/ho_graph.hpp"

#include <algorithm>

namespace ltg {

namespace {

bool contains(const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool HoTermGraph::in_scope(int lam, int w) const { return contains(scopes[lam], w); }

HoDiagnostic validate_ho_diag(const HoTermGraph& h) {
    const TermGraph& g = h.g;
    const int n = g.size();
    if (g.sig().has_del()) return {false, "(domain)", -1};
    if (static_cast<int>(h.scopes.size()) != n) return {false, "(domain)", -1};
    for (int v = 0; v < n; ++v) {
        if (g.lab(v) != Label::Lam && !h.scopes[v].empty()) return {false, "(domain)", v};
        if (!std::is_sorted(h.scopes[v].begin(), h.scopes[v].end()))
            return {false, "(domain)", v};
        for (int w : h.scopes[v])
            if (w < 0 || w >= n) return {false, "(domain)", v};
    }
    const int r = g.root();
    for (int v : g.vertices_with(Label::Lam)) {
        // (self): v lies in its own scope.
        if (!h.in_scope(v, v)) return {false, "(self)", v};
        // (root): the root is in no strict scope.
        if (v != r && h.in_scope(v, r)) return {false, "(root)", v};
        if (v == r) {
            // r == v is allowed in Sc(v) by (self); nothing else to check here.
        }
        // (nest): v1 strictly in Sc(v0) implies Sc(v1) within the strict scope.
        for (int v1 : g.vertices_with(Label::Lam)) {
            if (v1 == v) continue;
            if (h.in_scope(v, v1)) {
                for (int w : h.scopes[v1])
                    if (w == v || !h.in_scope(v, w)) return {false, "(nest)", v1};
            }
        }
        // (closed): an edge entering the strict scope starts inside the scope.
        for (int w = 0; w < n; ++w)
            for (int wk : g.args(w))
                if (wk != v && h.in_scope(v, wk) && !h.in_scope(v, w))
                    return {false, "(closed)", w};
    }
    const int i = g.sig().has_var() ? g.sig().var_arity() : 0;
    for (int w : g.vertices_with(Label::Var)) {
        // (scope)_0: every variable occurrence lies in some strict scope.
        bool inside = false;
        for (int v : g.vertices_with(Label::Lam))
            if (v != w && h.in_scope(v, w)) inside = true;
        if (!inside) return {false, "(scope)_0", w};
        if (i == 1) {
            // (scope)_1: the back-link target is an abstraction vertex lying in
            // exactly the same scopes as the occurrence itself.
            int b = g.args(w)[0];
            if (g.lab(b) != Label::Lam) return {false, "(scope)_1", w};
            for (int v : g.vertices_with(Label::Lam))
                if (h.in_scope(v, w) != h.in_scope(v, b)) return {false, "(scope)_1", w};
        }
    }
    return {};
}

bool validate_ho(const HoTermGraph& h) { return validate_ho_diag(h).ok; }

std::vector<int> binders(const HoTermGraph& h, int w) {
    std::vector<int> bs;
    for (int v : h.g.vertices_with(Label::Lam))
        if (h.in_scope(v, w)) bs.push_back(v);
    // Outermost first: on a chain of properly nested scopes, larger scope =
    // outer binder (ties cannot occur among comparable distinct scopes).
    std::sort(bs.begin(), bs.end(), [&](int a, int b) {
        if (a == b) return false;
        if (subset(h.scopes[b], h.scopes[a]) && !subset(h.scopes[a], h.scopes[b])) return true;
        if (subset(h.scopes[a], h.scopes[b]) && !subset(h.scopes[b], h.scopes[a])) return false;
        return h.scopes[a].size() > h.scopes[b].size();
    });
    return bs;
}

HoDiagnostic validate_ap_ho_diag(const ApHoTermGraph& a) {
    if (a.g.sig().has_del()) return {false, "(domain)", -1};
    if (static_cast<int>(a.P.P.size()) != a.g.size()) return {false, "(domain)", -1};
    PrefixDiagnostic d = verify_prefix_sig_i(a.g, a.P);
    return {d.ok, d.condition, d.witness};
}

bool validate_ap_ho(const ApHoTermGraph& a) { return validate_ap_ho_diag(a).ok; }

bool check_ho_homomorphism(const HoTermGraph& src, const HoTermGraph& dst,
                           const VertexMap& h) {
    if (!check_homomorphism(src.g, dst.g, h)) return false;
    for (int v : src.g.vertices_with(Label::Lam)) {
        std::vector<int> image = map_word(h, src.scopes[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image != dst.scopes[h[v]]) return false;
    }
    return true;
}

bool check_ap_homomorphism(const ApHoTermGraph& src, const ApHoTermGraph& dst,
                           const VertexMap& h) {
    if (!check_homomorphism(src.g, dst.g, h)) return false;
    return check_prefix_homomorphic_image(src.g, src.P, dst.g, dst.P, h);
}

}  // namespace ltg
