#include "ltg/prefix.hpp"

#include <algorithm>
#include <deque>

namespace ltg {

namespace {

using Word = std::vector<int>;

bool word_is_prefix(const Word& a, const Word& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Word word_lcp(const Word& a, const Word& b) {
    Word out;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()) && a[k] == b[k]; ++k)
        out.push_back(a[k]);
    return out;
}

Word word_pop(Word w) {
    w.pop_back();
    return w;
}

Word word_push(Word w, int v) {
    w.push_back(v);
    return w;
}

// Shared well-formedness of prefix words: entries are lam vertices, no
// duplicates, no self-occurrence.
PrefixDiagnostic check_wellformed(const TermGraph& g, const PrefixFn& P) {
    for (int v = 0; v < g.size(); ++v) {
        if (!P.defined(v)) continue;
        const Word& w = P.at(v);
        for (std::size_t a = 0; a < w.size(); ++a) {
            if (g.lab(w[a]) != Label::Lam) return {false, "(wellformed)", v};
            if (w[a] == v) return {false, "(wellformed)", v};
            for (std::size_t b = a + 1; b < w.size(); ++b)
                if (w[a] == w[b]) return {false, "(wellformed)", v};
        }
    }
    return {};
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact discipline for delimiter signatures.
// ---------------------------------------------------------------------------

PrefixDiagnostic verify_prefix(const TermGraph& g, const PrefixFn& P) {
    if (!g.sig().has_del())
        return {false, "(signature)", -1};
    const int i = g.sig().var_arity();
    const int j = g.sig().del_arity();
    for (int v = 0; v < g.size(); ++v)
        if (!P.defined(v)) return {false, "(total)", v};
    if (auto wf = check_wellformed(g, P); !wf.ok) return wf;
    if (!P.at(g.root()).empty()) return {false, "(root)", g.root()};
    for (int w = 0; w < g.size(); ++w) {
        const Word& p = P.at(w);
        const auto& a = g.args(w);
        switch (g.lab(w)) {
            case Label::Lam:
                if (P.at(a[0]) != word_push(p, w)) return {false, "(lambda)", w};
                break;
            case Label::App:
                for (int k = 0; k < 2; ++k)
                    if (P.at(a[k]) != p) return {false, "(at)", w};
                break;
            case Label::Var:
                if (p.empty()) return {false, "(0)_0", w};
                if (i == 1) {
                    int b = a[0];
                    if (g.lab(b) != Label::Lam || word_push(P.at(b), b) != p)
                        return {false, "(0)_1", w};
                }
                break;
            case Label::Del:
                if (p.empty() || P.at(a[0]) != word_pop(p)) return {false, "(S)_1", w};
                if (j == 2) {
                    int b = a[1];
                    if (g.lab(b) != Label::Lam || word_push(P.at(b), b) != p)
                        return {false, "(S)_2", w};
                }
                break;
        }
    }
    return {};
}

PrefixDiagnostic infer_prefix_diag(const TermGraph& g, std::optional<PrefixFn>* out) {
    if (out) out->reset();
    if (!g.sig().has_del()) return {false, "(signature)", -1};
    const int i = g.sig().var_arity();
    const int j = g.sig().del_arity();

    PrefixFn P;
    P.P.assign(g.size(), std::nullopt);
    PrefixDiagnostic conflict{};
    auto assign = [&](int v, Word w) -> bool {
        if (!P.P[v]) {
            P.P[v] = std::move(w);
            return true;
        }
        if (*P.P[v] != w) {
            if (conflict.ok) conflict = {false, "(conflict)", v};
        }
        return false;
    };

    std::deque<int> queue;
    P.P[g.root()] = Word{};
    queue.push_back(g.root());
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        const Word p = *P.P[w];
        const auto& a = g.args(w);
        switch (g.lab(w)) {
            case Label::Lam:
                if (assign(a[0], word_push(p, w))) queue.push_back(a[0]);
                break;
            case Label::App:
                for (int k = 0; k < 2; ++k)
                    if (assign(a[k], p)) queue.push_back(a[k]);
                break;
            case Label::Var:
                // i = 1: the back-link target's prefix is forced to pop(p);
                // propagating keeps inference total on root-connected graphs.
                if (i == 1 && !p.empty() && p.back() == a[0])
                    if (assign(a[0], word_pop(p))) queue.push_back(a[0]);
                break;
            case Label::Del:
                if (!p.empty()) {
                    if (assign(a[0], word_pop(p))) queue.push_back(a[0]);
                    if (j == 2 && p.back() == a[1])
                        if (assign(a[1], word_pop(p))) queue.push_back(a[1]);
                }
                break;
        }
    }
    if (!conflict.ok) return conflict;
    for (int v = 0; v < g.size(); ++v)
        if (!P.P[v]) return {false, "(unreached)", v};
    if (auto d = verify_prefix(g, P); !d.ok) return d;
    if (out) *out = std::move(P);
    return {};
}

std::optional<PrefixFn> infer_prefix(const TermGraph& g) {
    std::optional<PrefixFn> out;
    infer_prefix_diag(g, &out);
    return out;
}

// ---------------------------------------------------------------------------
// Inequality discipline for delimiter-free signatures.
// ---------------------------------------------------------------------------

PrefixDiagnostic verify_prefix_sig_i(const TermGraph& g, const PrefixFn& P) {
    if (g.sig().has_del()) return {false, "(signature)", -1};
    const int i = g.sig().has_var() ? g.sig().var_arity() : 0;
    for (int v = 0; v < g.size(); ++v)
        if (!P.defined(v)) return {false, "(total)", v};
    if (auto wf = check_wellformed(g, P); !wf.ok) return wf;
    if (!P.at(g.root()).empty()) return {false, "(root)", g.root()};
    for (int w = 0; w < g.size(); ++w) {
        const Word& p = P.at(w);
        const auto& a = g.args(w);
        switch (g.lab(w)) {
            case Label::Lam:
                if (!word_is_prefix(P.at(a[0]), word_push(p, w))) return {false, "(lambda)", w};
                break;
            case Label::App:
                for (int k = 0; k < 2; ++k)
                    if (!word_is_prefix(P.at(a[k]), p)) return {false, "(at)", w};
                break;
            case Label::Var:
                if (p.empty()) return {false, "(0)_0", w};
                if (i == 1) {
                    int b = a[0];
                    if (g.lab(b) != Label::Lam || word_push(P.at(b), b) != p)
                        return {false, "(0)_1", w};
                }
                break;
            case Label::Del:
                return {false, "(signature)", w};
        }
    }
    return {};
}

std::optional<PrefixFn> infer_prefix_sig_i(const TermGraph& g) {
    if (g.sig().has_del()) return std::nullopt;
    const int i = g.sig().has_var() ? g.sig().var_arity() : 0;
    const int n = g.size();

    if (i == 1) {
        // Back-links identify each variable's binder, so the minimal (eager)
        // scopes are forced: F(l) = {l} ∪ {u : u reaches a variable bound by l
        // on a path avoiding l}.  Every correct scope function contains F
        // pointwise, and F is itself correct whenever any correct one exists,
        // so verifying the prefix function read off from F decides existence.
        std::vector<std::vector<int>> preds(n);
        for (int u = 0; u < n; ++u)
            for (int w : g.args(u)) preds[w].push_back(u);
        std::vector<std::vector<char>> F(n);  // F[l][u], lam vertices only
        for (int l : g.vertices_with(Label::Lam)) {
            std::vector<char>& in = F[l];
            in.assign(n, 0);
            std::deque<int> queue;
            for (int v : g.vertices_with(Label::Var)) {
                if (g.args(v)[0] != l || v == l) continue;
                in[v] = 1;
                queue.push_back(v);
            }
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int p : preds[u]) {
                    if (p == l || in[p]) continue;
                    in[p] = 1;
                    queue.push_back(p);
                }
            }
            in[l] = 1;
        }
        auto scope_size = [&](int l) {
            return std::count(F[l].begin(), F[l].end(), char(1));
        };
        PrefixFn P;
        P.P.assign(n, std::nullopt);
        for (int w = 0; w < n; ++w) {
            Word binders;
            for (int l : g.vertices_with(Label::Lam))
                if (l != w && F[l][w]) binders.push_back(l);
            // Outermost first: strictly nested scopes have strictly
            // decreasing sizes (ill-nested inputs fail verification below).
            std::stable_sort(binders.begin(), binders.end(), [&](int a, int b) {
                return scope_size(a) > scope_size(b);
            });
            P.P[w] = std::move(binders);
        }
        if (!verify_prefix_sig_i(g, P).ok) return std::nullopt;
        return P;
    }

    // i = 0: no binder information at the variables; approximate by iterated
    // meets over the inequality constraints and verify the result.  Every
    // value only shrinks (in prefix order); undefined means "no constraint
    // seen yet".
    std::vector<std::optional<Word>> M(n);
    M[g.root()] = Word{};
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ <= n * n + n + 2) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            if (!M[u]) continue;
            const Word& p = *M[u];
            auto lower = [&](int v, const Word& bound) {
                if (v == g.root()) return;  // fixed at the empty word
                if (!M[v]) {
                    M[v] = bound;
                    changed = true;
                } else {
                    Word m = word_lcp(*M[v], bound);
                    if (m != *M[v]) {
                        M[v] = std::move(m);
                        changed = true;
                    }
                }
            };
            const auto& a = g.args(u);
            switch (g.lab(u)) {
                case Label::Lam:
                    lower(a[0], word_push(p, u));
                    break;
                case Label::App:
                    lower(a[0], p);
                    lower(a[1], p);
                    break;
                case Label::Var:
                    if (i == 1) {
                        // P(b).b must be a prefix of the var's own value; the
                        // longest such q (before the last occurrence of b)
                        // bounds P(b) from above.
                        int b = a[0];
                        auto it = std::find(p.rbegin(), p.rend(), b);
                        if (it != p.rend()) {
                            Word q(p.begin(), it.base() - 1);
                            lower(b, q);
                        }
                    }
                    break;
                case Label::Del:
                    return std::nullopt;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!M[v]) return std::nullopt;
    // Variable occurrences are pinned to their binder's prefix exactly;
    // variables have no successors under the inequality conditions, so
    // lowering them is safe.
    if (i == 1) {
        for (int w = 0; w < n; ++w) {
            if (g.lab(w) != Label::Var) continue;
            int b = g.args(w)[0];
            if (g.lab(b) != Label::Lam) return std::nullopt;
            Word need = word_push(*M[b], b);
            if (!word_is_prefix(need, *M[w])) return std::nullopt;
            M[w] = std::move(need);
        }
    }
    PrefixFn P;
    P.P.assign(n, std::nullopt);
    for (int v = 0; v < n; ++v) P.P[v] = std::move(*M[v]);
    if (!verify_prefix_sig_i(g, P).ok) return std::nullopt;
    return P;
}

// ---------------------------------------------------------------------------
// Relaxed prefix functions on non-delimiter vertices.
// ---------------------------------------------------------------------------

std::optional<PrefixFn> infer_relaxed_prefix(const TermGraph& g) {
    if (!g.sig().has_del()) return std::nullopt;
    const int i = g.sig().var_arity();
    const int n = g.size();

    // Chase a delimiter chain from vertex v; returns (endpoint, chain length)
    // or nullopt on an all-delimiter cycle.
    auto chase = [&](int v) -> std::optional<std::pair<int, int>> {
        int hops = 0;
        std::vector<char> seen(n, 0);
        while (g.lab(v) == Label::Del) {
            if (seen[v]) return std::nullopt;
            seen[v] = 1;
            v = g.args(v)[0];
            ++hops;
        }
        return std::make_pair(v, hops);
    };

    PrefixFn P;
    P.relaxed = true;
    P.P.assign(n, std::nullopt);
    if (g.lab(g.root()) == Label::Del) return std::nullopt;
    bool ok = true;
    auto assign = [&](int v, Word w) -> bool {
        if (!P.P[v]) {
            P.P[v] = std::move(w);
            return true;
        }
        if (*P.P[v] != w) ok = false;
        return false;
    };
    std::deque<int> queue;
    P.P[g.root()] = Word{};
    queue.push_back(g.root());
    while (ok && !queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        const Word p = *P.P[w];
        const auto& a = g.args(w);
        auto step = [&](int child, Word top) {
            auto end = chase(child);
            if (!end) {
                ok = false;
                return;
            }
            auto [t, hops] = *end;
            if (hops > static_cast<int>(top.size())) {
                ok = false;
                return;
            }
            top.resize(top.size() - hops);
            if (assign(t, std::move(top))) queue.push_back(t);
        };
        switch (g.lab(w)) {
            case Label::Lam:
                step(a[0], word_push(p, w));
                break;
            case Label::App:
                step(a[0], p);
                step(a[1], p);
                break;
            case Label::Var:
                if (p.empty()) ok = false;
                else if (i == 1) {
                    if (g.lab(a[0]) != Label::Lam || p.back() != a[0]) ok = false;
                    else if (assign(a[0], word_pop(p))) queue.push_back(a[0]);
                }
                break;
            case Label::Del:
                ok = false;  // unreachable: dels are never enqueued
                break;
        }
    }
    if (!ok) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.lab(v) != Label::Del && !P.P[v]) return std::nullopt;
    if (auto wf = check_wellformed(g, P); !wf.ok) return std::nullopt;
    return P;
}

// ---------------------------------------------------------------------------
// Classification predicates.
// ---------------------------------------------------------------------------

bool is_lambda_tg(const TermGraph& g) {
    if (g.sig().has_del()) return infer_prefix(g).has_value();
    if (g.sig().has_var() && g.sig().var_arity() == 1)
        return infer_prefix_sig_i(g).has_value();
    throw Error("UnsupportedSignature",
                "lambda-term-graph discipline needs var back-links or delimiters (got " +
                    g.sig().name() + ")");
}

bool is_lambda_tg_up_to_S(const TermGraph& g) {
    if (!g.sig().has_del())
        throw Error("UnsupportedSignature", "relaxed discipline needs a delimiter signature");
    return infer_relaxed_prefix(g).has_value();
}

namespace {

// Core reachability check behind the eager-scope and fully-back-linked
// predicates.  For each abstraction vertex v with target word t = P(v).v:
//   qualifying region R = vertices whose (defined) prefix extends t;
//   accepting set     A = eager: variable occurrences with prefix exactly t
//                         (and back-link to v when vars carry back-links);
//                         FBL:   vertices in R with an edge into v;
//   requirement: every vertex obliged for v can reach A inside R.
// Obliged vertices: prefix ends in v (base form) or contains v (pumped form).
enum class PathKind { Eager, Fbl };

bool path_condition(const TermGraph& g, const PrefixFn& P, PathKind kind, bool pumped) {
    const int n = g.size();
    const int i = g.sig().has_var() ? g.sig().var_arity() : 0;
    for (int v = 0; v < n; ++v) {
        if (g.lab(v) != Label::Lam || !P.defined(v)) continue;
        Word t = P.at(v);
        t.push_back(v);
        std::vector<char> inR(n, 0);
        for (int u = 0; u < n; ++u)
            if (P.defined(u) && word_is_prefix(t, P.at(u))) inR[u] = 1;
        std::vector<char> reach(n, 0);
        std::deque<int> queue;
        for (int u = 0; u < n; ++u) {
            if (!inR[u]) continue;
            bool accepting = false;
            if (kind == PathKind::Eager) {
                accepting = g.lab(u) == Label::Var && P.at(u) == t &&
                            (i == 0 || g.args(u)[0] == v);
            } else {
                for (int w : g.args(u))
                    if (w == v) accepting = true;
            }
            if (accepting) {
                reach[u] = 1;
                queue.push_back(u);
            }
        }
        // Reverse reachability within R.
        std::vector<std::vector<int>> rev(n);
        for (int u = 0; u < n; ++u)
            if (inR[u])
                for (int w : g.args(u))
                    if (inR[w]) rev[w].push_back(u);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int p : rev[u])
                if (!reach[p]) {
                    reach[p] = 1;
                    queue.push_back(p);
                }
        }
        for (int w = 0; w < n; ++w) {
            if (!P.defined(w)) continue;
            if (kind == PathKind::Eager && g.lab(w) == Label::Del) continue;
            const Word& pw = P.at(w);
            bool obliged = pumped ? std::find(pw.begin(), pw.end(), v) != pw.end()
                                  : (!pw.empty() && pw.back() == v);
            if (obliged && !reach[w]) return false;
        }
    }
    return true;
}

PrefixFn require_prefix(const TermGraph& g) {
    std::optional<PrefixFn> P;
    if (g.sig().has_del()) P = infer_prefix(g);
    else if (g.sig().has_var() && g.sig().var_arity() == 1) P = infer_prefix_sig_i(g);
    else throw Error("UnsupportedSignature", "no prefix discipline for " + g.sig().name());
    if (!P)
        throw Error("NotALambdaTG", "graph admits no correct abstraction-prefix function");
    return *std::move(P);
}

}  // namespace

bool is_eager_scope(const TermGraph& g, const PrefixFn& P) {
    return path_condition(g, P, PathKind::Eager, false);
}

bool is_eager_scope(const TermGraph& g) { return is_eager_scope(g, require_prefix(g)); }

bool is_fully_backlinked(const TermGraph& g, const PrefixFn& P) {
    if (!g.sig().has_var() || g.sig().var_arity() != 1)
        throw Error("UnsupportedSignature", "fully-back-linked needs var back-links");
    return path_condition(g, P, PathKind::Fbl, false);
}

bool is_fully_backlinked(const TermGraph& g) {
    if (!g.sig().has_var() || g.sig().var_arity() != 1)
        throw Error("UnsupportedSignature", "fully-back-linked needs var back-links");
    return is_fully_backlinked(g, require_prefix(g));
}

bool eager_scope_pumped(const TermGraph& g, const PrefixFn& P) {
    return path_condition(g, P, PathKind::Eager, true);
}

bool fully_backlinked_pumped(const TermGraph& g, const PrefixFn& P) {
    return path_condition(g, P, PathKind::Fbl, true);
}

bool check_prefix_homomorphic_image(const TermGraph& g1, const PrefixFn& P1,
                                    const TermGraph& g2, const PrefixFn& P2,
                                    const VertexMap& h) {
    (void)g2;
    for (int v = 0; v < g1.size(); ++v) {
        if (!P1.defined(v)) continue;
        if (!P2.defined(h[v])) return false;
        if (map_word(h, P1.at(v)) != P2.at(h[v])) return false;
    }
    return true;
}

ScopeClassification classify(const TermGraph& g) {
    ScopeClassification c;
    c.sig = g.sig();
    if (g.sig().has_del()) {
        std::optional<PrefixFn> P;
        PrefixDiagnostic d = infer_prefix_diag(g, &P);
        c.is_ltg = d.ok;
        if (!d.ok) c.first_violation = {d.condition, d.witness};
        c.prefix = P;
        c.is_ltg_up_to_S = infer_relaxed_prefix(g).has_value();
        if (P) {
            c.is_eager = is_eager_scope(g, *P);
            if (g.sig().var_arity() == 1) c.is_fbl = is_fully_backlinked(g, *P);
        }
    } else if (g.sig().has_var() && g.sig().var_arity() == 1) {
        std::optional<PrefixFn> P = infer_prefix_sig_i(g);
        c.is_ltg = P.has_value();
        c.is_ltg_up_to_S = c.is_ltg;  // no delimiters to relax over
        c.prefix = P;
        if (P) {
            c.is_eager = is_eager_scope(g, *P);
            c.is_fbl = path_condition(g, *P, PathKind::Fbl, false);
        } else {
            c.first_violation = {std::string("(no-correct-prefix)"), -1};
        }
    } else {
        c.first_violation = {std::string("(unsupported-signature)"), -1};
    }
    return c;
}

}  // namespace ltg
