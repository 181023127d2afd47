#include "ltg/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ltg {

std::vector<int> map_word(const VertexMap& h, const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int v : w) out.push_back(h[v]);
    return out;
}

HomDiagnostic check_homomorphism_diag(const TermGraph& a, const TermGraph& b,
                                      const VertexMap& h) {
    if (static_cast<int>(h.size()) != a.size()) return {false, "total", -1};
    for (int v = 0; v < a.size(); ++v)
        if (h[v] < 0 || h[v] >= b.size()) return {false, "total", v};
    if (h[a.root()] != b.root()) return {false, "roots", a.root()};
    for (int v = 0; v < a.size(); ++v) {
        if (a.lab(v) != b.lab(h[v])) return {false, "labels", v};
        const auto& av = a.args(v);
        const auto& bv = b.args(h[v]);
        for (std::size_t k = 0; k < av.size(); ++k)
            if (h[av[k]] != bv[k]) return {false, "arguments", v};
    }
    return {};
}

bool check_homomorphism(const TermGraph& a, const TermGraph& b, const VertexMap& h) {
    return check_homomorphism_diag(a, b, h).ok;
}

std::optional<VertexMap> find_homomorphism(const TermGraph& g1, const TermGraph& g2) {
    if (g1.sig() != g2.sig()) return std::nullopt;
    std::vector<int> map(g1.size(), -1);
    std::vector<int> stack{g1.root()};
    map[g1.root()] = g2.root();
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (g1.lab(v) != g2.lab(map[v])) return std::nullopt;
        const auto& av = g1.args(v);
        const auto& bv = g2.args(map[v]);
        for (std::size_t k = 0; k < av.size(); ++k) {
            int w = av[k], wi = bv[k];
            if (map[w] < 0) {
                map[w] = wi;
                stack.push_back(w);
            } else if (map[w] != wi) {
                return std::nullopt;
            }
        }
    }
    if (!check_homomorphism(g1, g2, map)) return std::nullopt;
    return map;
}

std::vector<std::pair<int, int>> bisimulation_witness(const TermGraph& g1,
                                                      const TermGraph& g2) {
    if (g1.sig() != g2.sig()) return {};
    const int n1 = g1.size(), n2 = g2.size();
    // Greatest fixpoint: start from label equality, strip pairs whose indexed
    // successors have already been separated.
    std::vector<char> rel(static_cast<std::size_t>(n1) * n2, 0);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (g1.lab(u) == g2.lab(v)) rel[static_cast<std::size_t>(u) * n2 + v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n2; ++v) {
                auto& r = rel[static_cast<std::size_t>(u) * n2 + v];
                if (!r) continue;
                const auto& au = g1.args(u);
                const auto& av = g2.args(v);
                for (std::size_t k = 0; k < au.size(); ++k)
                    if (!rel[static_cast<std::size_t>(au[k]) * n2 + av[k]]) {
                        r = 0;
                        changed = true;
                        break;
                    }
            }
    }
    if (!rel[static_cast<std::size_t>(g1.root()) * n2 + g2.root()]) return {};
    // Restrict to pairs reachable from the root pair.
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{g1.root(), g2.root()}};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        const auto& au = g1.args(u);
        const auto& av = g2.args(v);
        for (std::size_t k = 0; k < au.size(); ++k) {
            std::pair<int, int> p{au[k], av[k]};
            if (seen.insert(p).second) stack.push_back(p);
        }
    }
    return {seen.begin(), seen.end()};
}

bool are_bisimilar(const TermGraph& g1, const TermGraph& g2) {
    return !bisimulation_witness(g1, g2).empty();
}

bool check_f_homomorphism(const TermGraph& src, const TermGraph& dst, const VertexMap& h,
                          Label f) {
    (void)dst;
    std::map<int, std::vector<int>> pre;
    for (int v = 0; v < src.size(); ++v) pre[h[v]].push_back(v);
    for (const auto& [img, vs] : pre) {
        (void)img;
        if (vs.size() > 1)
            for (int v : vs)
                if (src.lab(v) != f) return false;
    }
    return true;
}

std::optional<VertexMap> are_isomorphic(const TermGraph& g1, const TermGraph& g2) {
    if (g1.size() != g2.size()) return std::nullopt;
    auto h = find_homomorphism(g1, g2);
    if (!h) return std::nullopt;
    std::vector<char> hit(g2.size(), 0);
    for (int v : *h) hit[v] = 1;
    for (char c : hit)
        if (!c) return std::nullopt;
    return h;
}

namespace {

// Coarsest stable refinement of an initial partition (block ids per vertex):
// split blocks by (old block, indexed successor blocks) until stable.
std::vector<int> refine(const TermGraph& g, std::vector<int> block) {
    const int n = g.size();
    for (;;) {
        std::map<std::vector<int>, int> sig_to_block;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{block[v]};
            for (int w : g.args(v)) key.push_back(block[w]);
            auto [it, fresh] =
                sig_to_block.emplace(std::move(key), static_cast<int>(sig_to_block.size()));
            (void)fresh;
            next[v] = it->second;
        }
        if (next == block) return block;
        block = std::move(next);
    }
}

// Quotient graph of a partition (assumed stable / argument-closed), with the
// projection map.  Block representative = first member; its name survives.
std::pair<TermGraph, VertexMap> quotient(const TermGraph& g, const std::vector<int>& block) {
    const int n = g.size();
    std::map<int, int> norm;
    std::vector<int> rep;
    std::vector<int> id(n, -1);
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = norm.emplace(block[v], static_cast<int>(rep.size()));
        if (fresh) rep.push_back(v);
        id[v] = it->second;
    }
    const int m = static_cast<int>(rep.size());
    std::vector<Label> labels(m);
    std::vector<std::vector<int>> args(m);
    std::vector<std::string> names(m);
    for (int b = 0; b < m; ++b) {
        int v = rep[b];
        labels[b] = g.lab(v);
        names[b] = g.name(v);
        for (int w : g.args(v)) args[b].push_back(id[w]);
    }
    TermGraph q = TermGraph::build_indexed(g.sig(), std::move(labels), std::move(args),
                                           id[g.root()], std::move(names));
    return {std::move(q), std::move(id)};
}

}  // namespace

std::pair<TermGraph, VertexMap> collapse(const TermGraph& g) {
    std::vector<int> block(g.size());
    std::map<Label, int> by_label;
    for (int v = 0; v < g.size(); ++v) {
        auto [it, fresh] = by_label.emplace(g.lab(v), static_cast<int>(by_label.size()));
        (void)fresh;
        block[v] = it->second;
    }
    return quotient(g, refine(g, std::move(block)));
}

std::pair<TermGraph, VertexMap> collapse_restricted(const TermGraph& g, Label mergeable) {
    std::vector<int> block(g.size());
    int next = 1;  // block 0 = all mergeable vertices, singletons for the rest
    for (int v = 0; v < g.size(); ++v) block[v] = g.lab(v) == mergeable ? 0 : next++;
    return quotient(g, refine(g, std::move(block)));
}

namespace {

// Merge the blocks of u0 and v0 and close under the argument condition
// (u ~ v implies indexed successors pairwise ~) and label equality.  Returns
// the closed partition with normalized ids, or nullopt on label clash.
std::optional<std::vector<int>> merge_and_close(const TermGraph& g, std::vector<int> block,
                                                int u0, int v0) {
    const int n = g.size();
    std::vector<std::pair<int, int>> todo{{u0, v0}};
    while (!todo.empty()) {
        auto [u, v] = todo.back();
        todo.pop_back();
        int bu = block[u], bv = block[v];
        if (bu == bv) continue;
        if (g.lab(u) != g.lab(v)) return std::nullopt;
        for (int w = 0; w < n; ++w)
            if (block[w] == bv) block[w] = bu;
        // The argument condition must hold blockwise; pairing every member
        // against u suffices (closure handles the rest transitively).
        for (int w = 0; w < n; ++w) {
            if (w != u && block[w] == bu) {
                const auto& aw = g.args(w);
                const auto& au = g.args(u);
                for (std::size_t k = 0; k < aw.size(); ++k)
                    if (block[aw[k]] != block[au[k]]) todo.push_back({aw[k], au[k]});
            }
        }
    }
    std::map<int, int> norm;
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = norm.emplace(block[v], static_cast<int>(norm.size()));
        (void)fresh;
        out[v] = it->second;
    }
    return out;
}

}  // namespace

std::vector<std::pair<TermGraph, VertexMap>> enumerate_images(const TermGraph& g, int bound) {
    if (g.size() > bound)
        throw Error("SizeBound", "graph has " + std::to_string(g.size()) +
                                     " vertices, enumeration bound is " + std::to_string(bound));
    const int n = g.size();
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> queue{identity};
    std::vector<std::pair<TermGraph, VertexMap>> images;
    std::set<std::string> image_keys;

    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> part = queue[head];
        auto [q, h] = quotient(g, part);
        if (image_keys.insert(q.canonical_key()).second)
            images.emplace_back(std::move(q), std::move(h));
        // All single-merge extensions of this congruence.
        int blocks = *std::max_element(part.begin(), part.end()) + 1;
        std::vector<int> rep(blocks, -1);
        for (int v = 0; v < n; ++v)
            if (rep[part[v]] < 0) rep[part[v]] = v;
        for (int a = 0; a < blocks; ++a)
            for (int b = a + 1; b < blocks; ++b) {
                if (g.lab(rep[a]) != g.lab(rep[b])) continue;
                auto merged = merge_and_close(g, part, rep[a], rep[b]);
                if (merged && seen.insert(*merged).second) queue.push_back(std::move(*merged));
            }
    }
    return images;
}

bool check_lattice(const std::vector<TermGraph>& images) {
    std::vector<const TermGraph*> gs;
    std::set<std::string> keys;
    for (const auto& g : images)
        if (keys.insert(g.canonical_key()).second) gs.push_back(&g);
    const int m = static_cast<int>(gs.size());
    // leq[a][b] : a admits a homomorphism onto b (b is at least as shared).
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            leq[a][b] = find_homomorphism(*gs[a], *gs[b]).has_value() ? 1 : 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool has_lub = false, has_glb = false;
            for (int c = 0; c < m && !has_lub; ++c) {
                if (!(leq[a][c] && leq[b][c])) continue;
                bool least = true;
                for (int d = 0; d < m; ++d)
                    if (leq[a][d] && leq[b][d] && !leq[c][d]) {
                        least = false;
                        break;
                    }
                has_lub = least;
            }
            for (int c = 0; c < m && !has_glb; ++c) {
                if (!(leq[c][a] && leq[c][b])) continue;
                bool greatest = true;
                for (int d = 0; d < m; ++d)
                    if (leq[d][a] && leq[d][b] && !leq[d][c]) {
                        greatest = false;
                        break;
                    }
                has_glb = greatest;
            }
            if (!has_lub || !has_glb) return false;
        }
    return true;
}

}  // namespace ltg
