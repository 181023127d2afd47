#include "ltg/transforms.hpp"

#include <algorithm>

namespace ltg {

ApHoTermGraph scopes_to_prefixes(const HoTermGraph& h) {
    ApHoTermGraph a{h.g, PrefixFn{}};
    a.P.P.assign(h.g.size(), std::nullopt);
    for (int w = 0; w < h.g.size(); ++w) {
        std::vector<int> p = binders(h, w);
        p.erase(std::remove(p.begin(), p.end(), w), p.end());
        a.P.P[w] = std::move(p);
    }
    return a;
}

HoTermGraph prefixes_to_scopes(const ApHoTermGraph& a) {
    HoTermGraph h{a.g, {}};
    h.scopes.assign(a.g.size(), {});
    for (int v : a.g.vertices_with(Label::Lam)) h.scopes[v].push_back(v);
    for (int w = 0; w < a.g.size(); ++w)
        for (int v : a.P.at(w)) h.scopes[v].push_back(w);
    for (auto& sc : h.scopes) {
        std::sort(sc.begin(), sc.end());
        sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
    }
    return h;
}

TermGraph insert_delimiters(const ApHoTermGraph& a, int j) {
    const TermGraph& g = a.g;
    const Signature out_sig = g.sig().with_delimiters(j);
    const int n = g.size();

    std::vector<TermGraph::VertexSpec> specs(n);
    for (int v = 0; v < n; ++v) {
        specs[v].name = g.name(v);
        specs[v].label = g.lab(v);
        specs[v].args.assign(g.args(v).size(), "");
    }
    // Delimiter chains are spawned on lam and app edges only; a chain entry
    // carries the prefix word `p` it is correct at, and (for j = 2) back-links
    // to the abstraction closed there, i.e. the last entry of `p`.
    for (int w = 0; w < n; ++w) {
        const auto& args = g.args(w);
        for (std::size_t k = 0; k < args.size(); ++k) {
            int wk = args[k];
            std::vector<int> top;
            switch (g.lab(w)) {
                case Label::Lam:
                    top = a.P.at(w);
                    top.push_back(w);
                    break;
                case Label::App:
                    top = a.P.at(w);
                    break;
                default:
                    specs[w].args[k] = g.name(wk);
                    continue;
            }
            const std::vector<int>& bottom = a.P.at(wk);
            const int dels = static_cast<int>(top.size()) - static_cast<int>(bottom.size());
            if (dels <= 0) {
                specs[w].args[k] = g.name(wk);
                continue;
            }
            std::string below = g.name(wk);
            // Build the chain bottom-up; the entry at prefix length L closes
            // the abstraction top[L-1].
            for (int len = static_cast<int>(bottom.size()) + 1;
                 len <= static_cast<int>(top.size()); ++len) {
                TermGraph::VertexSpec d;
                d.name = g.name(w) + ":" + std::to_string(k) + ":" + std::to_string(len);
                d.label = Label::Del;
                d.args.push_back(below);
                if (j == 2) d.args.push_back(g.name(top[len - 1]));
                below = d.name;
                specs.push_back(std::move(d));
            }
            specs[w].args[k] = below;
        }
    }
    return TermGraph::build(out_sig, specs, g.name(g.root()));
}

ApHoTermGraph erase_delimiters(const TermGraph& g) {
    std::optional<PrefixFn> P = infer_prefix(g);
    if (!P) throw Error("NotALambdaTG", "graph admits no correct abstraction-prefix function");

    const int n = g.size();
    std::vector<int> newid(n, -1);
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (g.lab(v) != Label::Del) {
            newid[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    // Skip across delimiter chains; prefix lengths strictly decrease along a
    // chain, so chains are acyclic.
    auto chase = [&](int v) {
        while (g.lab(v) == Label::Del) v = g.args(v)[0];
        return v;
    };
    std::vector<Label> labels;
    std::vector<std::vector<int>> args;
    std::vector<std::string> names;
    for (int v : kept) {
        labels.push_back(g.lab(v));
        names.push_back(g.name(v));
        std::vector<int> row;
        for (int w : g.args(v)) row.push_back(newid[chase(w)]);
        args.push_back(std::move(row));
    }
    ApHoTermGraph out{TermGraph::build_indexed(g.sig().without_delimiters(), std::move(labels),
                                               std::move(args), newid[g.root()],
                                               std::move(names)),
                      PrefixFn{}};
    out.P.P.assign(kept.size(), std::nullopt);
    for (int v : kept) {
        std::vector<int> word;
        for (int u : P->at(v)) word.push_back(newid[u]);
        out.P.P[newid[v]] = std::move(word);
    }
    return out;
}

TermGraph forget_scoping(const HoTermGraph& h) { return h.g; }
TermGraph forget_scoping(const ApHoTermGraph& a) { return a.g; }

std::pair<TermGraph, VertexMap> s_collapse(const TermGraph& g) {
    return collapse_restricted(g, Label::Del);
}

HoTermGraph max_share_pipeline(const HoTermGraph& h, bool eager_required,
                               std::vector<std::string>* warnings) {
    if (auto d = validate_ho_diag(h); !d.ok)
        throw Error("InvalidHoGraph", "scope function violates " + d.condition);
    if (!h.g.sig().has_var() || h.g.sig().var_arity() != 1)
        throw Error("UnsupportedSignature", "pipeline needs var back-links (signature l1)");
    ApHoTermGraph a = scopes_to_prefixes(h);
    TermGraph g = insert_delimiters(a, 2);
    std::optional<PrefixFn> P = infer_prefix(g);
    if (!P) throw Error("NotALambdaTG", "inserted graph lost the prefix discipline");
    if (!is_eager_scope(g, *P)) {
        if (eager_required)
            throw Error("NotEagerScope",
                        "first-order form is not eager-scope; collapse may leave the class");
        if (warnings)
            warnings->push_back(
                "input is not eager-scope: collapse is not guaranteed to stay in class");
    }
    TermGraph collapsed = collapse(g).first;
    if (!infer_prefix(collapsed))
        throw Error("CollapseLeftClass",
                    "collapsed graph is no longer a lambda term graph");
    return prefixes_to_scopes(erase_delimiters(collapsed));
}

}  // namespace ltg
