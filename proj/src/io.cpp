#include "ltg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ltg {

namespace {

std::vector<std::vector<std::string>> tokenized_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

}  // namespace

ParsedGraph parse_tg(const std::string& text) {
    auto lines = tokenized_lines(text);
    if (lines.empty() || lines[0][0] != "tg" || lines[0].size() != 2)
        throw Error("SyntaxError", "expected header line 'tg <sigkind>'");
    Signature sig = Signature::from_name(lines[0][1]);

    std::vector<TermGraph::VertexSpec> specs;
    std::string root;
    std::vector<std::vector<std::string>> scope_lines, prefix_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0] == "root") {
            if (toks.size() != 2 || !root.empty())
                throw Error("SyntaxError", "malformed or repeated root line");
            root = toks[1];
        } else if (toks[0] == "scope") {
            if (toks.size() < 2) throw Error("SyntaxError", "malformed scope line");
            scope_lines.push_back(toks);
        } else if (toks[0] == "prefix") {
            if (toks.size() < 2) throw Error("SyntaxError", "malformed prefix line");
            prefix_lines.push_back(toks);
        } else {
            if (toks.size() < 2) throw Error("SyntaxError", "malformed vertex line");
            auto lab = label_from_name(toks[1]);
            if (!lab)
                throw Error("SyntaxError", "unknown label '" + toks[1] + "'");
            TermGraph::VertexSpec v;
            v.name = toks[0];
            v.label = *lab;
            v.args.assign(toks.begin() + 2, toks.end());
            specs.push_back(std::move(v));
        }
    }
    if (root.empty()) throw Error("MissingRoot", "no root line");
    ParsedGraph out{TermGraph::build(sig, specs, root), std::nullopt, std::nullopt};
    if (!scope_lines.empty() && !prefix_lines.empty())
        throw Error("SyntaxError", "file mixes scope and prefix lines");

    auto vertex = [&](const std::string& n) {
        auto v = out.g.vertex_by_name(n);
        if (!v) throw Error("DanglingEdge", "undeclared vertex '" + n + "' in scoping line");
        return *v;
    };
    if (!scope_lines.empty()) {
        std::vector<std::vector<int>> scopes(out.g.size());
        for (const auto& toks : scope_lines) {
            int lam = vertex(toks[1]);
            for (std::size_t k = 2; k < toks.size(); ++k)
                scopes[lam].push_back(vertex(toks[k]));
        }
        for (auto& sc : scopes) {
            std::sort(sc.begin(), sc.end());
            sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
        }
        out.scopes = std::move(scopes);
    }
    if (!prefix_lines.empty()) {
        PrefixFn P;
        P.P.assign(out.g.size(), std::nullopt);
        for (const auto& toks : prefix_lines) {
            int w = vertex(toks[1]);
            std::vector<int> word;
            for (std::size_t k = 2; k < toks.size(); ++k) word.push_back(vertex(toks[k]));
            P.P[w] = std::move(word);
        }
        // Vertices without a prefix line default to the empty word, except
        // delimiters, which have no prefix in the relaxed discipline; a full
        // function is assumed when the signature has no delimiters.
        for (int v = 0; v < out.g.size(); ++v)
            if (!P.P[v] && out.g.lab(v) != Label::Del) P.P[v] = std::vector<int>{};
        P.relaxed = out.g.sig().has_del();
        out.prefix = std::move(P);
    }
    return out;
}

namespace {

void print_carrier(std::ostringstream& os, const TermGraph& g) {
    os << "tg " << g.sig().name() << "\n";
    for (int v : g.canonical_order()) {
        os << g.name(v) << ' ' << label_name(g.lab(v));
        for (int w : g.args(v)) os << ' ' << g.name(w);
        os << "\n";
    }
    os << "root " << g.name(g.root()) << "\n";
}

}  // namespace

std::string print_tg(const TermGraph& g) {
    std::ostringstream os;
    print_carrier(os, g);
    return os.str();
}

std::string print_tg(const HoTermGraph& h) {
    std::ostringstream os;
    print_carrier(os, h.g);
    for (int v : h.g.canonical_order()) {
        if (h.g.lab(v) != Label::Lam) continue;
        os << "scope " << h.g.name(v);
        for (int w : h.scopes[v]) os << ' ' << h.g.name(w);
        os << "\n";
    }
    return os.str();
}

std::string print_tg(const ApHoTermGraph& a) {
    std::ostringstream os;
    print_carrier(os, a.g);
    for (int v : a.g.canonical_order()) {
        if (!a.P.defined(v)) continue;
        os << "prefix " << a.g.name(v);
        for (int w : a.P.at(v)) os << ' ' << a.g.name(w);
        os << "\n";
    }
    return os.str();
}

std::string to_dot(const TermGraph& g, const std::vector<std::vector<int>>* scopes) {
    std::ostringstream os;
    os << "digraph tg {\n  node [shape=circle];\n";
    const int n = g.size();
    auto node_line = [&](int v) {
        os << "  \"" << g.name(v) << "\" [label=\"" << g.name(v) << "\\n"
           << label_name(g.lab(v)) << "\"];\n";
    };
    std::vector<char> emitted(n, 0);
    if (scopes) {
        // Scopes are properly nested; emit each vertex inside the cluster of
        // its innermost enclosing scope, clusters nested accordingly.
        auto smallest_scope_of = [&](int w) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (g.lab(v) != Label::Lam) continue;
                const auto& sc = (*scopes)[v];
                if (!std::binary_search(sc.begin(), sc.end(), w)) continue;
                if (w == v) continue;  // the binder itself belongs to the outer level
                if (best < 0 || sc.size() < (*scopes)[best].size()) best = v;
            }
            return best;
        };
        std::vector<int> owner(n);
        for (int w = 0; w < n; ++w) owner[w] = smallest_scope_of(w);
        auto emit_cluster = [&](auto&& self, int lam, int depth) -> void {
            std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
            os << pad << "subgraph \"cluster_" << g.name(lam) << "\" {\n"
               << pad << "  style=filled; color=lightgrey; fillcolor=\"#eeeeee\";\n";
            node_line(lam);
            emitted[lam] = 1;
            for (int w = 0; w < n; ++w)
                if (!emitted[w] && owner[w] == lam && g.lab(w) != Label::Lam) {
                    node_line(w);
                    emitted[w] = 1;
                }
            for (int v = 0; v < n; ++v)
                if (!emitted[v] && g.lab(v) == Label::Lam && owner[v] == lam)
                    self(self, v, depth + 1);
            os << pad << "}\n";
        };
        for (int v = 0; v < n; ++v)
            if (!emitted[v] && g.lab(v) == Label::Lam && owner[v] < 0)
                emit_cluster(emit_cluster, v, 1);
    }
    for (int v = 0; v < n; ++v)
        if (!emitted[v]) node_line(v);
    const int i = g.sig().has_var() ? g.sig().var_arity() : 0;
    const int j = g.sig().has_del() ? g.sig().del_arity() : 0;
    for (int v = 0; v < n; ++v) {
        const auto& a = g.args(v);
        for (std::size_t k = 0; k < a.size(); ++k) {
            bool backlink = (g.lab(v) == Label::Var && i == 1 && k == 0) ||
                            (g.lab(v) == Label::Del && j == 2 && k == 1);
            os << "  \"" << g.name(v) << "\" -> \"" << g.name(a[k]) << "\" [label=\"" << k
               << "\"" << (backlink ? ", style=dashed" : "") << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace ltg
