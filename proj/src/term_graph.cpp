#include "ltg/term_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ltg {

const char* label_name(Label l) {
    switch (l) {
        case Label::App: return "app";
        case Label::Lam: return "lam";
        case Label::Var: return "var";
        case Label::Del: return "del";
    }
    return "?";
}

std::optional<Label> label_from_name(const std::string& s) {
    if (s == "app") return Label::App;
    if (s == "lam") return Label::Lam;
    if (s == "var") return Label::Var;
    if (s == "del") return Label::Del;
    return std::nullopt;
}

std::string Signature::name() const {
    switch (kind) {
        case Kind::L: return "l";
        case Kind::L0: return "l0";
        case Kind::L1: return "l1";
        case Kind::L01: return "l01";
        case Kind::L02: return "l02";
        case Kind::L11: return "l11";
        case Kind::L12: return "l12";
    }
    return "?";
}

Signature Signature::from_name(const std::string& s) {
    if (s == "l") return Signature(Kind::L);
    if (s == "l0") return Signature(Kind::L0);
    if (s == "l1") return Signature(Kind::L1);
    if (s == "l01") return Signature(Kind::L01);
    if (s == "l02") return Signature(Kind::L02);
    if (s == "l11") return Signature(Kind::L11);
    if (s == "l12") return Signature(Kind::L12);
    throw Error("BadSignature", "unknown signature kind '" + s + "'");
}

Signature Signature::with_delimiters(int j) const {
    if (j != 1 && j != 2) throw Error("BadSignature", "delimiter arity must be 1 or 2");
    switch (kind) {
        case Kind::L0:
        case Kind::L01:
        case Kind::L02: return Signature(j == 1 ? Kind::L01 : Kind::L02);
        case Kind::L1:
        case Kind::L11:
        case Kind::L12: return Signature(j == 1 ? Kind::L11 : Kind::L12);
        default: throw Error("BadSignature", "signature has no variable vertices");
    }
}

Signature Signature::without_delimiters() const {
    switch (kind) {
        case Kind::L01:
        case Kind::L02: return Signature(Kind::L0);
        case Kind::L11:
        case Kind::L12: return Signature(Kind::L1);
        default: return *this;
    }
}

TermGraph TermGraph::build(const Signature& sig, const std::vector<VertexSpec>& vertices,
                           const std::string& root_name) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!index.emplace(vertices[i].name, static_cast<int>(i)).second)
            throw Error("DuplicateVertex", "vertex '" + vertices[i].name + "' declared twice");
    }
    auto root_it = index.find(root_name);
    if (root_name.empty() || root_it == index.end())
        throw Error("MissingRoot", "root '" + root_name + "' is not a declared vertex");

    std::vector<Label> labels(vertices.size());
    std::vector<std::vector<int>> args(vertices.size());
    std::vector<std::string> names(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VertexSpec& v = vertices[i];
        if (!sig.has_label(v.label))
            throw Error("BadLabel", "label '" + std::string(label_name(v.label)) +
                                        "' not in signature " + sig.name() +
                                        " (vertex '" + v.name + "')");
        if (static_cast<int>(v.args.size()) != sig.arity(v.label))
            throw Error("ArityMismatch",
                        "vertex '" + v.name + "' with label " + label_name(v.label) +
                            " has " + std::to_string(v.args.size()) + " arguments, expected " +
                            std::to_string(sig.arity(v.label)));
        labels[i] = v.label;
        names[i] = v.name;
        for (std::size_t k = 0; k < v.args.size(); ++k) {
            auto it = index.find(v.args[k]);
            if (it == index.end())
                throw Error("DanglingEdge", "vertex '" + v.name + "' argument " +
                                                std::to_string(k) + " references undeclared '" +
                                                v.args[k] + "'");
            args[i].push_back(it->second);
        }
    }
    return build_indexed(sig, std::move(labels), std::move(args), root_it->second,
                         std::move(names));
}

TermGraph TermGraph::build_indexed(const Signature& sig, std::vector<Label> labels,
                                   std::vector<std::vector<int>> args, int root,
                                   std::vector<std::string> names) {
    const int n = static_cast<int>(labels.size());
    if (root < 0 || root >= n) throw Error("MissingRoot", "root index out of range");
    if (names.empty()) {
        names.resize(n);
        for (int v = 0; v < n; ++v) names[v] = "v" + std::to_string(v);
    }
    for (int v = 0; v < n; ++v) {
        if (!sig.has_label(labels[v]))
            throw Error("BadLabel", "label '" + std::string(label_name(labels[v])) +
                                        "' not in signature " + sig.name());
        if (static_cast<int>(args[v].size()) != sig.arity(labels[v]))
            throw Error("ArityMismatch", "vertex '" + names[v] + "' arity mismatch");
        for (int w : args[v])
            if (w < 0 || w >= n)
                throw Error("DanglingEdge", "vertex '" + names[v] + "' has out-of-range edge");
    }
    // Root-connectedness.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : args[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw Error("UnreachableVertex", "vertex '" + names[v] + "' unreachable from root");

    TermGraph g;
    g.sig_ = sig;
    g.labels_ = std::move(labels);
    g.args_ = std::move(args);
    g.names_ = std::move(names);
    g.root_ = root;
    return g;
}

std::optional<int> TermGraph::vertex_by_name(const std::string& n) const {
    for (int v = 0; v < size(); ++v)
        if (names_[v] == n) return v;
    return std::nullopt;
}

std::vector<int> TermGraph::vertices_with(Label l) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (labels_[v] == l) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> TermGraph::access_paths(int w, std::size_t limit) const {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> onpath(size(), 0);
    // Depth-first enumeration of simple root paths; desk-scale graphs only.
    auto rec = [&](auto&& self, int v) -> bool {
        path.push_back(v);
        onpath[v] = 1;
        if (v == w) {
            out.push_back(path);
            if (out.size() >= limit) return false;
        } else {
            for (int u : args_[v])
                if (!onpath[u])
                    if (!self(self, u)) return false;
        }
        onpath[v] = 0;
        path.pop_back();
        return true;
    };
    rec(rec, root_);
    return out;
}

std::vector<int> TermGraph::canonical_order() const {
    std::vector<int> order;
    std::vector<int> number(size(), -1);
    order.reserve(size());
    number[root_] = 0;
    order.push_back(root_);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int w : args_[order[head]]) {
            if (number[w] < 0) {
                number[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    return order;
}

std::string TermGraph::canonical_key() const {
    std::vector<int> order = canonical_order();
    std::vector<int> number(size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<int>(i);
    std::ostringstream os;
    os << sig_.name() << ';';
    for (int v : order) {
        os << label_name(labels_[v]);
        for (int w : args_[v]) os << ' ' << number[w];
        os << ';';
    }
    return os.str();
}

TermGraph TermGraph::canonicalized() const {
    std::vector<int> order = canonical_order();
    std::vector<int> number(size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<int>(i);
    std::vector<Label> labels(size());
    std::vector<std::vector<int>> args(size());
    std::vector<std::string> names(size());
    for (int v = 0; v < size(); ++v) {
        int nv = number[v];
        labels[nv] = labels_[v];
        names[nv] = names_[v];
        for (int w : args_[v]) args[nv].push_back(number[w]);
    }
    return build_indexed(sig_, std::move(labels), std::move(args), 0, std::move(names));
}

}  // namespace ltg
