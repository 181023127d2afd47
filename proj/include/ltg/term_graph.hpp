#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltg/error.hpp"

namespace ltg {

// Vertex labels of the lambda signatures: application, abstraction,
// variable occurrence, scope delimiter.
enum class Label : std::uint8_t { App, Lam, Var, Del };

const char* label_name(Label l);
std::optional<Label> label_from_name(const std::string& s);

// The family of signatures.  The base signature has only app/lam; the "_i"
// variants add variable-occurrence vertices of arity i (i = 1 means a
// back-link to the binding abstraction); the "_(i,j)" variants additionally
// have scope-delimiter vertices of arity j (j = 2 means a back-link to the
// abstraction whose scope the delimiter closes).
struct Signature {
    enum class Kind : std::uint8_t { L, L0, L1, L01, L02, L11, L12 };

    Kind kind = Kind::L12;

    Signature() = default;
    explicit Signature(Kind k) : kind(k) {}

    bool has_var() const { return kind != Kind::L; }
    bool has_del() const {
        return kind == Kind::L01 || kind == Kind::L02 || kind == Kind::L11 ||
               kind == Kind::L12;
    }
    // Arity of var vertices (0 or 1); only meaningful when has_var().
    int var_arity() const {
        return (kind == Kind::L1 || kind == Kind::L11 || kind == Kind::L12) ? 1 : 0;
    }
    // Arity of del vertices (1 or 2); only meaningful when has_del().
    int del_arity() const { return (kind == Kind::L02 || kind == Kind::L12) ? 2 : 1; }

    bool has_label(Label l) const {
        switch (l) {
            case Label::App:
            case Label::Lam: return true;
            case Label::Var: return has_var();
            case Label::Del: return has_del();
        }
        return false;
    }

    int arity(Label l) const {
        switch (l) {
            case Label::App: return 2;
            case Label::Lam: return 1;
            case Label::Var: return var_arity();
            case Label::Del: return del_arity();
        }
        return 0;
    }

    // Short names used in the textual format: l, l0, l1, l01, l02, l11, l12.
    std::string name() const;
    static Signature from_name(const std::string& s);  // throws Error("BadSignature")

    // The delimiter extension of a delimiter-free signature (var arity kept).
    Signature with_delimiters(int j) const;
    // The delimiter-free signature underlying a delimiter signature.
    Signature without_delimiters() const;

    bool operator==(const Signature&) const = default;
};

// A finite, root-connected, ordered-successor term graph.  Immutable after
// construction.  Vertices are dense indices 0..size()-1; every vertex keeps
// the external name it was declared with.
class TermGraph {
public:
    struct VertexSpec {
        std::string name;
        Label label;
        std::vector<std::string> args;
    };

    // Validates arities, resolves names, and checks root-connectedness.
    // Errors: ArityMismatch, DanglingEdge, MissingRoot, UnreachableVertex,
    // BadLabel (label not in signature), DuplicateVertex.
    static TermGraph build(const Signature& sig, const std::vector<VertexSpec>& vertices,
                           const std::string& root_name);

    // Convenience builder used heavily in tests/transforms: vertices given as
    // index-based rows (already dense); names auto-derived when empty.
    static TermGraph build_indexed(const Signature& sig, std::vector<Label> labels,
                                   std::vector<std::vector<int>> args, int root,
                                   std::vector<std::string> names = {});

    const Signature& sig() const { return sig_; }
    int size() const { return static_cast<int>(labels_.size()); }
    Label lab(int v) const { return labels_[v]; }
    const std::vector<int>& args(int v) const { return args_[v]; }
    int root() const { return root_; }
    const std::string& name(int v) const { return names_[v]; }
    std::optional<int> vertex_by_name(const std::string& n) const;

    // All vertices carrying a given label.
    std::vector<int> vertices_with(Label l) const;

    // All simple paths (no repeated vertex) from the root to w, each as the
    // vertex sequence root..w.  `limit` caps the number of paths returned.
    std::vector<std::vector<int>> access_paths(int w, std::size_t limit = 100000) const;

    // Canonical form: breadth-first renumbering from the root, successors in
    // argument order.  Two graphs are isomorphic iff their canonical keys are
    // equal (ordered deterministic successors make the traversal rigid).
    std::string canonical_key() const;
    // The canonical BFS order itself (order[i] = i-th discovered vertex).
    std::vector<int> canonical_order() const;
    // A copy whose vertex numbering and stored order is canonical.
    TermGraph canonicalized() const;

private:
    TermGraph() = default;
    Signature sig_;
    std::vector<Label> labels_;
    std::vector<std::vector<int>> args_;
    std::vector<std::string> names_;
    int root_ = 0;
};

}  // namespace ltg
