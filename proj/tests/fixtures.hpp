#pragma once

// Shared fixture catalog: small graphs with known classifications, used as
// exact oracles across the test suite.

#include <algorithm>

#include "ltg/ho_graph.hpp"
#include "ltg/term_graph.hpp"

namespace fixtures {

using ltg::Label;
using ltg::Signature;
using ltg::TermGraph;
using V = ltg::TermGraph::VertexSpec;

// Graph of \x.x over the given signature (default: back-links + delimiters).
inline TermGraph fix_id(Signature sig = Signature(Signature::Kind::L12)) {
    std::vector<V> vs;
    if (sig.has_var() && sig.var_arity() == 1)
        vs = {{"r", Label::Lam, {"v"}}, {"v", Label::Var, {"r"}}};
    else
        vs = {{"r", Label::Lam, {"v"}}, {"v", Label::Var, {}}};
    return TermGraph::build(sig, vs, "r");
}

// Nameless (\.0)(\.0): three sharing stages.  G2 = syntax tree; G1 shares the
// variable vertex under two distinct abstractions (invalid scoping); G0
// shares the whole abstraction subgraph (valid).  G2 -> G1 -> G0.
struct FixDb2 {
    TermGraph G2, G1, G0;
};

inline FixDb2 fix_db2() {
    Signature s(Signature::Kind::L0);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"v1"}},
                          {"l2", Label::Lam, {"v2"}},
                          {"v1", Label::Var, {}},
                          {"v2", Label::Var, {}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"v"}},
                          {"l2", Label::Lam, {"v"}},
                          {"v", Label::Var, {}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l", "l"}},
                          {"l", Label::Lam, {"v"}},
                          {"v", Label::Var, {}}},
                         "a"),
    };
}

// Back-link variant: (\x.x)(\y.y) with the single variable vertex shared
// between two distinct abstractions (G1p, invalid over the back-link
// signature) and its image with the abstractions merged (G0p, valid).
struct FixG1Prime {
    TermGraph G1p, G0p;
};

inline FixG1Prime fix_g1prime() {
    Signature s(Signature::Kind::L1);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"v"}},
                          {"l2", Label::Lam, {"v"}},
                          {"v", Label::Var, {"l1"}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l", "l"}},
                          {"l", Label::Lam, {"v"}},
                          {"v", Label::Var, {"l"}}},
                         "a"),
    };
}

// One-argument-delimiter signature: two structurally distinct abstraction
// branches each close their scope with their own (bisimilar) delimiter in
// front of a shared closed subgraph.  Merging the delimiters (an
// S-homomorphism) would force one delimiter to close two different scopes.
struct FixG0pp {
    TermGraph G1pp, G0pp;
};

inline FixG0pp fix_g0pp() {
    Signature s(Signature::Kind::L11);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"s1"}},
                          {"s1", Label::Del, {"b"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"v2", "s2"}},
                          {"v2", Label::Var, {"l2"}},
                          {"s2", Label::Del, {"b"}},
                          {"b", Label::Lam, {"vb"}},
                          {"vb", Label::Var, {"b"}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"s"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"v2", "s"}},
                          {"v2", Label::Var, {"l2"}},
                          {"s", Label::Del, {"b"}},
                          {"b", Label::Lam, {"vb"}},
                          {"vb", Label::Var, {"b"}}},
                         "a"),
    };
}

// Full signature, non-eager: each branch holds a copy of \y.y whose prefix
// still carries the outer binder (scope closed late).  The copies are
// bisimilar; merging them (G3_0) creates a prefix conflict.
struct FixG3 {
    TermGraph G3_1, G3_0;
};

inline FixG3 fix_g3() {
    Signature s(Signature::Kind::L12);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"a1"}},
                          {"a1", Label::App, {"u1", "b1"}},
                          {"u1", Label::Var, {"l1"}},
                          {"b1", Label::Lam, {"v1"}},
                          {"v1", Label::Var, {"b1"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"b2", "u2"}},
                          {"u2", Label::Var, {"l2"}},
                          {"b2", Label::Lam, {"v2"}},
                          {"v2", Label::Var, {"b2"}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"a1"}},
                          {"a1", Label::App, {"u1", "b"}},
                          {"u1", Label::Var, {"l1"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"b", "u2"}},
                          {"u2", Label::Var, {"l2"}},
                          {"b", Label::Lam, {"v"}},
                          {"v", Label::Var, {"b"}}},
                         "a"),
    };
}

// Eager repair of fix_g3: delimiters (with back-links) close the outer scopes
// right before the inner \y.y copies; the bisimulation collapse T0 merges the
// copies and is again valid (and eager).
struct FixTilde {
    TermGraph T1, T0;
};

inline FixTilde fix_tilde() {
    Signature s(Signature::Kind::L12);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"a1"}},
                          {"a1", Label::App, {"u1", "s1"}},
                          {"u1", Label::Var, {"l1"}},
                          {"s1", Label::Del, {"b1", "l1"}},
                          {"b1", Label::Lam, {"v1"}},
                          {"v1", Label::Var, {"b1"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"s2", "u2"}},
                          {"s2", Label::Del, {"b2", "l2"}},
                          {"u2", Label::Var, {"l2"}},
                          {"b2", Label::Lam, {"v2"}},
                          {"v2", Label::Var, {"b2"}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"a1"}},
                          {"a1", Label::App, {"u1", "s1"}},
                          {"u1", Label::Var, {"l1"}},
                          {"s1", Label::Del, {"b", "l1"}},
                          {"l2", Label::Lam, {"a2"}},
                          {"a2", Label::App, {"s2", "u2"}},
                          {"s2", Label::Del, {"b", "l2"}},
                          {"u2", Label::Var, {"l2"}},
                          {"b", Label::Lam, {"v"}},
                          {"v", Label::Var, {"b"}}},
                         "a"),
    };
}

// Delimiter sharing: the same prefixed graph GG (\x.(x b)(x b) with a shared
// closed subgraph b) arises by erasure both from Gp (one delimiter per use
// site) and from G (the delimiters shared).  Gp -> G is an S-homomorphism.
struct FixSShare {
    ltg::ApHoTermGraph GG;  // delimiter-free, with its prefix function
    TermGraph Gp, G;
};

inline FixSShare fix_sshare() {
    Signature s0(Signature::Kind::L0);
    Signature s(Signature::Kind::L01);
    TermGraph carrier = TermGraph::build(s0,
                                         {{"l", Label::Lam, {"a"}},
                                          {"a", Label::App, {"c1", "c2"}},
                                          {"c1", Label::App, {"x1", "b"}},
                                          {"c2", Label::App, {"x2", "b"}},
                                          {"x1", Label::Var, {}},
                                          {"x2", Label::Var, {}},
                                          {"b", Label::Lam, {"vb"}},
                                          {"vb", Label::Var, {}}},
                                         "l");
    ltg::ApHoTermGraph gg{carrier, {}};
    gg.P.P.assign(carrier.size(), std::nullopt);
    auto at = [&](const std::string& n) { return *carrier.vertex_by_name(n); };
    gg.P.P[at("l")] = std::vector<int>{};
    gg.P.P[at("a")] = std::vector<int>{at("l")};
    gg.P.P[at("c1")] = std::vector<int>{at("l")};
    gg.P.P[at("c2")] = std::vector<int>{at("l")};
    gg.P.P[at("x1")] = std::vector<int>{at("l")};
    gg.P.P[at("x2")] = std::vector<int>{at("l")};
    gg.P.P[at("b")] = std::vector<int>{};
    gg.P.P[at("vb")] = std::vector<int>{at("b")};
    return {
        gg,
        TermGraph::build(s,
                         {{"l", Label::Lam, {"a"}},
                          {"a", Label::App, {"c1", "c2"}},
                          {"c1", Label::App, {"x1", "s1"}},
                          {"c2", Label::App, {"x2", "s2"}},
                          {"s1", Label::Del, {"b"}},
                          {"s2", Label::Del, {"b"}},
                          {"x1", Label::Var, {}},
                          {"x2", Label::Var, {}},
                          {"b", Label::Lam, {"vb"}},
                          {"vb", Label::Var, {}}},
                         "l"),
        TermGraph::build(s,
                         {{"l", Label::Lam, {"a"}},
                          {"a", Label::App, {"c1", "c2"}},
                          {"c1", Label::App, {"x1", "s"}},
                          {"c2", Label::App, {"x2", "s"}},
                          {"s", Label::Del, {"b"}},
                          {"x1", Label::Var, {}},
                          {"x2", Label::Var, {}},
                          {"b", Label::Lam, {"vb"}},
                          {"vb", Label::Var, {}}},
                         "l"),
    };
}

// A single delimiter shared between two scopes: not a lambda term graph (the
// delimiter would need two different prefixes) but valid under the relaxed
// discipline.  G1sb is the unshared (valid) counterpart.
struct FixSb {
    TermGraph G1sb, G0sb;
};

inline FixSb fix_sb() {
    Signature s(Signature::Kind::L01);
    return {
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"s1"}},
                          {"l2", Label::Lam, {"s2"}},
                          {"s1", Label::Del, {"b"}},
                          {"s2", Label::Del, {"b"}},
                          {"b", Label::Lam, {"v"}},
                          {"v", Label::Var, {}}},
                         "a"),
        TermGraph::build(s,
                         {{"a", Label::App, {"l1", "l2"}},
                          {"l1", Label::Lam, {"s"}},
                          {"l2", Label::Lam, {"s"}},
                          {"s", Label::Del, {"b"}},
                          {"b", Label::Lam, {"v"}},
                          {"v", Label::Var, {}}},
                         "a"),
    };
}

// The running example  letrec f = \x.(\y. y (x g)) (\z. g f); g = \u.u in f :
// one shared carrier, scope/prefix variants (eager H0/A0 vs late-closing
// H1/A1), and the two first-order forms G0 (eager) / G1 (late).
struct FixRun {
    TermGraph carrier;  // over the back-link signature without delimiters
    ltg::HoTermGraph H0, H1;
    ltg::ApHoTermGraph A0, A1;
    TermGraph G0, G1;
    static constexpr const char* source =
        "letrec f = \\x.(\\y. y (x g)) (\\z. g f); g = \\u. u in f";
};

inline FixRun fix_run() {
    Signature s1(Signature::Kind::L1);
    Signature s12(Signature::Kind::L12);
    TermGraph carrier = TermGraph::build(s1,
                                         {{"lx", Label::Lam, {"ap0"}},
                                          {"ap0", Label::App, {"ly", "lz"}},
                                          {"ly", Label::Lam, {"ap1"}},
                                          {"ap1", Label::App, {"vy", "ap2"}},
                                          {"vy", Label::Var, {"ly"}},
                                          {"ap2", Label::App, {"vx", "lu"}},
                                          {"vx", Label::Var, {"lx"}},
                                          {"lu", Label::Lam, {"vu"}},
                                          {"vu", Label::Var, {"lu"}},
                                          {"lz", Label::Lam, {"ap3"}},
                                          {"ap3", Label::App, {"lu", "lx"}}},
                                         "lx");
    auto at = [&](const std::string& n) { return *carrier.vertex_by_name(n); };
    auto scset = [&](std::vector<std::string> names) {
        std::vector<int> out;
        for (const auto& n : names) out.push_back(at(n));
        std::sort(out.begin(), out.end());
        return out;
    };
    ltg::HoTermGraph H0{carrier, std::vector<std::vector<int>>(carrier.size())};
    H0.scopes[at("lx")] = scset({"lx", "ap0", "ly", "ap1", "vy", "ap2", "vx"});
    H0.scopes[at("ly")] = scset({"ly", "ap1", "vy"});
    H0.scopes[at("lu")] = scset({"lu", "vu"});
    H0.scopes[at("lz")] = scset({"lz"});
    ltg::HoTermGraph H1{carrier, std::vector<std::vector<int>>(carrier.size())};
    H1.scopes[at("lx")] =
        scset({"lx", "ap0", "ly", "ap1", "vy", "ap2", "vx", "lz", "ap3"});
    H1.scopes[at("ly")] = scset({"ly", "ap1", "vy"});
    H1.scopes[at("lu")] = scset({"lu", "vu"});
    H1.scopes[at("lz")] = scset({"lz", "ap3"});

    auto mkP = [&](std::vector<std::pair<std::string, std::vector<std::string>>> rows) {
        ltg::PrefixFn P;
        P.P.assign(carrier.size(), std::nullopt);
        for (auto& [v, word] : rows) {
            std::vector<int> w;
            for (const auto& n : word) w.push_back(at(n));
            P.P[at(v)] = std::move(w);
        }
        return P;
    };
    ltg::ApHoTermGraph A0{carrier, mkP({{"lx", {}},
                                        {"ap0", {"lx"}},
                                        {"ly", {"lx"}},
                                        {"ap1", {"lx", "ly"}},
                                        {"vy", {"lx", "ly"}},
                                        {"ap2", {"lx"}},
                                        {"vx", {"lx"}},
                                        {"lu", {}},
                                        {"vu", {"lu"}},
                                        {"lz", {}},
                                        {"ap3", {}}})};
    ltg::ApHoTermGraph A1{carrier, mkP({{"lx", {}},
                                        {"ap0", {"lx"}},
                                        {"ly", {"lx"}},
                                        {"ap1", {"lx", "ly"}},
                                        {"vy", {"lx", "ly"}},
                                        {"ap2", {"lx"}},
                                        {"vx", {"lx"}},
                                        {"lu", {}},
                                        {"vu", {"lu"}},
                                        {"lz", {"lx"}},
                                        {"ap3", {"lx", "lz"}}})};

    TermGraph G0 = TermGraph::build(s12,
                                    {{"lx", Label::Lam, {"ap0"}},
                                     {"ap0", Label::App, {"ly", "s2"}},
                                     {"s2", Label::Del, {"lz", "lx"}},
                                     {"ly", Label::Lam, {"ap1"}},
                                     {"ap1", Label::App, {"vy", "s1"}},
                                     {"s1", Label::Del, {"ap2", "ly"}},
                                     {"ap2", Label::App, {"vx", "s3"}},
                                     {"s3", Label::Del, {"lu", "lx"}},
                                     {"vx", Label::Var, {"lx"}},
                                     {"vy", Label::Var, {"ly"}},
                                     {"lu", Label::Lam, {"vu"}},
                                     {"vu", Label::Var, {"lu"}},
                                     {"lz", Label::Lam, {"s4"}},
                                     {"s4", Label::Del, {"ap3", "lz"}},
                                     {"ap3", Label::App, {"lu", "lx"}}},
                                    "lx");
    TermGraph G1 = TermGraph::build(s12,
                                    {{"lx", Label::Lam, {"ap0"}},
                                     {"ap0", Label::App, {"ly", "lz"}},
                                     {"ly", Label::Lam, {"ap1"}},
                                     {"ap1", Label::App, {"vy", "e1"}},
                                     {"e1", Label::Del, {"ap2", "ly"}},
                                     {"ap2", Label::App, {"vx", "e2"}},
                                     {"e2", Label::Del, {"lu", "lx"}},
                                     {"vx", Label::Var, {"lx"}},
                                     {"vy", Label::Var, {"ly"}},
                                     {"lu", Label::Lam, {"vu"}},
                                     {"vu", Label::Var, {"lu"}},
                                     {"lz", Label::Lam, {"ap3"}},
                                     {"ap3", Label::App, {"f1", "g1"}},
                                     {"f1", Label::Del, {"f2", "lz"}},
                                     {"f2", Label::Del, {"lu", "lx"}},
                                     {"g1", Label::Del, {"g2", "lz"}},
                                     {"g2", Label::Del, {"lx", "lx"}}},
                                    "lx");
    return {carrier, H0, H1, A0, A1, G0, G1};
}

}  // namespace fixtures
