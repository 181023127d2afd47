#include "ltg/letrec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>

#include "ltg/homomorphism.hpp"

namespace ltg {

// ---------------------------------------------------------------------------
// Tokenizer / parser.
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Ident, Lambda, Dot, LParen, RParen, Eq, Semi, Letrec, In, End };
    Kind kind;
    std::string text;
    int pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        if (c == '\\') {
            out.push_back({Token::Kind::Lambda, "\\", pos});
            ++i;
        } else if (static_cast<unsigned char>(c) == 0xCE && i + 1 < s.size() &&
                   static_cast<unsigned char>(s[i + 1]) == 0xBB) {  // UTF-8 lambda
            out.push_back({Token::Kind::Lambda, "\\", pos});
            i += 2;
        } else if (c == '.') {
            out.push_back({Token::Kind::Dot, ".", pos});
            ++i;
        } else if (c == '(') {
            out.push_back({Token::Kind::LParen, "(", pos});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen, ")", pos});
            ++i;
        } else if (c == '=') {
            out.push_back({Token::Kind::Eq, "=", pos});
            ++i;
        } else if (c == ';') {
            out.push_back({Token::Kind::Semi, ";", pos});
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            std::string word = s.substr(i, j - i);
            if (word == "letrec")
                out.push_back({Token::Kind::Letrec, word, pos});
            else if (word == "in")
                out.push_back({Token::Kind::In, word, pos});
            else
                out.push_back({Token::Kind::Ident, word, pos});
            i = j;
        } else {
            throw Error("SyntaxError",
                        "unexpected character '" + std::string(1, c) + "' at offset " +
                            std::to_string(pos));
        }
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(s.size())});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    LetrecTerm parse() {
        LetrecTerm t = term();
        expect(Token::Kind::End, "end of input");
        return t;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k)
            throw Error("SyntaxError", "expected " + what + " at offset " +
                                           std::to_string(cur().pos));
        advance();
    }

    LetrecTerm term() {
        if (cur().kind == Token::Kind::Lambda) {
            int pos = cur().pos;
            advance();
            if (cur().kind != Token::Kind::Ident)
                throw Error("SyntaxError", "expected binder after lambda at offset " +
                                               std::to_string(cur().pos));
            std::string name = cur().text;
            advance();
            expect(Token::Kind::Dot, "'.'");
            LetrecTerm t;
            t.kind = LetrecTerm::Kind::Abs;
            t.name = name;
            t.pos = pos;
            t.children.push_back(term());
            return t;
        }
        return appterm();
    }

    LetrecTerm appterm() {
        LetrecTerm acc = atom();
        while (starts_atom(cur().kind)) {
            LetrecTerm app;
            app.kind = LetrecTerm::Kind::App;
            app.pos = cur().pos;
            app.children.push_back(std::move(acc));
            app.children.push_back(atom());
            acc = std::move(app);
        }
        return acc;
    }

    static bool starts_atom(Token::Kind k) {
        return k == Token::Kind::Ident || k == Token::Kind::LParen ||
               k == Token::Kind::Letrec;
    }

    LetrecTerm atom() {
        if (cur().kind == Token::Kind::Ident) {
            LetrecTerm t;
            t.kind = LetrecTerm::Kind::Var;
            t.name = cur().text;
            t.pos = cur().pos;
            advance();
            return t;
        }
        if (cur().kind == Token::Kind::LParen) {
            advance();
            LetrecTerm t = term();
            expect(Token::Kind::RParen, "')'");
            return t;
        }
        if (cur().kind == Token::Kind::Letrec) {
            LetrecTerm t;
            t.kind = LetrecTerm::Kind::Letrec;
            t.pos = cur().pos;
            advance();
            for (;;) {
                if (cur().kind != Token::Kind::Ident)
                    throw Error("SyntaxError", "expected binding name at offset " +
                                                   std::to_string(cur().pos));
                t.binding_names.push_back(cur().text);
                advance();
                expect(Token::Kind::Eq, "'='");
                t.children.push_back(term());
                if (cur().kind == Token::Kind::Semi) {
                    advance();
                    continue;
                }
                break;
            }
            expect(Token::Kind::In, "'in'");
            t.children.push_back(term());
            return t;
        }
        throw Error("SyntaxError", "expected term at offset " + std::to_string(cur().pos));
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// Closedness / duplicate-binding check.
void resolve_check(const LetrecTerm& t, std::vector<std::string>& scope) {
    switch (t.kind) {
        case LetrecTerm::Kind::Var:
            if (std::find(scope.rbegin(), scope.rend(), t.name) == scope.rend())
                throw Error("UnboundVariable", "unbound variable '" + t.name +
                                                   "' at offset " + std::to_string(t.pos));
            break;
        case LetrecTerm::Kind::Abs:
            scope.push_back(t.name);
            resolve_check(t.children[0], scope);
            scope.pop_back();
            break;
        case LetrecTerm::Kind::App:
            resolve_check(t.children[0], scope);
            resolve_check(t.children[1], scope);
            break;
        case LetrecTerm::Kind::Letrec: {
            std::set<std::string> names;
            for (const std::string& n : t.binding_names)
                if (!names.insert(n).second)
                    throw Error("DuplicateBinding", "name '" + n + "' bound twice");
            for (const std::string& n : t.binding_names) scope.push_back(n);
            for (const LetrecTerm& c : t.children) resolve_check(c, scope);
            scope.resize(scope.size() - t.binding_names.size());
            break;
        }
    }
}

}  // namespace

LetrecTerm parse_term(const std::string& text) {
    Parser p(tokenize(text));
    LetrecTerm t = p.parse();
    std::vector<std::string> scope;
    resolve_check(t, scope);
    return t;
}

// ---------------------------------------------------------------------------
// Graph construction.
// ---------------------------------------------------------------------------

namespace {

// The required ambient-prefix length of a term: the depth of the deepest
// ambient lambda binder occurring free in it.  `contrib` maps every visible
// name to its contribution (ambient binders: depth + 1; binders introduced
// inside the term: 0; letrec names: their binding's home length).
int need_len(const LetrecTerm& t, std::map<std::string, int> contrib) {
    switch (t.kind) {
        case LetrecTerm::Kind::Var:
            return contrib.at(t.name);
        case LetrecTerm::Kind::Abs:
            contrib[t.name] = 0;
            return need_len(t.children[0], std::move(contrib));
        case LetrecTerm::Kind::App: {
            int fun = need_len(t.children[0], contrib);
            return std::max(fun, need_len(t.children[1], std::move(contrib)));
        }
        case LetrecTerm::Kind::Letrec: {
            const std::size_t nb = t.binding_names.size();
            for (const std::string& n : t.binding_names) contrib[n] = 0;
            // Home lengths of a binding group: least fixpoint of the mutual
            // requirements (values grow monotonically, bounded by the depth).
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t b = 0; b < nb; ++b) {
                    int v = need_len(t.children[b], contrib);
                    int& cur = contrib[t.binding_names[b]];
                    if (v > cur) {
                        cur = v;
                        changed = true;
                    }
                }
            }
            return need_len(t.children[nb], std::move(contrib));
        }
    }
    return 0;
}

struct Compiler {
    struct EnvEntry {
        std::string name;
        bool is_lam = false;
        int lam_depth = 0;   // ambient stack index of the binder
        int binding_id = 0;  // when !is_lam
    };
    using Env = std::vector<EnvEntry>;  // innermost binder last

    struct Binding {
        const LetrecTerm* term = nullptr;
        Env env;
        std::vector<std::string> stack;  // ambient lam names, truncated to home
        int home = 0;
        int state = 0;  // 0 unvisited, 1 in progress, 2 done
        std::string value;
    };

    std::vector<TermGraph::VertexSpec> specs;
    std::vector<std::unique_ptr<Binding>> bindings;
    int counter = 0;

    std::string fresh(const char* base) { return base + std::to_string(counter++); }
    static std::string placeholder(int id) { return "\x01" + std::to_string(id); }

    const EnvEntry& lookup(const Env& env, const std::string& name) {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->name == name) return *it;
        throw Error("UnboundVariable", "unbound variable '" + name + "'");
    }

    std::map<std::string, int> contrib_of(const Env& env) {
        std::map<std::string, int> m;
        for (const EnvEntry& e : env)
            m[e.name] = e.is_lam ? e.lam_depth + 1 : bindings[e.binding_id]->home;
        return m;
    }

    // Emit a delimiter chain from prefix length `top` down to `child_len`,
    // entering at the returned vertex and leaving at `child`.  The delimiter
    // at length L closes the abstraction stack[L-1].
    std::string chain(std::string child, int child_len, int top,
                      const std::vector<std::string>& stack) {
        std::string below = std::move(child);
        for (int len = child_len + 1; len <= top; ++len) {
            TermGraph::VertexSpec d;
            d.name = fresh("d");
            d.label = Label::Del;
            d.args = {below, stack[len - 1]};
            below = d.name;
            specs.push_back(std::move(d));
        }
        return below;
    }

    std::string use(int id) {
        Binding& b = *bindings[id];
        if (b.state == 0) compile_binding(id);
        if (b.state == 1) return placeholder(id);
        return b.value;
    }

    void compile_binding(int id) {
        Binding& b = *bindings[id];
        b.state = 1;
        if (b.term->kind == LetrecTerm::Kind::Var) {
            const EnvEntry& e = lookup(b.env, b.term->name);
            if (!e.is_lam) {
                // Pure alias of another binding: no vertex of its own.
                Binding& tgt = *bindings[e.binding_id];
                if (tgt.state == 0) compile_binding(e.binding_id);
                if (tgt.state == 1)
                    throw Error("BlackHole",
                                "binding group unwinds to nothing but bindings");
                b.value = tgt.value;
                b.state = 2;
                return;
            }
        }
        auto [name, len] = compile(*b.term, b.env, b.stack);
        (void)len;
        b.value = std::move(name);
        b.state = 2;
    }

    std::pair<std::string, int> compile(const LetrecTerm& t, const Env& env,
                                        std::vector<std::string> stack) {
        switch (t.kind) {
            case LetrecTerm::Kind::Var: {
                const EnvEntry& e = lookup(env, t.name);
                if (e.is_lam) {
                    TermGraph::VertexSpec v;
                    v.name = fresh("v");
                    v.label = Label::Var;
                    v.args = {stack[e.lam_depth]};
                    specs.push_back(v);
                    return {v.name, e.lam_depth + 1};
                }
                return {use(e.binding_id), bindings[e.binding_id]->home};
            }
            case LetrecTerm::Kind::Abs: {
                int m = need_len(t, contrib_of(env));
                TermGraph::VertexSpec lam;
                lam.name = fresh("l");
                lam.label = Label::Lam;
                std::size_t slot = specs.size();
                specs.push_back(lam);
                std::vector<std::string> inner(stack.begin(), stack.begin() + m);
                inner.push_back(lam.name);
                Env env2 = env;
                env2.push_back({t.name, true, m, 0});
                auto [body, blen] = compile(t.children[0], env2, inner);
                specs[slot].args = {chain(body, blen, m + 1, inner)};
                return {specs[slot].name, m};
            }
            case LetrecTerm::Kind::App: {
                int m = need_len(t, contrib_of(env));
                std::vector<std::string> trunc(stack.begin(), stack.begin() + m);
                auto [f, flen] = compile(t.children[0], env, trunc);
                auto [a, alen] = compile(t.children[1], env, trunc);
                TermGraph::VertexSpec app;
                app.name = fresh("a");
                app.label = Label::App;
                app.args = {chain(f, flen, m, trunc), chain(a, alen, m, trunc)};
                specs.push_back(app);
                return {app.name, m};
            }
            case LetrecTerm::Kind::Letrec: {
                const std::size_t nb = t.binding_names.size();
                Env env2 = env;
                std::vector<int> ids;
                for (std::size_t b = 0; b < nb; ++b) {
                    int id = static_cast<int>(bindings.size());
                    bindings.push_back(std::make_unique<Binding>());
                    bindings[id]->term = &t.children[b];
                    ids.push_back(id);
                    env2.push_back({t.binding_names[b], false, 0, id});
                }
                // Home lengths: least fixpoint of the mutual requirements.
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t b = 0; b < nb; ++b) {
                        int v = need_len(t.children[b], contrib_of(env2));
                        if (v > bindings[ids[b]]->home) {
                            bindings[ids[b]]->home = v;
                            changed = true;
                        }
                    }
                }
                for (std::size_t b = 0; b < nb; ++b) {
                    Binding& rec = *bindings[ids[b]];
                    rec.env = env2;
                    // A binding unreachable from the body may need more ambient
                    // binders than the body does (the stack was truncated to
                    // the body's requirement); such a binding is never
                    // compiled, so clamping the copy is safe.
                    std::size_t avail =
                        std::min<std::size_t>(rec.home, stack.size());
                    rec.stack.assign(stack.begin(), stack.begin() + avail);
                }
                return compile(t.children[nb], env2, std::move(stack));
            }
        }
        throw Error("SyntaxError", "malformed term");
    }
};

}  // namespace

TermGraph term_to_graph(const LetrecTerm& t) {
    {
        std::vector<std::string> scope;
        resolve_check(t, scope);
    }
    Compiler c;
    auto [root, len] = c.compile(t, {}, {});
    (void)len;

    // Resolve binding placeholders (possibly chained through aliases).
    std::map<std::string, std::string> resolved;
    auto resolve = [&](std::string name) {
        std::set<std::string> on_path;
        while (!name.empty() && name[0] == '\x01') {
            if (!on_path.insert(name).second)
                throw Error("BlackHole", "binding group unwinds to nothing but bindings");
            int id = std::stoi(name.substr(1));
            name = c.bindings[id]->value;
        }
        return name;
    };
    root = resolve(root);
    for (auto& spec : c.specs)
        for (auto& arg : spec.args) arg = resolve(arg);

    // Drop vertices that only unused bindings produced.
    std::map<std::string, const TermGraph::VertexSpec*> by_name;
    for (const auto& s : c.specs) by_name[s.name] = &s;
    std::set<std::string> live;
    std::vector<std::string> stack{root};
    live.insert(root);
    while (!stack.empty()) {
        std::string n = stack.back();
        stack.pop_back();
        auto it = by_name.find(n);
        if (it == by_name.end())
            throw Error("BlackHole", "binding group unwinds to nothing but bindings");
        for (const std::string& a : it->second->args)
            if (live.insert(a).second) stack.push_back(a);
    }
    std::vector<TermGraph::VertexSpec> kept;
    for (auto& s : c.specs)
        if (live.count(s.name)) kept.push_back(std::move(s));
    return TermGraph::build(Signature(Signature::Kind::L12), kept, root);
}

bool unfolding_equivalent(const LetrecTerm& t1, const LetrecTerm& t2) {
    return are_bisimilar(term_to_graph(t1), term_to_graph(t2));
}

}  // namespace ltg
