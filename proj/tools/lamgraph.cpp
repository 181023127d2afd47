// lamgraph — command-line surface over the term-graph library.
//
// Subcommands: check, classify, translate, collapse, equal, lattice, dot.
// Exit codes: 0 success / positive verdict, 1 negative verdict (invalid graph,
// not equivalent, lattice check failed), 2 usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ltg/ho_graph.hpp"
#include "ltg/homomorphism.hpp"
#include "ltg/io.hpp"
#include "ltg/letrec.hpp"
#include "ltg/prefix.hpp"
#include "ltg/term_graph.hpp"
#include "ltg/transforms.hpp"

namespace {

using namespace ltg;

// What a given input file turned out to contain.
struct Input {
    enum class Kind { Ho, ApHo, Plain, Term } kind;
    std::optional<ParsedGraph> parsed;   // graph inputs
    std::optional<LetrecTerm> term;      // λ-term inputs
    TermGraph graph() const {
        if (kind == Kind::Term) return term_to_graph(*term);
        return parsed->g;
    }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Input kind is inferred from the content: a `tg` header means the textual
// graph format (scope/prefix lines refine the kind), anything else is parsed
// as a λ-letrec term.  `--from` overrides the inference.
Input load(const std::string& path, const std::string& from) {
    std::string text = slurp(path);
    std::istringstream in(text);
    std::string first;
    in >> first;
    bool looks_tg = first == "tg" || first == "#";
    if (from == "term" || (from.empty() && !looks_tg)) {
        return {Input::Kind::Term, std::nullopt, parse_term(text)};
    }
    ParsedGraph p = parse_tg(text);
    Input::Kind kind = Input::Kind::Plain;
    if (p.scopes) kind = Input::Kind::Ho;
    else if (p.prefix) kind = Input::Kind::ApHo;
    if (from == "ho" && kind != Input::Kind::Ho)
        throw Error("IOError", "--from ho requires scope lines");
    if (from == "apho" && kind != Input::Kind::ApHo)
        throw Error("IOError", "--from apho requires prefix lines");
    if (from == "ltg") kind = Input::Kind::Plain;
    return {kind, std::move(p), std::nullopt};
}

HoTermGraph as_ho(const Input& in) {
    switch (in.kind) {
        case Input::Kind::Ho: return HoTermGraph{in.parsed->g, *in.parsed->scopes};
        case Input::Kind::ApHo:
            return prefixes_to_scopes(ApHoTermGraph{in.parsed->g, *in.parsed->prefix});
        default: return prefixes_to_scopes(erase_delimiters(in.graph()));
    }
}

ApHoTermGraph as_apho(const Input& in) {
    switch (in.kind) {
        case Input::Kind::Ho:
            return scopes_to_prefixes(HoTermGraph{in.parsed->g, *in.parsed->scopes});
        case Input::Kind::ApHo: return ApHoTermGraph{in.parsed->g, *in.parsed->prefix};
        default: return erase_delimiters(in.graph());
    }
}

int delimiter_arity(const std::string& sig_flag) {
    if (sig_flag.empty()) return 2;
    Signature s = Signature::from_name(sig_flag);
    if (!s.has_del())
        throw Error("IOError", "--sig must name a delimiter signature for this conversion");
    return s.del_arity();
}

int cmd_check(const Input& in) {
    switch (in.kind) {
        case Input::Kind::Ho: {
            HoTermGraph h{in.parsed->g, *in.parsed->scopes};
            HoDiagnostic d = validate_ho_diag(h);
            if (d.ok) {
                std::cout << "valid ho-term-graph\n";
                return 0;
            }
            std::cout << "invalid: condition " << d.condition;
            if (d.witness >= 0) std::cout << " at vertex " << h.g.name(d.witness);
            std::cout << "\n";
            return 1;
        }
        case Input::Kind::ApHo: {
            ApHoTermGraph a{in.parsed->g, *in.parsed->prefix};
            HoDiagnostic d = validate_ap_ho_diag(a);
            if (d.ok) {
                std::cout << "valid ap-ho-term-graph\n";
                return 0;
            }
            std::cout << "invalid: condition " << d.condition;
            if (d.witness >= 0) std::cout << " at vertex " << a.g.name(d.witness);
            std::cout << "\n";
            return 1;
        }
        case Input::Kind::Term: {
            TermGraph g = in.graph();  // construction validates
            std::cout << "valid term; eager-scope graph with " << g.size() << " vertices\n";
            return 0;
        }
        case Input::Kind::Plain: {
            const TermGraph& g = in.parsed->g;
            if (g.sig().has_del()) {
                std::optional<PrefixFn> P;
                PrefixDiagnostic d = infer_prefix_diag(g, &P);
                if (d.ok) {
                    std::cout << "valid lambda-term-graph over " << g.sig().name() << "\n";
                    return 0;
                }
                std::cout << "invalid: condition " << d.condition;
                if (d.witness >= 0) std::cout << " at vertex " << g.name(d.witness);
                std::cout << "\n";
                return 1;
            }
            if (g.sig().has_var() && g.sig().var_arity() == 1) {
                if (infer_prefix_sig_i(g)) {
                    std::cout << "valid lambda-term-graph over " << g.sig().name() << "\n";
                    return 0;
                }
                std::cout << "invalid: no correct abstraction-prefix function\n";
                return 1;
            }
            std::cout << "well-formed term graph over " << g.sig().name()
                      << " (no scoping discipline applies)\n";
            return 0;
        }
    }
    return 2;
}

int cmd_classify(const Input& in, bool json) {
    TermGraph g = in.graph();
    ScopeClassification c = classify(g);
    if (json) {
        nlohmann::json out;
        out["sig"] = c.sig.name();
        out["is_ltg"] = c.is_ltg;
        out["is_eager"] = c.is_eager;
        out["is_fbl"] = c.is_fbl;
        out["is_ltg_up_to_S"] = c.is_ltg_up_to_S;
        if (c.first_violation) {
            out["violation"]["condition"] = c.first_violation->first;
            if (c.first_violation->second >= 0)
                out["violation"]["vertex"] = g.name(c.first_violation->second);
        }
        if (c.prefix) {
            nlohmann::json table = nlohmann::json::object();
            for (int v : g.canonical_order()) {
                if (!c.prefix->defined(v)) continue;
                std::string word;
                for (int u : c.prefix->at(v)) word += (word.empty() ? "" : " ") + g.name(u);
                table[g.name(v)] = word;
            }
            out["prefix"] = table;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "sig " << c.sig.name() << "\n"
                  << "is_ltg " << (c.is_ltg ? "true" : "false") << "\n"
                  << "is_eager " << (c.is_eager ? "true" : "false") << "\n"
                  << "is_fbl " << (c.is_fbl ? "true" : "false") << "\n"
                  << "is_ltg_up_to_S " << (c.is_ltg_up_to_S ? "true" : "false") << "\n";
        if (c.first_violation) {
            std::cout << "violation " << c.first_violation->first;
            if (c.first_violation->second >= 0)
                std::cout << " " << g.name(c.first_violation->second);
            std::cout << "\n";
        }
        if (c.prefix) {
            for (int v : g.canonical_order()) {
                if (!c.prefix->defined(v)) continue;
                std::cout << "prefix " << g.name(v);
                for (int u : c.prefix->at(v)) std::cout << ' ' << g.name(u);
                std::cout << "\n";
            }
        }
    }
    return c.is_ltg ? 0 : 1;
}

int cmd_translate(const Input& in, const std::string& to, const std::string& sig_flag) {
    if (to == "ho") {
        HoTermGraph h = as_ho(in);
        if (!validate_ho(h)) throw Error("InvalidHoGraph", "scope function is not valid");
        std::cout << print_tg(h);
        return 0;
    }
    if (to == "apho") {
        ApHoTermGraph a = as_apho(in);
        if (!validate_ap_ho(a)) throw Error("InvalidApHoGraph", "prefix function is not valid");
        std::cout << print_tg(a);
        return 0;
    }
    if (to == "ltg") {
        if (in.kind == Input::Kind::Term || in.kind == Input::Kind::Plain) {
            std::cout << print_tg(in.graph());
            return 0;
        }
        std::cout << print_tg(insert_delimiters(as_apho(in), delimiter_arity(sig_flag)));
        return 0;
    }
    throw Error("IOError", "unknown --to target '" + to + "'");
}

int cmd_collapse(const Input& in) {
    switch (in.kind) {
        case Input::Kind::Ho:
        case Input::Kind::ApHo: {
            // Higher-order inputs run the full maximal-sharing pipeline.
            HoTermGraph shared = max_share_pipeline(as_ho(in));
            if (in.kind == Input::Kind::Ho) std::cout << print_tg(shared);
            else std::cout << print_tg(scopes_to_prefixes(shared));
            return 0;
        }
        case Input::Kind::Term:
        case Input::Kind::Plain: {
            std::cout << print_tg(collapse(in.graph()).first);
            return 0;
        }
    }
    return 2;
}

int cmd_equal(const Input& a, const Input& b) {
    bool eq;
    if (a.kind == Input::Kind::Term && b.kind == Input::Kind::Term)
        eq = unfolding_equivalent(*a.term, *b.term);
    else
        eq = are_bisimilar(a.graph(), b.graph());
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? 0 : 1;
}

int cmd_lattice(const Input& in, int max_vertices) {
    TermGraph g = in.graph();
    auto images = enumerate_images(g, max_vertices);
    std::vector<TermGraph> family;
    for (auto& [img, h] : images) family.push_back(img);
    bool ok = check_lattice(family);
    std::cout << images.size() << " images up to isomorphism; lattice "
              << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
}

int cmd_dot(const Input& in) {
    if (in.kind == Input::Kind::Ho) {
        std::cout << to_dot(in.parsed->g, &*in.parsed->scopes);
        return 0;
    }
    if (in.kind == Input::Kind::ApHo) {
        HoTermGraph h = as_ho(in);
        std::cout << to_dot(h.g, &h.scopes);
        return 0;
    }
    std::cout << to_dot(in.graph());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lamgraph — cyclic lambda terms as maximally shareable term graphs"};
    app.require_subcommand(1);

    std::string file, file2, from, to, sig_flag;
    bool json = false;
    int max_vertices = 12;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", file, "input file ('-' for stdin)")->required();
        sub->add_option("--from", from, "input kind: ho|apho|ltg|term (default: inferred)");
    };

    CLI::App* check = app.add_subcommand("check", "validate a graph/term file");
    add_input(check);
    CLI::App* cls = app.add_subcommand("classify", "full scoping classification");
    add_input(cls);
    cls->add_flag("--json", json, "machine-readable output");
    CLI::App* tr = app.add_subcommand("translate", "convert between representations");
    add_input(tr);
    tr->add_option("--to", to, "target kind: ho|apho|ltg")->required();
    tr->add_option("--sig", sig_flag, "target signature for ltg output (l11|l12|l01|l02)");
    CLI::App* col = app.add_subcommand("collapse", "maximally shared form");
    add_input(col);
    CLI::App* eq = app.add_subcommand("equal", "bisimilarity / unfolding equivalence");
    eq->add_option("file", file, "first input")->required();
    eq->add_option("file2", file2, "second input")->required();
    eq->add_option("--from", from, "input kind override");
    CLI::App* lat = app.add_subcommand("lattice", "enumerate images, verify lattice");
    add_input(lat);
    lat->add_option("--max-vertices", max_vertices, "enumeration size bound (default 12)");
    CLI::App* dot = app.add_subcommand("dot", "emit DOT");
    add_input(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(load(file, from));
        if (*cls) return cmd_classify(load(file, from), json);
        if (*tr) return cmd_translate(load(file, from), to, sig_flag);
        if (*col) return cmd_collapse(load(file, from));
        if (*eq) return cmd_equal(load(file, from), load(file2, from));
        if (*lat) return cmd_lattice(load(file, from), max_vertices);
        if (*dot) return cmd_dot(load(file, from));
    } catch (const ltg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
