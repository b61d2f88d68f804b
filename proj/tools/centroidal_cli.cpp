#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centroidal/centroidal.hpp"
#include "centroidal/json.hpp"

namespace {

using namespace centroidal;

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_usage = 2;

FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec::rationals();
    if (s.rfind("gf:", 0) == 0) return FieldSpec::gf(std::stoull(s.substr(3)));
    throw Error("bad field '" + s + "': expected q or gf:<prime>");
}

struct Options {
    int arity = 0;
    std::string field = "q";
    std::string format = "text";
    std::uint64_t cap = default_enumeration_cap;

    FieldSpec field_spec() const { return parse_field(field); }
    bool json() const { return format == "json"; }
};

void print_report_text(const TotalityReport& r) {
    if (r.semantically_total)
        std::cout << "total: " << (*r.semantically_total ? "yes" : "no") << "\n";
    std::cout << "strongly total: " << (r.strongly_total ? "yes" : "no") << "\n";
    std::cout << "defect: " << to_string(r.defect) << "\n";
    if (r.witness) {
        std::cout << "witness: (";
        for (std::size_t i = 0; i < r.witness->size(); ++i)
            std::cout << (i ? ", " : "") << (*r.witness)[i].to_string();
        std::cout << ")\n";
    }
}

int cmd_eval(const Options& opt, const std::string& term_text) {
    if (opt.arity < 1) throw Error("eval needs an arity: -n <count>");
    FieldSpec f = opt.field_spec();
    TermPtr t = parse_term(term_text, opt.arity, f);
    PolyPair value = evaluate(t, opt.arity, f);
    if (opt.json())
        std::cout << to_json(value).dump(2) << "\n";
    else
        std::cout << to_string(value) << "\n";
    return exit_ok;
}

int cmd_check(const Options& opt, const std::string& pair_text) {
    PolyPair pp = parse_pair(pair_text, opt.field_spec(), opt.arity);
    TotalityReport r = is_total(pp, opt.cap);
    if (opt.json())
        std::cout << to_json(r).dump(2) << "\n";
    else
        print_report_text(r);
    return r.strongly_total ? exit_ok : exit_semantic;
}

int cmd_synth(const Options& opt, const std::string& pair_text) {
    PolyPair pp = parse_pair(pair_text, opt.field_spec(), opt.arity);
    SynthesisResult res;
    try {
        res = synthesize(pp);
    } catch (const NotStronglyTotalError& e) {
        std::cout << "error: " << e.what() << "\n";
        return exit_semantic;
    }
    if (opt.json()) {
        std::cout << to_json(res).dump(2) << "\n";
    } else {
        std::cout << "term: " << print_term(res.term) << "\n"
                  << "verified: " << (res.verified ? "true" : "false") << "\n"
                  << "value: " << to_string(res.evaluation) << "\n"
                  << "nodes: " << res.nodes << "\n"
                  << "basis elements: " << res.basis_count << "\n";
    }
    return exit_ok;
}

int cmd_basis(const Options& opt, std::uint32_t n, std::uint32_t d) {
    FieldSpec f = opt.field_spec();
    auto basis = kernel_basis(n, d);
    if (opt.json()) {
        Json arr = Json::array();
        for (const auto& b : basis) {
            Json e = to_json(b);
            e["poly"] = to_json(realize_basis_element(b, f));
            arr.push_back(std::move(e));
        }
        std::cout << Json{{"elements", std::move(arr)}, {"count", basis.size()}}.dump(2) << "\n";
    } else {
        for (const auto& b : basis)
            std::cout << to_string(b) << "  " << to_string(realize_basis_element(b, f)) << "\n";
        std::cout << "count = " << kernel_dim(n, d).str() << "\n";
    }
    if (kernel_dim(n, d) != BigInt(basis.size()))
        throw Error("basis size disagrees with the dimension formula");
    return exit_ok;
}

int cmd_counterexample(const Options& opt, std::uint64_t p) {
    PolyPair pp = counterexample_pair(p);
    TotalityReport r = is_total(pp, opt.cap);
    if (opt.json()) {
        std::cout << Json{{"pair", to_json(pp)}, {"report", to_json(r)}}.dump(2) << "\n";
    } else {
        std::cout << "pair: " << to_string(pp) << "\n"
                  << "field: " << pp.field().name() << "\n";
        print_report_text(r);
    }
    return exit_ok;
}

int cmd_corpus(const Options& opt, const std::string& filter) {
    bool all_ok = true;
    Json arr = Json::array();
    for (const auto& e : corpus_all()) {
        if (!filter.empty() && e.name.rfind(filter, 0) != 0) continue;
        PolyPair got = evaluate(e.term, e.arity(), e.expected.field());
        bool ok = got == e.expected;
        all_ok = all_ok && ok;
        if (opt.json()) {
            Json j = to_json(e);
            j["ok"] = ok;
            arr.push_back(std::move(j));
        } else {
            std::vector<std::string> names;
            if (e.arity() == 3) names = gustave_aliases();
            std::cout << e.name << "\n"
                      << "  term:  " << print_term(e.term) << "\n"
                      << "  value: " << to_string(got, names) << "\n"
                      << "  check: " << (ok ? "ok" : "MISMATCH, expected " + to_string(e.expected, names))
                      << "\n"
                      << "  note:  " << e.note << "\n";
        }
    }
    if (opt.json()) std::cout << arr.dump(2) << "\n";
    if (arr.empty() && !opt.json() && !filter.empty()) {
        bool any = false;
        for (const auto& e : corpus_all()) any = any || e.name.rfind(filter, 0) == 0;
        if (!any) throw Error("no corpus entry matches '" + filter + "'");
    }
    return all_ok ? exit_ok : exit_semantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact centroidal calculus for boolean polynomial pairs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-n,--arity", opt.arity, "number of boolean arguments (pairs of variables)");
    app.add_option("--field", opt.field, "coefficient field: q or gf:<prime>")
        ->default_str("q");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    app.add_option("--cap", opt.cap, "point cap for exhaustive finite-field checks");

    std::string term_text, pair_text, corpus_filter;
    std::uint32_t basis_n = 0, basis_d = 0;
    std::uint64_t prime = 0;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term to its polynomial pair");
    eval_cmd->add_option("term", term_text, "term text")->required();
    eval_cmd->fallthrough();

    auto* check_cmd = app.add_subcommand("check", "decide totality and strong totality of a pair");
    check_cmd->add_option("pair", pair_text, "pair text, e.g. \"(X1, X2)\"")->required();
    check_cmd->fallthrough();

    auto* synth_cmd = app.add_subcommand("synth", "synthesize a centroidal term for a strongly total pair");
    synth_cmd->add_option("pair", pair_text, "pair text")->required();
    synth_cmd->fallthrough();

    auto* basis_cmd = app.add_subcommand("basis", "list the kernel basis for given n and degree bound");
    basis_cmd->add_option("n", basis_n, "pair count")->required();
    basis_cmd->add_option("d", basis_d, "degree bound")->required();
    basis_cmd->fallthrough();

    auto* ce_cmd = app.add_subcommand("counterexample",
                                      "the total-but-not-strongly-total pair over GF(p)");
    ce_cmd->add_option("p", prime, "prime field size")->required();
    ce_cmd->fallthrough();

    auto* corpus_cmd = app.add_subcommand("corpus", "run the built-in example corpus self-checks");
    corpus_cmd->add_option("name", corpus_filter, "entry name or prefix (e.g. gustave, or.parallel)");
    corpus_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(opt, term_text);
        if (check_cmd->parsed()) return cmd_check(opt, pair_text);
        if (synth_cmd->parsed()) return cmd_synth(opt, pair_text);
        if (basis_cmd->parsed()) return cmd_basis(opt, basis_n, basis_d);
        if (ce_cmd->parsed()) return cmd_counterexample(opt, prime);
        if (corpus_cmd->parsed()) return cmd_corpus(opt, corpus_filter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
