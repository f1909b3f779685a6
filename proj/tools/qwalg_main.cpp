// qwalg: finite-algebra workbench for the BE / Wajsberg / quantum-MV family.
//
// Exit codes: 0 success (or affirmative verdict), 1 negative verdict where a
// command asserts one (documented per command in the README), 2 usage or
// parse errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalg/io.hpp"
#include "qwalg/report.hpp"
#include "qwalg/search.hpp"
#include "qwalg/theorems.hpp"

namespace {

using nlohmann::json;
using namespace qwalg;

int default_threads() {
    if (const char* env = std::getenv("QWALG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // auto
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<Constraint> parse_constraints(const std::string& csv) {
    std::vector<Constraint> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto c = constraint_from_string(item);
        if (!c)
            throw CLI::ValidationError("unknown axiom or class: " + item);
        out.push_back(*c);
    }
    return out;
}

struct Loaded {
    ParsedAlgebra parsed;
    FiniteAlgebra alg;
    bool was_product;
};

Loaded load(const std::string& path) {
    ParsedAlgebra parsed = parse_algebra_file(path);
    bool was_product = std::holds_alternative<ProductAlgebra>(parsed);
    FiniteAlgebra alg = as_implication(parsed);
    return Loaded{std::move(parsed), std::move(alg), was_product};
}

int run_check(const std::string& path, const std::vector<std::string>& axiom_names,
              bool as_json) {
    Loaded in = load(path);
    DerivedOps ops = derive(in.alg);

    std::vector<AxiomId> ids;
    for (const std::string& name : axiom_names) {
        auto id = axiom_from_string(name);
        if (!id) throw CLI::ValidationError("unknown axiom: " + name);
        ids.push_back(*id);
    }
    bool assert_mode = !ids.empty();
    if (ids.empty()) ids = all_axioms();

    bool any_failed = false;
    json arr = json::array();
    for (AxiomId id : ids) {
        AxiomReport r = check_axiom(in.alg, ops, id);
        any_failed = any_failed || !r.holds;
        if (as_json)
            arr.push_back(report::axiom_report_json(in.alg, ops, r));
        else
            std::cout << report::axiom_report_text(in.alg, r) << "\n";
    }
    if (as_json) {
        json body;
        body["input"] = path;
        body["axioms"] = std::move(arr);
        emit(report::document("check", std::move(body)));
    }
    return assert_mode && any_failed ? 1 : 0;
}

int run_classify(const std::string& path, bool as_json) {
    Loaded in = load(path);
    DerivedOps ops = derive(in.alg);
    ClassificationReport rep = classify(in.alg, ops);
    QuantumBReport qb = check_quantum_b(in.alg, ops, OrderKind::Leq);

    if (as_json) {
        json body = report::classification_json(in.alg, ops, rep);
        body["input"] = path;
        body["quantum_b"] = report::quantum_b_json(in.alg, ops, qb);
        emit(report::document("classify", std::move(body)));
        return 0;
    }
    std::cout << "classes:\n";
    for (const auto& [cls, holds] : rep.classes)
        std::cout << "  " << to_string(cls) << ": " << (holds ? "yes" : "no")
                  << "\n";
    std::cout << "axioms:\n";
    for (const AxiomReport& r : rep.axioms)
        std::cout << "  " << report::axiom_report_text(in.alg, r) << "\n";
    std::cout << "quantum-B over <= : poset=" << (qb.poset() ? "yes" : "no");
    for (const AxiomReport* r : {&qb.qb1, &qb.qb2, &qb.qb3, &qb.qb4})
        std::cout << " " << to_string(r->axiom) << "=" << (r->holds ? "yes" : "no");
    std::cout << "\n";
    return 0;
}

int run_derive(const std::string& path, bool as_json) {
    Loaded in = load(path);
    DerivedOps ops = derive(in.alg);
    if (as_json) {
        json body = report::derived_ops_json(in.alg, ops);
        body["input"] = path;
        body["algebra"] = report::algebra_json(in.alg);
        emit(report::document("derive", std::move(body)));
        return 0;
    }
    std::cout << "zero = " << in.alg.label(ops.zero) << "\nstar:";
    for (int a = 0; a < ops.n; ++a)
        std::cout << " " << in.alg.label(a) << "*=" << in.alg.label(ops.star[a]);
    std::cout << "\n\n" << report::table_text(in.alg, "->", in.alg.imp_table());
    std::cout << "\n" << report::table_text(in.alg, "^", ops.meet);
    std::cout << "\n" << report::table_text(in.alg, "v", ops.join);
    std::cout << "\n" << report::table_text(in.alg, ".", ops.prod);
    std::cout << "\n" << report::table_text(in.alg, "(+)", ops.osum);
    return 0;
}

int run_verify(const std::string& path, const std::string& theorem_id,
               bool as_json) {
    Loaded in = load(path);
    DerivedOps ops = derive(in.alg);
    std::vector<TheoremResult> results;
    if (theorem_id.empty())
        results = verify_all(in.alg, ops);
    else
        results.push_back(verify(in.alg, ops, theorem_id));

    bool any_failed = false;
    for (const TheoremResult& r : results)
        any_failed = any_failed || (r.applicable && !r.holds);

    if (as_json) {
        json body;
        body["input"] = path;
        body["theorems"] = report::theorem_results_json(in.alg, ops, results);
        body["all_applicable_hold"] = !any_failed;
        emit(report::document("verify", std::move(body)));
    } else {
        for (const TheoremResult& r : results) {
            std::cout << r.id << ": ";
            if (!r.applicable)
                std::cout << "not applicable (vacuously true)";
            else if (r.holds)
                std::cout << "holds";
            else
                std::cout << "FAILS at "
                          << report::witness_text(in.alg, *r.witness);
            std::cout << "\n";
        }
    }
    return any_failed ? 1 : 0;
}

int run_transform(const std::string& path, const std::string& target,
                  bool as_json) {
    Loaded in = load(path);
    if (target == "product") {
        ProductAlgebra p = to_product(in.alg);
        std::vector<int> osum = derived_sum(p);
        if (as_json) {
            json body;
            body["input"] = path;
            body["product"] = report::algebra_json(p);
            json rows = json::array();
            for (int r = 0; r < p.order; ++r) {
                json row = json::array();
                for (int c = 0; c < p.order; ++c)
                    row.push_back(osum[r * p.order + c]);
                rows.push_back(std::move(row));
            }
            body["osum"] = std::move(rows);
            emit(report::document("transform", std::move(body)));
        } else {
            std::cout << write_algebra(p);
            std::cout << "# derived sum\n"
                      << report::table_text(in.alg, "(+)", osum);
        }
        return 0;
    }
    if (target == "implication") {
        // For an `imp` input this re-derives the product form first, so both
        // directions exercise the transformation pair.
        ProductAlgebra p = in.was_product ? std::get<ProductAlgebra>(in.parsed)
                                          : to_product(in.alg);
        FiniteAlgebra back = to_implication(p);
        if (as_json) {
            json body;
            body["input"] = path;
            body["implication"] = report::algebra_json(back);
            emit(report::document("transform", std::move(body)));
        } else {
            std::cout << write_algebra(back);
        }
        return 0;
    }
    throw CLI::ValidationError("--to must be 'product' or 'implication'");
}

int run_search(int order, const std::string& satisfy_csv,
               const std::string& refute_csv, std::optional<long long> max_models,
               std::optional<double> budget, bool all_labeled, int threads,
               bool lex, bool as_json) {
    SearchConfig cfg;
    cfg.order = order;
    cfg.satisfy = parse_constraints(satisfy_csv);
    cfg.refute = parse_constraints(refute_csv);
    cfg.max_models = max_models;
    cfg.time_budget_seconds = budget;
    cfg.canonical_only = !all_labeled;
    cfg.lex_leader = lex;
    cfg.threads = threads;
    ModelStream stream = enumerate(cfg);

    if (as_json) {
        emit(report::document("search", report::model_stream_json(stream)));
    } else {
        for (size_t i = 0; i < stream.models.size(); ++i) {
            std::cout << "# model " << (i + 1) << " of " << stream.models.size();
            if (i < stream.class_counts.size())
                std::cout << " (labeled copies: " << stream.class_counts[i] << ")";
            std::cout << "\n" << write_algebra(stream.models[i]) << "\n";
        }
        std::cout << "# status: " << to_string(stream.status)
                  << ", iso classes: " << stream.models.size()
                  << ", labeled models: " << stream.raw_models
                  << ", complete: " << (stream.complete ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_iso(const std::string& path1, const std::string& path2, bool as_json) {
    Loaded a = load(path1);
    Loaded b = load(path2);
    bool iso = is_isomorphic(a.alg, b.alg);
    if (as_json) {
        json body;
        body["inputs"] = {path1, path2};
        body["isomorphic"] = iso;
        emit(report::document("iso", std::move(body)));
    } else {
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    }
    return iso ? 0 : 1;
}

json subset_json(const FiniteAlgebra& alg, const ElementSubset& s) {
    json j;
    j["elements"] = s.elements();
    json labels = json::array();
    for (int e : s.elements()) labels.push_back(alg.label(e));
    j["labels"] = labels;
    return j;
}

std::string subset_text(const FiniteAlgebra& alg, const ElementSubset& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int e : s.elements()) {
        out << (first ? "" : ",") << alg.label(e);
        first = false;
    }
    out << "}";
    return out.str();
}

int run_structures(const std::string& path, const std::string& what,
                   const std::string& set_csv, bool as_json) {
    Loaded in = load(path);
    DerivedOps ops = derive(in.alg);
    if (!class_holds(in.alg, ops, ClassId::QW)) {
        std::cerr << "structures: input is not a quantum-Wajsberg algebra\n";
        return 1;
    }

    if (what == "meander") {
        ElementSubset s = ElementSubset::empty(in.alg.order());
        std::stringstream ss(set_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            int e = in.alg.element_by_token(tok);
            if (e < 0) throw CLI::ValidationError("unknown element: " + tok);
            s.add(e);
        }
        ElementSubset m = first_meander(in.alg, ops, s);
        if (as_json) {
            json body;
            body["input"] = path;
            body["set"] = subset_json(in.alg, s);
            body["meander"] = subset_json(in.alg, m);
            body["meander_is_filter"] =
                !m.is_empty() && is_filter(in.alg, ops, m);
            emit(report::document("structures", std::move(body)));
        } else {
            std::cout << "meander of " << subset_text(in.alg, s) << " = "
                      << subset_text(in.alg, m) << "\n";
        }
        return 0;
    }

    if (what == "ideals") {
        auto ideals = enumerate_q_ideals(in.alg, ops);
        json arr = json::array();
        for (const ElementSubset& s : ideals) {
            ElementSubset m = first_meander(in.alg, ops, s);
            bool p = is_p_ideal(in.alg, ops, s);
            bool mf = !m.is_empty() && is_filter(in.alg, ops, m);
            if (as_json) {
                json item = subset_json(in.alg, s);
                item["p_ideal"] = p;
                item["meander"] = subset_json(in.alg, m);
                item["meander_is_filter"] = mf;
                arr.push_back(std::move(item));
            } else {
                std::cout << subset_text(in.alg, s) << (p ? " (p-ideal)" : "")
                          << " meander=" << subset_text(in.alg, m)
                          << (mf ? " [filter]" : " [not a filter]") << "\n";
            }
        }
        if (as_json) {
            json body;
            body["input"] = path;
            body["q_ideals"] = std::move(arr);
            emit(report::document("structures", std::move(body)));
        }
        return 0;
    }

    if (what == "filters") {
        auto filters = enumerate_filters(in.alg, ops);
        if (as_json) {
            json arr = json::array();
            for (const ElementSubset& s : filters)
                arr.push_back(subset_json(in.alg, s));
            json body;
            body["input"] = path;
            body["filters"] = std::move(arr);
            emit(report::document("structures", std::move(body)));
        } else {
            for (const ElementSubset& s : filters)
                std::cout << subset_text(in.alg, s) << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("expected one of: ideals, filters, meander");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite BE / Wajsberg / quantum-MV algebra workbench"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable report document");

    std::string file, file2, target, theorem_id, satisfy_csv, refute_csv,
        structures_what, set_csv;
    std::vector<std::string> axiom_names;
    int order = 1;
    long long max_models = 0;
    double budget = 0.0;
    bool all_labeled = false, lex = false;
    int threads = default_threads();

    auto* check = app.add_subcommand(
        "check", "check axioms (exit 1 if an explicitly requested axiom fails)");
    check->add_option("file", file)->required();
    check->add_option("--axiom", axiom_names, "axiom id (repeatable)");

    auto* classify_cmd =
        app.add_subcommand("classify", "full axiom and class classification");
    classify_cmd->add_option("file", file)->required();

    auto* derive_cmd =
        app.add_subcommand("derive", "print all derived operation tables");
    derive_cmd->add_option("file", file)->required();

    auto* verify = app.add_subcommand(
        "verify", "run the theorem registry (exit 1 if an applicable entry fails)");
    verify->add_option("file", file)->required();
    verify->add_option("--theorem", theorem_id, "registry id, e.g. P3.13-7");

    auto* transform =
        app.add_subcommand("transform", "convert between signatures");
    transform->add_option("file", file)->required();
    transform->add_option("--to", target, "product | implication")->required();

    auto* search = app.add_subcommand("search", "enumerate models");
    search->add_option("--order", order, "carrier size")->required();
    search->add_option("--satisfy", satisfy_csv, "comma list of axioms/classes");
    search->add_option("--refute", refute_csv,
                       "comma list that must all fail on every model");
    auto* mm = search->add_option("--max-models", max_models, "stop after this many");
    auto* bb = search->add_option("--budget", budget, "wall-clock seconds");
    search->add_flag("--all-labeled", all_labeled,
                     "emit every labeled table instead of canonical representatives");
    search->add_flag("--lex-prune", lex, "enable in-search symmetry pruning");
    search->add_option("--threads", threads,
                       "worker threads (0 = all; default from QWALG_THREADS)");

    auto* iso = app.add_subcommand(
        "iso", "decide isomorphism (exit 0 isomorphic, 1 not)");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();

    auto* structures = app.add_subcommand(
        "structures", "q-ideals, filters, first meanders (QW input required)");
    structures->add_option("file", file)->required();
    structures->add_option("what", structures_what, "ideals | filters | meander")
        ->required();
    structures->add_option("--set", set_csv, "comma list of elements (for meander)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(file, axiom_names, as_json);
        if (*classify_cmd) return run_classify(file, as_json);
        if (*derive_cmd) return run_derive(file, as_json);
        if (*verify) return run_verify(file, theorem_id, as_json);
        if (*transform) return run_transform(file, target, as_json);
        if (*search)
            return run_search(order, satisfy_csv, refute_csv,
                              *mm ? std::optional<long long>(max_models)
                                  : std::nullopt,
                              *bb ? std::optional<double>(budget) : std::nullopt,
                              all_labeled, threads, lex, as_json);
        if (*iso) return run_iso(file, file2, as_json);
        if (*structures)
            return run_structures(file, structures_what, set_csv, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotInvolutiveError& e) {
        std::cerr << "transform refused: " << e.what() << "\n";
        return 1;
    } catch (const NotInvolutiveMBEError& e) {
        std::cerr << "transform refused: " << e.what() << "\n";
        return 1;
    } catch (const UnknownTheoremError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
