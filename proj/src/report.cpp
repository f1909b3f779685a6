#include "qwalg/report.hpp"

#include <sstream>

namespace qwalg::report {

using nlohmann::json;

namespace {

json table_json(int n, const std::vector<int>& table) {
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
        json row = json::array();
        for (int c = 0; c < n; ++c) row.push_back(table[r * n + c]);
        rows.push_back(std::move(row));
    }
    return rows;
}

json bool_table_json(int n, const std::vector<std::uint8_t>& table) {
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
        json row = json::array();
        for (int c = 0; c < n; ++c) row.push_back(table[r * n + c] != 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Reports are self-validating: a witness must reproduce its verdict when
// plugged back into the axiom.
void revalidate(const FiniteAlgebra& alg, const DerivedOps& ops,
                const AxiomReport& r) {
    if (r.holds) return;
    if (!r.witness || r.witness->tuple.size() > 3)
        throw std::logic_error("failed axiom without a usable witness");
    const Witness& w = *r.witness;
    int a = w.tuple.size() > 0 ? w.tuple[0] : 0;
    int b = w.tuple.size() > 1 ? w.tuple[1] : 0;
    int c = w.tuple.size() > 2 ? w.tuple[2] : 0;
    EvalOutcome o = eval_axiom_at(alg, ops, r.axiom, a, b, c);
    if (o.ok || o.lhs != w.lhs || o.rhs != w.rhs)
        throw std::logic_error(std::string("witness for ") + to_string(r.axiom) +
                               " does not re-evaluate");
}

} // namespace

json algebra_json(const FiniteAlgebra& alg) {
    json j;
    j["order"] = alg.order();
    j["one"] = alg.one();
    if (alg.has_names()) j["names"] = alg.names();
    j["imp"] = table_json(alg.order(), alg.imp_table());
    return j;
}

json algebra_json(const ProductAlgebra& p) {
    json j;
    j["order"] = p.order;
    j["one"] = p.one;
    if (!p.names.empty()) j["names"] = p.names;
    j["star"] = p.star;
    j["prod"] = table_json(p.order, p.prod);
    return j;
}

json witness_json(const FiniteAlgebra& alg, const Witness& w) {
    json j;
    j["tuple"] = w.tuple;
    json labels = json::array();
    for (int e : w.tuple) labels.push_back(alg.label(e));
    j["tuple_labels"] = labels;
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    return j;
}

json axiom_report_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                       const AxiomReport& r) {
    revalidate(alg, ops, r);
    json j;
    j["id"] = to_string(r.axiom);
    j["holds"] = r.holds;
    if (r.witness) j["witness"] = witness_json(alg, *r.witness);
    return j;
}

json classification_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                         const ClassificationReport& r) {
    json axioms = json::array();
    for (const AxiomReport& a : r.axioms)
        axioms.push_back(axiom_report_json(alg, ops, a));
    json classes;
    for (const auto& [cls, holds] : r.classes) classes[to_string(cls)] = holds;
    json j;
    j["axioms"] = std::move(axioms);
    j["classes"] = std::move(classes);
    return j;
}

json quantum_b_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                    const QuantumBReport& r) {
    // QB witnesses are relative to the chosen order relation, so re-derive
    // the whole report and insist it matches before emitting.
    QuantumBReport again = check_quantum_b(alg, ops, r.order);
    auto same = [](const AxiomReport& a, const AxiomReport& b) {
        return a.axiom == b.axiom && a.holds == b.holds && a.witness == b.witness;
    };
    const auto lhs = r.reports();
    const auto rhs = again.reports();
    for (size_t i = 0; i < lhs.size(); ++i)
        if (!same(*lhs[i], *rhs[i]))
            throw std::logic_error("quantum-B report does not re-evaluate");

    json j;
    j["order_relation"] = to_string(r.order);
    j["poset"] = r.poset();
    j["reflexive"] = axiom_report_json(alg, ops, r.reflexive);
    j["antisymmetric"] = axiom_report_json(alg, ops, r.antisymmetric);
    j["transitive"] = axiom_report_json(alg, ops, r.transitive);
    json qb = json::array();
    for (const AxiomReport* a : {&r.qb1, &r.qb2, &r.qb3, &r.qb4}) {
        json item;
        item["id"] = to_string(a->axiom);
        item["holds"] = a->holds;
        if (a->witness) item["witness"] = witness_json(alg, *a->witness);
        qb.push_back(std::move(item));
    }
    j["axioms"] = std::move(qb);
    j["all"] = r.all();
    return j;
}

json theorem_results_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                          const std::vector<TheoremResult>& results) {
    (void)ops;
    json arr = json::array();
    for (const TheoremResult& t : results) {
        json item;
        item["id"] = t.id;
        const TheoremEntry* e = find_theorem(t.id);
        if (e) {
            item["statement"] = e->statement;
            item["precondition"] = to_string(e->precond);
        }
        item["applicable"] = t.applicable;
        item["holds"] = t.holds;
        if (t.witness) item["witness"] = witness_json(alg, *t.witness);
        arr.push_back(std::move(item));
    }
    return arr;
}

json derived_ops_json(const FiniteAlgebra& alg, const DerivedOps& ops) {
    json j;
    j["zero"] = ops.zero;
    j["star"] = ops.star;
    j["meet"] = table_json(ops.n, ops.meet);
    j["join"] = table_json(ops.n, ops.join);
    j["prod"] = table_json(ops.n, ops.prod);
    j["osum"] = table_json(ops.n, ops.osum);
    j["leq"] = bool_table_json(ops.n, ops.leq);
    j["leq_q"] = bool_table_json(ops.n, ops.leq_q);
    (void)alg;
    return j;
}

json model_stream_json(const ModelStream& stream) {
    json j;
    j["order"] = stream.order;
    j["complete"] = stream.complete;
    j["status"] = to_string(stream.status);
    j["iso_classes"] = stream.models.size();
    j["labeled_models"] = stream.raw_models;
    j["nodes"] = stream.nodes;
    json models = json::array();
    for (size_t i = 0; i < stream.models.size(); ++i) {
        json m = algebra_json(stream.models[i]);
        if (i < stream.class_counts.size())
            m["labeled_count"] = stream.class_counts[i];
        models.push_back(std::move(m));
    }
    j["models"] = std::move(models);
    return j;
}

json equivalence_json(const EquivalenceReport& r) {
    json j;
    j["qw"] = r.qw_holds;
    j["pqmv"] = r.pqmv_holds;
    j["equivalent"] = r.equivalent();
    j["roundtrip_implication"] = r.roundtrip_imp_ok;
    j["roundtrip_product"] = r.roundtrip_prod_ok;
    j["ok"] = r.ok();
    return j;
}

json document(const std::string& kind, json body) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = kind;
    j["report"] = std::move(body);
    return j;
}

std::string table_text(const FiniteAlgebra& alg, const std::string& op_symbol,
                       const std::vector<int>& table) {
    const int n = alg.order();
    size_t width = op_symbol.size();
    for (int i = 0; i < n; ++i) width = std::max(width, alg.label(i).size());

    std::ostringstream out;
    auto pad = [&](const std::string& s) {
        out << s;
        for (size_t k = s.size(); k < width; ++k) out << ' ';
    };
    pad(op_symbol);
    out << " |";
    for (int c = 0; c < n; ++c) {
        out << ' ';
        pad(alg.label(c));
    }
    out << "\n";
    for (size_t k = 0; k < width + 2; ++k) out << '-';
    out << '+';
    for (int c = 0; c < n; ++c)
        for (size_t k = 0; k <= width; ++k) out << '-';
    out << "\n";
    for (int r = 0; r < n; ++r) {
        pad(alg.label(r));
        out << " |";
        for (int c = 0; c < n; ++c) {
            out << ' ';
            pad(alg.label(table[r * n + c]));
        }
        out << "\n";
    }
    return out.str();
}

std::string witness_text(const FiniteAlgebra& alg, const Witness& w) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < w.tuple.size(); ++i)
        out << (i ? "," : "") << alg.label(w.tuple[i]);
    out << ")";
    auto side = [&](int v) {
        return v >= 0 && v < alg.order() ? alg.label(v) : std::to_string(v);
    };
    out << " sides " << side(w.lhs) << " vs " << side(w.rhs);
    return out.str();
}

std::string axiom_report_text(const FiniteAlgebra& alg, const AxiomReport& r) {
    std::ostringstream out;
    out << to_string(r.axiom) << ": " << (r.holds ? "holds" : "fails");
    if (r.witness) out << " at " << witness_text(alg, *r.witness);
    return out.str();
}

} // namespace qwalg::report
