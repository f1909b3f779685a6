#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qwalg/search.hpp"
#include "qwalg/theorems.hpp"
#include "qwalg/transforms.hpp"

// Machine-readable report documents (schema "qwalg.report/v1") plus text
// rendering helpers. Every witness is re-evaluated against the algebra before
// emission; a mismatch means an engine bug and throws.

namespace qwalg::report {

inline constexpr const char* kSchema = "qwalg.report/v1";

nlohmann::json algebra_json(const FiniteAlgebra& alg);
nlohmann::json algebra_json(const ProductAlgebra& p);
nlohmann::json witness_json(const FiniteAlgebra& alg, const Witness& w);
nlohmann::json axiom_report_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                                 const AxiomReport& r);
nlohmann::json classification_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                                   const ClassificationReport& r);
nlohmann::json quantum_b_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                              const QuantumBReport& r);
nlohmann::json theorem_results_json(const FiniteAlgebra& alg, const DerivedOps& ops,
                                    const std::vector<TheoremResult>& results);
nlohmann::json derived_ops_json(const FiniteAlgebra& alg, const DerivedOps& ops);
nlohmann::json model_stream_json(const ModelStream& stream);
nlohmann::json equivalence_json(const EquivalenceReport& r);

nlohmann::json document(const std::string& kind, nlohmann::json body);

// Text rendering.
std::string table_text(const FiniteAlgebra& alg, const std::string& op_symbol,
                       const std::vector<int>& table);
std::string witness_text(const FiniteAlgebra& alg, const Witness& w);
std::string axiom_report_text(const FiniteAlgebra& alg, const AxiomReport& r);

} // namespace qwalg::report
