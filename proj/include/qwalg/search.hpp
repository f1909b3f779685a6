#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwalg/axioms.hpp"

namespace qwalg {

// A search constraint is either a single axiom or a composite class.
using Constraint = std::variant<AxiomId, ClassId>;

std::string to_string(const Constraint& c);
// Resolves a name to a constraint. Composite classes win on collision
// ("QW", "BE"), so satisfy={QW} means the class, as in the worked examples.
std::optional<Constraint> constraint_from_string(const std::string& name);
bool constraint_holds(const FiniteAlgebra& alg, const DerivedOps& ops,
                      const Constraint& c);

struct SearchConfig {
    int order = 1;
    std::vector<Constraint> satisfy;
    std::vector<Constraint> refute;   // every one of these must FAIL
    std::optional<long long> max_models;
    std::optional<double> time_budget_seconds;
    bool canonical_only = true;
    bool lex_leader = false;          // in-search symmetry pruning (perf layer)
    int threads = 1;                  // 0 = use all available
};

enum class SearchStatus { Complete, BudgetExhausted };

const char* to_string(SearchStatus s);

struct ModelStream {
    int order = 0;
    std::vector<FiniteAlgebra> models;     // sorted by canonical form
    // Labeled-table multiplicity per model; aligned with `models` when
    // canonical_only and lex_leader is off, empty otherwise.
    std::vector<long long> class_counts;
    bool complete = true;
    SearchStatus status = SearchStatus::Complete;
    long long raw_models = 0;              // labeled tables accepted
    long long nodes = 0;                   // search tree size
};

// Lexicographically minimal flattened implication table over all relabelings
// mapping one -> n-1 (and a least element -> 0 when one exists). Two algebras
// have equal canonical forms iff they are isomorphic. The scan is factorial
// in the order, so orders beyond kMaxCanonicalOrder are rejected.
inline constexpr int kMaxCanonicalOrder = 10;

struct CanonicalForm {
    std::string bytes;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_canonical(int order, const CanonicalForm& cf);
bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Exhaustive enumeration of implication tables of the given order with
// one = order-1, satisfying every `satisfy` and violating every `refute`
// constraint; one canonical representative per isomorphism class when
// canonical_only. Deterministic output order (by canonical form).
ModelStream enumerate(const SearchConfig& config);

// Reference implementation: generates every cell combination and filters at
// the leaves. No propagation beyond optionally pre-assigning the cells forced
// by demanded BE1-BE3. Kept as the oracle the production search is tested
// and benchmarked against. Feasible only at tiny orders.
ModelStream enumerate_naive(const SearchConfig& config, bool force_unit_cells);

struct OrderScan {
    int order = 0;
    bool complete = false;
    bool found = false;
};

struct CounterexampleResult {
    std::optional<FiniteAlgebra> model;
    int model_order = -1;
    std::vector<OrderScan> scanned;
    SearchStatus status = SearchStatus::Complete;
};

// Iterates orders 1..max_order until a model satisfying/refuting as requested
// is found; reports per-order completeness so exhaustive absence at smaller
// orders is machine-checkable.
CounterexampleResult find_counterexample(const std::vector<Constraint>& satisfy,
                                         const std::vector<Constraint>& refute,
                                         int max_order,
                                         std::optional<double> time_budget_seconds = {},
                                         int threads = 1);

} // namespace qwalg
