#include "qwalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwalg {

std::string to_string(const Constraint& c) {
    if (std::holds_alternative<AxiomId>(c))
        return to_string(std::get<AxiomId>(c));
    return to_string(std::get<ClassId>(c));
}

std::optional<Constraint> constraint_from_string(const std::string& name) {
    if (auto cls = class_from_string(name)) return Constraint{*cls};
    if (auto ax = axiom_from_string(name)) return Constraint{*ax};
    return std::nullopt;
}

bool constraint_holds(const FiniteAlgebra& alg, const DerivedOps& ops,
                      const Constraint& c) {
    if (std::holds_alternative<AxiomId>(c))
        return axiom_holds(alg, ops, std::get<AxiomId>(c));
    return class_holds(alg, ops, std::get<ClassId>(c));
}

const char* to_string(SearchStatus s) {
    return s == SearchStatus::Complete ? "complete" : "budget-exhausted";
}

// ----- canonical forms -----

namespace {

std::vector<int> least_elements(const FiniteAlgebra& alg) {
    std::vector<int> out;
    const int n = alg.order();
    for (int z = 0; z < n; ++z) {
        bool least = true;
        for (int x = 0; x < n && least; ++x) least = alg.imp(z, x) == alg.one();
        if (least) out.push_back(z);
    }
    return out;
}

void apply_perm(const std::vector<int>& table, int n, const std::vector<int>& pi,
                std::vector<int>& out) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[pi[a] * n + pi[b]] = pi[table[a * n + b]];
}

} // namespace

CanonicalForm canonical_form(const FiniteAlgebra& alg) {
    const int n = alg.order();
    if (n > kMaxCanonicalOrder)
        throw std::invalid_argument(
            "canonical forms scan all relabelings and are limited to order " +
            std::to_string(kMaxCanonicalOrder));
    if (n == 1) return CanonicalForm{std::string(1, '\0')};

    // Candidate pins: one -> n-1 always; some least element -> 0 when one
    // exists other than the unit. Both constraints are isomorphism-invariant.
    std::vector<int> pins;
    for (int z : least_elements(alg))
        if (z != alg.one()) pins.push_back(z);

    std::vector<int> best;
    std::vector<int> img(static_cast<size_t>(n) * n);
    std::vector<int> pi(n);

    auto consider = [&](const std::vector<int>& rest,
                        const std::vector<int>& positions) {
        std::vector<int> order = rest;
        std::sort(order.begin(), order.end());
        do {
            for (size_t k = 0; k < order.size(); ++k) pi[order[k]] = positions[k];
            apply_perm(alg.imp_table(), n, pi, img);
            if (best.empty() || img < best) best = img;
        } while (std::next_permutation(order.begin(), order.end()));
    };

    pi[alg.one()] = n - 1;
    if (pins.empty()) {
        std::vector<int> rest, positions;
        for (int e = 0; e < n; ++e)
            if (e != alg.one()) rest.push_back(e);
        for (int p = 0; p < n - 1; ++p) positions.push_back(p);
        consider(rest, positions);
    } else {
        for (int z : pins) {
            pi[z] = 0;
            std::vector<int> rest, positions;
            for (int e = 0; e < n; ++e)
                if (e != alg.one() && e != z) rest.push_back(e);
            for (int p = 1; p < n - 1; ++p) positions.push_back(p);
            consider(rest, positions);
        }
    }

    std::string bytes(best.size(), '\0');
    for (size_t i = 0; i < best.size(); ++i)
        bytes[i] = static_cast<char>(static_cast<unsigned char>(best[i]));
    return CanonicalForm{std::move(bytes)};
}

FiniteAlgebra algebra_from_canonical(int order, const CanonicalForm& cf) {
    if (cf.bytes.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("canonical form size does not match order");
    std::vector<int> table(cf.bytes.size());
    for (size_t i = 0; i < cf.bytes.size(); ++i)
        table[i] = static_cast<unsigned char>(cf.bytes[i]);
    return FiniteAlgebra(order, std::move(table), order - 1);
}

bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

// ----- constraint-driven propagation demands -----

namespace {

struct Demands {
    bool be1 = false, be2 = false, be3 = false, be4 = false;
    bool an = false, bounded = false, dn = false;
};

void add_axiom_demands(Demands& d, AxiomId id) {
    switch (id) {
        case AxiomId::BE1: d.be1 = true; break;
        case AxiomId::BE2: d.be2 = true; break;
        case AxiomId::W1:
        case AxiomId::BE3: d.be3 = true; break;
        case AxiomId::BE4: d.be4 = true; break;
        case AxiomId::An: d.an = true; break;
        case AxiomId::Bounded: d.bounded = true; break;
        case AxiomId::DN: d.dn = true; break;
        case AxiomId::LeqRefl: d.be1 = true; break;
        default: break;
    }
}

Demands demands_for(const std::vector<Constraint>& satisfy) {
    Demands d;
    for (const Constraint& c : satisfy) {
        if (std::holds_alternative<AxiomId>(c)) {
            add_axiom_demands(d, std::get<AxiomId>(c));
            continue;
        }
        switch (std::get<ClassId>(c)) {
            case ClassId::BE:
            case ClassId::BCK:
                d.be1 = d.be2 = d.be3 = d.be4 = true;
                if (std::get<ClassId>(c) == ClassId::BCK) d.an = true;
                break;
            case ClassId::BoundedBE:
                d.be1 = d.be2 = d.be3 = d.be4 = d.bounded = true;
                break;
            case ClassId::InvolutiveBE:
            case ClassId::QW:
            case ClassId::QMV:
            case ClassId::MV:
                d.be1 = d.be2 = d.be3 = d.be4 = d.bounded = d.dn = true;
                break;
            case ClassId::Wajsberg:
                // Wajsberg algebras are bounded involutive BE algebras with
                // antisymmetric order, so all of these hold on every model.
                d.be1 = d.be2 = d.be3 = d.be4 = d.bounded = d.dn = d.an = true;
                break;
            case ClassId::CommutativeQuantumB:
                d.be1 = d.an = true;  // reflexivity of <= is exactly BE1
                break;
            case ClassId::kCount_:
                break;
        }
    }
    return d;
}

// Axioms whose evaluation never touches star (safe to relabel any element).
bool constraint_star_free(const Constraint& c) {
    if (std::holds_alternative<ClassId>(c)) {
        switch (std::get<ClassId>(c)) {
            case ClassId::BE:
            case ClassId::BCK:
            case ClassId::CommutativeQuantumB:
                return true;
            default:
                return false;
        }
    }
    switch (std::get<AxiomId>(c)) {
        case AxiomId::BE1:
        case AxiomId::BE2:
        case AxiomId::BE3:
        case AxiomId::BE4:
        case AxiomId::BCK1:
        case AxiomId::An:
        case AxiomId::SelfDistributive:
        case AxiomId::VeeComm:
        case AxiomId::W1:
        case AxiomId::W2:
        case AxiomId::W3:
        case AxiomId::QB1:
        case AxiomId::QB2:
        case AxiomId::QB3:
        case AxiomId::QB4:
        case AxiomId::LeqRefl:
        case AxiomId::LeqTrans:
            return true;
        default:
            return false;
    }
}

// ----- shared leaf collection -----

struct Collector {
    const SearchConfig& config;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<long long> raw_models{0};
    std::atomic<long long> nodes{0};

    std::mutex mu;
    std::set<std::string> distinct;  // canonical forms, for the model cap

    explicit Collector(const SearchConfig& cfg) : config(cfg) {
        if (cfg.time_budget_seconds) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*cfg.time_budget_seconds));
        }
    }

    void check_deadline() {
        if (has_deadline && !stop.load(std::memory_order_relaxed) &&
            std::chrono::steady_clock::now() >= deadline) {
            budget_hit = true;
            stop = true;
        }
    }

    // Returns true when the leaf was recorded (caller keeps its raw table).
    bool on_accept(const std::string& canonical) {
        raw_models.fetch_add(1, std::memory_order_relaxed);
        if (!config.max_models) return true;
        std::lock_guard<std::mutex> lock(mu);
        if (config.canonical_only) {
            distinct.insert(canonical);
            if (static_cast<long long>(distinct.size()) >= *config.max_models &&
                !stop.load()) {
                // Stopping at the cap leaves the rest of the tree unexplored,
                // so the stream cannot claim exhaustiveness.
                budget_hit = true;
                stop = true;
            }
        } else {
            if (raw_models.load() >= *config.max_models && !stop.load()) {
                budget_hit = true;
                stop = true;
            }
        }
        return true;
    }
};

struct Leaf {
    std::string canonical;
    std::vector<int> table;
};

bool leaf_satisfies(const FiniteAlgebra& alg, const SearchConfig& config) {
    DerivedOps ops = derive(alg);
    for (const Constraint& c : config.satisfy)
        if (!constraint_holds(alg, ops, c)) return false;
    for (const Constraint& c : config.refute)
        if (constraint_holds(alg, ops, c)) return false;
    return true;
}

// Depth-first fill of the implication table in row-major order of the free
// cells, with incremental propagation of the demanded axioms.
class TableSearch {
public:
    TableSearch(const SearchConfig& config, Demands demands, bool pin_zero,
                bool lex_leader, Collector& col, std::vector<Leaf>& out)
        : config_(config),
          n_(config.order),
          one_(config.order - 1),
          demands_(demands),
          pin_zero_(pin_zero),
          lex_leader_(lex_leader),
          col_(col),
          out_(out),
          table_(static_cast<size_t>(n_) * n_, -1) {}

    // Applies the cells forced by the demanded axioms. False on conflict.
    bool apply_forced() {
        if (demands_.be1)
            for (int a = 0; a < n_; ++a)
                if (!place(a, a, one_)) return false;
        if (demands_.be2)
            for (int a = 0; a < n_; ++a)
                if (!place(a, one_, one_)) return false;
        if (demands_.be3)
            for (int a = 0; a < n_; ++a)
                if (!place(one_, a, a)) return false;
        if (pin_zero_)
            for (int a = 0; a < n_; ++a)
                if (!place(0, a, one_)) return false;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (table_[i * n_ + j] < 0) free_.emplace_back(i, j);
        return true;
    }

    const std::vector<std::pair<int, int>>& free_cells() const { return free_; }

    // Assigns free cells [0, prefix.size()) to the given values, then
    // searches the rest. Used by the parallel driver to split the tree.
    void run(const std::vector<int>& prefix) {
        size_t k = 0;
        for (; k < prefix.size(); ++k)
            if (!assign(free_[k].first, free_[k].second, prefix[k])) {
                unwind(k + 1, prefix);
                return;
            }
        rec(k);
        unwind(k, prefix);
    }

private:
    void unwind(size_t upto, const std::vector<int>& prefix) {
        for (size_t i = 0; i < upto && i < prefix.size(); ++i)
            table_[free_[i].first * n_ + free_[i].second] = -1;
    }

    bool place(int i, int j, int v) {
        int& cell = table_[i * n_ + j];
        if (cell >= 0) return cell == v;
        cell = v;
        return true;
    }

    int at(int i, int j) const { return table_[i * n_ + j]; }

    // One BE4 instance; true when not (yet) violated.
    bool be4_instance(int x, int y, int z) const {
        int v1 = at(y, z);
        if (v1 < 0) return true;
        int l = at(x, v1);
        if (l < 0) return true;
        int v2 = at(x, z);
        if (v2 < 0) return true;
        int r = at(y, v2);
        if (r < 0) return true;
        return l == r;
    }

    bool be4_ok_after(int i, int j) const {
        for (int x = 0; x < n_; ++x)
            if (!be4_instance(x, i, j)) return false;
        for (int y = 0; y < n_; ++y)
            if (!be4_instance(i, y, j)) return false;
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z) {
                if (at(y, z) != j) continue;
                if (!be4_instance(i, y, z)) return false;
                if (!be4_instance(y, i, z)) return false;
            }
        return true;
    }

    bool an_ok_after(int i, int j, int v) const {
        return !(v == one_ && i != j && at(j, i) == one_);
    }

    // Star-column involution: with row 0 pinned and DN demanded, column 0 is
    // the star table and must be an involution.
    bool star_ok_after(int i, int j, int v) const {
        if (j != 0) return true;
        if (v == i) return true;
        int back = at(v, 0);
        if (back >= 0 && back != i) return false;
        for (int u = 0; u < n_; ++u)
            if (u != i && at(u, 0) == v) return false;
        return true;
    }

    bool assign(int i, int j, int v) {
        table_[i * n_ + j] = v;
        if (demands_.an && !an_ok_after(i, j, v)) return false;
        if (demands_.dn && pin_zero_ && !star_ok_after(i, j, v)) return false;
        if (demands_.be4 && !be4_ok_after(i, j)) return false;
        return true;
    }

    // Lex-leader pruning: reject partial tables that a unit-fixing (and, when
    // pinned, zero-fixing) transposition of already-used elements maps to
    // something strictly smaller. The canonical post-filter guarantees
    // correctness; this only skips labeled duplicates.
    bool lex_ok_rows(int r) const {
        int lo = pin_zero_ ? 1 : 0;
        for (int p = lo; p <= r; ++p) {
            if (p == one_) continue;
            for (int q = p + 1; q <= r; ++q) {
                if (q == one_) continue;
                int cmp = 0;  // -1: image smaller, +1: image larger
                for (int x = 0; x <= r && cmp == 0; ++x)
                    for (int y = 0; y < n_ && cmp == 0; ++y) {
                        int tx = x == p ? q : x == q ? p : x;
                        int ty = y == p ? q : y == q ? p : y;
                        int val = at(tx, ty);
                        int img = val == p ? q : val == q ? p : val;
                        int cur = at(x, y);
                        if (img != cur) cmp = img < cur ? -1 : 1;
                    }
                if (cmp < 0) return false;
            }
        }
        return true;
    }

    void rec(size_t k) {
        long long node = col_.nodes.fetch_add(1, std::memory_order_relaxed);
        if ((node & 1023) == 0) col_.check_deadline();
        if (col_.stop.load(std::memory_order_relaxed)) return;

        if (k == free_.size()) {
            emit_leaf();
            return;
        }
        auto [i, j] = free_[k];
        bool row_end = k + 1 == free_.size() || free_[k + 1].first > i;
        for (int v = 0; v < n_; ++v) {
            if (assign(i, j, v)) {
                if (!lex_leader_ || !row_end || lex_ok_rows(i)) rec(k + 1);
            }
            table_[i * n_ + j] = -1;
            if (col_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    void emit_leaf() {
        FiniteAlgebra alg(n_, table_, one_);
        if (!leaf_satisfies(alg, config_)) return;
        std::string canonical = canonical_form(alg).bytes;
        if (!col_.on_accept(canonical)) return;
        out_.push_back(Leaf{std::move(canonical), table_});
    }

    const SearchConfig& config_;
    int n_, one_;
    Demands demands_;
    bool pin_zero_, lex_leader_;
    Collector& col_;
    std::vector<Leaf>& out_;
    std::vector<int> table_;
    std::vector<std::pair<int, int>> free_;
};

ModelStream finish_stream(const SearchConfig& config, Collector& col,
                          std::vector<Leaf> leaves, bool lex_used) {
    ModelStream stream;
    stream.order = config.order;
    stream.raw_models = col.raw_models.load();
    stream.nodes = col.nodes.load();
    stream.complete = !col.budget_hit.load();
    stream.status = stream.complete ? SearchStatus::Complete
                                    : SearchStatus::BudgetExhausted;

    std::sort(leaves.begin(), leaves.end(), [](const Leaf& a, const Leaf& b) {
        if (a.canonical != b.canonical) return a.canonical < b.canonical;
        return a.table < b.table;
    });

    if (config.canonical_only) {
        std::map<std::string, long long> counts;
        for (const Leaf& l : leaves) ++counts[l.canonical];
        long long cap = config.max_models ? *config.max_models
                                          : static_cast<long long>(counts.size());
        for (const auto& [bytes, count] : counts) {
            if (static_cast<long long>(stream.models.size()) >= cap) break;
            stream.models.push_back(
                algebra_from_canonical(config.order, CanonicalForm{bytes}));
            if (!lex_used) stream.class_counts.push_back(count);
        }
    } else {
        long long cap = config.max_models ? *config.max_models
                                          : static_cast<long long>(leaves.size());
        for (const Leaf& l : leaves) {
            if (static_cast<long long>(stream.models.size()) >= cap) break;
            stream.models.emplace_back(config.order, l.table, config.order - 1);
        }
    }
    return stream;
}

void validate_config(const SearchConfig& config) {
    if (config.order < 1) throw std::invalid_argument("order must be >= 1");
    if (config.order > kMaxCanonicalOrder)
        throw std::invalid_argument(
            "enumeration orders the stream by canonical form and is limited "
            "to order " +
            std::to_string(kMaxCanonicalOrder));
    for (const Constraint& s : config.satisfy)
        for (const Constraint& r : config.refute)
            if (to_string(s) == to_string(r))
                throw std::invalid_argument("satisfy and refute sets intersect");
}

int resolved_threads(int requested) {
#ifdef _OPENMP
    if (requested == 0) return omp_get_max_threads();
    return std::max(1, requested);
#else
    (void)requested;
    return 1;
#endif
}

} // namespace

ModelStream enumerate(const SearchConfig& config) {
    validate_config(config);
    Collector col(config);

    Demands demands = demands_for(config.satisfy);
    bool pin_zero =
        config.canonical_only && demands.bounded && config.order >= 2;
    bool star_free = true;
    for (const Constraint& c : config.satisfy)
        star_free = star_free && constraint_star_free(c);
    for (const Constraint& c : config.refute)
        star_free = star_free && constraint_star_free(c);
    bool lex = config.lex_leader && config.canonical_only &&
               ((pin_zero && demands.dn) || star_free);

    std::vector<Leaf> leaves;
    TableSearch probe(config, demands, pin_zero, lex, col, leaves);
    if (!probe.apply_forced())
        return finish_stream(config, col, std::move(leaves), lex);

    const size_t free_count = probe.free_cells().size();
    int threads = resolved_threads(config.threads);

    if (threads <= 1 || free_count < 2) {
        probe.run({});
        return finish_stream(config, col, std::move(leaves), lex);
    }

#ifdef _OPENMP
    const int n = config.order;
    const int tasks = n * n;  // split on the first two free cells
    std::vector<std::vector<Leaf>> parts(tasks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int t = 0; t < tasks; ++t) {
        if (col.stop.load(std::memory_order_relaxed)) continue;
        TableSearch worker(config, demands, pin_zero, lex, col, parts[t]);
        if (!worker.apply_forced()) continue;
        worker.run({t / n, t % n});
    }
    for (auto& part : parts)
        for (Leaf& l : part) leaves.push_back(std::move(l));
#else
    probe.run({});
#endif
    return finish_stream(config, col, std::move(leaves), lex);
}

ModelStream enumerate_naive(const SearchConfig& config, bool force_unit_cells) {
    validate_config(config);
    Collector col(config);
    const int n = config.order;
    const int one = n - 1;

    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> free_cells;
    if (force_unit_cells) {
        Demands demands = demands_for(config.satisfy);
        if (demands.be1)
            for (int a = 0; a < n; ++a) table[a * n + a] = one;
        if (demands.be2)
            for (int a = 0; a < n; ++a) table[a * n + one] = one;
        if (demands.be3)
            for (int a = 0; a < n; ++a) {
                if (table[one * n + a] >= 0 && table[one * n + a] != a)
                    return finish_stream(config, col, {}, false);
                table[one * n + a] = a;
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table[i * n + j] < 0) free_cells.emplace_back(i, j);

    std::vector<Leaf> leaves;
    auto rec = [&](auto&& self, size_t k) -> void {
        long long node = col.nodes.fetch_add(1, std::memory_order_relaxed);
        if ((node & 1023) == 0) col.check_deadline();
        if (col.stop.load(std::memory_order_relaxed)) return;
        if (k == free_cells.size()) {
            FiniteAlgebra alg(n, table, one);
            if (!leaf_satisfies(alg, config)) return;
            std::string canonical = canonical_form(alg).bytes;
            col.on_accept(canonical);
            leaves.push_back(Leaf{std::move(canonical), table});
            return;
        }
        auto [i, j] = free_cells[k];
        for (int v = 0; v < n; ++v) {
            table[i * n + j] = v;
            self(self, k + 1);
            if (col.stop.load(std::memory_order_relaxed)) break;
        }
        table[i * n + j] = -1;
    };
    rec(rec, 0);
    return finish_stream(config, col, std::move(leaves), false);
}

CounterexampleResult find_counterexample(const std::vector<Constraint>& satisfy,
                                         const std::vector<Constraint>& refute,
                                         int max_order,
                                         std::optional<double> time_budget_seconds,
                                         int threads) {
    CounterexampleResult result;
    auto start = std::chrono::steady_clock::now();
    for (int order = 1; order <= max_order; ++order) {
        SearchConfig cfg;
        cfg.order = order;
        cfg.satisfy = satisfy;
        cfg.refute = refute;
        cfg.max_models = 1;
        cfg.canonical_only = true;
        cfg.threads = threads;
        if (time_budget_seconds) {
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            double remaining = *time_budget_seconds - elapsed;
            if (remaining <= 0) {
                result.status = SearchStatus::BudgetExhausted;
                return result;
            }
            cfg.time_budget_seconds = remaining;
        }
        ModelStream stream = enumerate(cfg);
        OrderScan scan;
        scan.order = order;
        scan.found = !stream.models.empty();
        // Hitting the 1-model cap ends the scan early, so the hit order
        // itself is never claimed exhaustive.
        scan.complete = stream.complete && !scan.found;
        result.scanned.push_back(scan);
        if (scan.found) {
            result.model = stream.models.front();
            result.model_order = order;
            return result;
        }
        if (!stream.complete) {
            result.status = SearchStatus::BudgetExhausted;
            return result;
        }
    }
    return result;
}

} // namespace qwalg
