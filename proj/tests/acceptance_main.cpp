// Acceptance suite: one timed pass/fail line per criterion, nonzero exit if
// any fails. Criteria 5-8 share the exhaustive enumeration of involutive BE
// algebras of order <= 4 (up to isomorphism).

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fixtures_data.hpp"
#include "qwalg/io.hpp"
#include "qwalg/search.hpp"
#include "qwalg/theorems.hpp"
#include "qwalg/transforms.hpp"

using namespace qwalg;

namespace {

struct Criterion {
    int number;
    const char* description;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& detail, const std::string& note) {
    if (!cond && detail.empty()) detail = note;
    return cond;
}

std::vector<FiniteAlgebra> involutive_be_upto(int max_order) {
    std::vector<FiniteAlgebra> out;
    for (int order = 1; order <= max_order; ++order) {
        SearchConfig cfg;
        cfg.order = order;
        cfg.satisfy = {Constraint{ClassId::InvolutiveBE}};
        cfg.threads = 0;
        ModelStream s = enumerate(cfg);
        if (!s.complete) return {};
        for (auto& m : s.models) out.push_back(std::move(m));
    }
    return out;
}

} // namespace

int main() {
    const auto remark36 = fixtures::remark36();
    const auto example319 = fixtures::example319();
    const auto example414 = fixtures::example414();

    std::vector<Criterion> criteria;

    criteria.push_back({1, "remark-3.6 meet table and order relations", 1.0,
                        [&](std::string& detail) {
        auto ops = derive(remark36);
        bool ok = expect(ops.meet == fixtures::kRemark36Meet, detail,
                         "meet table mismatch");
        ok &= expect(ops.leq_of(3, 2), detail, "3 <= 2 expected");
        ok &= expect(!ops.leq_q_of(3, 2), detail, "3 <=Q 2 unexpected");
        ok &= expect(ops.leq_q_of(4, 6), detail, "4 <=Q 6 expected");
        ok &= expect(ops.leq_q_of(6, 3), detail, "6 <=Q 3 expected");
        ok &= expect(!ops.leq_q_of(4, 3), detail, "4 <=Q 3 unexpected");
        return ok;
    }});

    criteria.push_back({2, "QW refutation witness (2,0,6) with sides 2 vs 3", 1.0,
                        [&](std::string& detail) {
        AxiomReport r = check_axiom(remark36, AxiomId::QW);
        bool ok = expect(!r.holds, detail, "QW unexpectedly holds");
        ok &= expect(r.witness.has_value(), detail, "missing witness");
        if (!ok) return false;
        ok &= expect(r.witness->tuple == std::vector<int>{2, 0, 6}, detail,
                     "wrong witness tuple");
        ok &= expect(r.witness->lhs == 2 && r.witness->rhs == 3, detail,
                     "wrong witness sides");
        return ok;
    }});

    criteria.push_back({3, "classification of example-3.19", 1.0,
                        [&](std::string& detail) {
        auto ops = derive(example319);
        auto rep = classify(example319, ops);
        bool ok = expect(rep.holds(ClassId::QW), detail, "QW expected");
        ok &= expect(!rep.holds(ClassId::Wajsberg), detail,
                     "Wajsberg unexpectedly holds");
        ok &= expect(!rep.holds(ClassId::CommutativeQuantumB), detail,
                     "commutative quantum-B unexpectedly holds");
        // The reported failure must be consistent with: c <= b but
        // a->c = 1 not<= a = a->b (elements a,b,c = 1,2,3; one = 4).
        auto qb = check_quantum_b(example319, ops, OrderKind::Leq);
        ok &= expect(!qb.qb2.holds && qb.qb2.witness.has_value(), detail,
                     "QB2 should fail with a witness");
        if (!ok) return false;
        const Witness& w = *qb.qb2.witness;
        ok &= expect(w.tuple == std::vector<int>{1, 3, 2}, detail,
                     "QB2 witness tuple");
        ok &= expect(w.lhs == 4 && w.rhs == 1, detail, "QB2 witness sides");
        ok &= expect(ops.leq_of(3, 2), detail, "c <= b expected");
        ok &= expect(example319.imp(1, 3) == 4 && example319.imp(1, 2) == 1,
                     detail, "a->c / a->b values");
        ok &= expect(!ops.leq_of(4, 1), detail, "1 <= a unexpected");
        return ok;
    }});

    criteria.push_back({4, "transformation fidelity to examples 5.5 / 5.6", 1.0,
                        [&](std::string& detail) {
        ProductAlgebra p55 = to_product(example319);
        bool ok = expect(p55.prod == fixtures::example55().prod, detail,
                         "5.5 product table");
        ok &= expect(derived_sum(p55) == fixtures::kExample55Osum, detail,
                     "5.5 sum table");
        std::optional<Witness> w;
        ok &= expect(!product_mv_prime_holds(p55, &w), detail,
                     "MV' should fail on 5.5");
        if (w) {
            ok &= expect(w->tuple == std::vector<int>{1, 3}, detail,
                         "MV' witness pair (a,c)");
            ok &= expect(w->lhs == 3 && w->rhs == 1, detail,
                         "MV' sides c vs a");
        }
        ProductAlgebra p56 = to_product(example414);
        ok &= expect(p56.prod == fixtures::example56().prod, detail,
                     "5.6 product table");
        ok &= expect(derived_sum(p56) == fixtures::kExample56Osum, detail,
                     "5.6 sum table");
        ok &= expect(product_mv_prime_holds(p56, nullptr), detail,
                     "MV' should hold on 5.6");
        return ok;
    }});

    // The shared exhaustive set is built once, inside criterion 5's clock.
    auto models = std::make_shared<std::vector<FiniteAlgebra>>();

    criteria.push_back({5, "round trips on fixtures and all involutive BE of order <= 4",
                        60.0, [&, models](std::string& detail) {
        *models = involutive_be_upto(4);
        bool ok = expect(!models->empty(), detail, "enumeration incomplete");
        auto check_roundtrip = [&](const FiniteAlgebra& alg) {
            ProductAlgebra p = to_product(alg);
            return to_implication(p) == alg && to_product(to_implication(p)) == p;
        };
        for (const auto& alg : fixtures::implication_fixtures())
            ok &= expect(check_roundtrip(alg), detail, "fixture round trip");
        for (const auto& alg : *models)
            ok &= expect(check_roundtrip(alg), detail, "enumerated round trip");
        return ok;
    }});

    criteria.push_back({6, "QW <-> Pqmv on every involutive BE of order <= 4",
                        120.0, [&, models](std::string& detail) {
        bool ok = expect(!models->empty(), detail, "enumeration incomplete");
        for (const auto& alg : *models) {
            auto ops = derive(alg);
            bool qw = axiom_holds(alg, ops, AxiomId::QW);
            bool pqmv = product_pqmv_holds(to_product(alg), nullptr);
            ok &= expect(qw == pqmv, detail, "QW / Pqmv disagreement");
            EquivalenceReport rep = check_definitional_equivalence(alg);
            ok &= expect(rep.ok(), detail, "equivalence report not ok");
        }
        return ok;
    }});

    criteria.push_back({7, "axiom-equivalence suite on the same exhaustive set",
                        120.0, [&, models](std::string& detail) {
        bool ok = expect(!models->empty(), detail, "enumeration incomplete");
        for (const auto& alg : *models) {
            auto ops = derive(alg);
            bool qw = axiom_holds(alg, ops, AxiomId::QW);
            bool qw12 = axiom_holds(alg, ops, AxiomId::QW1) &&
                        axiom_holds(alg, ops, AxiomId::QW2);
            ok &= expect(qw == qw12, detail, "QW vs QW1+QW2");
            bool an = axiom_holds(alg, ops, AxiomId::An);
            bool vee = axiom_holds(alg, ops, AxiomId::VeeComm);
            ok &= expect((qw && an) == vee, detail, "QW+An vs veeComm");
            bool wajsberg = class_holds(alg, ops, ClassId::Wajsberg);
            if (wajsberg) ok &= expect(qw, detail, "Wajsberg without QW");
            if (axiom_holds(alg, ops, AxiomId::SelfDistributive))
                ok &= expect(vee, detail, "self-distributive without veeComm");
            if (qw) {
                ok &= expect(axiom_holds(alg, ops, AxiomId::LeqQRefl) &&
                                 axiom_holds(alg, ops, AxiomId::Santisym) &&
                                 axiom_holds(alg, ops, AxiomId::LeqQTrans),
                             detail, "QW without <=_Q partial order");
            }
        }
        return ok;
    }});

    criteria.push_back({8, "theorem suite on fixtures and enumerated QW models",
                        300.0, [&, models](std::string& detail) {
        bool ok = expect(!models->empty(), detail, "enumeration incomplete");
        auto sound = [&](const FiniteAlgebra& alg) {
            for (const TheoremResult& r : verify_all(alg))
                if (!r.holds) return false;
            return true;
        };
        for (const auto& alg : fixtures::implication_fixtures())
            ok &= expect(sound(alg), detail, "fixture theorem failure");
        ok &= expect(sound(to_implication(fixtures::example55())), detail,
                     "example-5.5 theorem failure");
        ok &= expect(sound(to_implication(fixtures::example56())), detail,
                     "example-5.6 theorem failure");
        for (const auto& alg : *models) {
            auto ops = derive(alg);
            if (!class_holds(alg, ops, ClassId::QW)) continue;
            ok &= expect(sound(alg), detail, "enumerated QW theorem failure");
        }
        return ok;
    }});

    criteria.push_back({9, "order-5 search rediscovers example-3.19", 600.0,
                        [&](std::string& detail) {
        // The order-5 stream must contain example-3.19's isomorphism class,
        // and exhaustive absence below the smallest hit must carry
        // completeness flags. Exhaustive search places the smallest
        // QW-non-Wajsberg algebra at order 4 (see the search tests), so the
        // absence claims cover orders 1..3.
        auto qw = std::vector<Constraint>{Constraint{ClassId::QW}};
        auto wajsberg = std::vector<Constraint>{Constraint{ClassId::Wajsberg}};
        CounterexampleResult scan = find_counterexample(qw, wajsberg, 5, {}, 0);
        bool ok = expect(scan.model.has_value(), detail, "no separating model");
        ok &= expect(scan.model_order == 4, detail,
                     "smallest separating order should be 4");
        for (const OrderScan& s : scan.scanned) {
            if (s.order < scan.model_order)
                ok &= expect(s.complete && !s.found, detail,
                             "orders below the hit must be exhaustively empty");
        }

        SearchConfig cfg;
        cfg.order = 5;
        cfg.satisfy = qw;
        cfg.refute = wajsberg;
        cfg.threads = 0;
        ModelStream s5 = enumerate(cfg);
        ok &= expect(s5.complete, detail, "order-5 enumeration incomplete");
        CanonicalForm target = canonical_form(example319);
        bool hit = false;
        for (const auto& m : s5.models) hit = hit || canonical_form(m) == target;
        ok &= expect(hit, detail, "no model matching example-3.19");
        return ok;
    }});

    criteria.push_back({10, "first meander of every q-ideal of example-5.6 is a filter",
                        1.0, [&](std::string& detail) {
        FiniteAlgebra alg = to_implication(fixtures::example56());
        auto ops = derive(alg);
        bool ok = true;
        int ideals = 0;
        for (std::uint64_t bits = 1; bits < 32; ++bits) {
            ElementSubset s(5, bits);
            if (!is_q_ideal(alg, ops, s)) continue;
            ++ideals;
            ElementSubset m = first_meander(alg, ops, s);
            ok &= expect(!m.is_empty(), detail, "empty meander");
            ok &= expect(is_filter(alg, ops, m), detail,
                         "meander is not a filter");
        }
        ok &= expect(ideals > 0, detail, "no q-ideals found");
        return ok;
    }});

    int failed = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        bool in_time = dt <= c.limit_seconds;
        bool pass = ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s criterion %2d: %s (%.2fs, limit %.0fs)%s%s\n",
                    pass ? "PASS" : "FAIL", c.number, c.description, dt,
                    c.limit_seconds, detail.empty() ? "" : " -- ",
                    detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
