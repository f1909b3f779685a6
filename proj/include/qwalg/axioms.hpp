#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalg/algebra.hpp"

namespace qwalg {

// Every id maps to one quantified condition over the derived operations.
// Order matters: reports are emitted in this order.
enum class AxiomId {
    BE1, BE2, BE3, BE4,
    Bounded,
    DN,
    BCK1,
    An,              // antisymmetry of <=
    SelfDistributive,
    VeeComm,
    W1, W2, W3, W4,
    QW, QW1, QW2,
    OM,
    Santisym,        // antisymmetry of <=_Q
    S1, S2, S3, S4, S5, S6, S7,
    MVprime,
    Pqmv, Pmv, Pq, Pom,
    QB1, QB2, QB3, QB4,  // commutative instantiation over <=
    LeqRefl, LeqTrans,
    LeqQRefl, LeqQTrans,
    kCount_,
};

constexpr int kAxiomCount = static_cast<int>(AxiomId::kCount_);

const char* to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(const std::string& name);
int axiom_arity(AxiomId id);
std::vector<AxiomId> all_axioms();

// First-failure evidence: the lexicographically first tuple (of the axiom's
// arity) at which the axiom fails, with the two evaluated sides. For
// relational axioms lhs/rhs are the compared elements or 0/1 truth values.
struct Witness {
    std::vector<int> tuple;
    int lhs = 0;
    int rhs = 0;

    friend bool operator==(const Witness& a, const Witness& b) {
        return a.tuple == b.tuple && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct AxiomReport {
    AxiomId axiom{};
    bool holds = true;
    std::optional<Witness> witness;
};

struct EvalOutcome {
    bool ok = true;
    int lhs = 0;
    int rhs = 0;
};

// Evaluates one instance of an axiom at tuple (a,b,c); arguments beyond the
// axiom's arity are ignored.
EvalOutcome eval_axiom_at(const FiniteAlgebra& alg, const DerivedOps& ops,
                          AxiomId id, int a, int b = 0, int c = 0);

// Fast boolean scan, no witness bookkeeping.
bool axiom_holds(const FiniteAlgebra& alg, const DerivedOps& ops, AxiomId id);

AxiomReport check_axiom(const FiniteAlgebra& alg, const DerivedOps& ops, AxiomId id);
AxiomReport check_axiom(const FiniteAlgebra& alg, AxiomId id);

enum class ClassId {
    BE,
    BoundedBE,
    InvolutiveBE,
    BCK,
    Wajsberg,
    QW,
    QMV,   // involutive BE + Pqmv over the derived product signature
    MV,    // involutive BE + MV'
    CommutativeQuantumB,
    kCount_,
};

constexpr int kClassCount = static_cast<int>(ClassId::kCount_);

const char* to_string(ClassId id);
std::optional<ClassId> class_from_string(const std::string& name);
std::vector<AxiomId> class_axioms(ClassId id);
bool class_holds(const FiniteAlgebra& alg, const DerivedOps& ops, ClassId id);

struct ClassificationReport {
    std::vector<AxiomReport> axioms;           // in AxiomId order
    std::vector<std::pair<ClassId, bool>> classes; // in ClassId order

    const AxiomReport& axiom(AxiomId id) const;
    bool holds(AxiomId id) const { return axiom(id).holds; }
    bool holds(ClassId id) const;
};

ClassificationReport classify(const FiniteAlgebra& alg);
ClassificationReport classify(const FiniteAlgebra& alg, const DerivedOps& ops);

// Quantum-B checking on a chosen order relation. The poset requirement is
// reported, not enforced: QB1..QB4 are evaluated even when the order fails
// antisymmetry or transitivity.
enum class OrderKind { Leq, LeqQ };

const char* to_string(OrderKind k);

struct QuantumBReport {
    OrderKind order = OrderKind::Leq;
    AxiomReport reflexive, antisymmetric, transitive;
    AxiomReport qb1, qb2, qb3, qb4;

    bool poset() const {
        return reflexive.holds && antisymmetric.holds && transitive.holds;
    }
    bool all() const {
        return poset() && qb1.holds && qb2.holds && qb3.holds && qb4.holds;
    }
    std::vector<const AxiomReport*> reports() const;
};

// second_arrow, when present, is an n*n table used for the squiggly arrow in
// QB2/QB4; absent means the commutative instantiation (both arrows = imp).
QuantumBReport check_quantum_b(const FiniteAlgebra& alg, const DerivedOps& ops,
                               OrderKind order,
                               const std::vector<int>* second_arrow = nullptr);

} // namespace qwalg
