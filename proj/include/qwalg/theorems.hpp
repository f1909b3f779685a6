#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalg/axioms.hpp"

namespace qwalg {

// Preconditions of registry entries, as composite classes (possibly refined
// by single axioms). Entries whose precondition fails are vacuously true.
enum class Precond {
    BE,
    BoundedBE,
    InvolutiveBE,
    InvolutiveSelfDistributive,
    InvolutiveQW1,
    InvolutiveQW1An,
    QW,
    QWSelfDistributive,
    Wajsberg,
    QMV,
};

const char* to_string(Precond p);
bool precond_holds(const FiniteAlgebra& alg, const DerivedOps& ops, Precond p);

struct TheoremEntry {
    std::string id;         // stable registry key, part of the CLI contract
    Precond precond;
    std::string statement;  // human-readable formula ('->' imp, '*' star,
                            // '^' meet, 'v' join, '.' prod, '(+)' osum)
    // Returns the first failing tuple, or nullopt when the statement holds.
    std::function<std::optional<Witness>(const FiniteAlgebra&, const DerivedOps&)> check;
};

struct TheoremResult {
    std::string id;
    bool applicable = false;
    bool holds = true;        // vacuously true when not applicable
    std::optional<Witness> witness;
};

class UnknownTheoremError : public std::runtime_error {
public:
    explicit UnknownTheoremError(const std::string& id)
        : std::runtime_error("unknown theorem id: " + id) {}
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_theorem(const std::string& id);

TheoremResult verify(const FiniteAlgebra& alg, const std::string& id);
TheoremResult verify(const FiniteAlgebra& alg, const DerivedOps& ops,
                     const std::string& id);
std::vector<TheoremResult> verify_all(const FiniteAlgebra& alg);
std::vector<TheoremResult> verify_all(const FiniteAlgebra& alg,
                                      const DerivedOps& ops);

// ----- subset structures over the derived product signature -----
// Callers are expected to run these on quantum-Wajsberg algebras, where the
// derived (.,*,1) really is a quantum-MV algebra; the scans themselves are
// plain definitional checks.

// (I1) x in I, y in X  =>  x.y in I     (I2) x,y in I  =>  x(+)y in I
bool is_q_ideal(const FiniteAlgebra& alg, const DerivedOps& ops,
                const ElementSubset& s);
// q-ideal plus: x in I, y in X  =>  x^y in I
bool is_p_ideal(const FiniteAlgebra& alg, const DerivedOps& ops,
                const ElementSubset& s);
// (F1) x,y in F  =>  x.y in F          (F2) x in F, x <=_Q y  =>  y in F
bool is_filter(const FiniteAlgebra& alg, const DerivedOps& ops,
               const ElementSubset& s);
// F1 = { x | for all y: x(+)y in F  =>  y in F }
ElementSubset first_meander(const FiniteAlgebra& alg, const DerivedOps& ops,
                            const ElementSubset& s);

// Power-set scans (practical up to order ~20).
std::vector<ElementSubset> enumerate_q_ideals(const FiniteAlgebra& alg,
                                              const DerivedOps& ops);
std::vector<ElementSubset> enumerate_filters(const FiniteAlgebra& alg,
                                             const DerivedOps& ops);

} // namespace qwalg
