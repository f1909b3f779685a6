#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalg/axioms.hpp"

namespace qwalg {

// An algebra (X, ., *, 1) of type (2,1,0) on {0..n-1}: the product signature.
// star is primitive here; zero := star[one].
struct ProductAlgebra {
    int order = 0;
    std::vector<int> prod;   // n*n, row-major
    std::vector<int> star;   // n
    int one = 0;
    std::vector<std::string> names;

    int prod_of(int a, int b) const { return prod[a * order + b]; }
    int star_of(int a) const { return star[a]; }
    int zero() const { return star[one]; }
    std::string label(int a) const;
    int element_by_token(const std::string& token) const;

    friend bool operator==(const ProductAlgebra& a, const ProductAlgebra& b) {
        return a.order == b.order && a.one == b.one && a.prod == b.prod &&
               a.star == b.star;
    }
};

ProductAlgebra make_product_algebra(int order, std::vector<int> prod,
                                    std::vector<int> star, int one,
                                    std::vector<std::string> names = {});

enum class MBEAxiom { PU, Pcomm, Pass, ML, MRe, DN };

const char* to_string(MBEAxiom id);

// Thrown by to_product when the input is not an involutive BE algebra.
class NotInvolutiveError : public std::runtime_error {
public:
    NotInvolutiveError(AxiomId failed, Witness w);
    AxiomId failed_axiom() const { return failed_; }
    const Witness& witness() const { return witness_; }

private:
    AxiomId failed_;
    Witness witness_;
};

// Thrown by to_implication when the input is not an involutive m-BE algebra.
class NotInvolutiveMBEError : public std::runtime_error {
public:
    NotInvolutiveMBEError(MBEAxiom failed, Witness w);
    MBEAxiom failed_axiom() const { return failed_; }
    const Witness& witness() const { return witness_; }

private:
    MBEAxiom failed_;
    Witness witness_;
};

// Checks PU, Pcomm, Pass, m-L, m-Re, DN on a product algebra; first failure.
struct MBECheck {
    bool ok = true;
    MBEAxiom failed{};
    Witness witness;
};
MBECheck check_involutive_mbe(const ProductAlgebra& p);

// x . y := (x -> y*)*. Refuses inputs that are not involutive BE.
ProductAlgebra to_product(const FiniteAlgebra& alg);

// x -> y := (x . y*)*. Refuses inputs that are not involutive m-BE.
FiniteAlgebra to_implication(const ProductAlgebra& p);

// x (+) y := (x* . y*)*, as an n*n table.
std::vector<int> derived_sum(const ProductAlgebra& p);

// Product-native evaluation (independent of the implication route):
//   meet_m(x,y) = (x* . y)* . y      join_m(x,y) = (x* meet_m y*)*
bool product_pqmv_holds(const ProductAlgebra& p,
                        std::optional<Witness>* witness = nullptr);
bool product_mv_prime_holds(const ProductAlgebra& p,
                            std::optional<Witness>* witness = nullptr);

struct EquivalenceReport {
    bool qw_holds = false;        // (QW) on the implication side
    bool pqmv_holds = false;      // (Pqmv) on the product image, product-native
    bool roundtrip_imp_ok = false; // to_implication(to_product(A)) == A
    bool roundtrip_prod_ok = false; // to_product(to_implication(P)) == P
    std::optional<Witness> qw_witness;
    std::optional<Witness> pqmv_witness;

    bool equivalent() const { return qw_holds == pqmv_holds; }
    bool ok() const { return equivalent() && roundtrip_imp_ok && roundtrip_prod_ok; }
};

// Verifies QW(A) <-> Pqmv(to_product(A)) plus both round-trip identities.
// Propagates NotInvolutiveError for non-involutive input.
EquivalenceReport check_definitional_equivalence(const FiniteAlgebra& alg);

} // namespace qwalg
