#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalg {

// A finite algebra (X, ->, 1) of type (2,0) on the carrier {0,...,n-1}.
// imp(a,b) is the element a -> b. Construction checks well-formedness only;
// whether any axioms hold is the axiom engine's business.
class FiniteAlgebra {
public:
    static constexpr int kMaxOrder = 255;

    FiniteAlgebra(int order, std::vector<int> imp, int one,
                  std::vector<std::string> names = {});

    int order() const { return n_; }
    int one() const { return one_; }
    int imp(int a, int b) const { return imp_[a * n_ + b]; }
    const std::vector<int>& imp_table() const { return imp_; }

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    // Display label of an element: its name if given, else its index.
    std::string label(int a) const;
    // Resolves a token to an element index: exact name match first, then
    // a decimal index. Returns -1 if neither works.
    int element_by_token(const std::string& token) const;

    // Names are cosmetic metadata and do not take part in equality.
    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
        return a.n_ == b.n_ && a.one_ == b.one_ && a.imp_ == b.imp_;
    }

private:
    int n_;
    std::vector<int> imp_;
    int one_;
    std::vector<std::string> names_;
};

// All operations and relations derived from the implication table, computed
// eagerly (each table is O(n^2)):
//   zero    = least z whose row is constant one (index 0 if no such row)
//   star[a] = a -> zero
//   join    = (a->b)->b,               meet = (a* join b*)*
//   prod    = (a -> b*)*,              osum = (a* prod b*)*
//   leq     : a->b = one,              leq_q: meet(a,b) = a
struct DerivedOps {
    int n = 0;
    int one = 0;
    int zero = 0;
    std::vector<int> star;                  // n entries
    std::vector<int> meet, join, prod, osum; // n*n, row-major
    std::vector<std::uint8_t> leq, leq_q;    // n*n, row-major

    int star_of(int a) const { return star[a]; }
    int meet_of(int a, int b) const { return meet[a * n + b]; }
    int join_of(int a, int b) const { return join[a * n + b]; }
    int prod_of(int a, int b) const { return prod[a * n + b]; }
    int osum_of(int a, int b) const { return osum[a * n + b]; }
    bool leq_of(int a, int b) const { return leq[a * n + b] != 0; }
    bool leq_q_of(int a, int b) const { return leq_q[a * n + b] != 0; }
};

DerivedOps derive(const FiniteAlgebra& alg);

// A subset of the carrier as a bitset. Supports orders up to 64, which covers
// everything the power-set scans in the structure layer can handle anyway.
class ElementSubset {
public:
    ElementSubset() = default;
    ElementSubset(int order, std::uint64_t bits);
    static ElementSubset empty(int order) { return ElementSubset(order, 0); }
    static ElementSubset full(int order);
    static ElementSubset of(int order, std::initializer_list<int> elems);

    int order() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    bool contains(int e) const { return (bits_ >> e) & 1u; }
    void add(int e);
    int count() const;
    bool is_empty() const { return bits_ == 0; }
    std::vector<int> elements() const;

    friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

class EmptySubsetError : public std::runtime_error {
public:
    EmptySubsetError() : std::runtime_error("subset must be nonempty") {}
};

} // namespace qwalg
