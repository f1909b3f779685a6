#include "qwalg/algebra.hpp"

#include <bit>

namespace qwalg {

FiniteAlgebra::FiniteAlgebra(int order, std::vector<int> imp, int one,
                             std::vector<std::string> names)
    : n_(order), imp_(std::move(imp)), one_(one), names_(std::move(names)) {
    if (n_ < 1 || n_ > kMaxOrder)
        throw std::invalid_argument("order must be in [1, 255]");
    if (one_ < 0 || one_ >= n_)
        throw std::invalid_argument("one must be an element index");
    if (imp_.size() != static_cast<size_t>(n_) * n_)
        throw std::invalid_argument("implication table must have order^2 entries");
    for (int v : imp_)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("table entry out of range");
    if (!names_.empty() && names_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("names must list one label per element");
}

std::string FiniteAlgebra::label(int a) const {
    if (has_names()) return names_[a];
    return std::to_string(a);
}

int FiniteAlgebra::element_by_token(const std::string& token) const {
    for (int i = 0; i < n_ && has_names(); ++i)
        if (names_[i] == token) return i;
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size() && v >= 0 && v < n_) return v;
    } catch (const std::exception&) {
    }
    return -1;
}

DerivedOps derive(const FiniteAlgebra& alg) {
    const int n = alg.order();
    const int one = alg.one();
    DerivedOps d;
    d.n = n;
    d.one = one;

    // zero: least element (constant-one row); index 0 when none exists, in
    // which case the bounded axiom will report false.
    d.zero = 0;
    for (int z = 0; z < n; ++z) {
        bool least = true;
        for (int x = 0; x < n && least; ++x) least = alg.imp(z, x) == one;
        if (least) {
            d.zero = z;
            break;
        }
    }

    d.star.resize(n);
    for (int a = 0; a < n; ++a) d.star[a] = alg.imp(a, d.zero);

    d.join.resize(static_cast<size_t>(n) * n);
    d.meet.resize(static_cast<size_t>(n) * n);
    d.prod.resize(static_cast<size_t>(n) * n);
    d.osum.resize(static_cast<size_t>(n) * n);
    d.leq.resize(static_cast<size_t>(n) * n);
    d.leq_q.resize(static_cast<size_t>(n) * n);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            d.join[a * n + b] = alg.imp(alg.imp(a, b), b);
            d.prod[a * n + b] = d.star[alg.imp(a, d.star[b])];
            d.leq[a * n + b] = alg.imp(a, b) == one ? 1 : 0;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            d.meet[a * n + b] = d.star[d.join[d.star[a] * n + d.star[b]]];
            d.osum[a * n + b] = d.star[d.prod[d.star[a] * n + d.star[b]]];
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            d.leq_q[a * n + b] = d.meet[a * n + b] == a ? 1 : 0;
    return d;
}

ElementSubset::ElementSubset(int order, std::uint64_t bits)
    : n_(order), bits_(bits) {
    if (order < 0 || order > 64)
        throw std::invalid_argument("subsets support orders up to 64");
    if (order < 64 && (bits >> order) != 0)
        throw std::invalid_argument("subset bits exceed the carrier");
}

ElementSubset ElementSubset::full(int order) {
    std::uint64_t bits =
        order >= 64 ? ~0ull : ((1ull << order) - 1);
    return ElementSubset(order, bits);
}

ElementSubset ElementSubset::of(int order, std::initializer_list<int> elems) {
    ElementSubset s(order, 0);
    for (int e : elems) s.add(e);
    return s;
}

void ElementSubset::add(int e) {
    if (e < 0 || e >= n_) throw std::invalid_argument("element out of range");
    bits_ |= 1ull << e;
}

int ElementSubset::count() const { return std::popcount(bits_); }

std::vector<int> ElementSubset::elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

} // namespace qwalg
