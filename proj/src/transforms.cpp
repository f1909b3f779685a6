#include "qwalg/transforms.hpp"

namespace qwalg {

std::string ProductAlgebra::label(int a) const {
    if (!names.empty()) return names[a];
    return std::to_string(a);
}

int ProductAlgebra::element_by_token(const std::string& token) const {
    for (int i = 0; i < order && !names.empty(); ++i)
        if (names[i] == token) return i;
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size() && v >= 0 && v < order) return v;
    } catch (const std::exception&) {
    }
    return -1;
}

ProductAlgebra make_product_algebra(int order, std::vector<int> prod,
                                    std::vector<int> star, int one,
                                    std::vector<std::string> names) {
    if (order < 1 || order > FiniteAlgebra::kMaxOrder)
        throw std::invalid_argument("order must be in [1, 255]");
    if (one < 0 || one >= order)
        throw std::invalid_argument("one must be an element index");
    if (prod.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("product table must have order^2 entries");
    if (star.size() != static_cast<size_t>(order))
        throw std::invalid_argument("star table must have order entries");
    for (int v : prod)
        if (v < 0 || v >= order)
            throw std::invalid_argument("table entry out of range");
    for (int v : star)
        if (v < 0 || v >= order)
            throw std::invalid_argument("star entry out of range");
    if (!names.empty() && names.size() != static_cast<size_t>(order))
        throw std::invalid_argument("names must list one label per element");
    ProductAlgebra p;
    p.order = order;
    p.prod = std::move(prod);
    p.star = std::move(star);
    p.one = one;
    p.names = std::move(names);
    return p;
}

const char* to_string(MBEAxiom id) {
    switch (id) {
        case MBEAxiom::PU: return "PU";
        case MBEAxiom::Pcomm: return "Pcomm";
        case MBEAxiom::Pass: return "Pass";
        case MBEAxiom::ML: return "m-L";
        case MBEAxiom::MRe: return "m-Re";
        case MBEAxiom::DN: return "DN";
    }
    return "?";
}

NotInvolutiveError::NotInvolutiveError(AxiomId failed, Witness w)
    : std::runtime_error(std::string("not an involutive BE algebra: axiom ") +
                         to_string(failed) + " fails"),
      failed_(failed),
      witness_(std::move(w)) {}

NotInvolutiveMBEError::NotInvolutiveMBEError(MBEAxiom failed, Witness w)
    : std::runtime_error(std::string("not an involutive m-BE algebra: axiom ") +
                         to_string(failed) + " fails"),
      failed_(failed),
      witness_(std::move(w)) {}

MBECheck check_involutive_mbe(const ProductAlgebra& p) {
    const int n = p.order;
    const int one = p.one;
    const int zero = p.zero();
    auto fail = [](MBEAxiom id, std::vector<int> t, int lhs, int rhs) {
        MBECheck c;
        c.ok = false;
        c.failed = id;
        c.witness = Witness{std::move(t), lhs, rhs};
        return c;
    };
    for (int a = 0; a < n; ++a) {
        if (p.prod_of(one, a) != a)
            return fail(MBEAxiom::PU, {a}, p.prod_of(one, a), a);
        if (p.prod_of(a, one) != a)
            return fail(MBEAxiom::PU, {a}, p.prod_of(a, one), a);
        if (p.prod_of(a, zero) != zero)
            return fail(MBEAxiom::ML, {a}, p.prod_of(a, zero), zero);
        if (p.prod_of(a, p.star_of(a)) != zero)
            return fail(MBEAxiom::MRe, {a}, p.prod_of(a, p.star_of(a)), zero);
        if (p.star_of(p.star_of(a)) != a)
            return fail(MBEAxiom::DN, {a}, p.star_of(p.star_of(a)), a);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.prod_of(a, b) != p.prod_of(b, a))
                return fail(MBEAxiom::Pcomm, {a, b}, p.prod_of(a, b),
                            p.prod_of(b, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = p.prod_of(a, p.prod_of(b, c));
                int rhs = p.prod_of(p.prod_of(a, b), c);
                if (lhs != rhs) return fail(MBEAxiom::Pass, {a, b, c}, lhs, rhs);
            }
    return {};
}

namespace {

// First failing axiom among the involutive-BE requirements, in a fixed order.
void require_involutive_be(const FiniteAlgebra& alg, const DerivedOps& ops) {
    for (AxiomId id : class_axioms(ClassId::InvolutiveBE)) {
        AxiomReport r = check_axiom(alg, ops, id);
        if (!r.holds) throw NotInvolutiveError(id, *r.witness);
    }
}

} // namespace

ProductAlgebra to_product(const FiniteAlgebra& alg) {
    DerivedOps ops = derive(alg);
    require_involutive_be(alg, ops);
    ProductAlgebra p;
    p.order = alg.order();
    p.one = alg.one();
    p.star = ops.star;
    p.prod = ops.prod;
    p.names = alg.names();
    return p;
}

FiniteAlgebra to_implication(const ProductAlgebra& p) {
    MBECheck c = check_involutive_mbe(p);
    if (!c.ok) throw NotInvolutiveMBEError(c.failed, c.witness);
    const int n = p.order;
    std::vector<int> imp(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            imp[a * n + b] = p.star_of(p.prod_of(a, p.star_of(b)));
    return FiniteAlgebra(n, std::move(imp), p.one, p.names);
}

std::vector<int> derived_sum(const ProductAlgebra& p) {
    const int n = p.order;
    std::vector<int> osum(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            osum[a * n + b] =
                p.star_of(p.prod_of(p.star_of(a), p.star_of(b)));
    return osum;
}

namespace {

struct ProductOps {
    const ProductAlgebra& p;
    int meet(int x, int y) const {  // (x* . y)* . y
        return p.prod_of(p.star_of(p.prod_of(p.star_of(x), y)), y);
    }
    int join(int x, int y) const {  // (x* meet y*)*
        return p.star_of(meet(p.star_of(x), p.star_of(y)));
    }
};

} // namespace

bool product_pqmv_holds(const ProductAlgebra& p,
                        std::optional<Witness>* witness) {
    ProductOps o{p};
    const int n = p.order;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = p.prod_of(
                    x, o.join(o.join(p.star_of(x), y), o.join(z, p.star_of(x))));
                int rhs = o.join(p.prod_of(x, y), p.prod_of(x, z));
                if (lhs != rhs) {
                    if (witness) *witness = Witness{{x, y, z}, lhs, rhs};
                    return false;
                }
            }
    return true;
}

bool product_mv_prime_holds(const ProductAlgebra& p,
                            std::optional<Witness>* witness) {
    const int n = p.order;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int lhs = p.prod_of(p.star_of(p.prod_of(p.star_of(x), y)), y);
            int rhs = p.prod_of(p.star_of(p.prod_of(p.star_of(y), x)), x);
            if (lhs != rhs) {
                if (witness) *witness = Witness{{x, y}, lhs, rhs};
                return false;
            }
        }
    return true;
}

EquivalenceReport check_definitional_equivalence(const FiniteAlgebra& alg) {
    DerivedOps ops = derive(alg);
    require_involutive_be(alg, ops);

    EquivalenceReport rep;
    AxiomReport qw = check_axiom(alg, ops, AxiomId::QW);
    rep.qw_holds = qw.holds;
    rep.qw_witness = qw.witness;

    ProductAlgebra p = to_product(alg);
    std::optional<Witness> pw;
    rep.pqmv_holds = product_pqmv_holds(p, &pw);
    rep.pqmv_witness = pw;

    rep.roundtrip_imp_ok = to_implication(p) == alg;
    rep.roundtrip_prod_ok = to_product(to_implication(p)) == p;
    return rep;
}

} // namespace qwalg
