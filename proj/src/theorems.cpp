#include "qwalg/theorems.hpp"

#include <algorithm>

namespace qwalg {

const char* to_string(Precond p) {
    switch (p) {
        case Precond::BE: return "BE";
        case Precond::BoundedBE: return "boundedBE";
        case Precond::InvolutiveBE: return "involutiveBE";
        case Precond::InvolutiveSelfDistributive: return "involutiveBE+selfDistributive";
        case Precond::InvolutiveQW1: return "involutiveBE+QW1";
        case Precond::InvolutiveQW1An: return "involutiveBE+QW1+An";
        case Precond::QW: return "QW";
        case Precond::QWSelfDistributive: return "QW+selfDistributive";
        case Precond::Wajsberg: return "Wajsberg";
        case Precond::QMV: return "QMV";
    }
    return "?";
}

bool precond_holds(const FiniteAlgebra& alg, const DerivedOps& ops, Precond p) {
    auto cls = [&](ClassId c) { return class_holds(alg, ops, c); };
    auto ax = [&](AxiomId a) { return axiom_holds(alg, ops, a); };
    switch (p) {
        case Precond::BE: return cls(ClassId::BE);
        case Precond::BoundedBE: return cls(ClassId::BoundedBE);
        case Precond::InvolutiveBE: return cls(ClassId::InvolutiveBE);
        case Precond::InvolutiveSelfDistributive:
            return cls(ClassId::InvolutiveBE) && ax(AxiomId::SelfDistributive);
        case Precond::InvolutiveQW1:
            return cls(ClassId::InvolutiveBE) && ax(AxiomId::QW1);
        case Precond::InvolutiveQW1An:
            return cls(ClassId::InvolutiveBE) && ax(AxiomId::QW1) && ax(AxiomId::An);
        case Precond::QW: return cls(ClassId::QW);
        case Precond::QWSelfDistributive:
            return cls(ClassId::QW) && ax(AxiomId::SelfDistributive);
        case Precond::Wajsberg: return cls(ClassId::Wajsberg);
        case Precond::QMV: return cls(ClassId::QMV);
    }
    return false;
}

namespace {

// Terse view over an algebra's derived operations for the entry lambdas.
struct Ctx {
    const FiniteAlgebra& A;
    const DerivedOps& D;
    int n, one, zero;

    int imp(int a, int b) const { return A.imp(a, b); }
    int star(int a) const { return D.star[a]; }
    int meet(int a, int b) const { return D.meet[a * n + b]; }
    int join(int a, int b) const { return D.join[a * n + b]; }
    int prod(int a, int b) const { return D.prod[a * n + b]; }
    int osum(int a, int b) const { return D.osum[a * n + b]; }
    bool leq(int a, int b) const { return D.leq[a * n + b] != 0; }
    bool leq_q(int a, int b) const { return D.leq_q[a * n + b] != 0; }
};

using MaybeW = std::optional<Witness>;

// One conjunct: (tuple, lhs, rhs) fails when lhs != rhs.
MaybeW neq(std::vector<int> t, int lhs, int rhs) {
    if (lhs == rhs) return std::nullopt;
    return Witness{std::move(t), lhs, rhs};
}
MaybeW rel(std::vector<int> t, bool ok, int lhs, int rhs) {
    if (ok) return std::nullopt;
    return Witness{std::move(t), lhs, rhs};
}

template <class F>
MaybeW fa1(const Ctx& c, F f) {
    for (int x = 0; x < c.n; ++x)
        if (MaybeW w = f(x)) return w;
    return std::nullopt;
}
template <class F>
MaybeW fa2(const Ctx& c, F f) {
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y)
            if (MaybeW w = f(x, y)) return w;
    return std::nullopt;
}
template <class F>
MaybeW fa3(const Ctx& c, F f) {
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y)
            for (int z = 0; z < c.n; ++z)
                if (MaybeW w = f(x, y, z)) return w;
    return std::nullopt;
}

using Check = std::function<MaybeW(const FiniteAlgebra&, const DerivedOps&)>;

TheoremEntry entry(std::string id, Precond pre, std::string statement,
                   MaybeW (*fn)(const Ctx&)) {
    Check check = [fn](const FiniteAlgebra& A, const DerivedOps& D) {
        Ctx c{A, D, D.n, D.one, D.zero};
        return fn(c);
    };
    return TheoremEntry{std::move(id), pre, std::move(statement), std::move(check)};
}

bool vee_comm_all(const Ctx& c) {
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y)
            if (c.join(x, y) != c.join(y, x)) return false;
    return true;
}

bool mv_prime_all(const Ctx& c) {
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y)
            if (c.prod(c.star(c.prod(c.star(x), y)), y) !=
                c.prod(c.star(c.prod(c.star(y), x)), x))
                return false;
    return true;
}

std::vector<TheoremEntry> build_registry() {
    std::vector<TheoremEntry> r;
    auto E = [&](const char* id, Precond pre, const char* st,
                 MaybeW (*fn)(const Ctx&)) { r.push_back(entry(id, pre, st, fn)); };

    // ----- basic BE facts -----
    E("L3.2-1", Precond::BE, "x -> (y -> x) = 1", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(x, c.imp(y, x)), c.one);
        });
    });
    E("L3.2-2", Precond::BE, "x <= (x -> y) -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            int t = c.imp(c.imp(x, y), y);
            return rel({x, y}, c.leq(x, t), x, t);
        });
    });
    E("L3.2-3", Precond::BoundedBE, "x -> y* = y -> x*", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(x, c.star(y)), c.imp(y, c.star(x)));
        });
    });
    E("L3.2-4", Precond::BoundedBE, "x <= x**", +[](const Ctx& c) {
        return fa1(c, [&](int x) {
            int t = c.star(c.star(x));
            return rel({x}, c.leq(x, t), x, t);
        });
    });
    E("L3.2-5", Precond::InvolutiveBE, "x* -> y = y* -> x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.star(x), y), c.imp(c.star(y), x));
        });
    });
    E("L3.2-6", Precond::InvolutiveBE, "x* -> y* = y -> x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.star(x), c.star(y)), c.imp(y, x));
        });
    });
    E("L3.2-7", Precond::InvolutiveBE, "(x* -> y)* -> z = x* -> (y* -> z)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.imp(c.star(c.imp(c.star(x), y)), z),
                         c.imp(c.star(x), c.imp(c.star(y), z)));
          });
      });

    // ----- properties of meet / <=_Q on involutive BE -----
    E("P3.3-1", Precond::InvolutiveBE,
      "x <=Q y implies x = y ^ x and y = x v y", +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (!c.leq_q(x, y)) return std::nullopt;
              if (MaybeW w = neq({x, y}, c.meet(y, x), x)) return w;
              return neq({x, y}, c.join(x, y), y);
          });
      });
    E("P3.3-2", Precond::InvolutiveBE, "<=Q is reflexive and antisymmetric",
      +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (x == y) return rel({x, y}, c.leq_q(x, x), x, c.meet(x, x));
              bool guard = c.leq_q(x, y) && c.leq_q(y, x);
              return rel({x, y}, !guard, x, y);
          });
      });
    E("P3.3-3", Precond::InvolutiveBE, "x v y = (x* ^ y*)*", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(x, y),
                       c.star(c.meet(c.star(x), c.star(y))));
        });
    });
    E("P3.3-4", Precond::InvolutiveBE, "x <=Q y implies x <= y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return rel({x, y}, !c.leq_q(x, y) || c.leq(x, y), c.imp(x, y), c.one);
        });
    });
    E("P3.3-5", Precond::InvolutiveBE, "0 <=Q x <=Q 1", +[](const Ctx& c) {
        return fa1(c, [&](int x) -> MaybeW {
            if (MaybeW w = rel({x}, c.leq_q(c.zero, x), c.meet(c.zero, x), c.zero))
                return w;
            return rel({x}, c.leq_q(x, c.one), c.meet(x, c.one), x);
        });
    });
    E("P3.3-6", Precond::InvolutiveBE, "0 ^ x = x ^ 0 = 0 and 1 ^ x = x ^ 1 = x",
      +[](const Ctx& c) {
          return fa1(c, [&](int x) -> MaybeW {
              if (MaybeW w = neq({x}, c.meet(c.zero, x), c.zero)) return w;
              if (MaybeW w = neq({x}, c.meet(x, c.zero), c.zero)) return w;
              if (MaybeW w = neq({x}, c.meet(c.one, x), x)) return w;
              return neq({x}, c.meet(x, c.one), x);
          });
      });
    E("P3.3-7", Precond::InvolutiveBE, "x ^ (y ^ x) = y ^ x and x ^ (x ^ y) = x ^ y",
      +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.meet(x, c.meet(y, x)), c.meet(y, x)))
                  return w;
              return neq({x, y}, c.meet(x, c.meet(x, y)), c.meet(x, y));
          });
      });
    E("P3.5-1", Precond::InvolutiveBE, "(x ^ y) -> z = (y -> x) -> (y -> z)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.imp(c.meet(x, y), z),
                         c.imp(c.imp(y, x), c.imp(y, z)));
          });
      });
    E("P3.5-2", Precond::InvolutiveBE, "z -> (x v y) = (x -> y) -> (z -> y)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.imp(z, c.join(x, y)),
                         c.imp(c.imp(x, y), c.imp(z, y)));
          });
      });
    E("P3.5-3", Precond::InvolutiveBE, "x ^ y <= x, y <= x v y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            int m = c.meet(x, y), j = c.join(x, y);
            if (MaybeW w = rel({x, y}, c.leq(m, x), m, x)) return w;
            if (MaybeW w = rel({x, y}, c.leq(m, y), m, y)) return w;
            if (MaybeW w = rel({x, y}, c.leq(x, j), x, j)) return w;
            return rel({x, y}, c.leq(y, j), y, j);
        });
    });
    E("P3.5-4", Precond::InvolutiveSelfDistributive,
      "x ^ y = y ^ x and x v y = y v x", +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.meet(x, y), c.meet(y, x))) return w;
              return neq({x, y}, c.join(x, y), c.join(y, x));
          });
      });

    // ----- first consequences of (QW) -----
    E("P3.8", Precond::QW, "x -> (x ^ y) = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(x, c.meet(x, y)), c.imp(x, y));
        });
    });
    E("P3.9", Precond::InvolutiveQW1, "(x ^ y) ^ (z ^ x) = y ^ (z ^ x)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.meet(c.meet(x, y), c.meet(z, x)),
                         c.meet(y, c.meet(z, x)));
          });
      });

    E("P3.13-1", Precond::QW, "x -> (y ^ x) = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(x, c.meet(y, x)), c.imp(x, y));
        });
    });
    E("P3.13-2", Precond::QW, "x <=Q x* -> y and x <=Q y -> x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            int t = c.imp(c.star(x), y);
            if (MaybeW w = rel({x, y}, c.leq_q(x, t), c.meet(x, t), x)) return w;
            int u = c.imp(y, x);
            return rel({x, y}, c.leq_q(x, u), c.meet(x, u), x);
        });
    });
    E("P3.13-3", Precond::QW, "x -> y = 0 iff x = 1 and y = 0", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            bool lhs = c.imp(x, y) == c.zero;
            bool rhs = x == c.one && y == c.zero;
            return rel({x, y}, lhs == rhs, lhs ? 1 : 0, rhs ? 1 : 0);
        });
    });
    E("P3.13-4", Precond::QW, "(x -> y)* ^ x = (x -> y)*", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            int s = c.star(c.imp(x, y));
            return neq({x, y}, c.meet(s, x), s);
        });
    });
    E("P3.13-5", Precond::QW, "(x ^ y) ^ y = x ^ y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(c.meet(x, y), y), c.meet(x, y));
        });
    });
    E("P3.13-6", Precond::QW, "x ^ y <=Q y <=Q x v y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            int m = c.meet(x, y), j = c.join(x, y);
            if (MaybeW w = rel({x, y}, c.leq_q(m, y), c.meet(m, y), m)) return w;
            return rel({x, y}, c.leq_q(y, j), c.meet(y, j), y);
        });
    });
    E("P3.13-7", Precond::QW, "x v (y ^ x) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(x, c.meet(y, x)), x);
        });
    });
    E("P3.13-8", Precond::QW, "x ^ (y v x) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(x, c.join(y, x)), x);
        });
    });
    E("P3.13-9", Precond::QW, "(x -> y) -> (y ^ x) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.imp(x, y), c.meet(y, x)), x);
        });
    });
    E("P3.13-10", Precond::QW, "(x v y) -> y = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.join(x, y), y), c.imp(x, y));
        });
    });
    E("P3.13-11", Precond::QW, "(x v y) v y = x v y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(c.join(x, y), y), c.join(x, y));
        });
    });
    E("P3.13-12", Precond::QW, "x <= y iff y ^ x = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            bool lhs = c.leq(x, y);
            bool rhs = c.meet(y, x) == x;
            return rel({x, y}, lhs == rhs, lhs ? 1 : 0, rhs ? 1 : 0);
        });
    });

    E("P3.14-1", Precond::QW, "x <=Q y implies y = y v x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            return neq({x, y}, c.join(y, x), y);
        });
    });
    E("P3.14-2", Precond::QW, "x <=Q y implies y* <=Q x*", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int sy = c.star(y), sx = c.star(x);
            return rel({x, y}, c.leq_q(sy, sx), c.meet(sy, sx), sy);
        });
    });
    E("P3.14-3", Precond::QW, "x <=Q y implies y -> z <=Q x -> z", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int u = c.imp(y, z), v = c.imp(x, z);
            return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });
    E("P3.14-4", Precond::QW, "x <=Q y implies z -> x <=Q z -> y", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int u = c.imp(z, x), v = c.imp(z, y);
            return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });
    E("P3.14-5", Precond::QW, "x <=Q y implies x ^ z <=Q y ^ z", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int u = c.meet(x, z), v = c.meet(y, z);
            return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });
    E("P3.14-6", Precond::QW, "x <=Q y implies x v z <=Q y v z", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int u = c.join(x, z), v = c.join(y, z);
            return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });

    E("P3.15-1", Precond::QW, "(x ^ y) ^ (y ^ z) = (x ^ y) ^ z", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) {
            return neq({x, y, z}, c.meet(c.meet(x, y), c.meet(y, z)),
                       c.meet(c.meet(x, y), z));
        });
    });
    E("P3.15-2", Precond::QW, "<=Q is transitive", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!(c.leq_q(x, y) && c.leq_q(y, z))) return std::nullopt;
            return rel({x, y, z}, c.leq_q(x, z), c.meet(x, z), x);
        });
    });
    E("P3.15-3", Precond::QW, "x v y <=Q x* -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            int u = c.join(x, y), v = c.imp(c.star(x), y);
            return rel({x, y}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });
    E("P3.15-4", Precond::QW, "(x* -> y)* -> (x -> y*)* = x* -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y},
                       c.imp(c.star(c.imp(c.star(x), y)),
                             c.star(c.imp(x, c.star(y)))),
                       c.imp(c.star(x), y));
        });
    });
    E("P3.15-5", Precond::QW, "(x -> y)* -> (y -> x)* = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y},
                       c.imp(c.star(c.imp(x, y)), c.star(c.imp(y, x))),
                       c.imp(x, y));
        });
    });
    E("P3.15-6", Precond::QW, "(y -> x) -> (x -> y) = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.imp(y, x), c.imp(x, y)), c.imp(x, y));
        });
    });
    E("P3.15-7", Precond::QW, "(x -> y) v (y -> x) = 1", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(c.imp(x, y), c.imp(y, x)), c.one);
        });
    });
    E("P3.15-8", Precond::QW, "(z ^ x) -> (y ^ x) = (z ^ x) -> y", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) {
            return neq({x, y, z}, c.imp(c.meet(z, x), c.meet(y, x)),
                       c.imp(c.meet(z, x), y));
        });
    });

    // ----- Wajsberg algebras -----
    E("P4.4-1", Precond::Wajsberg, "x** = x", +[](const Ctx& c) {
        return fa1(c, [&](int x) { return neq({x}, c.star(c.star(x)), x); });
    });
    E("P4.4-2", Precond::Wajsberg, "x ^ y = y ^ x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(x, y), c.meet(y, x));
        });
    });
    E("P4.4-3", Precond::Wajsberg, "x <= y implies x <=Q y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return rel({x, y}, !c.leq(x, y) || c.leq_q(x, y), c.meet(x, y), x);
        });
    });
    E("P4.4-4", Precond::Wajsberg, "<= is transitive", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!(c.leq(x, y) && c.leq(y, z))) return std::nullopt;
            return rel({x, y, z}, c.leq(x, z), c.imp(x, z), c.one);
        });
    });
    E("C4.5", Precond::Wajsberg, "<=Q coincides with <=", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            bool lhs = c.leq_q(x, y), rhs = c.leq(x, y);
            return rel({x, y}, lhs == rhs, lhs ? 1 : 0, rhs ? 1 : 0);
        });
    });
    E("P4.6-1", Precond::Wajsberg, "(y v x) -> y = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.join(y, x), y), c.imp(x, y));
        });
    });
    E("P4.6-2", Precond::Wajsberg, "x ^ (x v y) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(x, c.join(x, y)), x);
        });
    });
    E("P4.6-3", Precond::Wajsberg, "(y v x) v y = x v y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(c.join(y, x), y), c.join(x, y));
        });
    });
    E("P4.6-4", Precond::Wajsberg, "(x ^ y) ^ z = y ^ (x ^ z)", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) {
            return neq({x, y, z}, c.meet(c.meet(x, y), z), c.meet(y, c.meet(x, z)));
        });
    });
    E("P4.6-5", Precond::Wajsberg, "x -> ((x ^ y) ^ x) = x -> y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(x, c.meet(c.meet(x, y), x)), c.imp(x, y));
        });
    });
    E("P4.6-6", Precond::Wajsberg, "x ^ (x* -> y) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(x, c.imp(c.star(x), y)), x);
        });
    });
    E("P4.6-7", Precond::Wajsberg, "(x -> y) -> (x ^ y) = x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.imp(c.imp(x, y), c.meet(x, y)), x);
        });
    });
    E("P4.6-8", Precond::Wajsberg, "(z ^ x) -> (y ^ x) = (z ^ x) -> y",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.imp(c.meet(z, x), c.meet(y, x)),
                         c.imp(c.meet(z, x), y));
          });
      });
    E("P4.6-9", Precond::Wajsberg, "(x -> y)* ^ x = (x -> y)*", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            int s = c.star(c.imp(x, y));
            return neq({x, y}, c.meet(s, x), s);
        });
    });
    E("P4.6-10", Precond::Wajsberg, "(x ^ y) ^ y = x ^ y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.meet(c.meet(x, y), y), c.meet(x, y));
        });
    });
    E("P4.6-11", Precond::Wajsberg, "x ^ y <=Q y <=Q x v y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            int m = c.meet(x, y), j = c.join(x, y);
            if (MaybeW w = rel({x, y}, c.leq_q(m, y), c.meet(m, y), m)) return w;
            return rel({x, y}, c.leq_q(y, j), c.meet(y, j), y);
        });
    });
    E("P4.6-12", Precond::Wajsberg, "(x ^ y) ^ (y ^ z) = (x ^ y) ^ z",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.meet(c.meet(x, y), c.meet(y, z)),
                         c.meet(c.meet(x, y), z));
          });
      });
    E("T4.7", Precond::QW,
      "v-comm iff (x -> y = (y v x) -> y and x <=Q x v y)", +[](const Ctx& c) -> MaybeW {
          bool lhs = vee_comm_all(c);
          bool rhs = !fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.imp(x, y), c.imp(c.join(y, x), y)))
                  return w;
              return rel({x, y}, c.leq_q(x, c.join(x, y)),
                         c.meet(x, c.join(x, y)), x);
          }).has_value();
          if (lhs == rhs) return std::nullopt;
          return Witness{{}, lhs ? 1 : 0, rhs ? 1 : 0};
      });
    E("P4.8-1", Precond::Wajsberg,
      "x <=Q y implies z -> x <=Q z -> y, y -> z <=Q x -> z, y* <=Q x*",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              if (!c.leq_q(x, y)) return std::nullopt;
              int u1 = c.imp(z, x), v1 = c.imp(z, y);
              if (MaybeW w = rel({x, y, z}, c.leq_q(u1, v1), c.meet(u1, v1), u1))
                  return w;
              int u2 = c.imp(y, z), v2 = c.imp(x, z);
              if (MaybeW w = rel({x, y, z}, c.leq_q(u2, v2), c.meet(u2, v2), u2))
                  return w;
              int sy = c.star(y), sx = c.star(x);
              return rel({x, y, z}, c.leq_q(sy, sx), c.meet(sy, sx), sy);
          });
      });
    E("P4.8-2", Precond::Wajsberg,
      "x <=Q y and x <=Q z imply x <=Q y ^ z", +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              if (!(c.leq_q(x, y) && c.leq_q(x, z))) return std::nullopt;
              int m = c.meet(y, z);
              return rel({x, y, z}, c.leq_q(x, m), c.meet(x, m), x);
          });
      });
    E("P4.8-3", Precond::Wajsberg,
      "y <=Q x and z <=Q x imply y v z <=Q x", +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              if (!(c.leq_q(y, x) && c.leq_q(z, x))) return std::nullopt;
              int j = c.join(y, z);
              return rel({x, y, z}, c.leq_q(j, x), c.meet(j, x), j);
          });
      });
    E("P4.8-4", Precond::Wajsberg,
      "x <=Q y implies x v z <=Q y v z and x ^ z <=Q y ^ z", +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              if (!c.leq_q(x, y)) return std::nullopt;
              int u1 = c.join(x, z), v1 = c.join(y, z);
              if (MaybeW w = rel({x, y, z}, c.leq_q(u1, v1), c.meet(u1, v1), u1))
                  return w;
              int u2 = c.meet(x, z), v2 = c.meet(y, z);
              return rel({x, y, z}, c.leq_q(u2, v2), c.meet(u2, v2), u2);
          });
      });
    E("P4.9", Precond::Wajsberg, "x -> (y ^ z) = (x -> y) ^ (x -> z)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.imp(x, c.meet(y, z)),
                         c.meet(c.imp(x, y), c.imp(x, z)));
          });
      });

    // ----- product-signature results -----
    E("P5.7", Precond::InvolutiveQW1An, "x v y = y v x", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) {
            return neq({x, y}, c.join(x, y), c.join(y, x));
        });
    });
    E("P5.8-1", Precond::QMV, "x . (x* v y) = x . y and x . (y v x*) = x . y",
      +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.prod(x, c.join(c.star(x), y)),
                                 c.prod(x, y)))
                  return w;
              return neq({x, y}, c.prod(x, c.join(y, c.star(x))), c.prod(x, y));
          });
      });
    E("P5.8-2", Precond::QMV, "x . y <=Q x <=Q x (+) y", +[](const Ctx& c) {
        return fa2(c, [&](int x, int y) -> MaybeW {
            int p = c.prod(x, y), s = c.osum(x, y);
            if (MaybeW w = rel({x, y}, c.leq_q(p, x), c.meet(p, x), p)) return w;
            return rel({x, y}, c.leq_q(x, s), c.meet(x, s), x);
        });
    });
    E("P5.8-3", Precond::QMV,
      "x . y = 1 iff x = y = 1, and x (+) y = 0 iff x = y = 0", +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              bool l1 = c.prod(x, y) == c.one;
              bool r1 = x == c.one && y == c.one;
              if (MaybeW w = rel({x, y}, l1 == r1, l1 ? 1 : 0, r1 ? 1 : 0)) return w;
              bool l2 = c.osum(x, y) == c.zero;
              bool r2 = x == c.zero && y == c.zero;
              return rel({x, y}, l2 == r2, l2 ? 1 : 0, r2 ? 1 : 0);
          });
      });
    E("P5.8-4", Precond::QMV, "x v (x . y) = x and x ^ (x (+) y) = x",
      +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.join(x, c.prod(x, y)), x)) return w;
              return neq({x, y}, c.meet(x, c.osum(x, y)), x);
          });
      });
    E("P5.8-5", Precond::QMV, "x . (y v (z v x*)) = (x . y) v (x . z)",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z},
                         c.prod(x, c.join(y, c.join(z, c.star(x)))),
                         c.join(c.prod(x, y), c.prod(x, z)));
          });
      });
    E("P5.8-6", Precond::QMV,
      "(x (+) y) (+) (x . y) = x (+) y and (x . y) . (x (+) y) = x . y",
      +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              int s = c.osum(x, y), p = c.prod(x, y);
              if (MaybeW w = neq({x, y}, c.osum(s, p), s)) return w;
              return neq({x, y}, c.prod(p, s), p);
          });
      });
    E("P5.8-7", Precond::QMV,
      "(x* (+) y) v (y* (+) x) = 1 and (x . y*) ^ (y . x*) = 0", +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y},
                                 c.join(c.osum(c.star(x), y), c.osum(c.star(y), x)),
                                 c.one))
                  return w;
              return neq({x, y},
                         c.meet(c.prod(x, c.star(y)), c.prod(y, c.star(x))),
                         c.zero);
          });
      });
    E("P5.8-8", Precond::QMV,
      "(z ^ x)* (+) (y ^ x) = (z ^ x)* (+) y and (z ^ x) . (y ^ x)* = (z ^ x) . y*",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              int m = c.meet(z, x);
              if (MaybeW w = neq({x, y, z}, c.osum(c.star(m), c.meet(y, x)),
                                 c.osum(c.star(m), y)))
                  return w;
              return neq({x, y, z}, c.prod(m, c.star(c.meet(y, x))),
                         c.prod(m, c.star(y)));
          });
      });
    E("P5.9", Precond::QWSelfDistributive,
      "(x* . y)* . y = (y* . x)* . x", +[](const Ctx& c) {
          return fa2(c, [&](int x, int y) {
              return neq({x, y}, c.prod(c.star(c.prod(c.star(x), y)), y),
                         c.prod(c.star(c.prod(c.star(y), x)), x));
          });
      });
    E("P5.10-1", Precond::QMV, "x <=Q y implies x (+) z <=Q y (+) z",
      +[](const Ctx& c) {
          return fa3(c, [&](int x, int y, int z) -> MaybeW {
              if (!c.leq_q(x, y)) return std::nullopt;
              int u = c.osum(x, z), v = c.osum(y, z);
              return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
          });
      });
    E("P5.10-2", Precond::QMV, "x <=Q y implies x . z <=Q y . z", +[](const Ctx& c) {
        return fa3(c, [&](int x, int y, int z) -> MaybeW {
            if (!c.leq_q(x, y)) return std::nullopt;
            int u = c.prod(x, z), v = c.prod(y, z);
            return rel({x, y, z}, c.leq_q(u, v), c.meet(u, v), u);
        });
    });
    E("T5.11", Precond::QMV,
      "MV' iff (x <= y implies x <=Q y)", +[](const Ctx& c) -> MaybeW {
          bool lhs = mv_prime_all(c);
          bool rhs = !fa2(c, [&](int x, int y) {
              return rel({x, y}, !c.leq(x, y) || c.leq_q(x, y), c.meet(x, y), x);
          }).has_value();
          if (lhs == rhs) return std::nullopt;
          return Witness{{}, lhs ? 1 : 0, rhs ? 1 : 0};
      });
    E("T5.12", Precond::QMV,
      "if x ^ (x v y) = x and (y* v x) . y = x . y for all x,y then MV'",
      +[](const Ctx& c) -> MaybeW {
          bool hyp = !fa2(c, [&](int x, int y) -> MaybeW {
              if (MaybeW w = neq({x, y}, c.meet(x, c.join(x, y)), x)) return w;
              return neq({x, y}, c.prod(c.join(c.star(y), x), y), c.prod(x, y));
          }).has_value();
          if (!hyp) return std::nullopt;
          return fa2(c, [&](int x, int y) {
              return neq({x, y}, c.prod(c.star(c.prod(c.star(x), y)), y),
                         c.prod(c.star(c.prod(c.star(y), x)), x));
          });
      });
    E("T5.13", Precond::QMV,
      "if x . (y . z) = (x . y*)* . (x . z) for all x,y,z then MV'",
      +[](const Ctx& c) -> MaybeW {
          bool hyp = !fa3(c, [&](int x, int y, int z) {
              return neq({x, y, z}, c.prod(x, c.prod(y, z)),
                         c.prod(c.star(c.prod(x, c.star(y))), c.prod(x, z)));
          }).has_value();
          if (!hyp) return std::nullopt;
          return fa2(c, [&](int x, int y) {
              return neq({x, y}, c.prod(c.star(c.prod(c.star(x), y)), y),
                         c.prod(c.star(c.prod(c.star(y), x)), x));
          });
      });

    return r;
}

} // namespace

const std::vector<TheoremEntry>& theorem_registry() {
    static const std::vector<TheoremEntry> registry = build_registry();
    return registry;
}

const TheoremEntry* find_theorem(const std::string& id) {
    for (const auto& e : theorem_registry())
        if (e.id == id) return &e;
    return nullptr;
}

TheoremResult verify(const FiniteAlgebra& alg, const DerivedOps& ops,
                     const std::string& id) {
    const TheoremEntry* e = find_theorem(id);
    if (!e) throw UnknownTheoremError(id);
    TheoremResult res;
    res.id = e->id;
    res.applicable = precond_holds(alg, ops, e->precond);
    if (res.applicable) {
        std::optional<Witness> w = e->check(alg, ops);
        res.holds = !w.has_value();
        res.witness = std::move(w);
    }
    return res;
}

TheoremResult verify(const FiniteAlgebra& alg, const std::string& id) {
    return verify(alg, derive(alg), id);
}

std::vector<TheoremResult> verify_all(const FiniteAlgebra& alg,
                                      const DerivedOps& ops) {
    std::vector<TheoremResult> out;
    out.reserve(theorem_registry().size());
    for (const auto& e : theorem_registry()) out.push_back(verify(alg, ops, e.id));
    return out;
}

std::vector<TheoremResult> verify_all(const FiniteAlgebra& alg) {
    return verify_all(alg, derive(alg));
}

// ----- subset structures -----

bool is_q_ideal(const FiniteAlgebra& alg, const DerivedOps& ops,
                const ElementSubset& s) {
    (void)alg;
    if (s.is_empty()) throw EmptySubsetError();
    const int n = ops.n;
    for (int x = 0; x < n; ++x) {
        if (!s.contains(x)) continue;
        for (int y = 0; y < n; ++y) {
            if (!s.contains(ops.prod_of(x, y))) return false;
            if (s.contains(y) && !s.contains(ops.osum_of(x, y))) return false;
        }
    }
    return true;
}

bool is_p_ideal(const FiniteAlgebra& alg, const DerivedOps& ops,
                const ElementSubset& s) {
    if (!is_q_ideal(alg, ops, s)) return false;
    const int n = ops.n;
    for (int x = 0; x < n; ++x) {
        if (!s.contains(x)) continue;
        for (int y = 0; y < n; ++y)
            if (!s.contains(ops.meet_of(x, y))) return false;
    }
    return true;
}

bool is_filter(const FiniteAlgebra& alg, const DerivedOps& ops,
               const ElementSubset& s) {
    (void)alg;
    if (s.is_empty()) throw EmptySubsetError();
    const int n = ops.n;
    for (int x = 0; x < n; ++x) {
        if (!s.contains(x)) continue;
        for (int y = 0; y < n; ++y) {
            if (s.contains(y) && !s.contains(ops.prod_of(x, y))) return false;
            if (ops.leq_q_of(x, y) && !s.contains(y)) return false;
        }
    }
    return true;
}

ElementSubset first_meander(const FiniteAlgebra& alg, const DerivedOps& ops,
                            const ElementSubset& s) {
    (void)alg;
    const int n = ops.n;
    ElementSubset out = ElementSubset::empty(n);
    for (int x = 0; x < n; ++x) {
        bool in = true;
        for (int y = 0; y < n && in; ++y)
            if (s.contains(ops.osum_of(x, y)) && !s.contains(y)) in = false;
        if (in) out.add(x);
    }
    return out;
}

namespace {

template <class Pred>
std::vector<ElementSubset> scan_subsets(int n, Pred pred) {
    if (n > 20)
        throw std::invalid_argument(
            "power-set scan is limited to orders up to 20");
    std::vector<ElementSubset> out;
    for (std::uint64_t bits = 1; bits < (1ull << n); ++bits) {
        ElementSubset s(n, bits);
        if (pred(s)) out.push_back(s);
    }
    return out;
}

} // namespace

std::vector<ElementSubset> enumerate_q_ideals(const FiniteAlgebra& alg,
                                              const DerivedOps& ops) {
    return scan_subsets(ops.n,
                        [&](const ElementSubset& s) { return is_q_ideal(alg, ops, s); });
}

std::vector<ElementSubset> enumerate_filters(const FiniteAlgebra& alg,
                                             const DerivedOps& ops) {
    return scan_subsets(ops.n,
                        [&](const ElementSubset& s) { return is_filter(alg, ops, s); });
}

} // namespace qwalg
