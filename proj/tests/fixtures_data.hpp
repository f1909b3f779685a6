#pragma once

// The five fixture tables used across the test suites, transcribed
// independently of the .alg files under fixtures/ (a parse test checks the
// two transcriptions agree).

#include <vector>

#include "qwalg/transforms.hpp"

namespace fixtures {

inline const std::vector<std::string> kNames5{"0", "a", "b", "c", "1"};
inline const std::vector<std::string> kNames7{"0", "1", "2", "3", "4", "5", "6"};

// Seven-element involutive BE algebra; one = 1.
inline qwalg::FiniteAlgebra remark36() {
    return qwalg::FiniteAlgebra(7,
                                {
                                    1, 1, 1, 1, 1, 1, 1,  //
                                    0, 1, 2, 3, 4, 5, 6,  //
                                    2, 1, 1, 1, 1, 1, 3,  //
                                    4, 1, 1, 1, 2, 3, 5,  //
                                    3, 1, 1, 1, 1, 1, 1,  //
                                    6, 1, 3, 1, 5, 1, 1,  //
                                    5, 1, 1, 1, 3, 1, 1,  //
                                },
                                1, kNames7);
}

// Its meet table, all 49 entries; x ^ x = x forces the diagonal.
inline const std::vector<int> kRemark36Meet{
    0, 0, 0, 0, 0, 0, 0,  //
    0, 1, 2, 3, 4, 5, 6,  //
    0, 2, 2, 3, 4, 6, 6,  //
    0, 3, 2, 3, 4, 5, 6,  //
    0, 4, 2, 0, 4, 0, 4,  //
    0, 5, 2, 2, 4, 5, 6,  //
    0, 6, 0, 6, 4, 5, 6,  //
};

// Five-element QW algebra {0,a,b,c,1} (indices 0..4); one = 4.
inline qwalg::FiniteAlgebra example319() {
    return qwalg::FiniteAlgebra(5,
                                {
                                    4, 4, 4, 4, 4,  //
                                    2, 4, 1, 4, 4,  //
                                    1, 4, 4, 4, 4,  //
                                    3, 4, 4, 4, 4,  //
                                    0, 1, 2, 3, 4,  //
                                },
                                4, kNames5);
}

// Five-element Wajsberg algebra; one = 4.
inline qwalg::FiniteAlgebra example414() {
    return qwalg::FiniteAlgebra(5,
                                {
                                    4, 4, 4, 4, 4,  //
                                    2, 4, 3, 1, 4,  //
                                    1, 4, 4, 4, 4,  //
                                    3, 4, 1, 4, 4,  //
                                    0, 1, 2, 3, 4,  //
                                },
                                4, kNames5);
}

inline const std::vector<int> kStar5{4, 2, 1, 3, 0};

// Product form of example319.
inline qwalg::ProductAlgebra example55() {
    return qwalg::make_product_algebra(5,
                                       {
                                           0, 0, 0, 0, 0,  //
                                           0, 2, 0, 0, 1,  //
                                           0, 0, 0, 0, 2,  //
                                           0, 0, 0, 0, 3,  //
                                           0, 1, 2, 3, 4,  //
                                       },
                                       kStar5, 4, kNames5);
}

// Its sum table. The row for element 1 is forced to all 1s by
// x(+)y = (x* . y*)*; see the q-ideal and S-axiom tests.
inline const std::vector<int> kExample55Osum{
    0, 1, 2, 3, 4,  //
    1, 4, 4, 4, 4,  //
    2, 4, 1, 4, 4,  //
    3, 4, 4, 4, 4,  //
    4, 4, 4, 4, 4,  //
};

// Product form of example414.
inline qwalg::ProductAlgebra example56() {
    return qwalg::make_product_algebra(5,
                                       {
                                           0, 0, 0, 0, 0,  //
                                           0, 3, 0, 2, 1,  //
                                           0, 0, 0, 0, 2,  //
                                           0, 2, 0, 0, 3,  //
                                           0, 1, 2, 3, 4,  //
                                       },
                                       kStar5, 4, kNames5);
}

// x(+)y = x* -> y throughout; in particular b(+)c = a->c = a.
inline const std::vector<int> kExample56Osum{
    0, 1, 2, 3, 4,  //
    1, 4, 4, 4, 4,  //
    2, 4, 3, 1, 4,  //
    3, 4, 1, 4, 4,  //
    4, 4, 4, 4, 4,  //
};

// One-element (degenerate) algebra: 1 = 0.
inline qwalg::FiniteAlgebra trivial() {
    return qwalg::FiniteAlgebra(1, {0}, 0);
}

inline std::vector<qwalg::FiniteAlgebra> implication_fixtures() {
    return {remark36(), example319(), example414(), trivial()};
}

} // namespace fixtures
