#pragma once
#include <Eigen/Core>
#include <gmpxx.h>
#include <string>

namespace f4grad {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline std::string to_string(const Rat& a) { return a.get_str(); }

} // namespace f4grad

namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

} // namespace Eigen
