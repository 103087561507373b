#pragma once
#include "f4grad/rational.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>

namespace f4grad {

// Element of the cyclotomic field Q(zeta_24), stored as the residue
// polynomial c0 + c1 z + ... + c7 z^7 modulo Phi_24(z) = z^8 - z^4 + 1.
// Every root of unity of order dividing 24 lives here, in particular
// i = z^6, w = z^8 (primitive cubic root), xi = z^3 (primitive 8th root)
// and sqrt(3) = z^2 + z^22.
class Cyc {
  public:
    Cyc() = default;
    Cyc(const Rat& r) { c_[0] = r; }
    Cyc(long n) { c_[0] = n; }
    Cyc(int n) { c_[0] = n; }

    static Cyc zeta(int k); // zeta_24^k, k taken mod 24
    static Cyc i() { return zeta(6); }
    static Cyc omega() { return zeta(8); }
    static Cyc sqrt3(); // z^2 + z^-2

    const Rat& coeff(int k) const { return c_[k]; }
    Rat& coeff(int k) { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;
    // Exponent k with *this == zeta(k), if this is a 24th root of unity.
    std::optional<int> root_exponent() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
    // Lexicographic order on coefficients; used only for deterministic sorting.
    friend bool operator<(const Cyc& a, const Cyc& b) { return a.cmp(b) < 0; }

    Cyc inverse() const; // exact; throws on zero

    // Multiplicative order when this is a root of unity (divisor of 24).
    std::optional<int> unit_order() const;

    std::string str() const; // canonical "c0 + c1*z + ..." with shortcuts

  private:
    int cmp(const Cyc& o) const;
    std::array<Rat, 8> c_{}; // value-initialized rationals are 0
};

inline bool is_zero(const Cyc& a) { return a.is_zero(); }
std::string to_string(const Cyc& a);
inline std::ostream& operator<<(std::ostream& os, const Cyc& a) { return os << a.str(); }

// Tiny expression parser used for embedding paper data as text:
// rationals, i, w (cube root), w2, z (zeta_24), z^k, parentheses, + - *.
Cyc parse_cyc(const std::string& expr);

} // namespace f4grad

namespace Eigen {

template <> struct NumTraits<f4grad::Cyc> : GenericNumTraits<f4grad::Cyc> {
    typedef f4grad::Cyc Real;
    typedef f4grad::Cyc NonInteger;
    typedef f4grad::Cyc Nested;
    typedef f4grad::Cyc Literal;
    static inline Real epsilon() { return f4grad::Cyc(0); }
    static inline Real dummy_precision() { return f4grad::Cyc(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 50,
        AddCost = 400,
        MulCost = 1000
    };
};

} // namespace Eigen
