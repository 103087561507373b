#include "f4grad/cyclotomic.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace f4grad {

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

int Cyc::cmp(const Cyc& o) const {
    for (int k = 0; k < 8; ++k) {
        int s = ::cmp(c_[k], o.c_[k]);
        if (s != 0) return s;
    }
    return 0;
}

Cyc Cyc::zeta(int k) {
    k %= 24;
    if (k < 0) k += 24;
    Cyc r;
    // z^8 = z^4 - 1, z^12 = -1, z^20 = 1 - z^4
    if (k < 8) {
        r.c_[k] = 1;
    } else if (k < 12) {
        r.c_[k - 4] = 1;
        r.c_[k - 8] = -1;
    } else if (k < 20) {
        r.c_[k - 12] = -1;
    } else {
        r.c_[k - 16] = -1;
        r.c_[k - 20] = 1;
    }
    return r;
}

Cyc Cyc::sqrt3() { return zeta(2) + zeta(22); }

Cyc Cyc::operator-() const {
    Cyc r;
    for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    std::array<Rat, 15> acc{};
    for (int a = 0; a < 8; ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (sgn(o.c_[b]) == 0) continue;
            acc[a + b] += c_[a] * o.c_[b];
        }
    }
    for (int k = 14; k >= 8; --k) {
        if (sgn(acc[k]) == 0) continue;
        acc[k - 4] += acc[k];
        acc[k - 8] -= acc[k];
    }
    for (int k = 0; k < 8; ++k) c_[k] = acc[k];
    return *this;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
    if (is_rational()) {
        Cyc r;
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    if (auto e = root_exponent()) return zeta(-*e);
    // Solve (this) * x = 1 via the 8x8 multiplication matrix, plain
    // Gauss-Jordan over Q.
    Rat M[8][9];
    for (int j = 0; j < 8; ++j) { // column j: this * z^j
        Cyc col = *this * zeta(j);
        for (int r = 0; r < 8; ++r) M[r][j] = col.coeff(r);
    }
    for (int r = 0; r < 8; ++r) M[r][8] = (r == 0) ? 1 : 0;
    for (int col = 0, row = 0; col < 8 && row < 8; ++col) {
        int p = -1;
        for (int r = row; r < 8; ++r)
            if (sgn(M[r][col]) != 0) { p = r; break; }
        if (p < 0) continue;
        for (int k = 0; k < 9; ++k) std::swap(M[p][k], M[row][k]);
        Rat inv = Rat(1) / M[row][col];
        for (int k = col; k < 9; ++k) M[row][k] *= inv;
        for (int r = 0; r < 8; ++r) {
            if (r == row || sgn(M[r][col]) == 0) continue;
            Rat f = M[r][col];
            for (int k = col; k < 9; ++k) M[r][k] -= f * M[row][k];
        }
        ++row;
    }
    Cyc x;
    for (int r = 0; r < 8; ++r) x.c_[r] = M[r][8];
    if (!(*this * x == Cyc(1))) throw std::domain_error("Cyc: inverse failed");
    return x;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

std::optional<int> Cyc::root_exponent() const {
    for (int k = 0; k < 24; ++k)
        if (*this == zeta(k)) return k;
    return std::nullopt;
}

std::optional<int> Cyc::unit_order() const {
    auto e = root_exponent();
    if (!e) return std::nullopt;
    return 24 / std::gcd(24, *e == 0 ? 24 : *e);
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    if (is_rational()) return c_[0].get_str();
    if (*this == i()) return "i";
    if (*this == -i()) return "-i";
    if (*this == omega()) return "w";
    if (*this == -omega()) return "-w";
    if (*this == omega() * omega()) return "w^2";
    if (*this == -(omega() * omega())) return "-w^2";
    if (auto e = root_exponent()) return "z^" + std::to_string(*e);
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
        if (sgn(c_[k]) == 0) continue;
        Rat a = c_[k];
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string to_string(const Cyc& a) { return a.str(); }

namespace {

struct CycParser {
    const std::string& s;
    size_t pos = 0;
    explicit CycParser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Cyc parse_sum() {
        Cyc acc = parse_product();
        for (;;) {
            skip();
            if (eat('+')) acc += parse_product();
            else if (eat('-')) acc -= parse_product();
            else return acc;
        }
    }

    Cyc parse_product() {
        Cyc acc = parse_atom();
        while (eat('*')) acc *= parse_atom();
        return acc;
    }

    Cyc parse_atom() {
        skip();
        if (eat('-')) return -parse_atom();
        if (eat('(')) {
            Cyc v = parse_sum();
            if (!eat(')')) throw std::invalid_argument("parse_cyc: missing )");
            return v;
        }
        if (pos >= s.size()) throw std::invalid_argument("parse_cyc: truncated");
        char c = s[pos];
        if (c == 'i') { ++pos; return Cyc::i(); }
        if (c == 'w') {
            ++pos;
            if (pos < s.size() && s[pos] == '2') { ++pos; return Cyc::omega() * Cyc::omega(); }
            if (eat('^')) return power(Cyc::omega());
            return Cyc::omega();
        }
        if (c == 'z') {
            ++pos;
            if (eat('^')) return power(Cyc::zeta(1));
            return Cyc::zeta(1);
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            long num = std::stol(s.substr(start, pos - start));
            if (eat('/')) {
                skip();
                size_t d0 = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                long den = std::stol(s.substr(d0, pos - d0));
                Rat r(num, den);
                r.canonicalize();
                return Cyc(r);
            }
            return Cyc(Rat(num));
        }
        throw std::invalid_argument("parse_cyc: unexpected '" + std::string(1, c) + "' in " + s);
    }

    Cyc power(Cyc base) {
        skip();
        bool neg = eat('-');
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        long e = std::stol(s.substr(start, pos - start));
        if (neg) e = -e;
        long m = ((e % 24) + 24) % 24;
        Cyc v(1);
        for (long k = 0; k < m; ++k) v *= base;
        return v;
    }
};

} // namespace

Cyc parse_cyc(const std::string& expr) {
    CycParser p(expr);
    Cyc v = p.parse_sum();
    p.skip();
    if (p.pos != expr.size())
        throw std::invalid_argument("parse_cyc: trailing input in " + expr);
    return v;
}

} // namespace f4grad
