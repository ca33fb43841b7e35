#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace lcsa {

// Exact rational. Values that fit in int64 stay inline; anything larger
// spills to a shared immutable mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : n_(n) {}  // NOLINT: implicit on purpose
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { assign(q); }

    static Rational parse(const std::string& text);  // "p", "-p/q"

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    void assign(const mpq_class& q);
    void assign128(__int128 n, __int128 d);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace lcsa
