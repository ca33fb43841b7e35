#include "lcsa/rational.hpp"

#include <limits>
#include <stdexcept>

namespace lcsa {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from128(__int128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    assign128(n, d);
}

void Rational::assign128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        n_ = 0;
        d_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= __int128(g);
        d /= __int128(g);
    }
    if (fits64(n) && fits64(d)) {
        n_ = static_cast<std::int64_t>(n);
        d_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from128(n), mpz_from128(d));
    q.canonicalize();
    big_ = std::make_shared<const mpq_class>(std::move(q));
    n_ = 0;
    d_ = 1;
}

void Rational::assign(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_shared<const mpq_class>(q);
        n_ = 0;
        d_ = 1;
    }
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
    return q;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    if (!big_ && n_ != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    return Rational(mpq_class(-to_mpq()));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
        Rational r;
        if (a.d_ == b.d_)
            r.assign128(__int128(a.n_) + b.n_, a.d_);
        else
            r.assign128(__int128(a.n_) * b.d_ + __int128(b.n_) * a.d_, __int128(a.d_) * b.d_);
        return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (!a.big_ && !b.big_) {
        Rational r;
        r.assign128(__int128(a.n_) * b.n_, __int128(a.d_) * b.d_);
        return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    if (!a.big_ && !b.big_) {
        Rational r;
        r.assign128(__int128(a.n_) * b.d_, __int128(a.d_) * b.n_);
        return r;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (bool(a.big_) != bool(b.big_)) return false;  // both canonical
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return __int128(a.n_) * b.d_ < __int128(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace lcsa
