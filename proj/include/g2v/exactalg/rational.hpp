#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <climits>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

namespace g2v {

// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : q_(static_cast<long>(n)) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    // Exact value of a finite double.
    static Rational from_double(double x);
    // Accepts "n", "-n", "n/d".
    static Rational parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& r);
mpz_class floor(const Rational& r);
mpz_class ceil(const Rational& r);

inline constexpr int kInfiniteValuation = INT_MAX;

// p-adic valuation; kInfiniteValuation for zero.
int valuation(const Rational& r, long p);
int valuation(const mpz_class& n, long p);
inline bool in_Zp(const Rational& r, long p) { return valuation(r.den(), p) == 0; }

bool is_prime(long n);

}  // namespace g2v

namespace Eigen {
template <>
struct NumTraits<g2v::Rational> : GenericNumTraits<g2v::Rational> {
    typedef g2v::Rational Real;
    typedef g2v::Rational NonInteger;
    typedef g2v::Rational Nested;
    typedef g2v::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
