#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include "homlie/errors.hpp"

namespace homlie {

// Exact scalars for the three supported ground fields: Q, GF(p) with p > 3,
// and Q(sqrt(d)) with d a nonsquare integer.  Each scalar carries the field
// descriptor it belongs to; mixing descriptors is rejected.

namespace detail {

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline bool is_perfect_square(long d) {
    if (d < 0) return false;
    mpz_class z(d);
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline std::string mpq_to_string(const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace detail

class Rational {
public:
    struct Desc {
        bool operator==(const Desc&) const = default;
        std::string name() const { return "Q"; }
    };

    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ShapeError("zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero(Desc) { return Rational(); }
    static Rational one(Desc) { return Rational(1); }
    static constexpr bool char_zero = true;

    Desc desc() const { return {}; }
    bool is_zero() const { return v_ == 0; }
    const mpq_class& value() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ShapeError("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }

    std::string str() const { return detail::mpq_to_string(v_); }

private:
    mpq_class v_;
};

// GF(p).  p is restricted to p > 3 so small denominators appearing in the
// polarization arguments for tensor relations stay invertible.
class PrimeField {
public:
    struct Desc {
        std::uint32_t p = 0;
        bool operator==(const Desc&) const = default;
        std::string name() const { return "F " + std::to_string(p); }
    };

    static Desc make_desc(std::uint32_t p) {
        if (!detail::is_prime_u32(p)) throw UnsupportedField("GF(p) modulus must be prime, got " + std::to_string(p));
        if (p <= 3) throw UnsupportedField("GF(p) requires p > 3");
        return Desc{p};
    }

    PrimeField() = default;
    PrimeField(Desc d, long v) : p_(d.p) {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        v_ = static_cast<std::uint32_t>(r);
    }

    static PrimeField zero(Desc d) { return PrimeField(d, 0); }
    static PrimeField one(Desc d) { return PrimeField(d, 1); }
    static constexpr bool char_zero = false;

    Desc desc() const { return Desc{p_}; }
    bool is_zero() const { return v_ == 0; }
    std::uint32_t residue() const { return v_; }

    PrimeField operator-() const { return make(p_, v_ == 0 ? 0 : p_ - v_); }
    PrimeField operator+(const PrimeField& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        return make(p_, s >= p_ ? s - p_ : s);
    }
    PrimeField operator-(const PrimeField& o) const { return *this + (-o); }
    PrimeField operator*(const PrimeField& o) const {
        check(o);
        return make(p_, (std::uint64_t(v_) * o.v_) % p_);
    }
    PrimeField operator/(const PrimeField& o) const {
        check(o);
        if (o.is_zero()) throw ShapeError("division by zero");
        return *this * o.inverse();
    }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    PrimeField inverse() const {
        // extended Euclid on (v, p)
        long long t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return make(p_, std::uint64_t(t));
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_ && v_ == o.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    static PrimeField make(std::uint32_t p, std::uint64_t v) {
        PrimeField r;
        r.p_ = p;
        r.v_ = static_cast<std::uint32_t>(v);
        return r;
    }
    void check(const PrimeField& o) const {
        if (p_ != o.p_) throw FieldMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    std::uint32_t p_ = 5;
    std::uint32_t v_ = 0;
};

// Q(sqrt(d)): values a + b*w with w^2 = d.
class QuadExt {
public:
    struct Desc {
        long d = 2;
        bool operator==(const Desc&) const = default;
        std::string name() const { return "Qsqrt " + std::to_string(d); }
    };

    static Desc make_desc(long d) {
        if (d == 0 || d == 1 || detail::is_perfect_square(d))
            throw UnsupportedField("Qsqrt requires a nonsquare integer, got " + std::to_string(d));
        return Desc{d};
    }

    QuadExt() : a_(0), b_(0), d_(2) {}
    QuadExt(Desc desc, mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)), d_(desc.d) {
        a_.canonicalize();
        b_.canonicalize();
    }
    QuadExt(Desc desc, long a) : QuadExt(desc, mpq_class(a), mpq_class(0)) {}

    static QuadExt zero(Desc d) { return QuadExt(d, 0); }
    static QuadExt one(Desc d) { return QuadExt(d, 1); }
    static constexpr bool char_zero = true;

    Desc desc() const { return Desc{d_}; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const mpq_class& rat_part() const { return a_; }
    const mpq_class& root_part() const { return b_; }

    QuadExt operator-() const { return QuadExt(desc(), -a_, -b_); }
    QuadExt operator+(const QuadExt& o) const { check(o); return QuadExt(desc(), a_ + o.a_, b_ + o.b_); }
    QuadExt operator-(const QuadExt& o) const { check(o); return QuadExt(desc(), a_ - o.a_, b_ - o.b_); }
    QuadExt operator*(const QuadExt& o) const {
        check(o);
        return QuadExt(desc(), a_ * o.a_ + mpq_class(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QuadExt operator/(const QuadExt& o) const {
        check(o);
        if (o.is_zero()) throw ShapeError("division by zero");
        // 1/(a+bw) = (a-bw)/(a^2 - d b^2); the norm is nonzero since d is nonsquare
        mpq_class norm = o.a_ * o.a_ - mpq_class(d_) * o.b_ * o.b_;
        return QuadExt(desc(), (a_ * o.a_ - mpq_class(d_) * b_ * o.b_) / norm, (b_ * o.a_ - a_ * o.b_) / norm);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    QuadExt conj() const { return QuadExt(desc(), a_, -b_); }
    mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

    bool operator==(const QuadExt& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }

    std::string str() const {
        if (b_ == 0) return detail::mpq_to_string(a_);
        std::string root = detail::mpq_to_string(b_) + " w";
        if (a_ == 0) return root;
        if (b_ > 0) return detail::mpq_to_string(a_) + "+" + root;
        return detail::mpq_to_string(a_) + "-" + detail::mpq_to_string(mpq_class(-b_)) + " w";
    }

private:
    void check(const QuadExt& o) const {
        if (d_ != o.d_)
            throw FieldMismatch("Qsqrt " + std::to_string(d_) + " vs Qsqrt " + std::to_string(o.d_));
    }

    mpq_class a_, b_;
    long d_;
};

template <typename K>
concept ExactField = requires(const K& a, const K& b, typename K::Desc d) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::same_as<bool>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.desc() } -> std::same_as<typename K::Desc>;
    { K::zero(d) } -> std::same_as<K>;
    { K::one(d) } -> std::same_as<K>;
    { a.str() } -> std::same_as<std::string>;
    { d == d } -> std::same_as<bool>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<PrimeField>);
static_assert(ExactField<QuadExt>);

template <ExactField K>
K scalar_from_int(typename K::Desc d, long n) {
    K r = K::zero(d);
    K one = K::one(d);
    bool neg = n < 0;
    unsigned long m = neg ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    for (unsigned long i = 0; i < m; ++i) r += one;
    return neg ? -r : r;
}

template <>
inline Rational scalar_from_int<Rational>(Rational::Desc, long n) { return Rational(n); }
template <>
inline PrimeField scalar_from_int<PrimeField>(PrimeField::Desc d, long n) { return PrimeField(d, n); }
template <>
inline QuadExt scalar_from_int<QuadExt>(QuadExt::Desc d, long n) { return QuadExt(d, n); }

}  // namespace homlie
