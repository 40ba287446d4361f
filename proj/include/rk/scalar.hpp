#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace rk {

/**
 * Exact field scalars. The engine is templated on the scalar type; the two
 * instantiations are `Rational` (arbitrary-precision, GMP-backed, always in
 * lowest terms with positive denominator) and `Fp` (a prime field with a
 * process-wide runtime modulus, default 32003).
 */
using Rational = boost::multiprecision::mpq_rational;

/// Parse "a/b" or "a" into a canonical rational (lowest terms, positive
/// denominator). GMP canonicalizes on division, so we parse the parts
/// separately instead of feeding the raw string to mpq.
inline Rational parseRational(const std::string& s)
{
    const auto slash = s.find('/');
    using Int = boost::multiprecision::mpz_int;
    if (slash == std::string::npos)
        return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num) / Rational(den);
}

inline std::string toString(const Rational& x)
{
    return x.str();
}

/**
 * Prime-field scalar with a runtime modulus shared by the whole process.
 * The modulus is fixed once per run (CLI `--field prime:P`); values are
 * stored reduced into [0, p).
 */
class Fp
{
public:
    Fp() : v_(0) {}
    Fp(long x)
    {
        const long p = static_cast<long>(modulus_);
        long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }
    Fp(int x) : Fp(static_cast<long>(x)) {}

    static void setModulus(std::uint64_t p)
    {
        if (p < 2) throw std::invalid_argument("prime modulus must be >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("modulus is not prime");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return fromRaw((a.v_ + b.v_) % modulus_); }
    friend Fp operator-(Fp a, Fp b) { return fromRaw((a.v_ + modulus_ - b.v_) % modulus_); }
    friend Fp operator*(Fp a, Fp b) { return fromRaw((a.v_ * b.v_) % modulus_); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return fromRaw(v_ == 0 ? 0 : modulus_ - v_); }

    Fp& operator+=(Fp o) { *this = *this + o; return *this; }
    Fp& operator-=(Fp o) { *this = *this - o; return *this; }
    Fp& operator*=(Fp o) { *this = *this * o; return *this; }
    Fp& operator/=(Fp o) { *this = *this / o; return *this; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const
    {
        if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
        // extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus_);
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            const std::int64_t q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus_);
        return fromRaw(static_cast<std::uint64_t>(t));
    }

private:
    static Fp fromRaw(std::uint64_t raw)
    {
        Fp x; x.v_ = raw; return x;
    }
    std::uint64_t v_;
    static inline std::uint64_t modulus_ = 32003;
};

inline std::string toString(const Fp& x) { return std::to_string(x.value()); }

inline Fp parseFp(const std::string& s)
{
    return Fp(std::stol(s));
}

/// Uniform construction / parsing over the two scalar kinds.
template <typename T>
struct FieldTraits;

template <>
struct FieldTraits<Rational>
{
    static constexpr const char* name = "rational";
    static Rational parse(const std::string& s) { return parseRational(s); }
};

template <>
struct FieldTraits<Fp>
{
    static constexpr const char* name = "prime";
    static Fp parse(const std::string& s) { return parseFp(s); }
};

}  // namespace rk

namespace Eigen {

template <>
struct NumTraits<rk::Fp>
{
    typedef rk::Fp Real;
    typedef rk::Fp NonInteger;
    typedef rk::Fp Nested;
    typedef rk::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return rk::Fp(0); }
    static inline Real dummy_precision() { return rk::Fp(0); }
    static inline int digits10() { return 10; }
};

}  // namespace Eigen
