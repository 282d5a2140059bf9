#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sic/rational.hpp"

namespace sic {

/// True for 0, 1 and every integer > 1 with no repeated prime factor.
bool is_square_free(std::int64_t m);

/// Element a + b*sqrt(m) + (c + d*sqrt(m))*i of Q(sqrt(m), i).
///
/// The base m travels with the value. Whenever b = d = 0 the stored base is
/// normalized to 1, so a purely rational value mixes freely with any base;
/// combining two values with nonzero surd parts over different bases throws
/// std::invalid_argument. Arithmetic is exact.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(std::int64_t value);
    QuadScalar(Rational value);

    /// Builds a + b*sqrt(m) + (c + d*sqrt(m))*i. For m = 0 or m = 1 the surd
    /// parts are folded into a and c. Throws std::invalid_argument if m is
    /// negative or not square-free.
    QuadScalar(Rational a, Rational b, Rational c, Rational d, std::int64_t m);

    static QuadScalar imaginary_unit();
    static QuadScalar sqrt_of(std::int64_t m);

    /// Parses a bare rational (`p`, `p/q`) or a tuple `(a,b,c,d)` over base m.
    static QuadScalar parse(std::string_view text, std::int64_t m);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    std::int64_t base() const { return m_; }

    bool is_zero() const;
    bool has_surd() const { return !b_.is_zero() || !d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    QuadScalar conj() const;
    QuadScalar inverse() const;

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& rhs);
    QuadScalar& operator-=(const QuadScalar& rhs);
    QuadScalar& operator*=(const QuadScalar& rhs);
    QuadScalar& operator/=(const QuadScalar& rhs);

    friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
    friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
    friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
    friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadScalar&, const QuadScalar&) = default;

    /// Ray-file token: bare rational when b = c = d = 0, else `(a,b,c,d)`.
    std::string to_string() const;

private:
    void normalize();

    Rational a_;
    Rational b_;
    Rational c_;
    Rational d_;
    std::int64_t m_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

} // namespace sic
