#include "sic/quad_scalar.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace sic {

namespace {

std::int64_t common_base(const QuadScalar& x, const QuadScalar& y)
{
    if (x.has_surd() && y.has_surd() && x.base() != y.base())
        throw std::invalid_argument("mixing sqrt(" + std::to_string(x.base()) + ") and sqrt("
                                    + std::to_string(y.base()) + ")");
    return x.has_surd() ? x.base() : y.base();
}

// x + y*sqrt(m), a real element of Q(sqrt(m)).
struct RealPart {
    Rational x;
    Rational y;
};

RealPart mul(const RealPart& p, const RealPart& q, const Rational& m)
{
    return {p.x * q.x + p.y * q.y * m, p.x * q.y + p.y * q.x};
}

} // namespace

bool is_square_free(std::int64_t m)
{
    if (m < 0)
        return false;
    if (m < 4)
        return true;
    for (std::int64_t p = 2; p <= m / p; ++p) {
        if (m % (p * p) == 0)
            return false;
    }
    return true;
}

QuadScalar::QuadScalar(std::int64_t value)
    : a_(value)
{
}

QuadScalar::QuadScalar(Rational value)
    : a_(std::move(value))
{
}

QuadScalar::QuadScalar(Rational a, Rational b, Rational c, Rational d, std::int64_t m)
    : a_(std::move(a))
    , b_(std::move(b))
    , c_(std::move(c))
    , d_(std::move(d))
    , m_(m)
{
    if (!is_square_free(m))
        throw std::invalid_argument("sqrt base " + std::to_string(m) + " is not square-free");
    if (m == 0) {
        b_ = d_ = Rational{};
    } else if (m == 1) {
        a_ += b_;
        c_ += d_;
        b_ = d_ = Rational{};
    }
    normalize();
}

QuadScalar QuadScalar::imaginary_unit()
{
    return QuadScalar(0, 0, 1, 0, 1);
}

QuadScalar QuadScalar::sqrt_of(std::int64_t m)
{
    return QuadScalar(0, 1, 0, 0, m);
}

QuadScalar QuadScalar::parse(std::string_view text, std::int64_t m)
{
    if (text.empty())
        throw std::invalid_argument("empty component");
    if (text.front() != '(')
        return QuadScalar(Rational::parse(text), 0, 0, 0, m);
    if (text.back() != ')')
        throw std::invalid_argument("unterminated tuple '" + std::string(text) + "'");

    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Rational> parts;
    while (true) {
        const auto comma = body.find(',');
        parts.push_back(Rational::parse(body.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    if (parts.size() != 4)
        throw std::invalid_argument("tuple '" + std::string(text) + "' must have 4 entries");
    return QuadScalar(parts[0], parts[1], parts[2], parts[3], m);
}

void QuadScalar::normalize()
{
    if (!has_surd())
        m_ = 1;
}

bool QuadScalar::is_zero() const
{
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

QuadScalar QuadScalar::conj() const
{
    QuadScalar r = *this;
    r.c_ = -c_;
    r.d_ = -d_;
    return r;
}

QuadScalar QuadScalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    // 1/x = conj(x) / |x|^2 with |x|^2 = p^2 + q^2 = e + f*sqrt(m) real, and
    // 1/(e + f*sqrt(m)) = (e - f*sqrt(m)) / (e^2 - f^2 m).
    const Rational m(m_);
    const RealPart p{a_, b_};
    const RealPart q{c_, d_};
    const RealPart pp = mul(p, p, m);
    const RealPart qq = mul(q, q, m);
    const RealPart norm{pp.x + qq.x, pp.y + qq.y};
    const Rational denom = norm.x * norm.x - norm.y * norm.y * m;
    const RealPart inv_norm{norm.x / denom, -norm.y / denom};

    const RealPart re = mul(p, inv_norm, m);
    const RealPart im = mul(q, inv_norm, m);
    QuadScalar r;
    r.a_ = re.x;
    r.b_ = re.y;
    r.c_ = -im.x;
    r.d_ = -im.y;
    r.m_ = m_;
    r.normalize();
    return r;
}

QuadScalar QuadScalar::operator-() const
{
    QuadScalar r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    r.c_ = -c_;
    r.d_ = -d_;
    return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs)
{
    m_ = common_base(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    c_ += rhs.c_;
    d_ += rhs.d_;
    normalize();
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs)
{
    return *this += -rhs;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs)
{
    m_ = common_base(*this, rhs);
    const Rational m(m_);
    const RealPart p1{a_, b_}, q1{c_, d_};
    const RealPart p2{rhs.a_, rhs.b_}, q2{rhs.c_, rhs.d_};
    const RealPart pp = mul(p1, p2, m);
    const RealPart qq = mul(q1, q2, m);
    const RealPart pq = mul(p1, q2, m);
    const RealPart qp = mul(q1, p2, m);
    a_ = pp.x - qq.x;
    b_ = pp.y - qq.y;
    c_ = pq.x + qp.x;
    d_ = pq.y + qp.y;
    normalize();
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs)
{
    return *this *= rhs.inverse();
}

std::string QuadScalar::to_string() const
{
    if (is_rational())
        return a_.to_string();
    return "(" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() + "," + d_.to_string()
        + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x)
{
    return os << x.to_string();
}

} // namespace sic
