#ifndef HMW_DETAIL_DOUBLE_DOUBLE_HPP
#define HMW_DETAIL_DOUBLE_DOUBLE_HPP

#include <cmath>

namespace hmw::detail {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Enough arithmetic for
// summing hypergeometric series whose terms cancel heavily.
struct DoubleDouble
{
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b)
{
    const double s  = a + b;
    const double bb = s - a;
    const double e  = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline DoubleDouble quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(DoubleDouble x, DoubleDouble y)
{
    DoubleDouble s = two_sum(x.hi, y.hi);
    DoubleDouble t = two_sum(x.lo, y.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }
inline DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

inline DoubleDouble operator*(DoubleDouble x, DoubleDouble y)
{
    DoubleDouble p = two_prod(x.hi, y.hi);
    p.lo += x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble x, DoubleDouble y)
{
    const double q1 = x.hi / y.hi;
    DoubleDouble r  = x - y * DoubleDouble(q1);
    const double q2 = r.hi / y.hi;
    r = r - y * DoubleDouble(q2);
    const double q3 = r.hi / y.hi;
    return quick_two_sum(q1, q2) + DoubleDouble(q3);
}

inline double abs_hi(DoubleDouble x) { return std::fabs(x.hi); }

} // namespace hmw::detail

#endif // HMW_DETAIL_DOUBLE_DOUBLE_HPP
