#ifndef HMW_DENSE_HPP
#define HMW_DENSE_HPP

#include "hmw/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace hmw {

/// Square row-major real matrix with just the algebra the Fock checks need.
class DenseMatrix
{
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n);
        for(std::size_t i = 0; i < n; ++i)
        {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t size() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    DenseMatrix transpose() const
    {
        DenseMatrix t(n_);
        for(std::size_t i = 0; i < n_; ++i)
        {
            for(std::size_t j = 0; j < n_; ++j)
            {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    DenseMatrix& operator+=(const DenseMatrix& o)
    {
        for(std::size_t i = 0; i < data_.size(); ++i)
        {
            data_[i] += o.data_[i];
        }
        return *this;
    }

    DenseMatrix& operator-=(const DenseMatrix& o)
    {
        for(std::size_t i = 0; i < data_.size(); ++i)
        {
            data_[i] -= o.data_[i];
        }
        return *this;
    }

    DenseMatrix& operator*=(double s)
    {
        for(double& v : data_)
        {
            v *= s;
        }
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        const std::size_t n = a.n_;
        DenseMatrix c(n);
        for(std::size_t i = 0; i < n; ++i)
        {
            for(std::size_t k = 0; k < n; ++k)
            {
                const double aik = a(i, k);
                if(aik == 0.0)
                {
                    continue;
                }
                for(std::size_t j = 0; j < n; ++j)
                {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

inline DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

/// Largest |entry| over the leading `block` x `block` submatrix.
inline double max_abs(const DenseMatrix& m, std::size_t block)
{
    double v = 0.0;
    for(std::size_t i = 0; i < block; ++i)
    {
        for(std::size_t j = 0; j < block; ++j)
        {
            v = std::max(v, std::fabs(m(i, j)));
        }
    }
    return v;
}

inline double max_abs(const DenseMatrix& m) { return max_abs(m, m.size()); }

/// All eigenvalues of a real symmetric matrix, ascending, by cyclic Jacobi
/// rotations until the off-diagonal Frobenius norm drops below
/// 1e-13 times the full norm.
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a, int max_sweeps = 100)
{
    const std::size_t n = a.size();
    double total = 0.0;
    for(std::size_t i = 0; i < n; ++i)
    {
        for(std::size_t j = 0; j < n; ++j)
        {
            total += a(i, j) * a(i, j);
        }
    }
    const double target = 1e-13 * std::sqrt(total);

    auto off_norm = [&a, n] {
        double s = 0.0;
        for(std::size_t i = 0; i < n; ++i)
        {
            for(std::size_t j = i + 1; j < n; ++j)
            {
                s += 2.0 * a(i, j) * a(i, j);
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    while(off_norm() > target)
    {
        if(++sweep > max_sweeps)
        {
            throw NumericalError("jacobi_eigenvalues: no convergence within the sweep cap");
        }
        for(std::size_t p = 0; p + 1 < n; ++p)
        {
            for(std::size_t q = p + 1; q < n; ++q)
            {
                const double apq = a(p, q);
                if(apq == 0.0)
                {
                    continue;
                }
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t   = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c   = 1.0 / std::sqrt(1.0 + t * t);
                const double s   = t * c;
                for(std::size_t k = 0; k < n; ++k)
                {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for(std::size_t k = 0; k < n; ++k)
                {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> values(n);
    for(std::size_t i = 0; i < n; ++i)
    {
        values[i] = a(i, i);
    }
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace hmw

#endif // HMW_DENSE_HPP
