#include "treewalk/linalg.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace treewalk {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::norm() const noexcept {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

Matrix Matrix::minor(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
            if (j == c) continue;
            m(mi, mj++) = (*this)(i, j);
        }
        ++mi;
    }
    return m;
}

LuDecomposition::LuDecomposition(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw NumericalError("LU needs a square matrix");
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) throw NumericalError("singular matrix in LU factorization");
        if (pivot != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(pivot).begin());
            std::swap(perm_[k], perm_[pivot]);
            sign_ = -sign_;
        }
        const double inv = 1.0 / lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu_(i, k) * inv;
            lu_(i, k) = f;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<double> LuDecomposition::solve(std::span<const double> b) const {
    const std::size_t n = lu_.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

double LuDecomposition::determinant() const noexcept {
    double d = sign_;
    for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
}

SymmetricEigen jacobi_eigen(const Matrix& symmetric, std::size_t max_sweeps) {
    const std::size_t n = symmetric.rows();
    if (symmetric.cols() != n) throw NumericalError("eigensolver needs a square matrix");
    Matrix a = symmetric;
    Matrix v = Matrix::identity(n);
    const double total = std::max(a.norm(), 1e-300);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    std::size_t sweep = 0;
    while (off_norm() > 1e-15 * total) {
        if (sweep == max_sweeps) throw NumericalError("Jacobi eigensolver did not converge");
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    out.sweeps = sweep;
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

double max_eigen_residual(const Matrix& m, const SymmetricEigen& eig) {
    const std::size_t n = m.rows();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double mx = 0.0;
            for (std::size_t k = 0; k < n; ++k) mx += m(i, k) * eig.vectors(k, j);
            const double r = mx - eig.values[j] * eig.vectors(i, j);
            s += r * r;
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

}  // namespace treewalk
