// Copyright 2026 The entlur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entlur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entlur/errors.hpp"

namespace entlur {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::InvalidSpin: return "InvalidSpin";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NormalizationError: return "NormalizationError";
    case ErrorKind::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorKind::MissingSetting: return "MissingSetting";
    }
    return "Error";
}

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << what << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows()
            << "x" << b.cols() << " differ";
        throw DimMismatch(msg.str());
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimMismatch("entry count does not equal rows*cols");
    if (!all_finite())
        throw InvalidArgument("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw DimMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto &z : m.data_)
        z = std::conj(z);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    if (!is_square())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_error() <= tol; }

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_)
        z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows())
        throw DimMismatch("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size())
        throw DimMismatch("matrix-vector product: dimensions differ");
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    return a * std::span<const Complex>(v);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

ComplexMatrix adjoint(const ComplexMatrix &m) { return m.adjoint(); }

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex s = a(ia, ja);
            if (s == Complex{})
                continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return out;
}

ComplexVector tensor_product(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexVector out;
    out.reserve(a.size() * b.size());
    for (const Complex &x : a)
        for (const Complex &y : b)
            out.push_back(x * y);
    return out;
}

Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
    if (v.size() != w.size())
        throw DimMismatch("inner product: lengths differ");
    Complex acc{};
    for (std::size_t k = 0; k < v.size(); ++k)
        acc += std::conj(v[k]) * w[k];
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex &z : v)
        acc += std::norm(z);
    return std::sqrt(acc);
}

// Each rotation first rephases column q so that a_pq becomes real and
// positive, then applies the real symmetric Jacobi rotation that zeroes it.
HermitianEigen eig_hermitian(const ComplexMatrix &m, const Tolerances &tol) {
    if (!m.is_square())
        throw DimMismatch("eig_hermitian: matrix is not square");
    const double herr = m.hermiticity_error();
    if (!(herr <= tol.hermitian)) {
        std::ostringstream msg;
        msg << "eig_hermitian: max |m - m^dagger| = " << herr << " exceeds " << tol.hermitian;
        throw NotHermitian(msg.str());
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize so rounding in the input cannot bias the rotations.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (Complex z : a.entries())
        scale += std::norm(z);
    scale = std::sqrt(scale);

    constexpr int kMaxSweeps = 100;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += std::norm(a(i, j));
        if (off == 0.0 || std::sqrt(off) <= 1e-3 * eps * scale)
            break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0)
                    continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (sweep > 3 && g * 1e3 < eps * std::abs(app) && g * 1e3 < eps * std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Complex phase = a(p, q) / g;
                const double theta = (aqq - app) / (2.0 * g);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0)
                    t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // J restricted to (p,q): [[c, s], [-s conj(phase), c conj(phase)]]
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                // a <- a J (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                // a <- J^dagger a (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix &h, double angle, const Tolerances &tol) {
    const HermitianEigen eig = eig_hermitian(h, tol);
    return spectral_apply(eig, [angle](double lambda) {
        return std::exp(Complex(0.0, -angle * lambda));
    });
}

PureState::PureState(ComplexVector amplitudes, const Tolerances &tol)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty())
        throw InvalidState("pure state must have dimension >= 1");
    for (const Complex &z : amplitudes_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidState("pure state amplitudes must be finite");
    const double nrm = norm(amplitudes_);
    if (!(std::abs(nrm - 1.0) <= tol.norm)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "pure state norm " << nrm << " deviates from 1 by more than " << tol.norm;
        throw InvalidState(msg.str());
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    const double nrm = norm(amplitudes);
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw InvalidState("cannot normalize a zero or non-finite vector");
    for (Complex &z : amplitudes)
        z /= nrm;
    return PureState(std::move(amplitudes), Unchecked{});
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const Tolerances &tol)
    : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0)
        throw InvalidState("density matrix must be square and non-empty");
    if (!matrix_.all_finite())
        throw InvalidState("density matrix entries must be finite");
    const double herr = matrix_.hermiticity_error();
    if (!(herr <= tol.hermitian)) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herr;
        throw InvalidState(msg.str());
    }
    const Complex tr = matrix_.trace();
    if (!(std::abs(tr - Complex(1.0)) <= tol.trace)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "density matrix trace " << tr.real() << " deviates from 1 by more than "
            << tol.trace;
        throw InvalidState(msg.str());
    }
    const HermitianEigen eig = eig_hermitian(matrix_, tol);
    if (!(eig.values.back() >= -tol.psd)) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite: smallest eigenvalue "
            << eig.values.back();
        throw InvalidState(msg.str());
    }
}

DensityMatrix::DensityMatrix(const PureState &psi)
    : matrix_(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())) {}

double expectation(const DensityMatrix &rho, const ComplexMatrix &a, const Tolerances &tol) {
    if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
        std::ostringstream msg;
        msg << "expectation: operator is " << a.rows() << "x" << a.cols()
            << " but state has dimension " << rho.dim();
        throw DimMismatch(msg.str());
    }
    if (!a.is_hermitian(tol.hermitian))
        throw NotHermitian("expectation: operator is not Hermitian");
    const ComplexMatrix &r = rho.matrix();
    Complex acc{};
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            acc += r(i, j) * a(j, i);
    if (!(std::abs(acc.imag()) <= tol.expectation_imag))
        throw InternalConsistency("expectation: imaginary part exceeds tolerance");
    return acc.real();
}

double expectation(const PureState &psi, const ComplexMatrix &a, const Tolerances &tol) {
    if (a.rows() != psi.dim() || a.cols() != psi.dim())
        throw DimMismatch("expectation: operator and state dimensions differ");
    if (!a.is_hermitian(tol.hermitian))
        throw NotHermitian("expectation: operator is not Hermitian");
    const Complex val = inner(psi.amplitudes(), a * psi.amplitudes());
    if (!(std::abs(val.imag()) <= tol.expectation_imag))
        throw InternalConsistency("expectation: imaginary part exceeds tolerance");
    return val.real();
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(tensor_product(a.matrix(), b.matrix()));
}

PureState tensor_product(const PureState &a, const PureState &b) {
    return PureState::normalized(tensor_product(std::span<const Complex>(a.amplitudes()),
                                                std::span<const Complex>(b.amplitudes())));
}

} // namespace entlur
