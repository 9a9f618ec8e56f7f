// Copyright 2026 The gbsdock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbsdock/gaussian_state.h"

#include <cmath>
#include <sstream>

#include "gbsdock/errors.h"

namespace gbsdock {

namespace {

using Complex = std::complex<double>;

// Unitary taking quadratures to ladder operators: (a, a^dagger) = T (x, p).
ComplexMatrix ladder_transform(int m) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    ComplexMatrix t = ComplexMatrix::Zero(2 * m, 2 * m);
    for (int j = 0; j < m; ++j) {
        t(j, j) = s;
        t(j, m + j) = s * i;
        t(m + j, j) = s;
        t(m + j, m + j) = -s * i;
    }
    return t;
}

ComplexMatrix exchange(int m) {
    ComplexMatrix x = ComplexMatrix::Zero(2 * m, 2 * m);
    x.topRightCorner(m, m).setIdentity();
    x.bottomLeftCorner(m, m).setIdentity();
    return x;
}

std::vector<int> quadrature_indices(int m, const std::vector<int> &modes) {
    std::vector<int> idx;
    idx.reserve(2 * modes.size());
    for (int j : modes) idx.push_back(j);
    for (int j : modes) idx.push_back(m + j);
    return idx;
}

}  // namespace

GaussianState::GaussianState(Eigen::MatrixXd covariance) : covariance_(std::move(covariance)) {
    const auto dim = covariance_.rows();
    if (dim != covariance_.cols() || dim % 2 != 0 || dim == 0) {
        throw DimensionError("covariance must be 2M x 2M with M >= 1");
    }
    if (!covariance_.allFinite()) throw ValidationError("covariance has non-finite entries");
    const double scale = std::max(1.0, covariance_.cwiseAbs().maxCoeff());
    if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
        throw ValidationError("covariance is not symmetric");
    }
    covariance_ = 0.5 * (covariance_ + covariance_.transpose()).eval();
    const int m = static_cast<int>(dim / 2);
    ComplexMatrix bound = covariance_.cast<Complex>() + Complex(0.0, 0.5) * symplectic_form(m).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(bound, Eigen::EigenvaluesOnly);
    const double lowest = solver.eigenvalues().minCoeff();
    if (lowest < -1e-9 * scale) {
        std::ostringstream msg;
        msg << "covariance violates the uncertainty relation (eigenvalue " << lowest << ")";
        throw ValidationError(msg.str());
    }
}

GaussianState GaussianState::vacuum(int modes) {
    if (modes < 1) throw ValidationError("state needs at least one mode");
    return GaussianState(0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

Eigen::MatrixXd GaussianState::reduced(const std::vector<int> &modes) const {
    for (int j : modes) {
        if (j < 0 || j >= this->modes()) throw InvalidVertexError("mode " + std::to_string(j) + " out of range");
    }
    const auto idx = quadrature_indices(this->modes(), modes);
    return covariance_(idx, idx);
}

double GaussianState::mean_photons(int mode) const {
    const int m = modes();
    return 0.5 * (covariance_(mode, mode) + covariance_(m + mode, m + mode) - 1.0);
}

ClickPattern::ClickPattern(std::vector<std::uint8_t> c) : clicks(std::move(c)) {
    for (auto v : clicks) {
        if (v > 1) throw ValidationError("click pattern entries must be 0 or 1");
    }
}

int ClickPattern::count() const {
    int n = 0;
    for (auto v : clicks) n += v;
    return n;
}

std::string ClickPattern::bitstring() const {
    std::string s;
    s.reserve(clicks.size());
    for (auto v : clicks) s.push_back(v ? '1' : '0');
    return s;
}

Eigen::MatrixXd symplectic_form(int modes) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    j.topRightCorner(modes, modes).setIdentity();
    j.bottomLeftCorner(modes, modes) = -Eigen::MatrixXd::Identity(modes, modes);
    return j;
}

GaussianState state_from_encoding(const Encoding &e) {
    const int m = e.modes();
    if (e.b_matrix.rows() != m || e.b_matrix.cols() != m) throw DimensionError("encoding B has wrong shape");
    ComplexMatrix kernel = ComplexMatrix::Zero(2 * m, 2 * m);
    kernel.topLeftCorner(m, m) = e.b_matrix.cast<Complex>();
    kernel.bottomRightCorner(m, m) = e.b_matrix.cast<Complex>();  // B* = B for real B

    const ComplexMatrix identity = ComplexMatrix::Identity(2 * m, 2 * m);
    Eigen::FullPivLU<ComplexMatrix> lu(identity - exchange(m) * kernel);
    if (!lu.isInvertible()) throw EncodingError("I - X A is singular: B has an eigenvalue equal to 1");
    const ComplexMatrix sigma_ladder = lu.inverse() - 0.5 * identity;

    const ComplexMatrix t = ladder_transform(m);
    const ComplexMatrix sigma = t.adjoint() * sigma_ladder * t;
    if (sigma.imag().cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, sigma.real().cwiseAbs().maxCoeff())) {
        throw EncodingError("covariance from encoding is not real");
    }
    return GaussianState(sigma.real());
}

ComplexMatrix kernel_matrix(const GaussianState &s) {
    const int m = s.modes();
    const ComplexMatrix t = ladder_transform(m);
    const ComplexMatrix identity = ComplexMatrix::Identity(2 * m, 2 * m);
    const ComplexMatrix q = t * s.covariance().cast<Complex>() * t.adjoint() + 0.5 * identity;
    return exchange(m) * (identity - q.inverse());
}

GaussianState apply_loss(const GaussianState &s, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw ValidationError("transmissivity eta must lie in (0, 1]");
    const auto dim = s.covariance().rows();
    return GaussianState(eta * s.covariance() + (1.0 - eta) * 0.5 * Eigen::MatrixXd::Identity(dim, dim));
}

double vacuum_probability(const GaussianState &s, const std::vector<int> &modes) {
    if (modes.empty()) return 1.0;
    Eigen::MatrixXd q = s.reduced(modes);
    q.diagonal().array() += 0.5;
    Eigen::LLT<Eigen::MatrixXd> llt(q);
    if (llt.info() != Eigen::Success) throw NumericalError("sigma + I/2 is not positive definite");
    return 1.0 / llt.matrixLLT().diagonal().prod();
}

double threshold_probability(const GaussianState &s, const ClickPattern &pattern) {
    if (pattern.modes() != s.modes()) {
        throw ValidationError("click pattern has " + std::to_string(pattern.modes()) + " entries for a " +
                              std::to_string(s.modes()) + "-mode state");
    }
    std::vector<int> clicked;
    std::vector<int> quiet;
    for (int j = 0; j < s.modes(); ++j) (pattern.clicks[j] ? clicked : quiet).push_back(j);
    if (clicked.size() > 30) throw SizeError("threshold probability limited to 30 clicks");

    const std::uint32_t subsets = std::uint32_t{1} << clicked.size();
    double total = 0.0;
    std::vector<int> modes;
    for (std::uint32_t z = 0; z < subsets; ++z) {
        modes = quiet;
        int size = 0;
        for (std::size_t k = 0; k < clicked.size(); ++k) {
            if (z >> k & 1u) {
                modes.push_back(clicked[k]);
                ++size;
            }
        }
        const double p = vacuum_probability(s, modes);
        total += (size % 2 == 0) ? p : -p;
    }
    if (total < -1e-10) throw NumericalError("negative threshold probability " + std::to_string(total));
    return std::max(total, 0.0);
}

Eigen::VectorXd click_probabilities(const GaussianState &s) {
    const int m = s.modes();
    const auto &sigma = s.covariance();
    Eigen::VectorXd p(m);
    for (int j = 0; j < m; ++j) {
        const double det = (sigma(j, j) + 0.5) * (sigma(m + j, m + j) + 0.5) - sigma(j, m + j) * sigma(m + j, j);
        p[j] = 1.0 - 1.0 / std::sqrt(det);
    }
    return p;
}

double mean_clicks(const GaussianState &s) { return click_probabilities(s).sum(); }

}  // namespace gbsdock
