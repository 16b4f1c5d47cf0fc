#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library code paths being checked.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

// Expands prod (s - r_i) by repeated complex multiplication and returns the
// real parts of the descending coefficients. Roots must be closed under
// conjugation.
inline std::vector<double> poly_from_roots(const std::vector<cplx>& roots, double leading = 1.0) {
  std::vector<cplx> c{leading};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
  return out;
}

// Eigenvalues of the companion matrix via Eigen's general eigensolver.
inline std::vector<cplx> companion_eigenvalues(const std::vector<double>& descending) {
  const int n = static_cast<int>(descending.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) m(0, j) = -descending[static_cast<std::size_t>(j) + 1] / descending[0];
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<cplx> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

// Transfer function of (A, B, C, D) by Faddeev-LeVerrier:
// det(sI - A) = s^n + c1 s^(n-1) + ... and adj(sI - A) = sum N_k s^(n-1-k).
struct Rational {
  std::vector<double> num;  // length n+1, descending
  std::vector<double> den;
};

inline Rational transfer_from_state_space(const Eigen::MatrixXd& A, const Eigen::VectorXd& B,
                                          const Eigen::RowVectorXd& C, double D) {
  const int n = static_cast<int>(A.rows());
  Rational r;
  r.den.assign(static_cast<std::size_t>(n) + 1, 0.0);
  r.num.assign(static_cast<std::size_t>(n) + 1, 0.0);
  r.den[0] = 1.0;
  Eigen::MatrixXd N = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    r.num[static_cast<std::size_t>(k)] = C * N * B;
    const Eigen::MatrixXd AN = A * N;
    const double ck = -AN.trace() / k;
    r.den[static_cast<std::size_t>(k)] = ck;
    N = AN + ck * Eigen::MatrixXd::Identity(n, n);
  }
  for (int k = 0; k <= n; ++k) r.num[static_cast<std::size_t>(k)] += D * r.den[static_cast<std::size_t>(k)];
  return r;
}

inline double first_order_step(double t, double tau = 1.0) { return 1.0 - std::exp(-t / tau); }

// Random root set closed under conjugation with real parts of the requested
// sign and magnitude in [min_mag, max_mag].
inline std::vector<cplx> random_roots(std::mt19937_64& rng, int degree, bool stable,
                                      double min_mag = 0.2, double max_mag = 3.0) {
  std::uniform_real_distribution<double> mag(min_mag, max_mag);
  std::uniform_real_distribution<double> imag(0.1, 2.0);
  std::bernoulli_distribution pair(0.5);
  std::vector<cplx> roots;
  while (static_cast<int>(roots.size()) < degree) {
    const double re = stable ? -mag(rng) : mag(rng);
    if (degree - static_cast<int>(roots.size()) >= 2 && pair(rng)) {
      const double im = imag(rng);
      roots.emplace_back(re, im);
      roots.emplace_back(re, -im);
    } else {
      roots.emplace_back(re, 0.0);
    }
  }
  return roots;
}

// Flips one root's real part so the set contains at least one unstable root.
inline std::vector<cplx> make_unstable(std::vector<cplx> roots) {
  for (auto& r : roots) {
    if (r.imag() == 0.0) {
      r = {std::abs(r.real()), 0.0};
      return roots;
    }
  }
  // Only conjugate pairs: flip the first pair.
  roots[0] = {std::abs(roots[0].real()), roots[0].imag()};
  roots[1] = {std::abs(roots[1].real()), roots[1].imag()};
  return roots;
}

}  // namespace oracle
