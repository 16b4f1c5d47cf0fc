#include "rollsim/lti/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

// Dense row-major square matrix, just enough for the eigenvalue sweep.
class Square {
 public:
  explicit Square(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> a_;
};

// Upper Hessenberg companion matrix of a monic polynomial.
Square companion(const Polynomial& monic) {
  const int n = monic.degree();
  Square m(n);
  for (int j = 0; j < n; ++j) m(0, j) = -monic.coeffs()[static_cast<std::size_t>(j) + 1];
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  return m;
}

// Parlett-Reinsch balancing with power-of-two scale factors (exact in
// floating point, so eigenvalues are unchanged).
void balance(Square& a) {
  constexpr double radix = 2.0;
  constexpr double radix_sq = radix * radix;
  const int n = a.size();
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / radix;
      double f = 1.0;
      const double s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix_sq;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix_sq;
      }
      if ((col + row) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (int j = 0; j < n; ++j) a(i, j) *= g;
        for (int j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR with
// deflation. The matrix is destroyed.
std::vector<std::complex<double>> hessenberg_eigenvalues(Square& a) {
  constexpr int max_iterations = 60;
  const double eps = std::numeric_limits<double>::epsilon();
  const int n = a.size();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));

  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
  }

  int nn = n - 1;
  double shift_acc = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      // Look for a negligible subdiagonal element to split the problem.
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        out[static_cast<std::size_t>(nn)] = {x + shift_acc, 0.0};
        --nn;
        continue;
      }
      double y = a(nn - 1, nn - 1);
      double w = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        // Trailing 2x2 block.
        const double p = 0.5 * (y - x);
        const double q = p * p + w;
        const double z = std::sqrt(std::abs(q));
        x += shift_acc;
        if (q >= 0.0) {
          const double zz = p + std::copysign(z, p);
          out[static_cast<std::size_t>(nn - 1)] = {x + zz, 0.0};
          out[static_cast<std::size_t>(nn)] = {zz != 0.0 ? x - w / zz : x + zz, 0.0};
        } else {
          out[static_cast<std::size_t>(nn - 1)] = {x + p, z};
          out[static_cast<std::size_t>(nn)] = {x + p, -z};
        }
        nn -= 2;
        continue;
      }

      if (its == max_iterations) {
        std::ostringstream msg;
        msg << "QR iteration did not converge for eigenvalue " << nn << " after "
            << max_iterations << " sweeps; subdiagonal residual " << std::abs(a(nn, nn - 1));
        throw ConvergenceError(msg.str());
      }
      if (its == 10 || its == 20) {
        // Exceptional shift to break cycles.
        shift_acc += x;
        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;

      // Find two consecutive small subdiagonal elements.
      int m = nn - 2;
      double p = 0.0;
      double q = 0.0;
      double r = 0.0;
      for (; m >= l; --m) {
        const double z = a(m, m);
        const double rr = x - z;
        const double ss = y - z;
        p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
        q = a(m + 1, m + 1) - z - rr - ss;
        r = a(m + 2, m + 1);
        const double scale = std::abs(p) + std::abs(q) + std::abs(r);
        p /= scale;
        q /= scale;
        r /= scale;
        if (m == l) break;
        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
        const double v =
            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
        if (u <= eps * v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        a(i, i - 2) = 0.0;
        if (i != m + 2) a(i, i - 3) = 0.0;
      }

      // Double-shift QR step on rows l..nn and columns m..nn.
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        const double z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          double t = a(k, j) + q * a(k + 1, j);
          if (k != nn - 1) {
            t += r * a(k + 2, j);
            a(k + 2, j) -= t * z;
          }
          a(k + 1, j) -= t * y;
          a(k, j) -= t * x;
        }
        const int last = std::min(nn, k + 3);
        for (int i = l; i <= last; ++i) {
          double t = x * a(i, k) + y * a(i, k + 1);
          if (k != nn - 1) {
            t += z * a(i, k + 2);
            a(i, k + 2) -= t * r;
          }
          a(i, k + 1) -= t * q;
          a(i, k) -= t;
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

std::complex<double> newton_polish(const Polynomial& p, const Polynomial& dp,
                                   std::complex<double> z) {
  double best = std::abs(p(z));
  for (int iter = 0; iter < 4 && best > 0.0; ++iter) {
    const std::complex<double> d = dp(z);
    if (std::abs(d) == 0.0) break;
    const std::complex<double> candidate = z - p(z) / d;
    const double res = std::abs(p(candidate));
    if (!(res < best)) break;
    z = candidate;
    best = res;
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial are undefined");
  const Polynomial monic = p.monic();
  const int n = monic.degree();
  if (n == 0) return {};

  // Exact zero roots are peeled off first; the companion of the deflated
  // polynomial is then well-conditioned at the origin.
  int zeros = 0;
  std::vector<double> c(monic.coeffs().begin(), monic.coeffs().end());
  while (c.size() > 1 && c.back() == 0.0) {
    c.pop_back();
    ++zeros;
  }
  const Polynomial reduced(c);

  std::vector<std::complex<double>> roots;
  if (reduced.degree() > 0) {
    Square m = companion(reduced);
    balance(m);
    roots = hessenberg_eigenvalues(m);
  }
  const Polynomial deriv = reduced.derivative();
  for (auto& z : roots) {
    z = newton_polish(reduced, deriv, z);
    if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real()))) z.imag(0.0);
  }
  roots.insert(roots.end(), static_cast<std::size_t>(zeros), {0.0, 0.0});

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::vector<std::complex<double>> poles(const TransferFunction& tf) {
  if (tf.order() < 1) throw InvalidArgument("poles require deg(den) >= 1");
  return polynomial_roots(tf.den());
}

double root_residual(const Polynomial& p, std::complex<double> root) {
  return std::abs(p.monic()(root));
}

}  // namespace rollsim
