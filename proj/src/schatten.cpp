#include "freelp/schatten.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace freelp {

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::invalid_argument, "cannot parse exponent '" + text + "'");
  }
  if (used != text.size()) fail(ErrorKind::invalid_argument, "cannot parse exponent '" + text + "'");
  return Exponent(v);
}

Exponent Exponent::conjugate() const {
  if (inf_) return Exponent(1.0);
  if (p_ == 1.0) return infinity();
  return Exponent(p_ / (p_ - 1.0));
}

bool Exponent::is_even_integer() const noexcept {
  return !inf_ && p_ == std::floor(p_) && std::fmod(p_, 2.0) == 0.0;
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  std::string s = std::to_string(p_);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

double lp_norm_of_values(std::vector<double> values, const Exponent& p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end(), std::greater<>());
  const double top = values.front();
  if (top == 0.0) return 0.0;
  if (p.is_infinite()) return top;
  const double q = p.value();
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double term = std::pow(v / top, q);
    const double next = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
  }
  return top * std::pow(sum + carry, 1.0 / q);
}

Complex pairing(const CoeffTensor& a, const CoeffTensor& b) {
  if (!a.same_shape(b)) fail(ErrorKind::invalid_argument, "pairing needs equal shapes");
  Complex out(0.0);
  for (const auto& [index, av] : a.entries()) {
    if (!b.contains(index)) continue;
    out += (b.entries().at(index).conjugate().cwiseProduct(av)).sum();
  }
  return out;
}

SplitNorm split_norm(const CoeffTensor& t, const PartitionSplit& split,
                     const Exponent& p, Eigen::Index cap) {
  SplitNorm out;
  out.split = split;
  out.norm = schatten_norm(reshape(t, split, cap), p);
  out.transposition = transposition_number(split);
  out.transposed = out.transposition > 0;
  return out;
}

namespace {

void finish_max(NormReport& report) {
  report.value = 0.0;
  report.argmax_k = 0;
  for (std::size_t i = 0; i < report.splits.size(); ++i) {
    if (report.splits[i].norm > report.value) {
      report.value = report.splits[i].norm;
      report.argmax_k = static_cast<int>(i);
    }
  }
}

}  // namespace

NormReport intersection_norm(const CoeffTensor& t, const Exponent& p, Eigen::Index cap) {
  NormReport report;
  report.p = p;
  for (int k = 0; k <= t.d(); ++k) {
    report.splits.push_back(split_norm(t, PartitionSplit::consecutive(t.d(), k), p, cap));
  }
  finish_max(report);
  return report;
}

NormReport partition_spectrum(const CoeffTensor& t, const Exponent& p, Eigen::Index cap) {
  NormReport report;
  report.p = p;
  for (const auto& split : enumerate_partitions(t.d())) {
    report.splits.push_back(split_norm(t, split, p, cap));
  }
  finish_max(report);
  return report;
}

// ---------------------------------------------------------------------------
// Sum norm.

namespace {

// Projection of a non-negative vector onto the unit l_q ball, 1 < q < inf.
// KKT: y_i + mu q y_i^{q-1} = x_i, with mu chosen so that sum y_i^q = 1.
Eigen::VectorXd project_lq_ball(const Eigen::VectorXd& x, double q) {
  auto norm_q = [q](const Eigen::VectorXd& v) {
    return std::pow(v.array().pow(q).sum(), 1.0 / q);
  };
  if (norm_q(x) <= 1.0) return x;
  auto solve_component = [q](double xi, double mu) {
    // y + mu q y^{q-1} is increasing on [0, xi].
    double lo = 0.0, hi = xi;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid + mu * q * std::pow(mid, q - 1.0) > xi) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  auto at = [&](double mu) {
    Eigen::VectorXd y(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) y[i] = solve_component(x[i], mu);
    return y;
  };
  double lo = 0.0, hi = 1.0;
  while (norm_q(at(hi)) > 1.0) hi *= 2.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm_q(at(mid)) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at(hi);
}

}  // namespace

Eigen::VectorXd prox_lp(const Eigen::VectorXd& s, double gamma, const Exponent& p) {
  if (gamma <= 0.0) return s;
  if (p.is_infinite()) {
    fail(ErrorKind::invalid_argument, "prox of the sup norm is not needed here");
  }
  const double pv = p.value();
  if (pv == 1.0) return (s.array() - gamma).max(0.0).matrix();
  if (pv == 2.0) {
    const double nrm = s.norm();
    if (nrm <= gamma) return Eigen::VectorXd::Zero(s.size());
    return s * (1.0 - gamma / nrm);
  }
  // Moreau: prox_{g|.|_p}(s) = s - g * proj_{B_{p'}}(s / g).
  const double q = pv / (pv - 1.0);
  return s - gamma * project_lq_ball(s / gamma, q);
}

namespace {

// Dense view of a tensor: one m x m block per flat index of [A]^d.
struct DenseTensor {
  int A = 1, d = 0, m = 1;
  std::vector<Matrix> blocks;

  DenseTensor(int A_, int d_, int m_) : A(A_), d(d_), m(m_) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(A);
    blocks.assign(count, Matrix::Zero(m, m));
  }

  std::size_t cols_of(int k) const {
    std::size_t c = 1;
    for (int i = k; i < d; ++i) c *= static_cast<std::size_t>(A);
    return c;
  }

  // Matricization for the consecutive split {1..k}.
  Matrix unfold(int k) const {
    const std::size_t cols = cols_of(k);
    const std::size_t rows = blocks.size() / cols;
    Matrix out(rows * m, cols * m);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        out.block(r * m, c * m, m, m) = blocks[r * cols + c];
      }
    }
    return out;
  }

  void fold(int k, const Matrix& M) {
    const std::size_t cols = cols_of(k);
    const std::size_t rows = blocks.size() / cols;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        blocks[r * cols + c] = M.block(r * m, c * m, m, m);
      }
    }
  }

  Complex dot(const DenseTensor& other) const {
    Complex s(0.0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      s += other.blocks[i].conjugate().cwiseProduct(blocks[i]).sum();
    }
    return s;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& b : blocks) s += b.squaredNorm();
    return std::sqrt(s);
  }

  DenseTensor& axpy(Complex a, const DenseTensor& x) {
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] += a * x.blocks[i];
    return *this;
  }
};

DenseTensor to_dense(const CoeffTensor& t) {
  DenseTensor out(t.alphabet_size(), t.d(), t.m());
  for (const auto& [index, value] : t.entries()) {
    std::size_t flat = 0;
    for (int i : index) flat = flat * t.alphabet_size() + i;
    out.blocks[flat] = value;
  }
  return out;
}

CoeffTensor from_dense(const DenseTensor& x, const CoeffTensor& shape) {
  CoeffTensor out(shape.n(), shape.d(), shape.m(), shape.alphabet());
  const auto indices = all_indices(x.A, x.d);
  for (std::size_t i = 0; i < indices.size(); ++i) out.set(indices[i], x.blocks[i]);
  return out;
}

double block_norm(const DenseTensor& y, int k, const Exponent& p) {
  return schatten_norm(y.unfold(k), p);
}

// Intersection norm over consecutive splits.
double dual_norm(const DenseTensor& b, const Exponent& q) {
  double out = 0.0;
  for (int k = 0; k <= b.d; ++k) out = std::max(out, block_norm(b, k, q));
  return out;
}

DenseTensor prox_block(const DenseTensor& y, int k, double gamma, const Exponent& p) {
  Matrix M = y.unfold(k);
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = prox_lp(svd.singularValues(), gamma, p);
  DenseTensor out = y;
  out.fold(k, svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint());
  return out;
}

}  // namespace

NormReport sum_norm(const CoeffTensor& t, const Exponent& p, const SumNormOptions& options) {
  if (p.is_infinite() || p.value() > 2.0) {
    fail(ErrorKind::invalid_argument, "sum norm is defined for 1 <= p <= 2");
  }
  const int d = t.d();
  const int blocks = d + 1;
  const Exponent q = p.conjugate();
  {
    const Eigen::Index widest = t.m() * static_cast<Eigen::Index>(
                                            std::pow(t.alphabet_size(), d));
    if (widest > options.cap) fail(ErrorKind::too_large, "sum norm exceeds dense cap");
  }
  const DenseTensor target = to_dense(t);

  NormReport report;
  report.p = p;
  SumCertificate cert;

  std::vector<DenseTensor> best(blocks, DenseTensor(target.A, d, target.m));
  double upper = 0.0;
  double lower = 0.0;

  // Start with all mass in the block whose single-term norm is smallest.
  {
    int start = 0;
    double start_norm = std::numeric_limits<double>::infinity();
    for (int k = 0; k < blocks; ++k) {
      const double v = block_norm(target, k, p);
      if (v < start_norm) {
        start_norm = v;
        start = k;
      }
    }
    best[start] = target;
    upper = start_norm;
  }

  auto certify = [&](const DenseTensor& b) {
    const double denom = dual_norm(b, q);
    if (denom <= 0.0) return;
    lower = std::max(lower, std::abs(target.dot(b)) / denom);
  };

  const double scale = target.frobenius();
  int iterations = 0;
  if (scale > 0.0) {
    certify(target);
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    for (int r = 0; r < options.random_probes; ++r) {
      DenseTensor probe(target.A, d, target.m);
      for (auto& blk : probe.blocks) {
        for (Eigen::Index i = 0; i < blk.size(); ++i) {
          const double re = normal(rng);
          const double im = normal(rng);
          blk.data()[i] = Complex(re, im);
        }
      }
      certify(probe);
    }

    // Douglas-Rachford on f(Y) = sum_k ||R_k Y_k||_p and the affine set
    // {sum_k Y_k = t}.
    const double gamma = scale / blocks;
    std::vector<DenseTensor> z = best;
    std::vector<DenseTensor> x(blocks, DenseTensor(target.A, d, target.m));
    const int check_every = 5;
    while (iterations < options.max_iter) {
      if (upper > 0.0 && (upper - lower) <= options.tol * upper) break;
      ++iterations;
      for (int k = 0; k < blocks; ++k) x[k] = prox_block(z[k], k, gamma, p);

      // Reflect and project: y_k = (2x_k - z_k) - (sum_j (2x_j - z_j) - t) / blocks.
      std::vector<DenseTensor> y = x;
      DenseTensor excess = target;
      excess.axpy(-2.0, target);
      for (int k = 0; k < blocks; ++k) {
        y[k].axpy(1.0, x[k]).axpy(-1.0, z[k]);
        excess.axpy(1.0, y[k]);
      }
      const Complex share = 1.0 / static_cast<double>(blocks);
      double objective = 0.0;
      for (int k = 0; k < blocks; ++k) {
        y[k].axpy(-share, excess);
        objective += block_norm(y[k], k, p);
      }
      if (objective < upper) {
        upper = objective;
        best = y;
      }

      if (iterations % check_every == 0 || iterations == options.max_iter) {
        DenseTensor mean(target.A, d, target.m);
        for (int k = 0; k < blocks; ++k) {
          DenseTensor u = z[k];
          u.axpy(-1.0, x[k]);
          certify(u);
          mean.axpy(share, u);
        }
        certify(mean);
      }
      for (int k = 0; k < blocks; ++k) {
        z[k].axpy(1.0, y[k]).axpy(-1.0, x[k]);
      }
    }
  }

  cert.upper = upper;
  cert.lower = std::min(lower, upper);
  cert.gap = upper - cert.lower;
  cert.converged = cert.gap <= options.tol * upper;
  cert.iterations = iterations;
  for (int k = 0; k < blocks; ++k) {
    cert.decomposition.push_back(from_dense(best[k], t));
    SplitNorm s;
    s.split = PartitionSplit::consecutive(d, k);
    s.norm = block_norm(best[k], k, p);
    s.transposition = transposition_number(s.split);
    s.transposed = s.transposition > 0;
    report.splits.push_back(std::move(s));
  }
  report.value = upper;
  report.argmax_k = 0;
  for (int k = 1; k < blocks; ++k) {
    if (report.splits[k].norm > report.splits[report.argmax_k].norm) report.argmax_k = k;
  }
  report.sum = std::move(cert);
  return report;
}

}  // namespace freelp
