#include "dqwalk/walks.hpp"

#include "dqwalk/errors.hpp"

#include <cmath>
#include <string>

namespace dqw {

namespace {

// Row-vector action: out[j] = sum_i psi[i] * m(i, j).
std::vector<std::complex<double>> apply_right(const std::vector<std::complex<double>>& psi,
                                              const Matrix& m) {
  std::vector<std::complex<double>> out(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::complex<double> amp = psi[i];
    if (amp == std::complex<double>(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += amp * m(i, j);
  }
  return out;
}

}  // namespace

double ArcState::norm() const {
  double s = 0.0;
  for (const auto& amp : amplitudes) s += std::norm(amp);
  return std::sqrt(s);
}

ArcState make_single_arc_state(int arc_count, int arc) {
  if (arc < 0 || arc >= arc_count)
    throw ValidationError("start arc " + std::to_string(arc) + " out of range [0," +
                          std::to_string(arc_count) + ")");
  ArcState psi;
  psi.amplitudes.assign(arc_count, 0.0);
  psi.amplitudes[arc] = 1.0;
  return psi;
}

ArcState make_uniform_state(int arc_count) {
  if (arc_count <= 0) throw ValidationError("uniform state needs a positive arc count");
  ArcState psi;
  psi.amplitudes.assign(arc_count, 1.0 / std::sqrt(static_cast<double>(arc_count)));
  return psi;
}

ArcState discrete_evolve(const GroverWalk& walk, const ArcState& psi, int steps) {
  if (steps < 0) throw ValidationError("discrete_evolve: steps must be non-negative");
  if (psi.amplitudes.size() != walk.transition.rows())
    throw ValidationError("discrete_evolve: state size does not match the walk");
  ArcState out = psi;
  for (int s = 0; s < steps; ++s) out.amplitudes = apply_right(out.amplitudes, walk.transition);
  if (std::abs(out.norm() - psi.norm()) > 1e-10)
    throw ConsistencyError("discrete evolution did not preserve the norm");
  return out;
}

ArcState continuous_evolve(const FactorizationResult& result, const ArcState& psi, int m) {
  if (m < 0) throw ValidationError("continuous_evolve: m must be non-negative");
  ArcState out = psi;
  // The factors commute, so applying each one m times equals evolving every
  // continuous walk to time m * t_i, in any order.
  for (const Matrix& factor : result.factors) {
    if (psi.amplitudes.size() != factor.rows())
      throw ValidationError("continuous_evolve: state size does not match the factors");
    for (int r = 0; r < m; ++r) out.amplitudes = apply_right(out.amplitudes, factor);
  }
  if (std::abs(out.norm() - psi.norm()) > 1e-10)
    throw ConsistencyError("continuous evolution did not preserve the norm");
  return out;
}

double compare_evolutions(const GroverWalk& walk, const FactorizationResult& result,
                          const ArcState& psi, int m) {
  const ArcState discrete = discrete_evolve(walk, psi, 2 * m);
  const ArcState continuous = continuous_evolve(result, psi, m);
  double s = 0.0;
  for (std::size_t i = 0; i < discrete.amplitudes.size(); ++i)
    s += std::norm(discrete.amplitudes[i] - continuous.amplitudes[i]);
  return std::sqrt(s);
}

}  // namespace dqw
