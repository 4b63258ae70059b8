#pragma once

#include "dqwalk/factorizer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dqw {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct SpectrumRow {
  double lambda = 0.0;
  int multiplicity = 0;
  double theta = 0.0;  // arccos(lambda / k) in [0, pi]
};

// Machine-readable summary of an analysis or factorization run. Serialization
// is deterministic: keys are sorted and floats are printed with 17
// significant digits, so identical runs produce identical bytes.
struct Report {
  int n = 0;
  int degree = 0;
  int diameter = 0;
  std::string family;  // empty -> null in JSON

  bool is_drg = false;
  std::vector<std::int64_t> intersection_b;  // empty unless is_drg
  std::vector<std::int64_t> intersection_c;
  std::string drg_witness;  // empty unless !is_drg

  std::vector<SpectrumRow> spectrum;
  bool invertible = false;

  struct Factorization {
    std::vector<double> coefficients;
    int gram_rank = 0;
    double residual = 0.0;
    double product_error = 0.0;
    std::vector<GeneratorContribution> contributions;
  };
  std::optional<Factorization> factorization;

  std::map<std::string, CheckStatus> checks;

  bool any_check_failed() const;
  std::string to_json() const;
};

// 17-significant-digit float formatting shared by all report output.
std::string format_double(double value);

}  // namespace dqw
