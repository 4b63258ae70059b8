#include "dqwalk/report.hpp"

#include <algorithm>
#include <cstdio>

namespace dqw {

namespace {

// Tiny append-only JSON writer. The report schema is flat enough that a
// hand-rolled emitter is simpler than fighting a library over float
// formatting, and it makes the determinism contract obvious.
class JsonOut {
public:
  void begin_object() {
    separate();
    out_ += '{';
    fresh_ = true;
  }
  void end_object() {
    out_ += '}';
    fresh_ = false;
  }
  void begin_array() {
    separate();
    out_ += '[';
    fresh_ = true;
  }
  void end_array() {
    out_ += ']';
    fresh_ = false;
  }

  void key(const std::string& name) {
    separate();
    quoted(name);
    out_ += ':';
    fresh_ = true;
  }

  void string(const std::string& value) {
    separate();
    quoted(value);
  }

  void number(double value) {
    separate();
    out_ += format_double(value);
  }

  void number(std::int64_t value) {
    separate();
    out_ += std::to_string(value);
  }

  void boolean(bool value) {
    separate();
    out_ += value ? "true" : "false";
  }

  void null() {
    separate();
    out_ += "null";
  }

  std::string take() { return std::move(out_); }

private:
  void separate() {
    if (!fresh_) out_ += ',';
    fresh_ = false;
  }

  void quoted(const std::string& text) {
    out_ += '"';
    for (char c : text) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool fresh_ = true;
};

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

bool Report::any_check_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second == CheckStatus::fail; });
}

std::string Report::to_json() const {
  JsonOut json;
  json.begin_object();

  json.key("checks");
  json.begin_object();
  for (const auto& [name, status] : checks) {  // std::map iterates sorted
    json.key(name);
    json.string(to_string(status));
  }
  json.end_object();

  json.key("drg");
  json.begin_object();
  json.key("intersection_array");
  if (is_drg) {
    json.begin_object();
    json.key("b");
    json.begin_array();
    for (std::int64_t v : intersection_b) json.number(v);
    json.end_array();
    json.key("c");
    json.begin_array();
    for (std::int64_t v : intersection_c) json.number(v);
    json.end_array();
    json.end_object();
  } else {
    json.null();
  }
  json.key("is_drg");
  json.boolean(is_drg);
  json.key("witness");
  if (drg_witness.empty())
    json.null();
  else
    json.string(drg_witness);
  json.end_object();

  json.key("factorization");
  if (factorization) {
    json.begin_object();
    json.key("coefficients");
    json.begin_array();
    for (double t : factorization->coefficients) json.number(t);
    json.end_array();
    json.key("contributions");
    json.begin_array();
    for (const GeneratorContribution& c : factorization->contributions) {
      json.begin_object();
      json.key("coefficient");
      json.number(c.coefficient);
      json.key("lambda");
      json.number(c.lambda);
      json.key("theta");
      json.number(c.theta);
      json.end_object();
    }
    json.end_array();
    json.key("gram_rank");
    json.number(static_cast<std::int64_t>(factorization->gram_rank));
    json.key("product_error");
    json.number(factorization->product_error);
    json.key("residual");
    json.number(factorization->residual);
    json.end_object();
  } else {
    json.null();
  }

  json.key("graph");
  json.begin_object();
  json.key("diameter");
  json.number(static_cast<std::int64_t>(diameter));
  json.key("family");
  if (family.empty())
    json.null();
  else
    json.string(family);
  json.key("k");
  json.number(static_cast<std::int64_t>(degree));
  json.key("n");
  json.number(static_cast<std::int64_t>(n));
  json.end_object();

  json.key("invertible");
  json.boolean(invertible);

  json.key("spectrum");
  json.begin_array();
  for (const SpectrumRow& row : spectrum) {
    json.begin_object();
    json.key("lambda");
    json.number(row.lambda);
    json.key("multiplicity");
    json.number(static_cast<std::int64_t>(row.multiplicity));
    json.key("theta");
    json.number(row.theta);
    json.end_object();
  }
  json.end_array();

  json.end_object();
  std::string text = json.take();
  text += '\n';
  return text;
}

}  // namespace dqw
