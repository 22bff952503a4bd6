#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcubes/qpoly.hpp"
#include <json.hpp>

namespace qcubes {

struct Param {
  std::string name;
  Exponent value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Named integer parameters in declaration order.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<Param> params) : params_(params) {}
  explicit Assignment(std::vector<Param> params) : params_(std::move(params)) {}

  /// Throws InvalidParams when the name is absent.
  Exponent get(std::string_view name) const;
  bool has(std::string_view name) const;
  void set(const std::string& name, Exponent value);

  const std::vector<Param>& params() const { return params_; }

  /// `n=2,k=3`, or `-` when empty.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Param> params_;
};

enum class Outcome { kPass, kFail, kError };

std::string_view to_string(Outcome o);

struct VerificationReport {
  std::string id;
  Assignment params;
  Outcome outcome = Outcome::kError;
  std::string lhs;    // canonical text, on fail
  std::string rhs;    // canonical text, on fail
  std::string error;  // on error
  double elapsed_ms = 0.0;

  bool passed() const { return outcome == Outcome::kPass; }
};

/// Result of checking every assignment in a parameter grid, in grid order.
struct GridReport {
  std::string id;
  std::vector<VerificationReport> instances;

  bool passed() const;
  /// Index of the first non-passing instance.
  std::optional<std::size_t> first_failure() const;
};

/// Pass iff lhs == rhs; on fail both sides are rendered.
VerificationReport compare_sides(std::string id, Assignment params, const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Runs check, fills elapsed_ms, and turns any qcubes::Error or
/// std::overflow_error into an error outcome.
VerificationReport timed_check(const std::string& id, const Assignment& params,
                               const std::function<VerificationReport()>& check);

/// JSON object with fields id, params, outcome, lhs/rhs (on fail), error
/// (on error), elapsed_ms. With include_timing false elapsed_ms is 0 so the
/// rendering is reproducible.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = true);

/// `<id> <params> PASS|FAIL|ERROR`
std::string to_text_line(const VerificationReport& r);

}  // namespace qcubes
