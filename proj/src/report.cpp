#include "qcubes/report.hpp"

#include <chrono>
#include <stdexcept>

#include "qcubes/errors.hpp"

namespace qcubes {

Exponent Assignment::get(std::string_view name) const {
  for (const auto& p : params_) {
    if (p.name == name) return p.value;
  }
  throw InvalidParams("missing parameter " + std::string(name));
}

bool Assignment::has(std::string_view name) const {
  for (const auto& p : params_) {
    if (p.name == name) return true;
  }
  return false;
}

void Assignment::set(const std::string& name, Exponent value) {
  for (auto& p : params_) {
    if (p.name == name) {
      p.value = value;
      return;
    }
  }
  params_.push_back({name, value});
}

std::string Assignment::to_string() const {
  if (params_.empty()) return "-";
  std::string out;
  for (const auto& p : params_) {
    if (!out.empty()) out += ',';
    out += p.name + '=' + std::to_string(p.value);
  }
  return out;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kError:
      return "error";
  }
  return "error";
}

bool GridReport::passed() const { return !instances.empty() && !first_failure().has_value(); }

std::optional<std::size_t> GridReport::first_failure() const {
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!instances[i].passed()) return i;
  }
  return std::nullopt;
}

VerificationReport compare_sides(std::string id, Assignment params, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  if (lhs == rhs) {
    r.outcome = Outcome::kPass;
  } else {
    r.outcome = Outcome::kFail;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
  }
  return r;
}

VerificationReport timed_check(const std::string& id, const Assignment& params,
                               const std::function<VerificationReport()>& check) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    r = check();
  } catch (const Error& e) {
    r = VerificationReport{};
    r.outcome = Outcome::kError;
    r.error = e.what();
  } catch (const std::overflow_error& e) {
    r = VerificationReport{};
    r.outcome = Outcome::kError;
    r.error = e.what();
  }
  r.id = id;
  r.params = params;
  const auto stop = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : r.params.params()) params[p.name] = p.value;
  j["params"] = std::move(params);
  j["outcome"] = std::string(to_string(r.outcome));
  if (r.outcome == Outcome::kFail) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  if (r.outcome == Outcome::kError) j["error"] = r.error;
  j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
  return j;
}

std::string to_text_line(const VerificationReport& r) {
  std::string status;
  switch (r.outcome) {
    case Outcome::kPass:
      status = "PASS";
      break;
    case Outcome::kFail:
      status = "FAIL";
      break;
    case Outcome::kError:
      status = "ERROR";
      break;
  }
  return r.id + ' ' + r.params.to_string() + ' ' + status;
}

}  // namespace qcubes
