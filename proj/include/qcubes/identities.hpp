#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcubes/qpoly.hpp"
#include "qcubes/report.hpp"

namespace qcubes {

/// Inclusive integer range for one named parameter.
struct ParamRange {
  std::string name;
  Exponent lo;
  Exponent hi;
};

using SideBuilder = std::function<RationalFn(const Assignment&)>;
using IntegerFormula = std::function<mpz_class(const Assignment&)>;

/// An additional expression that must equal both sides.
struct NamedForm {
  std::string name;
  SideBuilder build;
};

/// One catalog entry: a q-identity lhs = rhs over integer parameters.
struct IdentityDescriptor {
  std::string id;
  std::string label;                // display label
  std::vector<std::string> params;  // parameter names, in order
  std::string domain{};             // validity predicate, as text
  std::function<bool(const Assignment&)> valid;
  SideBuilder lhs;
  SideBuilder rhs;
  std::vector<NamedForm> extra_forms{};

  // The q = 1 specialisation: an integer sum and its closed form.
  std::string classical{};
  IntegerFormula classical_sum{};
  IntegerFormula classical_value{};

  std::vector<ParamRange> default_ranges{};  // used by `verify --all`
  std::string note{};
};

/// The full catalog in a fixed order.
const std::vector<IdentityDescriptor>& list_identities();

/// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(std::string_view id);

enum class Side { kLhs, kRhs };

/// Throws UnknownIdentity, or InvalidParams when the assignment names the
/// wrong parameters or violates the descriptor's domain.
RationalFn build_side(std::string_view id, Side side, const Assignment& params);

/// Both sides (and any extra forms) reduced to ordinary polynomials and
/// compared. A pole or a negative exponent is an error outcome.
VerificationReport verify_instance(std::string_view id, const Assignment& params);

/// Every assignment of the Cartesian product of the ranges, in
/// lexicographic order of the descriptor's parameter list.
std::vector<Assignment> expand_grid(const IdentityDescriptor& d, const std::vector<ParamRange>& ranges);

/// verify_instance over the grid. Instances may run on several threads
/// (0 = hardware concurrency); the result is ordered like expand_grid.
GridReport verify_grid(std::string_view id, const std::vector<ParamRange>& ranges, unsigned threads = 0);

/// Values at q = 1 of lhs, rhs, the classical integer sum and its closed
/// form must all agree. On fail lhs/rhs carry the disagreeing integers.
VerificationReport classical_limit_check(std::string_view id, const Assignment& params);

}  // namespace qcubes
