#include "qcubes/qcalc.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "qcubes/errors.hpp"

namespace qcubes {

LaurentPoly q_int(Exponent n, Exponent base_power) {
  if (n < 0) throw PreconditionViolation("q_int requires n >= 0");
  if (base_power < 1) throw PreconditionViolation("q_int requires base_power >= 1");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (Exponent i = 0; i < n; ++i) terms.push_back({checked_mul(i, base_power), mpz_class(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

Exponent triangular(Exponent n) {
  if (n < 0) throw PreconditionViolation("triangular requires n >= 0");
  return n % 2 == 0 ? checked_mul(n / 2, checked_add(n, 1)) : checked_mul(n, checked_add(n, 1) / 2);
}

mpz_class binomial(Exponent n, Exponent k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

LaurentPoly gauss_binomial_product(Exponent n, Exponent k) {
  if (k < 0 || k > n) return {};
  k = std::min(k, n - k);
  // After step i the partial result is [n-k+i choose i]_q, hence integral.
  LaurentPoly result(1);
  for (Exponent i = 1; i <= k; ++i) result = exact_div(result * q_int(n - k + i), q_int(i));
  return result;
}

namespace {

enum class Pascal { kLeft, kRight };

LaurentPoly pascal(Exponent n, Exponent k, Pascal rule) {
  if (k < 0 || k > n) return {};
  // row[c] holds [m choose c]_q for the current m, c = 0..k.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = LaurentPoly(1);
  for (Exponent m = 0; m < n; ++m) {
    // Build row m+1 in place, highest column first.
    for (Exponent c = std::min(k, m + 1); c >= 1; --c) {
      const auto col = static_cast<std::size_t>(c);
      if (rule == Pascal::kLeft) {
        row[col] = row[col].shifted(c) + row[col - 1];
      } else {
        row[col] = row[col] + row[col - 1].shifted(m - c + 1);
      }
    }
  }
  return row[static_cast<std::size_t>(k)];
}

class GaussMemo {
 public:
  const LaurentPoly* find(Exponent n, Exponent k) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({n, k});
    return it == table_.end() ? nullptr : &it->second;
  }

  const LaurentPoly& insert(Exponent n, Exponent k, LaurentPoly value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace({n, k}, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  // std::map nodes are stable, so returned references outlive later inserts.
  std::map<std::pair<Exponent, Exponent>, LaurentPoly> table_;
};

GaussMemo& memo() {
  static GaussMemo instance;
  return instance;
}

}  // namespace

LaurentPoly gauss_binomial_pascal_left(Exponent n, Exponent k) { return pascal(n, k, Pascal::kLeft); }

LaurentPoly gauss_binomial_pascal_right(Exponent n, Exponent k) { return pascal(n, k, Pascal::kRight); }

LaurentPoly gauss_binomial(Exponent n, Exponent k) {
  if (n < 0) throw PreconditionViolation("gauss_binomial requires n >= 0");
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentPoly(1);
  k = std::min(k, n - k);
  if (const LaurentPoly* hit = memo().find(n, k)) return *hit;

  LaurentPoly product = gauss_binomial_product(n, k);
  if (!(product == gauss_binomial_pascal_left(n, k)) || !(product == gauss_binomial_pascal_right(n, k))) {
    throw InternalInconsistency("Gaussian binomial routes disagree at n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  return memo().insert(n, k, std::move(product));
}

}  // namespace qcubes
