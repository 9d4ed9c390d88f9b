#include "schubert/poincare.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
  std::int64_t v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

IntPolynomial IntPolynomial::substitute_power(int step) const {
  if (c_.empty()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree()) * step + 1, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::is_palindromic() const { return std::equal(c_.begin(), c_.end(), c_.rbegin()); }

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const std::int64_t c = c_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<std::int64_t> rem = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) throw IntegrityError("nonzero remainder dividing " + a.str() + " by " + b.str());
    return {};
  }
  std::vector<std::int64_t> q(a.degree() - db + 1, 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const std::int64_t lead = rem[k + db];
    if (lead % d[db] != 0) throw IntegrityError("nonzero remainder dividing " + a.str() + " by " + b.str());
    q[k] = lead / d[db];
    for (int i = 0; i <= db; ++i) rem[k + i] -= q[k] * d[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; }))
    throw IntegrityError("nonzero remainder dividing " + a.str() + " by " + b.str());
  return IntPolynomial(std::move(q));
}

IntPolynomial t_integer(int m) { return IntPolynomial(std::vector<std::int64_t>(std::max(m, 0), 1)); }

IntPolynomial t_factorial(int m) {
  IntPolynomial f({1});
  for (int k = 2; k <= m; ++k) f = f * t_integer(k);
  return f;
}

IntPolynomial t_multinomial(const std::vector<int>& parts, int step) {
  if (parts.empty()) throw DomainError("t_multinomial needs at least one part");
  if (step < 1) throw DomainError("t_multinomial step must be positive");
  int total = 0;
  IntPolynomial denom({1});
  for (int p : parts) {
    if (p < 0) throw DomainError("t_multinomial parts must be nonnegative");
    total += p;
    denom = denom * t_factorial(p);
  }
  return exact_divide(t_factorial(total), denom).substitute_power(step);
}

int big_L(const ThetaSet& th) {
  int l = 0;
  for (int b : th.block_sizes()) l += b / 2;
  return l;
}

IntPolynomial mod2_poincare(const ThetaSet& th) { return t_multinomial(th.block_sizes()); }

IntPolynomial free_poincare(const ThetaSet& th) {
  const int n = th.n();
  const int L = big_L(th);
  std::vector<int> halves;
  for (int b : th.block_sizes())
    if (b / 2 > 0) halves.push_back(b / 2);
  IntPolynomial fp = halves.empty() ? IntPolynomial({1}) : t_multinomial(halves, 4);
  for (int i = L; i <= (n - 1) / 2 - 1; ++i) fp = fp * (IntPolynomial({1}) + IntPolynomial::monomial(1, 4 * i + 3));
  if (n % 2 == 0 && 2 * L != n) fp = fp * (IntPolynomial({1}) + IntPolynomial::monomial(1, n - 1));
  return fp;
}

IntPolynomial torsion_poincare(const ThetaSet& th) {
  return exact_divide(mod2_poincare(th) - free_poincare(th), IntPolynomial({1, 1}));
}

}  // namespace schubert
