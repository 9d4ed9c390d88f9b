#include "schubert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation: " + str());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t k = i + 1; k < word_.size(); ++k)
      if (word_[k] < word_[i]) ++inv;
  return inv;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? " " : "") << word_[i];
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

LehmerCode::LehmerCode(int n, std::vector<int> alpha) : n_(n), alpha_(std::move(alpha)) {
  if (n < 1) throw InvalidCode("code needs n >= 1");
  if (static_cast<int>(alpha_.size()) > n - 1) throw InvalidCode("code longer than n-1");
  alpha_.resize(n - 1, 0);
  for (int i = 1; i <= n - 1; ++i) {
    const int a = alpha_[i - 1];
    if (a < 0 || a > n - i) throw InvalidCode("code entry " + std::to_string(i) + " out of range in " + str());
  }
}

int LehmerCode::total() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0); }

std::string LehmerCode::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i];
  os << ')';
  return os.str();
}

CodeSpectrum::CodeSpectrum(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw InvalidCode("spectrum entries must be positive");
    if (i && entries_[i] < entries_[i - 1]) throw InvalidCode("spectrum must be weakly increasing");
  }
}

std::string CodeSpectrum::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << '>';
  return os.str();
}

ThetaSet ThetaSet::from_theta(int n, std::vector<int> roots) {
  if (n < 1 || n > 31) throw DomainError("n out of supported range");
  ThetaSet t;
  t.n_ = n;
  for (int i : roots) {
    if (i < 1 || i > n - 1) throw DomainError("root index " + std::to_string(i) + " outside [1,n-1]");
    if ((t.mask_ >> (i - 1)) & 1u) throw DomainError("repeated root index " + std::to_string(i));
    t.mask_ |= 1u << (i - 1);
  }
  return t;
}

ThetaSet ThetaSet::from_k(int n, std::vector<int> ks) {
  ThetaSet t = full(n);
  std::uint32_t seen = 0;
  for (int k : ks) {
    if (k < 1 || k > n - 1) throw DomainError("k index " + std::to_string(k) + " outside [1,n-1]");
    if ((seen >> (k - 1)) & 1u) throw DomainError("repeated k index " + std::to_string(k));
    seen |= 1u << (k - 1);
  }
  t.mask_ &= ~seen;
  return t;
}

ThetaSet ThetaSet::from_mask(int n, std::uint32_t mask) {
  ThetaSet t = full(n);
  if (mask & ~t.mask_) throw DomainError("mask has bits outside [1,n-1]");
  t.mask_ = mask;
  return t;
}

ThetaSet ThetaSet::full(int n) {
  ThetaSet t = from_theta(n, {});
  t.mask_ = n >= 2 ? ((1u << (n - 1)) - 1u) : 0u;
  return t;
}

int ThetaSet::size() const { return __builtin_popcount(mask_); }

std::vector<int> ThetaSet::roots() const {
  std::vector<int> r;
  for (int i = 1; i < n_; ++i)
    if (contains(i)) r.push_back(i);
  return r;
}

std::vector<int> ThetaSet::k_set() const {
  std::vector<int> r;
  for (int i = 1; i < n_; ++i)
    if (!contains(i)) r.push_back(i);
  return r;
}

std::vector<int> ThetaSet::block_sizes() const {
  std::vector<int> b;
  int prev = 0;
  for (int k : k_set()) {
    b.push_back(k - prev);
    prev = k;
  }
  b.push_back(n_ - prev);
  return b;
}

int ThetaSet::dimension() const {
  int d = n_ * (n_ - 1) / 2;
  for (int b : block_sizes()) d -= b * (b - 1) / 2;
  return d;
}

std::string ThetaSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : roots()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<ThetaSet> all_theta_sets(int n) {
  std::vector<ThetaSet> out;
  const std::uint32_t count = n >= 2 ? (1u << (n - 1)) : 1u;
  for (std::uint32_t m = 0; m < count; ++m) out.push_back(ThetaSet::from_mask(n, m));
  return out;
}

std::string ReducedWord::str() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << 's' << letters[i];
  return os.str();
}

LehmerCode code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> a(n > 0 ? n - 1 : 0, 0);
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k <= n; ++k)
      if (w(k) < w(i)) ++a[i - 1];
  return LehmerCode(n, std::move(a));
}

Permutation decode(const LehmerCode& c) {
  const int n = c.n();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w;
  w.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const int a = c[i];
    w.push_back(remaining[a]);
    remaining.erase(remaining.begin() + a);
  }
  return Permutation(std::move(w));
}

CodeSpectrum spectrum(const LehmerCode& c) {
  std::vector<int> s;
  for (int i = 1; i < c.n(); ++i) s.insert(s.end(), c[i], i);
  return CodeSpectrum(std::move(s));
}

LehmerCode code_from_spectrum(const CodeSpectrum& s, int n) {
  std::vector<int> a(n > 0 ? n - 1 : 0, 0);
  for (int b : s.entries()) {
    if (b > n - 1) throw InvalidCode("spectrum entry " + std::to_string(b) + " exceeds n-1");
    ++a[b - 1];
  }
  return LehmerCode(n, std::move(a));
}

Permutation cell(const CodeSpectrum& s, int n) { return decode(code_from_spectrum(s, n)); }

bool is_minimal_representative(const Permutation& w, const ThetaSet& th) {
  if (w.size() != th.n()) throw DomainError("size mismatch between permutation and Theta");
  for (int p = 1; p < w.size(); ++p)
    if (th.contains(p) && w(p) > w(p + 1)) return false;
  return true;
}

std::vector<Permutation> enumerate_min_reps(const ThetaSet& th) {
  const int n = th.n();
  const std::vector<int> blocks = th.block_sizes();
  std::vector<int> start(blocks.size(), 0);
  for (std::size_t j = 1; j < blocks.size(); ++j) start[j] = start[j - 1] + blocks[j - 1];

  // label[v-1] = block that receives value v; values fill each block in increasing order.
  std::vector<int> label;
  for (std::size_t j = 0; j < blocks.size(); ++j) label.insert(label.end(), blocks[j], static_cast<int>(j));

  std::vector<std::pair<int, Permutation>> keyed;
  std::vector<int> fill(blocks.size());
  std::vector<int> w(n);
  do {
    std::copy(start.begin(), start.end(), fill.begin());
    for (int v = 1; v <= n; ++v) w[fill[label[v - 1]]++] = v;
    Permutation p(w);
    keyed.emplace_back(p.length(), std::move(p));
  } while (std::next_permutation(label.begin(), label.end()));

  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  std::vector<Permutation> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::vector<std::vector<int>> split_code(const LehmerCode& c, const ThetaSet& th) {
  const int n = c.n();
  if (n != th.n()) throw DomainError("size mismatch between code and Theta");
  std::vector<std::vector<int>> out;
  int prev = 0;
  auto check_block = [&](int lo, int hi, int width) {
    std::vector<int> block;
    for (int i = lo; i <= hi; ++i) {
      if (i > lo && c[i] < c[i - 1]) throw DomainError("code block is not a partition: " + c.str());
      if (c[i] > width) throw DomainError("code block exceeds its rectangle: " + c.str());
      block.push_back(c[i]);
    }
    return block;
  };
  for (int k : th.k_set()) {
    out.push_back(check_block(prev + 1, k, n - k));
    prev = k;
  }
  // Trailing block has width zero.
  check_block(prev + 1, n, 0);
  return out;
}

ReducedWord row_reading(const Permutation& w) {
  const LehmerCode c = code(w);
  ReducedWord r;
  for (int i = 1; i < w.size(); ++i)
    for (int s = c[i] + i - 1; s >= i; --s) r.letters.push_back(s);
  return r;
}

Permutation evaluate_word(const ReducedWord& word, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int s : word.letters) {
    if (s < 1 || s > n - 1) throw DomainError("letter s" + std::to_string(s) + " outside [1,n-1]");
    std::swap(w[s - 1], w[s]);
  }
  return Permutation(std::move(w));
}

Permutation project(const Permutation& w, const ThetaSet& th) {
  if (w.size() != th.n()) throw DomainError("size mismatch between permutation and Theta");
  std::vector<int> out = w.word();
  int prev = 0;
  std::vector<int> cuts = th.k_set();
  cuts.push_back(w.size());
  for (int k : cuts) {
    std::sort(out.begin() + prev, out.begin() + k);
    prev = k;
  }
  return Permutation(std::move(out));
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t multinomial(const std::vector<int>& parts) {
  // Product of binomials keeps intermediates small.
  std::int64_t result = 1;
  int total = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      ++total;
      result = result * total / i;
    }
  }
  return result;
}

}  // namespace schubert
