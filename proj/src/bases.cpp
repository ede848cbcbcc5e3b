#include "lhh/bases.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lhh {

namespace {

std::uint64_t checked_power(std::size_t d, int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) {
    if (d != 0 && p > std::numeric_limits<std::uint64_t>::max() / d) throw std::overflow_error("tensor basis too large");
    p *= d;
  }
  return p;
}

}  // namespace

TensorBasis::TensorBasis(std::size_t d, int slots, const MatrixData* weight_zero)
    : d_(d), slots_(slots), total_(checked_power(d, slots)) {
  if (weight_zero == nullptr) return;
  filtered_ = true;
  const int N = weight_zero->size;
  const std::size_t base = weight_zero->base->dim();
  // Enumerate index patterns (row, col) per slot with balanced weight, then base letters.
  std::vector<int> rows(slots), cols(slots);
  std::vector<int> balance(N, 0);
  std::vector<std::uint64_t> pattern_codes;
  auto rec = [&](auto&& self, int s) -> void {
    if (s == slots) {
      for (int v : balance)
        if (v != 0) return;
      std::vector<int> letters(slots);
      std::vector<int> b(slots, 0);
      while (true) {
        for (int t = 0; t < slots; ++t) letters[t] = static_cast<int>(weight_zero->index(rows[t], cols[t], b[t]));
        codes_.push_back(encode(letters));
        int t = slots - 1;
        while (t >= 0 && ++b[t] == static_cast<int>(base)) b[t--] = 0;
        if (t < 0) break;
      }
      return;
    }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        rows[s] = i;
        cols[s] = j;
        ++balance[i];
        --balance[j];
        self(self, s + 1);
        --balance[i];
        ++balance[j];
      }
  };
  rec(rec, 0);
  std::sort(codes_.begin(), codes_.end());
}

std::optional<std::size_t> TensorBasis::index(std::uint64_t code) const {
  if (!filtered_) {
    if (code >= total_) return std::nullopt;
    return static_cast<std::size_t>(code);
  }
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

void TensorBasis::decode_code(std::uint64_t code, std::vector<int>& out) const {
  out.resize(slots_);
  for (int s = slots_ - 1; s >= 0; --s) {
    out[s] = static_cast<int>(code % d_);
    code /= d_;
  }
}

std::uint64_t TensorBasis::encode(const std::vector<int>& letters) const {
  std::uint64_t c = 0;
  for (int s = 0; s < slots_; ++s) c = c * d_ + static_cast<std::uint64_t>(letters[s]);
  return c;
}

std::uint64_t weight_zero_count(int N, std::size_t d, int slots) {
  // Count balanced (row, col) patterns by dynamic programming over the balance vector.
  std::vector<std::pair<std::vector<int>, std::uint64_t>> states{{std::vector<int>(N, 0), 1}};
  for (int s = 0; s < slots; ++s) {
    std::vector<std::pair<std::vector<int>, std::uint64_t>> next;
    for (const auto& [bal, count] : states)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          auto b = bal;
          ++b[i];
          --b[j];
          next.emplace_back(std::move(b), count);
        }
    std::sort(next.begin(), next.end());
    states.clear();
    for (auto& e : next) {
      if (!states.empty() && states.back().first == e.first) states.back().second += e.second;
      else states.push_back(std::move(e));
    }
  }
  std::uint64_t patterns = 0;
  for (const auto& [bal, count] : states)
    if (std::all_of(bal.begin(), bal.end(), [](int v) { return v == 0; })) patterns += count;
  return patterns * checked_power(d, slots);
}

ExteriorBasis::ExteriorBasis(std::size_t d, int n) : d_(d), n_(n) {
  if (n < 0) throw std::invalid_argument("ExteriorBasis: negative degree");
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == n) {
      subsets_.push_back(cur);
      return;
    }
    for (int v = start; v < static_cast<int>(d); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  binom_.assign(d + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t a = 0; a <= d; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= n && static_cast<std::size_t>(b) <= a; ++b)
      binom_[a][b] = binom_[a - 1][b - 1] + (static_cast<std::size_t>(b) <= a - 1 ? binom_[a - 1][b] : 0);
  }
}

std::size_t ExteriorBasis::index(const std::vector<int>& s) const {
  // Lexicographic rank: count subsets that branch below s at each position.
  std::size_t r = 0;
  int prev = -1;
  for (int p = 0; p < n_; ++p) {
    for (int v = prev + 1; v < s[p]; ++v) {
      const std::size_t remaining = d_ - static_cast<std::size_t>(v) - 1;
      const int need = n_ - p - 1;
      if (need >= 0 && static_cast<std::size_t>(need) <= remaining) r += binom_[remaining][need];
    }
    prev = s[p];
  }
  return r;
}

int ExteriorBasis::normalize(std::vector<int>& letters) {
  int sign = 1;
  for (std::size_t i = 1; i < letters.size(); ++i)
    for (std::size_t j = i; j > 0 && letters[j - 1] >= letters[j]; --j) {
      if (letters[j - 1] == letters[j]) return 0;
      std::swap(letters[j - 1], letters[j]);
      sign = -sign;
    }
  return sign;
}

CyclicQuotientBasis::CyclicQuotientBasis(std::size_t d, int n) {
  const int m = n + 1;
  TensorBasis tb(d, m);
  const std::uint64_t total = tb.size();
  projection_.assign(total, {0, 0});
  std::vector<int> letters, rot(m);
  // Pass 1: representatives (codes that are least in their orbit and not killed).
  std::vector<std::int64_t> rep_index(total, -1);
  for (std::uint64_t c = 0; c < total; ++c) {
    tb.decode_code(c, letters);
    bool least = true, killed = false;
    for (int k = 1; k < m && least; ++k) {
      // rot^k shifts right by k: position p receives letters[p - k].
      for (int p = 0; p < m; ++p) rot[p] = letters[(p - k + m) % m];
      const auto rc = tb.encode(rot);
      if (rc < c) least = false;
      else if (rc == c && (static_cast<long>(n) * k) % 2 == 1) killed = true;
    }
    if (least && !killed) {
      rep_index[c] = static_cast<std::int64_t>(representatives_.size());
      representatives_.push_back(c);
    } else if (least) {
      rep_index[c] = -2;
    }
  }
  // Pass 2: w = rot^k(rep) is (-1)^{nk} times the class of rep.
  for (std::uint64_t c = 0; c < total; ++c) {
    tb.decode_code(c, letters);
    for (int k = 0; k < m; ++k) {
      // rep = rot^{-k}(w): position p receives letters[p + k].
      for (int p = 0; p < m; ++p) rot[p] = letters[(p + k) % m];
      const auto rc = tb.encode(rot);
      if (rep_index[rc] == -1) continue;
      if (rep_index[rc] == -2) break;
      const int sign = ((static_cast<long>(n) * k) % 2 == 1) ? -1 : 1;
      projection_[c] = {sign, static_cast<std::size_t>(rep_index[rc])};
      break;
    }
  }
}

std::string tensor_label(const Algebra& a, const std::vector<int>& letters) {
  std::string s = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += a.basis_names()[letters[i]];
  }
  return s + ")";
}

}  // namespace lhh
