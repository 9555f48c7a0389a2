#include "permhom/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace permhom {

namespace {

bool is_bijection_of_range(std::span<const int> word) {
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string word_to_string(std::span<const int> word) {
  std::string out;
  out.reserve(word.size() * 2);
  const bool compact = word.size() <= 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out.push_back(',');
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("permutation must have n >= 1");
  if (!is_bijection_of_range(word_))
    throw std::invalid_argument("not a permutation of [n]: " + word_to_string(word_));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), Unchecked{});
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("position " + std::to_string(i) + " outside [1, " + std::to_string(size()) + "]");
  return (*this)(i);
}

int Permutation::position_of(int value) const {
  auto it = std::find(word_.begin(), word_.end(), value);
  if (it == word_.end()) throw std::out_of_range("value " + std::to_string(value) + " not in permutation");
  return static_cast<int>(it - word_.begin()) + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation from_trusted_word(std::vector<int> word) {
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cannot compose permutations of sizes " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  std::vector<int> w(b.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a(b.word_[i]);
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(p.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[static_cast<std::size_t>(p.word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation simple_transposition(const Permutation& p, int i) {
  if (i < 1 || i >= p.size())
    throw std::out_of_range("simple transposition index " + std::to_string(i) + " outside [1, " +
                            std::to_string(p.size() - 1) + "]");
  std::vector<int> w(p.word().begin(), p.word().end());
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return from_trusted_word(std::move(w));
}

Permutation long_cycle(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return from_trusted_word(std::move(w));
}

Permutation cycle_from_toggle_order(std::span<const int> order) {
  if (!is_bijection_of_range(order)) throw std::invalid_argument("toggle order must be a permutation of [n-1]");
  Permutation result = Permutation::identity(static_cast<int>(order.size()) + 1);
  for (int i : order) result = simple_transposition(result, i);
  return result;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return from_trusted_word(std::move(w));
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int>& cycle = cycles.emplace_back();
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
  }
  return cycles;
}

bool is_n_cycle(const Permutation& p) {
  int length = 0;
  int x = 1;
  do {
    x = p(x);
    ++length;
  } while (x != 1);
  return length == p.size();
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) count += p(i) == i;
  return count;
}

Permutation power(const Permutation& p, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Permutation result = Permutation::identity(p.size());
  for (int j = 0; j < k; ++j) result = compose(result, p);
  return result;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > 20) throw std::out_of_range("rank requires n <= 20");
  // Lehmer code: count smaller entries to the right of each position.
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j <= n; ++j) smaller += p(j) < p(i);
    r += smaller * factorial(n - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  if (r >= factorial(n)) throw std::out_of_range("rank out of range for S_" + std::to_string(n));
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto digit = static_cast<std::ptrdiff_t>(r / f);
    r %= f;
    w.push_back(pool[static_cast<std::size_t>(digit)]);
    pool.erase(pool.begin() + digit);
  }
  return Permutation(std::move(w), Permutation::Unchecked{});
}

void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit, int max_n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  if (n > max_n)
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the enumeration guard of " + std::to_string(max_n) +
                        "; S_n has n! elements, raise the guard only if you have the memory and time");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    if (!visit(from_trusted_word(w))) return;
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate_symmetric_group(int n, int max_n) {
  std::vector<Permutation> all;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        all.push_back(p);
        return true;
      },
      max_n);
  return all;
}

std::string to_string(const Permutation& p) { return word_to_string(p.word()); }

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  for (const auto& cycle : cycle_decomposition(p)) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto stop = std::min(text.find(',', start), text.size());
      auto field = text.substr(start, stop - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("malformed permutation entry '" + std::string(field) + "'");
      w.push_back(v);
      start = stop + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

}  // namespace permhom
