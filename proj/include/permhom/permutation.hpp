#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permhom {

/// Raised when a run would exceed a configured size limit (n!, orbit counts).
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest n accepted by full-group enumeration unless the caller says otherwise.
inline constexpr int kDefaultEnumerationGuard = 12;

/// A permutation of [n] in one-line notation.
///
/// Positions and values are 1-indexed in the public interface: `p(i)` is the
/// entry at position i. The word is validated on construction, so every
/// instance is a bijection of [n] with n >= 1.
class Permutation {
public:
  /// Throws std::invalid_argument unless `word` is a bijection of [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }

  /// Entry at 1-indexed position i. No bounds check.
  int operator()(int i) const noexcept { return word_[static_cast<std::size_t>(i - 1)]; }

  /// Entry at 1-indexed position i; throws std::out_of_range.
  int at(int i) const;

  std::span<const int> word() const noexcept { return word_; }

  /// 1-indexed position holding `value`.
  int position_of(int value) const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the one-line word; only meaningful for equal sizes.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) noexcept : word_(std::move(word)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation unrank(int, std::uint64_t);
  friend Permutation from_trusted_word(std::vector<int>);

  std::vector<int> word_;
};

/// Wraps a word already known to be a bijection of [n]. Used by map code that
/// only rearranges entries of an existing permutation.
Permutation from_trusted_word(std::vector<int> word);

/// (a*b)(i) = a(b(i)). Right multiplication of p by c is compose(p, c).
/// Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// tau_i: swaps the entries at positions i and i+1, 1 <= i <= n-1.
Permutation simple_transposition(const Permutation& p, int i);

/// The long cycle (1 2 ... n), one-line word 23...n1.
Permutation long_cycle(int n);

/// Applies tau_{order[0]}, then tau_{order[1]}, ... to the identity of S_n,
/// n = order.size() + 1. The result is always an n-cycle.
/// Throws std::invalid_argument unless `order` is a bijection of [n-1].
Permutation cycle_from_toggle_order(std::span<const int> order);

/// Word reversal p(n)...p(1).
Permutation reverse(const Permutation& p);

/// Disjoint cycles, each starting at its smallest element, ordered by that
/// element. Fixed points appear as 1-cycles.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

bool is_n_cycle(const Permutation& p);

int fixed_point_count(const Permutation& p);

/// p^k for k >= 0 under compose.
Permutation power(const Permutation& p, int k);

// --- ranking ---------------------------------------------------------------

std::uint64_t factorial(int n);

/// Lexicographic rank in S_n, 0-based. Requires n <= 20.
std::uint64_t rank(const Permutation& p);

/// Inverse of rank. Throws std::out_of_range if r >= n!.
Permutation unrank(int n, std::uint64_t r);

// --- enumeration -----------------------------------------------------------

/// Visits every element of S_n once in lexicographic order. Stops early when
/// `visit` returns false. Throws GuardExceeded when n > max_n.
void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit,
                          int max_n = kDefaultEnumerationGuard);

/// All of S_n in lexicographic order.
std::vector<Permutation> enumerate_symmetric_group(int n, int max_n = kDefaultEnumerationGuard);

// --- text ------------------------------------------------------------------

/// Compact digits for n <= 9 ("3176524"), comma separated otherwise.
std::string to_string(const Permutation& p);

/// "(1 2 3)(4)" style; fixed points included.
std::string to_cycle_string(const Permutation& p);

/// Parses one-line notation. A string containing ',' is read as
/// comma-separated values; otherwise each character is one digit 1-9.
/// Throws std::invalid_argument on malformed input.
Permutation parse_permutation(std::string_view text);

}  // namespace permhom

template <>
struct std::hash<permhom::Permutation> {
  std::size_t operator()(const permhom::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.word()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
