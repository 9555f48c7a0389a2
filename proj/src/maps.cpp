#include "permhom/maps.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace permhom {

namespace {

std::vector<int> copy_word(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

// Entry at a 0-based index; out of range reads as +inf.
int entry_or_inf(const std::vector<int>& w, std::ptrdiff_t index) {
  if (index < 0 || index >= static_cast<std::ptrdiff_t>(w.size())) return std::numeric_limits<int>::max();
  return w[static_cast<std::size_t>(index)];
}

}  // namespace

Permutation rotate(const Permutation& p) {
  auto w = copy_word(p);
  std::rotate(w.begin(), w.begin() + 1, w.end());
  return from_trusted_word(std::move(w));
}

Permutation pair_swap(const Permutation& p) {
  auto w = copy_word(p);
  for (std::size_t i = 0; i + 1 < w.size(); i += 2) std::swap(w[i], w[i + 1]);
  return from_trusted_word(std::move(w));
}

Permutation parity_rotate(const Permutation& p) {
  const int n = p.size();
  if (n < 3) return p;
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 3; i <= n; ++i) w.push_back(p(i));
  if (n % 2 == 0) {
    w.push_back(p(1));
    w.push_back(p(2));
  } else {
    w.push_back(p(2));
    w.push_back(p(1));
  }
  return from_trusted_word(std::move(w));
}

Permutation parity_rotate_inverse(const Permutation& p) {
  const int n = p.size();
  if (n < 3) return p;
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  if (n % 2 == 0) {
    w.push_back(p(n - 1));
    w.push_back(p(n));
  } else {
    w.push_back(p(n));
    w.push_back(p(n - 1));
  }
  for (int i = 1; i <= n - 2; ++i) w.push_back(p(i));
  return from_trusted_word(std::move(w));
}

EntryShape entry_shape(const Permutation& p, int value) {
  const auto w = copy_word(p);
  const auto pos = static_cast<std::ptrdiff_t>(p.position_of(value) - 1);
  const bool left_higher = entry_or_inf(w, pos - 1) > value;
  const bool right_higher = entry_or_inf(w, pos + 1) > value;
  if (left_higher && right_higher) return EntryShape::Valley;
  if (!left_higher && !right_higher) return EntryShape::Peak;
  return left_higher ? EntryShape::DoubleDescent : EntryShape::DoubleAscent;
}

int peak_count(const Permutation& p) {
  int peaks = 0;
  for (int i = 2; i < p.size(); ++i) peaks += p(i - 1) < p(i) && p(i) > p(i + 1);
  return peaks;
}

std::vector<int> togglable_set(const Permutation& p) {
  std::vector<int> out;
  for (int x = 1; x <= p.size(); ++x) {
    const auto shape = entry_shape(p, x);
    if (shape == EntryShape::DoubleAscent || shape == EntryShape::DoubleDescent) out.push_back(x);
  }
  return out;
}

Permutation foata_strehl_toggle(const Permutation& p, int x) {
  if (x < 1 || x > p.size())
    throw std::out_of_range("toggle value " + std::to_string(x) + " outside [1, " + std::to_string(p.size()) + "]");
  auto w = copy_word(p);
  const auto pos = static_cast<std::size_t>(p.position_of(x) - 1);
  std::size_t lo = pos;  // w2 = w[lo, pos)
  while (lo > 0 && w[lo - 1] < x) --lo;
  std::size_t hi = pos + 1;  // w4 = w[pos+1, hi)
  while (hi < w.size() && w[hi] < x) ++hi;
  const bool has_left = lo < pos;
  const bool has_right = hi > pos + 1;
  // Both factors empty: valley. Both nonempty: peak.
  if (has_left == has_right) return p;
  if (has_left)
    std::rotate(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(pos),
                w.begin() + static_cast<std::ptrdiff_t>(pos + 1));
  else
    std::rotate(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                w.begin() + static_cast<std::ptrdiff_t>(hi));
  return from_trusted_word(std::move(w));
}

Permutation hop(const Permutation& p, std::span<const int> values) {
  Permutation q = p;
  for (int x : values) q = foata_strehl_toggle(q, x);
  return q;
}

OrbitGenerator OrbitGenerator::right_multiply(Permutation cycle) {
  if (!is_n_cycle(cycle))
    throw std::invalid_argument("right multiplication generator needs an n-cycle, got " + to_string(cycle));
  return OrbitGenerator(MapFamily::RightMultiplyCycle, std::move(cycle));
}

OrbitGenerator OrbitGenerator::parse(std::string_view spec) {
  if (spec == "rot") return rotation();
  if (spec == "ps") return pair_swap();
  if (spec == "parrot") return parity_rotation();
  if (spec == "vh") return valley_hopping();
  constexpr std::string_view prefix = "coxeter:";
  if (spec.starts_with(prefix)) return right_multiply(parse_permutation(spec.substr(prefix.size())));
  throw std::invalid_argument("unknown generator '" + std::string(spec) +
                              "' (expected rot, coxeter:<word>, ps, parrot, vh)");
}

Permutation OrbitGenerator::step(const Permutation& p) const {
  switch (family_) {
    case MapFamily::Rotation: return rotate(p);
    case MapFamily::RightMultiplyCycle: return compose(p, *cycle_);
    case MapFamily::PairSwap: return permhom::pair_swap(p);
    case MapFamily::ParityRotation: return parity_rotate(p);
    case MapFamily::ValleyHopping: break;
  }
  throw std::logic_error("valley hopping has no single step map");
}

std::string OrbitGenerator::name() const {
  switch (family_) {
    case MapFamily::Rotation: return "rot";
    case MapFamily::RightMultiplyCycle: return "coxeter:" + to_string(*cycle_);
    case MapFamily::PairSwap: return "ps";
    case MapFamily::ParityRotation: return "parrot";
    case MapFamily::ValleyHopping: return "vh";
  }
  return "?";
}

const Permutation& Orbit::min_member() const { return *std::min_element(members_.begin(), members_.end()); }

bool Orbit::contains(const Permutation& p) const {
  return std::find(members_.begin(), members_.end(), p) != members_.end();
}

Orbit orbit_of(const OrbitGenerator& gen, const Permutation& p) {
  std::vector<Permutation> members;
  if (gen.has_step()) {
    members.push_back(p);
    for (Permutation q = gen.step(p); q != p; q = gen.step(q)) members.push_back(q);
    return Orbit(std::move(members), gen);
  }
  const auto togglable = togglable_set(p);
  const std::size_t subsets = std::size_t{1} << togglable.size();
  members.reserve(subsets);
  std::vector<int> chosen;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t b = 0; b < togglable.size(); ++b)
      if (mask >> b & 1u) chosen.push_back(togglable[b]);
    members.push_back(hop(p, chosen));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Orbit(std::move(members), gen);
}

std::vector<Permutation> coxeter_elements(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<int> order(static_cast<std::size_t>(n - 1));
  std::iota(order.begin(), order.end(), 1);
  std::set<Permutation> cycles;
  do {
    cycles.insert(cycle_from_toggle_order(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return {cycles.begin(), cycles.end()};
}

std::vector<Permutation> n_cycles(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  // cycle (1 a_2 ... a_n) for each arrangement a of 2..n
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<Permutation> out;
  out.reserve(factorial(n - 1));
  do {
    std::vector<int> w(static_cast<std::size_t>(n));
    int from = 1;
    for (int to : rest) {
      w[static_cast<std::size_t>(from - 1)] = to;
      from = to;
    }
    w[static_cast<std::size_t>(from - 1)] = 1;
    out.push_back(from_trusted_word(std::move(w)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permhom
