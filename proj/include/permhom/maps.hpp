#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permhom/permutation.hpp"

namespace permhom {

// --- step maps ---------------------------------------------------------------

/// rot: p(1)p(2)...p(n) -> p(2)...p(n)p(1). Equals compose(p, long_cycle(n)).
Permutation rotate(const Permutation& p);

/// ps: swaps positions (1,2), (3,4), ...; the last entry stays put when n is odd.
Permutation pair_swap(const Permutation& p);

/// parrot: rotates the odd-position and even-position entries separately.
///   n even: p(3)p(4)...p(n)p(1)p(2)
///   n odd:  p(3)p(4)...p(n)p(2)p(1)
Permutation parity_rotate(const Permutation& p);

/// Inverse of parity_rotate.
Permutation parity_rotate_inverse(const Permutation& p);

// --- valley hopping ----------------------------------------------------------

/// Shape of an entry in the mountain range of p, with +inf sentinels before
/// position 1 and after position n.
enum class EntryShape { Peak, Valley, DoubleAscent, DoubleDescent };

EntryShape entry_shape(const Permutation& p, int value);

int peak_count(const Permutation& p);

/// Double ascents and double descents of p, ascending by value.
std::vector<int> togglable_set(const Permutation& p);

/// Modified Foata-Strehl toggle of the value x.
///
/// Write p = w1 w2 x w4 w5 where w2 and w4 are the maximal factors next to x
/// whose letters are all smaller than x. The toggle returns w1 w4 x w2 w5.
/// Peaks and valleys are left alone (then w2 and w4 are both empty or both
/// nonempty); for a double ascent w4 is empty, for a double descent w2 is.
/// Throws std::out_of_range unless 1 <= x <= n.
Permutation foata_strehl_toggle(const Permutation& p, int x);

/// Applies foata_strehl_toggle for each value in `values`. Toggles of distinct
/// values commute, so the order does not matter.
Permutation hop(const Permutation& p, std::span<const int> values);

// --- generators and orbits ---------------------------------------------------

enum class MapFamily { Rotation, RightMultiplyCycle, PairSwap, ParityRotation, ValleyHopping };

/// One of the five orbit-generating map families.
class OrbitGenerator {
public:
  static OrbitGenerator rotation() { return OrbitGenerator(MapFamily::Rotation); }
  /// Throws std::invalid_argument unless `cycle` is an n-cycle.
  static OrbitGenerator right_multiply(Permutation cycle);
  static OrbitGenerator pair_swap() { return OrbitGenerator(MapFamily::PairSwap); }
  static OrbitGenerator parity_rotation() { return OrbitGenerator(MapFamily::ParityRotation); }
  static OrbitGenerator valley_hopping() { return OrbitGenerator(MapFamily::ValleyHopping); }

  /// Parses the CLI names: rot, coxeter:<one-line word>, ps, parrot, vh.
  static OrbitGenerator parse(std::string_view spec);

  MapFamily family() const noexcept { return family_; }
  /// The n-cycle of a RightMultiplyCycle generator.
  const std::optional<Permutation>& cycle() const noexcept { return cycle_; }

  /// False only for valley hopping, whose orbits are toggle-subset closures.
  bool has_step() const noexcept { return family_ != MapFamily::ValleyHopping; }

  /// One application of the map. Throws std::logic_error for valley hopping and
  /// std::invalid_argument when a cycle generator meets a permutation of the
  /// wrong size.
  Permutation step(const Permutation& p) const;

  /// CLI name, e.g. "rot" or "coxeter:2341".
  std::string name() const;

  friend bool operator==(const OrbitGenerator&, const OrbitGenerator&) = default;

private:
  explicit OrbitGenerator(MapFamily family, std::optional<Permutation> cycle = std::nullopt)
      : family_(family), cycle_(std::move(cycle)) {}

  MapFamily family_;
  std::optional<Permutation> cycle_;
};

/// The orbit of a permutation under a generator.
///
/// Step-map orbits list members in application order starting at the seed.
/// Valley-hopping orbits list members in lexicographic order.
class Orbit {
public:
  Orbit(std::vector<Permutation> members, OrbitGenerator generator)
      : members_(std::move(members)), generator_(std::move(generator)) {}

  const std::vector<Permutation>& members() const noexcept { return members_; }
  const OrbitGenerator& generator() const noexcept { return generator_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Permutation& first() const { return members_.front(); }
  const Permutation& min_member() const;
  bool contains(const Permutation& p) const;

private:
  std::vector<Permutation> members_;
  OrbitGenerator generator_;
};

Orbit orbit_of(const OrbitGenerator& gen, const Permutation& p);

/// Distinct products of the n-1 simple transpositions taken once each, over
/// all (n-1)! orders, in lexicographic order. There are 2^(n-2) of them for
/// n >= 2; each is an n-cycle.
std::vector<Permutation> coxeter_elements(int n);

/// All (n-1)! n-cycles of S_n in lexicographic order.
std::vector<Permutation> n_cycles(int n);

}  // namespace permhom
