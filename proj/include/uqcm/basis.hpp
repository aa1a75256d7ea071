#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uqcm/errors.hpp"

namespace uqcm {

/// Lambda-type SQUID levels. Numeric value is the level's basis digit.
enum class Level : int { g = 0, i = 1, e = 2 };

inline constexpr int kLevels = 3;

inline char level_name(Level l) {
  switch (l) {
    case Level::g: return 'g';
    case Level::i: return 'i';
    case Level::e: return 'e';
  }
  return '?';
}

/// One factor of the tensor product: a SQUID (0-based) or the cavity mode.
class Subsystem {
 public:
  static constexpr Subsystem squid(int k) { return Subsystem(k); }
  static constexpr Subsystem cavity() { return Subsystem(-1); }

  constexpr bool is_cavity() const { return index_ < 0; }
  constexpr int squid_index() const { return index_; }

  friend constexpr bool operator==(Subsystem, Subsystem) = default;

 private:
  constexpr explicit Subsystem(int index) : index_(index) {}
  int index_;
};

struct BasisLabel {
  std::vector<Level> levels;
  int photons = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Product basis (3 levels)^num_squids x (fock_cutoff + 1) photon states.
///
/// Flat index ordering: SQUID 1 is the slowest digit, the cavity the fastest.
///   index = ((l_1 * 3 + l_2) * 3 + ... + l_N) * (fock_cutoff + 1) + n
struct BasisSpec {
  int num_squids = 3;
  int fock_cutoff = 2;

  BasisSpec() = default;
  BasisSpec(int squids, int cutoff) : num_squids(squids), fock_cutoff(cutoff) {
    if (squids < 1) throw DomainError("BasisSpec: num_squids must be >= 1");
    if (cutoff < 1) throw DomainError("BasisSpec: fock_cutoff must be >= 1");
  }

  int photon_dim() const { return fock_cutoff + 1; }

  std::size_t squid_dim() const {
    std::size_t d = 1;
    for (int k = 0; k < num_squids; ++k) d *= kLevels;
    return d;
  }

  std::size_t dimension() const { return squid_dim() * static_cast<std::size_t>(photon_dim()); }

  /// Distance in flat index between consecutive levels of SQUID k.
  std::size_t squid_stride(int k) const {
    check_squid(k);
    std::size_t s = static_cast<std::size_t>(photon_dim());
    for (int j = num_squids - 1; j > k; --j) s *= kLevels;
    return s;
  }

  void check_squid(int k) const {
    if (k < 0 || k >= num_squids)
      throw DomainError("SQUID index " + std::to_string(k) + " out of range [0, " +
                        std::to_string(num_squids) + ")");
  }

  std::size_t index(std::span<const Level> levels, int photons) const {
    if (static_cast<int>(levels.size()) != num_squids)
      throw DomainError("basis_index: expected " + std::to_string(num_squids) + " levels, got " +
                        std::to_string(levels.size()));
    if (photons < 0 || photons > fock_cutoff)
      throw DomainError("basis_index: photon number " + std::to_string(photons) +
                        " outside [0, " + std::to_string(fock_cutoff) + "]");
    std::size_t idx = 0;
    for (Level l : levels) {
      const int digit = static_cast<int>(l);
      if (digit < 0 || digit >= kLevels)
        throw DomainError("basis_index: level value " + std::to_string(digit) + " is not g, i or e");
      idx = idx * kLevels + static_cast<std::size_t>(digit);
    }
    return idx * static_cast<std::size_t>(photon_dim()) + static_cast<std::size_t>(photons);
  }

  std::size_t index(std::initializer_list<Level> levels, int photons) const {
    return index(std::span<const Level>(levels.begin(), levels.size()), photons);
  }

  BasisLabel decode(std::size_t idx) const {
    if (idx >= dimension())
      throw DomainError("decode: index " + std::to_string(idx) + " >= dimension " +
                        std::to_string(dimension()));
    BasisLabel out;
    out.photons = static_cast<int>(idx % static_cast<std::size_t>(photon_dim()));
    idx /= static_cast<std::size_t>(photon_dim());
    out.levels.resize(static_cast<std::size_t>(num_squids));
    for (int k = num_squids - 1; k >= 0; --k) {
      out.levels[static_cast<std::size_t>(k)] = static_cast<Level>(idx % kLevels);
      idx /= kLevels;
    }
    return out;
  }

  Level level_of(std::size_t idx, int squid) const {
    return static_cast<Level>((idx / squid_stride(squid)) % kLevels);
  }

  int photons_of(std::size_t idx) const {
    return static_cast<int>(idx % static_cast<std::size_t>(photon_dim()));
  }

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

}  // namespace uqcm
