#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

/// Default cap for operations that enumerate group elements.
inline constexpr std::uint64_t kElementCap = 20000;

/// A finite permutation group given by generators, carrying a stabilizer
/// chain (base points, explicit transversals, strong generators) built
/// deterministically on construction. Once built, a PermGroup is immutable
/// and safe to query from any thread.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> generators);

  static PermGroup trivial(unsigned degree);
  static PermGroup cyclic(unsigned order);        // one n-cycle
  static PermGroup symmetric(unsigned n);
  static PermGroup alternating(unsigned n);
  static PermGroup dihedral(unsigned n);          // order 2n, on n points

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<unsigned>& base_points() const { return base_; }

  std::uint64_t order() const { return order_; }
  bool is_member(const Perm& g) const;
  bool is_trivial() const { return order_ == 1; }
  bool is_abelian() const;

  /// Deterministic chain-order element enumeration.
  /// Throws ResourceError when the order exceeds the cap.
  std::vector<Perm> elements(std::uint64_t cap = kElementCap) const;
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t cap = kElementCap) const;

  /// Uniformly random element (one transversal pick per chain level).
  Perm random_element(std::mt19937_64& rng) const;

  std::vector<std::uint64_t> element_orders(std::uint64_t cap = kElementCap) const;
  std::uint64_t exponent(std::uint64_t cap = kElementCap) const;

private:
  struct Level {
    unsigned base_point;
    std::vector<Perm> gens;          // strong generators active at this level
    std::vector<unsigned> orbit;     // discovery order
    std::vector<int> position;       // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // transversal[i] maps base_point to orbit[i]
  };

  void insert_strong_generator(Perm g, std::size_t level);
  void recompute_orbit(std::size_t level);
  // sifts g through levels >= start; returns residue and the level reached
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t start) const;

  unsigned degree_;
  std::vector<Perm> generators_;
  std::vector<unsigned> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

bool is_subgroup(const PermGroup& sub, const PermGroup& super);
bool groups_equal(const PermGroup& a, const PermGroup& b); // mutual membership
bool is_normal(const PermGroup& group, const PermGroup& candidate);

/// Smallest normal subgroup of `group` containing `seed`.
/// Throws InputError when a seed element lies outside the group.
PermGroup normal_closure(const PermGroup& group, const std::vector<Perm>& seed);

PermGroup derived_subgroup(const PermGroup& group);

/// Faithful action of group/normal on the right cosets of `normal`.
/// Throws InputError when `normal` is not normal in `group`.
PermGroup quotient(const PermGroup& group, const PermGroup& normal,
                   std::uint64_t cap = kElementCap);

/// {g in group : g H g^-1 = H}; enumerates elements of `group`.
PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup,
                     std::uint64_t cap = kElementCap);

/// A Sylow p-subgroup, grown from a cyclic p-subgroup through normalizers.
PermGroup sylow(const PermGroup& group, unsigned p, std::uint64_t cap = kElementCap);

bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_factors(std::uint64_t n); // distinct, ascending

} // namespace cgt
