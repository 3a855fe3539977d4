#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

/// A permutation of {0..d-1}, stored as the image array.
/// Composition is right-to-left: (p * q)(x) = p(q(x)).
class Perm {
public:
  explicit Perm(unsigned degree); // identity
  explicit Perm(std::vector<unsigned> images);
  static Perm from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const; // g * (*this) * g^-1
  Perm power(std::uint64_t e) const;

  bool is_identity() const;
  std::uint64_t order() const;

  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
  std::vector<unsigned> images_;
};

} // namespace cgt
