#include "cgt/perm.hpp"

#include <numeric>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (unsigned img : images_) {
    if (img >= images_.size() || seen[img])
      throw InputError("image array is not a bijection");
    seen[img] = 1;
  }
}

Perm Perm::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (unsigned pt : cycle) {
      if (pt >= degree) throw InputError("cycle point exceeds degree");
      if (used[pt]) throw InputError("point repeated across cycles");
      used[pt] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InputError("degree mismatch in composition");
  std::vector<unsigned> images(degree());
  for (unsigned x = 0; x < degree(); ++x) images[x] = images_[rhs.images_[x]];
  Perm p(0u);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::inverse() const {
  std::vector<unsigned> images(degree());
  for (unsigned x = 0; x < degree(); ++x) images[images_[x]] = x;
  Perm p(0u);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

Perm Perm::power(std::uint64_t e) const {
  Perm result(degree());
  Perm square = *this;
  while (e) {
    if (e & 1) result = result * square;
    square = square * square;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(degree(), 0);
  std::uint64_t result = 1;
  for (unsigned x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    unsigned y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = images_[y];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::cycle_string() const {
  std::vector<char> seen(degree(), 0);
  std::ostringstream os;
  bool any = false;
  for (unsigned x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    os << '(' << x;
    seen[x] = 1;
    for (unsigned y = images_[x]; y != x; y = images_[y]) {
      seen[y] = 1;
      os << ' ' << y;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

} // namespace cgt
