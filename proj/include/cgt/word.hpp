#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cgt {

/// A freely reduced element of the free group F_n.
///
/// Letters are signed generator indices: +i stands for the i-th generator
/// (1-based), -i for its inverse. The letter syntax maps a..z to 1..26 and
/// A..Z to -1..-26. Reduction happens on construction, so a Word never
/// contains an adjacent pair (i, -i).
class Word {
public:
  /// Identity word in rank n.
  explicit Word(unsigned rank);

  /// Builds from raw letters; validates indices and freely reduces.
  Word(unsigned rank, std::vector<int> letters);

  /// Parses the a/A letter syntax. Throws InputError on characters outside
  /// a..z/A..Z or indices above the rank.
  static Word parse(unsigned rank, std::string_view text);

  unsigned rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const; // concatenate, then reduce

  /// Letter-syntax rendering; the identity prints as "1".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  unsigned rank_;
  std::vector<int> letters_;
};

} // namespace cgt
