#include "cgt/word.hpp"

#include <cstdlib>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

void check_letter(unsigned rank, int letter) {
  int mag = std::abs(letter);
  if (mag < 1 || mag > static_cast<int>(rank))
    throw InputError("letter index " + std::to_string(letter) + " outside rank " +
                     std::to_string(rank));
}

} // namespace

Word::Word(unsigned rank) : rank_(rank) {}

Word::Word(unsigned rank, std::vector<int> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (int letter : letters) {
    check_letter(rank, letter);
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }
}

Word Word::parse(unsigned rank, std::string_view text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    int letter;
    if (c >= 'a' && c <= 'z')
      letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      letter = -(c - 'A' + 1);
    else
      throw InputError(std::string("invalid character '") + c + "' in word");
    check_letter(rank, letter);
    letters.push_back(letter);
  }
  return Word(rank, std::move(letters));
}

Word Word::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& l : letters) l = -l;
  Word w(rank_);
  w.letters_ = std::move(letters); // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> letters = letters_;
  for (int l : rhs.letters_) {
    if (!letters.empty() && letters.back() == -l)
      letters.pop_back();
    else
      letters.push_back(l);
  }
  Word w(rank_ >= rhs.rank_ ? rank_ : rhs.rank_);
  w.letters_ = std::move(letters);
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (int l : letters_) s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
  return s;
}

} // namespace cgt
