#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldrep/moebius.hpp"

namespace foldrep {

/// Generator g is letter 2g, its inverse 2g + 1. Generators print as a, b, c, ...
/// and their inverses as A, B, C, ...
using Letter = std::uint8_t;

inline constexpr int kMaxGenerators = 26;

constexpr Letter make_letter(int generator, bool inverted = false) {
  return static_cast<Letter>(2 * generator + (inverted ? 1 : 0));
}
constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1u); }
constexpr int generator_of(Letter l) { return l >> 1; }
constexpr bool is_inverted(Letter l) { return (l & 1u) != 0; }

/// Element of a free group as a sequence of letters. Operations that build new
/// words return them freely reduced; a Word constructed from raw letters keeps
/// them as given.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(int g, bool inverted = false) { return Word{make_letter(g, inverted)}; }
  /// Parses "aBc"; "1" or "" is the empty word. Throws InvalidInput.
  static Word parse(std::string_view text);
  /// Builds from signed 1-based indices: +k is generator k-1, -k its inverse.
  static Word from_signed(std::span<const int> indices);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::vector<int> signed_indices() const;
  /// Highest generator index used, or -1 for the empty word.
  int max_generator() const;

  Word inverse() const;
  /// Free product, reduced at the junction.
  Word operator*(const Word& o) const;
  Word power(int n) const;

  bool is_freely_reduced() const;
  bool is_cyclically_reduced() const;
  Word freely_reduced() const;
  Word cyclically_reduced() const;
  /// Lexicographically least word among the rotations of the cyclic reduction
  /// and of its inverse. Two words have the same canonical form iff they are
  /// conjugate up to inversion.
  Word canonical_cyclic() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& l, const Word& r) {
    if (l.size() != r.size()) return l.size() <=> r.size();
    return l.letters_ <=> r.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::string word_to_string(std::span<const Letter> letters);

/// True if `letters` (cyclically reduced) is the least among its rotations and
/// the rotations of its inverse.
bool is_canonical_cyclic(std::span<const Letter> letters);

/// Product of generator images along the word; the empty word gives identity.
MoebiusTransform evaluate(std::span<const MoebiusTransform> images, std::span<const Letter> letters);
inline MoebiusTransform evaluate(std::span<const MoebiusTransform> images, const Word& w) {
  return evaluate(images, std::span<const Letter>(w.letters()));
}

}  // namespace foldrep
