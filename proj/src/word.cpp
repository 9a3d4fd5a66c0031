#include "foldrep/word.hpp"

#include <algorithm>
#include <cctype>

#include "foldrep/error.hpp"

namespace foldrep {

namespace {

// Compares rotation `start` of `w` (or of its inverse when `inverted`) against
// the word itself. Returns <0, 0, >0.
int compare_rotation(std::span<const Letter> w, std::size_t start, bool inverted) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Letter l;
    if (inverted) {
      // inverse read from position start backwards
      l = inverse_letter(w[(start + n - i) % n]);
    } else {
      l = w[(start + i) % n];
    }
    if (l != w[i]) return l < w[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  if (text == "1") return Word{};
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch >= 'a' && ch <= 'z') {
      out.push_back(make_letter(ch - 'a'));
    } else if (ch >= 'A' && ch <= 'Z') {
      out.push_back(make_letter(ch - 'A', true));
    } else {
      throw Error(ErrorKind::InvalidInput, "bad word character '" + std::string(1, ch) + "'");
    }
  }
  return Word(std::move(out));
}

Word Word::from_signed(std::span<const int> indices) {
  std::vector<Letter> out;
  for (int k : indices) {
    if (k == 0 || std::abs(k) > kMaxGenerators) throw Error(ErrorKind::InvalidInput, "bad signed generator index");
    out.push_back(make_letter(std::abs(k) - 1, k < 0));
  }
  return Word(std::move(out));
}

std::vector<int> Word::signed_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(is_inverted(l) ? -(generator_of(l) + 1) : generator_of(l) + 1);
  return out;
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, generator_of(l));
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = inverse_letter(l);
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = freely_reduced().letters_;
  for (Letter l : o.freely_reduced().letters_) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::power(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == inverse_letter(letters_[i - 1])) return false;
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  return is_freely_reduced() && (letters_.size() < 2 || letters_.front() != inverse_letter(letters_.back()));
}

Word Word::freely_reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> w = freely_reduced().letters_;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word Word::canonical_cyclic() const {
  const Word r = cyclically_reduced();
  const std::size_t n = r.size();
  if (n == 0) return r;
  Word best = r;
  const Word inv = r.inverse();
  for (const Word* w : {&r, &inv}) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = (*w)[(s + i) % n];
      if (rot < best.letters_) best = Word(std::move(rot));
    }
  }
  return best;
}

std::string word_to_string(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) {
    const char base = is_inverted(l) ? 'A' : 'a';
    s.push_back(static_cast<char>(base + generator_of(l)));
  }
  return s;
}

std::string Word::to_string() const { return word_to_string(letters_); }

bool is_canonical_cyclic(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  const Letter first = w[0];
  for (std::size_t s = 0; s < n; ++s) {
    if (s > 0 && w[s] == first && compare_rotation(w, s, false) < 0) return false;
    if (inverse_letter(w[s]) == first && compare_rotation(w, s, true) < 0) return false;
  }
  return true;
}

MoebiusTransform evaluate(std::span<const MoebiusTransform> images, std::span<const Letter> letters) {
  Mat2 acc{};
  for (Letter l : letters) {
    const auto g = static_cast<std::size_t>(generator_of(l));
    if (g >= images.size()) throw Error(ErrorKind::BadIndex, "generator index out of range");
    const Mat2& m = images[g].matrix();
    acc = acc * (is_inverted(l) ? Mat2{m.d, -m.b, -m.c, m.a} : m);
  }
  return MoebiusTransform::unimodular(acc);
}

}  // namespace foldrep
