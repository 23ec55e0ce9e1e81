#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psurg/su2.hpp"

namespace psurg {

// A group word. Letter +(i+1) is generator i, -(i+1) its inverse.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static int letter(int generator, int exponent_sign = 1) {
    return exponent_sign >= 0 ? generator + 1 : -(generator + 1);
  }
  static int generator_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(int letter) { letters_.push_back(letter); }
  void append_power(int generator, long exponent);
  Word& operator*=(const Word& other);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const;
  Word reduced() const;
  // Exponent sum under the map generator i -> images[i].
  long exponent_sum(std::span<const long> images) const;
  int max_generator() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

struct KnotPresentation {
  std::string name;
  int n_generators = 1;
  std::vector<Word> relators;
  Word meridian{1};
  // Seifert longitude, already corrected by the writhe so it is
  // null-homologous.
  Word longitude;
  long writhe = 0;
  // True for Wirtinger presentations: every generator is conjugate to the
  // meridian, so a representation has all generator angles equal.
  bool conjugate_generators = true;
  // Image of each generator in H_1 = Z, meridian -> 1.
  std::vector<long> abelianization{1};

  // Stable FNV-1a digest of generators, relators and peripheral words.
  std::string hash() const;
  // Relators, meridian and longitude satisfy the abelianization (relators and
  // longitude vanish, meridian maps to 1).
  bool abelianization_consistent() const;
};

// Braid word: whitespace- or comma-separated letters, each a nonzero signed
// integer ("1", "-2") or "s<i>" / "S<i>" (upper case for the inverse).
KnotPresentation parse_braid(std::string_view text);

// PD code "PD[(a,b,c,d),...]"; "X[a,b,c,d]" tuples and square brackets are also
// accepted. Tuples list the edges counterclockwise starting from the incoming
// under-strand.
KnotPresentation parse_pd(std::string_view text);

using PDCode = std::vector<std::array<int, 4>>;
KnotPresentation presentation_from_pd(const PDCode& pd, std::string name);
// PD code of the closure of a braid; letters as in parse_braid.
PDCode braid_to_pd(std::span<const int> letters);
// Number of link components of a braid closure (cycles of the permutation).
int braid_components(std::span<const int> letters);

// <x, y | x^p = y^q> with meridian x^u y^v (u q + v p = 1) and longitude
// x^p m^{-pq}. Opposite signs of p and q give the mirror.
KnotPresentation torus_knot_presentation(long p, long q);

KnotPresentation mirror(const KnotPresentation& k);

// Eliminates generators through relators in which they occur exactly once.
// The meridian generator is kept.
KnotPresentation simplify(const KnotPresentation& k);

SU2Element evaluate_word(const Word& word, std::span<const SU2Element> assignment);

KnotPresentation unknot_presentation();
// Resolves the names "unknot", "trefoil", "figure-eight", "T(p,q)" and the
// Rolfsen-style "3_1", "4_1", "5_1".
KnotPresentation named_knot(std::string_view name);

}  // namespace psurg
