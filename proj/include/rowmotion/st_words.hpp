#pragma once

// Birational and generalized Stanley-Thomas words.
//
// ST_i(x)  = (y_is, ρ⁻¹(y)_is, ..., ρ^{-(r+s-1)}(y)_is)   (row words)
// ST̄_j(x) = (y_rj, ρ⁻¹(y)_rj, ..., ρ^{-(r+s-1)}(y)_rj)   (column words)
// with y = φ⁻¹(x). φ∘ρ∘φ⁻¹ rotates each of them one step to the right.

#include <string>
#include <vector>

#include "rowmotion/dynamics.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

enum class WordKind { classic, row, column };

struct STWord {
  WordKind kind = WordKind::classic;
  int index = 1;  // i for row words, j for column words
  std::vector<Rational> entries;

  /// "ST", "ST_i" or "STbar_j".
  std::string kind_name() const;
  friend bool operator==(const STWord&, const STWord&) = default;
};

struct WordAxis {
  WordKind kind = WordKind::row;  // row or column
  int index = 1;

  static WordAxis row(int i) { return {WordKind::row, i}; }
  static WordAxis column(int j) { return {WordKind::column, j}; }
};

/// (Π_j x_1j, ..., Π_j x_rj, Π_i 1/x_i1, ..., Π_i 1/x_is).
STWord birational_st(const Labeling& x);

/// Sum over cell sequences at ranks a, a+1, ..., b with strictly increasing
/// rows of the inverse label products. Requires 2 <= a <= b <= r+s; throws
/// DomainError when no such sequence exists.
Rational omega(const Labeling& x, int a, int b);

/// The word as the orbit of a border entry of φ⁻¹(x), read off the closed
/// form.
STWord generalized_st_orbit(const Labeling& x, WordAxis axis);

/// The word as interval chain sums followed by ω sums.
STWord generalized_st_formula(const Labeling& x, WordAxis axis);

/// Computes both routes and returns the word; throws std::logic_error if they
/// disagree.
STWord generalized_st(const Labeling& x, WordAxis axis);

/// For x' = φ∘ρ∘φ⁻¹(x), checks that the classic word and every ST_i, ST̄_j of
/// x' is the right rotation of the corresponding word of x.
CheckReport cyclic_shift_check(const Labeling& x);

}  // namespace rowmotion
