#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cylat/lattice.hpp"

namespace cylat {

// Root alpha_{ijk} = h - e_i - e_j - e_k: square -2, orthogonal to the
// canonical class.
class Root {
 public:
  // Builds the root for three distinct indices in 1..9 (input order
  // does not matter; the stored triple is sorted).
  static Root make(int i, int j, int k);

  const LatticeVector& vector() const { return v_; }
  const std::array<int, 3>& indices() const { return idx_; }

 private:
  Root(std::array<int, 3> idx, LatticeVector v) : idx_(idx), v_(std::move(v)) {}

  std::array<int, 3> idx_;
  LatticeVector v_;
};

// Finite sequence of index triples, applied left-to-right as
// reflections.  Each triple must consist of three distinct indices
// in 1..9; validation happens at construction.
class CremonaWord {
 public:
  CremonaWord() = default;

  static CremonaWord from_triples(std::vector<std::array<int, 3>> triples);

  // Parses the text form "1,2,3;4,5,6".
  static CremonaWord parse(std::string_view text);

  const std::vector<std::array<int, 3>>& steps() const { return steps_; }
  std::string to_string() const;

  bool operator==(const CremonaWord&) const = default;

 private:
  explicit CremonaWord(std::vector<std::array<int, 3>> steps) : steps_(std::move(steps)) {}

  std::vector<std::array<int, 3>> steps_;
};

// x + (x . alpha) alpha.  An involution that preserves the pairing and
// fixes the canonical class.
LatticeVector reflect(const LatticeVector& x, const Root& r);

// Reflections in alpha_123, alpha_456, alpha_789, applied in that
// order; this is the order that sends h to 8h - f1 - 2f2 - 4f3.
LatticeVector psi_step(const LatticeVector& x);

// 2m psi steps applied to x; m = 0 is the identity.  Requires m >= 0.
LatticeVector phi_pullback_iterative(const Int& m, const LatticeVector& x);

// Closed form of the same map on h:
// (27m^2+1) h - (9m^2-3m) f1 - 9m^2 f2 - (9m^2+3m) f3.  Requires m >= 0.
LatticeVector phi_pullback_closed(const Int& m);

// Folds reflect over the word's triples, left-to-right.
LatticeVector apply_word(const CremonaWord& w, const LatticeVector& x);

}  // namespace cylat
