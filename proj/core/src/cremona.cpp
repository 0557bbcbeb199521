#include "cylat/cremona.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylat {

namespace {

std::array<int, 3> checked_triple(int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] < 1 || t[2] > 9 || t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("Root: indices must be three distinct values in 1..9");
  return t;
}

}  // namespace

Root Root::make(int i, int j, int k) {
  const std::array<int, 3> t = checked_triple(i, j, k);
  LatticeVector v = LatticeVector::h() - LatticeVector::e(t[0]) - LatticeVector::e(t[1]) -
                    LatticeVector::e(t[2]);
  return Root(t, std::move(v));
}

CremonaWord CremonaWord::from_triples(std::vector<std::array<int, 3>> triples) {
  for (auto& t : triples) t = checked_triple(t[0], t[1], t[2]);
  return CremonaWord(std::move(triples));
}

CremonaWord CremonaWord::parse(std::string_view text) {
  std::vector<std::array<int, 3>> triples;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t semi = s.find(';', pos);
    const std::string part =
        semi == std::string::npos ? s.substr(pos) : s.substr(pos, semi - pos);
    std::array<int, 3> t{};
    std::size_t p = 0;
    for (int slot = 0; slot < 3; ++slot) {
      const std::size_t comma = part.find(',', p);
      const std::string tok =
          comma == std::string::npos ? part.substr(p) : part.substr(p, comma - p);
      if ((slot < 2) != (comma != std::string::npos))
        throw std::invalid_argument("CremonaWord: each step needs exactly three indices");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("CremonaWord: bad index '" + tok + "'");
      }
      if (used != tok.size())
        throw std::invalid_argument("CremonaWord: bad index '" + tok + "'");
      t[static_cast<std::size_t>(slot)] = value;
      p = comma == std::string::npos ? part.size() : comma + 1;
    }
    triples.push_back(t);
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return from_triples(std::move(triples));
}

std::string CremonaWord::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    if (s > 0) out.push_back(';');
    out += std::to_string(steps_[s][0]) + "," + std::to_string(steps_[s][1]) + "," +
           std::to_string(steps_[s][2]);
  }
  return out;
}

LatticeVector reflect(const LatticeVector& x, const Root& r) {
  return x + pairing(x, r.vector()) * r.vector();
}

LatticeVector psi_step(const LatticeVector& x) {
  static const Root r1 = Root::make(1, 2, 3);
  static const Root r2 = Root::make(4, 5, 6);
  static const Root r3 = Root::make(7, 8, 9);
  return reflect(reflect(reflect(x, r1), r2), r3);
}

LatticeVector phi_pullback_iterative(const Int& m, const LatticeVector& x) {
  if (m < 0) throw std::invalid_argument("phi_pullback_iterative: m must be >= 0");
  LatticeVector out = x;
  const Int steps = 2 * m;
  for (Int i = 0; i < steps; ++i) out = psi_step(out);
  return out;
}

LatticeVector phi_pullback_closed(const Int& m) {
  if (m < 0) throw std::invalid_argument("phi_pullback_closed: m must be >= 0");
  const Int mm = m * m;
  std::array<Int, LatticeVector::kRank> c;
  c[0] = 27 * mm + 1;
  for (std::size_t i = 1; i <= 3; ++i) c[i] = -(9 * mm - 3 * m);
  for (std::size_t i = 4; i <= 6; ++i) c[i] = -9 * mm;
  for (std::size_t i = 7; i <= 9; ++i) c[i] = -(9 * mm + 3 * m);
  return LatticeVector(std::move(c));
}

LatticeVector apply_word(const CremonaWord& w, const LatticeVector& x) {
  LatticeVector out = x;
  for (const auto& t : w.steps()) out = reflect(out, Root::make(t[0], t[1], t[2]));
  return out;
}

}  // namespace cylat
