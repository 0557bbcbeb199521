#include "cylat/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace cylat {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') out.push_back(c);
  }
  return out;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("LatticeVector: empty coordinate");
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("LatticeVector: bad integer '" + s + "'");
  }
}

}  // namespace

LatticeVector LatticeVector::h() {
  std::array<Int, kRank> c{};
  c[0] = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::e(int i) {
  if (i < 1 || i > 9) throw std::invalid_argument("LatticeVector::e: index must be in 1..9");
  std::array<Int, kRank> c{};
  c[static_cast<std::size_t>(i)] = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  std::array<Int, kRank> c;
  for (std::size_t i = 0; i < kRank; ++i) c[i] = c_[i] + o.c_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  std::array<Int, kRank> c;
  for (std::size_t i = 0; i < kRank; ++i) c[i] = c_[i] - o.c_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-() const {
  std::array<Int, kRank> c;
  for (std::size_t i = 0; i < kRank; ++i) c[i] = -c_[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Int& s, const LatticeVector& v) {
  std::array<Int, LatticeVector::kRank> c;
  for (std::size_t i = 0; i < LatticeVector::kRank; ++i) c[i] = s * v.c_[i];
  return LatticeVector(std::move(c));
}

std::string LatticeVector::to_compact() const {
  std::string out = c_[0].get_str();
  out.push_back(';');
  for (std::size_t i = 1; i < kRank; ++i) {
    if (i > 1) out.push_back(',');
    out += c_[i].get_str();
  }
  return out;
}

LatticeVector LatticeVector::parse_compact(std::string_view text) {
  const std::string s = strip(text);
  const std::size_t semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("LatticeVector: expected exactly one ';' in compact form");
  std::array<Int, kRank> c;
  c[0] = parse_int(s.substr(0, semi));
  std::string rest = s.substr(semi + 1);
  std::size_t idx = 1;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = rest.find(',', pos);
    const std::string tok =
        comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
    if (idx >= kRank) throw std::invalid_argument("LatticeVector: too many coordinates");
    c[idx++] = parse_int(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (idx != kRank) throw std::invalid_argument("LatticeVector: expected 9 e-coordinates");
  return LatticeVector(std::move(c));
}

Int pairing(const LatticeVector& x, const LatticeVector& y) {
  Int acc = x[0] * y[0];
  for (std::size_t i = 1; i < LatticeVector::kRank; ++i) acc -= x[i] * y[i];
  return acc;
}

LatticeVector canonical_class() {
  std::array<Int, LatticeVector::kRank> c;
  c[0] = -3;
  for (std::size_t i = 1; i < LatticeVector::kRank; ++i) c[i] = 1;
  return LatticeVector(std::move(c));
}

LatticeVector triple_sum(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("triple_sum: index must be in 1..3");
  std::array<Int, LatticeVector::kRank> c{};
  for (int j = 3 * i - 2; j <= 3 * i; ++j) c[static_cast<std::size_t>(j)] = 1;
  return LatticeVector(std::move(c));
}

Int degree(const LatticeVector& x) {
  return pairing(x, -canonical_class());
}

}  // namespace cylat
