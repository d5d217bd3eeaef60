#include "fliplab/arc.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fliplab/errors.hpp"

namespace fliplab {

Arc Arc::chord(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("chord endpoints must be nonnegative");
  if (i == j) throw std::invalid_argument("chord endpoints must differ");
  if (i > j) std::swap(i, j);
  return Arc(Kind::Chord, i, j, 0);
}

Arc Arc::punctured_chord(int i, int j, int side) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("punctured chord endpoints must be nonnegative");
  if (i == j) throw std::invalid_argument("punctured chord endpoints must differ");
  if (side != 0 && side != 1)
    throw std::invalid_argument("punctured chord side must be 0 or 1");
  // swapping endpoints swaps the two complementary regions
  if (i > j) {
    std::swap(i, j);
    side = 1 - side;
  }
  return Arc(Kind::PChord, i, j, side);
}

Arc Arc::radial(int i) {
  if (i < 0) throw std::invalid_argument("radial vertex must be nonnegative");
  return Arc(Kind::Radial, i, 0, 0);
}

Arc Arc::loop(int i) {
  if (i < 0) throw std::invalid_argument("loop vertex must be nonnegative");
  return Arc(Kind::Loop, i, 0, 0);
}

Arc Arc::slope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is not an arc");
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;  // both lifts of the infinite slope are the same class
  return Arc(Kind::Slope, p, q, 0);
}

int Arc::i() const {
  if (kind_ != Kind::Chord && kind_ != Kind::PChord)
    throw std::logic_error("arc has no first endpoint");
  return static_cast<int>(a_);
}

int Arc::j() const {
  if (kind_ != Kind::Chord && kind_ != Kind::PChord)
    throw std::logic_error("arc has no second endpoint");
  return static_cast<int>(b_);
}

int Arc::side() const {
  if (kind_ != Kind::PChord) throw std::logic_error("arc has no puncture side");
  return static_cast<int>(c_);
}

int Arc::vertex() const {
  if (kind_ != Kind::Radial && kind_ != Kind::Loop)
    throw std::logic_error("arc has no base vertex");
  return static_cast<int>(a_);
}

long long Arc::p() const {
  if (kind_ != Kind::Slope) throw std::logic_error("arc is not a slope");
  return a_;
}

long long Arc::q() const {
  if (kind_ != Kind::Slope) throw std::logic_error("arc is not a slope");
  return b_;
}

std::string Arc::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Chord:
      out << "C(" << a_ << "," << b_ << ")";
      break;
    case Kind::PChord:
      out << "PC(" << a_ << "," << b_ << "," << c_ << ")";
      break;
    case Kind::Radial:
      out << "R(" << a_ << ")";
      break;
    case Kind::Loop:
      out << "L(" << a_ << ")";
      break;
    case Kind::Slope:
      out << a_ << "/" << b_;
      break;
  }
  return out.str();
}

namespace {

long long parse_ll(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad integer in arc text: '" + std::string(text) + "'");
  return value;
}

std::vector<long long> parse_args(std::string_view text, std::size_t prefix,
                                  std::size_t expected) {
  if (text.size() < prefix + 2 || text[prefix] != '(' || text.back() != ')')
    throw ParseError("malformed arc text: '" + std::string(text) + "'");
  std::string_view body = text.substr(prefix + 1, text.size() - prefix - 2);
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto next = body.find(',', start);
    std::string_view item =
        next == std::string_view::npos ? body.substr(start) : body.substr(start, next - start);
    out.push_back(parse_ll(item));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  if (out.size() != expected)
    throw ParseError("wrong number of fields in arc text: '" + std::string(text) + "'");
  return out;
}

}  // namespace

Arc Arc::parse(std::string_view text) {
  try {
    if (text.rfind("PC", 0) == 0) {
      auto v = parse_args(text, 2, 3);
      return punctured_chord(static_cast<int>(v[0]), static_cast<int>(v[1]),
                             static_cast<int>(v[2]));
    }
    if (text.rfind("C", 0) == 0) {
      auto v = parse_args(text, 1, 2);
      return chord(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    if (text.rfind("R", 0) == 0) {
      auto v = parse_args(text, 1, 1);
      return radial(static_cast<int>(v[0]));
    }
    if (text.rfind("L", 0) == 0) {
      auto v = parse_args(text, 1, 1);
      return loop(static_cast<int>(v[0]));
    }
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      return slope(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid arc: ") + e.what());
  }
  throw ParseError("unrecognized arc text: '" + std::string(text) + "'");
}

}  // namespace fliplab
