#include "fliplab/surface.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fliplab/errors.hpp"

namespace fliplab {

SurfaceSig::SurfaceSig(int genus, int interior_marks, std::vector<int> boundary_marks)
    : genus_(genus), interior_marks_(interior_marks), boundary_marks_(std::move(boundary_marks)) {
  if (genus_ < 0) throw std::invalid_argument("genus must be nonnegative");
  if (interior_marks_ < 0)
    throw std::invalid_argument("interior mark count must be nonnegative");
  for (int p : boundary_marks_)
    if (p < 1)
      throw std::invalid_argument("every boundary component needs a marked point");
  std::sort(boundary_marks_.begin(), boundary_marks_.end());
  if (total_marks() == 0)
    throw std::invalid_argument("surface must carry at least one marked point");
}

int SurfaceSig::total_marks() const {
  return interior_marks_ +
         std::accumulate(boundary_marks_.begin(), boundary_marks_.end(), 0);
}

std::string SurfaceSig::to_string() const {
  std::ostringstream out;
  out << "S_{" << genus_ << "," << interior_marks_;
  if (!boundary_marks_.empty()) {
    out << ",(";
    for (std::size_t k = 0; k < boundary_marks_.size(); ++k) {
      if (k > 0) out << ",";
      out << boundary_marks_[k];
    }
    out << ")";
  }
  out << "}";
  return out.str();
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad integer in surface signature: '" + std::string(text) + "'");
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

SurfaceSig SurfaceSig::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (s.size() < 7 || s.substr(0, 3) != "S_{" || s.back() != '}')
    throw ParseError("surface signature must look like S_{g,n} or S_{g,n,(p1,...,pb)}");
  s = s.substr(3, s.size() - 4);

  auto comma1 = s.find(',');
  if (comma1 == std::string_view::npos)
    throw ParseError("surface signature needs genus and interior mark count");
  int genus = parse_int(strip(s.substr(0, comma1)));
  std::string_view rest = s.substr(comma1 + 1);

  std::vector<int> marks;
  auto comma2 = rest.find(',');
  int interior;
  if (comma2 == std::string_view::npos) {
    interior = parse_int(strip(rest));
  } else {
    interior = parse_int(strip(rest.substr(0, comma2)));
    std::string_view list = strip(rest.substr(comma2 + 1));
    if (list.size() < 3 || list.front() != '(' || list.back() != ')')
      throw ParseError("boundary marks must be a parenthesized list");
    list = list.substr(1, list.size() - 2);
    std::size_t start = 0;
    while (start <= list.size()) {
      auto next = list.find(',', start);
      std::string_view item = next == std::string_view::npos
                                  ? list.substr(start)
                                  : list.substr(start, next - start);
      marks.push_back(parse_int(strip(item)));
      if (next == std::string_view::npos) break;
      start = next + 1;
    }
  }

  try {
    return SurfaceSig(genus, interior, std::move(marks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid surface signature: ") + e.what());
  }
}

int complexity(const SurfaceSig& sig) {
  int boundary_sum =
      std::accumulate(sig.boundary_marks().begin(), sig.boundary_marks().end(), 0);
  return 6 * sig.genus() + 3 * sig.boundary_components() + 3 * sig.interior_marks() +
         boundary_sum - 6;
}

bool same_type(const SurfaceSig& a, const SurfaceSig& b) { return a == b; }

}  // namespace fliplab
