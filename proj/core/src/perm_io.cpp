#include "ekr/perm_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace ekr {

std::string to_cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t v = 0; v < p.degree(); ++v) {
    if (seen[v] || p(static_cast<Point>(v)) == v) continue;
    out += '(';
    std::size_t w = v;
    bool first = true;
    while (!seen[w]) {
      seen[w] = true;
      if (!first) out += ' ';
      out += std::to_string(w + 1);
      first = false;
      w = p(static_cast<Point>(w));
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::size_t parse_number(std::string_view s, std::size_t& i) {
  std::size_t value = 0;
  const char* begin = s.data() + i;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) throw ParseError("expected a point number");
  i += static_cast<std::size_t>(ptr - begin);
  return value;
}

Perm parse_image_table(std::string_view text, std::size_t degree) {
  std::size_t i = 0;
  std::vector<Point> images;
  while (true) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    std::size_t v = parse_number(text, i);
    if (v >= degree) throw ParseError("image value out of range");
    images.push_back(static_cast<Point>(v));
  }
  if (images.size() != degree) throw ParseError("image table length does not match degree");
  return Perm::from_images(std::move(images));
}

}  // namespace

Perm parse_perm(std::string_view text, std::size_t degree) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i).starts_with("img:"))
    return parse_image_table(text.substr(i + 4), degree);

  std::vector<Point> images(degree);
  for (std::size_t v = 0; v < degree; ++v) images[v] = static_cast<Point>(v);
  std::vector<bool> used(degree, false);

  bool any_cycle = false;
  while (true) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws(text, i);
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {  // tolerate comma separators
        ++i;
        continue;
      }
      std::size_t v = parse_number(text, i);
      if (v == 0) throw ParseError("points are 1-based in cycle notation");
      if (v > degree) throw ParseError("point exceeds degree");
      cycle.push_back(v - 1);
    }
    any_cycle = true;
    for (std::size_t v : cycle) {
      if (used[v]) throw ParseError("point repeated across cycles");
      used[v] = true;
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      images[cycle[k]] = static_cast<Point>(cycle[k + 1]);
    if (cycle.size() > 1) images[cycle.back()] = static_cast<Point>(cycle.front());
  }
  if (!any_cycle) throw ParseError("empty permutation text");
  return Perm::from_images(std::move(images));
}

}  // namespace ekr
