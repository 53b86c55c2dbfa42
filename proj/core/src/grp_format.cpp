#include "ekr/grp_format.hpp"

#include <fstream>
#include <sstream>

#include "ekr/perm_io.hpp"

namespace ekr {

namespace {

std::string strip(const std::string& line) {
  std::size_t a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = line.find_last_not_of(" \t\r\n");
  return line.substr(a, b - a + 1);
}

}  // namespace

PermGroup read_grp(std::istream& in, std::uint64_t cap) {
  std::string line;
  int lineno = 0;
  std::size_t degree = 0;
  bool have_degree = false;
  std::string name;
  std::vector<Perm> gens;

  while (std::getline(in, line)) {
    ++lineno;
    std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;
    if (!have_degree) {
      std::istringstream fields(text);
      std::string keyword;
      long long value = -1;
      fields >> keyword >> value;
      if (keyword != "degree" || value <= 0 || value > UINT16_MAX)
        throw ParseError("expected 'degree N' as the first line", lineno);
      degree = static_cast<std::size_t>(value);
      have_degree = true;
      continue;
    }
    if (text.starts_with("name ")) {
      name = strip(text.substr(5));
      continue;
    }
    try {
      gens.push_back(parse_perm(text, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_degree) throw ParseError("missing degree line", lineno);
  return PermGroup::generate(degree, std::move(gens), cap, std::move(name));
}

PermGroup read_grp_file(const std::filesystem::path& path, std::uint64_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  try {
    return read_grp(in, cap);
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

void write_grp(std::ostream& out, const PermGroup& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  out << "degree " << g.degree() << "\n";
  if (!g.name().empty()) out << "name " << g.name() << "\n";
  for (const Perm& gen : g.generators()) out << to_cycle_string(gen) << "\n";
}

void write_grp_file(const std::filesystem::path& path, const PermGroup& g,
                    const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  write_grp(out, g, comment);
}

}  // namespace ekr
