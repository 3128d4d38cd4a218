#include "autorb/perm_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "autorb/errors.hpp"

namespace autorb {

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (visited[i] || p[i] == i) {
      visited[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (unsigned j = i; !visited[j]; j = p[j]) {
      visited[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation parse_cycle_string(std::string_view text, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation", pos);
    ++pos;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point number in cycle", pos);
      std::size_t start = pos;
      unsigned long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > degree) throw ParseError("point exceeds degree", start);
        ++pos;
      }
      if (value == 0) throw ParseError("points are 1-based", start);
      unsigned point = static_cast<unsigned>(value - 1);
      if (used[point]) throw ParseError("point repeated in cycle notation", start);
      used[point] = true;
      cycle.push_back(point);
    }
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation string", 0);
  return Permutation(std::move(images));
}

namespace {

std::string_view trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

GeneratorFile read_generator_file(std::istream& in) {
  GeneratorFile file;
  std::string line;
  std::size_t line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trimmed(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_degree) {
      std::istringstream header{std::string(body)};
      std::string keyword;
      long long n = 0;
      header >> keyword >> n;
      if (keyword != "degree" || header.fail() || n < 1)
        throw ParseError("expected 'degree N' header line", line_no);
      std::string rest;
      header >> rest;
      if (!rest.empty()) throw ParseError("trailing tokens after degree", line_no);
      file.degree = static_cast<unsigned>(n);
      have_degree = true;
      continue;
    }
    try {
      file.generators.push_back(parse_cycle_string(body, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad permutation line: ") + e.what(), line_no);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree N' header line", line_no);
  if (file.generators.empty())
    throw ParseError("generator file lists no permutations", line_no);
  return file;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path.string());
  return read_generator_file(in);
}

}  // namespace autorb
