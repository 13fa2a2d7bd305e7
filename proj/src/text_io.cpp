#include "cgeom/text_io.hpp"

#include <algorithm>
#include <sstream>

#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Reads the whole stream, drops comments and blank lines, and checks the
// trailing newline.
std::vector<Line> content_lines(std::istream& in, const std::string& source) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!all.empty() && all.back() != '\n') {
    const auto line = static_cast<std::size_t>(std::count(all.begin(), all.end(), '\n')) + 1;
    throw ParseError(source, line, "missing trailing newline");
  }
  std::vector<Line> out;
  std::istringstream ss(all);
  std::string text;
  std::size_t number = 0;
  while (std::getline(ss, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back({number, text});
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

// `<prefix> rest` -> rest, or ParseError.
std::string after_prefix(const Line& line, const std::string& prefix, const std::string& source) {
  const auto first = line.text.find_first_not_of(" \t");
  if (line.text.compare(first, prefix.size(), prefix) != 0)
    throw ParseError(source, line.number, "expected a line starting with '" + prefix + "'");
  return line.text.substr(first + prefix.size());
}

// `a < b` -> (a, b).
std::pair<std::string, std::string> parse_relation(const Line& line, const std::string& source) {
  const auto toks = split_ws(line.text);
  if (toks.size() != 3 || toks[1] != "<") throw ParseError(source, line.number, "expected 'a < b'");
  return {toks[0], toks[2]};
}

template <typename F>
auto at_line(const std::string& source, std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(source, line, e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(source, line, e.what());
  } catch (const DuplicatePoints& e) {
    throw ParseError(source, line, e.what());
  }
}

}  // namespace

RawFamily parse_geometry(std::istream& in, const std::string& source) {
  const auto lines = content_lines(in, source);
  if (lines.empty()) throw ParseError(source, 1, "missing 'ground:' line");
  RawFamily raw;
  raw.ground = at_line(source, lines[0].number,
                       [&] { return GroundSet(split_ws(after_prefix(lines[0], "ground:", source))); });
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = split_ws(lines[i].text);
    if (toks.size() != 1) throw ParseError(source, lines[i].number, "a closed set must be one comma-separated token");
    raw.family.push_back(at_line(source, lines[i].number, [&] { return raw.ground.parse_set(toks[0]); }));
  }
  if (raw.family.empty()) throw ParseError(source, lines.back().number, "no closed sets listed");
  return raw;
}

ConvexGeometry read_geometry(std::istream& in, const std::string& source) {
  auto raw = parse_geometry(in, source);
  return validate_family(std::move(raw.ground), std::move(raw.family));
}

void write_geometry(std::ostream& out, const ConvexGeometry& g) { out << geometry_to_string(g); }

std::string geometry_to_string(const ConvexGeometry& g) {
  std::string s = "ground:";
  for (const auto& name : g.ground().names()) s += " " + name;
  s += "\n";
  std::vector<SubsetMask> sets = g.closed();
  std::sort(sets.begin(), sets.end(), ground_order_less);
  for (SubsetMask m : sets) s += g.ground().format_set(m) + "\n";
  return s;
}

FiniteLattice read_lattice(std::istream& in, const std::string& source) {
  const auto lines = content_lines(in, source);
  if (lines.empty()) throw ParseError(source, 1, "missing 'elements:' line");
  const auto count_toks = split_ws(after_prefix(lines[0], "elements:", source));
  if (count_toks.size() != 1 || count_toks[0].find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(source, lines[0].number, "expected 'elements: <count>'");
  const std::size_t n = std::stoul(count_toks[0]);
  if (n == 0 || n > 4096) throw ParseError(source, lines[0].number, "element count must be between 1 and 4096");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [a, b] = parse_relation(lines[i], source);
    auto index = [&](const std::string& t) {
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6 ||
          std::stoul(t) >= n)
        throw ParseError(source, lines[i].number, "'" + t + "' is not an element index below " + std::to_string(n));
      return static_cast<std::size_t>(std::stoul(t));
    };
    pairs.emplace_back(index(a), index(b));
  }
  return at_line(source, lines[0].number, [&] { return FiniteLattice::from_covers(n, pairs); });
}

void write_lattice(std::ostream& out, const FiniteLattice& l) {
  out << "elements: " << l.size() << "\n";
  for (auto [x, y] : l.cover_pairs()) out << x << " < " << y << "\n";
}

PointConfiguration read_points(std::istream& in, const std::string& source) {
  const auto lines = content_lines(in, source);
  std::vector<std::string> labels;
  std::vector<Point> coords;
  for (const auto& line : lines) {
    const auto toks = split_ws(line.text);
    if (toks.size() < 2) throw ParseError(source, line.number, "expected 'label x y ...'");
    at_line(source, line.number, [&] { check_label(toks[0]); });
    Point p;
    for (std::size_t i = 1; i < toks.size(); ++i)
      p.push_back(at_line(source, line.number, [&] { return parse_rational(toks[i]); }));
    if (!coords.empty() && p.size() != coords.front().size())
      throw ParseError(source, line.number, "point dimension differs from the first point");
    labels.push_back(toks[0]);
    coords.push_back(std::move(p));
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  return at_line(source, last, [&] { return PointConfiguration(std::move(labels), std::move(coords)); });
}

FinitePoset read_poset(std::istream& in, const std::string& source) {
  const auto lines = content_lines(in, source);
  if (lines.empty()) throw ParseError(source, 1, "missing 'elems:' line");
  const auto elems = split_ws(after_prefix(lines[0], "elems:", source));
  const GroundSet ground = at_line(source, lines[0].number, [&] { return GroundSet(elems); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [a, b] = parse_relation(lines[i], source);
    const auto ia = ground.index_of(a), ib = ground.index_of(b);
    if (!ia || !ib) throw ParseError(source, lines[i].number, "unknown element in '" + lines[i].text + "'");
    if (*ia == *ib) throw ParseError(source, lines[i].number, "an element is not below itself");
    pairs.emplace_back(*ia, *ib);
  }
  const std::size_t last = lines.back().number;
  return at_line(source, last, [&] { return FinitePoset(elems, pairs); });
}

void write_hasse_dot(std::ostream& out, const ConvexGeometry& g) {
  const auto& ground = g.ground();
  std::vector<SubsetMask> nodes = g.closed();
  std::sort(nodes.begin(), nodes.end(), ground_order_less);
  auto id = [&](SubsetMask m) { return "n" + std::to_string(std::find(nodes.begin(), nodes.end(), m) - nodes.begin()); };

  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (SubsetMask m : nodes) out << "  " << id(m) << " [label=\"" << ground.format_set(m) << "\"];\n";
  for (std::size_t k = 0; k <= ground.size(); ++k) {
    std::string rank;
    for (SubsetMask m : nodes)
      if (m.size() == k) rank += " " + id(m) + ";";
    if (!rank.empty()) out << "  { rank=same;" << rank << " }\n";
  }
  const auto l = lattice_of_closed_sets(g);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto pos = [&](SubsetMask m) { return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), m) - nodes.begin()); };
  for (auto [x, y] : l.cover_pairs()) edges.emplace_back(pos(l.origin(x)), pos(l.origin(y)));
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

}  // namespace cgeom
