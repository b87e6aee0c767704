#include "monotop/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace monotop {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

// Accepts "key:" as its own token or glued to the first name ("key:x1").
bool take_header(Line& line, const std::string& key) {
  const std::string head = key + ":";
  auto& first = line.tokens.front();
  if (first == head) {
    line.tokens.erase(line.tokens.begin());
    return true;
  }
  if (first.rfind(head, 0) == 0) {
    first = first.substr(head.size());
    return true;
  }
  return false;
}

Monomial parse_face(const Line& line, const VariableUniverse& u, const char* what) {
  if (line.tokens.size() == 1 && line.tokens.front() == "()") return Monomial::one();
  Monomial m;
  for (const auto& name : line.tokens) {
    auto idx = u.index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", line.number);
    if (m.has(*idx)) {
      throw ParseError(std::string("variable '") + name + "' repeated in " + what, line.number);
    }
    m = m.with_var(*idx);
  }
  return m;
}

UniversePtr make_universe(std::vector<std::string> names, std::size_t line) {
  try {
    return VariableUniverse::make(std::move(names));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line);
  }
}

std::string face_text(const VariableUniverse& u, Monomial m) {
  return m.is_one() ? "()" : u.format(m, " ");
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || !take_header(lines.front(), "vars")) {
    throw ParseError("expected a 'vars:' line", lines.empty() ? 1 : lines.front().number);
  }
  const auto u = make_universe(lines.front().tokens, lines.front().number);
  std::vector<Monomial> gens;
  std::set<std::uint64_t> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Monomial g = parse_face(lines[k], *u, "a generator");
    if (!seen.insert(g.bits()).second) {
      throw ParseError("duplicate generator '" + face_text(*u, g) + "'", lines[k].number);
    }
    gens.push_back(g);
  }
  return MonomialIdeal(u, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& n : ideal.universe().names()) out += " " + n;
  out += "\n";
  for (Monomial g : ideal.generators()) out += face_text(ideal.universe(), g) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  bool declared = false;
  std::size_t first_edge = 0;
  if (!lines.empty() && take_header(lines.front(), "vertices")) {
    declared = true;
    first_edge = 1;
    for (const auto& n : lines.front().tokens) {
      if (!index.emplace(n, names.size()).second) {
        throw ParseError("duplicate vertex '" + n + "'", lines.front().number);
      }
      names.push_back(n);
    }
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t k = first_edge; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2) throw ParseError("expected an edge 'u v'", line.number);
    std::size_t ends[2];
    for (int side = 0; side < 2; ++side) {
      const auto& n = line.tokens[side];
      auto it = index.find(n);
      if (it == index.end()) {
        if (declared) throw ParseError("unknown vertex '" + n + "'", line.number);
        it = index.emplace(n, names.size()).first;
        names.push_back(n);
      }
      ends[side] = it->second;
    }
    if (ends[0] == ends[1]) throw ParseError("loop at '" + line.tokens[0] + "'", line.number);
    const Edge e{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
    if (!seen.insert(e).second) throw ParseError("repeated edge", line.number);
    edges.push_back(e);
  }
  if (names.size() > kMaxVariables) {
    throw ParseError("at most 64 vertices are supported");
  }
  return Graph(make_universe(std::move(names), 1), std::move(edges));
}

std::string format_graph(const Graph& graph) {
  std::string out = "vertices:";
  for (const auto& n : graph.vertices().names()) out += " " + n;
  out += "\n";
  for (const auto& [u, v] : graph.edges()) {
    out += graph.vertices().name(u) + " " + graph.vertices().name(v) + "\n";
  }
  return out;
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out;
  for (Monomial f : complex.faces()) out += face_text(complex.universe(), f) + "\n";
  return out;
}

SimplicialComplex parse_complex(std::string_view text, UniversePtr universe) {
  std::vector<Monomial> faces;
  std::set<std::uint64_t> seen;
  for (const auto& line : tokenize(text)) {
    const Monomial f = parse_face(line, *universe, "a face");
    if (!seen.insert(f.bits()).second) throw ParseError("duplicate face", line.number);
    faces.push_back(f);
  }
  try {
    return SimplicialComplex::from_faces(std::move(universe), std::move(faces));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InputKind input_kind(const std::filesystem::path& path) {
  return path.extension() == ".graph" ? InputKind::Graph : InputKind::Ideal;
}

}  // namespace monotop
