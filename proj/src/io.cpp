#include "pdd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pdd::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '@' || c == '>' ||
              c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

// Comment-stripped, tokenized non-blank lines with their 1-based numbers.
std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    Line line{number, {}};
    std::string tok;
    while (fields >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::int64_t parse_int(const Line& line, const std::string& tok, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

std::string checked_name(const Line& line, const std::string& tok) {
  if (!valid_name(tok))
    throw ParseError(line.number, "invalid name '" + tok + "'");
  return tok;
}

void expect_header(const std::vector<Line>& lines, const char* magic) {
  if (lines.empty()) throw ParseError(1, std::string("missing '") + magic + " 1' header");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != magic || first.tokens[1] != "1")
    throw ParseError(first.number, std::string("expected '") + magic + " 1' header");
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError(line.number,
                     "expected " + std::to_string(n - 1) + " field(s) after '" +
                         line.tokens[0] + "'");
}

}  // namespace

InstanceData parse_instance_data(const std::string& text) {
  auto lines = split_lines(text);
  expect_header(lines, "pdd");
  InstanceData data;
  bool saw_budget = false, saw_target = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "budget") {
      expect_arity(line, 2);
      if (saw_budget) throw ParseError(line.number, "duplicate budget");
      data.budget = parse_int(line, line.tokens[1], "budget");
      saw_budget = true;
    } else if (kw == "target") {
      expect_arity(line, 2);
      if (saw_target) throw ParseError(line.number, "duplicate target");
      data.target = parse_int(line, line.tokens[1], "target");
      saw_target = true;
    } else if (kw == "species") {
      expect_arity(line, 3);
      InstanceData::SpeciesLine sp;
      sp.name = checked_name(line, line.tokens[1]);
      sp.d = parse_int(line, line.tokens[2], "diversity");
      data.species.push_back(std::move(sp));
    } else if (kw == "arc") {
      expect_arity(line, 4);
      InstanceData::ArcLine arc;
      arc.prey = checked_name(line, line.tokens[1]);
      arc.predator = checked_name(line, line.tokens[2]);
      auto g = parse_rational(line.tokens[3]);
      if (!g) throw ParseError(line.number, "malformed rational '" + line.tokens[3] + "'");
      if (*g <= 0 || *g > 1) throw ParseError(line.number, "gamma out of (0,1]");
      arc.gamma = *g;
      data.arcs.push_back(std::move(arc));
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_budget) throw ParseError(1, "missing budget line");
  if (!saw_target) throw ParseError(1, "missing target line");
  return data;
}

PddInstance parse_instance(const std::string& text) {
  return build_instance(parse_instance_data(text));
}

std::string serialize_instance(const PddInstance& inst) {
  const FoodWeb& web = inst.web();
  std::string out = "pdd 1\n";
  out += "budget " + std::to_string(inst.budget()) + "\n";
  out += "target " + std::to_string(inst.target()) + "\n";
  for (int v = 0; v < web.size(); ++v)
    out += "species " + web.name(v) + " " + std::to_string(inst.d(v)) + "\n";
  for (std::size_t a = 0; a < web.arcs().size(); ++a) {
    const Arc& arc = web.arcs()[a];
    out += "arc " + web.name(arc.prey) + " " + web.name(arc.predator) + " " +
           format_rational(inst.gamma(static_cast<int>(a))) + "\n";
  }
  return out;
}

namespace {

int species_index(const Line& line, const FoodWeb& web, const std::string& tok) {
  int v = web.index_of(tok);
  if (v < 0) throw ParseError(line.number, "unknown species '" + tok + "'");
  return v;
}

}  // namespace

TreeExtension parse_extension(const std::string& text, const FoodWeb& web) {
  auto lines = split_lines(text);
  expect_header(lines, "ext");
  std::vector<int> parent(web.size(), -2);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "root") {
      expect_arity(line, 2);
      int v = species_index(line, web, line.tokens[1]);
      if (parent[v] != -2) throw ParseError(line.number, "repeated species '" + line.tokens[1] + "'");
      parent[v] = -1;
    } else if (kw == "parent") {
      expect_arity(line, 3);
      int child = species_index(line, web, line.tokens[1]);
      int par = species_index(line, web, line.tokens[2]);
      if (parent[child] != -2)
        throw ParseError(line.number, "repeated species '" + line.tokens[1] + "'");
      parent[child] = par;
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  for (int v = 0; v < web.size(); ++v)
    if (parent[v] == -2)
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "species '" + web.name(v) + "' has no parent line");
  return make_extension(web, std::move(parent));
}

std::string serialize_extension(const TreeExtension& t, const FoodWeb& web) {
  std::string out = "ext 1\n";
  out += "root " + web.name(t.root()) + "\n";
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root())
      out += "parent " + web.name(v) + " " + web.name(t.parent(v)) + "\n";
  return out;
}

SpeciesSet parse_set(const std::string& text, const FoodWeb& web) {
  auto lines = split_lines(text);
  expect_header(lines, "set");
  SpeciesSet s(web.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "member")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    expect_arity(line, 2);
    int v = species_index(line, web, line.tokens[1]);
    if (s.test(v)) throw ParseError(line.number, "duplicate member '" + line.tokens[1] + "'");
    s.insert(v);
  }
  return s;
}

std::string serialize_set(const SpeciesSet& s, const FoodWeb& web) {
  std::string out = "set 1\n";
  s.for_each([&](int v) { out += "member " + web.name(v) + "\n"; });
  return out;
}

CdsInstance parse_cds(const std::string& text) {
  auto lines = split_lines(text);
  expect_header(lines, "cds");
  std::vector<std::string> names;
  std::vector<std::int64_t> capacity;
  std::vector<std::pair<std::string, std::string>> edge_names;
  std::vector<int> edge_lines;
  std::int64_t k = 0;
  bool saw_k = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "k") {
      expect_arity(line, 2);
      if (saw_k) throw ParseError(line.number, "duplicate k");
      k = parse_int(line, line.tokens[1], "k");
      saw_k = true;
    } else if (kw == "vertex") {
      expect_arity(line, 3);
      std::string name = checked_name(line, line.tokens[1]);
      for (const auto& existing : names)
        if (existing == name)
          throw ParseError(line.number, "duplicate vertex '" + name + "'");
      names.push_back(std::move(name));
      capacity.push_back(parse_int(line, line.tokens[2], "capacity"));
    } else if (kw == "edge") {
      expect_arity(line, 3);
      edge_names.emplace_back(checked_name(line, line.tokens[1]),
                              checked_name(line, line.tokens[2]));
      edge_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_k) throw ParseError(1, "missing k line");
  std::vector<std::pair<int, int>> edges;
  auto index_of = [&](int line_no, const std::string& name) {
    for (int v = 0; v < static_cast<int>(names.size()); ++v)
      if (names[v] == name) return v;
    throw ParseError(line_no, "unknown vertex '" + name + "'");
  };
  for (std::size_t i = 0; i < edge_names.size(); ++i)
    edges.emplace_back(index_of(edge_lines[i], edge_names[i].first),
                       index_of(edge_lines[i], edge_names[i].second));
  try {
    return CdsInstance(std::move(names), std::move(edges), std::move(capacity), k);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, e.what());
  }
}

std::string serialize_cds(const CdsInstance& cds) {
  std::string out = "cds 1\n";
  out += "k " + std::to_string(cds.k()) + "\n";
  for (int v = 0; v < cds.size(); ++v)
    out += "vertex " + cds.name(v) + " " + std::to_string(cds.capacity(v)) + "\n";
  for (auto [u, v] : cds.edges())
    out += "edge " + cds.name(u) + " " + cds.name(v) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace pdd::io

