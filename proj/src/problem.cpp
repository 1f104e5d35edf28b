#include "fpair/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "fpair/errors.hpp"
#include "fpair/parse.hpp"

namespace fpair {

const std::vector<std::string>& problem_commands() {
  static const std::vector<std::string> cmds{"fpure", "fpure-old", "sfr",     "testideal",
                                             "fpt",   "compatible", "closure", "hunt"};
  return cmds;
}

namespace {

struct Statement {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t column;  // 1-based column of the first character of value
  std::size_t key_column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trims [b, e) of line and returns the trimmed bounds.
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t b, std::size_t e) {
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {b, e};
}

std::vector<Statement> split_statements(std::string_view source, std::size_t first_line) {
  std::vector<Statement> out;
  std::size_t line_no = first_line;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t nl = source.find('\n', start);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view line = source.substr(start, nl - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    int depth = 0;
    std::size_t seg = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i < line.size()) {
        if (line[i] == '[') ++depth;
        if (line[i] == ']') --depth;
      }
      if (i < line.size() && !(line[i] == ';' && depth == 0)) continue;
      auto [b, e] = trim(line, seg, i);
      seg = i + 1;
      if (b == e) continue;
      std::size_t eq = line.find('=', b);
      if (eq == std::string_view::npos || eq >= e) throw ParseError("expected key=value", line_no, b + 1);
      auto [kb, ke] = trim(line, b, eq);
      auto [vb, ve] = trim(line, eq + 1, e);
      if (kb == ke) throw ParseError("empty key", line_no, b + 1);
      out.push_back({std::string(line.substr(kb, ke - kb)), std::string(line.substr(vb, ve - vb)), line_no, vb + 1,
                     kb + 1});
    }
    ++line_no;
    start = nl + 1;
  }
  return out;
}

std::uint64_t parse_uint(const Statement& s) {
  std::uint64_t v = 0;
  const char* b = s.value.data();
  const char* e = b + s.value.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || s.value.empty()) {
    throw ParseError("expected a non-negative integer for " + s.key, s.line, s.column);
  }
  return v;
}

std::uint64_t parse_positive(const Statement& s) {
  std::uint64_t v = parse_uint(s);
  if (v == 0) throw ContractError("line " + std::to_string(s.line) + ": " + s.key + " must be at least 1");
  return v;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  return std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> parse_vars(const Statement& s) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (b <= s.value.size()) {
    std::size_t c = s.value.find(',', b);
    if (c == std::string::npos) c = s.value.size();
    auto [tb, te] = trim(s.value, b, c);
    std::string name = s.value.substr(tb, te - tb);
    if (!valid_name(name)) throw ParseError("bad variable name '" + name + "'", s.line, s.column + tb);
    if (std::find(out.begin(), out.end(), name) != out.end()) {
      throw ParseError("duplicate variable '" + name + "'", s.line, s.column + tb);
    }
    out.push_back(name);
    b = c + 1;
  }
  return out;
}

// Splits "A | B | C" into trimmed pieces with their column offsets.
std::vector<std::pair<std::string, std::size_t>> split_bar(const std::string& v) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t b = 0;
  while (b <= v.size()) {
    std::size_t c = v.find('|', b);
    if (c == std::string::npos) c = v.size();
    auto [tb, te] = trim(v, b, c);
    out.emplace_back(v.substr(tb, te - tb), tb);
    b = c + 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_point(std::string_view text, std::uint64_t p, std::size_t nvars, std::size_t line,
                                       std::size_t column) {
  std::vector<std::uint64_t> out;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t c = text.find(',', b);
    if (c == std::string_view::npos) c = text.size();
    auto [tb, te] = trim(text, b, c);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + tb, text.data() + te, v);
    if (tb == te || ec != std::errc() || ptr != text.data() + te) {
      throw ParseError("expected an integer coordinate", line, column + tb);
    }
    out.push_back(PrimeFieldElement::from_signed(v, p).value());
    b = c + 1;
  }
  if (out.size() != nvars) {
    throw ParseError("point has " + std::to_string(out.size()) + " coordinates, expected " + std::to_string(nvars),
                     line, column);
  }
  return out;
}

Problem parse_problem(std::string_view source, std::size_t first_line) {
  static const std::vector<std::string> keys{"p",    "vars",  "I",     "a",     "t",     "cmd",
                                             "point", "c",    "test_element", "d", "J",  "z",
                                             "candidates", "e_max", "degree_bound", "e_min", "e_cap", "local"};
  std::map<std::string, Statement> seen;
  for (auto& s : split_statements(source, first_line)) {
    if (std::find(keys.begin(), keys.end(), s.key) == keys.end()) {
      throw ParseError("unknown key '" + s.key + "'", s.line, s.key_column);
    }
    std::string key = s.key == "test_element" ? "c" : s.key;
    if (seen.count(key)) throw ParseError("duplicate key '" + s.key + "'", s.line, s.key_column);
    seen.emplace(key, std::move(s));
  }
  auto need = [&](const char* k) -> const Statement& {
    auto it = seen.find(k);
    if (it == seen.end()) throw ParseError(std::string("missing key '") + k + "'", first_line, 1);
    return it->second;
  };
  auto has = [&](const char* k) { return seen.count(k) != 0; };

  Problem pr;
  const Statement& ps = need("p");
  pr.p = parse_uint(ps);
  if (pr.p >= (std::uint64_t{1} << 32) || !is_prime(pr.p)) {
    throw ContractError("line " + std::to_string(ps.line) + ": p = " + ps.value + " is not a prime below 2^32");
  }
  pr.vars = parse_vars(need("vars"));
  auto poly = [&](const Statement& s) { return parse_polynomial(s.value, pr.vars, pr.p, s.line, s.column - 1); };
  auto list = [&](const Statement& s) { return parse_polynomial_list(s.value, pr.vars, pr.p, s.line, s.column - 1); };

  if (has("I")) pr.defining = list(seen.at("I"));
  if (has("a")) {
    pr.a = list(seen.at("a"));
  } else {
    pr.a = {Polynomial::constant(1, pr.p, pr.vars.size())};
  }
  if (has("t")) {
    const Statement& s = seen.at("t");
    try {
      pr.t = ExactRational::parse(s.value);
    } catch (const ParseError&) {
      throw ParseError("malformed rational '" + s.value + "'", s.line, s.column);
    }
    if (pr.t <= ExactRational(0)) throw ContractError("line " + std::to_string(s.line) + ": t must be positive");
  }
  if (has("cmd")) {
    const Statement& s = seen.at("cmd");
    const auto& cmds = problem_commands();
    if (std::find(cmds.begin(), cmds.end(), s.value) == cmds.end()) {
      throw ContractError("line " + std::to_string(s.line) + ": unknown command '" + s.value + "'");
    }
    pr.cmd = s.value;
  }
  if (has("point")) {
    const Statement& s = seen.at("point");
    for (const auto& [text, off] : split_bar(s.value)) {
      pr.points.push_back(parse_point(text, pr.p, pr.vars.size(), s.line, s.column + off));
    }
  }
  if (has("c")) pr.test_element = poly(seen.at("c"));
  if (has("d")) pr.d = poly(seen.at("d"));
  if (has("J")) pr.j = list(seen.at("J"));
  if (has("z")) pr.z = poly(seen.at("z"));
  if (has("candidates")) {
    const Statement& s = seen.at("candidates");
    for (const auto& [text, off] : split_bar(s.value)) {
      pr.candidates.push_back(parse_polynomial_list(text, pr.vars, pr.p, s.line, s.column - 1 + off));
    }
  }
  if (has("e_max")) pr.e_max = parse_positive(seen.at("e_max"));
  if (has("degree_bound")) pr.degree_bound = parse_uint(seen.at("degree_bound"));
  if (has("e_min")) pr.e_min = parse_positive(seen.at("e_min"));
  if (has("e_cap")) pr.e_cap = parse_positive(seen.at("e_cap"));
  if (has("local")) {
    const Statement& s = seen.at("local");
    if (s.value != "true" && s.value != "false") throw ParseError("local must be true or false", s.line, s.column);
    pr.local = s.value == "true";
  }
  return pr;
}

std::string print_problem(const Problem& pr) {
  auto list = [&](const std::vector<Polynomial>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str(pr.vars);
    return s + "]";
  };
  std::string out = "p=" + std::to_string(pr.p) + "\nvars=";
  for (std::size_t i = 0; i < pr.vars.size(); ++i) out += (i ? "," : "") + pr.vars[i];
  out += "\nI=" + list(pr.defining) + "\na=" + list(pr.a) + "\nt=" + pr.t.str() + "\n";
  if (!pr.cmd.empty()) out += "cmd=" + pr.cmd + "\n";
  if (!pr.points.empty()) {
    out += "point=";
    for (std::size_t i = 0; i < pr.points.size(); ++i) {
      if (i) out += " | ";
      for (std::size_t k = 0; k < pr.points[i].size(); ++k) out += (k ? "," : "") + std::to_string(pr.points[i][k]);
    }
    out += "\n";
  }
  if (pr.test_element) out += "c=" + pr.test_element->str(pr.vars) + "\n";
  if (pr.d) out += "d=" + pr.d->str(pr.vars) + "\n";
  if (pr.j) out += "J=" + list(*pr.j) + "\n";
  if (pr.z) out += "z=" + pr.z->str(pr.vars) + "\n";
  if (!pr.candidates.empty()) {
    out += "candidates=";
    for (std::size_t i = 0; i < pr.candidates.size(); ++i) out += (i ? " | " : "") + list(pr.candidates[i]);
    out += "\n";
  }
  if (pr.e_max) out += "e_max=" + std::to_string(*pr.e_max) + "\n";
  if (pr.degree_bound) out += "degree_bound=" + std::to_string(*pr.degree_bound) + "\n";
  if (pr.e_min) out += "e_min=" + std::to_string(*pr.e_min) + "\n";
  if (pr.e_cap) out += "e_cap=" + std::to_string(*pr.e_cap) + "\n";
  if (pr.local) out += "local=true\n";
  return out;
}

std::vector<Problem> parse_corpus(std::string_view source) {
  std::vector<Problem> out;
  std::size_t line_no = 1, start = 0;
  while (start < source.size()) {
    std::size_t nl = source.find('\n', start);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view line = source.substr(start, nl - start);
    std::string_view body = line.substr(0, std::min(line.find('#'), line.size()));
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_problem(line, line_no));
    ++line_no;
    start = nl + 1;
  }
  return out;
}

}  // namespace fpair
