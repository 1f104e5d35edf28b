#include "fpair/parse.hpp"

#include <cctype>

namespace fpair {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names, std::uint64_t p, std::size_t line,
             std::size_t offset)
      : text_(text), names_(names), p_(p), line_(line), offset_(offset) {}

  Polynomial parse_all() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial f = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial zero() const { return Polynomial(p_, names_.size()); }

  Polynomial expr() {
    Polynomial acc = zero();
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial f = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        f *= factor();
      } else if (starts_factor()) {
        f *= factor();
      } else {
        break;
      }
    }
    return f;
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  std::uint64_t maybe_power() {
    if (peek('^')) {
      ++pos_;
      return integer();
    }
    return 1;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner.pow(maybe_power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer() % p_;
      return Polynomial::constant(static_cast<std::int64_t>(v), p_, names_.size()).pow(maybe_power());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      std::vector<std::size_t> vars = split_identifier(ident, start);
      Polynomial f = Polynomial::constant(1, p_, names_.size());
      for (std::size_t i = 0; i + 1 < vars.size(); ++i) f *= Polynomial::variable(vars[i], p_, names_.size());
      return f * Polynomial::variable(vars.back(), p_, names_.size()).pow(maybe_power());
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::vector<std::size_t> split_identifier(std::string_view ident, std::size_t start) const {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < ident.size()) {
      std::size_t best = names_.size(), best_len = 0;
      for (std::size_t v = 0; v < names_.size(); ++v) {
        const auto& n = names_[v];
        if (n.size() > best_len && ident.substr(i, n.size()) == n) {
          best = v;
          best_len = n.size();
        }
      }
      if (best == names_.size()) {
        throw ParseError("unknown variable '" + std::string(ident) + "'", line_, offset_ + start + i + 1);
      }
      out.push_back(best);
      i += best_len;
    }
    return out;
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::uint64_t p_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names, std::uint64_t p,
                            std::size_t line, std::size_t column_offset) {
  return PolyParser(text, names, p, line, column_offset).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, std::span<const std::string> names,
                                              std::uint64_t p, std::size_t line, std::size_t column_offset) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != '[') {
    throw ParseError("expected '['", line, column_offset + (b == std::string_view::npos ? 0 : b) + 1);
  }
  if (text[e] != ']') throw ParseError("expected ']'", line, column_offset + e + 1);
  std::vector<Polynomial> out;
  std::size_t pos = b + 1;
  int depth = 0;
  std::size_t item_start = pos;
  for (; pos <= e; ++pos) {
    char c = text[pos];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || pos == e) {
      std::string_view item = text.substr(item_start, pos - item_start);
      bool blank = item.find_first_not_of(" \t") == std::string_view::npos;
      if (blank) {
        if (pos == e && out.empty()) break;  // "[]"
        throw ParseError("empty list item", line, column_offset + item_start + 1);
      }
      out.push_back(parse_polynomial(item, names, p, line, column_offset + item_start));
      item_start = pos + 1;
    }
  }
  return out;
}

}  // namespace fpair
