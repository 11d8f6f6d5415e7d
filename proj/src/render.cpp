#include <cctype>
#include <sstream>

#include "chowgen/error.hpp"
#include "chowgen/polyring.hpp"

namespace chowgen {

std::string render_variable(const std::string& name, RenderStyle style) {
  if (style != RenderStyle::latex) return name;
  if (name == "L") return "\\mathcal{L}";
  if (name == "H") return "\\mathcal{H}";
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

namespace {

std::string render_monomial(const GradedRingSpec& ring, const Monomial& m, RenderStyle style) {
  std::string out;
  const char* sep = style == RenderStyle::canonical ? "*" : "";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += render_variable(ring.name(i), style);
    if (m[i] > 1) {
      out += '^';
      out += style == RenderStyle::latex ? "{" + std::to_string(m[i]) + "}" : std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, RenderStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_terms(p)) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    if (m.is_one()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      if (style == RenderStyle::canonical) out += '*';
    }
    out += render_monomial(p.ring(), m, style);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace {

class Parser {
 public:
  Parser(const GradedRingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign * c);
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m(ring_.size());
    Integer coeff = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }));
      skip_ws();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        need_factor = true;
      } else {
        return {m, coeff};
      }
    }
    while (true) {
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        if (need_factor) fail("expected a variable name");
        break;
      }
      std::string name = read_while([](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; });
      const auto idx = ring_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      unsigned exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::string digits = read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
        if (digits.empty()) fail("expected exponent");
        exp = static_cast<unsigned>(std::stoul(digits));
        skip_ws();
      }
      m[*idx] += exp;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        need_factor = true;
      } else {
        break;
      }
    }
    return {m, coeff};
  }

  template <class Pred>
  std::string read_while(Pred pred) {
    std::size_t start = pos_;
    while (!at_end() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse_polynomial: " << what << " at offset " << pos_ << " in \"" << text_ << "\"";
    throw InvalidArgument(os.str());
  }

  const GradedRingSpec& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const GradedRingSpec& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace chowgen
