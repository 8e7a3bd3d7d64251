#include "jetsections/io.hpp"

#include <cctype>

#include "jetsections/error.hpp"

namespace jetsections {

namespace {

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Affine:
      return "affine";
    case SpaceKind::Homogeneous:
      return "homogeneous";
    case SpaceKind::Mixed:
      return "mixed";
  }
  return "affine";
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidArgument(std::string("JSON: missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

Json factor_list(const Monomial& m) {
  Json out = Json::array();
  const auto& fs = m.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    out.push_back({it->var.coord, it->var.order, it->exponent});
  }
  return out;
}

Monomial monomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("JSON: \"mono\" must be an array");
  std::vector<Factor> fs;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 3 || !f[0].is_number_integer() ||
        !f[1].is_number_integer() || !f[2].is_number_integer()) {
      throw InvalidArgument("JSON: factor must be [coord, order, exponent]");
    }
    const int order = f[1].get<int>();
    const int e = f[2].get<int>();
    if (order < 0 || e < 0) throw InvalidArgument("JSON: negative order or exponent");
    fs.push_back({{f[0].get<int>(), order}, e});
  }
  return Monomial(std::move(fs));
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InvalidArgument("JSON: coefficient must be a string \"p/q\" or an integer");
}

}  // namespace

Json space_to_json(const VarSpace& s) {
  Json j;
  j["kind"] = kind_name(s.kind());
  if (s.kind() != SpaceKind::Homogeneous) j["chart"] = s.chart();
  j["N"] = s.dimension();
  return j;
}

VarSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidArgument("JSON: space needs a \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const int n = get_int(j, "N");
  if (kind == "homogeneous") return VarSpace::homogeneous(n);
  const int chart = j.contains("chart") ? get_int(j, "chart") : 0;
  if (kind == "affine") return VarSpace::affine(n, chart);
  if (kind == "mixed") return VarSpace::mixed(n, chart);
  throw InvalidArgument("JSON: unknown space kind \"" + kind + "\"");
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["coeff"] = c.to_string();
    t["mono"] = factor_list(m);
    terms.push_back(std::move(t));
  }
  Json j;
  j["space"] = space_to_json(p.space());
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("terms") ||
      !j.at("terms").is_array()) {
    throw InvalidArgument("JSON: polynomial needs \"space\" and \"terms\"");
  }
  Polynomial p(space_from_json(j.at("space")));
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("mono")) {
      throw InvalidArgument("JSON: term needs \"coeff\" and \"mono\"");
    }
    Polynomial term(p.space(), monomial_from_json(t.at("mono")), scalar_from_json(t.at("coeff")));
    p += term;
  }
  return p;
}

Json to_json(const TupleBNPlus& t) {
  Json blocks = Json::array();
  for (const auto& b : t.blocks()) blocks.push_back(b.entries());
  Json j;
  j["N"] = t.dimension();
  j["blocks"] = std::move(blocks);
  return j;
}

TupleBNPlus tuple_from_json(const Json& j) {
  const Json* blocks = &j;
  std::optional<int> n;
  if (j.is_object()) {
    if (!j.contains("blocks")) throw InvalidArgument("JSON: tuple needs \"blocks\"");
    blocks = &j.at("blocks");
    n = get_int(j, "N");
  }
  if (!blocks->is_array()) throw InvalidArgument("tuple: expected an array of arrays");
  std::vector<SeqB> seqs;
  for (const auto& b : *blocks) {
    if (!b.is_array()) throw InvalidArgument("tuple: every block must be an array");
    std::vector<int> entries;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw InvalidArgument("tuple: entries must be integers");
      entries.push_back(e.get<int>());
    }
    seqs.emplace_back(std::move(entries));
  }
  if (n && *n != static_cast<int>(seqs.size())) {
    throw InvalidArgument("tuple: \"N\" does not match the number of blocks");
  }
  return TupleBNPlus(std::move(seqs));
}

Json to_json(const RationalSection& s) {
  Json j;
  j["chart"] = s.chart();
  j["pole"] = s.pole();
  if (s.denominator_coord() != s.chart()) j["denominator"] = s.denominator_coord();
  j["numerator"] = to_json(s.numerator());
  return j;
}

Json to_json(const RationalTerm& t) {
  Json j;
  j["pole"] = t.pole;
  j["mono"] = factor_list(t.numerator);
  j["coeff"] = t.coeff.to_string();
  return j;
}

Json to_json(const JetMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.size(); ++c) {
      const JetCell& cell = m.at(r, c);
      if (!cell) {
        row.push_back(nullptr);
        continue;
      }
      Json e;
      e["coeff"] = cell->coeff.to_string();
      e["coord"] = cell->var.coord;
      e["order"] = cell->var.order;
      row.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["space"] = space_to_json(m.space());
  j["rows"] = std::move(rows);
  return j;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : s_(text) {}

  struct RawTerm {
    Scalar coeff{1};
    std::vector<Factor> factors;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      RawTerm t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return terms;
  }

  char letter() const { return letter_; }
  int max_coord() const { return max_coord_; }

 private:
  RawTerm term() {
    RawTerm t;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= number();
      } else if (peek() == 'x' || peek() == 'X') {
        t.factors.push_back(variable());
      } else {
        fail("expected a number or a variable");
      }
      skip();
      if (peek() != '*') break;
      take();
    }
    return t;
  }

  Scalar number() {
    const long num = integer();
    skip();
    if (peek() == '/') {
      take();
      skip();
      const long den = integer();
      if (den == 0) fail("zero denominator");
      return Scalar(num, den);
    }
    return Scalar(num);
  }

  Factor variable() {
    const char l = take();
    if (letter_ != 0 && letter_ != l) fail("cannot mix x[..] and X[..]");
    letter_ = l;
    expect('[');
    const int coord = static_cast<int>(integer());
    expect(']');
    max_coord_ = std::max(max_coord_, coord);
    int order = 0;
    int exponent = 1;
    if (peek() == '^' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
      pos_ += 2;
      order = static_cast<int>(integer());
      expect(')');
    }
    if (peek() == '^') {
      take();
      exponent = static_cast<int>(integer());
    }
    return {{coord, order}, exponent};
  }

  long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 18) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char take() {
    if (at_end()) fail("unexpected end of input");
    return s_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("polynomial text, position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char letter_ = 0;
  int max_coord_ = 0;
};

}  // namespace

Polynomial parse_polynomial_text(std::string_view text, std::optional<int> n, int chart) {
  TextParser parser(text);
  const auto terms = parser.parse();
  const bool homogeneous = parser.letter() == 'X';
  const int dim = n ? *n : std::max(1, std::max(parser.max_coord(), chart));
  if (dim < 1) throw InvalidArgument("polynomial text: N must be >= 1");
  if (!homogeneous && (chart < 0 || chart > dim)) {
    throw InvalidArgument("polynomial text: chart outside [0, N]");
  }
  const VarSpace space = homogeneous ? VarSpace::homogeneous(dim) : VarSpace::affine(dim, chart);
  Polynomial p(space);
  for (const auto& t : terms) p += Polynomial(space, Monomial(t.factors), t.coeff);
  return p;
}

Polynomial parse_polynomial(std::string_view text, std::optional<int> n, int chart) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("polynomial JSON: ") + e.what());
    }
    Polynomial p = polynomial_from_json(j);
    if (n && *n != p.space().dimension()) {
      throw InvalidArgument("polynomial JSON: N disagrees with --N");
    }
    return p;
  }
  return parse_polynomial_text(text, n, chart);
}

TupleBNPlus parse_tuple(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("tuple JSON: ") + e.what());
  }
  return tuple_from_json(j);
}

}  // namespace jetsections
