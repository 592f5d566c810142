#include "zsurf/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zsurf {

std::string poly_to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = p.lowest_exponent(); e <= p.highest_exponent(); ++e) {
    Int c = p.coeff(e);
    if (c == 0) continue;
    bool neg = c < 0;
    Int a = abs(c);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  std::string read_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected an integer");
    return s.substr(start, pos - start);
  }
};

}  // namespace

LaurentPoly poly_from_text(const std::string& text) {
  Cursor cur{text};
  LaurentPoly result;
  bool any = false;
  while (!cur.done()) {
    int sign = 1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
      if (any || cur.peek() == '-') sign = cur.peek() == '-' ? -1 : 1;
      ++cur.pos;
      cur.skip_ws();
    } else if (any) {
      cur.fail("expected + or - between terms");
    }
    if (cur.done()) cur.fail("dangling sign");

    Int coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coef = Int(cur.read_integer());
      have_coef = true;
      cur.skip_ws();
      if (!cur.done() && cur.peek() == '*') {
        ++cur.pos;
        cur.skip_ws();
      } else if (!cur.done() && cur.peek() == 't') {
        cur.fail("missing * between coefficient and t");
      }
    }
    int exp = 0;
    if (!cur.done() && cur.peek() == 't') {
      ++cur.pos;
      exp = 1;
      cur.skip_ws();
      if (!cur.done() && cur.peek() == '^') {
        ++cur.pos;
        std::string e = cur.read_integer();
        exp = std::stoi(e);
      }
    } else if (!have_coef) {
      cur.fail("expected a coefficient or t");
    }
    result += LaurentPoly::monomial(sign * coef, exp);
    any = true;
  }
  if (!any) throw std::invalid_argument("polynomial parse error: empty input");
  return result;
}

Json poly_to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"lowest", p.lowest_exponent()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const Json& j) {
  if (j.is_string()) return poly_from_text(j.get<std::string>());
  if (!j.is_object() || !j.contains("lowest") || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial json must be text or {lowest, coeffs}");
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      coeffs.emplace_back(c.get<long>());
  }
  return LaurentPoly(j.at("lowest").get<int>(), std::move(coeffs));
}

Json matrix_to_json(const PolyMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(poly_to_text(p));
    rows.push_back(r);
  }
  return Json{{"size", m.size()}, {"rows", rows}};
}

PolyMat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("rows"))
    throw std::invalid_argument("matrix json must be {size, rows}");
  const size_t n = j.at("size").get<size_t>();
  const Json& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("matrix json: row count does not match size");
  PolyMat m(n);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw std::invalid_argument("matrix json: row length does not match size");
    for (const auto& cell : rows[i]) m[i].push_back(poly_from_json(cell));
  }
  return m;
}

HermMatrix herm_from_json(const Json& j) { return HermMatrix(matrix_from_json(j)); }

IntMat intmat_from_json(const Json& j) {
  PolyMat m = matrix_from_json(j);
  IntMat out(static_cast<int>(m.size()), static_cast<int>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t k = 0; k < m.size(); ++k) {
      const LaurentPoly& p = m[i][k];
      if (p.degree_spread() != 0 || (!p.is_zero() && p.lowest_exponent() != 0))
        throw std::invalid_argument("expected an integer matrix entry");
      out.at(static_cast<int>(i), static_cast<int>(k)) = p.eval_one();
    }
  return out;
}

Json intmat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).get_str());
    rows.push_back(r);
  }
  return Json{{"size", m.rows()}, {"rows", rows}};
}

namespace {

std::string int_list(const std::vector<int>& v, int offset) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + offset);
  }
  return out + "]";
}

std::string sp_rows(const IntMat& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m.at(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string token_to_text(const GeneratorToken& token) {
  std::string out;
  if (const auto* s = std::get_if<ScaleT>(&token.op)) {
    out = "scale_t i=" + std::to_string(s->i + 1) + " k=" + std::to_string(s->k);
  } else if (const auto* p = std::get_if<Pmove>(&token.op)) {
    out = "p i=" + std::to_string(p->i + 1) + " i2=" + std::to_string(p->i2 + 1);
  } else if (const auto* q = std::get_if<Qmove>(&token.op)) {
    out = "q i=" + std::to_string(q->i + 1) + " j=" + std::to_string(q->j + 1);
  } else if (const auto* sp = std::get_if<SpMove>(&token.op)) {
    out = "sp rows=" + sp_rows(sp->a);
  } else if (const auto* n = std::get_if<NegX>(&token.op)) {
    out = "neg i=" + std::to_string(n->i + 1);
  } else if (const auto* px = std::get_if<PermX>(&token.op)) {
    out = "perm sigma=" + int_list(px->sigma, 1) +
          " class=" + std::string(px->sign_class == 1 ? "+" : "-");
  }
  if (token.inverted) out += " inv";
  return out;
}

std::string word_to_text(const Word& word) {
  std::string out;
  for (const auto& t : word) out += token_to_text(t) + "\n";
  return out;
}

namespace {

struct TokenParser {
  std::string line;
  int lineno;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word parse error on line " + std::to_string(lineno) + ": " +
                                what);
  }

  // extract `key=` payload up to the next space that is not inside brackets
  std::string field(const std::string& key) const {
    const std::string pat = key + "=";
    size_t at = line.find(pat);
    if (at == std::string::npos) fail("missing field " + key);
    size_t start = at + pat.size();
    int depth = 0;
    size_t end = start;
    while (end < line.size() && (depth > 0 || line[end] != ' ')) {
      if (line[end] == '[') ++depth;
      if (line[end] == ']') --depth;
      ++end;
    }
    return line.substr(start, end - start);
  }

  std::vector<long> parse_list(const std::string& s) const {
    std::vector<long> out;
    std::string cur;
    for (char ch : s) {
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
        cur += ch;
      } else if (!cur.empty()) {
        out.push_back(std::stol(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) out.push_back(std::stol(cur));
    return out;
  }
};

}  // namespace

Word word_from_text(const std::string& text) {
  Word word;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace-only lines
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;

    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    TokenParser tp{line, lineno};
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    GeneratorToken token;
    if (line.size() >= 4 && line.substr(line.size() - 4) == " inv") {
      token.inverted = true;
      line = line.substr(0, line.size() - 4);
      tp.line = line;
    }
    if (kind == "scale_t") {
      token.op = ScaleT{static_cast<int>(std::stol(tp.field("i")) - 1), std::stol(tp.field("k"))};
    } else if (kind == "p") {
      token.op = Pmove{static_cast<int>(std::stol(tp.field("i")) - 1),
                       static_cast<int>(std::stol(tp.field("i2")) - 1)};
    } else if (kind == "q") {
      token.op = Qmove{static_cast<int>(std::stol(tp.field("i")) - 1),
                       static_cast<int>(std::stol(tp.field("j")) - 1)};
    } else if (kind == "sp") {
      std::string rows = tp.field("rows");
      // parse nested [[..],[..]]
      std::vector<std::vector<long>> parsed;
      std::string cur;
      int depth = 0;
      for (char ch : rows) {
        if (ch == '[') {
          ++depth;
          if (depth == 2) cur.clear();
        } else if (ch == ']') {
          if (depth == 2) parsed.push_back(tp.parse_list(cur));
          --depth;
        } else if (depth == 2) {
          cur += ch;
        }
      }
      const int n = static_cast<int>(parsed.size());
      IntMat a(n, n);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(parsed[i].size()) != n) tp.fail("sp rows must be square");
        for (int j = 0; j < n; ++j) a.at(i, j) = parsed[i][j];
      }
      token.op = SpMove{std::move(a)};
    } else if (kind == "neg") {
      token.op = NegX{static_cast<int>(std::stol(tp.field("i")) - 1)};
    } else if (kind == "perm") {
      std::vector<long> sigma_raw = tp.parse_list(tp.field("sigma"));
      std::vector<int> sigma;
      for (long v : sigma_raw) sigma.push_back(static_cast<int>(v - 1));
      std::string cls = tp.field("class");
      if (cls != "+" && cls != "-") tp.fail("class must be + or -");
      token.op = PermX{std::move(sigma), cls == "+" ? 1 : -1};
    } else {
      tp.fail("unknown token kind '" + kind + "'");
    }
    word.push_back(std::move(token));
  }
  return word;
}

}  // namespace zsurf
