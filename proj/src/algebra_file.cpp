#include "lrbv/algebra_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lrbv/correspondences.hpp"
#include "lrbv/poly_parser.hpp"

namespace lrbv {

namespace {

std::string located(const std::string& source, std::size_t line, std::size_t column, const std::string& msg) {
  std::ostringstream os;
  os << source;
  if (line) os << ":" << line;
  if (line && column) os << ":" << column;
  os << ": " << msg;
  return os.str();
}

struct Entry {
  std::size_t line;
  std::string key;                   // name, m, anchor, ...
  std::vector<std::size_t> indices;  // as written (1-based)
  std::size_t key_column;
  std::string value;
  std::size_t value_column;  // column of value[0]
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class Reader {
 public:
  Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) const {
    throw InputError(source_, line, column, msg);
  }

  Entry split(const std::string& raw, std::size_t line) const {
    std::string text = raw.substr(0, raw.find('#'));
    std::size_t pos = 0;
    while (pos < text.size() && is_space(text[pos])) ++pos;
    Entry e{line, {}, {}, pos + 1, {}, 0};
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    e.key = text.substr(start, pos - start);
    if (e.key.empty()) fail(line, start + 1, "expected a key");
    while (pos < text.size() && text[pos] == '[') {
      std::size_t close = text.find(']', pos);
      if (close == std::string::npos) fail(line, pos + 1, "unterminated index");
      std::string digits = text.substr(pos + 1, close - pos - 1);
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || p != digits.data() + digits.size() || v == 0)
        fail(line, pos + 2, "index must be a positive integer");
      e.indices.push_back(v);
      pos = close + 1;
    }
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size() || text[pos] != '=') fail(line, pos + 1, "expected '='");
    ++pos;
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = text.size();
    while (end > pos && is_space(text[end - 1])) --end;
    e.value = text.substr(pos, end - pos);
    e.value_column = pos + 1;
    if (e.value.empty()) fail(line, pos + 1, "missing value");
    return e;
  }

  std::size_t integer(const Entry& e) const {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
    if (ec != std::errc() || p != e.value.data() + e.value.size())
      fail(e.line, e.value_column, "expected a non-negative integer");
    return v;
  }

  Poly poly(const std::string& text, std::size_t m, std::size_t line, std::size_t column) const {
    try {
      return parse_poly(text, m, line, column - 1);
    } catch (const ParseError& err) {
      fail(err.line(), err.column(), err.message());
    }
  }

  std::vector<Poly> vector(const Entry& e, std::size_t n, std::size_t m) const {
    const std::string& v = e.value;
    if (v.front() != '[' || v.back() != ']') fail(e.line, e.value_column, "expected [p1, ..., pn]");
    std::vector<Poly> out;
    std::size_t depth = 0, start = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] == '(') ++depth;
      if (v[i] == ')' && depth) --depth;
      if ((v[i] == ',' && depth == 0) || i + 1 == v.size()) {
        std::string item = v.substr(start, i - start);
        std::size_t lead = 0;
        while (lead < item.size() && is_space(item[lead])) ++lead;
        if (lead == item.size()) fail(e.line, e.value_column + start, "empty vector entry");
        out.push_back(poly(item, m, e.line, e.value_column + start));
        start = i + 1;
      }
    }
    if (out.size() != n) {
      std::ostringstream os;
      os << e.key << " has " << out.size() << " entries, expected n = " << n;
      fail(e.line, e.value_column, os.str());
    }
    return out;
  }

  void check_indices(const Entry& e, std::size_t count, const std::vector<std::size_t>& bounds) const {
    if (e.indices.size() != count) {
      std::ostringstream os;
      os << e.key << " takes " << count << " indices";
      fail(e.line, e.key_column, os.str());
    }
    for (std::size_t i = 0; i < count; ++i)
      if (e.indices[i] > bounds[i]) {
        std::ostringstream os;
        os << "index " << e.indices[i] << " out of range 1.." << bounds[i];
        fail(e.line, e.key_column, os.str());
      }
  }

 private:
  std::string source_;
};

}  // namespace

InputError::InputError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(located(source, line, column, message)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(message) {}

TopConnection AlgebraFile::effective_top() const {
  if (top) return *top;
  if (right) return top_from_right(algebra, *right);
  if (left) return induced_top_connection(algebra, *left);
  return TopConnection::zero(algebra);
}

AlgebraFile parse_algebra_file(const std::string& text, const std::string& source) {
  Reader rd(source);
  std::vector<Entry> entries;
  {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string body = raw.substr(0, raw.find('#'));
      if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
      entries.push_back(rd.split(raw, line));
    }
  }

  std::string name;
  std::optional<std::size_t> m, n;
  std::set<std::string> seen;
  for (const auto& e : entries) {
    std::ostringstream full;
    full << e.key;
    for (auto i : e.indices) full << "[" << i << "]";
    if (!seen.insert(full.str()).second) rd.fail(e.line, e.key_column, "duplicate entry " + full.str());
    if (e.key == "name") name = e.value;
    if (e.key == "m") m = rd.integer(e);
    if (e.key == "n") n = rd.integer(e);
  }
  if (!m) rd.fail(0, 0, "missing 'm = <number of variables>'");
  if (!n) rd.fail(0, 0, "missing 'n = <rank>'");
  if (*n == 0 || *n > kMaxRank) rd.fail(0, 0, "rank n must be in 1.." + std::to_string(kMaxRank));
  if (name.empty()) name = source;

  std::vector<Derivation> anchor(*n, Derivation::zero(*m));
  std::vector<LElement> upper(*n * (*n - 1) / 2, LElement::zero(*n, *m));
  LeftConnectionOnL left(*n, *m);
  bool has_left = false;
  AlgebraFile out{source, LieRinehartAlgebra::abelian(name, *m, *n), std::nullopt, std::nullopt, std::nullopt, {}};

  for (const auto& e : entries) {
    if (e.key == "name" || e.key == "m" || e.key == "n") {
      if (!e.indices.empty()) rd.fail(e.line, e.key_column, e.key + " takes no indices");
    } else if (e.key == "anchor") {
      rd.check_indices(e, 2, {*n, *m});
      anchor[e.indices[0] - 1].components[e.indices[1] - 1] = rd.poly(e.value, *m, e.line, e.value_column);
    } else if (e.key == "c") {
      rd.check_indices(e, 3, {*n, *n, *n});
      const std::size_t i = e.indices[0] - 1, j = e.indices[1] - 1, k = e.indices[2] - 1;
      if (i >= j) rd.fail(e.line, e.key_column, "structure constants are given for i < j only");
      const std::size_t row = i * *n - i * (i + 1) / 2 + (j - i - 1);
      upper[row].coeffs[k] = rd.poly(e.value, *m, e.line, e.value_column);
    } else if (e.key == "Gamma") {
      rd.check_indices(e, 3, {*n, *n, *n});
      left.gamma(e.indices[0] - 1, e.indices[1] - 1, e.indices[2] - 1) = rd.poly(e.value, *m, e.line, e.value_column);
      has_left = true;
    } else if (e.key == "gamma") {
      out.top = TopConnection{rd.vector(e, *n, *m)};
    } else if (e.key == "r") {
      out.right = RightConnectionOnA{rd.vector(e, *n, *m)};
    } else if (e.key == "suite") {
      std::istringstream list(e.value);
      std::string item;
      while (std::getline(list, item, ',')) {
        auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.suites.push_back(item.substr(a, b - a + 1));
      }
    } else {
      rd.fail(e.line, e.key_column, "unknown key '" + e.key + "'");
    }
  }

  out.algebra = LieRinehartAlgebra(name, *m, *n, anchor, upper);
  if (has_left) out.left = left;
  auto violations = verify_axioms(out.algebra);
  if (!violations.empty()) rd.fail(0, 0, "axiom check failed: " + violations.front().describe());
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str(), path);
}

}  // namespace lrbv
