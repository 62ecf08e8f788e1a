#include "hvir/grammar.hpp"

#include "hvir/basis.hpp"

#include <cctype>

namespace hvir {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  bool done() const { return i_ >= s_.size(); }
  std::size_t pos() const { return i_; }
  char peek() const { return done() ? '\0' : s_[i_]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i_);
  }
  long integer() {
    const std::size_t start = i_;
    bool negative = accept('-');
    if (!negative) accept('+');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer", start);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
    }
    return negative ? -v : v;
  }
  std::string label() {
    const std::size_t start = i_;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    if (!head(peek())) throw ParseError("expected a point label", start);
    while (head(peek()) || std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return s_.substr(start, i_ - start);
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

PBWVector parse_field(Cursor& cur) {
  const std::size_t start = cur.pos();
  if (cur.accept('1')) return PBWVector::vacuum();
  if (cur.accept('L')) {
    cur.expect('[');
    ModeWord word;
    do {
      word.push_back(static_cast<int>(cur.integer()));
    } while (cur.accept(','));
    cur.expect(']');
    return normal_order({{word, CPoly(1)}});
  }
  int derivatives = 0;
  if (cur.accept('d')) {
    derivatives = 1;
    if (cur.accept('^')) {
      const std::size_t at = cur.pos();
      derivatives = static_cast<int>(cur.integer());
      if (derivatives < 0) throw ParseError("derivative order must be >= 0", at);
    }
  }
  if (!cur.accept('T')) throw ParseError("expected 'T[k,m]', 'L[...]' or '1'", start);
  cur.expect('[');
  const std::size_t k_at = cur.pos();
  const long k = cur.integer();
  cur.expect(',');
  const std::size_t m_at = cur.pos();
  const long m = cur.integer();
  cur.expect(']');
  if (k < 2) throw ParseError("k must be >= 2", k_at);
  if (m < 1) throw ParseError("m must be >= 1", m_at);
  return field_vector({static_cast<int>(k), static_cast<int>(m), derivatives});
}

}  // namespace

std::vector<Insertion> parse_insertions(const std::string& text) {
  Cursor cur(text);
  std::vector<Insertion> out;
  cur.skip_space();
  while (!cur.done()) {
    Insertion ins;
    ins.state = parse_field(cur);
    cur.expect('@');
    ins.point = cur.label();
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
      throw ParseError("expected whitespace between insertions", cur.pos());
    out.push_back(std::move(ins));
    cur.skip_space();
  }
  return out;
}

PBWVector parse_field_vector(const std::string& text) {
  Cursor cur(text);
  cur.skip_space();
  PBWVector v = parse_field(cur);
  cur.skip_space();
  if (!cur.done()) throw ParseError("trailing characters", cur.pos());
  return v;
}

Rational parse_rational(const std::string& text) {
  Cursor cur(text);
  cur.skip_space();
  const long num = cur.integer();
  long den = 1;
  if (cur.accept('/')) {
    const std::size_t at = cur.pos();
    den = cur.integer();
    if (den == 0) throw ParseError("zero denominator", at);
  }
  cur.skip_space();
  if (!cur.done()) throw ParseError("trailing characters", cur.pos());
  return Rational(num, den);
}

}  // namespace hvir
