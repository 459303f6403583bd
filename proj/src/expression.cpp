#include "clifun/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace clifun {

namespace {

class Parser {
 public:
  Parser(const Signature& sig, std::string_view s) : sig_(sig), s_(s) {}

  MV run() {
    MV out(sig_);
    skip();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(out, sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  static bool digit(char c) { return c >= '0' && c <= '9'; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void term(MV& out, double sign) {
    double coef = 1.0;
    bool have_number = false;
    if (digit(peek()) || (peek() == '.' && digit(peek(1)))) {
      coef = number();
      have_number = true;
      skip();
    }
    bool star = false;
    if (peek() == '*') {
      if (!have_number) fail("'*' needs a coefficient");
      star = true;
      ++pos_;
      skip();
    }
    if (peek() == 'e') {
      const SignedBlade b = blade();
      out[b.blade] += sign * coef * b.sign;
      return;
    }
    if (star) fail("expected a blade after '*'");
    if (!have_number) fail("expected a number or a blade");
    out[0u] += sign * coef;
  }

  double number() {
    const std::size_t start = pos_;
    while (digit(peek())) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (digit(peek())) ++pos_;
    }
    const bool signed_e =
        peek() == 'e' && (peek(1) == '+' || peek(1) == '-') && digit(peek(2));
    if (peek() == 'E' || signed_e) {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!digit(peek())) fail("malformed exponent");
      while (digit(peek())) ++pos_;
    }
    double v = 0.0;
    const char* first = s_.data() + start;
    const char* last = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      pos_ = start;
      fail("malformed number");
    }
    return v;
  }

  int index() {
    const std::size_t start = pos_;
    while (digit(peek())) ++pos_;
    if (start == pos_) fail("expected a generator index");
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("generator index out of range");
    }
    return v;
  }

  SignedBlade blade() {
    const std::size_t start = pos_;
    ++pos_;  // 'e'
    std::vector<int> idx;
    if (peek() == '[') {
      ++pos_;
      skip();
      idx.push_back(index());
      skip();
      while (peek() == ',') {
        ++pos_;
        skip();
        idx.push_back(index());
        skip();
      }
      if (peek() != ']') fail("expected ']'");
      ++pos_;
    } else {
      if (!digit(peek())) fail("expected generator digits or '[' after 'e'");
      if (sig_.n() > 9) fail("use e[i,j,...] blades when n > 9");
      while (digit(peek())) idx.push_back(s_[pos_++] - '0');
    }
    try {
      return blade_from_indices(sig_, idx);
    } catch (const InvalidArgument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  const Signature& sig_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MV parse_multivector(const Signature& sig, std::string_view text) {
  return Parser(sig, text).run();
}

std::string format_number(double x, int digits) {
  char buf[64];
  const auto [ptr, ec] =
      digits >= 17 ? std::to_chars(buf, buf + sizeof buf, x)
                   : std::to_chars(buf, buf + sizeof buf, x,
                                   std::chars_format::general, digits);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_multivector(const MV& A, int digits) {
  const int n = A.signature().n();
  std::string out;
  for (std::uint32_t m : grade_lex_order(n)) {
    const double v = A[m];
    if (v == 0.0) continue;
    const bool neg = std::signbit(v);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const double a = std::abs(v);
    if (m == 0) {
      out += format_number(a, digits);
    } else {
      if (a != 1.0) out += format_number(a, digits) + "*";
      out += blade_name(Blade{m}, n);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace clifun
