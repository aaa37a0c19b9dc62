#include "vects1/init_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace vects1 {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : original_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  std::vector<TrigTerm> parse() {
    if (s_.empty()) fail("empty expression");
    std::vector<TrigTerm> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(negative));
      first = false;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad trig expression '" + original_ + "': " + what);
  }

  std::string number_text() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (accept('.')) digits();
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < s_.size()) {
      const std::size_t save = pos_++;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        digits();
      else
        pos_ = save;
    }
    if (peek() == '/' && pos_ > start) {
      ++pos_;
      const std::size_t den = pos_;
      digits();
      if (pos_ == den) fail("missing denominator");
    }
    return s_.substr(start, pos_ - start);
  }

  TrigTerm term(bool negative) {
    TrigTerm t;
    const std::string num = number_text();
    const bool has_number = !num.empty();
    t.coef = has_number ? parse_rational(num) : Rational(1);
    if (negative) t.coef = -t.coef;
    if (has_number) accept('*');

    if (accept("cos")) {
      t.kind = TrigTerm::Kind::Cos;
    } else if (accept("sin")) {
      t.kind = TrigTerm::Kind::Sin;
    } else {
      if (!has_number) fail("expected a number, cos or sin");
      return t;
    }

    const bool paren = accept('(');
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    t.freq = pos_ > start ? std::stoi(s_.substr(start, pos_ - start)) : 1;
    if (pos_ > start) accept('*');
    const bool has_x = accept('x');
    if (pos_ > start && !has_x && paren) fail("expected 'x' after frequency");
    if (paren && !accept(')')) fail("missing ')'");
    return t;
  }

  std::string original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<TrigTerm> parse_trig_expression(const std::string& text) {
  return Parser(text).parse();
}

template <class T>
FourierSeries<T> build_series(const std::vector<TrigTerm>& terms) {
  FourierSeries<T> out = FourierSeries<T>::zero();
  for (const auto& t : terms) {
    T c;
    if constexpr (ScalarTraits<T>::exact)
      c = t.coef;
    else
      c = t.coef.template convert_to<double>();
    switch (t.kind) {
      case TrigTerm::Kind::Constant: out += FourierSeries<T>::constant(c); break;
      case TrigTerm::Kind::Cos: out += FourierSeries<T>::cos_mode(t.freq, c); break;
      case TrigTerm::Kind::Sin: out += FourierSeries<T>::sin_mode(t.freq, c); break;
    }
  }
  return out;
}

template FourierSeries<double> build_series<double>(const std::vector<TrigTerm>&);
template FourierSeries<Rational> build_series<Rational>(const std::vector<TrigTerm>&);

}  // namespace vects1
