#include "ballgeo/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty number");
  std::string text(s);
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal, kept exact: "-0.125" -> -125/1000
    bool negative = text[0] == '-';
    std::string digits;
    std::size_t decimals = 0;
    bool after = false;
    for (std::size_t i = (negative || text[0] == '+') ? 1 : 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.') {
        if (after) throw ParseError("malformed decimal '" + text + "'");
        after = true;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("malformed decimal '" + text + "'");
      }
      digits.push_back(c);
      if (after) ++decimals;
    }
    if (digits.empty()) throw ParseError("malformed decimal '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
    mpq_class q(num, den);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw ParseError("malformed rational '" + text + "'");
  }
  if (text[0] == '+') text.erase(0, 1);
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// One additive term: rational, rational*sqrt2, sqrt2, sqrt2/int.
Exact parse_term(std::string_view term) {
  constexpr std::string_view kRoot = "sqrt2";
  auto pos = term.find(kRoot);
  if (pos == std::string_view::npos) return Exact(parse_rational(term));
  std::string_view before = term.substr(0, pos);
  std::string_view after = term.substr(pos + kRoot.size());
  mpq_class coeff = 1;
  if (!before.empty()) {
    if (before.back() != '*') throw ParseError("expected '*' before sqrt2");
    before.remove_suffix(1);
    coeff = parse_rational(before);
  }
  if (!after.empty()) {
    if (after.front() != '/') throw ParseError("unexpected text after sqrt2");
    after.remove_prefix(1);
    mpq_class den = parse_rational(after);
    if (den == 0) throw ParseError("division by zero");
    coeff /= den;
  }
  return Exact(0, coeff);
}

}  // namespace

Exact::Exact(mpq_class rational, mpq_class sqrt2_coeff)
    : rational_(std::move(rational)), sqrt2_(std::move(sqrt2_coeff)) {
  rational_.canonicalize();
  sqrt2_.canonicalize();
}

Exact Exact::ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Exact(mpq_class(num, den));
}

Exact Exact::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty exact number");
  Exact total;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= compact.size(); ++i) {
    bool boundary = i == compact.size() ||
                    ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '*' &&
                     compact[i - 1] != '/');
    if (!boundary) continue;
    std::string_view term(compact.data() + start, i - start);
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) throw ParseError("dangling sign in '" + compact + "'");
    Exact value = parse_term(term);
    total += negative ? -value : value;
    start = i;
  }
  return total;
}

int Exact::sign() const {
  int a = sgn(rational_);
  int b = sgn(sqrt2_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // opposite signs: compare a^2 against 2 b^2 (never equal for rationals)
  mpq_class lhs = rational_ * rational_;
  mpq_class rhs = 2 * sqrt2_ * sqrt2_;
  return lhs > rhs ? a : b;
}

double Exact::to_double() const { return rational_.get_d() + sqrt2_.get_d() * M_SQRT2; }

std::string Exact::str() const {
  if (is_rational()) return rational_.get_str();
  std::ostringstream out;
  if (rational_ != 0) {
    out << rational_.get_str();
    out << (sgn(sqrt2_) > 0 ? "+" : "-");
    mpq_class mag = abs(sqrt2_);
    if (mag != 1) out << mag.get_str() << "*";
  } else if (sqrt2_ == -1) {
    out << "-";
  } else if (sqrt2_ != 1) {
    out << sqrt2_.get_str() << "*";
  }
  out << "sqrt2";
  return out.str();
}

Exact& Exact::operator+=(const Exact& o) {
  rational_ += o.rational_;
  sqrt2_ += o.sqrt2_;
  return *this;
}

Exact& Exact::operator-=(const Exact& o) {
  rational_ -= o.rational_;
  sqrt2_ -= o.sqrt2_;
  return *this;
}

Exact& Exact::operator*=(const Exact& o) {
  mpq_class r = rational_ * o.rational_ + 2 * sqrt2_ * o.sqrt2_;
  mpq_class s = rational_ * o.sqrt2_ + sqrt2_ * o.rational_;
  rational_ = std::move(r);
  sqrt2_ = std::move(s);
  return *this;
}

std::strong_ordering operator<=>(const Exact& a, const Exact& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ballgeo
