#include "pwl/rational.hpp"

#include <algorithm>
#include <cctype>

namespace pwl {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer pow10(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw Error(Errc::ParseError, "empty numeric literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      neg = num[0] == '-';
      num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(Errc::ParseError, "bad fraction literal: " + raw);
    }
    Integer n(num), d(den);
    if (d == 0) throw Error(Errc::ParseError, "zero denominator: " + raw);
    Rational q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return q;
  }

  bool neg = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part, exp_part;
  bool exp_neg = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int_part.push_back(text[pos++]);
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac_part.push_back(text[pos++]);
    }
  }
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exp_part.push_back(text[pos++]);
    }
    if (exp_part.empty()) throw Error(Errc::ParseError, "bad exponent: " + raw);
  }
  if (pos != text.size() || (int_part.empty() && frac_part.empty())) {
    throw Error(Errc::ParseError, "bad numeric literal: " + raw);
  }

  Integer mantissa(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    mantissa = mantissa * 10 + (c - '0');
  }
  Rational q(mantissa, pow10(frac_part.size()));
  q.canonicalize();
  if (!exp_part.empty()) {
    unsigned long e = std::stoul(exp_part);
    Rational scale(pow10(e), 1);
    q = exp_neg ? Rational(q / scale) : Rational(q * scale);
    q.canonicalize();
  }
  if (neg) q = -q;
  return q;
}

DecimalString decimal_string(const Rational& q) {
  DecimalString out;
  if (q == 0) {
    out.text = "0";
    return out;
  }
  Integer num = q.get_num();
  Integer den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;

  // Strip factors of 2 and 5 from the denominator.
  Integer rest = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++fives;
  }
  unsigned long frac_digits = std::max(twos, fives);
  if (rest == 1 && frac_digits <= 18) {
    Integer scaled = num * pow10(frac_digits) / den;
    std::string digits = scaled.get_str();
    std::string text;
    if (frac_digits == 0) {
      text = digits;
    } else {
      if (digits.size() <= frac_digits) {
        digits.insert(digits.begin(), frac_digits + 1 - digits.size(), '0');
      }
      text = digits.substr(0, digits.size() - frac_digits) + "." +
             digits.substr(digits.size() - frac_digits);
      while (text.back() == '0') text.pop_back();
      if (text.back() == '.') text.pop_back();
    }
    out.text = neg ? "-" + text : text;
    return out;
  }

  // Non-terminating: round to 17 significant digits, plain decimal notation.
  out.exact = false;
  constexpr int kSig = 17;
  // exponent e with 10^e <= |q| < 10^{e+1}
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  Rational absq(num, den);
  absq.canonicalize();
  auto pow10r = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k >= 0 ? k : -k));
    return k >= 0 ? Rational(p, 1) : Rational(1, p);
  };
  while (absq >= pow10r(e + 1)) ++e;
  while (absq < pow10r(e)) --e;
  // m = round(|q| * 10^{kSig-1-e}) has exactly kSig digits.
  Rational shifted = absq * pow10r(kSig - 1 - e);
  Integer m = floor_int(shifted + Rational(1, 2));
  std::string digits = m.get_str();
  if (static_cast<long>(digits.size()) > kSig) {
    // Rounding bumped to the next power of ten.
    digits = digits.substr(0, kSig);
    ++e;
  }
  std::string text;
  if (e >= 0) {
    if (e + 1 >= static_cast<long>(digits.size())) {
      text = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      text = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else {
    text = "0." + std::string(-e - 1, '0') + digits;
  }
  while (text.find('.') != std::string::npos && text.back() == '0') text.pop_back();
  if (!text.empty() && text.back() == '.') text.pop_back();
  out.text = neg ? "-" + text : text;
  return out;
}

std::string rational_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int compare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

bool lex_less(const RatVec& a, const RatVec& b) { return compare(a, b) < 0; }

}  // namespace pwl
