#include "coverlab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "coverlab/error.hpp"

namespace coverlab {

Rat rat(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Exact conversion of a decimal literal such as "-12.345e-2".
Rat parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part, exp_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_neg = s[pos] == '-';
      ++pos;
    }
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp_part += s[pos++];
    if (exp_part.empty()) throw ValidationError("malformed exponent in rational: " + text);
    exp10 = std::strtol(exp_part.c_str(), nullptr, 10);
    if (exp_neg) exp10 = -exp10;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty()))
    throw ValidationError("cannot parse rational: " + text);

  Int numerator(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    numerator *= 10;
    numerator += c - '0';
  }
  Int denominator = 1;
  long frac_digits = static_cast<long>(frac_part.size());
  long shift = exp10 - frac_digits;
  Int ten = 10;
  if (shift >= 0) {
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    numerator *= scale;
  } else {
    mpz_pow_ui(denominator.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rat q(numerator, denominator);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ValidationError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::string num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!all_digits(num_digits) || !all_digits(den))
      throw ValidationError("cannot parse rational: " + text);
    Rat q(s);
    if (q.get_den() == 0) throw ValidationError("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    return parse_decimal(s);
  }
  std::string digits = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
  if (!all_digits(digits)) throw ValidationError("cannot parse rational: " + text);
  Rat q(s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double rat_double(const Rat& q) { return q.get_d(); }

Int int_pow(unsigned long base, unsigned exp) {
  Int b(static_cast<unsigned long>(base));
  Int out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

}  // namespace coverlab
