#include "secnet/rational.hpp"

#include <cctype>

namespace secnet {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty number");

  auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rat value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw InputError("bad rational '" + text + "'");
    value = Rat(mpz_class(num), mpz_class(den));
    if (value.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)))
      throw InputError("bad decimal '" + text + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac)), scale);
  } else {
    if (!digits_only(body)) throw InputError("bad number '" + text + "'");
    value = Rat(mpz_class(body));
  }
  value.canonicalize();
  return negative ? Rat(-value) : value;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace secnet
