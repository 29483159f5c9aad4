#include "cmphi/double_double.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace cmphi {
namespace {

DD pow10(int k) {
  DD r(1.0);
  DD base(10.0);
  int n = k < 0 ? -k : k;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return k < 0 ? DD(1.0) / r : r;
}

}  // namespace

DD dd_from_string(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  DD mantissa(0.0);
  int scale = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !after_point) {
      after_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mul_d(mantissa, 10.0) + DD(static_cast<double>(c - '0'));
      if (after_point) --scale;
      any_digit = true;
    } else if (c == ' ' || c == '_') {
      continue;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("dd_from_string: no digits in '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    scale += std::stoi(std::string(text.substr(i + 1)));
  }
  DD value = scale >= 0 ? mantissa * pow10(scale) : mantissa / pow10(-scale);
  return negative ? -value : value;
}

std::string to_string(const DD& a, int digits) {
  if (!isfinite(a)) return std::isnan(a.hi) ? "nan" : (a.hi > 0 ? "inf" : "-inf");
  if (a.hi == 0.0) return "0";
  if (digits < 1) digits = 1;
  if (digits > 34) digits = 34;

  DD r = abs(a);
  int e = static_cast<int>(std::floor(std::log10(r.hi)));
  r = e >= 0 ? r / pow10(e) : r * pow10(-e);
  if (r.hi >= 10.0) {
    r /= DD(10.0);
    ++e;
  } else if (r.hi < 1.0) {
    r = mul_d(r, 10.0);
    --e;
  }

  std::vector<int> d(static_cast<std::size_t>(digits) + 1);
  for (auto& digit : d) {
    int v = static_cast<int>(std::floor(r.hi));
    if (v < 0) v = 0;
    if (v > 9) v = 9;
    digit = v;
    r = mul_d(r - DD(static_cast<double>(v)), 10.0);
  }
  // Round half up on the guard digit and propagate carries.
  if (d.back() >= 5) {
    int k = digits - 1;
    while (k >= 0 && ++d[static_cast<std::size_t>(k)] == 10) d[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) {
      d.insert(d.begin(), 1);
      ++e;
    }
  }
  d.resize(static_cast<std::size_t>(digits));

  std::string out = a.hi < 0 ? "-" : "";
  if (e >= -5 && e < digits) {
    if (e < 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      for (int v : d) out += static_cast<char>('0' + v);
    } else {
      for (int k = 0; k < digits; ++k) {
        out += static_cast<char>('0' + d[static_cast<std::size_t>(k)]);
        if (k == e && k + 1 < digits) out += '.';
      }
    }
  } else {
    out += static_cast<char>('0' + d[0]);
    out += '.';
    for (int k = 1; k < digits; ++k) out += static_cast<char>('0' + d[static_cast<std::size_t>(k)]);
    out += 'e';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace cmphi
