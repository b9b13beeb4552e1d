#include "hbk/tangle.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hbk {

ProjRat fraction(const RationalTangle& t) { return cf_eval(t.coeffs()); }

bool equivalent(const RationalTangle& a, const RationalTangle& b) {
  return fraction(a) == fraction(b);
}

RationalTangle rewrite_two_twist(const RationalTangle& t, std::size_t index, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (index == 0 || index + 1 >= t.size())
    throw std::invalid_argument("two-twist rewrite needs an interior position");
  std::vector<long long> c = t.coeffs();
  if (c[index] != 2 * sign)
    throw std::invalid_argument("coefficient at rewrite position is not " +
                                std::to_string(2 * sign));
  c[index - 1] += sign;
  c[index] = -c[index];
  c[index + 1] += sign;
  return RationalTangle(std::move(c));
}

EmTangles em_tangles(long long l, long long m, long long n, long long p) {
  return EmTangles{
      RationalTangle({l}),
      RationalTangle({p, -2, m, -l}),
      RationalTangle({-n, 2, m - 1, 2, 0}),
  };
}

RationalTangle em_tangle_b_prime(long long m, long long p) {
  return RationalTangle({p, -2, m, 0});
}

RationalTangle em_tangle_c_prime(long long m, long long n) {
  return RationalTangle({n, -2, 1 - m, 0});
}

RationalTangle parse_tangle(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);

  if (compact.size() < 3 || (compact[0] != 'R' && compact[0] != 'r') || compact[1] != '(' ||
      compact.back() != ')')
    throw std::invalid_argument("tangle must have the form R(a1,a2,...)");

  std::string_view body(compact.data() + 2, compact.size() - 3);
  if (body.empty()) return RationalTangle();

  std::vector<long long> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view item = body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                                             : comma - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad tangle coefficient '" + std::string(item) + "'");
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RationalTangle(std::move(coeffs));
}

std::string to_string(const RationalTangle& t) {
  std::string out = "R(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.coeffs()[i]);
  }
  out += ")";
  return out;
}

}  // namespace hbk
