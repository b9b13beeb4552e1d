#include "knotspec.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbk::cli {

namespace {

std::vector<long long> parse_ints(std::string_view body, std::size_t expected) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item =
        body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad integer '" + std::string(item) + "' in knot spec");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument("knot spec needs " + std::to_string(expected) +
                                " integers, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

HandlebodyKnot parse_knot(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);

  if (compact.size() < 2 || compact[1] != ':')
    throw std::invalid_argument("knot spec must be R:l,m,n,p or L:m,n,p");
  std::string_view body(compact.data() + 2, compact.size() - 2);

  switch (compact[0]) {
    case 'R':
    case 'r': {
      auto v = parse_ints(body, 4);
      return HandlebodyKnot(Side::Right, EMParams{v[0], v[1], v[2], v[3]});
    }
    case 'L':
    case 'l': {
      auto v = parse_ints(body, 3);
      return HandlebodyKnot::left(v[0], v[1], v[2]);
    }
    default:
      throw std::invalid_argument("knot spec must start with R: or L:");
  }
}

}  // namespace hbk::cli
