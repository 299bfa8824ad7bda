#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "addbase/arith.hpp"
#include "addbase/subset.hpp"

namespace addbase {

/// (Z/p)^d, written F(p,d).
inline GroupPtr make_elementary(std::int64_t p, std::int64_t d, std::uint64_t cap = kDefaultOrderCap) {
  if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))) || d < 1)
    fail(ErrorCode::BadParameters, "F(p,d) needs prime p and d >= 1");
  return FiniteAbelianGroup::product(std::vector<std::int64_t>(static_cast<std::size_t>(d), p),
                                     "F(" + std::to_string(p) + "," + std::to_string(d) + ")", LabelStyle::Plain,
                                     cap);
}

/// F_p[t] truncated to degree < N; coordinate i is the coefficient of t^i.
inline GroupPtr make_poly(std::int64_t p, std::int64_t n, std::uint64_t cap = kDefaultOrderCap) {
  if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))) || n < 1)
    fail(ErrorCode::BadParameters, "poly(p,N) needs prime p and N >= 1");
  return FiniteAbelianGroup::product(std::vector<std::int64_t>(static_cast<std::size_t>(n), p),
                                     "poly(" + std::to_string(p) + "," + std::to_string(n) + ")",
                                     LabelStyle::Polynomial, cap);
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::int64_t parse_int(std::string_view tok) {
  const std::string t = trim(tok);
  if (t.empty()) fail(ErrorCode::ParseError, "expected an integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not an integer: '" + t + "'");
  }
  if (pos != t.size()) fail(ErrorCode::ParseError, "not an integer: '" + t + "'");
  return v;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view body) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto end = comma == std::string_view::npos ? body.size() : comma;
    out.push_back(parse_int(body.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses `C(n1,...)`, `F(p,d)` or `poly(p,N)`.
inline GroupPtr parse_group_spec(std::string_view spec, std::uint64_t cap = kDefaultOrderCap) {
  const std::string s = detail::trim(spec);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') fail(ErrorCode::ParseError, "bad group spec '" + s + "'");
  const std::string head = detail::trim(std::string_view(s).substr(0, open));
  const auto args = detail::parse_int_list(std::string_view(s).substr(open + 1, s.size() - open - 2));
  if (head == "C") {
    for (auto n : args)
      if (n < 2) fail(ErrorCode::ParseError, "cyclic modulus must be >= 2 in '" + s + "'");
    return make_group(args, cap);
  }
  if (head == "F" || head == "poly") {
    if (args.size() != 2) fail(ErrorCode::ParseError, head + "(p,d) takes two arguments");
    if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(args[0], 0))) || args[1] < 1)
      fail(ErrorCode::ParseError, "'" + s + "' needs a prime p and a positive count");
    return head == "F" ? make_elementary(args[0], args[1], cap) : make_poly(args[0], args[1], cap);
  }
  fail(ErrorCode::ParseError, "unknown group kind '" + head + "'");
}

/// Parses a set literal: comma-separated flat indices and/or coordinate tuples,
/// e.g. `2,3` or `(1,0),(0,1),(1,1)`. An empty literal is the empty set.
inline GroupSubset parse_set_literal(const GroupPtr& group, std::string_view literal) {
  GroupSubset out(group);
  const std::string s = detail::trim(literal);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (s == "{}" || s.empty()) return out;
  while (i < s.size()) {
    skip_ws();
    if (s[i] == '(') {
      const auto close = s.find(')', i);
      if (close == std::string::npos) fail(ErrorCode::ParseError, "unbalanced '(' in set literal");
      const auto coords = detail::parse_int_list(std::string_view(s).substr(i + 1, close - i - 1));
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] < 0 || coords[k] >= group->moduli()[std::min(k, group->rank() - 1)])
          fail(ErrorCode::ParseError, "coordinate out of range in '" + s.substr(i, close - i + 1) + "'");
      out.insert(group->index(coords));
      i = close + 1;
    } else {
      auto comma = s.find(',', i);
      if (comma == std::string::npos) comma = s.size();
      const auto v = detail::parse_int(std::string_view(s).substr(i, comma - i));
      if (v < 0 || static_cast<std::uint64_t>(v) >= group->order())
        fail(ErrorCode::ParseError, "element index " + std::to_string(v) + " out of range for " + group->spec());
      out.insert(static_cast<Elem>(v));
      i = comma;
    }
    skip_ws();
    if (i < s.size()) {
      if (s[i] != ',') fail(ErrorCode::ParseError, "expected ',' in set literal at position " + std::to_string(i));
      ++i;
    }
  }
  return out;
}

}  // namespace addbase
