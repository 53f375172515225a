#ifndef U6N_GROUP_HPP
#define U6N_GROUP_HPP

// Arithmetic in U_6n = < a, b | a^{2n} = b^3 = 1, bab = a > on canonical
// words a^u b^v with 0 <= u < 2n and 0 <= v < 3.

#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace u6n {

/// Default bound on 6n for anything that materializes the whole group.
inline constexpr std::int64_t default_oracle_limit = 300;

/// Thrown when an exhaustive computation is requested for a group larger
/// than the configured bound; callers should fall back to closed forms.
class OracleLimitExceeded : public std::runtime_error {
 public:
  OracleLimitExceeded(std::int64_t order, std::int64_t limit)
      : std::runtime_error("group order " + std::to_string(order) +
                           " exceeds oracle limit " + std::to_string(limit)),
        order_(order),
        limit_(limit) {}

  std::int64_t order() const noexcept { return order_; }
  std::int64_t limit() const noexcept { return limit_; }

 private:
  std::int64_t order_;
  std::int64_t limit_;
};

class GroupParams {
 public:
  explicit GroupParams(std::int64_t n) : n_(n) {
    if (n < 1) {
      throw std::invalid_argument("U_6n requires n >= 1, got " +
                                  std::to_string(n));
    }
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t two_n() const noexcept { return 2 * n_; }
  std::int64_t order() const noexcept { return 6 * n_; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  std::int64_t n_;
};

struct Element {
  std::int64_t a_exp = 0;
  int b_exp = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

namespace detail {

inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// b^v a^u = a^u b^{v * 2^u mod 3}; 2^u mod 3 only depends on the parity of u.
inline int twist(int v, std::int64_t u) {
  return (u % 2 == 0) ? v : (2 * v) % 3;
}

}  // namespace detail

inline Element identity(const GroupParams&) { return Element{0, 0}; }

inline bool is_canonical(const GroupParams& p, const Element& x) {
  return x.a_exp >= 0 && x.a_exp < p.two_n() && x.b_exp >= 0 && x.b_exp < 3;
}

/// Reduces arbitrary exponents to the canonical representative.
inline Element make_element(const GroupParams& p, std::int64_t u,
                            std::int64_t v) {
  return Element{detail::mod(u, p.two_n()), static_cast<int>(detail::mod(v, 3))};
}

inline Element multiply(const GroupParams& p, const Element& x,
                        const Element& y) {
  // a^u1 b^v1 a^u2 b^v2 = a^{u1+u2} b^{v1 * 2^u2 + v2}
  return Element{(x.a_exp + y.a_exp) % p.two_n(),
                 (detail::twist(x.b_exp, y.a_exp) + y.b_exp) % 3};
}

inline Element inverse(const GroupParams& p, const Element& x) {
  // b^{3-v} a^{2n-u}
  const Element b_part{0, (3 - x.b_exp) % 3};
  const Element a_part{(p.two_n() - x.a_exp) % p.two_n(), 0};
  return multiply(p, b_part, a_part);
}

/// Closed-form power of a canonical element; x^0 is the identity.
inline Element power(const GroupParams& p, const Element& x, std::uint64_t k) {
  if (k == 0) return identity(p);
  const auto two_n = static_cast<std::uint64_t>(p.two_n());
  const auto u = static_cast<std::uint64_t>(x.a_exp);
  const auto a_exp = static_cast<std::int64_t>((u * (k % two_n)) % two_n);
  if (x.b_exp == 0) return Element{a_exp, 0};
  if (u % 2 == 0) {
    return Element{a_exp, static_cast<int>((x.b_exp * (k % 3)) % 3)};
  }
  if (k % 2 == 0) return Element{a_exp, 0};
  return Element{a_exp, x.b_exp};
}

inline Element conjugate(const GroupParams& p, const Element& h,
                         const Element& g) {
  return multiply(p, multiply(p, inverse(p, g), h), g);
}

/// Dense index of a canonical element, matching all_elements() order.
inline std::size_t element_index(const Element& x) {
  return static_cast<std::size_t>(x.a_exp) * 3 + static_cast<std::size_t>(x.b_exp);
}

inline Element element_at(std::size_t index) {
  return Element{static_cast<std::int64_t>(index / 3),
                 static_cast<int>(index % 3)};
}

inline std::vector<Element> all_elements(const GroupParams& p) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(p.order()));
  for (std::int64_t u = 0; u < p.two_n(); ++u) {
    for (int v = 0; v < 3; ++v) out.push_back(Element{u, v});
  }
  return out;
}

/// Full multiplication table indexed by element_index().
class CayleyTable {
 public:
  CayleyTable(const GroupParams& p, std::int64_t limit = default_oracle_limit)
      : params_(p), size_(static_cast<std::size_t>(p.order())) {
    if (p.order() > limit) throw OracleLimitExceeded(p.order(), limit);
    table_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        table_[i * size_ + j] = static_cast<std::uint32_t>(
            element_index(multiply(p, element_at(i), element_at(j))));
      }
    }
  }

  const GroupParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t product(std::size_t i, std::size_t j) const {
    return table_[i * size_ + j];
  }

  Element operator()(const Element& x, const Element& y) const {
    return element_at(product(element_index(x), element_index(y)));
  }

 private:
  GroupParams params_;
  std::size_t size_;
  std::vector<std::uint32_t> table_;
};

inline CayleyTable cayley_table(const GroupParams& p,
                                std::int64_t limit = default_oracle_limit) {
  return CayleyTable(p, limit);
}

// Text form: "e", "a", "a^3", "b^2", "a^3 b".
inline std::string to_string(const Element& x) {
  if (x.a_exp == 0 && x.b_exp == 0) return "e";
  std::string out;
  if (x.a_exp == 1) {
    out = "a";
  } else if (x.a_exp > 1) {
    out = "a^" + std::to_string(x.a_exp);
  }
  if (x.b_exp != 0) {
    if (!out.empty()) out += ' ';
    out += (x.b_exp == 1) ? "b" : "b^2";
  }
  return out;
}

/// Parses the text form. Exponents outside the canonical range (e.g. the
/// 1..2n convention) are reduced, and letters may repeat in a^..b^.. order.
inline Element parse_element(const GroupParams& p, std::string_view text) {
  auto fail = [&]() -> Element {
    throw std::invalid_argument("cannot parse group element '" +
                                std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) return fail();
    return identity(p);
  }
  std::int64_t u = 0;
  std::int64_t v = 0;
  bool seen_b = false;
  bool any = false;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    const char letter = text[pos];
    if (letter != 'a' && letter != 'b') return fail();
    if (letter == 'a' && seen_b) return fail();
    ++pos;
    skip_ws();
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      bool braced = pos < text.size() && text[pos] == '{';
      if (braced) ++pos;
      const std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos || pos - start > 18) return fail();
      exponent = std::stoll(std::string(text.substr(start, pos - start)));
      if (braced) {
        if (pos == text.size() || text[pos] != '}') return fail();
        ++pos;
      }
    }
    if (letter == 'a') {
      u = detail::mod(u + exponent, p.two_n());
    } else {
      seen_b = true;
      v = (v + exponent) % 3;
    }
    any = true;
  }
  if (!any) return fail();
  return make_element(p, u, v);
}

}  // namespace u6n

#endif  // U6N_GROUP_HPP
