#pragma once

// Plain-text notation for crystal elements and tensor words.
//
//   element        1224        sorted tableau word; letters > 9 as "(12)"
//                  [1,2,0,1]   multiplicity vector (also "(1,2,0,1)")
//   affine element 1224:5      tableau with mode; modes may be negative
//   word           111*22*3    factors joined by '*'
//
// The rank is never inferred from the text; callers pass it explicitly.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "kkr/crystal.hpp"
#include "kkr/error.hpp"

namespace kkr {

inline std::string format_letter(Letter c) {
  if (c >= 1 && c <= 9) return std::string(1, static_cast<char>('0' + c));
  return "(" + std::to_string(c) + ")";
}

inline std::string to_string(const CrystalElement& x) {
  std::string s;
  for (Letter c : x.letters()) s += format_letter(c);
  return s;
}

inline std::string to_string(const AffineElement& x) {
  return to_string(x.element) + ":" + std::to_string(x.mode);
}

template <class Factor>
std::string to_string(const BasicTensorWord<Factor>& w,
                      std::string_view separator = "*") {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += separator;
    s += to_string(w[i]);
  }
  return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw parse_error("expected an integer " + std::string(what) + ", got '" +
                      std::string(s) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace detail

/// Parses a string of letters: digits 1-9 or parenthesized integers.
inline std::vector<Letter> parse_letters(std::string_view s) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch >= '1' && ch <= '9') {
      out.push_back(ch - '0');
      ++i;
    } else if (ch == '(') {
      const auto close = s.find(')', i);
      if (close == std::string_view::npos)
        throw parse_error("unterminated '(' in '" + std::string(s) + "'");
      out.push_back(detail::parse_int(s.substr(i + 1, close - i - 1), "letter"));
      i = close + 1;
    } else {
      throw parse_error("unexpected character '" + std::string(1, ch) +
                        "' in '" + std::string(s) + "'");
    }
  }
  return out;
}

inline CrystalElement parse_element(std::string_view text, int rank,
                                    int restriction = 0) {
  const auto s = detail::trim(text);
  if (s.empty()) throw parse_error("empty crystal element");
  const bool vector_form =
      s.front() == '[' ||
      (s.front() == '(' && s.find(',') != std::string_view::npos);
  try {
    if (vector_form) {
      const char close = s.front() == '[' ? ']' : ')';
      if (s.back() != close)
        throw parse_error("unterminated multiplicity vector '" +
                          std::string(s) + "'");
      std::vector<int> mult;
      for (auto part : detail::split(s.substr(1, s.size() - 2), ','))
        mult.push_back(detail::parse_int(part, "multiplicity"));
      return CrystalElement(rank, std::move(mult), restriction);
    }
    const auto letters = parse_letters(s);
    return CrystalElement::from_letters(rank, letters, restriction);
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error("'" + std::string(s) + "': " + e.what());
  }
}

inline AffineElement parse_affine_element(std::string_view text, int rank,
                                          int restriction = 0) {
  const auto s = detail::trim(text);
  const auto colon = s.rfind(':');
  if (colon == std::string_view::npos)
    throw parse_error("affine element '" + std::string(s) +
                      "' needs a ':mode' suffix");
  return AffineElement{parse_element(s.substr(0, colon), rank, restriction),
                       detail::parse_int(s.substr(colon + 1), "mode")};
}

/// Parses "111*22*3"; the empty string is the empty word.
inline TensorWord parse_word(std::string_view text, int rank,
                             int restriction = 0) {
  TensorWord w(rank, restriction);
  const auto s = detail::trim(text);
  if (s.empty()) return w;
  for (auto part : detail::split(s, '*'))
    w.push_back(parse_element(part, rank, restriction));
  return w;
}

inline AffineTensorWord parse_affine_word(std::string_view text, int rank,
                                          int restriction = 0) {
  AffineTensorWord w(rank, restriction);
  const auto s = detail::trim(text);
  if (s.empty()) return w;
  for (auto part : detail::split(s, '*'))
    w.push_back(parse_affine_element(part, rank, restriction));
  return w;
}

}  // namespace kkr
