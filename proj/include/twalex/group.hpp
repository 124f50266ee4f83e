#pragma once

// Words in a free group, finitely presented groups and Fox free differential
// calculus over the integral group ring.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twalex/error.hpp"

namespace twalex {

struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduce a raw letter sequence by stack cancellation.
inline std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters) : letters_(free_reduce(letters)) {}
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(int g, int sign = 1) { return Word({Letter{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    // Only the junction can cancel since both factors are reduced.
    std::size_t k = 0;
    const auto& a = u.letters_;
    const auto& b = v.letters_;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[k].inverse()) ++k;
    Word w;
    w.letters_.reserve(a.size() + b.size() - 2 * k);
    w.letters_.insert(w.letters_.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
    w.letters_.insert(w.letters_.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
    return w;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Lowercase letter for a positive letter, uppercase for its inverse.
inline std::string to_string(const Word& w, std::span<const char> names) {
  std::string s;
  for (const Letter& l : w.letters()) {
    char c = names[static_cast<std::size_t>(l.generator)];
    s.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return s.empty() ? "1" : s;
}

/// Signed letter count weighted by the abelianization map.
inline long abelianize(const Word& w, std::span<const int> alpha) {
  long e = 0;
  for (const Letter& l : w.letters()) e += l.sign * alpha[static_cast<std::size_t>(l.generator)];
  return e;
}

/// Finite formal sum of words with integer coefficients. Zero terms are never stored.
class GroupRingElement {
 public:
  using Terms = std::map<Word, std::int64_t>;

  GroupRingElement() = default;
  GroupRingElement(const Word& w, std::int64_t c = 1) { add_term(w, c); }  // NOLINT
  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a) { return GroupRingElement() - a; }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
    return r;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

inline std::string to_string(const GroupRingElement& e, std::span<const char> names) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += to_string(w, names);
  }
  return s;
}

/// Fox derivative d(w)/d(x_g): d(x)/d(x) = 1, d(x^-1)/d(x) = -x^-1,
/// d(uv) = d(u) + u d(v).
inline GroupRingElement fox_derivative(const Word& w, int g) {
  GroupRingElement d;
  std::vector<Letter> prefix;
  prefix.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.generator == g && l.sign > 0) d.add_term(Word(prefix), 1);
    prefix.push_back(l);
    if (l.generator == g && l.sign < 0) d.add_term(Word(prefix), -1);
  }
  return d;
}

struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Relator convention r = lhs * rhs^-1.
inline Word relator(const Relation& rel) { return rel.lhs * rel.rhs.inverse(); }

/// A deficiency-one presentation with an abelianization onto <t>.
struct Presentation {
  std::vector<char> generators;
  std::vector<Relation> relations;
  std::vector<int> alpha;

  int generator_count() const { return static_cast<int>(generators.size()); }

  std::optional<int> index_of(char name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) return std::nullopt;
    return static_cast<int>(it - generators.begin());
  }

  std::vector<Word> relators() const {
    std::vector<Word> out;
    out.reserve(relations.size());
    for (const auto& r : relations) out.push_back(relator(r));
    return out;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Column (1-based) of `part` within `line`; both views must share storage.
inline int column_of(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

/// Splits a line into whitespace-separated tokens that keep pointing into the line.
inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Splits "key: rest" and returns the key (possibly with spaces, e.g. "rep a").
inline std::optional<std::pair<std::string_view, std::string_view>> split_key(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{trim(line.substr(0, colon)), line.substr(colon + 1)};
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace detail

/// Parses the presentation grammar:
///   gens: a b ...
///   rel: <word> = <word>   ("1" is the identity word)
///   alpha: a=<int> ...     (optional, default 1)
/// Lowercase letters are generators, uppercase their inverses; '#' starts a comment.
inline Presentation parse_presentation(std::string_view text) {
  using detail::column_of;
  Presentation p;
  bool have_gens = false;
  bool have_alpha = false;
  std::vector<std::pair<int, std::string_view>> alpha_lines;
  std::vector<std::pair<int, std::string_view>> rel_lines;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur.push_back(c);
      }
    }
    lines.push_back(cur);
  }

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int lineno = static_cast<int>(ln) + 1;
    std::string_view line = lines[ln];
    std::string_view body = detail::strip_comment(line);
    if (detail::trim(body).empty()) continue;
    auto kv = detail::split_key(body);
    if (!kv) throw ParseError("expected 'key: value'", lineno, column_of(line, detail::trim(body)));
    auto [key, rest] = *kv;
    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' line", lineno, column_of(line, key));
      have_gens = true;
      for (std::string_view tok : detail::tokens(rest)) {
        if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])) ||
            static_cast<unsigned char>(tok[0]) > 127)
          throw ParseError("generator names must be single lowercase letters", lineno,
                           column_of(line, tok));
        if (p.index_of(tok[0]))
          throw ParseError(std::string("duplicate generator '") + tok[0] + "'", lineno,
                           column_of(line, tok));
        p.generators.push_back(tok[0]);
      }
      if (p.generators.empty())
        throw ParseError("'gens' needs at least one generator", lineno, column_of(line, rest));
    } else if (key == "rel") {
      rel_lines.emplace_back(lineno, rest);
    } else if (key == "alpha") {
      if (have_alpha) throw ParseError("duplicate 'alpha' line", lineno, column_of(line, key));
      have_alpha = true;
      alpha_lines.emplace_back(lineno, rest);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", lineno, column_of(line, key));
    }
  }
  if (!have_gens) throw ParseError("missing 'gens' line", 1, 1);

  p.alpha.assign(p.generators.size(), 1);
  for (auto [lineno, rest] : alpha_lines) {
    std::string_view line = lines[static_cast<std::size_t>(lineno - 1)];
    for (std::string_view tok : detail::tokens(rest)) {
      auto eq = tok.find('=');
      auto idx = tok.size() >= 1 ? p.index_of(tok[0]) : std::nullopt;
      if (eq != 1 || !idx)
        throw ParseError("expected '<generator>=<int>'", lineno, column_of(line, tok));
      std::string_view num = tok.substr(2);
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(std::string(num), &used);
        if (used != num.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("invalid integer", lineno, column_of(line, tok) + 2);
      }
      p.alpha[static_cast<std::size_t>(*idx)] = value;
    }
  }

  auto parse_word = [&](std::string_view line, std::string_view w, int lineno) {
    if (w.empty()) throw ParseError("empty word", lineno, column_of(line, w));
    if (w == "1") return Word{};
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < w.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(w[i]);
      int col = column_of(line, w) + static_cast<int>(i);
      if (!std::isalpha(c) || c > 127) throw ParseError("unexpected character", lineno, col);
      auto idx = p.index_of(static_cast<char>(std::tolower(c)));
      if (!idx) throw ParseError(std::string("undeclared generator '") + w[i] + "'", lineno, col);
      letters.push_back({*idx, std::islower(c) ? 1 : -1});
    }
    return Word(letters);
  };

  for (auto [lineno, rest] : rel_lines) {
    std::string_view line = lines[static_cast<std::size_t>(lineno - 1)];
    auto eq = rest.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("relation needs '='", lineno, column_of(line, detail::trim(rest)));
    if (rest.find('=', eq + 1) != std::string_view::npos)
      throw ParseError("relation has more than one '='", lineno,
                       column_of(line, rest.substr(rest.find('=', eq + 1))));
    std::string_view lhs = detail::trim(rest.substr(0, eq));
    std::string_view rhs = detail::trim(rest.substr(eq + 1));
    if (lhs.empty()) throw ParseError("empty word", lineno, column_of(line, rest.substr(eq)));
    if (rhs.empty()) throw ParseError("empty word", lineno, column_of(line, rest.substr(eq + 1)));
    Relation rel{parse_word(line, lhs, lineno), parse_word(line, rhs, lineno)};
    if (abelianize(rel.lhs, p.alpha) != abelianize(rel.rhs, p.alpha))
      throw Error("parse", "line " + std::to_string(lineno) +
                               ": relation is not balanced under the abelianization");
    p.relations.push_back(std::move(rel));
  }

  if (p.relations.size() + 1 != p.generators.size())
    throw Error("parse", "presentation must have deficiency one: " +
                             std::to_string(p.generators.size()) + " generators, " +
                             std::to_string(p.relations.size()) + " relations");
  return p;
}

/// Canonical text form; parse_presentation(print_presentation(p)) == p.
inline std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (char g : p.generators) os << ' ' << g;
  os << '\n';
  for (const auto& r : p.relations)
    os << "rel: " << to_string(r.lhs, p.generators) << " = " << to_string(r.rhs, p.generators)
       << '\n';
  os << "alpha:";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << ' ' << p.generators[i] << '=' << p.alpha[i];
  os << '\n';
  return os.str();
}

}  // namespace twalex
