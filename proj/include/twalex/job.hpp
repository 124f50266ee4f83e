#pragma once

// Job files: a presentation, a number field with its embedding, a
// representation and an optional reference volume in one line-oriented file.
//
//   gens: a b
//   rel: aBAba = baBAb
//   field: 1 1 1                 # minimal polynomial, constant first
//   embed: -0.5 0.8660254        # approximate root selecting the embedding
//   rep a: [[[1],[1]],[[0],[1]]]
//   rep b: [[[1],[0]],[[0,-1],[1]]]
//   reference: 2.02988

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twalex/error.hpp"
#include "twalex/group.hpp"
#include "twalex/number_field.hpp"
#include "twalex/rep.hpp"

namespace twalex {

struct Job {
  Presentation presentation;
  FieldPtr field;
  RepSL2 rep;
  std::optional<std::string> reference;
};

namespace detail {

/// Parses "[[v,v],[v,v]]" where each v is a bracketed coefficient vector.
inline Matrix2 parse_matrix2(std::string_view text, const FieldPtr& field, int lineno, std::string_view line) {
  std::string_view s = text;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what, lineno, column_of(line, text) + static_cast<int>(pos));
  };
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto entry = [&]() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= s.size() || s[pos] != '[') throw fail("expected '['");
    auto close = s.find(']', pos);
    if (close == std::string_view::npos) throw fail("unterminated coefficient vector");
    pos = close + 1;
    try {
      return parse_nf_element(s.substr(start, pos - start), field);
    } catch (const std::invalid_argument& e) {
      pos = start;
      throw fail(e.what());
    }
  };
  std::vector<NFElement> v;
  expect('[');
  for (int r = 0; r < 2; ++r) {
    if (r) expect(',');
    expect('[');
    v.push_back(entry());
    expect(',');
    v.push_back(entry());
    expect(']');
  }
  expect(']');
  skip_ws();
  if (pos != s.size()) throw fail("trailing characters after matrix");
  return Matrix2{{v[0], v[1]}, {v[2], v[3]}};
}

}  // namespace detail

/// Checks det = 1 and every relation; throws with stage "relation check".
inline void validate_job(const Job& job) {
  for (int g : non_unimodular_generators(job.rep))
    throw Error("relation check", std::string("image of generator '") + job.presentation.generators[static_cast<std::size_t>(g)] +
                                      "' does not have determinant 1");
  for (const auto& d : check_relations(job.rep, job.presentation))
    throw Error("relation check", "relation " + std::to_string(d.relation + 1) + " (" +
                                      to_string(job.presentation.relations[static_cast<std::size_t>(d.relation)].lhs,
                                                job.presentation.generators) +
                                      " = " +
                                      to_string(job.presentation.relations[static_cast<std::size_t>(d.relation)].rhs,
                                                job.presentation.generators) +
                                      ") does not hold under the representation");
}

/// Parses a job file. With `validate`, representation checks run at load.
inline Job parse_job(std::string_view text, bool validate = true) {
  using detail::column_of;
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

  // Presentation keys go to the presentation parser with line numbers kept.
  std::string pres_text;
  std::optional<std::pair<int, std::string_view>> field_line, embed_line;
  std::vector<std::pair<int, std::string_view>> rep_lines;
  Job job;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    std::string_view body = detail::strip_comment(line);
    auto kv = detail::split_key(body);
    bool forward = false;
    if (kv) {
      auto [key, rest] = *kv;
      if (key == "gens" || key == "rel" || key == "alpha") {
        forward = true;
      } else if (key == "field") {
        if (field_line) throw ParseError("duplicate 'field' line", lineno, column_of(line, key));
        field_line.emplace(lineno, rest);
      } else if (key == "embed") {
        if (embed_line) throw ParseError("duplicate 'embed' line", lineno, column_of(line, key));
        embed_line.emplace(lineno, rest);
      } else if (key.substr(0, 3) == "rep") {
        rep_lines.emplace_back(lineno, body);
      } else if (key == "reference") {
        auto toks = detail::tokens(rest);
        if (toks.size() != 1) throw ParseError("expected one decimal number", lineno, column_of(line, rest));
        try {
          BigFloat(toks[0], kMinPrecision);
        } catch (const std::invalid_argument&) {
          throw ParseError("invalid decimal number", lineno, column_of(line, toks[0]));
        }
        job.reference = std::string(toks[0]);
      } else {
        forward = true;  // let the presentation parser report unknown keys
      }
    } else {
      forward = true;
    }
    pres_text += forward ? std::string(line) : std::string();
    pres_text += '\n';
  }
  job.presentation = parse_presentation(pres_text);

  std::vector<mpz_class> minpoly{0, 1};  // default: Q itself, generator x = 0
  if (field_line) {
    auto [lineno, rest] = *field_line;
    std::string_view line = lines[static_cast<std::size_t>(lineno - 1)];
    minpoly.clear();
    for (std::string_view tok : detail::tokens(rest)) {
      try {
        mpq_class q = parse_rational(tok);
        if (q.get_den() != 1) throw std::invalid_argument("not an integer");
        minpoly.push_back(q.get_num());
      } catch (const std::invalid_argument&) {
        throw ParseError("minimal polynomial coefficients must be integers", lineno, column_of(line, tok));
      }
    }
  }
  std::optional<std::pair<std::string, std::string>> hint;
  if (embed_line) {
    auto [lineno, rest] = *embed_line;
    std::string_view line = lines[static_cast<std::size_t>(lineno - 1)];
    auto toks = detail::tokens(rest);
    if (toks.size() != 2) throw ParseError("expected '<re> <im>'", lineno, column_of(line, rest));
    for (std::string_view tok : toks) {
      try {
        BigFloat(tok, kMinPrecision);
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid decimal number", lineno, column_of(line, tok));
      }
    }
    hint.emplace(std::string(toks[0]), std::string(toks[1]));
  }
  try {
    job.field = std::make_shared<const NumberField>(std::move(minpoly), std::move(hint));
  } catch (const Error& e) {
    throw Error("parse", std::string("field: ") + e.what());
  }

  const auto& gens = job.presentation.generators;
  std::vector<std::optional<Matrix2>> images(gens.size());
  for (auto [lineno, body] : rep_lines) {
    std::string_view line = lines[static_cast<std::size_t>(lineno - 1)];
    auto [key, rest] = *detail::split_key(body);
    auto toks = detail::tokens(key);
    if (toks.size() != 2 || toks[0] != "rep" || toks[1].size() != 1)
      throw ParseError("expected 'rep <generator>:'", lineno, column_of(line, key));
    auto idx = job.presentation.index_of(toks[1][0]);
    if (!idx) throw ParseError(std::string("undeclared generator '") + toks[1][0] + "'", lineno, column_of(line, toks[1]));
    if (images[static_cast<std::size_t>(*idx)])
      throw ParseError(std::string("duplicate image for '") + toks[1][0] + "'", lineno, column_of(line, toks[1]));
    images[static_cast<std::size_t>(*idx)] = detail::parse_matrix2(detail::trim(rest), job.field, lineno, line);
  }
  std::vector<Matrix2> mats;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!images[g]) throw Error("parse", std::string("missing 'rep ") + gens[g] + ":' line");
    mats.push_back(*images[g]);
  }
  try {
    job.rep = RepSL2(std::move(mats));
  } catch (const Error& e) {
    throw Error("parse", e.what());
  }
  if (validate) validate_job(job);
  return job;
}

inline Job load_job(const std::string& path, bool validate = true) {
  std::ifstream in(path);
  if (!in) throw Error("parse", "cannot open job file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str(), validate);
}

}  // namespace twalex
