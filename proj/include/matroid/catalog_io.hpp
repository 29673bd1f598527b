// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_CATALOG_IO_HPP_
#define MATROID_CATALOG_IO_HPP_

// Catalog file:
//   catalog n=<n> count=<k>
//   <matroid literal>        one per line, k lines
// Lines starting with '#' are ignored. A file with no header line is read as
// a bare list of literals.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "matroid/enumeration.hpp"
#include "matroid/error.hpp"
#include "matroid/iso.hpp"
#include "matroid/literal.hpp"

namespace matroid {

inline std::string format_catalog(const Catalog& catalog) {
  std::string out = "catalog n=" + std::to_string(catalog.n) +
                    " count=" + std::to_string(catalog.count()) + "\n";
  for (const Matroid& m : catalog.classes) out += to_literal(m) + "\n";
  return out;
}

namespace detail {

inline Error line_error(Errc code, std::size_t line, const std::string& what) {
  return Error(code, "line " + std::to_string(line) + ": " + what);
}

inline bool parse_header(const std::string& text, std::size_t& n, std::size_t& count) {
  std::istringstream in(text);
  std::string word, n_field, count_field, extra;
  if (!(in >> word) || word != "catalog") return false;
  if (!(in >> n_field >> count_field) || (in >> extra)) {
    throw Error(Errc::kParse, "malformed catalog header");
  }
  if (n_field.rfind("n=", 0) != 0 || count_field.rfind("count=", 0) != 0) {
    throw Error(Errc::kParse, "malformed catalog header");
  }
  n = parse_index(std::string_view(n_field).substr(2), text);
  count = parse_index(std::string_view(count_field).substr(6), text);
  return true;
}

}  // namespace detail

// Re-validates every entry, stores it in canonical form, and rejects two
// entries of the same isomorphism class.
inline Catalog parse_catalog(std::istream& in) {
  Catalog catalog;
  bool have_n = false;
  bool have_header = false;
  std::size_t declared_count = 0;
  std::size_t header_line = 0;
  std::map<IsoKey, std::size_t> first_seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text.front() == '#') continue;
    if (!have_header && catalog.classes.empty() && text.rfind("catalog", 0) == 0) {
      try {
        detail::parse_header(text, catalog.n, declared_count);
      } catch (const Error& e) {
        throw detail::line_error(Errc::kParse, line, e.what());
      }
      have_header = have_n = true;
      header_line = line;
      continue;
    }
    Matroid m = [&] {
      try {
        return parse_matroid(text);
      } catch (const Error& e) {
        throw detail::line_error(e.code(), line, e.what());
      }
    }();
    if (!have_n) {
      catalog.n = m.size();
      have_n = true;
    }
    if (m.size() != catalog.n) {
      throw detail::line_error(Errc::kInvariant, line,
                               "matroid of size " + std::to_string(m.size()) +
                                   " in a catalog of size " + std::to_string(catalog.n));
    }
    IsoKey key = canonical_key(m);
    auto [it, inserted] = first_seen.emplace(key, line);
    if (!inserted) {
      throw detail::line_error(Errc::kInvariant, line,
                               "isomorphic to the entry on line " + std::to_string(it->second));
    }
    catalog.classes.push_back(Matroid::from_bases(catalog.n, std::move(key.canonical_bases)));
  }
  if (have_header && declared_count != catalog.count()) {
    throw detail::line_error(Errc::kInvariant, header_line,
                             "header declares " + std::to_string(declared_count) +
                                 " entries, found " + std::to_string(catalog.count()));
  }
  std::sort(catalog.classes.begin(), catalog.classes.end(), detail::catalog_order);
  return catalog;
}

inline Catalog parse_catalog(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

inline void save_catalog(const Catalog& catalog, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvariant, "cannot open " + path + " for writing");
  out << format_catalog(catalog);
  if (!out) throw Error(Errc::kInvariant, "failed writing " + path);
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  return parse_catalog(in);
}

}  // namespace matroid

#endif  // MATROID_CATALOG_IO_HPP_
